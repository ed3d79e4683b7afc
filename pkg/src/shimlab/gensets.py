"""Built-in isometry generator sets and the packaged default config data.

The ball-case set lives in SU(diag(1,1,-1), Z[i]) and mixes torsion
(coordinate rotations and phases), hyperbolic elements in two coordinate
planes, and parabolic elements fixing the rational isotropic line through
(1, 0, 1): the flag-basis construction gives, for c in Z[i] with even norm
and even t,

    gamma(e1) = e1 - conj(c) e2 + (e/2)(e1+e3),   e = -|c|^2 + i t,
    gamma(e2) = e2 + c (e1+e3),
    gamma(e3) = e3 + conj(c) e2 - (e/2)(e1+e3),

which is integral and unipotent.  Every matrix returned here is verified
exactly against the form on import of the JSON data or on construction.
"""

from __future__ import annotations

import json
from importlib import resources

from .gaussian import QuadInt
from .hermitian import HermitianForm, is_in_SU
from .realquad import RealQuad


def _qi(a, b=0):
    return QuadInt(a, b)


def _mat(rows):
    out = []
    for row in rows:
        orow = []
        for x in row:
            if isinstance(x, QuadInt):
                orow.append(x)
            elif isinstance(x, tuple):
                orow.append(QuadInt(*x))
            else:
                orow.append(QuadInt(x, 0))
        out.append(tuple(orow))
    return tuple(out)


def heisenberg_element(c: QuadInt, t: int):
    """Integral unipotent isometry fixing the isotropic vector (1,0,1).

    Needs norm(c) and t both even; raises ValueError otherwise.
    """
    if (c.norm() % 2) or (t % 2):
        raise ValueError("need norm(c) and t even for integrality")
    e_re = -c.norm() // 2
    e_im = t // 2
    cc = c.conj()
    half_e = QuadInt(e_re, e_im)
    one = QuadInt(1, 0)
    col1 = (one + half_e, -cc, half_e)
    col2 = (c, one, c)
    col3 = (-half_e, cc, one - half_e)
    return tuple(
        tuple(col[i] for col in (col1, col2, col3)) for i in range(3)
    )


def builtin_case_two_generators() -> list:
    """Default generating set for folding in the ball case (verified)."""
    i = (0, 1)
    gens = [
        # quarter rotation in the (e1, e2) plane
        _mat([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]),
        # phase swap of e1, e2
        _mat([[0, i, 0], [i, 0, 0], [0, 0, 1]]),
        # diagonal phases, det 1
        _mat([[i, 0, 0], [0, i, 0], [0, 0, -1]]),
        # hyperbolic on the (e2, e3) plane, fixes e1
        _mat([[1, 0, 0], [0, (2, 1), 2], [0, 2, (2, -1)]]),
        # hyperbolic on the (e1, e3) plane, fixes e2
        _mat([[(2, 1), 0, 2], [0, 1, 0], [2, 0, (2, -1)]]),
        # parabolic: c = 0, t = 2
        heisenberg_element(QuadInt(0, 0), 2),
        # parabolic: c = 1 + i, t = 0
        heisenberg_element(QuadInt(1, 1), 0),
        # parabolic: c = 1 - i, t = 2
        heisenberg_element(QuadInt(1, -1), 2),
    ]
    form = HermitianForm.standard()
    for g in gens:
        if not is_in_SU(form, g):
            raise AssertionError("builtin generator failed the exact check")
    return gens


def builtin_case_one_generators(disc: int = 5) -> list:
    """Standard generators of SL2 over the maximal order (disc = 5)."""
    from fractions import Fraction

    def rq2(x, y):
        # coordinates in the (1, w) basis, w = (1+sqrt(5))/2
        if disc % 4 == 1:
            return RealQuad(Fraction(x) + Fraction(y, 2), Fraction(y, 2), disc)
        return RealQuad(Fraction(x), Fraction(y), disc)

    one, zero = rq2(1, 0), rq2(0, 0)
    w = rq2(0, 1)
    return [
        ((one, one), (zero, one)),
        ((one, w), (zero, one)),
        ((zero, -one), (one, zero)),
    ]


def default_gens_payload() -> dict:
    gens2 = builtin_case_two_generators()
    gens1 = builtin_case_one_generators(5)
    return {
        "schema_version": 1,
        "case_two": {
            "form": [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
            "generators": [
                [[[c.a, c.b] for c in row] for row in g] for g in gens2
            ],
        },
        "case_one": {
            "disc": 5,
            "generators": [
                [[[str(x.a), str(x.b)] for x in row] for row in g]
                for g in gens1
            ],
        },
    }


def load_generators(path=None):
    """Load (case_two_gens, case_one_gens, disc) from a JSON file or the
    packaged default."""
    from fractions import Fraction

    if path is None:
        text = resources.files("shimlab.data").joinpath(
            "default_gens.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    payload = json.loads(text)
    if payload.get("schema_version") != 1:
        raise ValueError("unsupported generator file schema")
    gens2 = [
        tuple(tuple(QuadInt(a, b) for a, b in row) for row in g)
        for g in payload["case_two"]["generators"]
    ]
    form = HermitianForm.standard()
    for g in gens2:
        if not is_in_SU(form, g):
            raise ValueError("generator file contains a non-isometry")
    disc = payload["case_one"]["disc"]
    gens1 = [
        tuple(tuple(RealQuad(Fraction(x), Fraction(y), disc) for x, y in row)
              for row in g)
        for g in payload["case_one"]["generators"]
    ]
    return gens2, gens1, disc


def write_default_gens(path):
    with open(path, "w") as fh:
        json.dump(default_gens_payload(), fh, indent=1, sort_keys=True)
        fh.write("\n")
