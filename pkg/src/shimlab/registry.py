"""Enumeration of totally geodesic curves by rational positive lines.

A primitive Gaussian-integer vector v with h(v,v) > 0 pins down a geodesic
disk (the negative lines inside v-perp) whose image in the quotient surface
is an algebraic curve exactly because the line is rational.  This module
enumerates such vectors up to unit scaling and up to the isometry-group
words a configured budget can reach, finds exact stabilizer elements, and
recovers the fixed line back from a group element.  The bidisk case is
covered by diagonal-type curves over a real quadratic field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import _gaussfast as gf
from .errors import (
    DegenerateElementError,
    NotPositiveError,
    NotPositiveLineError,
    NotTotallyPositiveError,
    ZeroVectorError,
)
from .gaussian import (
    NormResidueClass,
    QuadInt,
    QuadRat,
    canonical_vector_rep,
    is_primitive,
    norm_residue_class,
)
from .hermitian import (
    HermitianForm,
    eval_h,
    identity_matrix,
    is_in_SU,
    mat_from_rows,
    mat_inverse3,
    mat_mul,
    mat_vec,
    orthogonal_completion,
    perp_lattice,
    vector_sign,
)
from .realquad import RealQuad, mat2_det, mat2_galois, mat2_inverse, mat2_mul, order_elements

SCHEMA_VERSION = 1

IntVector = tuple  # 3-tuple of QuadInt
IntMatrix = tuple  # 3x3 rows of QuadInt


def vec_key(v: IntVector):
    return tuple((c.a, c.b) for c in v)


def vector_height(v: IntVector) -> int:
    return max(max(abs(c.a), abs(c.b)) for c in v)


def imat_key(m) -> tuple:
    return tuple(tuple((c.a, c.b) for c in row) for row in m)


def imat_mul(x: IntMatrix, y: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(sum((x[i][t] * y[t][j] for t in range(3)), QuadInt(0, 0))
              for j in range(3))
        for i in range(3)
    )


def imat_vec(m: IntMatrix, v: IntVector) -> IntVector:
    return tuple(
        sum((m[i][j] * v[j] for j in range(3)), QuadInt(0, 0)) for i in range(3)
    )


def imat_identity() -> IntMatrix:
    one, zero = QuadInt(1, 0), QuadInt(0, 0)
    return tuple(tuple(one if i == j else zero for j in range(3)) for i in range(3))


def su_inverse(g: IntMatrix) -> IntMatrix:
    """Inverse of a determinant-one integral matrix (the adjugate)."""
    idx = ((1, 2), (0, 2), (0, 1))
    out = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r, s = idx[i]
            p, q = idx[j]
            minor = g[r][p] * g[s][q] - g[r][q] * g[s][p]
            out[j][i] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(row) for row in out)


def word_ball(gens: list[IntMatrix], word_bound: int) -> list[IntMatrix]:
    """All distinct products of <= word_bound generators and inverses.

    Excludes the identity (a zero-length word moves nothing).  Deterministic
    order: breadth-first over the given generator order.
    """
    if word_bound <= 0 or not gens:
        return []
    alphabet = []
    seen_alpha = set()
    for g in gens:
        for m in (g, su_inverse(g)):
            k = imat_key(m)
            if k not in seen_alpha:
                seen_alpha.add(k)
                alphabet.append(gf.from_quadint_mat(m))
    identity = gf.from_quadint_mat(imat_identity())
    ball = []
    seen = {identity}
    frontier = [identity]
    for _ in range(word_bound):
        nxt = []
        for w in frontier:
            for a in alphabet:
                m = gf.matmul(a, w)
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
                    ball.append(m)
        frontier = nxt
    return [gf.to_quadint_mat(m) for m in ball]


def _raw_gram(form: HermitianForm):
    """(den * gram as raw int pairs, den)."""
    from math import gcd as _gcd

    den = 1
    for row in form.gram:
        for c in row:
            den = den * c.den // _gcd(den, c.den)
    num = tuple(
        tuple((c.num.a * (den // c.den), c.num.b * (den // c.den)) for c in row)
        for row in form.gram
    )
    return num, den


def enumerate_positive_vectors(form: HermitianForm, height: int) -> list[IntVector]:
    """All primitive h-positive vectors of coordinate height <= height,
    one canonical representative per unit-scaling class, in lexicographic
    order of the integer coordinate tuple."""
    if height < 1:
        raise ValueError("height must be >= 1")
    gram_num, _ = _raw_gram(form)
    rng = range(-height, height + 1)
    out = []
    for a1 in rng:
        for b1 in rng:
            for a2 in rng:
                for b2 in rng:
                    for a3 in rng:
                        for b3 in rng:
                            if a1 == b1 == a2 == b2 == a3 == b3 == 0:
                                continue
                            v = ((a1, b1), (a2, b2), (a3, b3))
                            if gf.canon(v) != v:
                                continue
                            if gf.herm_value_num(gram_num, 1, v) <= 0:
                                continue
                            if not gf.vec_primitive(v):
                                continue
                            out.append(gf.to_quadint_vec(v))
    return out


def reduce_mod_gamma(vectors: list[IntVector], gens: list[IntMatrix],
                     word_bound: int) -> list[IntVector]:
    """Greedy orbit dedup: merge two enumerated vectors when some word of
    length <= word_bound maps one to a unit multiple of the other.

    Only a budget-relative quotient; invariants (h-value, residue class) are
    preserved by every exact isometry and unit, so merges can never cross
    distinct invariant pairs.  Representatives are the lexicographically
    smallest member of each merged class, in stable order.
    """
    if word_bound <= 0 or not gens or not vectors:
        return list(vectors)
    ball = [gf.from_quadint_mat(m) for m in word_ball(gens, word_bound)]
    raw = [gf.from_quadint_vec(v) for v in vectors]
    index = {gf.canon(v): i for i, v in enumerate(raw)}
    parent = list(range(len(vectors)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for i, v in enumerate(raw):
        for m in ball:
            j = index.get(gf.canon(gf.matvec(m, v)))
            if j is not None and j != i:
                union(i, j)
    classes: dict[int, list[int]] = {}
    for i in range(len(vectors)):
        classes.setdefault(find(i), []).append(i)
    reps = []
    for root in sorted(classes):
        members = classes[root]
        best = min(members,
                   key=lambda j: (vector_height(vectors[j]), vec_key(vectors[j])))
        reps.append(vectors[best])
    return reps


def stabilizer_generators(form: HermitianForm, v: IntVector, entry_bound: int,
                          pair_cap: int = 2_000_000) -> tuple[list[IntMatrix], bool]:
    """Exact isometries gamma with gamma(v) = v, via the induced 2x2 unitary.

    Any such gamma preserves the saturated sublattice v-perp in Z[i]^3, so it
    is determined by a 2x2 matrix A over Z[i] preserving the restricted Gram
    form with det A = 1.  We enumerate candidate columns of A with entries of
    height <= entry_bound, glue gamma = T diag(1, A) T^-1 in the adapted
    basis T = [v | w1 | w2], and keep exactly those gamma that are integral.
    Returns (generators, complete); complete is False when the pair budget
    was exhausted (partial list).
    """
    if vector_sign(form, v) <= 0:
        raise NotPositiveError("stabilizer search needs an h-positive vector")
    if not is_primitive(v):
        raise ValueError("stabilizer search needs a primitive vector")
    w1, w2 = perp_lattice(form, v)

    # scale the restricted Gram form to raw integer pairs
    from math import gcd as _gcd

    g11 = eval_h(form, w1, w1)
    g12 = eval_h(form, w1, w2)
    g22 = eval_h(form, w2, w2)
    den = 1
    for x in (g11, g12, g22):
        den = den * x.den // _gcd(den, x.den)
    s11 = (g11.num.a * (den // g11.den), g11.num.b * (den // g11.den))
    s12 = (g12.num.a * (den // g12.den), g12.num.b * (den // g12.den))
    s22 = (g22.num.a * (den // g22.den), g22.num.b * (den // g22.den))
    s21 = gf.cconj(s12)

    def pairing_raw(c, d):
        """den * h(c1*w1 + c2*w2, d1*w1 + d2*w2) on raw pairs."""
        x, y = gf.cconj(c[0]), gf.cconj(c[1])
        acc = gf.cmul(gf.cmul(x, s11), d[0])
        acc = gf.cadd(acc, gf.cmul(gf.cmul(x, s12), d[1]))
        acc = gf.cadd(acc, gf.cmul(gf.cmul(y, s21), d[0]))
        return gf.cadd(acc, gf.cmul(gf.cmul(y, s22), d[1]))

    rng = range(-entry_bound, entry_bound + 1)
    col_values = [((a1, b1), (a2, b2))
                  for a1 in rng for b1 in rng for a2 in rng for b2 in rng]
    cols1 = [c for c in col_values if pairing_raw(c, c) == s11]
    cols2 = [c for c in col_values if pairing_raw(c, c) == s22]

    t_mat = mat_from_rows([[v[i], w1[i], w2[i]] for i in range(3)])
    t_inv = mat_inverse3(t_mat)

    found: dict[tuple, IntMatrix] = {}
    complete = True
    pairs = 0
    for c1 in cols1:
        for c2 in cols2:
            pairs += 1
            if pairs > pair_cap:
                complete = False
                break
            if pairing_raw(c1, c2) != s12:
                continue
            if gf.csub(gf.cmul(c1[0], c2[1]), gf.cmul(c1[1], c2[0])) != (1, 0):
                continue
            block = mat_from_rows([
                [1, 0, 0],
                [0, QuadInt(*c1[0]), QuadInt(*c2[0])],
                [0, QuadInt(*c1[1]), QuadInt(*c2[1])],
            ])
            gamma_rat = mat_mul(mat_mul(t_mat, block), t_inv)
            if not all(gamma_rat[i][j].is_gaussian_integer()
                       for i in range(3) for j in range(3)):
                continue
            gamma = tuple(tuple(gamma_rat[i][j].as_quadint() for j in range(3))
                          for i in range(3))
            assert imat_vec(gamma, v) == tuple(v)
            assert is_in_SU(form, gamma)
            found[imat_key(gamma)] = gamma
        if not complete:
            break
    gens = [found[k] for k in sorted(found)]
    return gens, complete


def perp_block(form: HermitianForm, v: IntVector, gamma: IntMatrix):
    """The induced 2x2 action of a v-stabilizing gamma on the perp lattice."""
    w1, w2 = perp_lattice(form, v)
    t_mat = mat_from_rows([[v[i], w1[i], w2[i]] for i in range(3)])
    conj = mat_mul(mat_mul(mat_inverse3(t_mat), mat_from_rows(gamma)), t_mat)
    assert conj[0][1].is_zero() and conj[0][2].is_zero()
    return ((conj[1][1], conj[1][2]), (conj[2][1], conj[2][2]))


def block_trace(block) -> QuadRat:
    return block[0][0] + block[1][1]


def is_hyperbolic_on_perp(form: HermitianForm, v: IntVector, gamma: IntMatrix) -> bool:
    """True iff gamma acts on the perp plane with an eigenvalue off the unit
    circle: for a form-preserving det-1 block the trace is a rational
    integer, and |trace| > 2 decides it exactly."""
    tr = block_trace(perp_block(form, v, gamma))
    if not tr.is_real():
        return False
    t = tr.as_fraction()
    return abs(t) > 2


def rational_line_from_element(form: HermitianForm, gamma) -> IntVector:
    """The primitive integral generator of the fixed line of gamma.

    Exact kernel of (gamma - 1) over Q(i).  Raises DegenerateElementError
    unless the fixed space is exactly one line, NotPositiveLineError if the
    line is not h-positive.
    """
    g = mat_from_rows(gamma)
    m = [[g[i][j] - (QuadRat.from_int(1) if i == j else QuadRat.from_int(0))
          for j in range(3)] for i in range(3)]
    kernel = _kernel_3x3(m)
    if len(kernel) != 1:
        raise DegenerateElementError(
            f"fixed space has dimension {len(kernel)}, need 1")
    gen = _rational_vec_to_primitive(kernel[0])
    gen = canonical_vector_rep(gen)
    if vector_sign(form, gen) <= 0:
        raise NotPositiveLineError(
            f"fixed line has h-value {form.value(gen)} <= 0")
    return gen


def _kernel_3x3(m) -> list[tuple]:
    """Basis of the kernel of a 3x3 matrix over Q(i), exact row reduction."""
    rows = [list(r) for r in m]
    pivots = []  # (row, col)
    row = 0
    for col in range(3):
        pivot = None
        for r in range(row, 3):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        pv = rows[row][col]
        rows[row] = [x / pv for x in rows[row]]
        for r in range(3):
            if r != row and not rows[r][col].is_zero():
                c = rows[r][col]
                rows[r] = [rows[r][t] - c * rows[row][t] for t in range(3)]
        pivots.append((row, col))
        row += 1
        if row == 3:
            break
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(3) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [QuadRat.from_int(0)] * 3
        vec[fc] = QuadRat.from_int(1)
        for r, c in pivots:
            vec[c] = -rows[r][fc]
        basis.append(tuple(vec))
    return basis


def _rational_vec_to_primitive(vec) -> IntVector:
    from math import gcd as _gcd

    den = 1
    for c in vec:
        den = den * c.den // _gcd(den, c.den)
    ints = [c.num * (den // c.den) for c in vec]
    from .gaussian import ZERO, gauss_gcd

    g = ZERO
    for c in ints:
        g = gauss_gcd(g, c)
    if g.is_zero():
        raise ZeroVectorError("zero kernel vector")
    if not g.is_unit():
        ints = [c.exact_div(g) for c in ints]
    return tuple(ints)


# ---------------------------------------------------------------------------
# Curve records and the registry


@dataclass
class CurveRecord:
    """One enumerated curve with its exact arithmetic data.

    Ball case ("two"): defining_vector is the positive Gaussian-integer
    vector; basis is its orthogonal completion (used to rebuild the
    numerical conjugator at any precision).  Bidisk case ("one"):
    matrix_pair holds the exact twisting matrix and disc, stabilizer
    generators are 2x2 matrices over the real quadratic field.
    """

    case: str
    curve_id: str
    height: int
    h_value: Fraction | None = None
    residue_class: NormResidueClass | None = None
    defining_vector: IntVector | None = None
    basis: tuple | None = None
    stabilizer_gens: list = field(default_factory=list)
    stabilizer_complete: bool = True
    mu: tuple | None = None
    disc: int | None = None
    volume_estimate: float | None = None

    def conjugator(self, precision: int = 100):
        from .hermitian import conjugator as _conj

        if self.basis is None:
            return None
        form = HermitianForm.standard() if self._form is None else self._form
        return _conj(form, self.basis, precision)

    _form = None

    def attach_form(self, form: HermitianForm):
        self._form = form
        return self


def curve_id_for_vector(v: IntVector) -> str:
    return "v" + "_".join(f"{c.a},{c.b}" for c in v)


def build_registry(form: HermitianForm, height: int, gens: list[IntMatrix],
                   word_bound: int, entry_bound: int) -> "CurveRegistry":
    """Enumerate, dedup, and dress curves up to the given budgets."""
    vectors = enumerate_positive_vectors(form, height)
    reps = reduce_mod_gamma(vectors, gens, word_bound)
    records = []
    for v in reps:
        hv = form.value(v)
        rec = CurveRecord(
            case="two",
            curve_id=curve_id_for_vector(v),
            height=vector_height(v),
            h_value=hv,
            residue_class=norm_residue_class(hv),
            defining_vector=v,
            basis=orthogonal_completion(form, v),
        )
        stab, complete = stabilizer_generators(form, v, entry_bound)
        rec.stabilizer_gens = stab
        rec.stabilizer_complete = complete
        rec.attach_form(form)
        records.append(rec)
    records.sort(key=lambda r: (r.height, r.h_value, vec_key(r.defining_vector)))
    return CurveRegistry(
        form=form,
        curves=records,
        height_budget=height,
        word_bound=word_bound,
        entry_bound=entry_bound,
    )


@dataclass
class CurveRegistry:
    form: HermitianForm
    curves: list[CurveRecord]
    height_budget: int
    word_bound: int
    entry_bound: int

    @property
    def dedup_policy(self) -> str:
        return (f"unit-canonical+isometry-words<= {self.word_bound}"
                .replace(" ", ""))

    def residue_classes(self) -> list[Fraction]:
        return sorted({r.residue_class.representative for r in self.curves})

    def to_json(self) -> str:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "form": _ser_rat_matrix(self.form.gram),
            "height_budget": self.height_budget,
            "word_bound": self.word_bound,
            "entry_bound": self.entry_bound,
            "dedup_policy": self.dedup_policy,
            "curves": [_ser_record(r) for r in self.curves],
        }
        return json.dumps(payload, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CurveRegistry":
        payload = json.loads(text)
        if payload.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(
                f"unsupported registry schema {payload.get('schema_version')}")
        form = HermitianForm(_de_rat_matrix(payload["form"]))
        curves = [_de_record(c, form) for c in payload["curves"]]
        return cls(
            form=form,
            curves=curves,
            height_budget=payload["height_budget"],
            word_bound=payload["word_bound"],
            entry_bound=payload["entry_bound"],
        )


def _ser_int(c: QuadInt):
    return [c.a, c.b]


def _ser_int_matrix(m):
    return [[_ser_int(c) for c in row] for row in m]


def _ser_rat(x: QuadRat):
    return [x.num.a, x.num.b, x.den]


def _ser_rat_matrix(m):
    return [[_ser_rat(c) for c in row] for row in m]


def _de_rat_matrix(m):
    return tuple(
        tuple(QuadRat.make(QuadInt(c[0], c[1]), c[2]) for c in row) for row in m
    )


def _ser_record(r: CurveRecord) -> dict:
    out = {
        "case": r.case,
        "curve_id": r.curve_id,
        "height": r.height,
        "h_value": str(r.h_value) if r.h_value is not None else None,
        "residue_class": (str(r.residue_class.representative)
                          if r.residue_class else None),
        "stabilizer_complete": r.stabilizer_complete,
        "volume_estimate": r.volume_estimate,
    }
    if r.case == "two":
        out["defining_vector"] = [_ser_int(c) for c in r.defining_vector]
        out["basis"] = [[_ser_int(c) for c in vec] for vec in r.basis]
        out["stabilizer_gens"] = [_ser_int_matrix(g) for g in r.stabilizer_gens]
    else:
        out["disc"] = r.disc
        out["mu"] = [[[str(x.a), str(x.b)] for x in row] for row in r.mu]
        out["stabilizer_gens"] = [
            [[[str(x.a), str(x.b)] for x in row] for row in g]
            for g in r.stabilizer_gens
        ]
    return out


def _de_record(c: dict, form: HermitianForm) -> CurveRecord:
    if c["case"] == "two":
        v = tuple(QuadInt(a, b) for a, b in c["defining_vector"])
        rec = CurveRecord(
            case="two",
            curve_id=c["curve_id"],
            height=c["height"],
            h_value=Fraction(c["h_value"]),
            residue_class=NormResidueClass(Fraction(c["residue_class"])),
            defining_vector=v,
            basis=tuple(tuple(QuadInt(a, b) for a, b in vec) for vec in c["basis"]),
            stabilizer_gens=[
                tuple(tuple(QuadInt(a, b) for a, b in row) for row in g)
                for g in c["stabilizer_gens"]
            ],
            stabilizer_complete=c["stabilizer_complete"],
            volume_estimate=c.get("volume_estimate"),
        )
        rec.attach_form(form)
        return rec
    disc = c["disc"]
    mu = tuple(
        tuple(RealQuad.make(Fraction(x), Fraction(y), disc) for x, y in row)
        for row in c["mu"]
    )
    return CurveRecord(
        case="one",
        curve_id=c["curve_id"],
        height=c["height"],
        h_value=Fraction(c["h_value"]) if c["h_value"] else None,
        residue_class=None,
        mu=mu,
        disc=disc,
        stabilizer_gens=[
            tuple(tuple(RealQuad.make(Fraction(x), Fraction(y), disc) for x, y in row)
                  for row in g)
            for g in c["stabilizer_gens"]
        ],
        stabilizer_complete=c["stabilizer_complete"],
        volume_estimate=c.get("volume_estimate"),
    )


# ---------------------------------------------------------------------------
# Bidisk case: diagonal-type curves


def diagonal_curve_case_one(mu, surface_gens=None, disc: int = 5,
                            entry_bound: int = 2) -> CurveRecord:
    """Record for the twisted-diagonal curve z -> (mu^(1) z, mu^(2) z).

    mu is a 2x2 invertible matrix over Q(sqrt(disc)) whose determinant must
    be totally positive (both real embeddings act on the upper half plane).
    Stabilizer elements are found by a bounded search over the surface
    lattice: gamma preserves the curve iff mu^-1 gamma mu is Galois-fixed up
    to sign.  surface_gens, when given, contribute short words to the search
    in addition to the entry-bounded sweep.
    """
    mu = tuple(tuple(x for x in row) for row in mu)
    det = mat2_det(mu)
    if det.is_zero():
        raise ValueError("mu must be invertible")
    if not det.is_totally_positive():
        raise NotTotallyPositiveError(
            f"det mu = {det} is not totally positive")
    mu_inv = mat2_inverse(mu)

    candidates = _sl2_order_elements(disc, entry_bound)
    if surface_gens:
        candidates = candidates + _short_words_sl2(surface_gens, 3)

    found = {}
    for gamma in candidates:
        nu = mat2_mul(mat2_mul(mu_inv, gamma), mu)
        conj = mat2_galois(nu)
        if _mat2_eq(conj, nu) or _mat2_eq(conj, _mat2_neg(nu)):
            found[_mat2_key(gamma)] = gamma
    gens = [found[k] for k in sorted(found)]
    height = max(
        max(abs(x.a) + abs(x.b) for x in row) for row in mu
    )
    return CurveRecord(
        case="one",
        curve_id="diag_" + "_".join(
            f"{x.a}:{x.b}" for row in mu for x in row),
        height=int(height),
        h_value=det.norm(),
        residue_class=None,
        mu=mu,
        disc=disc,
        stabilizer_gens=gens,
        stabilizer_complete=True,
    )


def _mat2_eq(p, q):
    return all((p[i][j] - q[i][j]).is_zero() for i in range(2) for j in range(2))


def _mat2_neg(p):
    return tuple(tuple(-x for x in row) for row in p)


def _mat2_key(p):
    return tuple((x.a, x.b) for row in p for x in row)


def _sl2_order_elements(disc: int, bound: int):
    """Determinant-one 2x2 matrices over the maximal order, entries of
    coordinate height <= bound (deterministic sweep)."""
    elems = order_elements(disc, bound)
    nonzero = [e for e in elems if e]
    units = []
    one = RealQuad.make(1, 0, disc)
    for e in nonzero:
        if e.norm() in (1, -1):
            inv = e.galois() if e.norm() == 1 else -e.galois()
            if (e * inv - one).is_zero():
                units.append(e)
    out = []
    for a in nonzero:
        for b in elems:
            for c in elems:
                num = one + b * c
                if num.is_zero() and False:
                    continue
                d = num / a
                if not d.is_integral():
                    continue
                if not _in_box(d, disc, bound):
                    continue
                out.append(((a, b), (c, d)))
    for b in units:
        inv = b.galois() if b.norm() == 1 else -b.galois()
        out.append(((RealQuad.make(0, 0, disc), b),
                    (-inv, RealQuad.make(0, 0, disc))))
    return out


def _in_box(x: RealQuad, disc: int, bound: int) -> bool:
    """Coordinate height of x in the (1, w) order basis."""
    if disc % 4 == 1:
        y = 2 * x.b
        xx = x.a - x.b
    else:
        y = x.b
        xx = x.a
    return abs(xx) <= bound and abs(y) <= bound


def _short_words_sl2(gens, word_bound: int):
    alphabet = list(gens) + [mat2_inverse(g) for g in gens]
    seen = set()
    out = []
    frontier = [None]
    for _ in range(word_bound):
        nxt = []
        for w in frontier:
            for a in alphabet:
                m = a if w is None else mat2_mul(a, w)
                k = _mat2_key(m)
                if k not in seen:
                    seen.add(k)
                    out.append(m)
                    nxt.append(m)
        frontier = nxt
    return out
