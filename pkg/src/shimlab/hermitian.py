"""The Hermitian space (Z[i]^3, h) of signature (2,1).

The form h is conjugate-linear in its first slot: h(v, w) = conj(v)^T G w
for a Gram matrix G with conj(G)^T = G.  Negative lines of h form the
complex 2-ball; positive lines index the totally geodesic disks the rest of
the package enumerates.  All membership and orthogonality decisions here are
exact: Q(i) arithmetic throughout, floating point only in `conjugator`,
which is the single bridge into the numerical half of the lab.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath as mp

from .errors import (
    IsotropicStepError,
    NotPositiveError,
    PrecisionLossError,
    ZeroVectorError,
)
from .gaussian import (
    ONE,
    QuadInt,
    QuadRat,
    RAT_ONE,
    RAT_ZERO,
    ZERO,
    gauss_ext_gcd,
    gauss_gcd,
    is_primitive,
)

Vector = tuple  # 3-tuples of QuadInt or QuadRat
Matrix = tuple  # 3-tuples of rows


def _rat(x) -> QuadRat:
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, QuadInt):
        return QuadRat.from_quadint(x)
    if isinstance(x, int):
        return QuadRat.from_int(x)
    if isinstance(x, Fraction):
        return QuadRat.from_fraction(x)
    raise TypeError(f"unexpected entry type {type(x).__name__}")


def mat_from_rows(rows) -> Matrix:
    return tuple(tuple(_rat(x) for x in row) for row in rows)


def diag_form_matrix(d1=1, d2=1, d3=-1) -> Matrix:
    return mat_from_rows([[d1, 0, 0], [0, d2, 0], [0, 0, d3]])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), RAT_ZERO)
              for j in range(m))
        for i in range(n)
    )


def mat_conj_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i].conj() for j in range(len(a)))
                 for i in range(len(a[0])))


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum((a[i][j] * _rat(v[j]) for j in range(len(v))), RAT_ZERO)
                 for i in range(len(a)))


def mat_det3(a: Matrix) -> QuadRat:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def mat_inverse3(a: Matrix) -> Matrix:
    det = mat_det3(a)
    if det.is_zero():
        raise ZeroDivisionError("singular matrix")
    idx = ((1, 2), (0, 2), (0, 1))
    inv = [[RAT_ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r, s = idx[i]
            p, q = idx[j]
            minor = a[r][p] * a[s][q] - a[r][q] * a[s][p]
            sign = -1 if (i + j) % 2 else 1
            inv[j][i] = (minor * sign) / det  # adjugate transpose
    return tuple(tuple(row) for row in inv)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all((a[i][j] - b[i][j]).is_zero()
               for i in range(len(a)) for j in range(len(a[0])))


def identity_matrix(n: int = 3) -> Matrix:
    return tuple(tuple(RAT_ONE if i == j else RAT_ZERO for j in range(n))
                 for i in range(n))


@dataclass(frozen=True)
class HermitianForm:
    """A conjugate-symmetric 3x3 Gram matrix of exact signature (2,1)."""

    gram: Matrix

    def __post_init__(self):
        g = self.gram
        if len(g) != 3 or any(len(row) != 3 for row in g):
            raise ValueError("Gram matrix must be 3x3")
        if not mat_eq(g, mat_conj_transpose(g)):
            raise ValueError("Gram matrix is not Hermitian")
        if self.signature() != (2, 1):
            raise ValueError(f"signature {self.signature()} is not (2,1)")

    @classmethod
    def standard(cls) -> "HermitianForm":
        """diag(1, 1, -1): two positive directions, one negative."""
        return cls(diag_form_matrix())

    @classmethod
    def from_rows(cls, rows) -> "HermitianForm":
        return cls(mat_from_rows(rows))

    def signature(self) -> tuple[int, int]:
        """(#positive, #negative) by exact congruence diagonalization."""
        diag = _congruence_diagonal(self.gram)
        pos = sum(1 for d in diag if d > 0)
        neg = sum(1 for d in diag if d < 0)
        return pos, neg

    def eval(self, v: Vector, w: Vector) -> QuadRat:
        return eval_h(self, v, w)

    def value(self, v: Vector) -> Fraction:
        """h(v, v) as an exact rational (always real)."""
        return eval_h(self, v, v).as_fraction()


def _congruence_diagonal(gram: Matrix) -> list[Fraction]:
    """Diagonal entries of the form in some orthogonal basis.

    Symmetric elimination over Q(i).  When every remaining vector is
    isotropic, two of them are mixed first: h(x + u*y) = 2*Re(u*h(x,y)) is
    nonzero for u = 1 or u = i whenever h(x,y) != 0.
    """
    n = len(gram)

    def form(x, y):
        return sum(
            (x[i].conj() * gram[i][j] * y[j] for i in range(n) for j in range(n)),
            RAT_ZERO,
        )

    vecs = [[RAT_ONE if i == j else RAT_ZERO for j in range(n)]
            for i in range(n)]
    remaining = list(range(n))
    out: list[Fraction] = []
    iu = QuadRat.from_quadint(QuadInt(0, 1))
    while remaining:
        pivot = None
        for i in remaining:
            if not form(vecs[i], vecs[i]).is_zero():
                pivot = i
                break
        if pivot is None:
            hit = None
            for i in remaining:
                for j in remaining:
                    if i == j:
                        continue
                    for u in (RAT_ONE, iu):
                        cand = [vecs[i][t] + u * vecs[j][t] for t in range(n)]
                        if not form(cand, cand).is_zero():
                            hit = (i, cand)
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit is None:
                out.extend(Fraction(0) for _ in remaining)
                break
            vecs[hit[0]] = hit[1]
            pivot = hit[0]
        p = vecs[pivot]
        pp = form(p, p)
        out.append(pp.as_fraction())
        remaining.remove(pivot)
        for i in remaining:
            c = form(p, vecs[i]) / pp
            vecs[i] = [vecs[i][t] - c * p[t] for t in range(n)]
    return out


def eval_h(form: HermitianForm, v: Vector, w: Vector) -> QuadRat:
    """h(v, w) = conj(v)^T * gram * w (conjugate-linear in v)."""
    g = form.gram
    total = RAT_ZERO
    for i in range(3):
        vi = _rat(v[i]).conj()
        if vi.is_zero():
            continue
        row = g[i]
        for j in range(3):
            wj = _rat(w[j])
            if wj.is_zero() or row[j].is_zero():
                continue
            total = total + vi * row[j] * wj
    return total


def vector_sign(form: HermitianForm, v: Vector) -> int:
    """+1 / 0 / -1 according to the exact sign of h(v, v)."""
    val = form.value(v)
    return (val > 0) - (val < 0)


def is_in_SU(form: HermitianForm, g: Matrix) -> bool:
    """Exact test for g in SU(h): conj(g)^T G g = G and det g = 1."""
    gr = mat_from_rows(g)
    if not mat_eq(mat_mul(mat_mul(mat_conj_transpose(gr), form.gram), gr),
                  form.gram):
        return False
    det = mat_det3(gr)
    return det.is_real() and det.as_fraction() == 1


def _completion_candidates():
    e = [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)]
    iu = QuadInt(0, 1)
    cands = list(e)
    for i in range(3):
        for j in range(3):
            if i != j:
                cands.append(tuple(e[i][t] + e[j][t] for t in range(3)))
                cands.append(tuple(e[i][t] + iu * e[j][t] for t in range(3)))
    return cands


def orthogonal_completion(form: HermitianForm, v: Vector) -> tuple[Vector, Vector, Vector]:
    """Extend a positive vector v to an orthogonal basis (v, v2, v3) of Q(i)^3
    with h(v2, v2) > 0 and h(v3, v3) < 0.

    Gram-Schmidt against a fixed candidate list (standard basis vectors and
    their pairwise sums / i-twisted sums); candidates projecting to zero or
    to an isotropic vector are skipped, which is the retry the signature
    guarantees can succeed.  Output vectors are cleared to primitive
    Gaussian-integer tuples.
    """
    v = tuple(v)
    if vector_sign(form, v) <= 0:
        raise NotPositiveError(f"h(v,v) = {form.value(v)} is not positive")
    chain = [tuple(_rat(c) for c in v)]
    for cand in _completion_candidates():
        if len(chain) == 3:
            break
        w = [_rat(c) for c in cand]
        for b in chain:
            coeff = eval_h(form, b, tuple(w)) / eval_h(form, b, b)
            w = [w[t] - coeff * b[t] for t in range(3)]
        w = tuple(w)
        if all(x.is_zero() for x in w):
            continue
        if eval_h(form, w, w).is_zero():
            continue
        chain.append(_clear_to_primitive(w))
    if len(chain) < 3:
        raise IsotropicStepError(
            "no anisotropic completion found among candidate bases")
    v1, v2, v3 = chain
    s2 = eval_h(form, v2, v2).as_fraction()
    s3 = eval_h(form, v3, v3).as_fraction()
    if s2 < 0 and s3 > 0:
        v2, v3 = v3, v2
        s2, s3 = s3, s2
    assert s2 > 0 and s3 < 0, "complement of a positive vector must be (1,1)"
    return (v, _to_int_vec(v2), _to_int_vec(v3))


def _clear_to_primitive(w: Vector) -> Vector:
    """Scale a rational vector to a primitive Gaussian-integer vector."""
    den = 1
    for c in w:
        den = den * c.den // gcd(den, c.den)
    ints = [c.num * (den // c.den) for c in w]
    g = ZERO
    for c in ints:
        g = gauss_gcd(g, c)
    if not g.is_zero() and not g.is_unit():
        ints = [c.exact_div(g) for c in ints]
    return tuple(_rat(c) for c in ints)


def _to_int_vec(w: Vector) -> tuple[QuadInt, QuadInt, QuadInt]:
    return tuple(_rat(c).as_quadint() for c in w)


def conjugator(form: HermitianForm, basis, precision: int = 100):
    """The matrix sending e_i to v_i / sqrt(|h(v_i)|) for an orthogonal basis.

    Returns an mpmath matrix computed at `precision` decimal digits.  Columns
    are the h-orthonormalized basis vectors, so the result carries the
    standard form diag(1,1,-1) onto `form` and conjugates the stabilizer of
    e_1 onto the stabilizer of v_1's line.  Raises PrecisionLossError if the
    unitarity residual exceeds 10^-25.
    """
    v1, v2, v3 = basis
    signs = [eval_h(form, w, w).as_fraction() for w in (v1, v2, v3)]
    if not (signs[0] > 0 and signs[1] > 0 and signs[2] < 0):
        raise NotPositiveError(
            f"basis has h-values {signs}, expected (+, +, -)")
    with mp.workdps(precision):
        g = mp.matrix(3, 3)
        for j, (w, s) in enumerate(zip((v1, v2, v3), signs)):
            a = mp.sqrt(abs(mp.mpf(s.numerator)) / mp.mpf(s.denominator))
            for i in range(3):
                g[i, j] = _to_mpc(w[i]) / a
        err = conjugator_residual(form, g, precision)
        if err > mp.mpf(10) ** (-25):
            raise PrecisionLossError(f"conjugator residual {err}")
        return g


def conjugator_residual(form: HermitianForm, g, precision: int = 100):
    """Max-entry residual of conj(g)^T gram g - diag(1,1,-1)."""
    with mp.workdps(precision):
        gram = mp.matrix(3, 3)
        for i in range(3):
            for j in range(3):
                gram[i, j] = _to_mpc(form.gram[i][j])
        resid = g.H * gram * g - mp.matrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
        return max(abs(resid[i, j]) for i in range(3) for j in range(3))


def _to_mpc(x):
    x = _rat(x)
    return mp.mpc(mp.mpf(x.num.a) / x.den, mp.mpf(x.num.b) / x.den)


def perp_lattice(form: HermitianForm, v: Vector) -> tuple[Vector, Vector]:
    """Basis over Z[i] of {w in Z[i]^3 : h(v, w) = 0} for a primitive v.

    The functional w -> h(v, w) has Gaussian-integer coefficients after
    clearing denominators; its kernel is computed by unimodular column
    reduction (extended gcd), so the two returned vectors span the full
    saturated orthogonal sublattice.
    """
    v = tuple(v)
    if all(isinstance(c, QuadInt) and c.is_zero() for c in v):
        raise ZeroVectorError("perp of the zero vector")
    if not is_primitive(v):
        raise ValueError("perp_lattice expects a primitive vector")
    # coefficient row of w -> h(v,w): c_j = sum_i conj(v_i) G_ij
    coeffs = []
    den = 1
    for j in range(3):
        c = RAT_ZERO
        for i in range(3):
            c = c + _rat(v[i]).conj() * form.gram[i][j]
        coeffs.append(c)
        den = den * c.den // gcd(den, c.den)
    r = [c.num * (den // c.den) for c in coeffs]

    u = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]

    def swap(j, k):
        r[j], r[k] = r[k], r[j]
        for i in range(3):
            u[i][j], u[i][k] = u[i][k], u[i][j]

    def combine(j, k):
        """Zero out r[k] against r[j] by an exact unimodular column move."""
        if r[k].is_zero():
            return
        g, s, t = gauss_ext_gcd(r[j], r[k])
        a, b = r[j].exact_div(g), r[k].exact_div(g)
        colj = [u[i][j] for i in range(3)]
        colk = [u[i][k] for i in range(3)]
        for i in range(3):
            u[i][j] = s * colj[i] + t * colk[i]
            u[i][k] = a * colk[i] - b * colj[i]
        r[j], r[k] = g, ZERO

    if r[0].is_zero():
        if not r[1].is_zero():
            swap(0, 1)
        elif not r[2].is_zero():
            swap(0, 2)
        else:
            raise ZeroVectorError("form is degenerate at v")
    combine(0, 1)
    combine(0, 2)

    w1 = tuple(u[i][1] for i in range(3))
    w2 = tuple(u[i][2] for i in range(3))
    w1, w2 = _lagrange_reduce(w1, w2)
    for w in (w1, w2):
        assert eval_h(form, v, w).is_zero(), "kernel reduction failed"
    return w1, w2


def _euclid_pair(x, y) -> QuadInt:
    """sum conj(x_i) y_i, the definite coordinate pairing on Z[i]^3."""
    acc = ZERO
    for a, b in zip(x, y):
        acc = acc + a.conj() * b
    return acc


def _round_gauss(num: QuadInt, den: int) -> QuadInt:
    return QuadInt((2 * num.a + den) // (2 * den), (2 * num.b + den) // (2 * den))


def _lagrange_reduce(w1, w2):
    """Gauss-Lagrange reduction of a rank-2 Z[i]-basis for short coordinates.

    Works with the definite Euclidean pairing (not the indefinite form), so
    it terminates; a shorter basis keeps downstream entry-bounded searches
    small.  Deterministic output orientation: shorter vector first, each
    scaled to its canonical associate.
    """
    from .gaussian import canonical_vector_rep

    a, b = w1, w2
    if _euclid_pair(b, b).a < _euclid_pair(a, a).a:
        a, b = b, a
    while True:
        mu = _round_gauss(_euclid_pair(a, b), _euclid_pair(a, a).a)
        b = tuple(x - mu * y for x, y in zip(b, a))
        if _euclid_pair(b, b).a < _euclid_pair(a, a).a:
            a, b = b, a
        else:
            break
    return canonical_vector_rep(a), canonical_vector_rep(b)
