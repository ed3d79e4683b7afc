"""Raw-integer Gaussian arithmetic for hot enumeration loops.

Vectors are 3-tuples of (a, b) int pairs, matrices 3x3 nests of pairs.
Same exact semantics as the QuadInt layer, without object overhead; used
only inside search/dedup inner loops.  Conversions live at the boundary.
"""

from __future__ import annotations

from .gaussian import QuadInt

RawC = tuple  # (a, b) = a + b*i
RawVec = tuple
RawMat = tuple


def cmul(x: RawC, y: RawC) -> RawC:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def cadd(x: RawC, y: RawC) -> RawC:
    return (x[0] + y[0], x[1] + y[1])


def csub(x: RawC, y: RawC) -> RawC:
    return (x[0] - y[0], x[1] - y[1])


def cconj(x: RawC) -> RawC:
    return (x[0], -x[1])


def cnorm(x: RawC) -> int:
    return x[0] * x[0] + x[1] * x[1]


def cdivmod(x: RawC, y: RawC) -> tuple[RawC, RawC]:
    n = cnorm(y)
    p = cmul(x, cconj(y))
    q = ((2 * p[0] + n) // (2 * n), (2 * p[1] + n) // (2 * n))
    return q, csub(x, cmul(y, q))


def cgcd(x: RawC, y: RawC) -> RawC:
    while y != (0, 0):
        x, y = y, cdivmod(x, y)[1]
    return x


def vec_primitive(v: RawVec) -> bool:
    g = (0, 0)
    for c in v:
        g = cgcd(g, c)
    return cnorm(g) == 1


_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def canon(v: RawVec) -> RawVec:
    """Unit-scale so the first nonzero entry has Re > 0, Im >= 0."""
    for c in v:
        if c != (0, 0):
            for u in _UNITS:
                if cmul(c, u)[0] > 0 and cmul(c, u)[1] >= 0:
                    return tuple(cmul(x, u) for x in v)
    raise ValueError("zero vector")


def matvec(m: RawMat, v: RawVec) -> RawVec:
    out = []
    for row in m:
        a = b = 0
        for (x0, x1), (y0, y1) in zip(row, v):
            a += x0 * y0 - x1 * y1
            b += x0 * y1 + x1 * y0
        out.append((a, b))
    return tuple(out)


def matmul(m: RawMat, n: RawMat) -> RawMat:
    cols = tuple(zip(*n))
    out = []
    for row in m:
        orow = []
        for col in cols:
            a = b = 0
            for (x0, x1), (y0, y1) in zip(row, col):
                a += x0 * y0 - x1 * y1
                b += x0 * y1 + x1 * y0
            orow.append((a, b))
        out.append(tuple(orow))
    return tuple(out)


def from_quadint_vec(v) -> RawVec:
    return tuple((c.a, c.b) for c in v)


def to_quadint_vec(v: RawVec):
    return tuple(QuadInt(a, b) for a, b in v)


def from_quadint_mat(m) -> RawMat:
    return tuple(tuple((c.a, c.b) for c in row) for row in m)


def to_quadint_mat(m: RawMat):
    return tuple(tuple(QuadInt(a, b) for a, b in row) for row in m)


def herm_value_num(gram_num: RawMat, den: int, v: RawVec) -> int:
    """den * h(v, v) for an integer-pair Gram matrix scaled by den.

    gram_num must be den * gram entrywise (exact integers); the result is an
    integer because h(v,v) is real and den clears all denominators.
    """
    total_re = 0
    for i in range(3):
        vi = cconj(v[i])
        if vi == (0, 0):
            continue
        for j in range(3):
            g = gram_num[i][j]
            if g == (0, 0) or v[j] == (0, 0):
                continue
            t = cmul(cmul(vi, g), v[j])
            total_re += t[0]
    return total_re


def herm_pair_num(gram_num: RawMat, v: RawVec, w: RawVec) -> RawC:
    """den * h(v, w) as a raw Gaussian integer."""
    acc = (0, 0)
    for i in range(3):
        vi = cconj(v[i])
        if vi == (0, 0):
            continue
        for j in range(3):
            g = gram_num[i][j]
            if g == (0, 0) or w[j] == (0, 0):
                continue
            acc = cadd(acc, cmul(cmul(vi, g), w[j]))
    return acc
