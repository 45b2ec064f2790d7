# core_arith/resultant.py – fraction-free subresultant resultant over Z
from __future__ import annotations

from core_arith.intpoly import IntPoly
from errors import ConsistencyError, InvalidInputError


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError("subresultant step left a remainder")
    return q


def resultant(f: IntPoly, g: IntPoly) -> int:
    """
    Res(f, g) = lc(f)^deg g · ∏_{f(α)=0} g(α), i.e. the Sylvester determinant.

    Subresultant PRS (Collins); every division below is exact in Z.
    """
    if not f or not g:
        raise InvalidInputError("resultant of the zero polynomial")
    A, B = f, g
    a, b = A.content(), B.content()
    A, B = A.primitive_part(), B.primitive_part()
    if A.lc < 0:
        A, a = -A, -a
    if B.lc < 0:
        B, b = -B, -b
    t = a ** B.degree * b ** A.degree

    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -1

    g_, h = 1, 1
    while B.degree > 0:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = A.pseudo_remainder(B)
        if not R:
            return 0
        A = B
        den = g_ * h ** delta
        B = IntPoly(_exact(c, den) for c in R.coeffs)
        g_ = A.lc
        h = _exact(g_ ** delta, h ** (delta - 1)) if delta >= 1 else h
    if A.degree == 0:
        return s * t
    h = _exact(B.lc ** A.degree, h ** (A.degree - 1))
    return s * t * h
