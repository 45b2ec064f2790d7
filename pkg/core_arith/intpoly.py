# core_arith/intpoly.py – dense univariate polynomials over Z
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Any, Iterable

from errors import ConsistencyError, InvalidInputError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPoly:
    """
    Integer polynomial, coefficients stored lowest degree first.

    The zero polynomial is the empty tuple; every other value has a nonzero
    leading coefficient.  Instances are immutable and hashable.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # ───────────────────────── constructors ─────────────────────────
    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> IntPoly:
        return cls([0, 1])

    @classmethod
    def from_string(cls, text: str) -> IntPoly:
        """Parse an ascending comma separated list such as "4,-7,4"."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise InvalidInputError(f"not an integer coefficient list: {text!r}") from exc

    # ───────────────────────── basic properties ─────────────────────────
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def primitive_part(self) -> IntPoly:
        if not self.coeffs:
            return self
        g = self.content()
        return IntPoly(c // g for c in self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    # ───────────────────────── ring arithmetic ─────────────────────────
    @staticmethod
    def _coerce(other: Any) -> IntPoly | None:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return None

    def __add__(self, other: Any) -> IntPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> IntPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> IntPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise InvalidInputError("negative polynomial power")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ───────────────────────── division ─────────────────────────
    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """
        Euclidean division in Z[x].  Every quotient step must be integral,
        which always holds for monic (or unit-leading) divisors.
        """
        if not other:
            raise InvalidInputError("division by the zero polynomial")
        rem = list(self.coeffs)
        dv = other.coeffs
        lc = dv[-1]
        q = [0] * max(len(rem) - len(dv) + 1, 0)
        for k in range(len(rem) - len(dv), -1, -1):
            top = rem[k + len(dv) - 1]
            if top == 0:
                continue
            if top % lc:
                raise InvalidInputError("quotient step not integral; use pseudo_divmod")
            t = top // lc
            q[k] = t
            for j, c in enumerate(dv):
                rem[k + j] -= t * c
        return IntPoly(q), IntPoly(rem)

    def __mod__(self, other: IntPoly) -> IntPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return divmod(self, other)[0]

    def pseudo_divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """lc(other)^(deg self - deg other + 1) · self = q · other + r."""
        if not other:
            raise InvalidInputError("division by the zero polynomial")
        delta = self.degree - other.degree
        if delta < 0:
            return IntPoly(), self
        lc = other.lc
        rem = list(self.coeffs)
        dv = other.coeffs
        q = [0] * (delta + 1)
        n = len(dv)
        for k in range(delta, -1, -1):
            top = rem[k + n - 1]
            q = [c * lc for c in q]
            rem = [c * lc for c in rem]
            q[k] += top
            for j, c in enumerate(dv):
                rem[k + j] -= top * c
        return IntPoly(q), IntPoly(rem)

    def pseudo_remainder(self, other: IntPoly) -> IntPoly:
        return self.pseudo_divmod(other)[1]

    def divides(self, other: IntPoly) -> bool:
        """True iff self | other in Z[x]."""
        if not self:
            return not other
        if not other:
            return True
        if other.degree < self.degree:
            return False
        c = self.content()
        if other.content() % c:
            return False
        prim = self.primitive_part()
        _, r = other.pseudo_divmod(prim)
        return not r

    def exact_div(self, other: IntPoly | int) -> IntPoly:
        """Quotient in Z[x]; anything but an exact division is an arithmetic bug."""
        if isinstance(other, int):
            if other == 0:
                raise InvalidInputError("division by zero")
            if any(c % other for c in self.coeffs):
                raise ConsistencyError(f"{self} is not divisible by {other}")
            return IntPoly(c // other for c in self.coeffs)
        try:
            q, r = divmod(self, other)
        except InvalidInputError as exc:
            raise ConsistencyError(f"{other} does not divide {self}") from exc
        if r:
            raise ConsistencyError(f"{other} does not divide {self}")
        return q

    # ───────────────────────── calculus / substitution ─────────────────────────
    def __call__(self, value: Any) -> Any:
        """Horner evaluation; works for ints, Fractions, floats, complex, Gaussian integers, IntPoly."""
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def substitute_power(self, k: int) -> IntPoly:
        """f(x^k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPoly(out)

    # ───────────────────────── gcd ─────────────────────────
    def gcd(self, other: IntPoly) -> IntPoly:
        """Greatest common divisor in Z[x], positive leading coefficient."""
        a, b = self, other
        if not a:
            return b if b.lc >= 0 else -b
        if not b:
            return a if a.lc >= 0 else -a
        g = gcd(a.content(), b.content())
        a, b = a.primitive_part(), b.primitive_part()
        if a.degree < b.degree:
            a, b = b, a
        while b:
            r = a.pseudo_remainder(b)
            a, b = b, (r.primitive_part() if r else r)
        res = a.primitive_part() * g
        return res if res.lc > 0 else -res

    # ───────────────────────── reduction ─────────────────────────
    def reduce(self, p: int):
        from core_arith.modpoly import ModPoly
        return ModPoly(p, self.coeffs)

    def coeffs_mod(self, m: int) -> list[int]:
        return [c % m for c in self.coeffs]

    # ───────────────────────── display ─────────────────────────
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


X = IntPoly.x()
ONE = IntPoly([1])
ZERO = IntPoly()
