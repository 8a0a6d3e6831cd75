"""Sparse multivariate polynomials over the integers, with exact elimination.

The variable universe is fixed to (x, y, p, t, u): x, y are affine plane
coordinates, p is the slope dy/dx of an implicit differential equation, and
t, u are reserved for homogenizing restrictions to a projective line.
Coefficients are arbitrary-precision integers and nothing here ever touches
floating point; resultants come from the Sylvester matrix evaluated by
fraction-free Bareiss elimination, so all intermediate divisions are exact.

>>> x, y, p = variables("x", "y", "p")
>>> print(resultant(p**2 - x, p - y, "p"))
y^2 - x
>>> (x**2 - y**2).try_exact_div(x - y) == x + y
True
"""

from __future__ import annotations

from math import gcd

VARIABLES = ("x", "y", "p", "t", "u")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXPONENTS = (0, 0, 0, 0, 0)

Exponents = tuple[int, int, int, int, int]


def _var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


class MultiPoly:
    """An integer polynomial stored as a map from exponent tuples to coefficients.

    Zero coefficients are never stored, so equality is plain map equality.

    >>> x, y = variables("x", "y")
    >>> f = (x + y) ** 2
    >>> f.degree("x"), f.total_degree()
    (2, 2)
    >>> f.coefficient_list("y")[1] == 2 * x
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Exponents, int] | None = None):
        self._terms = {e: c for e, c in terms.items() if c} if terms else {}

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, value: int) -> "MultiPoly":
        return cls({_ZERO_EXPONENTS: value})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        exps = [0, 0, 0, 0, 0]
        exps[_var_index(name)] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.const(1)

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            updated = out.get(exps, 0) + coeff
            if updated:
                out[exps] = updated
            else:
                out.pop(exps, None)
        result = MultiPoly()
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = MultiPoly()
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                updated = out.get(key, 0) + c1 * c2
                if updated:
                    out[key] = updated
                else:
                    out.pop(key, None)
        result = MultiPoly()
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = MultiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other) if isinstance(other, int) else other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- inspection --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = _var_index(var)
        return max((e[i] for e in self._terms), default=-1)

    def min_degree(self, var: str) -> int:
        """Least exponent of ``var`` across all terms; -1 for zero."""
        i = _var_index(var)
        return min((e[i] for e in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def uses_only(self, names: set[str]) -> bool:
        allowed = {_var_index(name) for name in names}
        return all(
            all(e[i] == 0 for i in range(5) if i not in allowed) for e in self._terms
        )

    def constant_value(self) -> int:
        if not self._terms:
            return 0
        if set(self._terms) == {_ZERO_EXPONENTS}:
            return self._terms[_ZERO_EXPONENTS]
        raise ValueError(f"polynomial {self} is not constant")

    def coefficient_list(self, var: str) -> list["MultiPoly"]:
        """Coefficients in ``var``, ascending, as polynomials in the others."""
        i = _var_index(var)
        d = self.degree(var)
        buckets: list[dict[Exponents, int]] = [{} for _ in range(d + 1)]
        for exps, coeff in self._terms.items():
            stripped = list(exps)
            stripped[i] = 0
            buckets[exps[i]][tuple(stripped)] = coeff
        out = []
        for bucket in buckets:
            poly = MultiPoly()
            poly._terms = bucket
            out.append(poly)
        return out

    # -- calculus and substitution -------------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = _var_index(var)
        out: dict[Exponents, int] = {}
        for exps, coeff in self._terms.items():
            if exps[i] == 0:
                continue
            lowered = list(exps)
            lowered[i] -= 1
            out[tuple(lowered)] = coeff * exps[i]
        result = MultiPoly()
        result._terms = out
        return result

    def substitute(self, **assignments) -> "MultiPoly":
        """Replace variables by polynomials or integers; others stay put."""
        bases: dict[int, MultiPoly] = {}
        for name, value in assignments.items():
            poly = value if isinstance(value, MultiPoly) else MultiPoly.const(value)
            bases[_var_index(name)] = poly
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = bases[i] ** e
            return power_cache[key]

        out = MultiPoly.zero()
        for exps, coeff in self._terms.items():
            residual = list(exps)
            term = MultiPoly.const(coeff)
            for i, e in enumerate(exps):
                if e and i in bases:
                    residual[i] = 0
                    term = term * power(i, e)
            shell = MultiPoly()
            shell._terms = {tuple(residual): 1}
            out = out + term * shell
        return out

    def evaluate(self, **point: int) -> int:
        """Evaluate at an integer point assigning every used variable."""
        return self.substitute(**point).constant_value()

    def swap_xy(self) -> "MultiPoly":
        out = {}
        for exps, coeff in self._terms.items():
            out[(exps[1], exps[0], exps[2], exps[3], exps[4])] = coeff
        result = MultiPoly()
        result._terms = out
        return result

    # -- exact division ------------------------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        value = 0
        for coeff in self._terms.values():
            value = gcd(value, coeff)
        return value

    def primitive_part(self) -> "MultiPoly":
        """Divide out the integer content, keeping the sign of every term."""
        c = self.content()
        if c in (0, 1):
            return self
        result = MultiPoly()
        result._terms = {e: v // c for e, v in self._terms.items()}
        return result

    def leading_term(self) -> tuple[Exponents, int]:
        """Lexicographically largest monomial (x-major order) and its coefficient."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def try_exact_div(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """Quotient self / divisor over the integers, or None if not exact."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = dict(self._terms)
        quotient: dict[Exponents, int] = {}
        div_lm, div_lc = divisor.leading_term()
        while remainder:
            lm = max(remainder)
            lc = remainder[lm]
            delta = tuple(a - b for a, b in zip(lm, div_lm))
            if any(e < 0 for e in delta):
                return None
            q, r = divmod(lc, div_lc)
            if r:
                return None
            quotient[delta] = q
            for exps, coeff in divisor._terms.items():
                key = (
                    delta[0] + exps[0],
                    delta[1] + exps[1],
                    delta[2] + exps[2],
                    delta[3] + exps[3],
                    delta[4] + exps[4],
                )
                updated = remainder.get(key, 0) - q * coeff
                if updated:
                    remainder[key] = updated
                else:
                    remainder.pop(key, None)
        result = MultiPoly()
        result._terms = quotient
        return result

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        quotient = self.try_exact_div(divisor)
        if quotient is None:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return quotient

    def divides(self, other: "MultiPoly") -> bool:
        return other.try_exact_div(self) is not None

    # -- rendering -------------------------------------------------------------------

    def __str__(self):
        items = sorted(
            self._terms.items(),
            key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])),
        )
        from ._format import format_sum

        rendered = []
        for exps, coeff in items:
            factors = []
            for name, e in zip(VARIABLES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            rendered.append((coeff, "*".join(factors)))
        return format_sum(rendered)

    def __repr__(self):
        return f"MultiPoly({self})"


def variables(*names: str) -> tuple[MultiPoly, ...]:
    """Convenience constructor: ``x, y = variables("x", "y")``."""
    return tuple(MultiPoly.variable(name) for name in names)


def _bareiss_determinant(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Exact determinant of a square matrix of polynomials.

    One-step fraction-free elimination: every division is by the previous
    pivot and is exact by Sylvester's determinant identity, also after the
    row exchanges used to escape zero pivots.
    """
    m = [row[:] for row in rows]
    size = len(m)
    sign = 1
    previous = MultiPoly.one()
    for r in range(size - 1):
        if m[r][r].is_zero:
            for rr in range(r + 1, size):
                if not m[rr][r].is_zero:
                    m[r], m[rr] = m[rr], m[r]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        pivot = m[r][r]
        for i in range(r + 1, size):
            for j in range(r + 1, size):
                m[i][j] = (pivot * m[i][j] - m[i][r] * m[r][j]).exact_div(previous)
            m[i][r] = MultiPoly.zero()
        previous = pivot
    det = m[size - 1][size - 1]
    return -det if sign < 0 else det


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    """The (deg f + deg g)-square Sylvester matrix of f and g in ``var``."""
    deg_f = f.degree(var)
    deg_g = g.degree(var)
    if deg_f < 1 or deg_g < 1:
        raise ValueError("both polynomials need positive degree in the elimination variable")
    fc = list(reversed(f.coefficient_list(var)))
    gc = list(reversed(g.coefficient_list(var)))
    size = deg_f + deg_g
    zero = MultiPoly.zero()
    rows = []
    for shift in range(deg_g):
        rows.append([zero] * shift + fc + [zero] * (size - deg_f - 1 - shift))
    for shift in range(deg_f):
        rows.append([zero] * shift + gc + [zero] * (size - deg_g - 1 - shift))
    return rows


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant of f and g with respect to ``var``.

    Vanishes exactly where the two polynomials share a root in ``var``.
    Degenerate degrees follow the classical conventions: Res(f, g) with g of
    degree zero in ``var`` is g**deg(f), and the resultant of two
    var-constants is 1.  Zero input polynomials are rejected.

    >>> x, y, p = variables("x", "y", "p")
    >>> print(resultant(x + y * p, (y - 3) - p * (x - 5), "p"))
    x^2 + y^2 - 5*x - 3*y
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    deg_f = f.degree(var)
    deg_g = g.degree(var)
    if deg_f == 0 and deg_g == 0:
        return MultiPoly.one()
    if deg_g == 0:
        return g ** deg_f
    if deg_f == 0:
        return f ** deg_g
    return _bareiss_determinant(sylvester_matrix(f, g, var))
