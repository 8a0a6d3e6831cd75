"""Desk-scale geometric verifier for plane webs given implicitly.

A k-web of the projective plane is presented in an affine chart by an
integer polynomial F(x, y, p), p standing for the slope dy/dx: through a
generic point pass the k curve branches whose slopes are the p-roots of F.
This module measures the web's characteristic numbers directly from such
tangency geometry (degree via restriction to random lines, counted
projectively; the first polar locus via slope elimination), so the abstract
two-term degree formulas can be checked against actual loci.

All arithmetic is exact; randomness only picks lines and points, every draw
is reproducible from a seed, and each measurement is accepted only when two
independent generic samples agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .multipoly import MultiPoly, resultant

COEFFICIENT_SPAN = 999  # random integer samples are drawn from [-999, 999]
MAX_RETRIES = 8


class DegenerateSampleError(RuntimeError):
    """A random line or point fell on the bad locus; retry with another."""


@dataclass(frozen=True)
class AffineLine:
    """The affine line y = a*x + b."""

    a: int
    b: int


class ImplicitWeb:
    """A plane k-web cut out by F(x, y, p) with p the slope variable.

    Validity requires positive degree k in p and square-freeness of F as a
    p-polynomial over the rational function field in x and y; the latter is
    decided exactly by the resultant of F with its p-derivative not
    vanishing identically.
    """

    def __init__(self, f: MultiPoly):
        if not isinstance(f, MultiPoly):
            raise TypeError(f"expected a MultiPoly, got {type(f).__name__}")
        if not f.uses_only({"x", "y", "p"}):
            raise ValueError("web polynomials may use only the variables x, y and p")
        if f.degree("p") < 1:
            raise ValueError("web polynomial is constant in the slope variable p")
        if resultant(f, f.derivative("p"), "p").is_zero:
            raise ValueError("web polynomial is not square-free in the slope variable p")
        self.f = f

    @property
    def k(self) -> int:
        return self.f.degree("p")

    @cached_property
    def infinity_chart(self) -> MultiPoly:
        """The web's implicit polynomial in the chart at x = infinity.

        Under u = 1/x, v = y/x the slope transforms as p = v - u * dv/du, so
        each monomial x^α y^β p^γ becomes u^(N-α-β) v^β (v - u*r)^γ after
        clearing u-denominators with N = deg_{x,y} F.  The variable slots y
        and p are reused for v and r.  Spurious powers of u introduced by
        the clearing are divided out, exactly like content.
        """
        n_clear = max(e[0] + e[1] for e in self.f.terms())
        u = MultiPoly.variable("u")
        v = MultiPoly.variable("y")
        r = MultiPoly.variable("p")
        folded = v - u * r
        out = MultiPoly.zero()
        for exps, coeff in self.f.terms().items():
            alpha, beta, gamma = exps[0], exps[1], exps[2]
            out = out + coeff * u ** (n_clear - alpha - beta) * v ** beta * folded ** gamma
        saturation = out.min_degree("u")
        if saturation > 0:
            out = out.exact_div(u ** saturation)
        return out


def web_k(web: ImplicitWeb) -> int:
    """Number of branches through a generic point: the p-degree of F."""
    return web.k


def restriction_to_line(web: ImplicitWeb, line: AffineLine) -> MultiPoly:
    """F restricted to the line with the slope pinned to the line's own: g(x)."""
    x = MultiPoly.variable("x")
    return web.f.substitute(y=line.a * x + line.b, p=line.a)


def restriction_homogeneous(web: ImplicitWeb, line: AffineLine) -> MultiPoly:
    """The full tangency divisor of the line as a binary form in t, u.

    The affine restriction g(x) is homogenized via x = t/u; the extra twist
    u^e records tangency at the line's point at infinity, whose multiplicity
    is read off in the second chart, where the line is v = b*u + a with
    slope b.  The zeros of the returned form on the projective line, all of
    them counted with multiplicity, make up the web's tangency divisor.
    """
    g = restriction_to_line(web, line)
    if g.is_zero:
        raise DegenerateSampleError(f"line y = {line.a}*x + {line.b} is tangent everywhere")
    u = MultiPoly.variable("u")
    at_infinity = web.infinity_chart.substitute(y=line.a + line.b * u, p=line.b)
    assert not at_infinity.is_zero
    infinity_order = at_infinity.min_degree("u")
    t = MultiPoly.variable("t")
    degree = g.degree("x")
    out = MultiPoly.zero()
    for exps, coeff in g.terms().items():
        e = exps[0]
        out = out + coeff * t ** e * u ** (degree - e + infinity_order)
    return out


def tangency_with_line(web: ImplicitWeb, line: AffineLine) -> int:
    """Total degree of the tangency divisor cut on the line.

    Counts the affine tangency points (with multiplicity, over the complex
    numbers) plus the contribution at the line's point at infinity.
    Raises DegenerateSampleError when the restriction vanishes identically,
    signalling a non-generic (or invariant) line.
    """
    return restriction_homogeneous(web, line).total_degree()


def _rng(seed: int, stream: str, index: int) -> random.Random:
    # string seeding hashes with sha512 inside random.seed: stable across
    # runs and platforms, and each (stream, index) pair is independent
    return random.Random(f"{seed}:{stream}:{index}")


def sample_line(seed: int, index: int) -> AffineLine:
    rng = _rng(seed, "line", index)
    return AffineLine(rng.randint(-COEFFICIENT_SPAN, COEFFICIENT_SPAN),
                      rng.randint(-COEFFICIENT_SPAN, COEFFICIENT_SPAN))


def sample_point(seed: int, index: int) -> tuple[int, int]:
    rng = _rng(seed, "point", index)
    return (rng.randint(-COEFFICIENT_SPAN, COEFFICIENT_SPAN),
            rng.randint(-COEFFICIENT_SPAN, COEFFICIENT_SPAN))


def web_degree(web: ImplicitWeb, seed: int = 0) -> int:
    """Degree of the web: tangency count with a generic line.

    Random integer lines miss the bad locus with overwhelming probability;
    the value is accepted once two valid samples in a row agree, and at most
    MAX_RETRIES lines are drawn.
    """
    previous = None
    for index in range(MAX_RETRIES):
        try:
            value = tangency_with_line(web, sample_line(seed, index))
        except DegenerateSampleError:
            continue
        if previous is not None and value == previous:
            return value
        previous = value
    raise DegenerateSampleError(
        f"no two agreeing tangency counts within {MAX_RETRIES} sampled lines"
    )


def polar_curve(web: ImplicitWeb, z: tuple[int, int]) -> MultiPoly:
    """Locus of points whose web tangent passes through z = (z1, z2).

    A tangent of slope p at (x, y) hits z exactly when
    (y - z2) - p*(x - z1) = 0, so eliminating p against F cuts the curve.
    The integer content of the resultant is stripped, since only the curve
    matters, and its total degree must come out as k + deg(web).
    """
    z1, z2 = z
    x = MultiPoly.variable("x")
    y = MultiPoly.variable("y")
    p = MultiPoly.variable("p")
    pencil = (y - z2) - p * (x - z1)
    res = resultant(web.f, pencil, "p")
    if res.is_zero:
        raise DegenerateSampleError(f"pencil through {z} shares a component with the web")
    return res.primitive_part()


def discriminant_locus(web: ImplicitWeb) -> MultiPoly:
    """Where F stops being square-free in p, up to integer content.

    The zero set contains every non-smooth point of the web in this chart;
    for k = 1 it is a nonzero constant.
    """
    return resultant(web.f, web.f.derivative("p"), "p").primitive_part()


def _invariance_core(p_coefficients: list[MultiPoly], curve: MultiPoly) -> bool:
    """Divisibility form of the invariance test.

    On the curve C = 0 the slope is p = -C_x / C_y, so C is invariant
    exactly when C divides sum_i A_i * (-C_x)^i * C_y^(k-i), the cleared
    numerator of F evaluated along the curve.
    """
    c_x = curve.derivative("x")
    c_y = curve.derivative("y")
    k = len(p_coefficients) - 1
    cleared = MultiPoly.zero()
    for i, a_i in enumerate(p_coefficients):
        if a_i.is_zero:
            continue
        cleared = cleared + a_i * (-c_x) ** i * c_y ** (k - i)
    if cleared.is_zero:
        return True
    return curve.primitive_part().divides(cleared)


def is_invariant(web: ImplicitWeb, curve: MultiPoly) -> bool:
    """Exact invariance of the plane curve C(x, y) = 0 under the web.

    Decided by multivariate exact division, no approximation anywhere.  If
    C does not involve y the roles of x and y are exchanged (the slope of a
    vertical branch lives at p = infinity, so the reciprocal-slope form of F
    is used); a constant C is rejected.
    """
    if not curve.uses_only({"x", "y"}):
        raise ValueError("curves must be polynomials in x and y only")
    if curve.total_degree() < 1:
        raise ValueError("curve polynomial is constant")
    if not curve.derivative("y").is_zero:
        return _invariance_core(web.f.coefficient_list("p"), curve)
    if not curve.derivative("x").is_zero:
        # reciprocal slope: coefficients reversed, chart roles exchanged
        swapped = [a.swap_xy() for a in reversed(web.f.coefficient_list("p"))]
        while len(swapped) > 1 and swapped[-1].is_zero:
            swapped.pop()
        return _invariance_core(swapped, curve.swap_xy())
    raise ValueError("curve has vanishing gradient; not reduced")


@dataclass(frozen=True)
class WebReport:
    """Everything the geometric pipeline measures for one web (and curve)."""

    k: int
    degree: int
    polar_curve_degree: int
    polar_check_ok: bool
    degree_bound: int
    seed: int
    curve_degree: int | None = None
    invariant: bool | None = None
    bound_check: str = "skipped"  # "holds" | "violated" | "skipped"

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "degree": self.degree,
            "polar_curve_degree": self.polar_curve_degree,
            "polar_curve_expected": self.k + self.degree,
            "polar_check": self.polar_check_ok,
            "degree_bound": self.degree_bound,
        }
        if self.curve_degree is not None:
            out["curve_degree"] = self.curve_degree
            out["invariant"] = self.invariant
            out["bound_check"] = self.bound_check
        return out


def end_to_end_check(
    web: ImplicitWeb, curve: MultiPoly | None = None, seed: int = 0
) -> WebReport:
    """Measure (d_0, d_1) geometrically, verify the polar degree, and, when a
    curve is supplied, decide invariance and check the degree bound
    deg C <= k + deg(web) + 1 (meaningful when the curve's projective
    closure is smooth, which the caller asserts)."""
    k = web.k
    degree = web_degree(web, seed)
    polar_deg = None
    for index in range(MAX_RETRIES):
        try:
            polar_deg = polar_curve(web, sample_point(seed, index)).total_degree()
            break
        except DegenerateSampleError:
            continue
    if polar_deg is None:
        raise DegenerateSampleError(
            f"no generic pencil point within {MAX_RETRIES} samples"
        )
    bound = k + degree + 1
    if curve is None:
        return WebReport(
            k=k,
            degree=degree,
            polar_curve_degree=polar_deg,
            polar_check_ok=polar_deg == k + degree,
            degree_bound=bound,
            seed=seed,
        )
    invariant = is_invariant(web, curve)
    curve_degree = curve.total_degree()
    if invariant:
        bound_check = "holds" if curve_degree <= bound else "violated"
    else:
        bound_check = "skipped"
    return WebReport(
        k=k,
        degree=degree,
        polar_curve_degree=polar_deg,
        polar_check_ok=polar_deg == k + degree,
        degree_bound=bound,
        seed=seed,
        curve_degree=curve_degree,
        invariant=invariant,
        bound_check=bound_check,
    )
