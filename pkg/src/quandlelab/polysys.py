"""Exact verification that the log-pairing equation system is unsolvable.

For a primitive alpha in GF(q), the map k -> log(1 - alpha^k) is an
involution of {1, ..., q-2}; in odd characteristic it has the single fixed
point -log(2) mod (q-1).  The associated complex equation system
x^k + x^phi(k) - 1 = 0 must have no common solutions, and this module
certifies that with exact integer/rational arithmetic only: the iterated
polynomial gcd of the system is a nonzero constant.

In odd characteristic the fixed-point equation 2x^N - 1 = 0 anchors a fast
exact route: its reciprocal x^N - 2 is Eisenstein at 2, so 2x^N - 1 is
irreducible, and any other equation that fails to reduce to zero modulo
x^N = 1/2 forces a constant gcd.  Characteristic two has no fixed point and
falls back to the general subresultant chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParamsError, NotInvolutionError
from .fields import FieldTable
from .presentation import PresentationContext

IntPoly = list[int]  # little-endian, no trailing zeros


def _trim(p: IntPoly) -> IntPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: IntPoly) -> int:
    return len(p) - 1 if p else -1


def content(p: IntPoly) -> int:
    return math.gcd(*p) if p else 0


def primitive_part(p: IntPoly) -> IntPoly:
    if not p:
        return []
    c = content(p)
    sign = -1 if p[-1] < 0 else 1
    return [x // (sign * c) for x in p]


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """prem(f, g): the remainder of lc(g)^(deg f - deg g + 1) * f by g."""
    if not g:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(f)
    dg = degree(g)
    lg = g[-1]
    steps = degree(f) - dg + 1
    if steps <= 0:
        return _trim(r)
    for _ in range(steps):
        if degree(r) < dg:
            r = [lg * c for c in r]
            continue
        coef = r[-1]
        shift = degree(r) - dg
        r = [lg * c for c in r]
        for i, gi in enumerate(g):
            r[shift + i] -= coef * gi
        _trim(r)
    return r


def _exact_div(p: IntPoly, d: int) -> IntPoly:
    out = []
    for c in p:
        q, rem = divmod(c, d)
        if rem:
            raise AssertionError("inexact division in subresultant sequence")
        out.append(q)
    return out


def subresultant_prs(f: IntPoly, g: IntPoly) -> list[IntPoly]:
    """Polynomial remainder sequence with the subresultant divisors, which
    keep all intermediate coefficients integral and polynomially sized."""
    f, g = _trim(list(f)), _trim(list(g))
    if degree(f) < degree(g):
        f, g = g, f
    if not g:
        return [f]
    prs = [f, g]
    a, b = f, g
    delta = degree(a) - degree(b)
    beta = (-1) ** (delta + 1)
    psi = -1
    while True:
        r = pseudo_rem(a, b)
        if not r:
            return prs
        r = _exact_div(r, beta)
        prs.append(r)
        lc_b = b[-1]
        if delta > 0:
            num = (-lc_b) ** delta
            den = psi ** (delta - 1)
            if den == 0 or num % den:
                raise AssertionError("inexact psi update in subresultant sequence")
            psi = num // den
        delta_new = degree(b) - degree(r)
        beta = -lc_b * psi ** delta_new
        delta = delta_new
        a, b = b, r


def int_poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact gcd in Z[x] via the subresultant remainder sequence."""
    f, g = _trim(list(f)), _trim(list(g))
    if not f:
        return primitive_part(g) if g else []
    if not g:
        return primitive_part(f)
    cf, cg = content(f), content(g)
    last = subresultant_prs(primitive_part(f), primitive_part(g))[-1]
    gcd_pp = primitive_part(last)
    c = math.gcd(cf, cg)
    return [c * x for x in gcd_pp] if degree(gcd_pp) > 0 else [c]


@dataclass(frozen=True)
class LogInvolution:
    """The pairing k <-> log(1 - alpha^k) on {1, ..., q-2}."""

    q: int
    alpha: int
    phi: tuple[int, ...]          # phi[k] for k in 1..q-2; phi[0] unused
    fixed_points: tuple[int, ...]

    def pair_representatives(self) -> list[int]:
        return sorted(k for k in range(1, self.q - 1) if k <= self.phi[k])


def log_involution(F: FieldTable, alpha: int) -> LogInvolution:
    """Build and verify the involution; odd characteristic must produce the
    single fixed point -log(2) mod (q-1), characteristic two none."""
    if F.q <= 3:
        raise InvalidParamsError("the equation system needs q > 3")
    ctx = PresentationContext(F, alpha)
    m = F.q - 1
    phi = [0] + [ctx.log_one_minus_pow(k) for k in range(1, m)]
    for k in range(1, m):
        if not 1 <= phi[k] <= m - 1 or phi[phi[k]] != k:
            raise NotInvolutionError(f"k={k}: phi(phi(k)) = {phi[phi[k]]} != k")
    fixed = tuple(k for k in range(1, m) if phi[k] == k)
    if F.p == 2:
        if fixed:
            raise NotInvolutionError("characteristic two admits no fixed point")
    else:
        two = F.add(1, 1)
        expected = (-ctx.dlog(two)) % m
        if fixed != (expected,):
            raise NotInvolutionError(
                f"fixed points {fixed}, expected exactly {{-log(2) = {expected}}}")
    return LogInvolution(F.q, alpha, tuple(phi), fixed)


def system_poly(inv: LogInvolution, k: int) -> IntPoly:
    """x^k + x^phi(k) - 1 as an integer polynomial."""
    top = max(k, inv.phi[k])
    p = [0] * (top + 1)
    p[0] -= 1
    p[k] += 1
    p[inv.phi[k]] += 1
    return _trim(p)


def _eisenstein_reciprocal(n: int) -> bool:
    """2x^n - 1 is irreducible: its reciprocal x^n - 2 satisfies the
    Eisenstein criterion at 2 (2 divides every non-leading coefficient,
    4 does not divide the constant term)."""
    coeffs = [-2] + [0] * (n - 1) + [1]
    return (all(c % 2 == 0 for c in coeffs[:-1])
            and coeffs[-1] % 2 != 0
            and coeffs[0] % 4 != 0)


@dataclass
class GcdStep:
    poly: str
    degree_after: int
    note: str = ""


@dataclass
class Certificate:
    """Record of the iterated-gcd computation for one (q, alpha)."""

    q: int
    alpha: int
    fixed_point: int | None
    steps: list[GcdStep] = field(default_factory=list)
    final_degree: int = -1
    method: str = ""

    @property
    def no_solutions(self) -> bool:
        return self.final_degree == 0


def _reduce_mod_fixed(inv: LogInvolution, k: int, N: int) -> dict[int, Fraction]:
    """P_k reduced exactly modulo x^N = 1/2; nonempty dict means nonzero."""
    acc: dict[int, Fraction] = {}

    def put(e: int, c: Fraction):
        r, s = e % N, e // N
        v = acc.get(r, Fraction(0)) + c * Fraction(1, 2 ** s)
        if v:
            acc[r] = v
        else:
            acc.pop(r, None)

    put(k, Fraction(1))
    put(inv.phi[k], Fraction(1))
    put(0, Fraction(-1))
    return acc


def system_has_no_solution(inv: LogInvolution, method: str = "auto") -> Certificate:
    """Certify that the equations x^k + x^phi(k) - 1 = 0 share no complex
    solution, by exact iterated gcd.

    method 'auto' uses the fixed-point anchor when one exists (odd
    characteristic) and the subresultant chain otherwise; 'subresultant'
    forces the general chain.
    """
    if method not in ("auto", "subresultant"):
        raise InvalidParamsError(f"unknown method {method!r}")
    fp = inv.fixed_points[0] if inv.fixed_points else None
    cert = Certificate(inv.q, inv.alpha, fp)

    if method == "auto" and fp is not None:
        N = fp
        if not _eisenstein_reciprocal(N):
            raise AssertionError("Eisenstein check failed for the fixed-point equation")
        cert.method = "fixed-point-anchor"
        cert.steps.append(GcdStep(f"P_{N} = 2x^{N}-1", N, "irreducible (Eisenstein)"))
        cert.final_degree = N
        for k in sorted(inv.pair_representatives(), key=lambda k: max(k, inv.phi[k])):
            if k == N:
                continue
            residue = _reduce_mod_fixed(inv, k, N)
            if residue:
                cert.steps.append(GcdStep(
                    f"P_{k}", 0,
                    f"P_{k} mod (x^{N}-1/2) nonzero of degree {max(residue)}"))
                cert.final_degree = 0
                return cert
            cert.steps.append(GcdStep(f"P_{k}", N, "multiple of the anchor"))
        return cert

    cert.method = "subresultant-chain"
    polys = sorted((system_poly(inv, k) for k in inv.pair_representatives()),
                   key=degree)
    g = polys[0]
    cert.steps.append(GcdStep("P(first)", degree(g)))
    for p in polys[1:]:
        if degree(g) == 0:
            break
        g = int_poly_gcd(g, p)
        cert.steps.append(GcdStep("P(next)", degree(g)))
    cert.final_degree = degree(g)
    return cert


def verify_sum_identity(inv: LogInvolution) -> bool:
    """Summing every equation gives 2*(x + ... + x^(q-2)) - (q-2) exactly,
    because phi permutes the exponents."""
    m = inv.q - 1
    total = [Fraction(0)] * (m + 1)
    for k in range(1, m):
        p = system_poly(inv, k)
        for i, c in enumerate(p):
            total[i] += c
    expected = [Fraction(-(m - 1))] + [Fraction(2)] * (m - 1) + [Fraction(0)]
    return total == expected


def prime_powers_upto(n: int, minimum: int = 4) -> list[int]:
    out = []
    for q in range(max(2, minimum), n + 1):
        p = 2
        while p * p <= q:
            if q % p == 0:
                break
            p += 1
        else:
            p = q  # q prime
        m = q
        while m % p == 0:
            m //= p
        if m == 1:
            out.append(q)
    return out
