"""Exact formulas for MC(2^h) and MC(3^h).

All arithmetic is on Python ints and :class:`fractions.Fraction`; nothing
here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .distance import thresholds_base2
from .errors import ConsistencyError, DomainError


def _check(m: int, h: int, h_min: int = 1) -> None:
    if m not in (2, 3):
        raise DomainError(f"closed forms cover bases 2 and 3 only, got {m}; use diam_grc for other bases")
    if h < h_min:
        raise DomainError(f"h must be at least {h_min}, got {h}")


def regularity(m: int, h: int) -> int:
    return 2 * h - 1 if m == 2 else 2 * h


def diam_closed(m: int, h: int) -> int:
    _check(m, h)
    if m == 2:
        return h - h // 2
    return h


def diam_grc(bases) -> int:
    """Diameter of the generalised recursive circulant graph GR(m_h, ..., m_1)."""
    bases = list(bases)
    if not bases:
        raise DomainError("need at least one base")
    if any(b < 2 for b in bases):
        raise DomainError(f"every base must be at least 2, got {bases}")
    even = sum(1 for b in bases if b % 2 == 0)
    return sum(b // 2 for b in bases) - even // 2


def rho_closed(m: int, h: int) -> int:
    """Distance spectral radius, equal to the transmission of any vertex."""
    _check(m, h)
    if m == 2:
        num = 2**h * (3 * h + 1) - (-1) ** h
        q, rem = divmod(num, 9)
        if rem:
            raise ConsistencyError(f"(2^h(3h+1) - (-1)^h) not divisible by 9 at h={h}")
        return q
    return 2 * h * 3 ** (h - 1)


def rho_recursion_step(m: int, h: int, prev_rho: int) -> int:
    """rho(MC(m^h)) from rho(MC(m^(h-1)))."""
    _check(m, h, h_min=2)
    if m == 2:
        copied, _ = thresholds_base2(h - 1)
        return 2 * (prev_rho + (2 ** (h - 1) - copied)) - 1
    return 3 * prev_rho + 2 * 3 ** (h - 1)


def mu_closed(m: int, h: int) -> Fraction:
    """Average distance over ordered pairs of distinct vertices."""
    return Fraction(rho_closed(m, h), m**h - 1)


def mu_parity_form(h: int) -> Fraction:
    """Average distance of MC(2^h) from the even/odd split formula."""
    _check(2, h)
    sign = -1 if h % 2 == 0 else 1
    return Fraction(2**h * (3 * h + 1) + sign, 9 * (2**h - 1))


def mu_old_definition(m: int, h: int) -> Fraction:
    """Mean over all n^2 distance-matrix entries, zeros on the diagonal included."""
    return Fraction(rho_closed(m, h), m**h)


def mu_stojmenovic(h: int) -> Fraction:
    """Older closed form of :func:`mu_old_definition` for base 2."""
    _check(2, h)
    s = (-1) ** h
    return Fraction(h, 3) + Fraction(1, 9) + Fraction(s, 9 * 2 ** (h - 1)) - Fraction(s, 3 * 2**h)


def xi_closed(m: int, h: int) -> int:
    """Vertex-forwarding index rho - (n - 1)."""
    return rho_closed(m, h) - (m**h - 1)


def pi_bounds(m: int, h: int) -> tuple[Fraction, int]:
    """Lower and upper bound on the edge-forwarding index.

    ``2 rho / r <= pi <= n + rho - (2r - 1)`` with r the vertex degree.
    """
    _check(m, h)
    rho, r, n = rho_closed(m, h), regularity(m, h), m**h
    return Fraction(2 * rho, r), n + rho - (2 * r - 1)


# Expressions as typeset for xi(MC(3^h)) and the pi bounds. Kept for the
# discrepancy report; the functions above are the ones to use.

def xi_printed(m: int, h: int) -> int:
    _check(m, h)
    if m == 2:
        return ((3 * h + 1) * 2**h - (-1) ** h) // 9 - (2**h - 1)
    return 3 ** (h - 1) * (2**h - 3) + 1


def pi_lower_printed(m: int, h: int) -> Fraction:
    _check(m, h)
    if m == 2:
        return Fraction((3 * h + 1) * 2 ** (h + 1) - 2 * (-1) ** h, 18 * h - 9)
    return Fraction(2 * 3 ** (h - 1))


def pi_upper_printed(m: int, h: int) -> Fraction:
    _check(m, h)
    if m == 2:
        return Fraction(2**h + (3 * h + 1) * 2**h - (-1) ** h - 36 * h + 27, 9)
    return Fraction(3 ** (h - 1) * (3 + 2 * h) - 4 * h + 1)


@dataclass(frozen=True)
class Discrepancy:
    quantity: str
    m: int
    h: int
    derived: Fraction
    printed: Fraction

    @property
    def differs(self) -> bool:
        return self.derived != self.printed

    def describe(self) -> str:
        verdict = "DIFFERS" if self.differs else "agrees"
        return f"{self.quantity} m={self.m} h={self.h}: derived={self.derived} printed={self.printed} {verdict}"


def errata_report(m: int, hs) -> list[Discrepancy]:
    """Compare derived xi and pi bounds with the typeset expressions for each h."""
    out = []
    for h in hs:
        lower, upper = pi_bounds(m, h)
        out.append(Discrepancy("xi", m, h, Fraction(xi_closed(m, h)), Fraction(xi_printed(m, h))))
        out.append(Discrepancy("pi_lower", m, h, lower, pi_lower_printed(m, h)))
        out.append(Discrepancy("pi_upper", m, h, Fraction(upper), pi_upper_printed(m, h)))
    return out


def oeis_a045883(count: int) -> list[int]:
    """(2^k(3k+1) - (-1)^k)/9 for k = 0..count-1; the k = 0 term is the trivial graph."""
    if count < 1:
        raise DomainError(f"count must be at least 1, got {count}")
    return [0] + [rho_closed(2, k) for k in range(1, count)]


def oeis_a212697(count: int) -> list[int]:
    """2k 3^(k-1) for k = 1..count."""
    if count < 1:
        raise DomainError(f"count must be at least 1, got {count}")
    return [rho_closed(3, k) for k in range(1, count + 1)]


OEIS_OFFSETS = {"a045883": 0, "a212697": 1}


def oeis_terms(seq: str, count: int) -> list[tuple[int, int]]:
    seq = seq.lower()
    if seq == "a045883":
        terms = oeis_a045883(count)
    elif seq == "a212697":
        terms = oeis_a212697(count)
    else:
        raise DomainError(f"unknown sequence {seq!r}")
    start = OEIS_OFFSETS[seq]
    return [(start + i, t) for i, t in enumerate(terms)]


def format_bfile(pairs) -> str:
    return "".join(f"{k} {a}\n" for k, a in pairs)


@dataclass(frozen=True)
class ClosedFormReport:
    m: int
    h: int
    n: int
    regularity: int
    diameter: int
    rho: int
    mu: Fraction
    xi: int
    pi_lower: Fraction
    pi_upper: int
    lambda_even_dims: int


def closed_form_report(m: int, h: int) -> ClosedFormReport:
    _check(m, h)
    rho = rho_closed(m, h)
    n = m**h
    lower, upper = pi_bounds(m, h)
    report = ClosedFormReport(
        m=m, h=h, n=n, regularity=regularity(m, h), diameter=diam_closed(m, h),
        rho=rho, mu=mu_closed(m, h), xi=xi_closed(m, h),
        pi_lower=lower, pi_upper=upper, lambda_even_dims=h if m % 2 == 0 else 0,
    )
    if report.mu * (n - 1) != rho or report.xi < 0 or lower > upper:
        raise ConsistencyError(f"closed-form identities fail for m={m}, h={h}")
    return report
