"""Univariate polynomials over the rationals with Sturm-sequence root isolation."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InvalidParameter, NoRealRoot


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)  # exact binary value
    return Fraction(x)


class Polynomial:
    """Exact polynomial; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-a for a in self.coeffs])

    def __repr__(self) -> str:
        return f"Polynomial({[str(a) for a in self.coeffs]})"

    def derivative(self) -> "Polynomial":
        return Polynomial([k * a for k, a in enumerate(self.coeffs)][1:])

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        while len(rem) - 1 >= dq and any(rem):
            shift = len(rem) - 1 - dq
            f = rem[-1] / lead
            quot[shift] = f
            for k, b in enumerate(other.coeffs):
                rem[shift + k] -= f * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quot), Polynomial(rem)


def poly_eval(poly: Polynomial, t) -> Fraction:
    return poly(t)


def sturm_sequence(poly: Polynomial) -> list:
    seq = [poly, poly.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        _, r = seq[-2].divmod(seq[-1])
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _variations(seq, x: Fraction) -> int:
    signs = [v for v in (s(x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def root_bound(poly: Polynomial) -> Fraction:
    """Cauchy bound: every real root lies in ``(-B, B)``."""
    lead = abs(poly.coeffs[-1])
    return 1 + max(abs(a) / lead for a in poly.coeffs[:-1]) if poly.degree > 0 else Fraction(1)


def count_roots(poly: Polynomial, lo, hi, seq=None) -> int:
    """Distinct real roots in the half-open interval ``(lo, hi]``."""
    seq = seq or sturm_sequence(poly)
    return _variations(seq, _frac(lo)) - _variations(seq, _frac(hi))


def isolate_real_roots(poly: Polynomial) -> list:
    """Disjoint intervals ``(lo, hi]``, ascending, each holding exactly one distinct root."""
    if poly.degree < 1:
        return []
    seq = sturm_sequence(poly)
    b = root_bound(poly)
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(poly, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def refine_root(poly: Polynomial, lo, hi, tol, seq=None) -> tuple:
    """Shrink an isolating interval ``(lo, hi]`` below width ``tol``."""
    seq = seq or sturm_sequence(poly)
    lo, hi = _frac(lo), _frac(hi)
    tol = _frac(tol)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if count_roots(poly, mid, hi, seq):
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_real_root(poly: Polynomial, tol: float = 1e-12) -> float:
    """Largest real root, isolated by Sturm counts and refined to width ``tol``."""
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    roots = isolate_real_roots(poly)
    if not roots:
        raise NoRealRoot(f"{poly!r} has no real root")
    lo, hi = refine_root(poly, *roots[-1], tol)
    return float((lo + hi) / 2)


def real_roots(poly: Polynomial, tol: float = 1e-12) -> list:
    seq = sturm_sequence(poly)
    return [float(sum(refine_root(poly, lo, hi, tol, seq)) / 2) for lo, hi in isolate_real_roots(poly)]
