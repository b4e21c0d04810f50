"""Generalized Polynacci sequences and their relatives, over all integer indices.

Three families per order m:

  standard   U_n  = U_{n-1} + ... + U_{n-m},      starts m, 1, 3, 7, ..., 2^{m-1}-1
  reflected  U~_n = -U~_{n-1} - ... - U~_{n-m+1} + U~_{n-m},  starts m, -1, ..., -1
  inverted   U^_n, same recurrence as reflected,  starts 1, ..., 1, 1-2m

Negative indices are reached by running the recurrence backward; the backward
coefficient vector is derived from the forward one (exactly, via Fractions,
though every family here has integer backward coefficients because the lag-m
coefficient is 1). Each family keeps a two-sided cache of computed terms so
repeated queries are linear, not quadratic; cache growth is lock-protected.
"""
from __future__ import annotations

import threading
from fractions import Fraction

from .errors import NumericInstabilityError, UnsupportedOrderError
from .polymatrix import MIN_ORDER, build_inverse, build_polymatrix

__all__ = [
    "KINDS",
    "SequenceFamily",
    "family",
    "initial_conditions",
    "term_by_trace",
    "v_sequence",
    "homogeneous_sum",
    "homogeneous_sum_bruteforce",
    "homogeneous_v_relation",
]

KINDS = ("standard", "reflected", "inverted")


def _check_order(m: int) -> None:
    if m < MIN_ORDER:
        raise UnsupportedOrderError(f"order must be >= {MIN_ORDER}, got {m}")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def initial_conditions(m: int, kind: str) -> list[int]:
    """The first m terms of the given family."""
    _check_order(m)
    _check_kind(kind)
    if kind == "standard":
        return [m, 1] + [2**i - 1 for i in range(2, m)]
    if kind == "reflected":
        return [m] + [-1] * (m - 1)
    return [1] * (m - 1) + [1 - 2 * m]


def recurrence_coefficients(m: int, kind: str) -> list[int]:
    """Coefficient of the lag-j term at position j-1."""
    _check_order(m)
    _check_kind(kind)
    if kind == "standard":
        return [1] * m
    return [-1] * (m - 1) + [1]


def _backward_coefficients(coeffs: list[int]) -> list[Fraction]:
    """Backward-recurrence weights for a general lag-coefficient vector.

    Solving U_n = s_1 U_{n-1} + ... + s_m U_{n-m} for the trailing term gives
    U_{k} = -(s_{m-1}/s_m) U_{k+1} - ... - (s_1/s_m) U_{k+m-1} + (1/s_m) U_{k+m};
    position j-1 holds the weight of U_{k+j}.
    """
    m = len(coeffs)
    sm = Fraction(coeffs[-1])
    if sm == 0:
        raise ValueError("lag-m coefficient must be nonzero to run backward")
    return [-Fraction(coeffs[m - 1 - j]) / sm for j in range(1, m)] + [1 / sm]


class SequenceFamily:
    """One Polynacci-family sequence, queryable at any integer index."""

    def __init__(self, m: int, kind: str):
        _check_order(m)
        _check_kind(kind)
        self.m = m
        self.kind = kind
        self.recurrence_coeffs = tuple(recurrence_coefficients(m, kind))
        self.initial_conditions = tuple(initial_conditions(m, kind))
        self._back = _backward_coefficients(list(self.recurrence_coeffs))
        self._fwd = list(self.initial_conditions)  # indices 0, 1, 2, ...
        self._bwd: list[int] = []  # indices -1, -2, ...
        self._lock = threading.Lock()

    def _at(self, n: int) -> int:
        return self._fwd[n] if n >= 0 else self._bwd[-n - 1]

    def term(self, n: int) -> int:
        """The n-th term, for any integer n."""
        m = self.m
        if n >= 0:
            if n >= len(self._fwd):
                with self._lock:
                    while len(self._fwd) <= n:
                        k = len(self._fwd)
                        self._fwd.append(
                            sum(
                                s * self._fwd[k - 1 - j]
                                for j, s in enumerate(self.recurrence_coeffs)
                            )
                        )
            return self._fwd[n]
        if -n > len(self._bwd):
            with self._lock:
                while len(self._bwd) < -n:
                    k = -(len(self._bwd) + 1)
                    acc = Fraction(0)
                    for j, b in enumerate(self._back, start=1):
                        acc += b * self._at(k + j)
                    if acc.denominator != 1:
                        raise ArithmeticError(
                            f"backward recurrence left the integers at index {k}"
                        )
                    self._bwd.append(int(acc))
        return self._bwd[-n - 1]

    def terms(self, start: int, count: int) -> list[int]:
        return [self.term(start + i) for i in range(count)]

    def __repr__(self) -> str:
        return f"SequenceFamily(m={self.m}, kind={self.kind!r})"


def family(m: int, kind: str = "standard") -> SequenceFamily:
    return SequenceFamily(m, kind)


def term_by_trace(m: int, n: int) -> int:
    """Independent oracle: tr(A_m^n) for n >= 0, tr(B_m^{|n|}) for n < 0.

    Matches the standard family at n and the reflected family at -n.
    """
    _check_order(m)
    if n >= 0:
        return (build_polymatrix(m).matrix ** n).trace()
    return (build_inverse(m).matrix ** (-n)).trace()


def v_sequence(m: int, n: int) -> int:
    """The order-m all-ones-started recurrence V_n = V_{n-1} + ... + V_{n-m}."""
    _check_order(m)
    if n < 0:
        raise ValueError("index must be nonnegative")
    window = [1] * m
    if n < m:
        return 1
    for _ in range(m, n + 1):
        window.append(sum(window[-m:]))
    return window[-1]


def homogeneous_sum(m: int, n: int) -> int:
    """h_n of the characteristic roots, exactly, with no numeric root finding.

    Newton-Girard over the elementary symmetric values e_i = (-1)^{i+1}
    (read off the characteristic polynomial x^m - x^{m-1} - ... - 1):
    h_n = sum_{i=1..min(n,m)} (-1)^{i+1} e_i h_{n-i}.
    """
    _check_order(m)
    if n < 0:
        raise ValueError("index must be nonnegative")
    e = [(-1) ** (i + 1) for i in range(1, m + 1)]
    h = [1]
    for k in range(1, n + 1):
        h.append(
            sum((-1) ** (i + 1) * e[i - 1] * h[k - i] for i in range(1, min(k, m) + 1))
        )
    return h[n]


def _compositions(n: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first, *rest)


def homogeneous_sum_bruteforce(m: int, n: int, tol: float = 1e-6) -> int:
    """The literal nested multinomial sum over numeric root powers.

    Exists purely as an independent oracle for homogeneous_sum; the
    composition count C(n+m-1, m-1) caps the usable range.
    """
    from .roots import find_roots

    _check_order(m)
    if m > 6 or n > 12:
        raise ValueError("brute force is limited to m <= 6, n <= 12")
    if tol <= 0:
        raise ValueError("tol must be positive")
    roots = find_roots(m, tol=1e-12).roots
    powers = [[r**k for k in range(n + 1)] for r in roots]
    total = 0j
    for combo in _compositions(n, m):
        prod = 1 + 0j
        for i, exp in enumerate(combo):
            prod *= powers[i][exp]
        total += prod
    nearest = round(total.real)
    if abs(total.imag) > tol or abs(total.real - nearest) > tol:
        raise NumericInstabilityError(
            f"multinomial sum {total!r} is not within {tol} of an integer"
        )
    return nearest


def homogeneous_v_relation(m: int, max_n: int = 12) -> dict:
    """Compare h_n against V_n and V_{n+1} over n in [0, max_n].

    Informational only: reports which (if either) index relation the exact
    values actually satisfy on the checked range, with the first mismatch
    for each candidate.
    """
    _check_order(m)
    report = {"m": m, "max_n": max_n}
    for label, shift in (("v_n", 0), ("v_n_plus_1", 1)):
        mismatch = None
        for n in range(max_n + 1):
            h = homogeneous_sum(m, n)
            v = v_sequence(m, n + shift)
            if h != v:
                mismatch = {"n": n, "h": h, "v": v}
                break
        report[f"matches_{label}"] = mismatch is None
        report[f"first_mismatch_{label}"] = mismatch
    return report
