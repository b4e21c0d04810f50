"""Exact integer polynomials, rational functions, and dense integer matrices.

Everything here is built on Python's native arbitrary-precision ints and is
immutable after construction, so values can be shared freely between threads.
Polynomial coefficients are stored in ascending degree order (coefficient of
x^i at position i), which lines up with power-series indexing.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ExpansionError

__all__ = ["IntPolynomial", "RationalFunction", "IntMatrix", "poly_at_matrix"]


class IntPolynomial:
    """Integer polynomial, normalized so the last stored coefficient is nonzero.

    The zero polynomial is the empty coefficient tuple; its degree is
    undefined and operations that need a degree reject it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * power + [coeff])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        """Coefficient of x^i (0 for i beyond the stored degree)."""
        if i < 0:
            raise IndexError("negative exponent")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial(k * c for c in self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, Fraction, float, complex."""
        acc = 0 * x  # zero of the argument's type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> IntPolynomial:
        """x^deg * p(1/x): the coefficient list reversed, then renormalized.

        The roots of the result are the reciprocals of the nonzero roots of p.
        """
        if self.is_zero:
            raise ValueError("cannot reflect the zero polynomial")
        return IntPolynomial(reversed(self.coeffs))

    def derivative(self) -> IntPolynomial:
        """Formal derivative."""
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def negate_argument(self) -> IntPolynomial:
        """Substitute x -> -x, i.e. flip the sign of odd-degree coefficients."""
        return IntPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                xs = "x" if i == 1 else f"x^{i}"
                term = f"{'-' if c < 0 else ''}{mag}{xs}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


class RationalFunction:
    """Quotient of two integer polynomials, kept unreduced.

    Reduction to lowest terms is deliberately not done: the closed forms in
    scope are compared verbatim, so num/den must survive as constructed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial, den: IntPolynomial):
        if den.is_zero:
            raise ValueError("denominator must be nonzero")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def expand(self, count: int) -> list[int]:
        """First `count` power-series coefficients of num/den, exactly.

        Uses the convolution recurrence
        a_n = (num_n - sum_{k>=1} den_k * a_{n-k}) / den_0, which stays in the
        integers because den_0 is required to be +1 or -1.
        """
        if count < 0:
            raise ValueError("count must be nonnegative")
        d0 = self.den[0]
        if d0 not in (1, -1):
            raise ExpansionError(
                f"integer expansion needs denominator constant term +-1, got {d0}"
            )
        dn = self.den.coeffs
        out: list[int] = []
        for n in range(count):
            acc = self.num[n]
            for k in range(1, min(n, len(dn) - 1) + 1):
                acc -= dn[k] * out[n - k]
            out.append(acc * d0)  # divide by +-1
        return out

    def reciprocal_transform(self) -> RationalFunction:
        """(1/x) * f(1/x), normalized to den constant term +1.

        Requires deg(num) < deg(den); otherwise the substitution leaves a
        polynomial part and there is no representation here.
        """
        if self.num.is_zero:
            num, den = IntPolynomial(), self.den.reflect()
        else:
            gap = self.den.degree - self.num.degree - 1
            if gap < 0:
                raise ValueError(
                    "reciprocal transform needs deg(num) < deg(den)"
                )
            num = self.num.reflect() * IntPolynomial.monomial(gap)
            den = self.den.reflect()
        if den[0] < 0:
            num, den = -num, -den
        return RationalFunction(num, den)

    def negate_argument(self) -> RationalFunction:
        """Substitute x -> -x; coefficient n of the expansion gains (-1)^n."""
        return RationalFunction(self.num.negate_argument(), self.den.negate_argument())

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


class IntMatrix:
    """Dense square matrix over the integers; rows stored as tuples."""

    __slots__ = ("dim", "entries")

    def __init__(self, rows: Iterable[Iterable[int]]):
        entries = tuple(tuple(row) for row in rows)
        n = len(entries)
        if n == 0:
            raise ValueError("matrix must have dim >= 1")
        if any(len(row) != n for row in entries):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> IntMatrix:
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return IntMatrix(
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)
        )

    def __mul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        n = self.dim
        cols = tuple(zip(*other.entries))
        return IntMatrix(
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self.entries
        )

    def __rmul__(self, k: int) -> IntMatrix:
        if not isinstance(k, int):
            return NotImplemented
        return IntMatrix((k * x for x in row) for row in self.entries)

    def __pow__(self, n: int) -> IntMatrix:
        """Exact n-th power by binary exponentiation; n = 0 gives the identity."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        result = IntMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dim))

    def det(self) -> int:
        """Exact determinant by Bareiss fraction-free elimination.

        Every interior division is by a previous pivot and is exact (the
        intermediate entries are minors of the original matrix).
        """
        n = self.dim
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = pivot
        return sign * m[n - 1][n - 1]

    def charpoly(self) -> IntPolynomial:
        """Monic characteristic polynomial det(xI - A) via Berkowitz's algorithm.

        Division-free: only integer additions and multiplications, so the
        result is exact for any integer matrix. The coefficient of x^(n-i)
        equals (-1)^i times the sum of the order-i principal minors.
        """
        e = self.entries
        n = self.dim
        # c = descending coefficients of det(xI - leading k x k block)
        c = [1, -e[0][0]]
        for k in range(1, n):
            row = e[k][:k]
            col = [e[i][k] for i in range(k)]
            # Toeplitz column: [1, -a_kk, -(R C), -(R M C), ..., -(R M^(k-1) C)]
            items = [1, -e[k][k]]
            v = col
            for step in range(k):
                items.append(-sum(r * x for r, x in zip(row, v)))
                if step < k - 1:
                    v = [sum(e[i][j] * v[j] for j in range(k)) for i in range(k)]
            new_c = [0] * (k + 2)
            for j, cj in enumerate(c):
                for i in range(k + 2 - j):
                    new_c[i + j] += items[i] * cj
            c = new_c
        return IntPolynomial(reversed(c))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]!r})"

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(
            "[" + " ".join(str(x).rjust(width) for x in row) + "]"
            for row in self.entries
        )


def poly_at_matrix(p: IntPolynomial, a: IntMatrix) -> IntMatrix:
    """Evaluate p at a square matrix (Horner over matrices)."""
    acc = IntMatrix.zero(a.dim)
    ident = IntMatrix.identity(a.dim)
    for c in reversed(p.coeffs):
        acc = acc * a + c * ident
    return acc
