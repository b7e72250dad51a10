"""Exact partitions, q-polynomials and symmetric-function basis changes.

Partitions are plain tuples of positive integers in weakly decreasing order.
Polynomials in ``q`` carry Python integers, so every computation here is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Partition = tuple[int, ...]

MONOMIAL = "m"
ELEMENTARY = "e"
SCHUR = "s"
BASES = (MONOMIAL, ELEMENTARY, SCHUR)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple."""
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``lam`` dominates ``mu`` (every prefix sum of lam is >= that of mu)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal weights: |{tuple(lam)}| != |{tuple(mu)}|")
    a = b = 0
    for j in range(max(len(lam), len(mu))):
        a += lam[j] if j < len(lam) else 0
        b += mu[j] if j < len(mu) else 0
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. 3, 21, 111."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def multiplicities(lam: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Polynomials in q
# ---------------------------------------------------------------------------

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPolynomial:
    """Polynomial in ``q`` with integer coefficients, ascending degree.

    Instances are immutable and hashable.  The zero polynomial has no
    coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPolynomial":
        return cls([0] * degree + [c])

    # -- basic protocol ----------------------------------------------------
    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Lowest degree carrying a nonzero coefficient, or -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    # -- ring operations ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial.constant(other)
        raise TypeError(f"cannot combine QPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, d: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Integer long division; raises ArithmeticError if a quotient step is not integral."""
        d = self._coerce(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = d.coeffs[-1]
        dd = d.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            if c % lead:
                raise ArithmeticError("quotient is not integral")
            f = c // lead
            quot[k - dd] = f
            for i, x in enumerate(d.coeffs):
                rem[k - dd + i] -= f * x
        return QPolynomial(quot), QPolynomial(rem)


ZERO = QPolynomial()
ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))


def q_integer(k: int) -> QPolynomial:
    """``[k]_q = 1 + q + ... + q^(k-1)``; ``[0]_q = 0``."""
    if k < 0:
        raise ValueError("q-integers are defined here for k >= 0")
    return QPolynomial([1] * k)


def q_factorial(k: int) -> QPolynomial:
    if k < 0:
        raise ValueError("q-factorials are defined here for k >= 0")
    out = ONE
    for i in range(2, k + 1):
        out = out * q_integer(i)
    return out


def poly_is_nonnegative(p: QPolynomial) -> bool:
    return all(c >= 0 for c in p.coeffs)


def poly_is_unimodal(p: QPolynomial) -> bool:
    """Coefficients weakly rise then weakly fall between the lowest and highest nonzero degree."""
    if p.is_zero():
        return True
    window = p.coeffs[p.low_degree:]
    k = 0
    while k + 1 < len(window) and window[k] <= window[k + 1]:
        k += 1
    while k + 1 < len(window) and window[k] >= window[k + 1]:
        k += 1
    return k == len(window) - 1


def poly_is_log_concave(p: QPolynomial) -> bool:
    if p.is_zero():
        return True
    window = p.coeffs[p.low_degree:]
    return all(window[l] ** 2 >= window[l - 1] * window[l + 1] for l in range(1, len(window) - 1))


def poly_divides(d: QPolynomial, p: QPolynomial) -> bool:
    if d.is_zero():
        raise ZeroDivisionError("divisor must be nonzero")
    try:
        _, r = p.divmod(d)
    except ArithmeticError:
        return False
    return r.is_zero()


def format_poly(p: QPolynomial) -> str:
    """Ascending powers with ``q^k`` notation: ``1 + 2*q + q^2``."""
    if p.is_zero():
        return "0"
    out = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# Symmetric function expansions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymFuncExpansion:
    """Homogeneous symmetric function of degree ``degree`` in one basis.

    ``terms`` maps partitions of ``degree`` to nonzero q-polynomials.
    """

    basis: str
    degree: int
    terms: Mapping[Partition, QPolynomial] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.terms.items():
            lam = partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            c = QPolynomial._coerce(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "terms", clean)

    def __getitem__(self, lam: Sequence[int]) -> QPolynomial:
        return self.terms.get(tuple(lam), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFuncExpansion):
            return NotImplemented
        return (self.basis, self.degree, self.terms) == (other.basis, other.degree, other.terms)

    def __hash__(self):
        return hash((self.basis, self.degree, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Partition, QPolynomial]]:
        """Terms in increasing lexicographic order of the partitions."""
        return sorted(self.terms.items())

    def at_q_equals_1(self) -> "SymFuncExpansion":
        return SymFuncExpansion(self.basis, self.degree,
                                {lam: QPolynomial.constant(c(1)) for lam, c in self.terms.items()})

    def __add__(self, other: "SymFuncExpansion") -> "SymFuncExpansion":
        if (self.basis, self.degree) != (other.basis, other.degree):
            raise ValueError("can only add expansions in the same basis and degree")
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, ZERO) + c
        return SymFuncExpansion(self.basis, self.degree, terms)

    def scale(self, c) -> "SymFuncExpansion":
        return SymFuncExpansion(self.basis, self.degree, {lam: v * c for lam, v in self.terms.items()})

    def __str__(self) -> str:
        return format_expansion(self)


def format_expansion(f: SymFuncExpansion) -> str:
    """Render as e.g. ``4*e[3,2] + 12*e[4,1] + 20*e[5]``."""
    if not f.terms:
        return "0"
    pieces = []
    for lam, c in f.sorted_terms():
        basis = f"{f.basis}[{','.join(map(str, lam))}]"
        sign = 1
        if len([x for x in c.coeffs if x]) == 1 and c.coeffs[-1] < 0:
            sign, c = -1, -c
        if c == ONE:
            body = basis
        elif len([x for x in c.coeffs if x]) == 1:
            body = f"{format_poly(c)}*{basis}"
        else:
            body = f"({format_poly(c)})*{basis}"
        if not pieces:
            pieces.append(body if sign > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(pieces)


def _mul_by_elementary(f: Mapping[Partition, int], k: int) -> dict[Partition, int]:
    """Multiply an integer m-basis expansion by ``e_k = m_{1^k}``.

    The coefficient of ``m_rho`` in ``m_nu * e_k`` counts the k-subsets S of
    the positions of rho for which rho - 1_S rearranges to nu.
    """
    if not f:
        return {}
    n = sum(next(iter(f))) + k
    out: dict[Partition, int] = {}
    for rho in partitions_of(n):
        total = 0
        for S in itertools.combinations(range(len(rho)), k):
            v = list(rho)
            for i in S:
                v[i] -= 1
            nu = tuple(sorted((x for x in v if x), reverse=True))
            total += f.get(nu, 0)
        if total:
            out[rho] = total
    return out


@lru_cache(maxsize=None)
def _e_in_m(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    acc: dict[Partition, int] = {(): 1}
    for k in lam:
        acc = _mul_by_elementary(acc, k)
    return tuple(sorted(acc.items(), reverse=True))


def elementary_to_monomial(lam: Sequence[int]) -> SymFuncExpansion:
    """Monomial expansion of ``e_lam`` built from repeated products with ``e_k``."""
    lam = partition(lam)
    return SymFuncExpansion(MONOMIAL, sum(lam), dict(_e_in_m(lam)))


def _convert(f: SymFuncExpansion, target: str, column) -> SymFuncExpansion:
    # Unitriangular solve.  column(mu) returns (pivot_label, expansion of that
    # basis element in f's basis); its leading term sits on mu, every other term
    # is strictly dominated by mu, so reverse-lex order processes pivots first.
    rem = dict(f.terms)
    out: dict[Partition, QPolynomial] = {}
    for mu in partitions_of(f.degree):
        c = rem.pop(mu, None)
        if c is None or c.is_zero():
            continue
        label, col = column(mu)
        out[label] = c
        for nu, a in col:
            if nu == mu:
                continue
            nxt = rem.get(nu, ZERO) - c * a
            if nxt:
                rem[nu] = nxt
            else:
                rem.pop(nu, None)
    if rem:
        raise ArithmeticError("triangular solve left a remainder; input is not symmetric")
    return SymFuncExpansion(target, f.degree, out)


def monomial_to_elementary(f: SymFuncExpansion) -> SymFuncExpansion:
    """Rewrite an m-basis expansion in the e-basis.

    ``e_{mu'}`` has leading monomial term ``m_mu`` with coefficient 1 and all
    its other terms are dominated by ``mu``.
    """
    if f.basis != MONOMIAL:
        raise ValueError(f"expected monomial basis, got {f.basis!r}")

    def column(mu):
        lam = conjugate(mu)
        return lam, _e_in_m(lam)

    return _convert(f, ELEMENTARY, column)


def elementary_to_monomial_expansion(f: SymFuncExpansion) -> SymFuncExpansion:
    if f.basis != ELEMENTARY:
        raise ValueError(f"expected elementary basis, got {f.basis!r}")
    terms: dict[Partition, QPolynomial] = {}
    for lam, c in f.terms.items():
        for mu, a in _e_in_m(lam):
            terms[mu] = terms.get(mu, ZERO) + c * a
    return SymFuncExpansion(MONOMIAL, f.degree, terms)


@lru_cache(maxsize=None)
def _s_in_e(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(lam)
    lc = conjugate(lam)
    size = len(lc)
    out: dict[Partition, int] = {}

    # permutation expansion of det(e_{lc[i] - i + j}), skipping zero entries
    def expand(i: int, used: int, sign: int, parts: list[int]):
        if i == size:
            key = tuple(sorted((p for p in parts if p), reverse=True))
            out[key] = out.get(key, 0) + sign
            return
        inversions_after = 0
        for j in range(size - 1, -1, -1):
            if used >> j & 1:
                inversions_after += 1
                continue
            k = lc[i] - i + j
            if 0 <= k <= n:
                parts.append(k)
                # crossing count: used columns to the right of j
                expand(i + 1, used | 1 << j, -sign if inversions_after % 2 else sign, parts)
                parts.pop()
        return

    expand(0, 0, 1, [])
    return tuple(sorted(((k, v) for k, v in out.items() if v), reverse=True))


def schur_to_elementary(lam: Sequence[int]) -> SymFuncExpansion:
    """Signed e-expansion of ``s_lam`` from the dual Jacobi-Trudi determinant."""
    lam = partition(lam)
    return SymFuncExpansion(ELEMENTARY, sum(lam), dict(_s_in_e(lam)))


@lru_cache(maxsize=None)
def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    Counts chains of horizontal strips: the cells holding i form a horizontal
    strip of size mu_i.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0

    @lru_cache(maxsize=None)
    def count(shape: Partition, i: int) -> int:
        # shape is the current outer shape after placing entries 1..i
        if i == len(mu):
            return 1 if shape == lam else 0
        total = 0
        for nxt in _horizontal_strips(shape, mu[i], lam):
            total += count(nxt, i + 1)
        return total

    return count((), 0)


def _horizontal_strips(shape: Partition, size: int, bound: Partition):
    """Shapes nu inside ``bound`` with nu/shape a horizontal strip of ``size`` cells."""
    rows = len(bound)
    cur = list(shape) + [0] * (rows - len(shape))

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        # horizontal strip: row r may grow up to the old length of row r-1
        cap = bound[r] if r == 0 else min(bound[r], cur[r - 1])
        for add in range(min(left, cap - cur[r]), -1, -1):
            acc.append(cur[r] + add)
            yield from rec(r + 1, left - add, acc)
            acc.pop()

    if len(shape) > rows:
        return
    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def _s_in_m(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for mu in partitions_of(sum(lam)):
        k = kostka_number(lam, mu)
        if k:
            out.append((mu, k))
    return tuple(out)


def schur_to_monomial(lam: Sequence[int]) -> SymFuncExpansion:
    """Monomial expansion of ``s_lam`` via Kostka numbers."""
    lam = partition(lam)
    return SymFuncExpansion(MONOMIAL, sum(lam), dict(_s_in_m(lam)))


def monomial_to_schur(f: SymFuncExpansion) -> SymFuncExpansion:
    if f.basis != MONOMIAL:
        raise ValueError(f"expected monomial basis, got {f.basis!r}")
    return _convert(f, SCHUR, lambda mu: (mu, _s_in_m(mu)))


def to_basis(f: SymFuncExpansion, basis: str) -> SymFuncExpansion:
    """Convert between the supported bases, routing through the monomial basis."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if f.basis == basis:
        return f
    if f.basis == ELEMENTARY:
        m = elementary_to_monomial_expansion(f)
    elif f.basis == SCHUR:
        if basis == ELEMENTARY:
            out = SymFuncExpansion(ELEMENTARY, f.degree)
            for lam, c in f.terms.items():
                out = out + schur_to_elementary(lam).scale(c)
            return out
        m = SymFuncExpansion(MONOMIAL, f.degree)
        for lam, c in f.terms.items():
            m = m + schur_to_monomial(lam).scale(c)
    else:
        m = f
    if basis == MONOMIAL:
        return m
    if basis == ELEMENTARY:
        return monomial_to_elementary(m)
    return monomial_to_schur(m)


# ---------------------------------------------------------------------------
# JSON encodings
# ---------------------------------------------------------------------------

def poly_to_json(p: QPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_json(data: Sequence[str | int]) -> QPolynomial:
    return QPolynomial(int(c) for c in data)


def expansion_to_json(f: SymFuncExpansion) -> dict:
    return {
        "basis": f.basis,
        "degree": f.degree,
        "terms": [{"partition": list(lam), "poly": poly_to_json(c)} for lam, c in f.sorted_terms()],
    }


def expansion_from_json(data: Mapping) -> SymFuncExpansion:
    terms = {}
    for t in data["terms"]:
        lam = partition(t["partition"])
        if lam in terms:
            raise ValueError(f"duplicate partition {lam} in expansion")
        terms[lam] = poly_from_json(t["poly"])
    return SymFuncExpansion(data["basis"], int(data["degree"]), terms)
