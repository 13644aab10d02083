"""Arithmetical congruence monoids: {1} together with one residue class.

M(a, b) is the multiplicative monoid {1} union {x >= 1 : x == a mod b},
which is closed under multiplication exactly when a^2 == a mod b. Atoms are
found by divisor search, and factorization sets are enumerated by recursive
descent over atom divisors in nondecreasing order (so each multiset appears
once). Elements are factored by trial division, so inputs must have small
prime factors; that holds for everything this package computes with.
"""

from __future__ import annotations

from functools import lru_cache

from . import factor as _factor
from .errors import BudgetExceededError, NotIdempotentError, NotInMonoidError

DEFAULT_ACM_CAP = 1_000_000

AcmFactorization = tuple[tuple[int, int], ...]
"""Canonical multiset of atoms: ((atom, multiplicity), ...) sorted by atom."""


def _prime_powers(x: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                e += 1
                x //= d
            out.append((d, e))
        d += 1 if d == 2 else 2
    if x > 1:
        out.append((x, 1))
    return out


def _divisors(x: int) -> list[int]:
    ds = [1]
    for p, e in _prime_powers(x):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    ds.sort()
    return ds


class Acm:
    """The monoid {1} union {x == a mod b} under multiplication."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        if a < 1 or b < 1:
            raise ValueError("need a, b >= 1")
        if (a * a - a) % b != 0:
            raise NotIdempotentError(f"{a}^2 != {a} mod {b}")
        a = a % b
        self.a = a if a else b
        self.b = b

    def contains(self, x: int) -> bool:
        if x < 1:
            raise ValueError("elements are positive integers")
        return x == 1 or x % self.b == self.a % self.b

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def is_atom(self, x: int) -> bool:
        """No divisor pair d * (x/d) with both factors non-unit members."""
        if x == 1 or not self.contains(x):
            raise NotInMonoidError(f"{x} is not a non-unit element of {self!r}")
        return _is_atom_cached(self.a, self.b, x)

    def atoms_up_to(self, limit: int) -> list[int]:
        """All atoms <= limit, ascending."""
        start = self.a if self.a > 1 else self.a + self.b
        return [x for x in range(start, limit + 1, self.b) if self.is_atom(x)]

    def factorizations(self, x: int, cap: int = DEFAULT_ACM_CAP) -> list[AcmFactorization]:
        """All multisets of atoms with product x, each in canonical form.

        x == 1 has exactly the empty factorization. Raises
        BudgetExceededError once more than cap multisets are found.
        """
        if not self.contains(x):
            raise NotInMonoidError(f"{x} is not in {self!r}")
        if x == 1:
            return [()]
        a, b = self.a, self.b
        atom_divs = [
            d
            for d in _divisors(x)
            if d > 1 and d % b == a % b and _is_atom_cached(a, b, d)
        ]
        out: list[AcmFactorization] = []

        def rec(rem: int, lo: int, acc: list[int]) -> None:
            for idx in range(lo, len(atom_divs)):
                d = atom_divs[idx]
                if d * d > rem:
                    break
                if rem % d == 0:
                    q = rem // d
                    # the cofactor splits into atoms >= d or is such an atom
                    rec(q, idx, acc + [d])
            if rem >= (acc[-1] if acc else 2) and rem > 1:
                if (rem % b == a % b) and _is_atom_cached(a, b, rem):
                    mult: list[tuple[int, int]] = []
                    for u in acc + [rem]:
                        if mult and mult[-1][0] == u:
                            mult[-1] = (u, mult[-1][1] + 1)
                        else:
                            mult.append((u, 1))
                    out.append(tuple(mult))
                    if len(out) > cap:
                        raise BudgetExceededError(f"more than {cap} factorizations of {x}")

        rec(x, 0, [])
        out.sort()
        return out

    def extremal_plength(self, x: int, p, mode: str) -> _factor.ExtremalResult:
        """Exact optimum of the p-length over all factorizations of x.

        The p-length of a multiset is that of its multiplicity vector. The
        witness is the lexicographically least canonical multiset among the
        optima; for x == 1 the value is 0 with the empty witness.
        """
        _factor.check_exponent(p)
        if mode not in ("min", "max"):
            raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
        fzs = self.factorizations(x)
        if x == 1:
            return _factor.ExtremalResult(0, ())
        best = None
        best_fz = None
        for fz in fzs:  # canonical ascending order fixes tie-breaking
            v = _factor.plength([m for _, m in fz], p)
            if best is None or (v < best if mode == "min" else v > best):
                best = v
                best_fz = fz
        if best is None:
            raise NotInMonoidError(f"{x} has no factorization in {self!r}")
        return _factor.ExtremalResult(best, best_fz)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    def __repr__(self) -> str:
        return f"Acm({self.a}, {self.b})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Acm) and (other.a, other.b) == (self.a, self.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))


@lru_cache(maxsize=None)
def _is_atom_cached(a: int, b: int, x: int) -> bool:
    for d in _divisors(x):
        if d * d > x:
            break
        if d > 1 and d % b == a % b and (x // d) % b == a % b:
            return False
    return True


def factorization_to_json(fz: AcmFactorization) -> list[dict]:
    return [{"atom": atom, "mult": mult} for atom, mult in fz]
