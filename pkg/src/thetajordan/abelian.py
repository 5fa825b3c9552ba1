"""Exact arithmetic for finite abelian groups and their character duals.

A group is described by its invariant factors d_1 | d_2 | ... | d_r (all
at least 2; the empty chain is the trivial group).  Elements and characters
are coordinate vectors reduced modulo those factors, with characters using
the same coordinates as elements (the dual of a finite abelian group is
isomorphic to the group itself).  Character values are kept as additive
exponents of a fixed primitive m-th root of unity, so every operation here
is integer arithmetic; no floating point, no complex numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from math import gcd, prod

# Elements and characters are both plain coordinate tuples.
Coords = tuple[int, ...]
AbElement = Coords
Character = Coords

ENUMERATION_CAP = 4096


class CapExceeded(RuntimeError):
    """An operation would enumerate more elements than its cap allows."""


def _divisibility_chain(factors: list[int]) -> list[int]:
    # Replacing a pair (a, b) with (gcd, lcm) preserves the multiset of
    # prime-power components, and the fixed point of doing so is the unique
    # invariant-factor chain.  No integer factorization needed.
    fs = sorted(f for f in factors if f > 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                a, b = fs[i], fs[j]
                if a > 1 and b % a:
                    g = gcd(a, b)
                    fs[i], fs[j] = g, a * b // g
                    changed = True
        if changed:
            fs = sorted(f for f in fs if f > 1)
    return fs


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Canonical invariant-factor form of a finite abelian group."""

    invariant_factors: Coords = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for i, d in enumerate(fs):
            if d < 2:
                raise ValueError(f"invariant factor {d} is < 2")
            if i and d % fs[i - 1]:
                raise ValueError(f"factors {fs} break the divisibility chain")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def spec_string(self) -> str:
        """Render as group-spec grammar, e.g. 'Z4xZ2' ('Z1' when trivial)."""
        if not self.invariant_factors:
            return "Z1"
        return "x".join(f"Z{d}" for d in self.invariant_factors)

    def zero(self) -> AbElement:
        return (0,) * self.rank

    def check_element(self, x: Coords) -> None:
        if not isinstance(x, tuple) or len(x) != self.rank:
            raise ValueError(
                f"element {x!r} does not have {self.rank} coordinates"
            )
        for c, d in zip(x, self.invariant_factors):
            if not 0 <= c < d:
                raise ValueError(f"coordinate {c} out of range for Z_{d}")

    def add(self, x: AbElement, y: AbElement) -> AbElement:
        self.check_element(x)
        self.check_element(y)
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x: AbElement) -> AbElement:
        self.check_element(x)
        return tuple(-a % d for a, d in zip(x, self.invariant_factors))

    def elements(self, cap: int = ENUMERATION_CAP) -> list[AbElement]:
        """All elements in lexicographic coordinate order; zero comes first."""
        if self.order > cap:
            raise CapExceeded(
                f"group of order {self.order} exceeds the enumeration cap {cap}"
            )
        return list(_cartesian(*(range(d) for d in self.invariant_factors)))

    def evaluate(self, char: Character, x: AbElement, m: int | None = None) -> int:
        """Exponent e with char(x) = zeta^e for zeta = exp(2*pi*i/m).

        m defaults to the group order; every invariant factor must divide m,
        which makes the formula sum(c_i * x_i * (m / d_i)) well defined.
        The map (char, x) -> Z_m is bilinear.
        """
        self.check_element(char)
        self.check_element(x)
        if m is None:
            m = self.order
        if m < 1:
            raise ValueError(f"ambient order {m} must be >= 1")
        total = 0
        for c, a, d in zip(char, x, self.invariant_factors):
            if m % d:
                raise ValueError(f"factor {d} does not divide ambient order {m}")
            total += c * a * (m // d)
        return total % m


def make_group(cyclic_factors) -> FiniteAbelianGroup:
    """Canonical invariant-factor form of a direct sum of cyclic groups.

    Factors equal to 1 are dropped; factors below 1 are rejected.  The
    result is isomorphic to the input direct sum and idempotent under
    re-canonicalization.
    """
    factors = list(cyclic_factors)
    for f in factors:
        if not isinstance(f, int) or f < 1:
            raise ValueError(f"cyclic factor {f!r} is not a positive integer")
    return FiniteAbelianGroup(tuple(_divisibility_chain(factors)))


def parse_group_spec(text: str) -> FiniteAbelianGroup:
    """Parse the group-spec grammar: 'Z<d>' atoms joined by 'x'.

    Case-insensitive ('z4XZ2' is fine); whitespace anywhere is rejected.
    """
    if not isinstance(text, str) or not text:
        raise ValueError("empty group spec")
    if any(ch.isspace() for ch in text):
        raise ValueError(f"whitespace is not allowed in group spec {text!r}")
    factors = []
    for atom in text.lower().split("x"):
        body = atom[1:]
        if not atom.startswith("z") or not body.isdigit() or not body.isascii():
            raise ValueError(f"bad atom {atom!r} in group spec {text!r}")
        factors.append(int(body))
    return make_group(factors)


def is_pairing_nondegenerate(G: FiniteAbelianGroup, cap: int = ENUMERATION_CAP) -> bool:
    """Whether the evaluation pairing separates points on both sides.

    True for every well-formed group; exposed as a duality sanity check.
    """
    els = G.elements(cap)
    zero = G.zero()
    for x in els:
        if x != zero and all(G.evaluate(l, x) == 0 for l in els):
            return False
    for l in els:
        if l != zero and all(G.evaluate(l, x) == 0 for x in els):
            return False
    return True
