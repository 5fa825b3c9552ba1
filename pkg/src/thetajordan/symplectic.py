"""The commutator pairing on pairs (element, character) and the structural
abelian-index bound.

For a base group K of order m, points are pairs p = (k, l) with k in K and
l a character.  The exponent pairing

    e((k, l), (k', l')) = <l', k> - <l, k'>   (mod m)

is exactly the central exponent of the theta-group commutator of any two
lifts of p and p'.  Abelian subgroups upstairs that contain the center
correspond to isotropic subgroups down here, maximal isotropic subgroups
have order m, and therefore the maximal abelian order is m * m and the
minimal abelian index is exactly m.  That closed form is the structural
route; the brute-force route enumerates subgroups of the pairing space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import CapExceeded, Coords, ENUMERATION_CAP, FiniteAbelianGroup
from .lattice import ConcreteGroup, DEFAULT_ORACLE_CAP, all_subgroups

Point = tuple[Coords, Coords]


@dataclass(frozen=True)
class PairingSpace:
    """The group K + K^ of (element, character) pairs with its pairing."""

    base: FiniteAbelianGroup

    @property
    def m(self) -> int:
        return self.base.order

    @property
    def order(self) -> int:
        return self.base.order ** 2

    def zero(self) -> Point:
        z = self.base.zero()
        return (z, z)

    def add(self, p: Point, q: Point) -> Point:
        return (self.base.add(p[0], q[0]), self.base.add(p[1], q[1]))

    def neg(self, p: Point) -> Point:
        return (self.base.neg(p[0]), self.base.neg(p[1]))

    def pairing(self, p: Point, q: Point) -> int:
        """Antisymmetric, bilinear, nondegenerate exponent pairing mod m."""
        k, l = p
        k2, l2 = q
        m = self.m
        return (self.base.evaluate(l2, k, m) - self.base.evaluate(l, k2, m)) % m

    def points(self, cap: int = ENUMERATION_CAP) -> list[Point]:
        """All |K|^2 points, element-major lexicographic; zero comes first."""
        if self.order > cap:
            raise CapExceeded(
                f"pairing space of order {self.order} exceeds the cap {cap}"
            )
        els = self.base.elements(cap)
        return [(k, l) for k in els for l in els]

    def index(self, p: Point) -> int:
        fs = self.base.invariant_factors
        self.base.check_element(p[0])
        self.base.check_element(p[1])
        idx = 0
        for c, d in zip(p[0] + p[1], fs + fs):
            idx = idx * d + c
        return idx

    def point(self, idx: int) -> Point:
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range 0..{self.order - 1}")
        fs = self.base.invariant_factors
        rev = []
        for d in reversed(fs + fs):
            rev.append(idx % d)
            idx //= d
        coords = tuple(reversed(rev))
        r = len(fs)
        return (coords[:r], coords[r:])

    def to_concrete(self, cap: int = ENUMERATION_CAP) -> ConcreteGroup:
        """The additive group of the space as an explicit table."""
        pts = self.points(cap)
        pos = {p: i for i, p in enumerate(pts)}
        table = [[pos[self.add(p, q)] for q in pts] for p in pts]
        return ConcreteGroup(table, identity=0, describe=lambda i: str(pts[i]))


def pairing_space(base: FiniteAbelianGroup) -> PairingSpace:
    return PairingSpace(base)


def comm_pairing(space: PairingSpace, p: Point, q: Point) -> int:
    """Exponent of the central commutator of any lifts of p and q."""
    return space.pairing(p, q)


def is_isotropic(space: PairingSpace, points) -> bool:
    """Whether the pairing vanishes identically on a subgroup of the space.

    The input must be closed under addition (a subgroup); otherwise
    ValueError is raised.
    """
    pts = list(points)
    pset = set(pts)
    if space.zero() not in pset:
        raise ValueError("not a subgroup: the zero point is missing")
    for p in pts:
        for q in pts:
            if space.add(p, q) not in pset:
                raise ValueError(f"not closed under addition: {p} + {q} missing")
    return all(space.pairing(p, q) == 0 for p in pts for q in pts)


def max_isotropic_order(space: PairingSpace, method: str = "both",
                        cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Maximal order of an isotropic subgroup of the pairing space.

    'brute' enumerates every subgroup of the space and filters; 'structural'
    returns the closed form |K|; 'both' (default) runs the brute force when
    the space fits under the cap, checks it against the closed form, and
    falls back to the closed form above the cap.
    """
    structural = space.base.order
    if method == "structural":
        return structural
    if method not in ("brute", "both"):
        raise ValueError(f"unknown method {method!r}")
    if space.order > cap:
        if method == "brute":
            raise CapExceeded(
                f"pairing space of order {space.order} exceeds the cap {cap}"
            )
        return structural
    concrete = space.to_concrete(cap)
    pts = [space.point(i) for i in range(space.order)]
    ptab = [[space.pairing(p, q) for q in pts] for p in pts]
    best = 1
    for sub in all_subgroups(concrete, cap):
        ms = sub.members
        if sub.order > best and all(ptab[i][j] == 0 for i in ms for j in ms):
            best = sub.order
    if method == "both" and best != structural:
        raise RuntimeError(
            f"brute-force isotropic maximum {best} disagrees with the "
            f"structural value {structural}"
        )
    return best


def structural_min_abelian_index(base: FiniteAbelianGroup) -> int:
    """Exact minimal abelian-subgroup index of the theta group over this base.

    Upper-bounds: an abelian subgroup maps to an isotropic subgroup of the
    pairing space, so its order is at most m * m, giving index at least
    m^3 / m^2 = m.  Exactness: the preimage of K + {trivial character} is
    abelian of order m^2.  Hence the index is exactly |K|.
    """
    return base.order
