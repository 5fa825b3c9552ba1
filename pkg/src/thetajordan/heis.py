"""Finite theta groups over a finite abelian base.

For a base group K of order m, the theta group lives on triples (a, k, l)
where a is a root-of-unity exponent mod m, k is an element of K and l a
character of K, with the multiplication

    (a, k, l) * (a', k', l') = (a + a' + <l', k>, k + k', l + l')

written additively on exponents; <l', k> is the evaluation exponent of the
character l' at k.  The center is the exponent factor {(a, 0, 0)} and every
commutator lands in it, which is what the whole abelian-index analysis
hangs on.

All values are immutable and all operations are pure functions, so shared
group descriptions are safe to use concurrently.
"""

from __future__ import annotations

from typing import NamedTuple

from .abelian import (
    CapExceeded,
    Coords,
    ENUMERATION_CAP,
    FiniteAbelianGroup,
)
from .lattice import ConcreteGroup, Subgroup


class ThetaElement(NamedTuple):
    a: int
    k: Coords
    l: Coords


class ThetaGroup:
    """The group of order m^3 on triples (a, k, l), m = |K|."""

    def __init__(self, base: FiniteAbelianGroup):
        self.base = base
        self.m = base.order
        self.order = self.m ** 3

    def __eq__(self, other) -> bool:
        return isinstance(other, ThetaGroup) and other.base == self.base

    def __hash__(self) -> int:
        return hash(("ThetaGroup", self.base))

    def __repr__(self) -> str:
        return f"ThetaGroup({self.base.spec_string()})"

    def identity(self) -> ThetaElement:
        return ThetaElement(0, self.base.zero(), self.base.zero())

    def check_element(self, g: ThetaElement) -> None:
        if not isinstance(g, ThetaElement):
            raise ValueError(f"{g!r} is not a ThetaElement")
        if not 0 <= g.a < self.m:
            raise ValueError(f"central exponent {g.a} out of range mod {self.m}")
        self.base.check_element(g.k)
        self.base.check_element(g.l)

    def mul(self, g: ThetaElement, h: ThetaElement) -> ThetaElement:
        self.check_element(g)
        self.check_element(h)
        twist = self.base.evaluate(h.l, g.k, self.m)
        return ThetaElement(
            (g.a + h.a + twist) % self.m,
            self.base.add(g.k, h.k),
            self.base.add(g.l, h.l),
        )

    def inv(self, g: ThetaElement) -> ThetaElement:
        """Closed-form inverse (-a + <l, k>, -k, -l)."""
        self.check_element(g)
        twist = self.base.evaluate(g.l, g.k, self.m)
        return ThetaElement((twist - g.a) % self.m, self.base.neg(g.k), self.base.neg(g.l))

    def commutator(self, g: ThetaElement, h: ThetaElement) -> ThetaElement:
        """g h g^-1 h^-1, computed two ways that must agree.

        The definitional product is checked against the closed form
        (<h.l, g.k> - <g.l, h.k>, 0, 0); a mismatch means the group law is
        broken and raises RuntimeError.  The result is always central.
        """
        direct = self.mul(self.mul(g, h), self.inv(self.mul(h, g)))
        twist = (
            self.base.evaluate(h.l, g.k, self.m)
            - self.base.evaluate(g.l, h.k, self.m)
        ) % self.m
        closed = ThetaElement(twist, self.base.zero(), self.base.zero())
        if direct != closed:
            raise RuntimeError(
                f"commutator mismatch: definitional {direct} vs closed form {closed}"
            )
        return direct

    def element_order(self, g: ThetaElement) -> int:
        """Least t >= 1 with g^t = identity (costs t multiplications)."""
        self.check_element(g)
        e = self.identity()
        x = g
        t = 1
        while x != e:
            x = self.mul(x, g)
            t += 1
        return t

    def index(self, g: ThetaElement) -> int:
        """Mixed-radix rank of (a, k, l), a most significant; identity -> 0."""
        self.check_element(g)
        fs = self.base.invariant_factors
        idx = g.a
        for c, d in zip(g.k, fs):
            idx = idx * d + c
        for c, d in zip(g.l, fs):
            idx = idx * d + c
        return idx

    def element(self, idx: int) -> ThetaElement:
        """Inverse of index()."""
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range 0..{self.order - 1}")
        fs = self.base.invariant_factors
        rev = []
        for d in reversed(fs + fs):
            rev.append(idx % d)
            idx //= d
        coords = tuple(reversed(rev))
        r = len(fs)
        return ThetaElement(idx, coords[:r], coords[r:])

    def elements(self, cap: int = ENUMERATION_CAP) -> list[ThetaElement]:
        """All elements in index order."""
        if self.order > cap:
            raise CapExceeded(
                f"theta group of order {self.order} exceeds the enumeration cap {cap}"
            )
        ks = self.base.elements(cap)
        return [ThetaElement(a, k, l) for a in range(self.m) for k in ks for l in ks]

    def generators(self) -> list[ThetaElement]:
        """Central exponent 1 plus the base and character unit vectors."""
        zero = self.base.zero()
        out = []
        if self.m > 1:
            out.append(ThetaElement(1, zero, zero))
        for i in range(self.base.rank):
            unit = tuple(1 if j == i else 0 for j in range(self.base.rank))
            out.append(ThetaElement(0, unit, zero))
            out.append(ThetaElement(0, zero, unit))
        return out

    def center(self, cap: int = ENUMERATION_CAP) -> Subgroup:
        """Elements commuting with everything, as indices.

        Commuting with the generating set is equivalent to commuting with
        the whole group; for a nontrivial base this is exactly the exponent
        factor {(a, 0, 0)}, of size m.
        """
        if self.order > cap:
            raise CapExceeded(
                f"theta group of order {self.order} exceeds the enumeration cap {cap}"
            )
        gens = self.generators()
        e = self.identity()
        members = [
            i
            for i in range(self.order)
            if all(self.commutator(self.element(i), t) == e for t in gens)
        ]
        return Subgroup(tuple(members))

    def to_concrete(self, cap: int = ENUMERATION_CAP) -> ConcreteGroup:
        """Materialize multiplication and inverse tables over element indices."""
        if self.order > cap:
            raise CapExceeded(
                f"theta group of order {self.order} exceeds the table cap {cap}"
            )
        els = self.elements(cap)
        index = self.index
        mul = self.mul
        table = [[index(mul(g, h)) for h in els] for g in els]
        inv_table = [index(self.inv(g)) for g in els]
        return ConcreteGroup(
            table,
            inv_table=inv_table,
            identity=0,
            describe=lambda i: format_element(els[i]),
        )

    def random_element(self, rng) -> ThetaElement:
        fs = self.base.invariant_factors
        return ThetaElement(
            rng.randrange(self.m),
            tuple(rng.randrange(d) for d in fs),
            tuple(rng.randrange(d) for d in fs),
        )


def theta_group(base: FiniteAbelianGroup) -> ThetaGroup:
    """Theta group of the given base; order |K|^3, identity (0, 0, 0)."""
    return ThetaGroup(base)


def format_element(g: ThetaElement) -> str:
    """Render '(a; k1,..,kr; l1,..,lr)'; parse_element is the exact inverse."""
    return "({}; {}; {})".format(
        g.a, ",".join(map(str, g.k)), ",".join(map(str, g.l))
    )


def parse_element(group: ThetaGroup, text: str) -> ThetaElement:
    """Parse the format_element rendering back into a validated element."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"element text {text!r} is not parenthesized")
    parts = s[1:-1].split(";")
    if len(parts) != 3:
        raise ValueError(f"element text {text!r} does not have three ';' fields")

    def coords(part: str) -> Coords:
        part = part.strip()
        if not part:
            return ()
        return tuple(int(tok.strip()) for tok in part.split(","))

    g = ThetaElement(int(parts[0].strip()), coords(parts[1]), coords(parts[2]))
    group.check_element(g)
    return g
