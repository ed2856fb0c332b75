"""Weight lattices of finite abelian group actions and their points.

A diagonal action of a finite abelian group on C^r is encoded by the lattice
generated by Z^r together with one rational vector weights/order per cyclic
factor.  Every point of that lattice has a common denominator, so points are
stored as integer numerator tuples over the lattice denominator; this keeps
all arithmetic exact and all points hashable.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from . import linalg


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A lattice point as numerators over a fixed denominator."""

    nums: tuple[int, ...]
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")

    @property
    def dim(self) -> int:
        return len(self.nums)

    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def coordinate_sum(self) -> Fraction:
        return Fraction(sum(self.nums), self.den)

    def rescaled(self, den: int) -> "LatticePoint":
        if den % self.den:
            raise ValueError("incompatible denominator")
        f = den // self.den
        return LatticePoint(tuple(n * f for n in self.nums), den)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        d = lcm(self.den, other.den)
        a, b = self.rescaled(d), other.rescaled(d)
        return LatticePoint(tuple(x + y for x, y in zip(a.nums, b.nums)), d)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        d = lcm(self.den, other.den)
        a, b = self.rescaled(d), other.rescaled(d)
        return LatticePoint(tuple(x - y for x, y in zip(a.nums, b.nums)), d)

    def is_zero(self) -> bool:
        return all(n == 0 for n in self.nums)

    def is_nonnegative(self) -> bool:
        return all(n >= 0 for n in self.nums)


@dataclass(frozen=True)
class WeightLattice:
    """The lattice Z^r extended by weights alpha_k / l_k, one per factor."""

    dim: int
    factors: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        for order, weights in self.factors:
            if order < 2:
                raise ValueError("factor order must be >= 2")
            if len(weights) != self.dim:
                raise ValueError("weight vector length must match dimension")

    @staticmethod
    def standard(dim: int) -> "WeightLattice":
        return WeightLattice(dim, ())

    @staticmethod
    def cyclic(order: int, weights) -> "WeightLattice":
        return WeightLattice(len(tuple(weights)), ((order, tuple(weights)),))

    @cached_property
    def den(self) -> int:
        d = 1
        for order, _ in self.factors:
            d = lcm(d, order)
        return d

    @cached_property
    def residues(self) -> frozenset[tuple[int, ...]]:
        """Numerator tuples (over den) of the group elements in [0,1)^r."""
        d = self.den
        zero = (0,) * self.dim
        gens = []
        for order, weights in self.factors:
            step = d // order
            gens.append(tuple((w * step) % d for w in weights))
        seen = {zero}
        frontier = [zero]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((a + b) % d for a, b in zip(cur, g))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return frozenset(seen)

    @property
    def group_order(self) -> int:
        return len(self.residues)

    def determinant(self) -> Fraction:
        """Covolume of the lattice: 1 / group order."""
        return Fraction(1, self.group_order)

    def point(self, nums, den: int | None = None) -> LatticePoint:
        """Build a point over the lattice denominator, checking membership."""
        den = self.den if den is None else den
        p = LatticePoint(tuple(nums), den).rescaled(lcm(den, self.den))
        if p.den != self.den:
            # den may exceed self.den only if every numerator is divisible
            f = p.den // self.den
            if any(n % f for n in p.nums):
                raise ValueError(f"{nums}/{den} is not a lattice point")
            p = LatticePoint(tuple(n // f for n in p.nums), self.den)
        if not self.contains(p):
            raise ValueError(f"{nums}/{den} is not a lattice point")
        return p

    def unit(self, i: int) -> LatticePoint:
        nums = [0] * self.dim
        nums[i] = self.den
        return LatticePoint(tuple(nums), self.den)

    def units(self) -> list[LatticePoint]:
        return [self.unit(i) for i in range(self.dim)]

    def contains(self, p: LatticePoint) -> bool:
        if p.dim != self.dim:
            return False
        if self.den % p.den:
            q = lcm(p.den, self.den)
            f = q // self.den
            scaled = p.rescaled(q)
            if any(n % f for n in scaled.nums):
                return False
            p = LatticePoint(tuple(n // f for n in scaled.nums), self.den)
        else:
            p = p.rescaled(self.den)
        return tuple(n % self.den for n in p.nums) in self.residues

    def is_primitive(self, p: LatticePoint) -> bool:
        p = p.rescaled(self.den)
        if p.is_zero():
            return False
        g = linalg.content(list(p.nums))
        for q in _prime_divisors(g):
            if self.contains(LatticePoint(tuple(n // q for n in p.nums), self.den)):
                return False
        return True

    def primitive(self, p: LatticePoint) -> LatticePoint:
        """The primitive lattice point on the ray through p."""
        p = p.rescaled(self.den)
        if p.is_zero():
            raise ValueError("zero vector has no primitive representative")
        g = linalg.content(list(p.nums))
        best = 1
        for d in _divisors(g):
            if d > best and self.contains(
                LatticePoint(tuple(n // d for n in p.nums), self.den)
            ):
                best = d
        return LatticePoint(tuple(n // best for n in p.nums), self.den)

    @cached_property
    def basis(self) -> list[list[Fraction]]:
        """Rows form a Z-basis of the lattice."""
        rows = [[self.den if i == j else 0 for j in range(self.dim)] for i in range(self.dim)]
        for res in sorted(self.residues):
            rows.append(list(res))
        h, _ = linalg.hnf(rows)
        out = [r for r in h if any(x != 0 for x in r)]
        if len(out) != self.dim:
            raise ValueError("degenerate lattice")
        return [[Fraction(x, self.den) for x in row] for row in out]

    @cached_property
    def _basis_inverse(self) -> list[list[Fraction]]:
        n = self.dim
        cols = []
        for j in range(n):
            e = [Fraction(int(i == j)) for i in range(n)]
            cols.append(linalg.solve(self.basis, e))
        # inverse of the row-basis matrix; coordinates(p) computes p . inverse
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def coordinates(self, p: LatticePoint) -> tuple[int, ...]:
        """Integer coordinates of p with respect to self.basis."""
        p = p.rescaled(self.den)
        vec = p.fractions()
        inv = self._basis_inverse
        coords = []
        for j in range(self.dim):
            c = sum(vec[i] * inv[i][j] for i in range(self.dim))
            if c.denominator != 1:
                raise ValueError("point is not in the lattice")
            coords.append(int(c))
        return tuple(coords)

    def dual_primitive_scale(self, m: tuple[int, ...]) -> int:
        """Smallest c >= 1 with c*m in the dual lattice (m integral, primitive in Z^r)."""
        c = 1
        for order, weights in self.factors:
            pairing = sum(mi * wi for mi, wi in zip(m, weights)) % order
            c = lcm(c, order // gcd(pairing, order))
        return c

    def in_dual(self, m: tuple[int, ...]) -> bool:
        for order, weights in self.factors:
            if sum(mi * wi for mi, wi in zip(m, weights)) % order:
                return False
        return True


def _prime_divisors(n: int):
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % p == 0:
            yield p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        yield n


def _divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))
