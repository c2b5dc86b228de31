"""Integral lattices, their sublattices, discriminant groups and overlattices."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .intlin import Matrix, ShapeError, det, hnf, kernel_basis, rank, snf, solve_integral, vecmat

__all__ = [
    "Lattice",
    "Overlattice",
    "Sublattice",
    "DiscriminantGroup",
    "LatticeError",
    "GlueError",
    "U",
    "E8",
    "K3_LATTICE",
    "inner",
    "twist",
    "direct_sum",
    "saturation",
    "is_primitive",
    "orthogonal_complement",
    "discriminant_group",
    "dual_order_and_norm",
    "glue",
    "signature",
    "is_even",
    "gram_of_sublattice",
    "primitive_sign",
    "content",
]


class LatticeError(ValueError):
    pass


class GlueError(LatticeError):
    """The glue vectors do not generate an integral overlattice."""


@dataclass(frozen=True)
class Lattice:
    gram: Matrix

    def __post_init__(self):
        g = self.gram if isinstance(self.gram, Matrix) else Matrix(self.gram)
        object.__setattr__(self, "gram", g)
        if not g.is_square():
            raise ShapeError(f"Gram matrix must be square, got {g.shape}")
        if not g.is_integral():
            raise LatticeError("Gram matrix must be integral")
        if not g.is_symmetric():
            raise LatticeError("Gram matrix must be symmetric")
        if det(g) == 0:
            raise LatticeError("degenerate Gram matrix")

    @property
    def rank(self) -> int:
        return self.gram.nrows

    @property
    def det(self) -> int:
        return det(self.gram)

    def inner(self, x, y):
        return inner(self, x, y)

    def norm(self, x):
        return inner(self, x, x)

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [[_int_to_json(x) for x in row] for row in self.gram]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, obj) -> "Lattice":
        if isinstance(obj, str):
            obj = json.loads(obj)
        gram = [[int(x) for x in row] for row in obj["gram"]]
        if len(gram) != obj["rank"]:
            raise LatticeError(f"rank {obj['rank']} does not match a {len(gram)}-row Gram matrix")
        return cls(Matrix(gram, obj["rank"]))


def _int_to_json(x: int):
    # integers beyond 64 bits travel as decimal strings
    return str(x) if not -(2**63) <= x < 2**63 else x


@dataclass(frozen=True)
class Overlattice(Lattice):
    """A lattice produced by gluing, remembering its basis.

    ``basis`` rows are rational coordinates in the rational span of the
    direct sum that was glued; ``index`` is the index of that direct sum.
    """

    basis: Matrix = field(default=None, compare=False)
    index: int = field(default=1, compare=False)


@dataclass(frozen=True, eq=False)
class Sublattice:
    """Sublattice of ``ambient`` spanned by the rows of ``basis``.

    Equality compares the spanned module (via the Hermite normal form), so two
    different bases of the same sublattice compare equal.
    """

    ambient: Lattice
    basis: Matrix

    def __post_init__(self):
        b = self.basis if isinstance(self.basis, Matrix) else Matrix(self.basis, self.ambient.rank)
        object.__setattr__(self, "basis", b)
        if b.ncols != self.ambient.rank:
            raise ShapeError(f"basis vectors have length {b.ncols}, ambient rank is {self.ambient.rank}")
        if not b.is_integral():
            raise LatticeError("sublattice generators must be integral")
        if rank(b) != b.nrows:
            raise LatticeError("sublattice basis is linearly dependent")

    @property
    def rank(self) -> int:
        return self.basis.nrows

    def canonical(self) -> Matrix:
        return hnf(self.basis)[0] if self.basis.nrows else self.basis

    def gram(self) -> Matrix:
        return self.basis @ self.ambient.gram @ self.basis.T

    def contains(self, x: Sequence[int]) -> bool:
        return solve_integral(self.basis, x) is not None if self.rank else not any(x)

    def __eq__(self, other):
        if not isinstance(other, Sublattice):
            return NotImplemented
        return self.ambient == other.ambient and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.ambient, self.canonical()))


@dataclass(frozen=True)
class DiscriminantGroup:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1


def _U() -> Lattice:
    return Lattice(Matrix([[0, 1], [1, 0]]))


def _E8() -> Lattice:
    # Cartan matrix of E8, Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
    edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
    g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return Lattice(Matrix(g))


U = _U()
E8 = _E8()


def _as_vector(x) -> tuple:
    return tuple(x)


def inner(L: Lattice, x: Sequence, y: Sequence):
    """Bilinear form ``x^T G y`` on rational coordinate vectors."""
    if len(x) != L.rank or len(y) != L.rank:
        raise ShapeError(f"vectors of length {len(x)}, {len(y)} in a rank {L.rank} lattice")
    gy = vecmat(_as_vector(y), L.gram)
    return sum(a * b for a, b in zip(x, gy))


def twist(L: Lattice, s: int) -> Lattice:
    """The lattice ``L(s)``: same module, form multiplied by ``s``."""
    if s == 0:
        raise LatticeError("twist by zero gives a degenerate form")
    return Lattice(L.gram.scale(s))


def direct_sum(*lattices: Lattice) -> Lattice:
    return Lattice(Matrix.block_diag(*(L.gram for L in lattices)))


K3_LATTICE = direct_sum(U, U, U, twist(E8, -1), twist(E8, -1))


def saturation(S: Sublattice) -> Sublattice:
    """The primitive closure ``(Q S) ∩ ambient``, basis in HNF."""
    n = S.ambient.rank
    if S.rank == 0:
        return S
    right_kernel = kernel_basis(S.basis.T)
    if right_kernel.nrows == 0:
        sat = Matrix.identity(n)
    else:
        sat = kernel_basis(right_kernel.T)
    return Sublattice(S.ambient, sat)


def is_primitive(S: Sublattice) -> bool:
    return saturation(S) == S


def orthogonal_complement(S: Sublattice) -> Sublattice:
    """All ambient vectors orthogonal to ``S``; always primitive."""
    n = S.ambient.rank
    if S.rank == 0:
        return Sublattice(S.ambient, Matrix.identity(n))
    pairing = S.ambient.gram @ S.basis.T
    return Sublattice(S.ambient, kernel_basis(pairing))


def discriminant_group(L: Lattice) -> DiscriminantGroup:
    d, _, _ = snf(L.gram)
    factors = tuple(d[i, i] for i in range(L.rank) if d[i, i] > 1)
    return DiscriminantGroup(factors)


def dual_order_and_norm(L: Lattice, w: Sequence) -> tuple[int, Fraction]:
    """Order of ``w`` in ``L*/L`` and its norm; ``w`` must lie in the dual."""
    pairings = vecmat(tuple(w), L.gram)
    if any(Fraction(p).denominator != 1 for p in pairings):
        raise LatticeError(f"{tuple(w)} is not in the dual lattice")
    order = lcm(*(Fraction(x).denominator for x in w)) if len(w) else 1
    return order, Fraction(inner(L, w, w))


def glue(L1: Lattice, L2: Lattice, glue_vectors: Sequence[tuple[Sequence, Sequence]]) -> Overlattice:
    """Overlattice of ``L1 ⊕ L2`` generated by the given glue vector pairs."""
    base = direct_sum(L1, L2)
    n = base.rank
    gens = [tuple(Fraction(x) for x in w1) + tuple(Fraction(x) for x in w2) for w1, w2 in glue_vectors]
    for (w1, w2) in glue_vectors:
        if len(w1) != L1.rank or len(w2) != L2.rank:
            raise ShapeError("glue vector components do not match the lattice ranks")
        for L, w in ((L1, w1), (L2, w2)):
            if any(Fraction(p).denominator != 1 for p in vecmat(tuple(w), L.gram)):
                raise GlueError(f"glue component {tuple(w)} is not in the dual lattice")
    if not gens:
        return Overlattice(base.gram, basis=Matrix.identity(n), index=1)
    generators = Matrix.vstack(Matrix.identity(n), Matrix(gens, n))
    d = generators.denominator()
    h, _ = hnf(generators.scale(d))
    basis = Matrix((tuple(Fraction(x, d) for x in h[i]) for i in range(n)), n)
    gram = basis @ base.gram @ basis.T
    if not gram.is_integral():
        raise GlueError("glued lattice is not integral")
    index = int(1 / abs(det(basis)))
    return Overlattice(gram, basis=basis, index=index)


def signature(L: Lattice) -> tuple[int, int]:
    """Exact inertia ``(positives, negatives)`` by congruence diagonalisation over Q."""
    a = [[Fraction(x) for x in row] for row in L.gram]
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                break  # remaining block is zero (degenerate part)
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal entry 2 a_ij
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for row in a:
                row[i] += row[j]
            k = i
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        a = [[a[i][j] - a[i][k] * a[k][j] / p for j in rest] for i in rest]
    return pos, neg


def is_even(L: Lattice) -> bool:
    return all(L.gram[i, i] % 2 == 0 for i in range(L.rank))


def gram_of_sublattice(S: Sublattice) -> Lattice:
    return Lattice(Matrix(S.gram().rows, S.rank))


def primitive_sign(x: Sequence[int]) -> tuple[int, ...]:
    """Flip ``x`` so that its first nonzero entry is positive."""
    for e in x:
        if e:
            return tuple(x) if e > 0 else tuple(-c for c in x)
    return tuple(x)


def content(x: Sequence[int]) -> int:
    g = 0
    for e in x:
        g = gcd(g, e)
    return g
