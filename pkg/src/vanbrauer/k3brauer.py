"""Two-torsion Brauer classes of a degree-two K3 surface, seen through B-fields.

A class of order two is represented by a half-integral vector ``B`` of the K3
lattice, well defined up to ``(1/2) Pic + Λ``. Its invariants ``B.h`` and
(under a congruence condition) ``B.B`` modulo one decide whether it is a point
of order two or an even/odd theta characteristic on the branch sextic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .intlin import Matrix, kernel_basis, solve_integral, vecmat
from .lattice import (
    K3_LATTICE,
    Lattice,
    LatticeError,
    Sublattice,
    content,
    inner,
    orthogonal_complement,
)

__all__ = [
    "BrauerKind",
    "BrauerClassReport",
    "BField",
    "K3Ambient",
    "lambda_vector",
    "mod1",
    "bfield_invariants",
    "bfield_equiv",
    "bfield_equiv_integral",
    "add_bfields",
    "transcendental_lattice",
    "alpha_kernel",
    "restriction_is_trivial",
    "normalize_pic_gram",
    "classify_from_pic",
    "classify_bfield",
    "vanishing_bfield",
]


class BrauerKind(str, enum.Enum):
    TRIVIAL = "TrivialClass"
    POINT_ORDER_TWO = "PointOrderTwo"
    EVEN_THETA = "EvenTheta"
    ODD_THETA = "OddTheta"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BrauerClassReport:
    kind: BrauerKind
    bh_invariant: Fraction
    b2_invariant: Fraction | None = None


def mod1(x) -> Fraction:
    """Representative of ``x`` modulo one in ``[0, 1)``."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class BField:
    """Half-integral vector of the K3 lattice."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coords)
        if any((2 * x).denominator != 1 for x in c):
            raise ValueError("a B-field must lie in (1/2) of the lattice")
        object.__setattr__(self, "coords", c)

    @classmethod
    def half(cls, v: Sequence[int]) -> "BField":
        return cls(tuple(Fraction(x, 2) for x in v))

    @classmethod
    def zero(cls, n: int = 22) -> "BField":
        return cls((Fraction(0),) * n)

    def doubled(self) -> tuple[int, ...]:
        return tuple(int(2 * x) for x in self.coords)

    def __add__(self, other: "BField") -> "BField":
        return add_bfields(self, other)

    def __sub__(self, other: "BField") -> "BField":
        return BField(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


def lambda_vector(first: Sequence[int], second: Sequence[int], rest: Sequence[int] = ()) -> tuple[int, ...]:
    """Coordinates in ``U ⊕ U ⊕ Λ'`` from the two hyperbolic planes and a ``Λ'`` part."""
    rest = tuple(rest) + (0,) * (18 - len(rest))
    return tuple(first) + tuple(second) + rest


@dataclass(frozen=True)
class K3Ambient:
    """The K3 lattice with the degree-two polarisation and the Clifford B-field."""

    lattice: Lattice = K3_LATTICE
    h: tuple[int, ...] = lambda_vector((1, 1), (0, 0))
    b_alpha: BField = BField.half(lambda_vector((0, 1), (1, 1)))

    def general_pic(self) -> Sublattice:
        """Picard lattice ``Z h`` of the general double plane."""
        return Sublattice(self.lattice, Matrix([self.h]))

    def pic(self, *generators: Sequence[int]) -> Sublattice:
        return Sublattice(self.lattice, Matrix([self.h, *generators]))


def bfield_invariants(B: BField, pic: Sublattice) -> tuple[Fraction, Fraction | None]:
    """``(B.h mod 1, B.B mod 1)``; the second is None unless ``4 B.h + h.h ≡ 0 (4)``."""
    L = pic.ambient
    h = pic.basis[0]
    bh = Fraction(inner(L, B.coords, h))
    hh = inner(L, h, h)
    condition = 4 * bh + hh
    if condition.denominator == 1 and condition % 4 == 0:
        return mod1(bh), mod1(inner(L, B.coords, B.coords))
    return mod1(bh), None


def _in_span_mod2(rows: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    # Gaussian elimination over F2 with rows packed into ints
    pivots: dict[int, int] = {}
    for row in rows:
        x = sum(1 << i for i, e in enumerate(row) if e % 2)
        while x:
            top = x.bit_length() - 1
            if top not in pivots:
                pivots[top] = x
                break
            x ^= pivots[top]
    x = sum(1 << i for i, e in enumerate(target) if e % 2)
    while x:
        top = x.bit_length() - 1
        if top not in pivots:
            return False
        x ^= pivots[top]
    return True


def bfield_equiv(B1: BField, B2: BField, pic: Sublattice) -> bool:
    """Whether ``B1 - B2`` lies in ``(1/2) pic + Λ``.

    ``2(B1 - B2) = sum c_i p_i + 2y`` has an integral solution exactly when it
    holds modulo two, so the test is span membership over F2.
    """
    return _in_span_mod2(pic.basis.rows, (B1 - B2).doubled())


def bfield_equiv_integral(B1: BField, B2: BField, pic: Sublattice) -> bool:
    """Same as :func:`bfield_equiv`, by solving over Z; kept as a cross-check."""
    diff = (B1 - B2).doubled()
    n = pic.ambient.rank
    gens = Matrix.vstack(pic.basis, Matrix.identity(n).scale(2)) if pic.rank else Matrix.identity(n).scale(2)
    return solve_integral(gens, diff) is not None


def add_bfields(B1: BField, B2: BField) -> BField:
    if len(B1) != len(B2):
        raise ValueError("B-fields live in lattices of different rank")
    return BField(tuple(a + b for a, b in zip(B1.coords, B2.coords)))


def transcendental_lattice(amb: K3Ambient, pic: Sublattice) -> Sublattice:
    return orthogonal_complement(pic)


def _pairings(T: Sublattice, B: BField) -> tuple:
    return vecmat(B.coords, (T.basis @ T.ambient.gram).T) if T.rank else ()


def alpha_kernel(T: Sublattice, B: BField) -> Sublattice:
    """Kernel of ``x -> (x, 2B) mod 2`` on ``T``; index one or two, not saturated."""
    w = [int(2 * p) for p in _pairings(T, B)]
    if all(x % 2 == 0 for x in w):
        return T
    # integer c with c.w even: project the kernel of the column (w; 2)
    k = kernel_basis(Matrix([[x] for x in w] + [[2]]))
    coeffs = Matrix((row[:-1] for row in k.rows), T.rank)
    return Sublattice(T.ambient, coeffs @ T.basis)


def restriction_is_trivial(T: Sublattice, B: BField) -> bool:
    return all(Fraction(p).denominator == 1 for p in _pairings(T, B))


def normalize_pic_gram(gram) -> Matrix:
    """Change basis ``k -> k - m h`` so the off-diagonal entry becomes 0 or 1."""
    g = gram if isinstance(gram, Matrix) else Matrix(gram)
    if g.shape != (2, 2) or not g.is_symmetric() or g[0, 0] != 2:
        raise ValueError(f"expected a symmetric 2x2 Gram matrix with h^2 = 2, got {g.tolist()}")
    b, kk = g[0, 1], g[1, 1]
    m = b // 2
    b2 = b - 2 * m
    kk2 = kk - 2 * m * b + 2 * m * m
    return Matrix([[2, b2], [b2, kk2]])


def classify_from_pic(pic_gram) -> BrauerClassReport:
    """Type of the vanishing class for ``Pic = <h, k>`` with Gram ``((2, b), (b, 2c))``."""
    g = normalize_pic_gram(pic_gram)
    b = g[0, 1]
    if g[1, 1] % 2:
        raise ValueError("k^2 must be even on a K3 surface")
    c = g[1, 1] // 2
    if b == 0:
        return BrauerClassReport(BrauerKind.POINT_ORDER_TWO, Fraction(0), None)
    kind = BrauerKind.ODD_THETA if c % 2 else BrauerKind.EVEN_THETA
    return BrauerClassReport(kind, Fraction(1, 2), mod1(Fraction(c, 2)))


def classify_bfield(B: BField, pic: Sublattice) -> BrauerClassReport:
    """Type of the class represented by ``B`` on a surface with Picard lattice ``pic``."""
    bh, b2 = bfield_invariants(B, pic)
    if bfield_equiv(B, BField.zero(len(B)), pic):
        return BrauerClassReport(BrauerKind.TRIVIAL, bh, b2)
    if bh == 0:
        return BrauerClassReport(BrauerKind.POINT_ORDER_TWO, bh, b2)
    kind = BrauerKind.ODD_THETA if b2 == Fraction(1, 2) else BrauerKind.EVEN_THETA
    return BrauerClassReport(kind, bh, b2)


def vanishing_bfield(pic: Sublattice) -> BField:
    """``k / 2`` for ``Pic = <h, k>`` with ``k`` primitive in the ambient lattice."""
    if pic.rank != 2:
        raise LatticeError(f"expected a rank two Picard lattice, got rank {pic.rank}")
    k = pic.basis[1]
    if content(k) != 1:
        raise LatticeError(f"second generator {k} is not primitive")
    return BField.half(k)
