"""Projections that collapse a space of linear forms onto one fresh variable.

For a space ``V`` with basis ``v_1..v_D``, a complement basis ``u_1..``
and a vector ``alpha``, the map ``T`` is the ring homomorphism with
``T(v_i) = alpha_i * z`` and ``T(u_i) = u_i``.  The fresh variable ``z`` is
always appended as the last coordinate, so images live in ``n + 1``
variables.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import linalg
from .errors import PreconditionError
from .polyring.poly import MultiPoly
from .qcore import LinearForm, LinearSpace, QuadraticForm
from .scalars import as_fraction

ALPHA_DENOMINATOR = 2**31


@dataclass(frozen=True)
class ProjectionMap:
    """The map ``T_{alpha,V}``.

    ``complement`` defaults to the unit forms at the non-pivot coordinates of
    ``V``'s RREF basis; then ``T`` sends the pivot coordinate ``x_{p_i}`` to
    ``alpha_i*z - sum_j v_i[j]*x_j`` and fixes every other coordinate.
    """

    space: LinearSpace
    alpha: tuple
    complement: LinearSpace | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(as_fraction(a) for a in self.alpha))
        if len(self.alpha) != self.space.dim:
            raise PreconditionError(
                f"alpha has {len(self.alpha)} entries but the space has dimension {self.space.dim}"
            )
        if not self.space.is_rational():
            raise PreconditionError("projections are defined for rational spaces")
        if self.complement is not None:
            if self.complement.n != self.n or self.complement.dim != self.n - self.delta:
                raise PreconditionError("complement has the wrong dimension")
            if (self.space + self.complement).dim != self.n:
                raise PreconditionError("complement does not complete the space to a basis")

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def delta(self) -> int:
        return self.space.dim

    @property
    def z(self) -> int:
        """Index of the fresh variable in the image ring."""
        return self.n

    def _complement_rows(self) -> list[list]:
        if self.complement is not None:
            return self.complement.rows()
        pivots = set(self.space.pivots())
        rows = []
        for j in range(self.n):
            if j not in pivots:
                e = [Fraction(0)] * self.n
                e[j] = Fraction(1)
                rows.append(e)
        return rows

    def images(self) -> list[MultiPoly]:
        """Images of ``x_1..x_n`` as polynomials in ``n + 1`` variables."""
        n = self.n
        basis = self.space.rows() + self._complement_rows()
        coords = linalg.inverse(basis)  # x_j = sum_k coords[j][k] * basis[k]
        out = []
        for j in range(n):
            coeffs = [Fraction(0)] * (n + 1)
            for k in range(self.delta):
                coeffs[n] += coords[j][k] * self.alpha[k]
            for k in range(self.delta, n):
                c = coords[j][k]
                if c != 0:
                    for i, u in enumerate(basis[k]):
                        coeffs[i] += c * u
            out.append(MultiPoly.linear(coeffs))
        return out


def apply(pmap: ProjectionMap, p: Union[QuadraticForm, MultiPoly, LinearForm]) -> MultiPoly:
    """Image of ``p`` under the projection, in ``n + 1`` variables."""
    if isinstance(p, QuadraticForm):
        poly = p.to_poly()
    elif isinstance(p, LinearForm):
        poly = p.to_poly()
    elif isinstance(p, MultiPoly):
        poly = p
    else:
        raise TypeError(f"cannot project {type(p).__name__}")
    if poly.n != pmap.n:
        raise PreconditionError(f"polynomial has {poly.n} variables, map expects {pmap.n}")
    return poly.substitute(pmap.images())


def apply_form(pmap: ProjectionMap, q: QuadraticForm) -> QuadraticForm:
    """Image of a quadratic form, as a quadratic form in ``n + 1`` variables."""
    return QuadraticForm.from_poly(apply(pmap, q))


def sample_alpha(delta: int, seed: int) -> tuple[Fraction, ...]:
    """``delta`` rationals ``k / 2^31`` with ``k`` uniform in ``[1, 2^31]``.

    A nonzero polynomial of degree ``D`` in ``alpha`` vanishes at such a
    point with probability at most ``D / 2^31`` (Schwartz-Zippel); for the
    degrees met in this library that is far below ``2^-20`` per draw.
    """
    if delta < 1:
        raise PreconditionError("alpha needs at least one coordinate")
    rng = random.Random(seed)
    return tuple(Fraction(rng.randint(1, ALPHA_DENOMINATOR), ALPHA_DENOMINATOR) for _ in range(delta))


def projection(space: LinearSpace, alpha: Sequence, complement: LinearSpace | None = None) -> ProjectionMap:
    return ProjectionMap(space, tuple(alpha), complement)
