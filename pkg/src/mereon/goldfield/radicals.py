"""Exact signs of sums of square-root monomials over Q(√5).

A ``RadicalSum`` is Σ cₘ·√(Π_{i∈m} tᵢ), with golden coefficients cₘ and a fixed tuple of positive golden
radicands tᵢ. Monomials are keyed by bitmask over the radicand indices.
"""
from typing import Dict, Mapping, Sequence, Tuple, Union

from mereon.goldfield.golden import ZERO, GoldenNum, gf_sign
from mereon.goldfield.rational import RationalLike


class RadicalSum:
    __slots__ = ("radicands", "terms")

    radicands: Tuple[GoldenNum, ...]
    terms: Dict[int, GoldenNum]

    def __init__(self, radicands: Sequence[GoldenNum], terms: Mapping[int, GoldenNum]) -> None:
        self.radicands = tuple(radicands)
        self.terms = {mask: coefficient for mask, coefficient in terms.items() if coefficient}

    @classmethod
    def monomial(cls, radicands: Sequence[GoldenNum], mask: int, coefficient: GoldenNum) -> "RadicalSum":
        return cls(radicands, {mask: coefficient})

    def _combine(self, other: "RadicalSum", sign: int) -> "RadicalSum":
        terms = dict(self.terms)
        for mask, coefficient in other.terms.items():
            terms[mask] = terms.get(mask, ZERO) + coefficient * sign
        return RadicalSum(self.radicands, terms)

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        return self._combine(other, 1)

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        return self._combine(other, -1)

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(self.radicands, {mask: -coefficient for mask, coefficient in self.terms.items()})

    def __mul__(self, other: Union["RadicalSum", GoldenNum, RationalLike]) -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            return RadicalSum(self.radicands, {mask: c * other for mask, c in self.terms.items()})
        terms: Dict[int, GoldenNum] = {}
        for mask_1, coefficient_1 in self.terms.items():
            for mask_2, coefficient_2 in other.terms.items():
                coefficient = coefficient_1 * coefficient_2
                # √t·√t = t
                shared = mask_1 & mask_2
                for index, radicand in enumerate(self.radicands):
                    if shared >> index & 1:
                        coefficient = coefficient * radicand
                mask = mask_1 ^ mask_2
                terms[mask] = terms.get(mask, ZERO) + coefficient
        return RadicalSum(self.radicands, terms)

    def sign(self) -> int:
        if not self.terms:
            return 0
        top = max(self.terms).bit_length() - 1
        if top < 0:
            return gf_sign(self.terms[0])
        bit = 1 << top
        u = RadicalSum(self.radicands, {m: c for m, c in self.terms.items() if not m & bit})
        v = RadicalSum(self.radicands, {m ^ bit: c for m, c in self.terms.items() if m & bit})
        sign_u, sign_v = u.sign(), v.sign()
        if sign_v == 0:
            return sign_u
        if sign_u in (0, sign_v):
            return sign_v
        # U + V√t with opposite signs: compare U² against V²·t
        return sign_u * (u * u - v * v * self.radicands[top]).sign()
