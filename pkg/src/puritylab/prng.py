"""Deterministic random streams for state sampling and conjecture scans.

The generator is SplitMix64 (Steele, Lea & Flood): 64-bit state advanced by
the additive constant 0x9E3779B97F4A7C15, output finalized with the
murmur-style mixer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

All arithmetic is modulo 2**64.  Derived quantities are fixed so another
implementation can reproduce the streams bit for bit:

* uniform double in (0, 1]:   ((next_u64() >> 11) + 1) * 2**-53
* standard normal pair:       Box-Muller on two consecutive uniforms u1, u2:
                              r = sqrt(-2 ln u1),
                              (r cos(2 pi u2), r sin(2 pi u2));
                              the cosine value is returned first.
* complex standard normal:    re then im, each a standard normal draw.
* child stream for index k:   seeded with the k-th output (0-based) of the
                              parent stream, i.e. mix(seed + (k+1)*GAMMA).
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_TWO_PI = 2.0 * math.pi
_INV_2_53 = 2.0 ** -53


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream with uniform, normal and complex-normal draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64
        self._spare_normal: float | None = None

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def uniform(self) -> float:
        """Uniform double in (0, 1]; never 0, so safe under log()."""
        return ((self.next_u64() >> 11) + 1) * _INV_2_53

    def normal(self) -> float:
        if self._spare_normal is not None:
            value, self._spare_normal = self._spare_normal, None
            return value
        u1 = self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        self._spare_normal = r * math.sin(_TWO_PI * u2)
        return r * math.cos(_TWO_PI * u2)

    def complex_normal(self) -> complex:
        re = self.normal()
        im = self.normal()
        return complex(re, im)


def child_seed(seed: int, index: int) -> int:
    """Seed for the index-th child stream: the index-th parent output, O(1)."""
    if index < 0:
        raise ValueError(f"child index must be >= 0, got {index}")
    return _mix((seed + (index + 1) * _GAMMA) & _MASK64)
