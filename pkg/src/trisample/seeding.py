"""Deterministic seed derivation for independent random streams.

Replications, stream generators and estimators each get their own seed
derived from one base seed, so runs are reproducible and components never
share RNG state.
"""

import zlib

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(base: int, *salts) -> int:
    """Mix a base seed with salt values (ints or short strings) into a new
    64-bit seed.  Same inputs, same output, on every platform."""
    x = _splitmix64(base & _MASK64)
    for salt in salts:
        if isinstance(salt, str):
            salt = zlib.crc32(salt.encode("utf-8"))
        x = _splitmix64(x ^ (salt & _MASK64))
    return x
