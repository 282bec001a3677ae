import hashlib
from typing import Any, Iterable, List, Tuple

import numpy as np

DEFAULT_HASH_KEY = "sekwl-colors-v1"
DEFAULT_QUANTIZE_DIGITS = 9


def _encode(obj: Any, out: List[bytes]) -> None:
    # Tagged, length-prefixed encoding: distinct nested values never share bytes.
    if isinstance(obj, (bool, np.bool_)):
        out.append(b"b1" if obj else b"b0")
    elif isinstance(obj, (int, np.integer)):
        text = str(int(obj)).encode("ascii")
        out.append(b"i%d:" % len(text) + text)
    elif isinstance(obj, str):
        data = obj.encode("utf-8")
        out.append(b"s%d:" % len(data) + data)
    elif isinstance(obj, (tuple, list)):
        out.append(b"(%d:" % len(obj))
        for item in obj:
            _encode(item, out)
        out.append(b")")
    else:
        raise TypeError(f"cannot hash value of type {type(obj).__name__}")


class ColorHasher:
    """Keyed 64-bit hash of nested tuples of ints and strings"""

    def __init__(self, key: str = DEFAULT_HASH_KEY):
        self.key = key
        self._key_bytes = hashlib.blake2b(key.encode("utf-8"), digest_size=32).digest()

    def __call__(self, value: Any) -> int:
        parts: List[bytes] = []
        _encode(value, parts)
        digest = hashlib.blake2b(b"".join(parts), digest_size=8, key=self._key_bytes).digest()
        return int.from_bytes(digest, "big")

    def initial_color(self) -> int:
        return self(("c0",))

    def multiset(self, colors: Iterable[int]) -> Tuple[int, ...]:
        """Order-free view of a color collection"""
        return tuple(sorted(int(c) for c in colors))


def quantize(values: np.ndarray, digits: int = DEFAULT_QUANTIZE_DIGITS) -> Tuple[int, ...]:
    """Integer lattice point of a real vector at resolution 10^-digits"""
    scaled = np.rint(np.asarray(values, dtype=np.float64) * (10.0 ** digits))
    return tuple(int(v) for v in scaled)
