"""(m, r)-universal sets of binary vectors and the colorings they induce.

Vectors are stored as Python ints used as bitmasks: bit ``i`` is position
``i``. Positions of a graph are its vertices in ascending id followed by its
edges in sorted order.
"""

from __future__ import annotations

import itertools
import math
import random
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph

MAGIC = b"USET"
DEFAULT_SIZE_CAP = 1 << 20
DEFAULT_VERIFY_CAP = 10**9


class UniversalSetError(ValueError):
    pass


@dataclass(frozen=True)
class UniversalSet:
    m: int
    r: int
    vectors: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.r <= self.m:
            raise UniversalSetError(f"need 0 <= r <= m, got r={self.r}, m={self.m}")
        limit = 1 << self.m
        if any(not 0 <= v < limit for v in self.vectors):
            raise UniversalSetError("vector wider than m bits")

    def __len__(self) -> int:
        return len(self.vectors)

    def rows(self) -> list[str]:
        return [format(v, f"0{self.m}b")[::-1] if self.m else "" for v in self.vectors]


def _covers_all(vectors: Sequence[int], m: int, r: int) -> bool:
    if r == 0:
        return len(vectors) > 0
    if len(vectors) < (1 << r):
        return False
    if m <= 63:
        arr = np.array(vectors, dtype=np.uint64)
        bits = ((arr[:, None] >> np.arange(m, dtype=np.uint64)) & np.uint64(1)).astype(np.int8)
    else:
        bits = np.array([[(v >> p) & 1 for p in range(m)] for v in vectors], dtype=np.int8)
    weights = (1 << np.arange(r)).astype(np.int64)
    full = 1 << r
    for idx in itertools.combinations(range(m), r):
        patterns = bits[:, idx] @ weights
        if np.count_nonzero(np.bincount(patterns, minlength=full)) < full:
            return False
    return True


def verify_universal_set(u: UniversalSet, cap: int = DEFAULT_VERIFY_CAP) -> bool:
    """True iff every pattern on every r positions occurs in some vector."""
    work = math.comb(u.m, u.r) * (1 << u.r)
    if work > cap:
        raise UniversalSetError(f"verification needs {work} checks, above cap {cap}")
    return _covers_all(u.vectors, u.m, u.r)


def build_universal_set(
    m: int,
    r: int,
    strategy: str = "auto",
    *,
    seed: int = 0,
    size_cap: int = DEFAULT_SIZE_CAP,
    verify_cap: int = DEFAULT_VERIFY_CAP,
    retries: int = 12,
) -> UniversalSet:
    """Build a verified (m, r)-universal set.

    Strategies: ``trivial`` (r <= 1), ``exhaustive`` (all 2^m vectors) and
    ``random-verified`` (random vectors, grown until the exhaustive pattern
    check passes). ``auto`` picks trivial, then random-verified when the
    check is affordable, then exhaustive.
    """
    if not 0 <= r <= m:
        raise UniversalSetError(f"need 0 <= r <= m, got r={r}, m={m}")
    if strategy == "auto":
        if r <= 1:
            strategy = "trivial"
        elif r < m and math.comb(m, r) * (1 << r) <= verify_cap and (1 << r) <= size_cap:
            strategy = "random-verified"
        else:
            strategy = "exhaustive"
    if strategy == "trivial":
        if r > 1:
            raise UniversalSetError("trivial strategy only covers r <= 1")
        vecs = (0,) if r == 0 else (0, (1 << m) - 1)
        return UniversalSet(m, r, vecs)
    if strategy == "exhaustive":
        if (1 << m) > size_cap:
            raise UniversalSetError(f"exhaustive set has 2^{m} vectors, above cap {size_cap}")
        return UniversalSet(m, r, tuple(range(1 << m)))
    if strategy == "random-verified":
        if r == 0:
            return UniversalSet(m, 0, (0,))
        if math.comb(m, r) * (1 << r) > verify_cap:
            raise UniversalSetError("random-verified set cannot be checked within the verification cap")
        rng = random.Random(seed)
        # union bound: C(m,r) 2^r (1 - 2^-r)^N < 1 at this N
        size = math.ceil((1 << r) * (math.log(math.comb(m, r)) + r * math.log(2) + 1))
        for _ in range(retries):
            size = min(size, size_cap)
            vecs = tuple(rng.getrandbits(m) for _ in range(size))
            if _covers_all(vecs, m, r):
                return UniversalSet(m, r, vecs)
            size *= 2
        raise UniversalSetError(f"random-verified construction failed after {retries} attempts")
    raise UniversalSetError(f"unknown strategy {strategy!r}")


def positions(g: Graph) -> tuple[list[int], list[tuple[int, int]]]:
    return list(g.vertices), list(g.edges)


def colorings_from_universal_set(g: Graph, u: UniversalSet) -> Iterator:
    """One coloring per ordered pair (a, b) of vectors.

    a marks red vertices and red edges; b recolors the remaining vertices
    yellow (1) or blue (0). Edge bits of b are ignored.
    """
    from .separation import Coloring

    verts, edges = positions(g)
    if u.m != len(verts) + len(edges):
        raise UniversalSetError(f"universal set has m={u.m}, graph needs {len(verts) + len(edges)}")
    nv = len(verts)
    for a in u.vectors:
        red = frozenset(v for i, v in enumerate(verts) if (a >> i) & 1)
        red_edges = frozenset(e for i, e in enumerate(edges) if (a >> (nv + i)) & 1)
        for b in u.vectors:
            yellow = frozenset(v for i, v in enumerate(verts) if (b >> i) & 1 and v not in red)
            yield Coloring(red, yellow, red_edges)


def write_cache(u: UniversalSet, path: str | Path) -> None:
    width = (u.m + 7) // 8
    with open(path, "wb") as fh:
        fh.write(MAGIC + struct.pack("<QQQ", u.m, u.r, len(u.vectors)))
        for v in u.vectors:
            fh.write(v.to_bytes(width, "little"))


def read_cache(path: str | Path) -> UniversalSet:
    data = Path(path).read_bytes()
    if data[:4] != MAGIC:
        raise UniversalSetError("bad magic in universal-set cache")
    m, r, count = struct.unpack_from("<QQQ", data, 4)
    width = (m + 7) // 8
    body = data[28:]
    if len(body) != width * count:
        raise UniversalSetError("truncated universal-set cache")
    vecs = tuple(int.from_bytes(body[i * width:(i + 1) * width], "little") for i in range(count))
    return UniversalSet(m, r, vecs)
