"""Brute-force map enumeration: the ground truth for small configurations.

A map is a perfect matching on labeled half-edges carried by j internal
vertices (2nu half-edges each, in fixed cyclic order) plus optionally two
labeled univalent legs.  Every one of the (H-1)!! matchings is visited (no
pruning: the visit count itself is an invariant), disconnected ones are
discarded, and each connected one is binned by the genus of the surface its
rotation system defines.

The inner loop runs under numba: the largest routine target (18 half-edges,
~34e6 matchings) finishes in seconds instead of hours.  Work is partitioned
by the partner of half-edge 0, which makes multi-threaded runs bit-identical
to single-threaded ones.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit


class CapExceeded(Exception):
    pass


class OddEuler(Exception):
    """Euler bookkeeping produced a non-integer genus (construction bug)."""


@dataclass(frozen=True)
class MapInstance:
    """One matched configuration; matching[h] is the partner of half-edge h."""

    nu: int
    vertices: int
    legs: int
    matching: tuple[int, ...]

    def half_edges(self) -> int:
        return 2 * self.nu * self.vertices + self.legs


@dataclass
class GenusHistogram:
    """Exact per-genus tally of the connected matchings."""

    counts: dict[int, int]
    total_matchings: int

    def __getitem__(self, g: int) -> int:
        return self.counts.get(g, 0)

    def connected_total(self) -> int:
        return sum(self.counts.values())


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _layout(nu: int, j: int, legs: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-half-edge vertex ids and rotation permutation (counterclockwise
    successor at the carrying vertex; a leg is its own successor)."""
    H = 2 * nu * j + legs
    v_of = np.empty(H, dtype=np.int64)
    sigma = np.empty(H, dtype=np.int64)
    for v in range(j):
        base = 2 * nu * v
        for p in range(2 * nu):
            h = base + p
            v_of[h] = v
            sigma[h] = base + (p + 1) % (2 * nu)
    for k in range(legs):
        h = 2 * nu * j + k
        v_of[h] = j + k
        sigma[h] = h
    return v_of, sigma


@njit(cache=True)
def _genus_of_matching(partner, v_of, sigma, parent, visited):
    """Genus of one matching, -1 if disconnected, -2 on odd Euler count."""
    H = partner.shape[0]
    V = parent.shape[0]
    for v in range(V):
        parent[v] = v
    for h in range(H):
        p = partner[h]
        if p > h:
            a = v_of[h]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = v_of[p]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
    r0 = 0
    while parent[r0] != r0:
        r0 = parent[r0]
    for v in range(V):
        r = v
        while parent[r] != r:
            r = parent[r]
        if r != r0:
            return -1
    for h in range(H):
        visited[h] = False
    faces = 0
    for h in range(H):
        if not visited[h]:
            faces += 1
            cur = h
            while not visited[cur]:
                visited[cur] = True
                cur = sigma[partner[cur]]
    euler_defect = 2 - V + (H // 2) - faces  # equals 2g
    if euler_defect % 2 != 0 or euler_defect < 0:
        return -2
    return euler_defect // 2


@njit(cache=True, nogil=True)
def _enumerate_core(v_of, sigma, forced, hist):
    """Visit every matching (partner of half-edge 0 fixed to `forced` when
    >= 0) by always pairing the lowest unmatched half-edge; returns the
    number of matchings visited, or -1 if an odd Euler count was hit.
    """
    H = v_of.shape[0]
    V = 0
    for h in range(H):
        if v_of[h] + 1 > V:
            V = v_of[h] + 1
    npairs = H // 2
    partner = np.full(H, -1, dtype=np.int64)
    anc = np.zeros(npairs, dtype=np.int64)
    cnd = np.zeros(npairs, dtype=np.int64)
    parent = np.empty(V, dtype=np.int64)
    visited = np.empty(H, dtype=np.bool_)
    start_depth = 0
    if forced >= 0:
        partner[0] = forced
        partner[forced] = 0
        start_depth = 1
    total = 0
    depth = start_depth
    fresh = True
    while True:
        if fresh:
            if depth == npairs:
                total += 1
                g = _genus_of_matching(partner, v_of, sigma, parent, visited)
                if g == -2:
                    return -1
                if g >= 0:
                    hist[g] += 1
                depth -= 1
                if depth < start_depth:
                    break
                a = anc[depth]
                c = cnd[depth]
                partner[a] = -1
                partner[c] = -1
                cnd[depth] = c + 1
                fresh = False
                continue
            a = 0
            while partner[a] >= 0:
                a += 1
            anc[depth] = a
            cnd[depth] = a + 1
            fresh = False
            continue
        a = anc[depth]
        c = cnd[depth]
        while c < H and partner[c] >= 0:
            c += 1
        if c >= H:
            depth -= 1
            if depth < start_depth:
                break
            a2 = anc[depth]
            c2 = cnd[depth]
            partner[a2] = -1
            partner[c2] = -1
            cnd[depth] = c2 + 1
            continue
        cnd[depth] = c
        partner[a] = c
        partner[c] = a
        depth += 1
        fresh = True
    return total


def genus_of(m: MapInstance) -> int:
    """Genus of one connected matching via V - E + F = 2 - 2g.

    Pure-Python twin of the compiled kernel; the two are held together by
    tests on small cases.
    """
    H = m.half_edges()
    partner = list(m.matching)
    if sorted(partner) != list(range(H)) or any(partner[partner[h]] != h or
                                                partner[h] == h
                                                for h in range(H)):
        raise ValueError("matching must be a fixed-point-free involution")
    v_of, sigma = _layout(m.nu, m.vertices, m.legs)
    V = m.vertices + m.legs
    roots = list(range(V))

    def find(x):
        while roots[x] != x:
            roots[x] = roots[roots[x]]
            x = roots[x]
        return x

    for h in range(H):
        roots[find(v_of[h])] = find(v_of[partner[h]])
    if len({find(v) for v in range(V)}) != 1:
        raise ValueError("map is disconnected")
    seen = [False] * H
    faces = 0
    for h in range(H):
        if not seen[h]:
            faces += 1
            cur = h
            while not seen[cur]:
                seen[cur] = True
                cur = int(sigma[partner[cur]])
    face_lengths_total = H  # every half-edge lies on exactly one face cycle
    assert face_lengths_total == H
    defect = 2 - V + H // 2 - faces
    if defect % 2 != 0 or defect < 0:
        raise OddEuler(f"V={V} E={H // 2} F={faces}")
    return defect // 2


def enumerate_maps(nu: int, j: int, legs: int = 0, threads: int = 1,
                   cap: int = 24) -> GenusHistogram:
    """Genus histogram over all (H-1)!! matchings with H = 2*nu*j + legs.

    The half-edge total is capped (configurable) because the matching count
    is doubly factorial in H.
    """
    if legs not in (0, 2):
        raise ValueError("legs must be 0 or 2")
    if nu < 1 or j < 1:
        raise ValueError("need nu >= 1 and j >= 1")
    H = 2 * nu * j + legs
    if H % 2 != 0:
        raise ValueError("odd number of half-edges cannot be matched")
    if H > cap:
        raise CapExceeded(f"H={H} exceeds cap={cap}")
    v_of, sigma = _layout(nu, j, legs)
    V = j + legs
    gbound = (H // 2 - V + 1) // 2 + 1
    expected = double_factorial(H - 1)

    def run(forced: int) -> np.ndarray:
        hist = np.zeros(gbound + 1, dtype=np.int64)
        n = _enumerate_core(v_of, sigma, forced, hist)
        if n < 0:
            raise OddEuler("compiled kernel hit a non-integer genus")
        return hist, n

    if threads <= 1 or H <= 2:
        hist, total = run(-1)
    else:
        parts = list(range(1, H))
        hist = np.zeros(gbound + 1, dtype=np.int64)
        total = 0
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part_hist, part_total in pool.map(lambda f: run(f), parts):
                hist += part_hist
                total += part_total
    if total != expected:
        raise AssertionError(
            f"visited {total} matchings, expected (H-1)!! = {expected}")
    counts = {g: int(c) for g, c in enumerate(hist) if c}
    return GenusHistogram(counts, total)
