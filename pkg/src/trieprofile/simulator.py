"""Monte Carlo side: bit streams, PATRICIA tries and the coupled Renyi process.

Bits come from a counter-based generator.  The bit at (key, position) is

    u = splitmix64(key + (position + 1) * G2),   bit = [u < floor(p * 2^64)]

where key = splitmix64(seed + (stream_index + 1) * G) identifies one string.
Any bit can be recomputed from its coordinates, so the scalar code paths
(explicit tries) and the vectorized level engine agree bit for bit.  Bits
are reproducible within this implementation only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .numerics import Bias

MASK = (1 << 64) - 1
G = 0x9E3779B97F4A7C15
G2 = 0xD1B54A32D192ED03
G_TRIAL = 0xA0761D6478BD642F
G_PICK = 0xE7037ED1A0B428DB
M1 = 0xBF58476D1CE4E5B9
M2 = 0x94D049BB133111EB


def splitmix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * M1) & MASK
    z = ((z ^ (z >> 27)) * M2) & MASK
    return z ^ (z >> 31)


def _splitmix64_np(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(M1)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(M2)
    return z ^ (z >> np.uint64(31))


def stream_key(seed: int, index: int) -> int:
    return splitmix64(seed + (index + 1) * G)


def trial_seed(seed: int, trial: int) -> int:
    """Per-trial seed; depends only on (seed, trial), never on scheduling."""
    return splitmix64((seed & MASK) ^ splitmix64((trial + 1) * G_TRIAL))


def bit_threshold(bias: Bias) -> int:
    p = Fraction(bias.p)
    return (p.numerator << 64) // p.denominator


def stream_length_guard(n: int, bias: Bias) -> int:
    """64 (log_{1/p} n + 64) bits per string."""
    p = float(bias.p)
    return int(64 * (math.log(max(n, 1)) / math.log(1 / p) + 64))


class GuardExceeded(RuntimeError):
    """A string needed more bits than the stream-length guard allows."""


@dataclass(frozen=True)
class BitSource:
    seed: int
    stream_index: int
    bias: Bias
    key: int = field(init=False)
    threshold: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "key", stream_key(self.seed, self.stream_index))
        object.__setattr__(self, "threshold", bit_threshold(self.bias))

    def bit(self, position: int) -> int:
        return int(splitmix64(self.key + (position + 1) * G2) < self.threshold)

    def bits(self, start: int, count: int) -> np.ndarray:
        pos = np.arange(start + 1, start + count + 1, dtype=np.uint64)
        u = _splitmix64_np(np.uint64(self.key) + pos * np.uint64(G2))
        return (u < np.uint64(self.threshold)).astype(np.uint8)


@dataclass(frozen=True)
class FixedStream:
    """A string with explicitly given leading bits (for worked examples)."""

    prefix: Tuple[int, ...]
    stream_index: int = 0

    def bit(self, position: int) -> int:
        if position >= len(self.prefix):
            raise GuardExceeded(f"fixed stream {self.stream_index} has only {len(self.prefix)} bits")
        return int(self.prefix[position])


Stream = Union[BitSource, FixedStream]


def draw_streams(n: int, bias: Bias, seed: int) -> List[BitSource]:
    if n < 1:
        raise ValueError("need at least one stream")
    bias = Bias.of(bias)
    return [BitSource(int(seed) & MASK, i, bias) for i in range(n)]


# --- explicit trees ----------------------------------------------------------------

Shape = Union[int, tuple]   # leaf: stream index; internal: (bit-0 child, bit-1 child)


@dataclass
class _Node:
    pos: int
    child: List[object]      # [bit-0 side, bit-1 side]; entries are _Node or int


@dataclass
class PatriciaTrie:
    root: object             # _Node or int (single leaf)
    leaf_count: int
    bits_used: int

    def shape(self) -> Shape:
        def walk(node):
            if isinstance(node, _Node):
                return (walk(node.child[0]), walk(node.child[1]))
            return node
        return walk(self.root)


def _guard(streams: Sequence[Stream]) -> int:
    for s in streams:
        if isinstance(s, BitSource):
            return stream_length_guard(len(streams), s.bias)
    return 1 << 30


def build_patricia(streams: Sequence[Stream]) -> PatriciaTrie:
    """Crit-bit insertion: each new string goes below the first node whose
    bit index exceeds its first difference with the leaf it reaches."""
    if not streams:
        raise ValueError("need at least one stream")
    guard = _guard(streams)
    root: object = 0
    bits_used = 0
    for idx in range(1, len(streams)):
        s = streams[idx]
        node = root
        while isinstance(node, _Node):
            node = node.child[s.bit(node.pos)]
        other = streams[node]
        d = 0
        while s.bit(d) == other.bit(d):
            d += 1
            if d >= guard:
                raise GuardExceeded(
                    f"streams {idx} and {node} agree on the first {guard} bits")
        bits_used = max(bits_used, d + 1)
        parent, side, node = None, 0, root
        while isinstance(node, _Node) and node.pos < d:
            parent, side, node = node, s.bit(node.pos), node.child[s.bit(node.pos)]
        new = _Node(d, [None, None])
        b = s.bit(d)
        new.child[b] = idx
        new.child[1 - b] = node
        if parent is None:
            root = new
        else:
            parent.child[side] = new
    return PatriciaTrie(root, len(streams), bits_used)


@dataclass
class RefinementTree:
    levels: List[List[Tuple[int, ...]]]        # partition after each accepted query
    queries: List[Tuple[int, ...]]             # accepted query sets, one per level
    root_shape: Shape
    leaf_count: int
    resamples: int

    def shape(self) -> Shape:
        return self.root_shape


def run_renyi(streams: Sequence[Stream]) -> RefinementTree:
    """Partition refinement with per-object bit indices k_j.

    Every nontrivial block is queried at every level; a query that leaves
    a block whole is redrawn for that block from fresh bits.
    """
    n = len(streams)
    if n < 1:
        raise ValueError("need at least one stream")
    guard = _guard(streams)
    k = [0] * n
    children: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], Tuple[int, ...]]] = {}
    current = [tuple(range(n))]
    levels = [list(current)]
    queries: List[Tuple[int, ...]] = []
    resamples = 0
    while any(len(b) > 1 for b in current):
        nxt = []
        accepted: List[int] = []
        for block in current:
            if len(block) == 1:
                nxt.append(block)
                continue
            while True:
                decisions = []
                for j in block:
                    if k[j] >= guard:
                        raise GuardExceeded(f"object {j} used {guard} bits without separation")
                    decisions.append(streams[j].bit(k[j]))
                    k[j] += 1
                if 0 < sum(decisions) < len(block):
                    break
                resamples += 1
            out = tuple(j for j, d in zip(block, decisions) if d == 0)
            inn = tuple(j for j, d in zip(block, decisions) if d == 1)
            children[block] = (out, inn)
            accepted.extend(inn)
            nxt.extend([out, inn])
        queries.append(tuple(sorted(accepted)))
        current = nxt
        levels.append(list(current))

    def build(block):
        if len(block) == 1:
            return block[0]
        a, b = children[block]
        return (build(a), build(b))

    return RefinementTree(levels, queries, build(tuple(range(n))), n, resamples)


@dataclass(frozen=True)
class TreeStats:
    height: int
    fillup: int
    leaf_depths: Tuple[int, ...]          # indexed by stream
    external_profile: Tuple[int, ...]     # B_{n,k}, k = 0..H
    internal_profile: Tuple[int, ...]     # internal nodes per depth


def _shape_depths(shape: Shape, n: int) -> Tuple[List[int], List[int]]:
    depths = [0] * n
    internal: List[int] = []
    stack = [(shape, 0)]
    while stack:
        node, d = stack.pop()
        if isinstance(node, tuple):
            while len(internal) <= d:
                internal.append(0)
            internal[d] += 1
            stack.append((node[0], d + 1))
            stack.append((node[1], d + 1))
        else:
            depths[node] = d
    return depths, internal


def stats_from_depths(depths: Sequence[int], internal: Optional[Sequence[int]] = None) -> TreeStats:
    H = max(depths)
    prof = [0] * (H + 1)
    for d in depths:
        prof[d] += 1
    return TreeStats(H, min(depths) - 1, tuple(depths), tuple(prof), tuple(internal or ()))


def stats(tree: Union[PatriciaTrie, RefinementTree]) -> TreeStats:
    depths, internal = _shape_depths(tree.shape(), tree.leaf_count)
    return stats_from_depths(depths, internal)


# --- vectorized level engine ------------------------------------------------------------

def _engine_batch(n: int, bias: Bias, seeds: Sequence[int], guard: int):
    """Leaf depths for a batch of independent trials, shape (len(seeds), n).

    All strings of all trials advance one bit position per round.  A block
    whose strings do not all agree on the bit splits (depth + 1); otherwise
    the round was a compressed unary step.  Singletons leave the arrays.
    Also returns internal-node counts per (trial, depth).
    """
    T = len(seeds)
    thr = np.uint64(bit_threshold(bias))
    idx = np.arange(n, dtype=np.uint64)
    keys = np.empty((T, n), dtype=np.uint64)
    for t, s in enumerate(seeds):
        keys[t] = _splitmix64_np(np.uint64(s) + (idx + np.uint64(1)) * np.uint64(G))
    keys = keys.ravel()
    owner = np.arange(T * n, dtype=np.int64)          # flat (trial, string) slot
    block = np.repeat(np.arange(T, dtype=np.int64), n)  # dense block ids
    depth = np.zeros(T * n, dtype=np.int64)
    out = np.zeros(T * n, dtype=np.int64)
    internal_rows: List[np.ndarray] = []
    block_trial = np.arange(T, dtype=np.int64)
    pos = 0
    if n == 1:
        return out.reshape(T, n), internal_rows
    while owner.size:
        if pos >= guard:
            raise GuardExceeded(f"{owner.size} strings still unseparated after {guard} bits")
        u = _splitmix64_np(keys + np.uint64(((pos + 1) * G2) & MASK))
        bit = (u < thr).astype(np.int64)
        pos += 1
        nb = block_trial.size
        size = np.bincount(block, minlength=nb)
        ones = np.bincount(block, weights=bit, minlength=nb).astype(np.int64)
        splits = (ones > 0) & (ones < size)
        # internal nodes: one per splitting block, at the block's current depth
        if splits.any():
            first = np.full(nb, -1, dtype=np.int64)
            first[block[::-1]] = np.arange(block.size - 1, -1, -1)
            sd = depth[first[splits]]
            internal_rows.append(np.stack([block_trial[splits], sd]))
        s_mask = splits[block]
        new_block = block * 2 + np.where(s_mask, bit, 0)
        depth = depth + s_mask
        sizes2 = np.bincount(new_block, minlength=2 * nb)
        leaf = sizes2[new_block] == 1
        if leaf.any():
            out[owner[leaf]] = depth[leaf]
        keep = ~leaf
        owner, keys, depth, new_block = owner[keep], keys[keep], depth[keep], new_block[keep]
        used = sizes2 > 1
        remap = np.cumsum(used) - 1
        block = remap[new_block]
        block_trial = np.repeat(block_trial, 2)[used]
    return out.reshape(T, n), internal_rows


def leaf_depths(n: int, bias: Bias, seed: int, trials: int = 1, first_trial: int = 0,
                batch: Optional[int] = None) -> np.ndarray:
    """Per-trial leaf depths (trials x n) from the vectorized engine."""
    bias = Bias.of(bias)
    guard = stream_length_guard(n, bias)
    batch = batch or max(1, (1 << 18) // n)
    rows = []
    for start in range(first_trial, first_trial + trials, batch):
        stop = min(start + batch, first_trial + trials)
        seeds = [trial_seed(seed, t) for t in range(start, stop)]
        rows.append(_engine_batch(n, bias, seeds, guard)[0])
    return np.concatenate(rows, axis=0)


@dataclass
class SimulationSummary:
    n: int
    bias: Bias
    trials: int
    seed: int
    profile_sum: np.ndarray        # sum over trials of B_{n,k}
    profile_sumsq: np.ndarray      # sum over trials of B_{n,k}^2
    internal_sum: np.ndarray
    height_hist: Dict[int, int]
    fillup_hist: Dict[int, int]
    depth_hist: Dict[int, int]     # D_n: one uniformly chosen leaf per trial
    ordering_violations: int       # trials with D_n outside [F_n + 1, H_n]

    def mean_profile(self) -> np.ndarray:
        return self.profile_sum / self.trials

    def var_profile(self) -> np.ndarray:
        if self.trials < 2:
            return np.zeros_like(self.profile_sum, dtype=float)
        m = self.profile_sum / self.trials
        return (self.profile_sumsq - self.trials * m * m) / (self.trials - 1)

    def stderr_profile(self) -> np.ndarray:
        return np.sqrt(self.var_profile() / self.trials)

    @staticmethod
    def _moments(hist: Dict[int, int]) -> Tuple[float, float]:
        tot = sum(hist.values())
        mean = sum(k * c for k, c in hist.items()) / tot
        var = sum(c * (k - mean) ** 2 for k, c in hist.items()) / max(tot - 1, 1)
        return mean, var

    def height_mean(self) -> float:
        return self._moments(self.height_hist)[0]

    def depth_mean(self) -> float:
        return self._moments(self.depth_hist)[0]

    def fillup_mean(self) -> float:
        return self._moments(self.fillup_hist)[0]

    def prob_height_above(self, k: int) -> float:
        return sum(c for h, c in self.height_hist.items() if h > k) / self.trials

    def prob_fillup_below(self, k: int) -> float:
        return sum(c for f, c in self.fillup_hist.items() if f < k) / self.trials

    def fraction_height_in(self, lo: int, hi: int) -> float:
        return sum(c for h, c in self.height_hist.items() if lo <= h <= hi) / self.trials


def run_trials(n: int, bias: Bias, trials: int, seed: int,
               batch: Optional[int] = None) -> SimulationSummary:
    """Aggregate statistics over independent trials.

    Trial t uses trial_seed(seed, t); its D_n sample is the leaf with index
    splitmix64(trial_seed ^ G_PICK) mod n.  All accumulators are integers,
    so the result does not depend on the batch size.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if n < 1:
        raise ValueError("n must be at least 1")
    bias = Bias.of(bias)
    guard = stream_length_guard(n, bias)
    batch = batch or max(1, (1 << 18) // n)
    width = 8
    psum = np.zeros(width, dtype=np.int64)
    psq = np.zeros(width, dtype=np.int64)
    isum = np.zeros(width, dtype=np.int64)
    hh: Dict[int, int] = {}
    fh: Dict[int, int] = {}
    dh: Dict[int, int] = {}
    bad = 0
    for start in range(0, trials, batch):
        stop = min(start + batch, trials)
        seeds = [trial_seed(seed, t) for t in range(start, stop)]
        depths, internal_rows = _engine_batch(n, bias, seeds, guard)
        T = stop - start
        H = depths.max(axis=1)
        F = depths.min(axis=1) - 1
        top = int(H.max()) + 1
        if top > width:
            grow = top - width
            psum = np.concatenate([psum, np.zeros(grow, dtype=np.int64)])
            psq = np.concatenate([psq, np.zeros(grow, dtype=np.int64)])
            isum = np.concatenate([isum, np.zeros(grow, dtype=np.int64)])
            width = top
        flat = (np.arange(T)[:, None] * width + depths).ravel()
        prof = np.bincount(flat, minlength=T * width).reshape(T, width)
        psum += prof.sum(axis=0)
        psq += (prof * prof).sum(axis=0)
        for rows in internal_rows:
            np.add.at(isum, rows[1], 1)
        picks = np.array([splitmix64(s ^ G_PICK) % n for s in seeds], dtype=np.int64)
        D = depths[np.arange(T), picks]
        bad += int(np.count_nonzero((D < F + 1) | (D > H)))
        for hist, vals in ((hh, H), (fh, F), (dh, D)):
            for v, c in zip(*np.unique(vals, return_counts=True)):
                hist[int(v)] = hist.get(int(v), 0) + int(c)
    return SimulationSummary(n, bias, trials, seed, psum, psq, isum,
                             dict(sorted(hh.items())), dict(sorted(fh.items())),
                             dict(sorted(dh.items())), bad)
