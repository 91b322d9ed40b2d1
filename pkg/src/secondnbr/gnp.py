"""Seeded G(n, p) sampling, Chernoff bounds, and finite-n property checkers.

Each checker tests one concrete graph (and, where the property quantifies
over vertex sets, one concrete choice of sets). Bands are always centred on
``n*p``, never ``(n-1)*p``. Graphs with fewer than two vertices pass the
universal checks vacuously.

No checker has a built-in value for the constant ``C``; callers supply it
through :class:`ClaimParameters`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np
from scipy import sparse

from .graph import (Digraph, Graph, VertexSet, _as_mask, internal_edge_count,
                    undirected_edge_count)
from .rng import check_seed, stream


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    p: float
    seed: int
    trial: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        check_seed(self.seed)


@dataclass(frozen=True)
class ClaimParameters:
    epsilon: float
    delta: float
    c_small: float
    c_large: float

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if not 0.0 < self.delta < 1.0:
            raise ValueError("delta must lie in (0, 1)")

    @classmethod
    def seymour(cls, epsilon: float, c_small: float) -> "ClaimParameters":
        """``delta = epsilon/3`` and ``c_large = 2*c_small/epsilon``."""
        return cls(epsilon, epsilon / 3, c_small, 2 * c_small / epsilon)

    @classmethod
    def sullivan(cls, epsilon: float, c_small: float) -> "ClaimParameters":
        """``delta = epsilon/5``; only ``c_small`` is used."""
        return cls(epsilon, epsilon / 5, c_small, c_small)


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    passed: bool
    value: float
    witness: object = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing verdict needs a witness")


# -- sampling ----------------------------------------------------------------

def sample_gnp(config: SamplerConfig) -> Graph:
    """Include each pair ``i < j`` (lexicographic order) iff its uniform draw is below ``p``."""
    n, p = config.n, config.p
    rng = stream(config.seed, config.trial, "gnp")
    draws = rng.random(n * (n - 1) // 2)
    mat = np.zeros((n, n), dtype=bool)
    off = 0
    for i in range(n - 1):
        k = n - 1 - i
        mat[i, i + 1:] = draws[off:off + k] < p
        off += k
    mat |= mat.T
    return Graph.from_matrix(mat)


def random_orientation(G: Graph, seed: int, trial: int = 0) -> Digraph:
    """Orient each edge (lexicographic order) backwards with probability 1/2."""
    edges = G.edges()
    flips = stream(seed, trial, "orientation").random(len(edges)) < 0.5
    rows = [0] * G.n
    for (u, v), back in zip(edges, flips.tolist()):
        if back:
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
    return Digraph(G.n, rows)


# -- Chernoff bounds ---------------------------------------------------------

def _check_np(n, p):
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")


def chernoff_two_sided(n: float, p: float, delta: float) -> float:
    """``2 exp(-delta^2 n p / 3)``, bounding ``P[|X - np| >= delta np]`` for ``0 < delta < 1``."""
    _check_np(n, p)
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    return 2.0 * math.exp(-delta * delta * n * p / 3.0)


def chernoff_upper(n: float, p: float, delta: float) -> float:
    """``(e^delta / (1+delta)^(1+delta))^(np)``, bounding ``P[X >= (1+delta) np]``."""
    _check_np(n, p)
    if not delta > 0.0:
        raise ValueError("delta must be positive")
    return math.exp(n * p * (delta - (1.0 + delta) * math.log1p(delta)))


# -- degree checks -----------------------------------------------------------

def check_degree_band(G: Graph, low: float | None = None, high: float | None = None,
                      claim: str = "degree-band", center: float | None = None) -> ClaimVerdict:
    """Every degree must lie in ``[low, high]`` (either side optional).

    The reported value is the maximum degree for an upper band, the minimum
    for a lower band, and the largest ``|d - center| / center`` for a
    two-sided band. The witness is the lowest-id vertex furthest outside.
    """
    degs = G.degrees()
    if not degs:
        return ClaimVerdict(claim, True, 0.0)
    worst, witness = 0.0, None
    for v, d in enumerate(degs):
        miss = 0.0
        if low is not None and d < low:
            miss = low - d
        if high is not None and d > high:
            miss = d - high
        if miss > worst:
            worst, witness = miss, v
    if low is not None and high is not None:
        c = center if center else (low + high) / 2
        value = max(abs(d - c) for d in degs) / c if c else float(max(degs))
    elif high is not None:
        value = float(max(degs))
    else:
        value = float(min(degs))
    return ClaimVerdict(claim, witness is None, value, witness)


def check_degree_upper(G: Graph, epsilon: float) -> ClaimVerdict:
    """``d(v) <= (1 - epsilon) n / 2`` for every vertex."""
    return check_degree_band(G, high=(1 - epsilon) * G.n / 2, claim="degree-upper")


DEGREE_PRESETS = ("degree-upper", "min-degree-dense", "max-degree-sparse", "degree-concentration")


def degree_preset(G: Graph, preset: str, *, p: float | None = None,
                  epsilon: float | None = None, delta: float | None = None) -> ClaimVerdict:
    """Named degree bands.

    ``degree-upper``: ``d <= (1-eps) n/2``. ``min-degree-dense``:
    ``d >= (1+eps/2) n/2``. ``max-degree-sparse``: ``d <= 4np``.
    ``degree-concentration``: ``d in (1 +- delta) np``.
    """
    n = G.n
    if preset == "degree-upper":
        return check_degree_upper(G, epsilon)
    if preset == "min-degree-dense":
        return check_degree_band(G, low=(1 + epsilon / 2) * n / 2, claim=preset)
    if preset == "max-degree-sparse":
        return check_degree_band(G, high=4 * n * p, claim=preset)
    if preset == "degree-concentration":
        return check_degree_band(G, low=(1 - delta) * n * p, high=(1 + delta) * n * p,
                                 claim=preset, center=n * p)
    raise ValueError(f"unknown degree preset {preset!r}")


# -- density checks for given sets -------------------------------------------

CROSS_PRESETS = ("cross-gap", "cross-concentration")


def _nonempty_disjoint(G: Graph, A, B) -> tuple[VertexSet, VertexSet]:
    a, b = VertexSet(G.n, _as_mask(G.n, A)), VertexSet(G.n, _as_mask(G.n, B))
    if not a or not b:
        raise ValueError("vertex sets must be nonempty")
    if not a.isdisjoint(b):
        raise ValueError("vertex sets overlap")
    return a, b


def check_cross_density_band(G: Graph, A, B, preset: str, *, p: float, delta: float,
                             epsilon: float | None = None, side: str = "both") -> ClaimVerdict:
    """Edge count between disjoint ``A`` and ``B`` against a band.

    ``cross-gap``: ``(p - delta)|A||B| <= e(A,B) <= (1 - eps)|A||B|/2``.
    ``cross-concentration``: ``e(A,B) in (1 +- delta)|A||B|p``. ``side``
    selects ``lower``, ``upper`` or ``both`` bounds. The value is the edge
    density ``e(A,B) / (|A||B|)``.
    """
    a, b = _nonempty_disjoint(G, A, B)
    size = len(a) * len(b)
    e = undirected_edge_count(G, a, b)
    if preset == "cross-gap":
        lo, hi = (p - delta) * size, (1 - epsilon) * size / 2
    elif preset == "cross-concentration":
        lo, hi = (1 - delta) * size * p, (1 + delta) * size * p
    else:
        raise ValueError(f"unknown cross-density preset {preset!r}")
    if side not in ("lower", "upper", "both"):
        raise ValueError(f"side must be lower, upper or both, got {side!r}")
    ok = (side == "upper" or e >= lo) and (side == "lower" or e <= hi)
    claim = preset if side == "both" else f"{preset}-{side}"
    return ClaimVerdict(claim, ok, e / size, None if ok else (a.tolist(), b.tolist()))


INTERNAL_PRESETS = ("internal-sparse-lower", "internal-concentration")


def check_internal_density(G: Graph, A, preset: str, *, p: float,
                           delta: float | None = None) -> ClaimVerdict:
    """Internal edge count of ``A``.

    ``internal-sparse-lower`` needs ``|A| = n/3`` (floor or ceiling) and
    checks ``e(A) >= n^2 p / 25``. ``internal-concentration`` needs
    ``|A| >= delta n`` and checks ``e(A) in (1 +- delta) binom(|A|, 2) p``.
    The value is ``e(A)``.
    """
    a = VertexSet(G.n, _as_mask(G.n, A))
    n, k = G.n, len(a)
    e = internal_edge_count(G, a)
    if preset == "internal-sparse-lower":
        if k not in (n // 3, -(-n // 3)):
            raise ValueError(f"set size {k} does not match n/3 for n={n}")
        ok = e >= n * n * p / 25
    elif preset == "internal-concentration":
        if k < delta * n:
            raise ValueError(f"set size {k} below delta*n = {delta * n}")
        pairs = k * (k - 1) / 2
        ok = (1 - delta) * pairs * p <= e <= (1 + delta) * pairs * p
    else:
        raise ValueError(f"unknown internal-density preset {preset!r}")
    return ClaimVerdict(preset, ok, float(e), None if ok else a.tolist())


def codegree_matrix(G: Graph):
    """Common-neighbour counts for every pair; dense for small or dense graphs."""
    n = G.n
    if n <= 4000 or G.m > 0.02 * n * n:
        mat = G.adjacency_matrix().astype(np.float32)
        return (mat @ mat).astype(np.int64)
    rows, cols = [], []
    for u, v in G.edges():
        rows += [u, v]
        cols += [v, u]
    adj = sparse.csr_matrix((np.ones(len(rows), np.int64), (rows, cols)), shape=(n, n))
    return (adj @ adj).tocsr()


def check_common_neighbors_bound(G: Graph, p: float, threshold_divisor: float = 2400) -> ClaimVerdict:
    """Every pair ``u != v`` has fewer than ``np / threshold_divisor`` common neighbours.

    The value is the largest common-neighbour count; the witness the
    lexicographically first pair attaining it.
    """
    n = G.n
    bound = n * p / threshold_divisor
    if n < 2:
        return ClaimVerdict("codegree", True, 0.0)
    cod = codegree_matrix(G)
    if sparse.issparse(cod):
        coo = sparse.triu(cod, k=1).tocoo()
        if coo.nnz:
            best = int(coo.data.max())
            hits = sorted(zip(coo.row[coo.data == best].tolist(), coo.col[coo.data == best].tolist()))
            pair = hits[0]
        else:
            best, pair = 0, (0, 1)
    else:
        upper = np.triu(cod, k=1)
        upper[np.tril_indices(n)] = -1
        flat = int(np.argmax(upper))
        pair = divmod(flat, n)
        best = int(upper[pair])
    ok = best < bound
    return ClaimVerdict("codegree", ok, float(best), None if ok else (int(pair[0]), int(pair[1])))


def check_halfback_extension(G: Graph, X) -> tuple[bool, int | None]:
    """Lowest vertex outside ``X`` with at least ``|X|/2`` neighbours in ``X``."""
    x = _as_mask(G.n, X)
    if x == (1 << G.n) - 1:
        raise ValueError("X must leave at least one vertex uncovered")
    need = x.bit_count() / 2
    for v in range(G.n):
        if not (x >> v) & 1 and (G.adj[v] & x).bit_count() >= need:
            return True, v
    return False, None


def iter_induced_copies(G: Graph, H: Graph) -> Iterator[list[int]]:
    """Injective maps ``phi`` (``phi[i]`` is the image of H-vertex ``i``) with
    ``ij in E(H) <=> phi(i)phi(j) in E(G)``, in lexicographic order."""
    h = H.n
    if h > G.n:
        return
    phi: list[int] = []
    used = 0

    def extend():
        nonlocal used
        i = len(phi)
        if i == h:
            yield list(phi)
            return
        for c in range(G.n):
            if (used >> c) & 1:
                continue
            if all(H.has_edge(i, j) == G.has_edge(c, phi[j]) for j in range(i)):
                phi.append(c)
                used |= 1 << c
                yield from extend()
                used &= ~(1 << c)
                phi.pop()

    yield from extend()


def find_induced_copy(G: Graph, H: Graph) -> list[int] | None:
    """First induced embedding of ``H`` into ``G`` in lexicographic order, or None."""
    return next(iter_induced_copies(G, H), None)


# -- Monte Carlo over sampled sets ----------------------------------------------

@dataclass
class MonteCarloResult:
    claim: str
    passes: int
    samples: int
    extremal: float
    first_failure: object = None

    @property
    def rate(self) -> float:
        return self.passes / self.samples if self.samples else 1.0


def sample_disjoint_sets(n: int, sizes: Sequence[int], rng: np.random.Generator) -> list[VertexSet]:
    if sum(sizes) > n:
        raise ValueError("requested sets do not fit in the vertex range")
    perm = rng.permutation(n).tolist()
    out, off = [], 0
    for k in sizes:
        out.append(VertexSet.of(n, perm[off:off + k]))
        off += k
    return out


def monte_carlo_sets(G: Graph, check: Callable[..., ClaimVerdict], sizes: Sequence[int],
                     samples: int, rng: np.random.Generator, minimize: bool = True) -> MonteCarloResult:
    """Run ``check(G, *sets)`` on ``samples`` uniformly random disjoint set tuples."""
    passes, extremal, first, claim = 0, None, None, ""
    for _ in range(samples):
        verdict = check(G, *sample_disjoint_sets(G.n, sizes, rng))
        claim = verdict.claim
        passes += verdict.passed
        if not verdict.passed and first is None:
            first = verdict.witness
        if extremal is None or (verdict.value < extremal if minimize else verdict.value > extremal):
            extremal = verdict.value
    return MonteCarloResult(claim, passes, samples, extremal if extremal is not None else 0.0, first)


# -- claim suites --------------------------------------------------------------

SUITE_PRESETS = (
    "degree-upper", "min-degree-dense", "max-degree-sparse", "degree-concentration",
    "cross-gap", "cross-gap-lower", "cross-gap-upper", "cross-concentration",
    "internal-sparse-lower", "internal-concentration", "codegree", "halfback-extension",
)


@dataclass
class SuiteConfig:
    n: int
    p: float
    seed: int
    trials: int = 1
    epsilon: float = 0.2
    c_small: float | None = None
    presets: list[str] = field(default_factory=lambda: ["degree-upper"])
    sets: int = 100
    set_size: int | None = None
    suite: str = "seymour"

    def __post_init__(self):
        SamplerConfig(self.n, self.p, self.seed)
        unknown = [x for x in self.presets if x not in SUITE_PRESETS]
        if unknown:
            raise ValueError(f"unknown presets: {', '.join(unknown)}")
        if self.suite not in ("seymour", "sullivan"):
            raise ValueError("suite must be seymour or sullivan")
        if self.trials < 0 or self.sets < 0:
            raise ValueError("trials and sets must be non-negative")

    @property
    def params(self) -> ClaimParameters:
        c = 0.0 if self.c_small is None else self.c_small
        if self.suite == "sullivan":
            return ClaimParameters.sullivan(self.epsilon, c)
        return ClaimParameters.seymour(self.epsilon, c)

    def echo(self) -> dict:
        return {"n": self.n, "p": self.p, "seed": self.seed, "trials": self.trials,
                "epsilon": self.epsilon, "C": self.c_small, "presets": list(self.presets),
                "sets": self.sets, "set_size": self.set_size, "suite": self.suite,
                "delta": self.params.delta}


_SUITE_KEYS = {"n": int, "p": float, "seed": int, "trials": int, "epsilon": float,
               "C": float, "presets": str, "sets": int, "set_size": int, "suite": str}


def parse_suite_config(text: str, source: str = "<config>") -> SuiteConfig:
    """Parse ``key=value`` lines; ``#`` starts a comment, ``presets`` is comma-separated."""
    from .io import FormatError

    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"expected key=value, got {raw!r}", lineno, source)
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in _SUITE_KEYS:
            raise FormatError(f"unknown key {key!r}", lineno, source)
        try:
            values[key] = _SUITE_KEYS[key](val)
        except ValueError:
            raise FormatError(f"bad value for {key}: {val!r}", lineno, source) from None
    for key in ("n", "p", "seed"):
        if key not in values:
            raise FormatError(f"missing required key {key!r}", None, source)
    if "C" in values:
        values["c_small"] = values.pop("C")
    if "presets" in values:
        values["presets"] = [x.strip() for x in values["presets"].split(",") if x.strip()]
    try:
        return SuiteConfig(**values)
    except ValueError as exc:
        raise FormatError(str(exc), None, source) from None


_CROSS_SUITE = {
    "cross-gap": ("cross-gap", "both"),
    "cross-gap-lower": ("cross-gap", "lower"),
    "cross-gap-upper": ("cross-gap", "upper"),
    "cross-concentration": ("cross-concentration", "both"),
}


def _needs_c(preset: str) -> bool:
    return preset in _CROSS_SUITE


def _set_size(cfg: SuiteConfig) -> int:
    if cfg.set_size is not None:
        return cfg.set_size
    if cfg.c_small is None:
        raise ValueError("cross-density presets need C (or an explicit set_size)")
    return max(1, math.ceil(cfg.c_small * math.log(cfg.n)))


def _suite_record(claim, trial, passed, value, witness, **extra) -> dict:
    rec = {"claim": claim, "trial": trial, "pass": bool(passed), "value": value, "witness": witness}
    rec.update(extra)
    return rec


def run_claim_suite(cfg: SuiteConfig) -> Iterator[dict]:
    """Yield one verdict record per (trial, preset).

    Set-quantified presets sample ``cfg.sets`` random qualifying sets per
    trial and report ``passes`` / ``samples``; ``pass`` is true only when all
    sampled sets pass.
    """
    prm = cfg.params
    for preset in cfg.presets:
        if _needs_c(preset):
            _set_size(cfg)
    for trial in range(cfg.trials):
        G = sample_gnp(SamplerConfig(cfg.n, cfg.p, cfg.seed, trial))
        for preset in cfg.presets:
            if preset in DEGREE_PRESETS:
                v = degree_preset(G, preset, p=cfg.p, epsilon=prm.epsilon, delta=prm.delta)
                yield _suite_record(preset, trial, v.passed, v.value, v.witness)
                continue
            if preset == "codegree":
                v = check_common_neighbors_bound(G, cfg.p)
                yield _suite_record(preset, trial, v.passed, v.value, v.witness)
                continue
            rng = stream(cfg.seed, trial, "sets:" + preset)
            if preset in _CROSS_SUITE:
                name, side = _CROSS_SUITE[preset]
                k = _set_size(cfg)

                def check(g, a, b, name=name, side=side):
                    return check_cross_density_band(g, a, b, name, p=cfg.p, delta=prm.delta,
                                                    epsilon=prm.epsilon, side=side)
                res = monte_carlo_sets(G, check, (k, k), cfg.sets, rng, minimize=side != "upper")
            elif preset == "internal-sparse-lower":
                def check(g, a):
                    return check_internal_density(g, a, preset, p=cfg.p)
                res = monte_carlo_sets(G, check, (cfg.n // 3,), cfg.sets, rng)
            elif preset == "internal-concentration":
                k = cfg.set_size or max(2, math.ceil(prm.delta * cfg.n))

                def check(g, a):
                    return check_internal_density(g, a, preset, p=cfg.p, delta=prm.delta)
                res = monte_carlo_sets(G, check, (k,), cfg.sets, rng)
            else:  # halfback-extension
                res = _halfback_trials(G, prm.epsilon, cfg.sets, rng)
            yield _suite_record(preset, trial, res.passes == res.samples, res.extremal,
                                res.first_failure, passes=res.passes, samples=res.samples)


def _halfback_trials(G: Graph, epsilon: float, samples: int, rng) -> MonteCarloResult:
    # X of uniform size in [1, (1 - eps/4) n], capped so X never covers V
    top = max(1, min(G.n - 1, math.floor((1 - epsilon / 4) * G.n)))
    passes, first = 0, None
    for _ in range(samples):
        k = int(rng.integers(1, top + 1))
        (X,) = sample_disjoint_sets(G.n, (k,), rng)
        ok, _ = check_halfback_extension(G, X)
        passes += ok
        if not ok and first is None:
            first = X.tolist()
    return MonteCarloResult("halfback-extension", passes, samples, passes / samples if samples else 1.0, first)
