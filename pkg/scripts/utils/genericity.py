"""
Genericity Lab

Random braids of prescribed infimum and canonical length, the middle-fifth
and σ1-non-intrusive predicates, and the experiment that measures how often
the two-generator centralizer path applies.

Two samplers are available:

- ``independent`` (default): l independent uniform simple elements other
  than 1 and Δ, multiplied after Δ^p and normalized; the whole draw is
  rejected unless inf = p and ℓ = l. Prefixes are checked as they grow,
  since inf never drops and sup cannot recover once a factor is absorbed.
  Acceptance decays geometrically in l, quickly for small n (in B_4 about
  0.6 per factor), so long braids in small groups exhaust the redraw cap.
- ``left-weighted``: each factor is uniform among the simple elements other
  than 1 and Δ that are left-weighted after its predecessor, drawn directly
  by sorting a random permutation inside the blocks between allowed
  descents. Every draw is accepted.

Neither is the uniform measure on a ball of the Cayley graph; reported
proportions are relative to the sampler used.
"""

import logging
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from .centralizer import FALLBACK, centralizer_generators
from .conjugacy import slide_to_circuit
from .errors import CapExceededError, InvalidBraidError, OracleBoundError
from .normal_form import NormalForm, delta_power, from_simple, is_rigid, multiply
from .simple import SimpleElement, atom, finishing_set, right_complement
from .uss_graph import TAU_FIXED, TAU_SHIFT, TWO_ORBITS, VERTEX_CAP, check_minimal_uss

logger = logging.getLogger(__name__)

DEFAULT_LENGTHS = (4, 8, 16, 24)

# Redraws allowed per trial before giving up
REDRAW_CAP = 1000

INDEPENDENT = "independent"
LEFT_WEIGHTED = "left-weighted"
SAMPLERS = (INDEPENDENT, LEFT_WEIGHTED)

REPORT_COLUMNS = [
    "n", "l", "trials", "rigid", "minimal",
    "two_orbits", "tau_shift", "tau_fixed", "fallback", "mean_ms",
]

_CASE_COLUMN = {
    TWO_ORBITS: "two_orbits",
    TAU_SHIFT: "tau_shift",
    TAU_FIXED: "tau_fixed",
    FALLBACK: "fallback",
}


@dataclass(frozen=True)
class SampleConfig:
    """
    Target group B_n, canonical length l, infimum p, seed, trial count and
    sampler (``independent`` or ``left-weighted``).
    """

    n: int
    l: int
    p: int = 0
    seed: int = 0
    trials: int = 1
    method: str = INDEPENDENT

    def __post_init__(self):
        if self.n < 2:
            raise InvalidBraidError(f"A braid group needs n >= 2 strands, got {self.n}")
        if self.n == 2:
            raise InvalidBraidError("B_2 has no simple elements besides 1 and Δ to sample")
        if self.l < 1:
            raise InvalidBraidError(f"Canonical length must be >= 1, got {self.l}")
        if self.trials < 1:
            raise InvalidBraidError(f"Need at least one trial, got {self.trials}")
        if self.seed < 0:
            raise InvalidBraidError(f"Seed must be non-negative, got {self.seed}")
        if self.method not in SAMPLERS:
            raise InvalidBraidError(
                f"Unknown sampler {self.method!r}; expected one of {', '.join(SAMPLERS)}"
            )


@dataclass
class ExperimentRow:
    n: int
    l: int
    trials: int
    rigid: int = 0
    minimal: int = 0
    two_orbits: int = 0
    tau_shift: int = 0
    tau_fixed: int = 0
    fallback: int = 0
    mean_ms: float = 0.0
    failures: int = 0
    proxy: int = 0
    proxy_not_minimal: int = 0


@dataclass
class ExperimentReport:
    seed: int
    method: str = INDEPENDENT
    rows: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

def _draw_simple(rng, n):
    """A uniform simple element other than 1 and Δ."""
    while True:
        s = SimpleElement(tuple(int(v) for v in rng.permutation(n)))
        if not (s.is_identity or s.is_delta):
            return s


def _draw_follower(rng, n, allowed):
    """A uniform permutation table whose descents all lie in ``allowed``."""
    values = rng.permutation(n)
    table = []
    start = 0
    for k in range(1, n + 1):
        if k == n or k in allowed:
            table.extend(sorted(int(v) for v in values[start:k]))
            start = k
    return SimpleElement(tuple(table))


def _sample_independent(cfg, rng, trial, redraw_cap):
    rejected = 0
    while True:
        x = delta_power(cfg.n, cfg.p)
        for j in range(1, cfg.l + 1):
            x = multiply(x, from_simple(_draw_simple(rng, cfg.n)))
            # inf never drops and an absorbed factor is never recovered
            if x.inf != cfg.p or x.length != j:
                break
        else:
            return x
        rejected += 1
        if rejected > redraw_cap:
            raise CapExceededError("redraw cap", redraw_cap, f"trial {trial}")


def _sample_left_weighted(cfg, rng, trial, redraw_cap):
    n = cfg.n
    everything = frozenset(range(1, n))
    redraws = 0
    factors = []
    previous = None
    while len(factors) < cfg.l:
        allowed = everything if previous is None else finishing_set(previous)
        candidate = _draw_follower(rng, n, allowed)
        if candidate.is_identity or candidate.is_delta:
            redraws += 1
            if redraws > redraw_cap:
                raise CapExceededError("redraw cap", redraw_cap, f"trial {trial}")
            continue
        factors.append(candidate)
        previous = candidate
    return NormalForm(n, cfg.p, tuple(factors))


def sample_normal_form(cfg, trial, redraw_cap=REDRAW_CAP):
    """
    A random braid with inf = cfg.p and canonical length cfg.l.

    Parameters
    ----------
    cfg : SampleConfig
        ``cfg.method`` selects the sampler.
    trial : int
        Trial index; the output depends only on (cfg.seed, trial).
    redraw_cap : int
        Rejected draws allowed for this trial.

    Returns
    -------
    NormalForm

    Raises
    ------
    CapExceededError
        When more than ``redraw_cap`` draws are rejected.
    """
    rng = np.random.default_rng([cfg.seed, trial])
    if cfg.method == LEFT_WEIGHTED:
        return _sample_left_weighted(cfg, rng, trial, redraw_cap)
    return _sample_independent(cfg, rng, trial, redraw_cap)


def middle_fifth(x):
    """
    Factors x_{2⌈l/5⌉+1} … x_{l-2⌈l/5⌉} of the left normal form (1-based,
    inclusive); empty when the range is empty.
    """
    l = x.length
    margin = 2 * math.ceil(l / 5)
    return list(x.factors[margin:l - margin])


def sigma1_nonintrusive_proxy(x):
    """
    Proxy for σ1-non-intrusiveness: both σ1 and ∂(σ1) occur among the middle
    fifth factors, and sliding reaches a rigid element through a conjugator
    of canonical length at most 2⌈l/5⌉.
    """
    middle = middle_fifth(x)
    s1 = atom(x.n, 1)
    if s1 not in middle or right_complement(s1) not in middle:
        return False
    step = slide_to_circuit(x)
    summit = step.element
    if summit.length == 0 or not is_rigid(summit):
        return False
    return step.conjugator.length <= 2 * math.ceil(x.length / 5)


def proxy_agreement(samples):
    """
    Cross-count the σ1 proxy against check_minimal_uss after sliding.

    Returns
    -------
    dict
        Counts for ``proxy_and_minimal``, ``proxy_not_minimal``,
        ``minimal_not_proxy`` and ``neither``.
    """
    counts = {"proxy_and_minimal": 0, "proxy_not_minimal": 0, "minimal_not_proxy": 0, "neither": 0}
    for x in samples:
        proxy = sigma1_nonintrusive_proxy(x)
        minimal = check_minimal_uss(slide_to_circuit(x).element)
        if proxy and minimal:
            counts["proxy_and_minimal"] += 1
        elif proxy:
            counts["proxy_not_minimal"] += 1
            logger.warning("σ1 proxy holds but the ultra summit set is not minimal: %r", x)
        elif minimal:
            counts["minimal_not_proxy"] += 1
        else:
            counts["neither"] += 1
    return counts


# ---------------------------------------------------------------------------
# Experiment
# ---------------------------------------------------------------------------

def _run_trial(cfg, trial, vertex_cap):
    try:
        x = sample_normal_form(cfg, trial)
        started = time.perf_counter()
        summit = slide_to_circuit(x).element
        rigid = summit.length > 0 and is_rigid(summit)
        minimal = check_minimal_uss(summit)
        output = centralizer_generators(x, vertex_cap=vertex_cap)
    except (CapExceededError, OracleBoundError) as exc:
        logger.warning("Trial %d (n=%d, l=%d) failed: %s", trial, cfg.n, cfg.l, exc)
        return {"failed": True}
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    proxy = sigma1_nonintrusive_proxy(x)
    return {
        "failed": False,
        "rigid": rigid,
        "minimal": minimal,
        "case": output.case_tag,
        "ms": elapsed_ms,
        "proxy": proxy,
    }


def _tally(cfg, results):
    row = ExperimentRow(n=cfg.n, l=cfg.l, trials=cfg.trials)
    times = []
    for result in results:
        if result["failed"]:
            row.failures += 1
            continue
        row.rigid += result["rigid"]
        row.minimal += result["minimal"]
        column = _CASE_COLUMN[result["case"]]
        setattr(row, column, getattr(row, column) + 1)
        row.proxy += result["proxy"]
        row.proxy_not_minimal += result["proxy"] and not result["minimal"]
        times.append(result["ms"])
    row.mean_ms = float(np.mean(times)) if times else 0.0
    return row


def run_experiment(n, lengths=DEFAULT_LENGTHS, trials=200, seed=0, p=0,
                   workers=1, vertex_cap=VERTEX_CAP, progress=False, method=INDEPENDENT):
    """
    Run the centralizer on random braids for each canonical length.

    Parameters
    ----------
    n : int
        Number of strands.
    lengths : sequence of int
        Canonical lengths to sample.
    trials : int
        Trials per length.
    seed : int
        Base seed; trial t of every length uses (seed, t).
    p : int
        Infimum of the sampled braids.
    workers : int
        joblib workers; results are aggregated in trial order.
    vertex_cap : int
        Vertex cap for fallback graphs; trials hitting a cap count as failures.
    progress : bool
        Show a tqdm progress bar per length.
    method : str
        Sampler, ``independent`` or ``left-weighted``.

    Returns
    -------
    ExperimentReport
    """
    report = ExperimentReport(seed=seed, method=method)
    for l in lengths:
        cfg = SampleConfig(n=n, l=l, p=p, seed=seed, trials=trials, method=method)
        indices = range(trials)
        if progress:
            indices = tqdm(indices, desc=f"B_{n}, l={l}")
        results = Parallel(n_jobs=workers)(
            delayed(_run_trial)(cfg, t, vertex_cap) for t in indices
        )
        row = _tally(cfg, results)
        logger.info(
            "n=%d l=%d: %d/%d minimal, %d failures", n, l, row.minimal, trials, row.failures
        )
        report.rows.append(row)
    return report


def report_to_frame(report):
    """Report rows as a DataFrame with the fixed CSV column order."""
    frame = pd.DataFrame([asdict(row) for row in report.rows])
    return frame.reindex(columns=REPORT_COLUMNS)


def report_to_csv(report, path=None):
    """Write the CSV to ``path``, or return it as a string."""
    return report_to_frame(report).to_csv(path, index=False, float_format="%.3f")


def report_to_json(report):
    return {
        "seed": report.seed,
        "method": report.method,
        "rows": [asdict(row) for row in report.rows],
    }


def minimal_proportions(report):
    """{l: minimal / trials} per row."""
    return {row.l: row.minimal / row.trials for row in report.rows}


# ---------------------------------------------------------------------------
# Benchmark
# ---------------------------------------------------------------------------

def benchmark_centralizer(n, lengths, trials=5, seed=0, progress=False, method=INDEPENDENT):
    """
    Mean centralizer runtime per canonical length, sampling with ``method``.

    Returns
    -------
    pandas.DataFrame
        Columns ``l``, ``mean_s``, ``max_s``, ``failures`` and ``exponent``,
        the log-log slope of the mean runtime against the previous length
        (NaN for the first row). Trials hitting a cap or the brute-force
        strand bound are counted in ``failures`` and left out of the means.
    """
    records = []
    for l in lengths:
        cfg = SampleConfig(n=n, l=l, seed=seed, trials=trials, method=method)
        indices = tqdm(range(trials), desc=f"l={l}") if progress else range(trials)
        timings = []
        failures = 0
        for t in indices:
            try:
                x = sample_normal_form(cfg, t)
                started = time.perf_counter()
                centralizer_generators(x)
            except (CapExceededError, OracleBoundError) as exc:
                logger.warning("Benchmark trial %d (l=%d) failed: %s", t, l, exc)
                failures += 1
                continue
            timings.append(time.perf_counter() - started)
        records.append({
            "l": l,
            "mean_s": float(np.mean(timings)) if timings else float("nan"),
            "max_s": float(np.max(timings)) if timings else float("nan"),
            "failures": failures,
        })

    frame = pd.DataFrame(records)
    frame["exponent"] = np.log(frame["mean_s"]).diff() / np.log(frame["l"].astype(float)).diff()
    return frame


def fit_runtime_exponent(frame):
    """
    Least-squares slope of log(mean_s) against log(l) over the timed rows of
    a benchmark frame, or None when fewer than two rows were timed.
    """
    usable = frame.dropna(subset=["mean_s"])
    if len(usable) < 2:
        return None
    slope, _ = np.polyfit(np.log(usable["l"].astype(float)), np.log(usable["mean_s"]), 1)
    return float(slope)
