#!/usr/bin/env python3
"""
Benchmark Centralizer

Times the centralizer computation on random braids of B_8 for growing
canonical length and estimates the growth exponent from a log-log fit.
"""

import json
import sys
from datetime import datetime
from pathlib import Path

# Add parent directory for imports
sys.path.append(str(Path(__file__).parent))
from utils.genericity import LEFT_WEIGHTED, benchmark_centralizer, fit_runtime_exponent

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
BENCH_DIR = PROJECT_ROOT / "outputs" / "benchmark"
RESULTS_PATH = BENCH_DIR / "benchmark.json"

STRANDS = 8
LENGTHS = (25, 50, 100, 200)
TRIALS = 5
SEED = 0
# Independent draws at l = 200 spend many redraws; runtime does not depend on the sampler
SAMPLER = LEFT_WEIGHTED


def run_benchmark():
    """Time the centralizer for each length."""
    print("\n" + "="*60)
    print(f"TIMING CENTRALIZERS IN B_{STRANDS}")
    print("="*60)

    frame = benchmark_centralizer(
        STRANDS, LENGTHS, trials=TRIALS, seed=SEED, progress=True, method=SAMPLER
    )
    print(frame.to_string(index=False))
    return frame


def fit_exponent(frame):
    """Report the log-log slope of runtime against length."""
    slope = fit_runtime_exponent(frame)
    if slope is None:
        print("\nWarning: fewer than two lengths timed, no exponent fitted")
    else:
        print(f"\nFitted exponent: {slope:.2f}")
    return slope


def save_results(frame, exponent):
    """Save benchmark results."""
    print("\n" + "="*60)
    print("SAVING RESULTS")
    print("="*60)

    BENCH_DIR.mkdir(parents=True, exist_ok=True)

    results = {
        'run_date': datetime.now().isoformat(),
        'n': STRANDS,
        'trials': TRIALS,
        'seed': SEED,
        'sampler': SAMPLER,
        'fitted_exponent': exponent,
        'rows': json.loads(frame.to_json(orient="records")),
    }

    print(f"Saving to: {RESULTS_PATH}")
    with open(RESULTS_PATH, 'w') as f:
        json.dump(results, f, indent=2)

    print("\nBenchmark results:")
    print(json.dumps(results, indent=2))


def main():
    """Main execution."""
    print("="*60)
    print("CENTRALIZER BENCHMARK")
    print("="*60)

    frame = run_benchmark()
    exponent = fit_exponent(frame)
    save_results(frame, exponent)

    print("\n" + "="*60)
    print("COMPLETE")
    print("="*60)
    print(f"\nOutput: {RESULTS_PATH}")
    print("\nNext step: Run scripts/03_freeze_fixture.py")


if __name__ == "__main__":
    main()
