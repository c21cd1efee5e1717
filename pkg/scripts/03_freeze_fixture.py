#!/usr/bin/env python3
"""
Freeze Genericity Fixture

Runs the B_4 experiment with a fixed seed and stores the report under
fixtures/. The test suite compares fresh runs against this file, so the
sampler and the centralizer stay reproducible across changes.
"""

import json
import sys
from pathlib import Path

# Add parent directory for imports
sys.path.append(str(Path(__file__).parent))
from utils.genericity import (
    DEFAULT_LENGTHS,
    LEFT_WEIGHTED,
    report_to_frame,
    report_to_json,
    run_experiment,
)

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
FIXTURE_DIR = PROJECT_ROOT / "fixtures"
FIXTURE_PATH = FIXTURE_DIR / "genericity_b4.json"

STRANDS = 4
TRIALS = 200
SEED = 0
SAMPLER = LEFT_WEIGHTED


def main():
    """Main execution."""
    print("="*60)
    print("FREEZING GENERICITY FIXTURE")
    print("="*60)
    print(f"B_{STRANDS}, lengths {list(DEFAULT_LENGTHS)}, {TRIALS} trials, seed {SEED}")
    print(f"Sampler: {SAMPLER}")

    report = run_experiment(
        n=STRANDS, lengths=DEFAULT_LENGTHS, trials=TRIALS, seed=SEED, progress=True,
        method=SAMPLER,
    )
    print(report_to_frame(report).to_string(index=False))

    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    payload = report_to_json(report)
    payload["trials"] = TRIALS
    payload["n"] = STRANDS
    with open(FIXTURE_PATH, 'w') as f:
        json.dump(payload, f, indent=2)

    print("\n" + "="*60)
    print("COMPLETE")
    print("="*60)
    print(f"\nOutput: {FIXTURE_PATH}")
    print("\nNext step: Run pytest to check the fixture against a fresh run")


if __name__ == "__main__":
    main()
