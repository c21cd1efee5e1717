#!/usr/bin/env python3
"""
Braid Centralizer - Setup Verification

Quick check of the environment and dependencies. Run it directly:

    python test_setup.py

pytest collects no tests from this file.
"""

import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent

REQUIRED_PACKAGES = ["numpy", "pandas", "networkx", "joblib", "tqdm", "pytest", "jsonschema"]

REQUIRED_DIRS = ["scripts/utils", "schemas"]

REQUIRED_FILES = [
    "braid_cli.py",
    "scripts/01_run_experiment.py",
    "scripts/02_benchmark_centralizer.py",
    "scripts/03_freeze_fixture.py",
    "scripts/utils/simple.py",
    "scripts/utils/normal_form.py",
    "scripts/utils/conjugacy.py",
    "scripts/utils/uss_graph.py",
    "scripts/utils/centralizer.py",
    "scripts/utils/genericity.py",
    "scripts/utils/words.py",
]


def check(name, func, results):
    """Run one check and record the outcome."""
    try:
        func()
        print(f"✓ {name}")
        results["passed"] += 1
        return True
    except Exception as e:
        print(f"✗ {name}: {e}")
        results["failed"] += 1
        return False


def check_python_version():
    version = sys.version_info
    if version.major != 3 or version.minor < 9:
        raise Exception(f"Python 3.9+ required, got {version.major}.{version.minor}")


def importer(package):
    def run():
        __import__(package)
    return run


def check_directories():
    for dir_path in REQUIRED_DIRS:
        if not (PROJECT_ROOT / dir_path).is_dir():
            raise Exception(f"Missing directory: {dir_path}")


def check_files():
    for file_path in REQUIRED_FILES:
        if not (PROJECT_ROOT / file_path).exists():
            raise Exception(f"Missing file: {file_path}")


def check_utils_import():
    sys.path.append(str(PROJECT_ROOT / "scripts"))
    from utils.centralizer import centralizer_generators
    from utils.normal_form import normalize_ints

    output = centralizer_generators(normalize_ints(3, [1, 1]))
    if output.case_tag != "TwoOrbits":
        raise Exception(f"Unexpected centralizer case {output.case_tag}")


def main():
    print("="*60)
    print("BRAID CENTRALIZER - SETUP VERIFICATION")
    print("="*60)

    results = {"passed": 0, "failed": 0}
    check("Python version (3.9+)", check_python_version, results)
    for package in REQUIRED_PACKAGES:
        check(package, importer(package), results)
    check("Project directory structure", check_directories, results)
    check("Required files", check_files, results)
    check("Project utilities import", check_utils_import, results)

    print("\n" + "="*60)
    print("SETUP SUMMARY")
    print("="*60)
    print(f"Passed: {results['passed']}")
    print(f"Failed: {results['failed']}")

    if results["failed"] == 0:
        print("\n✓ All checks passed! Setup is complete.")
        print("\nNext steps:")
        print("  1. Review TESTING.md for the testing guide")
        print("  2. Run: pytest")
        print("  3. Run: python scripts/01_run_experiment.py")
    else:
        print(f"\n✗ {results['failed']} check(s) failed. Please install missing dependencies:")
        print("  pip install -r requirements.txt")
        sys.exit(1)


if __name__ == "__main__":
    main()
