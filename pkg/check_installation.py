#!/usr/bin/env python3
"""
Verify that all dependencies are installed and the toolkit runs end to end
"""
import os
import sys
from importlib import import_module
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))


def check_import(module_name, package_name=None):
    """Check if a module can be imported"""
    display_name = package_name or module_name
    try:
        mod = import_module(module_name)
        version = getattr(mod, '__version__', 'unknown version')
        print(f"✓ {display_name:25s} - {version}")
        return True
    except ImportError as e:
        print(f"✗ {display_name:25s} - NOT INSTALLED")
        print(f"  Error: {e}")
        return False


def check_directories():
    """Check if required directories exist"""
    dirs = [
        'src/graph_core', 'src/predicates', 'src/exact_solver',
        'src/poly_algorithms', 'src/gadget_forge', 'src/reductions', 'tests',
    ]

    all_exist = True
    for dir_path in dirs:
        if os.path.exists(dir_path):
            print(f"✓ Directory exists: {dir_path}")
        else:
            print(f"✗ Directory missing: {dir_path}")
            all_exist = False

    return all_exist


def check_smoke_run():
    """Solve one small instance through the library"""
    try:
        from exact_solver.search import decide
        from gadget_forge.gadgets import GadgetFamily, GadgetKind, build_gadget
        from predicates.part_predicates import PartPredicate

        tree = build_gadget(GadgetKind(GadgetFamily.TREE_T1))
        outcome = decide(tree, [PartPredicate.regular(), PartPredicate.locally_irregular()])
        if not outcome.feasible:
            print("✗ Smoke run               - unexpected verdict on tree-t1")
            return False
        print(f"✓ Smoke run               - tree-t1 solved in {outcome.nodes} nodes")
        return True
    except Exception as e:
        print(f"✗ Smoke run failed: {e}")
        return False


def main():
    print("=" * 70)
    print("Edge Decomposition Toolkit - Installation Check")
    print("=" * 70)

    print("\n[1/4] Checking Core Dependencies...")
    print("-" * 70)

    core_modules = [
        ("numpy", "NumPy"),
        ("networkx", "NetworkX"),
        ("tqdm", "tqdm"),
    ]

    core_ok = all(check_import(mod, name) for mod, name in core_modules)

    print("\n[2/4] Checking Plotting and Test Dependencies...")
    print("-" * 70)

    extra_modules = [
        ("matplotlib", "Matplotlib"),
        ("pytest", "pytest"),
    ]

    extra_ok = all(check_import(mod, name) for mod, name in extra_modules)

    print("\n[3/4] Checking Project Structure...")
    print("-" * 70)
    dirs_ok = check_directories()

    print("\n[4/4] Running Smoke Test...")
    print("-" * 70)
    smoke_ok = core_ok and check_smoke_run()

    print("\n" + "=" * 70)
    print("Summary")
    print("=" * 70)

    results = {
        "Core Dependencies": core_ok,
        "Plotting and Tests": extra_ok,
        "Project Structure": dirs_ok,
        "Smoke Test": smoke_ok,
    }

    for component, status in results.items():
        status_icon = "✓" if status else "✗"
        print(f"{status_icon} {component}")

    if all(results.values()):
        print("\n🎉 All checks passed! Your installation is ready.")
        print("\nNext steps:")
        print("  1. Run: python main.py --help")
        print("  2. Run: pytest")
        return 0
    else:
        print("\n⚠ Some components are missing or not working properly.")
        print("\nPlease check:")
        print("  - Run: pip install -r requirements.txt")
        print("  - See SETUP.md for detailed instructions")
        return 1


if __name__ == "__main__":
    sys.exit(main())
