from core.config import configure_logging, load_config
from core.graph import SUITE_ORDER, SUITES


def verify():
    configure_logging("WARNING")
    print("--- Starting Suite Verification ---")

    # Small grids keep this a smoke run; the CLI runs the full defaults
    config = load_config(alpha_grid="0,1", kappa_grid="-1/3,0,1/2,1", nmax=3, mmax=60, degree_max=6)

    failures = 0
    for name in SUITE_ORDER:
        print(f"\nTesting {name} suite...")
        state = {"suite": name, "config": config, "checks": [], "errors": [], "completed": []}
        result = SUITES[name].run(state)
        checks = result["checks"]
        passed = sum(1 for check in checks if check.passed)
        print(f"Checks: {passed}/{len(checks)}, errors: {len(result['errors'])}")

        if passed == len(checks) and not result["errors"]:
            print(f"[PASS] {name}")
        else:
            failures += 1
            for check in checks:
                if not check.passed:
                    print(f"  {check.name} {check.inputs}: expected {check.expected}, computed {check.computed}")
            for error in result["errors"]:
                print(f"  {error['check']}: {error['error_type']}: {error['message']}")
            print(f"[FAIL] {name}")

    print("\n--- Verification Complete ---")
    return failures


if __name__ == "__main__":
    raise SystemExit(1 if verify() else 0)
