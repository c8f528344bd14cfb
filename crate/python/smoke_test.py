#!/usr/bin/env python3
"""Smoke test for the kummer_py extension module.

Builds the PyO3 crate, imports the resulting shared library, and checks a
handful of known values end to end. Run from anywhere:

    python3 python/smoke_test.py

Exits nonzero on the first failed check.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[1]

PASSED = 0


def check(description, condition):
    global PASSED
    if not condition:
        print(f"FAIL — {description}")
        sys.exit(1)
    PASSED += 1
    print(f"PASS — {description}")


def raises_value_error(fn, *args, **kwargs):
    try:
        fn(*args, **kwargs)
    except ValueError:
        return True
    return False


def build_and_import():
    subprocess.run(
        ["cargo", "build", "-p", "kummer-py"],
        cwd=REPO_ROOT,
        check=True,
    )
    lib = REPO_ROOT / "target" / "debug" / "libkummer_py.so"
    if not lib.exists():
        lib = REPO_ROOT / "target" / "release" / "libkummer_py.so"
    if not lib.exists():
        print("FAIL — built library not found under target/")
        sys.exit(1)
    stage = Path(tempfile.mkdtemp(prefix="kummer_py_"))
    shutil.copy2(lib, stage / "kummer_py.so")
    sys.path.insert(0, str(stage))
    import kummer_py

    return kummer_py


def main():
    k = build_and_import()
    p = 5

    # Coefficient vectors over the power basis rho^0..rho^3 (p = 5).
    x = [(1, 0, 0, 0, [1, 0, 0, 0])]
    y = [(0, 1, 0, 0, [1, 0, 0, 0])]
    x2y2 = [(2, 2, 0, 0, [1, 0, 0, 0])]
    x_plus_y = [(1, 0, 0, 0, [1, 0, 0, 0]), (0, 1, 0, 0, [1, 0, 0, 0])]
    standard_basis = [
        [(a, b, 0, 0, [1, 0, 0, 0])]
        for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
    ]

    check("module constant MAX_PRIME is 31", k.MAX_PRIME == 31)
    check("p must be an odd prime", raises_value_error(k.min_zero_sum, 4, [(1, 0)]))

    w = k.min_zero_sum(p, [(2, 3), (3, 2)])
    check("opposite vectors admit a weight-2 zero-sum", w["weight"] == 2)
    w = k.min_zero_sum(p, [(0, 1), (1, 0), (2, 2)])
    check(
        "x, y, x^2 y^2 witness is 1*(0,1) + 1*(1,0) + 2*(2,2)",
        w["weight"] == 4
        and w["multiplicities"] == [((0, 1), 1), ((1, 0), 1), ((2, 2), 2)],
    )
    check("x, y, xy spans a Kummer space", k.is_kummer_monomial(p, [(1, 0), (0, 1), (1, 1)]))
    check(
        "x, y, x^2 y^2 does not",
        not k.is_kummer_monomial(p, [(0, 1), (1, 0), (2, 2)]),
    )
    check("duplicate vectors are rejected", raises_value_error(k.min_zero_sum, p, [(1, 0), (1, 0)]))

    check("dim-3 witness for (2, 2) is k = 3", k.dim3_residue_witness(p, 2, 2) == 3)
    check("dim-3 witness for (1, 1) is absent", k.dim3_residue_witness(p, 1, 1) is None)
    check("dim-3 witness rejects a zero entry", raises_value_error(k.dim3_residue_witness, p, 0, 1))
    check(
        "dim-4 witness for (1,1), (2,2) exists",
        k.dim4_witness(p, (1, 1), (2, 2)) is not None,
    )

    check("index witness for (1,1,1) mod 7 is k = 1", k.index_witness(7, 1, 1, 1) == 1)
    check("(1,1,1) is admissible mod 7", k.admissible_triple(7, 1, 1, 1))
    check("(1,1,5) is not admissible mod 7", not k.admissible_triple(7, 1, 1, 5))
    for q in (5, 7, 11, 13):
        ok = all(
            k.index_witness(q, a, b, c) is not None
            for a in range(1, q)
            for b in range(1, q)
            for c in range(1, q)
            if k.admissible_triple(q, a, b, c)
        )
        check(f"every admissible triple mod {q} has an index witness", ok)

    space = k.standard_space(p, (0, 1), 1)
    check("standard space of ((0,1), 1) has 6 vectors", len(space) == 6)
    check(
        "its certificate is recovered",
        k.standardness_certificate(p, space) == ((0, 1), 1),
    )
    check("it is maximal", k.is_maximal(p, space))
    check(
        "x, y, xy is Kummer but not maximal",
        not k.is_maximal(p, [(1, 0), (0, 1), (1, 1)]),
    )
    check(
        "standard space rejects k = 0",
        raises_value_error(k.standard_space, p, (0, 1), 0),
    )

    verdict, condition = k.classify_triple(p, (1, 0), (0, 1), (1, 1))
    check(
        "triple x, y, xy matches difference_on_line_1_3_2",
        verdict and condition == "difference_on_line_1_3_2",
    )
    verdict, condition = k.classify_triple(p, (0, 1), (1, 0), (2, 2))
    check("triple x, y, x^2 y^2 matches nothing", not verdict and condition is None)

    spaces = k.enumerate_maximal(p)
    check("p = 5 has 96 maximal Kummer spaces of monomials", len(spaces) == 96)
    check(
        "every maximal space has dimension 6 and a certificate",
        all(len(e["space"]) == 6 and e["certificate"]["k"] >= 1 for e in spaces),
    )
    by_space = sorted(spaces, key=lambda e: e["space"])
    sym = sorted(k.enumerate_maximal(p, symmetry=True), key=lambda e: e["space"])
    check("symmetry-reduced enumeration agrees exactly", by_space == sym)
    check(
        "exhaustive enumeration refuses p = 11",
        raises_value_error(k.enumerate_maximal, 11),
    )
    check(
        "symmetry-reduced enumeration handles p = 11",
        len(k.enumerate_maximal(11, symmetry=True)) == (11 * 11 - 1) * (11 - 1),
    )

    check("the generator x is a Kummer element", k.is_kummer_element(p, x))
    check("x + y is a Kummer element", k.is_kummer_element(p, x_plus_y))
    check(
        "coefficient width is validated",
        raises_value_error(k.is_kummer_element, p, [(1, 0, 0, 0, [1, 0])]),
    )

    verdict, witness = k.is_kummer_space(p, standard_basis)
    check("the standard basis passes the trace criterion", verdict and witness is None)
    verdict, witness = k.is_kummer_space(p, standard_basis, criterion="power")
    check("the standard basis passes the power criterion", verdict and witness is None)
    verdict, witness = k.is_kummer_space(p, [x, y, x2y2])
    check(
        "x, y, x^2 y^2 fails with witness tuple (1, 1, 2)",
        not verdict and witness == [1, 1, 2],
    )
    check(
        "unknown criteria are rejected",
        raises_value_error(k.is_kummer_space, p, [x], criterion="guess"),
    )

    report = k.degeneration_report(p, [x, x_plus_y])
    check(
        "degeneration of {x, x + y} is {(0,1), (1,0)}",
        report["degeneration"] == [(0, 1), (1, 0)],
    )
    check(
        "its report is clean",
        report["dimension"] == 2
        and report["bound"] == 6
        and report["degeneration_kummer"]
        and report["input_kummer"]
        and report["within_bound"]
        and not report["mp_defect"],
    )
    report = k.degeneration_report(p, standard_basis)
    check(
        "the standard basis fills the dimension bound",
        report["dimension"] == 6 and report["within_bound"] and not report["mp_defect"],
    )

    check(
        "sym(x, y) = (1 + rho) * xy",
        k.monomial_sym_coeff(p, [(1, 0), (0, 1)], [1, 1]) == [1, 1, 0, 0],
    )
    check(
        "weights above p are rejected",
        raises_value_error(k.monomial_sym_coeff, p, [(1, 0)], [6]),
    )
    w = k.min_zero_sum(p, [(10**17 + 2, 3), (3, 2)])
    check("vector entries reduce mod p", w["weight"] == 2)
    check(
        "coefficients carry arbitrary precision",
        k.is_kummer_element(p, [(1, 0, 0, 0, [10**40, 0, 0, 0])]),
    )

    print(f"all {PASSED} checks passed")


if __name__ == "__main__":
    main()
