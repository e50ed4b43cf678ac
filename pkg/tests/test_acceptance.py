"""Acceptance suite: one test per shipped guarantee, each printing a
pass/fail line (visible even under captured output). Tolerances are exact
integer checks plus the stated wall-clock budgets."""

import random
import time
from math import isqrt

from kconn import (
    Color,
    Decomposed,
    blue_certificate,
    generate,
    greedy_decompose,
    implies_no_large_subgraph,
    induced_subgraph,
    is_k_connected,
    lambda_of,
    max_k_connected_subgraph,
    monochromatic_view,
    oracle_max_k_connected,
    red_certificate,
    verify_decomposition,
    verify_peeling,
)
from kconn.cli import run

from graphutil import brute_is_k_connected, random_graph


def report(capsys, number: int, slug: str, ok: bool, detail: str = "") -> None:
    tail = f" ({detail})" if detail else ""
    with capsys.disabled():
        print(f"acceptance {number} {slug}: {'PASS' if ok else 'FAIL'}{tail}")


def cli(capsys, *argv: str) -> tuple[int, str]:
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out.rstrip("\n").split("\n")[-1]


def test_criterion_1_certificates_k8(capsys, tmp_path):
    start = time.perf_counter()
    problems = []

    out = tmp_path / "ce8.kcoloring"
    code, line = cli(capsys, "gen", "--k", "8", "--out", str(out))
    if code != 0 or line != "RESULT ok n=29 tau=4":
        problems.append(f"gen: exit={code} line={line!r}")
    code, line = cli(capsys, "verify-counterexample", "--k", "8", "--mode", "certificates")
    if code != 0 or line != "RESULT verified red_bound=14 blue_bound=14 target=15":
        problems.append(f"verify: exit={code} line={line!r}")

    inst = generate(8)
    cert = red_certificate(inst)
    if cert.l != 9:
        problems.append(f"l={cert.l}")
    if any(len(t.c) != 7 for t in cert.triples):
        problems.append("some |C_i| != 7")
    last = cert.triples[-1]
    if len(last.a) + len(last.c) != 14 or not len(last.a) + len(last.c) < 15:
        problems.append("|A_9| + |C_9| != 14 < 15")
    peel = blue_certificate(inst)
    if len(peel.sequence) != 15:
        problems.append(f"peel length {len(peel.sequence)}")
    verdict = verify_peeling(inst.coloring, Color.BLUE, peel)
    if not verdict.ok:
        problems.append(f"peel failed at {verdict.fail_index}")
    view = monochromatic_view(inst.coloring, Color.BLUE)
    peeled: set[int] = set()
    for v in peel.sequence:
        peeled.add(v)
        if len(view.neighbors(v) - peeled) > 7:
            problems.append(f"residual degree over 7 at {v}")

    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        problems.append(f"too slow: {elapsed:.1f}s")
    report(capsys, 1, "counterexample-k8-certificates", not problems, f"{elapsed:.2f}s")
    assert not problems, problems


def test_criterion_2_exact_refutation_k8(capsys):
    start = time.perf_counter()
    problems = []

    code, line = cli(capsys, "verify-counterexample", "--k", "8", "--mode", "exact")
    if code != 0:
        problems.append(f"exit={code}")
    fields = dict(part.split("=") for part in line.split()[2:])
    if not line.startswith("RESULT verified"):
        problems.append(f"line={line!r}")
    else:
        if not int(fields["red_max_order"]) <= 14:
            problems.append(f"red order {fields['red_max_order']}")
        if not int(fields["blue_core_order"]) <= 14:
            problems.append(f"blue core {fields['blue_core_order']}")
        if not (
            int(fields["red_max_order"]) < int(fields["target"]) == 15
            and int(fields["blue_core_order"]) < 15
        ):
            problems.append(f"bounds not below target: {line!r}")

    elapsed = time.perf_counter() - start
    if elapsed >= 600.0:
        problems.append(f"too slow: {elapsed:.1f}s")
    report(capsys, 2, "exact-refutation-k8", not problems, f"{elapsed:.2f}s")
    assert not problems, problems


def test_criterion_3_certificates_larger_k(capsys):
    start = time.perf_counter()
    problems = []

    for k in (10, 11, 12, 16, 20):
        inst = generate(k)
        tau = inst.tau
        if inst.n != 5 * k - 2 * tau - 3:
            problems.append(f"k={k}: n={inst.n}")
        cert = red_certificate(inst)
        if any(len(t.c) != k - 1 for t in cert.triples):
            problems.append(f"k={k}: some |C_i| != k-1")
        if len(inst.d_blocks[-1]) != 2 * k - 2 * tau - 1:
            problems.append(f"k={k}: |D_last| wrong")
        red = monochromatic_view(inst.coloring, Color.RED)
        if verify_decomposition(red, cert, strong=True):
            problems.append(f"k={k}: red certificate rejected")
        peel = blue_certificate(inst)
        if len(peel.sequence) != 2 * k - 1:
            problems.append(f"k={k}: peel length {len(peel.sequence)}")
        verdict = verify_peeling(inst.coloring, Color.BLUE, peel)
        if not verdict.ok or verdict.bound != inst.n - (2 * k - 1):
            problems.append(f"k={k}: peel verdict {verdict}")

    elapsed = time.perf_counter() - start
    if elapsed >= 30.0:
        problems.append(f"too slow: {elapsed:.1f}s")
    report(capsys, 3, "certificates-k10-to-k20", not problems, f"{elapsed:.2f}s")
    assert not problems, problems


def test_criterion_4_exhaustive_colorings(capsys):
    start = time.perf_counter()
    problems = []

    for n in (5, 6):
        code, line = cli(capsys, "oracle", "--mode", "colorings", "--n", str(n), "--k", "2")
        expected_target = n - 2  # n - 2k + 2 at k=2
        if code != 0 or not line.startswith("RESULT verified"):
            problems.append(f"n={n}: exit={code} line={line!r}")
            continue
        fields = dict(part.split("=") for part in line.split()[2:])
        if int(fields["colorings"]) != 1 << (n * (n - 1) // 2):
            problems.append(f"n={n}: colorings={fields['colorings']}")
        if int(fields["min_max_order"]) < expected_target:
            problems.append(f"n={n}: min_max_order={fields['min_max_order']}")

    elapsed = time.perf_counter() - start
    if elapsed >= 300.0:
        problems.append(f"too slow: {elapsed:.1f}s")
    report(capsys, 4, "desk-scale-guarantee-sweep", not problems, f"{elapsed:.2f}s")
    assert not problems, problems


def test_criterion_5_oracle_equivalence(capsys):
    start = time.perf_counter()
    mismatches = []

    rng = random.Random(508)
    for trial in range(200):
        n = rng.randint(6, 12)
        k = rng.randint(2, 4)
        g = random_graph(n, rng)
        fast = max_k_connected_subgraph(g, k).order
        slow = oracle_max_k_connected(g, k).order
        if fast != slow:
            mismatches.append(f"subgraph trial {trial}: n={n} k={k} {fast} != {slow}")

    rng = random.Random(509)
    for trial in range(200):
        n = rng.randint(2, 10)
        g = random_graph(n, rng, p=rng.choice([0.3, 0.5, 0.7]))
        for k in range(1, n + 1):
            if is_k_connected(g, k) != brute_is_k_connected(g, k):
                mismatches.append(f"connectivity trial {trial}: n={n} k={k}")

    elapsed = time.perf_counter() - start
    report(capsys, 5, "oracle-equivalence", not mismatches, f"{elapsed:.2f}s")
    assert not mismatches, mismatches


def test_criterion_6_decomposition_meta(capsys):
    start = time.perf_counter()
    violations = []

    rng = random.Random(606)
    strong_seen = 0
    for trial in range(100):
        n = rng.randint(5, 12)
        k = rng.randint(1, 4)
        f = rng.randint(0, n - k - 1)
        g = random_graph(n, rng, p=rng.choice([0.25, 0.5, 0.75]))
        outcome = greedy_decompose(g, k, f)
        if isinstance(outcome, Decomposed):
            d = outcome.decomposition
            found = verify_decomposition(g, d)
            if found:
                violations.append(f"trial {trial}: {found}")
                continue
            if implies_no_large_subgraph(g, d):
                strong_seen += 1
                if oracle_max_k_connected(g, k).order >= n - f:
                    violations.append(f"trial {trial}: strong bound violated")
        else:
            h = outcome.vertices
            if len(h) < n - f or not is_k_connected(induced_subgraph(g, h), k):
                violations.append(f"trial {trial}: bad Found outcome")
    if strong_seen == 0:
        violations.append("no strong decompositions exercised")

    elapsed = time.perf_counter() - start
    report(
        capsys,
        6,
        "greedy-and-certificate-meta",
        not violations,
        f"{elapsed:.2f}s, {strong_seen} strong",
    )
    assert not violations, violations


def test_criterion_7_threshold_table(capsys):
    start = time.perf_counter()
    problems = []

    exceptions = [k for k in range(1, 10_001) if lambda_of(k) != isqrt(4 * k - 2) + 3]
    if exceptions != [3, 5, 7]:
        problems.append(f"lambda exceptions: {exceptions}")
    for k in range(1, 10_001):
        lam = lambda_of(k)
        if 4 * k - lam * lam + 6 * lam - 11 <= 0:
            problems.append(f"margin fails at k={k}")
            break
    for k in range(1, 10_001):
        if isqrt(4 * k - 2) ** 2 == 4 * k - 2:
            problems.append(f"4k-2 square at k={k}")
            break

    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        problems.append(f"too slow: {elapsed:.2f}s")
    report(capsys, 7, "threshold-table", not problems, f"{elapsed:.3f}s")
    assert not problems, problems


CLASSIFY_GOLDENS = [
    (28, 8, "RESULT no_guarantee"),
    (29, 8, "RESULT counterexample_exists"),
    (30, 8, "RESULT open"),
    (32, 8, "RESULT guaranteed"),
    (37, 10, "RESULT counterexample_exists"),
    (40, 10, "RESULT conjectured_guaranteed"),
    (41, 10, "RESULT guaranteed"),
]


def test_criterion_8_classifier_goldens(capsys):
    problems = []
    for n, k, expected in CLASSIFY_GOLDENS:
        code, line = cli(capsys, "classify", "--n", str(n), "--k", str(k))
        if code != 0 or line != expected:
            problems.append(f"({n},{k}): exit={code} line={line!r}")
    report(capsys, 8, "classifier-goldens", not problems)
    assert not problems, problems
