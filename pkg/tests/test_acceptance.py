"""Acceptance sweep.

Each test checks one criterion at its stated tolerance and prints a single
``[acceptance n] PASS|FAIL`` line. The first counterexample of a failing
criterion is archived under ``fixtures/counterexamples/acceptance_<n>.json``.
Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines
interleaved with the progress output.
"""

import json
import time

import numpy as np
import pytest

from instances import FIXTURES, acceptance_instances, random_instance
from seedgrow import (
    GridDomain,
    Neighborhood,
    ambiguous_set,
    canonical_relabel,
    decomposition_check,
    grow,
    grow_ambiguous,
    grow_simple,
    is_simple_partition,
    is_v_boundary_partition,
    reachable,
    run_with_order,
    standard_neighborhood,
)
from seedgrow.cli import main as cli_main
from seedgrow.formats import write_mask_2d, write_mask_3d, write_seeds

ORDERS_PER_INSTANCE = 10
LINE = Neighborhood([(-1,), (1,)])


@pytest.fixture(scope="module")
def instances():
    return acceptance_instances()


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\n[acceptance {n}] {'PASS' if ok else 'FAIL'}: {detail}")


def archive(n, inst, claim, note, **extra):
    doc = json.loads(inst.to_json())
    doc.update(claim=claim, note=note, **extra)
    path = FIXTURES / "counterexamples" / f"acceptance_{n}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    return path


def test_1_order_invariance(instances, capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(1)
    failed = []
    first = None
    for inst in instances:
        base = canonical_relabel(grow_ambiguous(inst.domain, inst.seeds, inst.V))
        for _ in range(ORDERS_PER_INSTANCE):
            order = [int(k) for k in rng.permutation(len(inst.seeds))]
            other = canonical_relabel(run_with_order("ambiguous", inst.domain, inst.seeds, inst.V, order))
            diff = base.diff(other)
            if diff:
                failed.append(inst.name)
                if first is None:
                    first = (inst, order, diff)
                break
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < 60
    detail = f"{len(instances) - len(failed)}/{len(instances)} instances invariant over {ORDERS_PER_INSTANCE} orders, {elapsed:.1f} s"
    if first:
        inst, order, diff = first
        archive(
            1, inst, "order-invariance",
            f"canonical maps differ at {len(diff)} points between identity order and {order}",
            order=order, differing=[list(p) for p in diff],
        )
        detail += f"; first: {inst.name} order {order} differs at {diff[:3]}"
    report(capsys, 1, ok, detail)
    assert ok, detail


def test_2_boundary_equals_ambiguous_set(instances, capsys):
    failed = []
    first = None
    for inst in instances:
        B = grow_ambiguous(inst.domain, inst.seeds, inst.V).boundary()
        A = ambiguous_set(inst.domain, inst.seeds, inst.V)
        if B != A:
            failed.append(inst.name)
            if first is None:
                first = (inst, sorted(A - B), sorted(B - A))
    detail = f"{len(instances) - len(failed)}/{len(instances)} instances with boundary == ambiguous set"
    if first:
        inst, missing, extra = first
        archive(
            2, inst, "boundary-equals-ambiguous-set",
            f"{len(missing)} ambiguous points not on the boundary, {len(extra)} boundary points not ambiguous",
            missing=[list(p) for p in missing], extra=[list(p) for p in extra],
        )
        detail += f"; first: {inst.name} missing {missing[:3]} extra {extra[:3]}"
    ok = not failed
    report(capsys, 2, ok, detail)
    assert ok, detail


def test_3_simple_partition(instances, capsys):
    bad = []
    for inst in instances:
        r = grow_simple(inst.domain, inst.seeds, inst.V)
        U = reachable(inst.domain, inst.seed_points(), inst.V)
        rep = is_simple_partition([r.region(sid) for sid, _ in inst.seeds], U)
        if not rep:
            bad.append((inst.name, str(rep)))
    ok = not bad
    report(capsys, 3, ok, f"{len(instances) - len(bad)}/{len(instances)} simple partitions of the reachable set")
    assert ok, bad[:3]


def test_4_v_boundary_partition(instances, capsys):
    eligible = [inst for inst in instances if not inst.seeds_adjacent()]
    bad = []
    for inst in eligible:
        r = grow("vboundary", inst.domain, inst.seeds, inst.V)
        U = reachable(inst.domain, inst.seed_points(), inst.V)
        rep = is_v_boundary_partition([r.region(sid) for sid, _ in inst.seeds], r.boundary(), inst.V, U)
        if not rep:
            bad.append((inst, rep))
    axioms = sorted({a.split("[")[0] for _, rep in bad for a in rep.axioms()})
    detail = f"{len(eligible) - len(bad)}/{len(eligible)} v-boundary partitions (non-adjacent seeds)"
    if bad:
        inst, rep = bad[0]
        archive(4, inst, "v-boundary-cover", f"violated axioms: {sorted(rep.axioms())}", report=str(rep))
        detail += f"; violated axioms {axioms}; first: {inst.name}"
    ok = not bad
    report(capsys, 4, ok, detail)
    assert ok, detail


def test_5_classical_modes_depend_on_order(capsys):
    cases = {
        "7-line": (GridDomain.full([7]), [("a", [(0,)]), ("b", [(6,)])], LINE),
        "3x3 corners": (GridDomain.full([3, 3]), [("a", [(0, 0)]), ("b", [(2, 2)])], standard_neighborhood(2, 4)),
    }
    diffs = {}
    for name, (dom, seeds, V) in cases.items():
        a = canonical_relabel(run_with_order("simple", dom, seeds, V, [0, 1]))
        b = canonical_relabel(run_with_order("simple", dom, seeds, V, [1, 0]))
        diffs[name] = a.diff(b)
    ok = all(diffs.values())
    report(capsys, 5, ok, "; ".join(f"{k}: {len(v)} differing points {v}" for k, v in diffs.items()))
    assert ok


def test_6_decomposition(instances, capsys):
    bad = [inst.name for inst in instances if not decomposition_check(inst.domain, inst.seeds, inst.V)]
    report(capsys, 6, not bad, f"{len(instances) - len(bad)}/{len(instances)} decompositions into zones and ambiguous set")
    assert not bad


def test_7_zone_formula_debug_mode(capsys):
    rng = np.random.default_rng(7)
    small = [random_instance(rng, 2, (4, 8)[n % 2], 16, name=f"small-{n}") for n in range(60)]
    steps = 0
    bad = []
    for inst in small:
        for mode in ("simple", "vboundary", "ambiguous"):
            if mode == "vboundary" and inst.seeds_adjacent():
                continue
            try:
                r = grow(mode, inst.domain, inst.seeds, inst.V, debug=True)
            except AssertionError as exc:
                bad.append((inst.name, mode, str(exc)))
            else:
                steps += r.stats.growths
    report(capsys, 7, not bad, f"incremental zones matched the definition after {steps} growth steps on {len(small)} instances")
    assert not bad, bad[:3]


def test_8_golden_fixtures(capsys):
    seven = grow_ambiguous(GridDomain.full([7]), [("a", [(0,)]), ("b", [(6,)])], LINE)
    six = grow_ambiguous(GridDomain.full([6]), [("a", [(0,)]), ("b", [(5,)])], LINE)
    corners = grow_ambiguous(GridDomain.full([3, 3]), [("a", [(0, 0)]), ("b", [(2, 2)])], standard_neighborhood(2, 4))
    checks = {
        "7-line": seven.boundary() == {(3,)} and seven.region("a") == {(0,), (1,), (2,)},
        "6-line": six.boundary() == set() and six.region("b") == {(3,), (4,), (5,)},
        "3x3 corners": corners.boundary() == {(0, 2), (1, 1), (2, 0)},
    }
    report(capsys, 8, all(checks.values()), ", ".join(f"{k} {'ok' if v else 'MISMATCH'}" for k, v in checks.items()))
    assert all(checks.values())


def test_9_cli_determinism(instances, tmp_path, capsys):
    picks = [instances[0], instances[1], instances[200], instances[201]]
    mismatched = []
    for inst in picks:
        if inst.domain.ndim == 2:
            img = tmp_path / f"{inst.name}.pgm"
            img.write_bytes(write_mask_2d(inst.domain))
        else:
            img = tmp_path / f"{inst.name}.json"
            header, body = write_mask_3d(inst.domain, body_name=f"{inst.name}.raw")
            img.write_bytes(header)
            (tmp_path / f"{inst.name}.raw").write_bytes(body)
        seeds = tmp_path / f"{inst.name}.seeds.json"
        seeds.write_bytes(write_seeds(inst.seeds))
        for mode in ("simple", "ambiguous"):
            runs = []
            for rep in range(2):
                d = tmp_path / f"{inst.name}-{mode}-{rep}"
                d.mkdir()
                argv = ["segment", "--mode", mode, "--image", str(img), "--seeds", str(seeds),
                        "--neighborhood", str(inst.kind), "--shuffle", "5",
                        "--trace", str(d / "frames"), "--trace-every", "50", "-o", str(d / "labels")]
                assert cli_main(argv) == 0
                runs.append({p.relative_to(d).as_posix(): p.read_bytes() for p in sorted(d.rglob("*")) if p.is_file()})
            if runs[0] != runs[1] or len(runs[0]) < 2:
                mismatched.append((inst.name, mode))
    capsys.readouterr()
    report(capsys, 9, not mismatched, f"{2 * len(picks) - len(mismatched)}/{2 * len(picks)} repeated CLI runs byte-identical (labels and frames)")
    assert not mismatched
