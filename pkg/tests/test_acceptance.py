"""Acceptance criteria 1-9.

Each test prints one ``criterion N: PASS|FAIL ...`` line (visible with
``pytest -s`` or when the file is run as a script) and asserts the
criterion at its stated tolerance: zero violations, exact counts, 100%
mutation detection.
"""

from __future__ import annotations

import sys
import time

import pytest

from depcat.algebra import chain_poset, divisor_poset, monoid_category, ring_category, zmod
from depcat.deparrows import check_counts, check_dep_laws, check_sections, finset_dep, global_sections_dep, trivial_dep
from depcat.depsigma import canonical_pr2, check_depsigma_laws, check_elements, trivial_pr2
from depcat.errors import DepcatError
from depcat.famcat import (
    check_fam_laws,
    check_weak_fam_laws,
    constant_fam,
    coslice_fam,
    finset_fam,
    ring_fam,
    slice_wfam,
    twisted_chooser,
)
from depcat.fincat import check_category_laws, finset_injections, finset_skeleton, terminal
from depcat.instances import generate
from depcat.report import LawReport
from depcat.sigmacat import check_sigma_laws, check_transport, finset_sigma, product_sigma, ring_sigma, trivial_sigma
from depcat.suites import MUTATION_LAWS, designated_instance, find_mutation, run_suites

# law ids named by the report type; each must have a detected mutation
NAMED_LAWS = (
    "cat.assoc", "cat.unit", "fam1", "fam2", "sigma.square", "sigma.pullback", "s1", "s2",
    "dep1", "dep2", "depsigma.compat", "transp.iso",
    "elsigma.pr0", "elsigma.pr1", "elsigma.pr2", "elsigma.pr3", "elsigma.pr4",
    "exdo2.bij", "weak.fam1", "weak.fam2", "cofam1", "cofam2",
)  # fmt: skip


def _line(n: int, ok: bool, detail: str) -> str:
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"


def _emit(line: str, capsys=None) -> None:
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)


def _violations(rep: LawReport) -> list[str]:
    return [f"{e.law} at {e.witness}" for e in rep.failures]


# ---------------------------------------------------------------------------
# shared instances


def verified_sigmas():
    """Every Sigma structure the engine builds and verifies, by name."""
    fs3 = finset_skeleton(3)
    out = {
        "finset(3, cap 1)": finset_sigma(finset_fam(fs3, 1)),
        "ring Z/4": ring_sigma(ring_category(zmod(4))),
        "ring Z/5": ring_sigma(ring_category(zmod(5))),
        "product finset(1)": product_sigma(finset_skeleton(1)),
        "product divisors(12)": product_sigma(divisor_poset(12)),
        "trivial finset(3, cap 2)": trivial_sigma(finset_fam(fs3, 2)),
        "trivial chain(3) coslice": trivial_sigma(coslice_fam(chain_poset(3))),
        "trivial ring Z/4": trivial_sigma(ring_fam(ring_category(zmod(4)))),
    }
    return {k: S for k, S in out.items() if check_sigma_laws(S).passed}


# ---------------------------------------------------------------------------
# criterion runners; each returns (ok, detail)


def criterion_1():
    t0 = time.perf_counter()
    problems: list[str] = []
    checked = 0

    def run(name, rep):
        nonlocal checked
        checked += sum(e.checked for e in rep.entries)
        problems.extend(f"{name}: {v}" for v in _violations(rep))

    # FinSet skeleton, sizes up to 3, fibres up to 2: every layer
    fs3 = finset_skeleton(3)
    F2 = finset_fam(fs3, 2)
    run("finset(3,2) cat", check_category_laws(fs3))
    run("finset(3,2) fam", check_fam_laws(F2))
    run("finset(3,2) dep", check_dep_laws(finset_dep(F2)))
    try:
        S2 = finset_sigma(F2)
    except DepcatError as exc:
        problems.append(f"finset(3,2) sigma: {type(exc).__name__}: {exc}")
    else:
        run("finset(3,2) sigma", check_sigma_laws(S2))
        run("finset(3,2) depsigma", check_depsigma_laws(canonical_pr2(S2)))

    for n in (4, 5):
        doc = generate("ring", {"modulus": n}, self_check=False)
        run(f"Z/{n}", run_suites(doc, {"cat", "fam", "sigma", "dep", "depsigma"}))

    doc = generate("finset", {"max_size": 1, "fam": "constant", "sigma": "product"}, self_check=False)
    run("constant+product over FinSet", run_suites(doc, {"cat", "fam", "sigma", "dep", "depsigma"}))

    doc = generate("poset", {"chain": 3, "fam": "coslice"}, self_check=False)
    run("coslice over chain(3)", run_suites(doc, {"cat", "fam", "sigma", "dep", "depsigma"}))

    # trivial sigma / dep over every instance's families
    fams = {
        "finset(3,2)": F2,
        "finset(3,1)": finset_fam(fs3, 1),
        "Z/4": ring_fam(ring_category(zmod(4))),
        "Z/5": ring_fam(ring_category(zmod(5))),
        "finset(1) constant": constant_fam(finset_skeleton(1)),
        "chain(3) coslice": coslice_fam(chain_poset(3)),
    }
    for name, F in fams.items():
        S = trivial_sigma(F)
        run(f"trivial sigma {name}", check_sigma_laws(S))
        run(f"trivial dep {name}", check_dep_laws(trivial_dep(F)))
        run(f"trivial pr2 {name}", check_depsigma_laws(trivial_pr2(S)))

    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        problems.append(f"runtime {elapsed:.1f}s >= 60s")
    ok = not problems
    detail = f"{checked} law instances in {elapsed:.1f}s"
    if problems:
        detail += "; " + "; ".join(problems[:3])
    return ok, detail


def criterion_2():
    problems, checked = [], 0
    for name, S in verified_sigmas().items():
        D = global_sections_dep(S)
        for rep in (check_dep_laws(D), check_sections(D)):
            checked += sum(e.checked for e in rep.entries)
            problems += [f"{name}: {v}" for v in _violations(rep)]
    return not problems, f"{checked} checks over {len(verified_sigmas())} Sigma structures, {len(problems)} violations"


def criterion_3():
    problems, checked = [], 0
    for name, S in verified_sigmas().items():
        rep = check_depsigma_laws(canonical_pr2(S))
        checked += rep.entry("depsigma.compat").checked
        problems += [f"{name}: {v}" for v in _violations(rep)]
    ok = not problems and checked > 0
    return ok, f"{checked} (lam, f) compatibility checks, {len(problems)} violations"


def criterion_4():
    problems, checked = [], 0
    for name, S in verified_sigmas().items():
        if terminal(S.base) is None:
            continue
        rep = check_transport(S)
        checked += rep.entry("transp.iso").checked
        problems += [f"{name}: {v}" for v in _violations(rep)]
    ok = not problems and checked > 0
    return ok, f"{checked} (lam, i) transports, {len(problems)} violations"


def criterion_5():
    problems, counts = [], {}
    docs = {
        "finset(3, cap 1)": generate("finset", {"max_size": 3, "fiber_cap": 1}, self_check=False),
        "finset(2, fibres 1..2, zero pr2)": generate(
            "finset",
            {"max_size": 2, "fiber_cap": 2, "min_fiber": 1, "sigma": "trivial", "dep": "choice"},
            self_check=False,
        ),
    }
    for name, doc in docs.items():
        rep = check_elements(doc.layers().depsigma)
        for e in rep.entries:
            counts[e.law] = counts.get(e.law, 0) + e.checked
        problems += [f"{name}: {v}" for v in _violations(rep)]
    ok = not problems and all(counts.values())
    detail = ", ".join(f"{k.split('.')[1]}={v}" for k, v in counts.items())
    return ok, f"{detail}; {len(problems)} violations"


def criterion_6():
    doc = generate("finset", {"max_size": 3, "fiber_cap": 1}, self_check=False)
    rep = run_suites(doc, {"counts"})
    fs3 = finset_skeleton(3)
    F2 = finset_fam(fs3, 2)
    rep.extend(check_counts(fs3, F2, finset_dep(F2)))
    laws = {e.law for e in rep.entries}
    need = {"count.hom", "count.sigma", "count.dhom", "count.sections"}
    ok = rep.passed and need <= laws
    return ok, f"{sum(e.checked for e in rep.entries)} exact counts, {len(rep.failures)} mismatches"


def criterion_7():
    doc = generate("finset", {"max_size": 3, "fiber_cap": 1}, self_check=False)
    rep = run_suites(doc, {"exdo2"})
    bij = rep.entry("exdo2.bij")
    return rep.passed, f"e/j round trips on {bij.checked} arrows and sections over sizes 0..3"


def criterion_8():
    parts, ok = [], True
    for name, C in (
        ("Z/4", monoid_category([[(x + y) % 4 for y in range(4)] for x in range(4)])),
        ("FI(2)", finset_injections(2)),
    ):
        W = slice_wfam(C, twisted_chooser(C))
        weak = check_weak_fam_laws(W)
        strict = check_fam_laws(W.as_fam())
        wit = strict.failures[0] if strict.failures else None
        good = weak.passed and wit is not None and wit.witness is not None
        ok &= good
        parts.append(f"{name}: weak {'pass' if weak.passed else 'FAIL'}, strict "
                     f"{'fails at ' + wit.law + ' ' + str(wit.witness) if wit else 'passes'}")
    return ok, "; ".join(parts)


def criterion_9():
    missed = []
    for law in MUTATION_LAWS:
        res = find_mutation(designated_instance(law), law)
        if not res.detected:
            missed.append(law)
    uncovered = [law for law in NAMED_LAWS if law not in MUTATION_LAWS]
    total = len(MUTATION_LAWS)
    ok = not missed and not uncovered
    detail = f"{total - len(missed)}/{total} mutations detected"
    if missed:
        detail += f"; undetected: {', '.join(missed)}"
    if uncovered:
        detail += f"; no mutation for: {', '.join(uncovered)}"
    return ok, detail


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n]()
    line = _line(n, ok, detail)
    _emit(line, capsys)
    assert ok, line


if __name__ == "__main__":
    results = []
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        results.append(ok)
        _emit(_line(n, ok, detail))
    sys.exit(0 if all(results) else 1)
