"""The acceptance battery: one callable per criterion, each returning a
verdict with enough detail to diff on failure.  A criterion that uncovers
a counterexample to a conjectured statement reports it as a refutation
certificate in its details; that is a finding, and the battery surfaces
it rather than hiding it, but the affected criterion is marked failed so
the mismatch cannot pass silently.
"""

from __future__ import annotations

import itertools
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable

from . import capset, cliquegame, graphlab, latin, perms, setfam, stirling, surfaces
from .graphlab import Graph


@dataclass
class CriterionResult:
    ident: int
    description: str
    passed: bool
    runtime_ms: int
    details: dict = field(default_factory=dict)


def _run(ident: int, description: str, fn: Callable[[], tuple[bool, dict]]) -> CriterionResult:
    start = time.perf_counter()
    try:
        passed, details = fn()
    except Exception as exc:  # a crashed criterion is a failed criterion
        passed, details = False, {"error": repr(exc)}
    ms = int((time.perf_counter() - start) * 1000)
    return CriterionResult(ident, description, passed, ms, details)


def criterion_1() -> CriterionResult:
    def body():
        a = perms.count_avoiders(7, perms.Pattern.parse("4 _ 1 3 2"))
        b = perms.count_avoiders(7, perms.Pattern.parse("3 _ 1 4 2"))
        return a == 3592 and b == 3587, {"av7_4_132": a, "av7_3_142": b,
                                         "expected": [3592, 3587]}
    return _run(1, "gapped-pattern avoidance anchors at n=7 (3592 / 3587)", body)


def criterion_2() -> CriterionResult:
    def body():
        reports = perms.aligned_triples_check(8)
        details = {}
        ok = True
        for rep in reports:
            names = list(rep.tables)
            details[" | ".join(names)] = rep.tables
            if not rep.all_equal:
                ok = False
                details["refutation"] = {
                    "patterns": names,
                    "first_unequal_n": rep.equal_per_n.index(False) + 1,
                }
        return ok, details
    return _run(2, "aligned-gap triple equality for all n <= 8 (verified-at-scale)", body)


def criterion_3() -> CriterionResult:
    def body():
        rep = perms.inversion_table_report(9, k_max=25)
        ok = rep.monotone and all(rep.row_sums_match.values())
        return ok, {"monotone": rep.monotone,
                    "violations": rep.violations,
                    "row_sums_match": rep.row_sums_match}
    return _run(3, "1324-avoider inversion counts monotone in n (n <= 9, k <= 25), "
                   "row sums cross-checked", body)


PAPER_FAMILY = [perms.parse_permutation(s) for s in
                ("1 2 3 4 5", "3 5 2 4 1", "4 1 5 2 3",
                 "2 5 1 4 3", "5 3 1 4 2", "4 3 2 1 5")]


def criterion_4() -> CriterionResult:
    def body():
        got = perms.shattered_ksets(PAPER_FAMILY, 3)
        ok = (len(got) == 8 and (2, 3, 5) in got and (1, 2, 3) not in got)
        return ok, {"count": len(got), "triples": [list(t) for t in got]}
    return _run(4, "reference 6-family shatters exactly 8 triples of [5] "
                   "(with {2,3,5}, without {1,2,3})", body)


def criterion_5() -> CriterionResult:
    def body():
        from .tournaments import Tournament, additivity_probe, all_transitive, inv_table, pair_index
        details = {}
        ok = True
        for n in range(2, 7):
            table = inv_table(n)
            if any(table.inv(t) != 0 for t in all_transitive(n)):
                ok = False
                details[f"transitive_nonzero_n{n}"] = True
        cyc = Tournament(3, (1 << pair_index(0, 1, 3)) | (1 << pair_index(1, 2, 3)))
        inv_c3 = inv_table(3).inv(cyc)
        ok = ok and inv_c3 == 1
        rep = additivity_probe(3, 3)
        details.update(inv_three_cycle=inv_c3,
                       additivity_defects_3_3={str(k): v for k, v in rep.defects.items()})
        return ok, details
    return _run(5, "inv(transitive) = 0 up to n=6, inv(3-cycle) = 1, "
                   "additivity defect distribution for 3+3", body)


def criterion_6() -> CriterionResult:
    def body():
        results = {n: cliquegame.solve(n) for n in (3, 4, 5)}
        analytic_3 = all(
            cliquegame.winner_at_end(3, tuple(1 if i in reds else 2 for i in range(3)))
            == cliquegame.BLUE
            for reds in itertools.combinations(range(3), 2))
        details = {"analytic_n3_blue": analytic_3}
        conjecture_holds = True
        for n, res in results.items():
            details[f"solve_{n}"] = res.winner
            details[f"states_{n}"] = res.states
            if res.winner != cliquegame.BLUE:
                conjecture_holds = False
                details["refutation"] = {"n": n, "winner": res.winner,
                                         "principal_variation": res.principal_variation}
        details["conjecture_blue_wins"] = conjecture_holds
        # the criterion itself requires solve(3) = BLUE and completion of 4, 5
        return analytic_3 and results[3].winner == cliquegame.BLUE, details
    return _run(6, "edge game solved exactly for n = 3, 4, 5 and logged against "
                   "the second-player conjecture", body)


def criterion_7() -> CriterionResult:
    def body():
        import math
        ok = True
        details = {}
        for a in range(2, 8):
            for b in range(a, 8):
                fam = setfam.two_core_construction(a, b)
                res = setfam.check_two_core(fam)
                if not (res.ok and res.meets_bound):
                    ok = False
                    details[f"construction_{a}_{b}"] = res.failure or "size mismatch"
        for a, b, g in ((2, 2, 5), (2, 3, 6), (2, 4, 6), (3, 3, 5), (3, 4, 5)):
            size, _ = setfam.brute_force_max(a, b, g)
            details[f"brute_{a}_{b}_g{g}"] = size
            if size > setfam.two_core_bound(a, b):
                ok = False
                details["bound_exceeded"] = [a, b, g, size]
        matches = all(setfam.two_core_bound(3, b) == b + 1 == math.comb(b + 1, 1)
                      for b in range(3, 9))
        ok = ok and matches
        details["a3_bound_matches_binomial"] = matches
        return ok, details
    return _run(7, "two-core construction meets its bound (2 <= a <= b <= 7); "
                   "brute force never exceeds it; a=3 bound equals C(a+b-2, a-2)", body)


def criterion_8(jm_samples: int = 100) -> CriterionResult:
    def body():
        details = {}
        ok = True
        for n in (2, 3, 4, 5, 6):
            c = latin.count_cuboctahedra(latin.cayley_table(latin.GroupSpec.cyclic(n)))
            details[f"cyclic_{n}"] = c
            ok = ok and c == n ** 5
        agree = all(latin.count_cuboctahedra(sq) == latin.count_cuboctahedra_bruteforce(sq)
                    for m in (1, 2, 3, 4) for sq in latin.all_latin_squares(m))
        details["fast_equals_bruteforce_n_le_4"] = agree
        ok = ok and agree
        # no order-5 cyclic-table intercalate exists (odd order); the
        # non-group order-5 witness comes from a seeded walk instead
        details["z5_intercalates"] = len(
            latin.find_intercalates(latin.cayley_table(latin.GroupSpec.cyclic(5))))
        other = latin.jm_sample(5, steps=20, seed=1)
        nongroup_count = latin.count_cuboctahedra(other)
        details["nongroup_order5_count"] = nongroup_count
        details["nongroup_order5_is_group"] = latin.is_group_table(other)
        ok = ok and not latin.is_group_table(other) and nongroup_count < 5 ** 5
        ratios = [latin.count_cuboctahedra(s) / 16 ** 4
                  for s in latin.jm_samples(16, jm_samples, seed=0)]
        mean = statistics.mean(ratios)
        details["jm_n16_mean_ratio"] = round(mean, 4)
        details["jm_n16_samples"] = len(ratios)
        ok = ok and 3.5 <= mean <= 4.5
        return ok, details
    return _run(8, "repeated-block counts: n^5 on cyclic tables (n <= 6), fast = "
                   "brute force on all orders <= 4, non-group order-5 square below "
                   "5^5, random n=16 mean ratio in [3.5, 4.5]", body)


def criterion_9() -> CriterionResult:
    def body():
        from random import Random
        details = {}
        ok = True
        for n, expect in ((1, 2), (2, 4), (3, 9)):
            size, witness = capset.max_capset(n)
            details[f"max_{n}"] = size
            ok = ok and size == expect and capset.is_capset(n, witness)[0]
        rng = Random(0)
        product_ok = True
        for _ in range(1000):
            na, nb = rng.randrange(1, 4), rng.randrange(1, 4)
            a = capset.greedy_cap(na, rng.randrange(2, 2 ** na + 1), rng)
            b = capset.greedy_cap(nb, rng.randrange(2, 2 ** nb + 1), rng)
            prod = capset.product(a, b)
            if not capset.is_capset(na + nb, prod)[0]:
                product_ok = False
                details["product_failure"] = [sorted(a), sorted(b)]
                break
        details["product_instances_ok"] = product_ok
        ok = ok and product_ok
        res = capset.find_disjoint_equal(2, 4, seed=0)
        details["disjoint_n2_size4"] = res.found
        if res.found:
            details["pair"] = [sorted(map(capset.format_point, res.first)),
                               sorted(map(capset.format_point, res.second))]
        ok = ok and res.found
        return ok, details
    return _run(9, "cap maxima 2/4/9 for n = 1..3, products of caps are caps "
                   "(1000 instances), disjoint equal pair found at n=2 size 4", body)


def criterion_10() -> CriterionResult:
    def body():
        cls = surfaces.classify_k5()
        with_rev = cls.class_counts(True)
        without_rev = cls.class_counts(False)
        details = {"genus_counts": cls.genus_counts,
                   "classes_with_reversal": with_rev,
                   "classes_without_reversal": without_rev}
        ok = (sum(cls.genus_counts.values()) == 7776
              and min(cls.genus_counts) == 1
              and with_rev.get(3) == 13)
        details["matching_convention"] = "relabelling+reversal"
        return ok, details
    return _run(10, "K5 rotation systems: 7776 total, min genus 1, and 13 "
                    "maximum-genus classes under the matching convention "
                    "(both conventions reported)", body)


def criterion_11() -> CriterionResult:
    def body():
        from random import Random
        res = graphlab.colours_line({1, 2, 3})
        details = {"word_123": res.certificate}
        ok = (res.colourable and len(res.certificate) == 4
              and graphlab.check_certificate({1, 2, 3}, res.certificate))
        one = graphlab.colours_line({1})
        ok = ok and not one.colourable
        details["only_colour_1"] = one.colourable
        rng = Random(0)
        sampled = 0
        all_colour = True
        while sampled < 200:
            budget = set()
            while graphlab.density(budget or {10 ** 9}) < 2:
                budget.add(rng.randrange(1, 40))
            out = graphlab.colours_line(budget)
            if not (out.colourable and graphlab.check_certificate(budget, out.certificate)):
                all_colour = False
                details["failed_budget"] = sorted(budget)
                break
            sampled += 1
        details["density_ge_2_sampled"] = sampled
        ok = ok and all_colour
        return ok, details
    return _run(11, "packing colourings: {1,2,3} yields a period-4 word, {1} "
                    "fails, 200 sampled budgets of density >= 2 all colour "
                    "the line", body)


def criterion_12() -> CriterionResult:
    def body():
        from random import Random
        rng = Random(12)
        mismatches = 0
        bad_witness = 0
        for _ in range(1000):
            n = rng.randrange(2, 11)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            lam = [rng.randrange(0, g.degree(v) + 1) for v in range(n)]
            h, _ = graphlab.hall_condition(g, lam)
            o, witness = graphlab.orientation_exists(g, lam)
            if h != o:
                mismatches += 1
            if o:
                indeg = graphlab.orientation_indegrees(g, witness)
                if any(indeg[v] > lam[v] for v in range(n)):
                    bad_witness += 1
        return mismatches == 0 and bad_witness == 0, {
            "instances": 1000, "mismatches": mismatches, "bad_witnesses": bad_witness}
    return _run(12, "subset condition <=> bounded-in-degree orientation on 1000 "
                    "random instances, all witnesses valid", body)


def criterion_13() -> CriterionResult:
    def body():
        details = {}
        gate = all(
            stirling.assoc_stirling(n, k, r) == stirling.assoc_stirling_by_enumeration(n, k, r)
            for r in range(1, 5) for n in range(9) for k in range(n + 1))
        details["recurrence_matches_enumeration_n_le_8"] = gate
        rr = {r: stirling.real_rooted_sweep(r, 40) for r in (1, 2)}
        details["real_rooted_to_40"] = {r: v[0] for r, v in rr.items()}
        lc = {r: stirling.log_concavity_sweep(r, 200) for r in (3, 4, 5)}
        details["log_concave_to_200"] = {r: v[0] for r, v in lc.items()}
        for r, (ok_r, bad) in lc.items():
            if not ok_r:
                details[f"log_concavity_refutation_r{r}"] = bad[:5]
        ok = gate and all(v[0] for v in rr.values()) and all(v[0] for v in lc.values())
        return ok, details
    return _run(13, "cycle-count tables: recurrence = enumeration (n <= 8, r <= 4), "
                    "real-rooted for r = 1,2 to n = 40, log-concave for r = 3,4,5 "
                    "to n = 200", body)


ALL_CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    criterion_11, criterion_12, criterion_13,
)

QUICK_CRITERIA = (criterion_1, criterion_4, criterion_5, criterion_6,
                  criterion_9, criterion_10, criterion_11)


def run_battery(which: str = "acceptance") -> list[CriterionResult]:
    fns = ALL_CRITERIA if which == "acceptance" else QUICK_CRITERIA
    return [fn() for fn in fns]
