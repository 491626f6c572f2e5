"""The standing verification suite.

Eight sections, each a battery of exhaustive or sampled checks over
structures the suite builds itself: gallery fidelity, equivalence batteries
over every enumerated joined operation at small order, identical-mode set
characterizations with pinned counts, projection decompositions, quotient
isomorphisms, sampled rational laws, the one-sided counterexamples, and a
canonical content hash for determinism comparisons.  Exit is clean only if
no section fails.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import rationals as rat
from .classify import classify
from .gallery import (
    b_joined,
    cyclic,
    klein_group,
    klein_grouplike,
    min_semigroup,
    omega_grouplike,
    pick_left_joined,
    pick_right_joined,
    zn_min_joined,
)
from .enumeration import (
    EnumerationQuery,
    enumerate_odot_generated,
    enumerate_odot_raw,
    identical_characterization,
    identical_consequences,
    identical_count_matches_functions,
)
from .factorize import projection_decomposition_check
from .joined import (
    JoinedStructure,
    chained_join_law_holds,
    grouplike_criterion_battery,
    image_subgroup_battery,
    joiner_identity_checks,
    left_law_violation,
    right_law_violation,
    unital_image_battery,
    verify_join_law,
)
from .quotient import quotient_isomorphism
from .report import Report, Verdict, content_hash, worst

RATIONAL_MODULI = (Fraction(1), Fraction(2), Fraction(3, 2), Fraction(-1))

SECTION_ORDER = (
    "gallery_fidelity",
    "equivalence_batteries",
    "identical_sets",
    "projection_decomposition",
    "quotient_isomorphism",
    "rational_sampled_laws",
    "counterexamples",
)


@dataclass(frozen=True)
class SuiteReport:
    """All section reports plus run parameters and a canonical hash."""

    params: dict
    sections: dict[str, list[Report]]
    timing: dict[str, float]

    @property
    def verdict(self) -> Verdict:
        return worst(r.verdict for reports in self.sections.values() for r in reports)

    @property
    def failed(self) -> list[Report]:
        return [r for reports in self.sections.values() for r in reports
                if r.verdict is Verdict.FAIL]

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "params": self.params,
            "verdict": self.verdict.value,
            "sections": {
                name: [r.to_dict(include_timing) for r in self.sections[name]]
                for name in SECTION_ORDER if name in self.sections
            },
        }
        out["content_hash"] = content_hash(out)
        if include_timing:
            out["timing_seconds"] = {k: round(v, 3) for k, v in self.timing.items()}
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        lines = []
        for name in SECTION_ORDER:
            if name not in self.sections:
                continue
            v = worst(r.verdict for r in self.sections[name])
            lines.append(f"{name}: {v.value}")
        lines.append(f"overall: {self.verdict.value}")
        return lines


def _report(name: str, payload, ok: bool, *, sampled: bool = False,
            flags: dict | None = None, details: dict | None = None,
            witnesses: dict | None = None) -> Report:
    verdict = Verdict.FAIL if not ok else (Verdict.SAMPLED_PASS if sampled else Verdict.PROVED_PASS)
    wit = dict(witnesses or {})
    if not ok and not wit:
        wit["failed_checks"] = [k for k, v in (details or {}).items() if v is not True]
    return Report(
        name=name,
        structure_hash=content_hash(payload),
        verdict=verdict,
        flags=flags or {},
        details=details or {},
        witnesses=wit,
    )


# ---------------------------------------------------------------- section 1

def _expect_flags(name, sg, expectations, kernel_indices=None) -> Report:
    rep = classify(sg)
    got = rep.flags()
    details = {k: got[k] for k in expectations}
    ok = all(got[k] == v for k, v in expectations.items())
    witnesses = {}
    if kernel_indices is not None:
        kernel_ok = rep.kernel.indices() == tuple(kernel_indices)
        details["kernel"] = list(rep.kernel.indices())
        if not kernel_ok:
            witnesses["kernel_expected"] = list(kernel_indices)
        ok = ok and kernel_ok
    return _report(name, sg.table, ok, flags=got, details=details, witnesses=witnesses)


def section_gallery_fidelity() -> list[Report]:
    reports = []
    for n in range(2, 7):
        reports.append(_expect_flags(
            f"min_semigroup({n})", min_semigroup(n),
            {"homogroup": True, "grouplike": False}, kernel_indices=(0,),
        ))
    for n in range(3, 7):
        reports.append(_expect_flags(
            f"omega_grouplike({n})", omega_grouplike(n),
            {"grouplike": True, "unipotent": False},
        ))
    reports.append(_expect_flags(
        "klein_grouplike", klein_grouplike(),
        {"grouplike": True, "unipotent": True, "square_group_property": True},
        kernel_indices=(0, 1),
    ))
    for n in range(2, 8):
        j = zn_min_joined(n)
        law = verify_join_law(j, "both", "plain")
        img = image_subgroup_battery(j)
        glk = grouplike_criterion_battery(j)
        details = {
            "two_sided_law": law.holds,
            "image_battery_consistent": img.consistent,
            "homogroup": img.common_value,
            "grouplike_battery_consistent": glk.consistent,
            "grouplike": glk.common_value,
        }
        ok = (law.holds and img.passed and img.common_value is True
              and glk.consistent and glk.common_value is False)
        reports.append(_report(f"zn_min_joined({n})", j.odot, ok, details=details))
    return reports


# ---------------------------------------------------------------- section 2

def enumerated_population(order_max: int, raw_limit: int, workers: int = 1):
    """The standing instance population: raw joined operations at small
    order, generated identical operations on the two order-4 groups."""
    instances: list[tuple[str, JoinedStructure]] = []
    for n in range(1, min(order_max, raw_limit, 3) + 1):
        g = cyclic(n)
        q = EnumerationQuery(g, g.identity, "left", "raw", raw_limit=raw_limit, workers=workers)
        for i, odot in enumerate(enumerate_odot_raw(q)):
            instances.append((f"cyclic({n})#left-raw{i}", JoinedStructure(g.names, g.table, odot, g.identity)))
    for label, g in (("cyclic(4)", cyclic(4)), ("klein", klein_group())):
        q = EnumerationQuery(g, g.identity, "identical", "via-f")
        for i, odot in enumerate(enumerate_odot_generated(q)):
            instances.append((f"{label}#identical-gen{i}", JoinedStructure(g.names, g.table, odot, g.identity)))
    return instances


def _battery_reports_for(name: str, j: JoinedStructure) -> Report:
    img = image_subgroup_battery(j)
    glk = grouplike_criterion_battery(j)
    uni = unital_image_battery(j)
    ids = joiner_identity_checks(j)
    details = {
        "image_battery_consistent": img.consistent,
        "image_battery_required": img.required_ok,
        "grouplike_battery_consistent": glk.consistent,
        "unital_battery_consistent": uni.consistent,
        "unital_battery_required": uni.required_ok,
        "joiner_identities": ids.all_hold,
    }
    witnesses = {}
    two_sided = right_law_violation(j.dot, j.odot, j.e) is None
    if two_sided:
        details["two_sided_second_is_homogroup"] = img.common_value is True
    chain_ok = True
    for length in (2, 3, 4):
        holds, wit = chained_join_law_holds(j, length)
        if not holds:
            chain_ok = False
            witnesses[f"chain_length_{length}"] = wit
    details["chained_law_to_length_4"] = chain_ok
    if j.odot != j.dot:
        J = j.odot[j.e]
        details["second_not_left_e_unital"] = any(J[x] != x for x in range(j.n))
    if not img.consistent:
        witnesses["image_battery_legs"] = img.legs
    if not glk.consistent:
        witnesses["grouplike_battery_legs"] = glk.legs
    if not uni.consistent:
        witnesses["unital_battery_legs"] = uni.legs
    if not ids.all_hold:
        witnesses["joiner_identity_failures"] = {
            k: v for k, v in ids.checks.items() if not v
        }
    ok = all(v is True for v in details.values())
    return _report(name, j.odot, ok, details=details, witnesses=witnesses)


def section_equivalence_batteries(population, workers: int = 1) -> list[Report]:
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda nj: _battery_reports_for(*nj), population))
    return [_battery_reports_for(name, j) for name, j in population]


# ---------------------------------------------------------------- section 3

IDENTICAL_COUNTS = {1: 1, 2: 3, 3: 4}
KLEIN_IDENTICAL_COUNT = 17


def section_identical_sets(raw_limit: int, workers: int, long_run: bool) -> list[Report]:
    reports = []
    for n, expected in IDENTICAL_COUNTS.items():
        g = cyclic(n)
        rep = identical_characterization(g, raw_limit=raw_limit, workers=workers)
        counts_ok, n_ops, n_fns = identical_count_matches_functions(g)
        details = {
            "size": rep.size,
            "expected_size": expected,
            "three_sets_equal": rep.sets_equal,
            "raw_included": not rep.raw_skipped,
            "derivation_unique": rep.derivation_unique,
            "operation_function_bijection": counts_ok,
            "function_count": n_fns,
        }
        ok = (rep.size == expected and rep.sets_equal and not rep.raw_skipped
              and rep.derivation_unique and counts_ok)
        reports.append(_report(f"identical-set cyclic({n})", n, ok, details=details))

    for label, g, expected in (("klein", klein_group(), KLEIN_IDENTICAL_COUNT),
                               ("cyclic(4)", cyclic(4), None)):
        effective_limit = max(raw_limit, 4) if long_run else raw_limit
        rep = identical_characterization(g, raw_limit=effective_limit, workers=workers)
        counts_ok, n_ops, n_fns = identical_count_matches_functions(g)
        consequences = [identical_consequences(g, odot) for odot in rep.derived_set]
        details = {
            "size": rep.size,
            "three_sets_equal": rep.sets_equal,
            "raw_included": not rep.raw_skipped,
            "derivation_unique": rep.derivation_unique,
            "operation_function_bijection": counts_ok,
            "all_consequences_hold": all(c.all_hold for c in consequences),
        }
        ok = (rep.sets_equal and rep.derivation_unique and counts_ok
              and details["all_consequences_hold"])
        if expected is not None:
            details["expected_size"] = expected
            ok = ok and rep.size == expected
        reports.append(_report(f"identical-set {label}", label, ok, details=details))
    return reports


# ---------------------------------------------------------------- sections 4, 5

def section_projection(population) -> list[Report]:
    reports = []
    for name, j in population:
        rep = projection_decomposition_check(j)
        details = {
            "conjugate_images_agree": rep.conjugate_images_agree,
            "delta_is_normal": rep.delta_is_normal,
            "direct_delta_omega": rep.direct_delta_omega,
            "direct_omega_delta": rep.direct_omega_delta,
            "joiner_equals_projection": rep.joiner_equals_projection,
            "joiner_is_strong_decomposer": rep.joiner_is_strong_decomposer,
        }
        reports.append(_report(f"projection {name}", j.odot, rep.all_hold, details=details))
    return reports


def section_quotient(population) -> list[Report]:
    reports = []
    for name, j in population:
        rep = quotient_isomorphism(j)
        details = {
            "diagram_identities": rep.diagram.identities_hold,
            "lam_bijective": rep.lam_bijective,
            "lam_homomorphism": rep.lam_homomorphism,
            "image_right_unital": rep.image_right_unital,
            "quotient_right_unital": rep.quotient_right_unital,
            "monoid_identities_correspond": rep.monoid_identities_correspond,
            "classes_are_cosets": rep.classes_are_cosets,
            "coset_map_isomorphism": rep.coset_map_isomorphism,
            "lagrange_consistent": rep.lagrange_consistent,
        }
        reports.append(_report(f"quotient {name}", j.odot, rep.all_hold, details=details))
    return reports


# ---------------------------------------------------------------- section 6

def section_rational(budget: int, seed: int) -> list[Report]:
    reports = []
    side_budget = max(budget // 10, 100)
    for b in RATIONAL_MODULI:
        joined = b_joined(b, seed=seed, budget=budget)
        single = rat.RationalRuleMagma(joined.odot, f"wrapped addition mod {b}",
                                       seed=seed, budget=budget)
        checks = [
            rat.sampled_associative(single),
            rat.sampled_join_law(joined, "both"),
        ]
        checks += rat.sampled_residue_laws(joined, b)
        # supporting evidence at a lighter budget
        checks.append(rat.sampled_commutative(single, side_budget))
        checks += rat.sampled_joiner_map_laws(joined, side_budget)
        checks.append(rat.sampled_joiner_window(joined, b, side_budget))
        checks += rat.sampled_identical_for_shifts(joined, b, budget=side_budget)
        details = {c.name: c.ok for c in checks}
        details["cases"] = {c.name: c.cases for c in checks}
        witnesses = {c.name: [str(v) for v in c.witness]
                     for c in checks if c.witness is not None}
        ok = all(c.ok for c in checks)
        reports.append(_report(f"wrapped-addition b={b}", str(b), ok, sampled=True,
                               details=details, witnesses=witnesses))
    return reports


# ---------------------------------------------------------------- section 7

def section_counterexamples() -> list[Report]:
    reports = []
    g = klein_group()
    for name, j, holds_side, fails_side in (
        ("pick-left", pick_left_joined(g), "left", "right"),
        ("pick-right", pick_right_joined(g), "right", "left"),
    ):
        good = verify_join_law(j, holds_side, "plain")
        bad = verify_join_law(j, fails_side, "plain")
        second = classify(j.odot_semigroup())
        josemig_good = all(
            (left_law_violation(j.dot, j.odot, e) if holds_side == "left"
             else right_law_violation(j.dot, j.odot, e)) is None
            for e in range(j.n)
        )
        details = {
            f"{holds_side}_law_holds": good.holds,
            f"{fails_side}_law_fails": not bad.holds,
            "second_not_homogroup": not second.is_homogroup,
            f"{holds_side}_josemig": josemig_good,
        }
        witnesses = {}
        if bad.counterexample is not None:
            witnesses[f"{fails_side}_law_witness"] = bad.counterexample
        ok = all(details.values())
        reports.append(_report(f"counterexample {name}", j.odot, ok,
                               details=details, witnesses=witnesses))
    return reports


# ---------------------------------------------------------------- driver

def run_suite(order_max: int = 3, budget: int = 10_000, seed: int = 0,
              raw_limit: int = 3, workers: int | None = None,
              long_run: bool = False) -> SuiteReport:
    """Run every section and collect a deterministic aggregate report."""
    if workers is None:
        workers = int(os.environ.get("JOINALG_WORKERS", "1"))
    params = {
        "order_max": order_max, "budget": budget, "seed": seed,
        "raw_limit": raw_limit, "long_run": long_run,
    }
    sections: dict[str, list[Report]] = {}
    timing: dict[str, float] = {}

    def run(name, fn, *args):
        t0 = time.perf_counter()
        sections[name] = fn(*args)
        timing[name] = time.perf_counter() - t0

    run("gallery_fidelity", section_gallery_fidelity)
    population = enumerated_population(order_max, raw_limit, workers)
    run("equivalence_batteries", section_equivalence_batteries, population, workers)
    run("identical_sets", section_identical_sets, raw_limit, workers, long_run)
    run("projection_decomposition", section_projection, population)
    run("quotient_isomorphism", section_quotient, population)
    run("rational_sampled_laws", section_rational, budget, seed)
    run("counterexamples", section_counterexamples)
    return SuiteReport(params, sections, timing)
