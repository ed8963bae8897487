"""Acceptance suite: every criterion runs at its stated tolerance and prints
one pass/fail line (visible under pytest -s)."""

import itertools
import time

import pytest

from aisemiring import catalog, construct, criteria
from aisemiring.census import enumerate_ai_semirings
from aisemiring.core import (
    additive_height,
    canonical_form,
    direct_product,
    find_embedding,
    find_isomorphism,
    is_subdirect_embedding,
    natural_order,
    validate,
)
from aisemiring.derivation import (
    bundled_certificate_names,
    load_bundled_certificate,
    verify_certificate,
)
from aisemiring.evaluate import BulkEvaluator, check_basis, satisfies
from aisemiring.terms import SimpleIdentity, Term, Word


def _report(number: int, ok: bool, message: str) -> None:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {message}")
    assert ok, message


def test_acceptance_1_census_counts(order4_census):
    t0 = time.monotonic()
    c2 = enumerate_ai_semirings(2)
    c3 = enumerate_ai_semirings(3)
    small_elapsed = time.monotonic() - t0
    counts = (c2.count, c3.count, order4_census.count, len(order4_census.height1))
    ok = counts == (6, 61, 866, 58)
    ok = ok and small_elapsed < 10.0 and order4_census.elapsed < 600.0
    _report(
        1,
        ok,
        f"census counts {counts} (expected (6, 61, 866, 58)); "
        f"orders 2-3 in {small_elapsed:.2f}s, order 4 in {order4_census.elapsed:.2f}s",
    )


def test_acceptance_2_table_fidelity(order4_census):
    entries = [catalog.get(f"S_(4,{k})") for k in range(1, 59)]
    ok = True
    for entry in entries:
        S = entry.semiring
        ok = ok and validate(S.add, S.mul).valid
        ok = ok and additive_height(S) == 1
        ok = ok and S.elements[natural_order(S).top] == "1"
    catalog_keys = {canonical_form(e.semiring) for e in entries}
    census_keys = {canonical_form(S) for S in order4_census.height1}
    ok = ok and len(catalog_keys) == 58 and catalog_keys == census_keys
    _report(2, ok, "58 tables validate, height 1, top 1, and match the census bijectively")


def test_acceptance_3_basis_satisfaction():
    t0 = time.monotonic()
    failures = []
    for name in catalog.BASIS_NAMES:
        entry = catalog.get(name)
        report = check_basis(entry.semiring, entry.basis)
        if not report.all_hold:
            failures.append(name)
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 60.0
    _report(3, ok, f"ten bundled bases hold exhaustively in {elapsed:.2f}s; failures: {failures}")


def test_acceptance_4_criterion_oracle_equivalence():
    variables = ("x", "y", "z")
    words = [Word(t) for k in (1, 2, 3) for t in itertools.product(variables, repeat=k)]
    u_sets = [
        combo for r in (1, 2, 3) for combo in itertools.combinations(words, r)
    ]
    names = sorted(criteria.CRITERIA)
    oracles = {name: catalog.get(name).semiring for name in names}
    bulks = {name: BulkEvaluator(oracles[name], variables) for name in names}
    qvecs = {name: [bulks[name].word_vector(w) for w in words] for name in names}
    reverse_of = {w: w.reverse() for w in words}

    t0 = time.monotonic()
    disagreements = []
    duality_breaks = 0
    delta_breaks = 0
    checked = 0
    outcome_counts = {name: [0, 0] for name in names}
    for u_words in u_sets:
        u = Term(u_words)
        # the transversal family recognises the tail pattern exactly
        tails = frozenset(w.tail for w in u.words)
        if (tails in criteria.delta(u)) != criteria.property_t(u):
            delta_breaks += 1
        u_rev = Term(tuple(reverse_of[w] for w in u.words))
        uvecs = {name: bulks[name].term_vector(u) for name in names}
        for qi, q in enumerate(words):
            si = SimpleIdentity(u, q)
            verdicts = {name: criteria.CRITERIA[name](si).holds for name in names}
            if verdicts["S6"] != criteria.holds_s4(SimpleIdentity(u_rev, reverse_of[q])).holds:
                duality_breaks += 1
            for name in names:
                oracle = bulks[name].absorbs(uvecs[name], qvecs[name][qi])
                checked += 1
                outcome_counts[name][oracle] += 1
                if verdicts[name] != oracle:
                    disagreements.append((name, str(si)))
    elapsed = time.monotonic() - t0
    # no criterion may be vacuous: each must see identities that hold and fail
    vacuous = [name for name, (fails, holds) in outcome_counts.items() if not fails or not holds]
    ok = not disagreements and duality_breaks == 0 and delta_breaks == 0 and not vacuous
    _report(
        4,
        ok,
        f"{checked} criterion/oracle comparisons over {len(u_sets) * len(words)} simple "
        f"identities, {len(disagreements)} disagreements, {duality_breaks} duality breaks, "
        f"{delta_breaks} transversal breaks, vacuous: {vacuous or 'none'}, in {elapsed:.1f}s"
        + (f"; first: {disagreements[:3]}" if disagreements else ""),
    )


def test_acceptance_5_structural_claims():
    checks = [
        find_isomorphism(catalog.get("S_(4,8)").semiring, catalog.resolve("@sc:ab")),
        find_isomorphism(catalog.get("S_(4,9)").semiring, catalog.resolve("@sc:aaa")),
        find_isomorphism(catalog.get("S7").semiring, catalog.resolve("@mc:a")),
        find_isomorphism(catalog.get("S7").semiring, catalog.resolve("@m:a")),
        find_isomorphism(catalog.get("S_(4,37)").semiring, catalog.resolve("@flatext:z3")),
        find_isomorphism(catalog.get("S_(4,16)").semiring, catalog.resolve("@dual:S_(4,41)")),
        find_isomorphism(catalog.get("S_(4,21)").semiring, catalog.resolve("@dual:S_(4,47)")),
        find_isomorphism(catalog.get("S_(4,46)").semiring, catalog.resolve("@dual:S_(4,48)")),
        find_isomorphism(catalog.get("S_(4,45)").semiring, catalog.resolve("@dual:S_(4,30)")),
        find_isomorphism(catalog.get("S_(4,15)").semiring, catalog.resolve("@ie:S2")),
    ]
    subdirects = [
        ("S_(4,20)", "S10", "T2"),
        ("S_(4,41)", "S2", "S5"),
        ("S_(4,42)", "S2", "S13"),
        ("S_(4,30)", "S4", "S14"),
        ("S_(4,47)", "S4", "S9"),
        ("S_(4,48)", "S4", "S15"),
        ("S_(4,6)", "S6", "S6"),
        ("S_(4,12)", "S4", "S6"),
    ]
    for name, a, b in subdirects:
        checks.append(
            is_subdirect_embedding(
                catalog.get(name).semiring, catalog.get(a).semiring, catalog.get(b).semiring
            )
        )
    direct_ok = all(found is not None for found in checks)
    claim_results = catalog.verify_all_claims()
    all_claims_ok = all(r.ok for r in claim_results)
    ok = direct_ok and all_claims_ok
    _report(
        5,
        ok,
        f"{len(checks)} acceptance claims hold directly; "
        f"{sum(r.ok for r in claim_results)}/{len(claim_results)} catalog claims pass",
    )


def test_acceptance_6_nfb_witnesses():
    positives = [
        "S_(4,11)", "S_(4,13)", "S_(4,24)", "S_(4,25)", "S_(4,26)",
        "S_(4,28)", "S_(4,31)", "S_(4,49)", "S_(4,50)",
    ]
    wrong = []
    for name in positives:
        if not construct.nfb_witness(catalog.get(name).semiring).conclusion:
            wrong.append(name)
    for name in ("S_(4,1)", "T2"):
        if construct.nfb_witness(catalog.get(name).semiring).conclusion:
            wrong.append(name)
    _report(6, not wrong, f"nine witnesses positive, two negative; wrong: {wrong}")


def test_acceptance_7_extension_propositions():
    T2 = catalog.get("T2").semiring
    M2 = catalog.get("M2").semiring
    flats = [e for e in catalog.entries(flat=True)]
    failures = []
    for entry in flats:
        S = entry.semiring
        if is_subdirect_embedding(construct.null_extension(S), S, T2) is None:
            failures.append((entry.name, "null extension"))
        if is_subdirect_embedding(construct.idempotent_extension(S), S, M2) is None:
            failures.append((entry.name, "idempotent extension"))
    S7 = catalog.get("S7").semiring
    product_flat = construct.is_flat(direct_product(S7, S7))
    ok = not failures and not product_flat
    _report(
        7,
        ok,
        f"{len(flats)} flat catalog algebras extend subdirectly into SxT2 and SxM2; "
        f"S7xS7 flat: {product_flat}; failures: {failures}",
    )


def test_acceptance_8_derivation_certificates(cat):
    names = bundled_certificate_names()
    failures = []
    for name in names:
        cert = load_bundled_certificate(name)
        if not verify_certificate(cert).valid:
            failures.append((name, "does not verify"))
            continue
        for entry in cat.values():
            S = entry.semiring
            if all(satisfies(S, axiom) for axiom in cert.axioms) and not satisfies(
                S, cert.endpoints
            ):
                failures.append((name, entry.name))
    _report(
        8,
        not failures,
        f"{len(names)} bundled certificates verify and are sound on the catalog; "
        f"failures: {failures}",
    )
