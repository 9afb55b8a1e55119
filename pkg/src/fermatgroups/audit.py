"""Machine verification bundle: every claimed identity checked with witnesses.

Each audit function re-derives one family of identities by an independent
route (matrix products against parameter composition, dense cyclotomic
products against the permutation-exponent law, closed forms against the
verified transitivity solver, orbit sizes against the orbit-stabilizer
count) and reports exact counts plus concrete witnesses.  `run_audit_suite`
bundles them into one JSON-able dict whose content depends only on the seed
and the stated bounds, so repeated runs are byte-identical.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from . import circle, hyperbola, monomial, search
from .cyclotomic import CyclotomicNumber
from .rationals import INF, format_point, format_projective

__all__ = [
    "circle_identity_sweep",
    "circle_law_sample",
    "hyperbola_identity_sweep",
    "monomial_law_sample",
    "orbit_cardinality_audit",
    "rational_subgroup_audit",
    "render_identity_audit",
    "run_audit_suite",
]

SPECIAL_DELTAS = (Fraction(0), Fraction(1), Fraction(-1), INF)


def _format_pair(source, target) -> str:
    return f"({format_point(source)}) -> ({format_point(target)})"


def render_identity_audit(audit) -> dict:
    return {
        "pair": _format_pair(audit.source, audit.target),
        "left": None if audit.left is None else format_projective(audit.left),
        "right": None if audit.right is None else format_projective(audit.right),
        "solver": format_projective(audit.solver_delta),
        "sides_equal": audit.sides_equal,
        "left_matches_solver": audit.left_matches_solver,
        "right_matches_solver": audit.right_matches_solver,
        "excluded_case": audit.excluded_case,
    }


def _random_delta(rng: random.Random, span: int = 30):
    if rng.random() < 0.05:
        return INF
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def circle_law_sample(rng: random.Random, pairs: int = 2000) -> dict:
    """Check L(d1)·L(d2) = L(compose(d1, d2)) on sampled and special pairs.

    Every pair of the four special parameters {0, 1, -1, inf} is always
    included, so all pole cases of the composition law are exercised on each
    run; the remaining pairs are drawn from the seeded generator.
    """
    checked = 0
    mismatches = []
    special_pairs = [(d1, d2) for d1 in SPECIAL_DELTAS for d2 in SPECIAL_DELTAS]
    sampled = [(_random_delta(rng), _random_delta(rng)) for _ in range(max(0, pairs - len(special_pairs)))]
    for d1, d2 in special_pairs + sampled:
        law = circle.rotation_matrix(circle.compose_delta(d1, d2))
        product = circle.rotation_matrix(d1) * circle.rotation_matrix(d2)
        checked += 1
        if law != product:
            mismatches.append((format_projective(d1), format_projective(d2)))
    return {
        "pairs_checked": checked,
        "special_pairs": len(special_pairs),
        "mismatches": mismatches,
        "holds": not mismatches,
    }


def _dense_matrix(element: monomial.MonomialMatrix) -> tuple[tuple[CyclotomicNumber, ...], ...]:
    # full cyclotomic matrix; only verification code ever materializes this
    k, n = element.k, element.n
    zero = CyclotomicNumber.zero(k)
    rows = []
    for i in range(n):
        row = [zero] * n
        row[element.perm[i]] = CyclotomicNumber.root_of_unity(k, element.exponents[i])
        rows.append(tuple(row))
    return tuple(rows)


def _dense_mul(a, b, k: int):
    n = len(a)
    zero = CyclotomicNumber.zero(k)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            total = zero
            for m in range(n):
                if a[i][m] and b[m][j]:
                    total = total + a[i][m] * b[m][j]
            row.append(total)
        out.append(tuple(row))
    return tuple(out)


def monomial_law_sample(rng: random.Random, pairs: int = 300) -> dict:
    """Check the permutation-exponent product against dense matrix products."""
    checked = 0
    mismatches = []
    for _ in range(pairs):
        k = rng.randint(3, 6)
        n = rng.randint(1, 3)
        first = monomial.MonomialMatrix(
            k,
            rng.sample(range(n), n),
            [rng.randrange(k) for _ in range(n)],
        )
        second = monomial.MonomialMatrix(
            k,
            rng.sample(range(n), n),
            [rng.randrange(k) for _ in range(n)],
        )
        law = first * second
        dense = _dense_mul(_dense_matrix(first), _dense_matrix(second), k)
        checked += 1
        if _dense_matrix(law) != dense:
            mismatches.append({"first": first.as_dict(), "second": second.as_dict(), "k": k})
    return {
        "pairs_checked": checked,
        "mismatches": mismatches,
        "holds": not mismatches,
    }


def circle_identity_sweep(bound: int = 50) -> dict:
    """Evaluate both circle closed forms on every pair of bounded points.

    On the circle the two forms agree with each other and with the solver on
    every pair where both are defined; pairs with an indeterminate side are
    counted separately.  The returned witness is the smallest nontrivial
    point pair in the sweep order.
    """
    points = search.circle_points(bound)
    pairs = both_defined = agree = 0
    undefined = 0
    side_mismatches: list[dict] = []
    solver_mismatches: list[dict] = []
    witness = None
    for source in points:
        for target in points:
            audit = circle.delta_identity_audit(source, target)
            pairs += 1
            if audit.left is None or audit.right is None:
                undefined += 1
            else:
                both_defined += 1
                if audit.sides_equal:
                    agree += 1
                else:
                    side_mismatches.append(render_identity_audit(audit))
                if not (audit.left_matches_solver and audit.right_matches_solver):
                    solver_mismatches.append(render_identity_audit(audit))
                if witness is None and audit.solver_delta != 0:
                    witness = render_identity_audit(audit)
    return {
        "height": bound,
        "points": len(points),
        "pairs": pairs,
        "both_defined": both_defined,
        "sides_agree": agree,
        "undefined_pairs": undefined,
        "side_mismatches": side_mismatches,
        "solver_mismatches": solver_mismatches,
        "identity_holds": both_defined == agree and not solver_mismatches,
        "witness": witness,
    }


def hyperbola_identity_sweep(bound: int = 50) -> dict:
    """Evaluate both hyperbola closed forms on every pair of bounded points.

    The right-hand form tracks the verified solver wherever defined.  The
    left-hand form does not: the sweep counts how often the two sides agree
    and preserves the first disagreements verbatim, because the mismatch is
    itself the finding.
    """
    points = search.hyperbola_points(bound)
    pairs = both_defined = agree = 0
    undefined = 0
    right_defined = right_agrees_solver = 0
    disagreement_witnesses: list[dict] = []
    right_solver_mismatches: list[dict] = []
    witness = render_identity_audit(
        hyperbola.delta_identity_audit(
            (Fraction(5, 4), Fraction(3, 4)), (Fraction(5, 3), Fraction(4, 3))
        )
    )
    for source in points:
        for target in points:
            audit = hyperbola.delta_identity_audit(source, target)
            pairs += 1
            if audit.right is not None:
                right_defined += 1
                if audit.right_matches_solver:
                    right_agrees_solver += 1
                else:
                    right_solver_mismatches.append(render_identity_audit(audit))
            if audit.left is None or audit.right is None:
                undefined += 1
                continue
            both_defined += 1
            if audit.sides_equal:
                agree += 1
            elif len(disagreement_witnesses) < 5:
                disagreement_witnesses.append(render_identity_audit(audit))
    return {
        "height": bound,
        "points": len(points),
        "pairs": pairs,
        "both_defined": both_defined,
        "sides_agree": agree,
        "sides_disagree": both_defined - agree,
        "undefined_pairs": undefined,
        "right_defined": right_defined,
        "right_agrees_solver": right_agrees_solver,
        "right_solver_mismatches": right_solver_mismatches,
        "right_form_tracks_solver": right_defined == right_agrees_solver,
        "left_form_discrepant": both_defined > agree,
        "witness": witness,
        "disagreement_witnesses": disagreement_witnesses,
    }


def rational_subgroup_audit(ks=(3, 4, 5), n: int = 2) -> list[dict]:
    """Certify the rational-entry subgroups for several orders k."""
    out = []
    for k in ks:
        report = monomial.rational_elements(k, n)
        out.append(
            {
                "k": k,
                "n": n,
                "order": report.order,
                "plain_permutation_count": factorial(n),
                "signed_permutation_count": 2**n * factorial(n),
                "is_group": report.is_group,
                "permutations_only": report.permutations_only,
                "matches_plain_permutations": report.order == factorial(n)
                and report.permutations_only,
                "exceeds_plain_permutations": report.order > factorial(n),
            }
        )
    return out


def orbit_cardinality_audit(ks=(3, 4, 5, 6, 7, 8)) -> list[dict]:
    """Orbit sizes of marker vectors in dimension 2, with stabilizer checks.

    A generic vector (components differing, neither zero, unrelated by root
    powers) has trivial stabilizer, so its orbit size equals the group order
    2k^2; the axis vector (1, 0) and the diagonal vector (1, 1) have
    stabilizers of orders k and 2 respectively.  Each row verifies the
    orbit-stabilizer product exactly.
    """
    out = []
    for k in ks:
        order = monomial.group_order(k, 2)
        rows = {}
        for label, components in (
            ("generic", (2, 3)),
            ("axis", (1, 0)),
            ("diagonal", (1, 1)),
        ):
            vector = monomial.cyclo_vector(k, components)
            orbit_size = len(monomial.orbit(vector))
            stab_size = len(monomial.stabilizer(vector))
            rows[label] = {
                "vector": f"{components[0]},{components[1]}",
                "orbit": orbit_size,
                "stabilizer": stab_size,
                "product_is_group_order": orbit_size * stab_size == order,
            }
        out.append(
            {
                "k": k,
                "group_order": order,
                "generic_orbit_is_group_order": rows["generic"]["orbit"] == order,
                "orbits": rows,
            }
        )
    return out


def run_audit_suite(seed: int = 0, identity_bound: int = 50, law_pairs: int = 2000) -> dict:
    """Run every audit with one seeded generator and bundle the reports.

    The report is pure data (strings, ints, bools) and depends only on the
    arguments, so identical invocations serialize identically.
    """
    rng = random.Random(seed)
    report = {
        "seed": seed,
        "identity_height": identity_bound,
        "circle_group_law": circle_law_sample(rng, law_pairs),
        "monomial_group_law": monomial_law_sample(rng),
        "circle_delta_identity": circle_identity_sweep(identity_bound),
        "hyperbola_delta_identity": hyperbola_identity_sweep(identity_bound),
        "rational_subgroups": rational_subgroup_audit(),
        "orbit_cardinalities": orbit_cardinality_audit(),
    }
    report["all_expected_results"] = bool(
        report["circle_group_law"]["holds"]
        and report["monomial_group_law"]["holds"]
        and report["circle_delta_identity"]["identity_holds"]
        and report["hyperbola_delta_identity"]["right_form_tracks_solver"]
        and report["hyperbola_delta_identity"]["left_form_discrepant"]
        and all(entry["is_group"] for entry in report["rational_subgroups"])
        and all(entry["generic_orbit_is_group_order"] for entry in report["orbit_cardinalities"])
    )
    return report
