"""Command-line interface: exact group arithmetic behind verb-noun commands.

Every payload is exact: rationals print as "p/q" (denominator always
present), the point at infinity as "inf", and no floating-point value ever
reaches stdout.  Identical invocations print identical bytes; wall-clock
diagnostics go to stderr only.  Exit codes: 0 success, 2 invalid argument,
3 resource limit exceeded.
"""

from __future__ import annotations

import csv as csv_module
import io
import json
import sys

import click

from . import audit as audit_lib
from . import circle as circle_lib
from . import hyperbola as hyper_lib
from . import monomial, stroboscope
from . import search as search_lib
from .audit import run_audit_suite
from .cyclotomic import CyclotomicNumber
from .errors import InvalidArgumentError, ResourceLimitError
from .rationals import (
    format_point,
    format_projective,
    format_rational,
    parse_point,
    parse_projective,
    parse_rational,
)

__all__ = ["cli", "dispatch", "main", "run_audit_suite"]


def _compact_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _echo_payload(payload, fmt: str, text_lines=None) -> None:
    if fmt == "json":
        click.echo(_compact_json(payload))
    elif text_lines is None:
        click.echo(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            click.echo(line)


def _echo_csv(header, rows) -> None:
    buffer = io.StringIO()
    writer = csv_module.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)


def _format_option(*choices, default="text"):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(choices),
        default=default,
        show_default=True,
        help="Output serialization.",
    )


def _point_pair(from_text, to_text):
    return parse_point(from_text), parse_point(to_text)


@click.group(name="fermatgroups")
def cli() -> None:
    """Exact arithmetic for the symmetry groups of x^k + y^k = 1.

    Rationals are written "p/q" (or "p"); "inf" is the point at infinity;
    points are "x,y".  Heights are max(|p|, q) of the reduced fraction.
    All output is exact; nothing is rounded.
    """


# ---------------------------------------------------------------- circle ----


@cli.group(name="circle")
def circle_group() -> None:
    """Rational rotations and reflections of the unit circle."""


@circle_group.command(name="compose")
@click.option("--d1", "d1_text", required=True, metavar="PR", help="First parameter (p/q or inf).")
@click.option("--d2", "d2_text", required=True, metavar="PR", help="Second parameter (p/q or inf).")
@_format_option("text", "json")
def circle_compose_cmd(d1_text: str, d2_text: str, fmt: str) -> None:
    """Parameter of the product rotation L(d1)·L(d2)."""
    result = circle_lib.compose_delta(parse_projective(d1_text), parse_projective(d2_text))
    _echo_payload(format_projective(result), fmt, [format_projective(result)])


@circle_group.command(name="act")
@click.option("--delta", "delta_text", required=True, metavar="PR", help="Rotation parameter.")
@click.option("--reflect", is_flag=True, help="Apply the reflection diag(1,-1) after rotating.")
@click.option("--point", "point_text", required=True, metavar="PT", help="Circle point x,y.")
@_format_option("text", "json")
def circle_act_cmd(delta_text: str, reflect: bool, point_text: str, fmt: str) -> None:
    """Exact image of a circle point under a group element."""
    element = circle_lib.CircleElement(parse_projective(delta_text), reflect)
    image = element.act(parse_point(point_text))
    _echo_payload([format_rational(c) for c in image], fmt, [format_point(image)])


@circle_group.command(name="solve")
@click.option("--from", "from_text", required=True, metavar="PT", help="Start point x,y.")
@click.option("--to", "to_text", required=True, metavar="PT", help="Target point x,y.")
@_format_option("text", "json")
def circle_solve_cmd(from_text: str, to_text: str, fmt: str) -> None:
    """Rotation parameter carrying one circle point to another (verified)."""
    source, target = _point_pair(from_text, to_text)
    element = circle_lib.solve_delta(source, target)
    payload = {"delta": format_projective(element.delta), "reflected": element.reflected}
    _echo_payload(payload, fmt, [format_projective(element.delta)])


@circle_group.command(name="audit-exy")
@click.option("--height", "bound", type=int, default=None, metavar="H", help="Sweep all point pairs up to this height (default 12).")
@click.option("--from", "from_text", default=None, metavar="PT", help="Audit a single pair: start point.")
@click.option("--to", "to_text", default=None, metavar="PT", help="Audit a single pair: target point.")
@_format_option("text", "json")
def circle_audit_cmd(bound, from_text, to_text, fmt: str) -> None:
    """Audit the two closed forms for the circle's connecting parameter.

    Both forms are evaluated exactly on every pair of rational circle points
    within the height bound (or on one explicit pair) and compared against
    the verified transitivity solver.
    """
    if (from_text is None) != (to_text is None):
        raise click.UsageError("--from and --to must be given together")
    if from_text is not None:
        if bound is not None:
            raise click.UsageError("give either --height or a --from/--to pair, not both")
        source, target = _point_pair(from_text, to_text)
        payload = audit_lib.render_identity_audit(circle_lib.delta_identity_audit(source, target))
    else:
        payload = audit_lib.circle_identity_sweep(12 if bound is None else bound)
    _echo_payload(payload, fmt)


@cli.command(name="triples")
@click.option("--height", "bound", type=int, required=True, metavar="H", help="Parameter height bound.")
@_format_option("text", "json", "csv")
def triples_cmd(bound: int, fmt: str) -> None:
    """Primitive Pythagorean triples from rotation parameters up to a height."""
    triples = circle_lib.primitive_triples(bound)
    if fmt == "csv":
        _echo_csv(("a", "b", "c"), triples)
    else:
        _echo_payload([list(t) for t in triples], fmt, [f"{a} {b} {c}" for a, b, c in triples])


# ------------------------------------------------------------- hyperbola ----


@cli.group(name="hyper")
def hyper_group() -> None:
    """Rational boosts and reflections of the unit hyperbola."""


@hyper_group.command(name="compose")
@click.option("--d1", "d1_text", required=True, metavar="PR", help="First parameter (p/q or inf, |p/q| != 1).")
@click.option("--d2", "d2_text", required=True, metavar="PR", help="Second parameter.")
@_format_option("text", "json")
def hyper_compose_cmd(d1_text: str, d2_text: str, fmt: str) -> None:
    """Parameter of the product boost L~(d1)·L~(d2)."""
    result = hyper_lib.compose_delta(parse_projective(d1_text), parse_projective(d2_text))
    _echo_payload(format_projective(result), fmt, [format_projective(result)])


@hyper_group.command(name="act")
@click.option("--delta", "delta_text", required=True, metavar="PR", help="Boost parameter.")
@click.option("--reflect", is_flag=True, help="Apply the reflection diag(1,-1) after boosting.")
@click.option("--point", "point_text", required=True, metavar="PT", help="Hyperbola point x,y.")
@_format_option("text", "json")
def hyper_act_cmd(delta_text: str, reflect: bool, point_text: str, fmt: str) -> None:
    """Exact image of a hyperbola point under a group element."""
    element = hyper_lib.HyperbolicElement(parse_projective(delta_text), reflect)
    image = element.act(parse_point(point_text))
    _echo_payload([format_rational(c) for c in image], fmt, [format_point(image)])


@hyper_group.command(name="solve")
@click.option("--from", "from_text", required=True, metavar="PT", help="Start point x,y.")
@click.option("--to", "to_text", required=True, metavar="PT", help="Target point x,y.")
@_format_option("text", "json")
def hyper_solve_cmd(from_text: str, to_text: str, fmt: str) -> None:
    """Boost parameter carrying one hyperbola point to another (verified)."""
    source, target = _point_pair(from_text, to_text)
    element = hyper_lib.solve_delta(source, target)
    payload = {"delta": format_projective(element.delta), "reflected": element.reflected}
    _echo_payload(payload, fmt, [format_projective(element.delta)])


@hyper_group.command(name="audit")
@click.option("--height", "bound", type=int, default=None, metavar="H", help="Sweep all point pairs up to this height (default 12).")
@click.option("--from", "from_text", default=None, metavar="PT", help="Audit a single pair: start point.")
@click.option("--to", "to_text", default=None, metavar="PT", help="Audit a single pair: target point.")
@_format_option("text", "json")
def hyper_audit_cmd(bound, from_text, to_text, fmt: str) -> None:
    """Audit the two closed forms for the hyperbola's connecting parameter.

    The right-hand form tracks the verified solver; the left-hand form is
    genuinely discrepant, and the sweep preserves the disagreement with
    exact witnesses instead of reconciling it.
    """
    if (from_text is None) != (to_text is None):
        raise click.UsageError("--from and --to must be given together")
    if from_text is not None:
        if bound is not None:
            raise click.UsageError("give either --height or a --from/--to pair, not both")
        source, target = _point_pair(from_text, to_text)
        payload = audit_lib.render_identity_audit(hyper_lib.delta_identity_audit(source, target))
    else:
        payload = audit_lib.hyperbola_identity_sweep(12 if bound is None else bound)
    _echo_payload(payload, fmt)


# ---------------------------------------------------------------- kgroup ----


@cli.group(name="kgroup")
def kgroup_group() -> None:
    """Finite monomial symmetry groups of x_1^k + ... + x_n^k (k >= 3)."""


@kgroup_group.command(name="order")
@click.option("--k", type=int, required=True, help="Form degree (k >= 3).")
@click.option("--n", type=int, required=True, help="Number of variables.")
@_format_option("text", "json")
def kgroup_order_cmd(k: int, n: int, fmt: str) -> None:
    """Group order k^n * n! (exact)."""
    order = monomial.group_order(k, n)
    _echo_payload(order, fmt, [str(order)])


@kgroup_group.command(name="enumerate")
@click.option("--k", type=int, required=True, help="Form degree (k >= 3).")
@click.option("--n", type=int, required=True, help="Number of variables.")
@click.option("--limit", type=int, default=None, metavar="M", help="Element cap (default 10^6 or FERMAT_ORBIT_LIMIT).")
@_format_option("text", "json", "csv")
def kgroup_enumerate_cmd(k: int, n: int, limit, fmt: str) -> None:
    """List every group element as its permutation and exponent vector."""
    elements = monomial.enumerate_group(k, n, limit)
    if fmt == "csv":
        _echo_csv(
            ("perm", "exp"),
            [
                (" ".join(map(str, e.perm)), " ".join(map(str, e.exponents)))
                for e in elements
            ],
        )
    else:
        _echo_payload(
            [e.as_dict() for e in elements],
            fmt,
            [
                f"perm={','.join(map(str, e.perm))} exp={','.join(map(str, e.exponents))}"
                for e in elements
            ],
        )


def _split_top_level(text: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == "[":
            depth += 1
            current.append(ch)
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise InvalidArgumentError(f"unbalanced brackets in vector: {text!r}")
            current.append(ch)
        elif ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise InvalidArgumentError(f"unbalanced brackets in vector: {text!r}")
    parts.append("".join(current))
    return parts


def _parse_vector(k: int, text: str):
    components = []
    for token in _split_top_level(text):
        token = token.strip()
        if not token:
            raise InvalidArgumentError(f"empty component in vector: {text!r}")
        if token.startswith("["):
            if not token.endswith("]"):
                raise InvalidArgumentError(f"malformed cyclotomic component: {token!r}")
            inner = token[1:-1].strip()
            coeffs = [parse_rational(part) for part in inner.split(",")] if inner else []
            components.append(CyclotomicNumber(k, coeffs))
        else:
            components.append(parse_rational(token))
    return monomial.cyclo_vector(k, components)


def _vector_sort_key(vector):
    return tuple(component.coeffs for component in vector)


def _component_payload(component: CyclotomicNumber):
    value = component.is_rational()
    if value is not None:
        return f"{value.numerator}/{value.denominator}"
    return component.as_dict()


@kgroup_group.command(name="orbit")
@click.option("--k", type=int, required=True, help="Form degree (k >= 3).")
@click.option("--point", "point_text", required=True, metavar="VEC", help='Vector: components "p/q" or cyclotomic coefficient lists "[c0,c1,...]", comma separated.')
@click.option("--limit", type=int, default=None, metavar="M", help="Element cap (default 10^6 or FERMAT_ORBIT_LIMIT).")
@_format_option("text", "json")
def kgroup_orbit_cmd(k: int, point_text: str, limit, fmt: str) -> None:
    """Full group orbit of a vector, with the orbit-stabilizer check."""
    vector = _parse_vector(k, point_text)
    points = sorted(monomial.orbit(vector, limit=limit), key=_vector_sort_key)
    stabilizer_order = len(monomial.stabilizer(vector, limit=limit))
    payload = {
        "k": k,
        "n": len(vector),
        "orbit_size": len(points),
        "stabilizer_order": stabilizer_order,
        "group_order": monomial.group_order(k, len(vector)),
        "points": [[_component_payload(c) for c in point] for point in points],
    }
    lines = [
        f"orbit size {len(points)}, stabilizer order {stabilizer_order}, group order {payload['group_order']}"
    ]
    lines.extend(" | ".join(str(c) for c in point) for point in points)
    _echo_payload(payload, fmt, lines)


@kgroup_group.command(name="rational")
@click.option("--k", type=int, required=True, help="Form degree (k >= 3).")
@click.option("--n", type=int, required=True, help="Number of variables.")
@click.option("--limit", type=int, default=None, metavar="M", help="Element cap (default 10^6 or FERMAT_ORBIT_LIMIT).")
@_format_option("text", "json")
def kgroup_rational_cmd(k: int, n: int, limit, fmt: str) -> None:
    """The subgroup with rational matrix entries, certified by closure checks."""
    report = monomial.rational_elements(k, n, limit)
    payload = {
        "k": report.k,
        "n": report.n,
        "order": report.order,
        "is_group": report.is_group,
        "permutations_only": report.permutations_only,
        "elements": [e.as_dict() for e in report.elements],
    }
    lines = [
        f"order {report.order} (group: {report.is_group}, permutations only: {report.permutations_only})"
    ]
    lines.extend(
        f"perm={','.join(map(str, e.perm))} exp={','.join(map(str, e.exponents))}"
        for e in report.elements
    )
    _echo_payload(payload, fmt, lines)


@kgroup_group.command(name="orbit-rational")
@click.option("--k", type=int, required=True, help="Form degree (k >= 3).")
@click.option("--limit", type=int, default=None, metavar="M", help="Element cap (default 10^6 or FERMAT_ORBIT_LIMIT).")
@_format_option("text", "json", "csv")
def kgroup_orbit_rational_cmd(k: int, limit, fmt: str) -> None:
    """Rational points of x^k + y^k = 1 in the orbit of (1, 0)."""
    points = sorted(monomial.orbit_rational_points(k, limit=limit))
    if fmt == "csv":
        _echo_csv(("x", "y"), [(format_rational(x), format_rational(y)) for x, y in points])
    else:
        _echo_payload(
            [[format_rational(x), format_rational(y)] for x, y in points],
            fmt,
            [format_point(p) for p in points],
        )


# ---------------------------------------------------------------- search ----


@cli.command(name="search")
@click.option("--k", type=int, required=True, help="Form degree (k >= 2).")
@click.option("--height", "bound", type=int, required=True, metavar="H", help="Height bound for every coordinate.")
@click.option("--n", type=int, default=2, show_default=True, help="Number of variables.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, writable=True), default=None, help="Also write the JSON report to this file.")
@_format_option("text", "json", "csv")
def search_cmd(k: int, bound: int, n: int, json_path, fmt: str) -> None:
    """Exhaustive scan for rational solutions of x_1^k + ... + x_n^k = 1."""
    report = search_lib.search_n(k, n, bound)
    payload = report.payload()
    if json_path is not None:
        with open(json_path, "w", encoding="utf-8") as handle:
            handle.write(_compact_json(payload) + "\n")
    click.echo(f"elapsed: {report.elapsed:.3f}s", err=True)
    if fmt == "csv":
        _echo_csv(
            tuple(f"x{i}" for i in range(1, n + 1)),
            [tuple(format_rational(c) for c in solution) for solution in report.solutions],
        )
        return
    lines = [
        f"k={report.k} n={report.n} height={report.height_bound}: "
        f"{len(report.solutions)} solutions ({report.trivial_count} trivial, {report.nontrivial_count} nontrivial)"
    ]
    lines.extend(",".join(format_rational(c) for c in solution) for solution in report.solutions)
    _echo_payload(payload, fmt, lines)


@cli.command(name="coverage")
@click.option("--height", "bound", type=int, required=True, metavar="H", help="Height bound for circle points.")
@_format_option("text", "json", "csv")
def coverage_cmd(bound: int, fmt: str) -> None:
    """Verify every bounded circle point is reached from (1,0) by a rotation."""
    report = search_lib.verify_orbit_coverage(bound)
    if fmt == "csv":
        _echo_csv(
            ("x", "y", "delta"),
            [
                (format_rational(p[0]), format_rational(p[1]), format_projective(d))
                for p, d in report.entries
            ],
        )
        return
    payload = {
        "height": report.height_bound,
        "total": report.total,
        "covered": report.covered,
        "coverage": format_rational(report.coverage),
        "unreachable": [format_point(p) for p in report.unreachable],
        "entries": [
            {"point": format_point(p), "delta": format_projective(d)}
            for p, d in report.entries
        ],
    }
    lines = [f"covered {report.covered}/{report.total} (coverage {format_rational(report.coverage)})"]
    lines.extend(
        f"{format_point(p)} <- delta {format_projective(d)}" for p, d in report.entries
    )
    _echo_payload(payload, fmt, lines)


@cli.command(name="counterexample")
@click.option("--k", type=int, required=True, help="Odd form degree (k >= 3).")
@click.option("--x1", "x1_text", required=True, metavar="p/q", help="Free rational parameter.")
@_format_option("text", "json")
def counterexample_cmd(k: int, x1_text: str, fmt: str) -> None:
    """A verified 3-variable solution (x1, -x1, 1) of arbitrary height, odd k."""
    witness = search_lib.n_counterexample(k, parse_rational(x1_text))
    payload = {
        "k": k,
        "witness": [format_rational(c) for c in witness],
        "verified": True,
    }
    _echo_payload(payload, fmt, [",".join(format_rational(c) for c in witness)])


# ------------------------------------------------------------ stroboscope ----


@cli.command(name="iterate")
@click.option("--delta", "delta_text", required=True, metavar="PR", help="Rotation parameter.")
@click.option("--steps", type=int, required=True, metavar="N", help="Number of exact steps.")
@click.option("--start", "start_text", default="1/1,0/1", show_default=True, metavar="PT", help="Start point on the circle.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, writable=True), default=None, help="Also write the trajectory as CSV to this file.")
@_format_option("text", "json", "csv")
def iterate_cmd(delta_text: str, steps: int, start_text: str, csv_path, fmt: str) -> None:
    """Iterate a rational rotation exactly, recording points and heights."""
    trajectory = stroboscope.iterate(parse_projective(delta_text), parse_point(start_text), steps)
    rows = [
        (str(step), format_rational(point[0]), format_rational(point[1]), str(h))
        for step, (point, h) in enumerate(zip(trajectory.points, trajectory.heights), start=1)
    ]
    if csv_path is not None:
        with open(csv_path, "w", encoding="utf-8", newline="") as handle:
            writer = csv_module.writer(handle, lineterminator="\n")
            writer.writerow(("step", "x", "y", "height"))
            writer.writerows(rows)
    if fmt == "csv":
        _echo_csv(("step", "x", "y", "height"), rows)
        return
    payload = {
        "delta": format_projective(trajectory.delta),
        "start": format_point(trajectory.start),
        "period": trajectory.period,
        "points": [[format_rational(x), format_rational(y)] for x, y in trajectory.points],
        "heights": trajectory.heights,
    }
    lines = [f"step {step}: {x},{y} height {h}" for step, x, y, h in rows]
    lines.append(f"period: {trajectory.period if trajectory.period is not None else 'none'}")
    _echo_payload(payload, fmt, lines)


# ------------------------------------------------------------------ audit ----


@cli.command(name="audit")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for the randomized law sweeps.")
@click.option("--height", "bound", type=int, default=50, show_default=True, metavar="H", help="Height bound for the identity sweeps.")
@click.option("--pairs", type=int, default=2000, show_default=True, help="Sampled pairs for the circle law sweep.")
@_format_option("json", default="json")
def audit_cmd(seed: int, bound: int, pairs: int, fmt: str) -> None:
    """Run every identity audit and print one deterministic JSON report."""
    report = run_audit_suite(seed=seed, identity_bound=bound, law_pairs=pairs)
    _echo_payload(report, fmt)


def main(argv=None) -> int:
    """Programmatic entry point; returns the process exit code."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except InvalidArgumentError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except ResourceLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    return 0


def dispatch(argv) -> int:
    """Route an argv list to the subcommands; alias for main(argv)."""
    return main(list(argv))


if __name__ == "__main__":
    sys.exit(main())
