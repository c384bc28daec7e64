"""Command-line front end.

Commands wire the library into reproducible experiments:

    index       orbit length / subgroup index for a group and seed
    congruence  level and congruence decision of the image in SL2(Z)
    verify      named verification suites (presentation, dihedral
                identities, the word tables, the witness)
    census      orbit and kernel census over all epimorphisms
    conjecture  metacyclic index experiment for prime pairs (p, q)

Exit codes: 0 success, 1 a verification item failed, 2 bad input,
3 a resource limit was hit.  Reports serialize to JSON with sorted
keys, so identical invocations produce identical output apart from
the timing field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import __version__, fixtures, sl2, slsub, verify
from .epi import (
    Epimorphism,
    NotSurjective,
    inner_index,
    kernel_orbit_census,
    make_epi,
    orbit_stabilizer,
)
from .groups import (
    CapExceeded,
    DEFAULT_MAX_COSETS,
    DEFAULT_ORDER_CAP,
    EnumerationLimit,
    GroupTable,
    Presentation,
    abelian,
    cyclic,
    dihedral,
    from_permutations,
    metacyclic,
    table_from_presentation,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_RESOURCE_LIMIT = 3


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict
    timing_ms: float
    schema: int = 1
    version: str = __version__
    ok: bool = True

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "version": self.version,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "ok": self.ok,
            "timing_ms": round(self.timing_ms, 3),
        }

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_text(self) -> str:
        lines = [f"{self.command}  (gammaplus {self.version})"]
        for key, value in self.inputs.items():
            lines.append(f"  {key}: {value}")
        lines.append("-" * 40)
        for key, value in self.results.items():
            if isinstance(value, list):
                lines.append(f"  {key}:")
                for entry in value:
                    lines.append(f"    {entry}")
            else:
                lines.append(f"  {key}: {value}")
        lines.append(f"  ok: {self.ok}   [{self.timing_ms:.0f} ms]")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Group specs and seeds
# ---------------------------------------------------------------------------


def parse_group_spec(spec: str, max_cosets: int, order_cap: int) -> GroupTable:
    """Build a group from its textual spec.

    Accepted forms: ``cyclic:<m>``, ``abelian:<m>,<n>``,
    ``dihedral:<n>``, ``perm:<cycles;...>`` (1-based cycles, e.g.
    ``perm:(1 2 3 4 5);(1 2 3)``), ``fp:<path>``.
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"group spec {spec!r} has no ':'")
    if kind == "cyclic":
        return cyclic(int(rest))
    if kind == "abelian":
        m, _, n = rest.partition(",")
        if not _:
            raise ValueError("abelian spec needs two moduli, e.g. abelian:4,2")
        return abelian(int(m), int(n))
    if kind == "dihedral":
        return dihedral(int(rest))
    if kind == "perm":
        perms = [_parse_cycles(part) for part in rest.split(";") if part.strip()]
        degree = max((len(p) for p in perms), default=0)
        padded = [tuple(p) + tuple(range(len(p), degree)) for p in perms]
        return from_permutations(padded, cap=order_cap)
    if kind == "fp":
        return table_from_presentation(Presentation.load(rest), max_cosets)
    raise ValueError(f"unknown group spec kind {kind!r}")


def _parse_cycles(text: str) -> list[int]:
    """A permutation in cycle notation with 1-based points, returned as
    a 0-based image list."""
    text = text.strip()
    if not text.startswith("("):
        raise ValueError(f"cycles must be parenthesized: {text!r}")
    cycles = []
    for chunk in text.replace(")(", ")|(").split("|"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"malformed cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ").split()
        cycles.append([int(tok) - 1 for tok in body])
    degree = max((max(c) + 1 for c in cycles if c), default=1)
    image = list(range(degree))
    for cyc in cycles:
        for i, point in enumerate(cyc):
            image[point] = cyc[(i + 1) % len(cyc)]
    return image


def _split_pair(text: str) -> tuple[str, str]:
    """Split a --pi argument on the top-level comma."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return text[:i].strip(), text[i + 1 :].strip()
    raise ValueError(f"cannot split {text!r} into two labels")


def resolve_seed(group: GroupTable, spec: str, pi: str | None) -> Epimorphism:
    """The seed epimorphism: an explicit --pi pair of labels, or the
    canonical seed of the group family."""
    if pi is not None:
        a, b = _split_pair(pi)
        return make_epi(group, group.label_index(a), group.label_index(b))
    kind, _, rest = spec.partition(":")
    if kind == "cyclic":
        m = int(rest)
        return make_epi(group, group.label_index(f"({1 % m},0)"), group.label_index("(0,0)"))
    if kind == "abelian":
        m, _, n = rest.partition(",")
        m, n = int(m), int(n)
        return make_epi(group, group.label_index(f"({1 % m},0)"), group.label_index(f"(0,{1 % n})"))
    if kind == "dihedral":
        return make_epi(group, group.label_index("r"), group.label_index("s"))
    if kind == "fp":
        gens = [l for l in (group.labels or ()) if "*" not in l and l != "1"]
        if len(gens) < 2:
            raise ValueError("cannot infer a seed; pass --pi")
        return make_epi(group, group.label_index(gens[0]), group.label_index(gens[1]))
    raise ValueError(f"no default seed for {kind!r} groups; pass --pi")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_index(args) -> Report:
    t0 = time.perf_counter()
    group = parse_group_spec(args.group, args.max_cosets, args.max_order)
    seed = resolve_seed(group, args.group, args.pi)
    result = orbit_stabilizer(seed)
    inner = inner_index(seed)
    mats = sl2.rho_subgroup_generators(result.stabilizer_gens)
    image = slsub.build(mats, args.max_cosets)
    product_ok = result.length == inner * image.index
    return Report(
        command="index",
        inputs={"group": args.group, "pi": seed.describe(), "order": group.order},
        results={
            "orbit_length": result.length,
            "inner_index": inner,
            "rho_image_index": image.index,
            "stabilizer_generators": len(result.stabilizer_gens),
            "index_factorization_ok": product_ok,
        },
        timing_ms=(time.perf_counter() - t0) * 1000,
        ok=product_ok,
    )


def cmd_congruence(args) -> Report:
    t0 = time.perf_counter()
    group = parse_group_spec(args.group, args.max_cosets, args.max_order)
    seed = resolve_seed(group, args.group, args.pi)
    result = orbit_stabilizer(seed)
    mats = sl2.rho_subgroup_generators(result.stabilizer_gens)
    image = slsub.build(mats, args.max_cosets)
    report = slsub.is_congruence(image)
    return Report(
        command="congruence",
        inputs={"group": args.group, "pi": seed.describe(), "order": group.order},
        results={
            "orbit_length": result.length,
            "rho_image_index": image.index,
            "rho_image_generators": len(mats),
            "level": report.level,
            "is_congruence": report.is_congruence,
            "witness": None if report.witness is None else str(report.witness),
        },
        timing_ms=(time.perf_counter() - t0) * 1000,
    )


def cmd_verify(args) -> Report:
    t0 = time.perf_counter()
    name = args.name
    if name == "presentation":
        items = verify.check_presentation()
    elif name.startswith("dihedral-identities:"):
        items = verify.check_dihedral_identities(int(name.partition(":")[2]))
    elif name == "table1":
        items = verify.check_table1(args.fixtures, args.max_cosets)
    elif name == "table2":
        items = verify.check_table2(args.fixtures, args.max_cosets)
    elif name == "witness":
        items = verify.check_witness(args.fixtures, args.max_cosets)
    else:
        raise ValueError(f"unknown verification suite {name!r}")
    passed = sum(item.ok for item in items)
    inputs = {"suite": name}
    if name in ("table1", "table2", "witness"):
        used = {
            "table1": [fixtures.G128_PRESENTATION, fixtures.TABLE1_WORDS],
            "table2": [fixtures.G128_PRESENTATION, fixtures.TABLE2_WORDS],
            "witness": [fixtures.G128_PRESENTATION, fixtures.WITNESS_WORD],
        }[name]
        inputs["fixtures"] = {f: fixtures.fixture_hash(f, args.fixtures) for f in used}
    return Report(
        command="verify",
        inputs=inputs,
        results={
            "passed": passed,
            "total": len(items),
            "items": [f"{'PASS' if it.ok else 'FAIL'}  {it.name}" for it in items],
        },
        timing_ms=(time.perf_counter() - t0) * 1000,
        ok=passed == len(items),
    )


def cmd_census(args) -> Report:
    t0 = time.perf_counter()
    group = parse_group_spec(args.group, args.max_cosets, args.max_order)
    report = kernel_orbit_census(group, cap=args.max_order * args.max_order)
    rows = [
        f"orbit_length={row.orbit_length} kernel_classes={row.kernel_classes} "
        f"stabilizer_index={row.stabilizer_index} seed={row.representative}"
        for row in report.rows
    ]
    return Report(
        command="census",
        inputs={"group": args.group, "order": group.order},
        results={
            "epimorphisms": report.epimorphism_count,
            "orbits": len(report.rows),
            "kernels": report.kernel_count,
            "kernel_orbits": report.kernel_orbit_count,
            "transitive_on_kernels": report.transitive_on_kernels,
            "rows": rows,
        },
        timing_ms=(time.perf_counter() - t0) * 1000,
    )


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cmd_conjecture(args) -> Report:
    t0 = time.perf_counter()
    p, q = args.p, args.q
    if not (_is_prime(p) and _is_prime(q)):
        raise ValueError("p and q must be primes")
    if (q - 1) % p != 0:
        raise ValueError("need q = 1 mod p")
    group = metacyclic(p, q, args.max_cosets)
    seed = make_epi(group, group.label_index("a"), group.label_index("b"))
    result = orbit_stabilizer(seed)
    conjectured = q * p * (p * p - 1)
    return Report(
        command="conjecture",
        inputs={"p": p, "q": q, "group_order": group.order},
        results={
            "conjectured_index": conjectured,
            "computed_index": result.length,
            "agrees": result.length == conjectured,
        },
        timing_ms=(time.perf_counter() - t0) * 1000,
    )


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    common.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--fixtures", default=None, help="directory overriding packaged fixtures")

    parser = argparse.ArgumentParser(
        prog="gammaplus",
        description="Congruence subgroups of the special automorphism group of F2.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_index = sub.add_parser("index", parents=[common], help="orbit length and index factorization")
    p_index.add_argument("group")
    p_index.add_argument("--pi", default=None, help="seed pair of element labels, e.g. '(1,0),(0,1)'")
    p_index.set_defaults(func=cmd_index)

    p_cong = sub.add_parser("congruence", parents=[common], help="level and congruence decision of the image")
    p_cong.add_argument("group")
    p_cong.add_argument("--pi", default=None)
    p_cong.set_defaults(func=cmd_congruence)

    p_verify = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p_verify.add_argument(
        "name",
        help="presentation | dihedral-identities:<n> | table1 | table2 | witness",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_census = sub.add_parser("census", parents=[common], help="orbit/kernel census over all epimorphisms")
    p_census.add_argument("group")
    p_census.set_defaults(func=cmd_census)

    p_conj = sub.add_parser("conjecture", parents=[common], help="metacyclic index experiment")
    p_conj.add_argument("p", type=int)
    p_conj.add_argument("q", type=int)
    p_conj.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report: Report = args.func(args)
    except (EnumerationLimit, CapExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except (NotSurjective, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(report.render_json() if args.json else report.render_text())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
