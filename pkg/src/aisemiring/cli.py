"""Command-line interface.

Exit codes follow one contract everywhere: 0 for success or a holding
property, 1 for a check that ran and came out false, 2 for usage or I/O
problems.  Every subcommand emits machine-readable JSON under --json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import catalog, construct, criteria, derivation
from .census import default_workers, enumerate_ai_semirings, write_census
from .core import (
    FiniteAiSemiring,
    InvalidSemiringError,
    MalformedTableError,
    canonical_form,
    direct_product,
    dual,
    find_embedding,
    find_isomorphism,
    is_subdirect_embedding,
    validate,
)
from .evaluate import BudgetExceededError, check_basis, counterexample
from .terms import SimpleIdentity, TermSyntaxError, parse_identity, parse_term

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _load_semiring_file(path: str) -> FiniteAiSemiring:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return FiniteAiSemiring.from_dict(json.load(fh))
    except FileNotFoundError:
        raise CliError(f"no such file: {path}")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise CliError(f"{path}: not a semiring JSON file ({exc})")


def resolve_ref(ref: str) -> FiniteAiSemiring:
    """Catalog name, @constructor reference, or path to a semiring JSON file."""
    if not ref.startswith("@") and (os.path.sep in ref or os.path.exists(ref)):
        return _load_semiring_file(ref)
    try:
        return catalog.resolve(ref)
    except catalog.CatalogError:
        if os.path.exists(ref):
            return _load_semiring_file(ref)
        raise CliError(f"unknown semiring reference {ref!r}")
    except (ValueError, construct.NotFlatError) as exc:
        raise CliError(str(exc))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=1))
    elif text:
        print(text)


def _table_text(S: FiniteAiSemiring) -> str:
    width = max(len(e) for e in S.elements)

    def fmt(table):
        rows = []
        for a in range(S.order):
            rows.append(" ".join(f"{S.elements[table[a][b]]:>{width}}" for b in range(S.order)))
        return "\n".join(rows)

    return (
        f"{S.name or 'semiring'} on {{{', '.join(S.elements)}}}\n"
        f"addition:\n{fmt(S.add)}\nmultiplication:\n{fmt(S.mul)}"
    )


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    if not args.table and not args.semiring:
        raise CliError("give a semiring reference or --table FILE")
    if args.table:
        with open(args.table, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        try:
            add, mul = data["add"], data["mul"]
        except (KeyError, TypeError):
            raise CliError(f"{args.table}: expected an object with add and mul tables")
    else:
        S = resolve_ref(args.semiring)
        add, mul = S.add, S.mul
    report = validate(add, mul)
    payload = {
        "valid": report.valid,
        "violations": [{"law": law, "witness": list(witness)} for law, witness in report.violations],
    }
    lines = ["valid" if report.valid else "invalid"]
    lines += [f"  {law} fails at {witness}" for law, witness in report.violations]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.valid else EXIT_FALSE


def _cmd_enumerate(args) -> int:
    result = enumerate_ai_semirings(args.order, workers=args.workers)
    chosen = result.height1 if args.height1 else result.semirings
    count = len(chosen)
    payload = {
        "order": args.order,
        "count": count,
        "total": result.count,
        "height1_count": len(result.height1),
        "elapsed_seconds": round(result.elapsed, 3),
    }
    if not args.count_only:
        payload["keys"] = [canonical_form(S).hex() for S in chosen]
    if args.out:
        index = write_census(result, args.out)
        payload["index"] = index
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print(count)
    return EXIT_OK


def _cmd_check(args) -> int:
    S = resolve_ref(args.semiring)
    if args.basis:
        identities = catalog.get(args.basis).basis
        if identities is None:
            raise CliError(f"catalog entry {args.basis!r} has no bundled basis")
    else:
        if not args.identity:
            raise CliError("give --identity (repeatable) or --basis NAME")
        identities = tuple(parse_identity(text) for text in args.identity)
    report = check_basis(S, identities)
    payload = {
        "semiring": S.name,
        "all_hold": report.all_hold,
        "results": [v.to_dict(S) for v in report.verdicts],
    }
    lines = []
    for v in report.verdicts:
        mark = "holds" if v.holds else "fails"
        extra = ""
        if v.witness is not None:
            named = {x: S.elements[e] for x, e in v.witness.items()}
            extra = f"  witness {named}"
        lines.append(f"{mark}: {v.identity}{extra}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.all_hold else EXIT_FALSE


def _cmd_iso(args) -> int:
    A, B = resolve_ref(args.first), resolve_ref(args.second)
    found = find_isomorphism(A, B)
    payload = {"found": found is not None, "morphism": None if found is None else found.to_dict()}
    _emit(args, payload, "isomorphic" if found else "not isomorphic")
    if not args.json and found:
        print(json.dumps(found.to_dict()["map"], indent=1))
    return EXIT_OK if found else EXIT_FALSE


def _cmd_embed(args) -> int:
    A, B = resolve_ref(args.first), resolve_ref(args.second)
    found = find_embedding(A, B)
    payload = {"found": found is not None, "morphism": None if found is None else found.to_dict()}
    _emit(args, payload, "embeds" if found else "no embedding")
    if not args.json and found:
        print(json.dumps(found.to_dict()["map"], indent=1))
    return EXIT_OK if found else EXIT_FALSE


def _cmd_subdirect(args) -> int:
    S = resolve_ref(args.semiring)
    A, B = resolve_ref(args.first), resolve_ref(args.second)
    found = is_subdirect_embedding(S, A, B)
    payload = {"found": found is not None, "morphism": None if found is None else found.to_dict()}
    _emit(args, payload, "subdirect embedding found" if found else "no subdirect embedding")
    if not args.json and found:
        print(json.dumps(found.to_dict()["map"], indent=1))
    return EXIT_OK if found else EXIT_FALSE


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind in ("sc", "s", "mc", "m"):
        if not args.words:
            raise CliError(f"construct {kind} needs --words")
        builder = {"sc": construct.sc, "s": construct.s, "mc": construct.mc, "m": construct.m}[kind]
        S = builder(*[w.strip() for w in args.words.split(",") if w.strip()])
    elif kind == "flat-ext":
        if args.group:
            S = catalog.resolve(f"@flatext:{args.group}")
        elif args.table:
            with open(args.table, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            try:
                G = construct.FiniteSemigroup(
                    elements=tuple(data["elements"]),
                    mul=tuple(map(tuple, data["mul"])),
                    zero=data.get("zero"),
                    identity=data.get("identity"),
                )
            except (KeyError, TypeError):
                raise CliError(f"{args.table}: expected a semigroup table with elements and mul")
            S = construct.flat_from_semigroup(G)
        else:
            raise CliError("construct flat-ext needs --group zN or --table FILE")
    elif kind in ("ne", "ie", "dual"):
        if not args.refs:
            raise CliError(f"construct {kind} needs a semiring reference")
        base = resolve_ref(args.refs[0])
        try:
            S = {"ne": construct.null_extension, "ie": construct.idempotent_extension, "dual": dual}[
                kind
            ](base)
        except construct.NotFlatError as exc:
            raise CliError(str(exc))
    elif kind == "product":
        if len(args.refs) != 2:
            raise CliError("construct product needs two semiring references")
        S = direct_product(resolve_ref(args.refs[0]), resolve_ref(args.refs[1]))
    else:
        raise CliError(f"unknown construction {kind!r}")

    payload = S.to_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
        _emit(args, payload, f"wrote {args.out}")
    else:
        print(json.dumps(payload, indent=1) if args.json else _table_text(S))
    return EXIT_OK


def _split_top_level_sum(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _parse_simple_identity(text: str) -> SimpleIdentity:
    """Read u ≈ u + q, recovering q as the last written summand of the rhs."""
    identity = parse_identity(text)
    sep = "≈" if "≈" in text else "="
    rhs_text = text.split(sep, 1)[1]
    chunks = _split_top_level_sum(rhs_text)
    q_term = parse_term(chunks[-1])
    if len(q_term.words) != 1:
        raise CliError("the final summand of the right side must be a single word")
    q = q_term.words[0]
    si = SimpleIdentity(identity.lhs, q)
    if si.as_identity().rhs != identity.rhs:
        raise CliError("identity is not of the simple form u ≈ u + q")
    return si


def _cmd_criteria(args) -> int:
    name = args.lemma.upper()
    if name not in criteria.CRITERIA:
        raise CliError(f"--lemma must be one of {', '.join(sorted(criteria.CRITERIA))}")
    try:
        si = _parse_simple_identity(args.identity)
    except TermSyntaxError as exc:
        raise CliError(str(exc))
    verdict = criteria.check(name, si)
    payload = {"lemma": name, "identity": str(si), "holds": verdict.holds, "rule": verdict.rule}
    text = f"{name}: {'holds' if verdict.holds else 'fails'} ({verdict.rule})"
    if args.oracle:
        S = catalog.get(name).semiring
        witness = counterexample(S, si.as_identity())
        oracle_holds = witness is None
        payload["oracle"] = {
            "semiring": S.name,
            "holds": oracle_holds,
            "witness": None if witness is None else {x: S.elements[e] for x, e in witness.items()},
            "agrees": oracle_holds == verdict.holds,
        }
        text += f"; oracle {'holds' if oracle_holds else 'fails'}"
        text += " (agreement)" if payload["oracle"]["agrees"] else " (DISAGREEMENT)"
    _emit(args, payload, text)
    return EXIT_OK if verdict.holds else EXIT_FALSE


def _cmd_nfb_check(args) -> int:
    S = resolve_ref(args.semiring)
    report = construct.nfb_witness(S)
    payload = {"semiring": S.name, **report.to_dict()}
    text = (
        f"noncyclic elements form an order ideal: {report.noncyclic_order_ideal}\n"
        f"S7-style subsemiring embeds: {report.s7_embedding is not None}\n"
        f"nonfinite-basis witness: {report.conclusion}"
    )
    _emit(args, payload, text)
    return EXIT_OK if report.conclusion else EXIT_FALSE


def _cmd_catalog(args) -> int:
    if args.action == "list":
        rows = catalog.entries(
            order=args.order,
            height1=True if args.height1 else None,
            status=args.status,
            flat=True if args.flat else None,
        )
        payload = [
            {
                "name": e.name,
                "order": e.semiring.order,
                "status": e.status,
                "has_basis": e.basis is not None,
            }
            for e in rows
        ]
        if args.json:
            print(json.dumps(payload, indent=1))
        else:
            for item in payload:
                basis = " basis" if item["has_basis"] else ""
                print(f"{item['name']:10} order {item['order']}  {item['status']}{basis}")
        return EXIT_OK
    if args.action == "show":
        entry = catalog.get(args.name)
        payload = {
            "name": entry.name,
            "status": entry.status,
            "semiring": entry.semiring.to_dict(),
            "basis": None if entry.basis is None else [str(i) for i in entry.basis],
            "claims": [c.label for c in entry.claims],
            "canonical_key": canonical_form(entry.semiring).hex(),
        }
        text = _table_text(entry.semiring) + f"\nstatus: {entry.status}"
        if entry.basis:
            text += "\nbasis:\n" + "\n".join(f"  {i}" for i in entry.basis)
        if entry.claims:
            text += "\nclaims:\n" + "\n".join(f"  {c.label}" for c in entry.claims)
        _emit(args, payload, text)
        return EXIT_OK
    if args.action == "verify":
        results = catalog.verify_all_claims()
        ok = all(r.ok for r in results)
        payload = {"all_ok": ok, "results": [r.to_dict() for r in results]}
        lines = [f"{'pass' if r.ok else 'FAIL'}  {r.entry}: {r.claim.label}" for r in results]
        lines.append(f"{sum(r.ok for r in results)}/{len(results)} claims pass")
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK if ok else EXIT_FALSE
    raise CliError(f"unknown catalog action {args.action!r}")


def _cmd_cert(args) -> int:
    if args.action == "list":
        names = derivation.bundled_certificate_names()
        _emit(args, {"bundled": list(names)}, "\n".join(names))
        return EXIT_OK
    if args.action == "verify":
        try:
            if os.path.exists(args.path):
                cert = derivation.load_certificate(args.path)
            else:
                cert = derivation.load_bundled_certificate(args.path)
        except FileNotFoundError:
            raise CliError(f"no certificate file or bundled name {args.path!r}")
        except derivation.MalformedCertificateError as exc:
            raise CliError(str(exc))
        try:
            verdict = derivation.verify_certificate(cert)
        except derivation.MalformedCertificateError as exc:
            raise CliError(str(exc))
        payload = {"endpoints": str(cert.endpoints), **verdict.to_dict()}
        text = "certificate valid" if verdict.valid else (
            f"certificate invalid at step {verdict.failed_step}: {verdict.reason}"
        )
        _emit(args, payload, text)
        return EXIT_OK if verdict.valid else EXIT_FALSE
    raise CliError(f"unknown cert action {args.action!r}")


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aisemiring",
        description="Workbench for finite additively idempotent semirings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")
        return p

    p = with_json(sub.add_parser("validate", help="check the ai-semiring laws"))
    p.add_argument("semiring", nargs="?", help="catalog name, @constructor, or JSON file")
    p.add_argument("--table", help="semiring JSON file with add and mul tables")
    p.set_defaults(fn=_cmd_validate)

    p = with_json(sub.add_parser("enumerate", help="census of ai-semirings up to isomorphism"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--height1", action="store_true", help="only additive height 1")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", help="directory for semiring JSON files plus an index")
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help="parallel workers (default: AISEMIRING_WORKERS or the processor count)",
    )
    p.set_defaults(fn=_cmd_enumerate)

    p = with_json(sub.add_parser("check", help="identity or basis satisfaction"))
    p.add_argument("--semiring", required=True)
    p.add_argument("--identity", action="append", help="identity text, repeatable")
    p.add_argument("--basis", help="use the bundled basis of this catalog entry")
    p.set_defaults(fn=_cmd_check)

    p = with_json(sub.add_parser("iso", help="search for an isomorphism"))
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=_cmd_iso)

    p = with_json(sub.add_parser("embed", help="search for an embedding"))
    p.add_argument("first", help="the semiring to embed")
    p.add_argument("second", help="the target")
    p.set_defaults(fn=_cmd_embed)

    p = with_json(sub.add_parser("subdirect", help="subdirect embedding into a product"))
    p.add_argument("semiring")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=_cmd_subdirect)

    p = with_json(sub.add_parser("construct", help="build a derived semiring"))
    p.add_argument("kind", choices=["sc", "s", "mc", "m", "flat-ext", "ne", "ie", "dual", "product"])
    p.add_argument("refs", nargs="*", help="semiring references for ne/ie/dual/product")
    p.add_argument("--words", help="comma-separated generator words for sc/s/mc/m")
    p.add_argument("--group", help="zN for flat-ext of a cyclic group")
    p.add_argument("--table", help="semigroup JSON file for flat-ext")
    p.add_argument("--out", help="write semiring JSON here")
    p.set_defaults(fn=_cmd_construct)

    p = with_json(sub.add_parser("criteria", help="syntactic satisfaction criteria"))
    p.add_argument("--lemma", required=True, help="L2 R2 M2 D2 N2 T2 S2 S4 S6 S10")
    p.add_argument("--identity", required=True, help="a simple identity u ≈ u + q")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force evaluator")
    p.set_defaults(fn=_cmd_criteria)

    p = with_json(sub.add_parser("nfb-check", help="nonfinite-basis witness"))
    p.add_argument("semiring")
    p.set_defaults(fn=_cmd_nfb_check)

    p = with_json(sub.add_parser("catalog", help="named semirings, bases, claims"))
    p.add_argument("action", choices=["list", "show", "verify"])
    p.add_argument("name", nargs="?", help="entry name for show")
    p.add_argument("--order", type=int)
    p.add_argument("--height1", action="store_true")
    p.add_argument("--status", choices=["finitely-based", "nonfinitely-based", "external"])
    p.add_argument("--flat", action="store_true")
    p.set_defaults(fn=_cmd_catalog)

    p = with_json(sub.add_parser("cert", help="derivation certificates"))
    p.add_argument("action", choices=["verify", "list"])
    p.add_argument("path", nargs="?", help="certificate file or bundled name")
    p.set_defaults(fn=_cmd_cert)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "enumerate" and args.workers is None:
        args.workers = default_workers()
    try:
        return args.fn(args)
    except (
        CliError,
        catalog.CatalogError,
        MalformedTableError,
        TermSyntaxError,
        derivation.MalformedCertificateError,
        InvalidSemiringError,
        BudgetExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
