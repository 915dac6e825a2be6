"""Command-line front end.

The CLI is a thin client of the HTTP service: it reads input files, posts
JSON to the service endpoints, and renders the responses.  By default the
requests run against the in-process app (no server needed); ``--server``
points at a remote instance instead.

Exit codes: 0 for proved/supported verdicts, 1 for disproved/violated (and
for a missing bijection certificate), 2 for unknown/inconclusive, 3 for
input and validation failures.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3

_STATUS_EXIT = {
    "proved": EXIT_OK,
    "supported": EXIT_OK,
    "disproved": EXIT_NEGATIVE,
    "violated": EXIT_NEGATIVE,
    "not_supported": EXIT_NEGATIVE,
    "unknown": EXIT_UNKNOWN,
    "inconclusive": EXIT_UNKNOWN,
}


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _post(args, path: str, payload: dict) -> dict:
    async def go():
        if args.server:
            async with httpx.AsyncClient(base_url=args.server, timeout=300.0) as client:
                return await client.post(path, json=payload)
        from .service import app  # imported lazily; keeps --help fast

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://hypsolid.internal", timeout=300.0
        ) as client:
            return await client.post(path, json=payload)

    response = asyncio.run(go())
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise CliError(f"{path}: {detail}")
    return response.json()


def _emit_json(data: dict) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _budget_payload(args) -> dict:
    return {
        "max_word_len": args.budget_word_len,
        "max_subst_len": args.budget_subst_len,
        "max_nodes": args.budget_nodes,
    }


def _render_verdict(data: dict) -> None:
    print(data["status"])
    used = " ".join(f"{k}={v}" for k, v in sorted(data["budget_used"].items()))
    print(f"budget: {used}" if used else "budget: none")
    witness = data.get("witness")
    if not witness:
        return
    if witness["type"] == "derivation":
        print("trace:")
        for step in witness["steps"]:
            if step["axiom"] is None:
                print(f"  {step['word']}")
            else:
                direction = " (reversed)" if step["reversed"] else ""
                print(
                    f"  {step['word']}  via {step['axiom']}{direction} at {step['position']}"
                )
    elif witness["type"] == "counter_model":
        print(f"counter-model: order {witness['order']}")
        print("  table:")
        for row in witness["table"]:
            print("    " + " ".join(str(v) for v in row))
        assignment = " ".join(f"{k}={v}" for k, v in sorted(witness["assignment"].items()))
        print(f"  assignment: {assignment}")
    elif witness["type"] == "budget":
        print(f"note: {witness['reason']}")


def _verdict_command(args, path: str, payload: dict) -> int:
    data = _post(args, path, payload)
    if args.json:
        _emit_json(data)
    else:
        _render_verdict(data)
    return _STATUS_EXIT[data["status"]]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def cmd_apply(args) -> int:
    data = _post(
        args,
        "/apply",
        {
            "signature": _read(args.sig),
            "hypersubstitution": _read(args.hyp),
            "rho": args.rho,
            "term": args.term,
        },
    )
    if args.json:
        _emit_json(data)
    else:
        print(data["term"])
        if data.get("word"):
            print(f"word: {data['word']}")
    return EXIT_OK


def cmd_compose(args) -> int:
    data = _post(
        args,
        "/compose",
        {
            "signature": _read(args.sig),
            "first": _read(args.first),
            "second": _read(args.second),
        },
    )
    if args.json:
        _emit_json(data)
    else:
        print(data["hypersubstitution"])
    return EXIT_OK


def cmd_bij(args) -> int:
    data = _post(
        args,
        "/bij/certificate",
        {"signature": _read(args.sig), "hypersubstitution": _read(args.hyp)},
    )
    if args.json:
        _emit_json(data)
    elif data["bijective"]:
        print("bijective: yes")
        for name in sorted(data["h"]):
            perm = " ".join(str(i) for i in data["p"][name])
            print(f"  {name} -> {data['h'][name]}  perm ({perm})")
    else:
        print("bijective: no")
    return EXIT_OK if data["bijective"] else EXIT_NEGATIVE


def cmd_bij_enum(args) -> int:
    data = _post(args, "/bij/enumerate", {"signature": _read(args.sig)})
    if args.json:
        _emit_json(data)
    else:
        print(f"count: {data['count']}")
        for entry in data["entries"]:
            print(entry.replace("\n", "; "))
    return EXIT_OK


def cmd_invert(args) -> int:
    try:
        data = _post(
            args,
            "/bij/invert",
            {"signature": _read(args.sig), "hypersubstitution": _read(args.hyp)},
        )
    except CliError as exc:
        if "not bijective" in str(exc):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
        raise
    if args.json:
        _emit_json(data)
    else:
        print(data["hypersubstitution"])
    return EXIT_OK


def cmd_enum_terms(args) -> int:
    data = _post(
        args,
        "/terms/enumerate",
        {"signature": _read(args.sig), "max_depth": args.max_depth, "max_var": args.max_var},
    )
    if args.json:
        _emit_json(data)
    else:
        print(f"count: {data['count']}")
        for entry in data["entries"]:
            print(entry)
    return EXIT_OK


def cmd_enum_models(args) -> int:
    data = _post(args, "/models/enumerate", {"max_order": args.max_order})
    if args.json:
        _emit_json(data)
    else:
        for order in sorted(data["counts"], key=int):
            print(f"order {order}: {data['counts'][order]}")
        print(f"total: {data['total']}")
    return EXIT_OK


def cmd_variety_decide(args) -> int:
    return _verdict_command(
        args,
        "/variety/decide",
        {
            "presentation": _read(args.pres),
            "identity": args.identity,
            "budget": _budget_payload(args),
            "max_order": args.max_order,
        },
    )


def cmd_variety_gamma(args) -> int:
    return _verdict_command(
        args,
        "/variety/gamma-solid",
        {
            "presentation": _read(args.pres),
            "level": args.level,
            "budget": _budget_payload(args),
            "max_order": args.max_order,
        },
    )


def _render_criteria(data: dict) -> None:
    print(data["status"])
    print(f"base {data['base']['identity']}: {data['base']['verdict']['status']}")
    trig = data["trigger"]
    if trig["triggered"]:
        print(f"trigger: yes ({trig['witness']})")
    elif trig["exhausted_within_bounds"]:
        print(f"trigger: no (closure exhausted, {trig['scanned']} words scanned)")
    else:
        print(f"trigger: unsettled ({trig['scanned']} words scanned)")
    for name, verdict in sorted(data["extra"].items()):
        print(f"extra {name}: {verdict['status']}")


def cmd_variety_criteria(args, path: str) -> int:
    data = _post(
        args,
        path,
        {
            "presentation": _read(args.pres),
            "budget": _budget_payload(args),
            "max_order": args.max_order,
        },
    )
    if args.json:
        _emit_json(data)
    else:
        _render_criteria(data)
    return _STATUS_EXIT[data["status"]]


def cmd_variety_rho_solid(args) -> int:
    payload = {
        "presentation": _read(args.pres),
        "rho": args.rho,
        "hypersubstitutions": [_read(path) for path in args.hyps],
        "budget": _budget_payload(args),
        "max_order": args.max_order,
    }
    if args.image_depth is not None:
        payload["image_depth"] = args.image_depth
    data = _post(args, "/variety/rho-solid", payload)
    if args.json:
        _emit_json(data)
    else:
        print(data["status"])
        print(f"checked: {data['checked']} proved: {data['proved']}")
        witness = data.get("witness")
        if witness:
            print(f"hypersubstitution: {witness['hypersubstitution']}")
            print(f"identity: {witness['identity']}")
            print(f"bracketings: {witness['bracketings'][0]}  ~  {witness['bracketings'][1]}")
            print(f"image identity: {witness['image_identity']}")
            model = witness["verdict"]["witness"]
            if model and model["type"] == "counter_model":
                print(f"refuted in order-{model['order']} model")
        for ident in data["unknown_identities"]:
            print(f"unknown: {ident}")
    return _STATUS_EXIT[data["status"]]


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(parser) -> None:
    parser.add_argument("--json", action="store_true", help="emit raw JSON")
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")


def _add_budget(parser) -> None:
    parser.add_argument("--budget-nodes", dest="budget_nodes", type=int, default=200_000)
    parser.add_argument("--budget-word-len", dest="budget_word_len", type=int, default=8)
    parser.add_argument("--budget-subst-len", dest="budget_subst_len", type=int, default=3)
    parser.add_argument("--max-order", dest="max_order", type=int, default=4)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypsolid",
        description="Term algebra, hypersubstitution monoids, and bounded "
        "solidity checking for semigroup varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply a rho-image of a hypersubstitution to a term")
    p.add_argument("--sig", required=True, help="signature file")
    p.add_argument("--hyp", required=True, help="hypersubstitution file")
    p.add_argument("--rho", default="ext", help="ext|fa|sa|gamma:<n> (default ext)")
    p.add_argument("term", help="term text, e.g. 'f(f(x,y),z)'")
    _add_common(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("compose", help="compose two hypersubstitutions (first o second)")
    p.add_argument("--sig", required=True)
    p.add_argument("first", help="outer factor (its extension is applied to the second's images)")
    p.add_argument("second", help="inner factor")
    _add_common(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("bij", help="bijectivity certificate of a hypersubstitution")
    p.add_argument("--sig", required=True)
    p.add_argument("--hyp", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_bij)

    p = sub.add_parser("bij-enum", help="enumerate all bijective hypersubstitutions")
    p.add_argument("--sig", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_bij_enum)

    p = sub.add_parser("invert", help="invert a bijective hypersubstitution")
    p.add_argument("--sig", required=True)
    p.add_argument("--hyp", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("enum-terms", help="enumerate a bounded term universe")
    p.add_argument("--sig", required=True)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--max-var", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_enum_terms)

    p = sub.add_parser("enum-models", help="enumerate labeled finite semigroups")
    p.add_argument("--max-order", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=cmd_enum_models)

    variety = sub.add_parser("variety", help="verdicts about a presented semigroup variety")
    vsub = variety.add_subparsers(dest="subcommand", required=True)

    p = vsub.add_parser("decide", help="decide membership of an identity")
    p.add_argument("pres", help="presentation file")
    p.add_argument("identity", help="e.g. 'xy = yx'")
    _add_budget(p)
    _add_common(p)
    p.set_defaults(func=cmd_variety_decide)

    p = vsub.add_parser("gamma-solid", help="gamma(n)-solidity classification")
    p.add_argument("pres")
    p.add_argument("level", type=int, help="n >= 1")
    _add_budget(p)
    _add_common(p)
    p.set_defaults(func=cmd_variety_gamma)

    p = vsub.add_parser("sa-criteria", help="closure criteria under the sa-images of the binary bijections")
    p.add_argument("pres")
    _add_budget(p)
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_variety_criteria(a, "/variety/sa-criteria"))

    p = vsub.add_parser("fa-criteria", help="closure criteria under the fa-images of the binary bijections")
    p.add_argument("pres")
    _add_budget(p)
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_variety_criteria(a, "/variety/fa-criteria"))

    p = vsub.add_parser("rho-solid", help="solidity of the variety under a rho-map family")
    p.add_argument("pres")
    p.add_argument("rho", help="ext|fa|sa|gamma:<n>")
    p.add_argument("hyps", nargs="*", help="hypersubstitution files")
    p.add_argument(
        "--image-depth",
        type=int,
        default=None,
        help="also include every hypersubstitution with image depth <= N",
    )
    _add_budget(p)
    _add_common(p)
    p.set_defaults(func=cmd_variety_rho_solid)

    p = sub.add_parser("serve", help="run the HTTP service with uvicorn")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve, server=None, json=False)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
