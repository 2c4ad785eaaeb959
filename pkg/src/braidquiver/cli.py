"""Command-line front door.

Subcommands mirror the service endpoints one-to-one and share their
implementation, so ``--format json`` output is byte-identical to the
corresponding HTTP response body. Exit codes: 0 success, 1 verification
failure, 2 malformed input or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops, verify
from .errors import BraidQuiverError, ParseError
from .words import format_word


def _json_arg(text: str) -> dict:
    try:
        value = json.loads(text)
    except ValueError as exc:
        raise ParseError(f"bad JSON argument: {exc}") from exc
    if not isinstance(value, dict):
        raise ParseError("JSON argument must be an object")
    return value


def _print(payload: dict, fmt: str, text_renderer) -> None:
    if fmt == "json":
        print(ops.encode(payload))
    else:
        print(text_renderer(payload))


def _text_quiver(q: dict) -> str:
    arrows = " ".join(f"{s}->{t}" for s, t in q["arrows"])
    return f"vertices: {' '.join(map(str, q['vertices']))}\narrows: {arrows or '(none)'}"


def _text_mutate(payload: dict) -> str:
    return _text_quiver(payload["quiver"])


def _text_class(payload: dict) -> str:
    lines = [f"count: {payload['count']}"]
    for member in payload["members"]:
        path = " ".join(map(str, member["path"])) or "(seed)"
        arrows = " ".join(f"{s}->{t}" for s, t in member["quiver"]["arrows"])
        lines.append(f"  path [{path}]  arrows: {arrows or '(none)'}")
    return "\n".join(lines)


def _text_presentation(payload: dict) -> str:
    lines = [f"generators: {' '.join(map(str, payload['generators']))}"]
    for relator in payload["relators"]:
        lines.append(f"  {relator['kind']}: {format_word(relator['word'])}")
    return "\n".join(lines)


def _text_phi(payload: dict) -> str:
    lines = [
        f"  s{i} -> {format_word(w)}" for i, w in sorted(
            payload["images"].items(), key=lambda kv: int(kv[0])
        )
    ]
    return "images:\n" + "\n".join(lines)


def _text_wordeq(payload: dict) -> str:
    return f"equal: {str(payload['equal']).lower()}"


def _text_nf(payload: dict) -> str:
    words = payload["factor_words"]
    body = " | ".join(words) if words else "(empty)"
    return f"delta power: {payload['delta_power']}\nfactors: {body}"


def _text_triangulation(payload: dict) -> str:
    tri = payload["triangulation"]
    arcs = ", ".join(json.dumps(a, separators=(",", ":")) for a in tri["arcs"])
    return f"type: {tri['type']}\narcs: {arcs}"


def _text_surface_quiver(payload: dict) -> str:
    return _text_quiver(payload["quiver"])


def _text_enumeration(payload: dict) -> str:
    return f"count: {payload['count']}"


def _text_qp(payload: dict) -> str:
    qp = payload["qp"]
    arrows = " ".join(f"{n}:{s}->{t}" for n, s, t in qp["arrows"])
    terms = "; ".join(
        f"{t['coeff']} * {''.join(a[0] for a in t['cycle'])}"
        for t in qp["potential"]["terms"]
    )
    return f"arrows: {arrows or '(none)'}\npotential: {terms or '0'}"


def _text_qp_check(payload: dict) -> str:
    return f"canonical: {str(payload['canonical']).lower()} ({payload['message']})"


def _text_k0(payload: dict) -> str:
    return (
        f"relators checked: {payload['relators_checked']}\n"
        f"failures: {len(payload['failures'])}"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bqm",
        description="Braid groups from mutation-Dynkin quivers: presentations, "
        "Garside word problem, surfaces, potentials, K0 twists.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("mutate", help="mutate a quiver at a vertex")
    p.add_argument("--quiver", required=True)
    p.add_argument("--vertex", required=True, type=int)
    add_format(p)

    p = sub.add_parser("class", help="mutation class up to isomorphism")
    p.add_argument("--quiver", required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--workers", type=int, default=1)
    add_format(p)

    p = sub.add_parser("present", help="presentation attached to a quiver")
    p.add_argument("--quiver", required=True)
    p.add_argument("--coxeter", action="store_true")
    add_format(p)

    p = sub.add_parser("phi", help="generator map into the mutated quiver's group")
    p.add_argument("--quiver", required=True)
    p.add_argument("--vertex", required=True, type=int)
    p.add_argument("--inverse", action="store_true")
    add_format(p)

    p = sub.add_parser("wordeq", help="decide word equality in the braid group")
    p.add_argument("--type")
    p.add_argument("--quiver")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    add_format(p)

    p = sub.add_parser("nf", help="Garside normal form of a word")
    p.add_argument("--type", required=True)
    p.add_argument("--word", required=True)
    add_format(p)

    surf = sub.add_parser("surface", help="triangulation operations").add_subparsers(
        dest="surface_command", required=True
    )
    p = surf.add_parser("flip", help="flip an arc")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--arc", required=True)
    add_format(p)
    p = surf.add_parser("quiver", help="quiver of a triangulation")
    p.add_argument("--triangulation", required=True)
    add_format(p)
    p = surf.add_parser("initial", help="initial triangulation of a type")
    p.add_argument("--type", required=True)
    add_format(p)
    p = surf.add_parser("enumerate", help="all triangulations under flips")
    p.add_argument("--type", required=True)
    add_format(p)

    qp = sub.add_parser("qp", help="quiver-with-potential operations").add_subparsers(
        dest="qp_command", required=True
    )
    p = qp.add_parser("mutate", help="premutate and reduce")
    p.add_argument("--qp", required=True)
    p.add_argument("--vertex", required=True, type=int)
    add_format(p)
    p = qp.add_parser("check", help="canonical-form report")
    p.add_argument("--qp", required=True)
    add_format(p)

    k0 = sub.add_parser("k0", help="K0 transvection checks").add_subparsers(
        dest="k0_command", required=True
    )
    p = k0.add_parser("verify", help="relators act as identity matrices")
    p.add_argument("--quiver", required=True)
    add_format(p)

    ver = sub.add_parser("verify", help="verification sweeps").add_subparsers(
        dest="verify_command", required=True
    )
    p = ver.add_parser("all", help="run the acceptance sweep")
    p.add_argument("--max-rank", type=int, default=None)
    add_format(p)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "mutate":
            payload = ops.op_mutate({"quiver": _json_arg(args.quiver), "vertex": args.vertex})
            _print(payload, args.format, _text_mutate)
        elif args.command == "class":
            body = {"quiver": _json_arg(args.quiver), "workers": args.workers}
            if args.budget is not None:
                body["budget"] = args.budget
            _print(ops.op_class(body), args.format, _text_class)
        elif args.command == "present":
            body = {"quiver": _json_arg(args.quiver), "coxeter": args.coxeter}
            _print(ops.op_presentation(body), args.format, _text_presentation)
        elif args.command == "phi":
            body = {
                "quiver": _json_arg(args.quiver),
                "vertex": args.vertex,
                "inverse": args.inverse,
            }
            _print(ops.op_phi(body), args.format, _text_phi)
        elif args.command == "wordeq":
            body = {"w1": args.w1, "w2": args.w2}
            if args.quiver:
                body["quiver"] = _json_arg(args.quiver)
            if args.type:
                body["type"] = args.type
            _print(ops.op_wordeq(body), args.format, _text_wordeq)
        elif args.command == "nf":
            payload = ops.op_normal_form({"type": args.type, "word": args.word})
            _print(payload, args.format, _text_nf)
        elif args.command == "surface":
            if args.surface_command == "flip":
                body = {
                    "triangulation": _json_arg(args.triangulation),
                    "arc": _json_arg(args.arc),
                }
                _print(ops.op_surface_flip(body), args.format, _text_triangulation)
            elif args.surface_command == "quiver":
                body = {"triangulation": _json_arg(args.triangulation)}
                _print(ops.op_surface_quiver(body), args.format, _text_surface_quiver)
            elif args.surface_command == "initial":
                _print(
                    ops.op_surface_initial({"type": args.type}),
                    args.format,
                    _text_triangulation,
                )
            else:
                _print(
                    ops.op_surface_enumerate({"type": args.type}),
                    args.format,
                    _text_enumeration,
                )
        elif args.command == "qp":
            if args.qp_command == "mutate":
                body = {"qp": _json_arg(args.qp), "vertex": args.vertex}
                _print(ops.op_qp_mutate(body), args.format, _text_qp)
            else:
                _print(ops.op_qp_check({"qp": _json_arg(args.qp)}), args.format, _text_qp_check)
        elif args.command == "k0":
            payload = ops.op_k0_verify({"quiver": _json_arg(args.quiver)})
            _print(payload, args.format, _text_k0)
            if payload["failures"]:
                return 1
        elif args.command == "verify":
            results = verify.run_all(args.max_rank)
            if args.format == "json":
                print(
                    ops.encode(
                        {
                            "results": [
                                {
                                    "name": r.name,
                                    "ok": r.ok,
                                    "detail": r.detail,
                                    "seconds": round(r.seconds, 2),
                                }
                                for r in results
                            ]
                        }
                    )
                )
            else:
                for r in results:
                    print(r.line())
            if not all(r.ok for r in results):
                return 1
        elif args.command == "serve":
            from .service import serve

            server = serve(args.port, args.host)
            actual = server.server_address[1]
            print(f"serving on http://{args.host}:{actual}", file=sys.stderr, flush=True)
            try:
                server.serve_forever()
            except KeyboardInterrupt:
                pass
            finally:
                server.server_close()
        return 0
    except BraidQuiverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
