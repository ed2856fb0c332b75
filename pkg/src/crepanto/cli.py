"""Command-line client.

By default every command computes in process through the same report layer
the HTTP service uses; with --server URL the command is forwarded to a
running service instead.  Exit codes: 0 success, 1 domain error, 2 usage.
"""

import argparse
import json
import sys

from . import reports
from .errors import CrepantoError

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "handler", None):
        parser.print_help()
        return USAGE_ERROR
    try:
        endpoint, payload = args.handler(args)
    except (ValueError, CrepantoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.server:
            report = _remote(args.server, endpoint, payload)
        else:
            report = _local(endpoint, payload)
    except CrepantoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    _emit(report, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", metavar="URL", default=None,
                        help="forward the command to a running service")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="as_json", action="store_true", default=True)
    out.add_argument("--plain", dest="as_json", action="store_false")

    parser = argparse.ArgumentParser(
        prog="crepanto",
        description="exact toric computations for abelian quotient singularities",
    )
    sub = parser.add_subparsers(dest="command")

    def type_command(name, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("l", type=int, help="group order")
        p.add_argument("weights", type=_weights, help="comma-separated weights")
        return p

    type_command("analyze", "classification, criterion and cohomology of a type")
    type_command("hilbert", "Hilbert basis of the positive orthant")
    type_command("criterion", "necessary existence criterion")
    type_command("cohomology", "cohomology dimensions of a crepant resolution")

    p = sub.add_parser(
        "resolve-series", help="full resolution report for the series", parents=[common]
    )
    p.add_argument("args", nargs="+", type=int, help="l r, or r with --scan")
    p.add_argument("--scan", metavar="A..B", default=None,
                   help="scan orders A..B instead of a single l")

    p = sub.add_parser(
        "factorize", help="blow-up factorization of the series resolution", parents=[common]
    )
    p.add_argument("l", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--mode", choices=("speedy", "stepwise"), default="speedy")

    p = sub.add_parser(
        "bundle", help="projectivized line-bundle sums over projective space", parents=[common]
    )
    p.add_argument("r", type=int, help="total dimension")
    p.add_argument("twists", type=_weights, help="comma-separated twists")

    p = sub.add_parser("triangulate", help="check a triangulation file", parents=[common])
    p.add_argument("--check", metavar="PATH", required=True)

    p = sub.add_parser("serve", help="run the HTTP service", parents=[common])
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    for name, handler in _HANDLERS.items():
        if name in sub.choices:
            sub.choices[name].set_defaults(handler=handler)
    return parser


def _weights(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {raw!r}") from exc


def _handle_type(endpoint):
    def handler(args):
        return endpoint, {"l": args.l, "weights": args.weights}

    return handler


def _handle_resolve_series(args):
    if args.scan:
        lo, _, hi = args.scan.partition("..")
        if not hi or len(args.args) != 1:
            raise ValueError("usage: resolve-series --scan A..B r")
        return "/resolve-series/scan", {
            "l_min": int(lo),
            "l_max": int(hi),
            "r": args.args[0],
        }
    if len(args.args) != 2:
        raise ValueError("usage: resolve-series l r")
    return "/resolve-series", {"l": args.args[0], "r": args.args[1]}


def _handle_factorize(args):
    return "/factorize", {"l": args.l, "r": args.r, "mode": args.mode}


def _handle_bundle(args):
    return "/bundle", {"r": args.r, "twists": args.twists}


def _handle_triangulate(args):
    with open(args.check) as fh:
        data = json.load(fh)
    return "/triangulate/check", data


def _handle_serve(args):
    return "serve", {"host": args.host, "port": args.port}


_HANDLERS = {
    "analyze": _handle_type("/analyze"),
    "hilbert": _handle_type("/hilbert"),
    "criterion": _handle_type("/criterion"),
    "cohomology": _handle_type("/cohomology"),
    "resolve-series": _handle_resolve_series,
    "factorize": _handle_factorize,
    "bundle": _handle_bundle,
    "triangulate": _handle_triangulate,
    "serve": _handle_serve,
}

_LOCAL = {
    "/analyze": lambda p: reports.analyze_report(p["l"], p["weights"]),
    "/hilbert": lambda p: reports.hilbert_report(p["l"], p["weights"]),
    "/criterion": lambda p: reports.criterion_report(p["l"], p["weights"]),
    "/cohomology": lambda p: reports.cohomology_report(p["l"], p["weights"]),
    "/resolve-series": lambda p: reports.resolve_series_report(p["l"], p["r"]),
    "/resolve-series/scan": lambda p: reports.series_scan_report(
        p["l_min"], p["l_max"], p["r"]
    ),
    "/factorize": lambda p: reports.factorize_report(p["l"], p["r"], p["mode"]),
    "/bundle": lambda p: reports.bundle_report(p["r"], p["twists"]),
    "/triangulate/check": reports.triangulate_check_report,
}


def _local(endpoint: str, payload: dict) -> dict:
    if endpoint == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=payload["host"], port=payload["port"])
        return {}
    return _LOCAL[endpoint](payload)


def _remote(server: str, endpoint: str, payload: dict) -> dict:
    if endpoint == "serve":
        raise ValueError("serve cannot be forwarded")
    import httpx

    url = server.rstrip("/") + endpoint
    resp = httpx.post(url, json=payload, timeout=300.0)
    if resp.status_code == 422:
        detail = resp.json().get("detail", resp.text)
        raise CrepantoError(str(detail))
    resp.raise_for_status()
    return resp.json()


def _emit(report: dict, args) -> None:
    if not report:
        return
    if args.as_json:
        print(json.dumps(report, indent=2))
        return
    print(f"# {report.get('command')} {report.get('input')}")
    for line in _plain_lines(report.get("result", {}), ""):
        print(line)


def _plain_lines(value, prefix):
    if isinstance(value, dict):
        for key, sub in value.items():
            label = f"{prefix}{key}" if not prefix else f"{prefix}.{key}"
            yield from _plain_lines(sub, label)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, sub in enumerate(value):
            yield from _plain_lines(sub, f"{prefix}[{i}]")
    else:
        yield f"{prefix}: {value}"


if __name__ == "__main__":
    sys.exit(main())
