"""Command-line front end: a thin client over the HTTP service.

By default requests run against an in-process instance of the FastAPI app,
so no server needs to be running; `--server URL` targets a remote one.
Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys


class _InProcessResponse:
    def __init__(self, status_code: int, body: bytes):
        self.status_code = status_code
        self.text = body.decode("utf-8")

    def json(self):
        return json.loads(self.text)


class _InProcessClient:
    """Just enough of the httpx.Client surface to drive the ASGI app."""

    def __init__(self, app):
        self.app = app

    def post(self, path: str, json_payload=None, **kw):
        payload = kw.get("json", json_payload)
        body = json.dumps(payload).encode("utf-8")
        scope = {
            "type": "http",
            "asgi": {"version": "3.0"},
            "http_version": "1.1",
            "method": "POST",
            "scheme": "http",
            "path": path,
            "raw_path": path.encode(),
            "query_string": b"",
            "root_path": "",
            "headers": [(b"host", b"hopfpar.local"),
                        (b"content-type", b"application/json"),
                        (b"content-length", str(len(body)).encode())],
            "client": ("127.0.0.1", 0),
            "server": ("hopfpar.local", 80),
        }
        received = {"sent": False}

        async def receive():
            if received["sent"]:
                return {"type": "http.disconnect"}
            received["sent"] = True
            return {"type": "http.request", "body": body, "more_body": False}

        status = {}
        chunks = []

        async def send(message):
            if message["type"] == "http.response.start":
                status["code"] = message["status"]
            elif message["type"] == "http.response.body":
                chunks.append(message.get("body", b""))

        asyncio.run(self.app(scope, receive, send))
        return _InProcessResponse(status.get("code", 500), b"".join(chunks))

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def _client(server: str | None):
    if server:
        import httpx
        return httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
    from .service import app
    return _InProcessClient(app)


def _emit(text: str, out_path: str | None, quiet: bool):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        if not quiet:
            print(out_path)
    else:
        sys.stdout.write(text)


def _group_payload(args) -> dict:
    if getattr(args, "group_file", None):
        with open(args.group_file, encoding="utf-8") as fh:
            spec = json.load(fh)
        return {"table": spec.get("table"), "labels": spec.get("labels"),
                "name": spec.get("name")}
    return {"spec": args.group}


def _post(args, path: str, payload: dict) -> int:
    with _client(args.server) as client:
        resp = client.post(path, json=payload)
    if resp.status_code == 200:
        body = resp.text
        report = json.loads(body)
        _emit(body, args.out, args.quiet)
        if report.get("command") == "verify" and not report.get("passed"):
            return 1
        against = report.get("against")
        if against is not None and not against.get("match"):
            return 1
        return 0
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    _emit(json.dumps({"schema": "hopfpar/1", "error": detail},
                     sort_keys=True, indent=2) + "\n", args.out, args.quiet)
    return 2


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hopfpar",
        description="Block decompositions of partial-representation algebras")
    parser.add_argument("--server", default=None,
                        help="URL of a running service; default runs in-process")
    parser.add_argument("--out", default=None, help="write the JSON report here")
    parser.add_argument("--quiet", action="store_true")
    # the shared flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p_kpar = sub.add_parser("kpar", help="K_par of a finite group",
                            parents=[common])
    p_kpar.add_argument("--group", default=None,
                        help="cyclic:N, klein4, s3, d4 or q8")
    p_kpar.add_argument("--group-file", default=None,
                        help="JSON file with {order, table, labels}")
    p_kpar.add_argument("--full-structure", action="store_true",
                        help="include the structure constants in the report")

    p_rank = sub.add_parser("rankone", help="rank-one pointed Hopf algebra pipeline",
                            parents=[common])
    p_rank.add_argument("--group", default="cyclic:4")
    p_rank.add_argument("--group-file", default=None)
    p_rank.add_argument("--chi", default="-1",
                        help="character value on the cyclic generator, or a "
                             "comma list over all elements")
    p_rank.add_argument("--a", default="g", help="central grouplike label")
    p_rank.add_argument("--kappa", default="0")
    p_rank.add_argument("-N", "--truncation", type=int, default=3)
    p_rank.add_argument("--field", default="auto",
                        help="rational | cyclotomic:N | auto")
    p_rank.add_argument("--against-paper", default=None,
                        choices=["nilpotent8", "nonnilpotent8"],
                        help="diff the result against an embedded reference case")
    p_rank.add_argument("--full-structure", action="store_true",
                        help="include the structure constants in the report")

    p_verify = sub.add_parser("verify", help="run the invariant suites",
                              parents=[common])
    p_verify.add_argument("--suite", action="append", default=None,
                          help="suite name or 'all' (repeatable)")
    p_verify.add_argument("--max-group-order", type=int, default=4)
    p_verify.add_argument("-N", "--truncation", type=int, default=3)
    p_verify.add_argument("--hopf-file", default=None,
                          help="run the axiom battery on this structure-constant file")

    p_serve = sub.add_parser("serve", help="run the HTTP service",
                             parents=[common])
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8472)

    args = parser.parse_args(argv)

    if args.command == "kpar":
        return _post(args, "/v1/kpar", {"group": _group_payload(args),
                                        "include_structure": args.full_structure})
    if args.command == "rankone":
        payload = {
            "group": _group_payload(args),
            "chi": args.chi,
            "a": args.a,
            "kappa": args.kappa,
            "truncation": args.truncation,
            "field": args.field,
            "against_paper": args.against_paper,
            "include_structure": args.full_structure,
        }
        return _post(args, "/v1/rankone", payload)
    if args.command == "verify":
        structure = None
        if args.hopf_file:
            with open(args.hopf_file, encoding="utf-8") as fh:
                structure = json.load(fh)
        payload = {
            "suites": args.suite or (["all"] if structure is None else []),
            "max_group_order": args.max_group_order,
            "truncation": args.truncation,
            "hopf_structure": structure,
        }
        return _post(args, "/v1/verify", payload)
    if args.command == "serve":
        import uvicorn
        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
