"""Command-line client of the HTTP service.

Every command is one POST to the service.  By default the client
runs the app in process, so no daemon is needed; --server or the
LUNEFREE_SERVER variable points it at a live one instead.  Exit
codes: 0 on success, 1 when the service reports a domain failure
(reason goes to stderr), 2 for command-line misuse.
"""

from __future__ import annotations

import argparse
import asyncio
import base64
import os
import sys

import httpx

_SERVER_ENV = "LUNEFREE_SERVER"

# name -> argument count, kept in sync with the service table so that
# calling mistakes fail as usage errors before any request is sent
_ARITY = {
    "venn": 0,
    "g8": 0,
    "family": 2,
    "tight": 1,
    "lunefree": 1,
    "klune": 2,
    "braid": 3,
    "wheel": 1,
}


class _ServiceFailure(Exception):
    """A non-200 answer; the message is ready for stderr."""


def _parser():
    p = argparse.ArgumentParser(
        prog="lunefree",
        description="knot-shadow toolkit: analysis, construction, enumeration",
    )
    p.add_argument(
        "--server",
        default=None,
        help="base URL of a running service (default: in-process app)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="print the numbers of one map file")
    a.add_argument("file", help="UniText file, - for stdin")

    c = sub.add_parser("construct", help="write a named graph as UniText")
    c.add_argument("name", choices=sorted(_ARITY))
    c.add_argument("args", nargs="*", type=int, help="integer parameters")

    m = sub.add_parser("medial", help="medial of a map, or its inverse")
    m.add_argument("file", help="UniText file, - for stdin")
    m.add_argument(
        "--inverse",
        action="store_true",
        help="recover a plane graph whose medial is the given universe",
    )

    e = sub.add_parser("enumerate", help="all universes of one size, canonical order")
    e.add_argument("--v", type=int, required=True, metavar="N", help="vertex count")
    e.add_argument("--simple", action="store_true", help="lune-free only")
    e.add_argument("--mu", type=int, default=None, help="exact strand count")
    e.add_argument(
        "--tight", action="store_true", default=None, help="tight universes only"
    )
    e.add_argument(
        "--census", action="store_true", help="print counts for 1..N instead of maps"
    )
    e.add_argument("--threads", type=int, default=None, help="parallel workers")

    v = sub.add_parser("verify", help="rerun the headline results")
    v.add_argument("--suite", choices=("paper", "quick"), default="paper")

    x = sub.add_parser("export", help="rewrite a map file in another format")
    x.add_argument("file", help="UniText file, - for stdin")
    x.add_argument(
        "--format",
        required=True,
        choices=("uni", "planarcode", "dot", "svg"),
        dest="fmt",
    )
    return p


def _read(path) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


async def _post(client, path, payload):
    resp = await client.post(path, json=payload)
    if resp.status_code == 200:
        return resp.json()
    try:
        body = resp.json()
    except ValueError:
        raise _ServiceFailure("%s: HTTP %d" % (path, resp.status_code))
    if "detail" in body and "error" in body:
        raise _ServiceFailure("%s: %s" % (body["error"], body["detail"]))
    raise _ServiceFailure("%s: HTTP %d: %s" % (path, resp.status_code, body))


def _flag(value) -> str:
    if value is None:
        return "n/a"
    return "true" if value else "false"


def _print_analysis(data):
    print(
        "v=%d e=%d f=%d genus=%s simple=%s"
        % (
            data["v"],
            data["e"],
            data["f"],
            "n/a" if data["genus"] is None else data["genus"],
            _flag(data["simple"]),
        )
    )
    census = data["census"]
    print("census=" + ",".join("%s:%d" % (k, census[k]) for k in sorted(census, key=int)))
    if data["mu"] is not None:
        print(
            "mu=%d tight=%s lune_free=%s admissible=%s lune_count=%d"
            % (
                data["mu"],
                _flag(data["tight"]),
                _flag(data["lune_free"]),
                _flag(data["admissible"]),
                data["lune_count"],
            )
        )


async def _run_analyze(ns, client):
    _print_analysis(await _post(client, "/analyze", {"unitext": _read(ns.file)}))
    return 0


async def _run_construct(ns, client):
    data = await _post(client, "/construct", {"name": ns.name, "args": ns.args})
    sys.stdout.write(data["unitext"])
    return 0


async def _run_medial(ns, client):
    payload = {"unitext": _read(ns.file), "inverse": ns.inverse}
    data = await _post(client, "/medial", payload)
    sys.stdout.write(data["unitext"])
    return 0


async def _run_enumerate(ns, client):
    payload = {
        "v": ns.v,
        "simple": ns.simple,
        "mu": ns.mu,
        "tight": ns.tight,
        "threads": ns.threads,
    }
    if ns.census:
        data = await _post(client, "/census", payload)
        if data["rows"] is not None:
            for row in data["rows"]:
                print(
                    "v=%(v)d lune_free=%(total_lune_free)d knots=%(knot_graphs)d"
                    " tight=%(tight_lune_free)d tight_knots=%(tight_knot)d" % row
                )
        else:
            for row in data["counts"]:
                print("v=%(v)d count=%(count)d" % row)
        return 0
    data = await _post(client, "/enumerate", payload)
    sys.stdout.write("\n".join(data["unitexts"]))
    return 0


async def _run_verify(ns, client):
    data = await _post(client, "/verify", {"suite": ns.suite})
    for check in data["checks"]:
        print(
            "%s %-22s %6.1fs  %s"
            % (
                "PASS" if check["passed"] else "FAIL",
                check["name"],
                check["seconds"],
                check["detail"],
            )
        )
    failed = sum(1 for check in data["checks"] if not check["passed"])
    if failed:
        print("%d of %d checks failed" % (failed, len(data["checks"])))
        return 1
    print("all %d checks passed" % len(data["checks"]))
    return 0


async def _run_export(ns, client):
    payload = {"unitext": _read(ns.file), "format": ns.fmt}
    data = await _post(client, "/export", payload)
    if data["encoding"] == "base64":
        sys.stdout.buffer.write(base64.b64decode(data["content"]))
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(data["content"])
    return 0


_HANDLERS = {
    "analyze": _run_analyze,
    "construct": _run_construct,
    "medial": _run_medial,
    "enumerate": _run_enumerate,
    "verify": _run_verify,
    "export": _run_export,
}


async def _dispatch(ns) -> int:
    server = ns.server or os.environ.get(_SERVER_ENV)
    if server:
        transport = None
        base = server
    else:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        base = "http://lunefree.internal"
    async with httpx.AsyncClient(
        transport=transport, base_url=base, timeout=None
    ) as client:
        return await _HANDLERS[ns.command](ns, client)


def cli(argv=None) -> int:
    """Parse argv and run one command; returns the exit code."""
    code, ns = _parse(argv)
    if ns is None:
        return code
    try:
        return asyncio.run(_dispatch(ns))
    except _ServiceFailure as exc:
        print("lunefree: %s" % exc, file=sys.stderr)
        return 1
    except (OSError, httpx.HTTPError) as exc:
        print("lunefree: %s" % exc, file=sys.stderr)
        return 1


def _parse(argv):
    try:
        ns = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    if ns.command == "construct" and len(ns.args) != _ARITY[ns.name]:
        print(
            "lunefree construct: %s takes %d arguments, got %d"
            % (ns.name, _ARITY[ns.name], len(ns.args)),
            file=sys.stderr,
        )
        return 2, None
    return 0, ns


def main():
    sys.exit(cli())


if __name__ == "__main__":
    main()
