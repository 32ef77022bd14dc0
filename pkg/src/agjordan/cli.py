"""Command-line front end; a thin client of the HTTP service.

Every subcommand builds a request, sends it to the service and renders
the response.  By default the service app runs in-process (no network);
pass ``--server http://host:port`` to target a running instance instead.

Exit codes: 0 success, 1 domain error (bad expression, bad file, invalid
input), 2 verification failure in ``verify-paper-examples``.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from .errors import DomainError


class _ServiceError(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _request(server: str | None, path: str, payload: dict | None) -> dict:
    async def go() -> httpx.Response:
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
                return await client.post(path, json=payload)
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://agjordan", timeout=600.0) as client:
            return await client.post(path, json=payload)

    response = asyncio.run(go())
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise _ServiceError(f"{detail}")
    return response.json()


def _vars_list(args) -> list[str] | None:
    if args.vars is None:
        return None
    names = [name.strip() for name in args.vars.split(",") if name.strip()]
    if not names:
        raise _ServiceError("--vars must list at least one variable name")
    return names


def _emit_json(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _render_int_matrix(rows: list[list[int]]) -> str:
    width = max((len(str(e)) for row in rows for e in row), default=1)
    return "\n".join(" ".join(str(e).rjust(width) for e in row) for row in rows)


def _strings_text(strings: list[dict]) -> str:
    return " ".join(f"{s['len']}_{s['deg']}" for s in strings)


def _read_matrix_file(path: str) -> list[list[int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _ServiceError(f"cannot read matrix file {path!r}: {exc}") from exc
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise _ServiceError(f"{path}:{lineno}: expected whitespace-separated integers") from exc
    if not rows:
        raise _ServiceError(f"matrix file {path!r} is empty")
    return rows


def _read_pool_file(path: str) -> list[dict]:
    """Pool file: one `generator ; linear form` pair per line, # comments."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _ServiceError(f"cannot read pool file {path!r}: {exc}") from exc
    pool = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" not in line:
            raise _ServiceError(f"{path}:{lineno}: expected 'generator ; linear-form'")
        generator, ell = (part.strip() for part in line.split(";", 1))
        if not generator or not ell:
            raise _ServiceError(f"{path}:{lineno}: expected 'generator ; linear-form'")
        pool.append({"generator": generator, "ell": ell})
    if not pool:
        raise _ServiceError(f"pool file {path!r} is empty")
    return pool


def _cmd_hilbert(args) -> int:
    data = _request(args.server, "/hilbert", {"generator": args.generator, "variables": _vars_list(args)})
    if args.json:
        _emit_json(data)
    else:
        print(",".join(str(v) for v in data["hilbert"]))
    return 0


def _pipeline(args) -> dict:
    return _request(
        args.server,
        "/pipeline",
        {"generator": args.generator, "ell": args.ell, "variables": _vars_list(args)},
    )


def _cmd_rank_matrix(args) -> int:
    data = _pipeline(args)
    if args.json:
        _emit_json(data)
    else:
        print(_render_int_matrix(data["rank_matrix"]))
    return 0


def _cmd_jordan(args) -> int:
    data = _pipeline(args)
    if args.json:
        _emit_json(data)
    else:
        print(",".join(str(v) for v in data["jordan_type"]))
    return 0


def _cmd_jdt(args) -> int:
    data = _pipeline(args)
    if args.json:
        _emit_json(data)
    else:
        print(_strings_text(data["jordan_degree_type"]))
        print("J:")
        print(_render_int_matrix(data["jdt_matrix"]))
    return 0


def _cmd_lefschetz(args) -> int:
    data = _request(
        args.server,
        "/lefschetz",
        {"generator": args.generator, "ell": args.ell, "variables": _vars_list(args)},
    )
    if args.json:
        _emit_json(data)
    else:
        print("hilbert:", ",".join(str(v) for v in data["hilbert"]))
        print(f"jordan type: {','.join(str(v) for v in data['jordan_type'])} ({data['parts']} parts)")
        print("sperner:", data["sperner"])
        print("conjugate:", ",".join(str(v) for v in data["conjugate"]))
        print("wlp witness:", "yes" if data["wlp_witness"] else "no")
        print("slp witness:", "yes" if data["slp_witness"] else "no")
    return 0


def _cmd_check(args) -> int:
    data = _request(args.server, "/rank-matrix/check", {"matrix": _read_matrix_file(args.file)})
    if args.json:
        _emit_json(data)
    elif data["passed"]:
        print("PASS")
    else:
        print("FAIL")
        for v in data["violations"]:
            print(f"  {v['rule']} at ({v['row']},{v['col']}): {v['detail']}")
    return 0


def _cmd_codim2(args) -> int:
    try:
        parts = [int(tok) for tok in args.jordan_type.split(",") if tok.strip()]
    except ValueError as exc:
        raise _ServiceError("--jordan-type expects comma-separated integers") from exc
    data = _request(args.server, "/codim2/jdt", {"jordan_type": parts, "socle": args.socle})
    if args.json:
        _emit_json(data)
    else:
        print(_strings_text(data["jordan_degree_type"]))
    return 0


def _cmd_realize(args) -> int:
    payload = {
        "matrix": _read_matrix_file(args.file),
        "variables": _vars_list(args),
        "seed": args.seed,
    }
    data = _request(args.server, "/realize", payload)
    if args.json:
        _emit_json(data)
        return 1 if data["outcome"] == "invalid_target" else 0
    if data["outcome"] == "found":
        print("found:", data["generator"])
        print(f"trials: {data['trials']}")
        return 0
    if data["outcome"] == "exhausted":
        print(f"exhausted after {data['trials']} trials (deepest layer {data['deepest_layer']})")
        return 0
    print("invalid target:")
    for v in data["check"]["violations"]:
        print(f"  {v['rule']} at ({v['row']},{v['col']}): {v['detail']}")
    return 1


def _cmd_collide(args) -> int:
    payload = {"pool": _read_pool_file(args.pool), "variables": _vars_list(args)}
    data = _request(args.server, "/collide", payload)
    if args.json:
        _emit_json(data)
        return 0
    if not data["collisions"]:
        print("no collisions")
        return 0
    for c in data["collisions"]:
        print(f"collision: entries {c['first']} and {c['second']}")
        print("  hilbert:", ",".join(str(v) for v in c["hilbert"]))
        print("  jordan type:", ",".join(str(v) for v in c["jordan_type"]))
        print("  first :", _strings_text(c["first_jdt"]))
        print("  second:", _strings_text(c["second_jdt"]))
    return 0


def _cmd_verify(args) -> int:
    data = _request(args.server, "/verify-examples", None)
    if args.json:
        _emit_json(data)
    else:
        for r in data["results"]:
            mark = "ok " if r["passed"] else "FAIL"
            line = f"[{mark}] {r['name']}"
            if r["detail"]:
                line += f"  -- {r['detail']}"
            print(line)
        print(f"{data['total'] - data['failed']}/{data['total']} assertions passed")
    return 0 if data["passed"] else 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names, e.g. X,Y,Z (default: infer from input)")
    common.add_argument("--json", action="store_true", help="print the raw JSON response")
    common.add_argument("--seed", type=int, default=0, help="random seed for search commands")
    common.add_argument("--server", help="base URL of a running service (default: run in-process)")

    parser = argparse.ArgumentParser(prog="agjordan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function of the quotient presented by F")
    p.add_argument("generator", metavar="F")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("rank-matrix", parents=[common], help="rank matrix of (F, ell)")
    p.add_argument("generator", metavar="F")
    p.add_argument("--ell", required=True, help="linear form")
    p.set_defaults(func=_cmd_rank_matrix)

    p = sub.add_parser("jordan", parents=[common], help="Jordan type of (F, ell)")
    p.add_argument("generator", metavar="F")
    p.add_argument("--ell", required=True)
    p.set_defaults(func=_cmd_jordan)

    p = sub.add_parser("jdt", parents=[common], help="Jordan degree type and string-count matrix")
    p.add_argument("generator", metavar="F")
    p.add_argument("--ell", required=True)
    p.set_defaults(func=_cmd_jdt)

    p = sub.add_parser("check-rank-matrix", parents=[common], help="structural checks on a candidate matrix file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("codim2-jdt", parents=[common], help="unique Jordan degree type from a two-variable Jordan type")
    p.add_argument("--jordan-type", required=True, help="comma-separated parts, e.g. 5,3,1")
    p.add_argument("--socle", required=True, type=int, help="socle degree")
    p.set_defaults(func=_cmd_codim2)

    p = sub.add_parser("lefschetz", parents=[common], help="weak/strong Lefschetz witnesses of (F, ell)")
    p.add_argument("generator", metavar="F")
    p.add_argument("--ell", required=True)
    p.set_defaults(func=_cmd_lefschetz)

    p = sub.add_parser("realize", parents=[common], help="search for a generator with the given rank matrix")
    p.add_argument("file", help="matrix file: whitespace-separated integer rows, one row per line")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("collide", parents=[common], help="equal Jordan type, distinct Jordan degree type pairs in a pool")
    p.add_argument("--pool", required=True, help="pool file: one 'generator ; linear-form' per line")
    p.set_defaults(func=_cmd_collide)

    p = sub.add_parser("verify-paper-examples", parents=[common], help="replay the bundled reference examples")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_ServiceError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
