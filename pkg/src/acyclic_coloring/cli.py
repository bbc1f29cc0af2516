"""Thin-client CLI over the HTTP service.

Every subcommand talks to the service API; by default requests run against
an in-process app instance (no server needed), and --server redirects them
to a running deployment.  File handling stays on the client side.

Exit codes: 1 parse/format errors, 2 degeneracy or generator-spec errors,
3 verification failure, 4 oracle budget exceeded.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path
from typing import Optional

import click
import httpx

from .bench import rows_to_csv

EXIT_PARSE = 1
EXIT_DEGENERACY = 2
EXIT_VERIFY = 3
EXIT_EXCEEDED = 4

_CODE_EXITS = {
    "parse": EXIT_PARSE,
    "not-degenerate": EXIT_DEGENERACY,
    "bad-spec": EXIT_DEGENERACY,
    "exceeded": EXIT_EXCEEDED,
}


class ServiceClient:
    """POSTs against a remote server, or the in-process app when unset."""

    def __init__(self, server: Optional[str]):
        self.server = server

    def post(self, path: str, payload: dict) -> httpx.Response:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=600.0) as client:
                return client.post(path, json=payload)

        async def _go() -> httpx.Response:
            from .service import app

            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://aecol", timeout=600.0
            ) as client:
                return await client.post(path, json=payload)

        return asyncio.run(_go())


def _fail_from_response(resp: httpx.Response) -> None:
    try:
        detail = resp.json().get("detail", {})
    except ValueError:
        detail = {}
    code = detail.get("code", "") if isinstance(detail, dict) else ""
    message = detail.get("message", resp.text) if isinstance(detail, dict) else resp.text
    click.echo(f"error: {message}", err=True)
    sys.exit(_CODE_EXITS.get(code, EXIT_PARSE))


def _post_ok(client: ServiceClient, path: str, payload: dict) -> dict:
    resp = client.post(path, payload)
    if resp.status_code != 200:
        _fail_from_response(resp)
    return resp.json()


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _write_output(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@click.group()
@click.option("--server", envvar="AECOL_SERVER", default=None,
              help="Base URL of a running service; in-process when omitted.")
@click.pass_context
def main(ctx: click.Context, server: Optional[str]) -> None:
    """Acyclic edge coloring of degenerate graphs."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.option("--input", "input_path", required=True, type=str, help="Edge-list file.")
@click.option("--output", "output_path", default=None, type=str,
              help="Where to write the coloring JSON (stdout summary either way).")
@click.option("--algorithm", type=click.Choice(["auto", "kdeg", "deg3"]), default="auto")
@click.option("--k", type=int, default=None, help="Degeneracy budget for kdeg.")
@click.option("--no-verify", is_flag=True, help="Skip output verification.")
@click.option("--json", "as_json", is_flag=True, help="Print the full JSON response.")
@click.pass_obj
def color(client: ServiceClient, input_path: str, output_path: Optional[str],
          algorithm: str, k: Optional[int], no_verify: bool, as_json: bool) -> None:
    """Color a graph and print a one-line summary."""
    body = _post_ok(client, "/color", {
        "edge_list": _read_text(input_path),
        "algorithm": algorithm,
        "k": k,
        "verify": not no_verify,
    })
    if output_path:
        Path(output_path).write_text(_dump_json(body["coloring"]), encoding="utf-8")
    s = body["summary"]
    if as_json:
        click.echo(_dump_json(body), nl=False)
    else:
        verified = {True: "yes", False: "NO", None: "skipped"}[s["verified"]]
        click.echo(
            f"n={s['n']} m={s['m']} max_degree={s['max_degree']} "
            f"degeneracy={s['degeneracy']} algorithm={s['algorithm']} "
            f"palette={s['palette']} used={s['colors_used']} verified={verified}"
        )
    if s["verified"] is False:
        sys.exit(EXIT_VERIFY)


@main.command()
@click.option("--input", "input_path", required=True, type=str, help="Coloring JSON file.")
@click.option("--bound", type=int, default=None, help="Color-count bound (default: palette).")
@click.option("--json", "as_json", is_flag=True, help="Print the full JSON report.")
@click.pass_obj
def verify(client: ServiceClient, input_path: str, bound: Optional[int], as_json: bool) -> None:
    """Verify a coloring file; exit 3 if it fails."""
    try:
        coloring = json.loads(_read_text(input_path))
    except json.JSONDecodeError as exc:
        click.echo(f"error: bad JSON in {input_path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    body = _post_ok(client, "/verify", {"coloring": coloring, "bound": bound})
    if as_json:
        click.echo(_dump_json(body), nl=False)
    else:
        click.echo(
            f"total={body['total']} proper={body['proper']} acyclic={body['acyclic']} "
            f"used={body['colors_used']} bound={body['bound']} ok={body['ok']}"
        )
        if body["cycle_vertices"]:
            click.echo(
                f"bichromatic cycle on colors {tuple(body['cycle_colors'])}: "
                f"{'-'.join(map(str, body['cycle_vertices']))}"
            )
    if not body["ok"]:
        sys.exit(EXIT_VERIFY)


@main.command()
@click.option("--input", "input_path", required=True, type=str, help="Edge-list file.")
@click.option("--max-colors", type=int, default=None,
              help="Color budget (default: max_degree + 5).")
@click.option("--output", "output_path", default=None, type=str)
@click.pass_obj
def oracle(client: ServiceClient, input_path: str, max_colors: Optional[int],
           output_path: Optional[str]) -> None:
    """Exact acyclic chromatic index (exponential; small graphs only)."""
    body = _post_ok(client, "/oracle", {
        "edge_list": _read_text(input_path),
        "max_colors": max_colors,
    })
    _write_output(_dump_json(body), output_path)


@main.command()
@click.option("--family", type=str, default="random-kdeg")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=1)
@click.option("--seed", type=int, default=0)
@click.option("--output", "output_path", default=None, type=str)
@click.pass_obj
def generate(client: ServiceClient, family: str, n: int, k: int, seed: int,
             output_path: Optional[str]) -> None:
    """Generate a graph and write it in edge-list format."""
    body = _post_ok(client, "/generate", {"family": family, "n": n, "k": k, "seed": seed})
    _write_output(body["edge_list"], output_path)


@main.command()
@click.option("--seed", type=int, default=0)
@click.option("--max-n", type=int, default=24)
@click.option("--oracle-max-n", type=int, default=7)
@click.option("--output", "output_path", default=None, type=str)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def bench(client: ServiceClient, seed: int, max_n: int, oracle_max_n: int,
          output_path: Optional[str], as_json: bool) -> None:
    """Color a seeded corpus and emit CSV rows (oracle column when n is small)."""
    body = _post_ok(client, "/bench", {
        "seed": seed, "max_n": max_n, "oracle_max_n": oracle_max_n,
    })
    if as_json:
        _write_output(_dump_json(body), output_path)
    else:
        _write_output(rows_to_csv(body["rows"]), output_path)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("acyclic_coloring.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
