"""Command-line front end: ``pdcrystal <command> ...``.

Exit codes: 0 success, 1 bad usage or input, 2 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .crystal import crystal_graph
from .keylab import TRUNCATIONS, decompose_schubert
from .perm import Permutation, reduced_expression, word_to_text
from .pipedream import PipeDream, enumerate_rp, enumerate_rp_bruteforce, is_reduced, schubert_pipedreams, weight
from .poly import schubert_divdiff
from .rfc import RFC, enumerate_rfc, parse_rfc, phi, phi_inverse, schubert_compatible, schubert_rfc
from .verify import BRUTEFORCE_MAX_N, VerifyConfig, sweep

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

SCHUBERT_METHODS = {
    "pipedreams": schubert_pipedreams,
    "compatible": schubert_compatible,
    "rfc": schubert_rfc,
    "divdiff": schubert_divdiff,
}

FORMATS = {
    "schubert": ("text", "json"),
    "pipedreams": ("text", "json"),
    "crystal": ("dot", "json"),
    "decompose": ("text", "json"),
    "rfc": ("text", "json"),
    "phi": ("text", "json"),
    "verify": ("text", "json"),
}


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    window: tuple[int, ...] | None = None
    fmt: str = "text"
    method: str = "pipedreams"
    n: int | None = None
    out: str | None = None
    check_all: bool = False
    jobs: int = 1
    truncation: str = "d_tilde"
    obj: str | None = None

    def __post_init__(self):
        allowed = FORMATS[self.command]
        if self.fmt is None:
            self.fmt = allowed[0]
        if self.fmt not in allowed:
            raise InputError(f"--format {self.fmt} is not available for {self.command}; choose from {allowed}")

    @property
    def permutation(self) -> Permutation:
        return Permutation(self.window)


def _perm(text: str) -> tuple[int, ...]:
    try:
        return Permutation.parse(text).window
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", default=None, help="output format (per command)")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--check-all", action="store_true", help="cross-check against independent methods")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (verify)")

    p = argparse.ArgumentParser(prog="pdcrystal", description="Crystals on reduced pipe dreams.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of w")
    s.add_argument("perm", type=_perm)
    s.add_argument("--method", choices=sorted(SCHUBERT_METHODS), default="pipedreams")

    s = sub.add_parser("pipedreams", parents=[common], help="list RP(w)")
    s.add_argument("perm", type=_perm)

    s = sub.add_parser("crystal", parents=[common], help="crystal graph on RP(w)")
    s.add_argument("perm", type=_perm)

    s = sub.add_parser("decompose", parents=[common], help="key expansion via highest weight pipe dreams")
    s.add_argument("perm", type=_perm)
    s.add_argument("--truncation", choices=TRUNCATIONS, default="d_tilde")

    s = sub.add_parser("rfc", parents=[common], help="list RFC(w)")
    s.add_argument("perm", type=_perm)

    s = sub.add_parser("phi", parents=[common], help="map a pipe dream to its factorization or back")
    s.add_argument("obj", help="cross list like '[[1,1],[1,4]]' or factorization like '( )( 4 )( 3 )( 1 4 )'")
    s.add_argument("--n", type=int, default=None, help="size of the grid (default: smallest that fits)")

    s = sub.add_parser("verify", parents=[common], help="check all invariants on every w in S_n")
    s.add_argument("n", type=int)
    s.add_argument("--truncation", choices=TRUNCATIONS, default="d_tilde")
    return p


# commands return (exit code, text)


def cmd_schubert(cfg: RunConfig):
    w = cfg.permutation
    poly = SCHUBERT_METHODS[cfg.method](w)
    code, status = EXIT_OK, None
    if cfg.check_all:
        polys = {m: f(w) for m, f in SCHUBERT_METHODS.items()}
        agree = len(set(polys.values())) == 1
        status = "OK: 4 methods agree" if agree else "MISMATCH: " + ", ".join(
            f"{m}={p}" for m, p in polys.items()
        )
        code = EXIT_OK if agree else EXIT_VERIFY
    if cfg.fmt == "json":
        doc = {"permutation": list(w.window), "method": cfg.method, "polynomial": poly.to_json(), "text": str(poly)}
        if status is not None:
            doc["check_all"] = code == EXIT_OK
        return code, json.dumps(doc, indent=1)
    return code, str(poly) if status is None else f"{poly}\n{status}"


def cmd_pipedreams(cfg: RunConfig):
    w = cfg.permutation
    rp = sorted(enumerate_rp(w))
    code, status = EXIT_OK, None
    if cfg.check_all:
        if w.n > BRUTEFORCE_MAX_N:
            raise InputError(f"--check-all for pipedreams needs n <= {BRUTEFORCE_MAX_N}")
        agree = enumerate_rp_bruteforce(w) == frozenset(rp)
        status = f"OK: {len(rp)} pipe dreams, subset search agrees" if agree else "MISMATCH with subset search"
        code = EXIT_OK if agree else EXIT_VERIFY
    if cfg.fmt == "json":
        doc = {"permutation": list(w.window), "count": len(rp),
               "pipedreams": [dict(D.to_json(), weight=list(weight(D))) for D in rp]}
        return code, json.dumps(doc, indent=1)
    blocks = [f"{D.key_text()} wt={''.join(map(str, weight(D)))}\n{D.ascii()}" for D in rp]
    text = f"|RP({w})| = {len(rp)}\n\n" + "\n\n".join(blocks)
    return code, text if status is None else f"{text}\n{status}"


def cmd_crystal(cfg: RunConfig):
    g = crystal_graph(cfg.permutation)
    return EXIT_OK, g.to_dot().rstrip("\n") if cfg.fmt == "dot" else g.to_json_text()


def cmd_decompose(cfg: RunConfig):
    w = cfg.permutation
    report = decompose_schubert(w, check=False, crystal_oracle=cfg.check_all, truncation=cfg.truncation)
    code = EXIT_OK if report.verified else EXIT_VERIFY
    if cfg.fmt == "json":
        return code, json.dumps(dict(report.to_json(), truncation=cfg.truncation), indent=1)
    lines = [f"S_{w} = {report.schubert}", f"{len(report.components)} components (truncation: {cfg.truncation})"]
    for c in report.components:
        lines.append(f"  {c.summary()}")
        lines.append(f"    highest weight crosses {c.highest.key_text()}")
        failed = [k for k, v in c.checks.items() if not v]
        if failed:
            lines.append(f"    failed checks: {', '.join(failed)}")
    lines.append("identity holds" if report.schubert == report.key_sum else "identity FAILS")
    return code, "\n".join(lines)


def cmd_rfc(cfg: RunConfig):
    w = cfg.permutation
    rfcs = sorted(enumerate_rfc(w), key=lambda r: (r.reading_word(), r.blocks))
    if cfg.fmt == "json":
        doc = {"permutation": list(w.window), "count": len(rfcs),
               "factorizations": [dict(r.to_json(), weight=list(r.weight()), text=str(r)) for r in rfcs]}
        return EXIT_OK, json.dumps(doc, indent=1)
    lines = [f"|RFC({w})| = {len(rfcs)}"]
    lines += [f"{r}  wt={''.join(map(str, r.weight()))}" for r in rfcs]
    return EXIT_OK, "\n".join(lines)


def _parse_phi_input(text: str, n: int | None):
    text = text.strip()
    if text.startswith("["):
        try:
            cells = [tuple(c) for c in json.loads(text)]
        except (json.JSONDecodeError, TypeError) as exc:
            raise InputError(f"cannot parse cross list {text!r}") from exc
        if any(len(c) != 2 for c in cells):
            raise InputError("crosses must be [row, column] pairs")
        if n is None:
            n = max((i + j for i, j in cells), default=1)
        try:
            return PipeDream(n, frozenset(cells))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if text.startswith("("):
        try:
            r = parse_rfc(text, n)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if not r.is_valid():
            raise InputError(f"{r} is not a reduced factorization with cutoff")
        return r
    raise InputError(f"expected a cross list '[[i,j],...]' or a factorization '(...)(...)', got {text!r}")


def cmd_phi(cfg: RunConfig):
    obj = _parse_phi_input(cfg.obj, cfg.n)
    if isinstance(obj, PipeDream):
        if not is_reduced(obj):
            raise InputError(f"pipe dream {obj.key_text()} is not reduced")
        D, r = obj, phi(obj)
    else:
        r, D = obj, phi_inverse(obj)
    if phi_inverse(r) != D or phi(D) != r:
        return EXIT_VERIFY, "round trip failed"
    w = D.permutation()
    if cfg.fmt == "json":
        doc = {"permutation": list(w.window), "pipedream": D.to_json(), "rfc": dict(r.to_json(), text=str(r)),
               "weight": list(weight(D))}
        return EXIT_OK, json.dumps(doc, indent=1)
    return EXIT_OK, "\n".join([
        f"w = {w}",
        f"pipe dream {D.key_text()}",
        D.ascii(),
        f"factorization {r}  (in RFC({w.inverse()}))",
        f"weight {''.join(map(str, weight(D)))}",
    ])


def cmd_verify(cfg: RunConfig):
    try:
        vc = VerifyConfig(cfg.n, jobs=cfg.jobs, truncation=cfg.truncation)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    summary = sweep(vc)
    code = EXIT_OK if summary.ok else EXIT_VERIFY
    if not summary.ok:
        dump = f"{cfg.out}.failures.json" if cfg.out else f"verify-n{cfg.n}-failures.json"
        with open(dump, "w") as fh:
            json.dump(summary.failures, fh, indent=1)
    if cfg.fmt == "json":
        return code, json.dumps(summary.to_json(), indent=1)
    lines = summary.lines()
    for f in summary.failures[:20]:
        lines.append(f"  {Permutation(tuple(f['permutation']))} {f['property']}: {f['detail']}")
    if not summary.ok:
        lines.append(f"{len(summary.failures)} failures written to {dump}")
    return code, "\n".join(lines)


COMMANDS = {
    "schubert": cmd_schubert,
    "pipedreams": cmd_pipedreams,
    "crystal": cmd_crystal,
    "decompose": cmd_decompose,
    "rfc": cmd_rfc,
    "phi": cmd_phi,
    "verify": cmd_verify,
}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        window=getattr(ns, "perm", None),
        fmt=ns.fmt,
        method=getattr(ns, "method", "pipedreams"),
        n=getattr(ns, "n", None),
        out=ns.out,
        check_all=ns.check_all,
        jobs=ns.jobs,
        truncation=getattr(ns, "truncation", "d_tilde"),
        obj=getattr(ns, "obj", None),
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = config_from_args(ns)
        code, text = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
