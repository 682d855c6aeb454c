"""Command-line front end: ``qsf verify``, ``qsf show``, ``qsf cache``.

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 internal or cache error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

DEFAULT_PAIRS = ("1,0:0,1", "1,1:0,1", "1,0:1,1", "2,1:1,1", "1,1:1,2")
POLY_FUNCS = ("h1", "h2", "h3", "e2")
CHECKS = (
    "macdonald", "conj6", "five-term", "s-inverse", "generating", "w-props",
    "polynomiality", "glue", "setup2-duality", "soundness",
)
# the soundness re-run is the expensive deep check and must be asked for by name
ALL_CHECKS = tuple(c for c in CHECKS if c != "soundness")


class UsageError(Exception):
    pass


@dataclass
class Config:
    max_degree: int = 6
    series_order: int = 5
    setup: str = "both"
    cache_dir: str | None = None
    jobs: int = 1
    format: str = "text"

    def validate(self):
        if not 1 <= self.max_degree <= 10:
            raise UsageError(f"--max-deg must be in 1..10, got {self.max_degree}")
        if not 1 <= self.series_order <= self.max_degree:
            raise UsageError(f"--series-order must be in 1..max-deg, got {self.series_order}")
        if self.setup not in ("1", "2", "both"):
            raise UsageError(f"--setup must be 1, 2 or both, got {self.setup}")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.format not in ("text", "json"):
            raise UsageError("--format must be text or json")

    def setups(self):
        return (1, 2) if self.setup == "both" else (int(self.setup),)


@dataclass
class RunManifest:
    version: str
    config: dict
    checks: list = field(default_factory=list)
    status: str = "pass"

    def as_dict(self) -> dict:
        return {"version": self.version, "config": self.config, "checks": self.checks, "status": self.status}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunManifest":
        data = json.loads(text)
        return cls(data["version"], data["config"], data["checks"], data.get("status", "pass"))


# -- job execution ---------------------------------------------------------------

def _parse_pair(text: str):
    try:
        left, right = text.split(":")
        m, n = (int(x) for x in left.split(","))
        m2, n2 = (int(x) for x in right.split(","))
    except ValueError:
        raise UsageError(f"bad pair {text!r}; expected m,n:m',n'") from None
    if m * n2 - m2 * n != 1:
        raise UsageError(f"pair {text!r} has m n' - m' n = {m * n2 - m2 * n}, expected 1")
    return m, n, m2, n2


def plan_jobs(name: str, cfg: Config, pairs) -> list:
    """Expand a check name into independent (name, kwargs) jobs."""
    N, V = cfg.max_degree, cfg.series_order
    if name == "all":
        jobs = []
        for sub in ALL_CHECKS:
            jobs.extend(plan_jobs(sub, cfg, pairs))
        return jobs
    if name not in CHECKS:
        raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS + ('all',))}")
    if name == "five-term":
        return [
            ("five-term", {"pair": p, "setup": s, "N": N, "V": V})
            for p in (pairs or DEFAULT_PAIRS) for s in cfg.setups()
        ]
    if name == "polynomiality":
        return [("polynomiality", {"F": f, "N": N, "V": V}) for f in POLY_FUNCS]
    if name in ("macdonald", "conj6"):
        return [(name, {"N": N})]
    return [(name, {"N": N, "V": V})]


def run_job(job):
    """Run one job; returns (report dict, error string or None)."""
    from . import fiveterm as ft
    from .opcalc import WindowExhaustedError
    from .symfunc.core import e, h

    name, kw = job
    try:
        if name == "five-term":
            m, n, m2, n2 = _parse_pair(kw["pair"])
            rep = ft.verify_five_term(m, n, m2, n2, kw["setup"], kw["N"], kw["V"])
        elif name == "polynomiality":
            f = kw["F"]
            func = {"h": h, "e": e}[f[0]](int(f[1:]), N=kw["N"])
            rep = ft.verify_polynomiality(func, kw["N"], kw["V"], label=f)
        elif name == "macdonald":
            rep = ft.verify_macdonald(kw["N"])
        elif name == "conj6":
            rep = ft.verify_conj6_all(min(5, kw["N"] - 1), kw["N"])
        elif name == "s-inverse":
            rep = ft.verify_s_inverse_calculus(kw["N"], kw["V"])
        elif name == "generating":
            rep = ft.verify_generating_identity(kw["N"], kw["V"])
        elif name == "w-props":
            rep = ft.verify_w_props(kw["N"], kw["V"], off_max=min(4, kw["V"]), diag_max=min(3, kw["V"]))
        elif name == "glue":
            rep = ft.verify_glue_and_commutators(min(4, kw["N"]), kw["N"], kw["V"])
        elif name == "setup2-duality":
            rep = ft.verify_setup2_duality(kw["N"], kw["V"])
        elif name == "soundness":
            rep = ft.verify_truncation_soundness(kw["N"], kw["V"], min(5, kw["N"] - 1))
        else:
            raise UsageError(f"unknown check {name!r}")
    except WindowExhaustedError as exc:
        return None, f"{name}: window exhausted: {exc}"
    return rep.as_dict(), None


def _init_worker(cache_dir):
    from .macdonald import configure_cache

    configure_cache(cache_dir)


def execute(jobs, cfg: Config):
    if cfg.jobs == 1 or len(jobs) == 1:
        return [run_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=cfg.jobs, initializer=_init_worker, initargs=(cfg.cache_dir,)) as pool:
        return list(pool.map(run_job, jobs))


# -- output ------------------------------------------------------------------------

def format_text(manifest: RunManifest) -> str:
    lines = [f"qsf {manifest.version}  N={manifest.config['max_degree']} V={manifest.config['series_order']}"]
    for chk in manifest.checks:
        params = {k: v for k, v in chk["params"].items() if k != "subchecks"}
        desc = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
        win = chk["window"] or {}
        lines.append(
            f"{chk['status'].upper():4}  {chk['name']}  {desc}  "
            f"window(in<={win.get('max_input_degree')}, out<={win.get('max_output_degree')}, "
            f"exact {win.get('exact_blocks')}/{win.get('total_blocks')})  {chk['millis']} ms"
        )
        for mm in chk["mismatches"]:
            lines.append(
                f"      mismatch u^{mm['u_exp']} v^{mm['v_exp']} at {mm['partition']}: {mm['lhs']}  !=  {mm['rhs']}"
            )
    lines.append(f"overall: {manifest.status}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------------

def cmd_verify(args, cfg: Config) -> int:
    pairs = args.pairs
    if pairs:
        for p in pairs:
            _parse_pair(p)
    jobs = plan_jobs(args.check, cfg, pairs)
    results = execute(jobs, cfg)
    manifest = RunManifest(__version__, asdict(cfg))
    errors = []
    for rep, err in results:
        if err is not None:
            errors.append(err)
        else:
            manifest.checks.append(rep)
    manifest.checks.sort(key=lambda c: c["name"])
    failed = any(c["status"] != "pass" for c in manifest.checks)
    manifest.status = "error" if errors else ("fail" if failed else "pass")
    text = manifest.to_json() if cfg.format == "json" else format_text(manifest)
    _emit(text, args.out)
    for err in errors:
        print(f"error: {err}", file=sys.stderr)
    if errors:
        return EXIT_INTERNAL
    return EXIT_FAIL if failed else EXIT_PASS


def cmd_show(args, cfg: Config) -> int:
    from .macdonald import cell_stats, htilde, nabla_op
    from .qtcoeff import qt_format
    from .symfunc import Partition, SymFunc

    obj, arg = args.object, args.argument
    N = cfg.max_degree
    if obj == "toperator":
        return _show_toperator(arg, cfg, args)
    try:
        lam = Partition.parse(arg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if lam.size > N:
        raise UsageError(f"partition {lam} has size {lam.size} > max degree {N}")
    if obj == "macdonald":
        text = htilde(lam, N).to_basis(args.basis).format()
    elif obj == "nabla":
        text = nabla_op(N).apply(SymFunc({lam: 1}, "schur", N)).to_basis(args.basis).format()
    elif obj == "bstat":
        st = cell_stats(lam)
        text = qt_format(st.b_poly)
        if args.verbose:
            text += f"\nn = {st.n_stat}\nn' = {st.nprime_stat}"
    else:
        raise UsageError(f"unknown object {obj!r}")
    _emit(text + "\n", args.out)
    return EXIT_PASS


def _show_toperator(arg, cfg: Config, args) -> int:
    from .fiveterm import build_T
    from .symfunc import partitions_of

    try:
        m, n = (int(x) for x in arg.split(","))
    except ValueError:
        raise UsageError(f"toperator expects m,n, got {arg!r}") from None
    lines = []
    for setup in cfg.setups():
        try:
            ser, trace = build_T(m, n, setup, cfg.max_degree, cfg.series_order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        w = trace.window
        lines.append(
            f"T_{{{m},{n}}} setup {setup}: base {trace.base}, word [{' '.join(trace.word)}], "
            f"window in<={w.max_input_degree} out<={w.max_output_degree}"
        )
        for i, j in ser.support():
            op = ser.coefficient(i, j)
            lines.append(f"  u^{i} v^{j}:")
            for d in range(min(args.degree, cfg.max_degree) + 1):
                for lam in partitions_of(d):
                    if all(op.is_valid(d, e) for e in range(cfg.max_degree + 1)):
                        image = op.column(d, lam).to_basis(args.basis).format()
                    else:
                        image = "(not exact at this truncation)"
                    lines.append(f"    s[{','.join(map(str, lam))}] -> {image}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_cache(args, cfg: Config) -> int:
    from . import cache as qcache
    from .macdonald import solve_htilde

    root = Path(cfg.cache_dir) if cfg.cache_dir else qcache.default_cache_dir()
    if args.action == "clear":
        removed = qcache.clear(root)
        print(f"removed {removed} file(s) from {root}")
        return EXIT_PASS
    if args.action == "build":
        for d in range(cfg.max_degree + 1):
            path = qcache.cache_path(root, d)
            qcache.write_atomic(path, qcache.serialize(d, solve_htilde(d)))
            print(f"wrote {path}")
        return EXIT_PASS
    # verify: recompute every degree and diff byte for byte
    for d in range(cfg.max_degree + 1):
        path = qcache.cache_path(root, d)
        if not path.exists():
            print(f"error: {path}: missing", file=sys.stderr)
            return EXIT_INTERNAL
        expected = qcache.serialize(d, solve_htilde(d))
        diff = qcache.first_difference(path, expected)
        if diff is not None:
            line_no, line = diff
            print(f"error: {path}:{line_no}: first mismatching line: {line!r}", file=sys.stderr)
            return EXIT_INTERNAL
        print(f"ok {path}")
    return EXIT_PASS


# -- parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common(p):
    p.add_argument("--max-deg", type=int, default=6, dest="max_degree")
    p.add_argument("--series-order", type=int, default=None, dest="series_order",
                   help="series order V (default min(5, max-deg))")
    p.add_argument("--setup", default="both", choices=("1", "2", "both"))
    p.add_argument("--cache-dir", default=None, help="table cache directory (fallback: $QSF_CACHE_DIR)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qsf", description="Exact operator identities on truncated symmetric functions.")
    parser.add_argument("--version", action="version", version=f"qsf {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("check", help=f"one of: {', '.join(CHECKS)}, all")
    v.add_argument("--pairs", action="append", default=None, help="five-term pair m,n:m',n' (repeatable)")
    _common(v)

    s = sub.add_parser("show", help="print an object")
    s.add_argument("object", choices=("macdonald", "nabla", "bstat", "toperator"))
    s.add_argument("argument", help="partition like 2,1 (or m,n for toperator)")
    s.add_argument("--basis", default="schur")
    s.add_argument("--degree", type=int, default=2, help="toperator: show images up to this degree")
    s.add_argument("--verbose", action="store_true")
    _common(s)

    c = sub.add_parser("cache", help="manage the Macdonald table cache")
    c.add_argument("action", choices=("build", "verify", "clear"))
    _common(c)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    V = args.series_order if args.series_order is not None else min(5, args.max_degree)
    cfg = Config(args.max_degree, V, args.setup, args.cache_dir or os.environ.get("QSF_CACHE_DIR"),
                 args.jobs, args.format)
    try:
        cfg.validate()
        if getattr(args, "basis", None):
            from .symfunc import basis_tag

            try:
                basis_tag(args.basis)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        from .macdonald import configure_cache

        configure_cache(cfg.cache_dir)
        handler = {"verify": cmd_verify, "show": cmd_show, "cache": cmd_cache}[args.command]
        return handler(args, cfg)
    except UsageError as exc:
        print(f"qsf: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - the exit-code contract maps every internal failure to 3
        from .cache import CacheError

        kind = "cache error" if isinstance(exc, CacheError) else "internal error"
        print(f"qsf: {kind}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
