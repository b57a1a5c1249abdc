"""Command-line front end: point queries, verification suites and a figure report."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import __version__
from .partitions import Partition, PartitionError, X_partitions_of, collapse, dominates, partitions_of
from .root_systems import CartanType, CoverParams, RootSystemError, all_levi_subsets

FORMAT_ENV = "COVDUAL_FORMAT"
DEFAULTS = {"format": "json", "jobs": "1", "max_rank": "6", "max_n": "7"}

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def emit(rows, fmt: str, out=None) -> None:
    """Print a dict or a list of dicts as json, csv or a markdown table."""
    out = out or sys.stdout
    if isinstance(rows, dict):
        rows = [rows]
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
        return
    keys = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: _cell(row[k]) for k in keys})
        out.write(buf.getvalue())
        return
    if fmt == "md":
        out.write("| " + " | ".join(keys) + " |\n")
        out.write("|" + "---|" * len(keys) + "\n")
        for row in rows:
            out.write("| " + " | ".join(_cell(row[k]) for k in keys) + " |\n")
        return
    raise UsageError(f"unknown format {fmt!r}")


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return str(v)


# ---------------------------------------------------------------------------
# point queries


def _cover(args) -> CoverParams:
    if args.family == "G2" and args.rank not in (None, 2):
        raise UsageError("G2 has rank 2")
    return CoverParams.of(args.family, args.rank if args.family != "G2" else 2, args.n, args.nk)


def cmd_dbv(args) -> int:
    from .duality import d_bv

    c = _cover(args)
    if c.family == "G2":
        from .g2 import g2_dbv

        result = str(g2_dbv(c.n_kappa, args.orbit))
    else:
        result = str(d_bv(c, Partition.parse(args.orbit), lenient=args.lenient))
    return _point(args, {"cover": str(c), "orbit": args.orbit, "d_bv": result}, result)


def cmd_dcom(args) -> int:
    from .duality import d_com

    result = str(d_com(Partition.parse(args.orbit), args.z))
    return _point(args, {"orbit": args.orbit, "z": args.z, "d_com": result}, result)


def cmd_sat(args) -> int:
    from .duality import saturate

    comps = []
    for tok in args.components:
        fam, _, part = tok.partition(":")
        if not part:
            raise UsageError(f"component {tok!r} must look like FAMILY:PARTITION")
        comps.append((fam, Partition.parse(part)))
    result = str(saturate(comps, args.ambient, args.size))
    return _point(args, {"ambient": args.ambient, "components": args.components, "saturation": result}, result)


def cmd_capd(args) -> int:
    from .truncated_induction import capD

    c = _cover(args)
    if c.family == "G2":
        from .g2 import g2_capD

        result = str(g2_capD(c.n_kappa, args.orbit))
    else:
        result = str(capD(c, Partition.parse(args.orbit), genuine_only=args.genuine_only))
    return _point(args, {"cover": str(c), "orbit": args.orbit, "capD": result}, result)


def cmd_ctheta(args) -> int:
    from .characters import c_theta

    rep = c_theta(_cover(args))
    emit(rep.as_dict(), args.format)
    return EXIT_OK


def cmd_sommers(args) -> int:
    from .characters import sommers_value

    value = sommers_value(args.rank, args.J, args.n)
    return _point(args, {"rank": args.rank, "J": args.J, "n": args.n, "value": str(value)}, str(value))


def cmd_g2(args) -> int:
    from .g2 import g2_capD, g2_vertex_table, ORBITS

    if args.g2_command == "capd":
        result = str(g2_capD(args.nk, args.orbit, vertex=args.vertex))
        return _point(args, {"n_kappa": args.nk, "orbit": args.orbit, "capD": result}, result)
    rows = []
    for vertex, row in g2_vertex_table(args.nk).items():
        for o in ORBITS:
            rows.append({"n_kappa": args.nk, "vertex": vertex, "orbit": o, "value": row[o] or "-"})
    emit(rows, args.format)
    return EXIT_OK


def _point(args, record: dict, plain: str) -> int:
    if args.plain:
        print(plain)
    else:
        emit(record, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


@dataclass
class VerificationReport:
    suite: str
    ranges: dict
    cases_checked: int = 0
    violations: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations and self.cases_checked > 0

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ranges": self.ranges,
            "cases_checked": self.cases_checked,
            "violations": self.violations,
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
        }


def _suite_collapse(rep, max_rank, max_n, family, jobs):
    for total in range(1, 2 * max_rank + 3):
        for fam in ("B", "C", "D"):
            if (fam == "B") != (total % 2 == 1):
                continue
            good = X_partitions_of(total, fam)
            for p in partitions_of(total):
                below = [q for q in good if dominates(p, q)]
                best = [q for q in below if all(dominates(q, x) for x in below)]
                rep.cases_checked += 1
                if len(best) != 1 or collapse(p, fam) != best[0]:
                    rep.violations.append({"family": fam, "p": str(p)})


def _suite_dcom(rep, max_rank, max_n, family, jobs):
    from .duality import brute_force_dcom, d_com

    for total in range(1, 2 * max_rank + 1):
        for z in range(1, max_n + 1):
            for p in partitions_of(total):
                rep.cases_checked += 1
                if d_com(p, z) != brute_force_dcom(p, z):
                    rep.violations.append({"p": str(p), "z": z})


def _suite_thm_main(families):
    def run(rep, max_rank, max_n, family, jobs):
        from .duality import d_bv, dual_size
        from .root_systems import dual_group_family
        from .truncated_induction import capD

        fams = [family] if family else families
        for fam in fams:
            for r in range(2 if fam == "D" else 1, max_rank + 1):
                for nk in range(1, max_n + 1):
                    c = CoverParams.of(fam, r, nk)
                    for o in X_partitions_of(dual_size(c), dual_group_family(c)):
                        got = capD(c, o)
                        want = d_bv(c, o).unlabelled()
                        rep.cases_checked += 1
                        ok = got == want if fam == "A" else dominates(want, got)
                        if not ok:
                            rep.violations.append({"cover": str(c), "orbit": str(o), "capD": str(got), "d_bv": str(want)})

    return run


def _suite_prop43(rep, max_rank, max_n, family, jobs):
    from .levi_analysis import sweep_strict_descent

    for fam in [family] if family else ["A", "B", "C", "D"]:
        res = sweep_strict_descent(fam, max_rank, max_n, jobs=jobs)
        rep.cases_checked += res.checked
        rep.violations.extend(v.as_dict() for v in res.violations)


def _suite_tables(rep, max_rank, max_n, family, jobs):
    from .levi_analysis import table1_threshold, table2_g2, theta_nongeneric

    for fam in [family] if family else ["A", "B", "C", "D"]:
        for r in range(2, max_rank + 1):
            for nk in range(1, max_n + 1):
                c = CoverParams.of(fam, r, nk)
                rep.cases_checked += 1
                if theta_nongeneric(c) != table1_threshold(fam, r, nk):
                    rep.violations.append({"cover": str(c)})
    for nk in range(1, max_n + 1):
        rep.cases_checked += 1
        if theta_nongeneric(CoverParams.of("G2", 2, nk)) != table2_g2(nk):
            rep.violations.append({"cover": f"G2@n={nk}"})


def _suite_thm52(rep, max_rank, max_n, family, jobs):
    from .characters import c_theta, theta_cases

    fams = [family] if family else ["A", "B", "C", "D", "G2"]
    for c in theta_cases(max_rank, max_n, fams):
        r = c_theta(c)
        rep.cases_checked += 1
        if not r.equal:
            rep.violations.append(r.as_dict())


def _suite_sommers(rep, max_rank, max_n, family, jobs):
    from .characters import levi_components, sommers_brute, sommers_value

    fams = [family] if family else ["A", "B", "C", "D", "G2"]
    for fam in fams:
        ranks = [2] if fam == "G2" else range(2 if fam == "D" else 1, max_rank + 1)
        for r in ranks:
            t = CartanType(fam, r) if fam != "G2" else CartanType.parse("G2")
            for S in all_levi_subsets(t):
                comps = levi_components(S)
                for n in range(1, max_n + 1):
                    rep.cases_checked += 1
                    if sommers_value(r, comps, n) != sommers_brute(r, comps, n):
                        rep.violations.append({"type": str(t), "J": sorted(S.indices), "n": n})


def _suite_g2(rep, max_rank, max_n, family, jobs):
    from .characters import c_theta
    from .g2 import G2Orbit, ORBITS, g2_capD, g2_dbv, g2_sigma_inner, theta_j_irrep

    checks = [
        ("dbv(2,A1)=G2", g2_dbv(2, "A1").name == "G2"),
        ("D(At1)_hyperspecial nk=3", g2_capD(3, "At1", vertex="G2").name == "G2a1"),
        ("j nk=2", theta_j_irrep(2) == "phi_{2,2}"),
        ("j nk=3", theta_j_irrep(3) == "phi_{1,3}''"),
        ("inner n=2", g2_sigma_inner(2, "phi_{2,2}", twist_sign=True) == 1),
        ("inner n=3", g2_sigma_inner(3, "phi_{1,3}''", twist_sign=True) == 1),
    ]
    for nk in range(1, max(max_n, 9) + 1):
        vals = [g2_capD(nk, o) for o in ORBITS]
        checks.append((f"order reversing nk={nk}", all(vals[i + 1] <= vals[i] for i in range(len(vals) - 1))))
    for name, ok in checks:
        rep.cases_checked += 1
        if not ok:
            rep.violations.append({"check": name})


SUITES: dict[str, Callable] = {
    "collapse-oracle": _suite_collapse,
    "dcom-oracle": _suite_dcom,
    "thm-main-A": _suite_thm_main(["A"]),
    "thm-main-BCD": _suite_thm_main(["B", "C", "D"]),
    "prop-4-3": _suite_prop43,
    "tables-1-2": _suite_tables,
    "thm-5-2": _suite_thm52,
    "sommers-oracle": _suite_sommers,
    "g2-all": _suite_g2,
}


def run_suite(suite: str, max_rank: int, max_n: int, family: Optional[str] = None, jobs: int = 1) -> VerificationReport:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rep = VerificationReport(suite, {"max_rank": max_rank, "max_n": max_n, "family": family})
    start = time.perf_counter()
    SUITES[suite](rep, max_rank, max_n, family, jobs)
    rep.wall_time = time.perf_counter() - start
    return rep


def cmd_verify(args) -> int:
    rep = run_suite(args.suite, args.max_rank, args.max_n, args.family, args.jobs)
    emit(rep.as_dict(), "json" if args.format == "json" else args.format)
    return EXIT_OK if rep.passed else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# report with figures


def cmd_report(args) -> int:
    """Write delimited tables plus matplotlib figures into an output directory."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    from .characters import c_theta, theta_cases
    from .g2 import ORBITS, g2_dbv
    from .levi_analysis import theta_nongeneric

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    # nongeneric region per family
    ranks = list(range(2, args.max_rank + 1))
    nks = list(range(1, args.max_nk + 1))
    rows = []
    fig, axes = plt.subplots(1, 4, figsize=(14, 3.6), sharey=True)
    for ax, fam in zip(axes, "ABCD"):
        grid = np.zeros((len(ranks), len(nks)))
        for i, r in enumerate(ranks):
            for j, nk in enumerate(nks):
                v = theta_nongeneric(CoverParams.of(fam, r, nk))
                grid[i, j] = v
                rows.append({"family": fam, "rank": r, "n_kappa": nk, "nongeneric": v})
        ax.imshow(grid, cmap="Greys", aspect="auto", origin="lower",
                  extent=(nks[0] - 0.5, nks[-1] + 0.5, ranks[0] - 0.5, ranks[-1] + 0.5))
        ax.set_title(f"type {fam}")
        ax.set_xlabel("n_kappa")
    axes[0].set_ylabel("rank")
    fig.suptitle("dual of the regular dual orbit below the regular orbit (dark)")
    fig.tight_layout()
    fig.savefig(out / "nongeneric.png", dpi=120)
    plt.close(fig)
    written += _write_table(out / "nongeneric.csv", rows)
    written.append(str(out / "nongeneric.png"))

    # G2 dual map as a function of n_kappa
    rows = []
    fig, ax = plt.subplots(figsize=(6, 3.6))
    for o in ORBITS:
        ys = [g2_dbv(nk, o).closure_rank for nk in nks]
        rows += [{"n_kappa": nk, "orbit": o, "d_bv": ORBITS[y]} for nk, y in zip(nks, ys)]
        ax.plot(nks, ys, marker="o", label=f"from {o}")
    ax.set_yticks(range(len(ORBITS)), ORBITS)
    ax.set_xlabel("n_kappa")
    ax.set_ylabel("image orbit")
    ax.legend(fontsize=7)
    ax.set_title("G2 dual map")
    fig.tight_layout()
    fig.savefig(out / "g2_dual_map.png", dpi=120)
    plt.close(fig)
    written += _write_table(out / "g2_dual_map.csv", rows)
    written.append(str(out / "g2_dual_map.png"))

    # theta coefficients
    rows = [c_theta(c).as_dict() for c in theta_cases(args.max_rank, min(args.max_nk, 9))]
    fig, ax = plt.subplots(figsize=(5, 4))
    xs = [r["lhs"] for r in rows]
    ys = [float(Fraction(r["rhs"])) for r in rows]
    ax.scatter(xs, ys, s=14)
    top = max(xs + ys + [1])
    ax.plot([0, top], [0, top], lw=0.8, color="grey")
    ax.set_xlabel("<j(eps) (x) sgn, sigma>")
    ax.set_ylabel("<sgn_J, sigma>")
    ax.set_title("theta coefficients")
    fig.tight_layout()
    fig.savefig(out / "theta_coefficients.png", dpi=120)
    plt.close(fig)
    written += _write_table(out / "theta_coefficients.csv", rows)
    written.append(str(out / "theta_coefficients.png"))

    print("----- report -----")
    for path in written:
        print(path)
    print("----- end report -----")
    return EXIT_OK


def _write_table(path: Path, rows: list) -> list:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0].keys()), lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: _cell(v) for k, v in row.items()})
    return [str(path)]


# ---------------------------------------------------------------------------
# parser


def load_config(path: Optional[str]) -> dict:
    conf = dict(DEFAULTS)
    if os.environ.get(FORMAT_ENV):
        conf["format"] = os.environ[FORMAT_ENV]
    if path:
        for line in Path(path).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"bad config line {line!r}")
            k, v = (x.strip() for x in line.split("=", 1))
            conf[k.replace("-", "_")] = v
    return conf


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser(conf: dict) -> argparse.ArgumentParser:
    p = _Parser(prog="covdual", description="Duality maps for nilpotent orbits of covering groups.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--config", help="key=value file overriding defaults")
    p.add_argument("--format", choices=["json", "csv", "md"], default=conf["format"])
    p.add_argument("--plain", action="store_true", help="print only the result value")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cover_args(sp, orbit=True):
        sp.add_argument("--family", required=True, choices=["A", "B", "C", "D", "G2"])
        sp.add_argument("--rank", type=int)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--nk", type=int, default=None, help="override n_kappa (must divide n)")
        if orbit:
            sp.add_argument("--orbit", required=True)

    sp = sub.add_parser("dbv", help="dual of a dual-group orbit")
    cover_args(sp)
    sp.add_argument("--lenient", action="store_true", help="collapse an invalid input partition first")
    sp.set_defaults(func=cmd_dbv)

    sp = sub.add_parser("dcom", help="sum of s(m; z) over parts")
    sp.add_argument("--orbit", required=True)
    sp.add_argument("--z", type=int, required=True)
    sp.set_defaults(func=cmd_dcom)

    sp = sub.add_parser("sat", help="saturate component orbits into an ambient classical group")
    sp.add_argument("--ambient", required=True, choices=["A", "B", "C", "D"])
    sp.add_argument("--size", type=int, default=None)
    sp.add_argument("components", nargs="+", help="FAMILY:PARTITION, e.g. A:3,1")
    sp.set_defaults(func=cmd_sat)

    sp = sub.add_parser("capd", help="maximum over truncated-induction candidates")
    cover_args(sp)
    sp.add_argument("--genuine-only", action="store_true")
    sp.set_defaults(func=cmd_capd)

    sp = sub.add_parser("ctheta", help="both sides of the theta coefficient identity")
    cover_args(sp, orbit=False)
    sp.set_defaults(func=cmd_ctheta)

    sp = sub.add_parser("sommers", help="sign character of W_J against sigma, closed form")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--J", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_sommers)

    sp = sub.add_parser("g2", help="G2 computations")
    g2sub = sp.add_subparsers(dest="g2_command", required=True, parser_class=_Parser)
    g = g2sub.add_parser("capd")
    g.add_argument("--nk", type=int, required=True)
    g.add_argument("--orbit", required=True)
    g.add_argument("--vertex", choices=["G2", "A2", "A1+At1"], default=None)
    g = g2sub.add_parser("table")
    g.add_argument("--nk", type=int, required=True)
    sp.set_defaults(func=cmd_g2)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=list(SUITES))
    sp.add_argument("--max-rank", type=int, default=int(conf["max_rank"]))
    sp.add_argument("--max-n", type=int, default=int(conf["max_n"]))
    sp.add_argument("--family", choices=["A", "B", "C", "D", "G2"], default=None)
    sp.add_argument("--jobs", type=int, default=int(conf["jobs"]))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("report", help="write tables and figures to a directory")
    sp.add_argument("--out", required=True)
    sp.add_argument("--max-rank", type=int, default=8)
    sp.add_argument("--max-nk", type=int, default=20)
    sp.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        pre = argparse.ArgumentParser(add_help=False)
        pre.add_argument("--config")
        known, _ = pre.parse_known_args(argv)
        conf = load_config(known.config)
        args = build_parser(conf).parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"covdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PartitionError, RootSystemError, ValueError) as exc:
        print(f"covdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
