"""Command-line front end: special-function tables, surface computations,
classification reports, and the data files behind the reference figures.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 parabolic-point
error, 5 series non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence, TextIO

from .bessel import (
    SeriesConfig,
    bessel_i0,
    bessel_j,
    bessel_j0,
    bessel_k0,
    bessel_y0,
)
from .classify import check_eigen_i, check_eigen_ii, make_grid
from .errors import (
    DomainError,
    NonConvergenceError,
    ParabolicPointError,
    ProfileSpecError,
)
from .expressions import expression_profile
from .profiles import (
    ProfileCurve,
    bessel_profile,
    constant_h_profile,
    constant_k_profile,
    linear_profile,
    log_profile,
    power_profile,
)
from .surfaces import (
    Mesh,
    RevolutionKind,
    RevolutionSurface,
    coord_laplacians_i,
    coord_laplacians_ii,
    curvatures,
    mesh,
)

import numpy as np

__all__ = ["main", "parse_profile_spec", "write_obj"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_PARABOLIC = 4
EXIT_NONCONVERGENCE = 5


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_pair(text: str, what: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ProfileSpecError(f"{what} must look like a:b, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ProfileSpecError(f"bad {what} {text!r}: {exc}") from exc


def _parse_grid(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise ProfileSpecError(f"grid must look like NUxNV, got {text!r}")
    try:
        nu, nv = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ProfileSpecError(f"bad grid {text!r}: {exc}") from exc
    if nu < 2 or nv < 2:
        raise ProfileSpecError(f"grid must be at least 2x2, got {text!r}")
    return nu, nv


_PROFILE_KEYS = {
    "constk": ("k0", "c1", "c2"),
    "consth": ("h0", "c1", "c2"),
    "bessel": ("lambda", "c1", "c2"),
    "log": ("lambda", "c"),
    "power": ("lambda", "mu", "c"),
    "lin": ("a", "b"),
    "expr": ("f",),
}
_PROFILE_OPTIONAL = {"constk": {"c2"}}


def parse_profile_spec(spec: str, cfg: SeriesConfig | None = None) -> ProfileCurve:
    """Build a profile from `family:key=val,...`.

    Families: constk (k0, c1, [c2]), consth (h0, c1, c2), bessel (lambda,
    c1, c2), log (lambda, c), power (lambda, mu, c), lin (a, b), and
    expr (f=<expression in u>).
    """
    if cfg is None:
        cfg = SeriesConfig()
    family, sep, rest = spec.partition(":")
    family = family.strip()
    if not sep or family not in _PROFILE_KEYS:
        raise ProfileSpecError(
            f"unknown profile spec {spec!r}; families: {', '.join(sorted(_PROFILE_KEYS))}"
        )
    kv: dict[str, str] = {}
    for item in rest.split(","):
        item = item.strip()
        if not item:
            continue
        key, eq, val = item.partition("=")
        if not eq:
            raise ProfileSpecError(f"expected key=value in profile spec, got {item!r}")
        kv[key.strip()] = val.strip()
    allowed = _PROFILE_KEYS[family]
    optional = _PROFILE_OPTIONAL.get(family, set())
    for key in kv:
        if key not in allowed:
            raise ProfileSpecError(f"unknown key {key!r} for family {family!r}")
    for key in allowed:
        if key not in kv and key not in optional:
            raise ProfileSpecError(f"family {family!r} requires key {key!r}")

    if family == "expr":
        return expression_profile(kv["f"], cfg=cfg)

    try:
        nums = {k: float(v) for k, v in kv.items()}
    except ValueError as exc:
        raise ProfileSpecError(f"bad numeric value in {spec!r}: {exc}") from exc
    if family == "constk":
        return constant_k_profile(nums["k0"], nums["c1"], nums.get("c2", 0.0))
    if family == "consth":
        return constant_h_profile(nums["h0"], nums["c1"], nums["c2"])
    if family == "bessel":
        return bessel_profile(nums["lambda"], nums["c1"], nums["c2"], cfg)
    if family == "log":
        return log_profile(nums["lambda"], nums["c"])
    if family == "power":
        return power_profile(nums["lambda"], nums["mu"], nums["c"])
    return linear_profile(nums["a"], nums["b"])


def write_obj(m: Mesh, fh: TextIO) -> None:
    """v/f lines, 1-based indices, no normals (the unit normal is the
    constant isotropic direction and carries no information)."""
    for vert in m.vertices:
        fh.write(f"v {_fmt(vert[0])} {_fmt(vert[1])} {_fmt(vert[2])}\n")
    for face in m.faces:
        fh.write(f"f {face[0] + 1} {face[1] + 1} {face[2] + 1}\n")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline="\n"), True


def _write_csv(path: str | None, header: str, rows, comments: Sequence[str] = ()) -> None:
    fh, owned = _open_out(path)
    try:
        for comment in comments:
            fh.write(f"# {comment}\n")
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")
    finally:
        if owned:
            fh.close()


def _bessel_eval(kind: str, p: float | None, cfg: SeriesConfig) -> Callable[[float], float]:
    if kind == "j0":
        return lambda x: bessel_j0(x, cfg)
    if kind == "y0":
        return lambda x: bessel_y0(x, cfg)
    if kind == "i0":
        return lambda x: bessel_i0(x, cfg)
    if kind == "k0":
        return lambda x: bessel_k0(x, cfg)
    if p is None:
        raise ProfileSpecError("--p is required for --kind jp")
    return lambda x: bessel_j(p, x, cfg)


def _cmd_bessel(args: argparse.Namespace) -> int:
    cfg = SeriesConfig(rel_tol=args.series_tol)
    a, b = _parse_pair(args.range, "--range")
    if args.n < 1:
        raise ProfileSpecError(f"--n must be >= 1, got {args.n}")
    if args.kind in ("y0", "k0") and (a <= 0.0 or b <= 0.0):
        raise DomainError(f"{args.kind} requires x > 0")
    fn = _bessel_eval(args.kind, args.p, cfg)
    xs = np.linspace(a, b, args.n)
    rows = [(float(x), fn(float(x))) for x in xs]
    _write_csv(args.out, "x,value", rows)
    return EXIT_OK


_ACTIONS = ("curvature", "laplacian1", "laplacian2", "classify1", "classify2", "mesh")


def _cmd_surface(args: argparse.Namespace) -> int:
    cfg = SeriesConfig(rel_tol=args.series_tol)
    profile = parse_profile_spec(args.profile, cfg)
    kind = (
        RevolutionKind.TIMELIKE_MERIDIAN
        if args.kind == "timelike"
        else RevolutionKind.SPACELIKE_MERIDIAN
    )
    u_range = _parse_pair(args.u, "--u")
    v_range = _parse_pair(args.v, "--v")
    surface = RevolutionSurface(profile, kind, u_range, v_range)
    nu, nv = _parse_grid(args.grid)

    if args.action == "curvature":
        us = np.linspace(u_range[0], u_range[1], nu)
        rows = []
        for u in us:
            k, h = curvatures(surface, float(u))
            rows.append((float(u), k, h))
        _write_csv(args.out, "u,K,H", rows)
        return EXIT_OK

    if args.action in ("laplacian1", "laplacian2"):
        op = coord_laplacians_i if args.action == "laplacian1" else coord_laplacians_ii
        grid = make_grid(surface, nu, nv)
        rows = []
        for u in grid.u:
            for v in grid.v:
                d1, d2, d3 = op(surface, float(u), float(v))
                rows.append((float(u), float(v), d1, d2, d3))
        _write_csv(args.out, "u,v,d1,d2,d3", rows)
        return EXIT_OK

    if args.action in ("classify1", "classify2"):
        grid = make_grid(surface, nu, nv)
        check = check_eigen_i if args.action == "classify1" else check_eigen_ii
        report = check(surface, grid, tol=args.tol)
        fh, owned = _open_out(args.out)
        try:
            fh.write(report.to_text())
        finally:
            if owned:
                fh.close()
        return EXIT_OK

    m = mesh(surface, nu, nv)
    fh, owned = _open_out(args.out)
    try:
        write_obj(m, fh)
    finally:
        if owned:
            fh.close()
    return EXIT_OK


_FIGURES = ("1a", "1b", "2a", "2b", "3a", "3b")
_FIGURE_MESH = 41


def _cmd_figure(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cfg = SeriesConfig()
    fid = args.id

    def emit_csv(name: str, header: str, rows, comments: Sequence[str] = ()) -> None:
        _write_csv(str(out_dir / name), header, rows, comments)
        print(f"wrote {out_dir / name}", file=sys.stderr)

    def emit_obj(name: str, m: Mesh) -> None:
        with open(out_dir / name, "w", newline="\n") as fh:
            write_obj(m, fh)
        print(f"wrote {out_dir / name}", file=sys.stderr)

    if fid == "1a":
        xs = np.linspace(0.05, 10.0, 200)
        rows = [(float(x), bessel_j0(float(x), cfg), bessel_y0(float(x), cfg)) for x in xs]
        emit_csv(
            "figure1a.csv",
            "x,J0,Y0",
            rows,
            comments=["samples start at x=0.05: Y0(x) -> -inf as x -> 0+"],
        )
    elif fid == "1b":
        xs = np.linspace(-3.0, 3.0, 200)
        emit_csv("figure1b_i0.csv", "x,I0", [(float(x), bessel_i0(float(x), cfg)) for x in xs])
        xk = np.linspace(0.05, 3.0, 200)
        emit_csv(
            "figure1b_k0.csv",
            "x,K0",
            [(float(x), bessel_k0(float(x), cfg)) for x in xk],
            comments=[
                "nominal range [-3,3] is cut to (0,3]: K0 is undefined for x <= 0",
            ],
        )
    elif fid == "2a":
        us = np.linspace(1.0, 4.0, 200)
        rows = [(0.0, float(u), bessel_j0(float(u), cfg)) for u in us]
        emit_csv("figure2a.csv", "x,y,z", rows, comments=["profile curve (0, u, J0(u))"])
    elif fid == "2b":
        profile = bessel_profile(1.0, 1.0, 0.0, cfg)
        s = RevolutionSurface(profile, RevolutionKind.TIMELIKE_MERIDIAN, (1.0, 4.0), (-1.0, 1.0))
        emit_obj("figure2b.obj", mesh(s, _FIGURE_MESH, _FIGURE_MESH))
    elif fid == "3a":
        us = np.linspace(0.5, 5.0, 200)
        rows = [(0.0, float(u), float(np.log(u))) for u in us]
        emit_csv("figure3a.csv", "x,y,z", rows, comments=["profile curve (0, u, ln u)"])
    else:
        profile = log_profile(-2.0, 0.0)
        s = RevolutionSurface(profile, RevolutionKind.TIMELIKE_MERIDIAN, (0.5, 5.0), (-0.5, 1.0))
        emit_obj("figure3b.obj", mesh(s, _FIGURE_MESH, _FIGURE_MESH))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigeom",
        description=(
            "Surfaces of revolution in the semi-isotropic 3-space: special "
            "functions, curvatures, Laplace operators, classification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bessel", help="tabulate a Bessel-family function as CSV")
    b.add_argument("--kind", required=True, choices=("j0", "y0", "i0", "k0", "jp"))
    b.add_argument("--p", type=float, default=None, help="order for --kind jp")
    b.add_argument("--range", required=True, help="sampling interval a:b")
    b.add_argument("--n", type=int, default=200, help="number of samples")
    b.add_argument("--out", default=None, help="output path (default stdout)")
    b.add_argument("--series-tol", type=float, default=1e-15)
    b.set_defaults(func=_cmd_bessel)

    s = sub.add_parser("surface", help="compute on a surface of revolution")
    s.add_argument("--profile", required=True, help="profile spec family:key=val,...")
    s.add_argument("--kind", choices=("timelike", "spacelike"), default="timelike")
    s.add_argument("--u", default="0.5:5", help="u range a:b")
    s.add_argument("--v", default="-1:1", help="v range a:b")
    s.add_argument("--action", required=True, choices=_ACTIONS)
    s.add_argument("--out", default=None, help="output path (default stdout)")
    s.add_argument("--grid", default="21x21", help="sample grid NUxNV")
    s.add_argument("--tol", type=float, default=1e-6, help="eigen-fit tolerance")
    s.add_argument("--series-tol", type=float, default=1e-15)
    s.set_defaults(func=_cmd_surface)

    f = sub.add_parser("figure", help="emit the data files behind a reference figure")
    f.add_argument("id", choices=_FIGURES)
    f.add_argument("--out-dir", default=".", help="directory for the output files")
    f.set_defaults(func=_cmd_figure)
    return parser


_PAIR_FLAGS = ("--range", "--u", "--v")


def _glue_pair_values(argv: Sequence[str]) -> list[str]:
    # argparse rejects values like "-0.5:1" after a separate flag token; fold
    # them into --flag=value form so negative range endpoints parse.
    out: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in _PAIR_FLAGS and i + 1 < len(argv):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_glue_pair_values(argv))
    try:
        return args.func(args)
    except ProfileSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParabolicPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARABOLIC
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
