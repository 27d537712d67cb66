"""CLI entry point for simplex-integrals."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from .bench import run_bench, write_csv
from .config import Settings, get_settings
from .errors import DegenerateSimplexError, DomainError, ExpressionSyntaxError
from .integrate import (
    LinearFormPower,
    WaringDecomposition,
    integrate_canonical,
    integrate_canonical_xi,
    integrate_linear_form_power,
    integrate_real_exponents,
    integrate_scaled,
    integrate_scaled_real,
    integrate_simplex,
    integrate_waring,
)
from .models import IntegralResult, IntegrationMode
from .oracle import monte_carlo_integral, polynomial_integral_oracle
from .poly import parse
from .readers import parse_vector, read_real_terms, read_vertices, read_waring
from .simplex import (
    CanonicalSimplex,
    ScaledSimplex,
    Simplex,
    canonical_simplex,
    evaluation_point,
    evaluation_point_real,
    mapped_evaluation_points,
    pullback,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_DOMAIN = 4

MODES = {
    "exact": IntegrationMode.EXACT,
    "xi": IntegrationMode.XI,
    "gamma": IntegrationMode.GAMMA,
}


class UsageError(Exception):
    """Invalid flag combination (exit code 2)."""


def _setup_logging(verbose: bool = False) -> None:
    """Configure structured logging on stderr."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%dT%H:%M:%S",
        stream=sys.stderr,
    )


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from exc


def build_parser() -> argparse.ArgumentParser:
    """Build the CLI argument parser."""
    p = argparse.ArgumentParser(
        prog="simplex-integrals",
        description="Closed-form integration of polynomials on simplices",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_format(cmd: argparse.ArgumentParser) -> None:
        cmd.add_argument("--format", choices=["text", "json"], default="text")

    integ = sub.add_parser(
        "integrate", help="Integrate a polynomial, linear-form power or Waring sum"
    )
    integ.add_argument("--dim", type=int, default=None, help="Ambient dimension n")
    integ.add_argument("--poly", default=None, help='Polynomial, e.g. "x1 + x1*x2 + x2^2"')
    integ.add_argument("--vertices", type=Path, default=None, help="Vertex file (n+1 lines)")
    integ.add_argument("--z", default=None, help="Scaled simplex weights, comma list")
    integ.add_argument("--linear-form", default=None, help="Coefficients of l, comma list")
    integ.add_argument(
        "--waring", type=Path, default=None, help="Waring file (lines: +-1 c_1..c_n)"
    )
    integ.add_argument("--power", type=int, default=None, help="Power t for --linear-form/--waring")
    integ.add_argument("--mode", choices=["exact", "xi"], default="exact")
    add_format(integ)

    real = sub.add_parser("integrate-real", help="Integrate a real-exponent monomial sum")
    real.add_argument("--real-terms", type=Path, required=True,
                      help="Term file (lines: coefficient a_1..a_n)")
    real.add_argument("--dim", type=int, default=None, help="Expected dimension n")
    real.add_argument("--z", default=None, help="Scaled simplex weights, comma list")
    real.add_argument("--mode", choices=["gamma", "xi"], default="gamma")
    add_format(real)

    vol = sub.add_parser("volume", help="Volume of a simplex")
    vol.add_argument("--vertices", type=Path, default=None)
    vol.add_argument("--dim", type=int, default=None, help="Canonical simplex dimension")
    vol.add_argument("--z", default=None, help="Scaled simplex weights, comma list")
    add_format(vol)

    pts = sub.add_parser("points", help="List the evaluation points xi_j")
    pts.add_argument("--dim", type=int, default=None)
    pts.add_argument("--degree", type=int, default=None, help="List xi_1..xi_t")
    pts.add_argument("--real-degree", type=float, default=None, help="Show xi_t for real t")
    pts.add_argument(
        "--vertices", type=Path, default=None, help="Also map the points into a simplex"
    )
    add_format(pts)

    ver = sub.add_parser("verify", help="Check the engine against the independent oracles")
    ver.add_argument("--dim", type=int, default=None)
    ver.add_argument("--poly", default=None)
    ver.add_argument("--real-terms", type=Path, default=None)
    ver.add_argument("--vertices", type=Path, default=None)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--streams", type=int, default=None)
    add_format(ver)

    bench = sub.add_parser("bench", help="Time the integration paths; CSV output")
    bench.add_argument("--degrees", type=_int_list, default=None, help="e.g. 1,2,4,8")
    bench.add_argument("--dims", type=_int_list, default=None, help="e.g. 2,3,6")
    bench.add_argument("--repeats", type=int, default=None)
    bench.add_argument("--terms", type=int, default=None)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--samples", type=int, default=None)
    bench.add_argument("--workers", type=int, default=None, help="Processes for the reference pass")
    bench.add_argument("--output", type=Path, default=None, help="CSV path (default stdout)")

    return p


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _emit_result(result: IntegralResult, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(result.model_dump_json() + "\n")
        return
    if result.exact is not None:
        out.write(f"exact: {result.exact}\n")
    out.write(f"approx: {result.approx!r}\n")
    if result.mode is not IntegrationMode.EXACT:
        out.write(f"mode: {result.mode.value}\n")


def _emit_mapping(payload: Dict[str, Any], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(payload) + "\n")
        return
    for key, value in payload.items():
        out.write(f"{key}: {value}\n")


def _format_point(point: Any) -> str:
    return "(" + ", ".join(repr(float(c)) for c in point) + ")"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _simplex_from_args(args: argparse.Namespace, s: Settings) -> Optional[Simplex]:
    if args.vertices is not None:
        simplex = read_vertices(args.vertices, max_dimension=s.max_dimension)
        if args.dim is not None and args.dim != simplex.dimension:
            raise DomainError(f"--dim {args.dim} does not match the {simplex.dimension}-simplex")
        return simplex
    return None


def _check_dim(args: argparse.Namespace, n: int) -> None:
    if args.dim is not None and args.dim != n:
        raise DomainError(f"--dim {args.dim} does not match the {n} coefficients given")


def _require_power(args: argparse.Namespace) -> int:
    if args.power is None:
        raise UsageError("--power is required with --linear-form and --waring")
    return args.power


def _cmd_integrate(args: argparse.Namespace, s: Settings, out: TextIO) -> int:
    mode = MODES[args.mode]
    simplex = _simplex_from_args(args, s)
    if sum(x is not None for x in (args.poly, args.linear_form, args.waring)) != 1:
        raise UsageError("Give exactly one of --poly, --linear-form, --waring")
    if args.z is not None and simplex is not None:
        raise UsageError("--z and --vertices are mutually exclusive")

    if args.waring is not None:
        w = read_waring(args.waring, _require_power(args))
        _check_dim(args, w.dimension)
        target = simplex or canonical_simplex(w.dimension)
        if args.z is not None:
            target = ScaledSimplex(parse_vector(args.z)).to_simplex()
        if mode is IntegrationMode.XI:
            result = integrate_simplex(target, w.expand(), mode)
        else:
            result = integrate_waring(target, w)
    elif args.linear_form is not None:
        lp = LinearFormPower(ell=parse_vector(args.linear_form), power=_require_power(args))
        _check_dim(args, lp.dimension)
        if simplex is not None or args.z is not None:
            target = simplex or ScaledSimplex(parse_vector(args.z)).to_simplex()
            w = WaringDecomposition(terms=((1, lp.ell),), power=lp.power)
            if mode is IntegrationMode.XI:
                result = integrate_simplex(target, w.expand(), mode)
            else:
                result = integrate_waring(target, w)
        elif mode is IntegrationMode.XI:
            result = integrate_canonical_xi(lp.expand())
        else:
            result = integrate_linear_form_power(lp)
    else:
        if args.dim is None:
            raise UsageError("--dim is required with --poly")
        f = parse(args.poly, args.dim)
        if simplex is not None:
            result = integrate_simplex(simplex, f, mode)
        elif args.z is not None:
            z = parse_vector(args.z)
            if mode is IntegrationMode.XI:
                result = integrate_simplex(ScaledSimplex(z).to_simplex(), f, mode)
            else:
                result = integrate_scaled(f, z)
        else:
            result = integrate_canonical(f, mode)
    _emit_result(result, args.format, out)
    return EXIT_OK


def _cmd_integrate_real(args: argparse.Namespace, s: Settings, out: TextIO) -> int:
    f = read_real_terms(args.real_terms, args.dim)
    if args.z is not None:
        if args.mode != "gamma":
            raise UsageError("Only --mode gamma is available with --z")
        result = integrate_scaled_real(f, [float(v) for v in parse_vector(args.z)])
    else:
        result = integrate_real_exponents(f, MODES[args.mode])
    _emit_result(result, args.format, out)
    return EXIT_OK


def _cmd_volume(args: argparse.Namespace, s: Settings, out: TextIO) -> int:
    simplex = _simplex_from_args(args, s)
    if simplex is not None:
        volume = simplex.volume
    elif args.z is not None:
        volume = ScaledSimplex(parse_vector(args.z)).volume
    elif args.dim is not None:
        volume = CanonicalSimplex(args.dim).volume
    else:
        raise UsageError("Give --vertices, --z or --dim")
    _emit_result(IntegralResult.from_exact(volume), args.format, out)
    return EXIT_OK


def _cmd_points(args: argparse.Namespace, s: Settings, out: TextIO) -> int:
    simplex = _simplex_from_args(args, s)
    n = simplex.dimension if simplex is not None else args.dim
    if n is None:
        raise UsageError("--dim (or --vertices) is required")
    if args.degree is None and args.real_degree is None:
        raise UsageError("Give --degree or --real-degree")

    records: List[Dict[str, Any]] = []
    if args.degree is not None:
        psi = mapped_evaluation_points(simplex, args.degree) if simplex is not None else None
        for j in range(1, args.degree + 1):
            ep = evaluation_point(n, j)
            rec: Dict[str, Any] = {"name": f"xi_{j}", **ep.model_dump()}
            if psi is not None:
                rec["mapped"] = list(psi[j - 1])
            records.append(rec)
    if args.real_degree is not None:
        ep = evaluation_point_real(n, args.real_degree)
        records.append({"name": f"xi_t(t={args.real_degree!r})", **ep.model_dump()})

    if args.format == "json":
        out.write(json.dumps(records) + "\n")
        return EXIT_OK
    for rec in records:
        line = f"{rec['name']} = {_format_point(rec['point'])}  theta = {rec['theta']!r}"
        if rec.get("theta_power") is not None:
            line += f"  theta^{rec['degree']} = {rec['theta_power']}"
        out.write(line + "\n")
        if "mapped" in rec:
            out.write(f"psi_{rec['degree']} = {_format_point(rec['mapped'])}\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, s: Settings, out: TextIO) -> int:
    if (args.poly is None) == (args.real_terms is None):
        raise UsageError("Give exactly one of --poly and --real-terms")
    seed = s.seed if args.seed is None else args.seed
    samples = s.mc_samples if args.samples is None else args.samples
    streams = s.mc_streams if args.streams is None else args.streams

    if args.poly is not None:
        if args.dim is None:
            raise UsageError("--dim is required with --poly")
        f = parse(args.poly, args.dim)
        simplex = _simplex_from_args(args, s)
        if simplex is None:
            result = integrate_canonical(f)
            xi = integrate_canonical(f, IntegrationMode.XI)
            oracle = polynomial_integral_oracle(f)
        else:
            result = integrate_simplex(simplex, f)
            xi = integrate_simplex(simplex, f, IntegrationMode.XI)
            oracle = simplex.jacobian * polynomial_integral_oracle(pullback(simplex, f))
        agree = result.exact == oracle and result.agrees_with(xi, s.xi_rel_tolerance)
        _emit_mapping(
            {
                "engine": str(result.exact),
                "oracle": str(oracle),
                "xi": xi.approx,
                "agree": agree,
            },
            args.format,
            out,
        )
    else:
        if args.vertices is not None:
            raise UsageError("--vertices is not supported with --real-terms")
        f = read_real_terms(args.real_terms, args.dim)
        engine_value = integrate_real_exponents(f).approx
        mc = monte_carlo_integral(canonical_simplex(f.dimension), f, samples, seed, streams=streams)
        agree = mc.within(engine_value, s.sigma_band)
        _emit_mapping(
            {
                "engine": engine_value,
                "monte_carlo": mc.mean,
                "std_error": mc.std_error,
                "samples": mc.samples,
                "agree": agree,
            },
            args.format,
            out,
        )
    if not agree:
        logger.error("Engine and oracle disagree")
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace, s: Settings, out: TextIO) -> int:
    rows = run_bench(
        degrees=args.degrees or s.bench_degrees,
        dimensions=args.dims or s.bench_dimensions,
        repeats=args.repeats or s.bench_repeats,
        terms=args.terms or s.bench_terms,
        samples=args.samples or s.mc_samples,
        seed=s.seed if args.seed is None else args.seed,
        workers=args.workers or s.workers,
    )
    if args.output is None:
        write_csv(rows, out)
        return EXIT_OK
    args.output.parent.mkdir(parents=True, exist_ok=True)
    with args.output.open("w", encoding="utf-8", newline="") as fh:
        count = write_csv(rows, fh)
    logger.info("Wrote %d rows to %s", count, args.output)
    return EXIT_OK


COMMANDS = {
    "integrate": _cmd_integrate,
    "integrate-real": _cmd_integrate_real,
    "volume": _cmd_volume,
    "points": _cmd_points,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Optional[List[str]] = None, *, out: Optional[TextIO] = None) -> int:
    """CLI entry point. Returns exit code."""
    args = build_parser().parse_args(argv)
    _setup_logging(verbose=args.verbose)
    out = out or sys.stdout
    settings = get_settings()

    try:
        return COMMANDS[args.cmd](args, settings, out)
    except (UsageError, ExpressionSyntaxError, OSError) as exc:
        code = EXIT_USAGE
        message = str(exc)
    except DegenerateSimplexError as exc:
        code = EXIT_DEGENERATE
        message = str(exc)
    except DomainError as exc:
        code = EXIT_DOMAIN
        message = str(exc)
    logger.debug("Command %s failed with exit code %d", args.cmd, code)
    print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
