"""Command-line interface: one subcommand per public operation.

Inputs are JSON state documents (filename or "-" for stdin); outputs are
JSON result documents on stdout.  Exit codes: 0 success, 1 verification
failure or internal inconsistency, 2 invalid input.
"""

import argparse
import json
import math
import sys
from . import io
from .config import KERNEL_TOL, TOL_HERM, TOL_TRACE, TOL_UNITARY
from .correlation import nonfreeness, restrict
from .entropy import renyi_divergence, sandwiched_renyi
from .errors import ValidationError
from .free import free_from_pdm, purify_free
from .pdm import natural_spectrum, one_pdm
from .states import hubbard_ground_state
from .verify import (
    SearchConfig,
    property_suite,
    remark_state,
    renyi_min_search,
    report_to_document,
)

LN2 = math.log(2.0)

_TOLERANCES = {
    "tol_herm": TOL_HERM,
    "tol_trace": TOL_TRACE,
    "tol_unitary": TOL_UNITARY,
    "kernel_tol": KERNEL_TOL,
}


def _read_document(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    try:
        return io.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc}") from exc


def _emit(doc: dict):
    print(io.dumps(doc))


def _units_scale(bits: bool):
    return ("bits", LN2) if bits else ("nats", 1.0)


def _cmd_nonfreeness(args) -> int:
    rho = io.density_from_document(_read_document(args.state))
    report = nonfreeness(rho, cross_check=args.cross_check)
    units, scale = _units_scale(args.bits)
    value = {
        "nonfreeness": report.nonfreeness / scale,
        "occupations": [float(p) for p in report.occupations],
        "entropy_state": report.entropy_state / scale,
        "entropy_free": report.entropy_free / scale,
        "cross_check": None if report.cross_check is None else report.cross_check / scale,
    }
    _emit(
        io.make_result(
            "nonfreeness",
            value,
            units,
            inputs={"state": args.state, "d": rho.space.d},
            config=dict(_TOLERANCES, cross_check=args.cross_check),
        )
    )
    if report.cross_check is not None and report.cross_check > 1e-7:
        print(
            f"cross-check breach: entropy difference and relative entropy disagree"
            f" by {report.cross_check:.3e}",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_renyi(args) -> int:
    rho = io.density_from_document(_read_document(args.state))
    reference, _ = free_from_pdm(one_pdm(rho))
    divergence = sandwiched_renyi if args.sandwiched else renyi_divergence
    value = divergence(args.alpha, rho, reference)
    units, scale = _units_scale(args.bits)
    _emit(
        io.make_result(
            "sandwiched-renyi-correlation" if args.sandwiched else "renyi-correlation",
            value if math.isinf(value) else value / scale,
            units,
            inputs={"state": args.state, "d": rho.space.d, "alpha": args.alpha},
            config=dict(_TOLERANCES, sandwiched=args.sandwiched),
        )
    )
    return 0


def _cmd_pdm(args) -> int:
    rho = io.density_from_document(_read_document(args.state))
    pdm = one_pdm(rho)
    spectrum = natural_spectrum(pdm)
    value = {
        "gamma": io.matrix_to_json(pdm.gamma),
        "occupations": [float(p) for p in spectrum.occupations],
        "orbitals": io.matrix_to_json(spectrum.orbitals),
        "particle_number": pdm.trace,
    }
    _emit(
        io.make_result(
            "one-pdm",
            value,
            "nats",
            inputs={"state": args.state, "d": rho.space.d},
            config=_TOLERANCES,
        )
    )
    return 0


def _parse_keep(raw: str):
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValidationError(f"--keep expects comma-separated integers, got {raw!r}") from exc


def _cmd_restrict(args) -> int:
    rho = io.density_from_document(_read_document(args.state))
    sub = restrict(rho, _parse_keep(args.keep))
    _emit(
        io.make_result(
            "restriction",
            io.density_to_document(sub),
            "nats",
            inputs={"state": args.state, "d": rho.space.d, "keep": args.keep},
            config=_TOLERANCES,
        )
    )
    return 0


def _cmd_free_from_pdm(args) -> int:
    pdm = io.pdm_from_document(_read_document(args.pdm))
    density, spec = free_from_pdm(pdm)
    value = {
        "state": io.density_to_document(density),
        "free_spec": io.free_spec_to_document(spec),
    }
    _emit(
        io.make_result(
            "free-state-from-pdm",
            value,
            "nats",
            inputs={"pdm": args.pdm, "d": pdm.space.d},
            config=_TOLERANCES,
        )
    )
    return 0


def _cmd_purify(args) -> int:
    spec = io.free_spec_from_document(_read_document(args.spec))
    rows = purify_free(spec)
    value = {
        "d": 2 * spec.space.d,
        "kind": "slater",
        "orbitals": io.matrix_to_json(rows),
    }
    _emit(
        io.make_result(
            "purification",
            value,
            "nats",
            inputs={"spec": args.spec, "d": spec.space.d},
            config=_TOLERANCES,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    config = {
        "seed": args.seed,
        "dmax": args.dmax,
        "trials": args.trials,
        **_TOLERANCES,
    }
    if args.counterexample:
        rho = remark_state()
        cfg = SearchConfig(seed=args.seed, tolerance=1e-4)
        outcome = {}
        for label, alpha, sandwiched in (
            ("sandwiched_half", 0.5, True),
            ("alpha_one", 1.0, False),
        ):
            _, best, improved = renyi_min_search(rho, alpha, cfg, sandwiched=sandwiched)
            outcome[label] = {"best": io.value_to_json(best), "improved": improved}
        _emit(
            io.make_result(
                "renyi-minimum-counterexample",
                outcome,
                "nats",
                inputs={"state": "built-in one-particle mixed state"},
                config=config,
            )
        )
        passed = outcome["sandwiched_half"]["improved"] and not outcome["alpha_one"]["improved"]
        return 0 if passed else 1
    reports = property_suite(seed=args.seed, d_max=args.dmax, trials=args.trials)
    _emit(
        io.make_result(
            "property-suite",
            [report_to_document(r) for r in reports],
            "nats",
            inputs={},
            config=config,
        )
    )
    return 0 if all(r.passed for r in reports) else 1


def _cmd_demo_hubbard(args) -> int:
    n_up = args.nup if args.nup is not None else (args.sites + 1) // 2
    n_down = args.ndown if args.ndown is not None else args.sites // 2
    inputs = {
        "sites": args.sites,
        "t": args.t,
        "n_up": n_up,
        "n_down": n_down,
    }
    if args.sweep is not None:
        grid = [float(tok) for tok in args.sweep.split(",") if tok.strip()]
        rows = []
        for u_int in grid:
            rho = hubbard_ground_state(args.sites, args.t, u_int, n_up, n_down)
            rows.append([u_int, nonfreeness(rho, cross_check=False).nonfreeness])
        value = {"columns": ["u", "nonfreeness"], "rows": rows}
        inputs["sweep"] = grid
    else:
        rho = hubbard_ground_state(args.sites, args.t, args.u, n_up, n_down)
        value = {"u": args.u, "nonfreeness": nonfreeness(rho, cross_check=False).nonfreeness}
        inputs["u"] = args.u
    _emit(io.make_result("hubbard-nonfreeness", value, "nats", inputs, _TOLERANCES))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermifree",
        description="Nonfreeness and Renyi correlation functionals of many-fermion states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nonfreeness", help="entropy relative to the free reference state")
    p.add_argument("state", help="state document path, or - for stdin")
    p.add_argument("--bits", action="store_true", help="report in bits instead of nats")
    p.add_argument(
        "--cross-check",
        action="store_true",
        help="also evaluate the relative entropy directly and compare",
    )
    p.set_defaults(func=_cmd_nonfreeness)

    p = sub.add_parser("renyi", help="Renyi correlation functional")
    p.add_argument("state")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--sandwiched", action="store_true")
    p.add_argument("--bits", action="store_true")
    p.set_defaults(func=_cmd_renyi)

    p = sub.add_parser("pdm", help="1-particle density matrix and natural spectrum")
    p.add_argument("state")
    p.set_defaults(func=_cmd_pdm)

    p = sub.add_parser("restrict", help="substate on a subset of orbitals")
    p.add_argument("state")
    p.add_argument("--keep", required=True, help="comma-separated 1-based orbitals")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("free-from-pdm", help="unique free state with a given 1-pdm")
    p.add_argument("pdm")
    p.set_defaults(func=_cmd_free_from_pdm)

    p = sub.add_parser("purify", help="Slater rows on doubled orbitals realizing a free state")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_purify)

    p = sub.add_parser("verify", help="run the randomized property suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument(
        "--counterexample",
        action="store_true",
        help="search for free states beating the free reference at alpha != 1",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("demo-hubbard", help="ground-state nonfreeness of a small Hubbard chain")
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--u", type=float, default=0.0)
    p.add_argument("--nup", type=int, default=None)
    p.add_argument("--ndown", type=int, default=None)
    p.add_argument(
        "--sweep",
        nargs="?",
        const="0,1,2,4,8",
        default=None,
        help="comma-separated interaction grid; emits a (u, nonfreeness) table",
    )
    p.set_defaults(func=_cmd_demo_hubbard)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
