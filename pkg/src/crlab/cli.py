"""``crlab`` command line interface.

    crlab <subcommand> <file> [--json] [--max-length k] [--cap k] [--order lex|degrevlex]

Exit status: 0 for a definite result, 2 when the result is inconclusive
(a cap was reached or a hypothesis failed), 1 on errors.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys

from . import __version__
from .core.orders import order_from_name
from .errors import CRLabError
from .finite_type import FiniteType, cr_fields, finite_type_order
from .groebner import Finite, Ideal, krull_dim
from .maps import (
    CriterionSatisfied,
    Inconclusive,
    analyticity_verdict,
    criterion_variety,
    is_finite_map,
    jacobian_determinant,
    maps_into,
    verify_segre_preimage_identity,
)
from .problem import load_problem
from .report import DEFINITE, ERROR, INCONCLUSIVE, Report, dim_payload, ideal_payload, status_payload, vector_payload
from .varieties import CAVEAT_GENERATORS, CAVEAT_GLOBAL_DIM, essential_variety, segre_at

COMMANDS = ("segre", "essvar", "ftype", "mapfinite", "mapcheck", "preimage-check", "criterion", "verdict", "gb")


def _dim_caveats(ideal):
    if all(len(g) == 1 for g in ideal.generators):
        return []
    return [CAVEAT_GLOBAL_DIM]


def _segre(problem):
    X = problem.source
    ideal = segre_at(X, problem.options.point)
    ideal = Ideal(ideal.basis, table=ideal.table)
    point = problem.options.point or (0,) * X.N
    payload = {"point": vector_payload(point), "ideal": ideal_payload(ideal), "dim": dim_payload(krull_dim(ideal))}
    return payload, _dim_caveats(ideal), DEFINITE


def _essvar(problem):
    rep = essential_variety(problem.source, problem.options.monomial_order)
    payload = {
        "order": problem.options.order,
        "ideal": ideal_payload(rep.ideal_of_E0),
        "dim": dim_payload(rep.dim),
        "essentially_finite": rep.essentially_finite,
    }
    return payload, list(rep.caveats), DEFINITE


def _type_payload(rep, M=None):
    out = {
        "type": status_payload(rep.status),
        "span_dims": list(rep.span_dims),
        "target_dim": rep.target_dim,
        "tangency_checked_fields": rep.fields_checked,
    }
    if M is not None:
        out["cr_fields"] = [str(f) for f in cr_fields(M)]
    return out


def _ftype(problem):
    rep = finite_type_order(problem.source, problem.options.bracket_cap)
    code = DEFINITE if isinstance(rep.status, FiniteType) else INCONCLUSIVE
    caveats = [] if code == DEFINITE else ["finite type is never certified as infinite; only the cap was reached"]
    return _type_payload(rep, problem.source), caveats, code


def _mapfinite(problem):
    H = problem.effective_map
    status = is_finite_map(H, problem.options.colength_cap)
    payload = {"finiteness": status_payload(status), "cap": problem.options.colength_cap}
    if len(H) == len(H.source):
        jac = jacobian_determinant(H)
        payload["jacobian"] = str(jac)
        payload["jacobian_nonvanishing"] = not jac.is_zero()
    return payload, [], DEFINITE if isinstance(status, Finite) else INCONCLUSIVE


def _mapcheck(problem):
    M, Xt, H = problem.source, problem.effective_target, problem.effective_map
    images = H.on(M.table) + H.conj_on(M.table)
    residuals = [str(M.ideal.reduce(s.compose(images, M.table))) for s in Xt.sigma]
    return {"maps_into": maps_into(H, M, Xt), "residuals": residuals}, [], DEFINITE


def _preimage(problem):
    M, Xt, H = problem.source, problem.effective_target, problem.effective_map
    rep = verify_segre_preimage_identity(H, M, Xt, problem.options.colength_cap)
    payload = {
        "map_finite": status_payload(rep.finite),
        "maps_into": rep.maps_into,
        "status": str(rep.status),
    }
    if isinstance(rep.status, Inconclusive):
        return payload, [], INCONCLUSIVE
    payload.update({
        "preimage": ideal_payload(rep.preimage),
        "target_segre": ideal_payload(rep.target_segre),
        "ideals_equal": rep.ideals_equal,
        "source_dim": dim_payload(rep.source_dim),
        "target_dim": dim_payload(rep.target_dim),
        "dims_equal": rep.dims_equal,
    })
    return payload, _dim_caveats(rep.preimage), DEFINITE


def _criterion(problem):
    M, Xt, H = problem.source, problem.effective_target, problem.effective_map
    res = criterion_variety(H, M, Xt)
    payload = {"ideal": ideal_payload(res.ideal), "dim": dim_payload(res.dim), "satisfied": res.satisfied}
    return payload, [CAVEAT_GENERATORS] + _dim_caveats(res.ideal), DEFINITE


def _verdict(problem):
    M, Xt, H = problem.source, problem.effective_target, problem.effective_map
    rep = analyticity_verdict(M, Xt, H, problem.options.caps)
    payload = {
        "verdict": str(rep.verdict),
        "gaps": list(rep.gaps),
        "finite_type": _type_payload(rep.finite_type),
        "source_essential": {
            "ideal": ideal_payload(rep.source_essential.ideal_of_E0),
            "dim": dim_payload(rep.source_essential.dim),
            "essentially_finite": rep.source_ess_finite,
        },
        "map_finite": status_payload(rep.map_finite),
        "maps_into": rep.maps_into,
        "criterion": {"ideal": ideal_payload(rep.criterion_ideal), "dim": dim_payload(rep.criterion_dim)},
    }
    code = DEFINITE if isinstance(rep.verdict, CriterionSatisfied) else INCONCLUSIVE
    return payload, list(rep.caveats), code


def _gb(problem):
    order = problem.options.monomial_order
    ideal = Ideal(problem.source.sigma, order, problem.source.table)
    payload = {"order": str(order), "ideal": ideal_payload(ideal), "dim": dim_payload(krull_dim(ideal))}
    return payload, [], DEFINITE


_HANDLERS = {
    "segre": _segre,
    "essvar": _essvar,
    "ftype": _ftype,
    "mapfinite": _mapfinite,
    "mapcheck": _mapcheck,
    "preimage-check": _preimage,
    "criterion": _criterion,
    "verdict": _verdict,
    "gb": _gb,
}


def run(command, problem):
    """Dispatch ``command`` on a parsed problem and wrap the result in a Report."""
    try:
        handler = _HANDLERS[command]
    except KeyError:
        raise CRLabError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}") from None
    payload, caveats, code = handler(problem)
    return Report(command, problem.digest(), payload, caveats, code)


def apply_overrides(problem, max_length=None, cap=None, order=None):
    changes = {}
    if max_length is not None:
        changes["bracket_cap"] = max_length
    if cap is not None:
        changes["colength_cap"] = cap
    if order is not None:
        order_from_name(order)
        changes["order"] = order
    if not changes:
        return problem
    return dataclasses.replace(problem, options=dataclasses.replace(problem.options, **changes))


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="crlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"crlab {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file")
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--max-length", type=_positive, help="bracket length cap for finite type")
    parser.add_argument("--cap", type=_positive, help="jet order cap for map finiteness")
    parser.add_argument("--order", choices=("lex", "degrevlex"), help="monomial order for gb / essvar")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        problem = apply_overrides(load_problem(args.file), args.max_length, args.cap, args.order)
        report = run(args.command, problem)
    except (CRLabError, OSError) as exc:
        print(f"crlab: error: {exc}", file=sys.stderr)
        return ERROR
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
