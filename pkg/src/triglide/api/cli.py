"""Command-line entry point.

Exit status is 0 on success, 2 when the input is rejected and 1 on any other
failure. Results go to stdout, logging to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import ValidationError

from triglide.application.services import (
    CellService,
    KinematicsService,
    OracleService,
    SingularityService,
)
from triglide.application.use_cases import RoundTripUseCase, SweepSpace, SweepUseCase
from triglide.domain.errors import InputValidationError
from triglide.domain.models import (
    CellSpace,
    JointState,
    Pose,
    Quaternion,
    ReducedJoints,
    VarietySpace,
)
from triglide.infrastructure.adapters.export import CsvExporter
from triglide.infrastructure.adapters.solvers import MultistartNewtonSolver
from triglide.infrastructure.config.config import Settings, get_settings
from triglide.infrastructure.config.geometry_loader import load_geometry
from triglide.shared.lib.formatting import (
    dump_json,
    format_number,
    parse_json_object,
    parse_vector,
    to_jsonable,
)

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2


class _Context:
    """Settings and geometry shared by the command handlers."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.geometry = load_geometry(args.geometry or settings.geometry_file)

    def kinematics(self) -> KinematicsService:
        return KinematicsService(self.settings, self.geometry)


def _inline_or_file(args: argparse.Namespace, attr: str, field: str) -> str:
    """The inline value of ``attr`` or the contents of ``--file``."""
    if getattr(args, "file", None):
        try:
            return Path(args.file).read_text(encoding="utf-8")
        except OSError as e:
            raise InputValidationError("file", f"cannot read {args.file}: {e}") from e
    value = getattr(args, attr, None)
    if value is None:
        raise InputValidationError(field, f"--{attr} or --file is required")
    return value


def _parse_pose(text: str) -> Pose:
    return Pose.model_validate(parse_json_object(text, "pose"))


def _parse_mu(text: str) -> ReducedJoints:
    if text.strip().startswith("{"):
        return ReducedJoints.model_validate(parse_json_object(text, "mu"))
    return ReducedJoints.model_validate(parse_vector(text, 3, "mu"))


def _render_text(data: Any, indent: str = "") -> list[str]:
    if isinstance(data, dict):
        lines = []
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{indent}{key}:")
                lines.extend(_render_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_scalar_text(value)}")
        return lines
    if isinstance(data, list) and not _is_flat(data):
        lines = []
        for i, item in enumerate(data, start=1):
            lines.append(f"{indent}[{i}]")
            lines.extend(_render_text(item, indent + "  "))
        return lines
    return [f"{indent}{_scalar_text(data)}"]


def _is_flat(value: Any) -> bool:
    return isinstance(value, list) and all(
        not isinstance(v, (dict, list)) for v in value
    )


def _scalar_text(value: Any) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_scalar_text(v) for v in value) + ")"
    if isinstance(value, float):
        return format_number(value)
    if value is None:
        return "-"
    return str(value)


def _emit(result: Any, fmt: str) -> None:
    if fmt == "json":
        print(dump_json(result))
    else:
        print("\n".join(_render_text(to_jsonable(result))))


def _cmd_ik(ctx: _Context) -> Any:
    pose = _parse_pose(_inline_or_file(ctx.args, "pose", "pose"))
    return ctx.kinematics().inverse_kinematics(pose)


def _cmd_dkp(ctx: _Context) -> Any:
    service = ctx.kinematics()
    if ctx.args.joints is not None:
        joints = JointState.model_validate(parse_json_object(ctx.args.joints, "joints"))
        _, poses = service.direct_kinematics_from_joints(joints)
        return poses
    mu = _parse_mu(_inline_or_file(ctx.args, "mu", "mu"))
    return list(service.direct_kinematics(mu).solutions)


def _cmd_aspect(ctx: _Context) -> Any:
    if ctx.args.q is not None:
        pose = Pose.at(Quaternion.model_validate(parse_vector(ctx.args.q, 4, "q")))
    else:
        pose = _parse_pose(_inline_or_file(ctx.args, "pose", "pose"))
    return SingularityService(ctx.settings).aspect(pose)


def _cmd_cells(ctx: _Context) -> Any:
    service = CellService(ctx.settings)
    args = ctx.args
    if args.cells_command == "list":
        cells = service.cells(args.space)
        if args.format == "text":
            return {
                f"cell {c.index}": {
                    "bounds": [b.bracket() for b in c.bounds],
                    "sample": list(c.sample_point),
                }
                for c in cells
            }
        return cells
    if args.cells_command == "variety":
        which = VarietySpace(args.which)
        variety = service.variety(which)
        if args.point is None:
            return variety
        point = parse_vector(args.point, 3, "point")
        return {
            "variety": variety,
            "point": list(point),
            "residual": service.variety_residual(which, point),
        }
    space = CellSpace(args.space)
    size = len(service.coordinates(space))
    point = parse_vector(_inline_or_file(args, "point", "point"), size, "point")
    return service.classify(space, point)


def _cmd_sweep(ctx: _Context) -> Any:
    args = ctx.args
    use_case = SweepUseCase(ctx.settings)
    space = SweepSpace.SURFACE if args.surface is not None else SweepSpace(args.space)
    rows = use_case.rows(space, args.resolution, factor=args.surface or 1)
    exporter = CsvExporter(use_case.header(space))
    if args.output is None:
        exporter.write(rows, sys.stdout)
        return None
    count = exporter.export(rows, args.output)
    return {"path": str(args.output), "rows": count}


def _cmd_oracle(ctx: _Context) -> Any:
    args = ctx.args
    mu = _parse_mu(_inline_or_file(args, "mu", "mu"))
    if args.starts < 1:
        raise InputValidationError("starts", "must be at least 1")
    service = OracleService(MultistartNewtonSolver(ctx.settings), ctx.settings)
    if args.compare:
        return service.compare(mu, args.starts, args.seed)
    return service.solve(mu, args.starts, args.seed)


def _cmd_roundtrip(ctx: _Context) -> Any:
    if ctx.args.n < 1:
        raise InputValidationError("n", "must be at least 1")
    return RoundTripUseCase(ctx.settings).run(ctx.args.n, ctx.args.seed)


COMMANDS: dict[str, Callable[[_Context], Any]] = {
    "ik": _cmd_ik,
    "dkp": _cmd_dkp,
    "aspect": _cmd_aspect,
    "cells": _cmd_cells,
    "sweep": _cmd_sweep,
    "oracle": _cmd_oracle,
    "roundtrip": _cmd_roundtrip,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--geometry", help="JSON or TOML geometry file")

    parser = argparse.ArgumentParser(
        prog="triglide",
        description="Kinematics and cell analysis of the 3-PPPS parallel robot.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ik = sub.add_parser("ik", parents=[common], help="inverse kinematics of a pose")
    ik.add_argument("--pose", help='pose JSON, e.g. {"x":0,"y":0,"z":0,"q":[1,0,0,0]}')
    ik.add_argument("--file", help="read the pose JSON from a file")

    dkp = sub.add_parser("dkp", parents=[common], help="direct kinematics")
    dkp.add_argument("--mu", help='"mu2z,mu3z,mu3y" or a JSON array/object')
    dkp.add_argument("--joints", help="full joint vector JSON; prints platform poses")
    dkp.add_argument("--file", help="read mu from a file")

    aspect = sub.add_parser("aspect", parents=[common], help="aspect of an orientation")
    aspect.add_argument("--q", help='"q1,q2,q3,q4"')
    aspect.add_argument("--pose", help="pose JSON")
    aspect.add_argument("--file", help="read the pose JSON from a file")

    cells = sub.add_parser("cells", help="cell models of the joint space and the NN aspect")
    cells_sub = cells.add_subparsers(dest="cells_command", required=True)
    listing = cells_sub.add_parser("list", parents=[common], help="print a cell table")
    listing.add_argument("--space", choices=[s.value for s in CellSpace], default="joint")
    classify = cells_sub.add_parser("classify", parents=[common], help="locate a point")
    classify.add_argument("--space", choices=[s.value for s in CellSpace], default="joint")
    classify.add_argument("--point", help='"a,b,c"')
    classify.add_argument("--file", help="read the point from a file")
    variety = cells_sub.add_parser(
        "variety", parents=[common], help="discriminant variety and its residual"
    )
    variety.add_argument(
        "--which", choices=[v.value for v in VarietySpace], default="jointspace"
    )
    variety.add_argument("--point", help='"a,b,c"')

    sweep = sub.add_parser("sweep", parents=[common], help="CSV grid data")
    sweep.add_argument(
        "--space",
        choices=[SweepSpace.JOINT.value, SweepSpace.WORKSPACE.value],
        default="joint",
    )
    sweep.add_argument("--surface", type=int, choices=(1, 2), help="singular cylinder")
    sweep.add_argument("--resolution", type=int, default=50)
    sweep.add_argument("--output", help="CSV path; stdout when omitted")

    oracle = sub.add_parser("oracle", parents=[common], help="multistart Newton roots")
    oracle.add_argument("--mu", help='"mu2z,mu3z,mu3y"')
    oracle.add_argument("--file", help="read mu from a file")
    oracle.add_argument("--starts", type=int, default=None)
    oracle.add_argument("--seed", type=int, default=None)
    oracle.add_argument(
        "--compare", action="store_true", help="compare with the closed-form chain"
    )

    roundtrip = sub.add_parser(
        "roundtrip", parents=[common], help="IKP/DKP recovery on random poses"
    )
    roundtrip.add_argument("--n", type=int, default=1000)
    roundtrip.add_argument("--seed", type=int, default=0)
    return parser


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        loc = ".".join(str(p) for p in item.get("loc", ())) or error.title
        parts.append(f"invalid {loc}: {item.get('msg')}")
    return "; ".join(parts)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INVALID

    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "oracle":
        args.starts = settings.oracle_starts if args.starts is None else args.starts
        args.seed = settings.oracle_seed if args.seed is None else args.seed

    try:
        ctx = _Context(args, settings)
        result = COMMANDS[args.command](ctx)
        if result is not None:
            _emit(result, getattr(args, "format", "json"))
        return EXIT_OK
    except ValidationError as e:
        _logger.error("rejected input: %s", _describe(e))
        return EXIT_INVALID
    except ValueError as e:
        _logger.error("rejected input: %s", e)
        return EXIT_INVALID
    except Exception as e:  # pylint: disable=broad-exception-caught
        _logger.error("%s failed: %s", args.command, e, exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
