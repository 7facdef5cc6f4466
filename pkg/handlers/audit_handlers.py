"""The ``check`` verb: randomized audit against the brute-force oracle"""

import logging
import os

from config import DEFAULT_MAX_VERTICES, DEFAULT_SEED, DEFAULT_TRIALS, EXIT_INVALID, SRCX_SEED
from handlers.router import CommandRouter, arg
from services.oracle_service import OracleService
from utils.error_handler import safe_operation
from utils.validators import parse_seed
from validation.schemas import CheckOptions

logger = logging.getLogger(__name__)

router = CommandRouter()


@router.command(
    "check",
    help="Audit the functors, duals and adjunctions on random inputs",
    arguments=(
        arg("--trials", type=int, default=DEFAULT_TRIALS),
        arg("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES, dest="max_vertices"),
        arg("--seed", type=int, default=DEFAULT_SEED),
    ),
)
def check(args, out) -> int:
    """SRCX_SEED, when set to a valid seed, replaces ``--seed``"""
    seed = parse_seed(os.getenv("SRCX_SEED", SRCX_SEED))
    if seed is not None and seed != args.seed:
        logger.info(f"SRCX_SEED={seed} overrides --seed {args.seed}")
    options = CheckOptions(
        trials=args.trials,
        max_vertices=args.max_vertices,
        seed=args.seed if seed is None else seed,
    )

    with safe_operation("check", trials=options.trials, max_vertices=options.max_vertices):
        report = OracleService.full_audit(options.trials, options.max_vertices, options.seed)

    out.write(f"seed: {options.seed}\n")
    out.write(f"trials: {report.trials}\n")
    out.write(f"checks: {report.checks}\n")
    out.write(f"failures: {report.failures}\n")
    if report.passed:
        out.write("PASS\n")
        return 0

    out.write("FAIL\n")
    out.write(f"counterexample: {report.first_counterexample}\n")
    return EXIT_INVALID
