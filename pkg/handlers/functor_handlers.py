"""The ``apply`` verb"""

import logging

from config import FUNCTOR_TAGS
from handlers.formats import load_complex, load_map, render_complex
from handlers.router import CommandRouter, arg
from services.adjoint_service import AdjointService
from utils.error_handler import safe_operation
from validation.schemas import ApplyOptions

logger = logging.getLogger(__name__)

router = CommandRouter()


@router.command(
    "apply",
    help="Apply one of the five functors along a map",
    arguments=(
        arg("--functor", required=True, choices=FUNCTOR_TAGS),
        arg("--map", required=True, dest="map_path", help="map file"),
        arg("--interval", action="store_true", help="print the solution interval instead"),
        arg("complex"),
    ),
)
def apply_functor(args, out) -> int:
    """EE, SS and AA take a complex on the domain; SE and SA one on the codomain

    With ``--interval`` (se, ss, sa only) the input is the target and the
    lower and upper ends of the solution interval are printed, or ``empty``.
    """
    options = ApplyOptions(functor=args.functor)
    f = load_map(args.map_path)
    Z = load_complex(args.complex)

    with safe_operation("apply", functor=options.functor.value, domain=len(f.domain)):
        if args.interval:
            interval = AdjointService.fiber_interval(options.functor, f, Z)
            if interval.empty:
                out.write("interval: empty\n")
                return 0
            out.write("# lower\n" + render_complex(interval.lower))
            out.write("# upper\n" + render_complex(interval.upper))
            return 0

        out.write(render_complex(AdjointService.apply(options.functor, f, Z)))
    return 0
