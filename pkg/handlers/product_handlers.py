"""The ``product`` verb"""

import logging

from config import PRODUCT_TAGS
from handlers.formats import load_complex, render_complex
from handlers.router import CommandRouter, arg
from services.ideal_service import IdealService
from services.product_service import ProductService
from utils.error_handler import safe_operation
from validation.schemas import ProductOptions

logger = logging.getLogger(__name__)

router = CommandRouter()

KIND_CHOICES = PRODUCT_TAGS + tuple(tag.replace("_", "-") for tag in PRODUCT_TAGS)


@router.command(
    "product",
    help="One of the eight products of two complexes",
    arguments=(
        arg("--kind", required=True, choices=KIND_CHOICES),
        arg("--route", default="direct", choices=("direct", "adjoint", "ideal")),
        arg("left"),
        arg("right"),
    ),
)
def product(args, out) -> int:
    """All three routes print the same complex"""
    options = ProductOptions(kind=args.kind, route=args.route)
    X = load_complex(args.left)
    Y = load_complex(args.right)
    kind = options.kind

    with safe_operation("product", kind=kind.value, route=options.route):
        if options.route == "ideal":
            I_X, I_Y = IdealService.sr_ideal(X), IdealService.sr_ideal(Y)
            if kind.is_cartesian:
                ideal = ProductService.cartesian_product_ideal(
                    kind, I_X, I_Y, X.vertices, Y.vertices
                )
            else:
                ideal = ProductService.union_product_ideal(kind, I_X, I_Y)
            result = IdealService.complex_of_ideal(ideal)
        elif options.route == "adjoint":
            if kind.is_cartesian:
                result = ProductService.cartesian_product_by_projections(kind, X, Y)
            else:
                result = ProductService.union_product(kind, X, Y)
        elif kind.is_cartesian:
            result = ProductService.cartesian_product(kind, X, Y)
        else:
            result = ProductService.union_product_direct(kind, X, Y)

    out.write(render_complex(result))
    return 0
