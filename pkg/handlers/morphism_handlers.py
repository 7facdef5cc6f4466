"""The ``morphism`` verb: validate a morphism and print its ring map"""

import logging

from config import CATEGORY_TAGS, EXIT_INVALID
from handlers.formats import load_complex, load_map, render_monomial
from handlers.router import CommandRouter, arg
from services.category_service import CategoryService
from services.ideal_service import IdealService
from utils.error_handler import InconsistencyError, safe_operation
from validation.schemas import MorphismOptions

logger = logging.getLogger(__name__)

router = CommandRouter()


@router.command(
    "morphism",
    help="Check a map against SC0, SC1 or SC2 and print the ring map",
    arguments=(
        arg("--category", required=True, choices=CATEGORY_TAGS),
        arg("--map", dest="map_path", help="map file; without it every morphism is listed"),
        arg("source"),
        arg("target"),
    ),
)
def morphism(args, out) -> int:
    """Prints ``VALID category=<tag>`` or ``INVALID reason=<generator>``

    The reason is a generator of the target's ideal whose image leaves the
    source's ideal. The ring map lines follow either way.
    """
    options = MorphismOptions(category=args.category)
    X = load_complex(args.source)
    Y = load_complex(args.target)
    category = options.category

    if args.map_path is None:
        maps = CategoryService.enumerate_morphisms(category, X, Y)
        out.write(f"morphisms: {len(maps)}\n")
        for f in maps:
            pairs = " ".join(f"{a}->{b}" for a, b in sorted(f.as_dict().items()))
            out.write(f"map: {pairs}".rstrip() + "\n")
        return 0

    f = load_map(args.map_path)
    with safe_operation("morphism", category=category.value):
        valid = CategoryService.is_morphism(category, f, X, Y)
        descriptor = CategoryService.ring_hom(category, f)
        failing = CategoryService.first_failing_generator(
            descriptor, IdealService.sr_ideal(Y), IdealService.sr_ideal(X)
        )
        if valid != (failing is None):
            raise InconsistencyError(
                f"{category.value}: complex test says {valid}, ring map test disagrees"
            )

    if valid:
        out.write(f"VALID category={category.value}\n")
    else:
        reason = render_monomial(Y.vertices, failing, prefix="y")
        out.write(f"INVALID reason={reason}\n")
    for line in descriptor.render(source_prefix="y", target_prefix="x"):
        out.write(line + "\n")
    return 0 if valid else EXIT_INVALID
