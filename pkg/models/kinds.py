"""Tags for functors, categories and products"""

from enum import Enum


class FunctorKind(Enum):
    """The five functors between complexes on the two ends of a set map

    EE, SS and AA push a complex from the domain to the codomain; SE and SA
    pull a complex back from the codomain.
    """

    EE = "ee"  # shriek-shriek
    SE = "se"  # star-shriek
    SS = "ss"  # star-star
    SA = "sa"  # star-upper
    AA = "aa"  # upper-upper

    @property
    def is_pushforward(self) -> bool:
        return self in (FunctorKind.EE, FunctorKind.SS, FunctorKind.AA)

    @classmethod
    def from_tag(cls, tag: str) -> "FunctorKind":
        return cls(tag.strip().lower())


# Left-to-right order of the adjoint chain EE ⊣ SE ⊣ SS ⊣ SA ⊣ AA
ADJOINT_CHAIN = (
    FunctorKind.EE,
    FunctorKind.SE,
    FunctorKind.SS,
    FunctorKind.SA,
    FunctorKind.AA,
)


class Category(Enum):
    SC0 = "sc0"
    SC1 = "sc1"
    SC2 = "sc2"

    @classmethod
    def from_tag(cls, tag: str) -> "Category":
        return cls(tag.strip().lower())


class RingHomFlavor(Enum):
    SUM_OF_VARS = "sum_of_vars"
    SQUAREFREE_MONOMIAL = "squarefree_monomial"
    SINGLE_VARIABLE = "single_variable"


CATEGORY_FLAVOR = {
    Category.SC0: RingHomFlavor.SUM_OF_VARS,
    Category.SC1: RingHomFlavor.SQUAREFREE_MONOMIAL,
    Category.SC2: RingHomFlavor.SINGLE_VARIABLE,
}


class ProductKind(Enum):
    DISJOINT_UNION = "disjoint_union"
    EXTERNAL_JOIN = "external_join"
    OR_UNION = "or_union"
    CONE_UNION = "cone_union"
    CART_MEET_LOWER = "cart_meet_lower"
    CART_JOIN_LOWER = "cart_join_lower"
    CART_MEET_UPPER = "cart_meet_upper"
    CART_JOIN_UPPER = "cart_join_upper"

    @property
    def is_cartesian(self) -> bool:
        return self.value.startswith("cart_")

    @property
    def is_upper(self) -> bool:
        return self.value.endswith("_upper")

    @property
    def is_meet(self) -> bool:
        return self in (
            ProductKind.EXTERNAL_JOIN,
            ProductKind.CONE_UNION,
            ProductKind.CART_MEET_LOWER,
            ProductKind.CART_MEET_UPPER,
        )

    @classmethod
    def from_tag(cls, tag: str) -> "ProductKind":
        return cls(tag.strip().lower().replace("-", "_"))


class SingleHat(Enum):
    """The three maps a set map induces on subsets"""

    SHRIEK = "!"
    STAR = "*"
    UPPER = "¡"
