"""Brute-force reference implementations over full power sets

Nothing here takes facet shortcuts: families are explicit sets of subset
masks and every functor is the literal filter or generation rule. The audits
compare the fast services against these definitions.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Mapping, Optional, Tuple

from config import AUDIT_LIMIT, ORACLE_LIMIT
from models.complex import SimplicialComplex
from models.kinds import FunctorKind, SingleHat
from models.set_map import SetMap
from models.vertex_set import VertexSet
from services.adjoint_service import AdjointService
from services.complex_service import ComplexService
from utils.error_handler import PreconditionError, ensure_guard
from utils.helpers import submasks
from utils.rng import SeededGenerator

logger = logging.getLogger(__name__)

Functor = Callable[[SetMap, SimplicialComplex], SimplicialComplex]


@dataclass(frozen=True)
class DownSetFamily:
    """An explicit family of subsets of ``ground``"""

    ground: VertexSet
    members: FrozenSet[int]

    @classmethod
    def from_complex(cls, X: SimplicialComplex) -> "DownSetFamily":
        ensure_guard("down-set family", len(X.vertices), ORACLE_LIMIT)
        found = set()
        for facet in X.facet_masks:
            found.update(submasks(facet))
        return cls(X.vertices, frozenset(found))

    def to_complex(self) -> SimplicialComplex:
        size = len(self.ground)
        maximal = [
            m
            for m in self.members
            if not any(m | (1 << i) in self.members for i in range(size) if not m >> i & 1)
        ]
        return SimplicialComplex(self.ground, tuple(maximal))

    def is_down_closed(self) -> bool:
        return all(
            m & ~(1 << i) in self.members
            for m in self.members
            for i in range(len(self.ground))
            if m >> i & 1
        )

    def __contains__(self, mask: object) -> bool:
        return mask in self.members


def _all_masks(size: int) -> range:
    ensure_guard("oracle enumeration", size, ORACLE_LIMIT)
    return range(1 << size)


def _down_closure(masks) -> FrozenSet[int]:
    found = set()
    for m in masks:
        found.update(submasks(m))
    return frozenset(found)


def _up_closure(masks, size: int) -> FrozenSet[int]:
    full = (1 << size) - 1
    found = set()
    for m in masks:
        found.update(full & ~s for s in submasks(full & ~m))
    return frozenset(found)


class OracleService:
    """Definitional functors and the audits built on them"""

    @staticmethod
    def definitional_functor(kind: FunctorKind, f: SetMap, Z: DownSetFamily) -> DownSetFamily:
        """The five functors read straight off their definitions"""
        images = [_image(f, t) for t in _all_masks(len(f.domain))]

        if kind is FunctorKind.EE:
            return DownSetFamily(f.codomain, _down_closure(_image(f, d) for d in Z.members))
        if kind is FunctorKind.SE:
            return DownSetFamily(
                f.domain, frozenset(t for t, c in enumerate(images) if c in Z.members)
            )
        if kind is FunctorKind.SS:
            return DownSetFamily(
                f.codomain,
                frozenset(c for c in _all_masks(len(f.codomain)) if _preimage(f, c) in Z.members),
            )
        if kind is FunctorKind.SA:
            return DownSetFamily(
                f.domain,
                frozenset(t for t in _all_masks(len(f.domain)) if _core(f, t) in Z.members),
            )

        # AA: C survives unless some D outside Z has core C
        spoiled = {_core(f, d) for d in _all_masks(len(f.domain)) if d not in Z.members}
        return DownSetFamily(
            f.codomain, frozenset(c for c in _all_masks(len(f.codomain)) if c not in spoiled)
        )

    @staticmethod
    def singlehat_composite(
        p: SingleHat, q: SingleHat, f: SetMap
    ) -> Callable[[DownSetFamily], DownSetFamily]:
        """The double-hat functor obtained by applying hat ``q`` to subset map ``p``

        The subset maps are f(D) and core_f(D) from A to B and f⁻¹(C) from B
        to A. For an order map φ, the star hat pulls a down-set back, the
        shriek hat takes the down-closure of the image and the upper hat
        complements the up-closure of the image of the complement.
        """
        if p is SingleHat.STAR:
            phi, source, target = (lambda c: _preimage(f, c)), f.codomain, f.domain
        elif p is SingleHat.SHRIEK:
            phi, source, target = (lambda d: _image(f, d)), f.domain, f.codomain
        else:
            phi, source, target = (lambda d: _core(f, d)), f.domain, f.codomain

        def pull(family: DownSetFamily) -> DownSetFamily:
            _expect_ground(family, target)
            return DownSetFamily(
                source, frozenset(m for m in _all_masks(len(source)) if phi(m) in family.members)
            )

        def push_down(family: DownSetFamily) -> DownSetFamily:
            _expect_ground(family, source)
            return DownSetFamily(target, _down_closure(phi(m) for m in family.members))

        def push_up(family: DownSetFamily) -> DownSetFamily:
            _expect_ground(family, source)
            outside = [m for m in _all_masks(len(source)) if m not in family.members]
            spoiled = _up_closure((phi(m) for m in outside), len(target))
            return DownSetFamily(
                target, frozenset(m for m in _all_masks(len(target)) if m not in spoiled)
            )

        return {SingleHat.STAR: pull, SingleHat.SHRIEK: push_down, SingleHat.UPPER: push_up}[q]

    @staticmethod
    def alexander_dual(family: DownSetFamily) -> DownSetFamily:
        full = family.ground.full
        return DownSetFamily(
            family.ground,
            frozenset(m for m in _all_masks(len(family.ground)) if full & ~m not in family.members),
        )

    # === AUDITS ===

    @staticmethod
    def adjunction_audit(
        f: SetMap,
        trials: int,
        seed,
        functors: Optional[Mapping[FunctorKind, Functor]] = None,
    ) -> "AuditReport":
        """Check the adjoint chain along ``f`` on sampled pairs (X, Y)

        For every adjacent pair L ⊣ R: L(P) ⊆ Q ⟺ P ⊆ R(Q), R(Q) is a
        solution of L(P) ⊆ Q that contains P whenever P is, the unit and
        counit inequalities hold, and the interval of solutions of the middle
        functor is bounded by its neighbours.
        """
        ensure_guard("adjunction_audit", max(len(f.domain), len(f.codomain)), AUDIT_LIMIT)
        table: Mapping[FunctorKind, Functor] = functors or _default_functors()
        report = AuditReport()
        gen = seed if isinstance(seed, SeededGenerator) else SeededGenerator(seed)

        for trial, child in enumerate(gen.spawn(trials)):
            X = child.complex(f.domain)
            Y = child.complex(f.codomain)
            _audit_pair(report, table, f, X, Y, trial)
            report.trials += 1
        return report

    @staticmethod
    def oracle_audit(
        f: SetMap,
        Z_domain: SimplicialComplex,
        Z_codomain: SimplicialComplex,
        report: "AuditReport",
        trial: int = 0,
    ) -> None:
        """Compare ``AdjointService.apply`` with the definitions for all five kinds"""
        for kind in FunctorKind:
            Z = Z_domain if kind.is_pushforward else Z_codomain
            expected = OracleService.definitional_functor(kind, f, DownSetFamily.from_complex(Z))
            actual = AdjointService.apply(kind, f, Z)
            report.record(
                actual == expected.to_complex(),
                f"trial {trial}: {kind.value} along {f!r} on {Z!r} gave {actual!r}",
            )

    @staticmethod
    def full_audit(trials: int, max_vertices: int, seed) -> "AuditReport":
        """Random maps and complexes with up to ``max_vertices`` vertices per side"""
        ensure_guard("full_audit", max_vertices, AUDIT_LIMIT)
        report = AuditReport()
        gen = seed if isinstance(seed, SeededGenerator) else SeededGenerator(seed)

        for trial, child in enumerate(gen.spawn(trials)):
            A = child.vertex_set(child.randint(1, max_vertices), prefix="a")
            B = child.vertex_set(child.randint(1, max_vertices), prefix="b")
            f = child.map(A, B)
            X, Y = child.complex(A), child.complex(B)
            _audit_pair(report, _default_functors(), f, X, Y, trial)
            OracleService.oracle_audit(f, X, Y, report, trial)
            dual_ok = ComplexService.alexander_dual(X) == OracleService.alexander_dual(
                DownSetFamily.from_complex(X)
            ).to_complex()
            report.record(dual_ok, f"trial {trial}: alexander dual of {X!r}")
            report.trials += 1

        logger.info(f"Audit finished: {report.summary()}")
        return report


@dataclass
class AuditReport:
    trials: int = 0
    checks: int = 0
    failures: int = 0
    counterexamples: List[str] = field(default_factory=list)

    def record(self, ok: bool, description: str) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < 5:
                self.counterexamples.append(description)
                logger.warning(f"Audit failure: {description}")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def first_counterexample(self) -> Optional[str]:
        return self.counterexamples[0] if self.counterexamples else None

    def summary(self) -> str:
        return f"trials={self.trials} checks={self.checks} failures={self.failures}"


# === INTERNALS ===


def _image(f: SetMap, mask: int) -> int:
    result = 0
    for i, target in enumerate(f.assignment):
        if mask >> i & 1:
            result |= 1 << target
    return result


def _preimage(f: SetMap, mask: int) -> int:
    result = 0
    for i, target in enumerate(f.assignment):
        if mask >> target & 1:
            result |= 1 << i
    return result


def _core(f: SetMap, mask: int) -> int:
    """Codomain elements with no preimage outside ``mask``"""
    result = (1 << len(f.codomain)) - 1
    for i, target in enumerate(f.assignment):
        if not mask >> i & 1:
            result &= ~(1 << target)
    return result


def _expect_ground(family: DownSetFamily, ground: VertexSet) -> None:
    if family.ground != ground:
        raise PreconditionError(f"family on {family.ground!r}, expected {ground!r}")


def _default_functors() -> Dict[FunctorKind, Functor]:
    return {
        kind: (lambda f, Z, kind=kind: AdjointService.apply(kind, f, Z)) for kind in FunctorKind
    }


_PAIRS: Tuple[Tuple[FunctorKind, FunctorKind], ...] = (
    (FunctorKind.EE, FunctorKind.SE),
    (FunctorKind.SE, FunctorKind.SS),
    (FunctorKind.SS, FunctorKind.SA),
    (FunctorKind.SA, FunctorKind.AA),
)


def _audit_pair(
    report: AuditReport,
    table: Mapping[FunctorKind, Functor],
    f: SetMap,
    X: SimplicialComplex,
    Y: SimplicialComplex,
    trial: int,
) -> None:
    for left, right in _PAIRS:
        # left pushes forward from A when it is EE or SS, otherwise pulls back
        P, Q = (X, Y) if left.is_pushforward else (Y, X)
        L, R = table[left], table[right]
        tag = f"trial {trial}: {left.value} ⊣ {right.value}"

        LP, RQ = L(f, P), R(f, Q)
        report.record((LP <= Q) == (P <= RQ), f"{tag} biconditional on {P!r}, {Q!r}")
        report.record(L(f, RQ) <= Q, f"{tag} counit on {Q!r}")
        report.record(P <= R(f, LP), f"{tag} unit on {P!r}")

    # the solutions of SE(Z) = X form the interval [EE(X), SS(X)], likewise for SS and SA
    for middle, below, above, target in (
        (FunctorKind.SE, FunctorKind.EE, FunctorKind.SS, X),
        (FunctorKind.SS, FunctorKind.SE, FunctorKind.SA, Y),
        (FunctorKind.SA, FunctorKind.SS, FunctorKind.AA, X),
    ):
        lower, upper = table[below](f, target), table[above](f, target)
        solvable = table[middle](f, lower) == target
        report.record(
            solvable == (table[middle](f, upper) == target),
            f"trial {trial}: {middle.value} interval ends disagree for {target!r}",
        )
        if solvable:
            report.record(lower <= upper, f"trial {trial}: {middle.value} interval inverted")
