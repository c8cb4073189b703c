"""Inverse-semigroup recognition: unique inverses, idempotent semilattice,
natural partial order, and the Clifford test."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NoInverseError,
    NonUniqueInverseError,
    NotASemigroupError,
    NotIdempotentError,
    OrderAxiomViolation,
    TheoremViolation,
)
from .report import Verdict
from .tables import CayleyTable, idempotents, is_associative, is_regular


@dataclass(frozen=True)
class InverseSemigroupAnalysis:
    """A table together with its inverse map, idempotents, and natural order.

    leq holds the pairs (a, b) with a = e·b for some idempotent e; restricted to
    the idempotents it is a meet-semilattice whose meet is the product.
    """

    table: CayleyTable
    inverse_map: tuple[int, ...]
    idempotent_set: tuple[int, ...]
    leq: frozenset[tuple[int, int]]

    def inverse(self, a):
        return self.inverse_map[a - 1]

    def leq_holds(self, a, b):
        return (a, b) in self.leq

    def below(self, b):
        """Elements a with a <= b, ascending."""
        return tuple(a for a in self.table.elements() if (a, b) in self.leq)


def generalized_inverses(t: CayleyTable, a: int) -> tuple[int, ...]:
    return tuple(
        x
        for x in t.elements()
        if t.product(t.product(a, x), a) == a and t.product(t.product(x, a), x) == x
    )


def analyze_inverse(t: CayleyTable) -> InverseSemigroupAnalysis:
    """Succeeds iff t is associative and every element has exactly one
    generalized inverse; the returned analysis carries the verified order."""
    assoc = is_associative(t)
    if not assoc:
        raise NotASemigroupError(assoc.witness)
    inv = []
    for a in t.elements():
        candidates = generalized_inverses(t, a)
        if not candidates:
            raise NoInverseError(a)
        if len(candidates) > 1:
            raise NonUniqueInverseError(a, candidates[0], candidates[1])
        inv.append(candidates[0])
    idems = idempotents(t)
    leq = natural_partial_order(t, idems)
    return InverseSemigroupAnalysis(t, tuple(inv), idems, leq)


def natural_partial_order(t: CayleyTable, idems=None) -> frozenset:
    """a <= b iff a = e·b for some idempotent e; verified to be a partial order."""
    if idems is None:
        idems = idempotents(t)
    pairs = frozenset(
        (a, b)
        for a in t.elements()
        for b in t.elements()
        if any(t.product(e, b) == a for e in idems)
    )
    for a in t.elements():
        if (a, a) not in pairs:
            raise OrderAxiomViolation(f"not reflexive at {a}")
    for a, b in pairs:
        if a != b and (b, a) in pairs:
            raise OrderAxiomViolation(f"not antisymmetric at {(a, b)}")
        for c in t.elements():
            if (b, c) in pairs and (a, c) not in pairs:
                raise OrderAxiomViolation(f"not transitive at {(a, b, c)}")
    return pairs


@dataclass(frozen=True)
class InverseCharacterization:
    """Regularity and idempotent commutativity against inverse-ness; the
    equivalence flag must hold on every semigroup."""

    is_regular: bool
    idempotents_commute: bool
    is_inverse: bool

    @property
    def equivalence_holds(self):
        return (self.is_regular and self.idempotents_commute) == self.is_inverse


def characterize_inverse(t: CayleyTable) -> InverseCharacterization:
    regular = bool(is_regular(t))  # raises NotASemigroupError if not associative
    idems = idempotents(t)
    commute = all(
        t.product(e, f) == t.product(f, e) for e in idems for f in idems
    )
    try:
        analyze_inverse(t)
        inverse = True
    except (NoInverseError, NonUniqueInverseError):
        inverse = False
    rep = InverseCharacterization(regular, commute, inverse)
    if not rep.equivalence_holds:
        raise TheoremViolation(
            f"regular+commuting-idempotents does not match inverse-ness on order {t.n}"
        )
    return rep


def idempotent_meet(analysis: InverseSemigroupAnalysis, e: int, f: int) -> int:
    """The meet of two idempotents is their product; verified to be the glb."""
    idems = analysis.idempotent_set
    if e not in idems:
        raise NotIdempotentError(e)
    if f not in idems:
        raise NotIdempotentError(f)
    m = analysis.table.product(e, f)
    leq = analysis.leq
    assert (m, e) in leq and (m, f) in leq, f"{m} is not a lower bound of {e},{f}"
    for g in idems:
        if (g, e) in leq and (g, f) in leq and (g, m) not in leq:
            raise TheoremViolation(f"product {m} is not the glb of idempotents {e},{f}")
    return m


def is_clifford(analysis: InverseSemigroupAnalysis) -> Verdict:
    """x·x' = x'·x for all x; witness is the least violating x."""
    t = analysis.table
    for x in t.elements():
        xi = analysis.inverse(x)
        if t.product(x, xi) != t.product(xi, x):
            return Verdict(False, (x,))
    return Verdict(True)


def hasse_covers(analysis: InverseSemigroupAnalysis) -> tuple[tuple[int, int], ...]:
    """Covering pairs (e, f), e covered by f, of the idempotent semilattice."""
    idems = analysis.idempotent_set
    leq = analysis.leq
    covers = []
    for e in idems:
        for f in idems:
            if e == f or (e, f) not in leq:
                continue
            if any(
                g != e and g != f and (e, g) in leq and (g, f) in leq for g in idems
            ):
                continue
            covers.append((e, f))
    return tuple(sorted(covers))


def analysis_to_json(analysis: InverseSemigroupAnalysis) -> dict:
    t = analysis.table
    idems = analysis.idempotent_set
    return {
        "schema_version": 1,
        "kind": "inverse-analysis",
        "order": t.n,
        "table": [list(row) for row in t.rows],
        "inverse_map": list(analysis.inverse_map),
        "idempotents": list(idems),
        "leq": sorted([a, b] for (a, b) in analysis.leq),
        "meets": sorted(
            [e, f, t.product(e, f)] for e in idems for f in idems
        ),
    }


def hasse_dot(analysis: InverseSemigroupAnalysis) -> str:
    """Covering relation of the idempotent semilattice, lower element first."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for e in analysis.idempotent_set:
        lines.append(f'  "{e}";')
    for e, f in hasse_covers(analysis):
        lines.append(f'  "{e}" -> "{f}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
