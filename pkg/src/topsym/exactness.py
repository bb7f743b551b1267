"""Exact-sequence and duality checks on the homology level.

Maps between homology groups are computed with chain-level witnesses:
the image of each basis class is re-expressed in the target basis, and
the bounding chain that reconciles the two representatives is solved
for and verified exactly.  Exactness of a two-map segment is then the
pair of facts "composition vanishes" and "rank(in) + rank(out) equals
the middle dimension", which together say image = kernel as subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .complexes import (
    BettiTable,
    Chain,
    ComplexPair,
    HomologyBasis,
    SimplicialComplex,
    betti,
    boundary_chain,
    check_pseudomanifold,
)
from .errors import InputError
from .gf2 import Gf2Matrix
from .spaces import BoundarySplit


@dataclass(frozen=True)
class HomologyMap:
    """Per-degree matrices of a homology-level map in stored bases.

    ``matrices`` is keyed by source degree; the matrix in degree k maps
    into target degree ``k + degree_shift``.  ``witnesses[k][i]`` is the
    chain whose boundary connects the pushed i-th source representative
    to the stored combination of target representatives.
    """

    source: HomologyBasis
    target: HomologyBasis
    degree_shift: int
    matrices: Dict[int, Gf2Matrix]
    witnesses: Dict[int, Tuple[Chain, ...]]

    def matrix(self, k: int) -> Gf2Matrix:
        if k in self.matrices:
            return self.matrices[k]
        return Gf2Matrix.zero(self.target.betti_dim(k + self.degree_shift), self.source.betti_dim(k))

    def rank(self, k: int) -> int:
        return self.matrix(k).rank()


def _map_on_homology(
    source: HomologyBasis,
    target: HomologyBasis,
    push: Callable[[int, Chain], Chain],
    degree_shift: int = 0,
) -> HomologyMap:
    matrices: Dict[int, Gf2Matrix] = {}
    witnesses: Dict[int, Tuple[Chain, ...]] = {}
    for k in source.degrees():
        n_target = target.betti_dim(k + degree_shift)
        cols: List[int] = []
        wits: List[Chain] = []
        for rep in source.representatives(k):
            image = push(k, rep)
            coeffs, witness = target.express_class(k + degree_shift, image)
            cols.append(coeffs)
            wits.append(witness)
        matrices[k] = Gf2Matrix.from_columns(cols, n_target)
        witnesses[k] = tuple(wits)
    return HomologyMap(source, target, degree_shift, matrices, witnesses)


def induced_map(source_pair: ComplexPair, target_pair: ComplexPair) -> HomologyMap:
    """Map induced by an inclusion of pairs on relative homology."""
    if not source_pair.ambient.is_subcomplex_of(target_pair.ambient):
        raise InputError("source ambient is not included in target ambient")
    if not source_pair.sub.is_subcomplex_of(target_pair.sub):
        raise InputError("source subcomplex is not included in target subcomplex")
    source = HomologyBasis(source_pair)
    target = HomologyBasis(target_pair)
    drop = target_pair.sub.faces
    return _map_on_homology(source, target, lambda k, c: frozenset(s for s in c if s not in drop))


def connecting_map(pair: ComplexPair, degree: int) -> HomologyMap:
    """Boundary map from relative degree ``degree + 1`` to the reduced
    homology of the subcomplex in ``degree``.

    Relative representatives lift to the ambient complex unchanged;
    their boundaries are cycles in the subcomplex.
    """
    source = HomologyBasis(pair)
    target = HomologyBasis(ComplexPair.absolute(pair.sub), augmented=True)
    full = _connecting(source, target)
    k = degree + 1
    return HomologyMap(source, target, -1, {k: full.matrix(k)}, {k: full.witnesses.get(k, ())})


def _connecting(source: HomologyBasis, target: HomologyBasis) -> HomologyMap:
    def push(k: int, chain: Chain) -> Chain:
        image = boundary_chain(chain, frozenset(), augmented=True)
        outside = [s for s in image if s != () and s not in source.pair.sub.faces]
        if outside:
            raise AssertionError("relative cycle has boundary outside the subcomplex: %r" % (outside[0],))
        return image

    return _map_on_homology(source, target, push, degree_shift=-1)


@dataclass(frozen=True)
class SlotCheck:
    """Exactness data at one group of the long exact sequence."""

    degree: int
    at: str
    middle_dim: int
    incoming_rank: int
    outgoing_rank: int
    composition_zero: bool

    @property
    def exact(self) -> bool:
        return self.composition_zero and self.incoming_rank + self.outgoing_rank == self.middle_dim


@dataclass(frozen=True)
class LesReport:
    pair: ComplexPair
    slots: Tuple[SlotCheck, ...]

    @property
    def passed(self) -> bool:
        return all(s.exact for s in self.slots)

    @property
    def first_failure(self) -> Optional[SlotCheck]:
        for s in self.slots:
            if not s.exact:
                return s
        return None


def _slot(degree: int, at: str, middle: int, incoming: Gf2Matrix, outgoing: Gf2Matrix) -> SlotCheck:
    composed_zero = outgoing.mat_mul(incoming).is_zero()
    return SlotCheck(degree, at, middle, incoming.rank(), outgoing.rank(), composed_zero)


def les_exactness_check(pair: ComplexPair) -> LesReport:
    """Verify the reduced long exact sequence of the pair, slot by slot.

    The sequence runs ... -> H~_k(sub) -> H~_k(ambient) -> H_k(pair) ->
    H~_{k-1}(sub) -> ... and is checked at every group from the top
    degree down to the augmentation degree.
    """
    sub_h = HomologyBasis(ComplexPair.absolute(pair.sub), augmented=True)
    amb_h = HomologyBasis(ComplexPair.absolute(pair.ambient), augmented=True)
    rel_h = HomologyBasis(pair)

    into_ambient = _map_on_homology(sub_h, amb_h, lambda k, c: c)
    onto_relative = _map_on_homology(
        amb_h, rel_h, lambda k, c: frozenset(s for s in c if s != () and s not in pair.sub.faces)
    )
    connect = _connecting(rel_h, sub_h)

    slots = []
    # One degree above the top dimension, all groups vanish; starting
    # there covers the subcomplex slot in the top degree as well.
    for k in range(pair.ambient.dim + 1, -2, -1):
        slots.append(
            _slot(k, "ambient", amb_h.betti_dim(k), into_ambient.matrix(k), onto_relative.matrix(k))
        )
        slots.append(
            _slot(k, "pair", rel_h.betti_dim(k), onto_relative.matrix(k), connect.matrix(k))
        )
        slots.append(
            _slot(k - 1, "sub", sub_h.betti_dim(k - 1), connect.matrix(k), into_ambient.matrix(k - 1))
        )
    return LesReport(pair, tuple(slots))


@dataclass(frozen=True)
class MayerVietorisReport:
    overlap_table: BettiTable
    total_table: BettiTable
    parts_table: BettiTable

    @property
    def overlap_trivial(self) -> bool:
        return self.overlap_table.total() == 0

    @property
    def passed(self) -> Optional[bool]:
        """True/False when the overlap vanishes; None when obstructed."""
        if not self.overlap_trivial:
            return None
        return self.total_table.same_dims(self.parts_table)


def mayer_vietoris_check(
    total: SimplicialComplex,
    piece_a: SimplicialComplex,
    piece_b: SimplicialComplex,
    sub_a: SimplicialComplex,
    sub_b: SimplicialComplex,
) -> MayerVietorisReport:
    """Additivity of relative homology over a two-piece cover.

    When the overlap pair has vanishing homology, the dimensions of
    H(total, sub_a+sub_b) must equal the degreewise sums over the two
    pieces; a nonvanishing overlap is reported as an obstruction.
    """
    if not (piece_a.faces | piece_b.faces) >= total.faces:
        missing = sorted(total.faces - (piece_a.faces | piece_b.faces))[0]
        raise InputError("pieces do not cover the complex; %r is missing" % (missing,))
    if not sub_a.is_subcomplex_of(piece_a) or not sub_b.is_subcomplex_of(piece_b):
        raise InputError("marked subcomplexes must sit inside their pieces")
    overlap = betti(ComplexPair(piece_a.intersection(piece_b), sub_a.intersection(sub_b)))
    lhs = betti(ComplexPair(total, sub_a.union(sub_b)))
    rhs = betti(ComplexPair(piece_a, sub_a)).added(betti(ComplexPair(piece_b, sub_b)))
    return MayerVietorisReport(overlap, lhs, rhs)


@dataclass(frozen=True)
class DualityReport:
    dimension: int
    negative_table: BettiTable
    positive_table: BettiTable

    @property
    def passed(self) -> bool:
        lhs = self.negative_table.as_dict()
        rhs = {self.dimension - k: d for k, d in self.positive_table.entries}
        return lhs == rhs


def lefschetz_duality_check(split: BoundarySplit) -> DualityReport:
    """Compare H_k(domain, negative) with H_{d-k}(domain, positive).

    Over a field the two tables must be mirror images; the domain has to
    be a genuine pseudomanifold (pure, ridge-incidence at most two,
    strongly connected) for the assertion to be meaningful, and anything
    else is rejected.
    """
    d = check_pseudomanifold(split.domain)
    return DualityReport(
        d,
        betti(split.negative_pair()),
        betti(split.positive_pair()),
    )
