"""Simplicial complexes, pairs, and their homology over the two-element field.

A simplex is a strictly ascending tuple of vertex labels; a complex is a
face-closed set of simplices.  Vertex labels are integers in user-facing
data (space files, catalog entries); gluing constructions tag labels with
tuples internally, which sort and hash just as well.

Relative homology of a pair (X, A) is computed from the quotient chain
complex: the cells are the simplices of X not in A, and faces landing in
A are dropped.  Reduced homology augments with the empty simplex, written
``()``, as the single cell in degree -1; the empty complex therefore has
a one-dimensional reduced group in degree -1 and nothing else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .errors import InputError, PseudomanifoldError
from .gf2 import Gf2Matrix

Simplex = Tuple
Chain = FrozenSet  # GF(2) chain: a set of simplices; addition is symmetric difference

EMPTY_SIMPLEX: Simplex = ()


def _as_simplex(vertices: Iterable) -> Simplex:
    s = tuple(sorted(vertices))
    if len(set(s)) != len(s):
        raise InputError("simplex has repeated vertices: %r" % (vertices,))
    return s


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices, immutable after construction."""

    faces: frozenset

    def __post_init__(self):
        for s in self.faces:
            if not isinstance(s, tuple) or len(s) == 0:
                raise InputError("faces must be nonempty vertex tuples")
            if list(s) != sorted(set(s)):
                raise InputError("face %r is not strictly ascending" % (s,))
            for k in range(len(s)):
                face = s[:k] + s[k + 1 :]
                if face and face not in self.faces:
                    raise InputError("complex is not face-closed at %r" % (s,))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(frozenset())

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable]) -> "SimplicialComplex":
        """Face closure of the given simplices."""
        faces = set()
        for m in maximal:
            s = _as_simplex(m)
            for k in range(1, len(s) + 1):
                faces.update(itertools.combinations(s, k))
        return cls(frozenset(faces))

    @cached_property
    def dim(self) -> int:
        """Top dimension present; -1 for the empty complex."""
        return max((len(s) - 1 for s in self.faces), default=-1)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for s in self.faces for v in s)

    def simplices(self, k: int) -> Tuple[Simplex, ...]:
        """Simplices of dimension ``k`` in sorted order."""
        return tuple(sorted(s for s in self.faces if len(s) == k + 1))

    def counts(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for s in self.faces:
            out[len(s) - 1] = out.get(len(s) - 1, 0) + 1
        return out

    def maximal_simplices(self) -> Tuple[Simplex, ...]:
        """Simplices that are not a proper face of any other, sorted."""
        maximal = []
        for s in self.faces:
            vs = set(s)
            if not any(len(t) > len(s) and vs.issubset(t) for t in self.faces):
                maximal.append(s)
        return tuple(sorted(maximal))

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.faces <= other.faces

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.faces | other.faces)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.faces & other.faces)

    def induced_on(self, vertex_set) -> "SimplicialComplex":
        """Subcomplex of faces whose vertices all lie in ``vertex_set``."""
        vs = frozenset(vertex_set)
        return SimplicialComplex(frozenset(s for s in self.faces if vs.issuperset(s)))

    def relabel(self, mapping) -> "SimplicialComplex":
        """Apply a vertex relabeling; ``mapping`` is a dict or callable."""
        get = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return SimplicialComplex(frozenset(_as_simplex(get(v) for v in s) for s in self.faces))

    def relabel_to_integers(self) -> "SimplicialComplex":
        """Canonical integer labels: sorted vertex order becomes 0,1,2,..."""
        mapping = {v: i for i, v in enumerate(sorted(self.vertices))}
        return self.relabel(mapping)


def build_complex(maximal_simplices: Iterable[Iterable]) -> SimplicialComplex:
    """Face closure of the given maximal simplices.

    Rebuilding from ``maximal_simplices()`` of the result is the identity.
    """
    return SimplicialComplex.from_maximal(maximal_simplices)


@dataclass(frozen=True)
class ComplexPair:
    """A complex with a distinguished subcomplex."""

    ambient: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        if not self.sub.is_subcomplex_of(self.ambient):
            extra = sorted(self.sub.faces - self.ambient.faces)
            raise InputError("sub is not a subcomplex of ambient; first offender %r" % (extra[0],))

    @classmethod
    def absolute(cls, ambient: SimplicialComplex) -> "ComplexPair":
        return cls(ambient, SimplicialComplex.empty())

    def cells(self, k: int) -> Tuple[Simplex, ...]:
        """Relative k-cells: simplices of ambient not in sub, sorted."""
        return tuple(s for s in self.ambient.simplices(k) if s not in self.sub.faces)

    def cell_counts(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for s in self.ambient.faces:
            if s not in self.sub.faces:
                out[len(s) - 1] = out.get(len(s) - 1, 0) + 1
        return out


@dataclass(frozen=True)
class BettiTable:
    """Dimension table of a homology computation; zero entries are dropped."""

    flavor: str
    entries: tuple  # sorted ((degree, dim), ...)

    @classmethod
    def from_dict(cls, flavor: str, dims: Dict[int, int]) -> "BettiTable":
        return cls(flavor, tuple(sorted((k, d) for k, d in dims.items() if d)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def dim(self, k: int) -> int:
        return dict(self.entries).get(k, 0)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    def total(self) -> int:
        return sum(d for _, d in self.entries)

    def same_dims(self, other: "BettiTable") -> bool:
        """Degreewise equality, ignoring the flavor tag."""
        return self.entries == other.entries

    def scaled(self, factor: int) -> "BettiTable":
        return BettiTable(self.flavor, tuple((k, factor * d) for k, d in self.entries))

    def added(self, other: "BettiTable") -> "BettiTable":
        dims = self.as_dict()
        for k, d in other.entries:
            dims[k] = dims.get(k, 0) + d
        return BettiTable.from_dict(self.flavor, dims)


def _chain_boundary(simplex: Simplex) -> List[Simplex]:
    return [simplex[:k] + simplex[k + 1 :] for k in range(len(simplex))]


def boundary_chain(chain: Iterable[Simplex], drop: frozenset, augmented: bool) -> Chain:
    """Boundary of a GF(2) chain, discarding faces in ``drop``.

    With ``augmented`` the empty simplex appears as the face of each
    vertex, which realizes the augmentation map.
    """
    acc = set()
    for s in chain:
        for f in _chain_boundary(s):
            if f == EMPTY_SIMPLEX and not augmented:
                continue
            if f in drop:
                continue
            acc.symmetric_difference_update((f,))
    return frozenset(acc)


class HomologyBasis:
    """Chain complex of a pair with homology bases and class arithmetic.

    Cells in degree k are the relative k-cells in sorted order; in
    augmented (reduced) mode degree -1 holds the empty simplex.  Cycle
    bases come from the canonical echelon kernel, and the stored
    homology representatives are the kernel vectors that survive a rank
    extension over the boundary space, so all bases are reproducible.
    """

    def __init__(self, pair: ComplexPair, augmented: bool = False):
        if augmented and len(pair.sub) > 0:
            raise InputError("reduced homology is defined for a bare complex, not a genuine pair")
        self.pair = pair
        self.augmented = augmented
        self.min_degree = -1 if augmented else 0
        self.max_degree = pair.ambient.dim
        self._cells: Dict[int, Tuple[Simplex, ...]] = {}
        self._index: Dict[int, Dict[Simplex, int]] = {}
        for k in range(self.min_degree, self.max_degree + 1):
            cells = (EMPTY_SIMPLEX,) if k == -1 else pair.cells(k)
            self._cells[k] = cells
            self._index[k] = {s: i for i, s in enumerate(cells)}
        self._boundary: Dict[int, Gf2Matrix] = {}
        self._reps: Dict[int, List[Chain]] = {}
        self._boundary_generators: Dict[int, Gf2Matrix] = {}
        self._build()

    # -- cell bookkeeping ------------------------------------------------

    def degrees(self) -> range:
        return range(self.min_degree, self.max_degree + 1)

    def cells(self, k: int) -> Tuple[Simplex, ...]:
        return self._cells.get(k, ())

    def n_cells(self, k: int) -> int:
        return len(self.cells(k))

    def chain_to_bits(self, k: int, chain: Iterable[Simplex]) -> int:
        index = self._index.get(k, {})
        v = 0
        for s in chain:
            if s not in index:
                raise InputError("chain contains %r, not a degree-%d cell here" % (s, k))
            v |= 1 << index[s]
        return v

    def bits_to_chain(self, k: int, bits: int) -> Chain:
        cells = self.cells(k)
        return frozenset(cells[i] for i in range(len(cells)) if (bits >> i) & 1)

    # -- chain complex ---------------------------------------------------

    def boundary_matrix(self, k: int) -> Gf2Matrix:
        """Map from degree-k cells to degree-(k-1) cells."""
        if k not in self._boundary:
            rows = self.n_cells(k - 1)
            cols = self.n_cells(k)
            columns = []
            for s in self.cells(k):
                chain = boundary_chain((s,), self.pair.sub.faces, self.augmented)
                columns.append(self.chain_to_bits(k - 1, chain) if rows else 0)
            self._boundary[k] = Gf2Matrix.from_columns(columns, rows) if cols else Gf2Matrix.zero(rows, 0)
        return self._boundary[k]

    def _build(self):
        prev = None
        for k in self.degrees():
            mat = self.boundary_matrix(k)
            if prev is not None and not mat.is_zero() and not prev.mat_mul(mat).is_zero():
                raise AssertionError("boundary composition is nonzero in degree %d" % k)
            prev = mat
        for k in self.degrees():
            self._reps[k] = self._homology_reps(k)

    def _homology_reps(self, k: int) -> List[Chain]:
        cycles = self.boundary_matrix(k).kernel_basis()
        bdries = self.boundary_matrix(k + 1) if k + 1 <= self.max_degree else None
        current = Gf2Matrix(0, self.n_cells(k), ()) if bdries is None else bdries.transpose()
        current_rank = current.rank()
        reps = []
        for v in cycles:
            grown = current.stack(Gf2Matrix(1, self.n_cells(k), (v,)))
            if grown.rank() > current_rank:
                reps.append(self.bits_to_chain(k, v))
                current = grown
                current_rank += 1
        return reps

    # -- homology --------------------------------------------------------

    def representatives(self, k: int) -> List[Chain]:
        return list(self._reps.get(k, []))

    def betti_dim(self, k: int) -> int:
        return len(self._reps.get(k, []))

    def betti(self) -> BettiTable:
        flavor = "reduced" if self.augmented else ("relative" if len(self.pair.sub) else "absolute")
        return BettiTable.from_dict(flavor, {k: self.betti_dim(k) for k in self.degrees()})

    def is_cycle(self, k: int, chain: Chain) -> bool:
        return not boundary_chain(chain, self.pair.sub.faces, self.augmented)

    def _class_matrix(self, k: int) -> Gf2Matrix:
        """Columns: boundary generators from degree k+1, then homology reps."""
        if k not in self._boundary_generators:
            n = self.n_cells(k)
            cols = []
            if k + 1 <= self.max_degree:
                cols.extend(self.boundary_matrix(k + 1).columns())
            cols.extend(self.chain_to_bits(k, rep) for rep in self._reps.get(k, []))
            self._boundary_generators[k] = Gf2Matrix.from_columns(cols, n)
        return self._boundary_generators[k]

    def express_class(self, k: int, chain: Chain) -> Tuple[int, Chain]:
        """Coordinates of a cycle's class in the stored basis.

        Returns ``(coeffs, witness)`` where ``coeffs`` is a bit-vector
        over the degree-k representatives and ``witness`` is a
        degree-(k+1) chain whose boundary corrects the representative
        mismatch.  The witness identity is re-checked exactly.
        """
        if not self.is_cycle(k, chain):
            raise InputError("chain is not a cycle in degree %d" % k)
        if k < self.min_degree or k > self.max_degree:
            if chain:
                raise InputError("nonzero chain outside the degree range")
            return 0, frozenset()
        target = self.chain_to_bits(k, chain)
        sol = self._class_matrix(k).solve_preimage(target)
        if sol is None:
            raise AssertionError("cycle class not expressible; basis construction is broken")
        n_bdry = self.boundary_matrix(k + 1).n_cols if k + 1 <= self.max_degree else 0
        witness = self.bits_to_chain(k + 1, sol & ((1 << n_bdry) - 1)) if n_bdry else frozenset()
        coeffs = sol >> n_bdry
        # Chain-level verification: chain + sum(reps) = boundary(witness).
        check = set(chain)
        for i, rep in enumerate(self._reps.get(k, [])):
            if (coeffs >> i) & 1:
                check.symmetric_difference_update(rep)
        if frozenset(check) != boundary_chain(witness, self.pair.sub.faces, self.augmented):
            raise AssertionError("class expression witness failed")
        return coeffs, witness


def chain_complex(pair: ComplexPair) -> List[Gf2Matrix]:
    """Relative boundary matrices, degree 0 (a 0-row map) up to top degree."""
    basis = HomologyBasis(pair)
    return [basis.boundary_matrix(k) for k in basis.degrees()]


@lru_cache(maxsize=512)
def _betti_cached(pair: ComplexPair, augmented: bool) -> BettiTable:
    return HomologyBasis(pair, augmented=augmented).betti()


def betti(pair: ComplexPair, flavor: str = "relative") -> BettiTable:
    """Betti table of a pair in the requested flavor.

    ``relative`` with an empty subcomplex coincides with ``absolute``;
    ``reduced`` appends the augmentation row and requires an empty
    subcomplex.  Everything involved is immutable, so equal pairs share
    one cached computation.
    """
    if flavor not in ("absolute", "relative", "reduced"):
        raise InputError("unknown flavor %r" % (flavor,))
    if flavor == "reduced":
        if len(pair.sub) > 0:
            raise InputError("reduced flavor requested on a genuine pair")
        return _betti_cached(pair, True)
    return BettiTable(flavor, _betti_cached(pair, False).entries)


def euler_characteristic(pair: ComplexPair) -> int:
    """Alternating sum of relative cell counts."""
    return sum((-1) ** k * n for k, n in pair.cell_counts().items())


def check_pure(complex_: SimplicialComplex) -> int:
    """Top dimension if every maximal simplex attains it, else an error."""
    d = complex_.dim
    for s in complex_.maximal_simplices():
        if len(s) - 1 != d:
            raise PseudomanifoldError(
                "complex is not pure: maximal simplex %r has dimension %d < %d" % (s, len(s) - 1, d)
            )
    return d


def _ridge_incidence(complex_: SimplicialComplex, d: int) -> Dict[Simplex, List[Simplex]]:
    incidence: Dict[Simplex, List[Simplex]] = {s: [] for s in complex_.simplices(d - 1)}
    for top in complex_.simplices(d):
        for f in _chain_boundary(top):
            incidence[f].append(top)
    return incidence

def boundary_subcomplex(complex_: SimplicialComplex) -> SimplicialComplex:
    """Closure of the codimension-1 simplices lying in exactly one top simplex.

    Requires a pure complex in which every codimension-1 simplex lies in
    at most two top simplices.
    """
    if len(complex_) == 0:
        return SimplicialComplex.empty()
    d = check_pure(complex_)
    if d == 0:
        return SimplicialComplex.empty()
    free = []
    for ridge, tops in _ridge_incidence(complex_, d).items():
        if len(tops) > 2:
            raise PseudomanifoldError(
                "simplex %r lies in %d top simplices" % (ridge, len(tops))
            )
        if len(tops) == 1:
            free.append(ridge)
    return SimplicialComplex.from_maximal(free) if free else SimplicialComplex.empty()


def is_strongly_connected(complex_: SimplicialComplex) -> bool:
    """Whether top simplices are connected through codimension-1 faces."""
    d = complex_.dim
    tops = complex_.simplices(d)
    if len(tops) <= 1:
        return True
    if d == 0:
        return False
    adjacency: Dict[Simplex, List[Simplex]] = {t: [] for t in tops}
    for tops_here in _ridge_incidence(complex_, d).values():
        for a, b in itertools.combinations(tops_here, 2):
            adjacency[a].append(b)
            adjacency[b].append(a)
    seen = {tops[0]}
    queue = [tops[0]]
    while queue:
        for nxt in adjacency[queue.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(tops)


def check_pseudomanifold(complex_: SimplicialComplex) -> int:
    """Full pseudomanifold check: pure, ridge incidence <= 2, strongly connected.

    Returns the dimension.  Duality statements are only asserted for
    complexes passing this; boundary extraction needs only the first two
    conditions.
    """
    if len(complex_) == 0:
        raise PseudomanifoldError("empty complex")
    d = check_pure(complex_)
    boundary_subcomplex(complex_)  # purity + incidence
    if not is_strongly_connected(complex_):
        raise PseudomanifoldError("complex is not strongly connected through codimension-1 faces")
    return d


def excise(pair: ComplexPair, simplex: Simplex) -> ComplexPair:
    """Remove the open star of a subcomplex simplex from both members.

    Legal only when every ambient simplex containing ``simplex`` lies in
    the subcomplex, which keeps the relative chain complex unchanged.
    """
    s = tuple(simplex)
    if s not in pair.sub.faces:
        raise InputError("can only excise a simplex of the subcomplex")
    vs = set(s)
    star = frozenset(t for t in pair.ambient.faces if vs.issubset(t))
    if not star <= pair.sub.faces:
        offender = sorted(star - pair.sub.faces)[0]
        raise InputError("open star leaves the subcomplex at %r" % (offender,))
    return ComplexPair(
        SimplicialComplex(pair.ambient.faces - star),
        SimplicialComplex(pair.sub.faces - star),
    )
