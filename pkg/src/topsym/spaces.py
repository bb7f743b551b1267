"""Example spaces and the gluing constructions on boundary splits.

The gluing locus of a double must be an induced subcomplex of the glued
domain (every simplex spanned by locus vertices already lies in the
locus); otherwise identifying vertices would silently merge simplices
from the two copies.  Constructors check this and refuse bad input, and
the catalog spaces are triangulated so the condition holds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple, Union

from .complexes import (
    ComplexPair,
    SimplicialComplex,
    boundary_subcomplex,
    build_complex,
)
from .errors import InputError

# Vertex namespace tags for the two copies of a glued domain.  Shared
# (identified) vertices sort between the copies, which keeps gluing
# independent of the original labels.
_COPY_A = 0
_SHARED = 1
_COPY_B = 2


@dataclass(frozen=True)
class BoundarySplit:
    """A domain with its boundary covered by two closed regions.

    ``positive`` and ``negative`` are the closures of the regions where
    the action's contact Hamiltonian is positive resp. negative; their
    intersection is the interface.  Either region may be empty.
    """

    domain: SimplicialComplex
    positive: SimplicialComplex
    negative: SimplicialComplex

    def __post_init__(self):
        boundary = boundary_subcomplex(self.domain)
        for name, region in (("positive", self.positive), ("negative", self.negative)):
            if not region.is_subcomplex_of(boundary):
                bad = sorted(region.faces - boundary.faces)[0]
                raise InputError("%s region simplex %r is not on the boundary" % (name, bad))
        if self.positive.union(self.negative).faces != boundary.faces:
            missing = sorted(boundary.faces - self.positive.union(self.negative).faces)[0]
            raise InputError("regions do not cover the boundary; %r is uncovered" % (missing,))

    @cached_property
    def boundary(self) -> SimplicialComplex:
        return boundary_subcomplex(self.domain)

    @cached_property
    def interface(self) -> SimplicialComplex:
        return self.positive.intersection(self.negative)

    def positive_pair(self) -> ComplexPair:
        return ComplexPair(self.domain, self.positive)

    def negative_pair(self) -> ComplexPair:
        return ComplexPair(self.domain, self.negative)

    def swapped(self) -> "BoundarySplit":
        return BoundarySplit(self.domain, self.negative, self.positive)


@dataclass(frozen=True)
class TruncatedDouble:
    """Two relabeled copies of a domain glued along the interface.

    ``exit_boundary`` is the union of the two positive-region copies,
    the part of the boundary a gradient flow would leave through;
    ``entry_boundary`` comes from the negative regions.  ``copy_a`` and
    ``copy_b`` cover the total complex and meet in the interface image.
    """

    total: SimplicialComplex
    copy_a: SimplicialComplex
    copy_b: SimplicialComplex
    exit_a: SimplicialComplex
    exit_b: SimplicialComplex
    entry_a: SimplicialComplex
    entry_b: SimplicialComplex
    interface_image: SimplicialComplex

    @cached_property
    def exit_boundary(self) -> SimplicialComplex:
        return self.exit_a.union(self.exit_b)

    @cached_property
    def entry_boundary(self) -> SimplicialComplex:
        return self.entry_a.union(self.entry_b)

    def exit_pair(self) -> ComplexPair:
        return ComplexPair(self.total, self.exit_boundary)


def _check_induced(domain: SimplicialComplex, locus: SimplicialComplex, what: str) -> None:
    induced = domain.induced_on(locus.vertices)
    if induced.faces != locus.faces:
        bad = sorted(induced.faces - locus.faces)[0]
        raise InputError(
            "%s is not an induced subcomplex: %r is spanned by its vertices "
            "but lies outside it; retriangulate the domain" % (what, bad)
        )


def _tag_map(shared_vertices, tag: int):
    shared = frozenset(shared_vertices)
    return lambda v: (_SHARED, v) if v in shared else (tag, v)


def glue_copies(domain: SimplicialComplex, locus: SimplicialComplex) -> Tuple[SimplicialComplex, SimplicialComplex, SimplicialComplex]:
    """Two copies of ``domain`` identified along ``locus``.

    Returns (glued, copy_a, copy_b).  Vertices outside the locus are
    tagged per copy; locus vertices are shared.
    """
    if not locus.is_subcomplex_of(domain):
        raise InputError("gluing locus is not a subcomplex of the domain")
    _check_induced(domain, locus, "gluing locus")
    a = domain.relabel(_tag_map(locus.vertices, _COPY_A))
    b = domain.relabel(_tag_map(locus.vertices, _COPY_B))
    return a.union(b), a, b


def truncated_double(split: BoundarySplit) -> TruncatedDouble:
    """Glue two copies of the domain along the interface of the split."""
    interface = split.interface
    total, copy_a, copy_b = glue_copies(split.domain, interface)
    map_a = _tag_map(interface.vertices, _COPY_A)
    map_b = _tag_map(interface.vertices, _COPY_B)
    return TruncatedDouble(
        total=total,
        copy_a=copy_a,
        copy_b=copy_b,
        exit_a=split.positive.relabel(map_a),
        exit_b=split.positive.relabel(map_b),
        entry_a=split.negative.relabel(map_a),
        entry_b=split.negative.relabel(map_b),
        interface_image=interface.relabel(map_a),
    )


def full_double(domain: SimplicialComplex) -> SimplicialComplex:
    """Two copies of a domain glued along its entire boundary."""
    boundary = boundary_subcomplex(domain)
    if len(boundary) == 0:
        raise InputError("domain has empty boundary; nothing to glue along")
    total, _, _ = glue_copies(domain, boundary)
    return total


def cross_polytope_sphere(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-cross-polytope: the smallest standard d-sphere.

    Vertices 0..2d+1 with antipodal pairs (2i, 2i+1); simplices are the
    vertex sets containing no antipodal pair.
    """
    if d < 0:
        raise InputError("dimension must be nonnegative")
    maximal = [
        tuple(sorted(2 * i + eps[i] for i in range(d + 1)))
        for eps in itertools.product((0, 1), repeat=d + 1)
    ]
    return build_complex(maximal)


def cone(base: SimplicialComplex) -> SimplicialComplex:
    """Join with one fresh apex vertex; contractible by construction."""
    if len(base) == 0:
        return build_complex([(0,)])
    if not all(isinstance(v, int) for v in base.vertices):
        raise InputError("cone needs integer vertex labels; relabel_to_integers first")
    apex = max(base.vertices) + 1
    return build_complex([s + (apex,) for s in base.maximal_simplices()])


def wedge_of_spheres(sphere_dim: int, count: int) -> SimplicialComplex:
    """``count`` simplex-boundary spheres of dimension ``sphere_dim`` sharing vertex 0."""
    if sphere_dim < 1 or count < 1:
        raise InputError("need sphere_dim >= 1 and count >= 1")
    maximal = []
    for j in range(count):
        verts = (0,) + tuple(j * (sphere_dim + 1) + i for i in range(1, sphere_dim + 2))
        maximal.extend(itertools.combinations(verts, sphere_dim + 1))
    return build_complex(maximal)


def _ring_annulus() -> SimplicialComplex:
    """Annulus as two prism bands over a triangle; middle ring is interior."""
    maximal = []
    for r in range(2):
        lo = [3 * r + i for i in range(3)]
        hi = [3 * (r + 1) + i for i in range(3)]
        for i in range(3):
            j = (i + 1) % 3
            maximal.append((lo[i], lo[j], hi[j]))
            maximal.append((lo[i], hi[j], hi[i]))
    return build_complex(maximal)


def _hexagon_disk() -> SimplicialComplex:
    """Disk as the cone over a hexagon; apex is the only interior vertex."""
    return build_complex([tuple(sorted((i, (i + 1) % 6, 6))) for i in range(6)])


def _seven_vertex_torus() -> SimplicialComplex:
    maximal = []
    for i in range(7):
        maximal.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        maximal.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return build_complex(maximal)


def _grid_klein_bottle(n: int = 3) -> SimplicialComplex:
    """Klein bottle from an n-by-n grid: one straight and one reflecting gluing."""
    def vertex(i: int, j: int) -> int:
        # Row wrap reflects the column index, which is the orientation flip.
        if j >= n:
            i, j = (-i) % n, j - n
        return (j % n) * n + (i % n)

    maximal = []
    for i in range(n):
        for j in range(n):
            a, b = vertex(i, j), vertex(i + 1, j)
            c, d = vertex(i, j + 1), vertex(i + 1, j + 1)
            maximal.append(tuple(sorted((a, b, d))))
            maximal.append(tuple(sorted((a, d, c))))
    return build_complex(maximal)


def _projective_plane() -> SimplicialComplex:
    maximal = [
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
    ]
    return build_complex(maximal)


def _circle() -> SimplicialComplex:
    return build_complex([(0, 1), (1, 2), (0, 2)])


def _full_boundary_split(domain: SimplicialComplex) -> BoundarySplit:
    """Split with empty positive region: the boundary is all negative."""
    return BoundarySplit(domain, SimplicialComplex.empty(), boundary_subcomplex(domain))


def _disk_half_split() -> BoundarySplit:
    disk = _hexagon_disk()
    positive = build_complex([(0, 1), (1, 2), (2, 3)])
    negative = build_complex([(3, 4), (4, 5), (0, 5)])
    return BoundarySplit(disk, positive, negative)


def _annulus_split() -> BoundarySplit:
    annulus = _ring_annulus()
    outer = build_complex([(6, 7), (7, 8), (6, 8)])
    inner = build_complex([(0, 1), (1, 2), (0, 2)])
    return BoundarySplit(annulus, outer, inner)


CATALOG_NAMES = (
    "point",
    "circle",
    "sphere_<d>",
    "ball_<d>",
    "wedge_<n>_<c>",
    "torus",
    "klein_bottle",
    "projective_plane",
    "reeb_ball_<n>",
    "brieskorn_<n>",
    "disk_half_split",
    "annulus_split",
)


def builtin_example(name: str) -> Union[SimplicialComplex, BoundarySplit]:
    """Catalog lookup; parametrized names use trailing integers.

    Complexes: point, circle, sphere_d, ball_d, wedge_n_c, torus,
    klein_bottle, projective_plane.  Boundary splits: reeb_ball_n
    (ball with empty positive region), brieskorn_n (wedge of 2^n
    n-spheres, both regions empty), disk_half_split, annulus_split.
    """
    fixed = {
        "point": lambda: build_complex([(0,)]),
        "circle": _circle,
        "torus": _seven_vertex_torus,
        "klein_bottle": _grid_klein_bottle,
        "projective_plane": _projective_plane,
        "disk_half_split": _disk_half_split,
        "annulus_split": _annulus_split,
    }
    if name in fixed:
        return fixed[name]()
    parts = name.split("_")
    try:
        if parts[0] == "sphere" and len(parts) == 2:
            return cross_polytope_sphere(int(parts[1]))
        if parts[0] == "ball" and len(parts) == 2:
            d = int(parts[1])
            if d < 0:
                raise InputError("ball dimension must be nonnegative")
            return build_complex([(0,)]) if d == 0 else cone(cross_polytope_sphere(d - 1))
        if parts[0] == "wedge" and len(parts) == 3:
            return wedge_of_spheres(int(parts[1]), int(parts[2]))
        if parts[:2] == ["reeb", "ball"] and len(parts) == 3:
            n = int(parts[2])
            if n < 1:
                raise InputError("reeb_ball_n needs n >= 1")
            return _full_boundary_split(cone(cross_polytope_sphere(2 * n - 1)))
        if parts[0] == "brieskorn" and len(parts) == 2:
            n = int(parts[1])
            if n < 2:
                raise InputError("brieskorn_n needs n >= 2")
            return BoundarySplit(
                wedge_of_spheres(n, 2 ** n), SimplicialComplex.empty(), SimplicialComplex.empty()
            )
    except ValueError:
        pass
    raise InputError(
        "unknown catalog name %r; available: %s" % (name, ", ".join(CATALOG_NAMES))
    )


def catalog_splits() -> Dict[str, BoundarySplit]:
    """The boundary splits exercised by the verification suites."""
    names = ("disk_half_split", "annulus_split", "reeb_ball_1", "reeb_ball_2", "brieskorn_2", "brieskorn_3")
    return {n: builtin_example(n) for n in names}
