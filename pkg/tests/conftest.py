"""Shared corpus definitions and independent test oracles."""

from functools import lru_cache

from topsym import (
    ComplexPair,
    SimplicialComplex,
    boundary_subcomplex,
    build_complex,
    builtin_example,
    truncated_double,
)
from topsym.spaces import catalog_splits

# Catalog complexes small enough to run every check on.
CORPUS_COMPLEX_NAMES = (
    "point",
    "circle",
    "sphere_1",
    "sphere_2",
    "sphere_3",
    "ball_1",
    "ball_2",
    "ball_3",
    "wedge_1_1",
    "wedge_2_4",
    "torus",
    "klein_bottle",
    "projective_plane",
)


@lru_cache(maxsize=None)
def corpus_complexes():
    return {name: builtin_example(name) for name in CORPUS_COMPLEX_NAMES}


@lru_cache(maxsize=None)
def corpus_pairs():
    """Named pairs exercised by the exactness and Morse suites."""
    pairs = {}
    for name, cx in corpus_complexes().items():
        pairs[name] = ComplexPair.absolute(cx)
    disk = builtin_example("ball_2")
    pairs["disk_rel_boundary"] = ComplexPair(disk, boundary_subcomplex(disk))
    for name, split in catalog_splits().items():
        pairs[name + "_pos"] = split.positive_pair()
        pairs[name + "_neg"] = split.negative_pair()
        pairs[name + "_double"] = truncated_double(split).exit_pair()
    return pairs


def hollow_triangle():
    return build_complex([(0, 1), (1, 2), (0, 2)])


def random_subcomplex(cx, rng):
    """Face closure of a random subset of the simplices."""
    faces = sorted(cx.faces)
    chosen = [s for s in faces if rng.random() < 0.4]
    if not chosen:
        return SimplicialComplex.empty()
    return SimplicialComplex.from_maximal(chosen)


# -- independent oracles -----------------------------------------------------


def rank_by_subset_enumeration(rows, n_cols):
    """Rank as the size of the largest independent row subset.

    Enumerates the XOR of every one of the 2^m row subsets; the span
    size is a power of two whose exponent is the answer.  No
    elimination is involved.
    """
    m = len(rows)
    xors = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        xors[mask] = xors[mask ^ low] ^ rows[low.bit_length() - 1]
    span = set(xors)
    size = len(span)
    assert size & (size - 1) == 0
    return size.bit_length() - 1


def largest_independent_subset_size(rows):
    """Literal search over subsets; only viable for a handful of rows."""
    m = len(rows)
    best = 0
    for mask in range(1 << m):
        chosen = [rows[i] for i in range(m) if (mask >> i) & 1]
        seen = set()
        ok = True
        for sub in range(1 << len(chosen)):
            acc = 0
            for i in range(len(chosen)):
                if (sub >> i) & 1:
                    acc ^= chosen[i]
            if acc in seen:
                ok = False
                break
            seen.add(acc)
        if ok:
            best = max(best, len(chosen))
    return best


def ridge_incidence(cx):
    """Top-simplex incidence over codimension-1 faces, built from scratch."""
    d = cx.dim
    incidence = {}
    for top in cx.simplices(d):
        for k in range(len(top)):
            face = top[:k] + top[k + 1 :]
            incidence.setdefault(face, []).append(top)
    return incidence


def is_orientable_surfacelike(cx):
    """Consistent top-cell orientations across shared ridges, by 2-coloring."""
    d = cx.dim
    incidence = ridge_incidence(cx)
    sign = {}
    for start in cx.simplices(d):
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            t = stack.pop()
            for i in range(len(t)):
                ridge = t[:i] + t[i + 1 :]
                for u in incidence[ridge]:
                    if u == t:
                        continue
                    j = next(k for k in range(len(u)) if u[:k] + u[k + 1 :] == ridge)
                    needed = -sign[t] * (-1) ** i * (-1) ** j
                    if u in sign:
                        if sign[u] != needed:
                            return False
                    else:
                        sign[u] = needed
                        stack.append(u)
    return True
