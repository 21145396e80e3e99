"""Finite abstract simplicial complexes and their standard constructions.

A complex stores the full face-closed set of simplices as frozensets of
vertex indices.  The empty simplex is never stored; reduced homology's
dimension -1 bookkeeping lives entirely in the homology module.  All
values are immutable after construction, so they can be shared freely
between concurrent workers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

Simplex = frozenset  # frozenset[int]


def _skey(s: Simplex) -> tuple:
    return (len(s),) + tuple(sorted(s))


def closure_of(simplices: Iterable[Iterable[int]]) -> set:
    """All nonempty subsets of the given simplices."""
    out: set = set()
    for s in simplices:
        vs = tuple(sorted(set(s)))
        if not vs:
            raise ValueError("empty simplex is not storable")
        for r in range(1, len(vs) + 1):
            for c in combinations(vs, r):
                out.add(frozenset(c))
    return out


class SimplicialComplex:
    """Face-closed set of simplices over vertex indices 0..vertex_count-1.

    vertex_count may exceed the number of vertices actually used; a
    complex with no simplices at all is the empty complex, distinct
    from one that stores isolated vertices.
    """

    __slots__ = ("vertex_count", "simplices", "labels", "_by_dim")

    def __init__(self, vertex_count: int, simplices: Iterable[Simplex],
                 labels: Optional[Sequence[str]] = None, _trusted: bool = False):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        simps = frozenset(frozenset(s) for s in simplices)
        if not _trusted:
            for s in simps:
                if not s:
                    raise ValueError("empty simplex is not storable")
                for v in s:
                    if not (0 <= v < vertex_count):
                        raise ValueError(f"vertex {v} out of range 0..{vertex_count - 1}")
                if len(s) >= 2:
                    for f in combinations(sorted(s), len(s) - 1):
                        if frozenset(f) not in simps:
                            raise ValueError(f"face closure violated at {sorted(s)}")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "simplices", simps)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        by_dim: dict = {}
        for s in simps:
            by_dim.setdefault(len(s) - 1, []).append(s)
        for d in by_dim:
            by_dim[d].sort(key=_skey)
        object.__setattr__(self, "_by_dim", by_dim)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @property
    def dim(self) -> int:
        """-1 for the empty complex."""
        return max(self._by_dim, default=-1)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for s in self._by_dim.get(0, ()) for v in s)

    def simplices_of_dim(self, d: int) -> list:
        """Simplices of dimension d in canonical (sorted-tuple) order."""
        return list(self._by_dim.get(d, ()))

    def f_vector(self) -> tuple:
        return tuple(len(self._by_dim.get(d, ())) for d in range(self.dim + 1))

    def maximal_simplices(self) -> list:
        maximal = []
        for s in self.simplices:
            if not any(s < t for t in self.simplices):
                maximal.append(s)
        maximal.sort(key=_skey)
        return maximal

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.simplices

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.vertex_count == other.vertex_count
                and self.simplices == other.simplices)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.simplices))

    def __repr__(self) -> str:
        return f"SimplicialComplex(v={self.vertex_count}, f={self.f_vector()})"


class Subcomplex:
    """A face-closed subset of an ambient complex's simplices."""

    __slots__ = ("ambient", "simplices", "_vertices")

    def __init__(self, ambient: SimplicialComplex, simplices: Iterable[Simplex],
                 _trusted: bool = False):
        simps = frozenset(frozenset(s) for s in simplices)
        if not _trusted:
            for s in simps:
                if s not in ambient.simplices:
                    raise ValueError(f"simplex {sorted(s)} not in ambient complex")
                if len(s) >= 2:
                    for f in combinations(sorted(s), len(s) - 1):
                        if frozenset(f) not in simps:
                            raise ValueError(f"face closure violated at {sorted(s)}")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "simplices", simps)
        object.__setattr__(self, "_vertices",
                           frozenset(v for s in simps if len(s) == 1 for v in s))

    def __setattr__(self, name, value):
        raise AttributeError("Subcomplex is immutable")

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    def is_empty(self) -> bool:
        return not self.simplices

    def as_complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.ambient.vertex_count, self.simplices, _trusted=True)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subcomplex)
                and self.ambient == other.ambient
                and self.simplices == other.simplices)

    def __hash__(self) -> int:
        return hash((self.ambient, self.simplices))

    def __repr__(self) -> str:
        return f"Subcomplex({len(self.simplices)} simplices of {self.ambient!r})"


def build_complex(maximal_simplices: Iterable[Iterable[int]], vertex_count: int,
                  labels: Optional[Sequence[str]] = None) -> SimplicialComplex:
    """Face closure of the given simplices; idempotent on closed input."""
    for s in maximal_simplices:
        ss = set(s)
        if not ss:
            raise ValueError("empty simplex in input")
        for v in ss:
            if not (0 <= v < vertex_count):
                raise ValueError(f"vertex {v} out of range 0..{vertex_count - 1}")
    return SimplicialComplex(vertex_count, closure_of(maximal_simplices),
                             labels=labels, _trusted=True)


def full_subcomplex(K: SimplicialComplex) -> Subcomplex:
    return Subcomplex(K, K.simplices, _trusted=True)


def subcomplex_from_maximal(K: SimplicialComplex,
                            maximal_simplices: Iterable[Iterable[int]]) -> Subcomplex:
    return Subcomplex(K, closure_of(maximal_simplices))


def intersect_subcomplexes(a: Subcomplex, b: Subcomplex) -> Subcomplex:
    """Exact set intersection; closed because both inputs are."""
    if a.ambient != b.ambient:
        raise ValueError("subcomplexes live in different ambient complexes")
    return Subcomplex(a.ambient, a.simplices & b.simplices, _trusted=True)


def k_skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    """All simplices of dimension <= k; vertex set unchanged."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return SimplicialComplex(K.vertex_count,
                             (s for s in K.simplices if len(s) <= k + 1),
                             labels=K.labels, _trusted=True)


def simplex_skeleton(n: int, k: int) -> SimplicialComplex:
    """k-skeleton of the n-dimensional simplex: subsets of [n+1] of size <= k+1."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    simps = []
    for r in range(1, min(k + 1, n + 1) + 1):
        simps.extend(frozenset(c) for c in combinations(range(n + 1), r))
    return SimplicialComplex(n + 1, simps, _trusted=True)


def barycentric_subdivision_with_map(K: SimplicialComplex):
    """Order complex of the face poset, plus the simplex -> vertex index map."""
    if not K.simplices:
        raise ValueError("barycentric subdivision of the empty complex")
    verts = sorted(K.simplices, key=_skey)
    index = {s: i for i, s in enumerate(verts)}
    supersets = {s: [t for t in verts if s < t] for s in verts}
    chains: set = set()

    def extend(chain: tuple, top: Simplex):
        chains.add(frozenset(index[s] for s in chain))
        for t in supersets[top]:
            extend(chain + (t,), t)

    for s in verts:
        extend((s,), s)
    labels = [".".join(str(v) for v in sorted(s)) for s in verts]
    sd = SimplicialComplex(len(verts), chains, labels=labels, _trusted=True)
    return sd, index


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    sd, _ = barycentric_subdivision_with_map(K)
    return sd


# ---------------------------------------------------------------------------
# gallery of standard complexes

def _path(n: int) -> SimplicialComplex:
    if n < 1:
        raise ValueError("path needs n >= 1 vertices")
    if n == 1:
        return build_complex([[0]], 1)
    return build_complex([[i, i + 1] for i in range(n - 1)], n)


def _cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("cycle needs n >= 3 vertices")
    return build_complex([[i, (i + 1) % n] for i in range(n)], n)


def _grid_disk(w: int, h: int) -> SimplicialComplex:
    """Triangulated w x h vertex rectangle, diagonal direction fixed."""
    if w < 2 or h < 2:
        raise ValueError("grid_disk needs w >= 2 and h >= 2")
    vid = lambda i, j: j * w + i
    tris = []
    for i in range(w - 1):
        for j in range(h - 1):
            tris.append([vid(i, j), vid(i + 1, j), vid(i, j + 1)])
            tris.append([vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)])
    return build_complex(tris, w * h)


def _octahedron_sphere() -> SimplicialComplex:
    # opposite vertex pairs (0,1), (2,3), (4,5); faces avoid opposite pairs
    tris = [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return build_complex(tris, 6)


def _torus7() -> SimplicialComplex:
    """Minimal 7-vertex torus triangulation (Moebius-Kantor pattern)."""
    tris = [[i, (i + 1) % 7, (i + 3) % 7] for i in range(7)]
    tris += [[i, (i + 2) % 7, (i + 3) % 7] for i in range(7)]
    return build_complex(tris, 7)


# Minimal 8-vertex Klein bottle triangulation, found by exhaustive closed
# surface search and verified: f = (8, 24, 16), Euler characteristic 0,
# every vertex link a single cycle, non-orientable.
_KLEIN_FACES = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4),
    (1, 2, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6),
    (2, 3, 5), (2, 3, 7), (2, 4, 6), (2, 6, 7),
    (3, 4, 7), (3, 5, 6), (4, 5, 7), (5, 6, 7),
]


def _klein_bottle_min() -> SimplicialComplex:
    return build_complex([list(t) for t in _KLEIN_FACES], 8)


def _star(c: int, length: int) -> SimplicialComplex:
    """Tree with c spines of the given edge length joined at vertex 0."""
    if c < 1 or length < 1:
        raise ValueError("star needs c >= 1 spines of length >= 1")
    edges = []
    for i in range(c):
        prev = 0
        for step in range(length):
            v = 1 + i * length + step
            edges.append([prev, v])
            prev = v
    return build_complex(edges, 1 + c * length)


_GALLERY = {
    "path": (_path, ("n",)),
    "cycle": (_cycle, ("n",)),
    "grid_disk": (_grid_disk, ("w", "h")),
    "octahedron_sphere": (_octahedron_sphere, ()),
    "torus7": (_torus7, ()),
    "klein_bottle_min": (_klein_bottle_min, ()),
    "star": (_star, ("c", "length")),
}


def gallery_names() -> list:
    return sorted(_GALLERY)


def gallery(name: str, **params) -> SimplicialComplex:
    """Deterministic standard triangulations used as fixtures and ambients."""
    if name not in _GALLERY:
        raise ValueError(f"unknown gallery complex {name!r}; known: {gallery_names()}")
    fn, wanted = _GALLERY[name]
    extra = set(params) - set(wanted)
    missing = set(wanted) - set(params)
    if extra or missing:
        raise ValueError(f"gallery {name!r} takes parameters {wanted}, got {sorted(params)}")
    return fn(**params)
