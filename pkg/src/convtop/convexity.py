"""Relative convex hulls over a finite family and the derived invariants.

The space is a finite simplicial complex; a family is a named list of
subcomplexes.  Points are discretized to vertices: subcomplexes are
face-closed, so two of them intersect iff they share a vertex, and the
hull of a vertex set S is the intersection of all members whose vertex
set contains S (the whole space if no member does, including the case
of an empty family).

Invariant searches are exhaustive within explicit caps and return
bound markers instead of running unbounded:

* Radon number: least r such that every r-subset of the pool splits in
  two parts with intersecting hulls.  Parts may be empty by default
  (the hull of the empty set is the intersection of all members); a
  flag switches to nonempty parts.  Both conventions are recorded in
  the result.
* Tverberg number: the k-part generalization; k=2 coincides with Radon.
* Helly number: largest size of an inclusion-minimal subfamily with
  empty intersection (1 if there is none, also for the empty family).
  Computed by enumerating witness vertex sets, which bounds the search
  by the vertex count rather than by 2^|F|; for small families two
  independent routes cross-check the value.
* Caratheodory number: least c such that hull membership over sets up
  to the enumeration cap is always witnessed by at most c points.
* Topological complexity: max reduced Z2 Betti number, in degrees
  below k, over intersections of nonempty subfamilies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .complexes import (SimplicialComplex, Subcomplex, build_complex, closure_of,
                        full_subcomplex, gallery, subcomplex_from_maximal)
from .errors import CapExceededError, InputError, InternalCheckError
from .homology import reduced_betti
from .rng import SplitMix64

EXACT = "exact"
GREATER_THAN = "greater_than"
AT_LEAST = "at_least"
INFINITE_WITHIN_POOL = "infinite_within_pool"


@dataclass(frozen=True)
class InvariantResult:
    """Outcome of one invariant computation, bound markers included.

    value is None exactly when status is "infinite_within_pool"; for
    "greater_than" / "at_least" it is the bound.  Caps carry every
    limit that shaped the search, conventions the semantic flags.
    """

    kind: str
    status: str
    value: Optional[int]
    caps: Dict[str, int] = field(default_factory=dict)
    params: Dict[str, object] = field(default_factory=dict)
    conventions: Dict[str, object] = field(default_factory=dict)
    certificate: Optional[dict] = None
    pool: Optional[Tuple[int, ...]] = None
    notes: Dict[str, object] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "status": self.status,
            "value": self.value,
            "caps": dict(self.caps),
            "params": dict(self.params),
            "conventions": dict(self.conventions),
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.pool is not None:
            out["pool"] = list(self.pool)
        if self.notes:
            out["notes"] = dict(self.notes)
        return out


class ConvexityFamily:
    """Ambient complex plus an ordered list of named member subcomplexes."""

    __slots__ = ("ambient", "members", "labeled_points",
                 "_member_vmasks", "_cmask_by_vertex", "_all_members_mask",
                 "_ambient_vmask", "_hull_mask_cache")

    def __init__(self, ambient: SimplicialComplex,
                 members: Sequence[Tuple[str, Subcomplex]],
                 labeled_points: Optional[Dict[str, int]] = None):
        names = [n for n, _ in members]
        if len(set(names)) != len(names):
            raise InputError("member names must be unique")
        for name, sub in members:
            if sub.ambient != ambient:
                raise InputError(f"member {name!r} not a subcomplex of the ambient")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "members", tuple(members))
        object.__setattr__(self, "labeled_points", dict(labeled_points or {}))
        vmasks = []
        for _, sub in members:
            m = 0
            for v in sub.vertices:
                m |= 1 << v
            vmasks.append(m)
        object.__setattr__(self, "_member_vmasks", tuple(vmasks))
        all_mask = (1 << len(members)) - 1
        cmask = {}
        for v in ambient.vertices:
            mm = 0
            for i, vm in enumerate(vmasks):
                if (vm >> v) & 1:
                    mm |= 1 << i
            cmask[v] = mm
        object.__setattr__(self, "_cmask_by_vertex", cmask)
        object.__setattr__(self, "_all_members_mask", all_mask)
        amb = 0
        for v in ambient.vertices:
            amb |= 1 << v
        object.__setattr__(self, "_ambient_vmask", amb)
        object.__setattr__(self, "_hull_mask_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("ConvexityFamily is immutable")

    def __len__(self) -> int:
        return len(self.members)

    def names(self) -> List[str]:
        return [n for n, _ in self.members]

    def member(self, name: str) -> Subcomplex:
        for n, sub in self.members:
            if n == name:
                return sub
        raise KeyError(name)

    def subfamily(self, names: Iterable[str]) -> "ConvexityFamily":
        wanted = list(names)
        missing = set(wanted) - set(self.names())
        if missing:
            raise InputError(f"unknown members {sorted(missing)}")
        keep = [(n, s) for n, s in self.members if n in set(wanted)]
        return ConvexityFamily(self.ambient, keep, self.labeled_points)

    # -- fast mask arithmetic -------------------------------------------------

    def containing_members_mask(self, vertex_set_mask: int) -> int:
        """Bitmask of members whose vertex set contains the given vertices."""
        mask = self._all_members_mask
        x = vertex_set_mask
        while x:
            v = (x & -x).bit_length() - 1
            mask &= self._cmask_by_vertex.get(v, 0)
            if not mask:
                return 0
            x &= x - 1
        return mask

    def hull_vmask(self, vertex_set_mask: int) -> int:
        """Vertex set of the hull, as a bitmask (the whole space if no
        member contains the set)."""
        cached = self._hull_mask_cache.get(vertex_set_mask)
        if cached is not None:
            return cached
        members = self.containing_members_mask(vertex_set_mask)
        out = self._ambient_vmask
        m = members
        while m:
            i = (m & -m).bit_length() - 1
            out &= self._member_vmasks[i]
            m &= m - 1
        self._hull_mask_cache[vertex_set_mask] = out
        return out

    def vertex_pool(self) -> Tuple[int, ...]:
        return tuple(sorted(self.ambient.vertices))


def _vmask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def hull(F: ConvexityFamily, S: Iterable[int]) -> Subcomplex:
    """Intersection of all members containing S; the whole space if none.

    hull(empty set) is the intersection of all members, since every
    member contains the empty set.
    """
    S = frozenset(S)
    for v in S:
        if not (0 <= v < F.ambient.vertex_count):
            raise InputError(f"vertex {v} out of range")
    containing = [sub for _, sub in F.members if S <= sub.vertices]
    if not F.members or (S and not containing):
        return full_subcomplex(F.ambient)
    if not S and not containing:
        return full_subcomplex(F.ambient)
    simps = containing[0].simplices
    for sub in containing[1:]:
        simps = simps & sub.simplices
    return Subcomplex(F.ambient, simps, _trusted=True)


def is_convex(F: ConvexityFamily, S: Subcomplex) -> bool:
    if S.ambient != F.ambient:
        raise InputError("subcomplex not over the family's ambient complex")
    return hull(F, S.vertices).simplices == S.simplices


# ---------------------------------------------------------------------------
# Radon / Tverberg

def _partitions_upto_k(items: Sequence[int], k: int):
    """Set partitions into at most k nonempty blocks (restricted growth)."""
    n = len(items)
    if n == 0:
        yield []
        return
    assignment = [0] * n

    def rec(i: int, nblocks: int):
        if i == n:
            blocks: List[List[int]] = [[] for _ in range(nblocks)]
            for j, b in enumerate(assignment):
                blocks[b].append(items[j])
            yield blocks
            return
        for b in range(min(nblocks + 1, k)):
            assignment[i] = b
            yield from rec(i + 1, max(nblocks, b + 1))

    yield from rec(1, 1) if False else rec(0, 0)


def _splits(F: ConvexityFamily, subset: Sequence[int], k: int,
            allow_empty_parts: bool) -> bool:
    """Does this vertex set admit a partition into k parts with a common
    hull vertex?"""
    for blocks in _partitions_upto_k(subset, k):
        if not allow_empty_parts and len(blocks) < k:
            continue
        inter = F._ambient_vmask
        for b in blocks:
            inter &= F.hull_vmask(_vmask(b))
            if not inter:
                break
        if inter and len(blocks) < k:
            inter &= F.hull_vmask(0)  # one empty part covers all padding
        if inter:
            return True
    return False


def _point_partition_number(F: ConvexityFamily, k: int, cap: int,
                            pool: Optional[Sequence[int]],
                            allow_empty_parts: bool, kind: str) -> InvariantResult:
    pool = tuple(sorted(pool)) if pool is not None else F.vertex_pool()
    if not pool:
        raise InputError("empty vertex pool")
    for v in pool:
        if not (0 <= v < F.ambient.vertex_count):
            raise InputError(f"pool vertex {v} out of range")
    if cap < 1:
        raise InputError("cap must be >= 1")
    conventions = {"allow_empty_parts": allow_empty_parts}
    params = {"k": k} if kind == "tverberg" else {}
    limit = min(cap, len(pool))
    witness: Optional[Tuple[int, ...]] = None
    for r in range(1, limit + 1):
        level_ok = True
        for subset in combinations(pool, r):
            if not _splits(F, subset, k, allow_empty_parts):
                witness = subset
                level_ok = False
                break
        if level_ok:
            return InvariantResult(kind, EXACT, r, caps={"cap": cap},
                                   params=params, conventions=conventions,
                                   pool=pool)
    cert = {"unsplittable_set": list(witness)} if witness is not None else None
    if limit < len(pool):
        return InvariantResult(kind, GREATER_THAN, cap, caps={"cap": cap},
                               params=params, conventions=conventions,
                               certificate=cert, pool=pool)
    return InvariantResult(kind, INFINITE_WITHIN_POOL, None, caps={"cap": cap},
                           params=params, conventions=conventions,
                           certificate=cert, pool=pool)


def radon_number(F: ConvexityFamily, cap: int,
                 pool: Optional[Sequence[int]] = None,
                 allow_empty_parts: bool = True) -> InvariantResult:
    """Least r <= cap such that every r-subset of the pool splits into two
    parts with intersecting hulls."""
    return _point_partition_number(F, 2, cap, pool, allow_empty_parts, "radon")


def tverberg_number(F: ConvexityFamily, k: int, cap: int,
                    pool: Optional[Sequence[int]] = None,
                    allow_empty_parts: bool = True) -> InvariantResult:
    """k-part Radon analogue; k=2 reproduces radon_number."""
    if k < 2:
        raise InputError("tverberg needs k >= 2")
    return _point_partition_number(F, k, cap, pool, allow_empty_parts, "tverberg")


def revalidate_no_partition_witness(F: ConvexityFamily, witness: Sequence[int],
                                    k: int = 2, allow_empty_parts: bool = True) -> bool:
    """True iff the witness set really admits no k-part split.  Runs on the
    public hull() rather than the mask fast path."""
    for blocks in _partitions_upto_k(tuple(witness), k):
        if not allow_empty_parts and len(blocks) < k:
            continue
        hulls = [hull(F, b).vertices for b in blocks]
        if len(blocks) < k:
            hulls.append(hull(F, ()).vertices)
        common = set(F.ambient.vertices)
        for h in hulls:
            common &= h
        if common:
            return False
    return True


# ---------------------------------------------------------------------------
# Helly

def _helly_witness_route(F: ConvexityFamily, vertex_guard: int) -> Tuple[int, Optional[dict]]:
    """Largest inclusion-minimal empty subfamily, via witness vertex sets.

    A minimal empty subfamily T assigns to each member A a distinct
    vertex w(A) common to all the others and missed by A, so |T| is at
    most the number of vertices; enumerating the witness set W and
    choosing one admissible member per w in W is exhaustive.
    """
    verts = sorted(F.ambient.vertices)
    if len(verts) > vertex_guard:
        raise CapExceededError(
            f"helly witness search over {len(verts)} vertices exceeds guard {vertex_guard}")
    vmasks = F._member_vmasks
    n = len(vmasks)

    def candidates(wmask: int, w: int) -> List[int]:
        need = wmask & ~(1 << w)
        return [i for i in range(n)
                if (vmasks[i] & need) == need and not (vmasks[i] >> w) & 1]

    def choose(ws: List[int], wmask: int) -> Optional[List[int]]:
        # pick one candidate member per witness so the total intersection is empty
        order = sorted(ws, key=lambda w: len(candidates(wmask, w)))
        picked: List[int] = []

        def rec(idx: int, inter: int) -> Optional[List[int]]:
            if idx == len(order):
                return list(picked) if inter == 0 else None
            for i in candidates(wmask, order[idx]):
                picked.append(i)
                res = rec(idx + 1, inter & vmasks[i])
                if res is not None:
                    return res
                picked.pop()
            return None

        return rec(0, F._ambient_vmask)

    for size in range(len(verts), 0, -1):
        for W in combinations(verts, size):
            wmask = _vmask(W)
            if any(not candidates(wmask, w) for w in W):
                continue
            chosen = choose(list(W), wmask)
            if chosen is not None:
                names = [F.names()[i] for i in sorted(set(chosen))]
                return size, {"minimal_empty_subfamily": names,
                              "witness_vertices": list(W)}
    return 0, None


def _helly_minimal_empty_scan(F: ConvexityFamily) -> int:
    """Independent route: DP over all subfamily masks."""
    n = len(F)
    vmasks = F._member_vmasks
    inter = [0] * (1 << n)
    inter[0] = F._ambient_vmask
    best = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        inter[mask] = inter[mask ^ low] & vmasks[low.bit_length() - 1]
        if inter[mask] == 0:
            if all(inter[mask ^ (1 << i)] != 0 for i in _bits(mask)):
                best = max(best, mask.bit_count())
    return best


def helly_number(F: ConvexityFamily, cap: int,
                 vertex_guard: int = 16, cross_check_limit: int = 12) -> InvariantResult:
    """Least h such that h-wise intersecting subfamilies always have a
    common vertex.  Empty family: 1 by convention."""
    if cap < 1:
        raise InputError("cap must be >= 1")
    if not F.members:
        return InvariantResult("helly", EXACT, 1, caps={"cap": cap},
                               notes={"empty_family_convention": True})
    size, cert = _helly_witness_route(F, vertex_guard)
    cross_checked = False
    if len(F) <= cross_check_limit:
        other = _helly_minimal_empty_scan(F)
        if other != size:
            raise InternalCheckError(
                f"helly routes disagree: witness={size} scan={other}")
        cross_checked = True
    h = max(size, 1)
    notes = {"cross_checked": cross_checked}
    if h > cap:
        return InvariantResult("helly", GREATER_THAN, cap, caps={"cap": cap},
                               certificate=cert, notes=notes)
    return InvariantResult("helly", EXACT, h, caps={"cap": cap},
                           certificate=cert, notes=notes)


# ---------------------------------------------------------------------------
# Caratheodory

def caratheodory_number(F: ConvexityFamily, cap: int,
                        pool: Optional[Sequence[int]] = None,
                        s_size_cap: Optional[int] = None) -> InvariantResult:
    """Least c such that for every S in the pool with |S| <= s_size_cap and
    every vertex of hull(S), some subset of S of size <= c already has the
    vertex in its hull.

    The scan is provably independent of s_size_cap once s_size_cap >= |F|
    (a containment-equivalent subset of S with one witness per
    non-containing member never needs more than |F| points); the result
    notes whether that regime holds.
    """
    if cap < 1:
        raise InputError("cap must be >= 1")
    pool = tuple(sorted(pool)) if pool is not None else F.vertex_pool()
    if not pool:
        raise InputError("empty vertex pool")
    s_cap = s_size_cap if s_size_cap is not None else cap + 1
    need = 1
    worst: Optional[dict] = None
    hull_memo: Dict[int, int] = {}

    def hm(sub: Tuple[int, ...]) -> int:
        m = _vmask(sub)
        got = hull_memo.get(m)
        if got is None:
            got = F.hull_vmask(m)
            hull_memo[m] = got
        return got

    for size in range(1, min(s_cap, len(pool)) + 1):
        for S in combinations(pool, size):
            hull_mask = hm(S)
            x = hull_mask & ~_vmask(S)  # members of S witness themselves at c=1
            for v in _bits(x):
                m = None
                for sub_size in range(1, size + 1):
                    found = False
                    for sub in combinations(S, sub_size):
                        if (hm(sub) >> v) & 1:
                            found = True
                            break
                    if found:
                        m = sub_size
                        break
                if m is None:
                    m = size  # v in hull(S) itself; loop above ends at size
                if m > need:
                    need = m
                    worst = {"set": list(S), "point": v, "witness_size": m}
    notes = {"exact_beyond_cap": s_cap >= len(F)}
    caps = {"cap": cap, "s_size_cap": s_cap}
    if need > cap:
        return InvariantResult("caratheodory", GREATER_THAN, cap, caps=caps,
                               certificate=worst, pool=pool, notes=notes)
    return InvariantResult("caratheodory", EXACT, need, caps=caps,
                           certificate=worst, pool=pool, notes=notes)


# ---------------------------------------------------------------------------
# Topological complexity

def _max_betti_of(simplices: frozenset, vertex_count: int, up_to: int) -> Tuple[int, int]:
    if not simplices:
        return 0, 0
    K = SimplicialComplex(vertex_count, simplices, _trusted=True)
    prof = reduced_betti(K, up_to)
    best_i, best = 0, 0
    for i, v in enumerate(prof.values):
        if v > best:
            best, best_i = v, i
    return best, best_i


def topological_complexity(F: ConvexityFamily, k: Optional[int],
                           subfamily_cap: int = 16,
                           include_empty_subfamily: bool = False,
                           closure_budget: int = 200_000) -> InvariantResult:
    """Max reduced Z2 Betti number in degrees < k over intersections of
    nonempty subfamilies (k=None means every degree, exact for finite
    complexes).

    Families up to subfamily_cap are scanned subfamily by subfamily.
    Larger families are handled through the closure of the member sets
    under pairwise intersection, which realizes exactly the same set of
    intersections; the closure size is budget-guarded.
    """
    if k is not None and k < 1:
        raise InputError("k must be >= 1 (or None for full level)")
    up_to = (F.ambient.dim + 1) if k is None else k
    up_to = max(up_to, 1)
    conventions = {"include_empty_subfamily": include_empty_subfamily}
    params = {"k": k if k is not None else "inf"}
    caps = {"subfamily_cap": subfamily_cap, "closure_budget": closure_budget}
    n = len(F)
    best = 0
    cert: Optional[dict] = None

    witnesses: Dict[frozenset, Tuple[int, ...]] = {}
    if n <= subfamily_cap:
        inter_by_mask: Dict[int, frozenset] = {0: F.ambient.simplices}
        for mask in range(1, 1 << n):
            low = mask & -mask
            i = low.bit_length() - 1
            parent = inter_by_mask[mask ^ low]
            cur = parent & F.members[i][1].simplices
            inter_by_mask[mask] = cur
            if cur not in witnesses:
                witnesses[cur] = tuple(_bits(mask))
        candidates = {inter_by_mask[m] for m in range(1, 1 << n)}
    else:
        sets = []
        seen: Dict[frozenset, Tuple[int, ...]] = {}
        for i, (_, sub) in enumerate(F.members):
            if sub.simplices not in seen:
                seen[sub.simplices] = (i,)
                sets.append(sub.simplices)
        frontier = list(sets)
        while frontier:
            new_frontier = []
            for a in frontier:
                for b in sets:
                    c = a & b
                    if c not in seen:
                        seen[c] = tuple(sorted(set(seen[a]) | set(seen[b])))
                        new_frontier.append(c)
                        if len(seen) > closure_budget:
                            raise CapExceededError(
                                "intersection closure exceeded budget "
                                f"{closure_budget}; raise it or sample")
            sets.extend(new_frontier)
            frontier = new_frontier
        candidates = set(seen)
        witnesses = seen
    if include_empty_subfamily:
        candidates = set(candidates) | {F.ambient.simplices}
        witnesses.setdefault(F.ambient.simplices, ())

    names = F.names()
    for simps in candidates:
        value, degree = _max_betti_of(simps, F.ambient.vertex_count, up_to)
        if value > best:
            best = value
            idx = witnesses.get(simps, ())
            cert = {"subfamily": [names[i] for i in idx], "degree": degree,
                    "betti": value}
    return InvariantResult("tc", EXACT, best, caps=caps, params=params,
                           conventions=conventions, certificate=cert)


def tc_lower_bound_by_sampling(F: ConvexityFamily, k: Optional[int],
                               samples: int, seed: int,
                               subfamily_cap: int = 16) -> InvariantResult:
    """Sampling variant for large families: a lower bound marker."""
    up_to = (F.ambient.dim + 1) if k is None else max(k, 1)
    rng = SplitMix64(seed)
    n = len(F)
    best = 0
    cert = None
    names = F.names()
    for _ in range(samples):
        mask = 0
        while mask == 0:
            mask = rng.randbelow(1 << n)
        simps = F.ambient.simplices
        for i in _bits(mask):
            simps = simps & F.members[i][1].simplices
        value, degree = _max_betti_of(simps, F.ambient.vertex_count, up_to)
        if value > best:
            best = value
            cert = {"subfamily": [names[i] for i in _bits(mask)],
                    "degree": degree, "betti": value}
    return InvariantResult("tc", AT_LEAST, best,
                           caps={"samples": samples, "subfamily_cap": subfamily_cap},
                           params={"k": k if k is not None else "inf", "seed": seed},
                           conventions={"include_empty_subfamily": False},
                           certificate=cert)


# ---------------------------------------------------------------------------
# family gallery

def _fan_disk(perimeter: int) -> SimplicialComplex:
    """Triangulated disk: center vertex 0 coned over a perimeter cycle.

    The perimeter is a subdivided rectangle boundary, so the center can
    have arbitrarily high degree (a uniform grid caps vertex degree at
    six, which would cap the number of star spines)."""
    if perimeter < 3:
        raise InputError("fan disk needs perimeter >= 3")
    tris = [[0, 1 + i, 1 + (i + 1) % perimeter] for i in range(perimeter)]
    return build_or_raise(tris, perimeter + 1)


def build_or_raise(tris, n):
    from .complexes import build_complex
    return build_complex(tris, n)


def _star_family(c: int, length: int = 2) -> ConvexityFamily:
    """c members A_i, each the union of all spines but the i-th.

    The ambient is a fan-triangulated disk; spine i runs from the center
    to the perimeter and then along it, and one gap vertex is left
    between consecutive spines, so vertices outside every member exist.
    Labeled points: t1..tc are the spine tips, x is a gap vertex.
    """
    if c < 2 or length < 1:
        raise InputError("star family needs c >= 2 spines of length >= 1")
    block = length + 1
    perimeter = c * block
    ambient = _fan_disk(perimeter)
    spine_edges: List[List[List[int]]] = []
    tips = []
    for i in range(c):
        start = 1 + i * block
        edges = [[0, start]]
        for step in range(length - 1):
            edges.append([start + step, start + step + 1])
        spine_edges.append(edges)
        tips.append(start + length - 1)
    members = []
    for i in range(c):
        edges = [e for j in range(c) if j != i for e in spine_edges[j]]
        members.append((f"A{i + 1}", subcomplex_from_maximal(ambient, edges)))
    labeled = {f"t{i + 1}": tips[i] for i in range(c)}
    labeled["x"] = 1 + length  # first gap vertex
    return ConvexityFamily(ambient, members, labeled)


def _intervals_family(n: int) -> ConvexityFamily:
    """All nonempty subpaths of the n-vertex path."""
    ambient = gallery("path", n=n)
    members = []
    for i in range(n):
        for j in range(i, n):
            if i == j:
                sub = subcomplex_from_maximal(ambient, [[i]])
            else:
                sub = subcomplex_from_maximal(ambient, [[v, v + 1] for v in range(i, j)])
            members.append((f"[{i}..{j}]", sub))
    return ConvexityFamily(ambient, members)


def _arcs_family(n: int, arcs: Sequence[Tuple[int, int]]) -> ConvexityFamily:
    """Arc subcomplexes of the n-cycle, given as (start, edge_length)."""
    ambient = gallery("cycle", n=n)
    members = []
    for idx, (start, elen) in enumerate(arcs):
        if not (0 <= start < n):
            raise InputError(f"arc start {start} out of range")
        if not (0 <= elen <= n - 1):
            raise InputError("arc edge length must be within 0..n-1")
        if elen == 0:
            sub = subcomplex_from_maximal(ambient, [[start]])
        else:
            edges = [[(start + s) % n, (start + s + 1) % n] for s in range(elen)]
            sub = subcomplex_from_maximal(ambient, edges)
        members.append((f"arc{idx}", sub))
    return ConvexityFamily(ambient, members)


def _grow_patch(ambient: SimplicialComplex, rng: SplitMix64, grow_steps: int,
                keep_acyclic: bool = False) -> set:
    """Closure of a randomly grown, connected bag of maximal simplices."""
    maximal = ambient.maximal_simplices()
    patch = {maximal[rng.randbelow(len(maximal))]}
    verts = set().union(*patch)
    for _ in range(grow_steps):
        adjacent = [m for m in maximal if m not in patch and m & frozenset(verts)]
        if not adjacent:
            break
        cand = adjacent[rng.randbelow(len(adjacent))]
        trial = closure_of(patch | {cand})
        if keep_acyclic:
            K = SimplicialComplex(ambient.vertex_count, trial, _trusted=True)
            prof = reduced_betti(K, max(ambient.dim, 1) + 1)
            if any(prof.values):
                continue
        patch.add(cand)
        verts |= set(cand)
    return closure_of(patch)


def _random_family(ambient: SimplicialComplex, m: int, seed: int,
                   b: int = 0) -> ConvexityFamily:
    """m random members, each a union of b+1 grown connected patches,
    so every member has at most b+1 components."""
    if m < 1:
        raise InputError("need m >= 1 members")
    rng = SplitMix64(seed)
    members = []
    for i in range(m):
        sub_rng = rng.spawn(i + 1)
        simps: set = set()
        for p in range(b + 1):
            steps = sub_rng.randint(0, 3)
            simps |= _grow_patch(ambient, sub_rng.spawn(p + 101), steps)
        sub = Subcomplex(ambient, simps, _trusted=True)
        prof = reduced_betti(sub.as_complex(), 1)
        if prof.values[0] > b:
            raise InternalCheckError("random member exceeded component target")
        members.append((f"R{i + 1}", sub))
    return ConvexityFamily(ambient, members)


def _disks_on_surface(surface: SimplicialComplex, m: int, seed: int,
                      max_rounds: int = 200) -> ConvexityFamily:
    """m contractible patches on a closed surface with all subfamily
    intersections connected or empty (first topological complexity
    level zero), found by seeded retry; falls back to single-triangle
    members, whose pairwise intersections are single faces."""
    if m < 1:
        raise InputError("need m >= 1 members")
    rng = SplitMix64(seed)
    for attempt in range(max_rounds):
        sub_rng = rng.spawn(attempt + 1)
        members = []
        for i in range(m):
            simps = _grow_patch(surface, sub_rng.spawn(i + 1),
                                sub_rng.randint(1, 3), keep_acyclic=True)
            members.append((f"D{i + 1}", Subcomplex(surface, simps, _trusted=True)))
        fam = ConvexityFamily(surface, members)
        if topological_complexity(fam, 1, subfamily_cap=max(16, m)).value == 0:
            return fam
    maximal = surface.maximal_simplices()
    members = []
    for i in range(m):
        t = maximal[rng.randbelow(len(maximal))]
        members.append((f"D{i + 1}", subcomplex_from_maximal(surface, [sorted(t)])))
    fam = ConvexityFamily(surface, members)
    if topological_complexity(fam, 1, subfamily_cap=max(16, m)).value != 0:
        raise InternalCheckError("single-simplex fallback should have TC1 = 0")
    return fam


def family_gallery(name: str, **params) -> ConvexityFamily:
    """Deterministic fixture families; random ones are seed-driven."""
    makers = {
        "star": _star_family,
        "intervals": _intervals_family,
        "arcs": _arcs_family,
        "random": _random_family,
        "disks_on_surface": _disks_on_surface,
    }
    if name not in makers:
        raise InputError(f"unknown family gallery {name!r}; known: {sorted(makers)}")
    try:
        return makers[name](**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for family {name!r}: {exc}") from None
