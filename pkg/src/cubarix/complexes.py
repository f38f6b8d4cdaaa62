"""Simplicial complexes, cubical complexes and barycentric subdivision.

Three complex types share one small protocol: ``cells()`` lists the
nonempty cells, ``cell_dim(c)`` gives a cell's dimension and
``below(c)`` the nonempty cells strictly contained in ``c``. Everything
generic here (f-vectors, chains, barycentric subdivision, relative pairs)
is written against that protocol.

* :class:`SimplicialComplex` keeps every face, the empty face included.
* :class:`GridCubicalComplex` keeps integer boxes ``prod [a_i, b_i]`` with
  ``b_i - a_i`` in ``{0, 1}``. Faces of the standard cube ``[0,1]^n`` are
  then exactly the vectors in ``{0, 1, *}^n``.
* :class:`CubicalFacePoset` is an abstract graded poset given by cover pairs.

The empty face is always the sentinel :data:`EMPTY_FACE`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (BudgetError, ComplexError, CubicalityError, InputParseError,
                     enumeration_budget)

EMPTY_FACE: frozenset = frozenset()

Box = tuple  # tuple of (a_i, b_i) integer pairs


class _Complex:
    """Shared machinery for the three complex types."""

    def cells(self) -> list:
        raise NotImplementedError

    def cell_dim(self, c) -> int:
        raise NotImplementedError

    def below(self, c) -> frozenset:
        raise NotImplementedError

    @property
    def dimension(self) -> int:
        cells = self.cells()
        return max((self.cell_dim(c) for c in cells), default=-1)

    def contains(self, outer, inner) -> bool:
        """True iff cell ``inner`` is a face of cell ``outer`` (or equal to it)."""
        return inner == outer or inner == EMPTY_FACE or inner in self.below(outer)

    def facets(self) -> list:
        cells = self.cells()
        covered = set()
        for c in cells:
            covered.update(self.below(c))
        return [c for c in cells if c not in covered]

    def is_pure(self) -> bool:
        return len({self.cell_dim(c) for c in self.facets()}) <= 1

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, ..., f_n]``; the empty face counts once."""
        f = [0] * (self.dimension + 2)
        f[0] = 1
        for c in self.cells():
            f[self.cell_dim(c) + 1] += 1
        return f

    def __len__(self) -> int:
        return len(self.cells())


# ---------------------------------------------------------------------------
# simplicial complexes


class SimplicialComplex(_Complex):
    """A downward-closed family of finite vertex sets.

    >>> SimplicialComplex.from_facets([{1, 2}, {2, 3}]).f_vector()
    [1, 3, 2]
    """

    def __init__(self, faces: Iterable[Iterable[Hashable]], closed: bool = False):
        fs = {frozenset(f) for f in faces}
        fs.add(EMPTY_FACE)
        if not closed:
            fs = _close(fs)
        self.faces: frozenset[frozenset] = frozenset(fs)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
        return cls(facets)

    @cached_property
    def _cells(self) -> list:
        return sorted((f for f in self.faces if f), key=lambda f: (len(f), sorted(map(repr, f))))

    def cells(self) -> list:
        return self._cells

    def cell_dim(self, c) -> int:
        return len(c) - 1

    def below(self, c) -> frozenset:
        return frozenset(
            frozenset(s) for r in range(1, len(c)) for s in itertools.combinations(c, r))

    def contains(self, outer, inner) -> bool:
        return inner <= outer

    def facets(self) -> list:
        return [f for f in self._cells if not any(f < g for g in self._cells if len(g) == len(f) + 1)]

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.faces for v in f)

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"


def _close(faces: set[frozenset]) -> set[frozenset]:
    out: set[frozenset] = set()
    for f in sorted(faces, key=len, reverse=True):
        if f in out:
            continue
        items = tuple(f)
        for r in range(len(items) + 1):
            out.update(frozenset(s) for s in itertools.combinations(items, r))
    return out


# ---------------------------------------------------------------------------
# grid cubical complexes


def _check_box(box: Box) -> Box:
    box = tuple((int(a), int(b)) for a, b in box)
    for a, b in box:
        if b - a not in (0, 1):
            raise ComplexError(f"malformed box {box}: every side must have length 0 or 1")
    return box


def box_faces(box: Box) -> Iterator[Box]:
    """All nonempty faces of a box, the box itself included."""
    options = [((a, a), (b, b), (a, b)) if b > a else ((a, b),) for a, b in box]
    return (tuple(choice) for choice in itertools.product(*options))


def box_dim(box: Box) -> int:
    return sum(b - a for a, b in box)


class GridCubicalComplex(_Complex):
    """A cubical complex made of unit boxes in ``Z^N``."""

    def __init__(self, ambient: int, boxes: Iterable[Box], closed: bool = False):
        self.ambient = int(ambient)
        bs = set()
        for box in boxes:
            box = _check_box(box)
            if len(box) != self.ambient:
                raise ComplexError(f"box {box} does not live in Z^{self.ambient}")
            if closed:
                bs.add(box)
            else:
                bs.update(box_faces(box))
        self.boxes: frozenset[Box] = frozenset(bs)

    @classmethod
    def from_facets(cls, boxes: Sequence[Box], ambient: int | None = None) -> GridCubicalComplex:
        boxes = [tuple(b) for b in boxes]
        if ambient is None:
            if not boxes:
                raise ComplexError("cannot infer the ambient dimension of an empty box list")
            ambient = len(boxes[0])
        return cls(ambient, boxes)

    @cached_property
    def _cells(self) -> list:
        return sorted(self.boxes, key=lambda b: (box_dim(b), b))

    def cells(self) -> list:
        return self._cells

    def cell_dim(self, c) -> int:
        return box_dim(c)

    def below(self, c) -> frozenset:
        return frozenset(f for f in box_faces(c) if f != c)

    def contains(self, outer, inner) -> bool:
        if inner == EMPTY_FACE:
            return True
        return all(oa <= ia and ib <= ob for (oa, ob), (ia, ib) in zip(outer, inner))

    def face_complex(self, box: Box) -> GridCubicalComplex:
        """The closed cell ``box`` as a complex of its own."""
        return GridCubicalComplex(self.ambient, [box])

    def __eq__(self, other) -> bool:
        return (isinstance(other, GridCubicalComplex) and self.ambient == other.ambient
                and self.boxes == other.boxes)

    def __hash__(self) -> int:
        return hash((self.ambient, self.boxes))

    def __repr__(self) -> str:
        return f"GridCubicalComplex(ambient={self.ambient}, f={self.f_vector()})"


def cube_complex(n: int) -> GridCubicalComplex:
    """All faces of ``[0,1]^n`` (``3^n`` nonempty cells)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GridCubicalComplex(n, [((0, 1),) * n])


def cube_boundary(n: int) -> GridCubicalComplex:
    if n < 1:
        raise ValueError("the boundary of the n-cube needs n >= 1")
    full = cube_complex(n)
    return GridCubicalComplex(n, full.boxes - {((0, 1),) * n}, closed=True)


def cube_facet(n: int, coord: int, side: int) -> Box:
    """The facet ``{x_coord = side}`` of ``[0,1]^n`` (coordinates are 0-based)."""
    return tuple((side, side) if i == coord else (0, 1) for i in range(n))


# ---------------------------------------------------------------------------
# abstract cubical face posets


class CubicalFacePoset(_Complex):
    """A graded poset of nonempty cells given by cover pairs ``(upper, lower)``.

    The bottom element (the empty face) is implicit.
    """

    def __init__(self, dims: dict[Hashable, int], covers: Iterable[tuple[Hashable, Hashable]]):
        self.dims = dict(dims)
        self.covers = frozenset((u, l) for u, l in covers)
        for u, l in self.covers:
            if u not in self.dims or l not in self.dims:
                raise ComplexError(f"cover ({u!r}, {l!r}) mentions an unknown cell")
            if self.dims[u] != self.dims[l] + 1:
                raise ComplexError(
                    f"cover ({u!r}, {l!r}) does not drop dimension by one "
                    f"({self.dims[u]} -> {self.dims[l]})")
        for c, d in self.dims.items():
            if d < 0:
                raise ComplexError(f"cell {c!r} has negative dimension; the bottom is implicit")

    @cached_property
    def _lower_covers(self) -> dict:
        low: dict = {c: set() for c in self.dims}
        for u, l in self.covers:
            low[u].add(l)
        return low

    @cached_property
    def _below(self) -> dict:
        out: dict = {}
        for c in sorted(self.dims, key=lambda c: self.dims[c]):
            s = set()
            for l in self._lower_covers[c]:
                s.add(l)
                s.update(out[l])
            out[c] = frozenset(s)
        return out

    @cached_property
    def _cells(self) -> list:
        return sorted(self.dims, key=lambda c: (self.dims[c], repr(c)))

    def cells(self) -> list:
        return self._cells

    def cell_dim(self, c) -> int:
        return self.dims[c]

    def below(self, c) -> frozenset:
        return self._below[c]

    def lower_covers(self, c) -> frozenset:
        return frozenset(self._lower_covers[c])

    def __repr__(self) -> str:
        return f"CubicalFacePoset(f={self.f_vector()})"


def to_face_poset(c: _Complex) -> CubicalFacePoset:
    """Forget the geometry of a complex and keep only its face poset."""
    dims = {cell: c.cell_dim(cell) for cell in c.cells()}
    covers = [(u, l) for u in c.cells() for l in c.below(u) if dims[l] == dims[u] - 1]
    return CubicalFacePoset(dims, covers)


# ---------------------------------------------------------------------------
# relative pairs


@dataclass(frozen=True)
class RelativePair:
    """A complex together with a subcomplex ``removed`` of it.

    ``removed`` is a set of faces; it contains :data:`EMPTY_FACE` unless the
    subcomplex is void (nothing removed at all).
    """

    complex: _Complex
    removed: frozenset = field(default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "removed", frozenset(self.removed))

    @property
    def dimension(self) -> int:
        return self.complex.dimension

    def faces(self) -> Iterator:
        if EMPTY_FACE not in self.removed:
            yield EMPTY_FACE
        for c in self.complex.cells():
            if c not in self.removed:
                yield c

    def f_vector(self) -> list[int]:
        f = [0] * (self.dimension + 2)
        f[0] = 0 if EMPTY_FACE in self.removed else 1
        for c in self.complex.cells():
            if c not in self.removed:
                f[self.complex.cell_dim(c) + 1] += 1
        return f


def f_vector(c) -> list[int]:
    """``[f_{-1}, ..., f_n]`` of a complex or a :class:`RelativePair`."""
    return c.f_vector()


def euler_char_reduced(c) -> int:
    # index j of the f-vector holds f_{j-1}
    return sum(fj if j % 2 else -fj for j, fj in enumerate(c.f_vector()))


# ---------------------------------------------------------------------------
# chains and barycentric subdivision


def _check_budget(c: _Complex, budget: int | None) -> None:
    limit = enumeration_budget(budget)
    if len(c.cells()) > limit:
        raise BudgetError(
            f"complex has {len(c.cells())} nonempty cells, over the enumeration budget {limit}")


def chains(c: _Complex, budget: int | None = None) -> list[tuple]:
    """All nonempty chains ``s_0 < s_1 < ... < s_k`` of nonempty cells.

    Each chain is a tuple listed from the top cell downwards, and chains
    come grouped by their top cell in :meth:`cells` order.
    """
    _check_budget(c, budget)
    memo: dict = {}
    out: list[tuple] = []
    for top in c.cells():  # sorted by dimension, so everything below is memoised
        ext = [(top,)]
        for s in c.below(top):
            ext.extend((top,) + ch for ch in memo[s])
        memo[top] = ext
        out.extend(ext)
    return out


def validate_or_raise(c: _Complex) -> None:
    if isinstance(c, CubicalFacePoset):
        report = validate_cubical(c)
        if not report.ok:
            raise CubicalityError(f"cell {report.failing_cell!r}: {report.reason}")


def barycentric_sd(c: _Complex, budget: int | None = None) -> SimplicialComplex:
    """Order complex of the nonempty cells: vertices are cells, faces are chains."""
    validate_or_raise(c)
    return SimplicialComplex((frozenset(ch) for ch in chains(c, budget)), closed=True)


def relative_sd_pair(c: _Complex, removed_facets: Iterable, budget: int | None = None) -> RelativePair:
    """``(sd(c), G)`` where ``G`` holds the chains whose top cell lies in a removed facet."""
    removed_facets = list(removed_facets)
    cellset = set(c.cells())
    for F in removed_facets:
        if F not in cellset:
            raise ComplexError(f"facet {F!r} is not a cell of the complex")
    validate_or_raise(c)
    faces = []
    removed = set()
    for ch in chains(c, budget):
        face = frozenset(ch)
        faces.append(face)
        if any(c.contains(F, ch[0]) for F in removed_facets):
            removed.add(face)
    if removed_facets:
        removed.add(EMPTY_FACE)
    return RelativePair(SimplicialComplex(faces, closed=True), frozenset(removed))


def canonical_facets(n: int, k: int) -> list[Box]:
    """``{x_1 = 1}`` plus the antipodal pairs in coordinates ``2..k`` (1-based)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    out = [cube_facet(n, 0, 1)]
    for i in range(1, k):
        out += [cube_facet(n, i, 0), cube_facet(n, i, 1)]
    return out


def admissible_facet_choices(n: int, k: int) -> Iterator[list[Box]]:
    """Every way to pick one facet and ``k-1`` antipodal pairs of ``[0,1]^n``."""
    for single in range(n):
        rest = [i for i in range(n) if i != single]
        for pairs in itertools.combinations(rest, k - 1):
            for side in (0, 1):
                chosen = [cube_facet(n, single, side)]
                for i in pairs:
                    chosen += [cube_facet(n, i, 0), cube_facet(n, i, 1)]
                yield chosen


def c_nk(n: int, k: int, facets: Sequence[Box] | None = None,
         budget: int | None = None) -> RelativePair:
    """The relative complex ``sd([0,1]^n)`` minus the faces in ``2k-1`` facets.

    ``k = 0`` removes nothing and ``k = n+1`` removes the whole boundary
    (for ``n = 0`` that is just the empty face). ``facets`` overrides the
    canonical choice for ``1 <= k <= n``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= k <= n + 1:
        raise ValueError(f"k must lie in 0..{n + 1}, got {k}")
    cube = cube_complex(n)
    if k == 0:
        return RelativePair(barycentric_sd(cube, budget))
    if k == n + 1:
        top = ((0, 1),) * n
        sd = barycentric_sd(cube, budget)
        removed = {f for f in sd.faces if f and top not in f}
        removed.add(EMPTY_FACE)
        return RelativePair(sd, frozenset(removed))
    if facets is None:
        facets = canonical_facets(n, k)
    return relative_sd_pair(cube, facets, budget)


# ---------------------------------------------------------------------------
# cubical barycentric cover, boundaries


def cubical_cover(delta: SimplicialComplex) -> CubicalFacePoset:
    """Intervals ``[s, t]`` with ``{} != s <= t`` in ``delta``, of dimension ``|t| - |s|``."""
    cells = [f for f in delta.cells()]
    if not cells:
        raise ComplexError("the cubical cover needs a nonempty complex")
    dims = {}
    covers = []
    for t in cells:
        for r in range(1, len(t) + 1):
            for s in itertools.combinations(sorted(t, key=repr), r):
                s = frozenset(s)
                dims[(s, t)] = len(t) - len(s)
                for v in t - s:
                    covers.append(((s, t), (s | {v}, t)))
                    covers.append(((s, t), (s, t - {v})))
    return CubicalFacePoset(dims, covers)


def boundary_complex(delta: SimplicialComplex) -> SimplicialComplex:
    """Closure of the ridges that lie in exactly one facet."""
    facets = delta.facets()
    if not facets:
        raise ComplexError("the empty complex has no boundary")
    dims = {len(f) - 1 for f in facets}
    if len(dims) != 1:
        raise ComplexError(f"boundary needs a pure complex, facet dimensions are {sorted(dims)}")
    count: dict[frozenset, int] = {}
    for f in facets:
        for v in f:
            ridge = f - {v}
            count[ridge] = count.get(ridge, 0) + 1
    if any(m >= 3 for m in count.values()):
        bad = next(r for r, m in count.items() if m >= 3)
        raise ComplexError(f"ridge {sorted(bad, key=repr)} lies in {count[bad]} facets")
    return SimplicialComplex([r for r, m in count.items() if m == 1])


# ---------------------------------------------------------------------------
# cubicality validation


@dataclass
class CubicalValidation:
    ok: bool
    failing_cell: Hashable | None = None
    reason: str = ""
    counts_only: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


ISOMORPHISM_MAX_DIM = 4


def _standard_cube_sets(d: int) -> set[frozenset]:
    """Vertex sets of the nonempty faces of ``{0,1}^d``."""
    out = set()
    for face in itertools.product((0, 1, None), repeat=d):
        verts = itertools.product(*[(0, 1) if v is None else (v,) for v in face])
        out.add(frozenset(verts))
    return out


def _cube_isomorphic(atoms_of: dict, d: int) -> bool:
    """Is the set family ``atoms_of.values()`` the face family of the d-cube?

    Backtracking over bijections of atoms onto ``{0,1}^d`` that map the
    1-skeleton onto the cube graph, pruned by degree; each complete map is
    then checked against every face.
    """
    atoms = sorted({a for s in atoms_of.values() for a in s}, key=repr)
    if len(atoms) != 2 ** d:
        return False
    edges = [s for s in atoms_of.values() if len(s) == 2]
    adj = {a: set() for a in atoms}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    if any(len(adj[a]) != d for a in atoms):
        return False
    target = _standard_cube_sets(d)
    family = set(atoms_of.values())
    cube_pts = list(itertools.product((0, 1), repeat=d))
    cube_adj = {p: {q for q in cube_pts if sum(x != y for x, y in zip(p, q)) == 1} for p in cube_pts}
    # BFS order keeps every new atom adjacent to an already placed one
    order = [atoms[0]]
    seen = {atoms[0]}
    for a in order:
        for b in sorted(adj[a], key=repr):
            if b not in seen:
                seen.add(b)
                order.append(b)
    if len(order) != len(atoms):
        return False

    phi: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return {frozenset(phi[a] for a in s) for s in family} == target
        a = order[i]
        placed = [b for b in adj[a] if b in phi]
        cands = cube_pts if not placed else set.intersection(*(cube_adj[phi[b]] for b in placed))
        for p in cands:
            if p in used:
                continue
            # non-neighbours already placed must not land next to p
            if any(phi[b] in cube_adj[p] for b in phi if b not in adj[a]):
                continue
            phi[a] = p
            used.add(p)
            if extend(i + 1):
                return True
            del phi[a]
            used.discard(p)
        return False

    return extend(0)


def validate_cubical(p: _Complex, max_iso_dim: int = ISOMORPHISM_MAX_DIM) -> CubicalValidation:
    """Check that every cell's lower interval is the face poset of a cube.

    Face counts ``2^(d-j) C(d, j)`` are checked for every cell. Cells of
    dimension ``<= max_iso_dim`` also get an exhaustive isomorphism check;
    larger cells are listed in ``counts_only``.
    """
    report = CubicalValidation(ok=True)
    for c in p.cells():
        d = p.cell_dim(c)
        lower = set(p.below(c)) | {c}
        counts = [0] * (d + 1)
        for s in lower:
            counts[p.cell_dim(s)] += 1
        expected = [2 ** (d - j) * comb(d, j) for j in range(d + 1)]
        if counts != expected:
            return CubicalValidation(False, c, f"face counts {counts}, expected {expected}",
                                     report.counts_only)
        if d > max_iso_dim:
            report.counts_only.append(c)
            continue
        atoms_of = {s: frozenset(a for a in (set(p.below(s)) | {s}) if p.cell_dim(a) == 0)
                    for s in lower}
        if len(set(atoms_of.values())) != len(lower):
            return CubicalValidation(False, c, "two faces share the same vertex set",
                                     report.counts_only)
        for s in lower:
            for t in lower:
                leq = s == t or s in p.below(t)
                if leq != (atoms_of[s] <= atoms_of[t]):
                    return CubicalValidation(False, c, "order differs from vertex-set inclusion",
                                             report.counts_only)
        if not _cube_isomorphic(atoms_of, d):
            return CubicalValidation(False, c, "lower interval is not isomorphic to a cube",
                                     report.counts_only)
    return report


# ---------------------------------------------------------------------------
# JSON input


def complex_from_json(doc: dict) -> _Complex:
    """Build a complex from one of the three accepted JSON schemas.

    Schema problems raise :class:`InputParseError`; a well-formed document
    describing an invalid complex raises :class:`ComplexError`.
    """
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InputParseError("expected an object with a 'kind' field")
    kind = doc["kind"]
    try:
        if kind == "simplicial":
            facets = doc["facets"]
            if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
                raise InputParseError("'facets' must be a list of vertex lists")
            if not all(isinstance(v, int) for f in facets for v in f):
                raise InputParseError("vertex ids must be integers")
            return SimplicialComplex.from_facets(facets)
        if kind == "grid":
            ambient = int(doc["ambient"])
            boxes = []
            for b in doc["boxes"]:
                lo, hi = b["min"], b["max"]
                if len(lo) != ambient or len(hi) != ambient:
                    raise InputParseError(f"box {b} does not have {ambient} coordinates")
                boxes.append(tuple(zip(lo, hi)))
            return GridCubicalComplex(ambient, boxes)
        if kind == "poset":
            dims = {}
            for cell in doc["cells"]:
                cid = cell["id"]
                if not isinstance(cid, str):
                    raise InputParseError("poset cell ids must be strings")
                dims[cid] = int(cell["dim"])
            covers = []
            for pair in doc["covers"]:
                if len(pair) != 2:
                    raise InputParseError(f"cover {pair} is not a pair")
                covers.append((pair[0], pair[1]))
            return CubicalFacePoset(dims, covers)
    except (KeyError, TypeError) as exc:
        raise InputParseError(f"malformed {kind} document: {exc}") from exc
    raise InputParseError(f"unknown kind {kind!r}")


def complex_to_json(c: _Complex) -> dict:
    """Inverse of :func:`complex_from_json` (poset ids become strings)."""
    if isinstance(c, SimplicialComplex):
        return {"kind": "simplicial",
                "facets": sorted(sorted(f) for f in c.facets())}
    if isinstance(c, GridCubicalComplex):
        return {"kind": "grid", "ambient": c.ambient,
                "boxes": [{"min": [a for a, _ in b], "max": [b_ for _, b_ in b]}
                          for b in sorted(c.facets())]}
    if isinstance(c, CubicalFacePoset):
        name = {cell: str(i) for i, cell in enumerate(c.cells())}
        return {"kind": "poset",
                "cells": [{"id": name[x], "dim": c.cell_dim(x)} for x in c.cells()],
                "covers": sorted([name[u], name[l]] for u, l in c.covers)}
    raise TypeError(f"cannot serialise {type(c).__name__}")
