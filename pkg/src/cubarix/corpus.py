"""Test corpus: a fixed set of named complexes plus seeded random generators."""

from __future__ import annotations

import random

from .complexes import (GridCubicalComplex, SimplicialComplex, cube_boundary, cube_complex,
                        cubical_cover)


def cuboid_strip(a: int, b: int) -> GridCubicalComplex:
    """An ``a x b`` block of unit squares."""
    return GridCubicalComplex(2, [((i, i + 1), (j, j + 1)) for i in range(a) for j in range(b)])


def random_simplicial_complex(rng: random.Random, max_vertices: int = 8,
                              max_facets: int = 6, max_facet_size: int = 4) -> SimplicialComplex:
    nv = rng.randint(1, max_vertices)
    verts = list(range(1, nv + 1))
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, min(max_facet_size, nv))
        facets.append(rng.sample(verts, size))
    return SimplicialComplex.from_facets(facets)


def random_grid_complex(rng: random.Random, max_dim: int = 3, max_boxes: int = 20,
                        side: int = 3) -> GridCubicalComplex:
    """Up to ``max_boxes`` random unit boxes of random dimension in ``[0, side]^d``."""
    d = rng.randint(1, max_dim)
    boxes = []
    for _ in range(rng.randint(1, max_boxes)):
        free = {i for i in range(d) if rng.random() < 0.6}
        box = []
        for i in range(d):
            a = rng.randrange(side) if i in free else rng.randrange(side + 1)
            box.append((a, a + 1) if i in free else (a, a))
        boxes.append(tuple(box))
    return GridCubicalComplex(d, boxes)


def random_grid_corpus(seed: int, count: int = 100) -> list[tuple[str, GridCubicalComplex]]:
    rng = random.Random(seed)
    return [(f"grid-{seed}-{i}", random_grid_complex(rng)) for i in range(count)]


def random_cover_corpus(seed: int, count: int = 50) -> list[tuple[str, object]]:
    rng = random.Random(seed)
    return [(f"cover-{seed}-{i}", cubical_cover(random_simplicial_complex(rng)))
            for i in range(count)]


def random_simplicial_corpus(seed: int, count: int = 50) -> list[tuple[str, SimplicialComplex]]:
    rng = random.Random(seed)
    return [(f"simplicial-{seed}-{i}", random_simplicial_complex(rng)) for i in range(count)]


def builtin_corpus(seed: int = 0) -> list[tuple[str, object]]:
    """Named cubical complexes: cubes, cube boundaries, strips and cubical covers."""
    out: list[tuple[str, object]] = []
    out += [(f"cube-{n}", cube_complex(n)) for n in range(5)]
    out += [(f"cube-boundary-{n}", cube_boundary(n)) for n in range(1, 5)]
    out += [("strip-2x1", cuboid_strip(2, 1)), ("strip-2x2", cuboid_strip(2, 2))]
    small = {
        "edge": [[1, 2]],
        "path": [[1, 2], [2, 3], [3, 4]],
        "triangle-boundary": [[1, 2], [2, 3], [1, 3]],
        "2-simplex": [[1, 2, 3]],
    }
    out += [(f"cover-{name}", cubical_cover(SimplicialComplex.from_facets(f)))
            for name, f in small.items()]
    rng = random.Random(seed)
    out += [(f"cover-random-{seed}-{i}", cubical_cover(random_simplicial_complex(rng)))
            for i in range(3)]
    return out
