"""
Random cubical complexes
========================

Draw seeded random grid complexes and cubical covers of random simplicial
complexes, then tally how the three h(sd L) routes and the certificate
pipeline behave across the whole batch.
"""

import sys
from collections import Counter

import numpy as np

from cubarix.corpus import random_cover_corpus, random_grid_corpus
from cubarix.hvector import cubical_h
from cubarix.realroots import certify_corollary
from cubarix.transform import transform_routes

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
corpus = random_grid_corpus(seed, 100) + random_cover_corpus(seed + 1, 50)

# %% sizes
dims = np.array([L.dimension for _, L in corpus])
cells = np.array([len(L) for _, L in corpus])
values, counts = np.unique(dims, return_counts=True)
print("dimension counts:", dict(zip(values.tolist(), counts.tolist())))
print(f"cells per complex: min {cells.min()}, median {int(np.median(cells))}, max {cells.max()}")

# %% route agreement
agree = [len(set(transform_routes(L).values())) == 1 for _, L in corpus]
print(f"routes agree on {sum(agree)} / {len(corpus)}")

# %% how often is the cubical h-vector nonnegative?
negative = [name for name, L in corpus if not cubical_h(L).is_nonnegative()]
print(f"{len(negative)} complexes have a negative cubical h-entry, e.g. {negative[:3]}")

# %% certificates where the hypothesis holds
status = Counter(certify_corollary(L).status for _, L in corpus)
print(dict(status))
