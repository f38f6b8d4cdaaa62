"""
Subdividing the boundary of a cube
==================================

Walk one complex through the whole pipeline: cubical h-vector, the
h-polynomial of its barycentric subdivision computed three ways, and an
exact certificate that the result is real-rooted and interlaced by B_n.
"""

from cubarix.complexes import barycentric_sd, cube_boundary
from cubarix.eulerian import eulerian_B
from cubarix.hvector import cubical_h
from cubarix.polynomial import pretty
from cubarix.realroots import interlaces, is_real_rooted, refine
from cubarix.transform import transform_routes

L = cube_boundary(3)
print("f-vector:", L.f_vector())
print("cubical h:", pretty(cubical_h(L)))

# %% the subdivision itself is a simplicial 2-sphere with 26 vertices
sd = barycentric_sd(L)
print("sd f-vector:", sd.f_vector())

# %% three routes to h(sd L)
for route, p in transform_routes(L).items():
    print(f"{route:>15}: {pretty(p)}")

# %% real roots, isolated with Sturm sequences and refined to width 1/1000
H = transform_routes(L)["direct"]
cert = refine(is_real_rooted(H), "1/1000")
for iv in cert.isolating_intervals:
    print(f"root in [{float(iv.lo):.4f}, {float(iv.hi):.4f}]  multiplicity {iv.multiplicity}")

# %% B_2 interlaces it
il = interlaces(eulerian_B(2), H)
print("interlaces:", il.interlaces, " strict:", il.strict)
for lo, hi, tag, *_ in il.alternation_witness:
    print(f"  {tag:>2}  [{float(lo):8.4f}, {float(hi):8.4f}]")
