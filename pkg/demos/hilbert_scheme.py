"""
Brill-Noether loci on the Hilbert scheme of points
==================================================

The Jordan quiver with framing 1 gives the Hilbert scheme of d points in
the plane.  Torus-fixed points are monomial ideals, indexed by partitions,
and the Hom dimension at such a point counts the corners of its diagram.
"""

# %%
# Dimensions first.  BN^k has dimension 2d - k(k+1), and it is nonempty
# exactly when that number is non-negative.
from quiverbn import dims, gallery, reps
from quiverbn.quiver import jordan
from quiverbn.roots import parabolic_nonempty

J = jordan()
d = 6
for k in range(d + 1):
    print(k, dims.dim_bn(J, d, 1, k), parabolic_nonempty(J, d, k, 1))

# %%
# A monomial point.  The partition (3, 1) has two corners, so the point
# lies in the stratum r = 2.
rep = gallery.hilb_fixed_point((3, 1))
print("flat:", reps.is_flat(rep), "stable:", reps.is_stable(rep))
print("corners:", gallery.corners((3, 1)), "stratum:", reps.bn_stratum_of(rep))

# %%
# Choose a full flag inside the Hom space built from corner coordinates
# and certify smoothness with the tangent complex.  The middle cohomology
# has the dimension predicted by the closed form.
pt = next(gallery.corner_flag_points((3, 1), 2))
t = reps.tangent_complex(pt)
print(t)
print("closed form:", dims.dim_parabolic_full(J, 4, 2, 1))

# %%
# Passing to the chain presentation quotients one corner at a time.
ch = reps.chain_from_flag(pt)
print([int(level.d[0]) for level in ch.levels])
print("block form pattern:", reps.block_form_check(ch))

# %%
# The strata table of BN^1 for d = 4 shows where the first projection
# has positive-dimensional fibres.
from quiverbn.roots import strata_table

for row in strata_table(J, 4, 1, 1):
    print(row)
