"""
The A1 quiver and cotangent bundles of Grassmannians
====================================================

With a single vertex and framing f, the quiver variety M(d; f) is
the cotangent bundle of a Grassmannian.  The stratum of a point is the
nullity of j restricted to the image of i.
"""

# %%
from quiverbn import dims, gallery, reps
from quiverbn.quiver import a1
from quiverbn.roots import nakajima_nonempty

A = a1()
f = 5
print([dims.dim_nakajima(A, d, f) for d in range(f + 1)])
print([nakajima_nonempty(A, d, f) for d in range(f + 3)])

# %%
# k0 = 2d - f bounds every stratum from below.  For d = 4, f = 5 every
# point already has a 3-dimensional Hom space, so BN^1 is all of M.
print(dims.effective_k(A, 4, f, 1), dims.dim_bn(A, 4, f, 1), dims.dim_nakajima(A, 4, f))

# %%
# An explicit point in stratum k with a full flag, and its image under the
# second projection.
pt = gallery.a1_point(3, 5, 2)
print(reps.validate_point(pt).ok, reps.bn_stratum_of(pt.rep))
down = reps.pplus(pt)
print("quotient d:", down.d, "stratum:", reps.bn_stratum_of(down))

# %%
# Fibres over this point of the maps that add a step at the vertex.  The
# second number counts hyperplanes, as in the closed-form fibre dimension.
print(reps.fiber_dims_at(pt.rep, "1"))
print(dims.fiber_dim_pminus([1], [2]), dims.fiber_dim_pplus(A, [4], [1], [5], [2]))
