"""
Positive roots and nonemptiness
===============================

M(d; f) is nonempty exactly when (d, 1) is a positive root of the graph
with an extra vertex joined to each v by f_v edges.  Parabolic loci are
decided by stripping the flag and recursing on a smaller pair.
"""

# %%
import numpy as np

from quiverbn import roots
from quiverbn.quiver import a_n, jordan

g = roots.framed_graph(a_n(3), [1, 0, 1])
for alpha in ([1, 1, 1, 1], [1, 2, 1, 1], [2, 2, 2, 1]):
    v = roots.is_positive_root(g, alpha)
    print(alpha, v.kind.value, v.trace)

# %%
# Loops make imaginary roots.  On the Jordan quiver every d is allowed.
print([roots.nakajima_nonempty(jordan(), d, 1) for d in range(6)])

# %%
# The recursion behind the nonemptiness test, on an empty case.
verdict = roots.parabolic_nonempty_trace(jordan(), 2, 2, 1)
print(verdict.nonempty, verdict.trace)

# %%
# A grid of verdicts for a two-vertex quiver.
q = a_n(2)
grid = np.array([[roots.bn_nonempty(q, [2, 2], [2, 1], [a, b]) for b in range(3)] for a in range(3)])
print(grid.astype(int))
