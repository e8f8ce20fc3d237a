# inflation from rank 2 to rank 5 (i = 2)
from snakelab import Y, LWeight
from snakelab.inflation import (
    InflationTriple,
    corrected_root_product,
    inflate_path,
    phi,
    phi_root,
    remark_root_product,
    verify_indstep_i,
    verify_inflpaths,
)
from snakelab.paths import enumerate_paths

t = InflationTriple(2, 2, 5)
print("I =", t.nodes)
x = LWeight(2, {(1, -1): 1, (2, 2): 1})
print(x, "->", phi(x, t))

p = enumerate_paths(1, 0, 2)[1]
g = inflate_path(p, t)
print(p.values, "->", g.values)
print(phi(p.monomial(), t) == g.monomial())

# image of a simple root; the product with base ia+1 matches, i(a+1) is shifted
j, a = 1, 0
print(phi_root(j, a, t))
print(corrected_root_product(j, a, t) == phi_root(j, a, t))
print(remark_root_product(j, a, t) == phi_root(j, a, t).shift(t.i - 1))

print("inflpaths:", verify_inflpaths(Y(2, 1, 0) * Y(2, 2, 3), t))
print("indstep (i):", [verify_indstep_i(p, t) for p in t.nodes])
