# paths, prime snake q-characters and the extended T-system
from snakelab import Y, enumerate_paths, simple_char, ext_tsystem, verify_identity
from snakelab.paths import PrimeSnake, enumerate_tuples

n = 3
paths = enumerate_paths(2, 0, n)
print(len(paths), "paths in P_(2,0)")  # C(4,2)
for p in paths:
    print(p.values, p.monomial())

snake = PrimeSnake(n, ((1, 0), (2, 3)))
tuples = list(enumerate_tuples(snake))
ch = simple_char(snake.lweight())
print(len(tuples), "non-crossing tuples,", len(ch), "terms, dim", ch.dimension())
print("dominant:", ch.dominant_monomials())

# [V(x)][V(y)] = [V(top)][V(bottom)] + [V(w+)][V(w-)]
t = ext_tsystem(Y(n, 2, 0) * Y(n, 2, 2), Y(n, 2, 2) * Y(n, 2, 4))
print(t.lhs, "=", t.rhs)
print("holds:", verify_identity(t.lhs, t.rhs))

# n = 1: 2*2 = 3 + 1
t1 = ext_tsystem(Y(1, 1, 0), Y(1, 1, 2))
print([simple_char(x).dimension() for x in (Y(1, 1, 0), Y(1, 1, 2), Y(1, 1, 0) * Y(1, 1, 2))])
