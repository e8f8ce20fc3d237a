# segments, general position and unique factorization
from snakelab import factorize, position
from snakelab.segments import longest_segment_in, position_bruteforce, s_set

i, n = 2, 3
print("allowed gaps", sorted(s_set(i, n)))

# a multiset of shifts on node 2 of A_3
values = [0, 6, 4, 2, 10, 16, 10]
segs = factorize(values, i, n)
print("factorization", segs)

# every pair is in general position
for p in range(len(segs)):
    for q in range(p + 1, len(segs)):
        print(segs[p], segs[q], position(segs[p], segs[q], i, n))

# a special pair: the union contains a longer segment
a, b = (0, 2), (4,)
v = position(a, b, i, n)
print(a, b, v)
print("longest in union", longest_segment_in(set(a) | set(b), i, n))
assert v.general == position_bruteforce(a, b, i, n)
