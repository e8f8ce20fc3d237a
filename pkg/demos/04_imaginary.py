# highest l-weights of imaginary modules inside W(b) x W(b)^dual
from snakelab.imaginary import (
    ImaginaryInput,
    a2_family,
    certify,
    classify_dominant_targets,
    dsub_weights,
    imaginary_weight,
)
from snakelab import Y

inp = ImaginaryInput(3, 2, (4, 6))
print("omega =", imaginary_weight(inp))  # the rank 3 example

cl = classify_dominant_targets(inp)
for c in cl.candidates:
    print(c.pi, "m =", c.m, "in W:", c.in_weyl, "second filter:", c.second_filter)
print("surviving:", cl.filtered)

cert = certify(inp)
print(cert.to_json()["certificates"], cert.ok)

for b in [(0, 2), (0, 2, 4)]:
    inp = ImaginaryInput(5, 3, b)
    print(b, imaginary_weight(inp), certify(inp).ok)

# weights for the diagonal subalgebra J = [2, 3] in rank 4
d = dsub_weights(1, 4, Y(4, 2, 0) * Y(4, 3, 5))
print(d.pi_plus, d.pi_minus, d.plus_identity(), d.minus_identity(), d.printed_identity())

fam = a2_family(2, 2, 3)
print(fam.pi, "|", fam.dual)
