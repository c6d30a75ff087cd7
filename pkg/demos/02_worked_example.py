# Step through the closed form for (a, b) = (3, 2), g = 4: partitions, c_lambda, H, E, mu.
from latticeflaw.formula import E, H, c_lambda, mu, partitions_of, rational_catalan

a, b, g = 3, 2, 4

for n in range(g, 0, -1):
    print(f"partitions of {n}:", ", ".join(str(lam) for lam in partitions_of(n)))

print("c_i:", [str(rational_catalan(i, a, b)) for i in range(1, g + 1)])

for n in range(1, g + 1):
    values = ", ".join(f"c{lam} = {c_lambda(lam, a, b)}" for lam in partitions_of(n))
    print(f"  {values}")

## H and E come out as integers even though most c_lambda are fractions
for n in range(g + 1):
    print(f"H_{n} = {H(n, a, b):>6}   E_{n} = {E(n, a, b):>6}")

## mu_j(g) is a truncated alternating sum of E_i * H_(g-i)
for j in range(g):
    terms = " + ".join(f"({(-1) ** i * E(i, a, b)})*{H(g - i, a, b)}" for i in range(j + 1))
    print(f"mu_{j}({g}) = {terms} = {mu(j, g, a, b)}")

## The full alternating sum vanishes
print("sum_i (-1)^i E_i H_(g-i) =", sum((-1) ** i * E(i, a, b) * H(g - i, a, b) for i in range(g + 1)))
