# g = 1 (all flaw counts equally likely), slope 1 (Catalan convolution), and the rotation count.
from latticeflaw import BoundarySpec, E, enumerate_paths, flaw_count, mu, mu_unit_slope, oracle_flaw_table, rotate180
from latticeflaw.bijection import cyclic_shift_structure
from latticeflaw.paths import boundary_points

## g = 1: every k has binom(a+b, a)/(a+b) paths, and phi is a cyclic shift
spec = BoundarySpec(5, 2, 1)
print("N_k(1) for (5, 2):", oracle_flaw_table(spec).counts)
print(cyclic_shift_structure(spec).summary())

## a = b = 1: the block values are Catalan convolutions
for g in range(1, 8):
    row = [mu_unit_slope(j, g) for j in range(g)]
    assert row == [mu(j, g, 1, 1) for j in range(g)]
    print(f"g={g}:", row)

## Max-flaw paths rotate onto paths that stay strictly below the boundary
spec = BoundarySpec(3, 2, 3)
max_flaw = [p for p in enumerate_paths(spec) if flaw_count(p, spec) == spec.max_flaws]
rotated = [rotate180(p) for p in max_flaw]
assert all(flaw_count(p, spec) == 0 and len(boundary_points(p, spec)) == 2 for p in rotated)
print(f"{len(max_flaw)} max-flaw paths; (-1)^(g+1) E_g =", (-1) ** (spec.g + 1) * E(spec.g, spec.a, spec.b))
