# Follow phi and psi on concrete paths for (a, b, g) = (4, 3, 4).
from latticeflaw import BoundarySpec, LatticePath, classify_codomain, classify_domain, flaw_count, phi, psi
from latticeflaw.paths import boundary_points, hpbs, lpas

spec = BoundarySpec(4, 3, 4)


def show(label, p):
    h_elev, h_pts = hpbs(p, spec)
    l_elev, l_pts = lpas(p, spec)
    print(f"{label}: {p}  flaws={flaw_count(p, spec)}")
    print(f"    boundary points at steps {[pt.index for pt in boundary_points(p, spec)]}")
    print(f"    HPBs (elevation {h_elev}) at steps {[pt.index for pt in h_pts]}")
    print(f"    LPAs (elevation {l_elev}) at steps {[pt.index for pt in l_pts]}")


## A path in X: cut after the last boundary point, then at the last HPB; swap the two tail blocks
p = LatticePath("EENNENEEENNENE" + "EENEENENNE" + "NNEE")
show("p", p)
cls = classify_domain(p, spec)
print("    class", cls.tag, "cut at", cls.split_indices, "parts", [str(x) for x in cls.parts])
image = phi(p, spec)
show("phi(p)", image)
print("    codomain class", classify_codomain(image, spec).tag)
print("    psi(phi(p)) == p:", psi(image, spec) == p)
print()

## A path in Y: the flawed head q is cut at its last LPA and the tail r is moved in between
p = LatticePath("EENNENEEENN" + "ENE" + "EEENENENNNENEE")
show("p", p)
cls = classify_domain(p, spec)
print("    class", cls.tag, "cut at", cls.split_indices, "parts", [str(x) for x in cls.parts])
image = phi(p, spec)
show("phi(p)", image)
print("    codomain class", classify_codomain(image, spec).tag)
print("    psi(phi(p)) == p:", psi(image, spec) == p)
