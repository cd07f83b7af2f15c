"""Two independent routes to the same squared norm: the certified
power-mean series against seeded Monte Carlo boundary averages, plus
the brute-force expansion oracle on a small case.

Run:  python3 demos/boundary_oracles.py
"""

from h2comp.affine import AffineSymbol, comp_bruteforce_norm_sq, comp_norm_sq
from h2comp.dseries import DirichletPoly, h2_norm_sq
from h2comp.fixtures import get_fixture
from h2comp.torus import SamplePlan, mc_comp_norm_sq


def main() -> None:
    probe = DirichletPoly({1: 1.0, 2: 0.5, 3: 0.25, 6: 0.125})
    print("probe series with support {1, 2, 3, 6}, squared norm "
          f"{h2_norm_sq(probe):.6f}")
    print()

    print("symbol            series route      MC estimate       ci95      agree?")
    for name in ("fig1-a", "fig1-b", "fig1-c", "single-prime", "single-prime-wide"):
        sym = get_fixture(name).symbol
        exact = comp_norm_sq(sym, probe)
        plan = SamplePlan(n_samples=200_000, seed=17, d=max(sym.d, 1))
        mc = mc_comp_norm_sq(sym, probe, plan)
        within = abs(mc.estimate - exact) <= 2.5 * mc.ci95 + 1e-9
        print(f"{name:<17s} {exact:<17.10f} {mc.estimate:<17.10f} "
              f"{mc.ci95:<9.1e} {'yes' if within else 'NO'}")
    print()

    sym = AffineSymbol(2.0, (0.6, 0.4))
    a = comp_norm_sq(sym, probe)
    b = comp_bruteforce_norm_sq(sym, probe, K_max=64)
    print("independent expansion oracle on a two-prime symbol:")
    print(f"  power-mean series  {a:.14f}")
    print(f"  direct expansion   {b:.14f}")
    print(f"  difference         {abs(a - b):.2e}")
    print()
    print("identical seeds give identical Monte Carlo estimates; the series")
    print("route certifies its truncation tail below 1e-10 either way.")


if __name__ == "__main__":
    main()
