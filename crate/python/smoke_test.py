"""Smoke test for the grassk Python module.

Build first with
    cargo build --release -p grassk-py --features extension-module
or install with maturin from crates/py.
"""

import importlib.machinery
import importlib.util
import pathlib
import sys


def load():
    try:
        import grassk
        return grassk
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        for name in ("libgrassk_py.so", "libgrassk_py.dylib", "grassk_py.dll"):
            path = root / "target" / profile / name
            if path.exists():
                loader = importlib.machinery.ExtensionFileLoader("grassk", str(path))
                spec = importlib.util.spec_from_file_location("grassk", path, loader=loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                sys.modules["grassk"] = module
                return module
    sys.exit("grassk extension not found; build it first")


def main():
    g = load()
    print("grassk", g.__version__)

    r = g.kgroups(8, 3)
    assert r["K0"]["rank"] == 3 and r["K0"]["invariant_factors"] == [8, 8, 8], r["K0"]
    assert r["K1"]["rank"] == 3
    assert r["engines_agree"]
    print("K0(G(8,3)) rank", r["K0"]["rank"], "torsion", r["K0"]["invariant_factors"])

    assert g.hopf_class_order(12, 5) == 5
    assert g.hopf_order_bounds(10, 3) == (3, 5)

    try:
        g.kgroups(9, 3)
    except ValueError as e:
        assert "n ≡ 0 mod 4" in str(e)
    else:
        raise AssertionError("expected ValueError")

    suite = g.identity_suite_results(max_m=4)
    assert suite and all(x["pass"] for x in suite)
    print("identities:", len(suite), "pass")

    ch = g.verify_ch_surjectivity(9, 4)
    assert ch["pass"] and ch["image_dimension"] == 6

    assert g.verify_eq22_chain(1, 2)["pass"]
    cmp = g.compare_knk_k0(8, 3)
    assert cmp["pass"] and cmp["knk_group"]["rank"] == 3
    assert g.knk_report(7, 3)["bar_group"]["rank"] == 3

    assert g.smith_invariants([[2, 4], [6, 8]]) == [2, 4]
    assert g.groebner_z(["2*x", "x^2"]) == ["2*x", "x^2"]

    p = g.PontryaginRing(8, 3)
    assert p.dimension == 3
    print(p, "ch(gamma) =", p.ch_gamma())

    x = g.Poly("x + 1")
    assert str(x * x) == str(g.Poly("x^2 + 2*x + 1"))
    assert x ** 2 == x * x

    print("ok")


if __name__ == "__main__":
    main()
