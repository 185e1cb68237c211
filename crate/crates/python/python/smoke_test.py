"""Smoke test for the su3py extension module.

    maturin develop --release -m crates/python/Cargo.toml
    python crates/python/python/smoke_test.py
"""

from fractions import Fraction

import su3py


def main():
    assert su3py.dimension(3, 2) == 42
    assert su3py.tspin_list(1, 1) == [0, 1, 1, 2]
    assert su3py.upc2_map(1, 1)[(3, 1)] == Fraction(3, 2)
    solved = su3py.oracle_solve(2, 1)
    closed = su3py.upc2_map(2, 1)
    assert all(closed[k] == v for k, v in solved.items())

    weights = su3py.weight_multiplicities(5, 3)
    assert sum(weights.values()) == 120
    assert [n for (t, y), n in sorted(weights.items()) if y == -4] == [1, 2, 3, 4, 3, 2, 1]

    report = su3py.verify(3, 2)
    assert su3py.verify(2, 1, oracle=True)["relations"][-1][:2] == ("oracle", True)
    assert report["passed"], report
    assert sum(1 for _, exact, _ in report["relations"] if exact) == 30

    gs = su3py.GeneratorSet(1, 0)
    assert gs.commutators_exact() == 28
    assert gs.entries("T3") == [(2, 2, [(1, 2, 1)]), (3, 3, [(-1, 2, 1)])]
    f8 = gs.to_dense("F8")
    assert abs(sum(f8[i][i] for i in range(3))) < 1e-12

    conj = su3py.GeneratorSet(0, 1)
    assert gs.negative_transpose() == conj
    assert conj.negative_transpose() == gs

    try:
        su3py.GeneratorSet(1, 0).entries("Wp")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown matrix name accepted")

    print("su3py smoke test ok")


if __name__ == "__main__":
    main()
