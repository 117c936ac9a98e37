from fractions import Fraction

import pytest

import wittcoh as w


def test_brackets():
    assert w.Algebra.witt().bracket("L[1]", "L[-1]") == "-2*L[0]"
    a = w.Algebra.wa("2")
    assert a.bracket("L[1]", "A[0]") == "5*A[1]"
    assert a.jacobi_defect("L[2]", "L[-1]", "A[3]") == "0"
    assert w.Algebra.wb("inf").name == "W_B(inf)"
    assert w.Algebra.tensor_density(Fraction(1, 2), 0).name == "W(1/2,0)"


def test_dimensions():
    assert w.h2_dimensions(w.Algebra.wa(0), 8) == {"vir": 1, "ab": 0, "mix": 2, "total": 3}
    assert w.hl2_dimension(w.Algebra.wa(0), 8) == 4
    assert w.inv_dimension(w.Algebra.wb(1), 6) == 0
    assert w.h1_dimension(w.Algebra.wb(0), 8) == 3
    es = w.exact_sequence_report(w.Algebra.wa(1), 6)
    assert es["ok"] and es["hl2"] - es["h2"] == 1


def test_errors():
    with pytest.raises(w.WittError, match="WindowTooSmall"):
        w.h2_dimensions(w.Algebra.wa(0), 3)
    with pytest.raises(w.WittError, match="NoModuleFamily"):
        w.h2_dimensions(w.Algebra.witt(), 8)
    with pytest.raises(ValueError):
        w.Algebra.wa("1/0")


def test_extensions():
    assert w.virasoro().bracket("L[2]", "L[-2]") == "-4*L[0] + 1/2*c[Vir]"
    assert w.verify_extension(w.vir_b("inf"), 6) == []
    assert w.verify_extension(w.cubic_mixing_extension(w.Algebra.wa(1)), 6)


def test_automorphisms():
    spec = w.Algebra.wa(Fraction(5, 7))
    s1 = {"a": 1, "b": 2, "alpha": 2, "xi": 3}
    s2 = {"a": 4, "b": 5, "alpha": 1, "xi": 2}
    c = w.compose_auts(s1, s2, spec)
    assert (c["k"], c["a"], c["b"], c["alpha"], c["xi"]) == (0, 13, 17, 2, 6)
    assert w.check_aut(c, spec, 6)
    inv = w.inverse_aut(s1, spec)
    assert w.compose_auts(inv, s1, spec)["a"] == 0
    assert w.apply_aut({"alpha": 2}, spec, "L[3]") == "8*L[3]"
    assert w.inner_identity_check("inf", 8)


def test_solve_and_commands():
    r = w.solve("mixing", algebra="wa", lam=0, window=6)
    assert r["dims"]["cocycles"] == 2
    assert all(isinstance(v, Fraction) for vec in r["basis"] for v in vec.values())
    assert w.solve("inv", algebra="wb", lam=7)["dims"] == {"inv": 0}
    code, out, _ = w.tables(algebra="wab", a=0, b=2)
    assert code == 0 and '"h2": 1' in out
    code1, out1, _ = w.verify(algebra="wb", lam=1, window=5, suite="aut", seed=3)
    code2, out2, _ = w.verify(algebra="wb", lam=1, window=5, suite="aut", seed=3)
    assert code1 == 0 and out1 == out2
    assert w.check_f_equivariance("inf", 6)
