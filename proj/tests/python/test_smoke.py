import weylcomb


def test_table_row():
    row = weylcomb.coefficients(4)
    assert row[()] == 1
    assert row[(1,)] == 6
    assert row[(1, 1)] == 7
    assert sum(row.values()) == 24
    assert weylcomb.closed_form(5, [2, 1]) == 30


def test_big_integers():
    row = weylcomb.coefficients(18)
    assert sum(row.values()) == 6402373705728000


def test_universal_power():
    assert weylcomb.universal_power(2) == "y0^2*t^2 + y0*y1*t"


def test_normal_order():
    assert weylcomb.normal_order("y^2*x^2") == "x^2*y^2 + 4*x*y + 2"
    assert weylcomb.normal_order("y x", algebra="qplane", q="3") == "3*x*y"


def test_parse_error():
    try:
        weylcomb.normal_order("y*(x")
    except ValueError as e:
        assert "offset 3" in str(e)
    else:
        raise AssertionError("expected a parse error")


def test_classical():
    assert [weylcomb.stirling2(5, k) for k in range(1, 6)] == [1, 15, 25, 10, 1]
    assert weylcomb.bell(10) == 115975
    assert weylcomb.generalized_stirling(3, 2, 2, 1) == 6
    assert weylcomb.generalized_stirling(3, 2, 2, 1, route="weyl") == 6
    assert weylcomb.modp_all_zero(3, 2)


def test_ode():
    assert weylcomb.ode_solve(["1", "1"], 4) == ["1", "1", "1", "1"]


def test_qgha_classify():
    mods = weylcomb.classify("fp:5", 2, "h^2+1", "h")
    assert [m["dimension"] for m in mods] == sorted(m["dimension"] for m in mods)
    assert sum(1 for m in mods if m["family"] == "a") == 4
    assert all(m["p"] == 5 for m in mods)


def test_cli_entry():
    code, out, _ = weylcomb.run_cli(["stirling", "--kind", "bell", "--n", "5"])
    assert code == 0 and out == "52\n"
