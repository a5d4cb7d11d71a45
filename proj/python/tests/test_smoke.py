import pytest

import sgfact


def test_numerical_invariants():
    assert sgfact.lset([17, 29, 37, 47]) == [111]
    assert sgfact.f2l([17, 29, 37, 47]) == 218
    assert sgfact.ceq([17, 29, 37, 47]) == 5
    assert sgfact.lset([3, 5]) is None
    assert sgfact.tset([3, 5]) == [15]
    assert sgfact.apery([3, 5], [3]) == [0, 5, 10]


def test_errors_carry_kind():
    with pytest.raises(sgfact.SgfactError, match="^UndefinedForN2"):
        sgfact.f2l([3, 5])
    with pytest.raises(sgfact.SgfactError):
        sgfact.lset([0, 3])


def test_cli_wrapper():
    code, out = sgfact.cli("lset", {"numerical": [3, 5, 7]})
    assert code == sgfact.EXIT_OK
    assert out == {"generators": [10], "principal": True}
    code, out = sgfact.cli(
        "apery",
        {"rank": 1, "torsion": [2], "generators": [[2, 0], [3, 1], [4, 1]]},
        b=[[12, 0]],
    )
    assert code == sgfact.EXIT_OK and out["count"] == 24
    code, _ = sgfact.cli("apery", {"rank": 2, "generators": [[0, 2], [1, 2], [1, 1], [3, 2], [4, 2]]}, b=[[3, 6]])
    assert code == sgfact.EXIT_INFINITE
    code, out = sgfact.cli(
        "closed-form", family="almost-arithmetic", what="lset", params={"m1": 17, "e": 3, "n": 5, "b": 7}, verified=True
    )
    assert code == sgfact.EXIT_OK
    assert out["formula_generators"] == [40, 43, 46, 49, 52, 102, 105]


def test_not_reduced_exit_code():
    code, _, err = sgfact.run(["validate", "--input", '{"rank":1,"generators":[[1],[-1]]}'])
    assert code == sgfact.EXIT_NOT_REDUCED
