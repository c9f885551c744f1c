import pytest

import prolong


def test_profile_conformal_killing():
    p = prolong.profile("riemannian", 3, "lambda1", 1)
    assert p["total"] == 10
    assert p["N"] == 2
    assert p["levels"] == [3, 4, 3]


def test_profile_matches_oracle():
    p = prolong.profile("affine", 3, "lambda1", 1)
    dims = prolong.oracle_dims("affine", 3, "lambda1", 1)
    assert dims == [3, 3]
    assert sum(dims) == p["total"]


def test_flat_solution_dims():
    assert prolong.flat_solution_dim("affine", 3, "lambda1", 1) == 6
    assert prolong.flat_solution_dim("riemannian", 3, "trivial", 2) == 5


def test_identity_battery_passes():
    checks = prolong.identity_checks("riemannian", 3, "lambda1", 1)
    assert checks
    failed = [c["name"] for c in checks if not c["pass"]]
    assert failed == []


def test_curved_residuals():
    r = prolong.curved_check("sphere", "killing", n=3, seed=7)
    assert r["generators"] == 6
    assert r["all_zero"]
    r = prolong.curved_check("flat", "conformal_killing", n=3, seed=7)
    assert r["generators"] == 10
    assert r["all_zero"]


def test_catalog_and_errors():
    cases = prolong.catalog(3)
    assert {"structure": "affine", "e": "lambda1", "k": 1} in cases
    assert len(cases) == 8
    with pytest.raises(ValueError):
        prolong.profile("noncommutative", 3, "lambda1", 1)
    with pytest.raises(ValueError):
        prolong.profile("riemannian", 1, "lambda1", 1)
