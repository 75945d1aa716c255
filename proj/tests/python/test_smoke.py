import json
import os
import sys

import numpy as np
import pytest

import g2kit

FIXTURES = os.environ.get("G2KIT_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fx(name):
    return os.path.join(FIXTURES, name)


def test_check_fixtures():
    assert g2kit.check_lie2(fx("abelian.json"))["passed"]
    assert not g2kit.check_lie2(fx("non_peiffer.json"))["passed"]
    assert g2kit.check_algebroid(fx("poisson_sl2.json"))["passed"]
    report = g2kit.check_action(fx("ga_sl2.json"))
    assert report["schema"] == g2kit.SCHEMA
    assert report["passed"]
    assert all(c["passed"] for c in report["checks"])


def test_bad_input_raises():
    with pytest.raises(g2kit.InputError, match="zero denominator"):
        g2kit.load_bundle(fx("bad_rational.json"))
    with pytest.raises(ValueError):
        g2kit.check_lie2('{"schema": "g2kit/1", "kind": "lie2", "dim_h": "one"}')


def test_crossed_module_round_trip():
    lie2 = g2kit.load_bundle(fx("sl2_lie2.json"))
    crossed = g2kit.to_crossed_module(lie2)
    assert crossed["kind"] == "crossed"
    assert g2kit.from_crossed_module(crossed) == lie2
    with pytest.raises(g2kit.ValidationError):
        g2kit.to_crossed_module(fx("non_peiffer.json"))


def test_catalog_and_derived_brackets():
    assert "ga-sl2" in g2kit.action_names()
    for name in g2kit.action_names():
        assert g2kit.check_action(g2kit.catalog_action(name))["passed"], name
    assert g2kit.derive_brackets(fx("sl2_algebroid.json"))["passed"]


def test_integration_reports():
    for example in g2kit.integration_names():
        assert g2kit.integrate(example, samples=10)["passed"], example
    report = g2kit.verify_2groupoid("tm", samples=20, tol=1e-12)
    assert report["passed"]
    assert "vertical convention" in report["meta"]


def test_psi_on_tm():
    # TM over R: translation by g, plus mu(w)
    x, a = g2kit.psi("tm", [0.25], [1.5], [2.0], [3.0])
    assert np.allclose(x, [3.5])
    assert np.allclose(a, [3.25])


def test_run_exit_codes():
    assert g2kit.run("check", "lie2", fx("abelian.json"))[0] == 0
    assert g2kit.run("check", "lie2", fx("non_peiffer.json"))[0] == 1
    code, _, err = g2kit.run("check", "lie2", fx("bad_rational.json"))
    assert code == 2 and "1/0" in err
    code, out, _ = g2kit.run("verify", "2groupoid", "--example", "tm", "--samples", "10", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
