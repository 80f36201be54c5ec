from quiverbn import selftest


def test_selftest_passes_and_is_deterministic():
    first = selftest.run(seed=11)
    assert all(r.ok for r in first), [r for r in first if not r.ok]
    second = selftest.run(seed=11)
    assert [(r.name, r.cases, r.failures) for r in first] == [(r.name, r.cases, r.failures) for r in second]
    assert sum(r.cases for r in first) > 500
