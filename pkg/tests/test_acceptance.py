"""The headline claims, one test per check, in suite order.

Each test reruns one named check from lunefree.verify and prints its
PASS/FAIL line; a failing check fails its test rather than being
weakened.  Run with -v to get one line per claim.
"""

from lunefree.verify import run_check


def _run(name, budget=None):
    result = run_check(name)
    print(result.line())
    assert result.passed, result.detail
    if budget is not None:
        assert result.seconds < budget, "took %.1fs" % result.seconds


def test_census_knots():
    _run("census_knots")


def test_smallest_universes():
    _run("smallest_universes")


def test_face_count_identity():
    _run("face_count_identity")


def test_knot_sizes():
    _run("knot_sizes", budget=60)


def test_tight_sizes():
    _run("tight_sizes")


def test_tight_census():
    _run("tight_census")


def test_angle_chains():
    _run("angle_chains")


def test_special_rule():
    _run("special_rule")


def test_ladder_towers():
    _run("ladder_towers")


def test_polygon_rule():
    _run("polygon_rule")


def test_lune_counts():
    _run("lune_counts")


def test_braid_rule():
    _run("braid_rule")


def test_route_agreement():
    _run("route_agreement", budget=300)
