import json

import cdsgame


def test_pointer_word_and_moves():
    assert cdsgame.pointer_word([6, 3, 5, 1, 2, 4]) == "(5,6)(2,3)(3,4)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)"
    assert cdsgame.apply_cds([6, 3, 5, 1, 2, 4], 3, 5) == [1, 2, 5, 6, 3, 4]
    assert len(cdsgame.valid_contexts([2, 4, 6, 1, 3, 5])) == 10


def test_pile_and_symmetry():
    assert cdsgame.strategic_pile([8, 1, 5, 2, 4, 3, 7, 6]) == [6, 3, 2, 4, 1, 5, 7]
    assert cdsgame.has_max_pile([8, 1, 5, 2, 4, 3, 7, 6])
    assert cdsgame.contract([2, 4, 6, 1, 3, 5]) == [2, 4, 1, 3, 5]
    assert cdsgame.act([5, 4, 1, 3, 2], 2, 3) == [1, 5, 3, 2, 4]
    values, period = cdsgame.difference_sequence([2, 4, 3, 8, 1, 9, 5, 7, 6])
    assert values == [2, 8, 5] * 3 and period == 3
    assert cdsgame.count_periodic_max_pile(3, 1) == 15
    assert cdsgame.psi(7) == 5


def test_census_and_analysis():
    report = cdsgame.census(3)
    assert report["histogram"] == {"10": 5, "6": 25, "5": 10}
    assert report["total"] == 40
    info = cdsgame.analyze([8, 1, 5, 2, 4, 3, 7, 6])
    assert info["max_pile"] is True
    try:
        cdsgame.census(9)
    except cdsgame.LimitExceeded:
        pass
    else:
        raise AssertionError("census beyond the cap should raise")


def test_game():
    assert cdsgame.sg([2, 4, 6, 1, 3, 5], [1, 2, 3]) == 1
    assert cdsgame.winner([2, 4, 6, 1, 3, 5], [1]) == "TWO"
    assert cdsgame.minimax([2, 4, 6, 1, 3, 5], [1, 2, 3])
    assert cdsgame.g2m_formula(3, 3) == 1
    assert cdsgame.sufficient_conditions([2, 4, 6, 1, 3, 5], [1, 2, 3])["excellent_majority"]


def test_suites():
    assert "examples" in cdsgame.suite_names()
    assert cdsgame.run_suite("examples")["passed"]


def test_service_routes():
    svc = cdsgame.GameService()
    status, body = svc.route("POST", "/api/games", json.dumps({"permutation": [2, 4, 6, 1, 3, 5], "targets": [1, 2, 3]}))
    assert status == 201
    gid = body["id"]
    status, state = svc.route("GET", f"/api/games/{gid}")
    assert status == 200 and len(state["legal_moves"]) == 10
    _, other = svc.route("POST", "/api/games", json.dumps({"permutation": [8, 1, 5, 2, 4, 3, 7, 6]}))
    status, err = svc.route("POST", f"/api/games/{other['id']}/moves", json.dumps({"p": 1, "q": 2}))
    assert status == 422 and len(err["legal_moves"]) == 9
    status, hint = svc.route("GET", f"/api/games/{gid}/hint")
    assert status == 200 and hint["sg"] == 1
    assert svc.route("DELETE", f"/api/games/{gid}")[0] == 204
    assert svc.route("GET", f"/api/games/{gid}")[0] == 404
