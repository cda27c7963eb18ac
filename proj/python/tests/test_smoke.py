import itertools

import pytest

import ballsat


def brute(formula):
    for bits in itertools.product([False, True], repeat=formula.n):
        if ballsat.evaluate(formula, list(bits)):
            return True
    return False


def test_parse_and_solve_single_negative_clause():
    f = ballsat.parse_dimacs("p cnf 3 1\n-1 -2 -3 0\n")
    assert f.n == 3
    assert f.clauses == [[-1, -2, -3]]
    witness, stats = ballsat.solve(f)
    assert witness is not None
    assert ballsat.evaluate(f, witness)
    assert stats.nodes >= 1


def test_unsat_and_parse_error():
    f = ballsat.Formula(1, [[1], [-1]])
    witness, _ = ballsat.solve(f)
    assert witness is None
    with pytest.raises(ballsat.ParseError):
        ballsat.parse_dimacs("p cnf 2 1\n1 5 0\n")


def test_solve_agrees_with_enumeration():
    for seed in range(1, 40):
        f = ballsat.generate(f"uniform:n=8,clauses=34,seed={seed}")
        witness, _ = ballsat.solve(f)
        assert (witness is not None) == brute(f)
        if witness is not None:
            assert ballsat.evaluate(f, witness)
        assert (ballsat.brute_force_sat(f) is not None) == brute(f)


def test_ball_query():
    f = ballsat.Formula(3, [[-1, -2, -3]])
    assert ballsat.solve_ball(f, [True] * 3, 0)[0] is None
    witness, _ = ballsat.solve_ball(f, [True] * 3, 1)
    assert witness.count(False) == 1


def test_exact_csp_matches_ball_oracle():
    f = ballsat.generate("disjoint:m=2,n=8,clauses=6,seed=3")
    via_csp = ballsat.solve_exact_csp(f)
    via_ball, _ = ballsat.solve_ball(f, [True] * f.n, 2)
    assert (via_csp is None) == (via_ball is None)
    if via_csp is not None:
        assert ballsat.evaluate(f, via_csp)


def test_codes_and_constants():
    words = ballsat.hamming_code(3, 1, 3)
    assert len(words) == 2
    s, exact = ballsat.exact_code(3)
    assert 0 <= s <= 6 and len(exact) >= 1
    assert all(ok for _, _, ok in ballsat.verify_constants())


def test_walk_and_selftest():
    f = ballsat.generate("planted:n=12,clauses=50,seed=4")
    witness = ballsat.schoening_walk(f, seed=2, tries=2000)
    assert witness is not None and ballsat.evaluate(f, witness)
    for name, checked, mismatches in ballsat.selftest(max_n=8, cases=30):
        assert checked > 0 and mismatches == 0, name
