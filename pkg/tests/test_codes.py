import itertools

import numpy as np
import pytest

from toric_codes.field import GF
from toric_codes.codes import (
    CodeError,
    LinearCode,
    WorkCapExceeded,
    dual,
    matmul,
    matvec,
    min_distance,
    min_distance_exhaustive,
    min_distance_infoset,
    null_space,
    reed_muller,
    rm_monomial_count,
    rm_predicted_params,
    rref,
    solve,
    syndrome,
)


def brute_force_distance(code):
    """Oracle: enumerate every nonzero message."""
    gf, G = code.gf, code.gen
    best = code.n + 1
    for msg in itertools.product(range(gf.q), repeat=code.k):
        if not any(msg):
            continue
        cw = matvec(gf, G.T, np.array(msg, dtype=np.int16))
        best = min(best, int(np.count_nonzero(cw)))
    return best


def random_code(gf, n, k, rng):
    while True:
        M = rng.integers(0, gf.q, size=(k, n)).astype(np.int16)
        code = LinearCode(gf, M)
        if code.k == k:
            return code


# -- rref / dual / syndrome ------------------------------------------------


def test_rref_examples():
    gf = GF(5)
    R, rank, piv = rref(gf, np.eye(4, dtype=np.int16))
    assert rank == 4 and piv == [0, 1, 2, 3]
    _, rank, _ = rref(gf, np.zeros((3, 5), dtype=np.int16))
    assert rank == 0
    _, rank, _ = rref(gf, np.array([[1, 2], [2, 4]], dtype=np.int16))
    assert rank == 1  # second row is twice the first mod 5


def test_dual_repetition_code():
    gf = GF(2)
    rep = LinearCode(gf, [[1, 1, 1]])
    h = rep.dual()
    assert (h.n, h.k) == (3, 2)
    # row space equals that of {(1,1,0),(1,0,1)}: null-space enumeration over 8 vectors
    expected = {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    span = set()
    for m in itertools.product(range(2), repeat=2):
        span.add(tuple(int(x) for x in matvec(gf, h.gen.T, np.array(m, dtype=np.int16))))
    assert span == expected


def test_dual_involution_and_dimensions():
    rng = np.random.default_rng(0)
    for q, n, k in [(2, 7, 3), (3, 8, 4), (5, 6, 2)]:
        gf = GF(q)
        code = random_code(gf, n, k, rng)
        h = code.dual()
        assert h.k == n - k
        hh = h.dual()
        r1 = rref(gf, code.gen)[0][: code.k]
        r2 = rref(gf, hh.gen)[0][: hh.k]
        assert np.array_equal(r1, r2)
        # duality: every generator row has zero syndrome against dual(code)
        for row in code.gen:
            assert not syndrome(h, row).any()


def test_syndrome_examples():
    # syndrome(code, v) vanishes iff v is a codeword of dual(code)
    gf = GF(2)
    rep = LinearCode(gf, [[1, 1, 1]])
    h = rep.dual()
    assert not syndrome(h, rep.gen[0]).any()  # generator row against its dual
    assert not syndrome(rep, np.zeros(3, dtype=np.int16)).any()
    e1 = np.array([1, 0, 0], dtype=np.int16)
    assert np.array_equal(syndrome(h, e1), h.gen[:, 0])
    with pytest.raises(CodeError):
        syndrome(rep, np.zeros(4, dtype=np.int16))


def test_solve_and_null_space():
    gf = GF(7)
    A = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int16)
    b = np.array([1, 2], dtype=np.int16)
    x, ns = solve(gf, A, b)
    assert np.array_equal(matvec(gf, A, x), b)
    assert ns.shape[0] == 2
    for row in ns:
        assert not matvec(gf, A, row).any()
    assert solve(gf, A, np.array([1, 3], dtype=np.int16)) is None


# -- exhaustive engine -------------------------------------------------------


def test_exhaustive_identity():
    gf = GF(3)
    code = LinearCode(gf, np.eye(4, dtype=np.int16))
    rep = min_distance_exhaustive(code)
    assert rep.d == 1
    assert rep.work == (3**4 - 1) // 2


def test_exhaustive_gf3_example():
    gf = GF(3)
    code = LinearCode(gf, [[1, 0, 1, 1], [0, 1, 1, 2]])
    rep = min_distance_exhaustive(code)
    assert rep.d == brute_force_distance(code)
    assert int(np.count_nonzero(rep.witness)) == rep.d


def test_work_cap():
    gf = GF(5)
    code = LinearCode(gf, np.eye(6, dtype=np.int16))
    with pytest.raises(WorkCapExceeded):
        min_distance_exhaustive(code, work_cap=10)


def test_witness_in_row_space():
    rng = np.random.default_rng(1)
    gf = GF(5)
    code = random_code(gf, 10, 4, rng)
    rep = min_distance_exhaustive(code)
    # witness weight matches and witness is a codeword: consistent syndrome
    assert int(np.count_nonzero(rep.witness)) == rep.d
    assert not code.dual().syndrome(rep.witness).any()


def test_workers_deterministic():
    rng = np.random.default_rng(2)
    gf = GF(3)
    code = random_code(gf, 12, 6, rng)
    a = min_distance_exhaustive(code, workers=1)
    b = min_distance_exhaustive(code, workers=4)
    assert a.d == b.d and np.array_equal(a.witness, b.witness)
    c = min_distance_infoset(code, workers=4)
    assert c.d == a.d


# -- information-set engine ---------------------------------------------------


def test_engines_agree_random():
    rng = np.random.default_rng(3)
    cases = [(2, 12, 6), (3, 10, 5), (4, 9, 4), (5, 8, 4), (2, 14, 7), (3, 9, 3)]
    for q, n, k in cases:
        gf = GF(2, 2) if q == 4 else GF(q)
        for _ in range(4):
            code = random_code(gf, n, k, rng)
            a = min_distance_exhaustive(code)
            b = min_distance_infoset(code)
            assert a.d == b.d, (q, n, k)


def test_infoset_mds_like():
    # generator [I | 1] has d = 2; infoset should certify at w = 1
    gf = GF(5)
    G = np.concatenate([np.eye(5, dtype=np.int16), np.ones((5, 1), dtype=np.int16)], axis=1)
    code = LinearCode(gf, G)
    rep = min_distance_infoset(code)
    assert rep.d == 2 and rep.exact


def test_infoset_work_budget_interval():
    rng = np.random.default_rng(4)
    gf = GF(5)
    code = random_code(gf, 14, 7, rng)
    rep = min_distance_infoset(code, work_budget=1)
    if not rep.exact:
        exact = min_distance_exhaustive(code).d
        assert rep.lower <= exact <= rep.upper
    # and with no budget it is exact and matches
    assert min_distance_infoset(code).d == min_distance_exhaustive(code).d


def test_min_distance_auto_dispatch():
    rng = np.random.default_rng(5)
    gf = GF(2)
    code = random_code(gf, 10, 4, rng)
    rep = min_distance(code)
    assert rep.method == "exhaustive"
    rep2 = min_distance(code, method="infoset")
    assert rep2.d == rep.d


def test_monomial_equivalence():
    rng = np.random.default_rng(6)
    gf = GF(5)
    code = random_code(gf, 9, 4, rng)
    d0 = min_distance_exhaustive(code).d
    perm = rng.permutation(9)
    scales = rng.integers(1, 5, size=9).astype(np.int16)
    M = code.gen[:, perm]
    M = gf.mul_table[M, scales[None, :]]
    assert min_distance_exhaustive(LinearCode(gf, M)).d == d0


def test_rank_deficient_generator_warns():
    gf = GF(5)
    code = LinearCode(gf, [[1, 2, 3], [2, 4, 1], [0, 1, 0]])  # row2 = 2*row1
    assert code.k == 2
    assert code.warnings


# -- Reed-Muller --------------------------------------------------------------


def test_rm_mariner():
    gf = GF(2)
    code = reed_muller(gf, 5, 1)
    assert (code.n, code.k) == (32, 6)
    assert min_distance_exhaustive(code).d == 16
    assert rm_predicted_params(2, 5, 1) == (32, 6, 16)


def test_rm_degree_zero_is_repetition():
    gf = GF(3)
    code = reed_muller(gf, 2, 0)
    assert (code.n, code.k) == (9, 1)
    assert min_distance_exhaustive(code).d == 9
    assert rm_predicted_params(3, 2, 0) == (9, 1, 9)


def test_rm_q3_m2():
    gf = GF(3)
    code = reed_muller(gf, 2, 1)
    assert (code.n, code.k) == (9, 3)
    d = min_distance_exhaustive(code).d  # 27 codewords
    assert d == rm_predicted_params(3, 2, 1)[2] == 6


def test_rm_prediction_k_sum_terms():
    # q=2, m=5, ell=1: i=0 contributes 1, i=1 contributes 5
    assert rm_predicted_params(2, 5, 1)[1] == 1 + 5


def test_rm_constructed_rank_equals_prediction():
    for q, p, m_ext in [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1)]:
        gf = GF(p, m_ext)
        for m in (1, 2):
            if q**m > 3**6:
                continue
            for ell in range(0, m * (q - 1) + 1):
                code = reed_muller(gf, m, ell)
                n, k, _ = rm_predicted_params(q, m, ell)
                assert (code.n, code.k) == (n, k)
                assert k == rm_monomial_count(q, m, ell)


def test_rm_errors():
    with pytest.raises(CodeError):
        rm_predicted_params(3, 2, 5)  # ell > m(q-1)
    with pytest.raises(CodeError):
        reed_muller(GF(2), 20, 1)  # size cap


def test_matmul_consistency():
    rng = np.random.default_rng(8)
    gf = GF(2, 3)
    A = rng.integers(0, 8, size=(4, 5)).astype(np.int16)
    B = rng.integers(0, 8, size=(5, 3)).astype(np.int16)
    C = matmul(gf, A, B)
    for i in range(4):
        for j in range(3):
            acc = 0
            for t in range(5):
                acc = gf.add(acc, gf.mul(int(A[i, t]), int(B[t, j])))
            assert C[i, j] == acc
