"""Tests for the distance closed forms against the scan oracle and the
published distance lists."""

import numpy as np
import pytest

from aircode import (build_air_matrix, build_chain, distance_profile,
                     down_distance, locate_cell, locate_column,
                     right_distance, scan_distance_profile,
                     scan_down_distance, scan_right_distance,
                     scan_up_distance, up_distance)

from fixtures import (DOWN_13_3, DOWN_13_10, EXAMPLE_44_17_K7, PT_13_3,
                      RIGHT_13_3, RIGHT_13_10, UP_13_3, UP_13_10)


def matrix(K, D):
    return build_air_matrix(build_chain(K, D))


def test_down_distance_lists():
    m = matrix(13, 3)
    for k, want in DOWN_13_3.items():
        assert down_distance(m.chain, k) == want
        assert scan_down_distance(m, k) == want
    m = matrix(13, 10)
    for k, want in DOWN_13_10.items():
        assert down_distance(m.chain, k) == want
        assert scan_down_distance(m, k) == want
    assert down_distance(build_chain(17, 7), 9) == 7


def test_up_distance_lists():
    m = matrix(13, 3)
    for (j, k), want in UP_13_3.items():
        assert up_distance(m, j, k) == want, (j, k)
        assert scan_up_distance(m, j, k) == want, (j, k)
    m = matrix(13, 10)
    for (j, k), want in UP_13_10.items():
        assert up_distance(m, j, k) == want, (j, k)
        assert scan_up_distance(m, j, k) == want, (j, k)
    # same geometry, larger problem: first wide-block row of (17, 7)
    m = matrix(17, 7)
    assert up_distance(m, 10, 0) == 10
    assert scan_up_distance(m, 10, 0) == 10


def test_right_distance_lists():
    m = matrix(13, 3)
    for (j, k), want in RIGHT_13_3.items():
        assert right_distance(m, j, k) == want, (j, k)
        assert scan_right_distance(m, j, k) == want, (j, k)
    m = matrix(13, 10)
    for (j, k), want in RIGHT_13_10.items():
        assert right_distance(m, j, k) == want, (j, k)
        assert scan_right_distance(m, j, k) == want, (j, k)
    m = matrix(10, 3)
    assert right_distance(m, 7, 0) == 3


def test_profiles_13_3():
    m = matrix(13, 3)
    for k, (p, t) in PT_13_3.items():
        prof = distance_profile(m, k)
        assert (prof.p, prof.t) == (p, t), k
        assert scan_distance_profile(m, k) == prof
    prof = distance_profile(m, 6)
    assert (prof.d_down, prof.mu, prof.p, prof.t) == (4, 3, 2, (1, 2))
    prof = distance_profile(m, 9)
    assert prof.mu is None and prof.p == 0


def test_profile_44_17_receiver_7():
    m = matrix(44, 17)
    prof = distance_profile(m, 7)
    assert prof.d_down == EXAMPLE_44_17_K7["d_down"]
    assert prof.mu == EXAMPLE_44_17_K7["mu"]
    assert prof.t == EXAMPLE_44_17_K7["t"]
    assert scan_distance_profile(m, 7) == prof


def test_error_domains():
    m = matrix(13, 3)
    with pytest.raises(ValueError):
        up_distance(m, 3, 3)  # identity block
    with pytest.raises(ValueError):
        up_distance(m, 10, 1)  # zero cell
    with pytest.raises(ValueError):
        right_distance(m, 10, 9)  # tall block
    with pytest.raises(ValueError):
        right_distance(m, 12, 9)  # nothing to the right
    with pytest.raises(ValueError):
        scan_right_distance(m, 12, 9)
    with pytest.raises(ValueError):
        down_distance(m.chain, 10)


def test_closed_forms_equal_scans_small():
    for K in range(2, 33):
        for D in range(1, K):
            m = matrix(K, D)
            chain = m.chain
            for k in range(chain.N):
                assert down_distance(chain, k) == scan_down_distance(m, k), (K, D, k)
                assert distance_profile(m, k) == scan_distance_profile(m, k), (K, D, k)
            for j in range(chain.N, K):
                for k in np.flatnonzero(m.grid[j, :]).tolist():
                    assert up_distance(m, j, k) == scan_up_distance(m, j, k), (K, D, j, k)


def test_interference_window_identity():
    """For k in any D_i, the lowest 1 of column k and the anchor's partner
    differ in height by exactly D, so everything else sits in the window."""
    for K in range(2, 33):
        for D in range(1, K):
            m = matrix(K, D)
            chain = m.chain
            for k in range(chain.N - chain.lam[chain.l]):
                i, part = locate_column(chain, k)
                prof = distance_profile(m, k)
                if part == "D":
                    anchor = k + prof.d_down
                    assert prof.d_down - up_distance(m, anchor, k + prof.mu) == D, (K, D, k)


def test_t_offsets_bounded():
    """t offsets never reach past the matrix and stay under mu."""
    for K in range(2, 33):
        for D in range(1, K):
            m = matrix(K, D)
            chain = m.chain
            for k in range(chain.N - chain.lam[chain.l]):
                prof = distance_profile(m, k)
                assert list(prof.t) == sorted(set(prof.t))
                if prof.p:
                    assert k + prof.d_down + prof.t[-1] <= K - 1
                    assert prof.t[-1] < prof.mu
                i, part = locate_column(chain, k)
                if part == "E" and 2 * i < chain.l:
                    # offset decomposition of k within the last wide copy
                    lam_2i = chain.lam_at(2 * i)
                    lam_odd = chain.lam_at(2 * i + 1)
                    k_r = locate_cell(m, k + prof.d_down, k).k_r
                    d = (k_r - (chain.beta_at(2 * i) - 1) * lam_2i) % lam_odd
                    if prof.p:
                        assert prof.t[-1] < prof.mu - d, (K, D, k)
