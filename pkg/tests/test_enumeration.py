"""Gray-code sign enumeration against brute force."""

import itertools

import numpy as np
import pytest

from bellbound import ParameterError, ResourceLimitError, max_over_signs, min_over_signs
from bellbound.enumeration import gray_flip_sequence

SEED = 20260818


def _brute_max(n, pairs):
    best = -float("inf")
    best_signs = None
    for signs in itertools.product((1, -1), repeat=n):
        value = sum(w * signs[i] * signs[j] for i, j, w in pairs)
        if value > best:
            best, best_signs = value, signs
    return best, best_signs


def _random_pairs(rng, n, density=0.8):
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((i, j, float(rng.normal())))
    return pairs


def test_gray_flip_sequence_visits_every_mask():
    n = 10
    mask = 0
    seen = {mask}
    for bit in gray_flip_sequence(n):
        mask ^= 1 << bit
        seen.add(mask)
    assert len(seen) == 2**n


@pytest.mark.parametrize("n", range(2, 9))
def test_max_matches_brute_force(n):
    rng = np.random.default_rng(SEED + n)
    for _ in range(10):
        pairs = _random_pairs(rng, n)
        expected, _ = _brute_max(n, pairs)
        value, argmax, _ = max_over_signs(n, pairs)
        assert value == pytest.approx(expected, abs=1e-12)
        achieved = sum(w * argmax[i] * argmax[j] for i, j, w in pairs)
        assert achieved == pytest.approx(value, abs=1e-12)


def test_fold_symmetry_matches_full_enumeration():
    rng = np.random.default_rng(SEED)
    for n in (3, 5, 7):
        pairs = _random_pairs(rng, n)
        folded = max_over_signs(n, pairs, fold_symmetry=True)
        full = max_over_signs(n, pairs, fold_symmetry=False)
        assert folded[0] == pytest.approx(full[0], abs=1e-12)
        assert folded[2] * 2 == full[2]
        assert folded[1][0] == 1


def test_exact_path_agrees_with_float_path():
    # Half-integer weights take the scaled integer route; forcing the
    # float route must give the same optimum.
    pairs = [(0, 1, 0.5), (0, 2, 0.5), (1, 3, 0.5), (2, 3, -0.5), (1, 2, -1.0)]
    exact = max_over_signs(4, pairs, use_exact=True)
    floated = max_over_signs(4, pairs, use_exact=False)
    assert exact[0] == floated[0]
    assert isinstance(exact[0], float)


def test_min_is_negated_max():
    rng = np.random.default_rng(SEED + 99)
    pairs = _random_pairs(rng, 6)
    negated = [(i, j, -w) for i, j, w in pairs]
    lo, arg_lo, _ = min_over_signs(6, pairs)
    hi, _, _ = max_over_signs(6, negated)
    assert lo == pytest.approx(-hi, abs=1e-12)
    achieved = sum(w * arg_lo[i] * arg_lo[j] for i, j, w in pairs)
    assert achieved == pytest.approx(lo, abs=1e-12)


def test_no_pairs_gives_zero():
    value, argmax, evaluations = max_over_signs(3, [])
    assert value == 0.0
    assert len(argmax) == 3
    assert evaluations >= 1


def test_guard_and_validation():
    pairs = [(0, 1, 1.0)]
    with pytest.raises(ResourceLimitError):
        max_over_signs(30, pairs)
    with pytest.raises(ResourceLimitError):
        max_over_signs(5, pairs, guard=4)
    assert max_over_signs(5, pairs, guard=5)[0] == 1.0
    with pytest.raises(ParameterError):
        max_over_signs(0, [])
    with pytest.raises(ParameterError):
        max_over_signs(2, [(1, 1, 1.0)])
    with pytest.raises(ParameterError):
        max_over_signs(2, [(0, 1, float("nan"))])
