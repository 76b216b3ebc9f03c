import itertools
import random

import pytest

from graphcodes.errors import DecodingError
from graphcodes.field import GF
from graphcodes.linalg import rank
from graphcodes.rs import (RSCode, decode, default_defining_set, encode,
                           erasure_decode, generator_matrix)


def test_default_defining_set(gf7):
    assert default_defining_set(gf7, 7) == (0, 1, 3, 2, 6, 4, 5)
    assert default_defining_set(gf7, 3) == (0, 1, 3)
    with pytest.raises(ValueError):
        default_defining_set(gf7, 8)


def test_code_validation(gf7):
    nodes = default_defining_set(gf7, 7)
    with pytest.raises(ValueError):
        RSCode(gf7, (0, 1, 1), 2)  # repeated node
    with pytest.raises(ValueError):
        RSCode(gf7, nodes, 0)
    with pytest.raises(ValueError):
        RSCode(gf7, nodes, 8)
    with pytest.raises(ValueError):
        RSCode(gf7, (0, 1, 9), 2)  # out of field


def test_generator_shape_and_rows(gf7):
    code = RSCode(gf7, default_defining_set(gf7, 7), 4)
    gen = generator_matrix(code)
    assert gen[0] == [1] * 7
    assert gen[1] == list(code.nodes)
    assert gen[2] == [gf7.mul(x, x) for x in code.nodes]
    one = RSCode(gf7, code.nodes, 1)
    assert generator_matrix(one) == [[1] * 7]
    square = RSCode(gf7, code.nodes, 7)
    assert rank(gf7, generator_matrix(square)) == 7


def test_every_k_columns_invertible():
    gf = GF(11)
    nodes = default_defining_set(gf, 8)
    for k in (2, 3, 4):
        gen = generator_matrix(RSCode(gf, nodes, k))
        for cols in itertools.combinations(range(8), k):
            sub = [[row[c] for c in cols] for row in gen]
            assert rank(gf, sub) == k


def test_encode_examples(gf7):
    code = RSCode(gf7, default_defining_set(gf7, 7), 4)
    assert encode(code, [0, 0, 0, 0]) == [0] * 7
    assert encode(code, [0, 1, 0, 0]) == list(code.nodes)
    # m(x) = x^3 at node 3 evaluates to 27 mod 7 = 6
    assert encode(code, [0, 0, 0, 1])[2] == 6
    with pytest.raises(ValueError):
        encode(code, [1, 2, 3])


def test_decode_clean(gf7):
    code = RSCode(gf7, default_defining_set(gf7, 7), 4)
    msg = [2, 0, 5, 1]
    got, positions = decode(code, encode(code, msg))
    assert got == msg and positions == []


def test_decode_all_small_error_patterns():
    gf = GF(7)
    nodes = default_defining_set(gf, 7)
    rng = random.Random(99)
    for k in (2, 3):
        code = RSCode(gf, nodes, k)
        t = (7 - k) // 2
        for _ in range(3):
            msg = [rng.randrange(7) for _ in range(k)]
            cw = encode(code, msg)
            for w in range(1, min(t, 2) + 1):
                for positions in itertools.combinations(range(7), w):
                    for values in itertools.product(range(1, 7), repeat=w):
                        received = list(cw)
                        for j, v in zip(positions, values):
                            received[j] = gf.add(received[j], v)
                        got, err_pos = decode(code, received)
                        assert got == msg
                        assert err_pos == list(positions)


def test_decode_randomized_trials():
    rng = random.Random(4242)
    for p in (11, 13):
        gf = GF(p)
        nodes = default_defining_set(gf, p)
        for _ in range(300):
            k = rng.randint(1, p - 1)
            code = RSCode(gf, nodes, k)
            t = (p - k) // 2
            msg = [rng.randrange(p) for _ in range(k)]
            cw = encode(code, msg)
            w = rng.randint(0, t)
            positions = rng.sample(range(p), w)
            received = list(cw)
            for j in positions:
                received[j] = gf.add(received[j], rng.randrange(1, p))
            got, err_pos = decode(code, received)
            assert got == msg
            assert sorted(err_pos) == sorted(positions)


def test_decode_beyond_radius_never_silently_lies():
    gf = GF(7)
    nodes = default_defining_set(gf, 7)
    code = RSCode(gf, nodes, 4)
    t = 1
    rng = random.Random(31337)
    for _ in range(200):
        msg = [rng.randrange(7) for _ in range(4)]
        received = list(encode(code, msg))
        for j in rng.sample(range(7), 2):  # two errors, beyond t = 1
            received[j] = gf.add(received[j], rng.randrange(1, 7))
        try:
            got, _ = decode(code, received)
        except DecodingError:
            continue
        # a successful decode must re-encode within the radius
        reenc = encode(code, got)
        assert sum(a != b for a, b in zip(reenc, received)) <= t


def test_decode_whole_other_codeword():
    gf = GF(7)
    code = RSCode(gf, default_defining_set(gf, 7), 4)
    other = [1, 2, 3, 4]
    got, positions = decode(code, encode(code, other))
    assert got == other and positions == []


def test_erasure_decode(gf7):
    code = RSCode(gf7, default_defining_set(gf7, 7), 4)
    msg = [4, 0, 2, 6]
    cw = encode(code, msg)
    assert erasure_decode(code, cw) == msg  # no erasures: full consistency pass
    for erased in itertools.combinations(range(7), 3):
        received = [0 if j in erased else cw[j] for j in range(7)]
        assert erasure_decode(code, received, erased) == msg
    with pytest.raises(DecodingError):
        erasure_decode(code, cw, (0, 1, 2, 3))  # only 3 clean symbols left
    corrupted = list(cw)
    corrupted[6] = gf7.add(corrupted[6], 1)
    with pytest.raises(DecodingError):
        erasure_decode(code, corrupted, (0, 1))  # clean symbols disagree


def test_erasure_index_validation(gf7):
    code = RSCode(gf7, default_defining_set(gf7, 7), 4)
    with pytest.raises(ValueError):
        erasure_decode(code, [0] * 7, (9,))


def test_rs_is_mds_small():
    # brute-force pairwise distance oracle, small parameters only
    gf = GF(7)
    nodes = default_defining_set(gf, 7)
    for k in (1, 2):
        code = RSCode(gf, nodes, k)
        words = [tuple(encode(code, list(m)))
                 for m in itertools.product(range(7), repeat=k)]
        dist = min(sum(a != b for a, b in zip(w1, w2))
                   for w1, w2 in itertools.combinations(words, 2))
        assert dist == 7 - k + 1
