import json
import random
from fractions import Fraction

import pytest

from cmfix.arith import zeta
from cmfix.linalg import Mat
from cmfix.parameters import theta_concat
from cmfix.quiver import (
    QuiverRep,
    block_immersion,
    gl_action,
    in_deformed_fiber,
    moment_map,
    norton_simplicity,
    random_rep,
    scale_action,
)


def test_mat_shapes_and_rank():
    a = Mat(2, 3, [[1, 2, 3], [2, 4, 6]])
    assert a.rank() == 1
    assert a.T.rank() == 1
    assert Mat.zeros(0, 3).rank() == 0
    assert Mat.zeros(3, 0).rank() == 0
    assert Mat.identity(4).rank() == 4
    b = Mat(2, 2, [[Fraction(1, 2), 0], [0, Fraction(3)]])
    assert b.inverse() * b == Mat.identity(2, one=Fraction(1))
    assert len(a.nullspace()) == 2


def test_mat_rank_cyclotomic():
    z = zeta(4)
    # rows proportional: (z, 1) and (1, z^-1) = z^-1 * (z, 1)
    m = Mat(2, 2, [[z, 1], [1, z.inverse()]])
    assert m.rank() == 1


def test_rep_shape_validation():
    with pytest.raises(ValueError):
        QuiverRep((1, 2), (Mat(1, 1, [[1]]), Mat(2, 1, [[1], [0]])), (Mat(2, 1, [[0], [0]]), Mat(1, 2, [[0, 0]])))


def test_moment_map_zero_and_scalar():
    rep = QuiverRep((1,), (Mat(1, 1, [[3]]),), (Mat(1, 1, [[5]]),))
    assert moment_map(rep)[0] == Mat(1, 1, [[0]])
    z = random_rep((2, 1, 2), random.Random(0))
    zero = QuiverRep(z.d, tuple(Mat.zeros(m.rows, m.cols) for m in z.X),
                     tuple(Mat.zeros(m.rows, m.cols) for m in z.Y))
    assert all(m.is_zero() for m in moment_map(zero))


def test_trace_telescoping():
    rng = random.Random(17)
    for _ in range(300):
        m = rng.choice((1, 2, 3, 4, 6))
        d = tuple(rng.randint(0, 3) for _ in range(m))
        rep = random_rep(d, rng)
        assert sum((x.trace() for x in moment_map(rep)), Fraction(0)) == 0


def _block_structure_matches(rep, big, l):
    m = rep.l
    k = m // l
    mm, mb = moment_map(rep), moment_map(big)
    for i in range(l):
        js = [i + t * l for t in range(k)]
        offs, off = [], 0
        for j in js:
            offs.append(off)
            off += rep.d[j]
        B = mb[i]
        assert B.rows == off
        for r in range(B.rows):
            rb = max(t for t, o in enumerate(offs) if o <= r)
            for c in range(B.cols):
                cb = max(t for t, o in enumerate(offs) if o <= c)
                want = (
                    mm[js[rb]].data[r - offs[rb]][c - offs[cb]] if rb == cb else 0
                )
                if B.data[r][c] != want:
                    return False
    return True


def test_block_identity_random():
    rng = random.Random(23)
    count = 0
    while count < 300:
        m = rng.choice((2, 3, 4, 5, 6))
        divs = [x for x in range(1, m + 1) if m % x == 0]
        l = rng.choice(divs)
        d = tuple(rng.randint(0, 3) for _ in range(m))
        rep = random_rep(d, rng)
        assert _block_structure_matches(rep, block_immersion(rep, l), l)
        count += 1


def test_block_immersion_k1_is_identity():
    rep = random_rep((2, 0, 3), random.Random(1))
    out = block_immersion(rep, 3)
    assert out.X == rep.X and out.Y == rep.Y and out.d == rep.d


def test_block_immersion_is_injective():
    rng = random.Random(2)
    reps = [random_rep((1, 1, 1, 1), rng) for _ in range(20)]
    images = [block_immersion(r, 2) for r in reps]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if reps[i] != reps[j]:
                assert images[i] != images[j]


def test_fiber_membership_l1():
    # scalars commute: any 1-dimensional rep lies in the fiber at theta = (-a)
    rng = random.Random(3)
    for _ in range(25):
        rep = QuiverRep(
            (1,),
            (Mat(1, 1, [[rng.randint(-5, 5)]]),),
            (Mat(1, 1, [[rng.randint(-5, 5)]]),),
        )
        assert in_deformed_fiber(rep, (Fraction(-rng.randint(1, 5)),))


def test_fiber_membership_zero_rep():
    rep = QuiverRep((1, 1), (Mat(1, 1, [[0]]),) * 2, (Mat(1, 1, [[0]]),) * 2)
    assert in_deformed_fiber(rep, (Fraction(0), Fraction(0)))
    assert not in_deformed_fiber(rep, (Fraction(0), Fraction(1)))


def test_fiber_perturbation_detected():
    a = Fraction(3)
    th = theta_concat((-a,), 2)
    rep = QuiverRep(
        (1, 1),
        (Mat(1, 1, [[2]]), Mat(1, 1, [[2 - a]])),
        (Mat(1, 1, [[1]]), Mat(1, 1, [[1]])),
    )
    assert in_deformed_fiber(rep, th)
    bad = QuiverRep(rep.d, rep.X, (rep.Y[0], Mat(1, 1, [[2]])))
    assert not in_deformed_fiber(bad, th)


def test_membership_transport_through_block_immersion():
    # hand-built fiber members over Z/4Z collapsing to Z/2Z (l=2, k=2)
    a, b = Fraction(2), Fraction(1, 3)
    from cmfix.parameters import ParamSet, theta_from_ak

    p = ParamSet(2, a, (-b, b))
    th = theta_from_ak(p)
    thk = theta_concat(th, 2)
    # d = (1,1,1,1): scalar entries x_i, y_i with x_i y_i - y_{i-1} x_{i-1} = thk_i
    # for i != 0; choose products p_i = x_i y_i cumulatively
    prod = [Fraction(0)] * 4
    prod[0] = Fraction(5)
    for i in (1, 2, 3):
        prod[i] = thk[i] + prod[i - 1]
    rep = QuiverRep(
        (1, 1, 1, 1),
        tuple(Mat(1, 1, [[prod[i]]]) for i in range(4)),
        tuple(Mat(1, 1, [[1]]) for _ in range(4)),
    )
    assert in_deformed_fiber(rep, thk)
    assert in_deformed_fiber(block_immersion(rep, 2), th)


def test_scale_action_group_law_and_moment_invariance():
    rng = random.Random(29)
    rep = random_rep((2, 1, 2), rng)
    a, b = Fraction(3, 2), Fraction(-7, 5)
    assert scale_action(a, scale_action(b, rep)) == scale_action(a * b, rep)
    assert scale_action(Fraction(1), rep) == rep
    assert moment_map(scale_action(a, rep)) == moment_map(rep)
    with pytest.raises(ValueError):
        scale_action(0, rep)


def test_scale_action_cyclotomic():
    rep = random_rep((1, 1, 1), random.Random(5))
    z = zeta(3)
    assert scale_action(z ** 2, scale_action(z, rep)) == rep  # z^3 = 1


def test_g0_conjugation_identity():
    rng = random.Random(31)
    for l in (2, 3, 4):
        z = zeta(l)
        rep = random_rep(tuple(rng.randint(1, 2) for _ in range(l)), rng)
        g = [Mat.scalar(rep.d[i], z ** i) for i in range(l)]
        assert gl_action(g, rep) == scale_action(z, rep)


def test_fiber_invariance_under_gl():
    rng = random.Random(37)
    a = Fraction(2)
    th = theta_concat((-a,), 2)
    rep = QuiverRep(
        (2, 1),
        (Mat(2, 1, [[1], [0]]), Mat(1, 2, [[0, 1]])),
        (Mat(1, 2, [[1, 1]]), Mat(2, 1, [[1], [1]])),
    )
    # engineer membership: too fiddly by hand; only check invariance of the
    # membership VERDICT under conjugation
    def rand_inv(nn):
        while True:
            m = Mat(nn, nn, [[Fraction(rng.randint(-3, 3)) for _ in range(nn)]
                             for _ in range(nn)])
            try:
                m.inverse()
                return m
            except ValueError:
                continue

    for _ in range(10):
        g = [rand_inv(2), rand_inv(1)]
        assert in_deformed_fiber(gl_action(g, rep), th) == in_deformed_fiber(rep, th)


def test_simplicity_zero_reps():
    rep = QuiverRep((2,), (Mat.zeros(2, 2),), (Mat.zeros(2, 2),))
    res = norton_simplicity(rep)
    assert res.status == "NotSimple"
    assert res.witness is not None
    one = QuiverRep((1,), (Mat(1, 1, [[0]]),), (Mat(1, 1, [[0]]),))
    assert norton_simplicity(one).status == "Simple"
    empty = QuiverRep((0, 0), (Mat.zeros(0, 0),) * 2, (Mat.zeros(0, 0),) * 2)
    assert norton_simplicity(empty).status == "NotSimple"


def test_simplicity_direct_sum_detected():
    rep = QuiverRep(
        (2,),
        (Mat(2, 2, [[1, 0], [0, 2]]),),
        (Mat(2, 2, [[1, 0], [0, 1]]),),
    )
    res = norton_simplicity(rep, seed=1)
    assert res.status == "NotSimple"
    # witness spans a proper nonzero graded subspace
    dims = sum(len(b) for b in res.witness)
    assert 0 < dims < 2


def test_simplicity_certified():
    rep = QuiverRep(
        (2,),
        (Mat(2, 2, [[0, 1], [0, 0]]),),
        (Mat(2, 2, [[0, 0], [1, 0]]),),
    )
    res = norton_simplicity(rep, seed=11, budget=64)
    assert res.status == "Simple"
    # a 2-vertex simple representation
    rep2 = QuiverRep(
        (1, 1),
        (Mat(1, 1, [[1]]), Mat(1, 1, [[1]])),
        (Mat(1, 1, [[1]]), Mat(1, 1, [[2]])),
    )
    res2 = norton_simplicity(rep2, seed=11, budget=64)
    assert res2.status == "Simple"


def test_simplicity_hidden_eigenline():
    # X = 0, Y = swap: both coordinate vectors generate everything, yet the
    # eigenlines of Y are proper subrepresentations; only the random-kernel
    # phase can see them
    rep = QuiverRep(
        (2,),
        (Mat.zeros(2, 2),),
        (Mat(2, 2, [[0, 1], [1, 0]]),),
    )
    res = norton_simplicity(rep, seed=2, budget=64)
    assert res.status == "NotSimple"
    dims = sum(len(b) for b in res.witness)
    assert dims == 1


def test_json_round_trip():
    rep = random_rep((2, 1), random.Random(41))
    s = json.dumps(rep.to_json())
    back = QuiverRep.from_json(json.loads(s))
    assert back == rep
    # with cyclotomic entries
    z = zeta(4)
    rep2 = scale_action(z, rep)
    back2 = QuiverRep.from_json(json.loads(json.dumps(rep2.to_json())))
    assert back2 == rep2
