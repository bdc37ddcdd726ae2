import pytest

from quiddity.errors import (
    NonCommutingEntries,
    NotJointEigenvector,
    NotQuiddity,
    RuleViolation,
    SingularEntry,
    ValidationError,
)
from quiddity.frieze import (
    FriezeSide,
    MatrixFrieze,
    build_matrix_frieze,
    build_scalar_frieze,
    build_scalar_frieze_diamond,
    matrix_rule_holds,
    render_ascii,
    scalarize,
    transpose_frieze,
)
from quiddity.gaussian import gq
from quiddity.matrix import Matrix
from quiddity.matrix_quiddity import (
    MatrixSeq,
    Side,
    basic_seq,
    bi_circ,
    block_monodromy,
    insert_ear,
    commuting_frieze_seq,
    period5_seq,
)
from quiddity.sampling import rand_commuting_pair, rng_from
from quiddity.sequences import MonodromyClass

I2, O2 = Matrix.identity(2), Matrix.zero(2)
A_UNI = Matrix([[1, 1], [0, 1]])


def cyc(row, n):
    return tuple(row[:n])


# --------------------------------------------------------------------------- scalar


def test_pentagon_rows():
    f = build_scalar_frieze((2, 2, 1, 3, 1))
    assert f.n == 5 and len(f.rows) == 6 and f.width == 12
    assert cyc(f.rows[2], 5) == (2, 2, 1, 3, 1)
    assert cyc(f.rows[3], 5) == (3, 1, 2, 2, 1)
    assert all(x == 0 for x in f.rows[0] + f.rows[5])
    assert all(x == 1 for x in f.rows[1] + f.rows[4])


def test_small_friezes():
    f = build_scalar_frieze((1, 1, 1))
    assert len(f.rows) == 4 and all(x == 1 for x in f.rows[2])
    f = build_scalar_frieze((2, 1, 2, 1))
    assert cyc(f.rows[2], 4) == (2, 1, 2, 1)
    assert all(x == 1 for x in f.rows[3])


def test_rational_frieze():
    f = build_scalar_frieze((1, 4, "2/3", 3, "5/3"))
    assert cyc(f.rows[3], 5) == tuple(gq(x) for x in (3, "5/3", 1, 4, "2/3"))
    assert not f.diamond_violations() and f.is_periodic()


def test_complex_frieze():
    lam = gq("1+i")
    q = (1, lam + 1, 2 / lam, lam, 2 / lam + 1)
    f = build_scalar_frieze(q)
    assert not f.diamond_violations() and f.is_periodic()
    assert all(x == 1 for x in f.rows[4])


def test_rejects_non_quiddity():
    with pytest.raises(NotQuiddity):
        build_scalar_frieze((1, 1, 2))


def test_diamond_convention():
    # left * right - top * bottom = 1 with top one row up, bottom one row down
    f = build_scalar_frieze((2, 2, 1, 3, 1))
    left, right, top, bottom = f.rows[2][1], f.rows[2][2], f.rows[1][2], f.rows[3][1]
    assert (left, right, bottom) == (2, 1, 1) and left * right - top * bottom == 1


def test_builders_agree_on_enumerated_quiddities(qs):
    for n in range(3, 9):
        for q in qs[n]:
            a, b = build_scalar_frieze(q), build_scalar_frieze_diamond(q)
            assert a.rows == b.rows
            assert a.quiddity() == q


def test_positivity_and_periodicity(qs):
    for n in range(3, 9):
        for q in qs[n]:
            f = build_scalar_frieze(q)
            assert f.is_periodic()
            for row in f.rows[1:n]:
                assert all(x.im == 0 and x.re.denominator == 1 and x.re > 0 for x in row)


def test_diamond_builder_reports_zero_entries():
    # a -Id sequence with a zero in the quiddity row: only the continuant path works
    q = (-2, -1, -1, 1, 0)
    with pytest.raises(SingularEntry):
        build_scalar_frieze_diamond(q)
    f = build_scalar_frieze(q)
    assert not f.diamond_violations() and f.is_periodic()


def test_json_shape():
    d = build_scalar_frieze((1, 1, 1)).to_json()
    assert d["kind"] == "scalar" and d["period"] == 3
    assert d["rows"][2] == ["1"] * 8


# --------------------------------------------------------------------------- matrix


def test_basic_matrix_frieze():
    f = build_matrix_frieze(basic_seq(A_UNI))
    assert f.side is FriezeSide.TWO_SIDED and f.p == 4 and len(f.rows) == 5
    assert cyc(f.rows[2], 4) == (A_UNI, 2 * A_UNI.inv()) * 2
    assert all(x == I2 for x in f.rows[3]) and f.is_periodic()


def test_period5_matrix_frieze():
    M = Matrix([[2, 1], [1, 1]])
    f = build_matrix_frieze(period5_seq(M))
    t = 2 * M.inv()
    assert cyc(f.rows[3], 5) == (M, t + I2, I2, M + I2, t)
    assert f.side is FriezeSide.TWO_SIDED


def test_commuting_pair_matrix_frieze():
    A = Matrix([[2, 1], [0, 3]])
    B = A * A - A
    f = build_matrix_frieze(commuting_frieze_seq(A, B), side="two-sided")
    Ai, Bi = A.inv(), B.inv()
    assert cyc(f.rows[3], 5) == (B, Bi * (I2 + A + B) * Ai, A, Ai * (I2 + B), (I2 + A) * Bi)


def test_random_commuting_pair_friezes():
    rng = rng_from(31)
    done = 0
    while done < 10:
        A, B = rand_commuting_pair(rng, 2)
        try:
            f = build_matrix_frieze(commuting_frieze_seq(A, B))
        except (SingularEntry, ArithmeticError):
            continue
        assert f.side is FriezeSide.TWO_SIDED and f.is_periodic()
        done += 1


def test_non_commuting_left_sequence_does_not_close():
    # a -Id left sequence with non-commuting entries; the diamond solve leaves the continuants
    A, B = Matrix([[1, 1], [0, 1]]), Matrix([[2, 0], [1, 1]])
    s = MatrixSeq(bi_circ(basic_seq(A).as_bisequence(), 1, basic_seq(B).as_bisequence()).p)
    assert block_monodromy(s).kind is MonodromyClass.MINUS_ID
    with pytest.raises((RuleViolation, SingularEntry)):
        build_matrix_frieze(s)


def test_matrix_frieze_input_checks():
    with pytest.raises(NotQuiddity):
        build_matrix_frieze(MatrixSeq([I2, I2]))
    with pytest.raises(ValidationError):
        build_matrix_frieze(MatrixSeq([I2] * 3, Side.RIGHT))


def test_matrix_json():
    d = build_matrix_frieze(basic_seq(A_UNI)).to_json()
    assert d["side"] == "two-sided" and d["period"] == 4 and d["l"] == 2


# --------------------------------------------------------------------------- transpose


def left_only_grid():
    A, B = Matrix([[1, 1], [0, 1]]), Matrix([[1, 0], [1, 1]])
    C = A * B - I2
    rows = ((O2, I2), (A, B), (C, O2))
    return MatrixFrieze(2, 2, rows, FriezeSide.LEFT)


def test_rule_checker_distinguishes_sides():
    g = left_only_grid()
    assert matrix_rule_holds(g.rows, "left") and not matrix_rule_holds(g.rows, "right")


def test_transpose_swaps_sides():
    g = left_only_grid()
    t = transpose_frieze(g)
    assert t.side is FriezeSide.RIGHT
    assert matrix_rule_holds(t.rows, "right") and not matrix_rule_holds(t.rows, "left")
    assert transpose_frieze(t) == g


def test_transpose_two_sided():
    S = Matrix([[2, 1], [1, 3]])
    f = build_matrix_frieze(basic_seq(S))
    assert transpose_frieze(f) == f
    f = build_matrix_frieze(insert_ear(basic_seq(A_UNI), 2))
    t = transpose_frieze(f)
    assert t.side is FriezeSide.TWO_SIDED
    assert matrix_rule_holds(t.rows, "left") and matrix_rule_holds(t.rows, "right")


# --------------------------------------------------------------------------- scalarize


def test_scalarize_diagonal_basic():
    M = Matrix.diag([3, "1/2"])
    f = scalarize(build_matrix_frieze(basic_seq(M)), (1, 0))
    assert f.quiddity() == (3, gq("2/3"), 3, gq("2/3"))
    g = scalarize(build_matrix_frieze(basic_seq(M)), (0, 1))
    assert g.quiddity() == (gq("1/2"), 4, gq("1/2"), 4)


def test_scalarize_order_one_is_identity():
    q = (2, 2, 1, 3, 1)
    mf = build_matrix_frieze(MatrixSeq([Matrix([[x]]) for x in q]))
    assert scalarize(mf, (1,)).rows == build_scalar_frieze(q).rows


def test_scalarize_commuting_pair_shadow():
    A, B = Matrix.diag([2, 5]), Matrix.diag([3, 7])
    f = scalarize(build_matrix_frieze(commuting_frieze_seq(A, B)), (1, 0))
    a, b = gq(2), gq(3)
    assert f.quiddity() == (a, (1 + b) / a, (1 + a) / b, b, (1 + a + b) / (a * b))
    assert not f.diamond_violations()


def test_scalarize_errors():
    f = build_matrix_frieze(basic_seq(Matrix.diag([3, 2])))
    with pytest.raises(NotJointEigenvector):
        scalarize(f, (1, 1))
    with pytest.raises(NotJointEigenvector):
        scalarize(f, (0, 0))
    with pytest.raises(ValidationError):
        scalarize(f, (1,))
    g = build_matrix_frieze(basic_seq(A_UNI))
    assert scalarize(g, (1, 0)).quiddity() == (1, 2, 1, 2)
    h = build_matrix_frieze(insert_ear(MatrixSeq([I2] * 3), 1))
    assert scalarize(h, (5, 7)).quiddity() == (2, 1, 2, 1)
    nc = left_only_grid()
    with pytest.raises(NonCommutingEntries):
        scalarize(nc, (1, 0))


# --------------------------------------------------------------------------- rendering


PENTAGON = """\
0 0 0 0 0 0
 1 1 1 1 1 1
  2 2 1 3 1 2
   3 1 2 2 1 3
    1 1 1 1 1 1
     0 0 0 0 0 0
"""

BASIC = """\
 O   O   O   O   O
   I   I   I   I   I
    M1  M2  M1  M2  M1
       I   I   I   I   I
         O   O   O   O   O

M1 = [1 1; 0 1]
M2 = [2 -2; 0 2]
"""


def test_render_golden():
    assert render_ascii(build_scalar_frieze((2, 2, 1, 3, 1))) == PENTAGON
    assert render_ascii(build_matrix_frieze(basic_seq(A_UNI))) == BASIC
    assert len(render_ascii(build_scalar_frieze((1, 1, 1))).splitlines()) == 4


def test_render_is_deterministic():
    f = build_scalar_frieze((1, 4, "2/3", 3, "5/3"))
    assert render_ascii(f) == render_ascii(build_scalar_frieze((1, 4, "2/3", 3, "5/3")))
    lines = render_ascii(f).splitlines()
    # each row starts half a cell further right
    offsets = [len(l) - len(l.lstrip()) for l in lines]
    assert offsets == sorted(offsets)
