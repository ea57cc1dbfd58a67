import pytest

from tutteconv import catalog
from tutteconv.identities import (
    BI_CAP,
    IDENTITY_IDS,
    MULTI_CAP,
    DuetConfig,
    duet_compare,
    duet_counts,
    duet_signed_sum,
    identity3_footnote,
    verify,
    verify_all,
    verify_restriction_argument,
)
from tutteconv.invariants import rank_generating, size_corank
from tutteconv.matroid import MatroidError, make_graphic, make_uniform, members
from tutteconv.poly import L, VX, VY, X, XI, Y, Variable, poly_sum, ye

SMALL = catalog.all_matroids(max_size=6)
MULTI = catalog.all_matroids(max_size=MULTI_CAP)


# -- examples ---------------------------------------------------------------------------

def test_identity9_examples():
    rep = verify(make_uniform(1, 1), 9)
    assert rep.equal and rep.lhs == L * XI - 1
    rep = verify(make_uniform(2, 3), 9)
    assert rep.equal and rep.lhs == L**2 * XI**2 - 3 * L * XI + 2


def test_identity8_example():
    rep = verify(make_uniform(2, 3), 8)
    assert rep.equal and rep.lhs == XI**2 - 3 * XI + 3 - X
    assert [t for t, _ in rep.terms] == [[], [0, 1, 2]]


def test_identity6_example():
    rep = verify(make_uniform(1, 1), 6)
    assert rep.equal and rep.lhs == L - ye(0)


def test_identity_ids_are_accepted_in_both_spellings():
    assert verify(make_uniform(1, 2), "eq4-cyclic").identity == "eq4_cyclic"
    with pytest.raises(ValueError):
        verify(make_uniform(1, 2), "10")


def test_caps_are_enforced():
    big = make_uniform(2, MULTI_CAP + 1)
    with pytest.raises(MatroidError, match=str(MULTI_CAP)):
        verify(big, 1)
    assert verify(big, 2).equal
    with pytest.raises(MatroidError):
        verify(make_uniform(1, BI_CAP + 1), 9)
    assert {r.identity for r in verify_all(big)} == {"2", "3", "5", "8", "9", "eq4", "eq4_cyclic"}


# -- every identity on small matroids ---------------------------------------------------

@pytest.mark.parametrize("m", SMALL, ids=lambda m: m.name)
def test_all_identities_small(m):
    reports = verify_all(m)
    assert len(reports) == len(IDENTITY_IDS)
    for rep in reports:
        assert rep.equal, rep.identity


def test_wrong_sign_is_detected():
    # dropping the sign in identity 2 breaks equality
    m = make_uniform(2, 3)
    lhs = size_corank(m, X * Y, L * XI)
    wrong = poly_sum(
        L ** (m.r - m.rank(t))
        * Y ** len(members(t))
        * size_corank(m.restrict(t), -X, L)
        * size_corank(m.contract(t), Y, XI)
        for t in range(1 << m.n)
    )
    assert lhs != wrong


@pytest.mark.parametrize("m", MULTI, ids=lambda m: m.name)
def test_identity1_specializes_to_identity2(m):
    one, two = verify(m, 1), verify(m, 2)
    bind = {}
    for lab in m.labels:
        bind[Variable("x", lab)] = X
        bind[Variable("y", lab)] = Y
    assert one.lhs.substitute(bind) == two.lhs
    assert one.rhs.substitute(bind) == two.rhs


@pytest.mark.parametrize("m", SMALL, ids=lambda m: m.name)
def test_identity3_footnote(m):
    first, second = identity3_footnote(m)
    lhs = rank_generating(m, X * Y, L * XI)
    assert first == lhs
    assert second == lhs


def test_identity3_lhs_at_x_and_y_one():
    m = catalog.get("K4")
    rep = verify(m, 3)
    assert rep.lhs.substitute({VX: 1, VY: 1}) == rank_generating(m, 1, L * XI)


# -- restriction arguments ---------------------------------------------------------------

@pytest.mark.parametrize("name", ["U_2_3", "K4", "C4", "Fano", "GF2_2", "U_2_4_dual"])
@pytest.mark.parametrize("identity", ["5", "8", "eq4_cyclic"])
def test_restriction_arguments(name, identity):
    rep = verify_restriction_argument(catalog.get(name), identity)
    assert rep.equal
    assert set(rep.ranges) >= {"all", "flats"}


def test_single_loop_identity5():
    loop = make_graphic(1, [(0, 0)])
    rep = verify_restriction_argument(loop, "5")
    assert rep.equal
    assert rep.ranges["all"] == rep.ranges["flats"] == size_corank(loop, X, XI)


def test_k4_three_ranges_agree():
    rep = verify_restriction_argument(catalog.get("K4"), "eq4_cyclic")
    assert rep.ranges["all"] == rep.ranges["flats"] == rep.ranges["cyclic_flats"]


def test_restriction_argument_rejects_other_ids():
    with pytest.raises(ValueError):
        verify_restriction_argument(make_uniform(1, 1), "9")


# -- duets --------------------------------------------------------------------------------

def test_duet_counts_u11():
    for s in (2, 3, 5):
        cfg = DuetConfig.for_matroid(make_uniform(1, 1), s, 2)
        rows = {tuple(row["T"]): row for row in duet_counts(cfg)}
        pairs = {t: row["u"] * row["v_columns"] for t, row in rows.items()}
        assert pairs[()] == s - 1
        assert pairs[(0,)] == 0
        assert rows[(0,)]["u"] == 1  # only the zero vector vanishes on e


def test_duet_target_u11():
    for s, t in ((2, 2), (2, 3), (3, 2)):
        assert rank_generating(make_uniform(1, 1), t, s).constant() == s + 1


@pytest.mark.parametrize("st", [(2, 2), (2, 3), (3, 2)])
@pytest.mark.parametrize("name", ["U_1_1", "C3"])
def test_duet_report_shape(name, st):
    s, t = st
    m = catalog.get(name)
    rep = duet_compare(m, s, t)
    assert len(rep["counts"]) == 1 << m.n
    assert len(rep["conventions"]) == 4
    assert rep["R(t,s)"] == rank_generating(m, t, s).constant()
    # the size_of_T / support reading recovers R(M;-t,-s) on these cases
    c = next(
        c for c in rep["conventions"]
        if c["sign_convention"] == "size_of_T" and c["reading"] == "v_supported"
    )
    assert c["matches_R(-t,-s)"]


def test_duet_signed_sum_convention():
    cfg = DuetConfig.for_matroid(make_uniform(1, 1), 2, 2)
    a = duet_signed_sum(cfg)
    cfg.sign_convention = "size_of_complement"
    assert duet_signed_sum(cfg) == -a
    cfg.sign_convention = "bogus"
    with pytest.raises(ValueError):
        duet_signed_sum(cfg)
