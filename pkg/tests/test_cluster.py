import random

import pytest

from whskit.cluster import (
    Seed,
    bipartite_exchange,
    cartan_companion,
    cluster_basis_check,
    denominator_vector,
    enumerate_seeds,
    generalized_minor,
    is_finite_type,
    is_skew_symmetrizable,
    mutate_matrix,
    plucker_gr2,
    root_label,
    skew_symmetrizer,
    standard_seed,
)
from whskit.errors import (
    CapExceeded,
    DimensionMismatch,
    InvalidCartanMatrix,
    InvalidExchangeMatrix,
    NotBipartite,
)
from whskit.rootsys import build_root_system
from whskit.symlaurent import MultiPoly, MultiRational


def random_skew_symmetrizable(rng, n):
    d = [rng.randint(1, 3) for _ in range(n)]
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s[i][j] = rng.randint(-1, 1)
            s[j][i] = -s[i][j]
    return tuple(
        tuple(d[j] * s[i][j] for j in range(n)) for i in range(n)
    )


# -- matrix mutation -------------------------------------------------------------


def test_mutate_matrix_golden():
    b = ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
    assert mutate_matrix(b, 1) == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))
    assert mutate_matrix(((0, 1), (-1, 0)), 0) == ((0, -1), (1, 0))
    assert mutate_matrix(((0, 2), (-1, 0)), 0) == ((0, -2), (1, 0))


def test_mutate_matrix_rectangular():
    b = ((0, 1), (-1, 0), (1, 0))
    m = mutate_matrix(b, 0)
    assert m == ((0, -1), (1, 0), (-1, 1))


def test_mutation_involution_small():
    rng = random.Random(6)
    for _ in range(60):
        n = rng.randint(2, 4)
        b = random_skew_symmetrizable(rng, n)
        for k in range(n):
            assert mutate_matrix(mutate_matrix(b, k), k) == b


def test_mutation_preserves_symmetrizer():
    rng = random.Random(13)
    for _ in range(40):
        b = random_skew_symmetrizable(rng, 3)
        k = rng.randrange(3)
        assert is_skew_symmetrizable(mutate_matrix(b, k))


def test_skew_symmetrizer_values():
    assert skew_symmetrizer(((0, 1), (-1, 0))) == (1, 1)
    assert skew_symmetrizer(((0, -2), (1, 0))) == (1, 2)
    assert skew_symmetrizer(((0, 1), (1, 0))) is None


# -- seeds and exchange ------------------------------------------------------------


def test_pentagon_recurrence():
    seed = Seed.initial(((0, 1), (-1, 0)))
    names = ["x1", "x2"]
    trace = [seed.render_variables(names)]
    s = seed
    for k in [0, 1, 0, 1, 0]:
        s = s.mutate(k)
        trace.append(s.render_variables(names))
    assert trace[1][0] == "(1 + x2)/x1"
    assert trace[2][1] == "(1 + x2 + x1)/(x1*x2)"
    # five steps close the pentagon up to swapping the two variables
    assert trace[5] == ["x2", "x1"]
    assert s.mutate_seq([1, 0]).cluster_key() != s.cluster_key()


def test_pentagon_variable_set():
    graph = enumerate_seeds(standard_seed("A2"))
    assert graph.seed_count == 5
    assert graph.variable_count == 5
    assert set(graph.variables) == {
        "x1",
        "x2",
        "(1 + x2)/x1",
        "(1 + x2 + x1)/(x1*x2)",
        "(1 + x1)/x2",
    }


def test_enumerate_counts():
    a1 = enumerate_seeds(standard_seed("A1"))
    assert (a1.seed_count, a1.variable_count) == (2, 2)
    c2 = enumerate_seeds(standard_seed("C2"))
    assert (c2.seed_count, c2.variable_count) == (6, 6)


def test_variable_count_matches_root_count():
    for name in ["A1", "A2", "C2"]:
        rs = build_root_system(name)
        graph = enumerate_seeds(standard_seed(name))
        assert graph.variable_count == rs.n_pos + rs.n


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_seeds(Seed.initial(((0, 2), (-2, 0))), cap=5)


def test_seed_validation():
    with pytest.raises(InvalidExchangeMatrix):
        Seed.initial(((0, 1), (1, 0)))
    with pytest.raises(DimensionMismatch):
        Seed(((0, 1), (-1, 0)), (MultiRational.gen(2, 0),))
    s = standard_seed("A2")
    with pytest.raises(InvalidExchangeMatrix):
        s.mutate(2)


def test_frozen_variables_enter_exchange():
    # one frozen variable x3 attached to the first mutable vertex
    seed = Seed.initial(((0, 1), (-1, 0), (1, 0)))
    s = seed.mutate(0)
    x1 = MultiPoly.gen(3, 0)
    x2 = MultiPoly.gen(3, 1)
    x3 = MultiPoly.gen(3, 2)
    assert s.variables[0] == MultiRational(x2 + x3, x1)
    assert s.variables[2] == MultiRational(x3)


def test_laurent_property_spot():
    seed = standard_seed("A2")
    rng = random.Random(3)
    for _ in range(10):
        seq = [rng.randrange(2) for _ in range(6)]
        s = seed.mutate_seq(seq)
        for v in s.variables:
            lau = v.as_laurent()
            assert lau is not None
            assert all(
                isinstance(c, int) for c in lau.coefficients()
            )


# -- denominator vectors --------------------------------------------------------


def test_denominator_vectors_a2():
    graph = enumerate_seeds(standard_seed("A2"))
    labels = set()
    for seed in graph.nodes.values():
        for v in seed.variables[: seed.n]:
            labels.add(root_label(denominator_vector(v, 2)))
    assert labels == {
        ("negative_simple", 0),
        ("negative_simple", 1),
        ("positive", (1, 0)),
        ("positive", (0, 1)),
        ("positive", (1, 1)),
    }


def test_dvector_positive_roots_c2():
    rs = build_root_system("C2")
    graph = enumerate_seeds(standard_seed("C2"))
    positive = set()
    for seed in graph.nodes.values():
        for v in seed.variables[: seed.n]:
            kind, val = root_label(denominator_vector(v, 2))
            if kind == "positive":
                positive.add(val)
    assert positive == set(rs.pos_roots)


def test_root_label_errors():
    with pytest.raises(InvalidExchangeMatrix):
        root_label((0, 0))
    with pytest.raises(InvalidExchangeMatrix):
        root_label((-1, 1))
    with pytest.raises(InvalidExchangeMatrix):
        root_label((-2, 0))


def test_denominator_vector_requires_laurent():
    x1 = MultiPoly.gen(2, 0)
    x2 = MultiPoly.gen(2, 1)
    bad = MultiRational(x1, MultiPoly.one(2) + x2)
    with pytest.raises(InvalidExchangeMatrix):
        denominator_vector(bad, 2)


def test_cluster_basis():
    for name in ["A2", "C2"]:
        graph = enumerate_seeds(standard_seed(name))
        assert cluster_basis_check(graph, 2)


# -- finite type ------------------------------------------------------------------


def test_finite_type_verdicts():
    assert is_finite_type(((0, 1), (-1, 0))) == "finite"
    assert is_finite_type(((0, 2), (-2, 0))) == "infinite"
    assert is_finite_type(((0, 2), (-1, 0))) == "finite"
    cycle = ((0, 1, -1), (-1, 0, 1), (1, -1, 0))
    assert is_finite_type(cycle) == "finite"
    markov = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
    assert is_finite_type(markov) == "infinite"


def test_finite_type_dynkin_orientations():
    for name in ["A3", "B3", "G2"]:
        rs = build_root_system(name)
        assert is_finite_type(bipartite_exchange(rs.cartan)) == "finite"


def test_finite_type_rejects_bad_matrix():
    with pytest.raises(InvalidExchangeMatrix):
        is_finite_type(((0, 1), (1, 0)))


# -- Cartan companions -------------------------------------------------------------


def test_companion_roundtrip():
    for name in ["A2", "C2", "B3"]:
        rs = build_root_system(name)
        b = bipartite_exchange(rs.cartan)
        assert cartan_companion(b) == rs.cartan


def test_bipartite_rejects_odd_cycle():
    triangle = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    with pytest.raises(NotBipartite):
        bipartite_exchange(triangle)


def test_bipartite_validates_cartan():
    with pytest.raises(InvalidCartanMatrix):
        bipartite_exchange(((1, -1), (-1, 2)))
    with pytest.raises(InvalidCartanMatrix):
        bipartite_exchange(((2, 1), (-1, 2)))
    with pytest.raises(InvalidCartanMatrix):
        bipartite_exchange(((2, -1), (0, 2)))


# -- Plucker relations --------------------------------------------------------------


def test_plucker_gr24():
    out = plucker_gr2(4, weights=[1, 2, 3, 4])
    assert out == {"relations": 1, "all_vanish": True, "homogeneous": True}


def test_plucker_gr25():
    out = plucker_gr2(5)
    assert out["relations"] == 5
    assert out["all_vanish"]
    assert out["homogeneous"] is None


def test_plucker_validation():
    with pytest.raises(DimensionMismatch):
        plucker_gr2(3)
    with pytest.raises(DimensionMismatch):
        plucker_gr2(4, weights=[1, 2])


# -- generalized minors ---------------------------------------------------------------


def test_generalized_minor_integers():
    m = ((2, 1, 0), (1, 3, 1), (0, 1, 4))
    ident = (0, 1, 2)
    assert generalized_minor(m, ident, ident, 1) == 2
    assert generalized_minor(m, ident, ident, 2) == 5
    assert generalized_minor(m, ident, ident, 3) == 2 * (3 * 4 - 1) - (4 - 0)


def test_generalized_minor_symbolic():
    g = [[MultiPoly.gen(4, 2 * i + j) for j in range(2)] for i in range(2)]
    ident = (0, 1)
    swap = (1, 0)
    d = generalized_minor(g, ident, ident, 2)
    assert d == g[0][0] * g[1][1] - g[0][1] * g[1][0]
    # swapping the row window at size 1 picks the other corner entry
    assert generalized_minor(g, swap, ident, 1) == g[1][0]
    assert generalized_minor(g, ident, swap, 1) == g[0][1]


def test_generalized_minor_window_bounds():
    m = ((1, 0), (0, 1))
    with pytest.raises(DimensionMismatch):
        generalized_minor(m, (0, 1), (0, 1), 3)
    with pytest.raises(DimensionMismatch):
        generalized_minor(m, (0, 1), (0, 1), 0)
