import random

from dualnets import constructors, nets
from dualnets.latin import (complete_mapping_exists, cyclic_group,
                            dihedral_group, direct_product, element_orders,
                            from_net, group_catalog, hall_paige_criterion,
                            is_group_coordinatizable, is_latin, isomorphic,
                            transversal_search)
from dualnets.plane import incident, join

from util import count_transversals_brute, quadrangle_criterion

# a latin square of order 5 that is not isotopic to Z5
NONGROUP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def shuffled_isotope(square, seed):
    n = len(square)
    rng = random.Random(seed)
    rows = list(range(n))
    cols = list(range(n))
    syms = list(range(n))
    rng.shuffle(rows)
    rng.shuffle(cols)
    rng.shuffle(syms)
    return [[syms[square[rows[i]][cols[j]]] for j in range(n)] for i in range(n)]


def test_is_latin():
    assert is_latin(cyclic_group(5))
    assert is_latin(NONGROUP_5)
    assert not is_latin([[0, 1], [0, 1]])
    assert not is_latin([[0, 1], [1]])


def test_group_tables_are_groups():
    catalog = group_catalog(16)
    for name, table in catalog.items():
        n = len(table)
        assert is_latin(table), name
        assert list(table[0]) == list(range(n)), name  # 0 is the identity
        assert [row[0] for row in table] == list(range(n)), name
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    assert table[table[a][b]][c] == table[a][table[b][c]], name


def test_catalog_contents():
    catalog = group_catalog(16)
    assert set(catalog) >= {"Z2", "Z16", "D4", "Z2xZ2", "Z2xZ2xZ2xZ2", "Z3xZ4"}
    assert all(len(t) <= 16 for t in catalog.values())
    phi = isomorphic(catalog["Z3xZ4"], catalog["Z12"])
    assert phi is not None
    G, H = catalog["Z3xZ4"], catalog["Z12"]
    assert sorted(phi.values()) == list(range(12))
    for a in range(12):
        for b in range(12):
            assert phi[G[a][b]] == H[phi[a]][phi[b]]
    assert isomorphic(catalog["Z2xZ2xZ3"], catalog["Z2xZ6"]) is not None
    assert isomorphic(catalog["D2"], catalog["Z2xZ2"]) is not None
    assert isomorphic(catalog["Z4"], catalog["Z2xZ2"]) is None
    assert isomorphic(catalog["D3"], catalog["Z6"]) is None


def test_element_orders():
    orders = element_orders(cyclic_group(6))
    assert sorted(orders) == [1, 2, 3, 3, 6, 6]
    orders = element_orders(dihedral_group(3))
    assert sorted(orders) == [1, 2, 2, 2, 3, 3]


def test_transversal_search_small_cyclic():
    assert transversal_search(cyclic_group(2)) is None
    assert transversal_search(cyclic_group(4)) is None
    t3 = transversal_search(cyclic_group(3))
    assert t3 is not None
    for square in (cyclic_group(3), cyclic_group(5), direct_product(cyclic_group(2), cyclic_group(2))):
        t = transversal_search(square)
        assert t is not None
        rows = [i for i, _ in t]
        cols = [j for _, j in t]
        syms = [square[i][j] for i, j in t]
        n = len(square)
        assert sorted(rows) == sorted(cols) == sorted(syms) == list(range(n))


def test_transversal_search_agrees_with_brute_force():
    squares = [cyclic_group(n) for n in range(2, 6)]
    squares.append(direct_product(cyclic_group(2), cyclic_group(2)))
    squares.append(NONGROUP_5)
    squares.append(shuffled_isotope(cyclic_group(5), 3))
    squares.append(shuffled_isotope(cyclic_group(4), 4))
    for square in squares:
        found = transversal_search(square) is not None
        assert found == (count_transversals_brute(square) > 0)


def test_complete_mapping_matches_hall_paige_on_catalog():
    for name, table in group_catalog(16).items():
        exists, theta = complete_mapping_exists(table)
        assert exists == hall_paige_criterion(table), name
        if exists:
            n = len(table)
            assert sorted(theta) == list(range(n)), name
            assert sorted(table[g][theta[g]] for g in range(n)) == list(range(n)), name


def test_complete_mapping_pinned_cases():
    exists, theta = complete_mapping_exists(cyclic_group(4))
    assert (exists, theta) == (False, None)
    exists, theta = complete_mapping_exists(direct_product(cyclic_group(2), cyclic_group(2)))
    assert exists and theta is not None
    exists, theta = complete_mapping_exists(cyclic_group(5))
    assert exists and theta is not None
    assert complete_mapping_exists([[0]]) == (True, [0])


def test_hall_paige_criterion_direct():
    assert not hall_paige_criterion(cyclic_group(4))
    assert hall_paige_criterion(direct_product(cyclic_group(2), cyclic_group(2)))
    assert hall_paige_criterion(cyclic_group(5))
    assert hall_paige_criterion(dihedral_group(4))
    assert not hall_paige_criterion(dihedral_group(5))


def test_complete_mapping_is_cayley_transversal():
    # theta a complete mapping of G exactly pins a transversal of its table
    table = direct_product(cyclic_group(2), cyclic_group(2))
    exists, theta = complete_mapping_exists(table)
    assert exists
    cells = [(g, theta[g]) for g in range(len(table))]
    syms = [table[i][j] for i, j in cells]
    assert sorted(syms) == list(range(len(table)))
    assert transversal_search(table) is not None
    assert transversal_search(cyclic_group(2)) is None
    assert complete_mapping_exists(cyclic_group(2))[0] is False


def test_is_group_coordinatizable_recovers_groups():
    for table in (cyclic_group(5), cyclic_group(6), dihedral_group(3),
                  direct_product(cyclic_group(2), cyclic_group(2))):
        got = is_group_coordinatizable(table)
        assert got is not None
        assert isomorphic([list(r) for r in got], table) is not None


def test_is_group_coordinatizable_isotopy_invariant():
    for seed in (1, 2, 3):
        square = shuffled_isotope(cyclic_group(5), seed)
        got = is_group_coordinatizable(square)
        assert got is not None
        assert isomorphic([list(r) for r in got], cyclic_group(5)) is not None
    square = shuffled_isotope(dihedral_group(3), 7)
    got = is_group_coordinatizable(square)
    assert got is not None
    assert isomorphic([list(r) for r in got], dihedral_group(3)) is not None


def test_nongroup_square_agrees_with_quadrangle_oracle():
    assert is_group_coordinatizable(NONGROUP_5) is None
    assert not quadrangle_criterion(NONGROUP_5)
    # sanity: the oracle accepts actual group tables and their isotopes
    assert quadrangle_criterion(cyclic_group(5))
    assert quadrangle_criterion(shuffled_isotope(cyclic_group(5), 11))
    assert quadrangle_criterion(dihedral_group(3))


def test_from_net_semantics():
    net = constructors.conic_line(5, 11)
    square = from_net(net)
    assert is_latin(square)
    p = net.p
    for i in (0, 2, 4):
        for j in (1, 3):
            line = join(net.components[0][i], net.components[1][j], p)
            k = square[i][j]
            assert incident(net.components[2][k], line, p)


def test_from_net_rejects_wrong_input():
    net4 = constructors.hesse_4net(13)
    try:
        from_net(net4)
        assert False, "4-nets have no single latin square"
    except ValueError:
        pass
    net = constructors.triangular_cyclic(5, 11)
    net.verified = False
    try:
        from_net(net)
        assert False
    except ValueError:
        pass


def test_net_latin_squares_coordinatize():
    tri = from_net(constructors.triangular_cyclic(5, 11))
    got = is_group_coordinatizable(tri)
    assert got is not None and isomorphic([list(r) for r in got], cyclic_group(5)) is not None

    con = from_net(constructors.conic_line(5, 11))
    got = is_group_coordinatizable(con)
    assert got is not None and isomorphic([list(r) for r in got], cyclic_group(5)) is not None

    tet2 = from_net(constructors.tetrahedron(2, 13))
    got = is_group_coordinatizable(tet2)
    v4 = direct_product(cyclic_group(2), cyclic_group(2))
    assert got is not None
    assert isomorphic([list(r) for r in got], v4) is not None
    assert isomorphic([list(r) for r in got], cyclic_group(4)) is None

    tet3 = from_net(constructors.tetrahedron(3, 13))
    got = is_group_coordinatizable(tet3)
    assert got is not None
    assert isomorphic([list(r) for r in got], dihedral_group(3)) is not None
    assert isomorphic([list(r) for r in got], cyclic_group(6)) is None


def test_transversals_of_net_squares():
    # order-5 cyclic squares have transversals; the perspective-position
    # fermat net of order 3 does too
    assert transversal_search(from_net(constructors.conic_line(5, 11))) is not None
    assert transversal_search(from_net(constructors.algebraic_fermat(3, 19))) is not None
