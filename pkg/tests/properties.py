"""Identity checks on the catalog examples, shared by the module tests and
the acceptance run.  Each check is memoised per example: a passing check is
not repeated, a failing one raises on every call."""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from invconn.catalog import EXAMPLE_NAMES, load_example
from invconn.conn import (
    check_defining_identity,
    curvature,
    d_endo,
    n_tensor,
    natural_product,
    nomizu_product,
    ricci,
    torsion,
    zero_one_product,
)
from invconn.exactla import commutator, trace, unit, vscale, vsub

GRID = [Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)]
SPACES = {name: load_example(name).space for name in EXAMPLE_NAMES}


def basis(space):
    return [unit(space.k, p) for p in range(space.k)]


@lru_cache(maxsize=None)
def grid_identities(name):
    space = SPACES[name]
    e = basis(space)
    k = space.k
    brackets = {(i, j): space.bracket_m(e[i], e[j]) for i, j in product(range(k), repeat=2)}
    w_br = {(i, j, l): space.w(e[i], brackets[j, l]) for i, j, l in product(range(k), repeat=3)}
    for a, b in product(GRID, repeat=2):
        prod = nomizu_product(space, a, b)
        assert check_defining_identity(space, prod)
        # isotropy acts by derivations: [A, L_x] = L_{A x}
        for A in space.isotropy_basis:
            for x in e:
                assert commutator(A, prod.op(x)) == prod.op(A @ x)
        for i, j in product(range(k), repeat=2):
            lhs = vsub(prod.L[i].col(j), prod.L[j].col(i))
            assert lhs == vscale(2 * a + b, brackets[i, j])
        T = torsion(space, prod)
        for (i, j), v in T.items():
            assert v == vscale(2 * a + b - 1, brackets[i, j])
        N = n_tensor(space, prod)
        for i, j, l in product(range(k), repeat=3):
            assert N[i][j][l] == (b - a) * w_br[i, j, l]


@lru_cache(maxsize=None)
def d_operator_identities(name):
    space = SPACES[name]
    e = basis(space)
    k = space.k
    cache = {(i, j): d_endo(space, e[i], e[j]) for i in range(k) for j in range(k)}
    D = lambda x, y: cache[(x.index(1), y.index(1))]
    L = space.L10
    u = space.u_vector()
    for x, y, z in product(e, repeat=3):
        assert D(x, y) @ z == vscale(-1, D(z, y) @ x)
        for z2 in e:
            assert space.w(D(x, y) @ z, z2) == space.w(D(x, z2) @ z, y)
        cyc_d = [D(x, z) @ y, D(y, x) @ z, D(z, y) @ x]
        cyc_l = [L(x) @ (L(y) @ z), L(y) @ (L(z) @ x), L(z) @ (L(x) @ y)]
        assert tuple(map(sum, zip(*cyc_d))) == tuple(map(sum, zip(*cyc_l)))
    for x, y in product(e, repeat=2):
        assert trace(D(x, y)) - trace(D(y, x)) == space.w(u, L(x) @ y)


@lru_cache(maxsize=None)
def zero_one_trace_identities(name):
    space = SPACES[name]
    e = basis(space)
    p01 = zero_one_product(space)
    u = space.u_vector()
    for x in e:
        R, Lx = p01.R(x), p01.op(x)
        for y, z in product(e, repeat=2):
            assert space.w(R @ y, z) == space.w(y, R @ z)
        assert trace(Lx) == Fraction(1, 2) * trace(R) == space.w(x, u)
        for y in e:
            L10x, L10y = space.L10(x), space.L10(y)
            assert trace(Lx @ p01.op(y)) == trace(L10x @ L10y)
            Ry = p01.R(y)
            expected = 2 * trace(L10x @ L10y) + 2 * trace(L10x @ space.omega_adjoint(L10y))
            assert trace(R @ Ry) == 2 * trace(R @ p01.op(y)) == expected


@lru_cache(maxsize=None)
def natural_product_identities(name):
    space = SPACES[name]
    e = basis(space)
    ps, p01 = natural_product(space), zero_one_product(space)
    third = Fraction(1, 3)
    for x in e:
        L10x = space.L10(x)
        adj = space.omega_adjoint(L10x)
        assert ps.op(x) == p01.op(x) * (2 * third) - p01.R(x) * third == (L10x - adj) * third
        assert ps.R(x) == p01.R(x) * (2 * third) - p01.op(x) * third == -(L10x * 2 + adj) * third
        for y, z in product(e, repeat=2):
            assert space.w(ps.apply(x, y), z) == -space.w(y, ps.apply(x, z))
        assert trace(ps.op(x)) == 0
        assert trace(ps.R(x)) == trace(p01.op(x))


@lru_cache(maxsize=None)
def first_bianchi_torsion_free(name):
    space = SPACES[name]
    e = basis(space)
    for b in GRID:
        a = (1 - b) / 2
        K = curvature(space, nomizu_product(space, a, b))
        for x, y, z in product(e, repeat=3):
            s = map(sum, zip(K(x, y) @ z, K(y, z) @ x, K(z, x) @ y))
            assert not any(s)


@lru_cache(maxsize=None)
def ricci_symmetries(name):
    space = SPACES[name]
    assert ricci(space, natural_product(space)).is_symmetric()
    r01 = ricci(space, zero_one_product(space))
    for i, j in product(range(space.k), repeat=2):
        bm = space.embed_m(space.bracket_m(unit(space.k, i), unit(space.k, j)))
        assert r01[i, j] - r01[j, i] == trace(space.alg.ad(bm))
