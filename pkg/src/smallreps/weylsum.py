"""Weight multiplicities from the alternating Weyl sum.

m(mu) = sum_w sign(w) K(w(lam + rho) - (mu + rho)), where K counts ways of
writing a root-lattice vector as a sum of positive roots.  For BC_m the
generating function of K is prod(1 + x^a) over odd roots divided by
prod(1 - x^a) over even roots (character), or with (1 - x^a) in the
numerator (supercharacter); graded multiplicities are (ch +- sch) / 2.

The odd factor of the supercharacter is not Weyl invariant: it picks up
eta(w) = (-1)^(number of odd positive roots made negative), so the
supercharacter sum carries sign(w) * eta(w).

Only the Weyl group elements with w(lam + rho) >= mu + rho contribute.  They
are found by walking down from lam + rho, applying a simple reflection only
when it lowers the weight, and dropping every branch that leaves the cone.

This module deliberately shares nothing with the Freudenthal code in
:mod:`smallreps.reps`; it serves as the oracle for it.
"""

from fractions import Fraction

import numpy as np

from .rootsys import RootSystem

_LIMIT = 2**61


def _root_coords_of_vec(rs: RootSystem, v) -> tuple:
    rc = rs.root_coords(rs.labels_of(v))
    assert all(Fraction(x).denominator == 1 for x in rc)
    return tuple(int(x) for x in rc)


def _kostant_box(shape, even, odd, super_sign):
    """Coefficients of prod(1 +- x^a)/prod(1 - x^b) on the box [0, shape)."""
    dtype = np.int64
    while True:
        box = np.zeros(shape, dtype=dtype)
        box[(0,) * len(shape)] = 1
        try:
            for a in odd:
                box = _mul_binomial(box, a, super_sign)
            for a in even:
                _div_geometric(box, a)
            return box
        except OverflowError:
            if dtype is object:
                raise
            dtype = object


def _src_dst(shape, a, t_axis, t):
    dst, src = [], []
    for ax, (n, s) in enumerate(zip(shape, a)):
        if ax == t_axis:
            dst.append(t)
            src.append(t - s)
        else:
            dst.append(slice(s, n))
            src.append(slice(0, n - s))
    return tuple(dst), tuple(src)


def _fits(a, shape):
    return all(s < n for s, n in zip(a, shape))


def _check(box):
    if box.dtype != object and np.abs(box).max() > _LIMIT:
        raise OverflowError


def _mul_binomial(box, a, sign):
    if not _fits(a, box.shape):
        return box
    out = box.copy()
    dst = tuple(slice(s, n) for s, n in zip(a, box.shape))
    src = tuple(slice(0, n - s) for s, n in zip(a, box.shape))
    out[dst] += sign * box[src]
    _check(out)
    return out


def _div_geometric(box, a):
    if not _fits(a, box.shape):
        return
    axis = next(i for i, s in enumerate(a) if s)
    # ascending along an axis where a is positive: each slice sees its updated source
    for t in range(a[axis], box.shape[axis]):
        dst, src = _src_dst(box.shape, a, axis, t)
        box[dst] += box[src]
    _check(box)


def _contributing_elements(rs: RootSystem, top, bottom_rc, odd_simple=()):
    """(difference w(top) - bottom in root coordinates, sign(w), eta(w)) over the pruned walk.

    ``odd_simple`` lists the simple reflections that negate an odd root.
    """
    cartan = rs.cartan
    n = rs.rank

    def diff(labels):
        return tuple(a - b for a, b in zip(rs.root_coords(labels), bottom_rc))

    start = tuple(top)
    d0 = diff(start)
    if min(d0) < 0:
        return []
    seen = {start}
    frontier = [(start, 1, 1)]
    out = [(d0, 1, 1)]
    while frontier:
        nxt = []
        for mu, sign, eta in frontier:
            for i in range(n):
                k = mu[i]
                if k <= 0:
                    continue
                nu = tuple(x - k * c for x, c in zip(mu, cartan[i]))
                if nu in seen:
                    continue
                seen.add(nu)
                d = diff(nu)
                if min(d) < 0:
                    continue
                item = (nu, -sign, -eta if i in odd_simple else eta)
                out.append((d,) + item[1:])
                nxt.append(item)
        frontier = nxt
    return out


def _dominant_candidates(rs: RootSystem, labels):
    """Dominant mu with lam - mu a nonnegative integer root combination."""
    rc = [Fraction(x) for x in rs.root_coords(labels)]
    n = rs.rank
    ranges = [np.arange(int(np.floor(x)) + 1) for x in rc]
    grid = np.stack(np.meshgrid(*ranges, indexing="ij"), axis=-1).reshape(-1, n)
    cart = np.array(rs.cartan, dtype=np.int64)
    mus = np.array(labels, dtype=np.int64)[None, :] - grid @ cart
    keep = (mus >= 0).all(axis=1)
    return [tuple(int(x) for x in row) for row in mus[keep]], [tuple(int(x) for x in row) for row in grid[keep]]


def graded_multiplicities(rs: RootSystem, labels) -> dict:
    """Map dominant mu -> (even, odd) multiplicity of the irreducible with Dynkin labels ``labels``."""
    labels = tuple(labels)
    rho = (1,) * rs.rank
    top = tuple(a + b for a, b in zip(labels, rho))
    even = [_root_coords_of_vec(rs, v) for v in rs.positive_even_roots]
    odd = [_root_coords_of_vec(rs, v) for v in rs.positive_odd_roots]
    mus, grid = _dominant_candidates(rs, labels)
    if not mus:
        return {}
    shape = tuple(int(x) + 1 for x in np.max(np.array(grid), axis=0))
    ch = _kostant_box(shape, even, odd, 1)
    sch = _kostant_box(shape, even, odd, -1) if odd else ch
    odd_set = set(odd)
    odd_simple = {i for i in range(rs.rank) if tuple(int(i == j) for j in range(rs.rank)) in odd_set}
    out = {}
    for mu in mus:
        bottom = rs.root_coords(tuple(a + b for a, b in zip(mu, rho)))
        c = s = 0
        for d, sign, eta in _contributing_elements(rs, top, bottom, odd_simple):
            idx = tuple(int(x) for x in d)
            c += sign * int(ch[idx])
            s += sign * eta * int(sch[idx])
        if c or s:
            assert (c + s) % 2 == 0 and c >= abs(s)
            out[mu] = ((c + s) // 2, (c - s) // 2)
    return out
