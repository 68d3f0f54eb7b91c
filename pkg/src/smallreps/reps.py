"""Irreducible highest-weight modules: dimensions, characters, enumeration.

Characters are stored on dominant weights only; :meth:`GradedCharacter.items`
expands Weyl orbits on demand.  Dominant multiplicities come from
Freudenthal's recursion.  For ``BC_m`` the recursion runs on the ``B_m``
reflection system: the Kac-Weyl character of an osp(1|2m) module equals the
character of the so(2m+1) module with the same Dynkin labels, because the odd
factor prod(e^{e_i/2} + e^{-e_i/2}) over the even denominator is exactly the
reciprocal of the ``B_m`` Weyl denominator.  Each weight space of an osp(1|2m)
module is homogeneous, of parity given by the e-coordinate sum of
``highest weight - weight`` (odd roots have odd coordinate sum, even roots
even).  :mod:`smallreps.weylsum` computes the same characters from the
alternating sum and is kept independent of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .rootsys import RootSystem

__all__ = [
    "DominantWeight",
    "IrrepLabel",
    "GradedCharacter",
    "weyl_dim",
    "kacweyl_superdim",
    "dimension",
    "dominant_multiplicities",
    "dominant_weights_below",
    "character",
    "trivial_character",
    "dim_total",
    "superdim",
    "enumerate_dominant_up_to_dim",
]


@dataclass(frozen=True, order=True)
class DominantWeight:
    """Highest weight as nonnegative coefficients of the beta basis."""

    a: tuple

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if any(x < 0 for x in a):
            raise ValueError(f"dominant weight needs nonnegative coefficients, got {a}")
        object.__setattr__(self, "a", a)

    @classmethod
    def parse(cls, text: str) -> "DominantWeight":
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",")))

    @property
    def rank(self) -> int:
        return len(self.a)

    def is_zero(self) -> bool:
        return not any(self.a)

    def __add__(self, other):
        return DominantWeight(tuple(x + y for x, y in zip(self.a, other.a)))

    def scaled(self, k: int) -> "DominantWeight":
        return DominantWeight(tuple(k * x for x in self.a))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.a, 1):
            if c == 1:
                terms.append(f"b{i}")
            elif c:
                terms.append(f"{c}b{i}")
        return "+".join(terms) if terms else "0"

    def csv(self) -> str:
        return ",".join(str(x) for x in self.a)


def _as_weight(lam) -> DominantWeight:
    return lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))


@dataclass(frozen=True, order=True)
class IrrepLabel:
    """An irreducible module: V (highest weight vector even) or W = parity flip."""

    weight: DominantWeight
    parity: str = "V"

    def __post_init__(self):
        if self.parity not in ("V", "W"):
            raise ValueError(f"parity must be 'V' or 'W', got {self.parity!r}")
        object.__setattr__(self, "weight", _as_weight(self.weight))

    def flipped(self) -> "IrrepLabel":
        return IrrepLabel(self.weight, "W" if self.parity == "V" else "V")

    def __str__(self):
        return f"{self.parity}[{self.weight}]"


class GradedCharacter:
    """Finite map weight -> (even multiplicity, odd multiplicity).

    Keys are Dynkin label tuples of dominant weights; the character is
    assumed invariant under the even Weyl group.  Use :meth:`items` for the
    full expansion over all weights.
    """

    __slots__ = ("rs", "dominant")

    def __init__(self, rs: RootSystem, dominant=None):
        self.rs = rs
        self.dominant = {}
        for k, (e, o) in (dominant or {}).items():
            if e or o:
                self.dominant[tuple(k)] = (e, o)

    def copy(self):
        return GradedCharacter(self.rs, self.dominant)

    def __getitem__(self, labels):
        dom, _ = self.rs.dominant_labels(labels)
        return self.dominant.get(dom, (0, 0))

    def items(self):
        """Yield ``(labels, (even, odd))`` over every weight, orbits expanded."""
        for mu, eo in self.dominant.items():
            for nu in self.rs.orbit(mu):
                yield nu, eo

    def full(self) -> dict:
        return dict(self.items())

    def total(self) -> dict:
        """Dominant multiplicities ignoring parity."""
        return {k: e + o for k, (e, o) in self.dominant.items()}

    def dim_total(self) -> int:
        return sum((e + o) * self.rs.orbit_size(mu) for mu, (e, o) in self.dominant.items())

    def superdim(self) -> int:
        return sum((e - o) * self.rs.orbit_size(mu) for mu, (e, o) in self.dominant.items())

    def flip(self) -> "GradedCharacter":
        return GradedCharacter(self.rs, {k: (o, e) for k, (e, o) in self.dominant.items()})

    def _combine(self, other, sign):
        if other.rs != self.rs:
            raise ValueError("characters of different root systems")
        out = dict(self.dominant)
        for k, (e, o) in other.dominant.items():
            e0, o0 = out.get(k, (0, 0))
            out[k] = (e0 + sign * e, o0 + sign * o)
        return GradedCharacter(self.rs, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, k: int):
        return GradedCharacter(self.rs, {key: (k * e, k * o) for key, (e, o) in self.dominant.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GradedCharacter) and self.rs == other.rs and self.dominant == other.dominant

    def __repr__(self):
        return f"GradedCharacter({self.rs.type}, {len(self.dominant)} dominant weights)"


# -- dimension formulas ---------------------------------------------------


def weyl_dim(rs: RootSystem, lam) -> int:
    """Weyl's product formula prod (lam+rho, a)/(rho, a) over positive roots."""
    if rs.is_super:
        raise ValueError(f"{rs.type} is a superalgebra; use kacweyl_superdim")
    labels = rs.beta_to_labels(_as_weight(lam).a)
    lr = tuple(x + 1 for x in labels)
    num = den = 1
    for root in rs.pos_roots:
        # (mu, alpha) for alpha given by labels: sum_ij mu_i g_ij alpha_j
        num *= rs.inner_labels_int(lr, root)
        den *= rs.inner_labels_int(tuple(1 for _ in labels), root)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


def epsilon_coords(rs: RootSystem, lam) -> tuple:
    """Coordinates (lam_1 >= ... >= lam_m) of a BC weight in the e-basis."""
    a = _as_weight(lam).a
    return tuple(sum(a[i:]) for i in range(len(a)))


def kacweyl_superdim(rs: RootSystem, lam) -> int:
    """Superdimension of an osp(1|2m) irreducible from the Kac-Weyl product."""
    if not rs.is_super:
        raise ValueError(f"{rs.type} is not a superalgebra; use weyl_dim")
    m = rs.rank
    x = epsilon_coords(rs, lam)
    q = Fraction(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            q *= Fraction(x[i - 1] - x[j - 1], j - i) + 1
            q *= Fraction(x[i - 1] + x[j - 1], 2 * m + 1 - i - j) + 1
    assert q.denominator == 1
    return int(q)


def dimension(rs: RootSystem, lam) -> int:
    """(Super) dimension of V_lam by the product formula for the type."""
    return kacweyl_superdim(rs, lam) if rs.is_super else weyl_dim(rs, lam)


# -- Freudenthal ----------------------------------------------------------


def dominant_weights_below(rs: RootSystem, labels) -> list:
    """Dominant weights mu <= labels (difference in the positive root cone).

    Every such weight is reached from the top by subtracting one positive
    root at a time while staying dominant.
    """
    top = tuple(labels)
    seen = {top}
    frontier = [top]
    roots = rs.pos_roots
    while frontier:
        nxt = []
        for mu in frontier:
            for r in roots:
                nu = tuple(x - y for x, y in zip(mu, r))
                if min(nu) >= 0 and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda mu: (-rs.height(mu), mu))


def dominant_multiplicities(rs: RootSystem, labels) -> dict:
    """Dominant weight multiplicities of the irreducible with given labels."""
    labels = tuple(labels)
    if min(labels) < 0:
        raise ValueError(f"{labels} is not dominant")
    key = ("freudenthal", labels)
    hit = rs._cache.get(key)
    if hit is not None:
        return hit
    doms = dominant_weights_below(rs, labels)
    mult = {labels: 1}
    lr = tuple(x + 1 for x in labels)
    top = rs.inner_labels_int(lr, lr)
    roots = rs.pos_roots
    ip = rs.inner_labels_int
    dom = rs.dominant_labels
    for mu in doms[1:]:
        mr = tuple(x + 1 for x in mu)
        denom = top - ip(mr, mr)
        acc = 0
        for r in roots:
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, r))
                d, _ = dom(nu)
                m = mult.get(d)
                if not m:
                    break
                acc += m * ip(nu, r)
        q, rem = divmod(2 * acc, denom)
        assert rem == 0, (labels, mu)
        if q:
            mult[mu] = q
    rs._cache[key] = mult
    return mult


def _parity(rs: RootSystem, top, mu) -> int:
    if not rs.is_super:
        return 0
    diff = tuple(a - b for a, b in zip(top, mu))
    last = rs.root_coords(diff)[-1]
    return int(last) % 2


def character(rs: RootSystem, label) -> GradedCharacter:
    """Graded character of V_lam (or of its parity flip W_lam)."""
    if not isinstance(label, IrrepLabel):
        label = IrrepLabel(_as_weight(label))
    labels = rs.beta_to_labels(label.weight.a)
    key = ("graded", labels)
    ch = rs._cache.get(key)
    if ch is None:
        mult = dominant_multiplicities(rs, labels)
        dom = {}
        for mu, k in mult.items():
            dom[mu] = (0, k) if _parity(rs, labels, mu) else (k, 0)
        ch = GradedCharacter(rs, dom)
        rs._cache[key] = ch
    return ch.flip() if label.parity == "W" else ch


def trivial_character(rs: RootSystem) -> GradedCharacter:
    return GradedCharacter(rs, {tuple([0] * rs.rank): (1, 0)})


def dim_total(rs: RootSystem, label) -> int:
    return character(rs, label).dim_total()


def superdim(rs: RootSystem, label) -> int:
    return character(rs, label).superdim()


# -- enumeration ----------------------------------------------------------


def enumerate_dominant_up_to_dim(rs: RootSystem, bound: int) -> list:
    """All nonzero dominant weights whose (super)dimension is at most ``bound``.

    The product formulas are strictly increasing in every beta coefficient
    (for BC from rank 2 on), so a depth-first search that only ever adds
    basis weights in nondecreasing index order can prune on the bound.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if rs.type.family == "BC" and rs.rank == 1:
        raise ValueError("every irreducible of osp(1|2) has superdimension 1; the set is infinite")
    m = rs.rank
    out = []

    def walk(a, start):
        for k in range(start, m):
            b = list(a)
            b[k] += 1
            lam = DominantWeight(tuple(b))
            if dimension(rs, lam) <= bound:
                out.append(lam)
                walk(b, k)

    walk([0] * m, 0)
    return sorted(out, key=lambda w: (sum(w.a), w.a))


def binomial_superdim(m: int, r: int) -> int:
    """C(2m, r) - C(2m, r-1), the superdimension of V_{beta_r} for BC_m."""
    return comb(2 * m, r) - comb(2 * m, r - 1)

