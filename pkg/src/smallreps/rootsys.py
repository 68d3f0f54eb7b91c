"""Root systems, weight lattices and the invariant form.

Every type is realised in its Bourbaki Euclidean embedding with the standard
dot product; for ``BC_m`` (the orthosymplectic superalgebra osp(1|2m)) the
space is spanned by orthonormal vectors e_1..e_m with full simple roots
e_i - e_{i+1} and e_m.  All arithmetic is exact.

Internally weights are carried as integer tuples of Dynkin labels, i.e. the
pairings with the full simple coroots.  For ``BC_m`` these coincide with the
labels of ``B_m``: both systems have the same simple roots and the same Weyl
group, the super structure only changes which roots are even or odd.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "DynkinType",
    "WeightVec",
    "RootSystem",
    "build",
    "inner",
    "r_ratio",
    "coroot_norm_max",
    "diagram_automorphisms",
    "is_dominant",
    "to_dominant",
    "parse_type",
]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")


def _admissible(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    if family == "BC":
        return rank >= 1
    return False


_RANGES = {
    "A": "m >= 1",
    "B": "m >= 2",
    "C": "m >= 2",
    "D": "m >= 4",
    "E": "m in {6, 7, 8}",
    "F": "m = 4",
    "G": "m = 2",
    "BC": "m >= 1",
}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(self.rank, int) or not _admissible(self.family, self.rank):
            raise ValueError(
                f"inadmissible rank {self.rank} for type {self.family}: need {_RANGES[self.family]}"
            )

    @property
    def is_super(self) -> bool:
        return self.family == "BC"

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_type(text: str, rank: int | None = None) -> DynkinType:
    """Parse ``"E6"``, ``"BC3"`` or a family letter plus separate rank."""
    text = text.strip().upper()
    if rank is None:
        fam = text.rstrip("0123456789")
        num = text[len(fam):]
        if not num:
            raise ValueError(f"missing rank in {text!r}")
        return DynkinType(fam, int(num))
    return DynkinType(text, int(rank))


@dataclass(frozen=True)
class WeightVec:
    """A vector of exact rationals in a type's Euclidean embedding."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise ValueError(f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other):
        self._check(other)
        return WeightVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return WeightVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return WeightVec(-a for a in self.coords)

    def __mul__(self, k):
        return WeightVec(k * a for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __repr__(self):
        return "WeightVec(" + ", ".join(str(c) for c in self.coords) + ")"


def _unit(n, *pairs):
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] += Fraction(c)
    return WeightVec(v)


def _simple_root_vectors(family: str, m: int) -> list[WeightVec]:
    if family == "A":
        return [_unit(m + 1, (i, 1), (i + 1, -1)) for i in range(m)]
    if family in ("B", "BC"):
        return [_unit(m, (i, 1), (i + 1, -1)) for i in range(m - 1)] + [_unit(m, (m - 1, 1))]
    if family == "C":
        return [_unit(m, (i, 1), (i + 1, -1)) for i in range(m - 1)] + [_unit(m, (m - 1, 2))]
    if family == "D":
        return [_unit(m, (i, 1), (i + 1, -1)) for i in range(m - 1)] + [
            _unit(m, (m - 2, 1), (m - 1, 1))
        ]
    if family == "E":
        h = Fraction(1, 2)
        roots = [
            WeightVec([h, -h, -h, -h, -h, -h, -h, h]),
            _unit(8, (0, 1), (1, 1)),
        ] + [_unit(8, (k, -1), (k + 1, 1)) for k in range(6)]
        return roots[:m]
    if family == "F":
        h = Fraction(1, 2)
        return [
            _unit(4, (1, 1), (2, -1)),
            _unit(4, (2, 1), (3, -1)),
            _unit(4, (3, 1)),
            WeightVec([h, -h, -h, -h]),
        ]
    if family == "G":
        return [_unit(3, (0, 1), (1, -1)), _unit(3, (0, -2), (1, 1), (2, 1))]
    raise ValueError(family)


def _inverse(mat):
    """Inverse of a square matrix of Fractions by Gauss-Jordan elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable bundle of root and weight data for one Dynkin type.

    Vectors are :class:`WeightVec` in the Euclidean embedding.  The integer
    fields prefixed ``cartan``/``pos_roots`` carry the same data in Dynkin
    label coordinates and are what the representation code works with.
    """

    type: DynkinType
    simple_roots: tuple
    even_simple_roots: tuple
    positive_even_roots: tuple
    positive_odd_roots: tuple
    fundamental_weights: tuple
    beta_basis: tuple
    rho: WeightVec
    dim_g: int
    # cartan[i][j] = <alpha_i, alpha_j^vee>; row i holds the labels of alpha_i
    cartan: tuple
    # positive roots of the reflection system (B_m for BC_m), Dynkin labels
    pos_roots: tuple
    # root-lattice coordinates of pos_roots
    pos_roots_rc: tuple
    # (varpi_i, varpi_j) scaled to integers by gram_scale
    gram_int: tuple
    gram_scale: int
    _inv_cartan: tuple = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.type == self.type

    def __hash__(self):
        return hash(("RootSystem", self.type))

    def __repr__(self):
        return f"RootSystem({self.type})"

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def is_super(self) -> bool:
        return self.type.is_super

    @property
    def embedding_dim(self) -> int:
        return len(self.rho)

    # -- conversions between labels, beta coordinates and vectors --------

    def to_vec(self, labels) -> WeightVec:
        out = WeightVec([0] * self.embedding_dim)
        for c, w in zip(labels, self.fundamental_weights):
            if c:
                out = out + w * c
        return out

    def labels_of(self, v: WeightVec) -> tuple:
        """Pairings of ``v`` with the full simple coroots (exact rationals)."""
        out = []
        for a in self.simple_roots:
            x = 2 * v.dot(a) / a.dot(a)
            out.append(int(x) if x.denominator == 1 else x)
        return tuple(out)

    def beta_to_labels(self, a) -> tuple:
        a = tuple(int(x) for x in a)
        if len(a) != self.rank:
            raise ValueError(f"expected {self.rank} beta coefficients, got {len(a)}")
        if self.is_super:
            return a[:-1] + (2 * a[-1],)
        return a

    def labels_to_beta(self, labels) -> tuple:
        labels = tuple(labels)
        if self.is_super:
            if labels[-1] % 2:
                raise ValueError(f"labels {labels} are not an integral combination of the beta basis")
            return labels[:-1] + (labels[-1] // 2,)
        return labels

    def root_coords(self, labels) -> tuple:
        """Coordinates of a weight in the basis of full simple roots."""
        n = self.rank
        inv = self._inv_cartan
        return tuple(sum(labels[i] * inv[i][k] for i in range(n)) for k in range(n))

    def height(self, labels) -> Fraction:
        return sum(self.root_coords(labels), Fraction(0))

    def inner_labels(self, u, v) -> Fraction:
        """Invariant form evaluated on two weights given by Dynkin labels."""
        return Fraction(self.inner_labels_int(u, v), self.gram_scale)

    def inner_labels_int(self, u, v) -> int:
        g = self.gram_int
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = g[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total

    def reflect(self, labels, i) -> tuple:
        k = labels[i]
        if not k:
            return tuple(labels)
        row = self.cartan[i]
        return tuple(x - k * r for x, r in zip(labels, row))

    def dominant_labels(self, labels):
        """Return ``(dominant image, number of simple reflections used)``."""
        mu = list(labels)
        steps = 0
        cartan = self.cartan
        n = len(mu)
        while True:
            for i in range(n):
                if mu[i] < 0:
                    k = mu[i]
                    row = cartan[i]
                    for j in range(n):
                        if row[j]:
                            mu[j] -= k * row[j]
                    steps += 1
                    break
            else:
                return tuple(mu), steps

    def orbit(self, labels) -> tuple:
        """Full Weyl group orbit of a weight, as a tuple of label tuples."""
        dom, _ = self.dominant_labels(labels)
        key = ("orbit", dom)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        seen = {dom}
        frontier = [dom]
        while frontier:
            nxt = []
            for mu in frontier:
                for i, c in enumerate(mu):
                    if c > 0:
                        nu = self.reflect(mu, i)
                        if nu not in seen:
                            seen.add(nu)
                            nxt.append(nu)
            frontier = nxt
        out = tuple(seen)
        self._cache[key] = out
        return out

    def orbit_size(self, labels) -> int:
        return len(self.orbit(labels))

    def adjoint_weight(self) -> tuple:
        """Beta coordinates of the adjoint representation's highest weight."""
        fam, m = self.type.family, self.rank
        a = [0] * m
        if fam == "A":
            if m == 1:
                a[0] = 2
            else:
                a[0] = a[-1] = 1
        elif fam == "B":
            if m == 2:
                a[1] = 2
            else:
                a[1] = 1
        elif fam in ("C", "BC"):
            a[0] = 2
        elif fam == "D":
            a[1] = 1
        elif fam == "E":
            a[{6: 1, 7: 0, 8: 7}[m]] = 1
        elif fam == "F":
            a[0] = 1
        elif fam == "G":
            a[1] = 1
        return tuple(a)


def _positive_roots(cartan):
    """Positive roots as (labels, root coordinates), closing simple roots under reflections."""
    n = len(cartan)
    simple = [(tuple(cartan[i]), tuple(int(i == k) for k in range(n))) for i in range(n)]
    found = {rc: lab for lab, rc in simple}
    frontier = list(simple)
    while frontier:
        nxt = []
        for lab, rc in frontier:
            for i in range(n):
                k = lab[i]
                if k >= 0:
                    continue
                # reflection raises the root by -k * alpha_i
                nrc = tuple(c - k * (j == i) for j, c in enumerate(rc))
                if nrc in found:
                    continue
                nlab = tuple(x - k * r for x, r in zip(lab, cartan[i]))
                found[nrc] = nlab
                nxt.append((nlab, nrc))
        frontier = nxt
    items = sorted(found.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return tuple(lab for rc, lab in items), tuple(rc for rc, lab in items)


@lru_cache(maxsize=None)
def _build(dtype: DynkinType) -> RootSystem:
    fam, m = dtype.family, dtype.rank
    alphas = _simple_root_vectors(fam, m)
    n = len(alphas)
    cartan = tuple(
        tuple(int(2 * alphas[i].dot(alphas[j]) / alphas[j].dot(alphas[j])) for j in range(n))
        for i in range(n)
    )
    inv = _inverse(cartan)
    varpi = []
    for i in range(n):
        w = WeightVec([0] * len(alphas[0]))
        for k in range(n):
            if inv[i][k]:
                w = w + alphas[k] * inv[i][k]
        varpi.append(w)
    gram = [[varpi[i].dot(varpi[j]) for j in range(n)] for i in range(n)]
    scale = lcm(*(g.denominator for row in gram for g in row))
    gram_int = tuple(tuple(int(g * scale) for g in row) for row in gram)

    pos_lab, pos_rc = _positive_roots(cartan)

    def vec(rc):
        w = WeightVec([0] * len(alphas[0]))
        for c, a in zip(rc, alphas):
            if c:
                w = w + a * c
        return w

    pos_vecs = [vec(rc) for rc in pos_rc]
    if fam == "BC":
        short = [v for v in pos_vecs if v.dot(v) == 1]
        long_ = [v for v in pos_vecs if v.dot(v) == 2]
        even = tuple(long_) + tuple(v * 2 for v in short)
        odd = tuple(short)
        even_simple = tuple(alphas[:-1]) + (alphas[-1] * 2,)
        beta = tuple(varpi[:-1]) + (varpi[-1] * 2,)
        dim_g = (n + 2 * len(even)) - 2 * len(odd)
    else:
        even = tuple(pos_vecs)
        odd = ()
        even_simple = tuple(alphas)
        beta = tuple(varpi)
        dim_g = n + 2 * len(even)
    rho = WeightVec([0] * len(alphas[0]))
    for w in varpi:
        rho = rho + w
    return RootSystem(
        type=dtype,
        simple_roots=tuple(alphas),
        even_simple_roots=even_simple,
        positive_even_roots=even,
        positive_odd_roots=odd,
        fundamental_weights=tuple(varpi),
        beta_basis=beta,
        rho=rho,
        dim_g=dim_g,
        cartan=cartan,
        pos_roots=pos_lab,
        pos_roots_rc=pos_rc,
        gram_int=gram_int,
        gram_scale=scale,
        _inv_cartan=tuple(tuple(r) for r in inv),
    )


def build(dtype) -> RootSystem:
    """Build (and memoise) the root system of a Dynkin type.

    Accepts a :class:`DynkinType`, a ``(family, rank)`` pair or a string such
    as ``"BC3"``.
    """
    if isinstance(dtype, str):
        dtype = parse_type(dtype)
    elif isinstance(dtype, tuple):
        dtype = DynkinType(*dtype)
    return _build(dtype)


def inner(rs: RootSystem, u: WeightVec, v: WeightVec) -> Fraction:
    if len(u) != rs.embedding_dim or len(v) != rs.embedding_dim:
        raise ValueError(
            f"dimension mismatch: {rs.type} lives in dimension {rs.embedding_dim}, got {len(u)} and {len(v)}"
        )
    return u.dot(v)


def r_ratio(rs: RootSystem, i: int) -> Fraction:
    """|alpha_i|^2 / |beta_i|^2 with alpha_i an even simple root (1-based ``i``)."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"index {i} out of range 1..{rs.rank}")
    a = rs.even_simple_roots[i - 1]
    b = rs.beta_basis[i - 1]
    return a.dot(a) / b.dot(b)


def coroot_norm_max(rs: RootSystem) -> Fraction:
    """R^2 where R is the largest coroot length over the even simple roots."""
    return max(Fraction(4) / a.dot(a) for a in rs.even_simple_roots)


def diagram_automorphisms(dtype) -> list[tuple]:
    """All Dynkin diagram automorphisms as 0-based index permutations.

    ``sigma[i]`` is the image of node ``i``; on beta coordinates the
    permutation acts by ``(sigma . a)[sigma[i]] = a[i]``.
    """
    rs = build(dtype)
    cartan = rs.cartan
    n = rs.rank
    out = []

    def extend(partial):
        k = len(partial)
        if k == n:
            out.append(tuple(partial))
            return
        for t in range(n):
            if t in partial:
                continue
            if cartan[k][k] != cartan[t][t]:
                continue
            if all(cartan[k][j] == cartan[t][partial[j]] and cartan[j][k] == cartan[partial[j]][t] for j in range(k)):
                extend(partial + [t])

    extend([])
    return sorted(out)


def act_on_beta(sigma, a) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[sigma[i]] = x
    return tuple(out)


def is_dominant(rs: RootSystem, w: WeightVec) -> bool:
    """Dominance for the even Weyl group (pairings with even simple coroots)."""
    return all(w.dot(a) >= 0 for a in rs.even_simple_roots)


def _integral_labels(rs, w):
    labels = rs.labels_of(w)
    if any(not isinstance(x, int) for x in labels):
        raise ValueError(f"{w!r} is not in the weight lattice of {rs.type}")
    return labels


def to_dominant(rs: RootSystem, w: WeightVec):
    """Dominant image of ``w`` under the even Weyl group, plus a sign.

    The sign is ``(-1)^length`` of the Weyl element carrying ``w + rho`` into
    the dominant chamber, or ``None`` when ``w + rho`` lies on a wall (such a
    term drops out of an alternating sum).
    """
    labels = _integral_labels(rs, w)
    dom, _ = rs.dominant_labels(labels)
    shifted = tuple(x + 1 for x in labels)
    sdom, steps = rs.dominant_labels(shifted)
    sign = None if 0 in sdom else (-1) ** steps
    return rs.to_vec(dom), sign
