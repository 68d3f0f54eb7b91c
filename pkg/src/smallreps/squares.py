"""Symmetric and alternating squares and their irreducible constituents.

With the super commutativity constraint, for V = V0 + V1

    S^2 V = S^2 V0 + V0 (x) V1 + L^2 V1      (parities even, odd, even)
    L^2 V = L^2 V0 + V0 (x) V1 + S^2 V1

which on characters reads ch T_e = (ch^2 + e psi2(sch)) / 2 and
sch T_e = (sch^2 + e psi2(sch)) / 2, psi2 being the Adams operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .reps import (
    DominantWeight,
    GradedCharacter,
    IrrepLabel,
    character,
)
from .rootsys import RootSystem

__all__ = [
    "Decomposition",
    "DecompositionError",
    "square_character",
    "decompose",
    "square_decompose",
    "contains_highest_weight",
]


class DecompositionError(RuntimeError):
    """Peeling met a negative multiplicity: the input was not a genuine character."""


@dataclass(frozen=True)
class Decomposition:
    """Multiset of irreducible constituents plus the number of trivial summands."""

    constituents: tuple  # ((IrrepLabel, mult), ...), canonical order
    delta: int = 0
    rs: RootSystem | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for lab, k in self.constituents:
            if k <= 0:
                raise ValueError(f"nonpositive multiplicity {k} for {lab}")
            if lab.parity == "V" and lab.weight.is_zero():
                raise ValueError("trivial summands belong in delta")

    @property
    def labels(self) -> list:
        return [lab for lab, _ in self.constituents]

    def multiset(self) -> dict:
        out = {lab: k for lab, k in self.constituents}
        if self.delta:
            out["1"] = self.delta
        return out

    def is_empty(self) -> bool:
        return not self.constituents and not self.delta

    def to_character(self) -> GradedCharacter:
        from .reps import trivial_character

        rs = self.rs
        total = trivial_character(rs) * self.delta
        for lab, k in self.constituents:
            total = total + character(rs, lab) * k
        return total

    def to_json(self) -> dict:
        return {
            "constituents": [
                {"lambda": list(lab.weight.a), "parity": lab.parity, "mult": k} for lab, k in self.constituents
            ],
            "delta": self.delta,
        }

    def __str__(self):
        parts = []
        for lab, k in self.constituents:
            parts.append((f"{k}" if k > 1 else "") + f"{lab.parity}[{lab.weight}]")
        if self.delta:
            parts.append((f"{self.delta}" if self.delta > 1 else "") + "1")
        return " + ".join(parts) if parts else "0"


def square_character(ch: GradedCharacter, eps: int) -> GradedCharacter:
    """Graded character of S^2 (eps=+1) or the alternating square (eps=-1)."""
    if eps not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {eps}")
    rs = ch.rs
    weights = list(ch.items())
    tot = [(mu, e + o, e - o) for mu, (e, o) in weights]
    sq = {}
    ssq = {}
    n = len(tot)
    for a in range(n):
        mu, c1, s1 = tot[a]
        for b in range(a, n):
            nu, c2, s2 = tot[b]
            w = tuple(x + y for x, y in zip(mu, nu))
            if min(w) < 0:
                continue
            k = 1 if a == b else 2
            sq[w] = sq.get(w, 0) + k * c1 * c2
            ssq[w] = ssq.get(w, 0) + k * s1 * s2
    sch_dom = {mu: e - o for mu, (e, o) in ch.dominant.items()}
    out = {}
    for w in sq:
        psi = 0
        if all(x % 2 == 0 for x in w):
            psi = sch_dom.get(tuple(x // 2 for x in w), 0)
        c = sq[w] + eps * psi
        s = ssq[w] + eps * psi
        assert c % 2 == 0 and s % 2 == 0
        c //= 2
        s //= 2
        even, odd = (c + s) // 2, (c - s) // 2
        assert even >= 0 and odd >= 0
        if even or odd:
            out[w] = (even, odd)
    return GradedCharacter(rs, out)


def _height_key(rs: RootSystem):
    cache = {}

    def key(mu):
        h = cache.get(mu)
        if h is None:
            h = cache[mu] = rs.height(mu)
        return h

    return key


def decompose(rs: RootSystem, ch: GradedCharacter, tiebreak=None) -> Decomposition:
    """Split a genuine graded character into irreducibles by peeling off maximal weights.

    ``tiebreak`` orders weights of equal height; the result does not depend
    on it.
    """
    residual = dict(ch.dominant)
    height = _height_key(rs)
    tie = tiebreak or (lambda mu: mu)
    found = {}
    delta = 0
    while residual:
        top = max(residual, key=lambda mu: (height(mu), tie(mu)))
        e, o = residual[top]
        if e < 0 or o < 0:
            raise DecompositionError(f"negative multiplicity {(e, o)} at maximal weight {top}")
        beta = DominantWeight(rs.labels_to_beta(top))
        for parity, k in (("V", e), ("W", o)):
            if not k:
                continue
            lab = IrrepLabel(beta, parity)
            if parity == "V" and beta.is_zero():
                delta += k
            else:
                found[lab] = found.get(lab, 0) + k
            for mu, (ce, co) in character(rs, lab).dominant.items():
                re_, ro = residual.get(mu, (0, 0))
                re_ -= k * ce
                ro -= k * co
                if re_ or ro:
                    residual[mu] = (re_, ro)
                else:
                    residual.pop(mu, None)
    ordered = sorted(found.items(), key=lambda kv: (-height(rs.beta_to_labels(kv[0].weight.a)), kv[0].weight.a, kv[0].parity))
    return Decomposition(tuple(ordered), delta, rs)


def square_decompose(rs: RootSystem, lam, eps: int) -> Decomposition:
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))
    if lam.is_zero():
        raise ValueError("highest weight must be nonzero")
    key = ("square", lam.a, eps)
    hit = rs._cache.get(key)
    if hit is None:
        hit = decompose(rs, square_character(character(rs, lam), eps))
        rs._cache[key] = hit
    return hit


def remark7_weight(rs: RootSystem, lam, i: int, root: str = "super") -> tuple:
    """Dynkin labels of 2*lam - alpha_i (1-based ``i``).

    ``root="super"`` uses the full simple root alpha_i of the algebra,
    ``root="even"`` the simple root of the even part (differs only for BC at i=m).
    """
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))
    labels = rs.beta_to_labels(lam.a)
    alpha = rs.cartan[i - 1]
    if root == "even" and rs.is_super and i == rs.rank:
        alpha = tuple(2 * x for x in alpha)
    elif root not in ("super", "even"):
        raise ValueError(root)
    return tuple(2 * x - y for x, y in zip(labels, alpha))


def contains_highest_weight(rs: RootSystem, lam, i: int, root: str = "super") -> bool:
    """Whether 2*lam - alpha_i is a constituent highest weight of the alternating square."""
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))
    if not 1 <= i <= rs.rank:
        raise IndexError(f"index {i} out of range 1..{rs.rank}")
    if lam.a[i - 1] <= 0:
        raise ValueError(f"coefficient a_{i} of {lam} must be positive")
    target = remark7_weight(rs, lam, i, root)
    if min(target) < 0:
        return False
    dec = square_decompose(rs, lam, -1)
    if not any(target):
        return dec.delta > 0 or any(lab.weight.is_zero() for lab in dec.labels)
    return any(rs.beta_to_labels(lab.weight.a) == target for lab in dec.labels)
