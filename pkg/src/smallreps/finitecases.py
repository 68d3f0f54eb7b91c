"""Dimension and counting arithmetic for extraspecial p-groups.

Only closed forms: an extraspecial group E of order p^(1+2n) has irreducible
representations of dimension p^n with nontrivial central character, for odd
p the two pieces of the tensor square carry Weil representations of
dimension (p^n +- 1)/2, and for p = 2 the relevant counts are the isotropic
and anisotropic vectors of a quadratic form of type +- on F_2^(2n).
"""

from dataclasses import dataclass

__all__ = [
    "ExtraspecialShape",
    "is_prime",
    "irrep_dim",
    "weil_dim",
    "isotropic_count",
    "anisotropic_count",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class ExtraspecialShape:
    """|E| = p^(1 + 2n); ``form_type`` is the type of the quadratic form, used for p = 2."""

    p: int
    n: int
    form_type: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.form_type not in (1, -1):
            raise ValueError(f"form_type must be +1 or -1, got {self.form_type}")

    @property
    def order(self) -> int:
        return self.p ** (1 + 2 * self.n)


def irrep_dim(shape: ExtraspecialShape) -> int:
    return shape.p**shape.n


def weil_dim(shape: ExtraspecialShape, eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {eps}")
    if shape.p == 2:
        raise ValueError("no Weil piece for p = 2; use isotropic_count / anisotropic_count")
    return (shape.p**shape.n + eps) // 2


def _check_n(n: int, form_type: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if form_type not in (1, -1):
        raise ValueError(f"form_type must be +1 or -1, got {form_type}")


def isotropic_count(n: int, form_type: int) -> int:
    """Isotropic vectors of a nondegenerate quadratic form on F_2^(2n), zero included."""
    _check_n(n, form_type)
    return 2 ** (n - 1) * (2**n + form_type)


def anisotropic_count(n: int, form_type: int) -> int:
    _check_n(n, form_type)
    return 4**n - isotropic_count(n, form_type)
