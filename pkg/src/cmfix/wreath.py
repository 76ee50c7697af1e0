"""Exact character theory of the wreath products G(l,1,n).

Conjugacy classes and irreducible characters are both indexed by
l-multipartitions of n: component j of a class type collects the lengths of
cycles whose cycle product is zeta^j, and component i of a character label
carries the i-th linear character t -> zeta^i of the cyclic group.  Character
values are computed by iterated rim-hook removal (the classical rule for
S_n weighted by root-of-unity factors per cycle colour) and live in Q(zeta_l).

The centre of the group algebra is handled in two bases: class sums (the
filtration-friendly basis) and primitive central idempotents (the
multiplication-friendly basis); conversion goes through the central
characters w_chi(z_C) = |C| chi(C) / chi(1).

``codim`` of a class is the codimension of the fixed space of any of its
elements: a cycle contributes a fixed line exactly when its cycle product
is 1, so codim = n - (number of parts of component 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arith import CyclotomicNumber, embed, zeta
from .partitions import (
    Multipartition,
    Partition,
    beta_flat_k_gamma,
    beta_k_gamma,
    core_multi,
    enumerate_multipartitions,
    msize,
)

__all__ = [
    "group_order",
    "centralizer_order",
    "enumerate_classes",
    "codim",
    "inverse_class",
    "character_value",
    "char_dimension",
    "WreathTable",
    "character_table",
    "CentralElement",
    "class_sum",
    "central_idempotent",
    "filtration_degree",
    "i_gamma_star",
    "FiltrationReport",
    "verify_filtration",
]


def group_order(l: int, n: int) -> int:
    return l**n * factorial(n)


def centralizer_order(ctype: Multipartition, l: int) -> int:
    out = 1
    for comp in ctype:
        mult: dict[int, int] = {}
        for a in comp:
            mult[a] = mult.get(a, 0) + 1
        for a, m in mult.items():
            out *= (a * l) ** m * factorial(m)
    return out


def enumerate_classes(l: int, n: int) -> list[tuple[Multipartition, int]]:
    """All class types with their sizes; sizes sum to l^n * n!."""
    order = group_order(l, n)
    out = [(t, order // centralizer_order(t, l)) for t in enumerate_multipartitions(l, n)]
    assert sum(s for _, s in out) == order
    return out


def codim(ctype: Multipartition, n: int | None = None) -> int:
    if n is None:
        n = msize(ctype)
    return n - len(ctype[0])


def inverse_class(ctype: Multipartition) -> Multipartition:
    """Class type of inverses: cycle products invert, colours negate."""
    l = len(ctype)
    return tuple(ctype[(-j) % l] for j in range(l))


# ---------------------------------------------------------------------------
# character values by rim-hook removal
# ---------------------------------------------------------------------------


def _rim_hooks(lam: Partition, a: int) -> list[tuple[Partition, int]]:
    """All removals of a rim hook of size a: (smaller partition, sign)."""
    L = len(lam)
    if a > sum(lam):
        return []
    beads = [lam[i] - (i + 1) + L for i in range(L)]  # distinct, >= 0
    bead_set = set(beads)
    out = []
    for b in beads:
        nb = b - a
        if nb < 0 or nb in bead_set:
            continue
        height = sum(1 for c in beads if nb < c < b)
        new_beads = sorted((bead_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(
            p for p in (new_beads[i] - L + i + 1 for i in range(L)) if p
        )
        out.append((new_lam, -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _char_rec(lam: Multipartition, cycles: tuple[tuple[int, int], ...], l: int) -> CyclotomicNumber:
    if not cycles:
        assert msize(lam) == 0
        return CyclotomicNumber.one(l)
    a, colour = cycles[0]
    rest = cycles[1:]
    total = CyclotomicNumber.zero(l)
    for i, comp in enumerate(lam):
        if sum(comp) < a:
            continue
        w = zeta(l, (colour * i) % l)
        for new_comp, sign in _rim_hooks(comp, a):
            new_lam = lam[:i] + (new_comp,) + lam[i + 1:]
            total = total + w * sign * _char_rec(new_lam, rest, l)
    return total


def character_value(lam: Multipartition, ctype: Multipartition, l: int | None = None) -> CyclotomicNumber:
    """chi_lam evaluated on the class of type ctype, exact in Q(zeta_l)."""
    if l is None:
        l = len(lam)
    if len(lam) != l or len(ctype) != l:
        raise ValueError("component count mismatch")
    if msize(lam) != msize(ctype):
        raise ValueError("size mismatch between label and class")
    cycles = tuple(
        sorted(
            ((a, c) for c, comp in enumerate(ctype) for a in comp),
            reverse=True,
        )
    )
    return _char_rec(lam, cycles, l)


def char_dimension(lam: Multipartition) -> int:
    """chi_lam(1) = multinomial(n; sizes) * product of standard-tableau counts."""
    n = msize(lam)
    out = factorial(n)
    for comp in lam:
        out //= factorial(sum(comp))
        out *= _syt_count(comp)
    return out


def _syt_count(lam: Partition) -> int:
    # hook length formula
    if not lam:
        return 1
    conj = [0] * lam[0]
    for p in lam:
        for c in range(p):
            conj[c] += 1
    num = factorial(sum(lam))
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            hook = (p - j) + (conj[j - 1] - i) + 1
            assert num % hook == 0
            num //= hook
    return num


# ---------------------------------------------------------------------------
# character table and the centre of the group algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WreathTable:
    l: int
    n: int
    labels: tuple[Multipartition, ...]
    classes: tuple[Multipartition, ...]
    sizes: tuple[int, ...]
    values: tuple[tuple[CyclotomicNumber, ...], ...]  # [label][class]

    @property
    def order(self) -> int:
        return group_order(self.l, self.n)

    def value(self, lam: Multipartition, ctype: Multipartition) -> CyclotomicNumber:
        return self.values[self.labels.index(lam)][self.classes.index(ctype)]


@lru_cache(maxsize=None)
def character_table(l: int, n: int) -> WreathTable:
    labels = tuple(enumerate_multipartitions(l, n))
    classes_sizes = enumerate_classes(l, n)
    classes = tuple(t for t, _ in classes_sizes)
    sizes = tuple(s for _, s in classes_sizes)
    values = tuple(
        tuple(character_value(lam, c, l) for c in classes) for lam in labels
    )
    return WreathTable(l, n, labels, classes, sizes, values)


@dataclass(frozen=True)
class CentralElement:
    """Element of Z(C G(l,1,n)) in the class-sum basis (sparse)."""

    l: int
    n: int
    coeffs: tuple[tuple[Multipartition, CyclotomicNumber], ...]

    @classmethod
    def from_dict(cls, l: int, n: int, d: dict) -> "CentralElement":
        items = tuple(sorted((k, v) for k, v in d.items() if not v.is_zero()))
        return cls(l, n, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def support(self) -> tuple[Multipartition, ...]:
        return tuple(k for k, _ in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "CentralElement") -> "CentralElement":
        if (self.l, self.n) != (other.l, other.n):
            raise ValueError("mismatched algebras")
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, CyclotomicNumber.zero(self.l)) + v
        return CentralElement.from_dict(self.l, self.n, d)

    def scale(self, c) -> "CentralElement":
        return CentralElement.from_dict(
            self.l, self.n, {k: v * c for k, v in self.coeffs}
        )

    def __mul__(self, other: "CentralElement") -> "CentralElement":
        if (self.l, self.n) != (other.l, other.n):
            raise ValueError("mismatched algebras")
        wa, wb = to_omega(self), to_omega(other)
        return from_omega(self.l, self.n, tuple(x * y for x, y in zip(wa, wb)))


def class_sum(l: int, n: int, ctype: Multipartition) -> CentralElement:
    return CentralElement.from_dict(l, n, {ctype: CyclotomicNumber.one(l)})


def to_omega(z: CentralElement) -> tuple[CyclotomicNumber, ...]:
    """Central characters: w_lam(z_C) = |C| chi_lam(C) / chi_lam(1)."""
    t = character_table(z.l, z.n)
    d = z.as_dict()
    out = []
    for li, lam in enumerate(t.labels):
        acc = CyclotomicNumber.zero(z.l)
        dim = char_dimension(lam)
        for ctype, coeff in d.items():
            ci = t.classes.index(ctype)
            acc = acc + coeff * t.values[li][ci] * Fraction(t.sizes[ci], dim)
        out.append(acc)
    return tuple(out)


def from_omega(l: int, n: int, omega) -> CentralElement:
    """Inverse of to_omega: coefficients on class sums via column expansion."""
    t = character_table(l, n)
    omega = tuple(omega)
    order = t.order
    d = {}
    inv_index = [t.classes.index(inverse_class(c)) for c in t.classes]
    for ci, ctype in enumerate(t.classes):
        acc = CyclotomicNumber.zero(l)
        for li, lam in enumerate(t.labels):
            acc = acc + omega[li] * t.values[li][inv_index[ci]] * char_dimension(lam)
        d[ctype] = acc / order
    return CentralElement.from_dict(l, n, d)


def central_idempotent(lam: Multipartition) -> CentralElement:
    """e_lam = (chi(1)/|W|) sum_C chi_lam(C^{-1}) z_C."""
    l, n = len(lam), msize(lam)
    t = character_table(l, n)
    li = t.labels.index(lam)
    dim = Fraction(char_dimension(lam), t.order)
    d = {}
    for ci, ctype in enumerate(t.classes):
        inv_ci = t.classes.index(inverse_class(ctype))
        d[ctype] = t.values[li][inv_ci] * dim
    return CentralElement.from_dict(l, n, d)


def filtration_degree(z: CentralElement) -> int:
    """Largest codim over the support; 0 for the zero element and scalars."""
    if z.is_zero():
        return 0
    return max(codim(c, z.n) for c in z.support())


# ---------------------------------------------------------------------------
# the component restriction morphism and the filtration check
# ---------------------------------------------------------------------------


def i_gamma_star(z: CentralElement, gamma: Multipartition, k: int, flat: bool = True) -> CentralElement:
    """Restriction Z(C G(l,1,n)) ->> Z(C G(kl,1,r)) attached to gamma.

    In the idempotent basis: e_lam maps to the idempotent labelled by the
    interleaved quotient of lam when the componentwise k-core of lam is
    gamma, and to 0 otherwise.  ``flat`` selects the slot-reversed
    interleaving (the default labelling); pass False to probe the unreversed
    variant.
    """
    l, n = z.l, z.n
    if len(gamma) != l:
        raise ValueError("gamma has the wrong number of components")
    sz = msize(gamma)
    if sz > n or (n - sz) % k != 0:
        raise ValueError("gamma violates the size/congruence constraint")
    r = (n - sz) // k
    m = k * l
    t = character_table(l, n)
    t2 = character_table(m, r)
    omega = to_omega(z)
    bmap = beta_flat_k_gamma if flat else beta_k_gamma
    out_omega = [CyclotomicNumber.zero(m) for _ in t2.labels]
    for li, lam in enumerate(t.labels):
        if core_multi(lam, k) != gamma:
            continue
        mu = bmap(lam, k, gamma)
        out_omega[t2.labels.index(mu)] = embed(omega[li], m)
    return from_omega(m, r, tuple(out_omega))


@dataclass(frozen=True)
class FiltrationReport:
    l: int
    n: int
    k: int
    gamma: Multipartition
    passed: bool
    checked: int
    certificates: tuple  # violating (class, codim, offending class, its codim)

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "k": self.k,
            "gamma": [list(c) for c in self.gamma],
            "passed": self.passed,
            "classes_checked": self.checked,
            "certificates": [
                {
                    "class": [list(c) for c in cert[0]],
                    "codim": cert[1],
                    "offending_class": [list(c) for c in cert[2]],
                    "offending_codim": cert[3],
                }
                for cert in self.certificates
            ],
        }


def verify_filtration(l: int, n: int, k: int, gamma: Multipartition, flat: bool = True) -> FiltrationReport:
    """Check that restriction respects the codimension filtration degreewise.

    For every class sum z_C of G(l,1,n): the image under i_gamma_star must be
    supported on classes of G(kl,1,r) of codim at most codim(C).  Failures
    are reported with certificates, never raised.
    """
    t = character_table(l, n)
    certs = []
    checked = 0
    for ctype in t.classes:
        checked += 1
        i = codim(ctype, n)
        image = i_gamma_star(class_sum(l, n, ctype), gamma, k, flat=flat)
        for d_ctype, coeff in image.coeffs:
            dcod = codim(d_ctype, image.n)
            if dcod > i:
                certs.append((ctype, i, d_ctype, dcod))
    return FiltrationReport(l, n, k, gamma, not certs, checked, tuple(certs))
