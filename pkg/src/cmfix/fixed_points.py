"""Component catalog of the mu_m-fixed locus, m = k*l.

Components are indexed either by dimension vectors d on Z/mZ whose l-residue
class sums are all n and which lie in the nonnegative affine orbit (the set
E(k,l,n)), or equivalently by l-tuples gamma of k-cores with |gamma| <= n and
|gamma| = n mod k.  The dictionary between the two is the core/quotient
bijection; each component carries the reflection group G(kl,1,r) with
r = (n-|gamma|)/k, transported parameters, and fixed-point labels.

Fixed points are labelled by l-multipartitions of n in two conventions that
differ by reversing the component order ("gordon", the default, and
"quiver"); the label sets attached to a component are the multipartitions
whose componentwise k-core is gamma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parameters import ParamSet, smooth_gl1n, transport
from .partitions import (
    Multipartition,
    beta_flat_k_gamma_inverse,
    core_multi,
    enumerate_core_tuples,
    enumerate_multipartitions,
    flip,
    from_core_and_quotient,
    is_l_core,
    msize,
    residue_to_core,
    residues,
)
from .affine_weyl import is_plus

__all__ = [
    "enumerate_E",
    "delta_map",
    "delta_inverse",
    "ComponentDescriptor",
    "component_catalog",
    "NestingReport",
    "nesting_check",
]


def _class_sums(d, l: int) -> tuple[int, ...]:
    m = len(d)
    return tuple(sum(d[j] for j in range(i, m, l)) for i in range(l))


def enumerate_E(k: int, l: int, n: int) -> list[tuple[int, ...]]:
    """All d on Z/klZ with every l-residue class sum equal to n, in the
    nonnegative affine orbit.  Enumerated through the core-tuple bijection,
    so the order matches enumerate_core_tuples(k, l, n)."""
    return [delta_inverse(g, k, l, n) for g in enumerate_core_tuples(k, l, n)]


def delta_map(d, l: int) -> Multipartition:
    """gamma = the l-quotient of the m-core attached to d in E(k,l,n)."""
    d = tuple(int(x) for x in d)
    m = len(d)
    if m % l != 0:
        raise ValueError(f"l={l} must divide the modulus {m}")
    sums = _class_sums(d, l)
    if len(set(sums)) != 1:
        raise ValueError(f"residue class sums differ: {sums}")
    if not is_plus(d):
        raise ValueError(f"{d} is not in the nonnegative affine orbit")
    nu, _ = residue_to_core(d)
    from .partitions import core, quotient

    if core(nu, l)[0] != ():
        raise ValueError(f"the {m}-core {nu} of d has a nontrivial {l}-core")
    return quotient(nu, l)


def delta_inverse(gamma: Multipartition, k: int, l: int, n: int) -> tuple[int, ...]:
    """d = Res_m(nu) + r*delta_m with nu rebuilt from gamma, r = (n-|gamma|)/k."""
    if len(gamma) != l:
        raise ValueError(f"gamma must have {l} components")
    for g in gamma:
        if not is_l_core(g, k):
            raise ValueError(f"component {g} is not a {k}-core")
    sz = msize(gamma)
    if sz > n or (n - sz) % k != 0:
        raise ValueError(f"|gamma|={sz} violates the size/congruence constraint")
    m = k * l
    r = (n - sz) // k
    nu = from_core_and_quotient((), gamma, l)
    res = residues(nu, m)
    return tuple(x + r for x in res)


@dataclass(frozen=True)
class ComponentDescriptor:
    """One irreducible component of the mu_(kl)-fixed locus.

    labels are in the gordon convention; the quiver convention reverses the
    component order of every label (and of gamma itself).  label_injection
    maps the kl-multipartitions of r onto the label set.
    """

    l: int
    n: int
    k: int
    gamma: Multipartition
    r: int
    m: int
    d: tuple[int, ...]
    c_prime: ParamSet
    labels: tuple[Multipartition, ...]
    label_injection: dict

    def labels_in(self, convention: str) -> tuple[Multipartition, ...]:
        if convention == "gordon":
            return self.labels
        if convention == "quiver":
            return tuple(flip(lab) for lab in self.labels)
        raise ValueError(f"unknown convention {convention!r}")

    def to_json(self, convention: str = "gordon") -> dict:
        return {
            "gamma": [list(c) for c in self.gamma],
            "r": self.r,
            "m": self.m,
            "d": {"modulus": self.m, "entries": list(self.d)},
            "c_prime": self.c_prime.to_json(),
            "labels": [[list(c) for c in lab] for lab in self.labels_in(convention)],
            "label_injection": [
                {
                    "mu": [list(c) for c in mu],
                    "lambda": [list(c) for c in lam],
                }
                for mu, lam in sorted(self.label_injection.items())
            ],
            "convention": convention,
        }


def component_catalog(l: int, n: int, k: int, p: ParamSet) -> list[ComponentDescriptor]:
    """One descriptor per gamma; requires smooth parameters."""
    if p.l != l:
        raise ValueError("parameter set has the wrong l")
    if not smooth_gl1n(p, n):
        raise ValueError("parameters are not smooth; the catalog needs smoothness")
    all_labels = enumerate_multipartitions(l, n)
    out = []
    for gamma in enumerate_core_tuples(k, l, n):
        r = (n - msize(gamma)) // k
        m = k * l
        d = delta_inverse(gamma, k, l, n)
        cp = transport(p, k, d)
        labels = tuple(lam for lam in all_labels if core_multi(lam, k) == gamma)
        inj = {
            mu: beta_flat_k_gamma_inverse(mu, k, gamma)
            for mu in enumerate_multipartitions(m, r)
        }
        assert set(inj.values()) == set(labels)
        out.append(
            ComponentDescriptor(
                l=l, n=n, k=k, gamma=gamma, r=r, m=m, d=d, c_prime=cp,
                labels=labels, label_injection=inj,
            )
        )
    return out


@dataclass(frozen=True)
class NestingReport:
    k1: int
    k2: int
    l: int
    n: int
    pairs_checked: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def nesting_check(k1: int, k2: int, l: int, n: int) -> NestingReport:
    """Label-set containment between the k2- and k1-component catalogs.

    For gamma2 in the k2-catalog and gamma1 in the k1-catalog, the label set
    of gamma2 is contained in that of gamma1 exactly when the componentwise
    k1-core of gamma2 is gamma1.  Requires k1 | k2.
    """
    if k2 % k1 != 0:
        raise ValueError(f"{k1} does not divide {k2}")
    all_labels = enumerate_multipartitions(l, n)

    def labels_of(gamma, k):
        return frozenset(lam for lam in all_labels if core_multi(lam, k) == gamma)

    failures = []
    pairs = 0
    g1s = enumerate_core_tuples(k1, l, n)
    g2s = enumerate_core_tuples(k2, l, n)
    for g2 in g2s:
        lab2 = labels_of(g2, k2)
        for g1 in g1s:
            pairs += 1
            contained = lab2 <= labels_of(g1, k1)
            predicted = core_multi(g2, k1) == g1
            if contained != predicted:
                failures.append({"gamma1": g1, "gamma2": g2,
                                 "contained": contained, "core_match": predicted})
    return NestingReport(k1, k2, l, n, pairs, tuple(failures))
