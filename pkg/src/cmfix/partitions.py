"""Partitions, multipartitions, residues, cores and quotients.

A partition is a tuple of weakly decreasing positive integers (the empty
tuple is the empty partition); a multipartition is a tuple of partitions.
Everything here is a pure function on those tuples.

Abacus convention (fixed once, documented here, used consistently):
the bead set of a partition ``lam`` is the charge-0 set

    B(lam) = { lam_i - i : i = 1, 2, 3, ... }   (lam_i = 0 for large i),

i.e. shifted first-column hook lengths.  For the l-quotient, bead ``b`` sits
on runner ``b mod l`` at position ``(b - b mod l) / l``; runner ``j`` carries
a charge ``s_j`` (sum over j is 0) and a partition read off its beads, which
is component ``j`` of the quotient.  The l-core is obtained by pushing every
runner down to its charge's ground state.  Cores biject with charge vectors,
and the residue vector of a core determines the charges through
``Res_i - Res_{i+1} = s_i`` (cyclically).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
ResidueVector = tuple[int, ...]

__all__ = [
    "partition",
    "size",
    "msize",
    "residues",
    "residues_infinite",
    "charges",
    "core",
    "core_from_charges",
    "is_l_core",
    "quotient",
    "from_core_and_quotient",
    "residue_to_core",
    "flip",
    "core_multi",
    "beta_k_gamma",
    "beta_flat_k_gamma",
    "beta_k_gamma_inverse",
    "beta_flat_k_gamma_inverse",
    "partitions_of",
    "partitions_upto",
    "cores_upto",
    "enumerate_multipartitions",
    "enumerate_core_tuples",
]


def partition(parts) -> Partition:
    """Canonicalize an iterable into a partition tuple (drops zeros)."""
    t = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in t):
        raise ValueError(f"negative part in {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"not weakly decreasing: {t}")
    return t


def size(lam: Partition) -> int:
    return sum(lam)


def msize(lam: Multipartition) -> int:
    return sum(sum(c) for c in lam)


def flip(lam: Multipartition) -> Multipartition:
    """Reverse the component order; an involution."""
    return tuple(reversed(lam))


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------


def residues(lam: Partition, l: int) -> ResidueVector:
    """Count boxes of each residue class (column - row) mod l."""
    if l < 1:
        raise ValueError("modulus must be >= 1")
    out = [0] * l
    for i, part in enumerate(lam, start=1):
        lo, hi = 1 - i, part - i  # contents in row i
        for a in range(l):
            out[a] += (hi - a) // l - (lo - 1 - a) // l
    return tuple(out)


def residues_infinite(lam: Partition) -> dict[int, int]:
    """Box counts per integer content (sparse; the modulus-0 variant)."""
    out: dict[int, int] = {}
    for i, part in enumerate(lam, start=1):
        for t in range(1 - i, part - i + 1):
            out[t] = out.get(t, 0) + 1
    return out


# ---------------------------------------------------------------------------
# abacus machinery
# ---------------------------------------------------------------------------


def _runner_data(lam: Partition, l: int) -> tuple[tuple[int, ...], Multipartition]:
    # charges and runner partitions of the bead set B(lam)
    L = len(lam)
    explicit = [lam[i] - (i + 1) for i in range(L)]  # strictly decreasing
    charges_ = []
    quots = []
    for j in range(l):
        xs = [(b - j) // l for b in explicit if b % l == j]
        g = (-L - 1 - j) // l  # ground beads at positions <= g
        s = len(xs) + g + 1
        charges_.append(s)
        q = [x + t - s for t, x in enumerate(xs, start=1)]
        quots.append(tuple(p for p in q if p != 0))
    return tuple(charges_), tuple(quots)


def _partition_from_beads(explicit: list[int], floor: int) -> Partition:
    # bead set = explicit (all >= floor) plus every integer < floor;
    # total charge must be 0, i.e. len(explicit) == -floor
    assert len(explicit) == -floor
    parts = []
    for i, b in enumerate(sorted(explicit, reverse=True), start=1):
        p = b + i
        assert p >= 0
        if p:
            parts.append(p)
    return tuple(parts)


def core_from_charges(s) -> Partition:
    """The l-core whose runner charges are s (entries must sum to 0)."""
    s = tuple(int(x) for x in s)
    if sum(s) != 0:
        raise ValueError(f"charges must sum to 0, got {s}")
    l = len(s)
    lo = min(min(s), 0) - 1
    explicit = [l * x + j for j, sj in enumerate(s) for x in range(lo, sj)]
    return _partition_from_beads(explicit, l * lo)


def charges(lam: Partition, l: int) -> tuple[int, ...]:
    """Runner charges of lam on the l-runner abacus (sum to 0)."""
    return _runner_data(lam, l)[0]


def core(lam: Partition, l: int) -> tuple[Partition, int]:
    """The l-core of lam and the number of l-box removals to reach it."""
    if l < 1:
        raise ValueError("l must be >= 1")
    ch, quots = _runner_data(lam, l)
    nu = core_from_charges(ch)
    removals = sum(sum(q) for q in quots)
    assert size(lam) == size(nu) + removals * l
    return nu, removals


def is_l_core(lam: Partition, l: int) -> bool:
    return core(lam, l)[1] == 0


def quotient(lam: Partition, l: int) -> Multipartition:
    """The l-quotient under the module's abacus convention."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return _runner_data(lam, l)[1]


def from_core_and_quotient(nu: Partition, mu: Multipartition, l: int) -> Partition:
    """The unique partition with l-core nu and l-quotient mu."""
    if not is_l_core(nu, l):
        raise ValueError(f"{nu} is not a {l}-core")
    if len(mu) != l:
        raise ValueError(f"quotient must have {l} components")
    s = charges(nu, l)
    lo = min(s[j] - len(mu[j]) for j in range(l))
    lo = min(lo, 0) - 1
    explicit = []
    for j in range(l):
        q = mu[j]
        for t, p in enumerate(q, start=1):
            explicit.append(l * (p - t + s[j]) + j)
        # ground beads of runner j made explicit down to the common floor
        for x in range(lo, s[j] - len(q)):
            explicit.append(l * x + j)
    lam = _partition_from_beads(explicit, l * lo)
    assert size(lam) == size(nu) + l * msize(mu)
    return lam


def residue_to_core(d) -> tuple[Partition, int]:
    """Decompose an integer vector as Res_l(nu) + r*delta_l.

    Every d decomposes uniquely this way (r may be negative); the charges of
    nu are read off the cyclic differences of d.
    """
    d = tuple(int(x) for x in d)
    l = len(d)
    ch = tuple(d[j] - d[(j + 1) % l] for j in range(l))
    nu = core_from_charges(ch)
    rl = sum(d) - size(nu)
    assert rl % l == 0
    r = rl // l
    res = residues(nu, l)
    assert all(d[i] == res[i] + r for i in range(l))
    return nu, r


def core_multi(lam: Multipartition, k: int) -> Multipartition:
    """Componentwise k-core of a multipartition."""
    return tuple(core(c, k)[0] for c in lam)


# ---------------------------------------------------------------------------
# interleaved quotient bijections for tuples of partitions
# ---------------------------------------------------------------------------


def _check_beta_args(lam: Multipartition, k: int, gamma: Multipartition):
    if len(lam) != len(gamma):
        raise ValueError("component count mismatch")
    for i, (c, g) in enumerate(zip(lam, gamma)):
        if core(c, k)[0] != g:
            raise ValueError(
                f"core mismatch in component {i}: Core_{k}{c} = {core(c, k)[0]} != {g}"
            )


def beta_k_gamma(lam: Multipartition, k: int, gamma: Multipartition) -> Multipartition:
    """Interleave the k-quotients of the components of lam into an m-tuple.

    Component i of lam contributes its k-quotient to slots
    i, i+l, ..., i+(k-1)l of the result (m = k*l).
    """
    _check_beta_args(lam, k, gamma)
    l = len(lam)
    mu: list[Partition] = [()] * (k * l)
    for i, c in enumerate(lam):
        q = quotient(c, k)
        for t in range(k):
            mu[i + t * l] = q[t]
    return tuple(mu)


def beta_flat_k_gamma(lam: Multipartition, k: int, gamma: Multipartition) -> Multipartition:
    """Slot-reversed variant: component i fills slots i+(k-1)l, ..., i+l, i."""
    _check_beta_args(lam, k, gamma)
    l = len(lam)
    mu: list[Partition] = [()] * (k * l)
    for i, c in enumerate(lam):
        q = quotient(c, k)
        for t in range(k):
            mu[i + (k - 1 - t) * l] = q[t]
    return tuple(mu)


def beta_k_gamma_inverse(mu: Multipartition, k: int, gamma: Multipartition) -> Multipartition:
    l = len(gamma)
    if len(mu) != k * l:
        raise ValueError("length mismatch")
    return tuple(
        from_core_and_quotient(gamma[i], tuple(mu[i + t * l] for t in range(k)), k)
        for i in range(l)
    )


def beta_flat_k_gamma_inverse(mu: Multipartition, k: int, gamma: Multipartition) -> Multipartition:
    l = len(gamma)
    if len(mu) != k * l:
        raise ValueError("length mismatch")
    return tuple(
        from_core_and_quotient(
            gamma[i], tuple(mu[i + (k - 1 - t) * l] for t in range(k)), k
        )
        for i in range(l)
    )


# ---------------------------------------------------------------------------
# enumeration (deterministic order: size descending, then lex descending)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lex descending: (n) first, (1,...,1) last."""

    def gen(n: int, cap: int) -> Iterator[Partition]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def partitions_upto(n: int) -> tuple[Partition, ...]:
    """Partitions of size <= n, size descending then lex descending."""
    out = []
    for s in range(n, -1, -1):
        out.extend(partitions_of(s))
    return tuple(out)


@lru_cache(maxsize=None)
def cores_upto(k: int, n: int) -> tuple[Partition, ...]:
    """k-cores of size <= n, in the partitions_upto order."""
    return tuple(p for p in partitions_upto(n) if is_l_core(p, k))


def enumerate_multipartitions(l: int, n: int) -> list[Multipartition]:
    """All l-multipartitions of n; deterministic component-lex order."""
    if l < 1:
        raise ValueError("l must be >= 1")

    def gen(comps: int, budget: int) -> Iterator[Multipartition]:
        if comps == 1:
            for p in partitions_of(budget):
                yield (p,)
            return
        for s in range(budget, -1, -1):
            for p in partitions_of(s):
                for rest in gen(comps - 1, budget - s):
                    yield (p,) + rest

    return list(gen(l, n))


def enumerate_core_tuples(k: int, l: int, n: int) -> list[Multipartition]:
    """All l-tuples of k-cores with |gamma| <= n and |gamma| = n mod k."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")

    def gen(comps: int, budget: int, total: int) -> Iterator[Multipartition]:
        if comps == 0:
            if (n - total) % k == 0:
                yield ()
            return
        for s in range(budget, -1, -1):
            for p in partitions_of(s):
                if not is_l_core(p, k):
                    continue
                for rest in gen(comps - 1, budget - s, total + s):
                    yield (p,) + rest

    return list(gen(l, n, 0))
