"""Exhaustive and heuristic searches over intersecting families.

Maximal intersecting families are the maximal cliques of the meet graph on
k-subsets (two k-sets adjacent iff they share a vertex), enumerated by
Bron-Kerbosch with pivoting.  Adding edges never decreases any degree, so
scanning only maximal families suffices to bound minimum degrees over all
intersecting families.

The conjecture scan is exploration tooling, not proof: a seeded
simulated-annealing walk over families with matching number below s,
hill-climbing on the minimum vertex degree.  Temperature decays
geometrically from 2.0 to 0.05 across the budget; every quarter of the
budget the walk restarts from a random perturbation of the meet-S-in-one-
vertex extremal family.  Reported candidates are always re-verified
against the exact matching solver.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import limits
from .errors import ContradictionError, DomainError, ResourceLimitError
from .families import Family, binomial, unrank_colex
from .matching import matching_number

from .constructions import erdos_extremal


@dataclass(frozen=True)
class ScanReport:
    """Outcome container for one scan run; equality is exact field equality."""

    kind: str
    parameters: dict
    families_examined: int
    best: dict
    violations: tuple = ()
    records: tuple = ()
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations


@lru_cache(maxsize=None)
def _kneser_tables(n: int, k: int) -> tuple[tuple, tuple, tuple]:
    """(k-set tuples, meet-adjacency bitsets, disjointness bitsets) by rank."""
    count = binomial(n, k)
    ksets = tuple(unrank_colex(r, k, n) for r in range(count))
    vmask = []
    for e in ksets:
        m = 0
        for v in e:
            m |= 1 << (v - 1)
        vmask.append(m)
    meet = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if vmask[i] & vmask[j]:
                meet[i] |= 1 << j
                meet[j] |= 1 << i
    full = (1 << count) - 1
    disjoint = tuple(full & ~meet[r] & ~(1 << r) for r in range(count))
    return ksets, tuple(meet), disjoint


def _check_enum_size(n: int, k: int, limit: int | None) -> int:
    if k < 1 or k > n:
        raise DomainError(f"enumeration needs 1 <= k <= n, got k={k}, n={n}")
    cap = limits.resolve(limit, limits.ENUM_KSET_LIMIT)
    count = binomial(n, k)
    if count > cap:
        raise ResourceLimitError(f"C({n},{k}) = {count} k-sets exceeds enumeration limit {cap}")
    return count


def maximal_intersecting(n: int, k: int, limit: int | None = None):
    """Yield every maximal intersecting family on [n] exactly once.

    Bron-Kerbosch over the meet graph; the pivot maximizes the candidate
    coverage (lowest rank on ties), and candidates are visited in rank
    order, so the emission order is deterministic.  Size gating happens
    before the generator is returned.
    """
    count = _check_enum_size(n, k, limit)
    _, meet, _ = _kneser_tables(n, k)

    def bits_of(x: int):
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low

    def bron_kerbosch(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(bits_of(p | x), key=lambda u: ((p & meet[u]).bit_count(), -u))
        for v in bits_of(p & ~meet[pivot]):
            yield from bron_kerbosch(r | (1 << v), p & meet[v], x & meet[v])
            p &= ~(1 << v)
            x |= 1 << v

    def emit():
        for clique in bron_kerbosch(0, (1 << count) - 1, 0):
            yield Family.from_ranks(n, k, clique)

    return emit()


def _family_stats(bits: int, ksets: tuple, n: int) -> tuple[int, int, int]:
    """(edge count, delta_1, common-vertex mask) from the rank bitset."""
    deg = [0] * n
    common = (1 << n) - 1
    count = 0
    x = bits
    while x:
        low = x & -x
        rank = low.bit_length() - 1
        x ^= low
        count += 1
        mask = 0
        for v in ksets[rank]:
            deg[v - 1] += 1
            mask |= 1 << (v - 1)
        common &= mask
    return count, min(deg), common


def greedy_complete(family: Family) -> Family:
    """Extend a pairwise-intersecting family to a maximal one, in rank order."""
    count = _check_enum_size(family.n, family.k, None)
    _, meet, _ = _kneser_tables(family.n, family.k)
    bits = family.edges
    for r in range(count):
        if bits >> r & 1:
            continue
        if bits & ~meet[r] == 0:
            bits |= 1 << r
    return Family.from_ranks(family.n, family.k, bits)


def ekr_degree_scan(n: int, k: int, limit: int | None = None) -> ScanReport:
    """Exhaustively check the degree dichotomy over maximal families.

    Asserts that the maximum minimum-degree equals C(n-2,k-2), attained
    exactly by the n stars, and that every non-star maximal family stays
    strictly below.  Any violation is reported as a counterexample record.
    """
    if n < 2 * k + 1:
        raise DomainError(f"ekr scan needs n >= 2k+1 = {2 * k + 1}, got n={n}")
    _check_enum_size(n, k, limit)
    ksets, _, _ = _kneser_tables(n, k)
    star_size = binomial(n - 1, k - 1)
    expected_max = binomial(n - 2, k - 2)

    examined = 0
    stars_seen = 0
    max_delta = -1
    at_max: list[int] = []
    nonstar_max = -1
    violations = []
    records = []
    for fam in maximal_intersecting(n, k, limit=limit):
        e, delta, common = _family_stats(fam.edges, ksets, n)
        is_star = e == star_size and common != 0
        records.append({"edges": e, "delta1": delta, "is_star": is_star})
        if is_star:
            stars_seen += 1
        else:
            nonstar_max = max(nonstar_max, delta)
        if delta > max_delta:
            max_delta = delta
            at_max = [examined]
        elif delta == max_delta:
            at_max.append(examined)
        if delta >= expected_max and not is_star:
            violations.append(
                {"delta1": delta, "edges": fam.edge_tuples(), "reason": "non-star at or above C(n-2,k-2)"}
            )
        examined += 1

    best = {
        "max_delta1": max_delta,
        "expected_max": expected_max,
        "num_at_max": len(at_max),
        "stars_seen": stars_seen,
        "all_at_max_are_stars": len(at_max) == stars_seen == n and max_delta == expected_max,
        "nonstar_max_delta1": nonstar_max,
    }
    return ScanReport(
        kind="ekr-degree-scan",
        parameters={"n": n, "k": k},
        families_examined=examined,
        best=best,
        violations=tuple(violations),
        records=tuple(records),
    )


def cross_pair_scan(n: int, k: int, limit: int | None = None) -> ScanReport:
    """Check the degree product bound over all cross-intersecting ordered pairs.

    Counts pairs that fail to be cross-intersecting separately, tracks the
    maximum product of minimum degrees over the rest, and records every
    maximizing pair.
    """
    if n < 2 * k + 1:
        raise DomainError(f"cross scan needs n >= 2k+1 = {2 * k + 1}, got n={n}")
    _check_enum_size(n, k, limit)
    ksets, _, disjoint = _kneser_tables(n, k)
    star_size = binomial(n - 1, k - 1)
    bound = binomial(n - 2, k - 2) ** 2

    ebits: list[int] = []
    deltas: list[int] = []
    stars: list[int] = []  # common-vertex id for full stars, else 0
    forb: list[int] = []
    for fam in maximal_intersecting(n, k, limit=limit):
        e, delta, common = _family_stats(fam.edges, ksets, n)
        ebits.append(fam.edges)
        deltas.append(delta)
        stars.append(common.bit_length() if (e == star_size and common) else 0)
        mask = 0
        x = fam.edges
        while x:
            low = x & -x
            mask |= disjoint[low.bit_length() - 1]
            x ^= low
        forb.append(mask)

    m = len(ebits)
    cross_unordered = 0
    cross_diagonal = 0
    max_product = -1
    maximizers: list[tuple[int, int]] = []
    violations = []
    for i in range(m):
        fi = forb[i]
        di = deltas[i]
        for j in range(i, m):
            if ebits[j] & fi:
                continue
            if i == j:
                cross_diagonal += 1
            cross_unordered += 1
            product = di * deltas[j]
            if product > max_product:
                max_product = product
                maximizers = [(i, j)]
            elif product == max_product and len(maximizers) < 1000:
                maximizers.append((i, j))
            if product > bound:
                violations.append(
                    {"product": product, "left_delta1": di, "right_delta1": deltas[j],
                     "left_index": i, "right_index": j}
                )

    ordered_cross = 2 * cross_unordered - cross_diagonal
    ordered_total = m * m
    best = {
        "max_product": max_product,
        "bound": bound,
        "maximizers": tuple(
            {"left_index": i, "right_index": j,
             "left_star_center": stars[i], "right_star_center": stars[j]}
            for i, j in maximizers
        ),
        "maximizers_all_same_center_stars": all(
            stars[i] != 0 and stars[i] == stars[j] for i, j in maximizers
        ),
    }
    notes = {
        "ordered_pairs_total": ordered_total,
        "ordered_pairs_cross": ordered_cross,
        "ordered_pairs_skipped": ordered_total - ordered_cross,
    }
    return ScanReport(
        kind="cross-pair-scan",
        parameters={"n": n, "k": k},
        families_examined=m,
        best=best,
        violations=tuple(violations),
        notes=notes,
    )


def _nu_below(bits: int, new_rank: int, s: int, masks: dict[int, int], n: int, k: int) -> bool:
    """True iff adding new_rank keeps every matching below size s.

    Since the current family has no s-matching, one could only appear
    through the new edge; that needs an (s-1)-matching among current edges
    disjoint from it.
    """
    if s <= 1:
        return False
    new_mask = masks[new_rank]
    away = []
    x = bits
    while x:
        low = x & -x
        r = low.bit_length() - 1
        x ^= low
        if not masks[r] & new_mask:
            away.append(r)
    if not away:
        return True
    sub = Family.from_ranks(n, k, sum(1 << r for r in away))
    nu, _ = matching_number(sub, at_least=s - 1)
    return nu < s - 1


def conjecture_scan(n: int, k: int, s: int, budget: int, seed: int) -> ScanReport:
    """Hill-climb the minimum degree over families with matching number < s.

    Compares the best value found against C(n-1,k-1) - C(n-s,k-1), the
    value of the meet-S extremal family.  At n = ks the comparison is
    report-only (regular halved families beat the bound there); for
    n > ks any family exceeding the bound is re-verified with the exact
    matching solver and serialized as a counterexample candidate.
    """
    if k < 1 or s < 1:
        raise DomainError(f"need k >= 1 and s >= 1, got k={k}, s={s}")
    if k * s > n:
        raise DomainError(f"need s <= n/k, got s={s}, n/k={n}/{k}")
    count = _check_enum_size(n, k, None)
    ksets, _, _ = _kneser_tables(n, k)
    masks = {}
    for r in range(count):
        mask = 0
        for v in ksets[r]:
            mask |= 1 << (v - 1)
        masks[r] = mask

    threshold = binomial(n - 1, k - 1) - binomial(n - s, k - 1)
    assert_mode = n > k * s
    rng = random.Random(seed)
    base = erdos_extremal(n, k, s, 1).edges

    def delta1(bits: int) -> int:
        deg = [0] * n
        x = bits
        while x:
            low = x & -x
            for v in ksets[low.bit_length() - 1]:
                deg[v - 1] += 1
            x ^= low
        return min(deg)

    def perturb(bits: int) -> int:
        out = bits
        x = bits
        while x:
            low = x & -x
            if rng.random() < 0.2:
                out &= ~low
            x ^= low
        return out

    current = base
    cur_delta = delta1(current)
    best_bits, best_delta = current, cur_delta
    violations = []
    over_bound: list[dict] = []
    restart_every = max(1, budget // 4)
    t0, t1 = 2.0, 0.05

    for it in range(budget):
        if it and it % restart_every == 0:
            current = perturb(base)
            cur_delta = delta1(current)
        temp = t0 * (t1 / t0) ** (it / max(1, budget))
        add_move = rng.random() < 0.5
        candidate = None
        if add_move:
            absent = [r for r in range(count) if not current >> r & 1]
            if absent:
                r = absent[rng.randrange(len(absent))]
                if _nu_below(current, r, s, masks, n, k):
                    candidate = current | (1 << r)
        else:
            present = [r for r in range(count) if current >> r & 1]
            if present:
                r = present[rng.randrange(len(present))]
                candidate = current & ~(1 << r)
        if candidate is None:
            continue
        new_delta = delta1(candidate)
        gain = new_delta - cur_delta
        if gain >= 0 or rng.random() < math.exp(gain / temp):
            current = candidate
            cur_delta = new_delta
        if cur_delta > best_delta:
            best_bits, best_delta = current, cur_delta
        if cur_delta > threshold:
            fam = Family.from_ranks(n, k, current)
            nu, _ = matching_number(fam, at_least=s)
            if nu >= s:
                raise ContradictionError("scan state invariant broken: matching of size s appeared")
            entry = {"delta1": cur_delta, "edges": fam.edge_tuples(), "nu": nu}
            if assert_mode:
                if entry not in violations:
                    violations.append(entry)
            elif entry not in over_bound:
                over_bound.append(entry)

    best_family = Family.from_ranks(n, k, best_bits)
    nu_best, _ = matching_number(best_family, at_least=s)
    if nu_best >= s:
        raise ContradictionError("reported family has a matching of size s")
    best = {
        "delta1": best_delta,
        "threshold": threshold,
        "edges": best_family.edge_tuples(),
        "nu": nu_best,
    }
    return ScanReport(
        kind="conjecture-scan",
        parameters={"n": n, "k": k, "s": s, "budget": budget, "seed": seed},
        families_examined=budget,
        best=best,
        violations=tuple(violations),
        notes={"assert_mode": assert_mode, "over_bound_examples": tuple(over_bound)},
    )
