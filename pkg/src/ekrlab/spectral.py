"""Kneser-graph spectrum and exact eigenspace masses of a family.

The disjointness graph on the k-subsets of [n] has adjacency eigenvalues
(-1)^j * C(n-k-j, k-j) with multiplicity C(n,j) - C(n,j-1), j = 0..k.  The
j-th eigenspace E_j is the orthogonal complement of E_0 + ... + E_{j-1}
inside the span U_j of the incidence vectors of all j-subsets (the vector
of a j-set S marks the k-sets containing S).  For a family with
characteristic vector h, the mass F_j = ||P_{E_j} h||^2 is computed here in
exact rational arithmetic:

* F_0 = e(H)^2 / C(n,k);
* ||P_{U_d} h||^2 = b^T G^{-1} b where b is the d-subset degree vector and
  G the Gram matrix of the incidence vectors, G[S,T] = C(n-|SuT|, k-|SuT|).
  For d = 1 the Gram is a*I + b*J and is inverted in closed form; for
  d >= 2 the solve collapses to intersection-size classes (G^{-1} is a
  function of |S n T| because G lives in the Johnson-scheme algebra) and
  the collapsed system is solved by fraction-free elimination;
* masses at the top two levels follow from the two exact linear relations
  sum_j F_j = e(H) and sum_j lambda_j F_j = h^T A h, whose 2x2 system is
  nonsingular because the top two eigenvalues differ for n >= 2k.

Floating point appears nowhere: the verdicts downstream hinge on exact
sign comparisons at equality boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import limits
from ._linalg import solve_exact
from .errors import DomainError, ResourceLimitError
from .families import Family, binomial, degree_profile, vertex_degrees


def _comb_nonneg(n: int, r: int) -> int:
    """Binomial that treats a negative upper index as an empty count."""
    if n < 0:
        return 0
    return binomial(n, r)


@dataclass(frozen=True)
class KneserSpectrum:
    """Eigenvalue ladder (level, eigenvalue, multiplicity) for j = 0..k."""

    n: int
    k: int
    levels: tuple[tuple[int, int, int], ...]

    def eigenvalues(self) -> list[int]:
        return [lam for _, lam, _ in self.levels]


def kneser_spectrum(n: int, k: int) -> KneserSpectrum:
    """Exact spectrum of the disjointness adjacency on k-subsets of [n]."""
    if k > n or k < 0:
        raise DomainError(f"kneser_spectrum needs 0 <= k <= n, got k={k}, n={n}")
    levels = []
    for j in range(k + 1):
        lam = (-1) ** j * _comb_nonneg(n - k - j, k - j)
        mult = binomial(n, j) - (binomial(n, j - 1) if j >= 1 else 0)
        levels.append((j, lam, mult))
    return KneserSpectrum(n, k, tuple(levels))


def disjoint_pairs(family: Family) -> int:
    """Number of unordered pairs of disjoint edges."""
    masks = family.vertex_masks()
    count = 0
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if not mi & masks[j]:
                count += 1
    return count


def quadratic_form(family: Family) -> int:
    """h^T A h for the family's characteristic vector: 2x the disjoint pairs."""
    return 2 * disjoint_pairs(family)


def _star_span_norm_sq(family: Family) -> Fraction:
    """||P_{U_1} h||^2 via the closed-form inverse of the star Gram a*I + b*J."""
    n, k = family.n, family.k
    a = binomial(n - 1, k - 1) - binomial(n - 2, k - 2)
    b = binomial(n - 2, k - 2)
    if a == 0:
        raise DomainError(f"star Gram degenerate at n = k = {n}")
    deg = vertex_degrees(family)
    sum_sq = sum(d * d for d in deg)
    total = sum(deg)
    # (a*I + b*J)^-1 = (1/a) * (I - b/(a + n*b) * J)
    return Fraction(sum_sq, a) - Fraction(b * total * total, a * (a + n * b))


def level_masses(family: Family) -> tuple[Fraction, Fraction, Fraction]:
    """(F_0, F_1, residual): mass on E_0, on E_1, and on everything above.

    F_0 = e^2 / C(n,k); F_1 is the squared norm of h's projection onto the
    star span minus F_0; the residual e - F_0 - F_1 is nonnegative.
    """
    n, k = family.n, family.k
    if k < 1:
        raise DomainError(f"level_masses needs k >= 1, got k={k}")
    e = family.edge_count
    f0 = Fraction(e * e, binomial(n, k))
    f1 = _star_span_norm_sq(family) - f0
    residual = e - f0 - f1
    return f0, f1, residual


@lru_cache(maxsize=None)
def _gram_inverse_classes(n: int, k: int, d: int) -> tuple[Fraction, ...]:
    """Class function gamma with G^{-1}[S,T] = gamma[|S n T|] at level d.

    G belongs to the Johnson-scheme algebra on d-subsets, so its inverse is
    again a function of the intersection size.  Fixing S0 = {1..d} and one
    representative T_r per class r = |T n S0| collapses G x = e_{S0} to a
    (d+1)-dimensional exact system.
    """
    def gram_entry(t: int) -> int:
        union = 2 * d - t
        return _comb_nonneg(n - union, k - union)

    s0 = frozenset(range(1, d + 1))
    rows = []
    for r in range(d + 1):
        rep = frozenset(range(1, r + 1)) | frozenset(range(d + 1, 2 * d - r + 1))
        coeff = [Fraction(0)] * (d + 1)
        for u in combinations(range(1, n + 1), d):
            su = frozenset(u)
            coeff[len(su & s0)] += gram_entry(len(su & rep))
        rows.append(coeff)
    rhs = [Fraction(1) if r == d else Fraction(0) for r in range(d + 1)]
    return tuple(solve_exact(rows, rhs))


def _subspace_norm_sq(family: Family, d: int) -> Fraction:
    """||P_{U_d} h||^2 = b^T G^{-1} b over the d-subset degree vector b.

    The inverse is a class function of |S n T|, so the quadratic form
    collapses to integer sums per intersection class.
    """
    gamma = _gram_inverse_classes(family.n, family.k, d)
    support = [(frozenset(s), c) for s, c in degree_profile(family, d).degrees.items()]
    class_sums = [0] * (d + 1)
    for i, (si, ci) in enumerate(support):
        class_sums[d] += ci * ci
        for j in range(i + 1, len(support)):
            sj, cj = support[j]
            class_sums[len(si & sj)] += 2 * ci * cj
    return sum(g * q for g, q in zip(gamma, class_sums))


@dataclass(frozen=True)
class SpectralMass:
    """Masses F_0..F_k of a family's characteristic vector, all exact."""

    n: int
    k: int
    masses: tuple[Fraction, ...]
    quad_form: int
    total: Fraction

    def __post_init__(self) -> None:
        if any(f < 0 for f in self.masses):
            raise ArithmeticError(f"negative eigenspace mass: {self.masses}")
        if sum(self.masses) != self.total:
            raise ArithmeticError("eigenspace masses do not sum to the edge count")


def eigen_mass_full(family: Family, limit: int | None = None) -> SpectralMass:
    """All eigenspace masses F_0..F_k of the family, exactly.

    Levels 0 and 1 come from :func:`level_masses`, levels up to k-2 from
    the collapsed Gram solves, and the top two levels from the exact mass
    and quadratic-form identities.  Needs n >= 2k so that the k+1 level
    decomposition exists; raises ResourceLimitError when a required Gram
    dimension C(n, d) exceeds the solve limit.
    """
    n, k = family.n, family.k
    if k < 1:
        raise DomainError(f"eigen_mass_full needs k >= 1, got k={k}")
    if n < 2 * k:
        raise DomainError(f"eigen_mass_full needs n >= 2k, got n={n}, k={k}")
    cap = limits.resolve(limit, limits.EIGEN_SOLVE_LIMIT)
    if binomial(n, k // 2) > cap:
        raise ResourceLimitError(
            f"Gram solve dimension C({n}, {k // 2}) = {binomial(n, k // 2)} exceeds limit {cap}"
        )
    e = family.edge_count
    quad = quadratic_form(family)
    spectrum = kneser_spectrum(n, k)
    lams = spectrum.eigenvalues()

    if k == 1:
        f0 = Fraction(e * e, binomial(n, 1))
        masses = (f0, e - f0)
    else:
        f0, f1, _ = level_masses(family)
        known = [f0, f1]
        prev_norm = f0 + f1
        for d in range(2, k - 1):
            if binomial(n, d) > cap:
                raise ResourceLimitError(
                    f"Gram solve dimension C({n}, {d}) = {binomial(n, d)} exceeds limit {cap}"
                )
            norm = _subspace_norm_sq(family, d)
            known.append(norm - prev_norm)
            prev_norm = norm
        if k == 2:
            masses = (f0, f1, e - f0 - f1)
        else:
            # top two masses from sum F_j = e and sum lambda_j F_j = quad
            rest_mass = e - sum(known)
            rest_quad = Fraction(quad) - sum(l * f for l, f in zip(lams, known))
            pair = solve_exact(
                [[Fraction(1), Fraction(1)], [Fraction(lams[k - 1]), Fraction(lams[k])]],
                [Fraction(rest_mass), rest_quad],
            )
            masses = tuple(known) + (pair[0], pair[1])

    result = SpectralMass(n, k, tuple(masses), quad, Fraction(e))
    if sum(l * f for l, f in zip(lams, result.masses)) != quad:
        raise ArithmeticError("eigenspace masses violate the quadratic-form identity")
    return result
