"""Closed-form normalized Laplacian spectra of R-graph coronas of regular
graphs.

For regular G (degree r, n vertices, m edges) and regular attachment
graphs G1 (n1 vertices, degree r1) and G2 (n2, r2), the spectrum of the
double corona splits into:

  * fixed eigenvalues (1 + r1*t)/(r1 + 1), multiplicity n, one for each
    eigenvalue t of G1's normalized Laplacian except a single zero;
  * fixed eigenvalues (1 + r2*t)/(r2 + 1), multiplicity m, likewise for G2;
  * the four roots of a quartic in x, one quartic per eigenvalue of G's
    normalized Laplacian;
  * when m > n, the two roots of an excess quadratic, multiplicity m - n.

Setting G2 (resp. G1) to the null graph degenerates the quartic to a
cubic and is handled by the vertex- (resp. edge-) corona variants.
All polynomial coefficients are expanded symbolically (convolution of
coefficient arrays); the expansion is exact whenever the inputs are exact.
"""

from dataclasses import dataclass
from fractions import Fraction
import json
import math

import numpy as np

from .errors import HypothesisError, InternalConsistencyError, PoleError
from .graphs import Graph, degree_profile, is_connected
from .spectra import Spectrum, nl_spectrum, normalized_laplacian

__all__ = [
    "CoronaParams",
    "RealPolynomial",
    "FixedFamily",
    "RootFamily",
    "ClosedFormSpectrum",
    "coronal",
    "copy_block_forms",
    "fixed_family_value",
    "quartic_factor",
    "vertex_corona_cubic",
    "edge_corona_cubic",
    "excess_quadratic",
    "real_roots",
    "double_corona_spectrum",
    "vertex_corona_spectrum",
    "edge_corona_spectrum",
    "closed_form_spectrum",
    "flatten",
]

# root search window; strictly contains [0, 2], padded so boundary roots
# are not lost to the half-open Sturm count
_ROOT_LO = -1.0 - 1e-9
_ROOT_HI = 3.0 + 1e-9
_GROUP_TOL = 1e-9


@dataclass(frozen=True)
class CoronaParams:
    """The scalar tuple parameterizing every closed-form factor.

    A null first (second) attachment graph is encoded as n1 = 0 (n2 = 0)
    with the corresponding degree field unused and stored as 0.
    """

    n: int
    m: int
    r: int
    n1: int
    r1: int
    n2: int
    r2: int

    def __post_init__(self):
        if self.n < 1:
            raise HypothesisError("base graph must have n >= 1")
        if self.r < 1:
            raise HypothesisError("base graph must be regular with degree >= 1")
        if 2 * self.m != self.n * self.r:
            raise HypothesisError(f"m = {self.m} inconsistent with n*r/2 = {self.n * self.r / 2}")
        for size, deg, tag in ((self.n1, self.r1, "first"), (self.n2, self.r2, "second")):
            if size < 0 or deg < 0:
                raise HypothesisError(f"{tag} attachment graph has negative parameters")
            if size > 0 and deg > size - 1:
                raise HypothesisError(f"{tag} attachment graph degree {deg} exceeds {size - 1}")

    @classmethod
    def from_graphs(cls, g: Graph, g1: Graph, g2: Graph) -> "CoronaParams":
        prof = degree_profile(g)
        if prof.regular_degree is None:
            raise HypothesisError("base graph must be regular")
        sizes = []
        for tag, gi in (("first", g1), ("second", g2)):
            if gi.is_null:
                sizes.append((0, 0))
                continue
            p = degree_profile(gi)
            if p.regular_degree is None:
                raise HypothesisError(f"{tag} attachment graph must be regular")
            sizes.append((gi.vertex_count, p.regular_degree))
        (n1, r1), (n2, r2) = sizes
        return cls(g.vertex_count, g.edge_count, prof.regular_degree, n1, r1, n2, r2)

    @property
    def total_vertices(self) -> int:
        return self.n + self.m + self.n * self.n1 + self.m * self.n2


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial c0 + c1*x + ... + cd*x^d, degree at most 4."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs = coeffs[:-1]
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RealPolynomial":
        if self.degree == 0:
            return RealPolynomial((0.0,))
        return RealPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))


@dataclass(frozen=True)
class FixedFamily:
    value: float
    multiplicity: int
    label: str


@dataclass(frozen=True)
class RootFamily:
    poly: RealPolynomial
    multiplicity: int
    label: str


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Spectrum as labeled families: fixed values plus per-polynomial roots."""

    fixed_families: tuple[FixedFamily, ...]
    root_families: tuple[RootFamily, ...]
    excess_family: RootFamily | None

    @property
    def total_multiplicity(self) -> int:
        total = sum(f.multiplicity for f in self.fixed_families)
        total += sum(f.poly.degree * f.multiplicity for f in self.root_families)
        if self.excess_family is not None:
            total += self.excess_family.poly.degree * self.excess_family.multiplicity
        return total

    def to_json(self) -> str:
        def fam(f: RootFamily) -> dict:
            return {"coeffs": list(f.poly.coefficients), "mult": f.multiplicity, "label": f.label}

        return json.dumps(
            {
                "fixed": [
                    {"value": f.value, "mult": f.multiplicity, "label": f.label}
                    for f in self.fixed_families
                ],
                "roots": [fam(f) for f in self.root_families],
                "excess": fam(self.excess_family) if self.excess_family else None,
            }
        )


# --- scalar building blocks ------------------------------------------------


def coronal(size: int, degree: int, x: float):
    """Row-sum coronal of a regular graph's scaled Laplacian block:
    size / (x - 1/(degree+1)).  The null graph contributes 0."""
    if size < 0 or degree < 0:
        raise ValueError("size and degree must be non-negative")
    if size == 0:
        return 0.0
    pole = 1.0 / (degree + 1) if not isinstance(x, Fraction) else Fraction(1, degree + 1)
    if x == pole:
        raise PoleError(f"coronal has a pole at x = 1/{degree + 1}")
    return size / (x - pole)


def fixed_family_value(eig: float, degree: int):
    """Map a copy-graph eigenvalue t to (1 + degree*t)/(degree + 1)."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return (1 + degree * eig) / (degree + 1)


def copy_block_forms(g1: Graph) -> tuple[np.ndarray, np.ndarray]:
    """The corona's copy-block matrix computed two independent ways.

    Returns the entrywise (Hadamard) product of the normalized Laplacian
    with B = a*J + (1-a)*I for a = r/(r+1), and the equivalent shifted
    form (I + r*L)/(r+1).  The two must agree entrywise; exposed so tests
    can verify that identity on regular inputs.
    """
    prof = degree_profile(g1)
    if prof.regular_degree is None or prof.regular_degree < 1:
        raise HypothesisError("copy-block forms require a regular graph with degree >= 1")
    r = prof.regular_degree
    n = g1.vertex_count
    lap = normalized_laplacian(g1)
    alpha = r / (r + 1)
    b = alpha * np.ones((n, n)) + (1 - alpha) * np.eye(n)
    return lap * b, (np.eye(n) + r * lap) / (r + 1)


# --- symbolic polynomial expansion ------------------------------------------


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    exact = all(isinstance(c, (int, Fraction)) for c in a + b)
    if exact:
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out
    cells: list[list[float]] = [[] for _ in out]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            cells[i + j].append(float(ai) * float(bj))
    return [math.fsum(cell) if cell else 0.0 for cell in cells]


def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [x + y for x, y in zip(a, b)]


def _pscale(a: list, s) -> list:
    return [s * c for c in a]


def _first_factor(p: CoronaParams) -> list:
    # (x-1)(2+n2)(x*r2+x-1) - n2
    return _padd(_pscale(_pmul([-1, 1], [-1, p.r2 + 1]), 2 + p.n2), [-p.n2])


def _second_factor(p: CoronaParams, mu) -> list:
    # (x-1)(2r+n1)(x*r1+x-1) + r(1-mu)(x*r1+x-1) - n1
    spoke1 = [-1, p.r1 + 1]
    out = _pscale(_pmul([-1, 1], spoke1), 2 * p.r + p.n1)
    out = _padd(out, _pscale(spoke1, p.r * (1 - mu)))
    return _padd(out, [-p.n1])


def quartic_factor(p: CoronaParams, base_eig) -> RealPolynomial:
    """The quartic whose four roots the corona inherits from one base
    eigenvalue; requires both attachment graphs nonempty.

    ``base_eig`` may be a float, int, or Fraction; with exact inputs the
    expansion is carried out in exact arithmetic before conversion.
    """
    if p.n1 < 1 or p.n2 < 1:
        raise HypothesisError("quartic factor requires both attachment graphs nonempty")
    spoke1 = [-1, p.r1 + 1]
    spoke2 = [-1, p.r2 + 1]
    out = _pmul(_first_factor(p), _second_factor(p, base_eig))
    out = _padd(out, _pscale(_pmul(spoke1, spoke2), p.r * (base_eig - 2)))
    return RealPolynomial(tuple(out))


def vertex_corona_cubic(p: CoronaParams, base_eig) -> RealPolynomial:
    """Per-base-eigenvalue cubic for the vertex corona (second copy null)."""
    if p.n1 < 1:
        raise HypothesisError("vertex-corona cubic requires a nonempty attachment graph")
    spoke1 = [-1, p.r1 + 1]
    out = _pscale(_pmul([-1, 1], _second_factor(p, base_eig)), 2)
    out = _padd(out, _pscale(spoke1, p.r * (base_eig - 2)))
    return RealPolynomial(tuple(out))


def edge_corona_cubic(p: CoronaParams, base_eig) -> RealPolynomial:
    """Per-base-eigenvalue cubic for the edge corona (first copy null)."""
    if p.n2 < 1:
        raise HypothesisError("edge-corona cubic requires a nonempty attachment graph")
    spoke2 = [-1, p.r2 + 1]
    out = _pmul([-1 - base_eig, 2], _first_factor(p))
    out = _padd(out, _pscale(spoke2, base_eig - 2))
    return RealPolynomial(tuple(out))


def excess_quadratic(p: CoronaParams) -> RealPolynomial:
    """The quadratic carrying the m-n edge-excess multiplicity."""
    if p.n2 < 1:
        raise HypothesisError("excess quadratic requires a nonempty second attachment graph")
    return RealPolynomial(tuple(_first_factor(p)))


# --- real root extraction ----------------------------------------------------

# Normalized-remainder cutoff for ending the Sturm chain early (a common
# factor of p and p' exists).  Division noise for a genuinely repeated root
# sits around 1e-12; distinct roots separated by delta leave a remainder of
# order delta^2, so this still resolves pairs down to ~5e-6 apart, at the
# conditioning limit of double-precision quartic coefficients.
_CHAIN_EPS = 3e-11


def _trim(c: list[float]) -> list[float]:
    out = list(c)
    while len(out) > 1 and out[-1] == 0.0:
        out.pop()
    return out


def _normalize(c: list[float]) -> list[float]:
    m = max(abs(x) for x in c)
    return [x / m for x in c] if m > 0 else list(c)


def _peval(c: list[float], x: float) -> float:
    acc = 0.0
    for v in reversed(c):
        acc = acc * x + v
    return acc


def _pderiv(c: list[float]) -> list[float]:
    return [i * v for i, v in enumerate(c)][1:] or [0.0]


def _poly_divmod(a: list[float], b: list[float]) -> tuple[list[float], list[float]]:
    a = list(a)
    q = [0.0] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        factor = a[k + len(b) - 1] / lead
        q[k] = factor
        for j in range(len(b)):
            a[k + j] -= factor * b[j]
    return q, a[: len(b) - 1] or [0.0]


def _sturm_chain(c: list[float]) -> tuple[list[list[float]], list[float] | None]:
    """Sturm chain of c; returns (chain, gcd) where gcd is the last chain
    element when it has degree >= 1 (c not square-free), else None."""
    chain = [_normalize(c)]
    d = _trim(_pderiv(c))
    if len(d) == 1 and d[0] == 0.0:
        return chain, None
    chain.append(_normalize(d))
    while len(chain[-1]) > 1:
        _, rem = _poly_divmod(chain[-2], chain[-1])
        rem = _trim([-v for v in rem])
        if max(abs(v) for v in rem) <= _CHAIN_EPS:
            return chain, chain[-1]
        chain.append(_normalize(rem))
    return chain, None


def _variations(chain: list[list[float]], x: float) -> int:
    signs = []
    for c in chain:
        v = _peval(c, x)
        if v != 0.0:
            signs.append(v > 0.0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _polish(c: list[float], dc: list[float], chain: list[list[float]], a: float, b: float) -> float:
    """Refine the single root known to lie in the half-open interval (a, b].

    Narrows by bisection on the Sturm variation count (robust to roots at
    subdivision points, where sign tests mislead), then finishes with
    Newton steps clamped near the bracket.
    """
    if _peval(c, b) == 0.0:
        return b
    va = _variations(chain, a)
    while b - a > 1e-8:
        mid = 0.5 * (a + b)
        vm = _variations(chain, mid)
        if va - vm >= 1:
            b = mid
        else:
            a, va = mid, vm
    lo, hi = a - 1e-7, b + 1e-7
    x = 0.5 * (a + b)
    for _ in range(100):
        f = _peval(c, x)
        if f == 0.0:
            return x
        df = _peval(dc, x)
        if df == 0.0:
            break
        nxt = min(max(x - f / df, lo), hi)
        if abs(nxt - x) <= 1e-15 * (1.0 + abs(x)):
            return nxt
        x = nxt
    return x


def _polish_cluster(c: list[float], k: int, a: float, b: float) -> float:
    """Center of a k-fold root cluster in [a, b]: the nearby simple root of
    the (k-1)-th derivative, which stays well-conditioned."""
    dk = list(c)
    for _ in range(k - 1):
        dk = _trim(_pderiv(dk))
    ddk = _trim(_pderiv(dk))
    x = 0.5 * (a + b)
    for _ in range(60):
        f = _peval(dk, x)
        df = _peval(ddk, x)
        if df == 0.0:
            break
        nxt = min(max(x - f / df, a), b)
        if abs(nxt - x) <= 1e-15 * (1.0 + abs(x)):
            return nxt
        x = nxt
    return x


def _isolate_square_free(c: list[float]) -> list[float]:
    chain, _ = _sturm_chain(c)
    dc = _trim(_pderiv(c))
    lo, hi = _ROOT_LO, _ROOT_HI
    total = _variations(chain, lo) - _variations(chain, hi)
    roots: list[float] = []
    stack = [(lo, hi, total, 0)]
    while stack:
        a, b, k, depth = stack.pop()
        if k <= 0:
            continue
        if k == 1:
            roots.append(_polish(c, dc, chain, a, b))
            continue
        if depth > 80 or b - a < 1e-12:
            # tighter than the chain can separate: report the cluster center
            roots.extend([_polish_cluster(c, k, a, b)] * k)
            continue
        mid = 0.5 * (a + b)
        left = _variations(chain, a) - _variations(chain, mid)
        stack.append((a, mid, left, depth + 1))
        stack.append((mid, b, k - left, depth + 1))
    return roots


def _roots_with_multiplicity(c: list[float]) -> list[float]:
    c = _normalize(_trim(c))
    degree = len(c) - 1
    if degree == 0:
        return []
    if degree == 1:
        root = -c[0] / c[1]
        return [root] if _ROOT_LO <= root <= _ROOT_HI else []
    chain, gcd = _sturm_chain(c)
    if gcd is None:
        return _isolate_square_free(c)
    square_free, _ = _poly_divmod(c, gcd)
    base = _isolate_square_free(_normalize(_trim(square_free)))
    merged = list(base)
    for rep in _roots_with_multiplicity(list(gcd)):
        if base:
            nearest = min(base, key=lambda t: abs(t - rep))
            merged.append(nearest if abs(nearest - rep) < 1e-5 else rep)
        else:
            merged.append(rep)
    return merged


def real_roots(q: RealPolynomial) -> list[float]:
    """All real roots of q in the window [-1, 3], with multiplicity, sorted.

    Roots are isolated by Sturm-sequence bisection and polished by guarded
    Newton iteration to better than 1e-12.  A genuine multiple root is
    detected via the chain's terminal common factor and reported the right
    number of times; a near-multiple pair that the coefficients can no
    longer distinguish is recovered from the critical points.
    """
    if not 1 <= q.degree <= 4:
        raise ValueError(f"real_roots handles degree 1..4, got {q.degree}")
    coeffs = list(q.coefficients)
    roots = sorted(_roots_with_multiplicity(coeffs))
    if len(roots) < q.degree:
        scale = max(abs(v) for v in coeffs)
        for t in sorted(_roots_with_multiplicity(_trim(_pderiv(coeffs)))):
            if len(roots) >= q.degree:
                break
            if any(abs(t - r) < 1e-6 for r in roots):
                continue
            local = max(scale, math.fsum(abs(v) * abs(t) ** i for i, v in enumerate(coeffs)))
            if abs(_peval(coeffs, t)) <= 1e-7 * local:
                roots.extend([t, t])
        roots.sort()
    return roots


# --- assembly ----------------------------------------------------------------


def _require_base(g: Graph, p: CoronaParams) -> None:
    if not is_connected(g):
        raise HypothesisError("closed-form spectrum requires a connected base graph")
    if p.m < p.n:
        raise HypothesisError(
            f"m<n unsupported: base graph has m = {p.m} < n = {p.n}; "
            "the closed form needs at least as many edges as vertices"
        )


def _copy_spectrum(g: Graph, size: int, degree: int) -> list[float]:
    # an edgeless copy graph joins each copy vertex only to its center; the
    # copy block is the identity and the fixed-family map ignores the
    # eigenvalues entirely, so zeros stand in without a Laplacian
    if degree == 0:
        return [0.0] * size
    return list(nl_spectrum(g).values)


def _grouped(values: list[float], tol: float = _GROUP_TOL) -> list[tuple[float, int]]:
    groups: list[tuple[float, int]] = []
    cluster: list[float] = []
    for v in sorted(values):
        if cluster and v - cluster[-1] > tol:
            groups.append((math.fsum(cluster) / len(cluster), len(cluster)))
            cluster = []
        cluster.append(v)
    if cluster:
        groups.append((math.fsum(cluster) / len(cluster), len(cluster)))
    return groups


def _fixed_families(
    values: list[float], degree: int, per_value_mult: int, tag: str
) -> list[FixedFamily]:
    """Families from a copy graph's spectrum with one zero dropped."""
    tail = sorted(values)[1:]
    return [
        FixedFamily(
            fixed_family_value(v, degree),
            count * per_value_mult,
            f"{tag} eigenvalue {v:.10g}",
        )
        for v, count in _grouped(tail)
    ]


def _check_total(cfs: ClosedFormSpectrum, expected: int) -> ClosedFormSpectrum:
    if cfs.total_multiplicity != expected:
        raise InternalConsistencyError(
            f"family multiplicities total {cfs.total_multiplicity}, expected {expected}"
        )
    return cfs


def double_corona_spectrum(g: Graph, g1: Graph, g2: Graph) -> ClosedFormSpectrum:
    """Closed-form spectrum of the double corona; both copies nonempty."""
    if g1.is_null or g2.is_null:
        raise HypothesisError(
            "double-corona closed form needs both attachment graphs nonempty; "
            "use the vertex- or edge-corona variant instead"
        )
    p = CoronaParams.from_graphs(g, g1, g2)
    _require_base(g, p)
    mu = list(nl_spectrum(g).values)
    fixed = _fixed_families(_copy_spectrum(g1, p.n1, p.r1), p.r1, p.n, "attach1")
    fixed += _fixed_families(_copy_spectrum(g2, p.n2, p.r2), p.r2, p.m, "attach2")
    roots = [
        RootFamily(quartic_factor(p, v), count, f"base eigenvalue {v:.10g}")
        for v, count in _grouped(mu)
    ]
    excess = (
        RootFamily(excess_quadratic(p), p.m - p.n, "edge excess") if p.m > p.n else None
    )
    cfs = ClosedFormSpectrum(tuple(fixed), tuple(roots), excess)
    return _check_total(cfs, p.total_vertices)


def vertex_corona_spectrum(g: Graph, g1: Graph) -> ClosedFormSpectrum:
    """Closed-form spectrum of the vertex corona (second copy null)."""
    if g1.is_null:
        raise HypothesisError("vertex-corona closed form needs a nonempty attachment graph")
    p = CoronaParams.from_graphs(g, g1, Graph(0, ()))
    _require_base(g, p)
    mu = list(nl_spectrum(g).values)
    fixed = _fixed_families(_copy_spectrum(g1, p.n1, p.r1), p.r1, p.n, "attach1")
    roots = [
        RootFamily(vertex_corona_cubic(p, v), count, f"base eigenvalue {v:.10g}")
        for v, count in _grouped(mu)
    ]
    excess = (
        RootFamily(RealPolynomial((-1.0, 1.0)), p.m - p.n, "edge excess")
        if p.m > p.n
        else None
    )
    cfs = ClosedFormSpectrum(tuple(fixed), tuple(roots), excess)
    return _check_total(cfs, p.total_vertices)


def edge_corona_spectrum(g: Graph, g2: Graph) -> ClosedFormSpectrum:
    """Closed-form spectrum of the edge corona (first copy null)."""
    if g2.is_null:
        raise HypothesisError("edge-corona closed form needs a nonempty attachment graph")
    p = CoronaParams.from_graphs(g, Graph(0, ()), g2)
    _require_base(g, p)
    mu = list(nl_spectrum(g).values)
    fixed = _fixed_families(_copy_spectrum(g2, p.n2, p.r2), p.r2, p.m, "attach2")
    roots = [
        RootFamily(edge_corona_cubic(p, v), count, f"base eigenvalue {v:.10g}")
        for v, count in _grouped(mu)
    ]
    excess = (
        RootFamily(excess_quadratic(p), p.m - p.n, "edge excess") if p.m > p.n else None
    )
    cfs = ClosedFormSpectrum(tuple(fixed), tuple(roots), excess)
    return _check_total(cfs, p.total_vertices)


def closed_form_spectrum(g: Graph, g1: Graph, g2: Graph) -> ClosedFormSpectrum:
    """Route to the applicable closed form by which copies are nonempty."""
    if g1.is_null and g2.is_null:
        raise HypothesisError(
            "no closed form implemented for the bare R-graph (both copies null); "
            "use the numeric path"
        )
    if g2.is_null:
        return vertex_corona_spectrum(g, g1)
    if g1.is_null:
        return edge_corona_spectrum(g, g2)
    return double_corona_spectrum(g, g1, g2)


def flatten(cfs: ClosedFormSpectrum) -> Spectrum:
    """Expand all families into a sorted eigenvalue multiset."""
    values: list[float] = []
    for fam in cfs.fixed_families:
        values.extend([fam.value] * fam.multiplicity)
    families = list(cfs.root_families)
    if cfs.excess_family is not None:
        families.append(cfs.excess_family)
    for fam in families:
        roots = real_roots(fam.poly)
        if len(roots) != fam.poly.degree:
            raise InternalConsistencyError(
                f"{fam.label}: found {len(roots)} real roots for degree "
                f"{fam.poly.degree} polynomial {list(fam.poly.coefficients)}"
            )
        for root in roots:
            values.extend([root] * fam.multiplicity)
    return Spectrum(tuple(sorted(values)), "closed-form")
