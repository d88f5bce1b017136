"""The local Hitchin map and its verification on sampled Higgs germs.

chi sends a germ phi (a matrix of truncated Laurent series in the chosen
realization) to the tuple of invariant coordinates:

    A      : c_2, ..., c_n                         (char poly of sl_(n))
    B, C   : c_2, c_4, ..., c_2n
    D      : c_2, c_4, ..., c_(2n-2), p_n          (p_n the Pfaffian)
    G2     : c_2, c_6                              (7-dim realization)

verify_inclusion samples germs with a first-order pole along the
nilradical and checks the predicted image: a valuation box for good
parabolics, the Newton-polygon-with-square-conditions region for bad
type-D parabolics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .algebras import ParabolicSpec, sample_pperp
from .degrees import (
    BadParabolicError,
    DegreeProfile,
    fundamental_degrees,
    is_good_parabolic,
    predicted_image,
)
from .linalg import (
    SeriesMatrix,
    StructureError,
    char_poly_coeffs,
    mat_mul,
    pfaffian,
    pfaffian_const,
)
from .series import AtLeast, TruncatedLaurentSeries, val_at_least
from .typedd import JordanType, d_membership, richardson_jordan_type


@lru_cache(maxsize=None)
def _pfaffian_normalizer(real) -> int:
    """Sign kappa with Pf(J h) = kappa a_1...a_n on h = diag(a, -a reversed).

    Dividing by kappa fixes p_n(h) = a_1...a_n; then c_2n = (-1)^n p_n^2
    in this split realization.
    """
    n = real.rank
    size = real.matrix_size
    h = [[0] * size for _ in range(size)]
    for i in range(n):
        h[i][i] = i + 1
        h[size - 1 - i][size - 1 - i] = -(i + 1)
    kappa = Fraction(pfaffian_const(mat_mul(real.form, h)), math.factorial(n))
    if kappa * kappa != 1:
        raise StructureError("Pfaffian normalizer must be a sign")
    return int(kappa)


def coordinate_labels(type_label: str, rank: int) -> tuple:
    degs = fundamental_degrees(type_label, rank)
    labels = [f"c{d}" for d in degs]
    if type_label == "D":
        labels[-1] = f"p{rank}"
    return tuple(labels)


@dataclass(frozen=True)
class ChiImage:
    type_label: str
    rank: int
    values: tuple  # TruncatedLaurentSeries, in fundamental-degree order

    @property
    def degrees(self) -> tuple:
        return fundamental_degrees(self.type_label, self.rank)

    @property
    def labels(self) -> tuple:
        return coordinate_labels(self.type_label, self.rank)

    def scaled(self, k: int) -> "ChiImage":
        """The image of t^k phi: coordinate of degree d picks up t^(k d)."""
        return ChiImage(
            self.type_label,
            self.rank,
            tuple(v.shift(k * d) for v, d in zip(self.values, self.degrees)),
        )


def chi(par: ParabolicSpec, phi: SeriesMatrix) -> ChiImage:
    """Invariant coordinates of phi, which must lie in the realization."""
    real = par.realization
    if not real.contains_series(phi):
        raise StructureError("germ does not lie in the chosen realization")
    t = real.type_label
    n = real.rank
    if t == "A":
        cp = char_poly_coeffs(phi, upto=n + 1)
        if not cp.cj(1).is_zero():
            raise StructureError("trace of an sl germ must vanish")
        values = tuple(cp.cj(j) for j in range(2, n + 2))
    elif t in ("B", "C"):
        cp = char_poly_coeffs(phi, upto=2 * n)
        for j in range(1, 2 * n, 2):
            if not cp.cj(j).is_zero():
                raise StructureError("odd invariant coordinates must vanish")
        values = tuple(cp.cj(j) for j in range(2, 2 * n + 1, 2))
    elif t == "D":
        cp = char_poly_coeffs(phi, upto=2 * n - 2)
        for j in range(1, 2 * n - 2, 2):
            if not cp.cj(j).is_zero():
                raise StructureError("odd invariant coordinates must vanish")
        jphi = SeriesMatrix.from_scalar(real.form, phi.precision) * phi
        pf = pfaffian(jphi) / _pfaffian_normalizer(real)
        values = tuple(cp.cj(j) for j in range(2, 2 * n - 1, 2)) + (pf,)
    elif t == "G2":
        cp = char_poly_coeffs(phi, upto=6)
        values = (cp.cj(2), cp.cj(6))
    else:
        raise StructureError(f"unsupported type {t!r}")
    return ChiImage(t, n, values)


def default_precision(type_label: str, rank: int) -> int:
    return 2 * max(fundamental_degrees(type_label, rank)) + 4


@dataclass
class VerificationReport:
    parabolic: str
    good: bool
    trials: int
    failures: list
    min_valuations: list  # per-coordinate minimum observed (None = all zero)
    exponents: Optional[tuple]  # the box bounds, good case only
    delta: Optional[tuple]  # Richardson type, bad-D case only

    @property
    def passed(self) -> bool:
        return not self.failures

    def sharp_coordinates(self) -> list:
        if self.exponents is None:
            return []
        return [
            v is not None and v == e
            for v, e in zip(self.min_valuations, self.exponents)
        ]


def _observed_valuation(series: TruncatedLaurentSeries):
    v = series.valuation()
    return None if isinstance(v, AtLeast) else v


def verify_inclusion(
    par: ParabolicSpec,
    trials: int,
    seed: int,
    precision: int | None = None,
    coeff_bound: int = 10,
) -> VerificationReport:
    """Sample germs and check each image against the predicted region.

    Good parabolics: val(coordinate i) >= m_i - d_i, three-valued; an
    undetermined comparison raises the working precision and retries the
    same sample.  Bad type-D parabolics: t . chi(phi) must satisfy the
    Newton-polygon and square conditions of the Richardson Jordan type.
    """
    real = par.realization
    if precision is None:
        precision = default_precision(real.type_label, real.rank)
    good, _ = is_good_parabolic(par)
    profile: Optional[DegreeProfile] = predicted_image(par) if good else None
    delta: Optional[JordanType] = None if good else richardson_jordan_type(par)
    ncoords = len(fundamental_degrees(real.type_label, real.rank))
    min_vals: list = [None] * ncoords
    failures: list = []
    for i in range(trials):
        trial_seed = seed * 1_000_003 + i
        prec = precision
        while True:
            phi = sample_pperp(par, prec, trial_seed, coeff_bound=coeff_bound)
            image = chi(par, phi)
            verdicts = []
            if good:
                for v, e in zip(image.values, profile.exponents):
                    verdicts.append(val_at_least(v.valuation(), e))
            else:
                shifted = image.scaled(1)
                verdicts.append(d_membership(shifted.values, delta))
            if None not in verdicts:
                break
            prec *= 2
            if prec > 64 * precision:
                raise StructureError("precision keeps running out")
        for j, v in enumerate(image.values):
            obs = _observed_valuation(v)
            if obs is not None and (min_vals[j] is None or obs < min_vals[j]):
                min_vals[j] = obs
        if not all(verdicts):
            failures.append(
                {
                    "trial": i,
                    "seed": trial_seed,
                    "coordinates": [str(v) for v in image.values],
                }
            )
    return VerificationReport(
        parabolic=par.describe(),
        good=good,
        trials=trials,
        failures=failures,
        min_valuations=min_vals,
        exponents=None if profile is None else profile.exponents,
        delta=None if delta is None else delta.delta,
    )


def witness_search(
    par: ParabolicSpec,
    trials: int,
    seed: int,
    precision: int | None = None,
    coeff_bound: int = 10,
) -> dict:
    """Per-coordinate sharpness: the minimal observed valuation and the
    trial seed attaining it, compared against the box bound."""
    real = par.realization
    if precision is None:
        precision = default_precision(real.type_label, real.rank)
    profile = predicted_image(par)
    ncoords = len(profile.d)
    best: list = [None] * ncoords  # (valuation, trial_seed)
    for i in range(trials):
        trial_seed = seed * 1_000_003 + i
        phi = sample_pperp(par, precision, trial_seed, coeff_bound=coeff_bound)
        image = chi(par, phi)
        for j, v in enumerate(image.values):
            obs = _observed_valuation(v)
            if obs is not None and (best[j] is None or obs < best[j][0]):
                best[j] = (obs, trial_seed)
    coords = []
    for j, label in enumerate(coordinate_labels(real.type_label, real.rank)):
        attained = None if best[j] is None else best[j][0]
        coords.append(
            {
                "coordinate": label,
                "bound": profile.exponents[j],
                "attained": attained,
                "sharp": attained == profile.exponents[j],
                "seed": None if best[j] is None else best[j][1],
            }
        )
    return {
        "parabolic": par.describe(),
        "trials": trials,
        "coordinates": coords,
        "all_sharp": all(c["sharp"] for c in coords),
    }


def trace_power_check(
    par: ParabolicSpec,
    power: int,
    trials: int,
    seed: int,
    precision: int | None = None,
) -> dict:
    """Exhibit a germ whose trace power has a strictly deeper pole than the
    matching invariant coordinate: val(tr(phi^power)) < val(c_power).

    This shows the box bounds are a feature of the c-coordinates, not of
    arbitrary degree-(power) invariants.
    """
    real = par.realization
    if precision is None:
        precision = default_precision(real.type_label, real.rank)
    degs = fundamental_degrees(real.type_label, real.rank)
    profile = predicted_image(par)
    idx = degs.index(power)
    bound = profile.exponents[idx]
    for i in range(trials):
        trial_seed = seed * 1_000_003 + i
        phi = sample_pperp(par, precision, trial_seed)
        acc = phi
        for _ in range(power - 1):
            acc = acc * phi
        tr = acc.trace()
        tr_val = _observed_valuation(tr)
        if tr_val is None or tr_val >= bound:
            continue
        cval = chi(par, phi).values[idx]
        if val_at_least(cval.valuation(), bound) is True:
            return {
                "parabolic": par.describe(),
                "power": power,
                "trial": i,
                "seed": trial_seed,
                "trace_valuation": tr_val,
                "coordinate_bound": bound,
                "coordinate_valuation": str(cval.valuation()),
                "found": True,
            }
    return {"parabolic": par.describe(), "power": power, "found": False}
