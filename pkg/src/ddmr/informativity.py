"""Rank-based data informativity tests and transfer-value recovery.

Whether input-output data pins down a system's transfer-function value at a
point ``sigma`` reduces to two rank equalities on stacked Hankel matrices of
the data. When both hold, the (unique) value is the last unknown of a small
linear system and is recovered by a truncated-SVD least-squares solve.

Exact rank is a fiction in floating point, and doubly so for data recorded
with a few printed decimals, so every decision here goes through an explicit
:class:`RankTolerance` policy and every verdict reports the cutoff and the
singular values it was applied to.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .signals import DataSet, hankel

__all__ = [
    "DEFAULT_REL_TOL",
    "RankTolerance",
    "InclusionSystem",
    "InformativityVerdict",
    "power_vector",
    "build_inclusion_system",
    "numerical_rank",
    "is_informative",
    "transfer_value_from_data",
    "informative_sweep",
]

# Deliberately looser than machine-precision heuristics: measured data often
# carries only a handful of decimals, and the rank decisions must reflect the
# dominant structure rather than the rounding noise. Override per call via
# RankTolerance when the data quality warrants it.
DEFAULT_REL_TOL = 5e-6


@dataclass(frozen=True)
class RankTolerance:
    """Threshold policy for numerical rank decisions.

    A singular value counts as nonzero when it exceeds
    ``rel_tol * s_max * max(rows, cols)``; a non-``None`` ``abs_tol``
    overrides the formula with a fixed cutoff.
    """

    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float | None = None

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.abs_tol is not None and not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive when given")

    def threshold(self, singular_values: np.ndarray, shape: tuple[int, int]) -> float:
        if self.abs_tol is not None:
            return float(self.abs_tol)
        s_max = float(singular_values[0]) if len(singular_values) else 0.0
        return self.rel_tol * s_max * max(shape)

    def zero_tol(self) -> float:
        """Scalar zero test reused for coefficient admissibility checks."""
        return float(self.abs_tol) if self.abs_tol is not None else self.rel_tol


def power_vector(sigma: complex, degree: int) -> np.ndarray:
    """Column of powers ``[1, sigma, sigma**2, ..., sigma**degree]``."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    sigma = complex(sigma)
    if not cmath.isfinite(sigma):
        raise ValueError("sigma must be finite")
    return sigma ** np.arange(degree + 1)


@dataclass(frozen=True, eq=False)
class InclusionSystem:
    """Linear system whose solvability ties the data to a value at ``sigma``.

    ``matrix`` is the (2n+2) x (T-n+2) complex block matrix
    ``[[H_n(U), 0], [H_n(Y), -w]]`` with ``w = power_vector(sigma, n)``, and
    ``rhs`` is ``[w; 0]``. The unknown vector splits as ``(xi, M)`` with the
    candidate transfer value M in the last position; xi has ``T - n + 1``
    entries and is generally non-unique even when M is pinned down.
    """

    matrix: np.ndarray
    rhs: np.ndarray
    sigma: complex
    order: int

    @property
    def xi_size(self) -> int:
        return self.matrix.shape[1] - 1


def build_inclusion_system(data: DataSet, order: int, sigma: complex) -> InclusionSystem:
    """Assemble the stacked data/value system at one interpolation point."""
    _check_order_and_horizon(data, order)
    Hu = hankel(data.input, order).astype(complex)
    Hy = hankel(data.output, order).astype(complex)
    w = power_vector(sigma, order)
    zero_col = np.zeros((order + 1, 1), dtype=complex)
    matrix = np.block([[Hu, zero_col], [Hy, -w[:, None]]])
    rhs = np.concatenate([w, np.zeros(order + 1, dtype=complex)])
    return InclusionSystem(matrix, rhs, complex(sigma), order)


def numerical_rank(matrix: np.ndarray, tol_policy: RankTolerance | None = None) -> tuple[int, np.ndarray]:
    """Thresholded SVD rank of a dense matrix.

    Returns ``(rank, singular_values)`` so marginal decisions stay
    auditable: the rank is the number of singular values above the policy's
    cutoff for this matrix.
    """
    policy = tol_policy if tol_policy is not None else RankTolerance()
    A = np.asarray(matrix)
    if A.ndim != 2 or A.size == 0:
        raise ValueError("matrix must be two-dimensional and nonempty")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    s = np.linalg.svd(A, compute_uv=False)
    tau = policy.threshold(s, A.shape)
    return int(np.count_nonzero(s > tau)), s


@dataclass(frozen=True)
class InformativityVerdict:
    """Outcome of the two rank tests at one interpolation point.

    ``condition_a`` is the solvability test (augmented rank equals extended
    rank); ``condition_b`` is the uniqueness test (extended rank exceeds the
    base data rank by one). The point is informative exactly when both hold,
    and ``m`` then carries the recovered value. ``spectra`` keeps the three
    singular-value arrays for audit; ``tolerance_used`` is the shared cutoff
    they were thresholded with.
    """

    sigma: complex
    informative: bool
    m: complex | None
    condition_a: bool
    condition_b: bool
    rank_augmented: int
    rank_extended: int
    rank_base: int
    tolerance_used: float
    solve_residual: float | None = None
    spectra: tuple = field(default=(), repr=False, compare=False)

    def to_json_dict(self) -> dict:
        return {
            "sigma": [self.sigma.real, self.sigma.imag],
            "informative": self.informative,
            "m": None if self.m is None else [self.m.real, self.m.imag],
            "condition_a": self.condition_a,
            "condition_b": self.condition_b,
            "ranks": {
                "augmented": self.rank_augmented,
                "extended": self.rank_extended,
                "base": self.rank_base,
            },
            "tolerance": self.tolerance_used,
        }


def _check_order_and_horizon(data: DataSet, order: int) -> None:
    if order < 1:
        raise ValueError("order must be at least 1")
    if data.horizon < order:
        raise ValueError(f"insufficient data for order {order}: horizon T={data.horizon}")


def _solve_for_value(Hu: np.ndarray, Hy: np.ndarray, w: np.ndarray, tau: float) -> tuple[complex, float]:
    """Minimum-norm truncated-SVD solve of the inclusion system.

    Singular values at or below ``tau`` are discarded, matching the rank
    decisions made with the same cutoff. Returns the value component and the
    2-norm residual of the returned solution.
    """
    rows = Hu.shape[0]
    A = np.block([[Hu.astype(complex), np.zeros((rows, 1), dtype=complex)],
                  [Hy.astype(complex), -w[:, None]]])
    b = np.concatenate([w, np.zeros(rows, dtype=complex)])
    u, s, vh = np.linalg.svd(A, full_matrices=False)
    keep = s > tau
    coeffs = (u.conj().T[keep] @ b) / s[keep]
    x = vh.conj().T[:, keep] @ coeffs
    residual = float(np.linalg.norm(A @ x - b))
    return complex(x[-1]), residual


def is_informative(
    data: DataSet,
    order: int,
    sigma: complex,
    tol_policy: RankTolerance | None = None,
) -> InformativityVerdict:
    """Decide informativity for interpolation at one point.

    Three stacked matrices are ranked: the base data stack
    ``[H_n(U); H_n(Y)]``, the extension by the power-vector column, and the
    further augmentation by the right-hand side. All three share a single
    cutoff computed from the largest (augmented) matrix, so the two rank
    comparisons cannot be skewed by per-matrix thresholds. When both
    conditions hold, the unique value is recovered and attached.
    """
    policy = tol_policy if tol_policy is not None else RankTolerance()
    _check_order_and_horizon(data, order)
    Hu = hankel(data.input, order)
    Hy = hankel(data.output, order)
    w = power_vector(sigma, order)
    zero_col = np.zeros((order + 1, 1), dtype=complex)

    base = np.vstack([Hu, Hy])
    extended = np.block([[Hu.astype(complex), zero_col], [Hy.astype(complex), w[:, None]]])
    augmented = np.block([[Hu.astype(complex), zero_col, w[:, None]],
                          [Hy.astype(complex), w[:, None], zero_col]])

    s_aug = np.linalg.svd(augmented, compute_uv=False)
    s_ext = np.linalg.svd(extended, compute_uv=False)
    s_base = np.linalg.svd(base, compute_uv=False)
    tau = policy.threshold(s_aug, augmented.shape)

    rank_aug = int(np.count_nonzero(s_aug > tau))
    rank_ext = int(np.count_nonzero(s_ext > tau))
    rank_base = int(np.count_nonzero(s_base > tau))

    condition_a = rank_aug == rank_ext
    condition_b = rank_ext == rank_base + 1
    informative = condition_a and condition_b

    m: complex | None = None
    residual: float | None = None
    if informative:
        m, residual = _solve_for_value(Hu, Hy, w, tau)

    return InformativityVerdict(
        sigma=complex(sigma),
        informative=informative,
        m=m,
        condition_a=condition_a,
        condition_b=condition_b,
        rank_augmented=rank_aug,
        rank_extended=rank_ext,
        rank_base=rank_base,
        tolerance_used=tau,
        solve_residual=residual,
        spectra=(s_aug, s_ext, s_base),
    )


def transfer_value_from_data(
    data: DataSet,
    order: int,
    sigma: complex,
    tol_policy: RankTolerance | None = None,
) -> tuple[complex, float]:
    """Recover the transfer-function value at ``sigma`` from the data alone.

    The point must be informative; otherwise the value is not determined by
    the data and a ``ValueError`` is raised. The rank tests and the
    least-squares solve can in principle disagree near the cutoff, so the
    residual of the returned solution is checked against a reporting
    tolerance (a small multiple of the rank cutoff) before the value is
    trusted. Returns ``(m, residual)``.
    """
    verdict = is_informative(data, order, sigma, tol_policy)
    if not verdict.informative:
        raise ValueError(
            f"transfer value not determined by data at sigma={complex(sigma)} "
            f"(condition_a={verdict.condition_a}, condition_b={verdict.condition_b})"
        )
    assert verdict.m is not None and verdict.solve_residual is not None
    rhs_scale = float(np.linalg.norm(power_vector(sigma, order)))
    reporting_tol = 10.0 * verdict.tolerance_used * max(1.0, rhs_scale)
    if verdict.solve_residual > reporting_tol:
        raise ValueError(
            "inconsistent system (rank test/solve disagreement): residual "
            f"{verdict.solve_residual:.3e} exceeds {reporting_tol:.3e} at sigma={complex(sigma)}"
        )
    return verdict.m, verdict.solve_residual


def informative_sweep(
    data: DataSet,
    order: int,
    sigmas,
    tol_policy: RankTolerance | None = None,
) -> list[InformativityVerdict]:
    """Run :func:`is_informative` over a list of points, preserving order."""
    return [is_informative(data, order, sigma, tol_policy) for sigma in sigmas]
