"""Shape operator, tangential complex structure, and structure vector.

The shape operator of the projected hypersurface is recovered from the lift:
the normal field is recomputed from scratch at six stencil points, sign-
aligned to the center, and differentiated centrally.  Chart partials may have
a vertical component, and the normal field rotates along the fiber (its
derivative in the fiber direction is i times the normal), so the coordinate
derivatives are corrected by the analytic fiber term before contraction into
the frame.  The result is symmetrized; the pre-symmetrization asymmetry is
recorded and guarded, since the true operator is symmetric and asymmetry
measures numerical error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charts import ParamTriple, SurfaceChart
from .frames import MovingFrame, build_frame


class AsymmetryExceeded(RuntimeError):
    """Pre-symmetrization asymmetry above the configured bound.

    Signals a too-large finite-difference step or a near-singular point."""


@dataclass(frozen=True)
class ShapeData:
    """Frame-coordinate curvature package at one point.

    A is the shape operator, P the tangential part of the complex structure,
    xi the structure vector, alpha = <A xi, xi>, hopf_defect the norm of
    A xi - alpha xi, and mean_curvature = tr A / 3.
    """

    A: np.ndarray
    P: np.ndarray
    xi: np.ndarray
    alpha: float
    hopf_defect: float
    mean_curvature: float
    asymmetry: float = 0.0
    frame: MovingFrame | None = None

    @staticmethod
    def from_matrices(
        A: np.ndarray,
        P: np.ndarray,
        xi: np.ndarray,
        asymmetry: float = 0.0,
        frame: MovingFrame | None = None,
    ) -> "ShapeData":
        A = np.asarray(A, dtype=float)
        P = np.asarray(P, dtype=float)
        xi = np.asarray(xi, dtype=float)
        alpha = float(xi @ A @ xi)
        defect = float(np.linalg.norm(A @ xi - alpha * xi))
        return ShapeData(
            A=A,
            P=P,
            xi=xi,
            alpha=alpha,
            hopf_defect=defect,
            mean_curvature=float(np.trace(A) / 3.0),
            asymmetry=asymmetry,
            frame=frame,
        )

    def flip_normal(self) -> "ShapeData":
        """The same point with the opposite normal orientation."""
        return ShapeData.from_matrices(-self.A, self.P, -self.xi, self.asymmetry, self.frame)

    def invariant_residuals(self) -> dict[str, float]:
        """Deviations from the structural invariants, for testing."""
        eye = np.eye(3)
        return {
            "P_skew": float(np.max(np.abs(self.P + self.P.T))),
            "P_xi": float(np.linalg.norm(self.P @ self.xi)),
            "P_squared": float(np.max(np.abs(self.P @ self.P + eye - np.outer(self.xi, self.xi)))),
            "xi_unit": abs(float(np.linalg.norm(self.xi)) - 1.0),
            "A_symmetric": float(np.max(np.abs(self.A - self.A.T))),
        }


def shape_operator(
    chart: SurfaceChart,
    q: ParamTriple,
    h: float = 1e-5,
    asym_tol: float = 1e-6,
    rank_tol: float = 1e-8,
    orient: int = 1,
) -> ShapeData:
    """Shape operator and companions at q by central differences of step h."""
    frame = build_frame(chart, q, rank_tol=rank_tol, orient=orient)
    p, n = frame.p, frame.normal
    es = frame.tangent
    i_n = n.times_i()

    # Vertical components of the chart partials at the center (exact).
    parts = chart.partials(*q)
    vert = np.array([w.real_inner(frame.vertical) for w in parts])

    # <i n, e_j> and the centered normal derivatives along coordinate axes.
    in_e = np.array([i_n.real_inner(e) for e in es])
    raw = np.zeros((3, 3))
    for a in range(3):
        qp = list(q)
        qp[a] += h
        qm = list(q)
        qm[a] -= h
        np_ = build_frame(chart, tuple(qp), rank_tol=rank_tol).normal
        nm = build_frame(chart, tuple(qm), rank_tol=rank_tol).normal
        if np_.real_inner(n) < 0.0:
            np_ = -np_
        if nm.real_inner(n) < 0.0:
            nm = -nm
        fd = (1.0 / (2.0 * h)) * (np_ - nm)
        for j, e in enumerate(es):
            # D_{W_a} n = FD_a - vert_a * i n, and A e_i = -H(D_{e_i} n).
            raw[a, j] = -(fd.real_inner(e) - vert[a] * in_e[j])

    A_raw = frame.coeffs @ raw
    asym = float(np.max(np.abs(A_raw - A_raw.T)))
    if asym > asym_tol:
        raise AsymmetryExceeded(
            f"chart {chart.name!r} at {q}: asymmetry {asym:.3e} > {asym_tol:.1e}"
        )
    A = 0.5 * (A_raw + A_raw.T)

    P = np.zeros((3, 3))
    for j, ej in enumerate(es):
        iej = ej.times_i()
        for i, ei in enumerate(es):
            P[i, j] = iej.real_inner(ei)
    xi = -in_e  # components of -i n in the frame

    return ShapeData.from_matrices(A, P, xi, asymmetry=asym, frame=frame)
