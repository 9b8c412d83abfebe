"""Horizontal orthonormal frames and unit normals along chart lifts.

At a chart point p the fiber direction is i p.  The three chart partials are
projected onto the horizontal space (the orthogonal complement of p and i p),
orthonormalized by modified Gram-Schmidt with change-of-basis bookkeeping,
and completed by the unique horizontal unit normal, whose sign follows a
deterministic rule so that runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ambient import AmbientVector
from .charts import ParamTriple, SurfaceChart


class RankDeficient(RuntimeError):
    """The horizontalized partials do not span a 3-space at this point."""


def horizontalize(w: AmbientVector, p: AmbientVector) -> AmbientVector:
    """Project w onto the horizontal space at p (orthogonal to p and i p)."""
    ip = p.times_i()
    return w - w.real_inner(ip) * ip - w.real_inner(p) * p


@dataclass(frozen=True)
class MovingFrame:
    """Horizontal orthonormal tangent frame, unit normal, and bookkeeping.

    ``coeffs`` row i expresses e_i in the basis of horizontalized chart
    partials, so derivatives along coordinate directions can be contracted
    into frame directions.
    """

    p: AmbientVector
    vertical: AmbientVector
    e1: AmbientVector
    e2: AmbientVector
    e3: AmbientVector
    normal: AmbientVector
    coeffs: np.ndarray

    @property
    def tangent(self) -> tuple[AmbientVector, AmbientVector, AmbientVector]:
        return (self.e1, self.e2, self.e3)


_REAL_BASIS = [
    AmbientVector.of(1, 0, 0),
    AmbientVector.of(1j, 0, 0),
    AmbientVector.of(0, 1, 0),
    AmbientVector.of(0, 1j, 0),
    AmbientVector.of(0, 0, 1),
    AmbientVector.of(0, 0, 1j),
]


def _project_out(y: AmbientVector, basis: list[AmbientVector]) -> AmbientVector:
    for b in basis:
        y = y - y.real_inner(b) * b
    return y


def build_frame(
    chart: SurfaceChart,
    q: ParamTriple,
    rank_tol: float = 1e-8,
    orient: int = 1,
) -> MovingFrame:
    """Build the moving frame at a non-singular parameter point.

    Raises ``RankDeficient`` when the smallest Gram-Schmidt remainder norm
    falls below ``rank_tol``, which signals a coordinate singularity or a
    fiber-tangent direction.  ``orient`` (+1 or -1) multiplies the normal
    after the deterministic sign rule, for sign-consistency experiments.
    """
    p = chart.evaluate(*q)
    vertical = p.times_i()
    ws = [horizontalize(w, p) for w in chart.partials(*q)]

    es: list[AmbientVector] = []
    coeffs = np.zeros((3, 3))
    for a in range(3):
        y = ws[a]
        row = np.zeros(3)
        row[a] = 1.0
        for _ in range(2):  # two Gram-Schmidt passes for crisp orthogonality
            y = _project_out(y, [p, vertical])
            for i, e in enumerate(es):
                s = y.real_inner(e)
                y = y - s * e
                row -= s * coeffs[i]
        norm = y.norm()
        if norm < rank_tol:
            raise RankDeficient(
                f"chart {chart.name!r} at {q}: Gram-Schmidt remainder {norm:.3e} < {rank_tol:.1e}"
            )
        es.append((1.0 / norm) * y)
        coeffs[a] = row / norm

    known = [p, vertical, *es]
    best, best_norm2 = 0, -1.0
    for k, cand in enumerate(_REAL_BASIS):
        norm2 = 1.0 - sum(cand.real_inner(b) ** 2 for b in known)
        if norm2 > best_norm2 + 1e-15:
            best, best_norm2 = k, norm2
    n = _project_out(_project_out(_REAL_BASIS[best], known), known).normalized()

    comps = n.real_components()
    lead = int(np.argmax(np.abs(comps)))
    sign = float(orient) * (1.0 if comps[lead] >= 0 else -1.0)
    n = sign * n

    return MovingFrame(p=p, vertical=vertical, e1=es[0], e2=es[1], e3=es[2], normal=n, coeffs=coeffs)


def frame_residuals(frame: MovingFrame) -> dict[str, float]:
    """Worst-case deviations from the frame invariants, for testing."""
    members = [frame.e1, frame.e2, frame.e3, frame.normal, frame.p, frame.vertical]
    ortho = 0.0
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            target = 1.0 if i == j else 0.0
            ortho = max(ortho, abs(a.real_inner(b) - target))
    return {
        "orthonormality": ortho,
        "normal_horizontality": abs(frame.normal.real_inner(frame.vertical)),
    }
