"""Parametrized hypersurface lifts of the projective plane in the 5-sphere.

A chart is a map from a 3-parameter box into the unit sphere of C^3 together
with exact analytic first partials and a singular-locus predicate.  Charts fix
the fiber phase; the fiber direction is reconstructed analytically as i p, so
all downstream quantities are independent of the phase choice.

Builtin families:

* ``ruled_chart``:    (u, v, t) -> (cos u cos v, cos u sin v, sin u e^{it}),
  whose fibration image is a minimal ruled hypersurface;
* ``sphere_chart``:   (phi, s, t) -> (cos r e^{i phi}, sin r cos s,
  sin r sin s e^{it}), whose image is the geodesic sphere of radius r about
  the image of (1, 0, 0);
* ``perturbed_ruled_chart``: the ruled chart displaced by a seeded smooth
  trigonometric field and renormalized to the sphere, for probing strict
  inequality away from the classified cases.

User charts: construct a ``SurfaceChart`` directly with your own callables;
the only contract is unit norm, exact partials, and an honest singular flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .ambient import AmbientVector

# Parameter points closer than this (in min |sin|, |cos| of the degenerate
# trig factor) to a coordinate singularity are flagged.
SINGULAR_MARGIN = 1e-3

ParamTriple = tuple[float, float, float]


@dataclass(frozen=True)
class Box:
    """A closed box in 3-parameter space."""

    lo: tuple[float, float, float]
    hi: tuple[float, float, float]

    def contains(self, q: ParamTriple) -> bool:
        return all(l <= x <= h for l, x, h in zip(self.lo, q, self.hi))

    def axes(self, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if n < 2:
            raise ValueError("grid size must be at least 2 per axis")
        return tuple(np.linspace(l, h, n) for l, h in zip(self.lo, self.hi))

    def grid(self, n: int) -> Iterator[ParamTriple]:
        a0, a1, a2 = self.axes(n)
        for x in a0:
            for y in a1:
                for z in a2:
                    yield (float(x), float(y), float(z))


@dataclass(frozen=True)
class SurfaceChart:
    """A hypersurface lift: evaluation map, exact partials, domain, flags."""

    name: str
    evaluate: Callable[[float, float, float], AmbientVector]
    partials: Callable[[float, float, float], tuple[AmbientVector, AmbientVector, AmbientVector]]
    domain: Box
    sample_box: Box
    is_singular: Callable[[float, float, float], bool]


def ruled_chart() -> SurfaceChart:
    """The ruled family (u, v, t) -> (cos u cos v, cos u sin v, sin u e^{it}).

    Coordinate singularities: u = 0 (the t-partial vanishes) and |u| = pi/2
    (the v-partial vanishes).  The u and v partials are horizontal; the
    t-partial has vertical component sin^2 u.
    """

    def evaluate(u: float, v: float, t: float) -> AmbientVector:
        cu, su = math.cos(u), math.sin(u)
        return AmbientVector.of(cu * math.cos(v), cu * math.sin(v), su * complex(math.cos(t), math.sin(t)))

    def partials(u: float, v: float, t: float):
        cu, su = math.cos(u), math.sin(u)
        cv, sv = math.cos(v), math.sin(v)
        eit = complex(math.cos(t), math.sin(t))
        du = AmbientVector.of(-su * cv, -su * sv, cu * eit)
        dv = AmbientVector.of(-cu * sv, cu * cv, 0.0)
        dt = AmbientVector.of(0.0, 0.0, 1j * su * eit)
        return du, dv, dt

    def is_singular(u: float, v: float, t: float) -> bool:
        return min(abs(math.sin(u)), abs(math.cos(u))) < SINGULAR_MARGIN

    return SurfaceChart(
        name="ruled",
        evaluate=evaluate,
        partials=partials,
        domain=Box((-math.pi / 2, 0.0, 0.0), (math.pi / 2, 2 * math.pi, 2 * math.pi)),
        sample_box=Box((0.3, 0.1, 0.1), (1.2, 6.1, 6.1)),
        is_singular=is_singular,
    )


def sphere_chart(r: float) -> SurfaceChart:
    """Lift of the geodesic sphere of radius r, for r in (0, pi/2).

    Chart (phi, s, t) -> (cos r e^{i phi}, sin r cos s, sin r sin s e^{it});
    the first component has modulus cos r everywhere, so the image consists of
    the points at distance r from the image of (1, 0, 0).  Singular at s near
    0 (the t-partial vanishes) and s near pi/2 (the horizontal parts of the
    phi- and t-partials become parallel).
    """
    if not 0.0 < r < math.pi / 2:
        raise ValueError(f"radius must lie in (0, pi/2), got {r}")
    cr, sr = math.cos(r), math.sin(r)

    def evaluate(phi: float, s: float, t: float) -> AmbientVector:
        return AmbientVector.of(
            cr * complex(math.cos(phi), math.sin(phi)),
            sr * math.cos(s),
            sr * math.sin(s) * complex(math.cos(t), math.sin(t)),
        )

    def partials(phi: float, s: float, t: float):
        eiphi = complex(math.cos(phi), math.sin(phi))
        eit = complex(math.cos(t), math.sin(t))
        cs, ss = math.cos(s), math.sin(s)
        dphi = AmbientVector.of(1j * cr * eiphi, 0.0, 0.0)
        ds = AmbientVector.of(0.0, -sr * ss, sr * cs * eit)
        dt = AmbientVector.of(0.0, 0.0, 1j * sr * ss * eit)
        return dphi, ds, dt

    def is_singular(phi: float, s: float, t: float) -> bool:
        return min(abs(math.sin(s)), abs(math.cos(s))) < SINGULAR_MARGIN

    return SurfaceChart(
        name=f"sphere:{r:.12g}",
        evaluate=evaluate,
        partials=partials,
        domain=Box((0.0, 0.0, 0.0), (2 * math.pi, math.pi / 2, 2 * math.pi)),
        sample_box=Box((0.1, 0.3, 0.1), (6.1, 1.2, 6.1)),
        is_singular=is_singular,
    )


class _TrigField:
    """A smooth R^6-valued displacement built from seeded trigonometric modes.

    Each of the six real components is a fixed sum of terms
    c * sin/cos(m1 u + m2 v + m3 t) with integer frequencies, so partial
    derivatives are available in closed form.
    """

    def __init__(self, seed: int, modes_per_component: int = 3):
        rng = np.random.default_rng(seed)
        self.terms: list[list[tuple[float, tuple[int, int, int], bool]]] = []
        for _ in range(6):
            comp = []
            for _ in range(modes_per_component):
                coef = float(rng.uniform(-1.0, 1.0))
                freq = tuple(int(k) for k in rng.integers(-2, 3, size=3))
                while freq == (0, 0, 0):
                    freq = tuple(int(k) for k in rng.integers(-2, 3, size=3))
                use_sin = bool(rng.integers(0, 2))
                comp.append((coef, freq, use_sin))
            self.terms.append(comp)

    def value(self, q: ParamTriple) -> np.ndarray:
        out = np.zeros(6)
        for k, comp in enumerate(self.terms):
            acc = 0.0
            for coef, (m1, m2, m3), use_sin in comp:
                arg = m1 * q[0] + m2 * q[1] + m3 * q[2]
                acc += coef * (math.sin(arg) if use_sin else math.cos(arg))
            out[k] = acc
        return out

    def partial(self, q: ParamTriple, axis: int) -> np.ndarray:
        out = np.zeros(6)
        for k, comp in enumerate(self.terms):
            acc = 0.0
            for coef, freq, use_sin in comp:
                m = freq[axis]
                if m == 0:
                    continue
                arg = freq[0] * q[0] + freq[1] * q[1] + freq[2] * q[2]
                acc += coef * m * (math.cos(arg) if use_sin else -math.sin(arg))
            out[k] = acc
        return out


def _to_complex3(six: np.ndarray) -> np.ndarray:
    return six[0::2] + 1j * six[1::2]


def perturbed_ruled_chart(epsilon: float, seed: int = 0) -> SurfaceChart:
    """The ruled chart displaced by epsilon times a seeded smooth field.

    The displaced point is renormalized to the unit sphere and the partials
    follow by the chain rule, so the result is again an exact chart.  With
    epsilon = 0 this is the ruled chart itself.
    """
    base = ruled_chart()
    field = _TrigField(seed)
    eps = float(epsilon)

    def raw(q: ParamTriple) -> np.ndarray:
        return base.evaluate(*q).z + eps * _to_complex3(field.value(q))

    def evaluate(u: float, v: float, t: float) -> AmbientVector:
        y = raw((u, v, t))
        return AmbientVector(y / np.linalg.norm(y))

    def partials(u: float, v: float, t: float):
        q = (u, v, t)
        y = raw(q)
        ny = float(np.linalg.norm(y))
        base_partials = base.partials(u, v, t)
        out = []
        for axis in range(3):
            dy = base_partials[axis].z + eps * _to_complex3(field.partial(q, axis))
            # d/da (y / |y|) with |y|^2 = <y, y> real
            dot = float(np.vdot(y, dy).real)
            out.append(AmbientVector(dy / ny - y * (dot / ny**3)))
        return tuple(out)

    return SurfaceChart(
        name=f"perturbed-ruled:{epsilon:.12g},{seed}",
        evaluate=evaluate,
        partials=partials,
        domain=base.domain,
        sample_box=base.sample_box,
        is_singular=base.is_singular,
    )
