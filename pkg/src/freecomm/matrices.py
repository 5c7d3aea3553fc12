"""Seeded finite-dimensional unitary models.

Randomness comes from numpy's Philox counter-based generator.  Sub-streams
are derived by hashing (master seed, path indices) through SeedSequence,
so independent trials are reproducible regardless of evaluation order or
thread count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

#: op-norm tolerance every constructed unitary must satisfy
UNITARY_OP_TOL = 1e-10

#: SVD is exact and cheap up to this size; power iteration above
_SVD_MAX_DIM = 64
_POWER_TOL = 1e-12
_POWER_MAX_ITER = 10_000


def subseed(master: int, *path: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(entropy=master, spawn_key=tuple(path))


def make_rng(seed: int | np.random.SeedSequence, *path: int) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        ss = seed if not path else np.random.SeedSequence(
            entropy=seed.entropy, spawn_key=tuple(seed.spawn_key) + tuple(path)
        )
    else:
        ss = subseed(int(seed), *path)
    return np.random.Generator(np.random.Philox(ss))


def as_array(u) -> np.ndarray:
    return u.array if isinstance(u, UnitaryMatrix) else np.asarray(u, dtype=complex)


def op_norm(a: np.ndarray) -> float:
    """Largest singular value: exact SVD for small matrices, power
    iteration on A*A with 1e-12 convergence above."""
    a = as_array(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("op_norm expects a square matrix")
    n = a.shape[0]
    if n <= _SVD_MAX_DIM:
        return float(np.linalg.svd(a, compute_uv=False)[0])
    rng = make_rng(0x0517EC7, n)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(_POWER_MAX_ITER):
        w = a @ v
        sigma_next = float(np.linalg.norm(w))  # |Av| with unit v
        v_next = a.conj().T @ w
        nv = np.linalg.norm(v_next)
        if nv == 0.0:
            return 0.0
        v = v_next / nv
        if abs(sigma_next - sigma) <= _POWER_TOL * max(1.0, sigma_next):
            return sigma_next
        sigma = sigma_next
    return sigma


def normalized_trace(u) -> complex:
    a = as_array(u)
    return complex(np.trace(a)) / a.shape[0]


def two_norm_dist(a, b) -> float:
    """Trace 2-norm distance, Frobenius norm scaled by 1/sqrt(N)."""
    a, b = as_array(a), as_array(b)
    if a.shape != b.shape:
        raise ValueError("dimension mismatch")
    return float(np.linalg.norm(a - b) / np.sqrt(a.shape[0]))


def unitarity_defect(u) -> float:
    """Upper bound on ||U*U - I||_op (Frobenius shortcut, exact op norm only
    when the cheap bound is not already conclusive)."""
    a = as_array(u)
    e = a.conj().T @ a - np.eye(a.shape[0])
    fro = float(np.linalg.norm(e))
    if fro <= UNITARY_OP_TOL:
        return fro
    return op_norm(e)


@dataclass(frozen=True)
class UnitaryMatrix:
    """An N x N unitary with provenance (construction kind, seed, params)."""

    array: np.ndarray
    provenance: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        a = np.asarray(self.array, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("unitary must be square")
        defect = unitarity_defect(a)
        if defect > UNITARY_OP_TOL:
            raise ValueError(f"matrix is not unitary: defect {defect:.3e}")
        a = a.copy()
        a.flags.writeable = False
        object.__setattr__(self, "array", a)
        object.__setattr__(self, "provenance", dict(self.provenance))

    @property
    def dim(self) -> int:
        return self.array.shape[0]

    def trace(self) -> complex:
        return normalized_trace(self.array)


def _orthonormalize_haar(z: np.ndarray) -> np.ndarray:
    """Householder QR of z with the triangular factor's diagonal phases
    divided out, so the result follows the exact Haar law.

    Implemented with fixed-order einsum/ufunc kernels instead of LAPACK:
    threaded BLAS splits reductions differently per thread count, and this
    routine must return bit-identical matrices in every environment.
    """
    n = z.shape[0]
    a = z.astype(complex).copy()
    reflectors: list[tuple[int, np.ndarray, float]] = []
    for k in range(n):
        x = a[k:, k]
        xnorm = float(np.sqrt(np.einsum("i,i->", x.conj(), x).real))
        alpha = x[0]
        s = alpha / abs(alpha) if abs(alpha) > 0 else 1.0 + 0j
        v = x.copy()
        v[0] += s * xnorm
        vnorm2 = float(np.einsum("i,i->", v.conj(), v).real)
        if vnorm2 > 0:
            w = np.einsum("i,ij->j", v.conj(), a[k:, k:])
            a[k:, k:] -= np.multiply.outer(v, (2.0 / vnorm2) * w)
        reflectors.append((k, v, vnorm2))
    r_diag = np.diagonal(a).copy()
    q = np.eye(n, dtype=complex)
    for k, v, vnorm2 in reversed(reflectors):
        if vnorm2 > 0:
            w = np.einsum("i,ij->j", v.conj(), q[k:, k:])
            q[k:, k:] -= np.multiply.outer(v, (2.0 / vnorm2) * w)
    mods = np.abs(r_diag)
    phases = np.where(mods > 0, r_diag / np.where(mods > 0, mods, 1.0), 1.0)
    return q * phases[np.newaxis, :]


def sample_haar(n: int, seed: int | np.random.SeedSequence) -> UnitaryMatrix:
    """Haar-distributed unitary, deterministic for a fixed (n, seed).

    Orthonormalizes an i.i.d. complex-Gaussian matrix and divides out the
    triangular factor's diagonal phases; the diagonal-phase correction
    makes the law exactly Haar rather than merely approximately so.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    rng = make_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    u = _orthonormalize_haar(z)
    entropy = seed.entropy if isinstance(seed, np.random.SeedSequence) else int(seed)
    return UnitaryMatrix(u, {"kind": "haar", "dim": n, "seed": entropy})


@dataclass(frozen=True)
class SpectralSpec:
    """Unit-modulus eigenvalues with weights summing to one."""

    eigenvalues: tuple[complex, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.eigenvalues) != len(self.weights) or not self.eigenvalues:
            raise ValueError("need matching, nonempty eigenvalue and weight lists")
        for lam in self.eigenvalues:
            if abs(abs(complex(lam)) - 1.0) > 1e-12:
                raise ValueError(f"eigenvalue {lam} is not unit modulus")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if abs(sum(self.weights) - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")

    def expected_trace(self) -> complex:
        return sum(w * complex(lam) for lam, w in zip(self.eigenvalues, self.weights))

    def multiplicities(self, n: int) -> list[int]:
        """Integer eigenvalue counts for dimension n (largest remainder)."""
        floors = [int(w * n) for w in self.weights]
        short = n - sum(floors)
        fracs = sorted(
            range(len(self.weights)),
            key=lambda i: (-(self.weights[i] * n - floors[i]), i),
        )
        for i in fracs[:short]:
            floors[i] += 1
        return floors


def unitary_from_spectrum(spec: SpectralSpec, n: int, seed) -> tuple[UnitaryMatrix, complex]:
    """Unitary with the prescribed spectrum in a Haar-rotated basis.

    Returns the matrix and its realized trace (exact from the integer
    multiplicities, which round the requested weights).
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    mults = spec.multiplicities(n)
    diag = np.concatenate(
        [np.full(m, complex(lam)) for lam, m in zip(spec.eigenvalues, mults)]
    )
    realized = complex(np.sum(diag)) / n
    q = sample_haar(n, seed).array
    u = (q * diag[np.newaxis, :]) @ q.conj().T
    prov = {
        "kind": "prescribed_spectrum",
        "dim": n,
        "multiplicities": mults,
        "seed": seed.entropy if isinstance(seed, np.random.SeedSequence) else int(seed),
    }
    return UnitaryMatrix(u, prov), realized


def unitary_with_trace(alpha: float, n: int, seed) -> tuple[UnitaryMatrix, float]:
    """Plus/minus-one spectrum realizing a target trace.

    round(n (1 + alpha) / 2) eigenvalues are +1 and the rest -1, conjugated
    by a Haar basis; the realized trace (multiplicity difference over n) is
    returned exactly.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if not -1.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [-1, 1]")
    m_plus = int(round(n * (1.0 + alpha) / 2.0))
    m_plus = min(max(m_plus, 0), n)
    realized = (2 * m_plus - n) / n
    diag = np.concatenate([np.ones(m_plus), -np.ones(n - m_plus)])
    prov = {"kind": "two_point_spectrum", "dim": n, "alpha": alpha, "m_plus": m_plus}
    if m_plus in (0, n):
        u = np.diag(diag).astype(complex)
    else:
        q = sample_haar(n, seed).array
        u = (q * diag[np.newaxis, :]) @ q.conj().T
        prov["seed"] = seed.entropy if isinstance(seed, np.random.SeedSequence) else int(seed)
    return UnitaryMatrix(u, prov), realized


def corner_haar(t: float, n: int, seed: int) -> UnitaryMatrix:
    """Haar unitary on a corner of relative size t, identity elsewhere,
    in a Haar-rotated basis.  Expected normalized trace is about 1 - t."""
    k = int(round(t * n))
    if not 1 <= k < n:
        raise ValueError(f"degenerate block sizes: corner {k} of {n}")
    h = sample_haar(k, subseed(seed, 0)).array
    q = sample_haar(n, subseed(seed, 1)).array
    block = np.eye(n, dtype=complex)
    block[:k, :k] = h
    u = q @ block @ q.conj().T
    return UnitaryMatrix(u, {"kind": "corner_haar", "dim": n, "t": t, "seed": int(seed)})


def matrix_commutator(u, v) -> np.ndarray:
    a, b = as_array(u), as_array(v)
    if a.shape != b.shape:
        raise ValueError("dimension mismatch")
    return a @ b @ a.conj().T @ b.conj().T


@dataclass(frozen=True)
class FreenessReport:
    """Deviations of a matrix pair from the free trace identities."""

    dim: int
    tau_u: complex
    tau_v: complex
    tau_uv: complex
    tau_commutator: complex
    d1: float  # |tau(UV) - tau(U) tau(V)|
    d2: float  # |tau(UVU*V*) - (1 - (1-|tau U|^2)(1-|tau V|^2))|

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "tau_u": [self.tau_u.real, self.tau_u.imag],
            "tau_v": [self.tau_v.real, self.tau_v.imag],
            "tau_uv": [self.tau_uv.real, self.tau_uv.imag],
            "tau_commutator": [self.tau_commutator.real, self.tau_commutator.imag],
            "d1": self.d1,
            "d2": self.d2,
        }


def freeness_report(u, v) -> FreenessReport:
    a, b = as_array(u), as_array(v)
    if a.shape != b.shape:
        raise ValueError("dimension mismatch")
    tu, tv = normalized_trace(a), normalized_trace(b)
    tuv = normalized_trace(a @ b)
    tcomm = normalized_trace(matrix_commutator(a, b))
    d1 = abs(tuv - tu * tv)
    rhs = 1.0 - (1.0 - abs(tu) ** 2) * (1.0 - abs(tv) ** 2)
    d2 = abs(tcomm - rhs)
    return FreenessReport(a.shape[0], tu, tv, tuv, tcomm, d1, d2)


def freeness_trial(n: int, master_seed: int, trial: int) -> FreenessReport:
    """Independent Haar pair for one seeded trial."""
    u = sample_haar(n, subseed(master_seed, trial, 0))
    v = sample_haar(n, subseed(master_seed, trial, 1))
    return freeness_report(u, v)
