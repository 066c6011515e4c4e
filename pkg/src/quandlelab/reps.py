"""Quandle representations over complex vector spaces.

A representation sends each quandle element to an invertible matrix so that
rho(x > y) = rho(y) rho(x) rho(y)^{-1}.  The regular representation acts by
permutation matrices; its invariant subspaces are exactly the invariant
subspaces of the (finite) group generated by the image, which is what makes
the commutant-averaging decomposition below complete.  For images that
generate an infinite group the decomposition degrades to a search for
one-dimensional invariant subspaces and reports incompleteness instead of
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    ClosureBudgetError,
    GroupNotFiniteError,
    InvalidParamsError,
    NotHomomorphismError,
    SingularMatrixError,
    ToleranceFailureError,
)
from .quandles import Quandle, perm_closure

INVARIANCE_TOL = 1e-9
CLUSTER_TOL = 1e-8


class QuandleRep:
    """A validated map element -> invertible complex matrix."""

    def __init__(self, quandle: Quandle, matrices: np.ndarray):
        self.quandle = quandle
        self.matrices = np.ascontiguousarray(matrices, dtype=complex)
        self.dim = int(self.matrices.shape[1])

    def mat(self, x: int) -> np.ndarray:
        return self.matrices[x]

    def distinct_matrices(self) -> list[np.ndarray]:
        seen = {}
        for m in self.matrices:
            seen.setdefault(m.round(9).tobytes(), m)
        return list(seen.values())

    def __repr__(self) -> str:
        return f"QuandleRep({self.quandle!r}, dim={self.dim})"


@dataclass
class RepCheck:
    ok: bool
    violations: list[tuple[int, int, float]]
    singular: list[int]


def validate_rep(Q: Quandle, matrices, tol: float = INVARIANCE_TOL) -> RepCheck:
    """Report conjugation-law residuals and singular images without raising."""
    mats = _as_matrix_stack(Q, matrices)
    singular = [x for x in range(Q.order)
                if abs(np.linalg.det(mats[x])) < tol]
    violations = []
    inv = [None if x in singular else np.linalg.inv(mats[x]) for x in range(Q.order)]
    for y in range(Q.order):
        if inv[y] is None:
            continue
        for x in range(Q.order):
            lhs = mats[Q.op(x, y)]
            rhs = mats[y] @ mats[x] @ inv[y]
            res = float(np.linalg.norm(lhs - rhs))
            if res > tol:
                violations.append((x, y, res))
    return RepCheck(ok=not singular and not violations,
                    violations=violations, singular=singular)


def check_rep(Q: Quandle, matrices, tol: float = INVARIANCE_TOL) -> QuandleRep:
    """Validate and wrap; raises with the violating pairs on failure."""
    report = validate_rep(Q, matrices, tol)
    if report.singular:
        raise SingularMatrixError(f"singular image at elements {report.singular}")
    if report.violations:
        raise NotHomomorphismError(report.violations)
    return QuandleRep(Q, _as_matrix_stack(Q, matrices))


def _as_matrix_stack(Q: Quandle, matrices) -> np.ndarray:
    if isinstance(matrices, dict):
        dims = {np.asarray(m).shape for m in matrices.values()}
        if len(dims) != 1:
            raise InvalidParamsError(f"inconsistent matrix shapes {dims}")
        d = dims.pop()[0]
        stack = np.zeros((Q.order, d, d), dtype=complex)
        for x in range(Q.order):
            stack[x] = np.asarray(matrices[x], dtype=complex)
        return stack
    stack = np.asarray(matrices, dtype=complex)
    if stack.ndim != 3 or stack.shape[0] != Q.order or stack.shape[1] != stack.shape[2]:
        raise InvalidParamsError(f"expected {Q.order} square matrices, got {stack.shape}")
    return stack


def matrix_to_json(M) -> list:
    """Complex matrix as nested lists of [re, im] pairs."""
    M = np.asarray(M, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in M]


def matrix_from_json(data) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in data])


def regular_rep(Q: Quandle) -> QuandleRep:
    """Permutation matrices of the right action: rho(t) e_x = e_{x > t}."""
    n = Q.order
    mats = np.zeros((n, n, n), dtype=complex)
    for t in range(n):
        for x in range(n):
            mats[t, Q.op(x, t), x] = 1.0
    return QuandleRep(Q, mats)


def is_permutation_rep(rep: QuandleRep, tol: float = 1e-12) -> bool:
    m = rep.matrices
    if not np.allclose(m.imag, 0, atol=tol):
        return False
    r = m.real
    binary = np.all(np.isclose(r, 0, atol=tol) | np.isclose(r, 1, atol=tol))
    return bool(binary
                and np.allclose(r.sum(axis=1), 1, atol=tol)
                and np.allclose(r.sum(axis=2), 1, atol=tol))


@dataclass
class Subspace:
    """An invariant subspace carried as an orthonormal column basis."""

    basis: np.ndarray  # (d, k), basis^H basis = I

    @classmethod
    def from_span(cls, columns, tol: float = 1e-10) -> "Subspace":
        cols = np.atleast_2d(np.asarray(columns, dtype=complex))
        if cols.shape[0] == 1 and cols.shape[1] > 1:
            cols = cols.T
        u, s, _ = np.linalg.svd(cols, full_matrices=False)
        rank = int(np.sum(s > tol * max(s[0], 1.0))) if s.size else 0
        return cls(np.ascontiguousarray(u[:, :rank]))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def restrict(self, matrix: np.ndarray) -> np.ndarray:
        return self.basis.conj().T @ matrix @ self.basis


def invariance_residual(rep: QuandleRep, subspace: Subspace) -> float:
    """max over x of || (I - P) rho(x) B ||_F; zero iff the span is invariant."""
    B = subspace.basis
    P = subspace.projector()
    I = np.eye(rep.dim)
    return max(float(np.linalg.norm((I - P) @ rep.mat(x) @ B))
               for x in range(rep.quandle.order))


def augmentation_split(rep: QuandleRep) -> tuple[Subspace, Subspace]:
    """Split a permutation representation into the constants and the
    sum-zero complement; both are invariant."""
    if not is_permutation_rep(rep):
        raise InvalidParamsError("augmentation split needs a permutation representation")
    d = rep.dim
    ones = Subspace(np.full((d, 1), 1 / np.sqrt(d), dtype=complex))
    comp = Subspace(np.ascontiguousarray(
        scipy.linalg.null_space(np.ones((1, d))).astype(complex)))
    return ones, comp


# -- finite matrix groups and commutants --

def _finite_order_precheck(g: np.ndarray) -> None:
    """Necessary conditions for g to lie in a finite matrix group: all
    eigenvalues on the unit circle and g diagonalizable.  Catches unipotent
    or scaling generators immediately, long before any closure cap."""
    vals, vecs = np.linalg.eig(g)
    if np.max(np.abs(np.abs(vals) - 1)) > 1e-6:
        raise GroupNotFiniteError("a generator has an eigenvalue off the unit circle")
    if np.linalg.cond(vecs) > 1e10:
        raise GroupNotFiniteError("a generator is not diagonalizable")


def matrix_group(rep: QuandleRep, cap: int = 10 ** 6) -> list[np.ndarray]:
    """Closure of the image matrices under multiplication.

    Permutation representations close over exact permutations; otherwise
    closure hashes matrices rounded well below the working tolerance.
    Raises GroupNotFiniteError when the cap is hit.
    """
    if is_permutation_rep(rep):
        perms = sorted({tuple(int(np.argmax(rep.matrices[t].real[:, j]))
                              for j in range(rep.dim))
                        for t in range(rep.quandle.order)})
        try:
            closed = perm_closure(list(perms), cap)
        except ClosureBudgetError as exc:
            raise GroupNotFiniteError(str(exc)) from exc
        out = []
        for p in closed:
            m = np.zeros((rep.dim, rep.dim), dtype=complex)
            for j, pj in enumerate(p):
                m[pj, j] = 1.0
            out.append(m)
        return out

    gens = rep.distinct_matrices()
    for g in gens:
        _finite_order_precheck(g)
    norm_bound = 1e6 * max(float(np.linalg.norm(g)) for g in gens)
    key = lambda m: m.round(7).tobytes()
    elements = {key(np.eye(rep.dim, dtype=complex)): np.eye(rep.dim, dtype=complex)}
    queue = list(elements.values())
    while queue:
        h = queue.pop()
        for g in gens:
            gh = g @ h
            if float(np.linalg.norm(gh)) > norm_bound:
                raise GroupNotFiniteError("matrix products grow without bound")
            k = key(gh)
            if k not in elements:
                if len(elements) >= cap:
                    raise GroupNotFiniteError(f"matrix closure exceeded cap {cap}")
                elements[k] = gh
                queue.append(gh)
    return list(elements.values())


def commutant_dimension(mats: list[np.ndarray], tol: float = 1e-8) -> int:
    """Dimension of {X : XM = MX for all M}, via the nullspace of the
    stacked Sylvester operators."""
    k = mats[0].shape[0]
    I = np.eye(k)
    A = np.vstack([np.kron(m, I) - np.kron(I, m.T) for m in mats])
    s = np.linalg.svd(A, compute_uv=False)  # len(s) == k*k
    cutoff = tol * max(s[0], 1.0)
    return int(np.sum(s <= cutoff))


def _cluster_real(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Indices of values grouped by gaps larger than tol (relative)."""
    order = np.argsort(values)
    scale = max(1.0, float(np.max(np.abs(values))) if values.size else 1.0)
    groups = [[order[0]]]
    for idx in order[1:]:
        if values[idx] - values[groups[-1][-1]] > tol * scale:
            groups.append([idx])
        else:
            groups[-1].append(idx)
    return [np.array(g) for g in groups]


def cluster_complex(values: np.ndarray, tol: float = CLUSTER_TOL) -> list[np.ndarray]:
    """Greedy clustering of complex values at relative tolerance."""
    scale = max(1.0, float(np.max(np.abs(values))) if values.size else 1.0)
    remaining = list(range(len(values)))
    clusters = []
    while remaining:
        seed = remaining.pop(0)
        group = [seed]
        changed = True
        while changed:
            changed = False
            for idx in remaining[:]:
                if any(abs(values[idx] - values[g]) <= tol * scale for g in group):
                    group.append(idx)
                    remaining.remove(idx)
                    changed = True
        clusters.append(np.array(sorted(group)))
    return clusters


@dataclass
class Part:
    subspace: Subspace
    label: object = None          # IrrepLabel once attached
    irreducible: bool | None = None
    generator_desc: str = ""

    @property
    def dim(self) -> int:
        return self.subspace.dim


@dataclass
class Decomposition:
    parts: list[Part]
    complete: bool = True
    residual_dim: int = 0

    @property
    def dims(self) -> list[int]:
        return [p.dim for p in self.parts]

    def label_multiset(self):
        from collections import Counter
        return Counter(str(p.label) for p in self.parts)


def _sorted_parts(parts: list[Part]) -> list[Part]:
    def keyfn(p: Part):
        b = p.subspace.basis.round(6)
        return (p.dim, tuple(np.concatenate([b.real.ravel(), b.imag.ravel()]).tolist()))
    return sorted(parts, key=keyfn)


def decompose(rep: QuandleRep, tol: float = INVARIANCE_TOL,
              cluster_tol: float = CLUSTER_TOL, seed: int = 0,
              cap: int = 10 ** 6, label: bool = True) -> Decomposition:
    """Split a representation into irreducible invariant subspaces.

    When the image matrices generate a finite group, a random Hermitian
    matrix is averaged into the commutant; eigenspaces of the average are
    invariant, and recursion stops where the restricted commutant has
    dimension one (Schur certificate).  For an infinite image group the
    fallback collects one-dimensional invariant subspaces and flags the
    decomposition as incomplete if they do not exhaust the space.
    """
    try:
        group = matrix_group(rep, cap)
    except GroupNotFiniteError:
        return _decompose_infinite(rep, tol)

    # a finite matrix group can always be made unitary: average the Gram
    # matrix over the group and conjugate by its square root
    back = None
    work = rep
    if not all(np.allclose(g.conj().T @ g, np.eye(rep.dim), atol=1e-9) for g in group):
        S = sum(g.conj().T @ g for g in group) / len(group)
        T = scipy.linalg.sqrtm(S)
        Tinv = np.linalg.inv(T)
        work = QuandleRep(rep.quandle,
                          np.array([T @ m @ Tinv for m in rep.matrices]))
        group = [T @ g @ Tinv for g in group]
        back = Tinv

    rng = np.random.default_rng(seed)
    gens = work.distinct_matrices()
    parts: list[Part] = []

    def split(basis: np.ndarray):
        sub = Subspace(basis)
        restricted_gens = [sub.restrict(g) for g in gens]
        if sub.dim == 1 or commutant_dimension(restricted_gens) == 1:
            parts.append(Part(sub, irreducible=True))
            return
        restricted_group = [sub.restrict(g) for g in group]
        for attempt in range(6):
            H = rng.standard_normal((sub.dim, sub.dim)) + 1j * rng.standard_normal(
                (sub.dim, sub.dim))
            H = H + H.conj().T
            avg = sum(g @ H @ g.conj().T for g in restricted_group) / len(restricted_group)
            avg = (avg + avg.conj().T) / 2
            vals, vecs = np.linalg.eigh(avg)
            clusters = _cluster_real(vals, cluster_tol)
            if len(clusters) > 1:
                for idx in clusters:
                    q, _ = np.linalg.qr(vecs[:, idx])
                    split(basis @ q)
                return
        raise ToleranceFailureError(
            "could not separate eigenvalue clusters of the averaged commutant element")

    split(np.eye(rep.dim, dtype=complex))
    if back is not None:
        parts = [Part(Subspace.from_span(back @ p.subspace.basis),
                      irreducible=p.irreducible) for p in parts]
        stacked = np.hstack([p.subspace.basis for p in parts])
        if np.linalg.matrix_rank(stacked, tol=1e-9) != rep.dim:
            raise ToleranceFailureError("transformed parts do not span the space")
    parts = _sorted_parts(parts)
    for p in parts:
        res = invariance_residual(rep, p.subspace)
        if res > tol:
            raise ToleranceFailureError(f"part invariance residual {res:.2e} exceeds {tol}")
    decomp = Decomposition(parts=parts, complete=True)
    if label:
        from .dihedral_reps import label_parts
        label_parts(rep, decomp)
    return decomp


def _common_eigen_lines(mats: list[np.ndarray], tol: float = 1e-9) -> list[np.ndarray]:
    """Unit vectors spanning all one-dimensional common invariant subspaces."""
    d = mats[0].shape[0]

    def recurse(basis: np.ndarray, remaining: list[np.ndarray]) -> list[np.ndarray]:
        if basis.shape[1] == 0:
            return []
        for i, m in enumerate(remaining):
            r = basis.conj().T @ m @ basis
            scale = max(1.0, float(np.linalg.norm(r)))
            if np.linalg.norm(r - (np.trace(r) / r.shape[0]) * np.eye(r.shape[0])) \
                    > tol * scale:
                vals = np.linalg.eigvals(r)
                lines: list[np.ndarray] = []
                for idx in cluster_complex(vals, 1e-8):
                    lam = vals[idx].mean()
                    eigbasis = scipy.linalg.null_space(r - lam * np.eye(r.shape[0]),
                                                       rcond=1e-10)
                    if eigbasis.shape[1] == 0:
                        continue
                    sub = basis @ eigbasis
                    q, _ = np.linalg.qr(sub)
                    lines.extend(recurse(q, remaining[i + 1:] + remaining[:i]))
                return lines
        return [basis[:, j] for j in range(basis.shape[1])]

    return recurse(np.eye(d, dtype=complex), mats)


def _decompose_infinite(rep: QuandleRep, tol: float) -> Decomposition:
    from .dihedral_reps import opaque

    gens = rep.distinct_matrices()
    lines = _common_eigen_lines(gens, tol)
    parts: list[Part] = []
    span: np.ndarray | None = None
    for v in lines:
        cand = v.reshape(-1, 1) if span is None else np.hstack([span, v.reshape(-1, 1)])
        if np.linalg.matrix_rank(cand, tol=1e-9) == cand.shape[1]:
            span = cand
            parts.append(Part(Subspace.from_span(v.reshape(-1, 1)),
                              label=opaque(1), irreducible=True))
    covered = 0 if span is None else span.shape[1]
    return Decomposition(parts=_sorted_parts(parts),
                         complete=(covered == rep.dim),
                         residual_dim=rep.dim - covered)


def is_irreducible(rep: QuandleRep, subspace: Subspace,
                   cap: int = 10 ** 6, tol: float = 1e-8) -> bool:
    """Schur certificate on an invariant subspace: the commutant of the
    restricted (finite) image group has dimension one."""
    restricted = [subspace.restrict(m) for m in rep.distinct_matrices()]
    # certificate is only valid for a finite image group
    for g in restricted:
        _finite_order_precheck(g)
    norm_bound = 1e6 * max(float(np.linalg.norm(g)) for g in restricted)
    key = lambda m: m.round(7).tobytes()
    elements = {key(np.eye(subspace.dim, dtype=complex))}
    queue = [np.eye(subspace.dim, dtype=complex)]
    while queue:
        h = queue.pop()
        for g in restricted:
            gh = g @ h
            if float(np.linalg.norm(gh)) > norm_bound:
                raise GroupNotFiniteError("restricted products grow without bound")
            k = key(gh)
            if k not in elements:
                if len(elements) >= cap:
                    raise GroupNotFiniteError(f"restricted closure exceeded cap {cap}")
                elements.add(k)
                queue.append(gh)
    if subspace.dim == 1:
        return True
    return commutant_dimension(restricted, tol) == 1


def invariant_complement_exists(rep: QuandleRep, W: Subspace,
                                tol: float = 1e-8) -> Subspace | None:
    """Find an invariant complement of the invariant subspace W, or None.

    Candidate complements are graphs {u + T u} of linear maps T from a
    fixed orthogonal complement U0 into W; invariance under every image
    matrix is linear in T, so existence is the solvability of one least
    squares system.
    """
    res = invariance_residual(rep, W)
    if res > 1e-7:
        raise InvalidParamsError(f"W is not invariant (residual {res:.2e})")
    d = rep.dim
    k = W.dim
    if k == d:
        return None
    U0 = Subspace(np.ascontiguousarray(
        scipy.linalg.null_space(W.basis.conj().T).astype(complex)))
    m = U0.dim
    BW, BU = W.basis, U0.basis
    Ik, Im = np.eye(k), np.eye(m)
    blocks, rhs = [], []
    for g in rep.distinct_matrices():
        A = BW.conj().T @ g @ BW       # action on W
        Bg = BW.conj().T @ g @ BU      # leakage U0 -> W
        D = BU.conj().T @ g @ BU       # action on U0
        blocks.append(np.kron(Ik, D.T) - np.kron(A, Im))  # vec(TD) - vec(AT)
        rhs.append(Bg.reshape(-1))
    Amat = np.vstack(blocks)
    bvec = np.concatenate(rhs)
    sol, *_ = np.linalg.lstsq(Amat, bvec, rcond=None)
    if np.linalg.norm(Amat @ sol - bvec) > tol * max(1.0, np.linalg.norm(bvec)):
        return None
    T = sol.reshape(k, m)
    comp = Subspace.from_span(BU + BW @ T)
    if comp.dim != m:
        return None
    if invariance_residual(rep, comp) > 1e-7:
        return None
    if np.linalg.matrix_rank(np.hstack([W.basis, comp.basis]), tol=1e-9) != d:
        return None
    return comp
