"""Truncated singular value decomposition of sparse adjacency matrices."""

from enum import Enum

import numpy as np
import scipy.linalg as la
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, eigsh, svds

from src.config import get_settings
from src.errors import NumericalError, ParameterError
from src.models.graph import SparseAdjacency
from src.models.spectrum import SingularSpectrum, SvdFactors
from src.utils.logger import get_logger

logger = get_logger(__name__)


class SvdMethod(str, Enum):
    AUTO = "auto"
    DENSE = "dense"
    SPARSE = "sparse"


def truncated_svd(
    a: SparseAdjacency,
    k: int,
    *,
    tol: float | None = None,
    max_iter: int | None = None,
    seed: int | None = None,
    method: SvdMethod | str = SvdMethod.AUTO,
) -> SingularSpectrum:
    """The ``k`` largest singular values of A (all of them when n < k)."""
    _, values, _, converged = _decompose(
        a, k, tol=tol, max_iter=max_iter, seed=seed, method=method, want_vectors=False
    )
    return SingularSpectrum(
        tuple(values.tolist()), k_requested=k, n_nodes=a.n_nodes, converged=converged
    )


def svd_factors(
    a: SparseAdjacency,
    k: int,
    *,
    tol: float | None = None,
    max_iter: int | None = None,
    seed: int | None = None,
    method: SvdMethod | str = SvdMethod.AUTO,
) -> SvdFactors:
    """
    Truncated factors with orthonormal columns.

    For undirected graphs the right vectors equal the left vectors up to a
    per-component sign.
    """
    left, values, right, _ = _decompose(
        a, k, tol=tol, max_iter=max_iter, seed=seed, method=method, want_vectors=True
    )
    return SvdFactors(left=left, values=values, right=right)


def _resolve_method(n: int, k: int, method: SvdMethod, dense_limit: int) -> SvdMethod:
    # ARPACK needs k < n; anything wider is a full decomposition anyway
    if k >= n - 1:
        return SvdMethod.DENSE
    if method is SvdMethod.AUTO:
        return SvdMethod.DENSE if n <= dense_limit else SvdMethod.SPARSE
    return method


def _decompose(
    a: SparseAdjacency,
    k: int,
    *,
    tol: float | None,
    max_iter: int | None,
    seed: int | None,
    method: SvdMethod | str,
    want_vectors: bool,
) -> tuple[np.ndarray | None, np.ndarray, np.ndarray | None, bool]:
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")

    settings = get_settings()
    tol = settings.svd_tolerance if tol is None else tol
    max_iter = settings.svd_max_iter if max_iter is None else max_iter
    seed = settings.master_seed if seed is None else seed

    n = a.n_nodes
    n_values = min(k, n)

    if a.is_empty:
        logger.debug(f"Empty graph on {n} nodes; returning a zero spectrum")
        basis = np.eye(n)[:, :n_values] if want_vectors else None
        return basis, np.zeros(n_values), basis, True

    resolved = _resolve_method(n, n_values, SvdMethod(method), settings.dense_svd_limit)
    logger.debug(
        f"SVD n={n} nnz={a.nnz} k={n_values} method={resolved.value} "
        f"directed={a.directed} tol={tol}"
    )

    if resolved is SvdMethod.DENSE:
        left, values, right = _dense(a, n_values, want_vectors)
        converged = True
    else:
        left, values, right, converged = _sparse(a, n_values, tol, max_iter, seed)

    order = np.argsort(-values, kind="stable")
    values = np.clip(values[order], 0.0, None)
    if left is not None:
        left, right = _normalise_signs(left[:, order], right[:, order])
    if not want_vectors:
        left = right = None
    return left, values, right, converged


def _dense(
    a: SparseAdjacency, n_values: int, want_vectors: bool
) -> tuple[np.ndarray | None, np.ndarray, np.ndarray | None]:
    dense = a.to_dense()

    if not a.directed:
        if not want_vectors:
            eigvals = la.eigvalsh(dense)
            return None, np.sort(np.abs(eigvals))[::-1][:n_values], None
        eigvals, eigvecs = la.eigh(dense)
        order = np.argsort(-np.abs(eigvals), kind="stable")[:n_values]
        return _symmetric_pair(eigvals[order], eigvecs[:, order])

    if not want_vectors:
        return None, la.svdvals(dense)[:n_values], None
    u, s, vt = la.svd(dense)
    return u[:, :n_values], s[:n_values], vt[:n_values].T


def _sparse(
    a: SparseAdjacency, n_values: int, tol: float, max_iter: int | None, seed: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, bool]:
    rng = np.random.default_rng(seed)
    v0 = rng.uniform(-1.0, 1.0, size=a.n_nodes)

    try:
        if not a.directed:
            eigvals, eigvecs = eigsh(
                a.matrix, k=n_values, which="LM", tol=tol, maxiter=max_iter, v0=v0
            )
            left, values, right = _symmetric_pair(eigvals, eigvecs)
        else:
            u, s, vt = svds(
                a.matrix, k=n_values, tol=tol, maxiter=max_iter, v0=v0, solver="arpack"
            )
            left, values, right = u, s, vt.T
        return left, values, right, True
    except (ArpackNoConvergence, ArpackError) as e:
        logger.warning(f"ARPACK did not converge ({e}); falling back to LOBPCG")

    try:
        u, s, vt = svds(
            a.matrix,
            k=n_values,
            tol=tol,
            maxiter=max_iter,
            solver="lobpcg",
            random_state=np.random.default_rng(seed),
        )
    except Exception as e:
        logger.error(f"LOBPCG fallback failed: {e}")
        raise NumericalError(f"truncated SVD failed to converge: {e}") from e
    return u, s, vt.T, False


def _symmetric_pair(
    eigvals: np.ndarray, eigvecs: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular triplets of a symmetric matrix from its eigenpairs."""
    signs = np.where(eigvals < 0, -1.0, 1.0)
    return eigvecs, np.abs(eigvals), eigvecs * signs


def _normalise_signs(left: np.ndarray, right: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Flip each component so the largest-magnitude entry of its left vector is positive."""
    pivots = np.argmax(np.abs(left), axis=0)
    signs = np.sign(left[pivots, np.arange(left.shape[1])])
    signs[signs == 0] = 1.0
    return left * signs, right * signs
