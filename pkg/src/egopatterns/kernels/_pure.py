"""Numpy fallback kernels: Floyd-Warshall paths, path counting, triangles.

Shortest-path ties are detected with a small absolute+relative tolerance;
exact float equality is not stable across summation orders, and the compiled
backend uses the same convention so both agree bit-for-bit on unit-weight
graphs and to ~1e-12 elsewhere.
"""

import numpy as np

TIE_EPS = 1e-12


def _length_matrix(n, indptr, indices, lengths):
    D = np.full((n, n), np.inf)
    np.fill_diagonal(D, 0.0)
    if indices.size:
        rows = np.repeat(np.arange(n), np.diff(indptr))
        D[rows, indices] = lengths
    return D


def _floyd_warshall(D):
    n = D.shape[0]
    for k in range(n):
        np.minimum(D, D[:, k, None] + D[None, k, :], out=D)
    return D


def apsp(n, indptr, indices, lengths):
    """All-pairs shortest-path distances; inf where unreachable."""
    return _floyd_warshall(_length_matrix(n, indptr, indices, lengths))


def _apsp_with_counts(n, indptr, indices, lengths):
    """Distances plus shortest-path counts (sigma) per ordered pair."""
    D = _length_matrix(n, indptr, indices, lengths)
    S = np.zeros((n, n))
    S[np.isfinite(D)] = 1.0  # direct edges and the diagonal
    diag = np.eye(n, dtype=bool)
    for k in range(n):
        via = D[:, k, None] + D[None, k, :]
        tol = TIE_EPS * (1.0 + np.where(np.isfinite(via), via, 0.0))
        better = via < D - tol
        ties = np.abs(via - D) <= tol
        ties[k, :] = False
        ties[:, k] = False
        ties[diag] = False
        prod = S[:, k, None] * S[None, k, :]
        D[better] = via[better]
        S[better] = prod[better]
        S[ties] += prod[ties]
    return D, S


def betweenness_of(n, indptr, indices, lengths, v):
    """Raw betweenness of node v: sum over unordered pairs s,t (both != v)
    of the fraction of shortest s-t paths passing through v."""
    if n < 3:
        return 0.0
    D, S = _apsp_with_counts(n, indptr, indices, lengths)
    via_v = D[:, v][:, None] + D[v, :][None, :]
    tol = TIE_EPS * (1.0 + np.where(np.isfinite(D), D, 0.0))
    on_path = np.isfinite(D) & (np.abs(via_v - D) <= tol)
    on_path[v, :] = False
    on_path[:, v] = False
    np.fill_diagonal(on_path, False)
    on_path &= S > 0
    contrib = np.zeros((n, n))
    pair_counts = S[:, v][:, None] * S[v, :][None, :]
    contrib[on_path] = pair_counts[on_path] / S[on_path]
    return float(contrib.sum()) / 2.0


def local_efficiency_sum(n, indptr, indices, lengths):
    """Sum over nodes of the efficiency of their neighbor-induced subgraph.

    Nodes of degree < 2 contribute 0. Each term is Eq-1-normalized by
    k(k-1), so it is the plain efficiency of the small induced graph.
    """
    L0 = _length_matrix(n, indptr, indices, lengths)
    total = 0.0
    for i in range(n):
        nbrs = indices[indptr[i] : indptr[i + 1]]
        k = nbrs.size
        if k < 2:
            continue
        sub = L0[np.ix_(nbrs, nbrs)].copy()
        _floyd_warshall(sub)
        finite = np.isfinite(sub)
        np.fill_diagonal(finite, False)
        total += float((1.0 / sub[finite]).sum()) / (k * (k - 1))
    return total


def triangle_stats(n, indptr, indices):
    """(triangle count, connected-triple count) of the whole graph."""
    deg = np.diff(indptr)
    triples = int((deg * (deg - 1) // 2).sum())
    if indices.size == 0:
        return 0, triples
    A = np.zeros((n, n))
    rows = np.repeat(np.arange(n), deg)
    A[rows, indices] = 1.0
    triangles = int(round(((A @ A) * A).sum() / 6.0))
    return triangles, triples


def edges_among_neighbors(n, indptr, indices, v):
    """Number of edges whose both endpoints neighbor v."""
    nbrs = indices[indptr[v] : indptr[v + 1]]
    if nbrs.size < 2:
        return 0
    mark = np.zeros(n, dtype=bool)
    mark[nbrs] = True
    count = 0
    for u in nbrs:
        row = indices[indptr[u] : indptr[u + 1]]
        count += int(np.count_nonzero(mark[row] & (row > u)))
    return count
