"""Hot loops: precoloring-extension masks and ear-insertion expansion.

Set ``PLANECOLOR_DISABLE_NUMBA=1`` to run without numba.  The mask then uses
a vectorised numpy expansion; the generator kernels run as plain Python over
the same arrays (slow, only sensible for small budgets).
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("PLANECOLOR_DISABLE_NUMBA", "").strip().lower()
USE_NUMBA = _FLAG not in ("1", "true", "yes", "on")

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if USE_NUMBA:
    def _jit(fn):
        return numba.njit(cache=True, nogil=True)(fn)
else:
    def _jit(fn):
        return fn

SEP = -1
PAD = -2


# ---------------------------------------------------------------------------
# extendability masks
# ---------------------------------------------------------------------------

@_jit
def _mask_dfs(adj, rverts, order):
    n = adj.shape[0]
    k = rverts.shape[0]
    m = order.shape[0]
    total = 3 ** k
    mask = np.zeros(total, dtype=np.uint8)
    col = np.full(n, -1, dtype=np.int64)
    for idx in range(total):
        x = idx
        for i in range(k - 1, -1, -1):
            col[rverts[i]] = x % 3
            x //= 3
        ok = True
        for i in range(k):
            a = rverts[i]
            for j in range(i + 1, k):
                b = rverts[j]
                if adj[a, b] and col[a] == col[b]:
                    ok = False
        if not ok:
            continue
        # iterative backtracking over the internal vertices
        depth = 0
        found = m == 0
        while depth >= 0 and not found:
            v = order[depth]
            c = col[v] + 1
            placed = False
            while c < 3:
                clash = False
                for w in range(n):
                    if adj[v, w] and col[w] == c:
                        clash = True
                        break
                if not clash:
                    col[v] = c
                    placed = True
                    break
                c += 1
            if placed:
                depth += 1
                if depth == m:
                    found = True
            else:
                col[v] = -1
                depth -= 1
        for j in range(m):
            col[order[j]] = -1
        if found:
            mask[idx] = 1
    return mask


def _mask_numpy(adj, rverts, order):
    """Vectorised: grow the table of all partial proper colourings vertex by vertex."""
    k = len(rverts)
    total = 3 ** k
    idx = np.arange(total)
    digits = np.empty((total, k), dtype=np.int8)
    x = idx.copy()
    for i in range(k - 1, -1, -1):
        digits[:, i] = x % 3
        x //= 3
    seq = list(rverts) + list(order)
    pos = {v: i for i, v in enumerate(seq)}
    good = np.ones(total, dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            if adj[rverts[i], rverts[j]]:
                good &= digits[:, i] != digits[:, j]
    table = digits[good]
    owner = idx[good]
    for v in order:
        earlier = [pos[w] for w in seq[: pos[v]] if adj[v, w]]
        n_rows = table.shape[0]
        table = np.repeat(table, 3, axis=0)
        owner = np.repeat(owner, 3)
        newcol = np.tile(np.arange(3, dtype=np.int8), n_rows)
        keep = np.ones(table.shape[0], dtype=bool)
        for p in earlier:
            keep &= table[:, p] != newcol
        table = np.concatenate([table, newcol[:, None]], axis=1)[keep]
        owner = owner[keep]
    mask = np.zeros(total, dtype=np.uint8)
    mask[np.unique(owner)] = 1
    return mask


def extension_mask(adj: np.ndarray, rverts, order, backend: str | None = None) -> np.ndarray:
    """For every assignment of colours 0..2 to ``rverts`` (base-3 index, first
    vertex most significant) report whether it extends to a proper 3-colouring
    of the whole graph.  ``order`` lists the remaining vertices."""
    adj = np.ascontiguousarray(adj, dtype=np.uint8)
    rverts = np.asarray(rverts, dtype=np.int64)
    order = np.asarray(order, dtype=np.int64)
    if backend is None:
        backend = "numba" if USE_NUMBA else "numpy"
    if backend == "numpy":
        return _mask_numpy(adj, rverts, order)
    if backend == "numba":
        return _mask_dfs(adj, rverts, order)
    raise ValueError(f"unknown backend {backend!r}")


# ---------------------------------------------------------------------------
# ear-insertion generator
# ---------------------------------------------------------------------------
# A graph travels as its rooted canonical code (int8 row): n, then for each
# vertex in label order its neighbours clockwise followed by SEP, padded with
# PAD.  Decoding gives a rotation system whose outer face holds dart (0, 1).

@_jit
def _decode(code, rot, deg):
    n = code[0]
    k = 1
    for v in range(n):
        d = 0
        while code[k] != SEP:
            rot[v, d] = code[k]
            d += 1
            k += 1
        deg[v] = d
        k += 1
    return n


@_jit
def _positions(rot, deg, n, pos):
    for v in range(n):
        for u in range(n):
            pos[v, u] = -1
        for j in range(deg[v]):
            pos[v, rot[v, j]] = j


@_jit
def _trace(rot, deg, n, pos, fid, fwalk, fstart, flen):
    for v in range(n):
        for j in range(deg[v]):
            fid[v, j] = -1
    nf = 0
    w = 0
    for v in range(n):
        for j in range(deg[v]):
            if fid[v, j] >= 0:
                continue
            fstart[nf] = w
            a = v
            jj = j
            while fid[a, jj] < 0:
                fid[a, jj] = nf
                fwalk[w] = a
                w += 1
                b = rot[a, jj]
                jj = (pos[b, a] + 1) % deg[b]
                a = b
            flen[nf] = w - fstart[nf]
            nf += 1
    return nf


@_jit
def _bfs_code_cmp(rot, deg, n, pos, s, t, mirror, out, best, state, lab, order, first):
    """Write the code started at dart (s, t) into ``out``.

    ``state`` 0: ``best`` unset.  1: compare while writing.  Returns -1 if the
    new code is larger than ``best`` (abandoned), 0 if equal, 1 if smaller or
    ``best`` unset.
    """
    for v in range(n):
        lab[v] = -1
    lab[s] = 0
    order[0] = s
    first[s] = t
    cnt = 1
    head = 0
    k = 0
    cmp = 1 if state == 0 else 0
    out[k] = n
    k += 1
    while head < cnt:
        v = order[head]
        head += 1
        d = deg[v]
        p = pos[v, first[v]]
        for jj in range(d):
            if mirror:
                w = rot[v, (p - jj) % d]
            else:
                w = rot[v, (p + jj) % d]
            if lab[w] < 0:
                lab[w] = cnt
                order[cnt] = w
                first[w] = v
                cnt += 1
            out[k] = lab[w]
            if cmp == 0:
                if out[k] < best[k]:
                    cmp = 1
                elif out[k] > best[k]:
                    return -1
            k += 1
        out[k] = SEP
        if cmp == 0 and best[k] != SEP:
            # SEP sorts below every label
            cmp = 1
        k += 1
    for i in range(k, out.shape[0]):
        out[i] = PAD
    return cmp


@_jit
def _canonical(rot, deg, n, pos, outer, L, best, tmp, lab, order, first):
    state = 0
    for i in range(L):
        a = outer[i]
        b = outer[(i + 1) % L]
        for mirror in range(2):
            if mirror == 0:
                r = _bfs_code_cmp(rot, deg, n, pos, a, b, False, tmp, best, state, lab, order, first)
            else:
                r = _bfs_code_cmp(rot, deg, n, pos, b, a, True, tmp, best, state, lab, order, first)
            if r == 1:
                for q in range(best.shape[0]):
                    best[q] = tmp[q]
                state = 1


@_jit
def _count_paths(rot, deg, n, a, b, maxlen, counts, onpath, stack_v, stack_j):
    """counts[p] = number of simple a-b paths with p edges, p <= maxlen."""
    for p in range(maxlen + 1):
        counts[p] = 0
    if maxlen <= 0:
        return
    for v in range(n):
        onpath[v] = 0
    onpath[a] = 1
    top = 0
    stack_v[0] = a
    stack_j[0] = 0
    while top >= 0:
        v = stack_v[top]
        j = stack_j[top]
        if j >= deg[v] or top >= maxlen:
            onpath[v] = 0 if top > 0 else 1
            top -= 1
            continue
        stack_j[top] = j + 1
        w = rot[v, j]
        if w == b:
            counts[top + 1] += 1
        elif onpath[w] == 0 and top + 1 < maxlen:
            onpath[w] = 1
            top += 1
            stack_v[top] = w
            stack_j[top] = 0
    onpath[a] = 0


@_jit
def _count_triangles(rot, deg, n, pos):
    c = 0
    for u in range(n):
        for j in range(deg[u]):
            v = rot[u, j]
            if v <= u:
                continue
            for jj in range(deg[v]):
                w = rot[v, jj]
                if w > v and pos[u, w] >= 0:
                    c += 1
    return c


@_jit
def _expand_batch(codes, L, nmax, max_tri, forbid_four, closed_upto, lookahead,
                  emax, code_len):
    """Children of every parent row by one ear inside an inner face.

    ``forbid_four``: reject new 4-cycles.  ``closed_upto`` K > 0: faces of
    length <= K (other than the inner side of the bare outer cycle) take no
    ears, and no child may contain a non-facial cycle of length <= K created
    by its ear.  ``lookahead``: drop children that cannot reach minimum
    internal degree 3 in any final graph on n' <= ``nmax`` vertices with at
    most ``emax[n']`` edges.
    """
    N = nmax + 1
    rot = np.zeros((N, N), dtype=np.int64)
    deg = np.zeros(N, dtype=np.int64)
    pos = np.zeros((N, N), dtype=np.int64)
    crot = np.zeros((N, N), dtype=np.int64)
    cdeg = np.zeros(N, dtype=np.int64)
    cpos = np.zeros((N, N), dtype=np.int64)
    ne = N * N
    fid = np.zeros((N, N), dtype=np.int64)
    fwalk = np.zeros(ne, dtype=np.int64)
    fstart = np.zeros(ne, dtype=np.int64)
    flen = np.zeros(ne, dtype=np.int64)
    cfid = np.zeros((N, N), dtype=np.int64)
    cfwalk = np.zeros(ne, dtype=np.int64)
    cfstart = np.zeros(ne, dtype=np.int64)
    cflen = np.zeros(ne, dtype=np.int64)
    outer = np.zeros(N, dtype=np.int64)
    is_outer_v = np.zeros(N, dtype=np.int64)
    best = np.zeros(code_len, dtype=np.int8)
    tmp = np.zeros(code_len, dtype=np.int8)
    lab = np.zeros(N, dtype=np.int64)
    order = np.zeros(N, dtype=np.int64)
    first = np.zeros(N, dtype=np.int64)
    counts = np.zeros(8, dtype=np.int64)
    onpath = np.zeros(N, dtype=np.int64)
    stack_v = np.zeros(N, dtype=np.int64)
    stack_j = np.zeros(N, dtype=np.int64)
    seq = np.zeros(N + 2, dtype=np.int64)

    cap = 1024
    out = np.empty((cap, code_len), dtype=np.int8)
    nout = 0
    path_cap = 4 if closed_upto <= 4 else closed_upto

    for row in range(codes.shape[0]):
        n = _decode(codes[row], rot, deg)
        _positions(rot, deg, n, pos)
        nf = _trace(rot, deg, n, pos, fid, fwalk, fstart, flen)
        # outer walk starts with dart (0, 1)
        of = fid[0, pos[0, 1]]
        for i in range(L):
            outer[i] = fwalk[fstart[of] + i]
        for v in range(n):
            is_outer_v[v] = 0
        for i in range(L):
            is_outer_v[outer[i]] = 1
        ntri = _count_triangles(rot, deg, n, pos)
        if L == 3:
            ntri -= 1
        bare = n == L
        for f in range(nf):
            if f == of:
                continue
            m = flen[f]
            if closed_upto > 0 and m <= closed_upto and not bare:
                continue
            base = fstart[f]
            for i in range(m):
                a = fwalk[base + i]
                prev_a = fwalk[base + (i - 1) % m]
                for j in range(i + 1, m):
                    b = fwalk[base + j]
                    prev_b = fwalk[base + (j - 1) % m]
                    d1 = j - i
                    d2 = m - d1
                    for ell in range(1, nmax - n + 2):
                        if ell == 1 and pos[a, b] >= 0:
                            continue
                        lim = path_cap - ell
                        _count_paths(rot, deg, n, a, b, lim, counts, onpath, stack_v, stack_j)
                        newtri = 0
                        bad = False
                        for p in range(1, lim + 1):
                            c = counts[p]
                            if c == 0:
                                continue
                            cl = ell + p
                            if cl == 3:
                                newtri += c
                            elif cl == 4 and forbid_four:
                                bad = True
                            if closed_upto > 0 and cl <= closed_upto:
                                fac = 0
                                if d1 == p:
                                    fac += 1
                                if d2 == p:
                                    fac += 1
                                if c > fac:
                                    bad = True
                        if bad or ntri + newtri > max_tri:
                            continue
                        # build the child
                        cn = n + ell - 1
                        for v in range(n):
                            cdeg[v] = deg[v]
                            for q in range(deg[v]):
                                crot[v, q] = rot[v, q]
                        seq[0] = a
                        for q in range(1, ell):
                            seq[q] = n + q - 1
                        seq[ell] = b
                        for q in range(1, ell):
                            x = seq[q]
                            cdeg[x] = 2
                            crot[x, 0] = seq[q - 1]
                            crot[x, 1] = seq[q + 1]
                        # insert seq[1] after prev_a at a, seq[ell-1] after prev_b at b
                        for side in range(2):
                            if side == 0:
                                v = a
                                after = pos[a, prev_a]
                                newn = seq[1]
                            else:
                                v = b
                                after = pos[b, prev_b]
                                newn = seq[ell - 1]
                            d = cdeg[v]
                            for q in range(d, after + 1, -1):
                                crot[v, q] = crot[v, q - 1]
                            crot[v, after + 1] = newn
                            cdeg[v] = d + 1
                        _positions(crot, cdeg, cn, cpos)
                        if lookahead:
                            ce = 0
                            dcount = 0
                            for v in range(cn):
                                ce += cdeg[v]
                                if is_outer_v[v] == 0 and cdeg[v] == 2:
                                    dcount += 1
                            ce //= 2
                            # each ear adds one edge more than vertices and
                            # two endpoint degrees
                            reach = False
                            for fn in range(cn, nmax + 1):
                                if dcount + (fn - cn) <= 2 * (emax[fn] - fn - ce + cn):
                                    reach = True
                                    break
                            if not reach:
                                continue
                            if closed_upto > 0 and dcount > 0:
                                cnf = _trace(crot, cdeg, cn, cpos, cfid, cfwalk, cfstart, cflen)
                                dead = False
                                for v in range(cn):
                                    if is_outer_v[v] == 1 or cdeg[v] != 2:
                                        continue
                                    f0 = cfid[v, 0]
                                    f1 = cfid[v, 1]
                                    if cflen[f0] <= closed_upto and cflen[f1] <= closed_upto:
                                        dead = True
                                        break
                                if dead:
                                    continue
                        _canonical(crot, cdeg, cn, cpos, outer, L, best, tmp, lab, order, first)
                        if nout == cap:
                            bigger = np.empty((cap * 2, code_len), dtype=np.int8)
                            bigger[:cap] = out
                            out = bigger
                            cap *= 2
                        out[nout] = best
                        nout += 1
    return out[:nout]


@_jit
def _min_internal_degree(codes, L, nmax):
    """Per row: minimum degree over vertices off the outer face (99 if none)."""
    N = nmax + 1
    rot = np.zeros((N, N), dtype=np.int64)
    deg = np.zeros(N, dtype=np.int64)
    pos = np.zeros((N, N), dtype=np.int64)
    ne = N * N
    fid = np.zeros((N, N), dtype=np.int64)
    fwalk = np.zeros(ne, dtype=np.int64)
    fstart = np.zeros(ne, dtype=np.int64)
    flen = np.zeros(ne, dtype=np.int64)
    res = np.zeros(codes.shape[0], dtype=np.int64)
    isout = np.zeros(N, dtype=np.int64)
    for row in range(codes.shape[0]):
        n = _decode(codes[row], rot, deg)
        _positions(rot, deg, n, pos)
        _trace(rot, deg, n, pos, fid, fwalk, fstart, flen)
        of = fid[0, pos[0, 1]]
        for v in range(n):
            isout[v] = 0
        for i in range(L):
            isout[fwalk[fstart[of] + i]] = 1
        mn = 99
        for v in range(n):
            if isout[v] == 0 and deg[v] < mn:
                mn = deg[v]
        res[row] = mn
    return res


@_jit
def _triangle_counts(codes, nmax):
    N = nmax + 1
    rot = np.zeros((N, N), dtype=np.int64)
    deg = np.zeros(N, dtype=np.int64)
    pos = np.zeros((N, N), dtype=np.int64)
    res = np.zeros(codes.shape[0], dtype=np.int64)
    for row in range(codes.shape[0]):
        n = _decode(codes[row], rot, deg)
        _positions(rot, deg, n, pos)
        res[row] = _count_triangles(rot, deg, n, pos)
    return res


def cycle_code(L: int, code_len: int) -> np.ndarray:
    """Canonical code of the bare L-cycle."""
    N = L + 1
    rot = np.zeros((N, N), dtype=np.int64)
    deg = np.zeros(N, dtype=np.int64)
    pos = np.zeros((N, N), dtype=np.int64)
    for i in range(L):
        rot[i, 0] = (i - 1) % L
        rot[i, 1] = (i + 1) % L
        deg[i] = 2
    _positions(rot, deg, L, pos)
    outer = np.arange(L + 1, dtype=np.int64)
    outer[L] = 0
    best = np.zeros(code_len, dtype=np.int8)
    tmp = np.zeros(code_len, dtype=np.int8)
    lab = np.zeros(N, dtype=np.int64)
    order = np.zeros(N, dtype=np.int64)
    first = np.zeros(N, dtype=np.int64)
    _canonical(rot, deg, L, pos, outer, L, best, tmp, lab, order, first)
    return best


def expand(codes: np.ndarray, L: int, nmax: int, max_tri: int, forbid_four: bool,
           closed_upto: int, lookahead: bool, emax=None) -> np.ndarray:
    """Unique children codes (sorted by bytes) of the parent rows.

    ``emax[n]`` bounds the edges of a final graph on n vertices; it is only
    read when ``lookahead`` is set.
    """
    codes = np.ascontiguousarray(codes, dtype=np.int8)
    if codes.shape[0] == 0:
        return codes
    if emax is None:
        emax = np.zeros(nmax + 1, dtype=np.int64)
    emax = np.ascontiguousarray(emax, dtype=np.int64)
    out = _expand_batch(codes, L, nmax, max_tri, bool(forbid_four), closed_upto,
                        bool(lookahead), emax, codes.shape[1])
    return unique_rows(out)


def unique_rows(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    if arr.shape[0] == 0:
        return arr
    view = arr.view(np.dtype((np.void, arr.shape[1])))
    return np.unique(view).view(arr.dtype).reshape(-1, arr.shape[1])


def min_internal_degree(codes: np.ndarray, L: int, nmax: int) -> np.ndarray:
    return _min_internal_degree(np.ascontiguousarray(codes, dtype=np.int8), L, nmax)


def triangle_counts(codes: np.ndarray, nmax: int) -> np.ndarray:
    return _triangle_counts(np.ascontiguousarray(codes, dtype=np.int8), nmax)


@_jit
def _blocked_rows(codes, L, nmax):
    """Per row: 1 iff some colouring proper on the outer cycle does not extend."""
    N = nmax + 1
    rot = np.zeros((N, N), dtype=np.int64)
    deg = np.zeros(N, dtype=np.int64)
    pos = np.zeros((N, N), dtype=np.int64)
    ne = N * N
    fid = np.zeros((N, N), dtype=np.int64)
    fwalk = np.zeros(ne, dtype=np.int64)
    fstart = np.zeros(ne, dtype=np.int64)
    flen = np.zeros(ne, dtype=np.int64)
    res = np.zeros(codes.shape[0], dtype=np.uint8)
    rverts = np.zeros(L, dtype=np.int64)
    isout = np.zeros(N, dtype=np.int64)
    queue = np.zeros(N, dtype=np.int64)
    total = 3 ** L
    proper = np.ones(total, dtype=np.uint8)
    for idx in range(total):
        x = idx
        first = x % 3
        last = first
        for i in range(1, L):
            x //= 3
            c = x % 3
            if c == last:
                proper[idx] = 0
            last = c
        if last == first:
            proper[idx] = 0
    for row in range(codes.shape[0]):
        n = _decode(codes[row], rot, deg)
        _positions(rot, deg, n, pos)
        _trace(rot, deg, n, pos, fid, fwalk, fstart, flen)
        of = fid[0, pos[0, 1]]
        adj = np.zeros((n, n), dtype=np.uint8)
        for v in range(n):
            isout[v] = 0
            for j in range(deg[v]):
                adj[v, rot[v, j]] = 1
        for i in range(L):
            rverts[i] = fwalk[fstart[of] + i]
            isout[rverts[i]] = 1
        m = 0
        head = 0
        for i in range(L):
            queue[i] = rverts[i]
        tail = L
        while head < tail:
            v = queue[head]
            head += 1
            for j in range(deg[v]):
                w = rot[v, j]
                if isout[w] == 0:
                    isout[w] = 1
                    queue[tail] = w
                    tail += 1
        order = queue[L:tail].copy()
        mask = _mask_dfs(adj, rverts, order)
        for idx in range(total):
            if proper[idx] == 1 and mask[idx] == 0:
                res[row] = 1
                break
    return res


def blocked_rows(codes: np.ndarray, L: int, nmax: int) -> np.ndarray:
    return _blocked_rows(np.ascontiguousarray(codes, dtype=np.int8), L, nmax).astype(bool)
