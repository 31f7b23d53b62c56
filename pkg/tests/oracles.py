"""Independent oracles used to derive and freeze expected values.

Everything here is deliberately naive and self-contained (pure Python lists,
leftmost-pivot elimination, exhaustive enumeration) so that it shares no code
path with the package under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_with_transforms(M):
    """Naive Smith form: returns (S, U, V) with U*M*V = S, leftmost pivoting."""
    A = [row[:] for row in M]
    m = len(A)
    n = len(A[0]) if A else 0
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def row_op(i, j, q):  # row i -= q * row j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in A:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]

    k = min(m, n)
    t = 0
    while t < k:
        # find any nonzero pivot (leftmost, topmost)
        piv = None
        for j in range(t, n):
            for i in range(t, m):
                if A[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            again = False
            for i in range(t + 1, m):
                if A[i][t]:
                    if A[i][t] % A[t][t]:
                        g, x, y = xgcd(A[t][t], A[i][t])
                        a, b = A[t][t] // g, A[i][t] // g
                        At = [x * p + y * q for p, q in zip(A[t], A[i])]
                        Ai = [-b * p + a * q for p, q in zip(A[t], A[i])]
                        A[t], A[i] = At, Ai
                        Ut = [x * p + y * q for p, q in zip(U[t], U[i])]
                        Ui = [-b * p + a * q for p, q in zip(U[t], U[i])]
                        U[t], U[i] = Ut, Ui
                    else:
                        row_op(i, t, A[i][t] // A[t][t])
            for j in range(t + 1, n):
                if A[t][j]:
                    if A[t][j] % A[t][t]:
                        g, x, y = xgcd(A[t][t], A[t][j])
                        a, b = A[t][t] // g, A[t][j] // g
                        for r in (A, V):
                            for row in r:
                                ct, cj = row[t], row[j]
                                row[t] = x * ct + y * cj
                                row[j] = -b * ct + a * cj
                        again = True
                    else:
                        col_op(j, t, A[t][j] // A[t][t])
            if not again and all(A[i][t] == 0 for i in range(t + 1, m)) and all(
                A[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        t += 1
    # divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b and (a == 0 or (a and b % a)):
                if a == 0:
                    swap_rows(i, i + 1)
                    swap_cols(i, i + 1)
                    changed = True
                    continue
                # col i += col i+1 then re-clear the 2x2 block
                for r in A:
                    r[i] += r[i + 1]
                for r in V:
                    r[i] += r[i + 1]
                g, x, y = xgcd(A[i][i], A[i + 1][i])
                aa, bb = A[i][i] // g, A[i + 1][i] // g
                At = [x * p + y * q for p, q in zip(A[i], A[i + 1])]
                Ai = [-bb * p + aa * q for p, q in zip(A[i], A[i + 1])]
                A[i], A[i + 1] = At, Ai
                Ut = [x * p + y * q for p, q in zip(U[i], U[i + 1])]
                Ui = [-bb * p + aa * q for p, q in zip(U[i], U[i + 1])]
                U[i], U[i + 1] = Ut, Ui
                if A[i][i + 1]:
                    col_op(i + 1, i, A[i][i + 1] // A[i][i])
                changed = True
    for i in range(k):
        if A[i][i] < 0:
            A[i] = [-x for x in A[i]]
            U[i] = [-x for x in U[i]]
    return A, U, V


def smith_diagonal(M) -> list[int]:
    S, _, _ = smith_with_transforms(M)
    k = min(len(S), len(S[0]) if S else 0)
    return [abs(S[i][i]) for i in range(k)]


def invariant_factors(M) -> tuple[tuple[int, ...], int]:
    """(factors > 1, free rank) of coker(M) for M mapping Z^cols -> Z^rows."""
    rows = len(M)
    diag = [d for d in smith_diagonal(M) if d]
    return tuple(d for d in diag if d > 1), rows - len(diag)


def solve(M, b):
    """One integer solution of M x = b, or None."""
    S, U, V = smith_with_transforms(M)
    m = len(M)
    n = len(M[0]) if M else 0
    ub = [sum(U[i][j] * b[j] for j in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = S[i][i] if i < min(m, n) else 0
        if d == 0:
            if i < len(ub) and ub[i] != 0:
                return None
        else:
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
    return [sum(V[i][j] * y[j] for j in range(n)) for i in range(n)]


def kernel(M):
    """Basis (list of vectors) of the integer kernel of M."""
    S, U, V = smith_with_transforms(M)
    m = len(M)
    n = len(M[0]) if M else 0
    r = sum(1 for i in range(min(m, n)) if S[i][i])
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def fraction_det(M) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if A[r][i]), None)
        if p is None:
            return Fraction(0)
        if p != i:
            A[i], A[p] = A[p], A[i]
            det = -det
        det *= A[i][i]
        inv = 1 / A[i][i]
        for r in range(i + 1, n):
            f = A[r][i] * inv
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[i])]
    return det


# ---------------------------------------------------------------------------
# group cohomology oracles (all-pairs cocycle systems, tiny cases only)
# ---------------------------------------------------------------------------


def act(mat, vec):
    return [sum(mat[i][j] * vec[j] for j in range(len(vec))) for i in range(len(mat))]


def subquotient_factors(kernel_basis_vs, image_vs, dim):
    """Invariant factors of span(kernel) / span(image), both in Z^dim."""
    if not kernel_basis_vs:
        return (), 0
    K = [[v[i] for v in kernel_basis_vs] for i in range(dim)]
    rels = []
    for w in image_vs:
        c = solve(K, w)
        assert c is not None, "image not inside kernel"
        rels.append(c)
    if not rels:
        return (), len(kernel_basis_vs)
    R = [[rel[i] for rel in rels] for i in range(len(kernel_basis_vs))]
    return invariant_factors(R)


def h1_all_pairs(table, mats):
    """H^1 for a finite group given by its full table acting by mats.

    Variables x_g for every g; equations x_{gh} = x_g + g.x_h for all pairs.
    Returns (factors, free_rank, cocycle_basis) with cocycles as flat vectors.
    """
    n = len(table)
    r = len(mats[0]) if mats else 0
    dim = n * r
    eqs = []
    for g in range(n):
        for h in range(n):
            gh = table[g][h]
            for i in range(r):
                row = [0] * dim
                row[gh * r + i] += 1
                row[g * r + i] -= 1
                for j in range(r):
                    row[h * r + j] -= mats[g][i][j]
                if any(row):
                    eqs.append(row)
    Z = kernel(eqs) if eqs else [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
    B = []
    for j in range(r):
        m = [1 if i == j else 0 for i in range(r)]
        vec = []
        for g in range(n):
            gm = act(mats[g], m)
            vec.extend(gm[i] - m[i] for i in range(r))
        B.append(vec)
    facs, free = subquotient_factors(Z, B, dim)
    return facs, free, Z


def span_basis(vectors, dim):
    """Basis of the sublattice of Z^dim spanned by the given vectors."""
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    M = [[v[i] for v in vecs] for i in range(dim)]
    S, U, V = smith_with_transforms(M)
    r = sum(1 for i in range(min(dim, len(vecs))) if S[i][i])
    # span(M) = U^{-1} (d_i e_i): basis = d_i * (column i of U^{-1})
    basis = []
    for i in range(r):
        e = [S[i][i] if t == i else 0 for t in range(dim)]
        col = solve(U, e)
        assert col is not None
        basis.append(col)
    return basis


def h2_all_pairs(table, mats, identity_idx):
    """Normalized H^2: variables c(g,h) for g,h != 1; all triple equations.

    Returns (factors, free_rank, cocycle_basis).
    """
    n = len(table)
    r = len(mats[0]) if mats else 0
    nontriv = [g for g in range(n) if g != identity_idx]
    index = {g: t for t, g in enumerate(nontriv)}
    dim = len(nontriv) ** 2 * r

    def var(g, h):
        if g == identity_idx or h == identity_idx:
            return None
        return (index[g] * len(nontriv) + index[h]) * r

    eqs = []
    for g in range(n):
        for h in range(n):
            for k in range(n):
                v1 = var(h, k)
                v2 = var(table[g][h], k)
                v3 = var(g, table[h][k])
                v4 = var(g, h)
                for i in range(r):
                    rr = [0] * dim
                    if v1 is not None:
                        for j in range(r):
                            if mats[g][i][j]:
                                rr[v1 + j] += mats[g][i][j]
                    if v2 is not None:
                        rr[v2 + i] -= 1
                    if v3 is not None:
                        rr[v3 + i] += 1
                    if v4 is not None:
                        rr[v4 + i] -= 1
                    if any(rr):
                        eqs.append(rr)
    Z = kernel(eqs) if eqs else [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
    B = []
    for g in nontriv:
        for i in range(r):
            vec = [0] * dim
            for a in nontriv:
                for b in nontriv:
                    base = var(a, b)
                    # (df)(a,b) = a.f(b) - f(ab) + f(a) with f supported at g
                    if b == g:
                        for t in range(r):
                            vec[base + t] += mats[a][t][i]
                    if table[a][b] == g:
                        vec[base + i] -= 1
                    if a == g:
                        vec[base + i] += 1
            B.append(vec)
    facs, free = subquotient_factors(Z, B, dim)
    return facs, free, Z


def _restriction_kernel_factors(Z, B, dim, classes_in_kernel):
    """Structure of the subgroup of Z^1/B^1 cut out by `classes_in_kernel`.

    `Z`: basis of the cocycle lattice; `B`: coboundary vectors;
    `classes_in_kernel(x)`: predicate on an explicit cocycle vector.
    """
    if not Z:
        return []
    k = len(Z)
    K = [[v[i] for v in Z] for i in range(dim)]
    rels = []
    for w in B:
        c = solve(K, w)
        assert c is not None, "coboundary outside cocycle lattice"
        rels.append(c)
    R = [[rel[i] for rel in rels] for i in range(k)]
    S, U, V = smith_with_transforms(R)
    diag = []
    for i in range(k):
        d = S[i][i] if i < min(len(S), len(S[0]) if S else 0) else 0
        diag.append(abs(d))
    assert all(diag), "cohomology of a lattice must be finite"
    Uinv = []
    for j in range(k):
        e = [1 if i == j else 0 for i in range(k)]
        col = solve(U, e)
        assert col is not None
        Uinv.append(col)
    kernel_lifts = []  # in the Smith (w-) coordinates, where relations = diag
    for w in product(*[range(d) for d in diag]):
        z = [sum(Uinv[j][i] * w[j] for j in range(k)) for i in range(k)]
        x = [sum(Z[j][i] * z[j] for j in range(k)) for i in range(dim)]
        if classes_in_kernel(x):
            kernel_lifts.append(list(w))
    D_cols = [[diag[i] if i == j else 0 for i in range(k)] for j in range(k)]
    L = span_basis(kernel_lifts + D_cols, k)
    facs, free = subquotient_factors(L, D_cols, k)
    assert free == 0
    return sorted(facs)


def sha1_enumerated(table, identity_idx, mats, cyclic_subgroup_elements):
    """Invariant factors of ker[H^1(G,M) -> prod_C H^1(C,M)] by enumeration."""
    n = len(table)
    r = len(mats[0]) if mats else 0
    _, free, Z = h1_all_pairs(table, mats)
    assert free == 0
    B = []
    for j in range(r):
        m = [1 if i == j else 0 for i in range(r)]
        vec = []
        for g in range(n):
            gm = act(mats[g], m)
            vec.extend(gm[i] - m[i] for i in range(r))
        B.append(vec)

    def restricts_to_coboundaries(x):
        for sub in cyclic_subgroup_elements:
            rows, rhs = [], []
            for h in sub:
                for i in range(r):
                    rows.append([mats[h][i][j] - (1 if i == j else 0) for j in range(r)])
                    rhs.append(x[h * r + i])
            if solve(rows, rhs) is None:
                return False
        return True

    return _restriction_kernel_factors(Z, B, n * r, restricts_to_coboundaries)


def sha2_enumerated(table, identity_idx, mats, cyclic_subgroup_elements):
    """Invariant factors of ker[H^2(G,M) -> prod_C H^2(C,M)] by enumeration."""
    n = len(table)
    r = len(mats[0]) if mats else 0
    nontriv = [g for g in range(n) if g != identity_idx]
    index = {g: t for t, g in enumerate(nontriv)}
    _, free, Z = h2_all_pairs(table, mats, identity_idx)
    assert free == 0
    B = []
    for g in nontriv:
        for i in range(r):
            vec = [0] * (len(nontriv) ** 2 * r)
            for a in nontriv:
                for b in nontriv:
                    base = (index[a] * len(nontriv) + index[b]) * r
                    if b == g:
                        for t in range(r):
                            vec[base + t] += mats[a][t][i]
                    if table[a][b] == g:
                        vec[base + i] -= 1
                    if a == g:
                        vec[base + i] += 1
            B.append(vec)

    def value(x, a, b):
        if a == identity_idx or b == identity_idx:
            return [0] * r
        base = (index[a] * len(nontriv) + index[b]) * r
        return x[base : base + r]

    def restricts_to_coboundaries(x):
        # on each cyclic C: exists normalized f: C -> M with df = x|_CxC
        for sub in cyclic_subgroup_elements:
            others = [h for h in sub if h != identity_idx]
            nvars = len(others) * r
            pos = {h: t * r for t, h in enumerate(others)}
            rows, rhs = [], []
            for a in sub:
                for b in sub:
                    target = value(x, a, b)
                    for i in range(r):
                        rr = [0] * nvars
                        # (df)(a,b) = a.f(b) - f(ab) + f(a)
                        if b != identity_idx:
                            for j in range(r):
                                if mats[a][i][j]:
                                    rr[pos[b] + j] += mats[a][i][j]
                        ab = table[a][b]
                        if ab != identity_idx:
                            rr[pos[ab] + i] -= 1
                        if a != identity_idx:
                            rr[pos[a] + i] += 1
                        rows.append(rr)
                        rhs.append(target[i])
            if solve(rows, rhs) is None:
                return False
        return True

    return _restriction_kernel_factors(Z, B, len(nontriv) ** 2 * r, restricts_to_coboundaries)
