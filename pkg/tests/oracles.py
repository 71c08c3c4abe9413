"""Independent reference computations used by the tests.

None of these reuse the memoized or recursive machinery they are compared
against.
"""

from fockspace.laurent import LaurentPoly


def conv(a, b):
    out = {}
    for x, p in a.items():
        for y, q in b.items():
            z = tuple(i + j for i, j in zip(x, y))
            out[z] = out.get(z, 0) + p * q
    return {k: v for k, v in out.items() if v}


def weyl_group_signed(rs, lam):
    """[(det w, w(lam + rho) - rho, w rho - rho)] over W0, by orbit search on rho."""
    n = rs.rank
    cols = [tuple(row[i] for row in rs.cartan_matrix) for i in range(n)]

    def refl(i, x):
        return tuple(a - x[i] * c for a, c in zip(x, cols[i]))

    start = ((1,) * n, tuple(x + 1 for x in lam), 1)
    seen = {start[0]: start}
    frontier = [start]
    while frontier:
        nxt = []
        for r, l, sgn in frontier:
            for i in range(n):
                r2 = refl(i, r)
                if r2 not in seen:
                    seen[r2] = (r2, refl(i, l), -sgn)
                    nxt.append(seen[r2])
        frontier = nxt
    return [(sgn, tuple(x - 1 for x in l), tuple(x - 1 for x in r)) for r, l, sgn in seen.values()]


def alternating_sums(rs, lam):
    """Numerator and denominator of the Weyl character formula as monomial maps."""
    num, den = {}, {}
    for sgn, wl, wr in weyl_group_signed(rs, lam):
        num[wl] = num.get(wl, 0) + sgn
        den[wr] = den.get(wr, 0) + sgn
    return num, den


def naive_straighten(rs, ell, mu, depth=0):
    """Unmemoized rewriting that always reflects in the LAST negative direction."""
    assert depth < 2000
    mu = tuple(mu)
    if any(x == -1 for x in mu):
        return {}
    neg = [i for i, x in enumerate(mu) if x < -1]
    if not neg:
        return {mu: LaurentPoly.const(1)}
    i = neg[-1]
    col = tuple(row[i] for row in rs.cartan_matrix)

    def sdot(w):
        c = w[i] + 1
        return tuple(a - c * b for a, b in zip(w, col))

    lam = sdot(mu)
    n = lam[i] + 1
    v = LaurentPoly.monomial(1)
    if n % ell == 0:
        rhs = [(LaurentPoly.const(-1), lam)]
    elif n < ell:
        rhs = [(-v, lam)]
    else:
        j = n % ell
        lam1 = tuple(a - j * b for a, b in zip(lam, col))
        rhs = [(-v, sdot(lam1)), (LaurentPoly.const(-1), lam1), (-v, lam)]
    out = {}
    for c, w in rhs:
        for nu, p in naive_straighten(rs, ell, w, depth + 1).items():
            out[nu] = out.get(nu, LaurentPoly()) + c * p
    return {k: p for k, p in out.items() if p}


def graded_series_bruteforce(rs, top, depth):
    """Coefficient of q^-depth in top * prod_k (...) by enumerating PBW-type multisets."""
    zero = (0,) * rs.rank
    gens = []
    for k in range(1, depth + 1):
        gens += [(k, zero)] * rs.rank
        for a in rs.root_weights():
            gens.append((k, a))
            gens.append((k, tuple(-x for x in a)))

    acc = {}

    def rec(start, remaining, wt):
        if remaining == 0:
            acc[wt] = acc.get(wt, 0) + 1
            return
        for idx in range(start, len(gens)):
            k, a = gens[idx]
            if k <= remaining:
                rec(idx, remaining - k, tuple(x + y for x, y in zip(wt, a)))

    rec(0, depth, zero)
    return conv(top, acc)
