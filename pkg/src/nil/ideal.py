"""Exact monomial-ideal arithmetic.

A monomial x^a is represented by its exponent vector: a tuple of
nonnegative Python ints (arbitrary precision), one entry per variable.
A MonomialIdeal stores the antichain of minimal generators, sorted
lexicographically for deterministic output.

All operations are pure functions over immutable values.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import GraphError, IdealError


def support(a):
    """Indices (1-based) with a positive entry."""
    return frozenset(i for i, x in enumerate(a, start=1) if x > 0)


def divides(g, a):
    """Componentwise g <= a, i.e. x^g divides x^a."""
    return all(gi <= ai for gi, ai in zip(g, a))


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _check_exponent(a, n=None):
    if n is not None and len(a) != n:
        raise IdealError(f"exponent length {len(a)} does not match ambient {n}")
    for x in a:
        if not isinstance(x, int) or x < 0:
            raise IdealError(f"exponent entries must be nonnegative integers, got {x!r}")


class MonomialIdeal:
    """Finite antichain of exponent vectors generating a monomial ideal.

    The empty generator set is the zero-ideal sentinel; it only arises via
    restriction and is rejected by closure and classifier operations.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n, gens):
        if not isinstance(n, int) or n < 0:
            raise IdealError(f"ambient variable count must be nonnegative, got {n!r}")
        gens = sorted(set(tuple(g) for g in gens))
        for g in gens:
            _check_exponent(g, n)
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and divides(h, g):
                    raise IdealError(
                        f"generators are not an antichain: {h} divides {g}"
                    )
        self.n = n
        self.gens = tuple(gens)

    @property
    def is_zero(self):
        return not self.gens

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {list(self.gens)})"


def minimalize(exps):
    """The divisibility-minimal elements of a nonempty exponent set."""
    exps = sorted(set(tuple(e) for e in exps))
    if not exps:
        raise IdealError("cannot minimalize an empty exponent set")
    n = len(exps[0])
    for e in exps:
        _check_exponent(e, n)
    # Sorting by total degree lets each element be checked against kept
    # elements of no larger degree only.
    exps.sort(key=lambda e: (sum(e), e))
    kept = []
    for e in exps:
        if not any(divides(g, e) for g in kept):
            kept.append(e)
    return MonomialIdeal(n, kept)


def edge_ideal(G):
    """The ideal generated by (x_u x_v)^w over the weighted edges of G."""
    if not G.edges:
        raise GraphError("edge ideal of an edgeless graph is the zero ideal; unsupported")
    gens = []
    for (u, v), w in G.edges.items():
        g = [0] * G.n
        g[u - 1] = w
        g[v - 1] = w
        gens.append(tuple(g))
    # Distinct edges never divide one another, so this is already minimal.
    ideal = MonomialIdeal(G.n, gens)
    assert len(ideal.gens) == len(G.edges)
    return ideal


def power(I, t):
    """Minimal generators of I^t (sums of t generators, minimalized)."""
    if not isinstance(t, int) or t < 1:
        raise IdealError(f"power exponent must be a positive integer, got {t!r}")
    if I.is_zero:
        raise IdealError("power of the zero ideal is unsupported")
    if t == 1:
        return I
    sums = set()
    for combo in combinations_with_replacement(I.gens, t):
        total = combo[0]
        for g in combo[1:]:
            total = exp_add(total, g)
        sums.add(total)
    return minimalize(sums)


def contains(I, a):
    """True iff x^a lies in I, i.e. some generator divides a."""
    a = tuple(a)
    _check_exponent(a, I.n)
    return any(divides(g, a) for g in I.gens)


def contains_power(I, a, t):
    """True iff x^a lies in I^t, decided by multiplicity search.

    Searches nonnegative integer multiplicities m_j with sum t and
    sum m_j * g_j <= a, pruning branches whose remaining generators
    cannot fit t more factors into the residual exponent.
    """
    a = tuple(a)
    _check_exponent(a, I.n)
    if not isinstance(t, int) or t < 1:
        raise IdealError(f"power exponent must be a positive integer, got {t!r}")
    if I.is_zero:
        return False
    # Largest generators first tends to fail fast.
    gens = sorted(I.gens, key=lambda g: (-sum(g), g))

    def max_copies(g, residual):
        c = None
        for gi, ri in zip(g, residual):
            if gi:
                q = ri // gi
                if c is None or q < c:
                    c = q
                    if c == 0:
                        return 0
        return c

    def search(idx, residual, need):
        if need == 0:
            return True
        caps = [max_copies(g, residual) for g in gens[idx:]]
        if sum(caps) < need:
            return False
        for off, g in enumerate(gens[idx:]):
            cap = min(caps[off], need)
            for m in range(cap, 0, -1):
                new_res = tuple(ri - m * gi for ri, gi in zip(residual, g))
                if search(idx + off + 1, new_res, need - m):
                    return True
        return False

    return search(0, a, t)


def restrict(I, V):
    """The subideal generated by generators supported inside V.

    Ambient variable count is unchanged.  May return the zero ideal.
    """
    V = set(V)
    for v in V:
        if not (isinstance(v, int) and 1 <= v <= I.n):
            raise IdealError(f"vertex {v!r} outside 1..{I.n}")
    kept = [g for g in I.gens if support(g) <= V]
    # A subset of an antichain is an antichain; no re-minimalization needed.
    return MonomialIdeal(I.n, kept)
