"""Exhaustive enumeration of small semigroups and double-semigroup pairs.

The core is cell-by-cell backtracking over the multiplication table with
incremental associativity checking: a triple (a,b,c) is tested the moment the
last table cell it needs is filled in. Cells are filled so that the top-left
k-by-k block is completed before the next border, which prunes much earlier
than row-major order. Pair search fixes the first table and backtracks the
second with the interchange law propagated the same way.

Hot loops work on flat 0-based tuples; everything crossing the module boundary
is a 1-based CayleyTable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product as iproduct

from .errors import EsnlabError, NotASemigroupError, OrderTooLargeError
from .inverse import analyze_inverse, is_clifford
from .tables import (
    CayleyTable,
    canonical_form,
    format_double,
    format_table,
    is_associative,
    is_canonical,
    is_commutative,
    relabel,
)

SINGLE_CAP = 5
PAIR_CAP = 4
FILTERS = ("all", "inverse", "commutative-inverse", "noncommutative-inverse")
_SPLIT_DEPTH = 4


def _cell_order(n):
    return sorted(range(n * n), key=lambda k: (max(k // n, k % n), k // n, k % n))


def _flat_to_table(flat, n):
    return CayleyTable(
        tuple(tuple(v + 1 for v in flat[a * n : (a + 1) * n]) for a in range(n))
    )


def _table_to_flat(t):
    return tuple(v - 1 for row in t.rows for v in row)


def _is_inverse_flat(T, n):
    for a in range(n):
        count = 0
        for x in range(n):
            if T[T[a * n + x] * n + a] == a and T[T[x * n + a] * n + x] == x:
                count += 1
                if count > 1:
                    return False
        if count != 1:
            return False
    return True


def _is_commutative_flat(T, n):
    return all(T[a * n + b] == T[b * n + a] for a in range(n) for b in range(a + 1, n))


def _matches(T, n, filt):
    if filt == "all":
        return True
    if not _is_inverse_flat(T, n):
        return False
    if filt == "inverse":
        return True
    if filt == "commutative-inverse":
        return _is_commutative_flat(T, n)
    return not _is_commutative_flat(T, n)


def _assoc_ok(T, occ, n, a, b, c):
    """All associativity triples completed by setting T[a][b] = c still hold."""
    an = a * n
    bn = b * n
    cn = c * n
    for z in range(n):
        q = T[bn + z]
        if q >= 0:
            l = T[cn + z]
            if l >= 0:
                r = T[an + q]
                if r >= 0 and l != r:
                    return False
    for x in range(n):
        xn = x * n
        p = T[xn + a]
        if p >= 0:
            l = T[p * n + b]
            if l >= 0:
                r = T[xn + c]
                if r >= 0 and l != r:
                    return False
    for cell in occ[a]:
        q = T[(cell % n) * n + b]
        if q >= 0:
            r = T[(cell // n) * n + q]
            if r >= 0 and r != c:
                return False
    for cell in occ[b]:
        p = T[an + cell // n]
        if p >= 0:
            l = T[p * n + cell % n]
            if l >= 0 and l != c:
                return False
    return True


def _search_tables(n, prefix, emit):
    """Backtrack all associative tables extending `prefix` (values for the first
    len(prefix) cells in block order); call emit(flat_tuple) per completion."""
    size = n * n
    order = _cell_order(n)
    cells = [(k // n, k % n) for k in order]
    T = [-1] * size
    occ = [[] for _ in range(n)]

    for d, c in enumerate(prefix):
        a, b = cells[d]
        k = order[d]
        T[k] = c
        if not _assoc_ok(T, occ, n, a, b, c):
            return  # dead prefix
        occ[c].append(k)

    def extend(d):
        if d == size:
            emit(tuple(T))
            return
        a, b = cells[d]
        k = order[d]
        for c in range(n):
            T[k] = c
            if _assoc_ok(T, occ, n, a, b, c):
                occ[c].append(k)
                extend(d + 1)
                occ[c].pop()
        T[k] = -1

    extend(len(prefix))


def _prefix_alive(n, prefix):
    size = n * n
    order = _cell_order(n)
    cells = [(k // n, k % n) for k in order]
    T = [-1] * size
    occ = [[] for _ in range(n)]
    for d, c in enumerate(prefix):
        a, b = cells[d]
        k = order[d]
        T[k] = c
        if not _assoc_ok(T, occ, n, a, b, c):
            return False
        occ[c].append(k)
    return True


def _prefixes(n, depth):
    """All internally consistent assignments of the first `depth` cells."""
    out = []

    def walk(partial):
        if len(partial) == depth:
            out.append(tuple(partial))
            return
        for c in range(n):
            cand = partial + [c]
            if _prefix_alive(n, cand):
                walk(cand)

    walk([])
    return out


def _enum_worker(args):
    n, prefix, filt, keep_matches = args
    count = 0
    matches = []
    canon = []

    def emit(T):
        nonlocal count
        if _matches(T, n, filt):
            count += 1
            if keep_matches:
                matches.append(T)
            if is_canonical(_flat_to_table(T, n)):
                canon.append(T)

    _search_tables(n, prefix, emit)
    return count, matches, canon


@dataclass(frozen=True)
class EnumerationReport:
    order: int
    filter: str
    labeled_count: int
    class_count: int
    representatives: tuple
    claims: dict

    def as_json(self):
        return {
            "schema_version": 1,
            "kind": "enumeration",
            "order": self.order,
            "filter": self.filter,
            "labeled_count": self.labeled_count,
            "class_count": self.class_count,
            "representatives": [format_table(t) for t in self.representatives],
            "claims": dict(sorted(self.claims.items())),
        }


def iter_semigroup_tables(n):
    """Every associative labeled table of order n, in enumeration order."""
    if not 1 <= n <= SINGLE_CAP:
        raise OrderTooLargeError(n, SINGLE_CAP)
    out = []
    _search_tables(n, (), out.append)
    for T in out:
        yield _flat_to_table(T, n)


def tables_matching(n, filt):
    if filt not in FILTERS:
        raise ValueError(f"unknown filter {filt!r}")
    return [t for t in iter_semigroup_tables(n) if _matches(_table_to_flat(t), n, filt)]


def enumerate_semigroups(n, filt="all", jobs=1) -> EnumerationReport:
    """Visit every associative labeled table of order n once, count the ones
    matching the filter, and report their isomorphism classes."""
    if filt not in FILTERS:
        raise ValueError(f"unknown filter {filt!r}")
    if not 1 <= n <= SINGLE_CAP:
        raise OrderTooLargeError(n, SINGLE_CAP)
    keep = filt != "all"
    if jobs > 1 and n >= 3:
        tasks = [(n, p, filt, keep) for p in _prefixes(n, _SPLIT_DEPTH)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_enum_worker, tasks, chunksize=8))
    else:
        results = [_enum_worker((n, (), filt, keep))]
    labeled = sum(r[0] for r in results)
    matches = [T for r in results for T in r[1]]
    canon_flat = sorted(T for r in results for T in r[2])
    reps = tuple(_flat_to_table(T, n) for T in canon_flat)
    claims = {}
    if keep:
        claims["all_matches_associative"] = all(
            bool(is_associative(_flat_to_table(T, n))) for T in matches
        )
        claims["all_matches_inverse"] = _all_inverse(matches, n)
        if filt == "noncommutative-inverse":
            claims["all_matches_noncommutative"] = all(
                not _is_commutative_flat(T, n) for T in matches
            )
        if filt == "commutative-inverse":
            claims["all_matches_commutative"] = all(
                _is_commutative_flat(T, n) for T in matches
            )
    else:
        claims["representatives_associative"] = all(bool(is_associative(t)) for t in reps)
    return EnumerationReport(n, filt, labeled, len(reps), reps, claims)


def _all_inverse(matches, n):
    for T in matches:
        try:
            analyze_inverse(_flat_to_table(T, n))
        except EsnlabError:
            return False
    return True


def naive_enumerate(n, filt="all"):
    """Oracle: scan all n^(n*n) tables directly. Only sane for n <= 3."""
    if n > 3:
        raise OrderTooLargeError(n, 3)
    count = 0
    canon = set()
    rng = range(n)
    for values in iproduct(range(1, n + 1), repeat=n * n):
        rows = tuple(tuple(values[a * n : (a + 1) * n]) for a in rng)
        ok = True
        for a in rng:
            for b in rng:
                ab = rows[a][b]
                for c in rng:
                    if rows[ab - 1][c] != rows[a][rows[b][c] - 1]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        flat = tuple(v - 1 for v in values)
        if not _matches(flat, n, filt):
            continue
        count += 1
        canon.add(canonical_form(CayleyTable(rows)).rows)
    return count, frozenset(canon)


def second_table_search(hop: CayleyTable, klass="semigroup"):
    """Every second operation completing hop to a double (inverse) semigroup."""
    if klass not in ("semigroup", "inverse"):
        raise ValueError(f"unknown class {klass!r}")
    assoc = is_associative(hop)
    if not assoc:
        raise NotASemigroupError(assoc.witness)
    n = hop.n
    H = _table_to_flat(hop)
    if klass == "inverse" and not _is_inverse_flat(H, n):
        return []
    need_inverse = klass == "inverse"
    size = n * n
    order = _cell_order(n)
    cells = [(k // n, k % n) for k in order]
    rng = range(n)

    # for each flat cell of the second table, the interchange quadruples whose
    # right-hand lookup V[hop(a,c)][hop(b,d)] lives there
    rc_of = [[] for _ in range(size)]
    for a in rng:
        for b in rng:
            for c in rng:
                hac = H[a * n + c]
                for d in rng:
                    rc_of[hac * n + H[b * n + d]].append((a, b, c, d))

    V = [-1] * size
    occ = [[] for _ in range(n)]
    out = []

    def quad_ok(a, b, c, d):
        # interchange: hop(V[a][b], V[c][d]) == V[hop(a,c)][hop(b,d)]
        p = V[a * n + b]
        if p < 0:
            return True
        q = V[c * n + d]
        if q < 0:
            return True
        r = V[H[a * n + c] * n + H[b * n + d]]
        if r < 0:
            return True
        return H[p * n + q] == r

    def interchange_ok(a, b, k):
        for c in rng:
            for d in rng:
                if not quad_ok(a, b, c, d):
                    return False
                if not quad_ok(c, d, a, b):
                    return False
        for quad in rc_of[k]:
            if not quad_ok(*quad):
                return False
        return True

    def extend(d):
        if d == size:
            if not need_inverse or _is_inverse_flat(V, n):
                out.append(_flat_to_table(tuple(V), n))
            return
        a, b = cells[d]
        k = order[d]
        for c in rng:
            V[k] = c
            if _assoc_ok(V, occ, n, a, b, c) and interchange_ok(a, b, k):
                occ[c].append(k)
                extend(d + 1)
                occ[c].pop()
        V[k] = -1

    extend(0)
    return out


def _pair_worker(args):
    n, hop_flats, klass = args
    pairs = []
    for flat in hop_flats:
        hop = _flat_to_table(flat, n)
        for vop in second_table_search(hop, klass):
            pairs.append((flat, _table_to_flat(vop)))
    return pairs


def canonical_pair(hop: CayleyTable, vop: CayleyTable):
    """Least joint relabeling of the ordered pair."""
    n = hop.n
    best = None
    for perm in permutations(range(1, n + 1)):
        key = (relabel(hop, perm).rows, relabel(vop, perm).rows)
        if best is None or key < best:
            best = key
    return best


@dataclass(frozen=True)
class PairSearchReport:
    order: int
    klass: str
    pair_count: int
    proper_pair_count: int
    class_count: int
    representatives: tuple
    proper_representatives: tuple
    claims: dict
    pairs: tuple = ()  # every labeled pair found; not serialized

    def as_json(self):
        return {
            "schema_version": 1,
            "kind": "pair-search",
            "order": self.order,
            "class": self.klass,
            "pair_count": self.pair_count,
            "proper_pair_count": self.proper_pair_count,
            "class_count": self.class_count,
            "representatives": [format_double(h, v) for h, v in self.representatives],
            "proper_representatives": [
                format_double(h, v) for h, v in self.proper_representatives
            ],
            "claims": dict(sorted(self.claims.items())),
        }


def search_double(n, klass="semigroup", jobs=1) -> PairSearchReport:
    """All ordered pairs (hop, vop) of order n forming a double (inverse)
    semigroup: enumerate hop, backtrack vop under associativity + interchange."""
    if klass not in ("semigroup", "inverse"):
        raise ValueError(f"unknown class {klass!r}")
    if not 1 <= n <= PAIR_CAP:
        raise OrderTooLargeError(n, PAIR_CAP)
    filt = "inverse" if klass == "inverse" else "all"
    hops = [_table_to_flat(t) for t in tables_matching(n, filt)]
    if jobs > 1 and len(hops) > 1:
        chunk = max(1, len(hops) // (jobs * 4))
        tasks = [(n, hops[i : i + chunk], klass) for i in range(0, len(hops), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunked = list(pool.map(_pair_worker, tasks))
        pairs = [p for ch in chunked for p in ch]
    else:
        pairs = _pair_worker((n, hops, klass))
    tables = [(_flat_to_table(h, n), _flat_to_table(v, n)) for h, v in pairs]
    proper = [(h, v) for h, v in tables if h.rows != v.rows]
    canon = sorted({canonical_pair(h, v) for h, v in tables})
    canon_proper = sorted({canonical_pair(h, v) for h, v in proper})
    claims = {
        "pairs_found": bool(tables),
        "swap_closed": {(h.rows, v.rows) for h, v in tables}
        == {(v.rows, h.rows) for h, v in tables},
    }
    if klass == "inverse":
        claims["all_improper"] = not proper
        claims["all_commutative"] = all(
            bool(is_commutative(h)) and bool(is_commutative(v)) for h, v in tables
        )
        claims["all_clifford"] = all(
            bool(is_clifford(analyze_inverse(h))) and bool(is_clifford(analyze_inverse(v)))
            for h, v in tables
        )
    return PairSearchReport(
        order=n,
        klass=klass,
        pair_count=len(tables),
        proper_pair_count=len(proper),
        class_count=len(canon),
        representatives=tuple(
            (CayleyTable(h), CayleyTable(v)) for h, v in canon
        ),
        proper_representatives=tuple(
            (CayleyTable(h), CayleyTable(v)) for h, v in canon_proper
        ),
        claims=claims,
        pairs=tuple(tables),
    )
