"""Cayley tables: parsing, elementary predicates, and canonical forms.

Elements are the integers 1..n throughout; ``rows[a-1][b-1]`` is the product
a·b (row = left operand). Everything here is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import NotASemigroupError, ParseError
from .report import Verdict


@dataclass(frozen=True)
class CayleyTable:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n < 1:
            raise ValueError("empty carrier")
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"row length {len(row)} != order {n}")
            for entry in row:
                if not 1 <= entry <= n:
                    raise ValueError(f"entry {entry} out of range 1..{n}")

    @property
    def n(self):
        return len(self.rows)

    def product(self, a, b):
        return self.rows[a - 1][b - 1]

    def elements(self):
        return range(1, self.n + 1)

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))


def parse_table(text: str) -> CayleyTable:
    """Parse the .cay format: '#' comments, order line, then n rows of n entries."""
    table, pos = _parse_one(text.splitlines(), 0)
    lines = text.splitlines()
    for i in range(pos, len(lines)):
        if lines[i].strip() and not lines[i].lstrip().startswith("#"):
            raise ParseError("unexpected trailing content", line=i + 1)
    return table


def parse_double(text: str) -> tuple[CayleyTable, CayleyTable]:
    """Parse two .cay tables from one stream (blank lines/comments between them)."""
    lines = text.splitlines()
    first, pos = _parse_one(lines, 0)
    second, pos = _parse_one(lines, pos)
    for i in range(pos, len(lines)):
        if lines[i].strip() and not lines[i].lstrip().startswith("#"):
            raise ParseError("unexpected trailing content", line=i + 1)
    if first.n != second.n:
        raise ParseError(f"tables have different orders {first.n} and {second.n}")
    return first, second


def _parse_one(lines, start):
    pos = start
    n = None
    rows = []
    while pos < len(lines):
        raw = lines[pos]
        pos += 1
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if n is None:
            try:
                n = int(stripped)
            except ValueError:
                raise ParseError(f"expected the order, got {stripped!r}", line=pos) from None
            if n < 1:
                raise ParseError(f"order must be >= 1, got {n}", line=pos)
            continue
        tokens = stripped.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, got {len(tokens)}", line=pos)
        row = []
        for tok in tokens:
            try:
                val = int(tok)
            except ValueError:
                raise ParseError(f"non-numeric entry {tok!r}", line=pos) from None
            if not 1 <= val <= n:
                raise ParseError(f"entry {val} out of range 1..{n}", line=pos)
            row.append(val)
        rows.append(tuple(row))
        if len(rows) == n:
            return CayleyTable(tuple(rows)), pos
    if n is None:
        raise ParseError("no table found", line=pos)
    raise ParseError(f"expected {n} rows, got {len(rows)}", line=pos)


def format_table(t: CayleyTable) -> str:
    body = "\n".join(" ".join(str(v) for v in row) for row in t.rows)
    return f"{t.n}\n{body}\n"


def format_double(hop: CayleyTable, vop: CayleyTable) -> str:
    return format_table(hop) + "\n" + format_table(vop)


def product(t: CayleyTable, a: int, b: int) -> int:
    return t.rows[a - 1][b - 1]


def is_associative(t: CayleyTable) -> Verdict:
    """O(n^3) scan; witness is the lexicographically least violating (a,b,c)."""
    rows = t.rows
    n = t.n
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            ab = rows[a][b]
            rb = rows[b]
            for c in range(n):
                if rows[ab - 1][c] != ra[rb[c] - 1]:
                    return Verdict(False, (a + 1, b + 1, c + 1))
    return Verdict(True)


def generating_set(t: CayleyTable) -> tuple[int, ...]:
    """A small generating set, found greedily by closure."""
    gens = []
    closed = set()
    for x in t.elements():
        if x in closed:
            continue
        gens.append(x)
        closed.add(x)
        frontier = {x}
        while frontier:
            fresh = set()
            for a in list(closed):
                for b in frontier:
                    for p in (t.product(a, b), t.product(b, a)):
                        if p not in closed:
                            fresh.add(p)
            closed |= fresh
            frontier = fresh
    return tuple(gens)


def light_associativity(t: CayleyTable) -> Verdict:
    """Associativity checked only for middle elements in a generating set; same
    verdict as the direct scan (falls back to it so the witness is the least one)."""
    rows = t.rows
    n = t.n
    for g in generating_set(t):
        rg = rows[g - 1]
        for a in range(n):
            ag = rows[a][g - 1]
            ra = rows[a]
            for b in range(n):
                if rows[ag - 1][b] != ra[rg[b] - 1]:
                    return is_associative(t)
    return Verdict(True)


def is_commutative(t: CayleyTable) -> Verdict:
    rows = t.rows
    for a in range(t.n):
        for b in range(t.n):
            if rows[a][b] != rows[b][a]:
                return Verdict(False, (a + 1, b + 1))
    return Verdict(True)


def idempotents(t: CayleyTable) -> tuple[int, ...]:
    return tuple(e for e in t.elements() if t.product(e, e) == e)


def is_regular(t: CayleyTable) -> Verdict:
    """Every a has some x with a·x·a = a. Requires associativity."""
    assoc = is_associative(t)
    if not assoc:
        raise NotASemigroupError(assoc.witness)
    for a in t.elements():
        if not any(t.product(t.product(a, x), a) == a for x in t.elements()):
            return Verdict(False, (a,))
    return Verdict(True)


def relabel(t: CayleyTable, perm: tuple[int, ...]) -> CayleyTable:
    """Rename element i to perm[i-1]; the result's (perm a)·(perm b) = perm(a·b)."""
    n = t.n
    inv = [0] * n
    for i, img in enumerate(perm):
        inv[img - 1] = i + 1
    rows = tuple(
        tuple(perm[t.product(inv[a], inv[b]) - 1] for b in range(n)) for a in range(n)
    )
    return CayleyTable(rows)


def _relabel_flat(rows, perm_zero, inv_zero, n):
    # 0-based relabel used by the canonical-form search; yields entries lazily
    for a in range(n):
        src_row = rows[inv_zero[a]]
        for b in range(n):
            yield perm_zero[src_row[inv_zero[b]] - 1] + 1


def canonical_form(t: CayleyTable) -> CayleyTable:
    """Lexicographically least relabeling; two tables are isomorphic iff equal here."""
    n = t.n
    rows = t.rows
    best = tuple(v for row in rows for v in row)
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, img in enumerate(perm):
            inv[img] = i
        smaller = False
        for i, v in enumerate(_relabel_flat(rows, perm, inv, n)):
            if v != best[i]:
                smaller = v < best[i]
                break
        if smaller:
            best = tuple(_relabel_flat(rows, perm, inv, n))
    return CayleyTable(tuple(tuple(best[a * n : (a + 1) * n]) for a in range(n)))


def is_canonical(t: CayleyTable) -> bool:
    """True iff no relabeling is lexicographically smaller (early exit)."""
    n = t.n
    rows = t.rows
    flat = tuple(v for row in rows for v in row)
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, img in enumerate(perm):
            inv[img] = i
        for i, v in enumerate(_relabel_flat(rows, perm, inv, n)):
            if v > flat[i]:
                break
            if v < flat[i]:
                return False
    return True


# small constructors used by fixtures and tests

def left_projection(n):
    """a·b = a (the left-zero semigroup)."""
    return CayleyTable(tuple(tuple(a for _ in range(n)) for a in range(1, n + 1)))


def right_projection(n):
    """a·b = b (the right-zero semigroup)."""
    return CayleyTable(tuple(tuple(range(1, n + 1)) for _ in range(n)))


def cyclic_group(n):
    """Z_n written multiplicatively; element 1 is the unit."""
    return CayleyTable(
        tuple(tuple((a + b) % n + 1 for b in range(n)) for a in range(n))
    )


def chain_semilattice(n):
    """The meet table of the chain 1 < 2 < ... < n."""
    return CayleyTable(tuple(tuple(min(a, b) for b in range(1, n + 1)) for a in range(1, n + 1)))
