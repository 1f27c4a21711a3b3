"""Finite bounded lattices built from Hasse-diagram cover relations.

Elements are dense indices ``0..n-1`` with a label side table.  Element
sets are passed around as frozensets at the API boundary but stored and
manipulated internally as integer bitmasks, which keeps exhaustive
census sweeps cheap.  A :class:`Lattice` is immutable after
construction: the order matrix and the meet/join tables are computed
once and every later query is a table lookup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional


class LatticeError(ValueError):
    """Input does not describe a finite bounded lattice."""


class ParseError(LatticeError):
    """Malformed lattice file; carries 1-based line/column of the fault."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class LatticeSpec:
    """Raw parse result: labels in file order plus cover pairs."""

    labels: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen = set()
        for lab in self.labels:
            if not lab:
                raise LatticeError("empty label")
            if lab in seen:
                raise LatticeError(f"duplicate label {lab!r}")
            seen.add(lab)
        for lo, hi in self.covers:
            if lo == hi:
                raise LatticeError(f"cover pair ({lo!r}, {hi!r}) relates an element to itself")
            for lab in (lo, hi):
                if lab not in seen:
                    raise LatticeError(f"cover pair references unknown label {lab!r}")


def parse_lattice(text: str) -> LatticeSpec:
    """Parse the lattice file format.

    Format::

        elements: 0 c x a y b z d 1
        covers: 0<c, 0<x, c<a
            c<y, x<y          # continuation lines allowed

    ``#`` starts a comment; blank lines are ignored; whitespace around
    tokens is irrelevant.
    """
    labels: list[str] = []
    covers: list[tuple[str, str]] = []
    state = "elements"  # -> "covers"
    saw_elements = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        if state == "elements":
            if not stripped.startswith("elements:"):
                raise ParseError("expected 'elements:' line", lineno, line.index(stripped[0]) + 1)
            labels = stripped[len("elements:"):].split()
            if not labels:
                raise ParseError("no element labels given", lineno)
            saw_elements = True
            state = "covers"
            continue
        if stripped.startswith("covers:"):
            body = stripped[len("covers:"):]
        else:
            if not covers and "covers:" not in text:
                raise ParseError("expected 'covers:' line", lineno)
            body = stripped
        for chunk in body.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if chunk.count("<") != 1:
                col = line.find(chunk) + 1
                raise ParseError(f"expected a single 'a<b' pair, got {chunk!r}", lineno, col)
            lo, hi = (part.strip() for part in chunk.split("<"))
            if not lo or not hi:
                col = line.find(chunk) + 1
                raise ParseError(f"incomplete cover pair {chunk!r}", lineno, col)
            covers.append((lo, hi))
    if not saw_elements:
        raise ParseError("empty input: no 'elements:' line", 1)
    return LatticeSpec(tuple(labels), tuple(covers))


def serialize_spec(spec: LatticeSpec) -> str:
    lines = ["elements: " + " ".join(spec.labels)]
    pairs = ", ".join(f"{lo}<{hi}" for lo, hi in spec.covers)
    lines.append("covers:" + (" " + pairs if pairs else ""))
    return "\n".join(lines) + "\n"


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class Lattice:
    """A finite bounded lattice with precomputed order and meet/join tables.

    ``up[a]`` / ``down[a]`` are bitmasks of ``{x : a <= x}`` and
    ``{x : x <= a}``; ``meet_table`` / ``join_table`` are dense n*n
    tables of element indices.  Use :func:`build_lattice` to construct
    one — the constructor performs no validation of its own.
    """

    labels: tuple[str, ...]
    up: tuple[int, ...]
    down: tuple[int, ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(self.n)

    def _check_index(self, a: int):
        if not 0 <= a < self.n:
            raise IndexError(f"element index {a} out of range 0..{self.n - 1}")

    def leq(self, a: int, b: int) -> bool:
        self._check_index(a)
        self._check_index(b)
        return bool(self.up[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return self.join_table[a][b]

    def upper_set(self, a: int) -> frozenset[int]:
        """{x : a <= x}"""
        self._check_index(a)
        return _mask_to_set(self.up[a])

    def principal_ideal(self, a: int) -> frozenset[int]:
        """{x : x <= a}, the principal ideal (a]."""
        self._check_index(a)
        return _mask_to_set(self.down[a])

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Recover the Hasse diagram: b covers a iff a < b with nothing between."""
        out = []
        for a in self.elements():
            strict_up = self.up[a] & ~(1 << a)
            for b in self.elements():
                if not strict_up >> b & 1:
                    continue
                between = strict_up & self.down[b] & ~(1 << b)
                if between == 0:
                    out.append((a, b))
        return out

    def to_spec(self) -> LatticeSpec:
        return LatticeSpec(
            self.labels,
            tuple((self.labels[a], self.labels[b]) for a, b in self.cover_pairs()),
        )

    def serialize(self) -> str:
        return serialize_spec(self.to_spec())

    def label_set(self, members: Iterable[int]) -> set[str]:
        return {self.labels[i] for i in members}


def build_lattice(spec: LatticeSpec) -> Lattice:
    """Build and fully validate a Lattice from cover relations.

    Fails eagerly: cycles in the cover relation, missing/ambiguous
    bottom or top, and pairs lacking a unique meet or join are all
    rejected here so that downstream code never revalidates.
    """
    n = len(spec.labels)
    index = {lab: i for i, lab in enumerate(spec.labels)}
    cover_up: list[list[int]] = [[] for _ in range(n)]
    for lo, hi in spec.covers:
        cover_up[index[lo]].append(index[hi])

    # Reflexive-transitive closure by DFS, with cycle detection.
    up = [0] * n
    state = [0] * n  # 0 unvisited, 1 on stack, 2 done

    def closure(a: int) -> int:
        if state[a] == 2:
            return up[a]
        if state[a] == 1:
            raise LatticeError("covers contain a cycle (not a partial order)")
        state[a] = 1
        mask = 1 << a
        for b in cover_up[a]:
            mask |= closure(b)
        up[a] = mask
        state[a] = 2
        return mask

    for a in range(n):
        closure(a)

    down = [0] * n
    for a in range(n):
        for b in range(n):
            if up[a] >> b & 1:
                down[b] |= 1 << a

    full = (1 << n) - 1
    bottoms = [a for a in range(n) if up[a] == full]
    tops = [a for a in range(n) if down[a] == full]
    if len(bottoms) != 1:
        raise LatticeError("no unique bottom element")
    if len(tops) != 1:
        raise LatticeError("no unique top element")
    bottom, top = bottoms[0], tops[0]

    def extremum(common: int, bound_masks: tuple[int, ...], which: str, a: int, b: int) -> int:
        # meet: the element of `common` above every other member of `common`
        # (bound_masks=down); join dually (bound_masks=up).
        for m in range(n):
            if common >> m & 1 and common & ~bound_masks[m] == 0:
                return m
        raise LatticeError(
            f"elements {spec.labels[a]!r} and {spec.labels[b]!r} have no unique {which}"
        )

    down_t = tuple(down)
    up_t = tuple(up)
    meet_rows = []
    join_rows = []
    for a in range(n):
        mrow = []
        jrow = []
        for b in range(n):
            mrow.append(extremum(down[a] & down[b], down_t, "meet", a, b))
            jrow.append(extremum(up[a] & up[b], up_t, "join", a, b))
        meet_rows.append(tuple(mrow))
        join_rows.append(tuple(jrow))

    lat = Lattice(
        labels=tuple(spec.labels),
        up=up_t,
        down=down_t,
        meet_table=tuple(meet_rows),
        join_table=tuple(join_rows),
        bottom=bottom,
        top=top,
    )
    # Absorption is a consequence of correct bounds; assert cheaply anyway.
    for a in range(n):
        for b in range(n):
            if lat.meet(a, lat.join(a, b)) != a or lat.join(a, lat.meet(a, b)) != a:
                raise LatticeError("absorption law violated (internal error)")
    return lat


def lattice_from_text(text: str) -> Lattice:
    return build_lattice(parse_lattice(text))


def is_distributive(L: Lattice) -> bool:
    """Direct triple scan of a ^ (b v c) = (a ^ b) v (a ^ c)."""
    meet, join = L.meet_table, L.join_table
    for a in L.elements():
        ma = meet[a]
        for b in L.elements():
            ab = ma[b]
            for c in L.elements():
                if ma[join[b][c]] != join[ab][ma[c]]:
                    return False
    return True


def is_modular(L: Lattice) -> bool:
    """a <= c implies a v (b ^ c) = (a v b) ^ c."""
    meet, join = L.meet_table, L.join_table
    for a in L.elements():
        for c in L.elements():
            if not L.up[a] >> c & 1:
                continue
            for b in L.elements():
                if join[a][meet[b][c]] != meet[join[a][b]][c]:
                    return False
    return True


@dataclass(frozen=True)
class SublatticeWitness:
    """Five elements forming an M3 (diamond) or N5 (pentagon) sublattice.

    ``embedding`` is ordered (bottom, a, b, c, top); for N5 the chain is
    bottom < a < c < top with b incomparable to both.
    """

    kind: str  # "M3" | "N5"
    embedding: tuple[int, int, int, int, int]


def _classify_five(L: Lattice, subset: tuple[int, ...]) -> Optional[SublatticeWitness]:
    smask = 0
    for e in subset:
        smask |= 1 << e
    # closure under ambient meet and join
    for a, b in itertools.combinations(subset, 2):
        if not smask >> L.meet(a, b) & 1 or not smask >> L.join(a, b) & 1:
            return None
    bots = [e for e in subset if L.up[e] & smask == smask]
    tops = [e for e in subset if L.down[e] & smask == smask]
    if len(bots) != 1 or len(tops) != 1:
        return None
    bot, top = bots[0], tops[0]
    mids = [e for e in subset if e != bot and e != top]
    if len(mids) != 3:
        return None
    comparable = [
        (u, v)
        for u, v in itertools.permutations(mids, 2)
        if u != v and L.leq(u, v)
    ]
    ok_bounds = all(
        L.meet(u, v) == bot and L.join(u, v) == top
        for u, v in itertools.combinations(mids, 2)
        if not L.leq(u, v) and not L.leq(v, u)
    )
    if not ok_bounds:
        return None
    if not comparable:
        return SublatticeWitness("M3", (bot, mids[0], mids[1], mids[2], top))
    if len(comparable) == 1:
        a, c = comparable[0]
        b = next(e for e in mids if e not in (a, c))
        return SublatticeWitness("N5", (bot, a, b, c, top))
    return None


def find_forbidden_sublattice(L: Lattice) -> Optional[SublatticeWitness]:
    """Search for an M3 or N5 sublattice; None iff L is distributive."""
    if L.n < 5:
        return None
    for subset in itertools.combinations(L.elements(), 5):
        witness = _classify_five(L, subset)
        if witness is not None:
            return witness
    return None


def _element_invariant(L: Lattice, a: int) -> tuple:
    covers = L.cover_pairs()
    up_deg = sum(1 for lo, _ in covers if lo == a)
    down_deg = sum(1 for _, hi in covers if hi == a)
    return (bin(L.down[a]).count("1"), bin(L.up[a]).count("1"), down_deg, up_deg)


def invariant_profile(L: Lattice) -> tuple:
    """Isomorphism-invariant fingerprint; used as a census pre-filter."""
    return tuple(sorted(_element_invariant(L, a) for a in L.elements()))


def lattices_isomorphic(L1: Lattice, L2: Lattice) -> Optional[dict[int, int]]:
    """Exact order-isomorphism by backtracking with invariant pruning.

    Returns a mapping of L1 element indices to L2 element indices, or
    None when the lattices are not isomorphic.
    """
    if L1.n != L2.n:
        return None
    inv1 = [_element_invariant(L1, a) for a in L1.elements()]
    inv2 = [_element_invariant(L2, a) for a in L2.elements()]
    if sorted(inv1) != sorted(inv2):
        return None
    n = L1.n
    # Assign most-constrained (rarest invariant) elements first.
    order = sorted(range(n), key=lambda a: (inv1.count(inv1[a]), a))
    mapping: dict[int, int] = {}
    used = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        a = order[k]
        for b in range(n):
            if b in used or inv2[b] != inv1[a]:
                continue
            ok = True
            for a2, b2 in mapping.items():
                if L1.leq(a, a2) != L2.leq(b, b2) or L1.leq(a2, a) != L2.leq(b2, b):
                    ok = False
                    break
            if not ok:
                continue
            mapping[a] = b
            used.add(b)
            if extend(k + 1):
                return True
            del mapping[a]
            used.remove(b)
        return False

    if extend(0):
        return dict(mapping)
    return None
