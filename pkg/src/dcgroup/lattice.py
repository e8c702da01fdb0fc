"""Subgroups and subgroup lattice enumeration.

Subgroups of groups up to 2^16 elements carry a bitset of member ids (a
Python int), which makes dedup, subset tests and meets cheap integer ops.
Subgroups of larger parents carry a sorted id array instead and support the
subset of operations that never materialize the full lattice.

``all_subgroups`` computes the full lattice as the join-closure of the cyclic
subgroups: every subgroup is the join of the cyclic subgroups it contains, so
iterating joins with cyclic atoms to a fixpoint enumerates everything. Joins
are explored along increasing atom index, which prunes the worklist without
losing completeness (any subgroup is the join of its atoms taken in
increasing index order).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteGroup, TableGroup
from .errors import (
    NotNormal,
    OrderCapExceeded,
    ParentMismatch,
)

__all__ = [
    "BITSET_CAP",
    "LATTICE_CAP",
    "Subgroup",
    "SubgroupLattice",
    "closure",
    "all_subgroups",
    "meet",
    "join",
    "maximal_subgroups",
    "normal_closure",
    "is_normal",
    "subgroup_as_group",
    "subgroups_brute",
    "trivial_subgroup",
    "full_subgroup",
]

# Parents above this order store subgroups as sorted id arrays, not bitsets.
BITSET_CAP = 1 << 16

# Default order cap for full lattice enumeration.
LATTICE_CAP = 2000


class Subgroup:
    """A subgroup of a fixed parent group, identified by its member set."""

    __slots__ = ("parent", "bits", "order", "gens", "_ids")

    def __init__(
        self,
        parent: FiniteGroup,
        bits: int | None,
        gens: Sequence[int],
        ids: Sequence[int] | np.ndarray | None = None,
        order: int | None = None,
    ):
        self.parent = parent
        self.bits = bits
        self.gens = tuple(gens)
        if ids is not None:
            arr = np.asarray(ids, dtype=np.int64)
            self._ids = arr
        else:
            self._ids = None
        if order is not None:
            self.order = order
        elif bits is not None:
            self.order = bits.bit_count()
        elif self._ids is not None:
            self.order = int(self._ids.size)
        else:
            raise ParentMismatch("subgroup needs a member bitset or id array")
        if bits is None and self._ids is None:
            raise ParentMismatch("subgroup needs a member bitset or id array")

    # -- members ---------------------------------------------------------

    def ids(self) -> np.ndarray:
        if self._ids is None:
            self._ids = np.array(_bits_to_ids(self.bits), dtype=np.int64)
        return self._ids

    def contains(self, x: int) -> bool:
        if self.bits is not None:
            return bool((self.bits >> x) & 1)
        i = int(np.searchsorted(self.ids(), x))
        return i < self.order and int(self.ids()[i]) == x

    def issubset(self, other: "Subgroup") -> bool:
        _same_parent(self, other)
        if self.bits is not None and other.bits is not None:
            return self.bits & ~other.bits == 0
        return bool(np.isin(self.ids(), other.ids(), assume_unique=True).all())

    def __le__(self, other: "Subgroup") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Subgroup") -> bool:
        return self.order < other.order and self.issubset(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        _same_parent(self, other)
        if self.bits is not None and other.bits is not None:
            return self.bits == other.bits
        return self.order == other.order and bool(
            (self.ids() == other.ids()).all()
        )

    def __hash__(self) -> int:
        if self.bits is not None:
            return hash((id(self.parent), self.bits))
        return hash((id(self.parent), self.ids().tobytes()))

    def sort_key(self):
        if self.bits is not None:
            return (self.order, self.bits)
        return (self.order, tuple(int(v) for v in self.ids()))

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_full(self) -> bool:
        return self.order == self.parent.order

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent.name!r}>"


def _same_parent(a: Subgroup, b: Subgroup):
    if a.parent is not b.parent:
        raise ParentMismatch(
            f"subgroups of {a.parent.name!r} and {b.parent.name!r} do not mix"
        )


def _bits_to_ids(bits: int) -> list[int]:
    out = []
    x = bits
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _ids_to_bits(ids: Iterable[int]) -> int:
    b = 0
    for v in ids:
        b |= 1 << int(v)
    return b


def _member_bytes_to_bits(member: bytearray) -> int:
    packed = np.packbits(
        np.frombuffer(bytes(member), dtype=np.uint8), bitorder="little"
    )
    return int.from_bytes(packed.tobytes(), "little")


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    if G.order <= BITSET_CAP:
        return Subgroup(G, 1, (), ids=[0])
    return Subgroup(G, None, (), ids=[0])


def full_subgroup(G: FiniteGroup) -> Subgroup:
    gens = G.generators
    if G.order <= BITSET_CAP:
        return Subgroup(G, (1 << G.order) - 1, gens, order=G.order)
    return Subgroup(G, None, gens, ids=np.arange(G.order, dtype=np.int64))


# ---------------------------------------------------------------------------
# closure


def _orbit_closure(table: list[int], n: int, seed: Sequence[int]):
    """Right-multiplication orbit of the identity under the seed."""
    member = bytearray(n)
    member[0] = 1
    elems = [0]
    for g in seed:
        if not member[g]:
            member[g] = 1
            elems.append(g)
    i = 0
    while i < len(elems):
        row = elems[i] * n
        i += 1
        for g in seed:
            t = table[row + g]
            if not member[t]:
                member[t] = 1
                elems.append(t)
    return member, elems


def _closure_vec(G: FiniteGroup, seed: Sequence[int]) -> np.ndarray:
    """Vectorized orbit closure for large parents; returns sorted ids."""
    member = np.zeros(G.order, dtype=bool)
    member[0] = True
    seed = sorted({int(s) for s in seed} - {0})
    if not seed:
        return np.array([0], dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        new = []
        for g in seed:
            t = G.mul_vec(frontier, g)
            fresh = t[~member[t]]
            if fresh.size:
                fresh = np.unique(fresh)
                member[fresh] = True
                new.append(fresh)
        frontier = np.concatenate(new) if new else np.empty(0, dtype=np.int64)
    return np.nonzero(member)[0].astype(np.int64)


def closure(G: FiniteGroup, seed: Iterable[int], gens: Sequence[int] | None = None) -> Subgroup:
    """Subgroup generated by the seed ids."""
    seed = [G.check_id(int(s)) for s in seed]
    if G.order <= BITSET_CAP and G.flat_table() is not None:
        member, elems = _orbit_closure(G.flat_table(), G.order, sorted(set(seed) - {0}))
        bits = _member_bytes_to_bits(member)
        sub_gens = tuple(gens) if gens is not None else tuple(sorted(set(seed) - {0}))
        return Subgroup(G, bits, sub_gens, ids=sorted(elems))
    ids = _closure_vec(G, seed)
    sub_gens = tuple(gens) if gens is not None else tuple(sorted(set(seed) - {0}))
    return Subgroup(G, None, sub_gens, ids=ids)


# ---------------------------------------------------------------------------
# full lattice enumeration


class SubgroupLattice:
    """All subgroups of a group, canonically ordered by (order, bitset)."""

    def __init__(self, parent: FiniteGroup, subgroups: list[Subgroup]):
        self.parent = parent
        self.subgroups = sorted(subgroups, key=Subgroup.sort_key)
        self._pos = {s.bits: i for i, s in enumerate(self.subgroups)}

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def find_bits(self, bits: int) -> Subgroup | None:
        i = self._pos.get(bits)
        return None if i is None else self.subgroups[i]

    def index(self, S: Subgroup) -> int:
        i = self._pos.get(S.bits)
        if i is None:
            raise ParentMismatch("subgroup not in lattice")
        return i

    @property
    def bottom(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def top(self) -> Subgroup:
        return self.subgroups[-1]

    def of_order(self, k: int) -> list[Subgroup]:
        return [s for s in self.subgroups if s.order == k]


def _element_orders(table: list[int], n: int) -> list[int]:
    orders = [1] * n
    for x in range(1, n):
        y = x
        k = 1
        while y != 0:
            y = table[y * n + x]
            k += 1
        orders[x] = k
    return orders


def _find_generators(table, n, member, elems, orders) -> tuple[int, ...]:
    """Greedy small generating set for a known subgroup (deterministic)."""
    target = len(elems)
    if target == 1:
        return ()
    pool = sorted(elems[1:], key=lambda e: (-orders[e], e))
    gens = [pool[0]]
    got, got_elems = _orbit_closure(table, n, gens)
    while len(got_elems) < target:
        for e in pool:
            if not got[e]:
                gens.append(e)
                break
        gens.sort()
        got, got_elems = _orbit_closure(table, n, gens)
    return tuple(gens)


def all_subgroups(G: FiniteGroup, cap: int = LATTICE_CAP) -> SubgroupLattice:
    """Enumerate every subgroup of G.

    Joins with cyclic atoms are explored along increasing atom index; a
    subgroup is (re)queued whenever it is reached by a path whose largest
    atom index is smaller than any seen before, so every increasing path is
    eventually covered.
    """
    if G.order > cap:
        raise OrderCapExceeded(f"|{G.name}| = {G.order} exceeds lattice cap {cap}")
    n = G.order
    table = G.flat_table()
    orders = _element_orders(table, n)

    # cyclic atoms, deduped, canonically ordered
    atom_of: dict[int, list[int]] = {}
    for x in range(1, n):
        member, elems = _orbit_closure(table, n, [x])
        bits = _member_bytes_to_bits(member)
        if bits not in atom_of:
            atom_of[bits] = [bits, x, sorted(elems)]
    atoms = sorted(atom_of.values(), key=lambda a: (len(a[2]), a[0]))
    A = len(atoms)

    # discovered subgroups: bits -> [gens, sorted ids]
    subs: dict[int, tuple[tuple[int, ...], list[int]]] = {1: ((), [0])}
    best: dict[int, int] = {}
    extended: dict[int, int] = {}
    union_memo: dict[int, int] = {}
    queue: deque[tuple[int, int]] = deque()

    for idx, (bits, gen, elems) in enumerate(atoms):
        subs[bits] = ((gen,), elems)
        best[bits] = idx + 1
        queue.append((bits, idx + 1))

    while queue:
        s_bits, start = queue.popleft()
        if best.get(s_bits, A) < start:
            continue  # stale entry; a better path requeued this subgroup
        stop = extended.get(s_bits, A)
        if start >= stop:
            continue
        extended[s_bits] = start
        s_gens, s_elems = subs[s_bits]
        s_order = len(s_elems)
        for a_idx in range(start, stop):
            a_bits, a_gen, a_elems = atoms[a_idx]
            if a_bits & ~s_bits == 0:
                continue
            u_key = s_bits | a_bits
            j_bits = union_memo.get(u_key)
            if j_bits is None:
                if s_order >= len(a_elems):
                    seed = list(s_gens) + [a_gen]
                else:
                    seed = [a_gen] + list(s_gens)
                member, elems = _orbit_closure(table, n, seed)
                j_bits = _member_bytes_to_bits(member)
                union_memo[u_key] = j_bits
                if j_bits not in subs:
                    elems.sort()
                    gens = _find_generators(table, n, member, elems, orders)
                    subs[j_bits] = (gens, elems)
            cand = a_idx + 1
            if cand < best.get(j_bits, A + 1):
                best[j_bits] = cand
                queue.append((j_bits, cand))

    out = [
        Subgroup(G, bits, gens, ids=elems)
        for bits, (gens, elems) in subs.items()
    ]
    return SubgroupLattice(G, out)


# ---------------------------------------------------------------------------
# lattice operations


def meet(a: Subgroup, b: Subgroup) -> Subgroup:
    """Intersection; always a subgroup."""
    _same_parent(a, b)
    G = a.parent
    if a.bits is not None and b.bits is not None:
        bits = a.bits & b.bits
        ids = _bits_to_ids(bits)
        table = G.flat_table()
        if table is not None:
            orders = _element_orders(table, G.order)
            member = bytearray(G.order)
            for v in ids:
                member[v] = 1
            gens = _find_generators(table, G.order, member, ids, orders)
        else:
            gens = tuple(v for v in ids if v != 0)
        return Subgroup(G, bits, gens, ids=ids)
    ids = np.intersect1d(a.ids(), b.ids(), assume_unique=True)
    return Subgroup(G, None, _generators_from_ids(G, ids), ids=ids)


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    """Smallest subgroup containing both; computed as a closure."""
    _same_parent(a, b)
    seed = list(a.gens or a.ids()[1:]) + list(b.gens or b.ids()[1:])
    return closure(a.parent, seed)


def _generators_from_ids(G: FiniteGroup, ids: np.ndarray) -> tuple[int, ...]:
    """Greedy generating set for a big-parent subgroup given its ids."""
    if ids.size == 1:
        return ()
    gens: list[int] = []
    have = np.array([0], dtype=np.int64)
    for _ in range(64):
        rest = ids[~np.isin(ids, have, assume_unique=True)]
        if rest.size == 0:
            break
        gens.append(int(rest[0]))
        have = _closure_vec(G, gens)
    return tuple(gens)


def maximal_subgroups(
    G: FiniteGroup, lattice: SubgroupLattice | None = None
) -> list[Subgroup]:
    """Proper subgroups not contained in any other proper subgroup."""
    if lattice is None:
        lattice = all_subgroups(G)
    proper = [s for s in lattice if not s.is_full]
    out = []
    for s in proper:
        if not any(
            t is not s and s.order < t.order and t.bits & s.bits == s.bits
            for t in proper
            if t.order % s.order == 0
        ):
            out.append(s)
    return out


def normal_closure(
    G: FiniteGroup,
    seed: Iterable[int],
    under: Sequence[int] | None = None,
) -> Subgroup:
    """Smallest subgroup containing the seed and closed under conjugation.

    Conjugators default to the generators of G, giving the normal closure in
    G; passing the generators of a subgroup H <= G containing the seed gives
    the normal closure in H instead.
    """
    gens = sorted({G.check_id(int(s)) for s in seed} - {0})
    conj = list(G.generators if under is None else under)
    if not gens:
        return trivial_subgroup(G)
    while True:
        sub = closure(G, gens, gens=tuple(gens))
        new = []
        for g in conj:
            for s in gens:
                c = G.conjugate(s, g)
                if not sub.contains(c):
                    new.append(c)
        if not new:
            return sub
        gens = sorted(set(gens) | set(new))


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    if S.parent is not G:
        raise ParentMismatch("subgroup of a different parent")
    return all(
        S.contains(G.conjugate(s, g)) for g in G.generators for s in S.gens
    )


def subgroup_as_group(S: Subgroup) -> tuple[TableGroup, list[int]]:
    """Relabel a subgroup as a standalone group.

    Returns the table group plus the embedding list: local id -> parent id.
    Local id 0 is the identity because parent id 0 sorts first.
    """
    G = S.parent
    ids = [int(v) for v in S.ids()]
    k = len(ids)
    if k > 4096:
        raise OrderCapExceeded(f"subgroup of order {k} too large to relabel")
    local = {v: i for i, v in enumerate(ids)}
    table = [local[G.mul(x, y)] for x in ids for y in ids]
    gens = [local[g] for g in S.gens] if S.gens else None
    H = TableGroup(table, k, generators=gens, name=f"{G.name}|sub{k}")
    return H, ids


def subgroups_brute(G: FiniteGroup, cap: int = 48) -> list[Subgroup]:
    """Independent subgroup enumerator used to validate ``all_subgroups``.

    Backtracking over elements in increasing order, closing each extension by
    repeated pairwise-product sweeps (no orbit closure, no atom joins).
    """
    if G.order > cap:
        raise OrderCapExceeded(f"brute enumeration capped at order {cap}")
    n = G.order
    table = G.flat_table()

    def naive_close(ids: frozenset[int]) -> frozenset[int]:
        cur = set(ids) | {0}
        while True:
            new = set()
            for x in cur:
                row = x * n
                for y in cur:
                    t = table[row + y]
                    if t not in cur:
                        new.add(t)
            if not new:
                return frozenset(cur)
            cur |= new

    found: set[frozenset[int]] = {frozenset([0])}
    visited: set[tuple[frozenset[int], int]] = set()
    stack: list[tuple[frozenset[int], int]] = [(frozenset([0]), 0)]
    while stack:
        S, last = stack.pop()
        for x in range(last, n):
            if x in S:
                continue
            T = naive_close(S | {x})
            found.add(T)
            key = (T, x + 1)
            if key not in visited:
                visited.add(key)
                stack.append((T, x + 1))

    out = []
    for mem in found:
        bits = _ids_to_bits(mem)
        ids = sorted(mem)
        out.append(Subgroup(G, bits, tuple(v for v in ids if v), ids=ids))
    return sorted(out, key=Subgroup.sort_key)
