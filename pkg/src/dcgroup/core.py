"""Finite groups with dense integer element ids.

Every group in this package exposes the same minimal interface: elements are
the integers ``0..order-1``, id ``0`` is the identity, ``mul``/``inv`` realize
the group operation, and ``generators`` is a distinguished generating tuple.
Concrete backends store permutations, Cayley tables, or coset representatives;
downstream code only ever sees ids.

Conventions used throughout the package:

* commutator  ``[x, y] = x^-1 y^-1 x y``
* conjugate   ``x^y = y^-1 x y``
* iterated brackets are left-normed: ``[x, y, z] = [[x, y], z]``
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    InvalidId,
    NotNormal,
    UniverseOverflow,
)

__all__ = [
    "TABLE_CAP",
    "PERM_DEGREE_CAP",
    "CLOSURE_UNIVERSE_CAP",
    "FiniteGroup",
    "TableGroup",
    "PermGroup",
    "QuotientGroup",
    "make_perm_group",
    "quotient_group",
    "closure_ids",
    "perm_from_cycles",
    "perm_mul",
    "perm_inv",
    "perm_sign",
    "is_perm",
]

# Cayley tables are materialized only for groups up to this order; larger
# groups multiply through their backend representation.
TABLE_CAP = 4096

# Permutation groups act on at most this many points.
PERM_DEGREE_CAP = 16

# Hard cap on the number of elements any closure may enumerate.
CLOSURE_UNIVERSE_CAP = 10**6


# ---------------------------------------------------------------------------
# permutations as tuples of images, acting on 0..degree-1


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def perm_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Product pq = apply p first, then q."""
    if len(p) != len(q):
        raise DegreeMismatch(f"degree {len(p)} vs {len(q)}")
    return tuple(q[p[i]] for i in range(len(p)))


def perm_inv(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Build a permutation of 0..degree-1 from disjoint cycles of points."""
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            if not (0 <= a < degree):
                raise DegreeMismatch(f"point {a} outside degree {degree}")
            images[a] = b
    if not is_perm(images):
        raise DegreeMismatch(f"cycles {list(cycles)} are not disjoint")
    return tuple(images)


# ---------------------------------------------------------------------------


class FiniteGroup:
    """Abstract finite group over dense ids 0..order-1 with identity 0."""

    def __init__(self, order: int, generators: Sequence[int], name: str = ""):
        self.order = int(order)
        self.generators = tuple(int(g) for g in generators)
        self.name = name or type(self).__name__
        self._table: list[int] | None = None
        self._inv: list[int] | None = None
        self._np: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._abelian: bool | None = None

    # -- backend interface ---------------------------------------------

    def _mul(self, x: int, y: int) -> int:
        raise NotImplementedError

    def _invert(self, x: int) -> int:
        raise NotImplementedError

    # -- public ops ------------------------------------------------------

    def check_id(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise InvalidId(f"id {x} outside [0, {self.order}) in {self.name}")
        return x

    def mul(self, x: int, y: int) -> int:
        if not (0 <= x < self.order and 0 <= y < self.order):
            raise InvalidId(f"ids ({x}, {y}) outside [0, {self.order}) in {self.name}")
        t = self._table
        if t is not None:
            return t[x * self.order + y]
        return self._mul(x, y)

    def inv(self, x: int) -> int:
        self.check_id(x)
        if self._inv is not None:
            return self._inv[x]
        return self._invert(x)

    def power(self, x: int, k: int) -> int:
        """x**k by binary exponentiation; k may be negative."""
        self.check_id(x)
        if k < 0:
            x = self.inv(x)
            k = -k
        acc = 0
        base = x
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def element_order(self, x: int) -> int:
        self.check_id(x)
        n = 1
        y = x
        while y != 0:
            y = self.mul(y, x)
            n += 1
        return n

    def conjugate(self, x: int, y: int) -> int:
        """x^y = y^-1 x y."""
        return self.mul(self.inv(y), self.mul(x, y))

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        return self.mul(self.inv(self.mul(y, x)), self.mul(x, y))

    def elements(self) -> range:
        return range(self.order)

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            gens = self.generators
            self._abelian = all(
                self.mul(a, b) == self.mul(b, a) for a in gens for b in gens
            )
        return self._abelian

    # -- bulk helpers ------------------------------------------------------

    def flat_table(self) -> list[int] | None:
        """Row-major Cayley table, cached; None above TABLE_CAP."""
        if self._table is None and self.order <= TABLE_CAP:
            n = self.order
            mul = self._mul
            self._table = [mul(x, y) for x in range(n) for y in range(n)]
            self._inv = [0] * n
            for x in range(n):
                row = self._table[x * n : (x + 1) * n]
                self._inv[x] = row.index(0)
        return self._table

    def np_table(self) -> np.ndarray | None:
        """Cayley table as a cached 2d array; None above TABLE_CAP."""
        if self._np is None:
            t = self.flat_table()
            if t is None:
                return None
            self._np = np.asarray(t, dtype=np.int64).reshape(self.order, self.order)
        return self._np

    def mul_vec(self, xs: np.ndarray, y: int) -> np.ndarray:
        """Right-multiply an id vector by a fixed element."""
        self.check_id(y)
        arr = self.np_table()
        if arr is not None:
            return arr[xs, y]
        return np.array([self._mul(int(x), y) for x in xs], dtype=np.int64)

    def lmul_vec(self, y: int, xs: np.ndarray) -> np.ndarray:
        """Left-multiply an id vector by a fixed element."""
        self.check_id(y)
        arr = self.np_table()
        if arr is not None:
            return arr[y, xs]
        return np.array([self._mul(y, int(x)) for x in xs], dtype=np.int64)

    def mul_pairwise_vec(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Elementwise products xs[i]*ys[i]."""
        arr = self.np_table()
        if arr is not None:
            return arr[xs, ys]
        return np.array(
            [self._mul(int(x), int(y)) for x, y in zip(xs, ys)], dtype=np.int64
        )

    def pow_vec(self, xs: np.ndarray, k: int) -> np.ndarray:
        """Elementwise k-th powers, k >= 0."""
        if k < 0:
            raise InvalidId("pow_vec exponent must be nonnegative")
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros(len(xs), dtype=np.int64)
        base = xs.copy()
        while k:
            if k & 1:
                acc = self.mul_pairwise_vec(acc, base)
            k >>= 1
            if k:
                base = self.mul_pairwise_vec(base, base)
        return acc

    def inv_vec(self, xs: np.ndarray) -> np.ndarray:
        """Elementwise inverses."""
        self.flat_table()
        if self._inv is not None:
            return np.asarray(self._inv, dtype=np.int64)[xs]
        return np.array([self._invert(int(x)) for x in xs], dtype=np.int64)

    def element_orders(self) -> np.ndarray:
        """Orders of all elements, cached."""
        if self._orders is None:
            n = self.order
            out = np.ones(n, dtype=np.int64)
            cur = np.arange(n, dtype=np.int64)
            ids = np.arange(n, dtype=np.int64)
            alive = cur != 0
            k = 1
            while alive.any():
                cur[alive] = self.mul_pairwise_vec(cur[alive], ids[alive])
                k += 1
                just_closed = alive & (cur == 0)
                out[just_closed] = k
                alive = alive & (cur != 0)
            self._orders = out
        return self._orders

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r} order={self.order}>"


class TableGroup(FiniteGroup):
    """Group given by an explicit row-major Cayley table."""

    def __init__(
        self,
        table: Sequence[int],
        order: int,
        generators: Sequence[int] | None = None,
        name: str = "",
    ):
        if len(table) != order * order:
            raise InvalidId(f"table length {len(table)} != {order}^2")
        if generators is None:
            generators = _default_generators(table, order)
        super().__init__(order, generators, name)
        self._table = [int(v) for v in table]
        n = order
        self._inv = [0] * n
        for x in range(n):
            self._inv[x] = self._table[x * n : (x + 1) * n].index(0)

    def _mul(self, x: int, y: int) -> int:
        return self._table[x * self.order + y]

    def _invert(self, x: int) -> int:
        return self._inv[x]


def _default_generators(table: Sequence[int], order: int) -> list[int]:
    """Greedy small generating set for a table group."""
    gens: list[int] = []
    reached = {0}
    for x in range(1, order):
        if x in reached:
            continue
        gens.append(x)
        frontier = [0]
        reached = {0}
        while frontier:
            e = frontier.pop()
            for g in gens:
                t = table[e * order + g]
                if t not in reached:
                    reached.add(t)
                    frontier.append(t)
        if len(reached) == order:
            break
    return gens


class PermGroup(FiniteGroup):
    """Permutation group closed from generator permutations.

    Elements are enumerated once by Dimino's incremental coset method, so ids
    are stable for a fixed generator list. The identity receives id 0.
    """

    def __init__(
        self,
        gen_perms: Sequence[Sequence[int]],
        name: str = "",
        universe_cap: int = CLOSURE_UNIVERSE_CAP,
    ):
        if not gen_perms:
            raise DegreeMismatch("need at least one generator permutation")
        degree = len(gen_perms[0])
        if degree > PERM_DEGREE_CAP:
            raise DegreeMismatch(f"degree {degree} exceeds cap {PERM_DEGREE_CAP}")
        perms = []
        for p in gen_perms:
            if len(p) != degree:
                raise DegreeMismatch(f"degree {len(p)} vs {degree}")
            if not is_perm(p):
                raise DegreeMismatch(f"{tuple(p)} is not a permutation")
            perms.append(tuple(int(i) for i in p))

        elements = _dimino(perms, degree, universe_cap)
        index = {p: i for i, p in enumerate(elements)}
        super().__init__(
            len(elements), [index[p] for p in perms], name or f"perm<{degree}>"
        )
        self.degree = degree
        self.perms = elements
        self._index = index

    def _mul(self, x: int, y: int) -> int:
        return self._index[perm_mul(self.perms[x], self.perms[y])]

    def _invert(self, x: int) -> int:
        return self._index[perm_inv(self.perms[x])]

    def perm(self, x: int) -> tuple[int, ...]:
        return self.perms[self.check_id(x)]

    def id_of(self, p: Sequence[int]) -> int:
        key = tuple(p)
        if key not in self._index:
            raise InvalidId(f"permutation {key} not in {self.name}")
        return self._index[key]

    def sign(self, x: int) -> int:
        return perm_sign(self.perms[x])


def _dimino(
    gen_perms: list[tuple[int, ...]], degree: int, universe_cap: int
) -> list[tuple[int, ...]]:
    """Dimino's algorithm: close generators incrementally, a coset at a time."""
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity}

    def grow_coset(rep: tuple[int, ...], subgroup: list[tuple[int, ...]]):
        for s in subgroup:
            t = perm_mul(s, rep)
            if t not in index:
                if len(elements) >= universe_cap:
                    raise UniverseOverflow(f"closure exceeded {universe_cap} elements")
                index.add(t)
                elements.append(t)

    for i, g in enumerate(gen_perms):
        if g in index:
            continue
        prev = list(elements)  # subgroup generated so far
        grow_coset(g, prev)
        reps = [g]
        while reps:
            rep = reps.pop(0)
            for h in gen_perms[: i + 1]:
                t = perm_mul(rep, h)
                if t not in index:
                    grow_coset(t, prev)
                    reps.append(t)
    return elements


class QuotientGroup(FiniteGroup):
    """Quotient G/N over coset ids, with the projection map exposed.

    Cosets are numbered by discovery order from the identity coset, so the
    trivial coset N gets id 0. Products are computed through representatives,
    never through a precomputed coset table.
    """

    def __init__(self, parent: FiniteGroup, normal_ids: Sequence[int], name: str = ""):
        n_ids = sorted(int(v) for v in normal_ids)
        if not n_ids or n_ids[0] != 0:
            raise NotNormal("normal subgroup must contain the identity")
        member = np.zeros(parent.order, dtype=bool)
        member[n_ids] = True
        for g in parent.generators:
            for s in n_ids:
                if not member[parent.conjugate(s, g)]:
                    raise NotNormal(
                        f"subgroup of order {len(n_ids)} is not normal in {parent.name}"
                    )

        class_of = np.full(parent.order, -1, dtype=np.int64)
        n_arr = np.array(n_ids, dtype=np.int64)
        reps: list[int] = []

        def absorb(rep: int) -> int:
            cid = len(reps)
            reps.append(rep)
            coset = n_arr if rep == 0 else parent.mul_vec(n_arr, rep)
            class_of[coset] = cid
            return cid

        absorb(0)
        queue = [0]
        while queue:
            rep = queue.pop(0)
            for g in parent.generators:
                t = parent.mul(rep, g)
                if class_of[t] < 0:
                    absorb(int(t))
                    queue.append(int(t))
        if int((class_of < 0).sum()):
            raise NotNormal("cosets do not partition the parent group")

        super().__init__(
            len(reps),
            sorted({int(class_of[g]) for g in parent.generators} - {0}) or [0],
            name or f"{parent.name}/N{len(n_ids)}",
        )
        self.parent = parent
        self.reps = reps
        self._class_of = class_of

    def project(self, x: int) -> int:
        """Natural projection G -> G/N on element ids."""
        self.parent.check_id(x)
        return int(self._class_of[x])

    def _mul(self, x: int, y: int) -> int:
        return int(self._class_of[self.parent.mul(self.reps[x], self.reps[y])])

    def _invert(self, x: int) -> int:
        return int(self._class_of[self.parent.inv(self.reps[x])])


def make_perm_group(
    gen_perms: Sequence[Sequence[int]], name: str = ""
) -> PermGroup:
    return PermGroup(gen_perms, name=name)


def quotient_group(parent: FiniteGroup, normal_ids: Sequence[int], name: str = "") -> QuotientGroup:
    return QuotientGroup(parent, normal_ids, name=name)


def closure_ids(G: FiniteGroup, seed: Iterable[int]) -> list[int]:
    """Subgroup generated by seed ids, as a sorted id list.

    Orbit algorithm under right multiplication by the seed; inverses are not
    needed because the group is finite.
    """
    gens = sorted({G.check_id(int(s)) for s in seed} - {0})
    n = G.order
    table = G.flat_table()
    member = bytearray(n)
    member[0] = 1
    elems = [0]
    for g in gens:
        if not member[g]:
            member[g] = 1
            elems.append(g)
    i = 0
    if table is not None:
        while i < len(elems):
            row = elems[i] * n
            i += 1
            for g in gens:
                t = table[row + g]
                if not member[t]:
                    member[t] = 1
                    elems.append(t)
    else:
        mul = G.mul
        while i < len(elems):
            x = elems[i]
            i += 1
            for g in gens:
                t = mul(x, g)
                if not member[t]:
                    member[t] = 1
                    elems.append(t)
    elems.sort()
    return elems
