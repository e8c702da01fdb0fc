"""Power-commutator presentations and their realized groups.

A presentation lists generators g_0 < g_1 < ... < g_{n-1} with prime relative
orders o_i, power words g_i^{o_i} = w_i, and commutator words [g_j, g_i] = w_ji
for j > i. Words on the right-hand side may only mention generators strictly
deeper than the ones on the left (index > i for power rules, index > j for
commutator rules), which makes collection from the left terminate and forces
the realized group to be a finite p-group of order prod(o_i).

Elements are encoded as mixed-radix integers: the normal form
g_0^{e_0} g_1^{e_1} ... g_{n-1}^{e_{n-1}} has id  sum e_i * s_{i+1}  where
s_i = o_i * o_{i+1} * ... * o_{n-1}. Multiplication is realized through
per-generator right-translation tables built once by a conjugation sweep, so
a product costs a handful of array lookups instead of a symbolic collection.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import TABLE_CAP, FiniteGroup
from .errors import (
    BadPresentation,
    CollectionLimitExceeded,
    InconsistentPresentation,
)

__all__ = [
    "PC_GEN_CAP",
    "COLLECT_LIMIT",
    "Word",
    "PcPresentation",
    "collect",
    "check_consistency",
    "PcGroup",
    "realize_pc_group",
]

# Presentations may use at most this many generators.
PC_GEN_CAP = 12

# Hard bound on rewriting steps in a single collection.
COLLECT_LIMIT = 10**7

Word = tuple[tuple[int, int], ...]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _normalize_word(word: Iterable[Sequence[int]], what: str) -> Word:
    out = []
    for letter in word:
        if len(letter) != 2:
            raise BadPresentation(f"{what}: letter {letter!r} is not (gen, exp)")
        g, e = int(letter[0]), int(letter[1])
        out.append((g, e))
    return tuple(out)


class PcPresentation:
    """Validated power-commutator presentation of a finite p-group.

    rel_orders   relative order o_i of each generator, all powers of one prime
    powers       {i: word} giving g_i^{o_i}; omitted means g_i^{o_i} = 1
    commutators  {(j, i): word} giving [g_j, g_i] for j > i; omitted means
                 the two generators commute

    Words are tuples of (generator, exponent) letters with strictly increasing
    generators and exponents in [1, o_gen). Right-hand sides must only mention
    generators deeper than j (commutators) or i (powers); violations raise
    BadPresentation.
    """

    def __init__(
        self,
        rel_orders: Sequence[int],
        powers: Mapping[int, Iterable[Sequence[int]]] | None = None,
        commutators: Mapping[tuple[int, int], Iterable[Sequence[int]]] | None = None,
    ):
        orders = tuple(int(o) for o in rel_orders)
        n = len(orders)
        if not 1 <= n <= PC_GEN_CAP:
            raise BadPresentation(f"need 1..{PC_GEN_CAP} generators, got {n}")
        for o in orders:
            if not _is_prime(o):
                raise BadPresentation(f"relative order {o} is not prime")
        if len(set(orders)) > 1:
            raise BadPresentation(f"mixed relative orders {sorted(set(orders))}")
        self.rel_orders = orders
        self.ngens = n
        self.prime = orders[0]

        pws: dict[int, Word] = {}
        for i, word in (powers or {}).items():
            i = int(i)
            if not 0 <= i < n:
                raise BadPresentation(f"power rule for unknown generator {i}")
            w = _normalize_word(word, f"power word of g{i}")
            self._check_word(w, min_gen=i + 1, what=f"power word of g{i}")
            if w:
                pws[i] = w
        self.powers = pws

        cms: dict[tuple[int, int], Word] = {}
        for key, word in (commutators or {}).items():
            j, i = int(key[0]), int(key[1])
            if not (0 <= i < j < n):
                raise BadPresentation(f"commutator key ({j}, {i}) needs j > i >= 0")
            w = _normalize_word(word, f"commutator word [g{j}, g{i}]")
            self._check_word(w, min_gen=j + 1, what=f"commutator word [g{j}, g{i}]")
            if w:
                cms[(j, i)] = w
        self.commutators = cms

    def _check_word(self, word: Word, min_gen: int, what: str) -> None:
        prev = -1
        for g, e in word:
            if not min_gen <= g < self.ngens:
                raise BadPresentation(
                    f"{what}: generator g{g} must have index >= {min_gen}"
                )
            if g <= prev:
                raise BadPresentation(f"{what}: generators must strictly increase")
            if not 1 <= e < self.rel_orders[g]:
                raise BadPresentation(
                    f"{what}: exponent {e} of g{g} outside [1, {self.rel_orders[g]})"
                )
            prev = g

    @property
    def order(self) -> int:
        out = 1
        for o in self.rel_orders:
            out *= o
        return out

    def __repr__(self) -> str:
        return (
            f"<PcPresentation n={self.ngens} p={self.prime} "
            f"order={self.order} powers={len(self.powers)} "
            f"commutators={len(self.commutators)}>"
        )


def collect(
    pres: PcPresentation,
    word: Iterable[Sequence[int]],
    limit: int = COLLECT_LIMIT,
) -> tuple[int, ...]:
    """Collect a word from the left into normal-form exponents.

    Repeatedly fixes the leftmost violation: an exponent outside [0, o_g) is
    reduced through the power rule, equal neighbours merge, and an out-of-order
    pair g^e h (g > h) rewrites to h (g w)^e with w = [g, h]. Purely symbolic;
    used as the independent reference for the table-based realization.
    """
    o = pres.rel_orders
    pws = pres.powers
    cms = pres.commutators
    letters: list[list[int]] = [[int(g), int(e)] for g, e in word if int(e) != 0]
    steps = 0
    k = 0
    while k < len(letters):
        steps += 1
        if steps > limit:
            raise CollectionLimitExceeded(f"collection exceeded {limit} steps")
        g, e = letters[k]
        if e == 0:
            del letters[k]
            k = max(0, k - 1)
            continue
        og = o[g]
        if not 0 <= e < og:
            q, r = divmod(e, og)
            repl: list[list[int]] = [[g, r]] if r else []
            u = pws.get(g, ())
            if q > 0:
                for _ in range(q):
                    repl.extend([gg, ee] for gg, ee in u)
            else:
                for _ in range(-q):
                    repl.extend([gg, -ee] for gg, ee in reversed(u))
            letters[k : k + 1] = repl
            k = max(0, k - 1)
            continue
        if k + 1 < len(letters):
            h, f = letters[k + 1]
            if f == 0:
                del letters[k + 1]
                continue
            if h == g:
                letters[k][1] = e + f
                del letters[k + 1]
                continue
            if h < g:
                w = cms.get((g, h), ())
                repl = [[h, 1]]
                for _ in range(e):
                    repl.append([g, 1])
                    repl.extend([gg, ee] for gg, ee in w)
                if f != 1:
                    repl.append([h, f - 1])
                letters[k : k + 2] = repl
                k = max(0, k - 1)
                continue
        k += 1
    out = [0] * pres.ngens
    for g, e in letters:
        out[g] = e
    return tuple(out)


def _nf_mul(pres: PcPresentation, a: tuple[int, ...], b: tuple[int, ...]):
    word = [(i, e) for i, e in enumerate(a) if e] + [(i, e) for i, e in enumerate(b) if e]
    return collect(pres, word)


def check_consistency(pres: PcPresentation) -> None:
    """Verify the overlap conditions that make normal forms well defined.

    Checks, via symbolic collection, that both bracketings of
    g_k (g_j g_i), g_j^{o_j} g_i, g_j g_i^{o_i}, and g_i^{o_i + 1} collect to
    the same normal form for all k > j > i. When every overlap closes, the
    realized group has exactly prod(o_i) elements; otherwise the presentation
    defines a proper quotient and InconsistentPresentation is raised with the
    first failing overlap as witness.
    """
    n = pres.ngens

    def gen(i: int) -> tuple[int, ...]:
        out = [0] * n
        out[i] = 1
        return tuple(out)

    def gen_pow(i: int, e: int) -> tuple[int, ...]:
        return collect(pres, [(i, e)])

    for j in range(n):
        for i in range(j):
            for k in range(j + 1, n):
                lhs = _nf_mul(pres, gen(k), _nf_mul(pres, gen(j), gen(i)))
                rhs = _nf_mul(pres, _nf_mul(pres, gen(k), gen(j)), gen(i))
                if lhs != rhs:
                    raise InconsistentPresentation(
                        f"overlap g{k}(g{j} g{i}) = {lhs} vs (g{k} g{j})g{i} = {rhs}"
                    )
            oj, oi = pres.rel_orders[j], pres.rel_orders[i]
            lhs = _nf_mul(pres, gen_pow(j, oj), gen(i))
            rhs = _nf_mul(pres, gen_pow(j, oj - 1), _nf_mul(pres, gen(j), gen(i)))
            if lhs != rhs:
                raise InconsistentPresentation(
                    f"overlap g{j}^{oj} g{i}: {lhs} vs {rhs}"
                )
            lhs = _nf_mul(pres, gen(j), gen_pow(i, oi))
            rhs = _nf_mul(pres, _nf_mul(pres, gen(j), gen(i)), gen_pow(i, oi - 1))
            if lhs != rhs:
                raise InconsistentPresentation(
                    f"overlap g{j} g{i}^{oi}: {lhs} vs {rhs}"
                )
    for i in range(n):
        oi = pres.rel_orders[i]
        lhs = _nf_mul(pres, gen(i), gen_pow(i, oi))
        rhs = _nf_mul(pres, gen_pow(i, oi), gen(i))
        if lhs != rhs:
            raise InconsistentPresentation(f"overlap g{i}^{oi + 1}: {lhs} vs {rhs}")


class PcGroup(FiniteGroup):
    """Realization of a consistent power-commutator presentation.

    Stores one right-translation table per generator: T[j] maps the id of a
    tail element r in U_j = <g_j, ..., g_{n-1}> to the id of r * g_j. A product
    x * y then walks y's digits front to back, translating x once per digit
    unit. Tables are built deepest generator first; the table for g_j needs the
    conjugation action of g_j on U_{j+1}, which is filled by dynamic
    programming over ids ordered by their deepest nonzero digit.
    """

    def __init__(self, pres: PcPresentation, name: str = ""):
        self.pres = pres
        n = pres.ngens
        o = pres.rel_orders
        sizes = [1] * (n + 1)
        for i in range(n - 1, -1, -1):
            sizes[i] = o[i] * sizes[i + 1]
        self.sizes = tuple(sizes)
        order = sizes[0]
        super().__init__(
            order, [sizes[j + 1] for j in range(n)], name or f"pc<{order}>"
        )
        self._tloc: list[np.ndarray | None] = [None] * n
        self._left_cache: dict[int, np.ndarray] = {}
        self._inv_arr: np.ndarray | None = None
        for j in range(n - 1, -1, -1):
            self._tloc[j] = self._build_tloc(j)

    # -- table construction ----------------------------------------------

    def _word_element(self, word: Word) -> int:
        """Id of a normal-form word over generators with built tables."""
        x = 0
        for g, e in word:
            for _ in range(e):
                x = self._tstep(g, x)
        return x

    def _tstep(self, i: int, x: int) -> int:
        """x * g_i for scalar x."""
        r = x % self.sizes[i]
        return x - r + int(self._tloc[i][r])

    def _tstep_vec(self, i: int, xs: np.ndarray) -> np.ndarray:
        r = xs % self.sizes[i]
        return xs - r + self._tloc[i][r]

    def _mul_into_tail(self, xs: np.ndarray, c: int, top: int) -> np.ndarray:
        """Vector right-product xs * c where all ids live in U_top."""
        s = self.sizes
        o = self.pres.rel_orders
        for i in range(top, self.pres.ngens):
            d = (c // s[i + 1]) % o[i]
            for _ in range(d):
                xs = self._tstep_vec(i, xs)
        return xs

    def _build_tloc(self, j: int) -> np.ndarray:
        n = self.pres.ngens
        o = self.pres.rel_orders
        s = self.sizes
        szt = s[j + 1]
        # conjugation of U_{j+1} by g_j: phi[z] = g_j^-1 z g_j, filled by
        # deepest-digit recursion phi[y * g_m] = phi[y] * (g_m [g_m, g_j])
        phi = np.zeros(szt, dtype=np.int64)
        for m in range(j + 1, n):
            gamma = s[m + 1]
            for g, e in self.pres.commutators.get((m, j), ()):
                for _ in range(e):
                    gamma = self._tstep(g, gamma)
            stride = s[m]
            reach = szt // stride
            base = np.arange(reach, dtype=np.int64) * stride
            for e in range(1, o[m]):
                z = base + e * s[m + 1]
                phi[z] = self._mul_into_tail(phi[z - s[m + 1]], gamma, j + 1)
        tj = np.empty(s[j], dtype=np.int64)
        for e in range(o[j]):
            block = slice(e * szt, (e + 1) * szt)
            if e + 1 < o[j]:
                tj[block] = (e + 1) * szt + phi
            else:
                uj = self._word_element(self.pres.powers.get(j, ()))
                if uj == 0:
                    tj[block] = phi
                else:
                    tj[block] = np.array(
                        [self._lmul_tail(uj, int(v), j + 1) for v in phi],
                        dtype=np.int64,
                    )
        return tj

    def _lmul_tail(self, x: int, y: int, top: int) -> int:
        """Scalar product x * y with both ids in U_top."""
        s = self.sizes
        o = self.pres.rel_orders
        for i in range(top, self.pres.ngens):
            d = (y // s[i + 1]) % o[i]
            for _ in range(d):
                x = self._tstep(i, x)
        return x

    # -- group interface ----------------------------------------------------

    def _mul(self, x: int, y: int) -> int:
        return self._lmul_tail(x, y, 0)

    def _invert(self, x: int) -> int:
        return int(self._inverse_table()[x])

    def _inverse_table(self) -> np.ndarray:
        if self._inv_arr is None:
            n = self.pres.ngens
            o = self.pres.rel_orders
            s = self.sizes
            inv = np.zeros(self.order, dtype=np.int64)
            for m in range(n):
                gm = s[m + 1]
                gm_inv = self.power(gm, self.element_order(gm) - 1)
                left = self.left_mul_table(gm_inv, cache=False)
                stride = s[m]
                reach = self.order // stride
                base = np.arange(reach, dtype=np.int64) * stride
                for e in range(1, o[m]):
                    z = base + e * s[m + 1]
                    inv[z] = left[inv[z - s[m + 1]]]
            self._inv_arr = inv
        return self._inv_arr

    def left_mul_table(self, c: int, cache: bool = True) -> np.ndarray:
        """Array L with L[x] = c * x, by deepest-digit recursion."""
        if c in self._left_cache:
            return self._left_cache[c]
        n = self.pres.ngens
        o = self.pres.rel_orders
        s = self.sizes
        left = np.zeros(self.order, dtype=np.int64)
        left[0] = c
        for m in range(n):
            stride = s[m]
            reach = self.order // stride
            base = np.arange(reach, dtype=np.int64) * stride
            for e in range(1, o[m]):
                z = base + e * s[m + 1]
                left[z] = self._tstep_vec(m, left[z - s[m + 1]])
        if cache:
            if len(self._left_cache) >= 16:
                self._left_cache.clear()
            self._left_cache[c] = left
        return left

    def mul_vec(self, xs: np.ndarray, y: int) -> np.ndarray:
        self.check_id(y)
        xs = np.asarray(xs, dtype=np.int64)
        return self._mul_into_tail(xs.copy(), y, 0)

    def lmul_vec(self, y: int, xs: np.ndarray) -> np.ndarray:
        self.check_id(y)
        return self.left_mul_table(y)[np.asarray(xs, dtype=np.int64)]

    def mul_pairwise_vec(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64).copy()
        ys = np.asarray(ys, dtype=np.int64)
        s = self.sizes
        o = self.pres.rel_orders
        for i in range(self.pres.ngens):
            d = (ys // s[i + 1]) % o[i]
            for rep in range(1, o[i]):
                mask = d >= rep
                if mask.any():
                    xs[mask] = self._tstep_vec(i, xs[mask])
        return xs

    def inv_vec(self, xs: np.ndarray) -> np.ndarray:
        return self._inverse_table()[np.asarray(xs, dtype=np.int64)]

    def flat_table(self) -> list[int] | None:
        if self._table is None and self.order <= TABLE_CAP:
            rows = [self.left_mul_table(x, cache=False) for x in range(self.order)]
            self._table = [int(v) for row in rows for v in row]
            self._inv = [int(v) for v in self._inverse_table()]
        return self._table

    def digits(self, x: int) -> tuple[int, ...]:
        """Normal-form exponent vector of an id."""
        self.check_id(x)
        out = []
        for i in range(self.pres.ngens):
            out.append((x // self.sizes[i + 1]) % self.pres.rel_orders[i])
        return tuple(out)

    def id_of_digits(self, exps: Sequence[int]) -> int:
        if len(exps) != self.pres.ngens:
            raise BadPresentation(
                f"expected {self.pres.ngens} exponents, got {len(exps)}"
            )
        x = 0
        for i, e in enumerate(exps):
            if not 0 <= e < self.pres.rel_orders[i]:
                raise BadPresentation(f"exponent {e} out of range for g{i}")
            x += e * self.sizes[i + 1]
        return x


def realize_pc_group(pres: PcPresentation, name: str = "") -> PcGroup:
    """Check consistency, then build the translation-table realization."""
    check_consistency(pres)
    return PcGroup(pres, name=name)
