"""Derived-subgroup landscape analysis.

DS(G) is the set of derived subgroups of all subgroups of G. This module
computes DS(G), decides whether it forms a chain under inclusion (groups
where it does are called DC here), and runs a census of structural claims
about such groups over a corpus. The census treats a failed claim as a
build-breaking event: every claim encodes a fact that must hold for the
implementation and corpus to be consistent.

Verdict methods, from strongest to weakest evidence:
  oracle                     full DS(G) enumerated and checked
  abelian-shortcut           DS(G) = {1} by commutativity
  two-group-criterion        the 2-group characterization (an iff, so it
                             may assert both True and False)
  sufficient-cyclic-derived  a proven sufficient condition fired
  sufficient-abelian-maximal
  sufficient-maximal-class
  properties-verified        order-p^7 reference shape: the properties the
                             source argument relies on were all confirmed,
                             but no oracle ran
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .core import FiniteGroup, QuotientGroup
from .errors import NotPGroup, NotTwoGroup, OrderCapExceeded, ParentMismatch
from .lattice import (
    LATTICE_CAP,
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    closure,
    full_subgroup,
    is_normal,
    join,
    maximal_subgroups,
    meet,
    subgroup_as_group,
    trivial_subgroup,
)
from .structure import (
    REGULARITY_CAP,
    _commutator_with_all,
    _subgroup_is_abelian,
    abelian_type,
    center,
    center_of_subgroup,
    derived_length,
    derived_subgroup,
    fundamental_subgroup,
    is_cyclic,
    is_p_abelian,
    is_pgroup,
    is_regular,
    lcs_of_subgroup,
    lower_central_series,
    min_generators,
    nilpotency_class,
    p_group_profile,
    pgroup_maximal_subgroups,
    quotient_is_cyclic,
    quotient_exponent,
    subgroup_exponent,
    subgroup_min_generators,
    sylow_decomposition,
)

__all__ = [
    "COMMUTATOR_IMAGE_CAP",
    "EXHAUSTIVE_PAIR_CAP",
    "SAMPLED_PAIRS",
    "DerivedSet",
    "derived_set",
    "is_chain",
    "SublatticeVerdict",
    "is_sublattice",
    "DcVerdict",
    "is_dc_oracle",
    "is_dc_fast",
    "dc_2group_predicate",
    "dc_sufficient_conditions",
    "witness_property_check",
    "commutator_image_lemma",
    "ClaimResult",
    "GroupContext",
    "CLAIMS",
    "census_claims",
    "pair_claims",
    "auto_pairs",
    "group_meta",
    "corpus_notes",
    "CensusReport",
    "theorem_census",
]

# Largest group on which the commutator-image search runs.
COMMUTATOR_IMAGE_CAP = 4096
# Largest group checked exhaustively over all (x, y) pairs.
EXHAUSTIVE_PAIR_CAP = 128
# Random pair sample size above the exhaustive cap.
SAMPLED_PAIRS = 10_000

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


# -- DS(G) --------------------------------------------------------------------


@dataclass
class DerivedSet:
    """Deduplicated {H' : H <= G} with one witness H per member."""

    parent: FiniteGroup
    members: list[Subgroup]
    witnesses: list[Subgroup]
    chain: list[Subgroup] | None
    incomparable_witness: tuple[Subgroup, Subgroup] | None


def derived_set(
    G: FiniteGroup,
    lattice: SubgroupLattice | None = None,
    cap: int = LATTICE_CAP,
) -> DerivedSet:
    """Map the derived subgroup over every subgroup and deduplicate.

    Members come out sorted by (order, membership); the chain arrangement
    or an incomparable pair is computed eagerly. Sorting by order makes the
    chain test local: distinct same-order members are incomparable, and for
    ascending orders comparability is exactly inclusion in the next member.
    """
    if lattice is None:
        lattice = all_subgroups(G, cap)
    if lattice.parent is not G:
        raise ParentMismatch("lattice belongs to a different group")
    seen: dict = {}
    for H in lattice.subgroups:
        d = derived_subgroup(G, H)
        key = d.bits if d.bits is not None else d.ids().tobytes()
        if key not in seen:
            seen[key] = (d, H)
    pairs = sorted(seen.values(), key=lambda t: t[0].sort_key())
    members = [d for d, _ in pairs]
    witnesses = [h for _, h in pairs]
    chain: list[Subgroup] | None = list(members)
    bad: tuple[Subgroup, Subgroup] | None = None
    for a, b in zip(members, members[1:]):
        if not a.issubset(b):
            chain, bad = None, (a, b)
            break
    return DerivedSet(G, members, witnesses, chain, bad)


def is_chain(ds: DerivedSet) -> bool:
    """True iff the members of ds are pairwise comparable."""
    return ds.chain is not None


@dataclass
class SublatticeVerdict:
    """Closure of DS(G) under lattice meet and join, with failure data."""

    ok: bool
    pair: tuple[Subgroup, Subgroup] | None = None
    missing: Subgroup | None = None
    op: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_sublattice(ds: DerivedSet, lattice: SubgroupLattice) -> SublatticeVerdict:
    """Decide whether DS(G) is closed under meet and join.

    A chain is closed trivially (meet and join of comparable members are the
    members themselves). Otherwise every pair is checked; the first missing
    meet or join is reported.
    """
    if lattice.parent is not ds.parent:
        raise ParentMismatch("lattice belongs to a different group")
    if ds.chain is not None:
        return SublatticeVerdict(True)
    keys = {m.bits if m.bits is not None else m.ids().tobytes() for m in ds.members}

    def known(s: Subgroup) -> bool:
        return (s.bits if s.bits is not None else s.ids().tobytes()) in keys

    for i, a in enumerate(ds.members):
        for b in ds.members[i + 1 :]:
            if a.issubset(b) or b.issubset(a):
                continue
            m = meet(a, b)
            if not known(m):
                return SublatticeVerdict(False, (a, b), m, "meet")
            j = join(a, b)
            if not known(j):
                return SublatticeVerdict(False, (a, b), j, "join")
    return SublatticeVerdict(True)


# -- verdicts ------------------------------------------------------------------


@dataclass
class DcVerdict:
    """Is DS(G) a chain, and how was that decided."""

    is_dc: bool
    method: str
    witness: tuple[Subgroup, Subgroup] | None = None
    ds_size: int | None = None


def is_dc_oracle(
    G: FiniteGroup,
    lattice: SubgroupLattice | None = None,
    cap: int = LATTICE_CAP,
) -> DcVerdict:
    """Ground-truth verdict from the full subgroup lattice.

    Abelian groups short-circuit at any order: every derived subgroup is
    trivial, so DS(G) = {1}. Everything else needs the lattice and raises
    OrderCapExceeded when enumeration would blow the cap.
    """
    if G.is_abelian:
        return DcVerdict(True, "abelian-shortcut", ds_size=1)
    ds = derived_set(G, lattice, cap)
    return DcVerdict(
        ds.chain is not None,
        "oracle",
        witness=ds.incomparable_witness,
        ds_size=len(ds.members),
    )


def dc_2group_predicate(G: FiniteGroup) -> bool:
    """Lattice-free DC test for 2-groups.

    True iff G' is cyclic, or G' is the rank-2 elementary abelian group and
    the nilpotency class is exactly 3. This characterization is exact, so
    False verdicts are as trustworthy as True ones.
    """
    if G.order == 1:
        return True
    pn = is_pgroup(G)
    if pn is None or pn[0] != 2:
        raise NotTwoGroup(f"order {G.order} is not a 2-power")
    dp = derived_subgroup(G)
    if is_cyclic(G, dp):
        return True
    if dp.order != 4 or not _subgroup_is_abelian(G, dp):
        return False
    return abelian_type(G, dp) == [2, 2] and nilpotency_class(G) == 3


CONDITION_CYCLIC = "cyclic-derived"
CONDITION_ABELIAN_MAXIMAL = "abelian-maximal"
CONDITION_MAXCLASS = "maximal-class-fundamental"

_CONDITION_METHOD = {
    CONDITION_CYCLIC: "sufficient-cyclic-derived",
    CONDITION_ABELIAN_MAXIMAL: "sufficient-abelian-maximal",
    CONDITION_MAXCLASS: "sufficient-maximal-class",
}


def dc_sufficient_conditions(G: FiniteGroup) -> set[str]:
    """Evaluate the three proven sufficient conditions on a p-group.

    cyclic-derived            G' is cyclic
    abelian-maximal           non-abelian, 2-generated, with an abelian
                              maximal subgroup
    maximal-class-fundamental maximal class of order p^n with n >= p+2,
                              p odd, and the fundamental subgroup C_G(K2/K4)
                              having derived subgroup of order exactly p

    Conditions target non-abelian groups; abelian input returns the empty
    set (the abelian shortcut is a separate, unconditional fact).
    """
    pn = is_pgroup(G)
    if pn is None:
        raise NotPGroup(f"order {G.order} is not a prime power")
    if G.is_abelian:
        return set()
    p, n = pn
    out: set[str] = set()
    dp = derived_subgroup(G)
    if is_cyclic(G, dp):
        out.add(CONDITION_CYCLIC)
    if min_generators(G) == 2:
        for M in pgroup_maximal_subgroups(G):
            if _subgroup_is_abelian(G, M):
                out.add(CONDITION_ABELIAN_MAXIMAL)
                break
    if p > 2 and n >= p + 2 and nilpotency_class(G) == n - 1:
        G1 = fundamental_subgroup(G)
        if derived_subgroup(G, G1).order == p:
            out.add(CONDITION_MAXCLASS)
    return out


def witness_property_check(G: FiniteGroup) -> dict[str, bool]:
    """Property bundle for the order-p^7 reference groups.

    Checks the facts the DC argument for those groups rests on: G' is
    non-abelian, the center is cyclic, G needs exactly two generators,
    exactly one maximal subgroup M0 has |M0'| = p, and every other maximal
    subgroup has cyclic center.
    """
    pn = is_pgroup(G)
    if pn is None:
        raise NotPGroup(f"order {G.order} is not a prime power")
    p, _ = pn
    dp = derived_subgroup(G)
    out = {
        "derived-nonabelian": not _subgroup_is_abelian(G, dp),
        "center-cyclic": is_cyclic(G, center(G)),
        "two-generated": min_generators(G) == 2,
    }
    maximals = pgroup_maximal_subgroups(G)
    small = [M for M in maximals if derived_subgroup(G, M).order == p]
    out["unique-small-derived-maximal"] = len(small) == 1
    if len(small) == 1:
        m0 = small[0]
        out["other-maximal-centers-cyclic"] = all(
            is_cyclic(G, center_of_subgroup(G, M))
            for M in maximals
            if M is not m0
        )
    else:
        out["other-maximal-centers-cyclic"] = False
    return out


def is_dc_fast(G: FiniteGroup) -> DcVerdict | None:
    """Best lattice-free verdict, or None when nothing applies.

    Tries, in order: the abelian shortcut, the exact 2-group criterion,
    the reference-shape property bundle (order p^7, p >= 5 only), and the
    three sufficient conditions. The bundle outranks the conditions at the
    one shape it targets so the report names the argument that certifies
    those groups.
    """
    if G.is_abelian:
        return DcVerdict(True, "abelian-shortcut", ds_size=1)
    pn = is_pgroup(G)
    if pn is None:
        return None
    p, n = pn
    if p == 2:
        return DcVerdict(dc_2group_predicate(G), "two-group-criterion")
    if p >= 5 and n == 7 and all(witness_property_check(G).values()):
        return DcVerdict(True, "properties-verified")
    conds = dc_sufficient_conditions(G)
    for name in (CONDITION_CYCLIC, CONDITION_ABELIAN_MAXIMAL, CONDITION_MAXCLASS):
        if name in conds:
            return DcVerdict(True, _CONDITION_METHOD[name])
    return None


# -- census machinery ----------------------------------------------------------


@dataclass
class ClaimResult:
    claim: str
    status: str
    detail: str = ""


def _skip(claim: str, why: str) -> ClaimResult:
    return ClaimResult(claim, SKIP, why)


def _verdict(claim: str, ok: bool, witness: str = "") -> ClaimResult:
    return ClaimResult(claim, PASS if ok else FAIL, "" if ok else witness)


class GroupContext:
    """Cached invariants for one census subject.

    Everything expensive is computed at most once; claims share the cache.
    The lattice is attempted once and remembered as None when enumeration
    exceeds the cap, so oracle-dependent claims skip uniformly.
    """

    def __init__(self, G: FiniteGroup, lattice_cap: int = LATTICE_CAP, seed: int = 2026):
        self.G = G
        self.cap = lattice_cap
        self.rng = np.random.default_rng([seed, G.order])
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def pn(self) -> tuple[int, int] | None:
        return self._get("pn", lambda: is_pgroup(self.G))

    @property
    def abelian(self) -> bool:
        return self.G.is_abelian

    @property
    def lattice(self) -> SubgroupLattice | None:
        def build():
            try:
                return all_subgroups(self.G, self.cap)
            except OrderCapExceeded:
                return None

        return self._get("lattice", build)

    @property
    def derived_pairs(self) -> list[tuple[Subgroup, Subgroup]] | None:
        def build():
            if self.lattice is None:
                return None
            return [
                (H, derived_subgroup(self.G, H)) for H in self.lattice.subgroups
            ]

        return self._get("derived_pairs", build)

    @property
    def ds(self) -> DerivedSet | None:
        def build():
            if self.lattice is None:
                return None
            pairs = self.derived_pairs
            seen: dict = {}
            for H, d in pairs:
                key = d.bits if d.bits is not None else d.ids().tobytes()
                if key not in seen:
                    seen[key] = (d, H)
            ordered = sorted(seen.values(), key=lambda t: t[0].sort_key())
            members = [d for d, _ in ordered]
            witnesses = [h for _, h in ordered]
            chain: list[Subgroup] | None = list(members)
            bad = None
            for a, b in zip(members, members[1:]):
                if not a.issubset(b):
                    chain, bad = None, (a, b)
                    break
            return DerivedSet(self.G, members, witnesses, chain, bad)

        return self._get("ds", build)

    @property
    def oracle(self) -> DcVerdict | None:
        def build():
            if self.abelian:
                return DcVerdict(True, "abelian-shortcut", ds_size=1)
            ds = self.ds
            if ds is None:
                return None
            return DcVerdict(
                ds.chain is not None,
                "oracle",
                witness=ds.incomparable_witness,
                ds_size=len(ds.members),
            )

        return self._get("oracle", build)

    @property
    def is_dc(self) -> bool | None:
        v = self.oracle
        return None if v is None else v.is_dc

    @property
    def derived(self) -> Subgroup:
        return self._get("derived", lambda: derived_subgroup(self.G))

    @property
    def dprime_abelian(self) -> bool:
        return self._get(
            "dprime_abelian", lambda: _subgroup_is_abelian(self.G, self.derived)
        )

    @property
    def dprime_rank(self) -> int | None:
        def build():
            if self.derived.order == 1:
                return 0
            try:
                return subgroup_min_generators(self.G, self.derived)
            except NotPGroup:
                return None

        return self._get("dprime_rank", build)

    @property
    def lcs(self) -> list[Subgroup]:
        return self._get("lcs", lambda: lower_central_series(self.G))

    @property
    def cl(self) -> int | None:
        series = self.lcs
        return len(series) - 1 if series[-1].order == 1 else None

    @property
    def dl(self) -> int | None:
        return self._get("dl", lambda: derived_length(self.G))

    @property
    def center(self) -> Subgroup:
        return self._get("center", lambda: center(self.G))

    @property
    def d(self) -> int:
        return self._get("d", lambda: min_generators(self.G))

    @property
    def exponent(self) -> int:
        return self._get("exponent", lambda: subgroup_exponent(self.G, full_subgroup(self.G)))

    @property
    def maximals(self) -> list[Subgroup] | None:
        def build():
            if self.pn is not None and self.G.order > 1:
                return pgroup_maximal_subgroups(self.G)
            if self.lattice is not None:
                return maximal_subgroups(self.G, self.lattice)
            return None

        return self._get("maximals", build)

    @property
    def has_abelian_maximal(self) -> bool | None:
        def build():
            ms = self.maximals
            if ms is None:
                return None
            return any(_subgroup_is_abelian(self.G, M) for M in ms)

        return self._get("has_abelian_maximal", build)

    @property
    def regular(self) -> bool | None:
        return self._get("regular", lambda: is_regular(self.G))

    @property
    def minimal_nonabelian(self) -> bool | None:
        def build():
            if self.abelian:
                return False
            ms = self.maximals
            if ms is None:
                return None
            return all(_subgroup_is_abelian(self.G, M) for M in ms)

        return self._get("minimal_nonabelian", build)

    def sample_pairs(self, count: int) -> tuple[np.ndarray, np.ndarray]:
        """All (x, y) pairs when small, a deterministic sample otherwise."""
        n = self.G.order
        if n <= EXHAUSTIVE_PAIR_CAP:
            ids = np.arange(n, dtype=np.int64)
            return np.repeat(ids, n), np.tile(ids, n)
        xs = self.rng.integers(0, n, count, dtype=np.int64)
        ys = self.rng.integers(0, n, count, dtype=np.int64)
        return xs, ys


def _comm_pairwise(G: FiniteGroup, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Elementwise [x, y] = x^-1 y^-1 x y."""
    a = G.mul_pairwise_vec(G.inv_vec(xs), G.inv_vec(ys))
    return G.mul_pairwise_vec(G.mul_pairwise_vec(a, xs), ys)


def commutator_image_lemma(G: FiniteGroup) -> ClaimResult:
    """Search for one element whose commutator image is exactly G'.

    Skipped unless G is a p-group whose derived subgroup needs at most two
    generators (the regime where such an element is guaranteed), or until
    the search space exceeds the cap. Abelian groups pass with the identity.
    """
    claim = "single-commutator-image"
    if is_pgroup(G) is None:
        raise NotPGroup(f"order {G.order} is not a prime power")
    if G.order > COMMUTATOR_IMAGE_CAP:
        return _skip(claim, f"order {G.order} beyond search cap {COMMUTATOR_IMAGE_CAP}")
    dp = derived_subgroup(G)
    if dp.order == 1:
        return ClaimResult(claim, PASS, "abelian; image of the identity")
    rank = subgroup_min_generators(G, dp)
    if rank > 2:
        return _skip(claim, f"derived subgroup needs {rank} generators")
    want = dp.ids()
    ids = np.arange(G.order, dtype=np.int64)
    for x in range(G.order):
        img = np.unique(_commutator_with_all(G, x, ids))
        if img.size == want.size and bool((img == want).all()):
            return ClaimResult(claim, PASS, f"element {x}")
    return ClaimResult(claim, FAIL, "no single element covers the derived subgroup")


# -- individual claims ---------------------------------------------------------
# Each claim states a fact, checks its hypothesis against the context, and
# returns pass/fail/skipped. Failure details carry concrete witnesses.


def _claim_chain_implies_sublattice(ctx: GroupContext) -> ClaimResult:
    claim = "chain-implies-sublattice"
    if ctx.lattice is None:
        return _skip(claim, "lattice beyond cap")
    ds = ctx.ds
    if ds.chain is None:
        return _skip(claim, "DS is not a chain")
    v = is_sublattice(ds, ctx.lattice)
    if v.ok:
        return ClaimResult(claim, PASS)
    return ClaimResult(
        claim,
        FAIL,
        f"missing {v.op} of orders ({v.pair[0].order}, {v.pair[1].order})",
    )


def _claim_dc_solvable(ctx: GroupContext) -> ClaimResult:
    claim = "dc-implies-solvable"
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    return _verdict(claim, ctx.dl is not None, "derived series does not reach 1")


def _claim_dc_sylow_split(ctx: GroupContext) -> ClaimResult:
    claim = "dc-sylow-split"
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    if ctx.pn is not None or ctx.G.order == 1:
        return _skip(claim, "prime-power order is a trivial split")
    n = ctx.G.order
    primes = []
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            primes.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        primes.append(m)
    for q in primes:
        split = sylow_decomposition(ctx.G, q, ctx.lattice)
        if split is not None and split.complement is not None and split.complement_abelian:
            return ClaimResult(claim, PASS, f"normal Sylow {q} with abelian complement")
    return ClaimResult(claim, FAIL, f"no prime in {primes} yields a split")


def _claim_dc_hereditary_subgroups(ctx: GroupContext) -> ClaimResult:
    claim = "dc-hereditary-subgroups"
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    pairs = ctx.derived_pairs
    for H in ctx.lattice.subgroups:
        # DS(H) = {S' : S <= H}; every S <= H is already in the lattice.
        seen: dict = {}
        for S, d in pairs:
            if S.issubset(H):
                key = d.bits if d.bits is not None else d.ids().tobytes()
                seen.setdefault(key, d)
        mem = sorted(seen.values(), key=lambda s: s.sort_key())
        for a, b in zip(mem, mem[1:]):
            if not a.issubset(b):
                return ClaimResult(
                    claim,
                    FAIL,
                    f"subgroup of order {H.order} has incomparable derived "
                    f"subgroups of orders {a.order} and {b.order}",
                )
    return ClaimResult(claim, PASS)


def _claim_dc_hereditary_quotients(ctx: GroupContext) -> ClaimResult:
    claim = "dc-hereditary-quotients"
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    for N in ctx.lattice.subgroups:
        if N.order in (1, ctx.G.order) or not is_normal(ctx.G, N):
            continue
        Q = QuotientGroup(ctx.G, [int(v) for v in N.ids()])
        v = is_dc_oracle(Q, cap=ctx.cap)
        if not v.is_dc:
            return ClaimResult(
                claim, FAIL, f"quotient by normal subgroup of order {N.order}"
            )
    return ClaimResult(claim, PASS)


def _claim_dc_small_p_metabelian(ctx: GroupContext) -> ClaimResult:
    claim = "dc-small-prime-metabelian"
    if ctx.pn is None or ctx.pn[0] > 3:
        return _skip(claim, "not a 2- or 3-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    dl = ctx.dl
    return _verdict(claim, dl is not None and dl <= 2, f"derived length {dl}")


def _claim_dc_lcs_factors_cyclic(ctx: GroupContext) -> ClaimResult:
    claim = "dc-lower-central-factors-cyclic"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    series = ctx.lcs
    for i in range(1, len(series) - 1):
        if not quotient_is_cyclic(ctx.G, series[i], series[i + 1]):
            return ClaimResult(
                claim, FAIL, f"factor at depth {i + 1} is not cyclic"
            )
    return ClaimResult(claim, PASS)


def _claim_dc_lcs_inside_derived(ctx: GroupContext) -> ClaimResult:
    claim = "dc-central-terms-inside-large-derived"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    terms = [K for K in ctx.lcs[1:] if K.order > 1]
    for H, Hp in ctx.derived_pairs:
        for K in terms:
            if K.order <= Hp.order and not K.issubset(Hp):
                return ClaimResult(
                    claim,
                    FAIL,
                    f"term of order {K.order} not inside derived subgroup of "
                    f"order {Hp.order} (subgroup order {H.order})",
                )
    return ClaimResult(claim, PASS)


def _claim_dc_gprime_center_cyclic(ctx: GroupContext) -> ClaimResult:
    claim = "dc-derived-center-intersection-cyclic"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    if ctx.dprime_rank != 2:
        return _skip(claim, f"derived subgroup rank is {ctx.dprime_rank}, not 2")
    I = meet(ctx.derived, ctx.center)
    return _verdict(claim, is_cyclic(ctx.G, I), f"intersection of order {I.order}")


def _claim_dc_gprime_center_last_term(ctx: GroupContext) -> ClaimResult:
    claim = "dc-derived-center-is-last-term"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    p = ctx.pn[0]
    if subgroup_exponent(ctx.G, ctx.derived) != p:
        return _skip(claim, "derived subgroup exponent exceeds p")
    I = meet(ctx.derived, ctx.center)
    K_last = ctx.lcs[ctx.cl - 1] if ctx.cl else trivial_subgroup(ctx.G)
    ok = I.order == p and I == K_last
    return _verdict(
        claim, ok, f"intersection order {I.order}, last term order {K_last.order}"
    )


def _claim_dc_regular_rank_bound(ctx: GroupContext) -> ClaimResult:
    claim = "dc-regular-derived-rank-bound"
    if ctx.pn is None or ctx.abelian or ctx.pn[0] == 2:
        return _skip(claim, "needs a non-abelian odd p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    if ctx.regular is not True:
        return _skip(claim, "not verified regular")
    p = ctx.pn[0]
    return _verdict(
        claim,
        ctx.dprime_rank <= p - 2,
        f"rank {ctx.dprime_rank} exceeds {p - 2}",
    )


def _claim_dc_abelian_maximal_rank_bound(ctx: GroupContext) -> ClaimResult:
    claim = "dc-abelian-maximal-derived-rank-bound"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    if ctx.has_abelian_maximal is not True:
        return _skip(claim, "no abelian maximal subgroup")
    p = ctx.pn[0]
    return _verdict(
        claim,
        ctx.dprime_rank <= p - 1,
        f"rank {ctx.dprime_rank} exceeds {p - 1}",
    )


def _claim_dc_derived_rank_bound(ctx: GroupContext) -> ClaimResult:
    claim = "dc-derived-rank-at-most-p"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    p = ctx.pn[0]
    return _verdict(
        claim, ctx.dprime_rank <= p, f"rank {ctx.dprime_rank} exceeds {p}"
    )


def _claim_dc_derived_rank_p_elementary(ctx: GroupContext) -> ClaimResult:
    claim = "dc-derived-rank-p-forces-elementary"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    p = ctx.pn[0]
    if ctx.dprime_rank != p:
        return _skip(claim, f"derived rank {ctx.dprime_rank} != {p}")
    if not ctx.dprime_abelian:
        return ClaimResult(claim, FAIL, "derived subgroup is non-abelian")
    at = abelian_type(ctx.G, ctx.derived)
    return _verdict(claim, at == [p] * p, f"abelian type {at}")


def _claim_dc_derived_power_index_bound(ctx: GroupContext) -> ClaimResult:
    claim = "dc-derived-power-index-bound"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    if not ctx.is_dc:
        return _skip(claim, "not a DC group")
    p = ctx.pn[0]
    powered = np.unique(ctx.G.pow_vec(ctx.derived.ids(), p))
    span = closure(ctx.G, [int(v) for v in powered if v != 0])
    index = ctx.derived.order // span.order
    return _verdict(claim, index <= p**p, f"index {index} exceeds p^p = {p**p}")


def _claim_two_group_characterization(ctx: GroupContext) -> ClaimResult:
    claim = "two-group-criterion-matches-oracle"
    if ctx.pn is None or ctx.pn[0] != 2:
        return _skip(claim, "not a 2-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    pred = dc_2group_predicate(ctx.G)
    return _verdict(
        claim,
        pred == ctx.is_dc,
        f"criterion says {pred}, oracle says {ctx.is_dc}",
    )


def _claim_sufficiency_sound(ctx: GroupContext) -> ClaimResult:
    claim = "sufficient-conditions-sound"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    conds = dc_sufficient_conditions(ctx.G)
    if not conds:
        return _skip(claim, "no sufficient condition fires")
    return _verdict(
        claim,
        ctx.is_dc,
        f"conditions {sorted(conds)} fired but the oracle says False",
    )


def _claim_maxclass_3group_dc(ctx: GroupContext) -> ClaimResult:
    claim = "maximal-class-3groups-are-dc"
    if ctx.pn is None or ctx.pn[0] != 3:
        return _skip(claim, "not a 3-group")
    p, n = ctx.pn
    if n < 5 or ctx.cl != n - 1:
        return _skip(claim, "not maximal class of order >= 3^5")
    if ctx.is_dc is None:
        return _skip(claim, "oracle beyond cap")
    return _verdict(claim, ctx.is_dc, "oracle says False")


def _claim_minimal_nonabelian_derived(ctx: GroupContext) -> ClaimResult:
    claim = "minimal-nonabelian-derived-order"
    mna = ctx.minimal_nonabelian
    if mna is None:
        return _skip(claim, "maximal subgroups unavailable beyond cap")
    if not mna:
        return _skip(claim, "not minimal non-abelian")
    dp = ctx.derived
    if ctx.pn is not None:
        return _verdict(
            claim, dp.order == ctx.pn[0], f"derived order {dp.order}"
        )
    pk = _prime_power_order(dp.order)
    return _verdict(
        claim, pk is not None, f"derived order {dp.order} is not a prime power"
    )


def _prime_power_order(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def _claim_commutator_image(ctx: GroupContext) -> ClaimResult:
    if ctx.pn is None:
        return _skip("single-commutator-image", "not a p-group")
    return commutator_image_lemma(ctx.G)


def _claim_metabelian_power_formula(ctx: GroupContext) -> ClaimResult:
    claim = "metabelian-power-commutator-formula"
    if ctx.abelian or ctx.dl != 2:
        return _skip(claim, "needs derived length exactly 2")
    G = ctx.G
    xs, ys = ctx.sample_pairs(SAMPLED_PAIRS)
    ns = [2, 3]
    if ctx.pn is not None and ctx.pn[0] not in ns:
        ns.append(ctx.pn[0])
    for n in ns:
        lhs = _comm_pairwise(G, G.pow_vec(xs, n), ys)
        acc = np.zeros(len(xs), dtype=np.int64)
        c = _comm_pairwise(G, xs, ys)
        for i in range(1, n + 1):
            acc = G.mul_pairwise_vec(acc, G.pow_vec(c, comb(n, i)))
            if i < n:
                c = _comm_pairwise(G, c, xs)
        bad = np.nonzero(lhs != acc)[0]
        if bad.size:
            k = int(bad[0])
            return ClaimResult(
                claim,
                FAIL,
                f"n={n}, x={int(xs[k])}, y={int(ys[k])}: "
                f"{int(lhs[k])} != {int(acc[k])}",
            )
    mode = "exhaustive" if G.order <= EXHAUSTIVE_PAIR_CAP else f"{len(xs)} sampled"
    return ClaimResult(claim, PASS, f"{mode} pairs, n in {ns}")


def _claim_twogen_metabelian_p_abelian_iff(ctx: GroupContext) -> ClaimResult:
    claim = "twogen-metabelian-p-abelian-iff"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.d != 2 or ctx.dl != 2:
        return _skip(claim, "needs a 2-generated metabelian group")
    pa = is_p_abelian(ctx.G)
    if pa is None:
        return _skip(claim, f"order beyond the {REGULARITY_CAP} definitional cap")
    p = ctx.pn[0]
    rhs = subgroup_exponent(ctx.G, ctx.derived) <= p and (ctx.cl or 0) < p
    return _verdict(claim, pa == rhs, f"p-abelian={pa} but exp/class side={rhs}")


def _claim_twogen_derived_twogen_abelian(ctx: GroupContext) -> ClaimResult:
    claim = "twogen-group-twogen-derived-abelian"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.d > 2 or (ctx.dprime_rank or 0) > 2:
        return _skip(claim, "group or derived subgroup needs >2 generators")
    return _verdict(claim, ctx.dprime_abelian, "derived subgroup is non-abelian")


def _claim_lcs_exponent_monotone(ctx: GroupContext) -> ClaimResult:
    claim = "lower-central-factor-exponents-descend"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    series = ctx.lcs
    exps = [
        quotient_exponent(ctx.G, series[i], series[i + 1])
        for i in range(len(series) - 1)
    ]
    for i in range(1, len(exps)):
        if exps[i] > exps[i - 1]:
            return ClaimResult(claim, FAIL, f"factor exponents {exps}")
    return ClaimResult(claim, PASS, f"factor exponents {exps}")


def _claim_class_lt_p_regular(ctx: GroupContext) -> ClaimResult:
    claim = "class-below-p-forces-regular"
    if ctx.pn is None:
        return _skip(claim, "not a p-group")
    p = ctx.pn[0]
    if (ctx.cl or 0) >= p:
        return _skip(claim, "class is at least p")
    if ctx.G.order > REGULARITY_CAP:
        return _skip(claim, "order beyond the definitional regularity cap")
    return _verdict(claim, is_regular(ctx.G) is True, "definitional test failed")


def _claim_regular_power_bracket(ctx: GroupContext) -> ClaimResult:
    claim = "regular-power-commutator-iff"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.regular is not True:
        return _skip(claim, "not verified regular")
    G = ctx.G
    p = ctx.pn[0]
    xs, ys = ctx.sample_pairs(2000)
    base = _comm_pairwise(G, xs, ys)
    for k, n in ((0, 1), (1, 0), (1, 1), (2, 0)):
        lhs = _comm_pairwise(G, G.pow_vec(xs, p**k), G.pow_vec(ys, p**n)) == 0
        rhs = G.pow_vec(base, p ** (k + n)) == 0
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            i = int(bad[0])
            return ClaimResult(
                claim,
                FAIL,
                f"k={k}, n={n}, x={int(xs[i])}, y={int(ys[i])}",
            )
    return ClaimResult(claim, PASS)


def _claim_lcs_match_when_derived_factors(ctx: GroupContext) -> ClaimResult:
    claim = "series-match-when-derived-factors"
    if ctx.cl is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian nilpotent group")
    if ctx.lattice is None:
        return _skip(claim, "lattice beyond cap")
    series = ctx.lcs
    K3 = series[2] if len(series) > 2 else trivial_subgroup(ctx.G)
    target = ctx.derived
    for H, Hp in ctx.derived_pairs:
        merged = join(Hp, K3) if K3.order > 1 else Hp
        if merged != target:
            continue
        sub_series = lcs_of_subgroup(ctx.G, H)
        for i in range(1, max(len(series), len(sub_series))):
            KG = series[i] if i < len(series) else trivial_subgroup(ctx.G)
            KH = sub_series[i] if i < len(sub_series) else trivial_subgroup(ctx.G)
            if KG != KH:
                return ClaimResult(
                    claim,
                    FAIL,
                    f"subgroup of order {H.order}: term {i + 1} differs "
                    f"({KG.order} vs {KH.order})",
                )
    return ClaimResult(claim, PASS)


def _claim_twogen_abelian_maximal_center(ctx: GroupContext) -> ClaimResult:
    claim = "twogen-abelian-maximal-center-intersection"
    if ctx.pn is None or ctx.abelian:
        return _skip(claim, "needs a non-abelian p-group")
    if ctx.d != 2 or ctx.has_abelian_maximal is not True:
        return _skip(claim, "needs d=2 and an abelian maximal subgroup")
    p = ctx.pn[0]
    I = meet(ctx.derived, ctx.center)
    K_last = ctx.lcs[ctx.cl - 1]
    ok = I == K_last and I.order == p
    return _verdict(
        claim, ok, f"intersection order {I.order}, last term order {K_last.order}"
    )


def _claim_maxclass_3group_fundamental(ctx: GroupContext) -> ClaimResult:
    claim = "maximal-class-3group-fundamental-subgroup"
    if ctx.pn is None or ctx.pn[0] != 3:
        return _skip(claim, "not a 3-group")
    p, n = ctx.pn
    if n < 4 or ctx.cl != n - 1:
        return _skip(claim, "not maximal class of order >= 3^4")
    G1 = fundamental_subgroup(ctx.G)
    if _subgroup_is_abelian(ctx.G, G1):
        return ClaimResult(claim, PASS, "fundamental subgroup abelian")
    T, _ = subgroup_as_group(G1)
    prof = p_group_profile(T)
    return _verdict(
        claim,
        prof.minimal_nonabelian,
        "fundamental subgroup neither abelian nor minimal non-abelian",
    )


def _claim_maxclass_nonfundamental_maximals(ctx: GroupContext) -> ClaimResult:
    claim = "maximal-class-other-maximals-maximal-class"
    if ctx.pn is None or ctx.pn[0] == 2:
        return _skip(claim, "needs an odd p-group")
    p, n = ctx.pn
    if n < p + 2 or ctx.cl != n - 1:
        return _skip(claim, f"needs maximal class with n >= p+2 = {p + 2}")
    G1 = fundamental_subgroup(ctx.G)
    for M in ctx.maximals:
        if M == G1:
            continue
        sub_series = lcs_of_subgroup(ctx.G, M)
        cl_m = len(sub_series) - 1 if sub_series[-1].order == 1 else None
        if cl_m != n - 2:
            return ClaimResult(
                claim,
                FAIL,
                f"maximal subgroup besides the fundamental one has class {cl_m}, "
                f"wanted {n - 2}",
            )
    return ClaimResult(claim, PASS)


def _claim_p7_witness_properties(ctx: GroupContext) -> ClaimResult:
    claim = "large-witness-property-bundle"
    if ctx.pn is None or ctx.pn[0] < 5 or ctx.pn[1] != 7:
        return _skip(claim, "order is not p^7 with p >= 5")
    props = witness_property_check(ctx.G)
    bad = sorted(k for k, v in props.items() if not v)
    return _verdict(claim, not bad, f"failed properties: {bad}")


CLAIMS: list = [
    ("chain-implies-sublattice", _claim_chain_implies_sublattice),
    ("dc-implies-solvable", _claim_dc_solvable),
    ("dc-sylow-split", _claim_dc_sylow_split),
    ("dc-hereditary-subgroups", _claim_dc_hereditary_subgroups),
    ("dc-hereditary-quotients", _claim_dc_hereditary_quotients),
    ("dc-small-prime-metabelian", _claim_dc_small_p_metabelian),
    ("dc-lower-central-factors-cyclic", _claim_dc_lcs_factors_cyclic),
    ("dc-central-terms-inside-large-derived", _claim_dc_lcs_inside_derived),
    ("dc-derived-center-intersection-cyclic", _claim_dc_gprime_center_cyclic),
    ("dc-derived-center-is-last-term", _claim_dc_gprime_center_last_term),
    ("dc-regular-derived-rank-bound", _claim_dc_regular_rank_bound),
    ("dc-abelian-maximal-derived-rank-bound", _claim_dc_abelian_maximal_rank_bound),
    ("dc-derived-rank-at-most-p", _claim_dc_derived_rank_bound),
    ("dc-derived-rank-p-forces-elementary", _claim_dc_derived_rank_p_elementary),
    ("dc-derived-power-index-bound", _claim_dc_derived_power_index_bound),
    ("two-group-criterion-matches-oracle", _claim_two_group_characterization),
    ("sufficient-conditions-sound", _claim_sufficiency_sound),
    ("maximal-class-3groups-are-dc", _claim_maxclass_3group_dc),
    ("minimal-nonabelian-derived-order", _claim_minimal_nonabelian_derived),
    ("single-commutator-image", _claim_commutator_image),
    ("metabelian-power-commutator-formula", _claim_metabelian_power_formula),
    ("twogen-metabelian-p-abelian-iff", _claim_twogen_metabelian_p_abelian_iff),
    ("twogen-group-twogen-derived-abelian", _claim_twogen_derived_twogen_abelian),
    ("lower-central-factor-exponents-descend", _claim_lcs_exponent_monotone),
    ("class-below-p-forces-regular", _claim_class_lt_p_regular),
    ("regular-power-commutator-iff", _claim_regular_power_bracket),
    ("series-match-when-derived-factors", _claim_lcs_match_when_derived_factors),
    ("twogen-abelian-maximal-center-intersection", _claim_twogen_abelian_maximal_center),
    ("maximal-class-3group-fundamental-subgroup", _claim_maxclass_3group_fundamental),
    ("maximal-class-other-maximals-maximal-class", _claim_maxclass_nonfundamental_maximals),
    ("large-witness-property-bundle", _claim_p7_witness_properties),
]


def census_claims(
    G: FiniteGroup, lattice_cap: int = LATTICE_CAP, seed: int = 2026
) -> list[ClaimResult]:
    """Run every registered claim against one group."""
    ctx = GroupContext(G, lattice_cap=lattice_cap, seed=seed)
    return [fn(ctx) for _, fn in CLAIMS]


# -- product-pair claims -------------------------------------------------------


def group_meta(gid: str, G: FiniteGroup) -> tuple[str, int, bool, int | None]:
    """(id, order, abelian, p) row used for pair selection."""
    pn = is_pgroup(G)
    return (gid, G.order, G.is_abelian, None if pn is None else pn[0])


def auto_pairs(
    entries: Sequence[tuple[str, int, bool, int | None]],
    max_left: int = 64,
    max_product: int = 128,
    limit: int = 12,
) -> list[tuple[str, str]]:
    """Deterministic (G, A) id pairs for the product claims.

    Entries are (id, order, abelian, p) rows; G ranges over non-abelian
    p-groups, A over p-groups for the same prime. Pairs come out ordered
    by id and truncated to the limit. The product bound stays small because
    the claims run the subgroup-lattice oracle on G x A, whose cost grows
    with the subgroup count, not the order.
    """
    info = {gid: (order, ab, p) for gid, order, ab, p in entries}
    lefts = sorted(
        gid
        for gid, order, ab, p in entries
        if not ab and p is not None and order <= max_left
    )
    rights = sorted(gid for gid, _, _, p in entries if p is not None)
    out: list[tuple[str, str]] = []
    for gid in lefts:
        for aid in rights:
            og, _, pg = info[gid]
            oa, _, pa = info[aid]
            if pg != pa or og * oa > max_product:
                continue
            out.append((gid, aid))
            if len(out) >= limit:
                return out
    return out


def pair_claims(
    G: FiniteGroup, A: FiniteGroup, lattice_cap: int = LATTICE_CAP
) -> list[ClaimResult]:
    """Product claims for one (G, A) pair of same-prime p-groups.

    Direct: G x A is DC iff G is DC and A is abelian.
    Central (abelian A sharing a prime-order central element): the glued
    product is DC iff G is.
    """
    from .constructors import central_product, direct_product

    out: list[ClaimResult] = []
    left = is_dc_oracle(G, cap=lattice_cap)
    want = left.is_dc and A.is_abelian
    try:
        got = is_dc_oracle(direct_product(G, A), cap=lattice_cap)
        out.append(
            _verdict(
                "direct-product-dc-iff",
                got.is_dc == want,
                f"product verdict {got.is_dc}, factors say {want}",
            )
        )
    except OrderCapExceeded:
        out.append(_skip("direct-product-dc-iff", "product lattice beyond cap"))

    claim = "central-product-dc-iff"
    if not A.is_abelian:
        out.append(_skip(claim, "right factor is not abelian"))
        return out
    p = is_pgroup(G)[0]
    za = _central_element_of_order(G, p)
    zb = _central_element_of_order(A, p)
    if za is None or zb is None:
        out.append(_skip(claim, f"no central element of order {p} on both sides"))
        return out
    try:
        glued = central_product(G, A, [(za, zb)])
        got = is_dc_oracle(glued, cap=lattice_cap)
        out.append(
            _verdict(
                claim,
                got.is_dc == left.is_dc,
                f"glued verdict {got.is_dc}, left factor {left.is_dc}",
            )
        )
    except OrderCapExceeded:
        out.append(_skip(claim, "product lattice beyond cap"))
    return out


def _central_element_of_order(G: FiniteGroup, p: int) -> int | None:
    z = center(G)
    orders = G.element_orders()[z.ids()]
    hits = z.ids()[orders == p]
    return int(hits.min()) if hits.size else None


# -- corpus census --------------------------------------------------------------


@dataclass
class CensusReport:
    """Per-group and per-pair claim outcomes plus corpus-level notes."""

    groups: dict[str, list[ClaimResult]] = field(default_factory=dict)
    pairs: dict[str, list[ClaimResult]] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    def failures(self) -> list[tuple[str, ClaimResult]]:
        out = []
        for gid, results in list(self.groups.items()) + list(self.pairs.items()):
            out.extend((gid, r) for r in results if r.status == FAIL)
        return out


def corpus_notes(
    rows: Sequence[tuple[str, int | None, int | None, int | None]]
) -> dict[str, str]:
    """Corpus-level observations the census must record explicitly.

    Rows are (id, p, n, cl) with p and n from the prime-power order and cl
    the nilpotency class; non-p-groups pass None entries.
    """
    tall_maxclass = [
        gid
        for gid, p, n, cl in rows
        if p == 3 and n is not None and n >= 5 and cl == n - 1
    ]
    return {
        "maximal-class-3group-order-3^5+": (
            "present: " + ", ".join(sorted(tall_maxclass))
            if tall_maxclass
            else "no corpus member"
        )
    }


def theorem_census(
    named: Sequence[tuple[str, FiniteGroup]],
    lattice_cap: int = LATTICE_CAP,
    seed: int = 2026,
    with_pairs: bool = True,
) -> CensusReport:
    """Sequential census over realized, named groups.

    The command-line layer parallelizes by running census_claims per group
    in workers and assembling an identical report; results are keyed and
    sorted by group id either way.
    """
    report = CensusReport()
    for gid, G in sorted(named, key=lambda t: t[0]):
        report.groups[gid] = census_claims(G, lattice_cap=lattice_cap, seed=seed)
    if with_pairs:
        by_id = dict(named)
        for gid, aid in auto_pairs([group_meta(g, G) for g, G in named]):
            report.pairs[f"{gid}|{aid}"] = pair_claims(
                by_id[gid], by_id[aid], lattice_cap=lattice_cap
            )
    note_rows = []
    for gid, G in named:
        pn = is_pgroup(G)
        cl = nilpotency_class(G)
        note_rows.append((gid, *(pn or (None, None)), cl))
    report.notes = corpus_notes(note_rows)
    return report
