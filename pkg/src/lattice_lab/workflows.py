"""Lattice-ideal workflows: join-meet ideals, component primes, radicality
certificates, squarefree order scans, and the two-rail-family suite.

The decomposition machinery follows one recipe: for an admissible subset A of
a lattice L, the candidate prime is the join-meet ideal of L \\ A saturated by
the product of the surviving variables, plus the variables of A.  Primality
of the saturated pure-difference part is certified through the Smith normal
form of its exponent-difference lattice (prime iff saturated).
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass

from .errors import (
    BadParameters,
    IntersectionMismatch,
    NotPureDifference,
    NotSaturatedInput,
)
from .fixtures import lk as build_lk
from .groebner import (
    Ideal,
    MonomialIdeal,
    _binomial_buchberger,
    _Ctx,
    buchberger,
    ideal_equal,
    initial_ideal,
    intersect,
    krull_dim,
    saturate,
)
from .lattice import (
    AdmissibleSet,
    basic_binomial_pairs,
    enumerate_admissible_sets,
    restrict_to_complement,
)
from .poly import PolyRing, degrevlex, lex, product
from .snf import smith_normal_form


@dataclass(frozen=True)
class JoinMeetIdeal:
    """The ideal generated by ab - (a∧b)(a∨b) over incomparable pairs."""

    lattice: object
    ideal: Ideal
    basic_binomials: tuple  # ((a, b), Poly)

    @property
    def ring(self):
        return self.ideal.ring


@dataclass(frozen=True)
class IntegerLattice:
    """Exponent-difference lattice of a pure-difference binomial family."""

    rows: tuple
    smith_invariants: tuple

    @classmethod
    def from_binomials(cls, polys, ring):
        rows = []
        for g in polys:
            items = sorted(g.terms.items(), key=lambda kv: kv[0])
            if len(items) != 2:
                raise NotPureDifference(g)
            (m1, c1), (m2, c2) = items
            if ring.coeff(c1 + c2) != 0:
                raise NotPureDifference(g)
            rows.append(tuple(a - b for a, b in zip(m1, m2)))
        invariants = ()
        nonzero = [r for r in rows if any(r)]
        if nonzero:
            invariants = smith_normal_form(nonzero).invariant_factors
        return cls(tuple(rows), invariants)

    @property
    def saturated(self):
        return all(d == 1 for d in self.smith_invariants if d != 0)


@dataclass(frozen=True)
class PrimeComponent:
    admissible: AdmissibleSet
    ideal: Ideal
    certified_prime: bool
    dim: int

    def generators_text(self):
        return tuple(str(g) for g in self.ideal.generators)


def join_meet_ideal(lattice, char=0):
    """Basic binomials of every incomparable pair, deduplicated, in order."""
    ring = PolyRing(lattice.elements, char)
    gens = []
    pairs = []
    for (a, b), (c, d) in basic_binomial_pairs(lattice):
        g = ring.monomial({a: 1, b: 1}) - ring.monomial({c: 1, d: 1})
        gens.append(g)
        pairs.append(((a, b), g))
    return JoinMeetIdeal(lattice, Ideal(ring, gens), tuple(pairs))


# ---------------------------------------------------------------------------
# prime components
# ---------------------------------------------------------------------------


def _split_component_shape(ideal):
    """(variable names, binomial generators); raises NotPureDifference."""
    ring = ideal.ring
    variables = []
    binomials = []
    for g in ideal.generators:
        items = list(g.terms.items())
        if len(items) == 1:
            m, _ = items[0]
            if sum(m) != 1:
                raise NotPureDifference(g)
            variables.append(ring.variables[m.index(1)])
        elif len(items) == 2 and ring.coeff(items[0][1] + items[1][1]) == 0:
            binomials.append(g)
        else:
            raise NotPureDifference(g)
    bad = set(variables)
    for g in binomials:
        if any(ring.variables[i] in bad for i in g.support()):
            raise NotPureDifference(g)
    return tuple(variables), tuple(binomials)


def _certify_saturated_part(ring, binomials):
    """Primality of an already-saturated pure-difference part via SNF."""
    if not binomials:
        return True, IntegerLattice((), ())
    gb = buchberger(binomials, ring.default_order, ring=ring, chain_criterion=True)
    for g in gb.basis:
        if len(g.terms) == 1:
            # a saturated proper pure-difference ideal has no monomials
            return False, IntegerLattice((), ())
    lattice = IntegerLattice.from_binomials(gb.basis, ring)
    return lattice.saturated, lattice


def certify_prime_component(ideal):
    """True iff the component ideal (pure differences + variables) is prime.

    The pure-difference part must already be saturated with respect to the
    product of the variables it involves; its exponent-difference lattice is
    then saturated exactly when the component is prime.
    """
    ring = ideal.ring
    variables, binomials = _split_component_shape(ideal)
    if binomials:
        survivors = [v for v in ring.variables if v not in set(variables)]
        part = Ideal(ring, binomials)
        sat = saturate(part, product([ring.var(v) for v in survivors], ring))
        if not ideal_equal(sat, part):
            raise NotSaturatedInput(
                "pure-difference part is not saturated w.r.t. its variables"
            )
    ok, _ = _certify_saturated_part(ring, binomials)
    return ok


def _component_gens(lattice, admissible, ring):
    """Saturated binomial part + variables of A, as generators in ``ring``."""
    members = set(admissible)
    survivors = [e for e in lattice.elements if e not in members]
    gens = []
    if survivors:
        sub = restrict_to_complement(lattice, admissible)
        pairs = basic_binomial_pairs(sub) if len(sub.elements) > 1 else []
        binoms = [
            ring.monomial({a: 1, b: 1}) - ring.monomial({c: 1, d: 1})
            for (a, b), (c, d) in pairs
        ]
        if binoms:
            sat = saturate(
                Ideal(ring, binoms),
                product([ring.var(v) for v in survivors], ring),
            )
            gens.extend(sat.generators)
    gens.extend(ring.var(v) for v in admissible)
    return tuple(gens)


def component_prime(lattice, admissible, char=0):
    """The candidate prime P_A: saturated complement ideal plus A's variables."""
    if not isinstance(admissible, AdmissibleSet):
        admissible = AdmissibleSet(tuple(admissible))
    ring = PolyRing(lattice.elements, char)
    gens = _component_gens(lattice, admissible, ring)
    ideal = Ideal(ring, gens)
    variables, binomials = _split_component_shape(ideal)
    certified, _ = _certify_saturated_part(ring, binomials)
    if ideal.generators:
        dim = krull_dim(initial_ideal(ideal), ring.nvars)
    else:
        dim = ring.nvars
    return PrimeComponent(admissible, ideal, certified, dim)


def _intersect_all(ring, ideals):
    """Fold ideals by intersection, monomial components first."""
    monomial = [i for i in ideals if all(len(g.terms) == 1 for g in i.generators)]
    rest = [i for i in ideals if not all(len(g.terms) == 1 for g in i.generators)]
    rest.sort(key=lambda i: sum(len(g.terms) for g in i.generators))
    acc = None
    for part in monomial + rest:
        acc = part if acc is None else intersect(acc, part)
    return acc


def minimal_primes(lattice, char=0, _verify=True):
    """Inclusion-minimal component primes plus the verified intersection.

    The caller asserts the join-meet ideal is radical (or accepts the
    IntersectionMismatch error as a non-radicality signal).
    """
    jm = join_meet_ideal(lattice, char)
    ring = jm.ring
    admissibles = enumerate_admissible_sets(lattice)
    index = lattice.index

    raw = []
    seen = {}
    for adm in admissibles:
        gens = _component_gens(lattice, adm, ring)
        gb = buchberger(gens, ring.default_order, ring=ring, chain_criterion=True) \
            if gens else None
        key = tuple(str(g) for g in gb.basis) if gb else ()
        if key in seen:
            continue  # admissible sets enumerated smallest-first; keep first
        mask = 0
        for e in adm:
            mask |= 1 << index[e]
        seen[key] = True
        raw.append((adm, mask, Ideal(ring, gens), gb))

    # strict containment of components forces strict inclusion of their
    # admissible sets, so masks prefilter the membership tests
    minimal = []
    for adm, mask, ideal, gb in raw:
        dominated = False
        if gb is not None:  # the zero ideal is never dominated
            for adm2, mask2, ideal2, gb2 in raw:
                if mask2 == mask or (mask2 & mask) != mask2:
                    continue
                if all(not gb.reduce(g) for g in ideal2.generators):
                    dominated = True
                    break
        if not dominated:
            minimal.append((adm, mask, ideal, gb))

    components = []
    for adm, mask, ideal, gb in minimal:
        variables, binomials = _split_component_shape(ideal)
        certified, _ = _certify_saturated_part(ring, binomials)
        dim = krull_dim(initial_ideal(ideal), ring.nvars) if ideal.generators \
            else ring.nvars
        components.append(PrimeComponent(adm, ideal, certified, dim))

    if _verify:
        if any(not c.ideal.generators for c in components):
            # a zero-ideal component makes the intersection zero
            ok = not jm.ideal.generators
        else:
            meet = _intersect_all(ring, [c.ideal for c in components])
            ok = ideal_equal(meet, jm.ideal)
        if not ok:
            raise IntersectionMismatch(lattice)
    return components


# ---------------------------------------------------------------------------
# radicality certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalCertificate:
    verdict: str  # "radical" | "not_radical" | "inconclusive"
    route: str | None = None  # "squarefree_order" | "prime_intersection" | "witness"
    witness: object = None  # Poly for not_radical
    witness_order: object = None
    components: tuple = ()
    detail: str = ""

    @property
    def is_radical(self):
        return self.verdict == "radical"


def _longest_chain(lattice):
    heights = {}
    for e in lattice.elements:
        heights[e] = 0
    changed = True
    while changed:
        changed = False
        for lo, hi in lattice.covers:
            if heights[hi] < heights[lo] + 1:
                heights[hi] = heights[lo] + 1
                changed = True
    return max(heights.values())


def _standard_monomials(ring, ini, degree):
    """Monomials of the given total degree outside the monomial ideal."""
    gens = sorted(ini.gens)
    n = ring.nvars
    out = []
    exps = [0] * n

    def rec(pos, remaining):
        if pos == n - 1:
            exps[pos] = remaining
            m = tuple(exps)
            if not any(all(g[i] <= m[i] for i in range(n)) for g in gens):
                out.append(m)
            exps[pos] = 0
            return
        for e in range(remaining + 1):
            exps[pos] = e
            rec(pos + 1, remaining - e)
        exps[pos] = 0

    rec(0, degree)
    return out


def _is_power_witness(gb, f, power_cap):
    """True when some 2^i-th power of f (up to the cap) lies in the ideal."""
    power = f
    exponent = 1
    while exponent * 2 <= power_cap:
        power = power * power
        exponent *= 2
        if not gb.reduce(power):
            return True
    return False


def _all_monomials(ring, degree):
    n = ring.nvars
    out = []

    def rec(pos, remaining, cur):
        if pos == n - 1:
            out.append(tuple(cur + [remaining]))
            return
        for e in range(remaining + 1):
            rec(pos + 1, remaining - e, cur + [e])

    rec(0, degree, [])
    return out


def _witness_search(jm, degree_bound, power_cap=4):
    """First pure difference in √I \\ I among bounded-degree candidates.

    Candidates come in two rounds.  Round one rewrites a single variable of a
    monomial into an incomparable partner (differences m - m*y/x for an
    incomparable pair (x, y)); these products of a monomial with a difference
    of atoms are exactly the shape that witnesses non-radicality for diamond
    insertions.  Round two falls back to arbitrary equal-degree differences
    of standard monomials.  Membership in the radical is established by a
    power landing in the ideal, so the certificate is self-contained.
    """
    ring = jm.ring
    lattice = jm.lattice
    gb = jm.ideal.groebner()
    key = ring.default_order.key(ring)
    pairs = [
        (ring.index[a], ring.index[b]) for a, b in lattice.incomparable_pairs()
    ]
    for d in range(2, degree_bound + 1):
        for m1 in sorted(_all_monomials(ring, d), key=key):
            partners = set()
            for ia, ib in pairs:
                for x, y in ((ia, ib), (ib, ia)):
                    if m1[x] >= 1:
                        m2 = list(m1)
                        m2[x] -= 1
                        m2[y] += 1
                        m2 = tuple(m2)
                        if key(m2) < key(m1):
                            partners.add(m2)
            lead = ring.monomial(m1)
            for m2 in sorted(partners, key=key):
                f = lead - ring.monomial(m2)
                if gb.reduce(f) and _is_power_witness(gb, f, power_cap):
                    return f
    ini = MonomialIdeal(ring, gb.leading_monomials())
    for d in range(2, degree_bound + 1):
        std = sorted(_standard_monomials(ring, ini, d), key=key)
        for j in range(len(std)):
            mj = ring.monomial(std[j])
            for i in range(j):
                f = mj - ring.monomial(std[i])
                if gb.reduce(f) and _is_power_witness(gb, f, power_cap):
                    return f
    return None


def radical_certificate(lattice, char=0, degree_bound=None, power_cap=4):
    """Three-stage radicality check.

    1. squarefree initial ideal over a small fixed order family -> radical;
    2. all component primes certified and their intersection equals the
       ideal -> radical with the decomposition;
    3. bounded search for a pure-difference element of √I \\ I -> not
       radical with the witness; otherwise inconclusive.
    """
    jm = join_meet_ideal(lattice, char)
    ring = jm.ring
    if not jm.ideal.generators:
        return RadicalCertificate("radical", route="squarefree_order",
                                  witness_order=ring.default_order,
                                  detail="zero ideal")
    rev = tuple(reversed(ring.variables))
    for order in (degrevlex(ring.variables), lex(ring.variables),
                  degrevlex(rev), lex(rev)):
        ini = initial_ideal(jm.ideal, order)
        if ini.is_squarefree():
            return RadicalCertificate(
                "radical", route="squarefree_order", witness_order=order,
                detail=f"squarefree initial ideal under {order.describe(ring)}",
            )
    try:
        components = minimal_primes(lattice, char)
        if all(c.certified_prime for c in components):
            return RadicalCertificate(
                "radical", route="prime_intersection",
                components=tuple(components),
                detail="all component primes certified; intersection verified",
            )
    except IntersectionMismatch:
        pass
    bound = degree_bound or (_longest_chain(lattice) + 2)
    witness = _witness_search(jm, bound, power_cap)
    if witness is not None:
        return RadicalCertificate(
            "not_radical", route="witness", witness=witness,
            detail=f"witness found at degree {witness.total_degree()}",
        )
    return RadicalCertificate(
        "inconclusive",
        detail=f"no squarefree order, no certified decomposition, and no "
               f"witness up to degree {bound}",
    )


# ---------------------------------------------------------------------------
# squarefree order scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    total_orders: int
    any_squarefree: bool
    witness_kind: str | None
    witness_priority: tuple | None
    counts: dict
    exhaustive: bool
    sample_size: int | None
    seed: int | None


def _resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get("LATTICE_LAB_SEED")
    return int(env) if env else 0


def _scan_orders(lattice, kinds, perms, char, stop_on_first=False):
    """Scan (kind, permutation) pairs; returns counts and first witness."""
    jm = join_meet_ideal(lattice, char)
    ring = jm.ring
    n = ring.nvars
    base = degrevlex(ring.variables)
    ctx0 = _Ctx(ring, base)
    pairs = []
    for g in jm.ideal.generators:
        (m1, m2) = g.terms
        pairs.append((ctx0.pack(m1), m1, ctx0.pack(m2), m2))
    from .poly import _FIELD_BITS

    high = 0
    for i in range(n):
        high |= ((1 << _FIELD_BITS) - 2) << (_FIELD_BITS * i)

    counts = {k: {"orders": 0, "squarefree": 0} for k in kinds}
    witness = None
    for pi, perm in enumerate(perms):
        prio = tuple(ring.variables[i] for i in perm)
        for kind in kinds:
            order = lex(prio) if kind == "lex" else degrevlex(prio)
            ctx = _Ctx(ring, order)
            elements = []
            for p1, m1, p2, m2 in pairs:
                k1, k2 = ctx.key_exps(m1), ctx.key_exps(m2)
                elements.append((k1, p1, k2, p2))
            reduced = _binomial_buchberger(ctx, elements, chain_criterion=True,
                                           interreduce=False)
            sq = all((lp & high) == 0 for _, lp, _, _ in reduced)
            counts[kind]["orders"] += 1
            if sq:
                counts[kind]["squarefree"] += 1
                if witness is None:
                    witness = (kind, prio)
                if stop_on_first:
                    return counts, witness
    return counts, witness


def squarefree_order_scan(lattice, kinds=("lex", "degrevlex"), exhaustive=None,
                          sample=10000, seed=None, char=0, jobs=None,
                          stop_on_first=False):
    """Per-order squarefree verdicts over Lex/DegRevLex variable permutations.

    Exhausts all permutations for rings with at most eight variables by
    default and takes a seeded sample above that; ``exhaustive=True`` forces
    the full enumeration.
    """
    n = len(lattice.elements)
    if exhaustive is None:
        exhaustive = n <= 8
    seed = _resolve_seed(seed)
    if exhaustive:
        perms = itertools.permutations(range(n))
        sample_size = None
    else:
        rng = random.Random(seed)
        perms = [tuple(rng.sample(range(n), n)) for _ in range(sample)]
        sample_size = sample
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and exhaustive and not stop_on_first:
        counts, witness = _scan_parallel(lattice, kinds, n, char, jobs)
    else:
        counts, witness = _scan_orders(lattice, kinds, perms, char, stop_on_first)
    total = sum(c["orders"] for c in counts.values())
    return ScanReport(
        total_orders=total,
        any_squarefree=witness is not None,
        witness_kind=witness[0] if witness else None,
        witness_priority=witness[1] if witness else None,
        counts=counts,
        exhaustive=exhaustive,
        sample_size=sample_size,
        seed=seed,
    )


def _scan_chunk(args):
    lattice_data, kinds, n, char, start, stop = args
    from .lattice import build_lattice

    lattice = build_lattice(*lattice_data)
    perms = itertools.islice(itertools.permutations(range(n)), start, stop)
    return _scan_orders(lattice, kinds, perms, char)


def _scan_parallel(lattice, kinds, n, char, jobs):
    import math
    from multiprocessing import Pool

    total = math.factorial(n)
    chunk = max(1, total // (jobs * 8))
    ranges = [(i, min(i + chunk, total)) for i in range(0, total, chunk)]
    data = (lattice.elements, lattice.covers)
    args = [(data, kinds, n, char, a, b) for a, b in ranges]
    counts = {k: {"orders": 0, "squarefree": 0} for k in kinds}
    witness = None
    with Pool(jobs) as pool:
        for i, (c, w) in enumerate(pool.imap(_scan_chunk, args)):
            for k in kinds:
                counts[k]["orders"] += c[k]["orders"]
                counts[k]["squarefree"] += c[k]["squarefree"]
            if w is not None and witness is None:
                witness = w  # chunks arrive in order, first hit is earliest
    return counts, witness


# ---------------------------------------------------------------------------
# the two-rail family suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StageResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class LkReport:
    n: int
    k: int
    stages: tuple
    component_dims: dict
    quotient_dim: int

    @property
    def passed(self):
        return all(s.passed for s in self.stages)


def lk_family_initial_monomials(n, k, ring):
    """The expected minimal generators of the degrevlex initial ideal."""
    monos = set()

    def mono(spec):
        e = [0] * ring.nvars
        for name, c in spec:
            e[ring.index[name]] += c
        return tuple(e)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            monos.add(mono([(f"x{j}", 1), (f"y{i}", 1)]))
    for i in range(1, k):
        monos.add(mono([(f"x{i}", 1), (f"y{k + 1}", 1)]))
    for j in range(k + 1, n + 1):
        monos.add(mono([(f"x{k}", 1), (f"y{j}", 1)]))
    for i in range(1, k):
        for j in range(k + 2, n + 1):
            monos.add(mono([(f"x{i}", 1), (f"x{k + 1}", 1), (f"y{j}", 1)]))
            monos.add(mono([(f"x{i}", 1), (f"y{k}", 1), (f"y{j}", 1)]))
    for i in range(1, k):
        monos.add(mono([(f"y{i}", 1), (f"y{k}", 1), ("z", 1)]))
    monos.add(mono([(f"x{k + 1}", 1), ("z", 1)]))
    monos.add(mono([(f"y{k}", 2), ("z", 1)]))
    return MonomialIdeal(ring, monos)


def lk_expected_primes(n, k, ring, ideal):
    """The seven expected minimal primes, as (name, Ideal) pairs."""
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{i}" for i in range(1, n + 1)]

    def ladder_binomials(lo, hi):
        out = []
        for i in range(lo, hi + 1):
            for j in range(i + 1, hi + 1):
                out.append(
                    ring.monomial({f"x{j}": 1, f"y{i}": 1})
                    - ring.monomial({f"x{i}": 1, f"y{j}": 1})
                )
        return out

    zvar = ring.var("z")
    P = Ideal(ring, list(ideal.generators)
              + [zvar - ring.var(f"x{k + 1}"), zvar - ring.var(f"y{k}")])
    P1 = Ideal(ring, [zvar] + [ring.var(v) for v in xs])
    P1x = Ideal(ring, [zvar] + [ring.var(v) for v in ys])
    P2 = Ideal(ring, [zvar]
               + [ring.var(v) for v in xs[:k] + ys[:k]]
               + ladder_binomials(k + 1, n))
    P2x = Ideal(ring, [zvar]
                + [ring.var(v) for v in xs[k:] + ys[k:]]
                + ladder_binomials(1, k))
    P3 = Ideal(ring, [ring.var(v) for v in xs + ys[:k]])
    P3x = Ideal(ring, [ring.var(v) for v in ys + xs[k:]])
    return [("P", P), ("P1", P1), ("P1x", P1x), ("P2", P2), ("P2x", P2x),
            ("P3", P3), ("P3x", P3x)]


def lk_suite(n, k, char=0):
    """Verify the documented facts about the two-rail-plus-diamond family."""
    if n < 2 or not (1 <= k <= n - 1):
        raise BadParameters(f"need n >= 2 and 1 <= k <= n-1, got ({n}, {k})")
    lattice = build_lk(n, k)
    jm = join_meet_ideal(lattice, char)
    ring = jm.ring
    I = jm.ideal
    stages = []

    ini = initial_ideal(I)
    expected = lk_family_initial_monomials(n, k, ring)
    stages.append(StageResult(
        "initial_ideal_family", ini == expected,
        "" if ini == expected else f"got {ini!r}, expected {expected!r}",
    ))

    zvar = ring.var("z")
    diag = ring.var(f"x{k + 1}") - ring.var(f"y{k}")
    I_z = I.plus([zvar])
    I_diag = I.plus([diag])

    ini_z = initial_ideal(I_z)
    want_z = ini.with_extra([ring.monomial({"z": 1}).leading_monomial()])
    stages.append(StageResult("ini_with_z", ini_z == want_z,
                              "" if ini_z == want_z else f"{ini_z!r}"))

    ini_diag = initial_ideal(I_diag)
    extra = [_name_mono(ring, {f"x{k + 1}": 1})]
    extra += [_name_mono(ring, {f"y{i}": 1, f"y{k}": 1}) for i in range(1, k)]
    extra += [_name_mono(ring, {f"y{k}": 2})]
    want_diag = ini.with_extra(extra)
    stages.append(StageResult("ini_with_diagonal", ini_diag == want_diag,
                              "" if ini_diag == want_diag else f"{ini_diag!r}"))

    meet = intersect(I_diag, I_z)
    ok_meet = ideal_equal(meet, I)
    stages.append(StageResult("intersection_identity", ok_meet))

    stages.append(StageResult("squarefree_with_z", ini_z.is_squarefree()))

    lex_order = lex(("z",) + tuple(f"x{i}" for i in range(1, n + 1))
                    + tuple(f"y{i}" for i in range(1, n + 1)))
    ini_diag_lex = initial_ideal(I_diag, lex_order)
    stages.append(StageResult("squarefree_with_diagonal_lex",
                              ini_diag_lex.is_squarefree()))

    components = minimal_primes(lattice, char)
    expected_primes = lk_expected_primes(n, k, ring, I)
    names = {}
    used = set()
    matched = len(components) == len(expected_primes)
    for comp in components:
        hit = None
        for name, ideal in expected_primes:
            if name not in used and ideal_equal(comp.ideal, ideal):
                hit = name
                break
        if hit is None:
            matched = False
        else:
            used.add(hit)
            names[hit] = comp
    stages.append(StageResult(
        "minimal_primes", matched,
        "" if matched else f"{len(components)} components, matched {sorted(used)}",
    ))

    dims = {name: comp.dim for name, comp in sorted(names.items())}
    # quotient dimensions: P, P1, P1x reach n; the two variable-only primes
    # and the two ladder primes land at n-k+1 and k+1
    want_dims = {"P": n, "P1": n, "P1x": n, "P2": n - k + 1, "P2x": k + 1,
                 "P3": n - k + 1, "P3x": k + 1}
    dims_ok = matched and dims == want_dims
    stages.append(StageResult(
        "component_dimensions", dims_ok,
        "" if dims_ok else f"got {dims}, expected {want_dims}",
    ))

    qdim = krull_dim(ini, ring.nvars)
    stages.append(StageResult("quotient_dimension", qdim == n,
                              "" if qdim == n else f"got {qdim}"))

    return LkReport(n=n, k=k, stages=tuple(stages), component_dims=dims,
                    quotient_dim=qdim)


def _name_mono(ring, spec):
    e = [0] * ring.nvars
    for name, c in spec.items():
        e[ring.index[name]] += c
    return tuple(e)
