"""Independent machine checks tying the closed-form link model to the
generic monomial-ideal algorithms.

Every check produces a :class:`Report` with a pass/fail/refused status and
machine-readable witnesses; refusals come from explicit size guards (maximum
universe size and a cap on intermediate generator candidates) that fail fast
with an estimate instead of letting intersections blow up. Reports are
deterministic given (instance, seed, bounds).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Callable, Iterable

from .ideals import (
    DEFAULT_CANDIDATE_CAP,
    SizeGuardExceeded,
    first_symbolic_gap,
    square_colon_scan,
)
from .linkage import (
    LinkInstance,
    Selector,
    antidiagonal_divisor,
    betti_table,
    chain_normal_form,
    leq,
    odd_part_reduction,
    resolution_ranks,
    square_divisor,
    staircase_power_conditions,
)
from .monomial import Monomial, xvar, yvar
from .orders import DiagLexOrder


@dataclass(frozen=True)
class VerifyBounds:
    """Size guards and scan bounds shared by the verification checks."""

    max_universe_vars: int = 40
    candidate_cap: int = DEFAULT_CANDIDATE_CAP
    symbolic_upto: int = 3
    square_colon_rmax: int = 3
    witness_samples: int = 200
    exhaustive_cap: int = 4000


DEFAULT_BOUNDS = VerifyBounds()

PASS, FAIL, REFUSED = "pass", "fail", "refused"


@dataclass
class Report:
    check: str
    instance: tuple[int, int]
    params: dict
    status: str
    witnesses: dict
    seed: int | None
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        m, n = self.instance
        return {
            "check": self.check,
            "instance": {"m": m, "n": n, "g": n - m + 1, "r": comb(n, m)},
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def summary(self) -> str:
        return f"{self.check} ({self.instance[0]},{self.instance[1]}): {self.status} [{self.elapsed_ms} ms]"


def _run(check: str, inst: LinkInstance, params: dict, seed: int | None,
         body: Callable[[], tuple[bool, dict]]) -> Report:
    t0 = time.perf_counter()
    try:
        ok, witnesses = body()
        status = PASS if ok else FAIL
    except SizeGuardExceeded as e:
        status, witnesses = REFUSED, {"reason": str(e), "estimate": e.estimate}
    elapsed = int((time.perf_counter() - t0) * 1000)
    return Report(check, (inst.m, inst.n), params, status, witnesses, seed, elapsed)


def _guard_universe(inst: LinkInstance, bounds: VerifyBounds) -> None:
    size = len(inst.universe)
    if size > bounds.max_universe_vars:
        raise SizeGuardExceeded(
            f"universe has {size} variables (guard {bounds.max_universe_vars})", size
        )


# -- the checks -----------------------------------------------------------------


def verify_colon_link(inst: LinkInstance, bounds: VerifyBounds = DEFAULT_BOUNDS) -> Report:
    """The colon of the sequence lead ideal by the minors lead ideal must equal
    the closed-form link initial ideal, as sets of minimal generators.

    The equality is checked three ways so it does not lean on the reducer:
    the computed colon's generator set, membership of every claimed generator
    in the colon (by definition: it multiplies the minors ideal into the
    sequence ideal), and membership of every computed generator in the claim.
    """
    def body():
        _guard_universe(inst, bounds)
        seq = inst.sequence_initial
        minors = inst.minors_initial
        claimed = inst.link_initial
        computed = seq.colon(minors, cap=bounds.candidate_cap)
        set_equal = set(computed.gens) == set(claimed.gens)
        claimed_in_colon = all(
            all(seq.contains(t * v) for v in minors.gens) for t in claimed.gens
        )
        computed_in_claimed = all(claimed.contains(c) for c in computed.gens)
        ok = set_equal and claimed_in_colon and computed_in_claimed
        return ok, {
            "computed_generators": len(computed.gens),
            "claimed_generators": len(claimed.gens),
            "set_equal": set_equal,
            "claimed_in_colon": claimed_in_colon,
            "computed_in_claimed": computed_in_claimed,
        }

    return _run("colon", inst, {}, None, body)


def verify_symbolic_scan(
    inst: LinkInstance,
    upto: int | None = None,
    r_max: int | None = None,
    bounds: VerifyBounds = DEFAULT_BOUNDS,
) -> Report:
    """Symbolic powers of the link initial ideal equal ordinary powers up to
    the bound, and the square-bracket colon criterion holds for r <= r_max."""
    upto = bounds.symbolic_upto if upto is None else upto
    r_max = bounds.square_colon_rmax if r_max is None else r_max

    def body():
        _guard_universe(inst, bounds)
        W = inst.link_initial
        gap = first_symbolic_gap(W, upto, cap=bounds.candidate_cap)
        failed_r = square_colon_scan(W, r_max, cap=bounds.candidate_cap)
        ok = gap is None and failed_r is None
        witnesses: dict = {"upto": upto, "r_max": r_max}
        if gap is not None:
            witnesses["gap_level"] = gap[0]
            witnesses["gap_witness"] = str(gap[1])
        if failed_r is not None:
            witnesses["failed_r"] = failed_r
        return ok, witnesses

    return _run("symbolic", inst, {"upto": upto, "r_max": r_max}, None, body)


def resolve_staircase_powers(
    inst: LinkInstance, bounds: VerifyBounds = DEFAULT_BOUNDS
) -> Report:
    """Decide N^(2) = N^2 for the staircase ideal N by brute force and report
    which of the three candidate shape conditions the data supports.

    When m > 2 and n > m+1 the product-of-all-variables witness argument is
    exercised as well: nu lies in the second symbolic power, every product of
    two staircase generators repeats a column-3 variable, hence nu is not in
    the square; its verdict must agree with the brute force. The check fails
    only on internal inconsistency, not on inequality.
    """
    def body():
        _guard_universe(inst, bounds)
        N = inst.staircase_ideal
        witnesses: dict = {}
        if N.is_unit():
            # Degenerate m = 1 or m = n: the staircase ideal is the unit ideal.
            witnesses["staircase_ideal_unit"] = True
            equal = True
        else:
            symbolic = N.symbolic_power(2, cap=bounds.candidate_cap)
            square = N.power(2, cap=bounds.candidate_cap)
            equal = set(symbolic.gens) == set(square.gens)
        conds = staircase_power_conditions(inst)
        witnesses["equal_at_2"] = equal
        witnesses["conditions"] = {
            "m<=2 or m<=n-1": conds.printed_corollary,
            "m<=2 or m<=n+1": conds.printed_example,
            "m<=2 or n<=m+1": conds.derived,
        }
        witnesses["supported_conditions"] = [
            text for text, predicted in witnesses["conditions"].items() if predicted == equal
        ]
        ok = True
        if inst.m > 2 and inst.n > inst.m + 1:
            nu = inst.all_variables_product
            nu_in_symbolic = N.symbolic_member(nu, 2)
            column3 = [xvar(i, 3) for i in range(max(1, inst.m - 2), inst.m + 1)]
            pairs_share_column3 = all(
                any(v in a.support() and v in b.support() for v in column3)
                for a in N.gens for b in N.gens
            )
            nu_in_square = N.power(2, cap=bounds.candidate_cap).contains(nu)
            witnesses["nu_witness"] = {
                "nu_in_symbolic": nu_in_symbolic,
                "pairs_share_column3": pairs_share_column3,
                "nu_in_square": nu_in_square,
            }
            witness_says_unequal = nu_in_symbolic and pairs_share_column3 and not nu_in_square
            witnesses["nu_witness_says_unequal"] = witness_says_unequal
            ok = witness_says_unequal == (not equal)
        return ok, witnesses

    return _run("cor412", inst, {}, None, body)


def verify_counts_and_degrees(inst: LinkInstance, bounds: VerifyBounds = DEFAULT_BOUNDS) -> Report:
    """Generator counts, degrees, squarefreeness, and the antichain property
    of the link initial ideal; the staircase complements avoid the minors
    ideal. For m = n the two generator families collapse onto (Y[1,1])."""
    def body():
        _guard_universe(inst, bounds)
        W = inst.link_initial
        m, n, g = inst.m, inst.n, inst.g
        witnesses: dict = {"generators": len(W.gens)}
        checks = []
        checks.append(all(t.is_squarefree() for t in W.gens))
        # antichain, checked directly rather than via the reducer
        checks.append(not any(
            a != b and a.divides(b) for a in W.gens for b in W.gens
        ))
        checks.append(all(
            not inst.minors_initial.contains(inst.complement_monomial(A))
            for A in inst.selectors
        ))
        if m < n:
            # for n = m+1 both families share the degree m+1, so accumulate
            expected: dict[int, int] = {m + 1: g}
            high = m * (n - m) + 1
            expected[high] = expected.get(high, 0) + comb(n - 1, m - 1)
            actual: dict[int, int] = {}
            for t in W.gens:
                actual[t.degree()] = actual.get(t.degree(), 0) + 1
            checks.append(actual == expected)
            witnesses["degree_counts"] = {str(k): v for k, v in sorted(actual.items())}
        else:
            collapsed = W.gens == (Monomial.of(yvar(1, 1)),)
            checks.append(collapsed)
            witnesses["degenerate_collapse"] = collapsed
        return all(checks), witnesses

    return _run("counts", inst, {}, None, body)


def verify_betti(inst: LinkInstance, bounds: VerifyBounds = DEFAULT_BOUNDS) -> Report:
    """Betti table is integral, carries b_g = C(n-1, m-1), and its first
    column reproduces the generator degrees of the link initial ideal."""
    def body():
        _guard_universe(inst, bounds)
        table = betti_table(inst)
        ranks = resolution_ranks(inst.m, inst.g)
        checks = []
        checks.append(ranks[inst.g] == comb(inst.n - 1, inst.m - 1))
        degree_counts: dict[int, int] = {}
        for t in inst.link_initial.gens:
            degree_counts[t.degree()] = degree_counts.get(t.degree(), 0) + 1
        checks.append(table.degree_counts() == degree_counts)
        witnesses: dict = {
            "entries": {f"{i},{j}": v for (i, j), v in sorted(table.entries.items())},
            "b_g": ranks[inst.g],
        }
        if (inst.m, inst.n) == (2, 4):
            golden = {(1, 3): 3, (1, 5): 3, (2, 6): 11, (3, 7): 6}
            checks.append(table.entries == golden)
            witnesses["golden_match"] = table.entries == golden
        return all(checks), witnesses

    return _run("betti", inst, {}, None, body)


def verify_lead_terms(inst: LinkInstance, bounds: VerifyBounds = DEFAULT_BOUNDS) -> Report:
    """For each generic row j, the largest monomial Y[j,k] * (term of the k-th
    minor) under the diagonal-lex order is Y[j,j] * antidiagonal(j)."""
    def body():
        work = inst.r * factorial(inst.m) * inst.g
        if work > 500_000:
            raise SizeGuardExceeded(f"lead-term scan would compare {work} monomials", work)
        order = DiagLexOrder()
        key = order.sort_key()
        rows_ok = []
        for j in range(1, inst.g + 1):
            candidates = [
                Monomial.of(yvar(j, k)) * t
                for k, cols in enumerate(inst.column_sets, start=1)
                for t in inst.minor_term_monomials(cols)
            ]
            expected = Monomial.of(yvar(j, j)) * inst.antidiagonal(j)
            rows_ok.append(max(candidates, key=key) == expected)
        return all(rows_ok), {"rows": len(rows_ok), "minors": inst.r}

    return _run("leads", inst, {}, None, body)


def verify_witnesses(
    inst: LinkInstance,
    r_max: int | None = None,
    seed: int = 0,
    samples: int | None = None,
    bounds: VerifyBounds = DEFAULT_BOUNDS,
) -> Report:
    """Run the divisor-witness constructions and assert their postconditions.

    Antidiagonal divisors run exhaustively over (column set, selector) pairs
    when that grid is small, sampled otherwise. Square divisors and odd-part
    reductions run on exhaustively enumerated inputs for small instances and
    on seeded samples otherwise; chains are produced by sorting uniform
    selector samples through the straightening normal form.
    """
    r_max = bounds.square_colon_rmax if r_max is None else r_max
    samples = bounds.witness_samples if samples is None else samples

    def body():
        _guard_universe(inst, bounds)
        rng = random.Random(seed)
        counts = {"antidiagonal": 0, "square": 0, "odd_part": 0}

        pairs = inst.r * len(inst.selectors)
        if pairs <= bounds.exhaustive_cap:
            for cols in inst.column_sets:
                for A in inst.selectors:
                    antidiagonal_divisor(inst, cols, A)
                    counts["antidiagonal"] += 1
        else:
            for _ in range(samples):
                cols = inst.column_sets[rng.randrange(inst.r)]
                A = inst.selectors[rng.randrange(len(inst.selectors))]
                antidiagonal_divisor(inst, cols, A)
                counts["antidiagonal"] += 1

        square_inputs = _square_inputs(inst, r_max, rng, samples, bounds.exhaustive_cap)
        for diag, chain in square_inputs:
            square_divisor(inst, diag, chain)
            counts["square"] += 1

        for diag_mult, sel_mult in _odd_part_inputs(inst, r_max, rng, samples):
            odd_part_reduction(inst, diag_mult, sel_mult)
            counts["odd_part"] += 1

        return True, counts

    return _run("witnesses", inst, {"r_max": r_max, "samples": samples}, seed, body)


def _multichains(elements: tuple[Selector, ...], length: int) -> Iterable[tuple[Selector, ...]]:
    """All sorted chains of the given length from a selector lattice."""
    if length == 0:
        yield ()
        return
    ordered = sorted(elements)

    def rec(prefix: tuple[Selector, ...]) -> Iterable[tuple[Selector, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for e in ordered:
            if not prefix or leq(prefix[-1], e):
                yield from rec(prefix + (e,))

    yield from rec(())


def _square_inputs(inst, r_max, rng, samples, exhaustive_cap):
    """(diag indices, chain) pairs with an odd total, exhaustive or sampled."""
    exhaustive: list[tuple[tuple[int, ...], tuple[Selector, ...]]] = []
    count = 0
    for r in range(r_max + 1):
        total = 2 * r + 1
        for a in range(min(total, inst.g) + 1):
            for diag in combinations(range(1, inst.g + 1), a):
                for chain in _multichains(inst.selectors, total - a):
                    exhaustive.append((diag, chain))
                    count += 1
                    if count > exhaustive_cap:
                        break
                if count > exhaustive_cap:
                    break
            if count > exhaustive_cap:
                break
        if count > exhaustive_cap:
            break
    if count <= exhaustive_cap:
        return exhaustive
    picks = []
    for _ in range(samples):
        r = rng.randrange(r_max + 1)
        total = 2 * r + 1
        a = rng.randrange(min(total, inst.g) + 1)
        diag = tuple(sorted(rng.sample(range(1, inst.g + 1), a)))
        chosen = [inst.selectors[rng.randrange(len(inst.selectors))] for _ in range(total - a)]
        chain = chain_normal_form(chosen) if chosen else ()
        picks.append((diag, chain))
    return picks


def _odd_part_inputs(inst, r_max, rng, samples):
    """Generator multisets with odd total multiplicity."""
    picks = []
    n_sel = len(inst.selectors)
    for _ in range(samples):
        total = 2 * rng.randrange(r_max + 1) + 1
        diag_mult: dict[int, int] = {}
        sel_mult: dict[Selector, int] = {}
        for _ in range(total):
            if rng.random() < 0.5 or n_sel == 0:
                k = rng.randrange(1, inst.g + 1)
                diag_mult[k] = diag_mult.get(k, 0) + 1
            else:
                A = inst.selectors[rng.randrange(n_sel)]
                sel_mult[A] = sel_mult.get(A, 0) + 1
        picks.append((diag_mult, sel_mult))
    return picks


SUITES = {
    "colon": lambda inst, bounds, args: verify_colon_link(inst, bounds),
    "symbolic": lambda inst, bounds, args: verify_symbolic_scan(
        inst, args.get("upto"), args.get("r_max"), bounds
    ),
    "cor412": lambda inst, bounds, args: resolve_staircase_powers(inst, bounds),
    "counts": lambda inst, bounds, args: verify_counts_and_degrees(inst, bounds),
    "betti": lambda inst, bounds, args: verify_betti(inst, bounds),
    "leads": lambda inst, bounds, args: verify_lead_terms(inst, bounds),
    "witnesses": lambda inst, bounds, args: verify_witnesses(
        inst, args.get("r_max"), args.get("seed", 0), args.get("samples"), bounds
    ),
}


def run_suite(
    suite: str,
    inst: LinkInstance,
    bounds: VerifyBounds = DEFAULT_BOUNDS,
    **args,
) -> list[Report]:
    """Run one named suite, or all of them, returning the reports."""
    if suite == "all":
        return [SUITES[name](inst, bounds, args) for name in SUITES]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[suite](inst, bounds, args)]
