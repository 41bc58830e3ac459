"""Exact arithmetic on monomial ideals over a finite variable universe.

Ideals are kept as minimal generating sets (divisibility antichains).
Operations: product, power, bracket power, colon, intersection, membership,
minimal primes of squarefree ideals (minimal vertex covers of the support
clutter), symbolic powers, a symbolic-vs-ordinary scan, the square-bracket
colon criterion certifying symbolic = ordinary for squarefree ideals, and a
search for height-many pairwise-coprime squarefree generators.

Internally generators are handled as dense exponent vectors over the
universe with support bitmasks; squarefree inputs get a mask-only fast path.
All sizes here are desk scale; an explicit candidate cap guards against
intersection blowup.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .monomial import Monomial, Universe, Variable

DEFAULT_CANDIDATE_CAP = 200_000


class UniverseMismatch(ValueError):
    """Raised when monomials or ideals do not share one universe."""


class NotSquarefree(ValueError):
    """Raised when an operation defined for squarefree ideals gets a general one."""


class SizeGuardExceeded(RuntimeError):
    """Raised before an intermediate computation would exceed the candidate cap."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


Vec = tuple[int, ...]


def _mask(vec: Vec) -> int:
    m = 0
    for i, e in enumerate(vec):
        if e:
            m |= 1 << i
    return m


def _vec_divides(a: Vec, b: Vec) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimalize(vecs: Iterable[Vec]) -> list[Vec]:
    """Return the divisibility antichain generating the same ideal, sorted."""
    uniq = set(vecs)
    squarefree = all(all(e <= 1 for e in v) for v in uniq)
    items = sorted((sum(v), _mask(v), v) for v in uniq)
    kept: list[tuple[int, int, Vec]] = []
    for deg, mask, vec in items:
        if squarefree:
            dominated = any(km & mask == km for _, km, _ in kept)
        else:
            dominated = any(
                km & mask == km and _vec_divides(kv, vec) for _, km, kv in kept
            )
        if not dominated:
            kept.append((deg, mask, vec))
    return [vec for _, _, vec in kept]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators over a universe.

    ``gens`` is canonically sorted; the zero ideal has no generators, the
    unit ideal has the single generator 1. Construct through :func:`ideal`,
    which reduces an arbitrary generating set.
    """

    universe: Universe
    gens: tuple[Monomial, ...]

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree() for g in self.gens)

    # -- dense helpers ----------------------------------------------------

    def _vecs(self) -> list[Vec]:
        return [_to_vec(self.universe, g) for g in self.gens]

    def _same_universe(self, other: "MonomialIdeal") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch("ideals live over different universes")

    # -- membership -------------------------------------------------------

    def contains(self, mon: Monomial) -> bool:
        """True iff some minimal generator divides ``mon``."""
        vec = _to_vec(self.universe, mon)
        mask = _mask(vec)
        for gvec in self._vecs():
            gmask = _mask(gvec)
            if gmask & mask == gmask and _vec_divides(gvec, vec):
                return True
        return False

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._same_universe(other)
        return all(self.contains(g) for g in other.gens)

    # -- ring operations --------------------------------------------------

    def product(self, other: "MonomialIdeal", cap: int = DEFAULT_CANDIDATE_CAP) -> "MonomialIdeal":
        self._same_universe(other)
        a, b = self._vecs(), other._vecs()
        _check_cap(len(a) * len(b), cap, "product")
        candidates = [tuple(x + y for x, y in zip(u, v)) for u in a for v in b]
        return _from_vecs(self.universe, _minimalize(candidates))

    def power(self, s: int, cap: int = DEFAULT_CANDIDATE_CAP) -> "MonomialIdeal":
        """Iterated product with reduction after every step; W^0 is the unit ideal."""
        if s < 0:
            raise ValueError("negative power")
        result = unit_ideal(self.universe)
        for _ in range(s):
            result = result.product(self, cap=cap)
        return result

    def bracket_power(self, q: int) -> "MonomialIdeal":
        """The ideal generated by the q-th powers of the minimal generators."""
        if q < 1:
            raise ValueError("bracket power needs q >= 1")
        vecs = [tuple(q * e for e in v) for v in self._vecs()]
        return _from_vecs(self.universe, _minimalize(vecs))

    def colon(self, other: "MonomialIdeal", cap: int = DEFAULT_CANDIDATE_CAP) -> "MonomialIdeal":
        """W : V, the ideal of monomials multiplying V into W."""
        self._same_universe(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        w = self._vecs()
        pieces = []
        for v in other._vecs():
            pieces.append(_minimalize(
                tuple(max(x - y, 0) for x, y in zip(u, v)) for u in w
            ))
        folded = _tree_fold_intersect(pieces, cap)
        return _from_vecs(self.universe, folded)

    def intersect(self, other: "MonomialIdeal", cap: int = DEFAULT_CANDIDATE_CAP) -> "MonomialIdeal":
        self._same_universe(other)
        folded = _intersect_vecs(self._vecs(), other._vecs(), cap)
        return _from_vecs(self.universe, folded)

    # -- squarefree combinatorics ------------------------------------------

    def minimal_primes(self) -> tuple[frozenset[Variable], ...]:
        """Minimal transversals of the support clutter of a squarefree ideal.

        Each returned variable set is a minimal prime; none contains another.
        """
        if self.is_zero() or self.is_unit():
            raise ValueError("minimal primes need a proper nonzero ideal")
        if not self.is_squarefree():
            raise NotSquarefree("minimal primes implemented for squarefree ideals only")
        edges = [_mask(v) for v in self._vecs()]
        covers = _minimal_covers(edges)
        vars_ = self.universe.variables
        out = []
        for cover in covers:
            out.append(frozenset(vars_[i] for i in range(len(vars_)) if cover >> i & 1))
        out.sort(key=lambda s: (len(s), sorted(s)))
        return tuple(out)

    def height_and_unmixed(self) -> tuple[int, bool]:
        primes = self.minimal_primes()
        sizes = {len(p) for p in primes}
        return min(sizes), len(sizes) == 1

    def symbolic_power(self, level: int, cap: int = DEFAULT_CANDIDATE_CAP) -> "MonomialIdeal":
        """Intersection of the level-th powers of the minimal primes.

        Each prime power is generated by all degree-``level`` monomials in
        the prime's variables; the intersection is computed by iterated
        (tree-folded) pairwise intersections with reduction at every step.
        """
        if level < 1:
            raise ValueError("symbolic power needs level >= 1")
        primes = self.minimal_primes()
        idx = self.universe.index
        nvars = len(self.universe)
        pieces = []
        for prime in sorted(primes, key=lambda p: (len(p), sorted(p))):
            cols = sorted(idx[v] for v in prime)
            pieces.append([_composition_vec(nvars, cols, c)
                           for c in _compositions(level, len(cols))])
        folded = _tree_fold_intersect(pieces, cap)
        return _from_vecs(self.universe, folded)

    def symbolic_member(self, mon: Monomial, level: int) -> bool:
        """Membership in the level-th symbolic power via per-prime degree sums."""
        if level < 1:
            raise ValueError("symbolic power needs level >= 1")
        primes = self.minimal_primes()
        return all(sum(mon.exponent(v) for v in p) >= level for p in primes)


def ideal(universe: Universe, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Build an ideal from any generating set, reduced to minimal generators."""
    vecs = [_to_vec(universe, g) for g in gens]
    return _from_vecs(universe, _minimalize(vecs))


def zero_ideal(universe: Universe) -> MonomialIdeal:
    return MonomialIdeal(universe, ())


def unit_ideal(universe: Universe) -> MonomialIdeal:
    return MonomialIdeal(universe, (Monomial.one(),))


# -- scans and certificates ------------------------------------------------


def first_symbolic_gap(
    W: MonomialIdeal, upto: int, cap: int = DEFAULT_CANDIDATE_CAP
) -> tuple[int, Monomial] | None:
    """First level <= upto where the symbolic power exceeds the ordinary one.

    Returns ``(level, witness)`` with a witness generator of the symbolic
    power missing from the ordinary power, or ``None`` if all levels pass.
    The containment ordinary <= symbolic holds always; it is asserted on the
    ordinary generators rather than recomputed.
    """
    power = unit_ideal(W.universe)
    for level in range(1, upto + 1):
        power = power.product(W, cap=cap)
        for g in power.gens:
            assert W.symbolic_member(g, level), "ordinary power escaped the symbolic power"
        symbolic = W.symbolic_power(level, cap=cap)
        for g in symbolic.gens:
            if not power.contains(g):
                return level, g
    return None


def square_colon_check(W: MonomialIdeal, r: int, cap: int = DEFAULT_CANDIDATE_CAP) -> bool:
    """Check nu in (W^(r+1))^[2] : W^(2r+1), nu the product of all variables.

    For a squarefree proper ideal, this holding for every r >= 0 is
    equivalent to the equality of all symbolic and ordinary powers; a single
    r is checked here and callers scan r up to a bound. Membership in the
    colon is decided generator by generator, which is the definition.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    nu = W.universe.product_of_variables()
    bracket = W.power(r + 1, cap=cap).bracket_power(2)
    big = W.power(2 * r + 1, cap=cap)
    return all(bracket.contains(nu * t) for t in big.gens)


def square_colon_scan(
    W: MonomialIdeal, r_max: int, cap: int = DEFAULT_CANDIDATE_CAP
) -> int | None:
    """First r <= r_max failing :func:`square_colon_check`, or None."""
    for r in range(r_max + 1):
        if not square_colon_check(W, r, cap=cap):
            return r
    return None


def coprime_generator_witness(W: MonomialIdeal) -> tuple[Monomial, ...] | None:
    """Search for height(W)-many pairwise-coprime squarefree minimal generators.

    Pairwise-coprime monomials form a regular sequence, so a successful
    search certifies that the ideal contains a regular sequence of squarefree
    monomials of maximal length. Returns None if no selection exists.
    """
    if W.is_zero() or W.is_unit():
        raise ValueError("witness search needs a proper nonzero ideal")
    # Height of W = height of its radical; the radical's supports are the
    # supports of W's generators.
    radical = ideal(W.universe, [Monomial.of(*g.support()) for g in W.gens])
    height, _ = radical.height_and_unmixed()
    candidates = [g for g in W.gens if g.is_squarefree()]
    masks = [_mask(_to_vec(W.universe, g)) for g in candidates]

    chosen: list[int] = []

    def extend(start: int, used_mask: int) -> bool:
        if len(chosen) == height:
            return True
        for i in range(start, len(candidates)):
            if masks[i] & used_mask:
                continue
            chosen.append(i)
            if extend(i + 1, used_mask | masks[i]):
                return True
            chosen.pop()
        return False

    if not extend(0, 0):
        return None
    witness = tuple(candidates[i] for i in chosen)
    assert all(g.is_squarefree() for g in witness)
    assert all(a.is_coprime(b) for a, b in combinations(witness, 2))
    return witness


# -- internals ---------------------------------------------------------------


def _to_vec(universe: Universe, mon: Monomial) -> Vec:
    idx = universe.index
    vec = [0] * len(universe.variables)
    for var, e in mon.items():
        pos = idx.get(var)
        if pos is None:
            raise UniverseMismatch(f"{var} is not in the universe")
        vec[pos] = e
    return tuple(vec)


def _from_vecs(universe: Universe, vecs: Sequence[Vec]) -> MonomialIdeal:
    vars_ = universe.variables
    gens = tuple(
        Monomial((vars_[i], e) for i, e in enumerate(v) if e) for v in vecs
    )
    gens = tuple(sorted(gens, key=Monomial.canonical_key))
    return MonomialIdeal(universe, gens)


def _check_cap(count: int, cap: int, what: str) -> None:
    if cap is not None and count > cap:
        raise SizeGuardExceeded(
            f"{what} would enumerate about {count} candidate generators "
            f"(cap {cap})", count,
        )


def _intersect_vecs(a: Sequence[Vec], b: Sequence[Vec], cap: int) -> list[Vec]:
    _check_cap(len(a) * len(b), cap, "intersection")
    candidates = [tuple(max(x, y) for x, y in zip(u, v)) for u in a for v in b]
    return _minimalize(candidates)


def _tree_fold_intersect(pieces: list[list[Vec]], cap: int) -> list[Vec]:
    """Intersect many generator lists pairwise in a balanced tree.

    The balanced order keeps intermediate antichains small compared to a
    left fold.
    """
    if not pieces:
        raise ValueError("nothing to intersect")
    level = pieces
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(_intersect_vecs(level[i], level[i + 1], cap))
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def _compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(total + parts - 1 - prev - 1)
        yield tuple(comp)


def _composition_vec(nvars: int, cols: Sequence[int], comp: Sequence[int]) -> Vec:
    vec = [0] * nvars
    for c, e in zip(cols, comp):
        vec[c] = e
    return tuple(vec)


def _minimal_covers(edges: list[int]) -> list[int]:
    """All minimal vertex covers (as bitmasks) of a clutter of edge bitmasks."""
    results: set[int] = set()

    def bits(mask: int):
        while mask:
            low = mask & -mask
            yield low
            mask ^= low

    def rec(remaining: list[int], included: int, excluded: int) -> None:
        if not remaining:
            results.add(included)
            return
        edge = remaining[0]
        if edge & excluded == edge and not edge & included:
            return  # every vertex of this edge is forbidden
        banned = excluded
        for v in bits(edge):
            if v & banned:
                continue
            rec([e for e in remaining if not e & v], included | v, banned)
            banned |= v

    live = [e for e in edges]
    rec(live, 0, 0)
    # Irredundant branching can still emit non-minimal covers; keep the antichain.
    out = []
    for c in sorted(results, key=lambda c: (bin(c).count("1"), c)):
        if not any(prev & c == prev for prev in out):
            out.append(c)
    return out
