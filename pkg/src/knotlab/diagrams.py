"""Planar diagrams, the Kauffman bracket state sum, and zero-framed cables.

A diagram is a PD code: one 4-tuple of arc labels per crossing, listed
counterclockwise starting from the incoming under-strand.  The bracket is
evaluated by sweeping the crossings in a frontier-minimizing order and
merging partial closures that induce the same boundary pairing, so the
cost is governed by the number of distinct pairings rather than by
2^crossings.

Convention freeze (validated by the golden trefoil/figure-eight values,
the writhe hand counts, and the skein-relation test):

* A-smoothing joins slots (0,3) and (1,2); B-smoothing joins (0,1), (2,3).
* A^2 maps to -s, so a loop weight -A^2 - A^(-2) becomes s + 1/s.
* A crossing whose over-strand enters at slot 1 (east) counts +1 to the
  writhe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CrossingBudgetExceeded, MalformedDiagram
from .laurent import LaurentHalf

__all__ = [
    "PlanarDiagram",
    "writhe",
    "kauffman_bracket",
    "jones",
    "cable",
    "disjoint_union",
    "linking_matrix",
    "MAX_STATE_SUM_CROSSINGS",
]

MAX_STATE_SUM_CROSSINGS = 24

# Frozen bracket/chirality constants (see module docstring).
_A_JOINS = ((0, 3), (1, 2))
_B_JOINS = ((0, 1), (2, 3))
_A_SQUARED_SIGN_EXP = +1          # A^2 -> -s^(_A_SQUARED_SIGN_EXP)
_SIGN_OVER_EAST_IN = +1           # crossing sign when over-strand enters slot 1

_LOOP_A = LaurentHalf({2: -1, -2: -1})    # -A^2 - A^(-2), exponents in A


def _opposite(pos: int) -> int:
    return (pos + 2) & 3


@dataclass(frozen=True)
class _OrientData:
    over_in: tuple[int, ...]      # slot (1 or 3) where the over-strand enters
    signs: tuple[int, ...]
    under_comp: tuple[int, ...]   # component ids of the two strands
    over_comp: tuple[int, ...]
    n_components: int


class PlanarDiagram:
    """PD-code diagram of a knot or link.

    Crossings are 4-tuples of arc labels, counterclockwise from the
    incoming under-strand.  ``circles`` counts extra crossingless unknotted
    components.  Multi-component data must be flagged with ``link=True``.
    Instances are immutable and hashable.
    """

    __slots__ = ("crossings", "circles", "link", "_orient_cache")

    def __init__(self, crossings: Iterable[Sequence[int]], circles: int = 0,
                 link: bool = False):
        xs = tuple(tuple(int(a) for a in c) for c in crossings)
        for c in xs:
            if len(c) != 4:
                raise MalformedDiagram(f"crossing {c} is not a 4-tuple")
        if circles < 0:
            raise MalformedDiagram("negative circle count")
        object.__setattr__(self, "crossings", xs)
        object.__setattr__(self, "circles", int(circles))
        object.__setattr__(self, "link", bool(link))
        object.__setattr__(self, "_orient_cache", None)
        self._validate()

    def __setattr__(self, *a):        # immutability guard
        raise AttributeError("PlanarDiagram is immutable")

    # -- validation and structure ----------------------------------------------

    def _slot_map(self) -> dict[int, list[tuple[int, int]]]:
        slots: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for pos, arc in enumerate(c):
                slots.setdefault(arc, []).append((ci, pos))
        return slots

    def _validate(self) -> None:
        for arc, occ in self._slot_map().items():
            if len(occ) != 2:
                raise MalformedDiagram(
                    f"arc {arc} appears {len(occ)} times (expected 2)")
        if not self.crossings and self.circles == 0:
            raise MalformedDiagram("empty diagram (no crossings, no circles)")
        ncomp = self.n_components
        if ncomp > 1 and not self.link:
            raise MalformedDiagram(
                f"{ncomp} components but diagram not flagged as a link")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> list[int]:
        return sorted(self._slot_map())

    @property
    def n_arcs(self) -> int:
        return len(self._slot_map())

    @property
    def n_components(self) -> int:
        if not self.crossings:
            return self.circles
        return self._oriented().n_components + self.circles

    def mirrored(self) -> "PlanarDiagram":
        """Mirror image: reflect the plane, keeping over/under assignments."""
        return PlanarDiagram([(a, d, c, b) for (a, b, c, d) in self.crossings],
                             circles=self.circles, link=self.link)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return (self.crossings == other.crossings
                and self.circles == other.circles)

    def __hash__(self) -> int:
        return hash((self.crossings, self.circles))

    def __repr__(self) -> str:
        inner = ", ".join(f"X{c}" for c in self.crossings)
        extra = f", circles={self.circles}" if self.circles else ""
        return f"PlanarDiagram([{inner}]{extra})"

    # -- orientation -------------------------------------------------------------

    def _oriented(self) -> _OrientData:
        """Propagate a global orientation from arc adjacency.

        Walks every strand cycle; a component's direction is fixed by the
        requirement that each under-strand passage enters at slot 0.  A
        component that is never an under-strand keeps its walk direction.
        Mixed evidence means the PD data is not orientable as given.
        """
        cached = self._orient_cache
        if cached is not None:
            return cached

        slots = self._slot_map()
        entry_visited: set[tuple[int, int]] = set()
        over_in: dict[int, int] = {}
        under_comp: dict[int, int] = {}
        over_comp: dict[int, int] = {}
        n_components = 0

        for arc0 in sorted(slots):
            start = slots[arc0][0]
            if start in entry_visited or slots[arc0][1] in entry_visited:
                continue
            comp = n_components
            n_components += 1
            entries: list[tuple[int, int]] = []
            ci, pos = start
            while (ci, pos) not in entry_visited:
                entry_visited.add((ci, pos))
                entries.append((ci, pos))
                out_pos = _opposite(pos)
                out_arc = self.crossings[ci][out_pos]
                occ = slots[out_arc]
                ci, pos = occ[1] if occ[0] == (ci, out_pos) else occ[0]
            under_entries = [p for _, p in entries if p in (0, 2)]
            forward = all(p == 0 for p in under_entries)
            backward = all(p == 2 for p in under_entries)
            if under_entries and not (forward or backward):
                raise MalformedDiagram(
                    "arc data does not admit a consistent orientation")
            if under_entries and backward:
                entries = [(c, _opposite(p)) for c, p in entries]
            for c, p in entries:
                if p == 0:
                    under_comp[c] = comp
                else:
                    over_in[c] = p
                    over_comp[c] = comp

        n = len(self.crossings)
        if len(over_in) != n or len(under_comp) != n:
            raise MalformedDiagram("orientation walk did not cover all crossings")
        signs = tuple(
            _SIGN_OVER_EAST_IN if over_in[ci] == 1 else -_SIGN_OVER_EAST_IN
            for ci in range(n)
        )
        data = _OrientData(
            over_in=tuple(over_in[ci] for ci in range(n)),
            signs=signs,
            under_comp=tuple(under_comp[ci] for ci in range(n)),
            over_comp=tuple(over_comp[ci] for ci in range(n)),
            n_components=n_components,
        )
        object.__setattr__(self, "_orient_cache", data)
        return data


def writhe(d: PlanarDiagram) -> int:
    """Sum of crossing signs of the oriented diagram."""
    if not d.crossings:
        return 0
    return sum(d._oriented().signs)


def linking_matrix(d: PlanarDiagram) -> dict[tuple[int, int], int]:
    """Twice the pairwise linking numbers.

    Sum of signs of crossings whose two strands lie on different
    components, keyed by the component-id pair (i, j) with i < j.
    """
    data = d._oriented()
    out: dict[tuple[int, int], int] = {}
    for ci in range(d.n_crossings):
        a, b = data.under_comp[ci], data.over_comp[ci]
        if a != b:
            key = (min(a, b), max(a, b))
            out[key] = out.get(key, 0) + data.signs[ci]
    return out


# -- bracket state sum ------------------------------------------------------------


def _contraction_order(crossings: Sequence[Sequence[int]]) -> list[int]:
    """Greedy sweep order keeping the open-arc frontier small."""
    remaining = set(range(len(crossings)))
    seen_arcs: set[int] = set()
    order: list[int] = []
    while remaining:
        best = None
        best_key = None
        for ci in remaining:
            arcs = set(crossings[ci])
            key = (-len(arcs & seen_arcs), len(arcs - seen_arcs), ci)
            if best_key is None or key < best_key:
                best, best_key = ci, key
        order.append(best)
        remaining.discard(best)
        seen_arcs.update(crossings[best])
    return order


def _close_strand(pairing: dict[int, int], x: int, y: int) -> int:
    """Connect the two ends of one smoothed strand; return loops closed."""
    if x == y:
        # both slots of this arc meet at the current crossing: instant loop
        return 1
    if pairing.get(x) == y:
        del pairing[x]
        del pairing[y]
        return 1
    tx = x
    if x in pairing:
        tx = pairing.pop(x)
        del pairing[tx]
    ty = y
    if y in pairing:
        ty = pairing.pop(y)
        del pairing[ty]
    pairing[tx] = ty
    pairing[ty] = tx
    return 0


def _bracket_in_a(d: PlanarDiagram, max_crossings: int) -> LaurentHalf:
    """Raw bracket polynomial, exponents in the bracket variable A.

    Every closed loop contributes a factor -A^2 - A^(-2), including the
    last one, so a crossingless circle evaluates to that loop weight and
    the bracket is multiplicative over split unions.
    """
    n = d.n_crossings
    if n > max_crossings:
        raise CrossingBudgetExceeded(
            f"{n} crossings exceeds the state-sum cap of {max_crossings}")

    a_pos = LaurentHalf.term(1, 1)
    a_neg = LaurentHalf.term(1, -1)

    states: dict[tuple, LaurentHalf] = {(): LaurentHalf.const(1)}
    for ci in _contraction_order(d.crossings):
        arcs = d.crossings[ci]
        new_states: dict[tuple, LaurentHalf] = {}
        for joins, factor in ((_A_JOINS, a_pos), (_B_JOINS, a_neg)):
            for key, coeff in states.items():
                pairing = dict(key)
                pairing.update((b, a) for a, b in key)
                loops = 0
                for p, q in joins:
                    loops += _close_strand(pairing, arcs[p], arcs[q])
                new_key = tuple(sorted((a, b) for a, b in pairing.items() if a < b))
                term = coeff * factor
                for _ in range(loops):
                    term = term * _LOOP_A
                if new_key in new_states:
                    new_states[new_key] = new_states[new_key] + term
                else:
                    new_states[new_key] = term
        states = new_states

    total = LaurentHalf()
    for key, coeff in states.items():
        if key:
            raise MalformedDiagram("open arcs remain after the full sweep")
        total = total + coeff
    for _ in range(d.circles):
        total = total * _LOOP_A
    return total


def _a_poly_to_s(p: LaurentHalf) -> LaurentHalf:
    """Apply the frozen substitution A^2 -> -s to an even polynomial."""
    out: dict[int, int] = {}
    for e, c in p.coeffs.items():
        if e % 2:
            raise ValueError("odd power of A survived writhe correction")
        k = e // 2
        sign = -1 if k % 2 else 1
        se = _A_SQUARED_SIGN_EXP * k
        out[se] = out.get(se, 0) + sign * c
    return LaurentHalf(out)


def kauffman_bracket(d: PlanarDiagram,
                     max_crossings: int = MAX_STATE_SUM_CROSSINGS) -> LaurentHalf:
    """Writhe-corrected bracket state sum, mapped into s.

    Equals the invariant computed by :func:`jones`; exposed separately so
    the state-sum machinery can be driven directly with a custom crossing
    budget.
    """
    raw = _bracket_in_a(d, max_crossings)
    w = writhe(d)
    corr = LaurentHalf.term(-1 if w % 2 else 1, -3 * w)   # (-A^3)^(-w)
    return _a_poly_to_s(corr * raw)


def jones(d: PlanarDiagram,
          max_crossings: int = MAX_STATE_SUM_CROSSINGS) -> LaurentHalf:
    """Jones polynomial, normalized so the unknot gives q^(1/2) + q^(-1/2).

    Multiplicative over disjoint unions; mirroring the diagram inverts s.
    """
    return kauffman_bracket(d, max_crossings)


def disjoint_union(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """Split union of two diagrams (arc labels of the second are shifted)."""
    offset = (max(d1.arcs) + 1) if d1.crossings else 0
    shifted = [tuple(a + offset for a in c) for c in d2.crossings]
    return PlanarDiagram(list(d1.crossings) + shifted,
                         circles=d1.circles + d2.circles, link=True)


# -- cabling ----------------------------------------------------------------------


def _braid_crossing(l_in: int, r_in: int, out_l: int, out_r: int,
                    positive: bool) -> tuple[int, int, int, int]:
    """PD tuple for one generator on two upward parallel strands.

    ``positive`` selects the crossing that contributes +1 to the writhe
    under the frozen sign convention.
    """
    if positive:
        # left strand passes under: CCW from its entry = (l_in, r_in, out_r, out_l)
        return (l_in, r_in, out_r, out_l)
    # right strand passes under: CCW from its entry = (r_in, out_r, out_l, l_in)
    return (r_in, out_r, out_l, l_in)


def cable(d: PlanarDiagram, n: int,
          max_crossings: int = MAX_STATE_SUM_CROSSINGS) -> PlanarDiagram:
    """n-parallel copy of a knot diagram with zero pairwise linking numbers.

    Blackboard framing gives each pair of copies linking number equal to
    the writhe, so -writhe full bundle twists are spliced into one arc.
    Copies are indexed from the left of the travel direction, which keeps
    the copy bookkeeping consistent through every crossing.
    """
    if d.circles or d.n_components != 1:
        raise MalformedDiagram("cabling requires a one-component knot diagram")
    if n < 2:
        raise ValueError("cable order must be at least 2")
    w = writhe(d)
    total = n * n * d.n_crossings + abs(w) * n * (n - 1)
    if total > max_crossings:
        raise CrossingBudgetExceeded(
            f"{n}-cable needs {total} crossings (cap {max_crossings})")

    data = d._oriented()
    counter = [max(d.arcs) + 1]

    def new_arc() -> int:
        counter[0] += 1
        return counter[0]

    copy_ids = {(a, k): new_arc() for a in d.arcs for k in range(n)}

    # the twist braid is spliced into the head end of arc a0
    a0 = min(d.arcs)
    twists = -w
    head_labels = {k: new_arc() for k in range(n)} if twists else None
    head_slot = None
    for (ci, pos) in d._slot_map()[a0]:
        if pos == 0 or pos == data.over_in[ci]:
            if head_slot is not None:
                raise MalformedDiagram("arc enters two crossings")
            head_slot = (ci, pos)
    if head_slot is None:
        raise MalformedDiagram("arc never enters a crossing")

    def in_label(ci: int, arc: int, k: int, under: bool) -> int:
        if head_labels is not None and (ci, 0 if under else data.over_in[ci]) == head_slot and arc == a0:
            return head_labels[k]
        return copy_ids[(arc, k)]

    new_crossings: list[tuple[int, int, int, int]] = []

    for ci, c in enumerate(d.crossings):
        over_in = data.over_in[ci]
        over_in_arc = c[over_in]
        over_out_arc = c[_opposite(over_in)]
        # under copy i runs south -> north at x-position i (copy 0 = west)
        seg_u = [[0] * (n + 1) for _ in range(n)]
        for i in range(n):
            seg_u[i][n] = in_label(ci, c[0], i, under=True)
            seg_u[i][0] = copy_ids[(c[2], i)]
            for kk in range(1, n):
                seg_u[i][kk] = new_arc()
        # over copies run on horizontal levels indexed from the north
        seg_o = [[0] * (n + 1) for _ in range(n)]
        for j in range(n):
            if over_in == 3:
                # over travels west -> east; left of travel = north
                cj = j
                seg_o[j][0] = in_label(ci, over_in_arc, cj, under=False)
                seg_o[j][n] = copy_ids[(over_out_arc, cj)]
            else:
                # over travels east -> west; left of travel = south
                cj = n - 1 - j
                seg_o[j][n] = in_label(ci, over_in_arc, cj, under=False)
                seg_o[j][0] = copy_ids[(over_out_arc, cj)]
            for kk in range(1, n):
                seg_o[j][kk] = new_arc()
        # grid crossing at x = i, level j: CCW from the incoming under copy
        for i in range(n):
            for j in range(n):
                new_crossings.append(
                    (seg_u[i][j + 1], seg_o[j][i + 1], seg_u[i][j], seg_o[j][i]))

    if twists:
        lab = [copy_ids[(a0, k)] for k in range(n)]
        positive = twists > 0
        braid_start = len(new_crossings)
        for _rep in range(abs(twists)):
            for _sweep in range(n):
                for m in range(n - 1):
                    ol, orr = new_arc(), new_arc()
                    new_crossings.append(
                        _braid_crossing(lab[m], lab[m + 1], ol, orr, positive))
                    lab[m], lab[m + 1] = ol, orr
        # a full twist is the identity permutation, so strand k exits at
        # position k; rename the braid outputs to the head labels
        rename = {lab[k]: head_labels[k] for k in range(n)}
        for idx in range(braid_start, len(new_crossings)):
            new_crossings[idx] = tuple(rename.get(a, a) for a in new_crossings[idx])

    return PlanarDiagram(new_crossings, link=True)
