"""Kauffman bracket and Jones polynomial of a Conway form.

The diagram C[2b_g, 2c_g, ..., 2b_1, 2c_1] is the numerator closure of a
rational tangle.  Starting from the vertical (infinity) tangle we stack
``-2c_1`` crossings of type [-1] vertically, add ``2b_1`` crossings of type
[+1] horizontally, and so on out to ``2b_g``.  The bracket of a 4-ended
tangle is a combination ``f<0> + g<oo>`` of the two crossingless tangles,
so each crossing is a 2x2 linear update.

Crossing [+1] has the SW-NE strand on top; its A-smoothing is the <oo>
tangle.  Crossing [-1] is its mirror.  With the orientation induced on
the closed diagram every crossing is positive, so the writhe is the
crossing count; :func:`diagram_writhe` recomputes it geometrically.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import NamedTuple

from .conway import ConwayForm
from .exactalg import LaurentPolynomial

__all__ = [
    "BracketState",
    "LOOP",
    "crossing",
    "tangle_sum",
    "tangle_product",
    "numerator_closure",
    "bracket_state",
    "kauffman_bracket",
    "jones_polynomial",
    "jones_derivatives_at_one",
    "v3_from_jones",
    "TangleDiagram",
    "build_diagram",
    "state_sum_bracket",
    "diagram_writhe",
]

_A = LaurentPolynomial.monomial(1, var="A")
_AINV = LaurentPolynomial.monomial(-1, var="A")
_ZERO = LaurentPolynomial({}, "A")
_ONE = LaurentPolynomial.constant(1, "A")

LOOP = -(_A ** 2) - _AINV ** 2


class BracketState(NamedTuple):
    """Coefficients of the <0> (horizontal arcs) and <oo> (vertical arcs) tangles."""

    zero: LaurentPolynomial
    infinity: LaurentPolynomial


INFINITY_TANGLE = BracketState(_ZERO, _ONE)
ZERO_TANGLE = BracketState(_ONE, _ZERO)


def crossing(sign: int) -> BracketState:
    if sign == 1:
        return BracketState(_AINV, _A)
    if sign == -1:
        return BracketState(_A, _AINV)
    raise ValueError("crossing sign must be +1 or -1")


def tangle_sum(s: BracketState, x: BracketState) -> BracketState:
    """Side by side: 0+0 = 0, 0+oo = oo+0 = oo, oo+oo = LOOP*oo."""
    f, g = s
    xa, xb = x
    return BracketState(f * xa, f * xb + g * xa + g * xb * LOOP)


def tangle_product(s: BracketState, x: BracketState) -> BracketState:
    """Stacked vertically: oo*oo = oo, 0*oo = oo*0 = 0, 0*0 = LOOP*0."""
    f, g = s
    xa, xb = x
    return BracketState(f * xa * LOOP + f * xb + g * xa, g * xb)


def numerator_closure(s: BracketState) -> LaurentPolynomial:
    """N(0) is two circles, N(oo) one circle; <unknot> = 1."""
    return s.zero * LOOP + s.infinity


def bracket_state(k: ConwayForm) -> BracketState:
    state = INFINITY_TANGLE
    plus, minus = crossing(1), crossing(-1)
    for bi, ci in zip(k.b, k.c):
        for _ in range(-2 * ci):
            state = tangle_product(state, minus)
        for _ in range(2 * bi):
            state = tangle_sum(state, plus)
    return state


@functools.lru_cache(maxsize=None)
def kauffman_bracket(k: ConwayForm) -> LaurentPolynomial:
    return numerator_closure(bracket_state(k))


@functools.lru_cache(maxsize=None)
def jones_polynomial(k: ConwayForm) -> LaurentPolynomial:
    """V_K(t) = (-A^3)^{-w} <D> at A = t^{-1/4}, w = crossing count."""
    w = k.crossings
    normalized = kauffman_bracket(k) * ((-_A ** 3) ** (-w))
    try:
        return normalized.scale_exponents(-1).divide_exponents(4, var="t")
    except ArithmeticError as exc:
        raise AssertionError(f"bracket of {k} has A-exponents not divisible by 4; writhe is wrong") from exc


def jones_derivatives_at_one(k: ConwayForm) -> tuple[int, int]:
    """(V''(1), V'''(1)) as exact integers."""
    v = jones_polynomial(k)
    d2 = v.derivative().derivative()
    d3 = d2.derivative()
    return d2.eval_at_one(), d3.eval_at_one()


def v3_from_jones(k: ConwayForm) -> Fraction:
    d2, d3 = jones_derivatives_at_one(k)
    return -Fraction(d3, 144) - Fraction(d2, 48)


# -- explicit planar diagram, used as an independent oracle ------------------

_PORTS = ("NW", "NE", "SW", "SE")
_COORD = {"NW": (-1, 1), "NE": (1, 1), "SW": (-1, -1), "SE": (1, -1)}
_OPPOSITE = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}


class TangleDiagram:
    """A 4-ended tangle as crossings plus wires between ports.

    Nodes are ``(crossing_index, port)`` for crossing ports and
    ``("end", i)`` for the four ends of the starting vertical tangle.
    """

    def __init__(self):
        self.signs: list[int] = []
        self.wires: list[tuple] = []
        ends = [("end", i) for i in range(4)]
        self.boundary = dict(zip(_PORTS, ends))
        self.wires.append((self.boundary["NW"], self.boundary["SW"]))
        self.wires.append((self.boundary["NE"], self.boundary["SE"]))
        self.closed = False

    def _new_crossing(self, sign: int) -> dict[str, tuple]:
        idx = len(self.signs)
        self.signs.append(sign)
        return {p: (idx, p) for p in _PORTS}

    def add_horizontal(self, sign: int) -> None:
        x = self._new_crossing(sign)
        self.wires.append((self.boundary["NE"], x["NW"]))
        self.wires.append((self.boundary["SE"], x["SW"]))
        self.boundary["NE"], self.boundary["SE"] = x["NE"], x["SE"]

    def add_vertical(self, sign: int) -> None:
        x = self._new_crossing(sign)
        self.wires.append((self.boundary["SW"], x["NW"]))
        self.wires.append((self.boundary["SE"], x["NE"]))
        self.boundary["SW"], self.boundary["SE"] = x["SW"], x["SE"]

    def close_numerator(self) -> None:
        self.wires.append((self.boundary["NW"], self.boundary["NE"]))
        self.wires.append((self.boundary["SW"], self.boundary["SE"]))
        self.closed = True


def build_diagram(k: ConwayForm) -> TangleDiagram:
    d = TangleDiagram()
    for bi, ci in zip(k.b, k.c):
        for _ in range(-2 * ci):
            d.add_vertical(-1)
        for _ in range(2 * bi):
            d.add_horizontal(1)
    d.close_numerator()
    return d


def _count_loops(nodes_index, wires_idx, smoothing_edges) -> int:
    parent = list(range(len(nodes_index)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = len(nodes_index)
    for u, v in itertools.chain(wires_idx, smoothing_edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def state_sum_bracket(k: ConwayForm, max_crossings: int = 16) -> LaurentPolynomial:
    """Brute-force Kauffman state sum over all 2^n smoothings."""
    d = build_diagram(k)
    n = len(d.signs)
    if n > max_crossings:
        raise ValueError(f"{n} crossings exceeds the state-sum limit {max_crossings}")
    nodes = sorted({v for w in d.wires for v in w}, key=repr)
    index = {v: i for i, v in enumerate(nodes)}
    wires_idx = [(index[u], index[v]) for u, v in d.wires]
    zero_pairs = []
    inf_pairs = []
    for c in range(n):
        zero_pairs.append(((index[(c, "NW")], index[(c, "NE")]), (index[(c, "SW")], index[(c, "SE")])))
        inf_pairs.append(((index[(c, "NW")], index[(c, "SW")]), (index[(c, "NE")], index[(c, "SE")])))
    terms: dict[int, int] = {}
    for state in itertools.product((0, 1), repeat=n):
        # state 0 = A-smoothing
        edges = []
        a_count = 0
        for c, s in enumerate(state):
            a_smooth_is_zero = d.signs[c] == -1
            use_zero = a_smooth_is_zero if s == 0 else not a_smooth_is_zero
            edges.extend(zero_pairs[c] if use_zero else inf_pairs[c])
            a_count += s == 0
        loops = _count_loops(nodes, wires_idx, edges)
        key = (a_count - (n - a_count), loops)
        terms[key] = terms.get(key, 0) + 1
    total = LaurentPolynomial({}, "A")
    for (a_exp, loops), mult in terms.items():
        total = total + LaurentPolynomial.monomial(a_exp, mult, "A") * (LOOP ** (loops - 1))
    return total


def diagram_writhe(k: ConwayForm) -> int:
    """Orient the closed diagram by walking it and sum the crossing signs.

    A crossing is positive when the cross product of the over direction
    with the under direction points out of the page.
    """
    d = build_diagram(k)
    adj: dict = {}
    for wid, (u, v) in enumerate(d.wires):
        adj.setdefault(u, []).append((wid, v))
        adj.setdefault(v, []).append((wid, u))

    def follow_wire(node):
        (wid, other), = adj[node]
        while not isinstance(other[0], int):
            wid, other = next(e for e in adj[other] if e[0] != wid)
        return other

    visits: dict[int, list[tuple[tuple[int, int], bool]]] = {}
    start = (0, "NW")
    cur = start
    while True:
        c, port = cur
        out = _OPPOSITE[port]
        direction = (_COORD[out][0] - _COORD[port][0], _COORD[out][1] - _COORD[port][1])
        # [+1] has the SW-NE strand on top, [-1] the NW-SE strand
        over = (port in ("SW", "NE")) == (d.signs[c] == 1)
        visits.setdefault(c, []).append((direction, over))
        cur = follow_wire((c, out))
        if cur == start:
            break
    if len(visits) != len(d.signs) or any(len(v) != 2 for v in visits.values()):
        raise RuntimeError(f"diagram of {k} is not a single closed curve")
    w = 0
    for (d1, o1), (d2, _) in visits.values():
        over_dir, under_dir = (d1, d2) if o1 else (d2, d1)
        w += 1 if over_dir[0] * under_dir[1] - over_dir[1] * under_dir[0] > 0 else -1
    return w
