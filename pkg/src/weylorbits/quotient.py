"""The quotient W(I,J,K), minimal coset elements, and the order leq_O.

W(I,J,K) = W^{J u K} is a transversal of the cosets w W_K W_{I,J} where
W_{I,J} = {x x* : x in W_I} is the diagonal twisted by the star isomorphism
I -> J. The order w' <=_O w holds iff some member of [w'] is Bruhat-below w;
it is computed through the Bruhat-minimal coset members Min(w').
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .roots import RootSystem
from .weyl import (
    WeylElement,
    WeylGroup,
    from_word,
    identity,
    parabolic_decompose,
    simple_reflection,
    weyl_group,
)


class IJKDatum:
    """The triple (I, J, K) with the star isomorphism W_I -> W_J."""

    def __init__(
        self,
        system: RootSystem,
        I: Iterable[int],
        J: Iterable[int],
        K: Iterable[int] = (),
        star: Optional[Dict[int, int]] = None,
    ):
        self.system = system
        self.I = tuple(sorted(set(I)))
        self.J = tuple(sorted(set(J)))
        self.K = tuple(sorted(set(K)))
        if star is None:
            if len(self.I) != len(self.J):
                raise ValueError("star map required when |I| != |J|")
            star = dict(zip(self.I, self.J))
        self.star_map = dict(star)
        self._validate()
        self.group: WeylGroup = weyl_group(system)
        self.L = tuple(sorted(self.I + self.J + self.K))
        self._min_cache: Dict[Tuple, List[WeylElement]] = {}

    def _validate(self) -> None:
        rs = self.system
        sets = {"I": set(self.I), "J": set(self.J), "K": set(self.K)}
        for name, s in sets.items():
            for i in s:
                if not 1 <= i <= rs.rank:
                    raise ValueError(f"{name} contains invalid simple index {i}")
        if sets["I"] & sets["J"] or sets["I"] & sets["K"] or sets["J"] & sets["K"]:
            raise ValueError("I, J, K must be pairwise disjoint")
        # pairwise disconnected: no bond between distinct parts
        parts = [sets["I"], sets["J"], sets["K"]]
        for a in range(3):
            for b in range(a + 1, 3):
                for i in parts[a]:
                    for j in parts[b]:
                        if rs.cartan[i - 1][j - 1] != 0:
                            raise ValueError(
                                f"simple roots {i} and {j} are connected across parts"
                            )
        if sorted(self.star_map) != list(self.I) or sorted(
            self.star_map.values()
        ) != list(self.J):
            raise ValueError("star must be a bijection I -> J")
        # diagram isomorphism: matching Coxeter exponents m(s,t) <-> m(s*,t*)
        for s in self.I:
            for t in self.I:
                if self._coxeter_m(s, t) != self._coxeter_m(
                    self.star_map[s], self.star_map[t]
                ):
                    raise ValueError("star is not a Coxeter-diagram isomorphism")

    def _coxeter_m(self, s: int, t: int) -> int:
        if s == t:
            return 1
        rs = self.system
        prod = rs.cartan[s - 1][t - 1] * rs.cartan[t - 1][s - 1]
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]

    # -- star and cosets ----------------------------------------------------

    def star_extend(self, x: WeylElement) -> WeylElement:
        """Image of x in W_J under the induced isomorphism."""
        word = x.reduced_word()
        if any(i not in self.I for i in word):
            raise ValueError("element is not in W_I")
        return from_word(self.system, [self.star_map[i] for i in word])

    def w_i_elements(self) -> List[WeylElement]:
        return self.group.subgroup_elements(self.I)

    def w_k_elements(self) -> List[WeylElement]:
        return self.group.subgroup_elements(self.K)

    def coset(self, w: WeylElement) -> List[WeylElement]:
        """[w] = {w a x x* : a in W_K, x in W_I}; size |W_K| * |W_I|."""
        out = []
        seen = set()
        for a in self.w_k_elements():
            wa = w * a
            for x in self.w_i_elements():
                u = wa * x * self.star_extend(x)
                if u.matrix not in seen:
                    seen.add(u.matrix)
                    out.append(u)
        assert len(out) == len(self.w_k_elements()) * len(self.w_i_elements())
        return out

    def canonical_rep(self, w: WeylElement) -> "QuotientElement":
        """The unique member of [w] with no right descent in J u K."""
        jk = set(self.J) | set(self.K)
        hits = [
            u for u in self.coset(w) if not jk.intersection(u.right_descents())
        ]
        assert len(hits) == 1, "coset transversal property violated"
        return QuotientElement(self, hits[0])

    def quotient_elements(self) -> List["QuotientElement"]:
        """All of W(I,J,K) = W^{J u K}, by (length, reduced word)."""
        jk = set(self.J) | set(self.K)
        reps = [
            w
            for w in self.group.elements
            if not jk.intersection(w.right_descents())
        ]
        reps.sort(key=lambda w: (w.length(), w.reduced_word()))
        return [QuotientElement(self, w) for w in reps]

    # -- membership in the union of Min sets ---------------------------------

    def member_of_M(self, u: WeylElement) -> bool:
        """True iff u lies in Min(w) for some w.

        Tested through the W_L part of u (L = I u J u K): writing the I, J, K
        components as u_I, u_J, u_K, one needs u_K trivial, u_J = v* with
        v in W_I, and l(u_I v^{-1}) = l(u_I) + l(v).
        """
        _, u_l = parabolic_decompose(u, self.L)
        word = u_l.reduced_word()
        iset, jset = set(self.I), set(self.J)
        word_i = [i for i in word if i in iset]
        word_j = [i for i in word if i in jset]
        if len(word_i) + len(word_j) != len(word):
            return False  # nontrivial K component
        u_i = from_word(self.system, word_i)
        u_j = from_word(self.system, word_j)
        unstar = {v: k for k, v in self.star_map.items()}
        v = from_word(self.system, [unstar[i] for i in word_j])
        if self.star_extend(v) != u_j:
            return False
        return (u_i * v.inv()).length() == u_i.length() + v.length()


class QuotientElement:
    """An element of W(I,J,K) with its cached parabolic factorization."""

    __slots__ = ("datum", "rep", "w1", "w2")

    def __init__(self, datum: IJKDatum, rep: WeylElement):
        jk = set(datum.J) | set(datum.K)
        if jk.intersection(rep.right_descents()):
            raise ValueError("representative has a right descent in J u K")
        self.datum = datum
        self.rep = rep
        self.w1, self.w2 = parabolic_decompose(rep, datum.L)
        assert all(i in datum.I for i in self.w2.reduced_word())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuotientElement) and self.rep == other.rep

    def __hash__(self) -> int:
        return hash(self.rep)

    def __repr__(self) -> str:
        return repr(self.rep)

    def length(self) -> int:
        return self.rep.length()


def min_set(w: QuotientElement) -> List[WeylElement]:
    """Min(w) = {w x x* : x in W_I, l(w2 x) + l(x) = l(w2)}."""
    datum = w.datum
    cached = datum._min_cache.get(w.rep.matrix)
    if cached is not None:
        return cached
    out = []
    for x in datum.w_i_elements():
        if (w.w2 * x).length() + x.length() == w.w2.length():
            out.append(w.rep * x * datum.star_extend(x))
    assert all(u.length() == w.length() for u in out)
    datum._min_cache[w.rep.matrix] = out
    return out


def leq_O(wp: QuotientElement, w: QuotientElement) -> bool:
    """w' <=_O w iff some element of Min(w') is Bruhat-below w."""
    d1, d2 = wp.datum, w.datum
    if d1 is not d2 and (d1.system, d1.I, d1.J, d1.K, d1.star_map) != (
        d2.system,
        d2.I,
        d2.J,
        d2.K,
        d2.star_map,
    ):
        raise ValueError("elements from different data")
    group = w.datum.group
    return any(group.bruhat_leq(u, w.rep) for u in min_set(wp))


def covers_O_below(w: QuotientElement) -> List[QuotientElement]:
    """All w' covered by w: Bruhat covers below w that lie in some Min set."""
    datum = w.datum
    out = []
    seen = set()
    for u in datum.group.bruhat_covers_below(w.rep):
        if datum.member_of_M(u):
            wp = datum.canonical_rep(u)
            if wp.rep.matrix not in seen:
                seen.add(wp.rep.matrix)
                out.append(wp)
    assert all(wp.length() == w.length() - 1 for wp in out)
    return out


@dataclass
class PosetGraph:
    """Hasse diagram of (W(I,J,K), <=_O); edges are (lower, upper) node indices."""

    nodes: List[QuotientElement]
    edges: List[Tuple[int, int]]

    def rank_profile(self) -> Tuple[int, ...]:
        counts: Dict[int, int] = {}
        for node in self.nodes:
            counts[node.length()] = counts.get(node.length(), 0) + 1
        return tuple(counts[k] for k in sorted(counts))

    def to_json(self) -> str:
        return json.dumps(
            {
                "nodes": [
                    {"word": list(n.rep.reduced_word()), "length": n.length()}
                    for n in self.nodes
                ],
                "edges": [list(e) for e in self.edges],
            },
            indent=2,
        )

    def to_dot(self) -> str:
        lines = ["digraph poset {", "\trankdir = BT;"]
        by_rank: Dict[int, List[int]] = {}
        for i, node in enumerate(self.nodes):
            by_rank.setdefault(node.length(), []).append(i)
        for rank in sorted(by_rank):
            lines.append("\t{")
            lines.append("\t\trank = same;")
            for i in by_rank[rank]:
                label = _word_label(self.nodes[i].rep.reduced_word())
                lines.append(f'\t\t"n{i}" [label="{label}", rank={rank}];')
            lines.append("\t}")
        for lo, hi in self.edges:
            lines.append(f'\t"n{lo}" -> "n{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _word_label(word: Sequence[int]) -> str:
    return "e" if not word else " ".join(f"s{i}" for i in word)


def build_poset(datum: IJKDatum) -> PosetGraph:
    """Nodes = W(I,J,K); edges = all cover pairs of <=_O."""
    nodes = datum.quotient_elements()
    index = {node.rep.matrix: i for i, node in enumerate(nodes)}
    edges = []
    for i, node in enumerate(nodes):
        for wp in covers_O_below(node):
            edges.append((index[wp.rep.matrix], i))
    edges.sort()
    return PosetGraph(nodes, edges)
