"""Weyl group elements as exact linear actions on the root lattice.

The convention is that a word w = s_{i_1} ... s_{i_k} acts with the rightmost
letter first (standard composition), so in type A the word s_2 s_1 has line
notation 3 1 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .roots import Coords, RootSystem

Matrix = Tuple[Coords, ...]


class CapExceededError(RuntimeError):
    """Group enumeration exceeded the configured cap."""

    def __init__(self, partial_size: int):
        super().__init__(f"enumeration cap exceeded; partial size {partial_size}")
        self.partial_size = partial_size


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_vec(a: Matrix, v: Coords) -> Coords:
    n = len(a)
    return tuple(sum(a[i][k] * v[k] for k in range(n) if v[k]) for i in range(n))


def _mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = aug[i][n + j]
            assert x.denominator == 1
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


class WeylElement:
    """A Weyl group element; columns of the action matrix are the w(alpha_j)."""

    __slots__ = ("system", "matrix", "_hash")

    def __init__(self, system: RootSystem, matrix: Matrix):
        self.system = system
        self.matrix = matrix
        self._hash = hash(matrix)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        word = self.reduced_word()
        return "e" if not word else " ".join(f"s{i}" for i in word)

    def apply(self, v: Coords) -> Coords:
        """Image of a root-lattice vector under w."""
        return _mat_vec(self.matrix, v)

    def mul(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.system, _mat_mul(self.matrix, other.matrix))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.mul(other)

    def inv(self) -> "WeylElement":
        return WeylElement(self.system, _mat_inv(self.matrix))

    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.system.rank)

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        cache = self.system._length_cache
        val = cache.get(self.matrix)
        if val is None:
            rs = self.system
            val = sum(
                1 for a in rs.positive_roots if not rs.is_positive(self.apply(a))
            )
            cache[self.matrix] = val
        return val

    def right_descents(self) -> List[int]:
        """Simple indices i (1-based) with l(w s_i) < l(w), i.e. w(alpha_i) < 0."""
        rs = self.system
        return [
            i + 1
            for i in range(rs.rank)
            if not rs.is_positive(tuple(row[i] for row in self.matrix))
        ]

    def left_descents(self) -> List[int]:
        return self.inv().right_descents()

    def reduced_word(self) -> Tuple[int, ...]:
        """Lexicographically smallest reduced word (repeated smallest left descent)."""
        word: List[int] = []
        winv = self.inv()
        rs = self.system
        while True:
            ds = winv.right_descents()
            if not ds:
                return tuple(word)
            i = ds[0]
            word.append(i)
            winv = winv * simple_reflection(rs, i)


def simple_reflection(system: RootSystem, i: int) -> WeylElement:
    """s_{alpha_i}, 1-based index."""
    if not 1 <= i <= system.rank:
        raise IndexError(f"simple index {i} out of range")
    n = system.rank
    k = i - 1
    cols = []
    for j in range(n):
        col = [1 if r == j else 0 for r in range(n)]
        col[k] -= system.cartan[k][j]
        cols.append(col)
    matrix = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
    return WeylElement(system, matrix)


def reflection(system: RootSystem, beta: Coords) -> WeylElement:
    """The reflection s_beta for any root beta."""
    n = system.rank
    cols = [system.reflect(system.simple_root(j + 1), beta) for j in range(n)]
    matrix = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
    return WeylElement(system, matrix)


def identity(system: RootSystem) -> WeylElement:
    return WeylElement(system, _identity_matrix(system.rank))


def from_word(system: RootSystem, word: Sequence[int]) -> WeylElement:
    """Product s_{i_1} ... s_{i_k}, rightmost letter acting first."""
    w = identity(system)
    for i in word:
        w = w * simple_reflection(system, i)
    return w


def mul(u: WeylElement, w: WeylElement) -> WeylElement:
    return u * w


def inv(w: WeylElement) -> WeylElement:
    return w.inv()


def length(w: WeylElement) -> int:
    return w.length()


def reduced_word(w: WeylElement) -> Tuple[int, ...]:
    return w.reduced_word()


def right_weak_leq(v: WeylElement, w: WeylElement) -> bool:
    """v <=_R w iff l(w) = l(w v^{-1}) + l(v)."""
    return w.length() == (w * v.inv()).length() + v.length()


def parabolic_decompose(
    w: WeylElement, L: Iterable[int]
) -> Tuple[WeylElement, WeylElement]:
    """Unique factorization w = w_upper * w_lower with w_lower in W_L, w_upper in W^L."""
    Lset = sorted(set(L))
    rs = w.system
    letters: List[int] = []
    cur = w
    while True:
        ds = [i for i in cur.right_descents() if i in Lset]
        if not ds:
            break
        i = ds[0]
        letters.append(i)
        cur = cur * simple_reflection(rs, i)
    lower = from_word(rs, list(reversed(letters)))
    return cur, lower


def _decode_type_a_root(coords: Coords) -> Tuple[int, int]:
    """Decode eps_a - eps_b from simple-root coordinates in type A."""
    if all(x >= 0 for x in coords):
        idx = [j for j, x in enumerate(coords) if x]
        return idx[0] + 1, idx[-1] + 2
    b, a = _decode_type_a_root(tuple(-x for x in coords))
    return a, b


def to_line_notation(w: WeylElement) -> Tuple[int, ...]:
    """Line notation (w(1),...,w(n)) for type A rank n-1."""
    rs = w.system
    if rs.family != "A":
        raise ValueError("line notation is defined for type A only")
    n = rs.rank + 1
    # w(alpha_i) = eps_{p(i)} - eps_{p(i+1)} determines p along the chain
    pairs = [_decode_type_a_root(w.apply(rs.simple_root(i))) for i in range(1, n)]
    p = [pairs[0][0]] + [pair[1] for pair in pairs]
    return tuple(p)


def from_line_notation(system: RootSystem, seq: Sequence[int]) -> WeylElement:
    """Inverse of to_line_notation."""
    n = system.rank + 1
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError("input is not a permutation of 1..n")
    p = list(seq)
    # column j of the matrix is w(alpha_j) = eps_{p(j)} - eps_{p(j+1)}
    cols = []
    for j in range(system.rank):
        a, b = p[j], p[j + 1]
        coords = [0] * system.rank
        # eps_a - eps_b = sum of alpha_k over [min..max), signed
        lo, hi, sign = (a, b, 1) if a < b else (b, a, -1)
        for k in range(lo, hi):
            coords[k - 1] = sign
        cols.append(tuple(coords))
    matrix = tuple(tuple(cols[j][r] for j in range(system.rank)) for r in range(system.rank))
    return WeylElement(system, matrix)


class WeylGroup:
    """Full enumeration of a finite Weyl group with order machinery.

    Elements are listed breadth-first by length; Bruhat comparisons are
    memoized in a shared per-group table.
    """

    DEFAULT_CAP = 1_000_000

    def __init__(self, system: RootSystem, cap: int = DEFAULT_CAP):
        self.system = system
        gens = [simple_reflection(system, i + 1) for i in range(system.rank)]
        self.generators = gens
        elements: List[WeylElement] = [identity(system)]
        index: Dict[Matrix, int] = {elements[0].matrix: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for ei in frontier:
                w = elements[ei]
                for s in gens:
                    ws = w * s
                    if ws.matrix not in index:
                        if len(elements) >= cap:
                            raise CapExceededError(len(elements))
                        index[ws.matrix] = len(elements)
                        elements.append(ws)
                        nxt.append(index[ws.matrix])
            frontier = nxt
        self.elements = elements
        self.index = index
        self.lengths = [w.length() for w in elements]
        # right multiplication table by generators, 0-based generator index
        self.right_mul = [
            [index[(w * s).matrix] for s in gens] for w in elements
        ]
        self._bruhat: Dict[Tuple[int, int], bool] = {}
        self._descents = [
            [i for i in range(system.rank) if self.lengths[self.right_mul[e][i]] < self.lengths[e]]
            for e in range(len(elements))
        ]

    def __len__(self) -> int:
        return len(self.elements)

    def idx(self, w: WeylElement) -> int:
        return self.index[w.matrix]

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        """Strong Bruhat order via the lifting property."""
        return self._bruhat_idx(self.idx(u), self.idx(w))

    def _bruhat_idx(self, ui: int, wi: int) -> bool:
        if ui == wi:
            return True
        lu, lw = self.lengths[ui], self.lengths[wi]
        if lu >= lw:
            return False
        if lu == 0:
            return True
        key = (ui, wi)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        s = self._descents[wi][0]
        ws = self.right_mul[wi][s]
        us = self.right_mul[ui][s]
        if self.lengths[us] < self.lengths[ui]:
            res = self._bruhat_idx(us, ws)
        else:
            res = self._bruhat_idx(ui, ws)
        self._bruhat[key] = res
        return res

    def bruhat_covers_below(self, w: WeylElement) -> List[WeylElement]:
        """All u with u covered by w; each u = w * t for a reflection t."""
        lw = w.length()
        out = []
        seen = set()
        for beta in self.system.positive_roots:
            t = reflection(self.system, beta)
            u = w * t
            if u.length() == lw - 1 and u.matrix not in seen:
                seen.add(u.matrix)
                out.append(u)
        return out

    def subgroup_elements(self, L: Iterable[int]) -> List[WeylElement]:
        """All elements of the standard parabolic W_L, breadth-first by length."""
        Lset = sorted(set(L))
        start = identity(self.system)
        elements = [start]
        seen = {start.matrix}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for i in Lset:
                    ws = w * self.generators[i - 1]
                    if ws.matrix not in seen:
                        seen.add(ws.matrix)
                        elements.append(ws)
                        nxt.append(ws)
            frontier = nxt
        return elements

    def min_coset_reps(self, L: Iterable[int]) -> List[WeylElement]:
        """Minimal-length representatives W^L, in enumeration order."""
        Lset = set(L)
        out = []
        for w in self.elements:
            if not Lset.intersection(w.right_descents()):
                out.append(w)
        return out


def enumerate_group(
    system: RootSystem, cap: int = WeylGroup.DEFAULT_CAP
) -> List[WeylElement]:
    """All elements of W, breadth-first by length."""
    return weyl_group(system, cap).elements


def weyl_group(system: RootSystem, cap: int = WeylGroup.DEFAULT_CAP) -> WeylGroup:
    """The (cached) full enumeration for a root system."""
    group = getattr(system, "_weyl_group", None)
    if group is None:
        group = WeylGroup(system, cap)
        system._weyl_group = group
    return group


def enumerate_min_coset_reps(system: RootSystem, L: Iterable[int]) -> List[WeylElement]:
    return weyl_group(system).min_coset_reps(L)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    return weyl_group(u.system).bruhat_leq(u, w)


def bruhat_covers_below(w: WeylElement) -> List[WeylElement]:
    return weyl_group(w.system).bruhat_covers_below(w)
