"""Pseudo-monotone classification and ball covers on finite valuation data.

A :class:`ValuationMatrix` holds ``v(s_i - s_j)`` for a finite prefix of a
sequence in a rank-one valuation domain.  Every verdict here is about that
prefix only and says so (``prefix_length`` on the report).
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .newton import INFINITY, Infinity, Val, parse_val, val_str


class UltrametricError(ValueError):
    pass


@dataclass(frozen=True)
class ValuationMatrix:
    entries: tuple[tuple[Val, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        rows = tuple(tuple(parse_val(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        self.validate()

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Val:
        i, j = ij
        return self.entries[i][j]

    def validate(self) -> None:
        n = self.n
        m = self.entries
        if any(len(row) != n for row in m):
            raise UltrametricError("matrix is not square")
        if self.labels is not None and len(self.labels) != n:
            raise UltrametricError("label count does not match matrix size")
        for i in range(n):
            if m[i][i] != INFINITY:
                raise UltrametricError(f"diagonal entry {i} is not infinite")
            for j in range(i + 1, n):
                if m[i][j] != m[j][i]:
                    raise UltrametricError(f"asymmetric at ({i}, {j})")
                if m[i][j] == INFINITY:
                    raise UltrametricError(f"points {i} and {j} coincide")
        for a, b, c in combinations(range(n), 3):
            x, y, z = m[a][b], m[b][c], m[a][c]
            # in an ultrametric triangle the two smallest sides are equal
            lo = sorted((x, y, z))
            if lo[0] != lo[1]:
                raise UltrametricError(f"ultrametric law fails on ({a}, {b}, {c}): {x}, {y}, {z}")

    def submatrix(self, idx: Sequence[int]) -> ValuationMatrix:
        labels = None if self.labels is None else [self.labels[i] for i in idx]
        return ValuationMatrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx), labels)

    def reversed(self) -> ValuationMatrix:
        return self.submatrix(range(self.n - 1, -1, -1))

    def off_diagonal(self) -> list[Val]:
        return [self.entries[i][j] for i in range(self.n) for j in range(i + 1, self.n)]

    @classmethod
    def from_function(cls, n: int, fn, labels=None) -> ValuationMatrix:
        rows = [[INFINITY if i == j else fn(min(i, j), max(i, j)) for j in range(n)] for i in range(n)]
        return cls(tuple(map(tuple, rows)), labels)

    def to_json(self) -> dict:
        out = {"n": self.n, "entries": [[val_str(v) for v in row] for row in self.entries]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, obj) -> ValuationMatrix:
        if isinstance(obj, str):
            obj = json.loads(obj)
        m = cls(tuple(tuple(row) for row in obj["entries"]), obj.get("labels"))
        if "n" in obj and int(obj["n"]) != m.n:
            raise UltrametricError("declared n does not match the entries")
        return m


class Kind(str, enum.Enum):
    CONVERGENT = "PseudoConvergent"
    DIVERGENT = "PseudoDivergent"
    STATIONARY = "PseudoStationary"
    NONE = "None"


@dataclass(frozen=True)
class BreadthHint:
    kind: str  # WholeRing | MaximalIdeal | ProperBall | Fractional
    gamma: Val | None = None

    def __str__(self):
        return self.kind if self.gamma is None else f"{self.kind}({val_str(self.gamma)})"


@dataclass
class ClassificationReport:
    kind: Kind
    gauge: list[Val] = field(default_factory=list)
    breadth: Val | None = None
    breadth_ideal_hint: BreadthHint | None = None
    prefix_length: int = 0
    reason: str = ""

    @property
    def caveat(self) -> str:
        return f"prefix-certified, length {self.prefix_length}"

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "gauge": [val_str(v) for v in self.gauge],
            "breadth": None if self.breadth is None else val_str(self.breadth),
            "breadth_ideal_hint": None if self.breadth_ideal_hint is None else str(self.breadth_ideal_hint),
            "caveat": self.caveat,
            "reason": self.reason,
        }


def _is_stationary(m: ValuationMatrix) -> bool:
    vals = set(m.off_diagonal())
    return len(vals) == 1


def _triples_hold(m: ValuationMatrix, cmp) -> bool:
    e = m.entries
    return all(cmp(e[i][j], e[j][k]) for i, j, k in combinations(range(m.n), 3))


def _hint(kind: Kind, breadth: Val, limit: Val | None) -> BreadthHint:
    if kind is Kind.STATIONARY:
        if breadth == 0:
            return BreadthHint("WholeRing")
        return BreadthHint("ProperBall", breadth) if breadth > 0 else BreadthHint("Fractional", breadth)
    if kind is Kind.DIVERGENT:
        target = limit if limit is not None else breadth
        if target < 0:
            return BreadthHint("Fractional", target)
        if limit is not None and limit > 0:
            return BreadthHint("ProperBall", limit)
        # a pseudo-divergent sequence inside V has breadth ideal contained in M
        return BreadthHint("MaximalIdeal")
    target = limit if limit is not None else breadth
    return BreadthHint("ProperBall", target) if target >= 0 else BreadthHint("Fractional", target)


def classify_prefix(m: ValuationMatrix, limit: Val | None = None) -> ClassificationReport:
    """Pseudo-convergent / divergent / stationary test in the given index order.

    ``limit`` optionally supplies a known limit of the gauge (from a closed
    form); without it the breadth is the last gauge value on the prefix.
    """
    n = m.n
    if n < 3:
        return ClassificationReport(Kind.NONE, prefix_length=n, reason="insufficient")
    e = m.entries
    if _is_stationary(m):
        d = e[0][1]
        return ClassificationReport(Kind.STATIONARY, [d], d, _hint(Kind.STATIONARY, d, limit), n)
    if _triples_hold(m, lambda a, b: a < b):
        gauge = [e[i][i + 1] for i in range(n - 1)]
        b = gauge[-1]
        return ClassificationReport(Kind.CONVERGENT, gauge, b, _hint(Kind.CONVERGENT, b, limit), n)
    if _triples_hold(m, lambda a, b: a > b):
        gauge = [e[i][i - 1] for i in range(1, n)]
        b = gauge[-1]
        return ClassificationReport(Kind.DIVERGENT, gauge, b, _hint(Kind.DIVERGENT, b, limit), n)
    return ClassificationReport(Kind.NONE, prefix_length=n, reason="no pseudo-monotone pattern")


def ball_cover(m: ValuationMatrix, delta: Val) -> tuple[int, ...]:
    """Smallest set T of indices with every point within valuation ``delta`` of T.

    Exhaustive over subset sizes, smallest first; ties go to the
    lexicographically first index tuple.
    """
    delta = parse_val(delta)
    if not isinstance(delta, Infinity) and delta <= 0:
        raise ValueError("delta must be positive")
    e = m.entries
    n = m.n
    for size in range(1, n + 1):
        for T in combinations(range(n), size):
            if all(any(e[s][t] >= delta for t in T) for s in range(n)):
                return T
    return tuple(range(n))


def residue_classes(m: ValuationMatrix, gamma: Val) -> list[tuple[int, ...]]:
    """Classes of ``v(s_i - s_j) >= gamma``, ordered by smallest member."""
    gamma = parse_val(gamma)
    if not isinstance(gamma, Infinity) and gamma <= 0:
        raise ValueError("gamma must be positive")
    classes: list[list[int]] = []
    for i in range(m.n):
        for cls in classes:
            if m.entries[cls[0]][i] >= gamma:
                cls.append(i)
                break
        else:
            classes.append([i])
    return [tuple(c) for c in classes]


@dataclass
class CrosscheckReport:
    grid: list[Val]
    cover_sizes: list[int]
    class_counts: list[int]
    containments: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def gamma_grid(m: ValuationMatrix) -> list[Val]:
    """Positive off-diagonal values, midpoints between them, and one value above all."""
    vals = sorted({v for v in m.off_diagonal() if v > 0})
    grid = set(vals)
    for a, b in zip(vals, vals[1:]):
        grid.add((a + b) / 2)
    top = max(vals) + 1 if vals else Fraction(1)
    grid.add(top)
    if vals:
        grid.add(vals[0] / 2)
    return sorted(grid)


def theorem24_crosscheck(m: ValuationMatrix, grid: Sequence[Val] | None = None) -> CrosscheckReport:
    """Finite cover / residue-class agreement, plus breadth containment inside each class."""
    grid = list(grid) if grid is not None else gamma_grid(m)
    rep = CrosscheckReport(grid, [], [])
    for g in grid:
        cover = ball_cover(m, g)
        classes = residue_classes(m, g)
        rep.cover_sizes.append(len(cover))
        rep.class_counts.append(len(classes))
        if len(cover) != len(classes):
            rep.failures.append(f"gamma={val_str(g)}: cover {len(cover)} != classes {len(classes)}")
        for cls in classes:
            if len(cls) < 3:
                continue
            sub = classify_prefix(m.submatrix(cls))
            if sub.kind is Kind.DIVERGENT:
                if min(sub.gauge) < g:
                    rep.failures.append(f"gamma={val_str(g)}: divergent class {cls} leaves the ball")
                else:
                    rep.containments.append(f"gamma={val_str(g)}: divergent {cls}, Br in bM")
            elif sub.kind is Kind.STATIONARY:
                if sub.gauge[0] < g:
                    rep.failures.append(f"gamma={val_str(g)}: stationary class {cls} leaves the ball")
                else:
                    rep.containments.append(f"gamma={val_str(g)}: stationary {cls}, Br in bV")
    return rep


def longest_divergent_scan(m: ValuationMatrix) -> tuple[int, ...]:
    """Greedy pseudo-divergent subsequence in index order (heuristic, not optimal)."""
    e = m.entries
    chosen: list[int] = []
    for k in range(m.n):
        trial = chosen + [k]
        if all(e[a][b] > e[b][c] for a, b, c in combinations(trial, 3)):
            chosen = trial
    return tuple(chosen)


def random_ultrametric(n: int, rng: random.Random, max_children: int = 3) -> ValuationMatrix:
    """Ultrametric matrix from a random rooted tree with rational node heights.

    Points separated at a node get that node's height; heights strictly
    increase from the root toward the leaves.
    """
    e = [[INFINITY] * n for _ in range(n)]

    def split(points: list[int], height: Fraction):
        if len(points) < 2:
            return
        k = rng.randint(2, min(max_children, len(points)))
        rng.shuffle(points)
        cuts = sorted(rng.sample(range(1, len(points)), k - 1))
        parts = [points[a:b] for a, b in zip([0] + cuts, cuts + [len(points)])]
        for x, y in combinations(range(len(parts)), 2):
            for a in parts[x]:
                for b in parts[y]:
                    e[a][b] = e[b][a] = height
        for part in parts:
            split(part, height + Fraction(rng.randint(1, 6), rng.randint(1, 4)))

    split(list(range(n)), Fraction(rng.randint(0, 4), rng.randint(1, 4)))
    return ValuationMatrix(tuple(map(tuple, e)))
