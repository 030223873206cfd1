"""
创建日期：2026年02月13日
介绍：例外基本李超代数 G(1,2)、F(1,3)、D(2,1;α) 的抽象根数据

这些代数没有矩阵实现，只保留根、双线性型和由奇反射连通的单根系，
足够做支配性判断、偶部分维数公式和候选权重筛选。
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from tools.weights import Gram, Weight, diagonal_gram, pairing
from utils.errors import RejectError
from utils.linalg import ONE, ZERO, SpanSolver, rref, to_fraction

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: int
    isotropic: bool


@dataclass(frozen=True)
class RootDatum:
    """
    例外代数的根数据

    Attributes:
        kind: G12 / F13 / D21a
        alpha: D(2,1;α) 的参数
        names: 权重坐标的名称
        gram: 坐标上的双线性型
        roots: 全部根
        simple_roots: 标准 Borel 的单根
        redirect: 与经典代数同构时给出对应的名称
    """
    kind: str
    alpha: Optional[Fraction]
    names: Tuple[str, ...]
    split: int
    gram: Gram
    roots: Tuple[Root, ...]
    simple_roots: Tuple[Weight, ...]
    redirect: Optional[str] = None
    _cache: Dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def name(self) -> str:
        if self.kind == "D21a":
            return f"D(2,1;{self.alpha})"
        return {"G12": "G(1,2)", "F13": "F(1,3)"}[self.kind]

    def pair(self, a: Weight, b: Weight) -> Fraction:
        return pairing(self.gram, a, b)

    def weight(self, coeffs) -> Weight:
        return Weight.from_coeffs([to_fraction(c) for c in coeffs], self.split)

    def even_roots(self) -> List[Weight]:
        return [r.weight for r in self.roots if r.parity == 0]

    def odd_roots(self) -> List[Weight]:
        return [r.weight for r in self.roots if r.parity == 1]

    def parity_of(self, w: Weight) -> int:
        for r in self.roots:
            if r.weight == w:
                return r.parity
        raise RejectError(f"{w} 不是 {self.name} 的根")

    def simple_coordinates(self, w: Weight, simple: Optional[Tuple[Weight, ...]] = None) -> List[Fraction]:
        simple = simple or self.simple_roots
        key = ("solver", simple)
        if key not in self._cache:
            self._cache[key] = SpanSolver([s.coeffs for s in simple])
        coords = self._cache[key].coords(w.coeffs)
        if coords is None:
            raise RejectError(f"{w} 不在单根张成的空间中")
        return coords

    def is_positive(self, w: Weight, simple: Optional[Tuple[Weight, ...]] = None) -> bool:
        return all(c >= 0 for c in self.simple_coordinates(w, simple))

    def positive_roots(self, parity: Optional[int] = None, simple: Optional[Tuple[Weight, ...]] = None) -> List[Weight]:
        return [r.weight for r in self.roots
                if (parity is None or r.parity == parity) and self.is_positive(r.weight, simple)]

    def positive_even_roots(self) -> List[Weight]:
        return self.positive_roots(0)

    @property
    def odd_positive_dim(self) -> int:
        """所有 Borel 的奇部分维数相同，等于正奇根个数"""
        return len(self.positive_roots(1))

    def is_isotropic(self, w: Weight) -> bool:
        return self.pair(w, w) == 0

    def simple_systems(self) -> List[Tuple[Weight, ...]]:
        """从标准单根系出发经奇反射可达的全部单根系"""
        if "systems" not in self._cache:
            start = self.simple_roots
            seen: Dict[FrozenSet[Weight], Tuple[Weight, ...]] = {frozenset(start): start}
            queue = deque([start])
            while queue:
                system = queue.popleft()
                for alpha in system:
                    if not self.is_isotropic(alpha):
                        continue
                    reflected = _reflect(system, alpha, self.gram)
                    key = frozenset(reflected)
                    if key not in seen:
                        seen[key] = reflected
                        queue.append(reflected)
            self._cache["systems"] = list(seen.values())
        return self._cache["systems"]

    def is_dominant(self, lam: Weight) -> bool:
        """
        λ 是有限维不可约模的最高权：沿奇反射到达的每个 Borel 上，
        迁移后的最高权对全部正偶根整且非负，对非迷向奇单根 γ 有 2(λ,γ)/(γ,γ) ∈ 2ℤ≥0
        """
        even = self.positive_even_roots()
        start = self.simple_roots
        seen = {frozenset(start)}
        queue = deque([(start, lam)])
        while queue:
            system, mu = queue.popleft()
            for beta in even:
                if not _nonneg_integer(2 * self.pair(mu, beta) / self.pair(beta, beta)):
                    return False
            for gamma in system:
                if self.parity_of(gamma) == 1 and not self.is_isotropic(gamma):
                    value = 2 * self.pair(mu, gamma) / self.pair(gamma, gamma)
                    if not _nonneg_integer(value) or value.numerator % 2:
                        return False
            for alpha in system:
                if not self.is_isotropic(alpha):
                    continue
                reflected = _reflect(system, alpha, self.gram)
                key = frozenset(reflected)
                if key in seen:
                    continue
                seen.add(key)
                nu = mu - alpha if self.pair(mu, alpha) else mu
                queue.append((reflected, nu))
        return True

    def even_simple_roots(self) -> List[Weight]:
        even = self.positive_even_roots()
        return [b for b in even if not any((b - c) in even for c in even if c != b)]

    def even_factors(self) -> List[Tuple[Weight, ...]]:
        """偶部分的单因子，每个因子给出它的单根（互不正交的单根归为一组）"""
        groups: List[List[Weight]] = []
        for beta in self.even_simple_roots():
            merged = [beta]
            for grp in [grp for grp in groups if any(self.pair(beta, c) for c in grp)]:
                merged.extend(grp)
                groups.remove(grp)
            groups.append(merged)
        return [tuple(grp) for grp in groups]

    def fundamental_weights(self) -> List[Weight]:
        """偶部分（半单）的基本权，按正偶根中的单根排序"""
        simple_even = self.even_simple_roots()
        rows = []
        for beta in simple_even:
            scale = 2 / self.pair(beta, beta)
            rows.append([scale * sum(beta.coeffs[i] * self.gram[i][j] for i in range(len(beta.coeffs)))
                         for j in range(len(beta.coeffs))])
        size = len(self.names)
        out = []
        for k in range(len(simple_even)):
            augmented = [row + [ONE if i == k else ZERO] for i, row in enumerate(rows)]
            reduced, pivots = rref(augmented, size + 1)
            if size in pivots or len(pivots) < size:
                raise RejectError(f"{self.name} 的偶部分不是半单的")
            coeffs = [ZERO] * size
            for row, p in zip(reduced, pivots):
                coeffs[p] = row[size]
            out.append(Weight.from_coeffs(coeffs, self.split))
        return out

    def describe(self) -> Dict:
        return {
            "kind": self.kind,
            "alpha": None if self.alpha is None else str(self.alpha),
            "name": self.name,
            "redirect": self.redirect,
            "roots": [{"root": r.weight.format(self.names), "parity": r.parity, "isotropic": r.isotropic}
                      for r in self.roots],
            "simple_roots": [s.format(self.names) for s in self.simple_roots],
        }


def _nonneg_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _reflect(system: Tuple[Weight, ...], alpha: Weight, gram: Gram) -> Tuple[Weight, ...]:
    out = []
    for beta in system:
        if beta == alpha:
            out.append(-alpha)
        elif pairing(gram, beta, alpha):
            out.append(beta + alpha)
        else:
            out.append(beta)
    return tuple(out)


def _datum(kind: str, alpha, names, split, gram, even, odd, simple, redirect=None) -> RootDatum:
    def w(c):
        return Weight.from_coeffs([to_fraction(x) for x in c], split)

    roots = []
    for c in even:
        roots.append(Root(w(c), 0, False))
    for c in odd:
        weight = w(c)
        roots.append(Root(weight, 1, pairing(gram, weight, weight) == 0))
    return RootDatum(kind, alpha, tuple(names), split, gram, tuple(roots), tuple(w(c) for c in simple), redirect)


def _g12() -> RootDatum:
    gram = ((Fraction(2), Fraction(-1), ZERO), (Fraction(-1), Fraction(2), ZERO), (ZERO, ZERO, Fraction(-2)))
    eps = [(1, 0), (0, 1), (-1, -1)]
    even = []
    for e in eps:
        even.append((e[0], e[1], 0))
        even.append((-e[0], -e[1], 0))
    for i, j in itertools.permutations(range(3), 2):
        even.append((eps[i][0] - eps[j][0], eps[i][1] - eps[j][1], 0))
    even += [(0, 0, 2), (0, 0, -2)]
    odd = [(0, 0, 1), (0, 0, -1)]
    for e in eps:
        for s in (1, -1):
            for d in (1, -1):
                odd.append((s * e[0], s * e[1], d))
    simple = [(-1, -1, 1), (1, 0, 0), (-1, 1, 0)]
    return _datum("G12", None, ("ε1", "ε2", "δ"), 2, gram, even, odd, simple)


def _f13() -> RootDatum:
    gram = diagonal_gram([1, 1, 1, -3])
    even = []
    for i in range(3):
        for s in (1, -1):
            c = [0, 0, 0, 0]
            c[i] = s
            even.append(tuple(c))
    for i, j in itertools.combinations(range(3), 2):
        for s, t in itertools.product((1, -1), repeat=2):
            c = [0, 0, 0, 0]
            c[i], c[j] = s, t
            even.append(tuple(c))
    even += [(0, 0, 0, 1), (0, 0, 0, -1)]
    odd = [tuple(HALF * s for s in signs) for signs in itertools.product((1, -1), repeat=4)]
    simple = [(-HALF, -HALF, -HALF, HALF), (0, 0, 1, 0), (0, 1, -1, 0), (1, -1, 0, 0)]
    return _datum("F13", None, ("ε1", "ε2", "ε3", "δ"), 3, gram, even, odd, simple)


def _d21a(alpha: Fraction) -> RootDatum:
    gram = diagonal_gram([1, alpha, -(1 + alpha)])
    even = []
    for i in range(3):
        for s in (1, -1):
            c = [0, 0, 0]
            c[i] = s
            even.append(tuple(c))
    odd = [tuple(HALF * s for s in signs) for signs in itertools.product((1, -1), repeat=3)]
    simple = [(-HALF, HALF, HALF), (HALF, -HALF, HALF), (HALF, HALF, -HALF)]
    redirect = "osp(4|2)" if alpha in (ONE, Fraction(-2), Fraction(-1, 2)) else None
    return _datum("D21a", alpha, ("ε", "δ", "γ"), 1, gram, even, odd, simple, redirect)


@lru_cache(maxsize=None)
def exceptional_root_datum(kind: str, alpha=None) -> RootDatum:
    """
    例外代数的根数据

    Args:
        kind: G12 / F13 / D21a
        alpha: D21a 的有理参数，不能是 0 或 −1

    Raises:
        RejectError: 未知类型或退化参数
    """
    if kind == "G12":
        return _g12()
    if kind == "F13":
        return _f13()
    if kind == "D21a":
        if alpha is None:
            raise RejectError("D(2,1;α) 需要参数 α")
        alpha = to_fraction(alpha)
        if alpha in (ZERO, -ONE):
            raise RejectError(f"α = {alpha} 时 D(2,1;α) 退化")
        datum = _d21a(alpha)
        if datum.redirect:
            logger.info("D(2,1;%s) 同构于 %s", alpha, datum.redirect)
        return datum
    raise RejectError(f"未知的例外代数: {kind}")


def d21a_weight(datum: RootDatum, c1, c2, c3) -> Weight:
    """由主根上的取值 (c1, c2, c3) 给出权重 (c1 ε + c2 δ + c3 γ)/2"""
    return datum.weight([to_fraction(c1) / 2, to_fraction(c2) / 2, to_fraction(c3) / 2])
