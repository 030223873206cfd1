"""
创建日期：2026年02月16日
介绍：候选最高权的枚举与筛选

在标准 Borel 下枚举支配权（相差特征扭转只取一个代表），再用必要条件筛掉：
- L₀(λ) 是球 g₀ 模
- 沿奇反射得到的所有 g₀ 分量里，落在奇部分的总维数不超过 max_b dim b₁
- 奇最高权时存在一次改变权重的反射，得到的偶分量是球 g₀ 模
含参数 t 的一族按一般 t 判断，使某个配对为零的特殊 t 值再具体代入重判。
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple, Union

from tools.borels import (
    character_multiple, is_dominant, isotropic_simple_roots, max_odd_borel_dim, odd_reflection,
    reflect_highest_weight, reflection_special_value, standard_borel, weyl_dim_even,
)
from tools.highest_weight import irreducible_quotient, truncated_verma
from tools.root_data import RootDatum
from tools.sphericity import g0_spherical
from tools.superalgebras import LieSuperalgebra
from tools.weights import Weight
from utils.config import get_settings
from utils.errors import RejectError
from utils.linalg import ONE, ZERO

logger = logging.getLogger(__name__)

Algebra = Union[LieSuperalgebra, RootDatum]


@dataclass(frozen=True)
class Candidate:
    """
    候选最高权

    Attributes:
        weight: 最高权，可能含参数 t
        parity: 0 表示 L(λ)，1 表示 ΠL(λ)
        excluded: 一族中被排除的 t 值
    """
    weight: Weight
    parity: int
    excluded: Tuple[Fraction, ...] = ()

    def format(self) -> str:
        text = self.weight.format()
        if self.excluded:
            text += " (" + ", ".join(f"t≠{v}" for v in self.excluded) + ")"
        return ("Π" if self.parity else "") + text

    def to_json(self) -> Dict:
        return {"weight": self.weight.to_json(), "parity": self.parity,
                "excluded": [str(v) for v in self.excluded], "label": self.format()}


# ---------------------------------------------------------------- 枚举


def _partitions(length: int, bound: int) -> List[Tuple[int, ...]]:
    """末项为 0 的弱递减非负整数列"""
    if length == 0:
        return [()]
    out = []
    for head in itertools.combinations_with_replacement(range(bound, -1, -1), length - 1):
        out.append(tuple(head) + (0,))
    return out


def _grid(g: Algebra, bound: int) -> List[Tuple[Weight, Optional[Weight]]]:
    """(常数部分, 自由方向)；自由方向是 g₀ 中心去掉特征之后剩下的方向"""
    if isinstance(g, RootDatum):
        fundamentals = g.fundamental_weights()
        out = []
        for coeffs in itertools.product(range(bound + 1), repeat=len(fundamentals)):
            w = Weight.zero(*fundamentals[0].shape) if fundamentals else Weight()
            for c, f in zip(coeffs, fundamentals):
                w = w + f.scaled(c)
            out.append((w, None))
        return out
    r, n = g.split
    if g.kind == "gl":
        free = Weight.from_coeffs([ONE] * r + [ZERO] * n, r) if r else None
        eps = _partitions(r, bound)
        deltas = _partitions(n, bound)
        return [(Weight.from_coeffs(list(e) + list(d), r), free) for e in eps for d in deltas]
    if g.kind == "osp":
        deltas = [tuple(sorted(p, reverse=True)) for p in
                  itertools.combinations_with_replacement(range(bound + 1), n)]
        if g.m == 2:
            free = Weight.unit(r, n, 0)
            return [(Weight.from_coeffs([ZERO] + list(d), r), free) for d in deltas]
        out = []
        steps = [Fraction(k, 2) for k in range(-2 * bound, 2 * bound + 1)]
        for e in itertools.product(steps, repeat=r):
            for d in deltas:
                out.append((Weight.from_coeffs(list(e) + list(d), r), None))
        return out
    if g.kind == "p":
        return [(Weight.from_coeffs(list(p), r), None) for p in _partitions(r, bound)]
    if g.kind == "q":
        free = Weight.from_coeffs([ONE] * r, r)
        out = []
        for p in _partitions(r, bound):
            out.append((Weight.from_coeffs(list(p), r), free if len(set(p)) == r else None))
        return out
    raise RejectError(f"{g.kind} 不支持候选权枚举")


def _with_parameter(mu: Weight, free: Weight) -> Weight:
    return Weight.from_coeffs(mu.coeffs, len(mu.eps), free.coeffs)


def _is_character(g: Algebra, lam: Weight) -> bool:
    if isinstance(g, RootDatum):
        return lam.is_zero()
    if lam.has_parameter:
        return False
    try:
        character_multiple(g, lam)
    except RejectError:
        return False
    return True


# ---------------------------------------------------------------- g₀ 数据


def _simple_roots(g: Algebra):
    if isinstance(g, RootDatum):
        return tuple(g.simple_roots)
    return tuple(standard_borel(g).simple_roots)


def _even_borel_dim(g: Algebra) -> int:
    if isinstance(g, RootDatum):
        return len(g.positive_even_roots()) + len(g.names)
    return standard_borel(g).even_dim


@lru_cache(maxsize=None)
def _l0_spherical(g: LieSuperalgebra, mu: Weight) -> bool:
    """L₀(μ) 是否为球 g₀ 模（按常数部分构造，中心只以标量作用）"""
    if weyl_dim_even(g, mu) > _even_borel_dim(g) + 1:
        return False
    b0 = standard_borel(g).even_part()
    l0 = irreducible_quotient(truncated_verma(b0.algebra, b0, mu))
    return g0_spherical(l0)


def _factor_spherical(g: RootDatum, factor: Tuple[Weight, ...], labels: List[int]) -> bool:
    """
    单个偶因子上的不可约模加上标量是否为球的。例外代数的偶因子只有 A1、G2、B3：
    A1 取标号不超过 2；G2 只有 7 维表示；B3 只有矢量表示和旋量表示
    """
    active = [(beta, k) for beta, k in zip(factor, labels) if k]
    if not active:
        return True
    if len(factor) == 1:
        return labels[0] <= 2
    if len(active) > 1 or active[0][1] != 1:
        return False
    beta = active[0][0]
    shortest = min(abs(g.pair(c, c)) for c in factor)
    if abs(g.pair(beta, beta)) == shortest:
        return True
    if len(factor) == 2:
        return False
    # B3 的矢量表示：不与短单根相连的长单根
    return not any(g.pair(beta, c) for c in factor if abs(g.pair(c, c)) == shortest)


def datum_l0_spherical(g: RootDatum, mu: Weight) -> bool:
    """
    L₀(μ) = ⊗ L_i(μ_i) 加上标量是否为球 g₀ 模：只有一个因子非平凡时逐因子判断，
    两个因子非平凡时只有 sl₂ × sl₂ 上的 ℂ² ⊗ ℂ²
    """
    active = []
    for factor in g.even_factors():
        labels = []
        for beta in factor:
            value = 2 * g.pair(mu, beta) / g.pair(beta, beta)
            if value.denominator != 1 or value < 0:
                return False
            labels.append(int(value))
        if any(labels):
            active.append((factor, labels))
    if len(active) <= 1:
        return all(_factor_spherical(g, factor, labels) for factor, labels in active)
    if len(active) == 2:
        return all(len(factor) == 1 and labels == [1] for factor, labels in active)
    return False


def _g0_ok(g: Algebra, mu: Weight) -> bool:
    if weyl_dim_even(g, mu) > _even_borel_dim(g) + 1:
        return False
    if isinstance(g, RootDatum):
        return datum_l0_spherical(g, mu)
    return _l0_spherical(g, mu.constant_part())


def _components(g: Algebra, lam: Weight) -> Tuple[Dict[Tuple[Weight, int], int], Set[Fraction]]:
    """
    沿奇反射走遍可达的 Borel，收集 (最高权, 相对奇偶) 及一般 t 下的特殊值
    """
    start = _simple_roots(g)
    seen = {frozenset(start)}
    found = {(lam, 0)}
    specials: Set[Fraction] = set()
    queue = deque([(start, lam, 0)])
    while queue:
        system, mu, p = queue.popleft()
        for alpha in isotropic_simple_roots(g, system):
            value = reflection_special_value(g, mu, alpha)
            if value is not None:
                specials.add(value)
            reflected = odd_reflection(g, system, alpha)
            key = frozenset(reflected)
            if key in seen:
                continue
            seen.add(key)
            nu, q = reflect_highest_weight(g, mu, p, alpha)
            found.add((nu, q))
            queue.append((reflected, nu, q))
    dims = {key: weyl_dim_even(g, key[0]) for key in found}
    return dims, specials


def _passes_basic(g: Algebra, lam: Weight, parity: int) -> Tuple[bool, Set[Fraction]]:
    dims, specials = _components(g, lam)
    odd_bound = max_odd_borel_dim(g)
    b0 = _even_borel_dim(g)
    odd_total = sum(d for (_, r), d in dims.items() if (r + parity) % 2)
    if odd_total > odd_bound:
        return False, specials
    if any(d > b0 + 1 for (_, r), d in dims.items() if (r + parity) % 2 == 0):
        return False, specials
    if parity == 0:
        return _g0_ok(g, lam), specials
    flipped = [mu for (mu, r) in dims if r == 1]
    if not flipped:
        return False, specials
    return any(_g0_ok(g, mu) for mu in flipped), specials


def _q_passes(g: LieSuperalgebra, lam: Weight) -> Tuple[bool, Set[Fraction]]:
    specials = {-c / tc for c, tc in zip(lam.coeffs, lam.tcoeffs) if tc}
    if lam.has_parameter:
        k = sum(1 for c, tc in zip(lam.coeffs, lam.tcoeffs) if c or tc)
    else:
        k = sum(1 for c in lam.coeffs if c)
    half_clifford = 2 ** ((k + 1) // 2) // 2 if k else 1
    dim0 = weyl_dim_even(g, lam)
    if dim0 * half_clifford > max_odd_borel_dim(g):
        return False, specials
    return _g0_ok(g, lam), specials


def _p_passes(g: LieSuperalgebra, lam: Weight, parity: int) -> bool:
    dim0 = weyl_dim_even(g, lam)
    if parity == 0:
        return _g0_ok(g, lam)
    if dim0 > max_odd_borel_dim(g):
        return False
    std = standard_borel(g)
    for b in g.basis:
        if b.parity and b.root is not None and not std.is_positive(b.root):
            mu = lam + b.root
            if is_dominant(g, None, mu) and _g0_ok(g, mu):
                return True
    return False


def _passes(g: Algebra, lam: Weight, parity: int) -> Tuple[bool, Set[Fraction]]:
    if _is_character(g, lam):
        return False, set()
    if not is_dominant(g, None, lam):
        return False, set()
    kind = "datum" if isinstance(g, RootDatum) else g.kind
    if kind == "q":
        return _q_passes(g, lam)
    if kind == "p":
        return _p_passes(g, lam, parity), set()
    return _passes_basic(g, lam, parity)


def _check_concrete(g: Algebra, lam: Weight, parity: int) -> bool:
    try:
        ok, _ = _passes(g, lam, parity)
    except RejectError:
        return False
    return ok


def candidate_weights(g: Algebra, parity: int = 0, bound: Optional[int] = None) -> List[Candidate]:
    """
    列出 L(λ)（parity=0）或 ΠL(λ)（parity=1）可能数值球的最高权，相差特征扭转

    Args:
        g: 代数或例外代数的根数据
        parity: 最高权向量的奇偶性；q(n) 两种奇偶给出同一张表
        bound: 整数系数上界，缺省取配置

    Returns:
        List[Candidate]: 一族（含 t）排在前，具体权重在后
    """
    bound = bound if bound is not None else get_settings().scan.candidate_bound
    if not isinstance(g, RootDatum) and g.kind == "q":
        parity = 0
    families: List[Candidate] = []
    concrete: Dict[Weight, Candidate] = {}
    for mu, free in _grid(g, bound):
        lam = _with_parameter(mu, free) if free is not None else mu
        try:
            ok, specials = _passes(g, lam, parity)
        except RejectError as exc:
            logger.debug("%s 跳过：%s", lam, exc)
            continue
        if not lam.has_parameter:
            if ok:
                concrete.setdefault(lam, Candidate(lam, parity))
            continue
        excluded = []
        for value in sorted(specials):
            special = lam.evaluate(value)
            if _check_concrete(g, special, parity):
                if not ok:
                    concrete.setdefault(special, Candidate(special, parity))
            elif ok:
                excluded.append(value)
        if ok:
            families.append(Candidate(lam, parity, tuple(excluded)))
    family_weights = [c.weight for c in families]
    out = list(families)
    for lam, cand in sorted(concrete.items(), key=lambda kv: kv[0].sort_key()):
        if any(_in_family(lam, fam) for fam in family_weights):
            continue
        out.append(cand)
    logger.debug("%s 的候选权（奇偶 %d）：%s", getattr(g, "name", g), parity, [c.format() for c in out])
    return out


def _in_family(lam: Weight, family: Weight) -> bool:
    """lam 是否为 family 在某个 t 下的取值"""
    diff = [a - b for a, b in zip(lam.coeffs, family.coeffs)]
    direction = family.tcoeffs
    t = None
    for d, c in zip(diff, direction):
        if c:
            t = d / c
            break
    if t is None:
        return not any(diff)
    return all(d == t * c for d, c in zip(diff, direction))
