"""
创建日期：2026年02月16日
介绍：球性判定

V 对 b 是球的，当且仅当对一般的偶向量 v，(ρ(b) + ℂ·id)·v = V。
矩阵的列是 ρ(X_i)v 和 v 本身，v 的偶坐标取未定元，比较一般秩与 dim V。
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from tools.borels import (
    BorelSubalgebra, EpsDeltaSequence, character_constants, enumerate_borel_classes, max_odd_borel_dim,
    standard_borel,
)
from tools.modules import Representation, restrict_even
from tools.superalgebras import bracket
from tools.weights import SuperDim, Weight
from utils.config import get_settings
from utils.errors import RejectError, VerificationError
from utils.linalg import (
    ZERO, GenericRank, Subspace, generic_rank, kernel, poly_ring, rank, span_closure, to_domain,
)

logger = logging.getLogger(__name__)


@dataclass
class SphericityReport:
    """
    一次球性判定的结果

    Attributes:
        spherical: 判定
        method: symbolic / sample / sampled / dimension / empty
        witness: 球向量（球时给出，有理、偶）
        rank: 达到的一般秩
        dim: 模的维数
        borel: Borel 的标签
        exact: sampled 时为 False，表示“不球”只是采样结论
    """
    spherical: bool
    method: str
    witness: Optional[List[Fraction]]
    rank: int
    dim: int
    borel: str
    exact: bool = True

    @property
    def verdict(self) -> str:
        return "spherical" if self.spherical else "not_spherical"

    def to_json(self) -> Dict:
        return {
            "borel": self.borel,
            "verdict": self.verdict,
            "method": self.method,
            "rank": self.rank,
            "dim": self.dim,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


@dataclass
class StabilizerReport:
    basis: List[List[Fraction]]
    superdim: SuperDim
    closed: bool
    hint: str = ""

    def to_json(self) -> Dict:
        return {"superdim": str(self.superdim), "closed": self.closed, "hint": self.hint,
                "dim": len(self.basis)}


# ---------------------------------------------------------------- 秩检验


def orbit_rank(rep: Representation, v: Sequence[Fraction], indices: Optional[Sequence[int]] = None,
               with_identity: bool = True) -> int:
    """[ρ(X₁)v … ρ(X_k)v | v] 的秩（精确，用于复核见证）"""
    idx = range(rep.algebra.dim) if indices is None else indices
    sparse = {j: x for j, x in enumerate(v) if x}
    cols = [rep.act(k, sparse) for k in idx]
    if with_identity:
        cols.append(sparse)
    rows = [[col.get(i, ZERO) for col in cols] for i in range(rep.dim)]
    return rank(rows) if cols else 0


def _orbit_poly_matrix(rep: Representation, indices: Sequence[int], even: Sequence[int]):
    R, gens = poly_ring([f"v{j}" for j in even])
    zero = R.zero
    cols = []
    for k in indices:
        col = [zero] * rep.dim
        for pos, j in enumerate(even):
            for i, x in rep.ops[k][j].items():
                col[i] = col[i] + to_domain(x) * gens[pos]
        cols.append(col)
    identity = [zero] * rep.dim
    for pos, j in enumerate(even):
        identity[j] = gens[pos]
    cols.append(identity)
    return [[col[i] for col in cols] for i in range(rep.dim)]


def is_spherical(rep: Representation, borel: Optional[BorelSubalgebra] = None) -> SphericityReport:
    """
    判定 rep 对 borel 是否为球表示

    Args:
        rep: 表示（应当已通过 verify_representation）
        borel: Borel 子代数，缺省为标准 Borel

    Returns:
        SphericityReport: 球时附带可复核的有理见证

    Raises:
        VerificationError: 见证复核失败
    """
    borel = borel or standard_borel(rep.algebra)
    if borel.algebra is not rep.algebra:
        raise RejectError("Borel 与表示不属于同一个代数")
    dim = rep.dim
    even = [j for j in range(dim) if rep.parities[j] == 0]
    indices = list(borel.indices)
    if dim == 0:
        return SphericityReport(True, "empty", [], 0, 0, borel.label)
    if not even:
        return SphericityReport(False, "empty", None, 0, dim, borel.label)
    if len(indices) + 1 < dim:
        logger.debug("%s 对 %s：b 的维数不足，直接判为非球", rep.label, borel.label)
        return SphericityReport(False, "dimension", None, len(indices) + 1, dim, borel.label)
    result: GenericRank = generic_rank(_orbit_poly_matrix(rep, indices, even))
    spherical = result.rank == dim
    witness = None
    if spherical:
        witness = [ZERO] * dim
        for j in even:
            witness[j] = result.witness.get(f"v{j}", ZERO)
        if orbit_rank(rep, witness, indices) != dim:
            raise VerificationError(f"{rep.label}: 球向量复核失败")
    elif not result.exact:
        logger.warning("%s 对 %s 的非球判定来自采样", rep.label, borel.label)
    logger.debug("%s 对 %s：秩 %d / %d（%s）", rep.label, borel.label, result.rank, dim, result.method)
    return SphericityReport(spherical, result.method, witness, result.rank, dim, borel.label, result.exact)


def _scan_one(args: Tuple[Representation, BorelSubalgebra]) -> SphericityReport:
    rep, borel = args
    return is_spherical(rep, borel)


def spherical_borel_scan(rep: Representation, jobs: Optional[int] = None) -> List[Tuple[BorelSubalgebra, SphericityReport]]:
    """
    对每个 Borel 类的代表做球性判定

    Args:
        rep: 表示
        jobs: 并行进程数，缺省取配置

    Returns:
        List: (Borel, 报告)，顺序与 enumerate_borel_classes 一致
    """
    borels = enumerate_borel_classes(rep.algebra)
    jobs = jobs if jobs is not None else get_settings().scan.jobs
    if jobs > 1 and len(borels) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_scan_one, [(rep, b) for b in borels]))
    else:
        reports = [is_spherical(rep, b) for b in borels]
    return list(zip(borels, reports))


def spherical_borels(rep: Representation, jobs: Optional[int] = None) -> List[str]:
    """对其球的 Borel 标签"""
    return [b.label for b, report in spherical_borel_scan(rep, jobs) if report.spherical]


# ---------------------------------------------------------------- 稳定子


def stabilizer(rep: Representation, v: Sequence[Fraction], hint: str = "") -> StabilizerReport:
    """
    g 中零化 v 的子代数 {X : ρ(X)v = 0}

    Returns:
        StabilizerReport: 基（g 的坐标）、超维数、括号封闭性
    """
    g = rep.algebra
    sparse = {j: Fraction(x) for j, x in enumerate(v) if x}
    cols = [rep.act(k, sparse) for k in range(g.dim)]
    rows = [[col.get(i, ZERO) for col in cols] for i in range(rep.dim)]
    basis = kernel(rows, g.dim)
    odd = 0
    for x in basis:
        odd += g.element_parity(x)
    space = Subspace(g.dim)
    for x in basis:
        space.add(x)
    closed = all(space.contains(bracket(g, x, y)) for i, x in enumerate(basis) for y in basis[i:])
    if not closed:
        logger.warning("%s 的稳定子不封闭", rep.label)
    return StabilizerReport(basis, SuperDim(len(basis) - odd, odd), closed, hint)


def stabilizer_complement_check(rep: Representation, v: Sequence[Fraction]) -> bool:
    """稳定子维数 + 轨道维数 = dim g"""
    stab = stabilizer(rep, v)
    return len(stab.basis) + orbit_rank(rep, v, with_identity=False) == rep.algebra.dim


# ---------------------------------------------------------------- 数值球性


def g0_spherical(even_rep: Representation) -> bool:
    """
    约化偶代数上的普通表示是否为球的；奇偶标记忽略，整个空间当作偶空间

    Raises:
        RejectError: 代数含奇元
    """
    g = even_rep.algebra
    if any(g.parities):
        raise RejectError(f"{g.name} 不是偶代数")
    rep = even_rep
    if any(even_rep.parities):
        rep = Representation(g, even_rep.ops, [0] * even_rep.dim, even_rep.weights, even_rep.label)
    if g.dim == 0:
        return rep.dim <= 1
    return is_spherical(rep, standard_borel(g)).spherical


def is_numerically_spherical(rep: Representation) -> bool:
    """V₀ 是球 g₀ 模，且 dim V₁ 不超过所有 Borel 奇部分维数的最大值"""
    odd = rep.superdim.odd
    if odd > max_odd_borel_dim(rep.algebra):
        return False
    return g0_spherical(restrict_even(rep, 0))


# ---------------------------------------------------------------- 等价与模式


def _character_normal_form(g, weights: Sequence[Weight]) -> Tuple:
    gens, _ = character_constants(g)
    if not gens or not weights:
        return tuple(sorted(w.sort_key() for w in weights))
    gen = gens[0]
    idx = next(i for i, x in enumerate(gen.coeffs) if x)
    top = max(weights, key=lambda w: w.sort_key())
    shift = gen.scaled(top.coeffs[idx] / gen.coeffs[idx])
    return tuple(sorted((w - shift).sort_key() for w in weights))


def equivalence_signature(rep: Representation) -> Dict:
    """
    (超维数, 相差特征扭转的权重多重集, 作用代数维数)；只是启发式的等价判别
    """
    parities = Counter(rep.parities)
    image = span_closure(rep.matrices(), rep.dim) if rep.dim else []
    return {
        "superdim": str(SuperDim(parities[0], parities[1])),
        "weights": _character_normal_form(rep.algebra, rep.weights),
        "image_dim": len(image),
        "heuristic": True,
    }


def spherical_pattern_check(rep: Representation, pattern: Callable[[EpsDeltaSequence], bool],
                            jobs: Optional[int] = None) -> Tuple[bool, List[str]]:
    """
    扫描所有 Borel 类，检查“球 ⟺ εδ 序列满足 pattern”

    Returns:
        (是否一致, 不一致的 Borel 标签)
    """
    mismatches = []
    for borel, report in spherical_borel_scan(rep, jobs):
        if borel.sequence is None:
            continue
        if report.spherical != pattern(borel.sequence):
            mismatches.append(borel.label)
    return not mismatches, mismatches
