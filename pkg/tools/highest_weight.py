"""
创建日期：2026年02月15日
介绍：最高权模

诱导模 U(g) ⊗_{U(p)} W 在 PBW 单项式基上实现，作用由拉直规则给出；
Verma 模按层截断。不可约商用对偶方法计算：λ 权空间的坐标泛函在
φ ↦ φ∘ρ(X) 下生成的空间恰好是不可约商的对偶。
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from tools.borels import (
    BorelSubalgebra, borel_from_coweight, is_dominant, standard_borel,
)
from tools.modules import Columns, Representation, from_matrices, submodule_generated, verify_representation
from tools.superalgebras import LieSuperalgebra, build_algebra
from tools.weights import Weight
from utils.config import get_settings
from utils.errors import RejectError, VerificationError
from utils.linalg import ONE, ZERO, SparseVector, Subspace, kernel, rref, to_fraction

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

Monomial = Tuple[int, ...]
Term = Tuple[Monomial, int]


@dataclass(eq=False)
class HighestWeightStructure:
    """
    带最高权数据的（可能截断的）模

    Attributes:
        rep: 底层表示；截断时它还不是 g 模
        borel: 最高权所对的 Borel
        highest_weight: λ
        hw_indices: λ 权空间的基向量下标
        depth: 截断层数
        parity: 最高权空间的奇偶约定
        levels: 每个基向量的层
        exact: 没有截断时为 True
        slack: 单根的最大层，判断截断是否足够深
        deepen: 以新层数重建的函数
    """
    rep: Representation
    borel: BorelSubalgebra
    highest_weight: Weight
    hw_indices: List[int]
    depth: Fraction
    parity: int = 0
    levels: List[Fraction] = field(default_factory=list)
    exact: bool = True
    slack: Fraction = ONE
    deepen: Optional[Callable[[int], "HighestWeightStructure"]] = None

    @property
    def superdim(self):
        return self.rep.superdim


# ---------------------------------------------------------------- 层


def level_coweight(borel: BorelSubalgebra) -> Tuple[List[Fraction], Fraction]:
    """
    让每个单根取值为 1 的余权重；单根线性相关时退回 Borel 自己的余权重

    Returns:
        (余权重, 单根的最大层)
    """
    g = borel.algebra
    size = sum(g.split)
    simple = borel.simple_roots
    if simple:
        rows = [list(a.coeffs) + [ONE] for a in simple]
        reduced, pivots = rref(rows, size + 1)
        if size not in pivots:
            h = [ZERO] * size
            for row, p in zip(reduced, pivots):
                h[p] = row[size]
            return h, ONE
    h = list(borel.coweight.values)
    return h, max((a.level(h) for a in simple), default=ONE)


# ---------------------------------------------------------------- 诱导模


class InducedModule:
    """
    U(g) ⊗_{U(p)} W，其中 lower 张成 g 对 p 的补，p 的基元在 W 上按 inside_ops 作用

    单项式是 lower 中位置的非降序列（奇元至多一次），从左到右相乘后作用在 W 上。
    """

    def __init__(self, g: LieSuperalgebra, lower: Sequence[int], inside_ops: Dict[int, Columns],
                 w_parities: Sequence[int], w_weights: Sequence[Weight]):
        self.g = g
        self.lower = list(lower)
        self.position = {k: p for p, k in enumerate(self.lower)}
        self.inside_ops = inside_ops
        self.w_parities = list(w_parities)
        self.w_weights = list(w_weights)
        self.lower_parities = [g.basis[k].parity for k in self.lower]
        self._memo: Dict[Tuple[int, Monomial, int], Dict[Term, Fraction]] = {}

    def weight(self, mono: Monomial, w: int) -> Weight:
        out = self.w_weights[w]
        for p in mono:
            out = out + self.g.basis[self.lower[p]].root
        return out

    def parity(self, mono: Monomial, w: int) -> int:
        return (self.w_parities[w] + sum(self.lower_parities[p] for p in mono)) % 2

    def act(self, x: int, mono: Monomial, w: int) -> Dict[Term, Fraction]:
        """基元 x 作用在 mono ⊗ w 上，结果已拉直"""
        key = (x, mono, w)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        g = self.g
        p = self.position.get(x)
        out: Dict[Term, Fraction] = {}
        if not mono:
            if p is not None:
                out[((p,), w)] = ONE
            else:
                cols = self.inside_ops.get(x)
                if cols is not None:
                    for i, c in cols[w].items():
                        out[((), i)] = c
        else:
            head, rest = mono[0], mono[1:]
            if p is not None and (p < head or (p == head and not self.lower_parities[p])):
                out[((p,) + mono, w)] = ONE
            elif p is not None and p == head:
                # 奇元平方等于半个自括号
                for k, c in g.structure(x, x).items():
                    _add(out, c * HALF, self.act(k, rest, w))
            else:
                y = self.lower[head]
                sign = -ONE if g.basis[x].parity and g.basis[y].parity else ONE
                for (m2, w2), c in self.act(x, rest, w).items():
                    _add(out, sign * c, self.act(y, m2, w2))
                for k, c in g.structure(x, y).items():
                    _add(out, c, self.act(k, rest, w))
        self._memo[key] = out
        return out


def _add(target: Dict, c: Fraction, src: Dict) -> None:
    for key, x in src.items():
        value = target.get(key, ZERO) + c * x
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def _monomials(lower_levels: Sequence[Fraction], parities: Sequence[int], depth: Fraction) -> List[Monomial]:
    out: List[Monomial] = []

    def extend(start: int, mono: Monomial, total: Fraction):
        out.append(mono)
        for p in range(start, len(lower_levels)):
            t = total + lower_levels[p]
            if t > depth:
                continue
            extend(p + 1 if parities[p] else p, mono + (p,), t)

    extend(0, (), ZERO)
    return out


def _build(induced: InducedModule, borel: BorelSubalgebra, lam: Weight, depth: Fraction,
           parity: int, label: str, exact: bool, h: List[Fraction], slack: Fraction,
           deepen=None) -> HighestWeightStructure:
    g = induced.g
    lower_levels = [-g.basis[k].root.level(h) for k in induced.lower]
    if any(lev <= 0 for lev in lower_levels):
        raise RejectError("下降部分含有非负层的根，不能截断")
    w_levels = [(lam - wt).level(h) for wt in induced.w_weights]
    terms = []
    for mono in _monomials(lower_levels, induced.lower_parities, depth):
        base = sum((lower_levels[p] for p in mono), ZERO)
        for w, wl in enumerate(w_levels):
            if base + wl <= depth:
                terms.append((base + wl, mono, w))
    terms.sort()
    index = {(mono, w): i for i, (_, mono, w) in enumerate(terms)}
    ops = []
    for k in range(g.dim):
        cols: Columns = []
        for _, mono, w in terms:
            col: SparseVector = {}
            for key, c in induced.act(k, mono, w).items():
                i = index.get(key)
                if i is not None:
                    col[i] = c
            cols.append(col)
        ops.append(cols)
    parities = [induced.parity(mono, w) for _, mono, w in terms]
    weights = [induced.weight(mono, w) for _, mono, w in terms]
    rep = Representation(g, ops, parities, weights, label)
    hw = [i for i, (_, mono, w) in enumerate(terms) if not mono and induced.w_weights[w] == lam]
    logger.debug("%s: 深度 %s，维数 %d", label, depth, rep.dim)
    return HighestWeightStructure(rep, borel, lam, hw, depth, parity, [lev for lev, _, _ in terms],
                                  exact, slack, deepen)


# ---------------------------------------------------------------- Clifford 最高权空间


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    root = sympy.sqrt(sympy.Rational(x.numerator, x.denominator))
    if not root.is_Rational:
        return None
    return Fraction(int(root.p), int(root.q))


def clifford_module(values: Sequence[Fraction]) -> Tuple[List[List[List[Fraction]]], List[int]]:
    """
    q(n) 的 h₁ 上形式 (x, y) ↦ λ([x, y]) 的不可约 Clifford 模

    Args:
        values: λ 的坐标

    Returns:
        (每个奇 Cartan 元的矩阵, 基向量奇偶性)

    Raises:
        RejectError: 非零坐标多于三个，或需要无理平方根
    """
    nonzero = [i for i, a in enumerate(values) if a]
    n = len(values)
    if not nonzero:
        return [[[ZERO]] for _ in range(n)], [0]
    if len(nonzero) > 3:
        raise RejectError("最高权空间只实现到三个非零坐标")
    a = [values[i] for i in nonzero]
    gens = [[[ZERO, a[0]], [ONE, ZERO]]]
    parities = [0, 1]
    if len(a) >= 2:
        y = _rational_sqrt(-a[1] / a[0])
        if y is None:
            raise RejectError(f"λ = {tuple(str(v) for v in values)} 的 Clifford 模需要无理数 √{-a[1] / a[0]}")
        gens.append([[ZERO, -a[0] * y], [y, ZERO]])
    if len(a) == 3:
        grading = [[ONE, ZERO], [ZERO, -ONE]]
        third = [[ZERO, a[2]], [ONE, ZERO]]
        gens = [_kron(e, [[ONE, ZERO], [ZERO, ONE]]) for e in gens] + [_kron(grading, third)]
        parities = [(p + q) % 2 for p in (0, 1) for q in (0, 1)]
    size = len(parities)
    out = [[[ZERO] * size for _ in range(size)] for _ in range(n)]
    for pos, i in enumerate(nonzero):
        out[i] = gens[pos]
    return out, parities


def _kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def _dense_to_columns(m: List[List[Fraction]]) -> Columns:
    size = len(m)
    return [{i: m[i][j] for i in range(size) if m[i][j]} for j in range(size)]


def _character_ops(g: LieSuperalgebra, inside: Sequence[int], lam: Weight) -> Dict[int, Columns]:
    cartan = {k: pos for pos, k in enumerate(g.even_cartan)}
    ops: Dict[int, Columns] = {}
    for k in inside:
        value = lam.coeffs[cartan[k]] if k in cartan else ZERO
        ops[k] = [{0: value}] if value else [{}]
    return ops


# ---------------------------------------------------------------- 截断 Verma 模


def truncated_verma(g: LieSuperalgebra, borel: BorelSubalgebra, lam: Weight, depth: Optional[int] = None,
                    parity: int = 0) -> HighestWeightStructure:
    """
    Verma 模中层数不超过 depth 的部分；q(n) 的最高权空间取 Clifford 模

    Args:
        g: 代数
        borel: Borel 子代数
        lam: 最高权（不能含参数）
        depth: 截断层数，缺省从 2 开始
        parity: 最高权向量的奇偶性

    Raises:
        RejectError: λ 含参数或形状不对
    """
    if lam.has_parameter:
        raise RejectError("构造模之前需要把参数 t 代成有理数")
    if lam.shape != g.zero_weight().shape:
        raise RejectError(f"{lam} 不是 {g.name} 的权重")
    if depth is None:
        depth = 2
    h, slack = level_coweight(borel)
    inside = set(borel.indices)
    lower = [k for k in range(g.dim) if k not in inside]
    lower.sort(key=lambda k: (-g.basis[k].root.level(h), k))
    if g.kind == "q":
        mats, w_par = clifford_module(lam.coeffs)
        cartan = {k: pos for pos, k in enumerate(g.even_cartan)}
        odd = {k: pos for pos, k in enumerate(g.odd_cartan)}
        size = len(w_par)
        ops: Dict[int, Columns] = {}
        for k in inside:
            if k in cartan and lam.coeffs[cartan[k]]:
                ops[k] = [{j: lam.coeffs[cartan[k]]} for j in range(size)]
            elif k in odd:
                ops[k] = _dense_to_columns(mats[odd[k]])
            else:
                ops[k] = [{} for _ in range(size)]
        label = f"M_trunc({lam}; Clifford {size // 2}|{size // 2})"
    else:
        ops = _character_ops(g, inside, lam)
        w_par = [0]
        label = f"M_trunc({lam})"
    w_par = [(p + parity) % 2 for p in w_par]
    induced = InducedModule(g, lower, ops, w_par, [lam] * len(w_par))

    def deepen(d: int) -> HighestWeightStructure:
        return truncated_verma(g, borel, lam, d, parity)

    return _build(induced, borel, lam, Fraction(depth), parity, label, False, h, slack, deepen)


# ---------------------------------------------------------------- 不可约商


def _functional_space(hw: HighestWeightStructure) -> Subspace:
    rep = hw.rep
    rows = [[{} for _ in range(rep.dim)] for _ in range(len(rep.ops))]
    for k, cols in enumerate(rep.ops):
        for j, col in enumerate(cols):
            for i, x in col.items():
                rows[k][i][j] = x
    space = Subspace(rep.dim)
    queue: List[SparseVector] = []
    for i in hw.hw_indices:
        if space.add({i: ONE}):
            queue.append({i: ONE})
    while queue:
        phi = queue.pop()
        for k in range(len(rows)):
            out: SparseVector = {}
            for i, c in phi.items():
                for j, x in rows[k][i].items():
                    out[j] = out.get(j, ZERO) + c * x
            out = {j: x for j, x in out.items() if x}
            if out and space.add(out):
                queue.append(out)
    return space


def _quotient_from_functionals(hw: HighestWeightStructure, space: Subspace) -> Tuple[Representation, List[Fraction]]:
    rep = hw.rep
    basis = space.sparse_basis()
    pivots = space.pivots()
    pos = {p: a for a, p in enumerate(pivots)}
    ops = []
    for k in range(len(rep.ops)):
        cols: Columns = [{} for _ in basis]
        for a, phi in enumerate(basis):
            # (φ_a∘X) 在 F 中的坐标就是它在主元上的取值
            for p in pivots:
                value = sum((c * rep.ops[k][p].get(i, ZERO) for i, c in phi.items()), ZERO)
                if value:
                    cols[pos[p]][a] = value
        ops.append(cols)
    parities = [rep.parities[p] for p in pivots]
    weights = [rep.weights[p] for p in pivots]
    levels = [hw.levels[p] for p in pivots] if hw.levels else []
    quotient = Representation(rep.algebra, ops, parities, weights, f"L({hw.highest_weight})")
    return quotient, levels


def irreducible_quotient(hw: HighestWeightStructure, verify: bool = True) -> Representation:
    """
    最高权模的不可约商；截断模会自动加深，直到商在截断边界上没有向量

    Raises:
        RejectError: 最高权空间为空，或加深到上限仍不够
        VerificationError: 得到的商不满足超交换子关系
    """
    cap = get_settings().modules.verma_depth_cap
    while True:
        if not hw.hw_indices:
            raise RejectError("最高权空间为空")
        space = _functional_space(hw)
        if not len(space):
            raise RejectError("泛函空间为零，输入不一致")
        quotient, levels = _quotient_from_functionals(hw, space)
        if hw.exact or not levels or max(levels) <= hw.depth - hw.slack:
            break
        if hw.deepen is None or hw.depth >= cap:
            raise RejectError(f"截断深度达到上限 {cap}，{quotient.label} 仍未稳定")
        new_depth = min(int(hw.depth) * 2, cap)
        logger.debug("%s: 深度 %s 不够，加深到 %d", quotient.label, hw.depth, new_depth)
        hw = hw.deepen(new_depth)
    if verify:
        result = verify_representation(quotient)
        if not result:
            raise VerificationError(f"{quotient.label}: {result.message}")
    logger.debug("%s: 超维数 %s", quotient.label, quotient.superdim)
    return quotient


def radical(hw: HighestWeightStructure) -> Representation:
    """
    最高权模的根：到不可约商的映射的核

    Raises:
        RejectError: 模是截断的
    """
    if not hw.exact:
        raise RejectError("截断模的根没有意义")
    space = _functional_space(hw)
    vectors = kernel(space.basis(), hw.rep.dim)
    sub = submodule_generated(hw.rep, vectors)
    sub.label = f"rad({hw.rep.label})"
    return sub


def highest_weight_module(g: LieSuperalgebra, borel: Optional[BorelSubalgebra], lam: Weight,
                          parity: int = 0, depth: Optional[int] = None) -> Representation:
    """L_b(λ)：截断 Verma 模的不可约商"""
    borel = borel or standard_borel(g)
    rep = irreducible_quotient(truncated_verma(g, borel, lam, depth, parity))
    rep.label = f"L_{borel.label}({lam})"
    return rep


# ---------------------------------------------------------------- Kac 模


def _kac_grade(g: LieSuperalgebra, k: int) -> int:
    b = g.basis[k]
    if b.root is None or b.parity == 0:
        return 0
    if g.kind == "gl":
        value = sum(b.root.eps)
    else:
        value = b.root.eps[0]
    return 1 if value > 0 else -1


def kac_module_typeI(g: LieSuperalgebra, lam: Weight, parity: int = 0) -> HighestWeightStructure:
    """
    K(λ) = U(g) ⊗_{U(g₀ ⊕ g₁)} L₀(λ)，g 为 gl(m|n) 或 osp(2|2n)

    Raises:
        RejectError: g 没有 I 型分次，或 λ 对 g₀ 不是支配的
    """
    if not (g.kind == "gl" or (g.kind == "osp" and g.m == 2)):
        raise RejectError(f"{g.name} 没有 I 型分次")
    if lam.has_parameter:
        raise RejectError("构造模之前需要把参数 t 代成有理数")
    borel = standard_borel(g)
    b0 = borel.even_part()
    g0 = b0.algebra
    if not is_dominant(g0, b0, lam):
        raise RejectError(f"{lam} 对 {g0.name} 不是支配的")
    l0 = irreducible_quotient(truncated_verma(g0, b0, lam, parity=parity))
    position = {k: p for p, k in enumerate(g0.parent_indices)}
    lower = [k for k in range(g.dim) if _kac_grade(g, k) < 0]
    ops: Dict[int, Columns] = {}
    for k in range(g.dim):
        if k in position:
            ops[k] = l0.ops[position[k]]
        elif _kac_grade(g, k) > 0:
            ops[k] = [{} for _ in range(l0.dim)]
    induced = InducedModule(g, lower, ops, l0.parities, l0.weights)
    h, slack = level_coweight(borel)
    depth = sum((-g.basis[k].root.level(h) for k in lower), ZERO)
    depth += max(((lam - w).level(h) for w in l0.weights), default=ZERO)
    label = f"K({lam})"
    return _build(induced, borel, lam, depth, parity, label, True, h, slack)


def thin_kac_p(n: int, sign: str = "+") -> HighestWeightStructure:
    """
    p(n) 的 Kac 型模：sign 为 "+" 时是 ∇(ω)，从 g₀ ⊕ B 诱导 ℂ_ω；
    为 "-" 时是 Δ(−ω)，从 C ⊕ g₀ 诱导 ℂ_{−ω}

    Raises:
        RejectError: n < 2 或 sign 不认识
    """
    if n < 2:
        raise RejectError("p(n) 的 Kac 型模需要 n ≥ 2")
    if sign not in ("+", "-"):
        raise RejectError(f"未知的符号 {sign}")
    g = build_algebra("p", n)
    omega = Weight.from_coeffs([ONE] * n, n)
    if sign == "+":
        borel = borel_from_coweight(g, [Fraction(n - i) for i in range(n)])
        lam = omega
        label = "∇(ω)"
    else:
        borel = standard_borel(g)
        lam = -omega
        label = "Δ(-ω)"

    def is_lower(k: int) -> bool:
        b = g.basis[k]
        if not b.parity:
            return False
        total = sum(b.root.coeffs)
        return total < 0 if sign == "+" else total > 0

    lower = [k for k in range(g.dim) if is_lower(k)]
    inside = [k for k in range(g.dim) if not is_lower(k)]
    induced = InducedModule(g, lower, _character_ops(g, inside, lam), [0], [lam])
    h, slack = level_coweight(borel)
    depth = sum((-g.basis[k].root.level(h) for k in lower), ZERO)
    return _build(induced, borel, lam, depth, 0, label, True, h, slack)


def q_family(t, n: int = 2, parity: int = 0) -> Representation:
    """
    q(2) 上最高权 (1+t)ε₁ + tε₂ 的不可约模

    Raises:
        RejectError: n ≠ 2，或该 t 的 Clifford 模不是有理的
    """
    if n != 2:
        raise RejectError("这一族只在 q(2) 上定义")
    t = to_fraction(t)
    g = build_algebra("q", 2)
    lam = Weight.from_coeffs([1 + t, t], 2)
    rep = highest_weight_module(g, standard_borel(g), lam, parity)
    rep.label = f"(Q22)_t[t={t}]"
    return rep


def nabla_explicit() -> Representation:
    """∇(ω) 的显式 8×8 矩阵表示：前四个坐标为偶，后四个为奇"""
    g = build_algebra("p", 3)
    mats = []
    for b in g.basis:
        x = b.matrix
        a = [[x[i][j] for j in range(3)] for i in range(3)]
        bb = [[x[i][3 + j] for j in range(3)] for i in range(3)]
        c = [[x[3 + i][j] for j in range(3)] for i in range(3)]
        tr = a[0][0] + a[1][1] + a[2][2]
        c12, c13, c23 = c[0][1], c[0][2], c[1][2]
        rows = [
            [tr, 0, 0, 0, 0, 0, 0, 0],
            [0, -a[0][0], -a[1][0], -a[2][0], 0, 0, c12, c13],
            [0, -a[0][1], -a[1][1], -a[2][1], 0, -c12, 0, c23],
            [0, -a[0][2], -a[1][2], -a[2][2], 0, -c13, -c23, 0],
            [0, c23, -c13, c12, -tr, 0, 0, 0],
            [c23, bb[0][0], bb[0][1], bb[0][2], 0, a[0][0], a[0][1], a[0][2]],
            [-c13, bb[0][1], bb[1][1], bb[1][2], 0, a[1][0], a[1][1], a[1][2]],
            [c12, bb[0][2], bb[1][2], bb[2][2], 0, a[2][0], a[2][1], a[2][2]],
        ]
        mats.append([[to_fraction(v) for v in row] for row in rows])
    omega = Weight.from_coeffs([1, 1, 1], 3)
    unit = [Weight.unit(3, 0, i) for i in range(3)]
    weights = [omega] + [-u for u in unit] + [-omega] + unit
    return from_matrices(g, mats, [0, 0, 0, 0, 1, 1, 1, 1], weights, "∇(ω)[explicit]")
