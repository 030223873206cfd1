"""
创建日期：2026年02月12日
介绍：矩阵李超代数 gl(m|n)、osp(m|2n)、p(n)、q(n) 以及一维奇交换代数

基的顺序固定为：偶 Cartan、奇 Cartan（仅 q），然后按（奇偶性, 根）排序的根向量。
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from tools.weights import Gram, SuperDim, Weight, standard_gram
from utils.errors import RejectError, VerificationError
from utils.linalg import (
    ONE, ZERO, Matrix, SparseVector, SpanSolver, flatten_sparse, kernel, lincomb, matmul,
    mat_sub, to_dense, to_fraction, unit_matrix, zeros,
)

logger = logging.getLogger(__name__)

KINDS = ("gl", "osp", "p", "q", "abelian")


@dataclass(eq=False)
class BasisElement:
    matrix: Matrix
    parity: int
    root: Optional[Weight]  # None 表示 Cartan 元
    label: str


class LieSuperalgebra:
    """
    以矩阵实现的李超代数

    Attributes:
        kind: gl / osp / p / q / abelian / even（某个超代数的偶部分）
        basis: 齐次基
        v_parities: 定义表示中基向量的奇偶性
        v_weights: 定义表示中基向量的权重
        even_cartan: 偶 Cartan 基的下标，第 k 个对应权重的第 k 个坐标
        odd_cartan: 奇 Cartan 基的下标（只有 q(n) 非空）
        form: 权重上的双线性型（基本型才有）
    """

    def __init__(self, kind: str, m: int, n: int, basis: List[BasisElement],
                 v_parities: Sequence[int], v_weights: Sequence[Weight], split: Tuple[int, int],
                 form: Optional[Gram] = None, name: Optional[str] = None,
                 parent: Optional["LieSuperalgebra"] = None, parent_indices: Optional[List[int]] = None):
        self.kind = kind
        self.m = m
        self.n = n
        self.basis = basis
        self.v_parities = tuple(v_parities)
        self.v_weights = tuple(v_weights)
        self.split = split
        self.form = form
        self.name = name or f"{kind}({m}|{n})"
        self.parent = parent
        self.parent_indices = parent_indices
        self.even_cartan = [i for i, b in enumerate(basis) if b.root is None and b.parity == 0]
        self.odd_cartan = [i for i, b in enumerate(basis) if b.root is None and b.parity == 1]
        self._solver: Optional[SpanSolver] = None
        self._structure: Dict[Tuple[int, int], SparseVector] = {}
        self._even: Optional[LieSuperalgebra] = None

    def __repr__(self) -> str:
        return f"LieSuperalgebra({self.name}, dim={self.superdim})"

    @property
    def size(self) -> int:
        """定义表示的维数"""
        return len(self.v_parities)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def superdim(self) -> SuperDim:
        odd = sum(b.parity for b in self.basis)
        return SuperDim(len(self.basis) - odd, odd)

    @property
    def parities(self) -> List[int]:
        return [b.parity for b in self.basis]

    @property
    def cartan_indices(self) -> List[int]:
        return self.even_cartan + self.odd_cartan

    @property
    def root_indices(self) -> List[int]:
        return [i for i, b in enumerate(self.basis) if b.root is not None]

    @property
    def is_basic(self) -> bool:
        return self.form is not None

    @property
    def gram(self) -> Gram:
        """权重计算所用的型；p、q 没有不变型，偶部分计算使用欧氏型"""
        if self.form is not None:
            return self.form
        r, n = self.split
        return standard_gram(r + n, 0)

    def zero_weight(self) -> Weight:
        return Weight.zero(*self.split)

    def root_weights(self, parity: Optional[int] = None) -> List[Weight]:
        seen = []
        for b in self.basis:
            if b.root is not None and (parity is None or b.parity == parity) and b.root not in seen:
                seen.append(b.root)
        return seen

    # ---- 括号与坐标
    def bracket_matrices(self, x: Matrix, y: Matrix, px: int, py: int) -> Matrix:
        xy = matmul(x, y)
        yx = matmul(y, x)
        if px and py:
            return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(xy, yx)]
        return mat_sub(xy, yx)

    def coords(self, mat: Matrix) -> SparseVector:
        """矩阵在基下的坐标（稀疏）"""
        if self._solver is None:
            self._solver = SpanSolver([flatten_sparse(b.matrix) for b in self.basis])
        c = self._solver.coords_sparse(flatten_sparse(mat))
        if c is None:
            raise VerificationError(f"{self.name}: 矩阵不在代数的张成空间中")
        return c

    def structure(self, i: int, j: int) -> SparseVector:
        """[X_i, X_j] 的坐标，按需计算并缓存"""
        key = (i, j)
        if key not in self._structure:
            bi, bj = self.basis[i], self.basis[j]
            self._structure[key] = self.coords(self.bracket_matrices(bi.matrix, bj.matrix, bi.parity, bj.parity))
        return self._structure[key]

    def element_matrix(self, coords: Sequence[Fraction]) -> Matrix:
        return lincomb(coords, [b.matrix for b in self.basis], self.size)

    def element_parity(self, coords: Sequence[Fraction]) -> int:
        parities = {self.basis[i].parity for i, c in enumerate(coords) if c}
        if len(parities) > 1:
            raise RejectError("元素不是齐次的")
        return parities.pop() if parities else 0

    # ---- 偶部分
    def even_subalgebra(self) -> "LieSuperalgebra":
        if self._even is None:
            idx = [i for i, b in enumerate(self.basis) if b.parity == 0]
            self._even = LieSuperalgebra(
                "even", self.m, self.n, [self.basis[i] for i in idx], self.v_parities, self.v_weights,
                self.split, form=self.form, name=f"{self.name}_0", parent=self, parent_indices=idx,
            )
        return self._even

    def describe(self) -> Dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "name": self.name,
            "superdim": str(self.superdim),
            "roots": [
                {"root": b.root.format(), "parity": b.parity, "label": b.label}
                for b in self.basis if b.root is not None
            ],
        }


def bracket(g: LieSuperalgebra, x: Sequence, y: Sequence) -> List[Fraction]:
    """
    超交换子 [x, y] = xy − (−1)^{|x||y|} yx，输入输出都是基坐标

    Raises:
        RejectError: 输入不是齐次元素
    """
    x = [to_fraction(c) for c in x]
    y = [to_fraction(c) for c in y]
    if len(x) != g.dim or len(y) != g.dim:
        raise RejectError("坐标长度与代数维数不一致")
    px, py = g.element_parity(x), g.element_parity(y)
    out = [ZERO] * g.dim
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            for k, c in g.structure(i, j).items():
                out[k] += a * b * c
    logger.debug("%s: bracket parity %d,%d", g.name, px, py)
    return out


def even_subalgebra(g: LieSuperalgebra) -> LieSuperalgebra:
    return g.even_subalgebra()


# ---------------------------------------------------------------- 构造


def _sorted_basis(cartan: List[BasisElement], roots: List[BasisElement]) -> List[BasisElement]:
    even_cartan = [b for b in cartan if b.parity == 0]
    odd_cartan = [b for b in cartan if b.parity == 1]
    roots = sorted(roots, key=lambda b: (b.parity, tuple(-c for c in b.root.coeffs), b.label))
    return even_cartan + odd_cartan + roots


def _gl(m: int, n: int) -> LieSuperalgebra:
    size = m + n
    par = [0] * m + [1] * n
    weights = [Weight.unit(m, n, a) for a in range(size)]
    cartan = [BasisElement(unit_matrix(size, a, a), 0, None, f"H{a + 1}") for a in range(size)]
    roots = []
    for a in range(size):
        for b in range(size):
            if a != b:
                roots.append(BasisElement(unit_matrix(size, a, b), par[a] ^ par[b], weights[a] - weights[b], f"E{a + 1}{b + 1}"))
    return LieSuperalgebra("gl", m, n, _sorted_basis(cartan, roots), par, weights, (m, n),
                           form=standard_gram(m, n), name=f"gl({m}|{n})")


def _osp_partner(m: int, n: int, a: int) -> Tuple[int, Fraction]:
    """Gram 矩阵第 a 行唯一非零元的位置和值"""
    if a < m:
        return m - 1 - a, ONE
    i = a - m
    return m + 2 * n - 1 - i, (ONE if i < n else -ONE)


def osp_gram_matrix(m: int, n: int) -> Matrix:
    size = m + 2 * n
    g = zeros(size, size)
    for a in range(size):
        b, value = _osp_partner(m, n, a)
        g[a][b] = value
    return g


def _primitive(vec: List[Fraction]) -> List[Fraction]:
    den = lcm(*(x.denominator for x in vec if x)) if any(vec) else 1
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def _osp(m: int, n: int) -> LieSuperalgebra:
    size = m + 2 * n
    r = m // 2
    par = [0] * m + [1] * (2 * n)
    weights = []
    for a in range(m):
        if a < r:
            weights.append(Weight.unit(r, n, a))
        elif m % 2 == 1 and a == r:
            weights.append(Weight.zero(r, n))
        else:
            weights.append(Weight.unit(r, n, m - 1 - a, -1))
    for b in range(2 * n):
        if b < n:
            weights.append(Weight.unit(r, n, r + b))
        else:
            weights.append(Weight.unit(r, n, r + 2 * n - 1 - b, -1))

    cartan = []
    for k in range(r):
        h = unit_matrix(size, k, k)
        h[m - 1 - k][m - 1 - k] = -ONE
        cartan.append(BasisElement(h, 0, None, f"Hε{k + 1}"))
    for j in range(n):
        h = unit_matrix(size, m + j, m + j)
        h[m + 2 * n - 1 - j][m + 2 * n - 1 - j] = -ONE
        cartan.append(BasisElement(h, 0, None, f"Hδ{j + 1}"))

    groups: Dict[Tuple[Weight, int], List[Tuple[int, int]]] = {}
    for a in range(size):
        for b in range(size):
            w = weights[a] - weights[b]
            if w.is_zero():
                continue
            groups.setdefault((w, par[a] ^ par[b]), []).append((a, b))

    roots = []
    for (w, p), entries in groups.items():
        # X^T G + (−1)^{p·|u|} G X = 0，每个未知元只出现在两行里
        rows: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for e, (a, b) in enumerate(entries):
            u, g_au = _osp_partner(m, n, a)
            g_ua = osp_gram_matrix_entry(m, n, u, a)
            row = rows.setdefault((b, u), {})
            row[e] = row.get(e, ZERO) + g_au
            sign = -ONE if (p and par[u]) else ONE
            row = rows.setdefault((u, b), {})
            row[e] = row.get(e, ZERO) + sign * g_ua
        system = [to_dense(row, len(entries)) for row in rows.values() if any(row.values())]
        for vec in kernel(system, len(entries)):
            vec = _primitive(vec)
            mat = zeros(size, size)
            for c, (a, b) in zip(vec, entries):
                mat[a][b] = c
            roots.append(BasisElement(mat, p, w, f"X[{w.format()}]"))
    return LieSuperalgebra("osp", m, n, _sorted_basis(cartan, roots), par, weights, (r, n),
                           form=standard_gram(r, n), name=f"osp({m}|{2 * n})")


def osp_gram_matrix_entry(m: int, n: int, u: int, a: int) -> Fraction:
    b, value = _osp_partner(m, n, u)
    return value if b == a else ZERO


def _p(n: int) -> LieSuperalgebra:
    size = 2 * n
    par = [0] * n + [1] * n
    weights = [Weight.unit(n, 0, i) for i in range(n)] + [Weight.unit(n, 0, i, -1) for i in range(n)]
    eps = [Weight.unit(n, 0, i) for i in range(n)]
    cartan = []
    for i in range(n):
        h = unit_matrix(size, i, i)
        h[n + i][n + i] = -ONE
        cartan.append(BasisElement(h, 0, None, f"H{i + 1}"))
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                x = unit_matrix(size, i, j)
                x[n + j][n + i] = -ONE
                roots.append(BasisElement(x, 0, eps[i] - eps[j], f"A{i + 1}{j + 1}"))
    for i in range(n):
        for j in range(i, n):
            x = unit_matrix(size, i, n + j)
            if i == j:
                roots.append(BasisElement(x, 1, eps[i] + eps[i], f"B{i + 1}{i + 1}"))
            else:
                x[j][n + i] = ONE
                roots.append(BasisElement(x, 1, eps[i] + eps[j], f"B{i + 1}{j + 1}"))
    for i in range(n):
        for j in range(i + 1, n):
            x = unit_matrix(size, n + i, j)
            x[n + j][i] = -ONE
            roots.append(BasisElement(x, 1, -(eps[i] + eps[j]), f"C{i + 1}{j + 1}"))
    return LieSuperalgebra("p", n, n, _sorted_basis(cartan, roots), par, weights, (n, 0), name=f"p({n})")


def _q(n: int) -> LieSuperalgebra:
    size = 2 * n
    par = [0] * n + [1] * n
    eps = [Weight.unit(n, 0, i) for i in range(n)]
    weights = eps + eps

    def even(i, j):
        x = unit_matrix(size, i, j)
        x[n + i][n + j] = ONE
        return x

    def odd(i, j):
        x = unit_matrix(size, i, n + j)
        x[n + i][j] = ONE
        return x

    cartan = [BasisElement(even(i, i), 0, None, f"H{i + 1}") for i in range(n)]
    cartan += [BasisElement(odd(i, i), 1, None, f"H'{i + 1}") for i in range(n)]
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                roots.append(BasisElement(even(i, j), 0, eps[i] - eps[j], f"A{i + 1}{j + 1}"))
                roots.append(BasisElement(odd(i, j), 1, eps[i] - eps[j], f"B{i + 1}{j + 1}"))
    return LieSuperalgebra("q", n, n, _sorted_basis(cartan, roots), par, weights, (n, 0), name=f"q({n})")


def _abelian() -> LieSuperalgebra:
    x = unit_matrix(2, 1, 0)
    basis = [BasisElement(x, 1, Weight(), "X")]
    return LieSuperalgebra("abelian", 0, 1, basis, (0, 1), (Weight(), Weight()), (0, 0), name="C^{0|1}")


@lru_cache(maxsize=None)
def build_algebra(kind: str, m: int = 0, n: int = 0) -> LieSuperalgebra:
    """
    构造矩阵李超代数（按参数缓存，同一参数返回同一个对象）

    Args:
        kind: gl / osp / p / q / abelian
        m, n: gl(m|n) 和 osp(m|2n) 的参数；p、q 只取一个秩，可以写在 m 或 n 上

    Returns:
        LieSuperalgebra: 代数

    Raises:
        RejectError: 未知类型或参数使代数为零
    """
    if kind not in KINDS:
        raise RejectError(f"未知的代数类型: {kind}")
    if m < 0 or n < 0:
        raise RejectError("参数必须非负")
    if kind == "gl":
        if m + n == 0:
            raise RejectError("gl(0|0) 是零代数")
        g = _gl(m, n)
    elif kind == "osp":
        if n == 0 and m < 2:
            raise RejectError(f"osp({m}|0) 是零代数")
        g = _osp(m, n)
    elif kind in ("p", "q"):
        if m and n and m != n:
            raise RejectError(f"{kind}(n) 只有一个秩参数")
        rank = n or m
        if rank < 1:
            raise RejectError(f"{kind}(0) 是零代数")
        g = _p(rank) if kind == "p" else _q(rank)
    else:
        g = _abelian()
    logger.debug("构造 %s，超维数 %s", g.name, g.superdim)
    return g


# ---------------------------------------------------------------- 结构检查


def check_closure(g: LieSuperalgebra) -> bool:
    """所有基元的超交换子都在张成空间中（坐标求解失败会抛出 VerificationError）"""
    for i in range(g.dim):
        for j in range(g.dim):
            g.structure(i, j)
    return True


def check_jacobi(g: LieSuperalgebra) -> Optional[Tuple[int, int, int]]:
    """超 Jacobi 恒等式，返回第一个失败的三元组，全部通过返回 None"""
    par = g.parities
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                # [x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]]
                lhs = _bracket_sparse(g, {i: ONE}, g.structure(j, k))
                rhs = _bracket_sparse(g, g.structure(i, j), {k: ONE})
                extra = _bracket_sparse(g, {j: ONE}, g.structure(i, k))
                sign = -ONE if par[i] and par[j] else ONE
                for key, value in extra.items():
                    rhs[key] = rhs.get(key, ZERO) + sign * value
                if any(lhs.get(key, ZERO) != rhs.get(key, ZERO) for key in set(lhs) | set(rhs)):
                    return i, j, k
    return None


def _bracket_sparse(g: LieSuperalgebra, x: SparseVector, y: SparseVector) -> SparseVector:
    out: SparseVector = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in g.structure(i, j).items():
                out[k] = out.get(k, ZERO) + a * b * c
    return {k: v for k, v in out.items() if v}


def check_root_labels(g: LieSuperalgebra) -> bool:
    """[H_k, X_α] = α_k X_α 对所有偶 Cartan 元和根向量成立"""
    for pos, h in enumerate(g.even_cartan):
        for idx in g.root_indices:
            expected = g.basis[idx].root.coeffs[pos]
            got = g.structure(h, idx)
            want = {idx: expected} if expected else {}
            if got != want:
                return False
    return True


def preserves_osp_form(g: LieSuperalgebra) -> bool:
    """osp 的每个基元都满足 X^T G + (−1)^{|X||u|} G X = 0"""
    if g.kind != "osp":
        return True
    gram = osp_gram_matrix(g.m, g.n)
    for b in g.basis:
        xtg = matmul([list(col) for col in zip(*b.matrix)], gram)
        gx = matmul(gram, b.matrix)
        for u in range(g.size):
            sign = -ONE if (b.parity and g.v_parities[u]) else ONE
            if any(xtg[u][v] + sign * gx[u][v] for v in range(g.size)):
                return False
    return True

