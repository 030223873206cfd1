"""
创建日期：2026年02月12日
介绍：精确有理数线性代数内核

所有标量都是 fractions.Fraction，矩阵是按行存储的稠密列表。
多项式矩阵的元素是 sympy 的 PolyElement（系数域 QQ）。
"""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from .config import RankSettings, get_settings
from .errors import RejectError, VerificationError

logger = logging.getLogger(__name__)

Vector = List[Fraction]
Matrix = List[List[Fraction]]
SparseVector = Dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(x) -> Fraction:
    """把 int / str / sympy 或 gmpy 的有理数转换成 Fraction，拒绝浮点数"""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise RejectError(f"不接受浮点数: {x!r}")
    if hasattr(x, "p") and hasattr(x, "q"):
        return Fraction(int(x.p), int(x.q))
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Fraction(int(x.numerator), int(x.denominator))
    raise RejectError(f"无法转换为有理数: {x!r}")


def to_domain(x: Fraction):
    """Fraction -> QQ 元素"""
    x = to_fraction(x)
    return QQ(x.numerator, x.denominator)


def matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[ZERO] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def unit_matrix(n: int, i: int, j: int, value=ONE) -> Matrix:
    m = zeros(n, n)
    m[i][j] = to_fraction(value)
    return m


def transpose(m: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def _sparse_rows(m: Matrix) -> List[List[Tuple[int, Fraction]]]:
    return [[(j, x) for j, x in enumerate(row) if x] for row in m]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    b_rows = _sparse_rows(b)
    out = []
    for row in a:
        acc = [ZERO] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in b_rows[k]:
                    acc[j] += x * y
        out.append(acc)
    return out


def matvec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    out = []
    for row in m:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return out


def vecmat(v: Sequence[Fraction], m: Matrix) -> Vector:
    """行向量乘矩阵"""
    ncols = len(m[0]) if m else 0
    out = [ZERO] * ncols
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(m: Matrix, c) -> Matrix:
    c = to_fraction(c)
    return [[c * x for x in row] for row in m]


def lincomb(coeffs: Sequence[Fraction], mats: Sequence[Matrix], nrows: int, ncols: Optional[int] = None) -> Matrix:
    """Σ c_i M_i，跳过零系数"""
    out = zeros(nrows, nrows if ncols is None else ncols)
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, row in enumerate(m):
            orow = out[i]
            for j, x in enumerate(row):
                if x:
                    orow[j] += c * x
    return out


def is_zero_matrix(m: Matrix) -> bool:
    return not any(any(row) for row in m)


def flatten_sparse(m: Matrix) -> SparseVector:
    n = len(m[0]) if m else 0
    return {i * n + j: x for i, row in enumerate(m) for j, x in enumerate(row) if x}


def to_sparse(v) -> SparseVector:
    if isinstance(v, dict):
        return {k: to_fraction(x) for k, x in v.items() if x}
    return {i: to_fraction(x) for i, x in enumerate(v) if x}


def to_dense(v: SparseVector, dim: int) -> Vector:
    out = [ZERO] * dim
    for k, x in v.items():
        out[k] = x
    return out


def _axpy(target: SparseVector, c: Fraction, src: SparseVector) -> None:
    """target += c * src（原地，删除零项）"""
    for j, y in src.items():
        value = target.get(j, ZERO) + c * y
        if value:
            target[j] = value
        else:
            target.pop(j, None)


def _integer_rows(m: Matrix) -> List[List[int]]:
    rows = []
    for row in m:
        fr = [to_fraction(x) for x in row]
        if not any(fr):
            continue
        den = math.lcm(*(x.denominator for x in fr))
        rows.append([int(x * den) for x in fr])
    return rows


def rank(m: Matrix) -> int:
    """
    有理矩阵的秩（分数自由 Bareiss 消元，每行先乘上分母的最小公倍数化成整数）

    Args:
        m: 有理矩阵

    Returns:
        int: 秩
    """
    rows = _integer_rows(m)
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pc = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            rows[i] = row[:c] + [(pc * row[j] - a * prow[j]) // prev for j in range(c, ncols)]
        prev = pc
        r += 1
        if r == nrows:
            break
    return r


def rref(m: Matrix, ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """简化行阶梯形，返回 (非零行, 主元列)"""
    a = [[to_fraction(x) for x in row] for row in m]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        prow = [x * inv for x in a[r]]
        a[r] = prow
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel(m: Matrix, ncols: Optional[int] = None) -> List[Vector]:
    """
    零空间的一组基 {x : m·x = 0}

    Args:
        m: 有理矩阵
        ncols: 列数（m 没有行时必须给出）

    Returns:
        List[Vector]: 基向量，个数 = 列数 - 秩
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    reduced, pivots = rref(m, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class Subspace:
    """
    稀疏的简化行阶梯形子空间。每个主元列只在它所属的那一行非零，
    所以约化一个向量时只需要看它原本支撑集里的主元。
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: Dict[int, SparseVector] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, w: SparseVector) -> SparseVector:
        w = dict(w)
        for p in [k for k in w if k in self._rows]:
            c = w.get(p)
            if c:
                _axpy(w, -c, self._rows[p])
        return w

    def reduce(self, v) -> Vector:
        return to_dense(self._reduce(to_sparse(v)), self.dim)

    def reduce_sparse(self, v) -> SparseVector:
        return self._reduce(to_sparse(v))

    def add(self, v) -> bool:
        """加入一个向量，返回它是否扩大了子空间"""
        w = self._reduce(to_sparse(v))
        if not w:
            return False
        p = min(w)
        inv = ONE / w[p]
        w = {j: x * inv for j, x in w.items()}
        for row in self._rows.values():
            c = row.get(p)
            if c:
                _axpy(row, -c, w)
        self._rows[p] = w
        return True

    def contains(self, v) -> bool:
        return not self._reduce(to_sparse(v))

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def sparse_basis(self) -> List[SparseVector]:
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def basis(self) -> List[Vector]:
        return [to_dense(self._rows[p], self.dim) for p in sorted(self._rows)]


class SpanSolver:
    """把向量写成一组线性无关向量的坐标"""

    def __init__(self, basis: Sequence):
        self.size = len(basis)
        self._rows: Dict[int, Tuple[SparseVector, SparseVector]] = {}
        for i, b in enumerate(basis):
            w, combo = self._reduce(to_sparse(b), {i: ONE})
            if not w:
                raise RejectError("向量组线性相关，无法作为坐标基")
            p = min(w)
            inv = ONE / w[p]
            w = {j: x * inv for j, x in w.items()}
            combo = {j: x * inv for j, x in combo.items()}
            for row, cmb in self._rows.values():
                c = row.get(p)
                if c:
                    _axpy(row, -c, w)
                    _axpy(cmb, -c, combo)
            self._rows[p] = (w, combo)

    def _reduce(self, w: SparseVector, combo: SparseVector) -> Tuple[SparseVector, SparseVector]:
        w = dict(w)
        combo = dict(combo)
        for p in [k for k in w if k in self._rows]:
            c = w.get(p)
            if c:
                row, cmb = self._rows[p]
                _axpy(w, -c, row)
                _axpy(combo, -c, cmb)
        return w, combo

    def coords_sparse(self, v) -> Optional[SparseVector]:
        w, combo = self._reduce(to_sparse(v), {})
        if w:
            return None
        return {j: -x for j, x in combo.items()}

    def coords(self, v) -> Optional[Vector]:
        c = self.coords_sparse(v)
        return None if c is None else to_dense(c, self.size)


def span_closure(generators: Sequence[Matrix], size: Optional[int] = None) -> List[Matrix]:
    """
    生成元张成的结合代数（含单位元）的一组线性基

    Args:
        generators: 同阶方阵
        size: 矩阵阶数，没有生成元时必须给出

    Returns:
        List[Matrix]: 基，第一个元素是单位矩阵
    """
    if size is None:
        if not generators:
            raise RejectError("没有生成元时需要给出矩阵阶数")
        size = len(generators[0])
    gens = [matrix(g) for g in generators]
    for g in gens:
        if len(g) != size or any(len(row) != size for row in g):
            raise RejectError("生成元必须是同阶方阵")
    gens = [g for g in gens if not is_zero_matrix(g)]
    ident = identity(size)
    space = Subspace(size * size)
    space.add(flatten_sparse(ident))
    basis = [ident]
    frontier = [ident]
    while frontier:
        grown = []
        for a in frontier:
            for g in gens:
                prod = matmul(g, a)
                if space.add(flatten_sparse(prod)):
                    basis.append(prod)
                    grown.append(prod)
        frontier = grown
    logger.debug("张成闭包维数 %d（矩阵阶 %d）", len(basis), size)
    return basis


def _trace_pairing(a: SparseVector, bt: SparseVector) -> Fraction:
    if len(a) > len(bt):
        a, bt = bt, a
    return sum((x * bt[k] for k, x in a.items() if k in bt), ZERO)


def dickson_radical(algebra_basis: Sequence[Matrix], check_closure: bool = True) -> List[Matrix]:
    """
    矩阵代数的 Jacobson 根（特征 0 下等于迹形式 tr(ab) 的根）

    Args:
        algebra_basis: 乘法封闭的矩阵代数的一组基
        check_closure: 是否验证乘法封闭

    Returns:
        List[Matrix]: 根的一组基，空列表表示半单

    Raises:
        RejectError: 输入不是乘法封闭的
    """
    basis = [matrix(b) for b in algebra_basis]
    if not basis:
        return []
    n = len(basis[0])
    flats = [flatten_sparse(b) for b in basis]
    if check_closure:
        space = Subspace(n * n)
        for f in flats:
            space.add(f)
        for a in basis:
            for b in basis:
                if not space.contains(flatten_sparse(matmul(a, b))):
                    raise RejectError("输入的张成空间不是乘法封闭的")
    flats_t = [flatten_sparse(transpose(b)) for b in basis]
    k = len(basis)
    gram = zeros(k, k)
    for i in range(k):
        for j in range(i, k):
            value = _trace_pairing(flats[i], flats_t[j])
            gram[i][j] = value
            gram[j][i] = value
    return [lincomb(x, basis, n) for x in kernel(gram, k)]


# ---------------------------------------------------------------- 多项式矩阵

PolyMatrix = List[List]


@dataclass
class GenericRank:
    """一般秩及其见证特化"""
    rank: int
    witness: Dict[str, Fraction] = field(default_factory=dict)
    exact: bool = True
    method: str = "sample"


def poly_ring(names: Sequence[str]):
    """返回 (环, 生成元列表)"""
    if not names:
        raise RejectError("多项式环至少需要一个未定元")
    R, *gens = ring(",".join(names), QQ)
    return R, gens


def _domain_to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def evaluate_poly(p, point: Sequence[Fraction]) -> Fraction:
    if not isinstance(p, PolyElement):
        return to_fraction(p)
    total = ZERO
    for monom, coeff in p.terms():
        term = _domain_to_fraction(coeff)
        for x, e in zip(point, monom):
            if e:
                term *= x ** e
        total += term
    return total


def evaluate_poly_matrix(pm: PolyMatrix, point: Sequence[Fraction]) -> Matrix:
    return [[evaluate_poly(p, point) for p in row] for row in pm]


def _find_ring(pm: PolyMatrix):
    for row in pm:
        for p in row:
            if isinstance(p, PolyElement):
                return p.ring
    return None


def poly_rank(pm: PolyMatrix) -> int:
    """多项式矩阵在分式域上的秩（分数自由消元，主元取非零多项式）"""
    R = _find_ring(pm)
    if R is None:
        return rank(pm)

    def lift(p):
        if isinstance(p, PolyElement):
            return p
        return R.ground_new(to_domain(p))

    rows = [[lift(p) for p in row] for row in pm]
    rows = [row for row in rows if any(row)]
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    r, prev = 0, R.one
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pc = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            rows[i] = row[:c] + [(pc * row[j] - a * prow[j]).exquo(prev) for j in range(c, ncols)]
        prev = pc
        r += 1
        if r == nrows:
            break
    return r


def sample_points(nvars: int, settings: RankSettings, extra: int = 0, spread: int = 1) -> Iterator[List[Fraction]]:
    """依次给出全零、全一以及带种子的随机整数点"""
    yield [ZERO] * nvars
    yield [ONE] * nvars
    rng = random.Random(settings.seed)
    low, high = settings.sample_low * spread, settings.sample_high * spread
    for _ in range(settings.sample_count + extra):
        yield [Fraction(rng.randint(low, high)) for _ in range(nvars)]


def generic_rank(pm: PolyMatrix, settings: Optional[RankSettings] = None) -> GenericRank:
    """
    多项式矩阵在所有有理特化下的最大秩

    先采样；采样达到满秩就是精确结果。否则在规模允许时做符号消元，
    并继续采样直到找到达到符号秩的见证点；规模过大时返回带概率标记的采样最大值。

    Args:
        pm: 元素为同一个 sympy 多项式环中的多项式（也可以是常数）
        settings: 采样与符号消元的阈值

    Returns:
        GenericRank: 秩、见证特化、是否精确、计算方式
    """
    s = settings or get_settings().rank
    nrows = len(pm)
    ncols = len(pm[0]) if pm else 0
    full = min(nrows, ncols)
    R = _find_ring(pm)
    if R is None:
        return GenericRank(rank(pm), {}, True, "constant")
    names = [str(x) for x in R.symbols]
    best, witness = -1, None
    for point in sample_points(len(names), s):
        r = rank(evaluate_poly_matrix(pm, point))
        if r > best:
            best, witness = r, point
        if best == full:
            return GenericRank(best, dict(zip(names, witness)), True, "sample")
    if max(nrows, ncols) <= s.symbolic_max_size and len(names) <= s.symbolic_max_vars:
        symbolic = poly_rank(pm)
        if symbolic > best:
            for point in sample_points(len(names), s, extra=200, spread=100):
                if rank(evaluate_poly_matrix(pm, point)) == symbolic:
                    best, witness = symbolic, point
                    break
            else:
                raise VerificationError(f"符号秩 {symbolic} 没有找到见证特化")
        return GenericRank(symbolic, dict(zip(names, witness)), True, "symbolic")
    logger.warning("矩阵 %dx%d 含 %d 个未定元，超出符号消元阈值，一般秩只是采样下界", nrows, ncols, len(names))
    return GenericRank(best, dict(zip(names, witness)), False, "sampled")
