"""
创建日期：2026年02月14日
介绍：表示及其基本构造

表示保存为稀疏列：ops[k][j] 是第 k 个基元作用在第 j 个基向量上的像。
基总是权基，每个基向量带奇偶性和权重。
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tools.borels import BorelSubalgebra, character_multiple
from tools.superalgebras import LieSuperalgebra, build_algebra
from tools.weights import SuperDim, Weight
from utils.config import get_settings
from utils.errors import RejectError
from utils.linalg import (
    ONE, ZERO, Matrix, SparseVector, Subspace, dickson_radical, kernel, span_closure, to_dense,
    to_fraction, to_sparse,
)

logger = logging.getLogger(__name__)

Columns = List[SparseVector]
Block = Tuple[Weight, int]


@dataclass(eq=False)
class Representation:
    """
    李超代数的有限维表示

    Attributes:
        algebra: 作用的代数
        ops: 每个基元一个算子，按列稀疏存储
        parities: 基向量的奇偶性
        weights: 基向量的权重
        label: 来源说明
        embedding: 作为子模时，基向量在母模中的坐标
    """
    algebra: LieSuperalgebra
    ops: List[Columns]
    parities: Tuple[int, ...]
    weights: Tuple[Weight, ...]
    label: str = ""
    embedding: Optional[List[SparseVector]] = None
    _cache: Dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.parities = tuple(self.parities)
        self.weights = tuple(self.weights)
        if len(self.ops) != self.algebra.dim:
            raise RejectError(f"算子个数 {len(self.ops)} 与 {self.algebra.name} 的维数 {self.algebra.dim} 不一致")
        if len(self.parities) != len(self.weights):
            raise RejectError("奇偶性与权重的个数不一致")

    def __repr__(self) -> str:
        return f"Representation({self.label or '?'}, {self.algebra.name}, {self.superdim})"

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def superdim(self) -> SuperDim:
        odd = sum(self.parities)
        return SuperDim(self.dim - odd, odd)

    def act(self, k: int, v: SparseVector) -> SparseVector:
        out: SparseVector = {}
        cols = self.ops[k]
        for j, c in v.items():
            for i, x in cols[j].items():
                value = out.get(i, ZERO) + c * x
                if value:
                    out[i] = value
                else:
                    out.pop(i, None)
        return out

    def act_element(self, coords: Sequence, v: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for k, c in enumerate(coords):
            c = to_fraction(c)
            if not c:
                continue
            for i, x in self.act(k, v).items():
                out[i] = out.get(i, ZERO) + c * x
        return {i: x for i, x in out.items() if x}

    def matrix(self, k: int) -> Matrix:
        """第 k 个算子的稠密矩阵"""
        key = ("dense", k)
        if key not in self._cache:
            m = [[ZERO] * self.dim for _ in range(self.dim)]
            for j, col in enumerate(self.ops[k]):
                for i, x in col.items():
                    m[i][j] = x
            self._cache[key] = m
        return self._cache[key]

    def matrices(self) -> List[Matrix]:
        return [self.matrix(k) for k in range(len(self.ops))]

    def blocks(self) -> Dict[Block, List[int]]:
        """(权, 奇偶性) → 基向量下标，按权的排序键排列"""
        if "blocks" not in self._cache:
            out: Dict[Block, List[int]] = {}
            for i, (w, p) in enumerate(zip(self.weights, self.parities)):
                out.setdefault((w, p), []).append(i)
            self._cache["blocks"] = dict(sorted(out.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1])))
        return self._cache["blocks"]

    def weight_multiplicities(self) -> List[Tuple[Weight, int, int]]:
        table: Dict[Weight, List[int]] = {}
        for w, p in zip(self.weights, self.parities):
            table.setdefault(w, [0, 0])[p] += 1
        return [(w, e, o) for w, (e, o) in sorted(table.items(), key=lambda kv: kv[0].sort_key())]

    def block_of(self, v: SparseVector) -> Optional[Block]:
        keys = {(self.weights[i], self.parities[i]) for i in v}
        if len(keys) != 1:
            return None
        return keys.pop()

    def split_blocks(self, v: SparseVector) -> Dict[Block, SparseVector]:
        out: Dict[Block, SparseVector] = {}
        for i, x in v.items():
            if x:
                out.setdefault((self.weights[i], self.parities[i]), {})[i] = x
        return out

    def to_json(self) -> Dict:
        return {
            "algebra": self.algebra.name,
            "superdim": str(self.superdim),
            "provenance": self.label,
            "weights": [{"weight": w.to_json(), "even_mult": e, "odd_mult": o}
                        for w, e, o in self.weight_multiplicities()],
        }


def from_matrices(g: LieSuperalgebra, mats: Sequence[Matrix], parities: Sequence[int],
                  weights: Sequence[Weight], label: str = "") -> Representation:
    size = len(parities)
    ops = []
    for m in mats:
        cols: Columns = [{} for _ in range(size)]
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                x = to_fraction(x)
                if x:
                    cols[j][i] = x
        ops.append(cols)
    return Representation(g, ops, tuple(parities), tuple(weights), label)


# ---------------------------------------------------------------- 校验


@dataclass
class VerificationResult:
    ok: bool
    failure: Optional[Tuple] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def compose_columns(a: Columns, b: Columns) -> Columns:
    """列形式的矩阵乘积 a·b"""
    out = []
    for col in b:
        acc: SparseVector = {}
        for k, y in col.items():
            for i, x in a[k].items():
                acc[i] = acc.get(i, ZERO) + x * y
        out.append({i: x for i, x in acc.items() if x})
    return out


def verify_representation(rep: Representation) -> VerificationResult:
    """
    精确校验：奇偶分块、根向量的权平移、Cartan 的对角取值，以及所有基元对上的
    ρ([X,Y]) = ρ(X)ρ(Y) − (−1)^{|X||Y|}ρ(Y)ρ(X)

    Returns:
        VerificationResult: 失败时带第一个出错的 (i, j, 说明)
    """
    g = rep.algebra
    zero = g.zero_weight()
    cartan_pos = {k: pos for pos, k in enumerate(g.even_cartan)}
    for k, b in enumerate(g.basis):
        shift = b.root if b.root is not None else zero
        for j, col in enumerate(rep.ops[k]):
            for i, x in col.items():
                if rep.parities[i] ^ rep.parities[j] != b.parity:
                    return VerificationResult(False, (k, j, i), f"{b.label} 不保持奇偶分块")
                if rep.weights[i] != rep.weights[j] + shift:
                    return VerificationResult(False, (k, j, i), f"{b.label} 的权平移不对")
            if k in cartan_pos:
                expected = rep.weights[j].coeffs[cartan_pos[k]]
                if col.get(j, ZERO) != expected or any(i != j for i in col):
                    return VerificationResult(False, (k, j, j), f"{b.label} 在第 {j} 个基向量上不是权值 {expected}")
    par = g.parities
    for i in range(g.dim):
        for j in range(i, g.dim):
            xy = compose_columns(rep.ops[i], rep.ops[j])
            yx = compose_columns(rep.ops[j], rep.ops[i])
            sign = ONE if par[i] and par[j] else -ONE
            coeffs = g.structure(i, j)
            for col in range(rep.dim):
                lhs = dict(xy[col])
                for r, x in yx[col].items():
                    lhs[r] = lhs.get(r, ZERO) + sign * x
                rhs: SparseVector = {}
                for k, c in coeffs.items():
                    for r, x in rep.ops[k][col].items():
                        rhs[r] = rhs.get(r, ZERO) + c * x
                if any(lhs.get(r, ZERO) != rhs.get(r, ZERO) for r in set(lhs) | set(rhs)):
                    return VerificationResult(False, (i, j, col),
                                              f"[{g.basis[i].label}, {g.basis[j].label}] 在第 {col} 个基向量上不满足")
    return VerificationResult(True)


# ---------------------------------------------------------------- 基本构造


def standard_module(g: LieSuperalgebra) -> Representation:
    """定义表示"""
    rep = from_matrices(g, [b.matrix for b in g.basis], g.v_parities, g.v_weights, f"std[{g.name}]")
    return rep


def trivial_module(g: LieSuperalgebra) -> Representation:
    return Representation(g, [[{}] for _ in g.basis], (0,), (g.zero_weight(),), f"triv[{g.name}]")


def adjoint_module(g: LieSuperalgebra) -> Representation:
    ops = [[dict(g.structure(i, j)) for j in range(g.dim)] for i in range(g.dim)]
    zero = g.zero_weight()
    weights = [b.root if b.root is not None else zero for b in g.basis]
    return Representation(g, ops, g.parities, weights, f"ad[{g.name}]")


def u11_module() -> Representation:
    """一维奇交换代数上 X 作用为 [[0,0],[1,0]] 的 (1|1) 维模"""
    rep = standard_module(build_algebra("abelian"))
    rep.label = "U11"
    return rep


def parity_shift(rep: Representation) -> Representation:
    return Representation(rep.algebra, rep.ops, tuple(1 - p for p in rep.parities), rep.weights, f"Π{rep.label}")


def dual(rep: Representation) -> Representation:
    """ρ*(X)_{ab} = −(−1)^{|X| p_b} ρ(X)_{ba}"""
    g = rep.algebra
    ops = []
    for k, b in enumerate(g.basis):
        cols: Columns = [{} for _ in range(rep.dim)]
        for j, col in enumerate(rep.ops[k]):
            for i, x in col.items():
                # ρ(X)_{ij} 转置到 (j, i)，列为 i
                sign = -ONE if (b.parity and rep.parities[i]) else ONE
                cols[i][j] = -sign * x
        ops.append(cols)
    return Representation(g, ops, rep.parities, tuple(-w for w in rep.weights), f"{rep.label}*")


def tensor(r1: Representation, r2: Representation) -> Representation:
    """X(e ⊗ f) = Xe ⊗ f + (−1)^{|X||e|} e ⊗ Xf，基按 (a, b) 字典序"""
    if r1.algebra is not r2.algebra:
        raise RejectError("张量积的两个因子必须是同一个代数的表示")
    g = r1.algebra
    d2 = r2.dim
    parities = [p1 ^ p2 for p1 in r1.parities for p2 in r2.parities]
    weights = [w1 + w2 for w1 in r1.weights for w2 in r2.weights]
    ops = []
    for k, b in enumerate(g.basis):
        cols: Columns = []
        for a in range(r1.dim):
            sign = -ONE if (b.parity and r1.parities[a]) else ONE
            for c in range(d2):
                col: SparseVector = {}
                for i, x in r1.ops[k][a].items():
                    col[i * d2 + c] = col.get(i * d2 + c, ZERO) + x
                for i, x in r2.ops[k][c].items():
                    col[a * d2 + i] = col.get(a * d2 + i, ZERO) + sign * x
                cols.append({i: x for i, x in col.items() if x})
        ops.append(cols)
    return Representation(g, ops, parities, weights, f"({r1.label}⊗{r2.label})")


def symmetric_monomials(parities: Sequence[int], d: int) -> List[Tuple[int, ...]]:
    """次数 d 的超对称单项式：下标非降，奇下标至多出现一次"""
    out = []
    for mono in itertools.combinations_with_replacement(range(len(parities)), d):
        if any(a == b and parities[a] for a, b in zip(mono, mono[1:])):
            continue
        out.append(mono)
    return out


def sort_monomial(word: Sequence[int], parities: Sequence[int]) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """把乱序的乘积排成非降序，返回 (Koszul 符号, 单项式)；奇元重复时为零"""
    sign = 1
    odd = [x for x in word if parities[x]]
    for i in range(len(odd)):
        for j in range(i + 1, len(odd)):
            if odd[i] > odd[j]:
                sign = -sign
            elif odd[i] == odd[j]:
                return 0, None
    return sign, tuple(sorted(word))


def sym_power(rep: Representation, d: int) -> Representation:
    """
    超对称幂 S^d V，算子按超导子作用在单项式上

    Args:
        rep: 表示
        d: 次数，d ≥ 0
    """
    if d < 0:
        raise RejectError("次数必须非负")
    g = rep.algebra
    par = rep.parities
    monos = symmetric_monomials(par, d)
    index = {m: i for i, m in enumerate(monos)}
    parities = [sum(par[x] for x in m) % 2 for m in monos]
    weights = []
    for m in monos:
        w = g.zero_weight()
        for x in m:
            w = w + rep.weights[x]
        weights.append(w)
    ops = []
    for k, b in enumerate(g.basis):
        cols: Columns = []
        for m in monos:
            col: SparseVector = {}
            prefix = 0
            for pos, x in enumerate(m):
                sign = -1 if (b.parity and prefix % 2) else 1
                for y, c in rep.ops[k][x].items():
                    word = m[:pos] + (y,) + m[pos + 1:]
                    s, target = sort_monomial(word, par)
                    if target is None:
                        continue
                    t = index[target]
                    col[t] = col.get(t, ZERO) + sign * s * c
                prefix += par[x]
            cols.append({i: x for i, x in col.items() if x})
        ops.append(cols)
    logger.debug("S^%d(%s) 维数 %d", d, rep.label, len(monos))
    return Representation(g, ops, parities, weights, f"S{d}({rep.label})")


def alt_power(rep: Representation, d: int) -> Representation:
    """Λ^d V = Π^d S^d(ΠV)"""
    out = sym_power(parity_shift(rep), d)
    if d % 2:
        out = parity_shift(out)
    out.label = f"Λ{d}({rep.label})"
    return out


def character_twist(rep: Representation, chi: Weight) -> Representation:
    """
    ρ ⊗ χ：偶 Cartan 的算子加上 χ 的取值，权重平移 χ

    Raises:
        RejectError: χ 不是代数的特征
    """
    g = rep.algebra
    character_multiple(g, chi)
    ops = [list(cols) for cols in rep.ops]
    for pos, k in enumerate(g.even_cartan):
        c = chi.coeffs[pos]
        if not c:
            continue
        new_cols = []
        for j, col in enumerate(ops[k]):
            col = dict(col)
            value = col.get(j, ZERO) + c
            if value:
                col[j] = value
            else:
                col.pop(j, None)
            new_cols.append(col)
        ops[k] = new_cols
    return Representation(g, ops, rep.parities, tuple(w + chi for w in rep.weights), f"{rep.label}⊗χ[{chi}]")


def restrict_even(rep: Representation, part: Optional[int] = None) -> Representation:
    """
    限制到偶部分 g₀；part 给出时只保留该奇偶性的子空间（偶算子保持它）
    """
    g = rep.algebra
    g0 = g.even_subalgebra()
    keep = [i for i in range(rep.dim) if part is None or rep.parities[i] == part]
    pos = {i: n for n, i in enumerate(keep)}
    ops = []
    for k in g0.parent_indices:
        ops.append([{pos[i]: x for i, x in rep.ops[k][j].items()} for j in keep])
    parities = [0 if part is not None else rep.parities[i] for i in keep]
    suffix = "" if part is None else f"_{part}"
    return Representation(g0, ops, parities, [rep.weights[i] for i in keep], f"Res{suffix}({rep.label})")


# ---------------------------------------------------------------- 子模与商模


def _closure(rep: Representation, vectors: Sequence[SparseVector]) -> Subspace:
    space = Subspace(rep.dim)
    queue: List[SparseVector] = []
    for v in vectors:
        for part in rep.split_blocks(to_sparse(v)).values():
            if space.add(part):
                queue.append(part)
    while queue:
        v = queue.pop()
        for k in range(len(rep.ops)):
            image = rep.act(k, v)
            for part in rep.split_blocks(image).values():
                if space.add(part):
                    queue.append(part)
    return space


def _restricted(rep: Representation, space: Subspace, label: str) -> Representation:
    basis = space.sparse_basis()
    pivots = space.pivots()
    pos = {p: n for n, p in enumerate(pivots)}
    ops = []
    for k in range(len(rep.ops)):
        cols = []
        for v in basis:
            image = rep.act(k, v)
            cols.append({pos[p]: image[p] for p in pivots if image.get(p)})
        ops.append(cols)
    parities = [rep.parities[p] for p in pivots]
    weights = [rep.weights[p] for p in pivots]
    sub = Representation(rep.algebra, ops, parities, weights, label, embedding=basis)
    return sub


def submodule_generated(rep: Representation, vectors: Sequence) -> Representation:
    """
    由向量（的齐次分量）生成的最小子模，embedding 给出它在母模中的基

    Args:
        rep: 表示
        vectors: 稀疏或稠密向量
    """
    space = _closure(rep, [to_sparse(v) for v in vectors])
    return _restricted(rep, space, f"⟨{len(vectors)}⟩⊂{rep.label}")


def subspace_of(rep: Representation, sub) -> Subspace:
    vectors = sub.embedding if isinstance(sub, Representation) else sub
    if vectors is None:
        raise RejectError("子模没有记录嵌入")
    space = Subspace(rep.dim)
    for v in vectors:
        space.add(to_sparse(v))
    return space


def quotient_module(rep: Representation, sub) -> Representation:
    """
    商模 V / W，基取 W 的简化行阶梯形中的非主元坐标

    Args:
        rep: 表示
        sub: 子模（带 embedding）或张成它的向量

    Raises:
        RejectError: W 不是算子稳定的
    """
    space = subspace_of(rep, sub)
    for v in space.sparse_basis():
        for k in range(len(rep.ops)):
            if space.reduce_sparse(rep.act(k, v)):
                raise RejectError("子空间不是子模，不能取商")
    pivots = set(space.pivots())
    keep = [i for i in range(rep.dim) if i not in pivots]
    pos = {i: n for n, i in enumerate(keep)}
    ops = []
    for k in range(len(rep.ops)):
        cols = []
        for j in keep:
            image = space.reduce_sparse(rep.ops[k][j])
            cols.append({pos[i]: x for i, x in image.items()})
        ops.append(cols)
    label = f"{rep.label}/{len(pivots)}"
    return Representation(rep.algebra, ops, [rep.parities[i] for i in keep], [rep.weights[i] for i in keep], label)


# ---------------------------------------------------------------- 奇异向量与 socle


def singular_vectors(rep: Representation, borel: BorelSubalgebra) -> Dict[Block, List[SparseVector]]:
    """
    每个 (权, 奇偶性) 分块里 n⁺ 的公共核

    Returns:
        Dict: 非空分块 → 母模坐标下的基
    """
    if borel.algebra is not rep.algebra:
        raise RejectError("Borel 与表示不属于同一个代数")
    raising = borel.nilradical_indices
    out: Dict[Block, List[SparseVector]] = {}
    for block, idx in rep.blocks().items():
        rows: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for k in raising:
            for col_pos, j in enumerate(idx):
                for i, x in rep.ops[k][j].items():
                    rows.setdefault((k, i), {})[col_pos] = x
        system = [to_dense(r, len(idx)) for r in rows.values()]
        basis = kernel(system, len(idx))
        if basis:
            out[block] = [{idx[c]: x for c, x in enumerate(v) if x} for v in basis]
    return out


def _samples(vectors: List[SparseVector], rng: random.Random, count: int, radius: int) -> List[SparseVector]:
    out = list(vectors)
    if len(vectors) < 2:
        return out
    for _ in range(count):
        combo: SparseVector = {}
        for v in vectors:
            c = Fraction(rng.randint(-radius, radius))
            for i, x in v.items():
                combo[i] = combo.get(i, ZERO) + c * x
        combo = {i: x for i, x in combo.items() if x}
        if combo:
            out.append(combo)
    return out


def _singular_candidates(rep: Representation, borel: BorelSubalgebra) -> List[SparseVector]:
    settings = get_settings()
    rng = random.Random(settings.rank.seed)
    out = []
    for vectors in singular_vectors(rep, borel).values():
        out.extend(_samples(vectors, rng, settings.modules.irreducibility_samples,
                            settings.modules.irreducibility_radius))
    return out


def is_irreducible(rep: Representation, borel: BorelSubalgebra) -> bool:
    """每个奇异向量（各分块的基加随机组合）都生成整个模"""
    if rep.dim == 0:
        return False
    for v in _singular_candidates(rep, borel):
        if len(_closure(rep, [v])) != rep.dim:
            return False
    return True


def socle(rep: Representation, borel: BorelSubalgebra) -> Representation:
    """
    socle：由生成不可约子模的奇异向量张成的子模
    """
    keep: List[SparseVector] = []
    found = Subspace(rep.dim)
    for v in _singular_candidates(rep, borel):
        if found.contains(v):
            continue
        sub = submodule_generated(rep, [v])
        if is_irreducible(sub, borel):
            keep.append(v)
            for b in sub.embedding:
                found.add(b)
    result = submodule_generated(rep, keep)
    result.label = f"soc({rep.label})"
    logger.debug("soc(%s) = %s", rep.label, result.superdim)
    return result


def socle_filtration(rep: Representation, borel: BorelSubalgebra) -> List[Representation]:
    """
    逐层取 socle：返回 soc(V)、soc(V/soc V)、…，直到取尽

    Raises:
        RejectError: 某一层找不到不可约子模
    """
    layers = []
    current = rep
    while current.dim:
        layer = socle(current, borel)
        if not layer.dim:
            raise RejectError(f"{current.label} 中没有找到不可约子模")
        layers.append(layer)
        if layer.dim == current.dim:
            break
        current = quotient_module(current, layer)
    return layers


def is_completely_reducible(rep: Representation, dim_cap: Optional[int] = None) -> bool:
    """
    完全可约当且仅当算子生成的结合代数半单（Dickson 根为零）

    Raises:
        RejectError: 维数超过上限
    """
    cap = dim_cap if dim_cap is not None else get_settings().scan.reducibility_dim_cap
    if rep.dim > cap:
        raise RejectError(f"{rep.label} 的维数 {rep.dim} 超过完全可约判定上限 {cap}")
    if rep.dim == 0:
        return True
    algebra = span_closure(rep.matrices(), rep.dim)
    radical = dickson_radical(algebra, check_closure=False)
    logger.debug("%s: 作用代数维数 %d，根维数 %d", rep.label, len(algebra), len(radical))
    return not radical


def summarize(rep: Representation) -> Dict:
    return rep.to_json()
