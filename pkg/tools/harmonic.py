"""
创建日期：2026年02月17日
介绍：对称代数上的算子检验

osp(m|2n)：ω ∈ S²V 是不变型的对偶元，Ω 是与左乘 ω 伴随的 Laplace 算子，H = [Ω, −ω]。
p(n)：奇不变型给出的缩并 q: S^dV → S^{d−2}V。
两组检验都只在给定次数以内做精确线性代数，任何一条不成立都报错。
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tools.borels import borel_from_coweight, standard_borel
from tools.modules import (
    Columns, Representation, compose_columns, restrict_even, singular_vectors, socle_filtration,
    sort_monomial, standard_module, submodule_generated, sym_power, symmetric_monomials,
)
from tools.superalgebras import build_algebra
from tools.weights import SuperDim, Weight
from utils.errors import RejectError, VerificationError
from utils.linalg import ZERO, SparseVector, Subspace, kernel, rank

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
HALF = Fraction(1, 2)


@dataclass
class SuiteCheck:
    name: str
    degree: int
    ok: bool
    detail: str = ""

    def to_json(self) -> Dict:
        return {"name": self.name, "degree": self.degree, "ok": self.ok, "detail": self.detail}


@dataclass
class SuiteReport:
    """一组恒等式检验的结果"""
    title: str
    max_degree: int
    checks: List[SuiteCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[SuiteCheck]:
        return [c for c in self.checks if not c.ok]

    def record(self, name: str, degree: int, ok: bool, detail: str = "") -> None:
        self.checks.append(SuiteCheck(name, degree, bool(ok), detail))
        if not ok:
            logger.warning("%s：%s 在 d=%d 不成立 %s", self.title, name, degree, detail)

    def names(self) -> List[str]:
        return sorted({c.name for c in self.checks})

    def to_json(self) -> Dict:
        return {"title": self.title, "max_degree": self.max_degree, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks]}


# ---------------------------------------------------------------- 多项式上的算子


def _partial(mono: Monomial, a: int, parities: Sequence[int]) -> Optional[Tuple[Fraction, Monomial]]:
    """左超导数 ∂_a 作用在单项式上"""
    if a not in mono:
        return None
    pos = mono.index(a)
    if parities[a]:
        sign = -1 if sum(parities[x] for x in mono[:pos]) % 2 else 1
        return Fraction(sign), mono[:pos] + mono[pos + 1:]
    return Fraction(mono.count(a)), mono[:pos] + mono[pos + 1:]


def multiplication_operator(element: Dict[Monomial, Fraction], source: Sequence[Monomial],
                            target: Dict[Monomial, int], parities: Sequence[int]) -> Columns:
    """左乘一个偶元素"""
    cols: Columns = []
    for mono in source:
        col: SparseVector = {}
        for word, c in element.items():
            sign, out = sort_monomial(word + mono, parities)
            if out is None:
                continue
            i = target[out]
            col[i] = col.get(i, ZERO) + sign * c
        cols.append({i: x for i, x in col.items() if x})
    return cols


def second_order_operator(terms: Sequence[Tuple[Fraction, int, int]], source: Sequence[Monomial],
                          target: Dict[Monomial, int], parities: Sequence[int]) -> Columns:
    """Σ c·∂_a∂_b（先作用 ∂_b）"""
    cols: Columns = []
    for mono in source:
        col: SparseVector = {}
        for c, a, b in terms:
            first = _partial(mono, b, parities)
            if first is None:
                continue
            second = _partial(first[1], a, parities)
            if second is None:
                continue
            i = target[second[1]]
            col[i] = col.get(i, ZERO) + c * first[0] * second[0]
        cols.append({i: x for i, x in col.items() if x})
    return cols


def _combine(pairs: Sequence[Tuple[Fraction, Columns]], ncols: int) -> Columns:
    out: Columns = [{} for _ in range(ncols)]
    for c, cols in pairs:
        for j, col in enumerate(cols):
            for i, x in col.items():
                out[j][i] = out[j].get(i, ZERO) + c * x
    return [{i: x for i, x in col.items() if x} for col in out]


def _identity(n: int, scale: Fraction = Fraction(1)) -> Columns:
    return [{j: scale} if scale else {} for j in range(n)]


def _same(a: Columns, b: Columns) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def _rows(cols: Columns, nrows: int) -> List[List[Fraction]]:
    return [[col.get(i, ZERO) for col in cols] for i in range(nrows)]


def _kernel(cols: Columns, nrows: int) -> List[SparseVector]:
    if not cols:
        return []
    if not nrows:
        return [{j: Fraction(1)} for j in range(len(cols))]
    return [{j: x for j, x in enumerate(v) if x} for v in kernel(_rows(cols, nrows), len(cols))]


def _rank(cols: Columns, nrows: int) -> int:
    if not cols or not nrows:
        return 0
    return rank(_rows(cols, nrows))


def _apply(cols: Columns, v: SparseVector) -> SparseVector:
    out: SparseVector = {}
    for j, c in v.items():
        for i, x in cols[j].items():
            out[i] = out.get(i, ZERO) + c * x
    return {i: x for i, x in out.items() if x}


def _span(vectors: Sequence[SparseVector], dim: int) -> Subspace:
    space = Subspace(dim)
    for v in vectors:
        space.add(v)
    return space


def _same_span(a: Sequence[SparseVector], b: Sequence[SparseVector], dim: int) -> bool:
    sa, sb = _span(a, dim), _span(b, dim)
    return len(sa) == len(sb) and all(sa.contains(v) for v in b)


def _slices(parities: Sequence[int], top: int) -> Tuple[List[List[Monomial]], List[Dict[Monomial, int]]]:
    monos = [symmetric_monomials(parities, d) for d in range(top + 1)]
    index = [{m: i for i, m in enumerate(ms)} for ms in monos]
    return monos, index


def _intertwines(left: Columns, right: Columns, source: Representation, target: Representation,
                 odd_map: bool = False) -> bool:
    """map∘ρ_src(X) = ±ρ_tgt(X)∘map 对每个基元成立（奇映射对奇元取负号）"""
    for k, b in enumerate(source.algebra.basis):
        lhs = compose_columns(left, source.ops[k])
        rhs = compose_columns(target.ops[k], right)
        if odd_map and b.parity:
            rhs = [{i: -x for i, x in col.items()} for col in rhs]
        if not _same(lhs, rhs):
            return False
    return True


# ---------------------------------------------------------------- osp 的 sl₂ 三元组


@dataclass
class OspHarmonicState:
    """
    osp(m|2n) 上 S•V 的 sl₂ 结构

    Attributes:
        m, n2: 代数参数，n2 = 2n
        max_degree: 检验到的次数 D
        omega: ω ∈ S²V，单项式 → 系数
        laplacian: Ω = Σ c ∂_a∂_b 的项
        harmonic: d → H_d = ker Ω 的基
        report: 检验结果
    """
    m: int
    n2: int
    max_degree: int
    omega: Dict[Monomial, Fraction]
    laplacian: List[Tuple[Fraction, int, int]]
    harmonic: Dict[int, List[SparseVector]]
    report: SuiteReport

    @property
    def n(self) -> int:
        return self.n2 // 2

    @property
    def r(self) -> Fraction:
        return Fraction(self.m, 2)

    @property
    def semisimple(self) -> bool:
        gap = self.n - self.r
        return gap.denominator != 1 or gap < 0

    def h_scalar(self, d: int) -> Fraction:
        """H 在 S^dV 上的标量 (n − r) − d"""
        return self.n - self.r - d

    def harmonic_dims(self) -> Dict[int, int]:
        return {d: len(v) for d, v in self.harmonic.items()}

    def to_json(self) -> Dict:
        out = self.report.to_json()
        out.update({"m": self.m, "n2": self.n2, "r": str(self.r), "semisimple": self.semisimple,
                    "harmonic_dims": {str(d): k for d, k in self.harmonic_dims().items()}})
        return out


def _osp_form_elements(m: int, n: int) -> Tuple[Dict[Monomial, Fraction], List[Tuple[Fraction, int, int]]]:
    omega: Dict[Monomial, Fraction] = {}
    laplacian: List[Tuple[Fraction, int, int]] = []
    for a in range(m):
        b = m - 1 - a
        if a < b:
            omega[(a, b)] = Fraction(2)
            laplacian.append((HALF, a, b))
        elif a == b:
            omega[(a, a)] = Fraction(1)
            laplacian.append((Fraction(1, 4), a, a))
    for i in range(n):
        xi, eta = m + i, m + 2 * n - 1 - i
        omega[(xi, eta)] = Fraction(-2)
        laplacian.append((-HALF, xi, eta))
    return omega, laplacian


def osp_harmonic_suite(m: int, n2: int, max_degree: int = 4, strict: bool = True) -> OspHarmonicState:
    """
    构造 ω、Ω、H 并逐次数检验：
    H 在 S^dV 上是标量 (n−r)−d；[H,Ω] = 2Ω；[H,−ω] = 2ω；Ω 满；ω 与 g 的作用交换；
    半单情形（r 为半整数或 r > n）下 S^dV = H_d ⊕ ω·S^{d−2}V 且 H_d 的奇异向量只有一条线；
    非半单情形（n−r ∈ ℤ≥0）下 ΩL_ω 的可逆性与核 L_ω^{s−1}H_{d−2s}

    Args:
        m: 偶部分维数，m ≥ 1
        n2: 奇部分维数 2n
        max_degree: D ≤ 6
        strict: 为 True 时任何一条不成立都抛错

    Raises:
        RejectError: 参数不合法
        VerificationError: strict 且有检验失败
    """
    if m < 1 or n2 < 2 or n2 % 2:
        raise RejectError(f"osp({m}|{n2}) 不在检验范围内")
    if not 0 <= max_degree <= 6:
        raise RejectError("次数上限须在 0 到 6 之间")
    n = n2 // 2
    g = build_algebra("osp", m, n)
    par = g.v_parities
    D = max_degree
    omega, laplacian = _osp_form_elements(m, n)
    monos, index = _slices(par, D + 2)
    dims = [len(x) for x in monos]
    mult = {d: multiplication_operator(omega, monos[d], index[d + 2], par) for d in range(D + 1)}
    lap = {d: second_order_operator(laplacian, monos[d], index[d - 2], par) for d in range(2, D + 3)}

    def h_op(d: int) -> Columns:
        pairs = [(Fraction(-1), compose_columns(lap[d + 2], mult[d]))]
        if d >= 2:
            pairs.append((Fraction(1), compose_columns(mult[d - 2], lap[d])))
        return _combine(pairs, dims[d])

    report = SuiteReport(f"osp({m}|{n2}) 调和检验", D)
    state = OspHarmonicState(m, n2, D, omega, laplacian, {}, report)
    H = {d: h_op(d) for d in range(D + 1)}
    for d in range(D + 1):
        report.record("H 标量", d, _same(H[d], _identity(dims[d], state.h_scalar(d))),
                      f"期望 {state.h_scalar(d)}")
    for d in range(2, D + 1):
        lhs = _combine([(Fraction(1), compose_columns(H[d - 2], lap[d])),
                        (Fraction(-1), compose_columns(lap[d], H[d]))], dims[d])
        report.record("[H,Ω]=2Ω", d, _same(lhs, _combine([(Fraction(2), lap[d])], dims[d])))
    for d in range(0, D - 1):
        lhs = _combine([(Fraction(-1), compose_columns(H[d + 2], mult[d])),
                        (Fraction(1), compose_columns(mult[d], H[d]))], dims[d])
        report.record("[H,−ω]=2ω", d, _same(lhs, _combine([(Fraction(2), mult[d])], dims[d])))
    for d in range(D + 1):
        if d < 2:
            state.harmonic[d] = [{j: Fraction(1)} for j in range(dims[d])]
            continue
        report.record("Ω 满射", d, _rank(lap[d], dims[d - 2]) == dims[d - 2])
        basis = _kernel(lap[d], dims[d - 2])
        state.harmonic[d] = basis
        report.record("dim H_d", d, len(basis) == dims[d] - dims[d - 2], f"{len(basis)}")

    reps = {d: sym_power(standard_module(g), d) for d in range(D + 1)}
    for d in range(D - 1):
        report.record("ω 不变", d, _intertwines(mult[d], mult[d], reps[d], reps[d + 2]))

    gap = state.n - state.r
    for d in range(D + 1):
        omega_lap = compose_columns(lap[d + 2], mult[d])
        invertible = _rank(omega_lap, dims[d]) == dims[d]
        if state.semisimple:
            report.record("ΩL_ω 可逆", d, invertible)
        else:
            expected = d < gap or d > 2 * gap
            report.record("ΩL_ω 可逆性", d, invertible == expected, f"期望 {expected}")

    if state.semisimple:
        borel = standard_borel(g)
        for d in range(D + 1):
            if d >= 2:
                vectors = list(state.harmonic[d]) + list(mult[d - 2])
                report.record("S^d = H_d ⊕ ωS^{d−2}", d, len(_span(vectors, dims[d])) == dims[d])
            singular = [v for vs in singular_vectors(reps[d], borel).values() for v in vs]
            if d >= 2:
                images = [_apply(lap[d], v) for v in singular]
                lines = len(singular) - len(_span(images, dims[d - 2]))
            else:
                lines = len(singular)
            report.record("H_d 的奇异线", d, lines == 1, f"{lines}")
    else:
        k = int(gap)
        for d in range(k + 2, min(D, 2 * k + 2) + 1):
            s = d - k - 1
            omega_lap = compose_columns(lap[d], mult[d - 2])
            found = _kernel(omega_lap, dims[d - 2])
            expected = list(state.harmonic[d - 2 * s])
            degree = d - 2 * s
            while degree < d - 2:
                expected = [_apply(mult[degree], v) for v in expected]
                degree += 2
            report.record("ker ΩL_ω = L_ω^{s−1}H_{d−2s}", d, _same_span(found, expected, dims[d - 2]),
                          f"s={s}")
    logger.debug("%s：%d 条检验，失败 %d", report.title, len(report.checks), len(report.failures))
    if strict and not report.ok:
        first = report.failures[0]
        raise VerificationError(f"{report.title}：{first.name} 在 d={first.degree} 不成立")
    return state


# ---------------------------------------------------------------- p(n) 的缩并


@dataclass
class ContractionState:
    """
    P_{n|n} 上缩并 q 的计算结果

    Attributes:
        n: 秩
        max_degree: D
        kernels: d → ker q 的超维数
        layers: d → socle 层的超维数（自下而上）
        kernel_weights: d → ker q 作为 g₀ 模的最高权
        report: 检验结果
    """
    n: int
    max_degree: int
    kernels: Dict[int, SuperDim]
    layers: Dict[int, List[SuperDim]]
    kernel_weights: Dict[int, List[Weight]]
    report: SuiteReport

    def to_json(self) -> Dict:
        out = self.report.to_json()
        out.update({
            "n": self.n,
            "kernels": {str(d): str(s) for d, s in self.kernels.items()},
            "layers": {str(d): [str(s) for s in ls] for d, ls in self.layers.items()},
            "kernel_weights": {str(d): [w.format() for w in ws] for d, ws in self.kernel_weights.items()},
        })
        return out


def expected_kernel_weights(n: int, d: int) -> List[Weight]:
    """
    ker q ⊂ S^dP_{n|n} 作为 gl(n) 模的最高权 (d−j)ε₁ − ε_{n−j+1} − … − ε_n：
    d ≠ n 时 j 取 0…min(d, n−1)，d = n 时 j 取 0…n
    """
    top = n if d == n else min(d, n - 1)
    out = []
    for j in range(top + 1):
        coeffs = [Fraction(0)] * n
        coeffs[0] += d - j
        for i in range(n - j, n):
            coeffs[i] -= 1
        out.append(Weight.from_coeffs(coeffs, n))
    return sorted(out, key=lambda w: w.sort_key())


def _kernel_superdim(cols: Columns, nrows: int, parities: Sequence[int]) -> SuperDim:
    sizes = []
    for p in (0, 1):
        part = [col for col, q in zip(cols, parities) if q == p]
        sizes.append(len(part) - _rank(part, nrows))
    return SuperDim(*sizes)


def p_contraction_suite(n: int, max_degree: Optional[int] = None, strict: bool = True) -> ContractionState:
    """
    P_{n|n} 上 q = Σ ∂_{x_i}∂_{ξ_i} 的检验：q² = 0；q 与 p(n) 超交换；
    q 的像等于下一层 q 的核（只有 d−2 = n 时余维 1）；ker q 的 g₀ 最高权；
    socle 层的超维数，d = n 时多出中间一层 Π^nL(−ω)

    Args:
        n: 2 或 3
        max_degree: D ≤ n+2，缺省取 n+2

    Raises:
        RejectError: 参数不在范围内
        VerificationError: strict 且有检验失败
    """
    if n not in (2, 3):
        raise RejectError("只检验 p(2) 与 p(3)")
    D = n + 2 if max_degree is None else max_degree
    if not 0 <= D <= n + 2:
        raise RejectError(f"次数上限须在 0 到 {n + 2} 之间")
    g = build_algebra("p", n)
    par = g.v_parities
    borel = borel_from_coweight(g, list(range(n, 0, -1)))
    monos, index = _slices(par, D)
    dims = [len(x) for x in monos]
    terms = [(Fraction(1), i, n + i) for i in range(n)]
    q = {d: second_order_operator(terms, monos[d], index[d - 2], par) for d in range(2, D + 1)}
    reps = {d: sym_power(standard_module(g), d) for d in range(D + 1)}
    report = SuiteReport(f"P_{{{n}|{n}}} 缩并检验", D)
    state = ContractionState(n, D, {}, {}, {}, report)

    kernels: Dict[int, List[SparseVector]] = {}
    for d in range(D + 1):
        if d >= 2:
            kernels[d] = _kernel(q[d], dims[d - 2])
            state.kernels[d] = _kernel_superdim(q[d], dims[d - 2], reps[d].parities)
        else:
            kernels[d] = [{j: Fraction(1)} for j in range(dims[d])]
            state.kernels[d] = reps[d].superdim
    for d in range(4, D + 1):
        report.record("q²=0", d, all(not col for col in compose_columns(q[d - 2], q[d])))
    for d in range(2, D + 1):
        report.record("q 与 p(n) 超交换", d, _intertwines(q[d], q[d], reps[d], reps[d - 2], odd_map=True))
        expected = len(kernels[d - 2]) - (1 if d - 2 == n else 0)
        report.record("im q = ker q（d−2=n 时余维 1）", d, _rank(q[d], dims[d - 2]) == expected,
                      f"期望秩 {expected}")

    b0 = borel.even_part()
    for d in range(D + 1):
        sub = submodule_generated(reps[d], kernels[d])
        report.record("ker q 是子模", d, sub.dim == len(kernels[d]))
        weights = []
        for (w, _), vectors in singular_vectors(restrict_even(sub), b0).items():
            weights.extend([w] * len(vectors))
        weights.sort(key=lambda w: w.sort_key())
        state.kernel_weights[d] = weights
        report.record("ker q 的 g₀ 最高权", d, weights == expected_kernel_weights(n, d),
                      ", ".join(w.format() for w in weights))

    line = SuperDim(0, 1) if n % 2 else SuperDim(1, 0)
    for d in range(D + 1):
        layers = [layer.superdim for layer in socle_filtration(reps[d], borel)]
        state.layers[d] = layers
        whole, bottom = reps[d].superdim, state.kernels[d]
        if d < 2:
            expected_layers = [whole]
        elif d == n:
            expected_layers = [bottom - line, line, whole - bottom]
        else:
            expected_layers = [bottom, whole - bottom]
        report.record("socle 层", d, layers == expected_layers, " / ".join(str(s) for s in layers))
    logger.debug("%s：%d 条检验，失败 %d", report.title, len(report.checks), len(report.failures))
    if strict and not report.ok:
        first = report.failures[0]
        raise VerificationError(f"{report.title}：{first.name} 在 d={first.degree} 不成立")
    return state
