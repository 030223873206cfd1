"""
创建日期：2026年02月17日
介绍：对偶的对称代数 S•V*：最高权函数、非幂零性、权幺半群，以及钩形 / 严格分拆的组合

ζ 只作记账：第 d 个对称幂上的权重记为 (λ, d)，表示 λ + dζ。
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from tools.borels import BorelSubalgebra
from tools.modules import Representation, dual, singular_vectors, sym_power, symmetric_monomials
from tools.sphericity import is_spherical
from tools.weights import SuperDim, Weight
from utils.config import get_settings
from utils.errors import NotSphericalError, RejectError
from utils.linalg import rank

logger = logging.getLogger(__name__)

ZetaWeight = Tuple[Weight, int]


def format_zeta(w: Weight, degree: int) -> str:
    if not degree:
        return w.format()
    zeta = "ζ" if degree == 1 else f"{degree}ζ"
    return zeta if w.is_zero() else f"{w.format()}+{zeta}"


# ---------------------------------------------------------------- 函数切片


@dataclass
class FunctionSlice:
    """
    S^d(V*) 及其次数

    Attributes:
        rep: S^d(V*) 的表示，基为对偶坐标的超对称单项式
        degree: d，即中心作用 dζ 的系数
        source: V 的来源说明
        coordinate_parities: V* 的坐标奇偶性
    """
    rep: Representation
    degree: int
    source: str
    coordinate_parities: Tuple[int, ...] = ()

    @property
    def superdim(self) -> SuperDim:
        return self.rep.superdim

    def even_monomials(self) -> List[int]:
        """只含偶坐标的单项式的下标；函数非幂零当且仅当在这些坐标上的投影非零"""
        par = self.coordinate_parities
        monos = symmetric_monomials(par, self.degree)
        return [i for i, mono in enumerate(monos) if not any(par[x] for x in mono)]


def function_slice(rep: Representation, d: int) -> FunctionSlice:
    """
    V 上的 d 次多项式函数 S^d(V*)

    Args:
        rep: 表示 V
        d: 次数，d ≥ 0

    Raises:
        RejectError: d 为负
    """
    if d < 0:
        raise RejectError("次数必须非负")
    coordinates = dual(rep)
    out = sym_power(coordinates, d)
    out.label = f"S{d}({rep.label}*)"
    return FunctionSlice(out, d, rep.label, coordinates.parities)


# ---------------------------------------------------------------- 最高权函数


@dataclass(frozen=True)
class HighestWeightFunction:
    weight: Weight
    degree: int
    parity: int
    multiplicity: int
    non_nilpotent_rank: int

    @property
    def non_nilpotent(self) -> bool:
        return self.non_nilpotent_rank > 0

    def format(self) -> str:
        return format_zeta(self.weight, self.degree)

    def to_json(self) -> Dict:
        return {
            "weight": self.weight.to_json(),
            "zeta": self.degree,
            "parity": self.parity,
            "multiplicity": self.multiplicity,
            "non_nilpotent": self.non_nilpotent,
            "label": self.format(),
        }


def highest_weight_functions(rep: Representation, borel: BorelSubalgebra, d: int) -> List[HighestWeightFunction]:
    """
    S^d(V*) 的奇异向量，按 (权, 奇偶) 分块给出多重数；
    非幂零 = 把所有奇坐标置零后的像非零，记录这些像张成空间的维数

    Args:
        rep: 表示 V
        borel: V 所在代数的 Borel
        d: 次数
    """
    piece = function_slice(rep, d)
    even = piece.even_monomials()
    out = []
    for (weight, parity), vectors in singular_vectors(piece.rep, borel).items():
        projected = [[v.get(i, Fraction(0)) for i in even] for v in vectors]
        nn = rank(projected) if even and parity == 0 else 0
        out.append(HighestWeightFunction(weight, d, parity, len(vectors), nn))
    logger.debug("%s 的奇异函数：%s", piece.rep.label, [f.format() for f in out])
    return out


# ---------------------------------------------------------------- 权幺半群


def truncated_monoid(generators: Sequence[ZetaWeight], zero: Weight, max_degree: int) -> Set[ZetaWeight]:
    """由生成元张成的幺半群中 ζ 次数不超过 max_degree 的部分"""
    if any(deg < 1 for _, deg in generators):
        raise RejectError("生成元的 ζ 次数必须为正")
    found = {(zero, 0)}
    frontier = [(zero, 0)]
    while frontier:
        nxt = []
        for w, deg in frontier:
            for g, gd in generators:
                item = (w + g, deg + gd)
                if item[1] <= max_degree and item not in found:
                    found.add(item)
                    nxt.append(item)
        frontier = nxt
    return found


def _sorted(items) -> List[ZetaWeight]:
    return sorted(items, key=lambda x: (x[1], x[0].sort_key()))


@dataclass
class MonoidReport:
    """
    一次权幺半群计算

    Attributes:
        label: 模的来源
        borel: Borel 标签
        max_degree: ζ 次数上限 D
        functions: 各次数的全部奇异函数
        generators: 声明的生成元
        found: 非幂零奇异权
        expected: 声明的幺半群截断到 D
        multiplicity_violations: 非幂零多重数不为一的权
    """
    label: str
    borel: str
    max_degree: int
    functions: List[HighestWeightFunction]
    generators: List[ZetaWeight]
    found: List[ZetaWeight]
    expected: List[ZetaWeight]
    multiplicity_violations: List[ZetaWeight] = field(default_factory=list)

    @property
    def missing(self) -> List[ZetaWeight]:
        have = set(self.found)
        return [x for x in self.expected if x not in have]

    @property
    def unexpected(self) -> List[ZetaWeight]:
        want = set(self.expected)
        return [x for x in self.found if x not in want]

    @property
    def matches(self) -> bool:
        return not self.missing and not self.unexpected

    @property
    def multiplicity_free(self) -> bool:
        return not self.multiplicity_violations

    def to_json(self) -> Dict:
        def labels(items):
            return [format_zeta(w, d) for w, d in items]
        return {
            "module": self.label,
            "borel": self.borel,
            "max_degree": self.max_degree,
            "generators": labels(self.generators),
            "found": labels(self.found),
            "missing": labels(self.missing),
            "unexpected": labels(self.unexpected),
            "multiplicity_violations": labels(self.multiplicity_violations),
            "matches": self.matches,
        }

    def to_markdown(self) -> str:
        gens = ", ".join(format_zeta(w, d) for w, d in self.generators)
        found = ", ".join(format_zeta(w, d) for w, d in self.found)
        lines = [
            "| 模 | Borel | 声明的生成元 | 计算得到（D=%d） | 一致 |" % self.max_degree,
            "|---|---|---|---|---|",
            f"| {self.label} | {self.borel} | ⟨{gens}⟩ | {found} | {'是' if self.matches else '否'} |",
        ]
        return "\n".join(lines)


def weight_monoid(rep: Representation, borel: BorelSubalgebra, max_degree: Optional[int] = None,
                  generators: Sequence[ZetaWeight] = ()) -> MonoidReport:
    """
    收集 d ≤ D 的非幂零奇异权，与声明的生成元截断比较

    Args:
        rep: 对 borel 为球的表示
        borel: Borel
        max_degree: D，缺省取配置
        generators: (权, ζ 次数) 列表

    Raises:
        NotSphericalError: rep 对 borel 不是球的
    """
    D = max_degree if max_degree is not None else get_settings().scan.max_degree
    report = is_spherical(rep, borel)
    if not report.spherical:
        raise NotSphericalError(f"{rep.label} 对 {borel.label} 不是球的")
    functions: List[HighestWeightFunction] = []
    found = []
    violations = []
    for d in range(D + 1):
        for f in highest_weight_functions(rep, borel, d):
            functions.append(f)
            if f.non_nilpotent:
                found.append((f.weight, d))
                if f.non_nilpotent_rank != 1:
                    violations.append((f.weight, d))
    zero = rep.algebra.zero_weight()
    expected = truncated_monoid(list(generators), zero, D)
    result = MonoidReport(rep.label, borel.label, D, functions, list(generators), _sorted(found),
                          _sorted(expected), violations)
    if not result.matches:
        logger.warning("%s 的权幺半群与声明不一致：缺 %s，多 %s", rep.label,
                       [format_zeta(*x) for x in result.missing], [format_zeta(*x) for x in result.unexpected])
    if violations:
        logger.warning("%s 有多重数不为一的非幂零奇异权：%s", rep.label, [format_zeta(*x) for x in violations])
    return result


def monoid_closure_violations(report: MonoidReport) -> List[Tuple[ZetaWeight, ZetaWeight]]:
    """找到的非幂零奇异权在次数上限内对加法不封闭的那些对"""
    have = set(report.found)
    out = []
    for a, b in itertools.combinations_with_replacement(report.found, 2):
        degree = a[1] + b[1]
        if degree <= report.max_degree and (a[0] + b[0], degree) not in have:
            out.append((a, b))
    return out


# ---------------------------------------------------------------- 权幺半群表

@dataclass(frozen=True)
class MonoidRow:
    """
    一行期望的权幺半群

    Attributes:
        key: 行标识
        algebra: (kind, m, n)，与 build_algebra 的参数一致（osp 的 n 是 osp(m|2n) 里的 n）
        module: 模的描述串
        borel: εδ 序列、"st"、"st-op" 或 "h=..." 形式的余权重
        generators: (ε 与 δ 系数, ζ 次数)
        expect_match: 计算结果是否应与声明一致；已知有出入的行为 False
        flagged: 声明本身存疑，无论是否一致都标为已知出入
        note: 出入的说明
    """
    key: str
    algebra: Tuple[str, int, int]
    module: str
    borel: str
    generators: Tuple[Tuple[Tuple, int], ...]
    expect_match: bool = True
    flagged: bool = False
    note: str = ""

    def generator_weights(self, split: int) -> List[ZetaWeight]:
        return [(Weight.from_coeffs(list(coeffs), split), deg) for coeffs, deg in self.generators]


MONOID_ROWS: Tuple[MonoidRow, ...] = (
    MonoidRow("GL", ("gl", 2, 2), "std", "d2e2", (((0, 0, 0, -1), 1),), expect_match=False, flagged=True,
              note="声明 −δ_n+ζ，S^d(GL*) 在该 Borel 下的最高权实际是 −dε_m"),
    MonoidRow("OSP", ("osp", 3, 1), "std", "ed", (((1, 0), 1), ((0, 0), 2))),
    MonoidRow("ΠOSP", ("osp", 3, 1), "pi:std", "de", (((0, 1), 1),)),
    MonoidRow("ΠK", ("gl", 1, 2), "pi:kac:t=1/2", "ded", (((Fraction(1, 2), 0, -1), 1),)),
    MonoidRow("Q", ("q", 2, 2), "std", "st", (((0, -1), 1),), flagged=True,
              note="声明写作 −ε_m+ζ，q(n) 只有 ε_1…ε_n，按 ε_n 理解"),
    MonoidRow("ΠP", ("p", 3, 3), "pi:std", "h=3,2,1", (((1, 0, 0), 1),)),
)


# ---------------------------------------------------------------- 钩形与严格分拆


def _partitions_of(d: int, largest: Optional[int] = None) -> List[Tuple[int, ...]]:
    largest = d if largest is None else largest
    if d == 0:
        return [()]
    out = []
    for head in range(min(d, largest), 0, -1):
        for rest in _partitions_of(d - head, head):
            out.append((head,) + rest)
    return out


def hook_partitions(d: int, m: int, k: int) -> List[Tuple[int, ...]]:
    """HH_d(m, k)：d 的分拆中第 m+1 行不超过 k 的那些"""
    return [p for p in _partitions_of(d) if len(p) <= m or p[m] <= k]


def strict_partitions(d: int, length: int) -> List[Tuple[int, ...]]:
    """SSP_d(n)：d 的严格分拆，长度不超过 n"""
    return [p for p in _partitions_of(d) if len(p) <= length and all(a > b for a, b in zip(p, p[1:]))]


def hook_enumerations(d: int, m: int, k: int) -> Dict[str, List[Tuple[int, ...]]]:
    """
    S^d(S²GL*) 与 S^d(ΠS²GL*) 的最高权指标集

    Returns:
        {"hooks": HH_d(m, k), "strict": SSP_d(m)}
    """
    return {"hooks": hook_partitions(d, m, k), "strict": strict_partitions(d, m)}


def nest_hooks(strict: Sequence[int]) -> Tuple[int, ...]:
    """
    把第 i 个 (1,1) 钩（第一行 λ_i+1 格，第一列 λ_i 格，含角格）从对角位置 (i, i) 起依次嵌套

    Raises:
        RejectError: 输入不是严格递减的正整数列
    """
    lam = [int(x) for x in strict]
    if any(x <= 0 for x in lam) or any(a <= b for a, b in zip(lam, lam[1:])):
        raise RejectError(f"{tuple(lam)} 不是严格分拆")
    rows: Dict[int, Set[int]] = {}
    for i, part in enumerate(lam):
        for col in range(i, i + part + 1):
            rows.setdefault(i, set()).add(col)
        for row in range(i, i + part):
            rows.setdefault(row, set()).add(i)
    out = []
    for row in range(len(rows)):
        cols = rows.get(row, set())
        if cols != set(range(len(cols))):
            raise RejectError(f"{tuple(lam)} 的钩嵌套不是 Young 图")
        out.append(len(cols))
    return tuple(out)
