"""
创建日期：2026年02月13日
介绍：Borel 子代数、奇反射与支配性

Borel 子代数由一个一般余权重 h 决定：b = h ⊕ n⁺，n⁺ 由 α(h) > 0 的根空间张成。
gl 与 osp 的 Borel 也可以用 εδ 序列描述，序列中第 i 个符号在余权重上取值 L − i。
"""
from __future__ import annotations

import itertools
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from tools.root_data import RootDatum
from tools.superalgebras import LieSuperalgebra
from tools.weights import Gram, Weight, pairing, pairing_linear
from utils.errors import ParseError, RejectError
from utils.linalg import ONE, ZERO, rref, to_fraction

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

_TOKEN = re.compile(r"\s*(\(\s*[-−]\s*[eε]\s*\)|[eε]|[dδ])\s*(\d*)")


# ---------------------------------------------------------------- εδ 序列


@dataclass(frozen=True)
class EpsDeltaSequence:
    """
    εδ 序列，符号取自 "e"、"-e"、"d"

    文本形式用 ASCII：e、d、(-e)，后面可以跟重复次数，例如 "d2e" 即 "dde"。
    """
    tokens: Tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> "EpsDeltaSequence":
        text = text.strip()
        if not text:
            raise ParseError("εδ 序列为空")
        tokens: List[str] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match or match.end() == pos:
                raise ParseError(f"无法解析 εδ 序列 {text!r}（位置 {pos}）")
            raw, repeat = match.group(1), match.group(2)
            token = "-e" if raw.startswith("(") else ("e" if raw in "eε" else "d")
            count = int(repeat) if repeat else 1
            if count < 1:
                raise ParseError(f"重复次数必须为正: {text!r}")
            tokens.extend([token] * count)
            pos = match.end()
        return cls(tuple(tokens))

    @property
    def eps_count(self) -> int:
        return sum(1 for t in self.tokens if t != "d")

    @property
    def delta_count(self) -> int:
        return sum(1 for t in self.tokens if t == "d")

    @property
    def has_sign(self) -> bool:
        return "-e" in self.tokens

    def __str__(self) -> str:
        return "".join("(-e)" if t == "-e" else t for t in self.tokens)

    def pretty(self) -> str:
        return "".join({"e": "ε", "-e": "(−ε)", "d": "δ"}[t] for t in self.tokens)

    def runs(self) -> List[Tuple[str, int]]:
        """极大同类段，(−ε) 与 ε 算同一类"""
        out: List[Tuple[str, int]] = []
        for t in self.tokens:
            kind = "d" if t == "d" else "e"
            if out and out[-1][0] == kind:
                out[-1] = (kind, out[-1][1] + 1)
            else:
                out.append((kind, 1))
        return out


def _as_sequence(seq: Union[str, EpsDeltaSequence]) -> EpsDeltaSequence:
    return seq if isinstance(seq, EpsDeltaSequence) else EpsDeltaSequence.parse(seq)


def _normalize_sequence(seq: EpsDeltaSequence) -> EpsDeltaSequence:
    """末尾的 (−ε) 与 ε 给出同一个 Borel"""
    if seq.tokens and seq.tokens[-1] == "-e":
        return EpsDeltaSequence(seq.tokens[:-1] + ("e",))
    return seq


# ---------------------------------------------------------------- 余权重


@dataclass(frozen=True)
class Coweight:
    values: Tuple[Fraction, ...]

    @classmethod
    def generic(cls, g: LieSuperalgebra, values: Sequence) -> "Coweight":
        """
        构造余权重并检查一般性：每个非零根在 h 上的取值都不为零

        Raises:
            RejectError: 长度不对或不是一般的
        """
        vals = tuple(to_fraction(x) for x in values)
        r, n = g.split
        if len(vals) != r + n:
            raise RejectError(f"{g.name} 的余权重需要 {r + n} 个分量，收到 {len(vals)} 个")
        for b in g.basis:
            if b.root is not None and not b.root.is_zero() and b.root.level(vals) == 0:
                raise RejectError(f"余权重 {_format_values(vals)} 不是一般的：根 {b.root} 取值为零")
        return cls(vals)

    def __str__(self) -> str:
        return _format_values(self.values)


def _format_values(vals: Sequence[Fraction]) -> str:
    return "h=(" + ",".join(str(v) for v in vals) + ")"


# ---------------------------------------------------------------- Borel


@dataclass(eq=False)
class BorelSubalgebra:
    """
    Borel 子代数 h ⊕ n⁺

    Attributes:
        algebra: 所在的代数
        coweight: 决定正根的余权重
        indices: b 的基元在 algebra.basis 中的下标（Cartan 型元素在前）
        positive_roots: 不同的正根
        simple_roots: 不可分解的正根
        sequence: gl / osp 的偶 Borel 为标准时对应的 εδ 序列
    """
    algebra: LieSuperalgebra
    coweight: Coweight
    indices: Tuple[int, ...]
    positive_roots: Tuple[Weight, ...]
    simple_roots: Tuple[Weight, ...]
    sequence: Optional[EpsDeltaSequence] = None
    _cache: Dict = field(default_factory=dict, repr=False)

    @property
    def label(self) -> str:
        return str(self.sequence) if self.sequence is not None else str(self.coweight)

    @property
    def odd_dim(self) -> int:
        return sum(self.algebra.basis[i].parity for i in self.indices)

    @property
    def even_dim(self) -> int:
        return len(self.indices) - self.odd_dim

    @property
    def nilradical_indices(self) -> List[int]:
        """n⁺ 的基：根非零的正根向量"""
        g = self.algebra
        return [i for i in self.indices if g.basis[i].root is not None and not g.basis[i].root.is_zero()]

    def positive_odd_roots(self) -> List[Weight]:
        return self._roots_of_parity(1)

    def positive_even_roots(self) -> List[Weight]:
        return self._roots_of_parity(0)

    def _roots_of_parity(self, parity: int) -> List[Weight]:
        g = self.algebra
        out = []
        for i in self.nilradical_indices:
            b = g.basis[i]
            if b.parity == parity and b.root not in out:
                out.append(b.root)
        return out

    def is_positive(self, root: Weight) -> bool:
        return root.level(self.coweight.values) > 0

    def key(self) -> FrozenSet[Weight]:
        return frozenset(self.positive_roots)

    def same_as(self, other: "BorelSubalgebra") -> bool:
        return self.algebra is other.algebra and self.key() == other.key()

    def even_part(self) -> "BorelSubalgebra":
        """b₀ 作为偶子代数的 Borel"""
        if "even" not in self._cache:
            g0 = self.algebra.even_subalgebra()
            self._cache["even"] = borel_from_coweight(g0, self.coweight.values)
        return self._cache["even"]

    def reflect(self, alpha: Weight) -> "BorelSubalgebra":
        """在迷向单根 α 处做奇反射得到的相邻 Borel"""
        simple = odd_reflection(self.algebra, self.simple_roots, alpha)
        return borel_from_simple_roots(self.algebra, simple)

    def describe(self) -> Dict:
        return {
            "label": self.label,
            "coweight": [str(v) for v in self.coweight.values],
            "simple_roots": [s.format() for s in self.simple_roots],
            "odd_dim": self.odd_dim,
        }


def _simple_roots(positive: Sequence[Weight]) -> Tuple[Weight, ...]:
    decomposable = {a + b for a in positive for b in positive}
    return tuple(a for a in positive if a not in decomposable)


def borel_from_coweight(g: LieSuperalgebra, h: Union[Coweight, Sequence]) -> BorelSubalgebra:
    """
    由一般余权重给出 Borel 子代数

    Args:
        g: 代数（四类经典超代数、其偶部分或一维奇交换代数）
        h: 余权重

    Returns:
        BorelSubalgebra: Cartan 型基元（包括 q 的奇 Cartan）总在 b 中

    Raises:
        RejectError: h 不是一般的
    """
    cw = h if isinstance(h, Coweight) else Coweight.generic(g, h)
    cartan_like, positive_idx, positive = [], [], []
    for i, b in enumerate(g.basis):
        if b.root is None or b.root.is_zero():
            cartan_like.append(i)
            continue
        if b.root.level(cw.values) > 0:
            positive_idx.append(i)
            if b.root not in positive:
                positive.append(b.root)
    positive.sort(key=lambda w: (-w.level(cw.values), w.sort_key()))
    borel = BorelSubalgebra(g, cw, tuple(cartan_like + positive_idx), tuple(positive),
                            _simple_roots(positive), sequence_from_coweight(g, cw.values))
    logger.debug("%s: Borel %s，奇维数 %d", g.name, borel.label, borel.odd_dim)
    return borel


def _osp_rank(g: LieSuperalgebra) -> int:
    return g.split[0]


def _sequence_coweight(g: LieSuperalgebra, seq: EpsDeltaSequence) -> List[Fraction]:
    r, n = g.split
    values = [ZERO] * (r + n)
    length = len(seq.tokens)
    k = j = 0
    for i, token in enumerate(seq.tokens):
        value = Fraction(length - i)
        if token == "d":
            values[r + j] = value
            j += 1
        else:
            values[k] = -value if token == "-e" else value
            k += 1
    return values


def _check_sequence(g: LieSuperalgebra, seq: EpsDeltaSequence) -> None:
    if g.kind not in ("gl", "osp"):
        raise RejectError(f"εδ 序列只适用于 gl 和 osp，收到 {g.name}")
    r, n = g.split
    if seq.eps_count != r or seq.delta_count != n:
        raise RejectError(f"{g.name} 的序列需要 {r} 个 ε 和 {n} 个 δ，收到 {seq}")
    if seq.has_sign and not (g.kind == "osp" and g.m % 2 == 0):
        raise RejectError(f"符号 (−ε) 只允许出现在 m 为偶数的 osp 中，收到 {seq}")


def borel_from_sequence(g: LieSuperalgebra, seq: Union[str, EpsDeltaSequence]) -> BorelSubalgebra:
    """
    由 εδ 序列给出 Borel 子代数

    Args:
        g: gl(m|n) 或 osp(m|2n)
        seq: 序列或其文本

    Raises:
        ParseError: 文本无法解析
        RejectError: 符号个数不匹配或符号不合法
    """
    seq = _as_sequence(seq)
    _check_sequence(g, seq)
    borel = borel_from_coweight(g, _sequence_coweight(g, seq))
    borel.sequence = _normalize_sequence(seq)
    return borel


def sequence_from_coweight(g: LieSuperalgebra, h: Sequence[Fraction]) -> Optional[EpsDeltaSequence]:
    """偶 Borel 为标准 Borel 时，按 |h| 从大到小读出 εδ 序列，否则返回 None"""
    if g.kind not in ("gl", "osp"):
        return None
    r, n = g.split
    eps, delta = list(h[:r]), list(h[r:])
    if any(a <= b for a, b in zip(delta, delta[1:])):
        return None
    if g.kind == "gl":
        if any(a <= b for a, b in zip(eps, eps[1:])):
            return None
        order = sorted(range(r + n), key=lambda i: -h[i])
        return EpsDeltaSequence(tuple("e" if i < r else "d" for i in order))
    if delta and delta[-1] <= 0:
        return None
    if any(v <= 0 for v in eps[:-1]) or any(abs(a) <= abs(b) for a, b in zip(eps, eps[1:])):
        return None
    if eps and eps[-1] < 0 and g.m % 2 == 1:
        return None
    order = sorted(range(r + n), key=lambda i: -abs(h[i]))
    tokens = tuple("d" if i >= r else ("-e" if h[i] < 0 else "e") for i in order)
    return _normalize_sequence(EpsDeltaSequence(tokens))


def borel_from_simple_roots(g: LieSuperalgebra, simple: Sequence[Weight]) -> BorelSubalgebra:
    """解 α(h) = 1（α 取遍单根），自由变量取 0"""
    r, n = g.split
    size = r + n
    rows = [list(s.coeffs) + [ONE] for s in simple]
    reduced, pivots = rref(rows, size + 1)
    if size in pivots:
        raise RejectError("单根系不相容")
    values = [ZERO] * size
    for row, p in zip(reduced, pivots):
        values[p] = row[size]
    borel = borel_from_coweight(g, values)
    if set(borel.simple_roots) != set(simple):
        raise RejectError("给出的根不是一个单根系")
    return borel


def conjugate_borel(borel: BorelSubalgebra, eps_perm: Sequence[int], delta_perm: Sequence[int] = ()) -> BorelSubalgebra:
    """
    偶 Weyl 群置换作用下的共轭 Borel：h' 的第 perm[i] 个分量取 h 的第 i 个分量

    Args:
        borel: 原 Borel
        eps_perm: ε 坐标的置换
        delta_perm: δ 坐标的置换，缺省为恒等
    """
    g = borel.algebra
    r, n = g.split
    delta_perm = list(delta_perm) or list(range(n))
    if sorted(eps_perm) != list(range(r)) or sorted(delta_perm) != list(range(n)):
        raise RejectError("置换的长度与代数不一致")
    h = borel.coweight.values
    values = [ZERO] * (r + n)
    for i, p in enumerate(eps_perm):
        values[p] = h[i]
    for j, p in enumerate(delta_perm):
        values[r + p] = h[r + j]
    return borel_from_coweight(g, values)


# ---------------------------------------------------------------- 标准 Borel 与共轭类


def standard_sequence(g: LieSuperalgebra) -> Optional[EpsDeltaSequence]:
    if g.kind == "gl":
        return EpsDeltaSequence(("e",) * g.m + ("d",) * g.n)
    if g.kind == "osp":
        r, n = g.split
        if g.m == 2:
            return EpsDeltaSequence(("e",) + ("d",) * n)
        return EpsDeltaSequence(("d",) * n + ("e",) * r)
    return None


def standard_coweight(g: LieSuperalgebra) -> List[Fraction]:
    """
    标准 Borel 的余权重：gl 为 ε^m δ^n，osp(2|2n) 为 εδ^n，其余 osp 为 δ^n ε^r，
    p(n) 取 (−1, …, −n)，q(n) 取 (n, …, 1)
    """
    if g.kind == "even":
        return standard_coweight(g.parent)
    seq = standard_sequence(g)
    if seq is not None:
        return _sequence_coweight(g, seq)
    r, _ = g.split
    if g.kind == "p":
        return [Fraction(-(i + 1)) for i in range(r)]
    return [Fraction(r - i) for i in range(r)]


@lru_cache(maxsize=None)
def standard_borel(g: LieSuperalgebra) -> BorelSubalgebra:
    if g.kind in ("gl", "osp"):
        return borel_from_sequence(g, standard_sequence(g))
    return borel_from_coweight(g, standard_coweight(g))


def _p_borels(g: LieSuperalgebra) -> List[BorelSubalgebra]:
    n = g.split[0]
    values = range(2 * n, -2 * n - 1, -1)
    candidates = sorted(itertools.combinations(values, n), key=lambda h: (sum(abs(x) for x in h), [-x for x in h]))
    seen = set()
    out = []
    for h in candidates:
        if any(x == 0 for x in h) or any(h[i] + h[j] == 0 for i in range(n) for j in range(i + 1, n)):
            continue
        pattern = tuple(h[i] + h[j] > 0 for i in range(n) for j in range(i, n))
        if pattern in seen:
            continue
        seen.add(pattern)
        out.append(borel_from_coweight(g, h))
    out.sort(key=lambda b: (-b.odd_dim, b.label))
    return out


@lru_cache(maxsize=None)
def _enumerate(g: LieSuperalgebra) -> Tuple[BorelSubalgebra, ...]:
    if g.kind == "gl":
        size = g.m + g.n
        out = []
        for pos in itertools.combinations(range(size), g.m):
            seq = EpsDeltaSequence(tuple("e" if i in pos else "d" for i in range(size)))
            out.append(borel_from_sequence(g, seq))
        return tuple(out)
    if g.kind == "osp":
        r, n = g.split
        out = []
        for pos in itertools.combinations(range(r + n), r):
            tokens = tuple("e" if i in pos else "d" for i in range(r + n))
            out.append(borel_from_sequence(g, EpsDeltaSequence(tokens)))
            if g.m % 2 == 0 and r and pos[-1] != r + n - 1:
                signed = list(tokens)
                signed[pos[-1]] = "-e"
                out.append(borel_from_sequence(g, EpsDeltaSequence(tuple(signed))))
        return tuple(out)
    if g.kind == "p":
        return tuple(_p_borels(g))
    return (standard_borel(g),)


def enumerate_borel_classes(g: LieSuperalgebra) -> List[BorelSubalgebra]:
    """
    每个共轭类取一个代表

    gl 取全部 εδ 序列；osp 在 m 为偶数时再给最后一个 ε 加符号（它不是最后一个符号时）；
    p(n) 按 {h_i + h_j : i ≤ j} 的符号模式去重；q(n)、偶代数和奇交换代数只有一类。
    """
    return list(_enumerate(g))


def max_odd_borel_dim(g: Union[LieSuperalgebra, RootDatum]) -> int:
    if isinstance(g, RootDatum):
        return g.odd_positive_dim
    return max(b.odd_dim for b in enumerate_borel_classes(g))


# ---------------------------------------------------------------- 奇反射


def _gram_of(g: Union[LieSuperalgebra, RootDatum, Gram]) -> Gram:
    if isinstance(g, (LieSuperalgebra, RootDatum)):
        return g.gram
    return g


def odd_reflection(g: Union[LieSuperalgebra, RootDatum, Gram], simple_roots: Sequence[Weight],
                   alpha: Weight) -> Tuple[Weight, ...]:
    """
    在迷向单根 α 处的奇反射：(β,α) ≠ 0 时 β ↦ β + α，α ↦ −α，其余不变

    Raises:
        RejectError: α 不是单根或不迷向
    """
    gram = _gram_of(g)
    if alpha not in simple_roots:
        raise RejectError(f"{alpha} 不是单根")
    if pairing(gram, alpha, alpha) != 0:
        raise RejectError(f"{alpha} 不是迷向根")
    out = []
    for beta in simple_roots:
        if beta == alpha:
            out.append(-alpha)
        elif pairing(gram, beta, alpha):
            out.append(beta + alpha)
        else:
            out.append(beta)
    return tuple(out)


def reflect_highest_weight(g: Union[LieSuperalgebra, RootDatum, Gram], lam: Weight, parity: int,
                           alpha: Weight) -> Tuple[Weight, int]:
    """
    L_b(λ) ≅ L_{b'}(λ)（(λ,α) = 0）或 ΠL_{b'}(λ − α)（(λ,α) ≠ 0）

    λ 含参数 t 时 (λ,α) 是 t 的一次式，只有恒为零才视作零；使它为零的特殊值用
    reflection_special_value 取得。
    """
    c, tc = pairing_linear(_gram_of(g), lam, alpha)
    if not c and not tc:
        return lam, parity
    return lam - alpha, 1 - parity


def reflection_special_value(g: Union[LieSuperalgebra, RootDatum, Gram], lam: Weight,
                             alpha: Weight) -> Optional[Fraction]:
    """(λ,α) 作为 t 的一次式的零点；不含 t 或恒为零时返回 None"""
    c, tc = pairing_linear(_gram_of(g), lam, alpha)
    if not tc:
        return None
    return -c / tc


def isotropic_simple_roots(g: Union[LieSuperalgebra, RootDatum], simple: Sequence[Weight]) -> List[Weight]:
    gram = _gram_of(g)
    return [a for a in simple if pairing(gram, a, a) == 0]


def transport_to_standard(g: LieSuperalgebra, borel: BorelSubalgebra, lam: Weight,
                          parity: int = 0) -> Tuple[Weight, int]:
    """
    沿奇反射把 L_b(λ) 迁移到标准 Borel，返回标准 Borel 下的 (最高权, 奇偶性)

    Raises:
        RejectError: b 与标准 Borel 不在同一个奇反射连通分支（偶部分不同）
    """
    target = frozenset(standard_borel(g).simple_roots)
    start = tuple(borel.simple_roots)
    if frozenset(start) == target:
        return lam, parity
    seen = {frozenset(start)}
    queue = deque([(start, lam, parity)])
    while queue:
        system, mu, p = queue.popleft()
        for alpha in isotropic_simple_roots(g, system):
            reflected = odd_reflection(g, system, alpha)
            key = frozenset(reflected)
            if key in seen:
                continue
            nu, q = reflect_highest_weight(g, mu, p, alpha)
            if key == target:
                return nu, q
            seen.add(key)
            queue.append((reflected, nu, q))
    raise RejectError(f"{borel.label} 不能经奇反射到达 {g.name} 的标准 Borel")


# ---------------------------------------------------------------- 支配性


def _nonneg_int(c: Fraction, tc: Fraction = ZERO) -> bool:
    return not tc and c.denominator == 1 and c >= 0


def _int(c: Fraction, tc: Fraction = ZERO) -> bool:
    return not tc and c.denominator == 1


def _decreasing_ints(values: Sequence[Fraction], tvalues: Sequence[Fraction]) -> bool:
    return all(_nonneg_int(a - b, ta - tb) for a, b, ta, tb in zip(values, values[1:], tvalues, tvalues[1:]))


def _osp_dominant(g: LieSuperalgebra, lam: Weight) -> bool:
    r, n = g.split
    s, ts = lam.eps, lam.t_eps or (ZERO,) * r
    t, tt = lam.delta, lam.t_delta or (ZERO,) * n
    if any(tt):
        return False
    if not all(_int(x) for x in t) or not _decreasing_ints(t, tt) or (n and t[-1] < 0):
        return False
    if g.m == 2:
        return True
    if any(ts):
        return False
    if not s:
        return True
    if not all((2 * x).denominator == 1 for x in s) or not all((x - s[0]).denominator == 1 for x in s):
        return False
    half = s[0].denominator == 2
    if g.m % 2 == 1:
        if any(a < b for a, b in zip(s, s[1:])) or s[-1] < 0:
            return False
    else:
        if any(a < b for a, b in zip(s[:-1], s[1:-1])) or (r >= 2 and s[-2] < abs(s[-1])):
            return False
    if not n:
        return True
    nonzero = r if half else sum(1 for x in s if x)
    return t[-1] >= nonzero


def is_dominant(g: Union[LieSuperalgebra, RootDatum], borel: Optional[BorelSubalgebra], lam: Weight) -> bool:
    """
    λ 是否为某个有限维不可约模关于 borel 的最高权

    gl、osp 先沿奇反射迁移到标准 Borel 再检验；p、q 只接受标准 Borel。
    λ 含参数 t 时给出一般 t 下的判断：整性条件要求 t 的系数为零。

    Raises:
        RejectError: 权重形状不对，或 p / q 给的不是标准 Borel
    """
    if isinstance(g, RootDatum):
        return g.is_dominant(lam)
    if lam.shape != g.split:
        raise RejectError(f"{g.name} 的权重形状应为 {g.split}，收到 {lam.shape}")
    if borel is not None and borel.algebra is not g:
        raise RejectError("Borel 不属于该代数")
    std = standard_borel(g)
    if borel is not None and not borel.same_as(std):
        if g.kind in ("gl", "osp"):
            lam, _ = transport_to_standard(g, borel, lam)
        else:
            raise RejectError(f"{g.name} 的支配性只对标准 Borel 判定")
    if g.kind == "gl":
        ts = lam.t_eps or (ZERO,) * g.m
        td = lam.t_delta or (ZERO,) * g.n
        return _decreasing_ints(lam.eps, ts) and _decreasing_ints(lam.delta, td)
    if g.kind == "osp":
        return _osp_dominant(g, lam)
    s, ts = lam.eps, lam.tcoeffs
    if g.kind == "p":
        return _decreasing_ints(s, ts)
    if g.kind == "q":
        if not _decreasing_ints(s, ts):
            return False
        for a, b, ta in zip(s, s[1:], ts):
            if a == b and (a or ta):
                return False
        return True
    if g.kind == "even":
        return all(_nonneg_int(*_coroot_value(g, lam, beta)) for beta in positive_even_roots(g))
    return lam.is_zero()


def _coroot_value(g, lam: Weight, beta: Weight) -> Tuple[Fraction, Fraction]:
    gram = _gram_of(g)
    c, tc = pairing_linear(gram, lam, beta)
    norm = pairing(gram, beta, beta)
    return 2 * c / norm, 2 * tc / norm


# ---------------------------------------------------------------- 偶部分维数


def positive_even_roots(g: Union[LieSuperalgebra, RootDatum]) -> List[Weight]:
    if isinstance(g, RootDatum):
        return g.positive_even_roots()
    h = standard_coweight(g)
    out = []
    for b in g.basis:
        if b.parity == 0 and b.root is not None and not b.root.is_zero() and b.root.level(h) > 0:
            if b.root not in out:
                out.append(b.root)
    return out


def weyl_dim_even(g: Union[LieSuperalgebra, RootDatum], lam: Weight) -> int:
    """
    偶约化代数 g₀ 的不可约模 L₀(λ) 的维数：∏_{β>0} (λ+ρ₀, β) / (ρ₀, β)

    每个偶根只落在一个单因子里，所以型的符号不影响比值。

    Raises:
        RejectError: λ 对 g₀ 不是支配整权（含参数时要求与每个偶根的配对为常数）
    """
    gram = _gram_of(g)
    roots = positive_even_roots(g)
    rho = Weight.zero(*lam.shape)
    for beta in roots:
        rho = rho + beta.scaled(HALF)
    dim = ONE
    for beta in roots:
        c, tc = _coroot_value(g, lam, beta)
        if not _nonneg_int(c, tc):
            raise RejectError(f"{lam} 对偶根 {beta} 不是支配整的")
        const = pairing(gram, lam.constant_part(), beta)
        rb = pairing(gram, rho, beta)
        dim *= (const + rb) / rb
    if dim.denominator != 1:
        raise RejectError(f"Weyl 维数公式给出非整数 {dim}")
    return int(dim)


# ---------------------------------------------------------------- 特征


def character_constants(g: Union[LieSuperalgebra, RootDatum]) -> Tuple[List[Weight], bool]:
    """
    偶特征格的生成元，以及是否存在奇特征（q(n) → ℂ^{0|1}）

    gl 为 Berezinian，p(n) 为 ω = Σε_i，osp 与例外代数没有。
    """
    if isinstance(g, RootDatum):
        return [], False
    if g.kind == "gl":
        return [Weight((ONE,) * g.m, (-ONE,) * g.n)], False
    if g.kind == "p":
        return [Weight((ONE,) * g.split[0], ())], False
    if g.kind == "q":
        return [], True
    if g.kind == "abelian":
        return [], True
    return [], False


def character_multiple(g: LieSuperalgebra, chi: Weight) -> Tuple[int, Fraction]:
    """
    把 χ 写成某个特征生成元的有理倍数，返回 (生成元下标, 倍数)；χ = 0 返回 (−1, 0)

    Raises:
        RejectError: χ 不是特征
    """
    if chi.has_parameter:
        raise RejectError("特征不能含参数")
    if chi.is_zero():
        return -1, ZERO
    gens, _ = character_constants(g)
    for k, gen in enumerate(gens):
        if gen.shape != chi.shape:
            continue
        idx = next(i for i, x in enumerate(gen.coeffs) if x)
        c = chi.coeffs[idx] / gen.coeffs[idx]
        if gen.scaled(c) == chi:
            return k, c
    raise RejectError(f"{chi} 不是 {g.name} 的特征")


# ---------------------------------------------------------------- hook 分拆


@dataclass(frozen=True)
class HookPartition:
    """
    (n|m)-hook 分拆：弱递减的非负整数列，满足 μ_{n+1} ≤ m
    """
    parts: Tuple[int, ...]
    n: int
    m: int

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts if x)
        if any(x < 0 for x in self.parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise RejectError(f"{self.parts} 不是分拆")
        if len(parts) > self.n and parts[self.n] > self.m:
            raise RejectError(f"{parts} 不满足 ({self.n}|{self.m})-hook 条件")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for x in self.parts if x > i) for i in range(self.parts[0]))


def hook_from_weight(g: LieSuperalgebra, lam: Weight) -> Tuple[HookPartition, bool]:
    """
    osp 的整支配权 λ = μ♮ 或 μ♮₋，返回 (μ, 是否为 μ♮₋)

    Raises:
        RejectError: λ 不是整支配权
    """
    if g.kind != "osp" or g.m == 2:
        raise RejectError("hook 分拆只描述 m ≠ 2 的 osp 整支配权")
    if lam.has_parameter or not is_dominant(g, None, lam) or any(x.denominator != 1 for x in lam.coeffs):
        raise RejectError(f"{lam} 不是 {g.name} 的整支配权")
    r, n = g.split
    s = [int(abs(x)) for x in lam.eps]
    negative = bool(r and lam.eps[-1] < 0)
    rows = [int(x) for x in lam.delta]
    depth = max(s) if s else 0
    rows += [sum(1 for x in s if x >= k) for k in range(1, depth + 1)]
    return HookPartition(tuple(rows), n, r), negative


def weight_from_hook(g: LieSuperalgebra, hook: HookPartition, negative: bool = False) -> Weight:
    r, n = g.split
    parts = list(hook.parts) + [0] * n
    delta = [Fraction(x) for x in parts[:n]]
    conj = hook.conjugate()
    eps = [Fraction(max((conj[i] if i < len(conj) else 0) - n, 0)) for i in range(r)]
    if negative:
        if not r or g.m % 2:
            raise RejectError("μ♮₋ 只在 m 为偶数时出现")
        eps[-1] = -eps[-1]
    return Weight(tuple(eps), tuple(delta))


# ---------------------------------------------------------------- 序列模式


SequencePattern = Callable[[EpsDeltaSequence], bool]


def pattern_gl_standard(seq: EpsDeltaSequence) -> bool:
    """GL_{m|n}：序列以 ε 结尾"""
    return seq.tokens[-1] != "d"


def pattern_s2gl(seq: EpsDeltaSequence) -> bool:
    """S²GL_{m|n}：第一个 ε 之后的每段 δ 长度都是偶数"""
    runs = seq.runs()
    seen_eps = False
    for kind, length in runs:
        if kind == "e":
            seen_eps = True
        elif seen_eps and length % 2:
            return False
    return True


def pattern_alternating(start: str) -> SequencePattern:
    """ΠS²GL_{n|n}（εδεδ⋯εδ）与 ΠS²GL_{n|n+1}（δεδε⋯εδ）"""
    def match(seq: EpsDeltaSequence) -> bool:
        kinds = ["d" if t == "d" else "e" for t in seq.tokens]
        return all(k == (start if i % 2 == 0 else _other(start)) for i, k in enumerate(kinds)) and kinds[-1] == "d"
    return match


def _other(kind: str) -> str:
    return "d" if kind == "e" else "e"


def pattern_osp_standard(m: int) -> SequencePattern:
    """OSP_{m|2n}：以 ε 开头；m = 2 时 (−ε)δⁿ 也可以"""
    def match(seq: EpsDeltaSequence) -> bool:
        return seq.tokens[0] == "e" or (m == 2 and seq.tokens[0] == "-e")
    return match


def pattern_pi_osp(seq: EpsDeltaSequence) -> bool:
    """ΠOSP_{m|2n}：以 δ 开头"""
    return seq.tokens[0] == "d"


def pattern_from_list(labels: Sequence[str]) -> SequencePattern:
    wanted = {str(EpsDeltaSequence.parse(x)) for x in labels}

    def match(seq: EpsDeltaSequence) -> bool:
        return str(seq) in wanted
    return match


PATTERNS: Dict[str, Callable[..., SequencePattern]] = {
    "gl-standard": lambda g: pattern_gl_standard,
    "s2gl": lambda g: pattern_s2gl,
    "pi-s2gl-nn": lambda g: pattern_alternating("e"),
    "pi-s2gl-n-n1": lambda g: pattern_alternating("d"),
    "osp-standard": lambda g: pattern_osp_standard(g.m),
    "pi-osp": lambda g: pattern_pi_osp,
}
