"""
创建日期：2026年02月12日
介绍：权重与超维数

权重记为 ε 系数与 δ 系数两段，外加一个可选的线性参数部分（系数乘以 t）。
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from utils.errors import RejectError
from utils.linalg import ZERO, to_fraction

Gram = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class SuperDim:
    even: int
    odd: int

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"

    @property
    def total(self) -> int:
        return self.even + self.odd

    def shifted(self) -> "SuperDim":
        return SuperDim(self.odd, self.even)

    def __add__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even - other.even, self.odd - other.odd)

    @classmethod
    def parse(cls, text: str) -> "SuperDim":
        body = text.strip().strip("()")
        even, odd = body.split("|")
        return cls(int(even), int(odd))


def _fractions(values: Sequence) -> Tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in values)


def _format_coefficient(c: Fraction, tc: Fraction) -> str:
    if not tc:
        if c == 1:
            return ""
        if c == -1:
            return "-"
        return str(c)
    tpart = "t" if tc == 1 else "-t" if tc == -1 else f"{tc}t"
    if not c:
        return tpart
    sign = "+" if tc > 0 else ""
    return f"({c}{sign}{tpart})"


@dataclass(frozen=True)
class Weight:
    """
    h* 中的权重。eps / delta 是常数部分，t_eps / t_delta 是参数 t 的系数；
    没有参数时两者都规范成空元组，保证相等比较与哈希只看真实内容。
    """
    eps: Tuple[Fraction, ...] = ()
    delta: Tuple[Fraction, ...] = ()
    t_eps: Tuple[Fraction, ...] = ()
    t_delta: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        eps = _fractions(self.eps)
        delta = _fractions(self.delta)
        t_eps = _fractions(self.t_eps)
        t_delta = _fractions(self.t_delta)
        if any(t_eps) or any(t_delta):
            t_eps = t_eps + (ZERO,) * (len(eps) - len(t_eps))
            t_delta = t_delta + (ZERO,) * (len(delta) - len(t_delta))
            if len(t_eps) != len(eps) or len(t_delta) != len(delta):
                raise RejectError("参数部分的长度与权重不一致")
        else:
            t_eps, t_delta = (), ()
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "t_eps", t_eps)
        object.__setattr__(self, "t_delta", t_delta)

    # ---- 构造
    @classmethod
    def zero(cls, r: int, n: int) -> "Weight":
        return cls((ZERO,) * r, (ZERO,) * n)

    @classmethod
    def unit(cls, r: int, n: int, index: int, value=1) -> "Weight":
        """第 index 个坐标（先 ε 后 δ）为 value 的权重"""
        coeffs = [ZERO] * (r + n)
        coeffs[index] = to_fraction(value)
        return cls.from_coeffs(coeffs, r)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, split: int, tcoeffs: Optional[Sequence] = None) -> "Weight":
        coeffs = list(coeffs)
        tco = list(tcoeffs) if tcoeffs is not None else []
        return cls(tuple(coeffs[:split]), tuple(coeffs[split:]), tuple(tco[:split]), tuple(tco[split:]))

    # ---- 访问
    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.eps), len(self.delta)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self.eps + self.delta

    @property
    def tcoeffs(self) -> Tuple[Fraction, ...]:
        if not self.has_parameter:
            return (ZERO,) * (len(self.eps) + len(self.delta))
        return self.t_eps + self.t_delta

    @property
    def has_parameter(self) -> bool:
        return bool(self.t_eps or self.t_delta)

    def is_zero(self) -> bool:
        return not any(self.coeffs) and not self.has_parameter

    def _check_shape(self, other: "Weight"):
        if self.shape != other.shape:
            raise RejectError(f"权重形状不一致: {self.shape} 与 {other.shape}")

    # ---- 运算
    def __add__(self, other: "Weight") -> "Weight":
        self._check_shape(other)
        return Weight.from_coeffs(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], len(self.eps),
            [a + b for a, b in zip(self.tcoeffs, other.tcoeffs)],
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return self.scaled(-1)

    def scaled(self, c) -> "Weight":
        c = to_fraction(c)
        return Weight.from_coeffs([c * a for a in self.coeffs], len(self.eps), [c * a for a in self.tcoeffs])

    def evaluate(self, t) -> "Weight":
        """把参数 t 代入具体有理数"""
        if not self.has_parameter:
            return self
        t = to_fraction(t)
        return Weight.from_coeffs([a + t * b for a, b in zip(self.coeffs, self.tcoeffs)], len(self.eps))

    def constant_part(self) -> "Weight":
        return Weight(self.eps, self.delta)

    def parameter_part(self) -> "Weight":
        return Weight(self.t_eps or (ZERO,) * len(self.eps), self.t_delta or (ZERO,) * len(self.delta))

    def level(self, coweight: Sequence[Fraction]) -> Fraction:
        """在余权重上的取值（只看常数部分）"""
        return sum((a * h for a, h in zip(self.coeffs, coweight)), ZERO)

    def sort_key(self) -> Tuple:
        return (self.coeffs, self.tcoeffs)

    # ---- 展示
    def format(self, names: Optional[Sequence[str]] = None) -> str:
        r, n = self.shape
        if names is None:
            names = [f"ε{i + 1}" for i in range(r)] + [f"δ{j + 1}" for j in range(n)]
        terms = []
        for name, c, tc in zip(names, self.coeffs, self.tcoeffs):
            if not c and not tc:
                continue
            coeff = _format_coefficient(c, tc)
            term = f"{coeff}{name}"
            if terms and not term.startswith("-"):
                term = "+" + term
            terms.append(term)
        return "".join(terms) or "0"

    def __str__(self) -> str:
        return self.format()

    def to_json(self) -> Dict:
        data = {"e": [str(x) for x in self.eps], "d": [str(x) for x in self.delta]}
        if self.has_parameter:
            data["t"] = {"e": [str(x) for x in self.t_eps], "d": [str(x) for x in self.t_delta]}
        return data


def diagonal_gram(values: Sequence) -> Gram:
    vals = _fractions(values)
    return tuple(tuple(v if i == j else ZERO for j in range(len(vals))) for i, v in enumerate(vals))


def standard_gram(r: int, n: int) -> Gram:
    """(ε_i, ε_j) = δ_ij，(δ_i, δ_j) = −δ_ij"""
    return diagonal_gram([1] * r + [-1] * n)


def _bilinear(gram: Gram, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    total = ZERO
    for i, x in enumerate(a):
        if x:
            row = gram[i]
            for j, y in enumerate(b):
                if y and row[j]:
                    total += x * row[j] * y
    return total


def pairing(gram: Gram, a: Weight, b: Weight) -> Fraction:
    """不含参数的权重之间的双线性型"""
    if a.has_parameter or b.has_parameter:
        raise RejectError("含参数的权重请使用 pairing_linear")
    return _bilinear(gram, a.coeffs, b.coeffs)


def pairing_linear(gram: Gram, a: Weight, b: Weight) -> Tuple[Fraction, Fraction]:
    """
    双线性型作为 t 的一次式，返回 (常数项, t 的系数)

    Raises:
        RejectError: 两个权重都含参数时结果不是一次式
    """
    if a.has_parameter and b.has_parameter:
        raise RejectError("两个权重都含参数，配对不是 t 的一次式")
    const = _bilinear(gram, a.coeffs, b.coeffs)
    tcoef = _bilinear(gram, a.tcoeffs, b.coeffs) + _bilinear(gram, a.coeffs, b.tcoeffs)
    return const, tcoef
