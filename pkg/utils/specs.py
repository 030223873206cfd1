"""
创建日期：2026年02月18日
介绍：命令行里的代数、权重字面量、Borel 和模描述的解析

模描述的语法：
    std | triv | adj | u11 | nabla
    pi:<spec> | dual:<spec> | sym2:<spec> | sym:<k>:<spec> | alt:<k>:<spec>
    kac:t=<有理数> | kac:<权重> | irrkac:<权重> | irr:<权重>
    thin-kac:w | thin-kac:-w | family:t=<有理数>
    rad:<最高权模> | top:<最高权模> | mod-soc:<spec>
其中 <最高权模> 是 kac:… 或 thin-kac:…。
权重字面量形如 "e:1,0;d:-1"，缺省的段按零处理。
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional, Union

from tools.borels import (
    BorelSubalgebra, borel_from_coweight, borel_from_sequence, standard_borel, standard_coweight,
)
from tools.highest_weight import (
    HighestWeightStructure, highest_weight_module, irreducible_quotient, kac_module_typeI, nabla_explicit,
    q_family, radical, thin_kac_p,
)
from tools.modules import (
    Representation, adjoint_module, alt_power, dual, parity_shift, quotient_module, socle, standard_module,
    sym_power, trivial_module, u11_module,
)
from tools.root_data import RootDatum, exceptional_root_datum
from tools.superalgebras import LieSuperalgebra, build_algebra
from tools.weights import Weight
from utils.errors import ParseError, RejectError

logger = logging.getLogger(__name__)

EXCEPTIONAL = {"g12": "G12", "f13": "F13", "d21a": "D21a"}


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"无法解析有理数 {text!r}") from exc


def build_from_args(kind: str, m: int = 0, n: int = 0,
                    alpha: Optional[str] = None) -> Union[LieSuperalgebra, RootDatum]:
    """
    按命令行参数构造代数；例外代数返回根数据

    Raises:
        ParseError: α 无法解析
        RejectError: 参数不合法
    """
    kind = kind.lower()
    if kind in EXCEPTIONAL:
        value = parse_rational(alpha) if alpha is not None else None
        return exceptional_root_datum(EXCEPTIONAL[kind], value)
    if kind in ("p", "q"):
        return build_algebra(kind, n or m)
    return build_algebra(kind, m, n)


def parse_weight(text: str, g: LieSuperalgebra) -> Weight:
    """
    "e:1,0;d:-1" → Weight；段的长度必须与代数的 ε、δ 个数一致

    Raises:
        ParseError: 语法错误或长度不符
    """
    r, n = g.split
    parts = {"e": [Fraction(0)] * r, "d": [Fraction(0)] * n}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, body = chunk.partition(":")
        key = key.strip().lower()
        if not sep or key not in parts:
            raise ParseError(f"权重段 {chunk!r} 应写成 e:… 或 d:…")
        values = [parse_rational(x) for x in body.split(",") if x.strip()]
        if len(values) != len(parts[key]):
            raise ParseError(f"{g.name} 的 {key} 段需要 {len(parts[key])} 个系数，收到 {len(values)} 个")
        parts[key] = values
    return Weight(tuple(parts["e"]), tuple(parts["d"]))


def parse_borel(text: Optional[str], g: LieSuperalgebra) -> BorelSubalgebra:
    """
    "st"（或省略）、"st-op"、"h=3,2,1" 形式的余权重，或者 gl / osp 的 εδ 序列
    """
    if text is None or text.strip() in ("", "st"):
        return standard_borel(g)
    text = text.strip()
    if text == "st-op":
        return borel_from_coweight(g, [-x for x in standard_coweight(g)])
    if text.startswith("h="):
        return borel_from_coweight(g, [parse_rational(x) for x in text[2:].split(",")])
    if g.kind not in ("gl", "osp"):
        raise ParseError(f"{g.name} 没有 εδ 序列，请用 st、st-op 或 h=…")
    return borel_from_sequence(g, text)


def _param(body: str) -> Fraction:
    key, sep, value = body.partition("=")
    if not sep or key.strip() != "t":
        raise ParseError(f"参数应写成 t=<有理数>，收到 {body!r}")
    return parse_rational(value)


def _leading_int(rest: str, head: str) -> tuple:
    k, sep, inner = rest.partition(":")
    if not sep:
        raise ParseError(f"{head} 需要写成 {head}:<次数>:<模>")
    try:
        return int(k), inner
    except ValueError as exc:
        raise ParseError(f"{head} 的次数 {k!r} 不是整数") from exc


def parse_structure(spec: str, g: LieSuperalgebra) -> HighestWeightStructure:
    """
    kac:t=<有理数>、kac:<权重> 或 thin-kac:±w，保留最高权数据（取根和顶时要用）

    Raises:
        ParseError: 不是这几种描述
    """
    head, _, rest = spec.strip().partition(":")
    head = head.lower()
    if head == "kac":
        if rest.strip().startswith("t="):
            lam = Weight.unit(*g.split, 0, _param(rest))
        else:
            lam = parse_weight(rest, g)
        return kac_module_typeI(g, lam)
    if head == "thin-kac":
        sign = rest.strip()
        if sign not in ("w", "-w"):
            raise ParseError("thin-kac 只接受 w 或 -w")
        if g.kind != "p":
            raise RejectError("thin-kac 只对 p(n) 有定义")
        return thin_kac_p(g.n, "+" if sign == "w" else "-")
    raise ParseError(f"{spec!r} 不是带最高权数据的模（kac:… 或 thin-kac:…）")


def parse_module(spec: str, g: LieSuperalgebra) -> Representation:
    """
    按模描述构造表示

    Args:
        spec: 模描述
        g: 代数（u11 会自行构造所需的代数）

    Raises:
        ParseError: 语法错误
        RejectError: 模对该代数没有意义
    """
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    head = head.lower()
    if head == "std":
        return standard_module(g)
    if head == "triv":
        return trivial_module(g)
    if head == "adj":
        return adjoint_module(g)
    if head == "u11":
        return u11_module()
    if head == "nabla":
        return nabla_explicit()
    if head == "pi":
        return parity_shift(parse_module(rest, g))
    if head == "dual":
        return dual(parse_module(rest, g))
    if head == "sym2":
        return sym_power(parse_module(rest, g), 2)
    if head in ("sym", "alt"):
        k, inner = _leading_int(rest, head)
        inner_rep = parse_module(inner, g)
        return sym_power(inner_rep, k) if head == "sym" else alt_power(inner_rep, k)
    if head in ("kac", "thin-kac"):
        return parse_structure(spec, g).rep
    if head == "irrkac":
        return irreducible_quotient(kac_module_typeI(g, parse_weight(rest, g)))
    if head == "irr":
        return highest_weight_module(g, None, parse_weight(rest, g))
    if head == "rad":
        return radical(parse_structure(rest, g))
    if head == "top":
        return irreducible_quotient(parse_structure(rest, g))
    if head == "mod-soc":
        inner = parse_module(rest, g)
        return quotient_module(inner, socle(inner, standard_borel(inner.algebra)))
    if head == "family":
        if g.kind != "q":
            raise RejectError("family 只对 q(n) 有定义")
        return q_family(_param(rest), g.n)
    raise ParseError(f"无法识别的模描述 {spec!r}")
