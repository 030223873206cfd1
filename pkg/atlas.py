"""
创建日期：2026年02月18日
介绍：命令行入口 - check / table / monoid 三个子命令

退出码：0 正常；1 表格有不一致的行或其他错误；2 描述无法解析或前置条件不满足；
3 精确校验失败；4 要求球模却收到非球模。
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from tools.borels import BorelSubalgebra
from tools.invariants import MONOID_ROWS, format_zeta, monoid_closure_violations, weight_monoid
from tools.modules import Representation, verify_representation
from tools.root_data import RootDatum
from tools.sphericity import (
    equivalence_signature, is_numerically_spherical, is_spherical, spherical_borel_scan, stabilizer,
)
from tools.tables import equivalence_hint, list_tables, run_table
from utils.config import get_settings, set_config_path
from utils.errors import AtlasError, RejectError, VerificationError
from utils.models import (
    CheckReport, MonoidReportModel, RepresentationSummary, SphericityReportModel, TableReport, render,
)
from utils.specs import build_from_args, parse_borel, parse_module

logger = logging.getLogger("superatlas")


def _signature_json(rep: Representation) -> dict:
    sig = equivalence_signature(rep)
    weights = ["(" + ",".join(str(x) for x in key[0]) + ")" for key in sig["weights"]]
    return {"superdim": sig["superdim"], "image_dim": sig["image_dim"], "weights": weights,
            "heuristic": True}


def _classical(algebra: str, m: int, n: int, alpha: Optional[str]):
    g = build_from_args(algebra, m, n, alpha)
    if isinstance(g, RootDatum):
        raise RejectError(f"{g.name} 只有根数据，请用 table exceptional 查看候选权")
    return g


class AtlasRunner:
    """把解析好的参数交给库函数，得到可渲染的报告"""

    def __init__(self, jobs: Optional[int] = None):
        self.jobs = jobs if jobs is not None else get_settings().scan.jobs

    def check(self, algebra: str, m: int, n: int, module: str, borel: Optional[str] = None,
              scan: bool = False, alpha: Optional[str] = None) -> CheckReport:
        g = _classical(algebra, m, n, alpha)
        rep = parse_module(module, g)
        result = verify_representation(rep)
        if not result:
            raise VerificationError(f"{rep.label}: {result.message}")
        if scan:
            pairs = spherical_borel_scan(rep, self.jobs)
        else:
            b: BorelSubalgebra = parse_borel(borel, g)
            pairs = [(b, is_spherical(rep, b))]
        reports = []
        for b, report in pairs:
            stab = stabilizer(rep, report.witness) if report.spherical else None
            reports.append(SphericityReportModel.from_report(module, report, stab))
        hint = equivalence_hint(rep) if g.kind == "q" else ""
        return CheckReport(algebra=g.name, module=RepresentationSummary.from_rep(rep),
                           numerically_spherical=is_numerically_spherical(rep), reports=reports,
                           signature=_signature_json(rep), hint=hint)

    def table(self, table_id: str, max_degree: Optional[int] = None) -> TableReport:
        return run_table(table_id, self.jobs, max_degree)

    def monoid(self, algebra: Optional[str] = None, m: int = 0, n: int = 0, module: Optional[str] = None,
               borel: Optional[str] = None, max_degree: Optional[int] = None, row: Optional[str] = None,
               alpha: Optional[str] = None) -> MonoidReportModel:
        generators = []
        note = ""
        if row is not None:
            spec = next((r for r in MONOID_ROWS if r.key == row), None)
            if spec is None:
                raise RejectError(f"没有名为 {row} 的行（可选：{', '.join(r.key for r in MONOID_ROWS)}）")
            algebra, m, n = spec.algebra
            module, borel, note = spec.module, spec.borel, spec.note
        if algebra is None or module is None:
            raise RejectError("monoid 需要 --row，或者同时给出 --algebra 与 --module")
        g = _classical(algebra, m, n, alpha)
        if row is not None:
            generators = spec.generator_weights(g.split[0])
        elif not note:
            note = "未声明生成元，只列出计算结果"
        rep = parse_module(module, g)
        report = weight_monoid(rep, parse_borel(borel, g), max_degree, generators)
        data = report.to_json()
        closure = [[format_zeta(*a), format_zeta(*b)] for a, b in monoid_closure_violations(report)]
        return MonoidReportModel(closure_violations=closure, note=note, **data)


# ---------------------------------------------------------------- 子命令


def cmd_check(args: argparse.Namespace) -> int:
    runner = AtlasRunner(args.jobs)
    report = runner.check(args.algebra, args.m, args.n, args.module, args.borel, args.scan, args.alpha)
    print(render(report, args.format))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.list or not args.table:
        print("\n".join(list_tables()))
        return 0
    runner = AtlasRunner(args.jobs)
    report = runner.table(args.golden or args.table, args.max_degree)
    print(render(report, args.format))
    return 0 if report.ok else 1


def cmd_monoid(args: argparse.Namespace) -> int:
    runner = AtlasRunner(args.jobs)
    report = runner.monoid(args.algebra, args.m, args.n, args.module, args.borel, args.max_degree,
                           args.row, args.alpha)
    print(render(report, args.format))
    return 0


def _add_algebra_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--algebra", required=required, choices=["gl", "osp", "p", "q", "g12", "f13", "d21a"])
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, default=0, help="osp(m|2n) 的 n；p(n)、q(n) 的秩")
    p.add_argument("--alpha", help="D(2,1;α) 的参数，写成 p/q")
    p.add_argument("--module", required=required, help="模描述，例如 pi:sym2:std、kac:t=1/2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superatlas", description="李超代数球表示的精确复核")
    parser.add_argument("--config", help="配置文件，默认 ./config.yml")
    parser.add_argument("--log-level", help="覆盖配置中的 log_level")
    parser.add_argument("--format", choices=["json", "md"], default="json")
    parser.add_argument("--jobs", type=int, help="并行进程数")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="判定一个模对某个 Borel（或所有 Borel 类）是否为球的")
    _add_algebra_args(check)
    group = check.add_mutually_exclusive_group()
    group.add_argument("--borel", help="εδ 序列、st、st-op 或 h=…")
    group.add_argument("--scan", action="store_true", help="扫描所有 Borel 类")
    check.set_defaults(func=cmd_check)

    table = sub.add_parser("table", help="按金标准表逐行复算")
    table.add_argument("table", nargs="?", help="表 id")
    table.add_argument("--golden", help="金标准文件路径，优先于表 id")
    table.add_argument("--max-degree", type=int, help="覆盖权幺半群的次数上限")
    table.add_argument("--list", action="store_true", help="列出可用的表")
    table.set_defaults(func=cmd_table)

    monoid = sub.add_parser("monoid", help="计算 S•V* 的权幺半群的低次截断")
    _add_algebra_args(monoid, required=False)
    monoid.add_argument("--borel", help="εδ 序列、st、st-op 或 h=…")
    monoid.add_argument("--row", help="直接取权幺半群表中的一行")
    monoid.add_argument("--max-degree", type=int)
    monoid.set_defaults(func=cmd_monoid)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        set_config_path(args.config)
    level = args.log_level or get_settings().log_level
    logging.basicConfig(level=level.upper(), format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        return args.func(args)
    except AtlasError as exc:
        logger.error("%s", exc)
        print(f"错误：{exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
