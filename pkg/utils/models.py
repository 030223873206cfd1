"""
创建日期：2026年02月18日
介绍：命令行报告的数据模型。JSON 与 Markdown 都从这些模型渲染
"""
from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class WeightEntry(BaseModel):
    weight: Dict[str, Any]
    even_mult: int
    odd_mult: int


class RepresentationSummary(BaseModel):
    algebra: str
    superdim: str
    provenance: str
    weights: List[WeightEntry] = Field(default_factory=list)

    @classmethod
    def from_rep(cls, rep) -> "RepresentationSummary":
        return cls(**rep.to_json())


class StabilizerModel(BaseModel):
    superdim: str
    dim: int
    closed: bool
    hint: str = ""


class SphericityReportModel(BaseModel):
    """单个 Borel 上的判定"""
    module: str
    borel: str
    verdict: str
    method: str
    rank: int
    dim: int
    exact: bool = True
    witness: Optional[List[str]] = None
    stabilizer: Optional[StabilizerModel] = None

    @classmethod
    def from_report(cls, module: str, report, stab=None) -> "SphericityReportModel":
        data = report.to_json()
        return cls(module=module, exact=report.exact,
                   stabilizer=StabilizerModel(**stab.to_json()) if stab is not None else None, **data)


class CheckReport(BaseModel):
    """check 子命令的输出"""
    algebra: str
    module: RepresentationSummary
    numerically_spherical: bool
    reports: List[SphericityReportModel]
    signature: Dict[str, Any] = Field(default_factory=dict)
    hint: str = ""

    @property
    def spherical_borels(self) -> List[str]:
        return [r.borel for r in self.reports if r.verdict == "spherical"]

    def to_markdown(self) -> str:
        lines = [
            f"## {self.module.provenance}  ({self.algebra}, 超维数 {self.module.superdim})",
            "",
            f"数值球：{'是' if self.numerically_spherical else '否'}",
            "",
            "| Borel | 判定 | 方法 | 秩 | 稳定子 |",
            "|---|---|---|---|---|",
        ]
        for r in self.reports:
            stab = r.stabilizer.superdim if r.stabilizer else ""
            lines.append(f"| {r.borel} | {r.verdict} | {r.method} | {r.rank}/{r.dim} | {stab} |")
        if self.hint:
            lines += ["", f"等价提示：{self.hint}"]
        return "\n".join(lines)


class MonoidReportModel(BaseModel):
    module: str
    borel: str
    max_degree: int
    generators: List[str]
    found: List[str]
    missing: List[str]
    unexpected: List[str]
    multiplicity_violations: List[str]
    matches: bool
    closure_violations: List[List[str]] = Field(default_factory=list)
    note: str = ""

    def to_markdown(self) -> str:
        lines = [
            f"## {self.module} / {self.borel}  (D={self.max_degree})",
            "",
            f"- 声明：⟨{', '.join(self.generators)}⟩",
            f"- 计算：{', '.join(self.found) or '∅'}",
            f"- 一致：{'是' if self.matches else '否'}",
        ]
        if self.missing:
            lines.append(f"- 缺少：{', '.join(self.missing)}")
        if self.unexpected:
            lines.append(f"- 多出：{', '.join(self.unexpected)}")
        if self.note:
            lines.append(f"- 备注：{self.note}")
        return "\n".join(lines)


class RowResult(BaseModel):
    """金标准表格中的一行"""
    key: str
    cite: str
    ok: bool
    expected: Any = None
    actual: Any = None
    known_discrepancy: bool = False
    note: str = ""


class TableReport(BaseModel):
    table: str
    rows: List[RowResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> List[RowResult]:
        return [r for r in self.rows if not r.ok]

    @property
    def discrepancies(self) -> List[RowResult]:
        return [r for r in self.rows if r.known_discrepancy]

    def to_markdown(self) -> str:
        lines = [f"## {self.table}: {'PASS' if self.ok else 'FAIL'}", "",
                 "| 行 | 出处 | 结果 | 期望 | 实际 |", "|---|---|---|---|---|"]
        for r in self.rows:
            mark = "PASS" if r.ok else "FAIL"
            if r.known_discrepancy:
                mark += "（已知出入）"
            lines.append(f"| {r.key} | {r.cite} | {mark} | {_cell(r.expected)} | {_cell(r.actual)} |")
        if self.discrepancies:
            lines += ["", f"已知出入 {len(self.discrepancies)} 行：{', '.join(r.key for r in self.discrepancies)}"]
        return "\n".join(lines)


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value) or "∅"
    return "" if value is None else str(value)


def render(model: BaseModel, fmt: str = "json") -> str:
    """json：字段顺序固定、缩进 2；md：模型自带的 to_markdown"""
    if fmt == "md":
        return model.to_markdown()
    return model.model_dump_json(indent=2)
