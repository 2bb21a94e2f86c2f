"""Output formatters for dyadicforms results.

Converts library results to the typed payloads in ``io.schema`` and renders
those as JSON or plain text. Serialization goes through Pydantic's
model_dump(mode='json') so enums and nested models come out as plain JSON.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Optional

from .constants import INFINITY
from .field import FieldElement, SquareClass, class_table
from .io.schema import (
    ClassesReport,
    ClassReport,
    CrosscheckPayload,
    DefectReport,
    DisagreementReport,
    FieldSummary,
    HilbertReport,
    InvariantsReport,
    LatticeReport,
    MessageReport,
    MinimalityReport,
    Payload,
    RepresentationReport,
    SharpReport,
    SpaceReport,
    TestingSetEntryReport,
    TestingSetReport,
    UniversalityReport,
)
from .io.loaders import ElementLiteral

if TYPE_CHECKING:
    from .field import FieldContext
    from .lattice import BongLattice, RepVerdict, ValidationResult
    from .universality import CrosscheckReport, RepresentationMatrix, TestingSetEntry, UniversalityVerdict

__all__ = [
    "field_summary",
    "lattice_report",
    "invariants_payload",
    "rejected_bong_payload",
    "representation_payload",
    "universality_payload",
    "testing_set_payload",
    "crosscheck_payload",
    "minimality_payload",
    "classes_payload",
    "defect_payload",
    "hilbert_payload",
    "sharp_payload",
    "to_json",
    "to_text",
]


def _literal(x: FieldElement | SquareClass) -> ElementLiteral:
    if isinstance(x, SquareClass):
        x = x.rep
    return ElementLiteral.model_validate(x.to_literal())


def _d(value: float) -> Optional[int]:
    return None if value == INFINITY else int(value)


def field_summary(ctx: FieldContext) -> FieldSummary:
    return FieldSummary(
        e=ctx.e,
        f=ctx.f,
        unram_poly=ctx.unram_poly,
        eis_poly=ctx.eis_poly,
        prec=ctx.default_prec,
        rho=_literal(ctx.rho),
        delta=_literal(ctx.delta),
    )


def lattice_report(lattice: BongLattice) -> LatticeReport:
    space = lattice.space
    return LatticeReport(
        bong=[_literal(x) for x in lattice.a],
        jordan=lattice.label,
        R=list(lattice.R),
        alpha=[str(a) for a in lattice.alpha],
        space=SpaceReport(dim=space.dim, det=_literal(space.det), hasse=space.hasse),
    )


def _message_reports(validation: Optional[ValidationResult]) -> list[MessageReport]:
    if validation is None:
        return []
    return [
        MessageReport(severity=m.severity.value, code=m.code, message=m.message, suggestion=m.suggestion)
        for m in validation.messages
    ]


def invariants_payload(lattice: BongLattice, validation: Optional[ValidationResult] = None) -> InvariantsReport:
    return InvariantsReport(
        field=field_summary(lattice.ctx),
        lattice=lattice_report(lattice),
        messages=_message_reports(validation),
    )


def rejected_bong_payload(ctx: FieldContext, validation: ValidationResult) -> InvariantsReport:
    """Invariants report for a BONG that failed ``check_bong``: messages only, no lattice."""
    return InvariantsReport(field=field_summary(ctx), messages=_message_reports(validation))


def representation_payload(ctx: FieldContext, verdict: RepVerdict) -> RepresentationReport:
    return RepresentationReport(
        field=field_summary(ctx),
        represented=verdict.represented,
        witness=verdict.witness,
        detail=verdict.detail,
    )


def universality_payload(ctx: FieldContext, n: int, verdict: UniversalityVerdict) -> UniversalityReport:
    return UniversalityReport(
        field=field_summary(ctx),
        universal=verdict.universal,
        n=n,
        method=verdict.method.value,
        witness=verdict.witness,
    )


def testing_set_payload(ctx: FieldContext, n: int, entries: list[TestingSetEntry]) -> TestingSetReport:
    return TestingSetReport(
        field=field_summary(ctx),
        n=n,
        count=len(entries),
        entries=[
            TestingSetEntryReport(
                nu=entry.nu,
                c=_literal(entry.c),
                jordan=entry.jordan_text,
                bong=[_literal(x) for x in entry.lattice.a],
                R=list(entry.lattice.R),
            )
            for entry in entries
        ],
    )


def crosscheck_payload(ctx: FieldContext, report: CrosscheckReport) -> CrosscheckPayload:
    return CrosscheckPayload(
        field=field_summary(ctx),
        n=report.n,
        seed=report.seed,
        count=report.count,
        methods=[m.value for m in report.methods],
        universal=report.universal,
        not_universal=report.not_universal,
        disagreements=[
            DisagreementReport(
                sample=d.sample,
                lattice=lattice_report(d.lattice),
                verdicts=d.verdicts,
                witnesses=d.witnesses,
            )
            for d in report.disagreements
        ],
    )


def minimality_payload(ctx: FieldContext, matrix: RepresentationMatrix) -> MinimalityReport:
    mismatches = [
        {"target": matrix.targets[i].name, "entry": matrix.entries[j].name, "represented": matrix.values[i][j]}
        for i, j in matrix.mismatches()
    ]
    return MinimalityReport(
        field=field_summary(ctx),
        n=matrix.n,
        minimal=not mismatches,
        size=len(matrix.entries),
        mismatches=mismatches,
    )


def classes_payload(ctx: FieldContext) -> ClassesReport:
    table = class_table(ctx)
    return ClassesReport(
        field=field_summary(ctx),
        count=len(table.classes),
        unit_count=len(table.unit_reps),
        classes=[
            ClassReport(index=c.index, rep=_literal(c), parity=c.parity, d=_d(c.dval))
            for c in table.classes
        ],
    )


def defect_payload(x: FieldElement, d: float) -> DefectReport:
    return DefectReport(field=field_summary(x.ctx), element=_literal(x), d=_d(d), is_square=d == INFINITY)


def hilbert_payload(a: FieldElement, b: FieldElement, symbol: int) -> HilbertReport:
    return HilbertReport(field=field_summary(a.ctx), a=_literal(a), b=_literal(b), symbol=symbol)


def sharp_payload(c: FieldElement, c_sharp: FieldElement, d_c: float, d_sharp: float) -> SharpReport:
    return SharpReport(
        field=field_summary(c.ctx),
        c=_literal(c),
        sharp=_literal(c_sharp),
        d_c=int(d_c),
        d_sharp=int(d_sharp),
    )


# =============================================================================
# Rendering
# =============================================================================


def to_json(payload: Payload, indent: int = 2) -> str:
    return json.dumps(payload.model_dump(mode='json'), indent=indent, ensure_ascii=False)


def _fmt_literal(lit: ElementLiteral) -> str:
    body = "(" + ",".join(str(d) for d in lit.digits) + ")"
    return body if lit.val == 0 else f"{body}·π^{lit.val}"


def _fmt_lattice(report: LatticeReport) -> list[str]:
    lines = []
    if report.jordan:
        lines.append(f"  Jordan: {report.jordan}")
    lines.append("  BONG:   ≺" + ", ".join(_fmt_literal(x) for x in report.bong) + "≻")
    lines.append(f"  R:      {report.R}")
    lines.append(f"  alpha:  [{', '.join(report.alpha)}]")
    s = report.space
    lines.append(f"  space:  dim={s.dim} det={_fmt_literal(s.det)} hasse={s.hasse:+d}")
    return lines


def to_text(payload: Payload) -> str:
    """Human-readable rendering of any payload."""
    f = payload.field
    lines = [f"Field e={f.e} f={f.f} prec={f.prec}  (hasse = {payload.hasse_convention})", ""]

    if isinstance(payload, InvariantsReport):
        if payload.lattice is None:
            lines.append("Lattice: rejected")
        else:
            lines.append("Lattice:")
            lines.extend(_fmt_lattice(payload.lattice))
        for m in payload.messages:
            lines.append(f"  {m.severity.upper()} [{m.code}] {m.message}")
    elif isinstance(payload, RepresentationReport):
        if payload.represented:
            lines.append("Represented: yes")
        else:
            lines.append(f"Represented: no, condition ({payload.witness['condition']}) at i={payload.witness['i']}")
            lines.append(f"  {payload.detail}")
    elif isinstance(payload, UniversalityReport):
        answer = "yes" if payload.universal else "no"
        lines.append(f"{payload.n}-universal ({payload.method}): {answer}")
        if payload.witness:
            lines.append(f"  failed: {payload.witness}")
    elif isinstance(payload, TestingSetReport):
        lines.append(f"Testing set for n={payload.n}: {payload.count} lattices")
        for entry in payload.entries:
            lines.append(f"  N_{entry.nu}({_fmt_literal(entry.c)})  {entry.jordan}  R={entry.R}")
    elif isinstance(payload, CrosscheckPayload):
        lines.append(f"Crosscheck n={payload.n} seed={payload.seed} count={payload.count}")
        lines.append(f"  methods: {', '.join(payload.methods)}")
        lines.append(f"  universal: {payload.universal}  not universal: {payload.not_universal}")
        lines.append(f"  disagreements: {len(payload.disagreements)}")
        for d in payload.disagreements:
            lines.append(f"  sample {d.sample}: {d.verdicts}")
            lines.extend(_fmt_lattice(d.lattice))
    elif isinstance(payload, MinimalityReport):
        lines.append(f"Minimality n={payload.n}: {'yes' if payload.minimal else 'no'} ({payload.size} lattices)")
        for m in payload.mismatches:
            lines.append(f"  {m['target']} vs {m['entry']}: represented={m['represented']}")
    elif isinstance(payload, ClassesReport):
        lines.append(f"{payload.count} square classes, {payload.unit_count} unit classes")
        for c in payload.classes:
            d = "inf" if c.d is None else str(c.d)
            lines.append(f"  [{c.index:3d}] {_fmt_literal(c.rep):24s} d={d}")
    elif isinstance(payload, DefectReport):
        d = "inf" if payload.d is None else str(payload.d)
        lines.append(f"d({_fmt_literal(payload.element)}) = {d}")
    elif isinstance(payload, HilbertReport):
        lines.append(f"({_fmt_literal(payload.a)}, {_fmt_literal(payload.b)}) = {payload.symbol:+d}")
    elif isinstance(payload, SharpReport):
        lines.append(f"c  = {_fmt_literal(payload.c)}  d = {payload.d_c}")
        lines.append(f"c# = {_fmt_literal(payload.sharp)}  d = {payload.d_sharp}")

    return "\n".join(lines)
