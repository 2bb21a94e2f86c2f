"""
JSON input for fields, elements and lattices.

Uses Pydantic V2 for validation and enum coercion. A field spec looks like

    {"e": 2, "f": 1, "eis_poly": [[-2], [0], [1]], "prec": 24}

elements are either digit literals {"val": v, "digits": [...]} or decimal
strings such as "17" and "-1/4", and a lattice is either a block

    {"kind": "concat", "blocks": [{"kind": "H"}, {"kind": "unary", "a": "3"}]}

or a bare BONG {"bong": [...]} (the form every lattice report carries, so
output re-parses to an equal lattice).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..enums import LatticeKind, OutputFormat
from ..errors import BadParams
from ..field import FieldContext, FieldElement, make_field
from ..lattice import BongLattice, LatticeDescriptor, make_block


class FieldSpec(BaseModel):
    """A dyadic local field.

    unram_poly is little-endian bits of an irreducible degree-f polynomial over
    GF(2); eis_poly lists e+1 coefficients (constant term first), each a list
    of t-coordinates or a bare integer.
    """
    model_config = ConfigDict(extra='ignore')

    e: int = Field(default=1, ge=1, description="Ramification index")
    f: int = Field(default=1, ge=1, description="Residue degree")
    unram_poly: Optional[list[int]] = None
    eis_poly: Optional[list[list[int]]] = None
    prec: Optional[int] = Field(default=None, ge=4, description="Absolute pi-adic precision")

    @field_validator('eis_poly', mode='before')
    @classmethod
    def coerce_eis_poly(cls, v):
        if v is None:
            return None
        return [[c] if isinstance(c, int) else c for c in v]

    @field_validator('unram_poly')
    @classmethod
    def check_bits(cls, v):
        if v is not None and any(b not in (0, 1) for b in v):
            raise ValueError("unram_poly entries must be 0 or 1")
        return v

    @model_validator(mode='after')
    def check_lengths(self):
        if self.unram_poly is not None and len(self.unram_poly) != self.f + 1:
            raise ValueError(f"unram_poly needs {self.f + 1} bits for f={self.f}")
        if self.eis_poly is not None and len(self.eis_poly) != self.e + 1:
            raise ValueError(f"eis_poly needs {self.e + 1} coefficients for e={self.e}")
        return self

    def to_context(self, prec_override: Optional[int] = None) -> FieldContext:
        prec = prec_override if prec_override is not None else self.prec
        return make_field(self.e, self.f, self.unram_poly, self.eis_poly, prec)


class ElementLiteral(BaseModel):
    """pi^val * sum_j [digits_j] pi^j."""
    model_config = ConfigDict(extra='ignore')

    val: int
    digits: list[int]


ElementInput = Union[ElementLiteral, int, str]


def parse_element(ctx: FieldContext, value: ElementInput | dict[str, Any] | FieldElement) -> FieldElement:
    """Embed an element literal, an integer or a rational string in ``ctx``.

    Raises:
        BadParams: the value is not a literal or a rational number
    """
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, dict):
        value = ElementLiteral.model_validate(value)
    if isinstance(value, ElementLiteral):
        try:
            return ctx.from_digits(value.val, value.digits)
        except ValueError as exc:
            raise BadParams(str(exc)) from None
    if isinstance(value, bool):
        raise BadParams(f"not a field element: {value!r}")
    if isinstance(value, int):
        return ctx.from_int(value)
    try:
        q = Fraction(value.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise BadParams(f"not a field element: {value!r}") from None
    return ctx.from_rational(q.numerator, q.denominator)


class LatticeSpec(BaseModel):
    """A lattice as a block description or a literal BONG."""
    model_config = ConfigDict(extra='ignore')

    kind: LatticeKind = LatticeKind.BONG_LITERAL
    bong: Optional[list[ElementInput]] = None
    a: Optional[ElementInput] = None
    b: Optional[ElementInput] = None
    delta: Optional[ElementInput] = None
    kappa: Optional[ElementInput] = None
    nu: Optional[int] = Field(default=None, ge=1, le=2)
    blocks: Optional[list["LatticeSpec"]] = None

    @field_validator('kind', mode='before')
    @classmethod
    def coerce_kind(cls, v):
        if isinstance(v, str):
            for kind in LatticeKind:
                if kind.value.lower() == v.lower():
                    return kind
        return v

    @model_validator(mode='after')
    def check_params(self):
        required = {
            LatticeKind.BONG_LITERAL: ('bong',),
            LatticeKind.UNARY: ('a',),
            LatticeKind.BINARY_DIAG: ('a', 'b'),
            LatticeKind.DEFECT_BINARY: ('delta', 'nu'),
            LatticeKind.TERNARY_KAPPA: ('delta',),
            LatticeKind.CONCAT: ('blocks',),
        }.get(self.kind, ())
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind.value} needs {', '.join(missing)}")
        return self

    def to_descriptor(self, ctx: FieldContext) -> LatticeDescriptor:
        params: dict[str, Any] = {}
        if self.bong is not None:
            params['a'] = [parse_element(ctx, x) for x in self.bong]
        for name in ('a', 'b', 'delta', 'kappa'):
            value = getattr(self, name)
            if value is not None:
                params[name] = parse_element(ctx, value)
        if self.nu is not None:
            params['nu'] = self.nu
        if self.blocks is not None:
            params['blocks'] = [block.to_descriptor(ctx) for block in self.blocks]
        return LatticeDescriptor(self.kind, params)

    def build(self, ctx: FieldContext) -> BongLattice:
        return make_block(ctx, self.to_descriptor(ctx))


class CliConfig(BaseModel):
    """Options shared by every subcommand."""
    model_config = ConfigDict(extra='ignore')

    field_spec: FieldSpec = Field(default_factory=FieldSpec)
    output: OutputFormat = OutputFormat.JSON
    seed: int = 0
    prec_override: Optional[int] = Field(default=None, ge=4)
    verbose: int = Field(default=0, ge=0)

    @field_validator('output', mode='before')
    @classmethod
    def coerce_output(cls, v):
        if isinstance(v, str):
            return OutputFormat(v.lower())
        return v

    def context(self) -> FieldContext:
        return self.field_spec.to_context(self.prec_override)


def _read_json(source: Union[str, Path]) -> Any:
    """Parse a path to a JSON file, or inline JSON text."""
    text = str(source)
    path = Path(text)
    if not text.lstrip().startswith(('{', '[')) and path.exists():
        with open(path, 'r') as f:
            return json.load(f)
    if text.lstrip().startswith(('{', '[')):
        return json.loads(text)
    raise FileNotFoundError(f"no such file: {text}")


def load_field_spec(source: Union[str, Path]) -> FieldSpec:
    """
    Load a field spec from a file or inline JSON.

    Raises:
        FileNotFoundError: source is neither a file nor JSON text
        json.JSONDecodeError: malformed JSON
        ValidationError: the JSON does not describe a field
    """
    return FieldSpec.model_validate(_read_json(source))


def load_lattice_spec(source: Union[str, Path]) -> LatticeSpec:
    """Load a lattice description from a file or inline JSON.

    A bare JSON list is read as a literal BONG.
    """
    data = _read_json(source)
    if isinstance(data, list):
        data = {'bong': data}
    if 'lattice' in data and isinstance(data['lattice'], dict):
        data = data['lattice']
    return LatticeSpec.model_validate(data)


def load_lattice(source: Union[str, Path], ctx: FieldContext) -> BongLattice:
    """Load and validate a lattice.

    Raises:
        NotAGoodBong: the entries are not a good BONG
        BadParams: block parameters do not fit the kind
    """
    return load_lattice_spec(source).build(ctx)


LatticeSpec.model_rebuild()
