"""Result documents and their JSON / LaTeX / text renderings.

Coefficients travel as strings (``"3"``, ``"3/4"``) so that no consumer ever
sees a float.  The JSON layout is described in ``docs/result_schema.json``.
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from .hodge import MHPResult, e_polynomial, euler_characteristic, poincare
from .poly import Polynomial

SCHEMA_VERSION = 1
VARIABLE = "x = t*u*v"
SPECIALIZATIONS = ("none", "poincare", "e-poly", "euler")

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def coeff_strings(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def parse_coeffs(cs) -> Polynomial:
    return Polynomial(Fraction(c) for c in cs)


@dataclass(frozen=True)
class ResultDocument:
    family: str
    n: int
    r: int
    mode: str | None
    coefficients: tuple[str, ...]
    rank: int
    weyl_order: int
    dim: int
    nonintegral_coefficients: bool = False
    specialization: dict[str, Any] | None = None
    schema_version: int = SCHEMA_VERSION
    variable: str = VARIABLE

    @property
    def polynomial(self) -> Polynomial:
        return parse_coeffs(self.coefficients)

    @classmethod
    def from_result(cls, m: MHPResult, specialization: str = "none") -> ResultDocument:
        doc = cls(
            family=m.family,
            n=m.n,
            r=m.r,
            mode=m.mode,
            coefficients=tuple(coeff_strings(m.mu)),
            rank=m.rank,
            weyl_order=m.weyl_order,
            dim=m.dim,
            nonintegral_coefficients=m.nonintegral,
        )
        return doc.with_specialization(specialization)

    def to_result(self) -> MHPResult:
        return MHPResult(self.family, self.n, self.r, self.polynomial, self.rank, self.weyl_order, self.mode)

    def with_specialization(self, kind: str) -> ResultDocument:
        if kind not in SPECIALIZATIONS:
            raise ValueError(f"unknown specialization {kind!r}")
        if kind == "none":
            payload = None
        elif self.nonintegral_coefficients:
            raise ValueError("cannot specialize a non-integral polynomial")
        elif kind == "poincare":
            payload = {"kind": kind, "variable": "t", "coefficients": coeff_strings(poincare(self.to_result()))}
        elif kind == "e-poly":
            payload = {"kind": kind, "variable": "uv", "coefficients": coeff_strings(e_polynomial(self.to_result()))}
        else:
            payload = {"kind": kind, "value": str(euler_characteristic(self.to_result()))}
        return ResultDocument(**{**self._fields(), "specialization": payload})

    def _fields(self) -> dict[str, Any]:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["coefficients"] = list(self.coefficients)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ResultDocument:
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        d = dict(d)
        d["coefficients"] = tuple(str(c) for c in d["coefficients"])
        for c in d["coefficients"]:
            if not _RATIONAL.fullmatch(c):
                raise ValueError(f"coefficient {c!r} is not an exact rational")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> ResultDocument:
        return cls.from_dict(json.loads(text))


def latex_polynomial(p: Polynomial) -> str:
    """LaTeX for a polynomial in ``x = tuv``, e.g. ``1+2(tuv)^{2}+(tuv)^{4}``."""
    if p.is_zero():
        return "0"
    out = ""
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mag.denominator != 1:
            cstr = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            cstr = str(mag)
        if k == 0:
            body = cstr
        else:
            mono = "tuv" if k == 1 else f"(tuv)^{{{k}}}"
            body = mono if mag == 1 else cstr + mono
        if not out:
            out = ("-" if sign == "-" else "") + body
        else:
            out += sign + body
    return out


def _title(doc: ResultDocument) -> str:
    s = f"{doc.family} n={doc.n} r={doc.r}"
    if doc.mode:
        s += f" mode={doc.mode}"
    return s


def render_text(doc: ResultDocument) -> str:
    lines = [f"# {_title(doc)}; x = tuv"]
    if doc.nonintegral_coefficients:
        lines.append("# nonintegral_coefficients: true")
    lines.append(doc.polynomial.format())
    spec = doc.specialization
    if spec:
        if spec["kind"] == "euler":
            lines.append(f"euler = {spec['value']}")
        else:
            p = parse_coeffs(spec["coefficients"])
            var = "t" if spec["variable"] == "t" else "(uv)"
            lines.append(f"{spec['kind']} = {p.format(var=var)}")
    return "\n".join(lines) + "\n"


def render_latex(doc: ResultDocument) -> str:
    lines = [latex_polynomial(doc.polynomial)]
    spec = doc.specialization
    if spec:
        if spec["kind"] == "euler":
            lines.append(f"\\chi = {spec['value']}")
        else:
            p = parse_coeffs(spec["coefficients"])
            var = "t" if spec["variable"] == "t" else "(uv)"
            lines.append(p.format(var=var, mul=""))
    return "\n".join(lines) + "\n"


def render(doc: ResultDocument, fmt: str) -> str:
    if fmt == "json":
        return doc.to_json()
    if fmt == "latex":
        return render_latex(doc)
    if fmt == "text":
        return render_text(doc)
    raise ValueError(f"unknown format {fmt!r}")
