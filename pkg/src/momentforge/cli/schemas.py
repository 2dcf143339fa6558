from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core.errors import InputError
from ..domain.classify.schemas import fraction_str
from ..domain.polytope import service as polytopes
from ..domain.polytope.models import GroupPolytope
from ..domain.quadrature.piecewise import PLFunction
from ..domain.rootsys.models import PRESET_NAMES, preset

Rational = Union[int, str]


class PolytopeFile(BaseModel):
    """On-disk description of a polytope by its chamber facets."""

    model_config = ConfigDict(populate_by_name=True)

    root_system: str = "A1xA1"
    chamber_facets: list[list[int]]
    lambda_: Union[str, list[Rational]] = Field(default="fano", alias="lambda")

    @field_validator("root_system")
    @classmethod
    def _known_root_system(cls, value: str) -> str:
        if value not in PRESET_NAMES:
            raise ValueError(f"unknown root system {value!r}, expected one of {', '.join(PRESET_NAMES)}")
        return value

    @field_validator("lambda_")
    @classmethod
    def _lambda_token(cls, value: Union[str, list[Rational]]) -> Union[str, list[Rational]]:
        if isinstance(value, str) and value.strip().lower() not in polytopes.AUTO_TOKENS:
            raise ValueError(f"lambda must be 'fano' or a list of rationals, got {value!r}")
        return value

    def to_polytope(self) -> GroupPolytope:
        if not self.chamber_facets:
            raise InputError("chamber_facets must not be empty")
        if isinstance(self.lambda_, list):
            if len(self.lambda_) != len(self.chamber_facets):
                raise InputError(
                    f"lambda has {len(self.lambda_)} entries for {len(self.chamber_facets)} chamber facets"
                )
            constants = [str(c) for c in self.lambda_]
        else:
            constants = ["fano"] * len(self.chamber_facets)
        return polytopes.from_chamber_facets(preset(self.root_system), list(zip(self.chamber_facets, constants)))

    @classmethod
    def from_polytope(cls, p: GroupPolytope) -> "PolytopeFile":
        return cls(
            root_system=p.rs.name,
            chamber_facets=[list(f.normal_ints()) for f in p.chamber_facets],
            lambda_=[fraction_str(f.lam) for f in p.chamber_facets],
        )


class PLPiece(BaseModel):
    a: list[Rational]
    c: Rational = 0


class PLFile(BaseModel):
    """Convex piecewise-linear function; pieces are closed under the Weyl group on load."""

    pieces: list[PLPiece]
    path_end: Optional[list[PLPiece]] = None

    @staticmethod
    def _build(pieces: list[PLPiece]) -> PLFunction:
        if not pieces:
            raise InputError("a piecewise-linear function needs at least one piece")
        for piece in pieces:
            if len(piece.a) != 2:
                raise InputError(f"piece slope must have two entries, got {piece.a!r}")
        return PLFunction.from_pieces([([str(x) for x in piece.a], str(piece.c)) for piece in pieces])

    def to_function(self) -> PLFunction:
        return self._build(self.pieces)

    def to_path_end(self) -> Optional[PLFunction]:
        return self._build(self.path_end) if self.path_end else None


def _read_json(path: Path) -> object:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _describe(path: Path, exc: ValidationError) -> InputError:
    first = exc.errors()[0]
    where = ".".join(str(part) for part in first["loc"]) or "<root>"
    return InputError(f"{path}: field {where}: {first['msg']}")


def load_polytope_file(path: Path) -> GroupPolytope:
    try:
        document = PolytopeFile.model_validate(_read_json(path))
    except ValidationError as exc:
        raise _describe(path, exc) from exc
    return document.to_polytope()


def load_pl_file(path: Path) -> PLFile:
    try:
        return PLFile.model_validate(_read_json(path))
    except ValidationError as exc:
        raise _describe(path, exc) from exc
