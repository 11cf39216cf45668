"""Pydantic request/response models for the service layer.

Scalar wire format: plain numbers, "p/q" strings for exact rationals, or
[re, im] pairs for complex values; points and divisors are arrays/objects
of those.
"""

from __future__ import annotations

from typing import Any, List, Literal, Optional, Union

from pydantic import BaseModel, Field

ScalarJSON = Union[int, float, str, List[float]]


class ToleranceModel(BaseModel):
    rel: float = 1e-9
    abs: float = 1e-9


class CurveG1Model(BaseModel):
    g2: ScalarJSON = 0
    g3: ScalarJSON = 0


class CurveG2Model(BaseModel):
    lambda4: ScalarJSON = 0
    lambda6: ScalarJSON = 0
    lambda8: ScalarJSON = 0
    lambda10: ScalarJSON = 0


class DivisorModel(BaseModel):
    """Mumford pair; U holds [u0, u1] with the monic top implied."""

    U: List[ScalarJSON] = Field(default_factory=list)
    V: List[ScalarJSON] = Field(default_factory=list)


class LawEvalRequest(BaseModel):
    law: Literal["p2", "zplus", "groupoid1", "groupoid2", "cp1", "eg", "rk"]
    x: Any
    y: Any
    z: Any = None  # optional third operand: evaluate associativity at (x, y, z)
    lam: ScalarJSON = 0
    lam1: ScalarJSON = 0
    lam2: ScalarJSON = 0
    g2: ScalarJSON = 0
    g3: ScalarJSON = 0
    curve: Optional[CurveG1Model] = None  # alternative to the g2/g3 flags
    tol: ToleranceModel = ToleranceModel()
    exact: bool = False


class LawEvalResponse(BaseModel):
    law: str
    result: Any
    product_point: Optional[Any] = None


class AxiomsCheckRequest(BaseModel):
    law: Literal["p2", "zplus", "groupoid1", "groupoid2", "cp1", "rk", "kummer"]
    samples: int = Field(default=100, gt=0)
    seed: int = Field(default=1, gt=0)
    tol: ToleranceModel = ToleranceModel()
    lam: ScalarJSON = 0
    lam1: ScalarJSON = 0
    lam2: ScalarJSON = 0
    g2: ScalarJSON = 0
    g3: ScalarJSON = 0
    curve: Optional[CurveG2Model] = None


class CheckReportModel(BaseModel):
    name: str
    samples: int
    failures: list
    max_distance: float
    resamples: int
    passed: bool


class KummerMulRequest(BaseModel):
    curve: CurveG2Model
    x: List[ScalarJSON]
    y: List[ScalarJSON]
    tol: ToleranceModel = ToleranceModel()


class KummerMulResponse(BaseModel):
    points: list
    cubic: list


class SurfaceCheckRequest(BaseModel):
    samples: int = Field(default=100, gt=0)
    seed: int = Field(default=1, gt=0)
    exact: bool = True


class GroupoidCheckRequest(BaseModel):
    family: Literal["one_param", "two_param"]
    fibers: int = Field(default=5, gt=0)
    triples_per_fiber: int = Field(default=10, gt=0)
    samples: Optional[int] = None  # alias for triples_per_fiber
    seed: int = Field(default=1, gt=0)
    tol: ToleranceModel = ToleranceModel()


class KowalevskiRequest(BaseModel):
    rational: bool = False
    u1: ScalarJSON = 0
    u3: ScalarJSON = 0
    curve: Optional[CurveG2Model] = None
    init: Optional[DivisorModel] = None
    t1: float = 1.0
    dt: float = 1e-3


class ErrorResponse(BaseModel):
    error: str
    detail: str = ""
