from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class ModelKind(str, Enum):
    SIXV = "6v"
    SIXVP = "6vp"
    TWENTYV = "20v"
    DT = "dt"


class BranchId(str, Enum):
    NE = "NE"
    SE = "SE"
    FULL_ANALYTIC = "FULL"
    NW = "NW"
    SW = "SW"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class ExponentKind(str, Enum):
    PSI = "psi"
    PHI = "phi"


class _Record(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class DerivTower(_Record):
    polys: List[List[int]]


class ModelParams(_Record):
    model: ModelKind
    eta: Any
    u: Any
    v: Any
    rho: Any = 1
    rho_o: Any = 1
    rho_e: Any = 1
    nu: Any = 1

    @property
    def mu(self) -> int:
        return 2 if self.model in (ModelKind.SIXVP, ModelKind.TWENTYV) else 1


class NamedPoint(_Record):
    name: str
    label: str
    params: ModelParams


class WeightTable(_Record):
    model: ModelKind
    a: Optional[Any] = None
    b: Optional[Any] = None
    c: Optional[Any] = None
    a_o: Optional[Any] = None
    b_o: Optional[Any] = None
    c_o: Optional[Any] = None
    a_e: Optional[Any] = None
    b_e: Optional[Any] = None
    c_e: Optional[Any] = None
    omega: Optional[List[Any]] = None


class RefinedCounts(_Record):
    model: ModelKind
    n: int
    total: Any
    by_exit: List[Any]
    first_k: int = 1
    by_exit_horizontal: Optional[List[Any]] = None
    by_exit_diagonal: Optional[List[Any]] = None


class PathWeights(_Record):
    model: ModelKind
    b0: Optional[Any] = None
    c0: Optional[Any] = None
    b1: Optional[Any] = None
    c1: Optional[Any] = None
    gamma: List[Any] = Field(default_factory=list)
    alpha: List[Any] = Field(default_factory=list)
    omega: List[Any] = Field(default_factory=list)
    beta: List[Any] = Field(default_factory=lambda: [1, 1])


class SaddleData(_Record):
    model: ModelKind
    xi: Any
    t: Any
    kappa: Any
    lam: Any
    p: List[Any]


class ExponentSet(_Record):
    f: Any
    psi: Optional[Any] = None
    phi: Optional[Any] = None


class TangentLine(_Record):
    xi: Any
    A: Any
    B: Any


class CurvePoint(_Record):
    xi: Any
    x: Any
    y: Any
    A: Any
    B: Any


class Branch(_Record):
    model: ModelKind
    branch: BranchId
    xi_range: List[Any]
    points: List[CurvePoint]
    label: Optional[str] = None


class RunConfig(_Record):
    command: str
    model: Optional[ModelKind] = None
    params: Optional[ModelParams] = None
    point: Optional[str] = None
    n: List[int] = Field(default_factory=list)
    xi: List[Any] = Field(default_factory=list)
    points: int = 200
    precision_bits: int = 512
    digits: int = 30
    branches: List[BranchId] = Field(default_factory=lambda: [BranchId.NE])
    output_format: OutputFormat = OutputFormat.CSV
    out: Optional[str] = None


class CheckResult(_Record):
    suite: str
    name: str
    value: Any
    reference: Any
    provenance: str
    passed: bool
