from typing import Any, List, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, computed_field, field_validator, model_validator
from typing_extensions import Annotated

from ..backend.errors import InvalidInputError, RetipyError
from ..backend.types import RetinexLevel

ModelT = TypeVar("ModelT", bound=BaseModel)

# GIMP Retinex defaults: scale 240, scale division 3, dynamic 1.2
DEFAULT_SCALE = 240
DEFAULT_SCALE_DIVISION = 3
DEFAULT_DYNAMIC = 1.2
MIN_SCALE = 3
MAX_SCALE_DIVISION = 8

DEFAULT_KAPPA_MAX = 0.1
DEFAULT_KAPPA_STEPS = 11

ORIGINAL_ID = "original"

Scale = Annotated[int, Field(ge=MIN_SCALE)]
ScaleDivision = Annotated[int, Field(ge=1, le=MAX_SCALE_DIVISION)]
Dynamic = Annotated[float, Field(gt=0, allow_inf_nan=False)]


def validated(model: Type[ModelT], error: Type[RetipyError] = InvalidInputError, **data: Any) -> ModelT:
    """
    Builds `model` from keyword data, re-raising pydantic validation
    failures as the given retipy error.
    """
    try:
        return model(**data)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in item['loc']) or model.__name__}: {item['msg']}"
            for item in exc.errors()
        )
        raise error(f"Invalid {model.__name__}: {problems}") from exc


class RetinexParams(BaseModel):
    """
    The four GIMP Retinex knobs.
    """
    model_config = ConfigDict(frozen=True)

    level: RetinexLevel = RetinexLevel.UNIFORM
    scale: Scale = DEFAULT_SCALE
    scale_division: ScaleDivision = DEFAULT_SCALE_DIVISION
    dynamic: Dynamic = DEFAULT_DYNAMIC

    @property
    def variant_id(self) -> str:
        # repr round-trips: distinct dynamics give distinct ids
        return f"{self.level.value}_s{self.scale}_n{self.scale_division}_d{self.dynamic!r}"


class GridSpec(BaseModel):
    """
    A Cartesian grid of Retinex parameters plus the kappa sampling used to
    evaluate every filtered variant.
    """
    model_config = ConfigDict(frozen=True)

    levels: List[RetinexLevel] = Field(min_length=1)
    scales: List[Scale] = Field(min_length=1)
    scale_divisions: List[ScaleDivision] = Field(min_length=1)
    dynamics: List[Dynamic] = Field(min_length=1)
    kappa_max: float = Field(DEFAULT_KAPPA_MAX, gt=0, allow_inf_nan=False)
    kappa_steps: int = Field(DEFAULT_KAPPA_STEPS, ge=2)

    @field_validator("levels", "scales", "scale_divisions", "dynamics")
    @classmethod
    def _check_unique(cls, values: List[Any]) -> List[Any]:
        if len(set(values)) != len(values):
            raise ValueError(f"grid values must be distinct, got {values}")
        return values

    @property
    def size(self) -> int:
        return len(self.levels) * len(self.scales) * len(self.scale_divisions) * len(self.dynamics)


class EntropyCurve(BaseModel):
    """
    Kaniadakis entropy (nats) sampled over an ascending kappa grid that
    starts at 0, where the value is the Shannon entropy.
    """
    model_config = ConfigDict(frozen=True)

    kappas: List[float]
    values: List[float]

    @model_validator(mode="after")
    def _check_grid(self) -> "EntropyCurve":
        if len(self.kappas) != len(self.values):
            raise ValueError(f"{len(self.kappas)} kappas but {len(self.values)} values")
        if len(self.kappas) < 2:
            raise ValueError("A curve needs at least two points")
        if self.kappas[0] != 0.0:
            raise ValueError("A curve must start at kappa = 0")
        if any(b <= a for a, b in zip(self.kappas, self.kappas[1:])):
            raise ValueError("Kappas must be strictly ascending")
        return self

    @property
    def shannon(self) -> float:
        return self.values[0]

    @property
    def mean(self) -> float:
        return sum(self.values) / len(self.values)


class TsallisCurve(BaseModel):
    """
    Tsallis entropy sampled over a list of q values.
    """
    model_config = ConfigDict(frozen=True)

    qs: List[float] = Field(min_length=1)
    values: List[float] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_lengths(self) -> "TsallisCurve":
        if len(self.qs) != len(self.values):
            raise ValueError(f"{len(self.qs)} q values but {len(self.values)} entropies")
        return self


class SweepRecord(BaseModel):
    """
    Entropy curve of one filtered variant. `params` is None for the
    unfiltered original.
    """
    model_config = ConfigDict(frozen=True)

    variant_id: str
    params: Optional[RetinexParams] = None
    curve: EntropyCurve
    shannon: float

    @model_validator(mode="after")
    def _check_shannon(self) -> "SweepRecord":
        if self.shannon != self.curve.values[0]:
            raise ValueError("shannon must equal the curve value at kappa = 0")
        return self

    @property
    def is_original(self) -> bool:
        return self.params is None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mean_curve(self) -> float:
        return self.curve.mean


class Crossing(BaseModel):
    """
    Two curves swap order inside the kappa interval [kappa_lo, kappa_hi].
    `kappa` is the linearly interpolated intersection.
    """
    model_config = ConfigDict(frozen=True)

    first: str
    second: str
    kappa_lo: float
    kappa_hi: float
    kappa: float


class SweepReport(BaseModel):
    """
    Ranked result of a parameter sweep.
    """
    model_config = ConfigDict(frozen=True)

    grid: Optional[GridSpec] = None
    original: SweepRecord
    records: List[SweepRecord] = Field(min_length=1)
    ranking: List[int]
    crossings: List[Crossing] = Field(default_factory=list)
    below_original: List[int] = Field(default_factory=list)

    @field_validator("ranking")
    @classmethod
    def _check_ranking(cls, ranking: List[int]) -> List[int]:
        if sorted(ranking) != list(range(len(ranking))):
            raise ValueError("ranking must be a permutation of record indices")
        return ranking

    @model_validator(mode="after")
    def _check_sizes(self) -> "SweepReport":
        if len(self.ranking) != len(self.records):
            raise ValueError(f"ranking has {len(self.ranking)} entries for {len(self.records)} records")
        return self

    @property
    def winner(self) -> SweepRecord:
        return self.records[self.ranking[0]]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def winner_id(self) -> str:
        return self.winner.variant_id

    def record(self, variant_id: str) -> SweepRecord:
        if variant_id == self.original.variant_id:
            return self.original
        for record in self.records:
            if record.variant_id == variant_id:
                return record
        raise KeyError(variant_id)
