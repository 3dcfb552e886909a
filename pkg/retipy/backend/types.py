from dataclasses import dataclass
from enum import Enum
from typing import Optional


class RetinexLevel(str, Enum):
    """
    GIMP Retinex levels. They select how the surround widths are spread
    between the smallest surround and the maximum scale.
    """
    UNIFORM = "uniform"   # same treatment of dark and bright areas
    LOW = "low"           # small surrounds, enhances low intensity areas
    HIGH = "high"         # large surrounds, favours the clearer areas

    @classmethod
    def parse(cls, value: str) -> "RetinexLevel":
        return cls(value.strip().lower())


class EntropyFamily(str, Enum):
    """
    Entropy families known to the dispatch registry.
    """
    SHANNON = "shannon"
    TSALLIS = "tsallis"
    KANIADAKIS = "kaniadakis"


@dataclass(frozen=True)
class EntropyKind:
    """
    An entropy family together with its entropic index.

    `index` is q for Tsallis, kappa for Kaniadakis and unused for Shannon.
    """
    family: EntropyFamily
    index: Optional[float] = None

    @classmethod
    def shannon(cls) -> "EntropyKind":
        return cls(EntropyFamily.SHANNON)

    @classmethod
    def tsallis(cls, q: float) -> "EntropyKind":
        return cls(EntropyFamily.TSALLIS, float(q))

    @classmethod
    def kaniadakis(cls, kappa: float) -> "EntropyKind":
        return cls(EntropyFamily.KANIADAKIS, float(kappa))

    @property
    def label(self) -> str:
        if self.index is None:
            return self.family.value
        return f"{self.family.value}({self.index:g})"
