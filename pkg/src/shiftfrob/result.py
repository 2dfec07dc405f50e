from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .semigroup import AperySet


class Method(enum.Enum):
    CLOSED_FORM = "closed"
    MAX_R = "maxr"
    ORACLE = "oracle"


class Branch(enum.Enum):
    """Which case of the 4 | a closed form fired."""

    B8 = "B8"
    B4_MINUS5 = "B4_minus5"
    B4_MINUS4 = "B4_minus4"


@dataclass(frozen=True)
class FrobeniusResult:
    value: int
    method: Method
    a: Optional[int] = None
    witness_r: Optional[int] = None
    branch: Optional[Branch] = None
    apery: Optional["AperySet"] = None

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "method": self.method.value,
            "value": self.value,
            "witness_r": self.witness_r,
            "branch": self.branch.value if self.branch else None,
        }
