# Copyright 2026 The Bridgekit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Base class of the 3-bridge arborescent link families."""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any

from ..errors import ValidationError
from ..rationals import Slope, SlopeTuple

if TYPE_CHECKING:
    from ..seifert import CoverDescription


class ArborescentLink(ABC):
    """Abstract class for a validated link of one of the four families."""

    family: str = ""

    @abstractmethod
    def emit(self) -> str:
        """Canonical text of the link, without spaces."""

    @abstractmethod
    def branched_cover(self) -> CoverDescription:
        """Seifert pieces of the double branched cover.

        Returns:
            CoverDescription: The pieces and how they are glued.
        """

    @abstractmethod
    def get_config(self) -> dict[str, Any]:
        """Contains the link configuration.

        Returns:
            A Python dict of strings, lists of strings and integers.
        """

    @classmethod
    def from_config(cls, config: dict[str, Any]) -> ArborescentLink:
        """Build a link from a config.

        Args:
            config: A Python dict containing the configuration of the link.

        Returns:
            A link instance.
        """
        try:
            return cls(**{k: _revive(v) for k, v in config.items()})
        except ValidationError:
            raise
        except Exception as e:
            raise TypeError(
                f"Error when deserializing '{cls.__name__}' using" f"config={config}.\n\nException encountered: {e}"
            )

    def __str__(self) -> str:
        return self.emit()


def _revive(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return SlopeTuple.of(*value)
    if isinstance(value, str):
        return Slope.coerce(value)
    return value


def tuple_config(t: SlopeTuple) -> list[str]:
    return [str(s) for s in t]


def check_denominators(t: SlopeTuple, length: int, minimum: int, what: str) -> None:
    if len(t) != length:
        raise ValidationError(f"{what} needs {length} slopes, got {len(t)}")
    for s in t:
        if s.den < minimum:
            raise ValidationError(f"α must exceed {minimum - 1} in {what} {t}")
