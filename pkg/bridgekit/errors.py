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
"""Exceptions raised by bridgekit.

Every error is a `ValueError` so callers can keep catching the builtin.
The command line maps them to exit codes: `CoverageError` exits with 2,
everything else with 1.
"""
from __future__ import annotations


class BridgekitError(ValueError):
    """Base class of all bridgekit errors."""


class LinkSyntaxError(BridgekitError):
    """Text that does not follow one of the bridgekit grammars.

    Attributes:
        text: The offending input.
        position: 0-based column where parsing stopped.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class ValidationError(BridgekitError):
    """Well formed input that violates a parameter invariant."""


class CoverageError(BridgekitError):
    """Input outside the case coverage of a classification."""


class ConsistencyError(BridgekitError):
    """An internal cross-check failed; indicates a bug, not a math failure."""
