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
"""The four families of 3-bridge arborescent links and their text grammar."""
from __future__ import annotations

from typing import Any, Type

from ..errors import ValidationError
from ..seifert import CoverDescription
from .l1 import L1Link  # noqa
from .l2 import KLEIN_PAIR, L2Link, is_exceptional_nonsimple  # noqa
from .l3 import L3Link  # noqa
from .link import ArborescentLink  # noqa
from .montesinos import MontesinosLink, is_elliptic_montesinos  # noqa
from .parser import emit_link, parse_group, parse_link, parse_seifert  # noqa

_ALL_CLASSES: dict[str, Type[ArborescentLink]] = {
    "l1": L1Link,
    "l1link": L1Link,
    "l2": L2Link,
    "l2link": L2Link,
    "l3": L3Link,
    "l3link": L3Link,
    "m": MontesinosLink,
    "montesinos": MontesinosLink,
    "montesinoslink": MontesinosLink,
}


def get_family(name: str) -> Type[ArborescentLink]:
    """Resolves a family name ("L1", "montesinos", ...) to its link class."""
    try:
        return _ALL_CLASSES[name.lower()]
    except KeyError:
        raise ValidationError(f"Unknown link family {name!r}, expected one of {sorted(set(_ALL_CLASSES))}")


def serialize(link: ArborescentLink) -> dict[str, Any]:
    """Serialize the link configuration to JSON compatible python dict.

    >>> bridgekit.links.serialize(parse_link("M(0;1/2,1/3,1/4)"))
    {'class_name': 'M', 'config': {'b': 0, 'slopes': ['1/2', '1/3', '1/4']}}

    Args:
      link: A `ArborescentLink` instance to serialize.

    Returns:
      Python dict which contains the configuration of the link.
    """
    return {"class_name": link.family, "config": link.get_config()}


def deserialize(config: dict[str, Any]) -> ArborescentLink:
    """Inverse of the `serialize` function."""
    return get_family(config["class_name"]).from_config(config["config"])


def get(identifier: ArborescentLink | dict[str, Any] | str) -> ArborescentLink:
    """Retrieves a link instance.

    Args:
        identifier: A link instance, a `serialize` dict or link text.

    Returns:
        The validated link.
    """
    if isinstance(identifier, ArborescentLink):
        return identifier
    if isinstance(identifier, dict):
        return deserialize(identifier)
    if isinstance(identifier, str):
        return parse_link(identifier)
    raise ValidationError(f"Could not interpret link identifier: {identifier!r}")


def branched_cover_invariants(link: ArborescentLink) -> CoverDescription:
    """Seifert pieces of the double branched cover of `link`."""
    return link.branched_cover()
