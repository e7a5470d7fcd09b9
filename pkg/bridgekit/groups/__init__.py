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
"""Symbolic word engine for Seifert fibered space groups and their amalgams."""
from .amalgam import AmalgamGroup  # noqa
from .amalgam import AmalgamWord  # noqa
from .amalgam import amalgam_reduce  # noqa
from .amalgam import commutator  # noqa
from .amalgam import cyclic_reduced_length  # noqa
from .amalgam import search_conjugator  # noqa
from .equations import Family  # noqa
from .equations import Solution  # noqa
from .equations import Target  # noqa
from .equations import brute_force_solutions  # noqa
from .equations import build_w  # noqa
from .equations import identity_solutions  # noqa
from .equations import predicted_solutions  # noqa
from .equations import solution_families  # noqa
from .orbifold import orbifold_presentation  # noqa
from .orbifold import rho_automorphism_images  # noqa
from .sfs import FiberData  # noqa
from .sfs import SfsGroup  # noqa
from .sfs import SfsWord  # noqa
from .sfs import eta  # noqa
from .sfs import exceptional_fiber  # noqa
from .sfs import format_word  # noqa
from .sfs import invert  # noqa
from .sfs import is_identity  # noqa
from .sfs import multiply  # noqa
from .sfs import normalize  # noqa
from .sfs import parse_word  # noqa
from .sfs import peripheral_membership  # noqa
from .sfs import quotient_conjugate  # noqa
from .words import Presentation  # noqa
from .words import Word  # noqa
