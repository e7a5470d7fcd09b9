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
"""Classification engines: 3-bridge sphere census, merge graphs, Heegaard surfaces and symmetry groups."""
from .heegaard import exceptional_member  # noqa
from .heegaard import genus2_heegaard_count  # noqa
from .heegaard import match_exceptional  # noqa
from .montesinos import MERGE_TABLE  # noqa
from .montesinos import P_LABELS  # noqa
from .montesinos import all_merge_signs  # noqa
from .montesinos import merge_conditions  # noqa
from .montesinos import merge_partition  # noqa
from .montesinos import montesinos_merge_edges  # noqa
from .spheres import TABLE_MU  # noqa
from .spheres import census  # noqa
from .spheres import census_sweep  # noqa
from .spheres import commutator_witness  # noqa
from .spheres import enumerate_spheres  # noqa
from .spheres import l1_case  # noqa
from .spheres import l1_pair_grid  # noqa
from .spheres import spheres_isotopic_L1  # noqa
from .symmetry import elliptic_symmetry_group  # noqa
