#     degenstir - exact degenerate Stirling, Whitney and Carlitz computations
#     Copyright (C) 2024 - degenstir contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#    http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact computation of degenerate Stirling polynomials, r-Whitney numbers and
Carlitz degenerate Bernoulli and Euler polynomials, with identity suites that
check every closed form against its generating function."""

from .algebra import EgfSeries, MultiPoly
from .common import ParameterError, setting

__all__ = ["EgfSeries", "MultiPoly", "ParameterError", "setting"]
