# Copyright 2026 The fraccite Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fractional citation counting for organizational units."""

from ._fraccite import (
    INFINITE_DF,
    ConfigError,
    DegenerateSampleError,
    InvalidArgument,
    IoError,
    ParseError,
    __version__,
    anova_oneway,
    correlation,
    count_citations,
    dunnett_c,
    expected_metrics,
    homogeneity_graph,
    kruskal_wallis,
    levene,
    rank,
    read_impact_table,
    run,
    simulate,
    studentized_range_cdf,
    studentized_range_quantile,
)

__all__ = [
    "INFINITE_DF",
    "ConfigError",
    "DegenerateSampleError",
    "InvalidArgument",
    "IoError",
    "ParseError",
    "__version__",
    "anova_oneway",
    "correlation",
    "count_citations",
    "dunnett_c",
    "expected_metrics",
    "homogeneity_graph",
    "kruskal_wallis",
    "levene",
    "rank",
    "read_impact_table",
    "run",
    "simulate",
    "studentized_range_cdf",
    "studentized_range_quantile",
]
