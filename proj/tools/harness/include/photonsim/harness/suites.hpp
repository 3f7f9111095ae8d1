// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHOTONSIM_HARNESS_SUITES_HPP_
#define PHOTONSIM_HARNESS_SUITES_HPP_

#include "photonsim/harness/report.hpp"

namespace photonsim::harness {

// Check groups that are not tied to a single experiment. Each appends its
// metrics to `report`; nothing throws on failure.

// Type-I/II Kraus completeness, exhaustive type-I heralds on (n, m) lines
// for n, m <= 3, and graph-rule agreement on every branch.
void fusion_suite(RunReport& report);

// build_cluster on the 4-line against the closed-form caption state.
void cluster_identity_suite(RunReport& report);

// Z measurement of every vertex of every 4-vertex graph, Fock tier against
// the graph rewrite.
void graph_rule_suite(RunReport& report);

}  // namespace photonsim::harness

#endif  // PHOTONSIM_HARNESS_SUITES_HPP_
