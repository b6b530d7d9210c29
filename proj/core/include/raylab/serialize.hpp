// Copyright 2026 The raylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "raylab/counterexample.hpp"
#include "raylab/digraph.hpp"
#include "raylab/tribe.hpp"

namespace raylab {

/// Structured-text (JSON) digraph files.  Output is byte-stable for a fixed
/// input: keys are sorted and all quantities are integers or strings.
std::string write_digraph(const Digraph& g);

/// Inverse of write_digraph; throws ParseError on malformed input.  The
/// reconstruction replays the identification record, so the result compares
/// structurally equal to the original.
Digraph read_digraph(const std::string& text);

std::string write_plan(const IdentificationPlan& plan);
IdentificationPlan read_plan(const std::string& text);

std::string write_tribe(const Tribe& tribe);
Tribe read_tribe(const std::string& text);

/// Graphviz export: arcs as directed edges between live endpoints, the
/// constituent label and position as the edge label, identification vertices
/// double-circled.  Byte-stable for a fixed input.
std::string write_dot(const Digraph& g);

}  // namespace raylab
