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

#include <stdexcept>
#include <string>
#include <vector>

namespace raylab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A ray-spec string (or other wire text) failed to parse.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Exhaustive path enumeration found more paths than the caller's cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, const std::string& where)
      : Error("path enumeration exceeded cap " + std::to_string(cap) + " in " + where),
        cap(cap) {}
  std::size_t cap;
};

/// Pattern tracing found more embeddings than the caller's cap.
class ResultCapExceeded : public Error {
 public:
  ResultCapExceeded(std::size_t cap)
      : Error("pattern trace exceeded result cap " + std::to_string(cap)), cap(cap) {}
  std::size_t cap;
};

/// An operation expected a spec of a different classification kind.
class SpecKindError : public Error {
 public:
  SpecKindError(const std::string& expected, const std::string& actual)
      : Error("spec classifies as " + actual + ", expected " + expected),
        expected(expected),
        actual(actual) {}
  std::string expected;
  std::string actual;
};

/// The refinement needs a layer of a size the input tribe cannot supply.
class InsufficientThickness : public Error {
 public:
  InsufficientThickness(int layer_index, int required, int available)
      : Error("no input layer of size >= " + std::to_string(required) +
              " while selecting sub-layer " + std::to_string(layer_index) +
              " (best available " + std::to_string(available) + ")"),
        layer_index(layer_index),
        required(required),
        available(available) {}
  int layer_index;
  int required;
  int available;
};

/// A family-extension step received a layer below its counting bound.
class LayerTooSmall : public Error {
 public:
  LayerTooSmall(int level, int required, int available)
      : Error("extension at level " + std::to_string(level) + " needs a layer of size >= " +
              std::to_string(required) + ", got " + std::to_string(available)),
        level(level),
        required(required),
        available(available) {}
  int level;
  int required;
  int available;
};

/// A marker or junction vertex would fall beyond the end of a truncated path.
class LayerTooShort : public Error {
 public:
  LayerTooShort(int level, int needed_length)
      : Error("a path at extension level " + std::to_string(level) +
              " is too short; need length >= " + std::to_string(needed_length)),
        level(level),
        needed_length(needed_length) {}
  int level;
  int needed_length;
};

/// The connecting-path step could not link every pending source; the
/// obstructing vertex cut is attached as the certificate.
class RerouteFailed : public Error {
 public:
  RerouteFailed(int level, std::vector<int> cut)
      : Error("reroute at level " + std::to_string(level) + " blocked by a vertex cut of size " +
              std::to_string(cut.size())),
        level(level),
        cut(std::move(cut)) {}
  int level;
  std::vector<int> cut;
};

/// A brute-force search exhausted its node budget; the best value found so
/// far is attached.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t max_nodes, int best, const std::string& where)
      : Error("search in " + where + " exceeded its node budget of " +
              std::to_string(max_nodes) + " (best found so far: " +
              std::to_string(best) + ")"),
        max_nodes(max_nodes),
        best(best) {}
  std::size_t max_nodes;
  int best;
};

/// The packing driver ran out of layers that meet the current demand.
class InsufficientTribe : public Error {
 public:
  InsufficientTribe(int level, int demanded, int best_available)
      : Error("packing at level " + std::to_string(level) + " demands a layer of size >= " +
              std::to_string(demanded) + " (best available " +
              std::to_string(best_available) + ")"),
        level(level),
        demanded(demanded),
        best_available(best_available) {}
  int level;
  int demanded;
  int best_available;
};

}  // namespace raylab
