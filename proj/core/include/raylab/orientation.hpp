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

#include <cstdint>

namespace raylab {

/// Orientation of an arc of a rooted one-way-infinite oriented path: Out
/// points away from the root (the unique endpoint), In points towards it.
enum class Orientation : std::uint8_t { Out, In };

constexpr Orientation flip(Orientation o) {
  return o == Orientation::Out ? Orientation::In : Orientation::Out;
}

constexpr char to_char(Orientation o) {
  return o == Orientation::Out ? '+' : '-';
}

}  // namespace raylab
