// Copyright 2026 The coexsim Authors
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

#include "coexsim/rng.hpp"

namespace coexsim::fuzz {

/// Applies 1-8 random byte flips, deletions and insertions.
inline std::string mutate(std::string doc, UniformStream& rng) {
  const int edits = 1 + static_cast<int>(rng.raw() % 8);
  for (int e = 0; e < edits && !doc.empty(); ++e) {
    const std::size_t pos = rng.raw() % doc.size();
    switch (rng.raw() % 4) {
      case 0: doc[pos] = static_cast<char>(rng.raw() & 0xFF); break;
      case 1: doc.erase(pos, 1 + rng.raw() % 4); break;
      case 2: doc.insert(pos, 1, static_cast<char>(rng.raw() & 0xFF)); break;
      default: doc.insert(pos, "9e999"); break;
    }
  }
  return doc;
}

}  // namespace coexsim::fuzz
