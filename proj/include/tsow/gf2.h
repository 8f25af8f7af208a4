// Copyright 2026 The tsow Authors
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

#ifndef TSOW_GF2_H
#define TSOW_GF2_H

#include <cstdint>
#include <span>
#include <vector>

// Dense GF(2) linear algebra on vectors packed into uint64_t.
namespace tsow::gf2 {

int rank(std::span<const uint64_t> vectors);

/// Reduced row echelon basis of span(vectors), sorted descending by pivot.
/// Two inputs span the same space iff their rref bases are equal.
std::vector<uint64_t> rref(std::span<const uint64_t> vectors);

/// Basis of {x in GF(2)^width : parity(y & x) = 0 for every y}. With no
/// constraints this is the full space (unit vectors, high bit first).
std::vector<uint64_t> nullspace(std::span<const uint64_t> constraints, int width);

bool in_span(std::span<const uint64_t> basis, uint64_t v);

/// Every element of span(basis), ascending.
std::vector<uint64_t> span_elements(std::span<const uint64_t> basis);

/// All dim-k subspaces of GF(2)^width, each as its rref basis, in
/// lexicographic order of the bases.
std::vector<std::vector<uint64_t>> subspaces(int width, int k);

}  // namespace tsow::gf2

#endif
