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

#include "tsow/gf2.h"

#include <algorithm>

#include "tsow/bits.h"

namespace tsow::gf2 {

namespace {

int top_bit(uint64_t v) { return 63 - __builtin_clzll(v); }

}  // namespace

std::vector<uint64_t> rref(std::span<const uint64_t> vectors) {
    std::vector<uint64_t> rows;
    for (uint64_t v : vectors) {
        for (uint64_t r : rows) {
            if (v & (uint64_t{1} << top_bit(r))) {
                v ^= r;
            }
        }
        if (v == 0) {
            continue;
        }
        // Clear the new pivot from existing rows, then insert keeping pivots
        // descending.
        const uint64_t pivot = uint64_t{1} << top_bit(v);
        for (uint64_t &r : rows) {
            if (r & pivot) {
                r ^= v;
            }
        }
        rows.push_back(v);
        std::sort(rows.begin(), rows.end(), [](uint64_t x, uint64_t y) { return top_bit(x) > top_bit(y); });
    }
    // Full reduction: each pivot appears in exactly one row.
    for (size_t i = 0; i < rows.size(); ++i) {
        const uint64_t pivot = uint64_t{1} << top_bit(rows[i]);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j != i && (rows[j] & pivot)) {
                rows[j] ^= rows[i];
            }
        }
    }
    return rows;
}

int rank(std::span<const uint64_t> vectors) { return static_cast<int>(rref(vectors).size()); }

bool in_span(std::span<const uint64_t> basis, uint64_t v) {
    std::vector<uint64_t> with(basis.begin(), basis.end());
    int before = rank(with);
    with.push_back(v);
    return rank(with) == before;
}

std::vector<uint64_t> nullspace(std::span<const uint64_t> constraints, int width) {
    std::vector<uint64_t> rows = rref(constraints);
    uint64_t pivots = 0;
    for (uint64_t r : rows) {
        pivots |= uint64_t{1} << top_bit(r);
    }
    // One basis vector per free column: set the free bit, then fix each pivot
    // bit so its row's parity vanishes.
    std::vector<uint64_t> basis;
    for (int col = width - 1; col >= 0; --col) {
        const uint64_t bit = uint64_t{1} << col;
        if (pivots & bit) {
            continue;
        }
        uint64_t x = bit;
        for (uint64_t r : rows) {
            if (r & bit) {
                x |= uint64_t{1} << top_bit(r);
            }
        }
        basis.push_back(x);
    }
    return basis;
}

std::vector<uint64_t> span_elements(std::span<const uint64_t> basis) {
    std::vector<uint64_t> out{0};
    for (uint64_t v : basis) {
        size_t n = out.size();
        for (size_t i = 0; i < n; ++i) {
            out.push_back(out[i] ^ v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<uint64_t>> subspaces(int width, int k) {
    std::vector<std::vector<uint64_t>> out;
    if (k < 0 || k > width) {
        return out;
    }
    // Each subspace has exactly one rref basis: pick the pivot columns, then
    // fill the free entries (non-pivot columns below each row's pivot).
    for (uint64_t pivots = 0; pivots < (uint64_t{1} << width); ++pivots) {
        if (__builtin_popcountll(pivots) != k) {
            continue;
        }
        std::vector<int> cols;
        for (int c = width - 1; c >= 0; --c) {
            if (pivots & (uint64_t{1} << c)) {
                cols.push_back(c);
            }
        }
        std::vector<uint64_t> free_masks;
        int free_total = 0;
        for (int c : cols) {
            uint64_t m = low_mask(c) & ~pivots;
            free_masks.push_back(m);
            free_total += __builtin_popcountll(m);
        }
        for (uint64_t fill = 0; fill < (uint64_t{1} << free_total); ++fill) {
            std::vector<uint64_t> basis;
            uint64_t rest = fill;
            for (size_t i = 0; i < cols.size(); ++i) {
                uint64_t row = uint64_t{1} << cols[i];
                for (int c = 0; c < 64; ++c) {
                    if (free_masks[i] & (uint64_t{1} << c)) {
                        if (rest & 1) {
                            row |= uint64_t{1} << c;
                        }
                        rest >>= 1;
                    }
                }
                basis.push_back(row);
            }
            out.push_back(std::move(basis));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tsow::gf2
