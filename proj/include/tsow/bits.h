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

#ifndef TSOW_BITS_H
#define TSOW_BITS_H

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsow {

/// Fixed-width bit string of at most 64 bits.
///
/// Position 0 is the leftmost character of the printed string and the most
/// significant bit of `value`. With a common width, lexicographic order of the
/// strings coincides with numeric order of the values.
struct Bits {
    uint64_t value = 0;
    int width = 0;

    Bits() = default;
    Bits(uint64_t v, int w);

    /// Parses "0101" style strings. Throws kConfig on bad characters.
    static Bits parse(std::string_view text);
    /// Accepts binary, or hex with a 0x prefix padded to `width`.
    static Bits parse_with_width(std::string_view text, int width);

    bool at(int position) const { return (value >> (width - 1 - position)) & 1; }
    std::string str() const;

    auto operator<=>(const Bits &) const = default;
};

inline uint64_t low_mask(int width) { return width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1); }

inline int parity(uint64_t x) { return __builtin_parityll(x); }

/// Ordered set of distinct same-width settings (the problem's sigma or a
/// subset of it). Always kept in canonical (sorted) order.
class SettingSet {
   public:
    SettingSet() = default;
    /// Sorts the input. Throws kInvalidProblem on mixed widths or duplicates.
    explicit SettingSet(std::vector<Bits> members);
    SettingSet(std::initializer_list<const char *> members);

    const std::vector<Bits> &members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    int width() const { return members_.empty() ? 0 : members_.front().width; }
    const Bits &operator[](size_t i) const { return members_[i]; }

    std::optional<size_t> index_of(const Bits &b) const;
    bool contains(const Bits &b) const { return index_of(b).has_value(); }
    bool is_subset_of(const SettingSet &other) const;

    std::string str() const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SettingSet &) const = default;
    auto operator<=>(const SettingSet &other) const { return members_ <=> other.members_; }

   private:
    std::vector<Bits> members_;
};

}  // namespace tsow

#endif
