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

#include "tsow/oracle_problem.h"

#include <algorithm>
#include <set>

#include "tsow/error.h"

namespace tsow {

std::string_view encoding_name(Encoding e) { return e == Encoding::kCompact ? "compact" : "table"; }

namespace {

void require(bool ok, const std::string &field, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::kInvalidProblem, "'" + field + "': " + what);
    }
}

std::vector<Bits> all_strings(int n) {
    std::vector<Bits> out;
    out.reserve(size_t{1} << n);
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
        out.emplace_back(v, n);
    }
    return out;
}

void require_range(int n, int lo, int hi, const char *family) {
    if (n < lo || n > hi) {
        throw Error(ErrorCode::kSizeLimit, std::string(family) + " requires " + std::to_string(lo) + " <= n <= " +
                                               std::to_string(hi) + ", got " + std::to_string(n));
    }
}

}  // namespace

OracleProblem::OracleProblem(Tables tables) : t_(std::move(tables)) {
    require(!t_.name.empty(), "name", "must be nonempty");
    require(!t_.sigma.empty(), "settings", "sigma must be nonempty");
    require(!t_.domain.empty(), "domain", "must be nonempty");
    require(t_.answer_width >= 1 && t_.answer_width <= 64, "answer_width", "must be in [1, 64]");
    require(static_cast<bool>(t_.answer), "answers", "no answer map supplied");
    require(t_.solutions.size() == t_.sigma.size(), "solutions", "must have one entry per setting");

    std::set<uint64_t> seen;
    for (size_t i = 0; i < t_.domain.size(); ++i) {
        const Bits &a = t_.domain[i];
        require(a.width == t_.domain.front().width, "domain", "mixed argument widths");
        require(seen.insert(a.value).second, "domain", "duplicate argument " + a.str());
        domain_index_.emplace(a.value, i);
    }
    dense_domain_ = true;
    for (size_t i = 0; i < t_.domain.size(); ++i) {
        dense_domain_ = dense_domain_ && t_.domain[i].value == i;
    }
    for (const Bits &s : t_.solutions) {
        require(s.width == t_.solutions.front().width, "solutions", "mixed solution widths");
    }

    const uint64_t answer_mask = low_mask(t_.answer_width);
    for (size_t si = 0; si < t_.sigma.size(); ++si) {
        for (size_t ai = 0; ai < t_.domain.size(); ++ai) {
            uint64_t v = t_.answer(si, ai);
            require((v & ~answer_mask) == 0, "answers",
                    "answer for setting " + t_.sigma[si].str() + " exceeds answer width");
        }
    }

    if (t_.encoding == Encoding::kTable) {
        size_t table_bits = t_.domain.size() * static_cast<size_t>(t_.answer_width);
        require(table_bits == static_cast<size_t>(t_.sigma.width()), "setting_width",
                "table encoding needs setting width = |domain| * answer width");
        for (size_t si = 0; si < t_.sigma.size(); ++si) {
            uint64_t packed = 0;
            for (size_t ai = 0; ai < t_.domain.size(); ++ai) {
                packed = (t_.answer_width == 64 ? 0 : packed << t_.answer_width) | t_.answer(si, ai);
            }
            require(packed == t_.sigma[si].value, "answers",
                    "setting " + t_.sigma[si].str() + " is not the concatenated table of its answers");
        }
    }
}

std::optional<size_t> OracleProblem::domain_index_of(uint64_t argument_value) const {
    if (dense_domain_) {
        if (argument_value < t_.domain.size()) {
            return static_cast<size_t>(argument_value);
        }
        return std::nullopt;
    }
    auto it = domain_index_.find(argument_value);
    if (it == domain_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

size_t OracleProblem::setting_index(const Bits &b) const {
    auto idx = t_.sigma.index_of(b);
    if (!idx) {
        throw Error(ErrorCode::kInvalidSubset, "setting " + b.str() + " is not in sigma of " + t_.name);
    }
    return *idx;
}

Bits OracleProblem::answer(const Bits &b, const Bits &a) const {
    size_t si = setting_index(b);
    auto ai = a.width == argument_width() ? domain_index_of(a.value) : std::nullopt;
    if (!ai) {
        throw Error(ErrorCode::kConfig, "argument " + a.str() + " is not in the domain of " + t_.name);
    }
    return Bits(answer_at(si, *ai), t_.answer_width);
}

Bits OracleProblem::solution(const Bits &b) const { return t_.solutions[setting_index(b)]; }

std::vector<Bits> OracleProblem::solution_image() const {
    std::vector<Bits> out(t_.solutions);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ProblemPtr make_grover(int n) {
    require_range(n, 1, 12, "grover");
    OracleProblem::Tables t;
    t.name = "grover";
    t.sigma = SettingSet(all_strings(n));
    t.domain = all_strings(n);
    t.answer_width = 1;
    // sigma and domain are both the dense range [0, 2^n), so indices are values.
    t.answer = [](size_t si, size_t ai) -> uint64_t { return si == ai ? 1 : 0; };
    t.solutions = t.sigma.members();
    t.encoding = Encoding::kCompact;
    return std::make_shared<const OracleProblem>(std::move(t));
}

ProblemPtr make_deutsch_jozsa(int n) {
    require_range(n, 1, 3, "deutsch-jozsa");
    const int table_bits = 1 << n;
    std::vector<Bits> members;
    for (uint64_t v = 0; v < (uint64_t{1} << table_bits); ++v) {
        int ones = __builtin_popcountll(v);
        if (ones == 0 || ones == table_bits || ones == table_bits / 2) {
            members.emplace_back(v, table_bits);
        }
    }
    OracleProblem::Tables t;
    t.name = "deutsch-jozsa";
    t.sigma = SettingSet(members);
    t.domain = all_strings(n);
    t.answer_width = 1;
    auto values = std::make_shared<std::vector<uint64_t>>();
    for (const Bits &b : t.sigma) {
        values->push_back(b.value);
        int ones = __builtin_popcountll(b.value);
        t.solutions.emplace_back(ones == 0 || ones == table_bits ? 0 : 1, 1);
    }
    t.answer = [values, table_bits](size_t si, size_t ai) -> uint64_t {
        return ((*values)[si] >> (table_bits - 1 - static_cast<int>(ai))) & 1;
    };
    t.encoding = Encoding::kTable;
    return std::make_shared<const OracleProblem>(std::move(t));
}

ProblemPtr make_bernstein_vazirani(int n) {
    require_range(n, 1, 10, "bernstein-vazirani");
    OracleProblem::Tables t;
    t.name = "bernstein-vazirani";
    t.sigma = SettingSet(all_strings(n));
    t.domain = all_strings(n);
    t.answer_width = 1;
    t.answer = [](size_t si, size_t ai) -> uint64_t { return static_cast<uint64_t>(parity(si & ai)); };
    t.solutions = t.sigma.members();
    t.encoding = Encoding::kCompact;
    return std::make_shared<const OracleProblem>(std::move(t));
}

ProblemPtr make_simon(int n) {
    require_range(n, 2, 3, "simon");
    const uint64_t size = uint64_t{1} << n;
    const int table_bits = n * static_cast<int>(size);

    std::vector<Bits> members;
    std::vector<std::pair<uint64_t, uint64_t>> table_period;  // (table, period)
    for (uint64_t p = 1; p < size; ++p) {
        std::vector<uint64_t> reps;
        for (uint64_t x = 0; x < size; ++x) {
            if (x < (x ^ p)) {
                reps.push_back(x);
            }
        }
        // Ordered choices of distinct values for the cosets: walk all
        // size^|reps| assignments and keep the injective ones.
        std::vector<uint64_t> choice(reps.size(), 0);
        while (true) {
            std::vector<bool> used(size, false);
            bool injective = true;
            for (uint64_t c : choice) {
                if (used[c]) {
                    injective = false;
                    break;
                }
                used[c] = true;
            }
            if (injective) {
                std::vector<uint64_t> f(size);
                for (size_t i = 0; i < reps.size(); ++i) {
                    f[reps[i]] = choice[i];
                    f[reps[i] ^ p] = choice[i];
                }
                uint64_t packed = 0;
                for (uint64_t x = 0; x < size; ++x) {
                    packed = (packed << n) | f[x];
                }
                members.emplace_back(packed, table_bits);
                table_period.emplace_back(packed, p);
            }
            size_t k = 0;
            while (k < choice.size() && ++choice[k] == size) {
                choice[k++] = 0;
            }
            if (k == choice.size()) {
                break;
            }
        }
    }
    std::sort(table_period.begin(), table_period.end());

    OracleProblem::Tables t;
    t.name = "simon";
    t.sigma = SettingSet(members);
    t.domain = all_strings(n);
    t.answer_width = n;
    auto values = std::make_shared<std::vector<uint64_t>>();
    for (const auto &[table, period] : table_period) {
        values->push_back(table);
        t.solutions.emplace_back(period, n);
    }
    const uint64_t mask = low_mask(n);
    t.answer = [values, n, size, mask](size_t si, size_t ai) -> uint64_t {
        return ((*values)[si] >> (static_cast<uint64_t>(n) * (size - 1 - ai))) & mask;
    };
    t.encoding = Encoding::kTable;
    return std::make_shared<const OracleProblem>(std::move(t));
}

ReducedProblem restrict_problem(const ProblemPtr &problem, const SettingSet &subset) {
    if (subset.empty()) {
        throw Error(ErrorCode::kInvalidSubset, "subset is empty");
    }
    if (subset.width() != problem->setting_width() || !subset.is_subset_of(problem->sigma())) {
        throw Error(ErrorCode::kInvalidSubset, subset.str() + " is not a subset of sigma of " + problem->name());
    }
    return ReducedProblem{problem, subset};
}

ProblemPtr ReducedProblem::as_problem() const {
    auto index_map = std::make_shared<std::vector<size_t>>();
    OracleProblem::Tables t;
    t.name = base->name();
    t.sigma = subset;
    t.domain = base->domain();
    t.answer_width = base->answer_width();
    for (const Bits &b : subset) {
        size_t si = base->setting_index(b);
        index_map->push_back(si);
        t.solutions.push_back(base->solution_at(si));
    }
    ProblemPtr keep = base;
    t.answer = [keep, index_map](size_t si, size_t ai) { return keep->answer_at((*index_map)[si], ai); };
    t.encoding = base->encoding();
    return std::make_shared<const OracleProblem>(std::move(t));
}

}  // namespace tsow
