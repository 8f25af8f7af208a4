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

#ifndef TSOW_ORACLE_PROBLEM_H
#define TSOW_ORACLE_PROBLEM_H

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsow/bits.h"

namespace tsow {

/// How a problem setting is encoded in register B.
enum class Encoding {
    kCompact,  // b is the hidden datum itself
    kTable,    // b is the concatenated function table over the domain
};

std::string_view encoding_name(Encoding e);

/// An oracle problem: Bob picks b from sigma, Alice queries f_b(a) and must
/// output s(b).
///
/// Answers are addressed by (setting index, domain index); builtins compute
/// them on demand, file-defined problems look them up in a table. Instances
/// are immutable after construction.
class OracleProblem {
   public:
    using AnswerFn = std::function<uint64_t(size_t setting_index, size_t domain_index)>;

    struct Tables {
        std::string name;
        SettingSet sigma;
        std::vector<Bits> domain;
        int answer_width = 0;
        AnswerFn answer;
        std::vector<Bits> solutions;  // [setting index]
        Encoding encoding = Encoding::kCompact;
    };

    /// Validates every invariant and throws kInvalidProblem naming the
    /// offending field.
    explicit OracleProblem(Tables tables);

    const std::string &name() const { return t_.name; }
    const SettingSet &sigma() const { return t_.sigma; }
    const std::vector<Bits> &domain() const { return t_.domain; }
    int setting_width() const { return t_.sigma.width(); }
    int argument_width() const { return t_.domain.front().width; }
    int answer_width() const { return t_.answer_width; }
    int solution_width() const { return t_.solutions.front().width; }
    Encoding encoding() const { return t_.encoding; }

    uint64_t answer_at(size_t setting_index, size_t domain_index) const {
        return t_.answer(setting_index, domain_index);
    }
    const Bits &solution_at(size_t setting_index) const { return t_.solutions[setting_index]; }

    /// f_b(a). Throws kInvalidSubset if b is not in sigma, kConfig if a is
    /// not in the domain.
    Bits answer(const Bits &b, const Bits &a) const;
    Bits solution(const Bits &b) const;

    std::optional<size_t> domain_index_of(uint64_t argument_value) const;
    size_t setting_index(const Bits &b) const;

    /// Distinct solution values in sigma, sorted.
    std::vector<Bits> solution_image() const;

    const Tables &tables() const { return t_; }

   private:
    Tables t_;
    std::unordered_map<uint64_t, size_t> domain_index_;
    bool dense_domain_ = false;
};

using ProblemPtr = std::shared_ptr<const OracleProblem>;

/// Search for the marked item: answer(b, a) = [a == b], solution(b) = b.
ProblemPtr make_grover(int n);
/// Constant-vs-balanced over n-bit arguments; b is the 2^n-bit function table.
/// Solution bit: 0 = constant, 1 = balanced.
ProblemPtr make_deutsch_jozsa(int n);
/// answer(b, a) = parity(a & b), solution(b) = b.
ProblemPtr make_bernstein_vazirani(int n);
/// Two-to-one functions {0,1}^n -> {0,1}^n with a nonzero xor-period p;
/// b is the table of n-bit values, solution(b) = p.
ProblemPtr make_simon(int n);

/// A problem whose sigma has been replaced by a subset of it.
struct ReducedProblem {
    ProblemPtr base;
    SettingSet subset;

    /// Materializes the reduced problem as a standalone OracleProblem with
    /// identical answer and solution maps on the subset.
    ProblemPtr as_problem() const;
};

/// Throws kInvalidSubset if `subset` is empty or not contained in sigma.
ReducedProblem restrict_problem(const ProblemPtr &problem, const SettingSet &subset);

}  // namespace tsow

#endif
