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

#include "tsow/symmetrization.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tsow/error.h"
#include "tsow/gf2.h"
#include "tsow/query_complexity.h"

namespace tsow {
namespace {

constexpr double kBitsTolerance = 1e-9;
constexpr int kMaxCoordinateWidth = 16;
constexpr int kMaxGf2Width = 4;

size_t image_size(const OracleProblem &problem, const SettingMask &mask) {
    std::vector<uint64_t> values;
    for (size_t i : mask.indices()) {
        values.push_back(problem.solution_at(i).value);
    }
    std::sort(values.begin(), values.end());
    return static_cast<size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

bool sizes_even(int r1, int r2, const PairOptions &options) {
    return options.near_even ? std::abs(r1 - r2) <= 1 : r1 == r2;
}

/// Outcome labels of one spec over sigma, grouped into cells.
struct SpecGroups {
    std::vector<uint64_t> labels;  // [setting index]
    std::unordered_map<uint64_t, SettingMask> cells;
    std::unordered_map<uint64_t, size_t> images;
};

class PairAnalyzer {
   public:
    PairAnalyzer(const OracleProblem &problem, const PairOptions &options)
        : problem_(problem),
          options_(options),
          total_image_(image_size(problem, SettingMask::full(problem.sigma().size()))) {}

    const SpecGroups &groups(const MeasurementSpec &spec) {
        const std::string key = spec.str();
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        SpecGroups g;
        const size_t count = problem_.sigma().size();
        g.labels.resize(count);
        for (size_t i = 0; i < count; ++i) {
            const uint64_t label = spec.label(problem_.sigma()[i]);
            g.labels[i] = label;
            auto cell = g.cells.try_emplace(label, count).first;
            cell->second.set(i);
        }
        for (const auto &[label, mask] : g.cells) {
            g.images[label] = image_size(problem_, mask);
        }
        return cache_.emplace(key, std::move(g)).first->second;
    }

    double bits(size_t image) const { return std::log2(double(total_image_)) - std::log2(double(image)); }

    /// Report plus the final share's cell.
    std::pair<ValidityReport, SettingMask> evaluate(size_t setting_index, const SharingPair &pair) {
        const SpecGroups &g1 = groups(pair.spec1);
        const SpecGroups &g2 = groups(pair.spec2);
        const uint64_t l1 = g1.labels[setting_index];
        const uint64_t l2 = g2.labels[setting_index];
        const SettingMask &cell1 = g1.cells.at(l1);
        const SettingMask &cell2 = g2.cells.at(l2);
        const size_t joint = image_size(problem_, cell1 & cell2);

        ValidityReport r;
        r.c1 = bits(g1.images.at(l1));
        r.c2 = bits(g2.images.at(l2));
        r.c12 = bits(joint);
        r.jointly_determining = joint == 1;
        r.even = std::abs(r.c1 - r.c2) <= (options_.near_even ? 1.0 : 0.0) + kBitsTolerance;
        r.non_redundant = r.c1 + r.c2 <= r.c12 + kBitsTolerance;
        r.setting_even = sizes_even(pair.spec1.rank(), pair.spec2.rank(), options_);
        return {r, cell2};
    }

   private:
    const OracleProblem &problem_;
    PairOptions options_;
    size_t total_image_;
    std::unordered_map<std::string, SpecGroups> cache_;
};

/// Initial-share sizes to enumerate for a register of `width` bits.
std::vector<int> share_sizes(int width, const PairOptions &options) {
    if (width % 2 == 0) {
        return {width / 2};
    }
    if (options.near_even && width > 1) {
        return {width / 2, width / 2 + 1};
    }
    return {};
}

void combinations(int width, int k, int start, std::vector<int> &current, std::vector<std::vector<int>> &out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int p = start; p < width; ++p) {
        current.push_back(p);
        combinations(width, k, p + 1, current, out);
        current.pop_back();
    }
}

MeasurementSpec final_spec(const OracleProblem &problem, const RegisterLayout &layout, const MeasurementSpec &spec,
                           Register final_register) {
    if (final_register == Register::kB) {
        return spec;
    }
    if (final_register != Register::kA) {
        throw Error(ErrorCode::kInvalidPair, "the final share is measured on B or A");
    }
    bool identity = layout.width(Register::kA) == problem.setting_width();
    for (size_t i = 0; identity && i < problem.sigma().size(); ++i) {
        identity = problem.solution_at(i).value == problem.sigma()[i].value;
    }
    if (!identity) {
        throw Error(ErrorCode::kInvalidPair,
                    problem.name() + ": measuring the final share on A needs A to hold the setting itself");
    }
    return spec.retarget(Register::kA, layout.width(Register::kA));
}

}  // namespace

std::string SharingPair::str() const { return spec1.str() + "|" + spec2.str(); }

void validate_pair(const SharingPair &pair, const PairOptions &options) {
    const MeasurementSpec &s1 = pair.spec1;
    const MeasurementSpec &s2 = pair.spec2;
    if (s1.reg() != Register::kB || s2.reg() != Register::kB) {
        throw Error(ErrorCode::kInvalidPair, "both shares must act on register B");
    }
    if (s1.register_width() != s2.register_width()) {
        throw Error(ErrorCode::kInvalidPair, "shares read registers of different widths");
    }
    if (s1.mode() != pair.mode || s2.mode() != pair.mode) {
        throw Error(ErrorCode::kInvalidPair, "share kind does not match the pair mode");
    }
    std::vector<uint64_t> all = s1.functionals();
    all.insert(all.end(), s2.functionals().begin(), s2.functionals().end());
    const int width = s1.register_width();
    if (s1.rank() + s2.rank() != width || gf2::rank(all) != width) {
        throw Error(ErrorCode::kInvalidPair, "shares " + pair.str() + " must be disjoint and jointly complete");
    }
    if (!sizes_even(s1.rank(), s2.rank(), options)) {
        throw Error(ErrorCode::kInvalidPair, "shares " + pair.str() + " have unequal sizes");
    }
}

SharingPair coordinate_pair(int width, std::vector<int> positions1, std::vector<int> positions2,
                            const PairOptions &options) {
    SharingPair pair{MeasurementSpec::coordinate(Register::kB, width, std::move(positions1)),
                     MeasurementSpec::coordinate(Register::kB, width, std::move(positions2)),
                     MeasurementMode::kCoordinate};
    validate_pair(pair, options);
    return pair;
}

SharingPair gf2_pair(int width, std::vector<uint64_t> functionals1, std::vector<uint64_t> functionals2,
                     const PairOptions &options) {
    SharingPair pair{MeasurementSpec::gf2_linear(Register::kB, width, std::move(functionals1)),
                     MeasurementSpec::gf2_linear(Register::kB, width, std::move(functionals2)),
                     MeasurementMode::kGf2Linear};
    validate_pair(pair, options);
    return pair;
}

Contribution contribution(const OracleProblem &problem, const Bits &setting, const MeasurementSpec &spec) {
    const size_t si = problem.setting_index(setting);
    PairAnalyzer analyzer(problem, {});
    const SpecGroups &g = analyzer.groups(spec);
    const uint64_t label = g.labels[si];
    return {g.cells.at(label).to_set(problem), analyzer.bits(g.images.at(label))};
}

ValidityReport is_valid_pair(const OracleProblem &problem, const Bits &setting, const SharingPair &pair,
                             const PairOptions &options) {
    validate_pair(pair, options);
    PairAnalyzer analyzer(problem, options);
    return analyzer.evaluate(problem.setting_index(setting), pair).first;
}

std::vector<SharingPair> candidate_pairs(const OracleProblem &problem, MeasurementMode mode,
                                         const PairOptions &options) {
    const int width = problem.setting_width();
    std::vector<SharingPair> pairs;
    if (mode == MeasurementMode::kCoordinate) {
        if (width > kMaxCoordinateWidth) {
            throw Error(ErrorCode::kSizeLimit, problem.name() + ": coordinate pairs need a setting width <= " +
                                                   std::to_string(kMaxCoordinateWidth));
        }
        for (int k : share_sizes(width, options)) {
            std::vector<std::vector<int>> subsets;
            std::vector<int> current;
            combinations(width, k, 0, current, subsets);
            for (const auto &first : subsets) {
                std::vector<int> second;
                for (int p = 0; p < width; ++p) {
                    if (!std::binary_search(first.begin(), first.end(), p)) {
                        second.push_back(p);
                    }
                }
                pairs.push_back({MeasurementSpec::coordinate(Register::kB, width, first),
                                 MeasurementSpec::coordinate(Register::kB, width, second),
                                 MeasurementMode::kCoordinate});
            }
        }
        return pairs;
    }
    if (problem.encoding() != Encoding::kCompact) {
        throw Error(ErrorCode::kModeNotSupported,
                    problem.name() + ": gf2-linear shares are defined for compact encodings only");
    }
    if (width > kMaxGf2Width) {
        throw Error(ErrorCode::kSizeLimit, problem.name() + ": gf2-linear pairs need a setting width <= " +
                                               std::to_string(kMaxGf2Width));
    }
    for (int k : share_sizes(width, options)) {
        const auto firsts = gf2::subspaces(width, k);
        const auto seconds = gf2::subspaces(width, width - k);
        for (const auto &v1 : firsts) {
            for (const auto &v2 : seconds) {
                std::vector<uint64_t> all = v1;
                all.insert(all.end(), v2.begin(), v2.end());
                if (gf2::rank(all) != width) {
                    continue;
                }
                pairs.push_back({MeasurementSpec::gf2_linear(Register::kB, width, v1),
                                 MeasurementSpec::gf2_linear(Register::kB, width, v2), MeasurementMode::kGf2Linear});
            }
        }
    }
    return pairs;
}

namespace {

SettingInstances collect(const OracleProblem &problem, size_t si, const std::vector<SharingPair> &pairs,
                         PairAnalyzer &analyzer) {
    SettingInstances out;
    out.setting = problem.sigma()[si];
    struct Pending {
        SettingMask cell;
        size_t representative;
        int count;
    };
    std::vector<Pending> pending;
    for (const SharingPair &pair : pairs) {
        auto [report, cell] = analyzer.evaluate(si, pair);
        if (!report.valid()) {
            continue;
        }
        out.valid_pairs.push_back(pair);
        auto it = std::find_if(pending.begin(), pending.end(), [&](const Pending &p) { return p.cell == cell; });
        if (it == pending.end()) {
            pending.push_back({cell, out.valid_pairs.size() - 1, 1});
        } else {
            ++it->count;
        }
    }
    for (const Pending &p : pending) {
        out.cells.push_back({p.cell.to_set(problem), out.valid_pairs[p.representative], p.count});
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const CellEntry &x, const CellEntry &y) { return x.cell < y.cell; });
    return out;
}

}  // namespace

SettingInstances enumerate_instances(const OracleProblem &problem, const Bits &setting, MeasurementMode mode,
                                     const PairOptions &options) {
    const size_t si = problem.setting_index(setting);
    const auto pairs = candidate_pairs(problem, mode, options);
    PairAnalyzer analyzer(problem, options);
    return collect(problem, si, pairs, analyzer);
}

std::vector<SettingInstances> enumerate_all_instances(const OracleProblem &problem, MeasurementMode mode,
                                                      const PairOptions &options) {
    const auto pairs = candidate_pairs(problem, mode, options);
    PairAnalyzer analyzer(problem, options);
    std::vector<SettingInstances> out;
    for (size_t si = 0; si < problem.sigma().size(); ++si) {
        out.push_back(collect(problem, si, pairs, analyzer));
    }
    return out;
}

SymmetrizationInstance make_instance(const ProblemPtr &problem, const AlgorithmUnitary &algo, const SharingPair &pair,
                                     const Bits &setting, Register final_register) {
    validate_pair(pair, {.near_even = true});
    const RegisterLayout &layout = algo.layout;
    SymmetrizationInstance inst;
    inst.pair = pair;
    inst.setting = setting;
    inst.final_register = final_register;
    inst.cell = contribution(*problem, setting, pair.spec2).cell;

    const StateVector output = apply_forward(init_superposed_input(*problem, layout), algo);
    const MeasurementSpec measured = final_spec(*problem, layout, pair.spec2, final_register);
    StateVector back = apply_backward(project(output, measured, pair.spec2.label(setting)).first, algo);
    if (back.norm_squared() < kStateTolerance * kStateTolerance) {
        throw Error(ErrorCode::kInstanceMismatch,
                    problem->name() + ": final share " + measured.str() + " has zero probability for " + setting.str());
    }
    inst.input_fidelity = fidelity(back, cell_superposition(inst.cell, layout));
    if (inst.input_fidelity < 1.0 - kStateTolerance) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", inst.input_fidelity);
        throw Error(ErrorCode::kInstanceMismatch, problem->name() + ": pair " + pair.str() + " at b=" +
                                                      setting.str() + " propagates back with fidelity " + buf);
    }
    inst.instance_input = back.normalized_copy();
    inst.instance_output = apply_forward(inst.instance_input, algo);
    return inst;
}

double bob_invariance_check(const ProblemPtr &problem, const AlgorithmUnitary &algo, const SharingPair &pair,
                            const Bits &setting, Register final_register) {
    validate_pair(pair, {.near_even = true});
    const RegisterLayout &layout = algo.layout;
    const StateVector start = init_superposed_input(*problem, layout);
    const StateVector first = project(start, pair.spec1, pair.spec1.label(setting)).first;
    const StateVector output = apply_forward(first, algo);
    const MeasurementSpec measured = final_spec(*problem, layout, pair.spec2, final_register);
    const StateVector back = apply_backward(project(output, measured, pair.spec2.label(setting)).first, algo);
    if (back.norm_squared() < kStateTolerance * kStateTolerance) {
        return 0.0;
    }
    return fidelity(back, StateVector::basis(layout, setting.value, 0, 0));
}

RebuildReport rebuild_check(const ProblemPtr &problem, const AlgorithmUnitary &algo, MeasurementMode mode,
                            const PairOptions &options) {
    const RegisterLayout &layout = algo.layout;
    RebuildReport report;
    std::vector<Amplitude> sum(layout.dimension(), Amplitude{0.0, 0.0});
    for (const SettingInstances &s : enumerate_all_instances(*problem, mode, options)) {
        if (s.no_valid_pair()) {
            report.no_valid_pair.push_back(s.setting);
        }
        for (const CellEntry &entry : s.cells) {
            const SymmetrizationInstance inst = make_instance(problem, algo, entry.representative, s.setting);
            const auto amps = inst.instance_output.amplitudes();
            for (size_t i = 0; i < amps.size(); ++i) {
                sum[i] += amps[i];
            }
            ++report.instance_count;
        }
    }
    const StateVector total(layout, std::move(sum), false);
    const double mass = total.norm_squared();
    if (mass < kStateTolerance * kStateTolerance) {
        return report;
    }
    report.fidelity = fidelity(total, apply_forward(init_superposed_input(*problem, layout), algo));
    report.proportional = report.fidelity >= 1.0 - kStateTolerance;

    // Split the mass of the sum by setting, on and off its canonical answer.
    const Slice bs = layout.slice(Register::kB);
    const Slice as = layout.slice(Register::kA);
    std::unordered_map<uint64_t, size_t> index_of;
    for (size_t si = 0; si < problem->sigma().size(); ++si) {
        index_of[problem->sigma()[si].value] = si;
    }
    std::vector<double> on(index_of.size(), 0.0);
    std::vector<double> off(index_of.size(), 0.0);
    double stray = 0.0;
    const auto amps = total.amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        auto it = index_of.find(bs.extract(i));
        if (it == index_of.end()) {
            stray += p;
        } else if (as.extract(i) == problem->solution_at(it->second).value) {
            on[it->second] += p;
        } else {
            off[it->second] += p;
        }
    }
    report.support_ok = report.no_valid_pair.empty() && stray <= kStateTolerance * mass;
    for (size_t si = 0; si < on.size(); ++si) {
        report.weights.push_back((on[si] + off[si]) / mass);
        if (on[si] / mass <= 1e-12 || off[si] > kStateTolerance * mass) {
            report.support_ok = false;
        }
    }
    return report;
}

}  // namespace tsow
