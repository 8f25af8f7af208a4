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

#include "tsow/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tsow {
namespace {

template <typename T>
Json optional_json(const std::optional<T> &value) {
    return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::string optional_text(const std::optional<T> &value) {
    return value ? std::to_string(*value) : std::string();
}

Json bits_array(const std::vector<Bits> &values) {
    Json out = Json::array();
    for (const Bits &b : values) {
        out.push_back(b.str());
    }
    return out;
}

}  // namespace

Json envelope(std::string_view command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

Json error_json(std::string_view code, std::string_view message) {
    Json j;
    j["schema"] = kSchema;
    j["error"] = {{"code", code}, {"message", message}};
    return j;
}

Json to_json(const SettingSet &cell) {
    Json out = Json::array();
    for (const Bits &b : cell) {
        out.push_back(b.str());
    }
    return out;
}

Json to_json(const PredictionReport &r) {
    Json settings = Json::array();
    for (const SettingPrediction &s : r.settings) {
        Json instances = Json::array();
        for (const InstanceDepth &d : s.instances) {
            instances.push_back({{"cell", to_json(d.cell)}, {"pair", d.representative.str()}, {"depth", d.depth}});
        }
        settings.push_back({{"setting", s.setting.str()},
                            {"prediction", optional_json(s.prediction)},
                            {"agreement", s.agreement},
                            {"instances", instances}});
    }
    Json j;
    j["problem"] = r.problem;
    j["n"] = r.n;
    j["mode"] = mode_name(r.mode);
    j["near_even"] = r.near_even;
    j["exploratory"] = r.exploratory;
    j["global_prediction"] = optional_json(r.global_prediction);
    j["all_agree"] = r.all_agree;
    j["no_valid_pair"] = bits_array(r.no_valid_pair);
    j["notes"] = r.notes;
    j["settings"] = settings;
    return j;
}

Json to_json(const ComparisonRow &row) {
    Json j;
    j["problem"] = row.problem;
    j["n"] = row.n;
    j["classical_depth"] = optional_json(row.classical_depth);
    j["predicted_quantum"] = optional_json(row.predicted_quantum);
    j["simulated_quantum_queries"] = optional_json(row.simulated_quantum_queries);
    j["simulated_success"] = optional_json(row.simulated_success);
    j["exploratory"] = row.exploratory;
    j["annotations"] = row.annotations;
    return j;
}

Json to_json(const RebuildReport &r) {
    Json j;
    j["support_ok"] = r.support_ok;
    j["proportional"] = r.proportional;
    j["fidelity"] = r.fidelity;
    j["instance_count"] = r.instance_count;
    j["weights"] = r.weights;
    j["no_valid_pair"] = bits_array(r.no_valid_pair);
    return j;
}

Json to_json(const VerificationReport &r) {
    Json checks = Json::array();
    for (const CheckResult &c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    }
    Json j;
    j["problem"] = r.problem;
    j["n"] = r.n;
    j["mode"] = mode_name(r.mode);
    j["passed"] = r.passed();
    j["checks"] = checks;
    j["rebuild"] = r.rebuild ? to_json(*r.rebuild) : Json(nullptr);
    return j;
}

Json to_json(const SimonProbeReport &r) {
    Json settings = Json::array();
    for (const ProbeSetting &s : r.settings) {
        Json cells = Json::array();
        for (const ProbeCell &c : s.cells) {
            cells.push_back({{"cell", to_json(c.cell)},
                             {"pair", c.representative.str()},
                             {"depth", c.depth},
                             {"plain_depth", c.plain_depth}});
        }
        Json aligned = Json::array();
        for (const AlignedHalf &h : s.aligned) {
            aligned.push_back({{"pair", h.pair.str()}, {"repeated_value", h.repeated_value}, {"valid", h.valid}});
        }
        settings.push_back({{"setting", s.setting.str()},
                            {"period", s.period.str()},
                            {"has_depth_one", s.has_depth_one},
                            {"cells", cells},
                            {"aligned_halves", aligned}});
    }
    Json j;
    j["n"] = r.n;
    j["settings_with_depth_one"] = r.settings_with_depth_one;
    j["depth_one_everywhere"] = r.depth_one_everywhere;
    j["depths_match_plain"] = r.depths_match_plain;
    j["aligned_checked"] = r.aligned_checked;
    j["aligned_with_repeat"] = r.aligned_with_repeat;
    j["aligned_repeat_accepted"] = r.aligned_repeat_accepted;
    j["aligned_clean_rejected"] = r.aligned_clean_rejected;
    j["settings"] = settings;
    return j;
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::ostringstream out;
    out << "problem,n,classical_depth,predicted_quantum,simulated_quantum_queries,simulated_success\n";
    for (const ComparisonRow &r : rows) {
        out << csv_field(r.problem) << ',' << r.n << ',' << optional_text(r.classical_depth) << ','
            << optional_text(r.predicted_quantum) << ',' << optional_text(r.simulated_quantum_queries) << ','
            << (r.simulated_success ? format_double(*r.simulated_success) : "") << '\n';
    }
    return out.str();
}

std::string comparison_table(const std::vector<ComparisonRow> &rows) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-20s %3s %10s %10s %8s %14s\n", "problem", "n", "classical", "predicted",
                  "quantum", "success");
    out << line;
    for (const ComparisonRow &r : rows) {
        const std::string classical = r.classical_depth ? std::to_string(*r.classical_depth) : "-";
        const std::string predicted = r.predicted_quantum ? std::to_string(*r.predicted_quantum) : "-";
        const std::string quantum = r.simulated_quantum_queries ? std::to_string(*r.simulated_quantum_queries) : "-";
        const std::string success = r.simulated_success ? format_double(*r.simulated_success) : "-";
        std::snprintf(line, sizeof line, "%-20s %3d %10s %10s %8s %14s\n", r.problem.c_str(), r.n,
                      classical.c_str(), predicted.c_str(), quantum.c_str(), success.c_str());
        out << line;
        for (const std::string &a : r.annotations) {
            out << "    note: " << a << '\n';
        }
    }
    return out.str();
}

std::string prediction_csv(const PredictionReport &r) {
    std::ostringstream out;
    out << "setting,cell,pair,depth\n";
    for (const SettingPrediction &s : r.settings) {
        if (s.instances.empty()) {
            out << s.setting.str() << ",,,\n";
        }
        for (const InstanceDepth &d : s.instances) {
            out << s.setting.str() << ',' << csv_field(d.cell.str()) << ',' << csv_field(d.representative.str())
                << ',' << d.depth << '\n';
        }
    }
    return out.str();
}

std::string prediction_table(const PredictionReport &r) {
    std::ostringstream out;
    out << r.problem << " n=" << r.n << " mode=" << mode_name(r.mode) << (r.near_even ? " near-even" : "") << '\n';
    for (const SettingPrediction &s : r.settings) {
        out << "  b=" << s.setting.str() << "  prediction " << (s.prediction ? std::to_string(*s.prediction) : "-")
            << (s.agreement ? "" : "  (instances disagree)") << '\n';
        for (const InstanceDepth &d : s.instances) {
            out << "    cell " << d.cell.str() << "  via " << d.representative.str() << "  depth " << d.depth << '\n';
        }
        if (s.instances.empty()) {
            out << "    NO_VALID_PAIR\n";
        }
    }
    out << "global prediction: " << (r.global_prediction ? std::to_string(*r.global_prediction) : "-") << '\n';
    for (const std::string &n : r.notes) {
        out << "note: " << n << '\n';
    }
    return out.str();
}

std::string verification_csv(const VerificationReport &r) {
    std::ostringstream out;
    out << "check,passed,skipped,detail\n";
    for (const CheckResult &c : r.checks) {
        out << c.name << ',' << (c.passed ? "true" : "false") << ',' << (c.skipped ? "true" : "false") << ','
            << csv_field(c.detail) << '\n';
    }
    return out.str();
}

std::string verification_table(const VerificationReport &r) {
    std::ostringstream out;
    out << r.problem << " n=" << r.n << " mode=" << mode_name(r.mode) << '\n';
    for (const CheckResult &c : r.checks) {
        const char *status = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
        char line[64];
        std::snprintf(line, sizeof line, "  %-4s %-20s ", status, c.name.c_str());
        out << line << c.detail << '\n';
    }
    if (r.rebuild) {
        const std::vector<double> &weights = r.rebuild->weights;
        const size_t shown = std::min<size_t>(weights.size(), 16);
        out << "  rebuild weights:";
        for (size_t i = 0; i < shown; ++i) {
            out << ' ' << format_double(weights[i]);
        }
        out << (shown < weights.size() ? " ... (" + std::to_string(weights.size()) + " settings)" : "") << '\n';
    }
    out << (r.passed() ? "all checks passed" : "verification FAILED") << '\n';
    return out.str();
}

std::string probe_csv(const SimonProbeReport &r) {
    std::ostringstream out;
    out << "setting,period,cell,pair,depth,plain_depth\n";
    for (const ProbeSetting &s : r.settings) {
        for (const ProbeCell &c : s.cells) {
            out << s.setting.str() << ',' << s.period.str() << ',' << csv_field(c.cell.str()) << ','
                << csv_field(c.representative.str()) << ',' << c.depth << ',' << c.plain_depth << '\n';
        }
    }
    return out.str();
}

std::string probe_table(const SimonProbeReport &r) {
    std::ostringstream out;
    out << "simon n=" << r.n << " advanced-knowledge probe (coordinate pairs over the function table)\n";
    for (const ProbeSetting &s : r.settings) {
        int min_depth = -1;
        int max_depth = -1;
        for (const ProbeCell &c : s.cells) {
            min_depth = min_depth < 0 ? c.depth : std::min(min_depth, c.depth);
            max_depth = std::max(max_depth, c.depth);
        }
        out << "  b=" << s.setting.str() << " p=" << s.period.str() << "  cells " << s.cells.size()
            << "  depths " << min_depth << ".." << max_depth << (s.has_depth_one ? "  depth-1 instance" : "") << '\n';
    }
    out << "settings with a depth-1 instance: " << r.settings_with_depth_one << "/" << r.settings.size() << '\n';
    out << "single-evaluation claim holds for every setting: " << (r.depth_one_everywhere ? "yes" : "no") << '\n';
    out << "memoized depths equal plain recomputation: " << (r.depths_match_plain ? "yes" : "no") << '\n';
    out << "entry-aligned halves: " << r.aligned_checked << " checked, " << r.aligned_with_repeat
        << " with a repeated value, " << r.aligned_repeat_accepted << " of those accepted, "
        << r.aligned_clean_rejected << " repetition-free halves rejected\n";
    return out.str();
}

}  // namespace tsow
