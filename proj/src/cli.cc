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

#include "tsow/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tsow/problem_io.h"
#include "tsow/report.h"

namespace tsow {
namespace {

struct Config {
    std::string problem;
    int n = 2;
    std::string setting;
    std::string mode = "coordinate";
    uint64_t seed = 0;
    std::string format = "table";
    std::string out_path;
    std::string problem_file;
    bool dump_states = false;
    bool near_even = false;
};

class Output {
   public:
    Output(const Config &config, std::ostream &out) : config_(config), out_(out) {}

    void emit(const std::string &text) {
        if (config_.out_path.empty()) {
            out_ << text;
            out_.flush();
            return;
        }
        std::ofstream file(config_.out_path, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::kConfig, "cannot write --out file '" + config_.out_path + "'");
        }
        file << text;
    }

    void emit(const Json &j) { emit(j.dump(2) + "\n"); }

   private:
    const Config &config_;
    std::ostream &out_;
};

Workload resolve(const Config &c) {
    if (!c.problem_file.empty()) {
        if (!c.problem.empty() && c.problem != "custom") {
            throw Error(ErrorCode::kConfig, "give either a problem name or --problem-file, not both");
        }
        return custom_workload(load_problem_file(c.problem_file));
    }
    if (c.problem.empty()) {
        throw Error(ErrorCode::kConfig, "missing problem (grover, dj, bv, simon) or --problem-file");
    }
    return make_workload(parse_family(c.problem), c.n);
}

Json config_json(const Config &c, const Workload *w) {
    Json j;
    j["problem"] = w ? w->problem->name() : c.problem;
    j["n"] = w ? w->n : c.n;
    j["mode"] = c.mode;
    j["near_even"] = c.near_even;
    j["seed"] = c.seed;
    j["rng"] = Rng::kName;
    j["setting"] = c.setting.empty() ? Json(nullptr) : Json(c.setting);
    return j;
}

std::vector<std::string> dump_lines(const StateVector &state) {
    std::ostringstream s;
    dump_state(s, state);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(s.str());
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

Bits resolve_setting(const Config &c, const OracleProblem &problem, Rng &rng) {
    if (c.setting == "random") {
        return choose_setting(problem, rng);
    }
    Bits b = Bits::parse_with_width(c.setting, problem.setting_width());
    problem.setting_index(b);  // kInvalidSubset outside sigma
    return b;
}

void simulate_simon(const Config &c, const Workload &w, Output &output) {
    Rng rng(c.seed);
    Json j = envelope("simulate");
    j["config"] = config_json(c, &w);
    j["representation"] = "sampling-controller";
    std::vector<Bits> settings;
    if (c.setting.empty()) {
        settings.assign(w.problem->sigma().begin(), w.problem->sigma().end());
    } else {
        settings.push_back(resolve_setting(c, *w.problem, rng));
    }
    Json runs = Json::array();
    std::ostringstream table;
    std::ostringstream csv;
    csv << "setting,period,recovered,runs,samples_orthogonal\n";
    int recovered = 0;
    int max_runs = 0;
    long total_runs = 0;
    bool orthogonal = true;
    for (const Bits &b : settings) {
        const SimonRun run = run_simon(w.problem, b, rng);
        const bool ok = run.period == w.problem->solution(b);
        recovered += ok ? 1 : 0;
        max_runs = std::max(max_runs, run.queries_used);
        total_runs += run.queries_used;
        orthogonal = orthogonal && run.samples_orthogonal;
        Json samples = Json::array();
        for (const Bits &y : run.samples) {
            samples.push_back(y.str());
        }
        runs.push_back({{"setting", b.str()},
                        {"period", run.period.str()},
                        {"recovered", ok},
                        {"runs", run.queries_used},
                        {"samples_orthogonal", run.samples_orthogonal},
                        {"samples", samples}});
        table << "  b=" << b.str() << "  period " << run.period.str() << (ok ? "" : " (WRONG)") << "  runs "
              << run.queries_used << '\n';
        csv << b.str() << ',' << run.period.str() << ',' << (ok ? "true" : "false") << ',' << run.queries_used << ','
            << (run.samples_orthogonal ? "true" : "false") << '\n';
    }
    const int count = static_cast<int>(settings.size());
    const double mean = double(total_runs) / double(count);
    j["settings_run"] = count;
    j["all_recovered"] = recovered == count;
    j["samples_orthogonal"] = orthogonal;
    j["max_runs"] = max_runs;
    j["mean_runs"] = mean;
    j["note"] = "each run is one oracle query; the output of a single run is not (b, s(b))";
    j["runs"] = runs;

    if (c.format == "json") {
        output.emit(j);
    } else if (c.format == "csv") {
        output.emit(csv.str());
    } else {
        std::ostringstream out;
        out << w.problem->name() << " n=" << w.n << " sampling controller, seed " << c.seed << '\n'
            << table.str() << "periods recovered: " << recovered << "/" << count << ", max runs " << max_runs
            << ", mean runs " << format_double(mean) << '\n';
        output.emit(out.str());
    }
    if (recovered != count || !orthogonal) {
        throw Error(ErrorCode::kVerificationFailed, "simon controller recovered " + std::to_string(recovered) + "/" +
                                                        std::to_string(count) + " periods");
    }
}

void cmd_simulate(const Config &c, Output &output) {
    const Workload w = resolve(c);
    if (w.family == Family::kSimon) {
        simulate_simon(c, w, output);
        return;
    }
    const AlgorithmUnitary algo = build_algorithm(w);
    Rng rng(c.seed);
    Json j = envelope("simulate");
    j["config"] = config_json(c, &w);
    j["algorithm"] = algo.name;
    std::ostringstream table;
    std::ostringstream csv;
    std::optional<Error> failure;
    StateVector state{RegisterLayout{}};

    if (c.setting.empty()) {
        const RunResult r = run_relativized(w.problem, algo, CanonicalPolicy::kReport);
        state = r.output_state;
        j["representation"] = "relativized";
        j["queries"] = r.queries_used;
        j["min_success"] = r.min_success();
        j["canonical"] = r.canonical;
        j["outcome_fidelity"] = r.outcome_fidelity;
        j["coherent_fidelity"] = r.coherent_fidelity;
        j["workspace_clean"] = r.workspace_clean;
        Json per = Json::array();
        csv << "setting,success\n";
        table << w.problem->name() << " n=" << w.n << " relativized, " << r.queries_used << " quer"
              << (r.queries_used == 1 ? "y" : "ies") << '\n';
        for (const SettingSuccess &s : r.per_setting_success) {
            per.push_back({{"setting", s.setting.str()}, {"success", s.probability}});
            csv << s.setting.str() << ',' << format_double(s.probability) << '\n';
            table << "  b=" << s.setting.str() << "  success " << format_double(s.probability) << '\n';
        }
        j["per_setting"] = per;
        table << "canonical (B, A) outcome distribution: " << (r.canonical ? "yes" : "no") << '\n';
        if (!r.canonical) {
            failure = Error(ErrorCode::kOutputNotCanonical,
                            w.problem->name() + ": outcome fidelity " + format_double(r.outcome_fidelity));
        }
    } else {
        const Bits b = resolve_setting(c, *w.problem, rng);
        const RunResult r = run_extended(w.problem, algo, b);
        state = r.output_state;
        const std::vector<double> dist = a_distribution(r.output_state, b);
        const size_t best = static_cast<size_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
        const Bits solution = w.problem->solution(b);
        const Bits outcome{best, algo.layout.width(Register::kA)};
        const double success = dist[solution.value];
        j["representation"] = "extended";
        j["resolved_setting"] = b.str();
        j["queries"] = r.queries_used;
        j["solution"] = solution.str();
        j["outcome"] = outcome.str();
        j["outcome_probability"] = dist[best];
        j["success"] = success;
        csv << "setting,solution,outcome,outcome_probability,queries\n"
            << b.str() << ',' << solution.str() << ',' << outcome.str() << ',' << format_double(dist[best]) << ','
            << r.queries_used << '\n';
        table << w.problem->name() << " n=" << w.n << " extended, b=" << b.str() << '\n'
              << "  queries " << r.queries_used << '\n'
              << "  outcome " << outcome.str() << " with probability " << format_double(dist[best]) << '\n'
              << "  solution " << solution.str() << " with probability " << format_double(success) << '\n';
        if (success < 1.0 - kStateTolerance) {
            failure = Error(ErrorCode::kOutputNotCanonical,
                            w.problem->name() + ": solution probability " + format_double(success) + " for b=" +
                                b.str());
        }
    }

    if (c.dump_states) {
        j["output_state"] = dump_lines(state);
        table << "output state (B A W, re, im):\n";
        dump_state(table, state);
    }
    if (c.format == "json") {
        output.emit(j);
    } else if (c.format == "csv") {
        output.emit(csv.str());
    } else {
        output.emit(table.str());
    }
    if (failure) {
        throw *failure;
    }
}

PredictOptions predict_options(const Config &c) {
    PredictOptions o;
    o.mode = parse_mode(c.mode);
    o.pairs.near_even = c.near_even;
    return o;
}

void cmd_predict(const Config &c, Output &output) {
    const Workload w = resolve(c);
    const PredictionReport r = predict(w, predict_options(c));
    if (c.format == "json") {
        Json j = envelope("predict");
        j["config"] = config_json(c, &w);
        j["report"] = to_json(r);
        output.emit(j);
    } else {
        output.emit(c.format == "csv" ? prediction_csv(r) : prediction_table(r));
    }
}

void cmd_compare(const Config &c, Output &output) {
    std::vector<Workload> workloads;
    if (c.problem == "all" && c.problem_file.empty()) {
        workloads = default_workloads();
    } else {
        workloads.push_back(resolve(c));
    }
    CompareOptions options;
    options.predict = predict_options(c);
    options.seed = c.seed;
    std::vector<ComparisonRow> rows;
    for (const Workload &w : workloads) {
        rows.push_back(compare(w, options));
    }
    if (c.format == "json") {
        Json j = envelope("compare");
        j["config"] = config_json(c, workloads.size() == 1 ? &workloads.front() : nullptr);
        Json arr = Json::array();
        for (const ComparisonRow &r : rows) {
            arr.push_back(to_json(r));
        }
        j["rows"] = arr;
        output.emit(j);
    } else {
        output.emit(c.format == "csv" ? comparison_csv(rows) : comparison_table(rows));
    }
}

void cmd_verify(const Config &c, Output &output) {
    const Workload w = resolve(c);
    VerifyOptions options;
    options.mode = parse_mode(c.mode);
    options.pairs.near_even = c.near_even;
    options.seed = c.seed;
    const VerificationReport r = verify_workload(w, options);
    if (c.format == "json") {
        Json j = envelope("verify");
        j["config"] = config_json(c, &w);
        j["report"] = to_json(r);
        output.emit(j);
    } else {
        output.emit(c.format == "csv" ? verification_csv(r) : verification_table(r));
    }
    if (!r.passed()) {
        std::string failed;
        for (const CheckResult &check : r.checks) {
            if (!check.passed) failed += (failed.empty() ? "" : ", ") + check.name;
        }
        throw Error(ErrorCode::kVerificationFailed, w.problem->name() + ": failed checks: " + failed);
    }
}

void cmd_probe_simon(const Config &c, Output &output) {
    const SimonProbeReport r = simon_advanced_knowledge_probe(c.n);
    if (c.format == "json") {
        Json j = envelope("probe-simon");
        j["config"] = config_json(c, nullptr);
        j["report"] = to_json(r);
        output.emit(j);
    } else {
        output.emit(c.format == "csv" ? probe_csv(r) : probe_table(r));
    }
}

struct ListedFamily {
    const char *name;
    const char *aliases;
    const char *n_range;
    const char *encoding;
    const char *algorithm;
};

constexpr ListedFamily kFamilies[] = {
    {"grover", "grover", "1-12", "compact", "n=2 one-query Grover; 2-8 phase-matched exact Grover"},
    {"deutsch-jozsa", "dj", "1-3", "table", "one xor query, then a query-free OR into A"},
    {"bernstein-vazirani", "bv", "1-10", "compact", "one xor query (exploratory)"},
    {"simon", "simon", "2-3", "table", "one-query circuit inside a sampling controller"},
};

void cmd_list(const Config &c, Output &output) {
    if (c.format == "json") {
        Json j = envelope("list");
        Json arr = Json::array();
        for (const ListedFamily &f : kFamilies) {
            arr.push_back({{"name", f.name},
                           {"alias", f.aliases},
                           {"n", f.n_range},
                           {"encoding", f.encoding},
                           {"algorithm", f.algorithm}});
        }
        j["problems"] = arr;
        output.emit(j);
        return;
    }
    std::ostringstream out;
    if (c.format == "csv") {
        out << "name,alias,n,encoding,algorithm\n";
        for (const ListedFamily &f : kFamilies) {
            out << f.name << ',' << f.aliases << ',' << f.n_range << ',' << f.encoding << ',' << csv_field(f.algorithm)
                << '\n';
        }
    } else {
        char line[200];
        for (const ListedFamily &f : kFamilies) {
            std::snprintf(line, sizeof line, "%-20s %-7s n=%-5s %-8s %s\n", f.name, f.aliases, f.n_range, f.encoding,
                          f.algorithm);
            out << line;
        }
        out << "custom problems: --problem-file <json>\n";
    }
    output.emit(out.str());
}

void add_common(CLI::App *sub, Config &c, bool takes_problem) {
    if (takes_problem) {
        sub->add_option("problem", c.problem, "grover | dj | bv | simon (compare also accepts 'all')");
        sub->add_option("--n", c.n, "problem size")->check(CLI::Range(1, 64));
        sub->add_option("--problem-file", c.problem_file, "custom problem JSON");
        sub->add_option("--mode", c.mode, "coordinate | gf2-linear")
            ->check(CLI::IsMember({"coordinate", "gf2-linear"}));
        sub->add_flag("--near-even", c.near_even, "accept shares whose sizes differ by one");
    }
    sub->add_option("--seed", c.seed, "seed for every random choice");
    sub->add_option("--format", c.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", c.out_path, "write the report to a file");
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kConfig:
        case ErrorCode::kInvalidProblem:
        case ErrorCode::kSizeLimit:
        case ErrorCode::kInvalidSubset:
        case ErrorCode::kModeNotSupported:
        case ErrorCode::kInvalidPair:
        case ErrorCode::kUseLongVariant:
        case ErrorCode::kUnknownOutcome:
            return 2;
        case ErrorCode::kLayoutMismatch:
        case ErrorCode::kCalibrationFailed:
        case ErrorCode::kPhaseNeedsBinary:
        case ErrorCode::kSearchBudgetExceeded:
        case ErrorCode::kNotUnitary:
        case ErrorCode::kLengthMismatch:
            return 3;
        case ErrorCode::kOutputNotCanonical:
        case ErrorCode::kInstanceMismatch:
        case ErrorCode::kVerificationFailed:
        case ErrorCode::kSamplingStall:
        case ErrorCode::kUndetermined:
        case ErrorCode::kNoValidPair:
            return 4;
    }
    return 4;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Config c;
    CLI::App app{"tsow: oracle problems, time-symmetrized instances and the advanced-knowledge rule"};
    app.require_subcommand(1, 1);

    CLI::App *list = app.add_subcommand("list", "list built-in problem families");
    add_common(list, c, false);
    CLI::App *simulate = app.add_subcommand("simulate", "run the quantum algorithm");
    add_common(simulate, c, true);
    simulate->add_option("--setting", c.setting, "Bob's setting b (bits, 0x-hex, or 'random'); omit for all");
    simulate->add_flag("--dump-states", c.dump_states, "include the output state");
    CLI::App *predict_cmd = app.add_subcommand("predict", "apply the advanced-knowledge rule");
    add_common(predict_cmd, c, true);
    CLI::App *compare_cmd = app.add_subcommand("compare", "classical vs predicted vs simulated query counts");
    add_common(compare_cmd, c, true);
    CLI::App *verify = app.add_subcommand("verify", "instance, invariance, rebuild and property checks");
    add_common(verify, c, true);
    CLI::App *probe = app.add_subcommand("probe-simon", "advanced-knowledge probe for Simon's problem");
    add_common(probe, c, false);
    probe->add_option("--n", c.n, "problem size (2)");

    auto fail = [&](std::string_view code, std::string_view message, int status) {
        err << error_json(code, message).dump() << '\n';
        return status;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        return fail(error_code_name(ErrorCode::kConfig), e.what(), 2);
    }

    try {
        Output output(c, out);
        max_qubits();  // validates TSOW_MAX_QUBITS up front
        if (list->parsed()) cmd_list(c, output);
        if (simulate->parsed()) cmd_simulate(c, output);
        if (predict_cmd->parsed()) cmd_predict(c, output);
        if (compare_cmd->parsed()) cmd_compare(c, output);
        if (verify->parsed()) cmd_verify(c, output);
        if (probe->parsed()) cmd_probe_simon(c, output);
    } catch (const Error &e) {
        return fail(error_code_name(e.code()), e.detail(), exit_code_for(e.code()));
    } catch (const std::exception &e) {
        return fail("INTERNAL", e.what(), 1);
    }
    return 0;
}

}  // namespace tsow
