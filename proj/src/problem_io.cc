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

#include "tsow/problem_io.h"

#include <fstream>
#include <map>

#include "tsow/error.h"

namespace tsow {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &key, const std::string &what) {
    throw Error(ErrorCode::kInvalidProblem, "'" + key + "': " + what);
}

const json &member(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        fail(key, "missing");
    }
    return doc.at(key);
}

std::string as_string(const json &v, const std::string &key) {
    if (!v.is_string()) {
        fail(key, "expected a string");
    }
    return v.get<std::string>();
}

Bits parse_at(const json &v, int width, const std::string &key) {
    std::string text = as_string(v, key);
    try {
        return Bits::parse_with_width(text, width);
    } catch (const Error &e) {
        fail(key, e.detail());
    }
}

Bits parse_free(const json &v, const std::string &key) {
    std::string text = as_string(v, key);
    try {
        return Bits::parse(text);
    } catch (const Error &e) {
        fail(key, e.detail());
    }
}

}  // namespace

ProblemPtr problem_from_json(const json &doc) {
    if (!doc.is_object()) {
        fail("<root>", "expected a JSON object");
    }
    OracleProblem::Tables t;
    t.name = as_string(member(doc, "name"), "name");

    const json &width_v = member(doc, "setting_width");
    if (!width_v.is_number_integer() || width_v.get<int>() < 1 || width_v.get<int>() > 64) {
        fail("setting_width", "expected an integer in [1, 64]");
    }
    const int width = width_v.get<int>();

    const std::string enc = as_string(member(doc, "encoding"), "encoding");
    if (enc == "compact") {
        t.encoding = Encoding::kCompact;
    } else if (enc == "table") {
        t.encoding = Encoding::kTable;
    } else {
        fail("encoding", "expected \"compact\" or \"table\", got \"" + enc + "\"");
    }

    const json &settings_v = member(doc, "settings");
    if (!settings_v.is_array() || settings_v.empty()) {
        fail("settings", "expected a nonempty array");
    }
    std::vector<Bits> settings;
    for (size_t i = 0; i < settings_v.size(); ++i) {
        settings.push_back(parse_at(settings_v[i], width, "settings[" + std::to_string(i) + "]"));
    }
    try {
        t.sigma = SettingSet(settings);
    } catch (const Error &e) {
        fail("settings", e.detail());
    }

    const json &domain_v = member(doc, "domain");
    if (!domain_v.is_array() || domain_v.empty()) {
        fail("domain", "expected a nonempty array");
    }
    for (size_t i = 0; i < domain_v.size(); ++i) {
        Bits a = parse_free(domain_v[i], "domain[" + std::to_string(i) + "]");
        if (!t.domain.empty() && a.width != t.domain.front().width) {
            fail("domain[" + std::to_string(i) + "]", "argument widths differ");
        }
        t.domain.push_back(a);
    }

    const json &answers_v = member(doc, "answers");
    if (!answers_v.is_object()) {
        fail("answers", "expected an object keyed by setting");
    }
    const json &solutions_v = member(doc, "solutions");
    if (!solutions_v.is_object()) {
        fail("solutions", "expected an object keyed by setting");
    }

    std::map<uint64_t, std::vector<uint64_t>> answer_rows;
    int answer_width = -1;
    for (const auto &[key, row] : answers_v.items()) {
        std::string where = "answers[\"" + key + "\"]";
        Bits b = parse_at(json(key), width, where);
        if (!t.sigma.contains(b)) {
            fail(where, "setting not listed in 'settings'");
        }
        if (!row.is_array() || row.size() != t.domain.size()) {
            fail(where, "expected one answer per domain element (" + std::to_string(t.domain.size()) + ")");
        }
        std::vector<uint64_t> values;
        for (size_t i = 0; i < row.size(); ++i) {
            std::string at = where + "[" + std::to_string(i) + "]";
            Bits v = parse_free(row[i], at);
            if (answer_width < 0) {
                answer_width = v.width;
            } else if (v.width != answer_width) {
                fail(at, "answer width differs from earlier answers");
            }
            values.push_back(v.value);
        }
        if (!answer_rows.emplace(b.value, std::move(values)).second) {
            fail(where, "duplicate setting key");
        }
    }
    std::map<uint64_t, Bits> solution_map;
    for (const auto &[key, value] : solutions_v.items()) {
        std::string where = "solutions[\"" + key + "\"]";
        Bits b = parse_at(json(key), width, where);
        if (!t.sigma.contains(b)) {
            fail(where, "setting not listed in 'settings'");
        }
        if (!solution_map.emplace(b.value, parse_free(value, where)).second) {
            fail(where, "duplicate setting key");
        }
    }

    auto table = std::make_shared<std::vector<std::vector<uint64_t>>>();
    for (const Bits &b : t.sigma) {
        auto row = answer_rows.find(b.value);
        if (row == answer_rows.end()) {
            fail("answers[\"" + b.str() + "\"]", "missing");
        }
        table->push_back(row->second);
        auto sol = solution_map.find(b.value);
        if (sol == solution_map.end()) {
            fail("solutions[\"" + b.str() + "\"]", "missing");
        }
        if (!t.solutions.empty() && sol->second.width != t.solutions.front().width) {
            fail("solutions[\"" + b.str() + "\"]", "solution width differs from earlier solutions");
        }
        t.solutions.push_back(sol->second);
    }
    if (answer_width < 1) {
        fail("answers", "answers must be nonempty bit strings");
    }
    t.answer_width = answer_width;
    t.answer = [table](size_t si, size_t ai) { return (*table)[si][ai]; };
    return std::make_shared<const OracleProblem>(std::move(t));
}

ProblemPtr load_problem_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kConfig, "cannot open problem file " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::kInvalidProblem, "'<root>': " + std::string(e.what()));
    }
    return problem_from_json(doc);
}

json problem_to_json(const OracleProblem &problem) {
    json doc;
    doc["name"] = problem.name();
    doc["setting_width"] = problem.setting_width();
    doc["encoding"] = std::string(encoding_name(problem.encoding()));
    json settings = json::array();
    json answers = json::object();
    json solutions = json::object();
    for (size_t si = 0; si < problem.sigma().size(); ++si) {
        const std::string key = problem.sigma()[si].str();
        settings.push_back(key);
        json row = json::array();
        for (size_t ai = 0; ai < problem.domain().size(); ++ai) {
            row.push_back(Bits(problem.answer_at(si, ai), problem.answer_width()).str());
        }
        answers[key] = row;
        solutions[key] = problem.solution_at(si).str();
    }
    json domain = json::array();
    for (const Bits &a : problem.domain()) {
        domain.push_back(a.str());
    }
    doc["settings"] = settings;
    doc["domain"] = domain;
    doc["answers"] = answers;
    doc["solutions"] = solutions;
    return doc;
}

}  // namespace tsow
