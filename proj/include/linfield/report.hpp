/*
 * Copyright 2026 The linfield Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file report.hpp
 * @brief Check reports with a stable JSON schema.
 *
 * {tool, version, command, input, seed, checks: [{name, pass, witness?, values}],
 *  all_pass, timing: {seconds}}. Keys keep insertion order; only `timing`
 * varies between identical runs.
 */

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "ff/arith.hpp"
#include "json.hpp"

namespace linfield {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "linfield";
inline constexpr const char* kVersion = "1.0.0";

struct Check {
    std::string name;
    bool pass = false;
    std::optional<std::string> witness;
    Json values = Json::object();
};

class Report {
public:
    Report(std::string command, Json input, u64 seed = 0)
        : command_(std::move(command)), input_(std::move(input)), seed_(seed), start_(std::chrono::steady_clock::now()) {}

    Check& add(std::string name, bool pass, Json values = Json::object(), std::optional<std::string> witness = std::nullopt) {
        checks_.push_back({std::move(name), pass, std::move(witness), std::move(values)});
        return checks_.back();
    }
    void add(Check c) { checks_.push_back(std::move(c)); }

    const std::vector<Check>& checks() const { return checks_; }
    const std::string& command() const { return command_; }
    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

    Json to_json(bool with_timing = true) const {
        Json j;
        j["tool"] = kToolName;
        j["version"] = kVersion;
        j["command"] = command_;
        j["input"] = input_;
        j["seed"] = seed_;
        Json cs = Json::array();
        for (const auto& c : checks_) {
            Json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (c.witness) e["witness"] = *c.witness;
            e["values"] = c.values;
            cs.push_back(std::move(e));
        }
        j["checks"] = std::move(cs);
        j["all_pass"] = all_pass();
        if (with_timing) j["timing"] = {{"seconds", seconds()}};
        return j;
    }

    std::string to_text() const {
        std::string s = command_ + "\n";
        for (const auto& c : checks_) {
            s += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name + "\n";
            for (const auto& [k, v] : c.values.items()) s += "         " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            if (c.witness) s += "         witness: " + *c.witness + "\n";
        }
        s += all_pass() ? "all checks passed\n" : "some checks FAILED\n";
        return s;
    }

private:
    std::string command_;
    Json input_;
    u64 seed_;
    std::vector<Check> checks_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace linfield
