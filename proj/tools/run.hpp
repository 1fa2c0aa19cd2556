#pragma once

// Command-line front end: parses argv, runs one verification command and
// writes a RunReport (JSON or markdown).

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fmethod::cli {

struct Detail {
    std::string name;
    std::string expected;
    std::string got;
    std::size_t defect_terms = 0;
};

enum class Status { pass, fail, truncated };

struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::pass;
    std::vector<Detail> details;
    nlohmann::json result;  // command-specific payload, null when absent
    long timing_ms = 0;

    nlohmann::json to_json() const;
    std::string to_markdown() const;
};

std::string to_string(Status s);

/// Exit code 0 on pass, 1 on fail or truncated, 2 on usage error. The report
/// goes to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmethod::cli
