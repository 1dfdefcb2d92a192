#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaugework/expr/polynomial.hpp"

namespace gaugework::cli {

inline constexpr const char* kToolName = "gaugework";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Status { Pass, Fail, Info };
const char* to_string(Status s);
std::optional<Status> parse_status(const std::string& s);

/// Witness point with symbol names mapped to exact rationals in text form.
using WitnessPoint = std::map<std::string, std::string>;

struct CheckRecord {
    std::string name;
    Status status = Status::Info;
    /// Ordered (key, canonical text) pairs.
    std::vector<std::pair<std::string, std::string>> payload;
    std::vector<WitnessPoint> witnesses;

    CheckRecord& add(std::string key, std::string value);
    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct ReportDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string model;
    std::string command;
    std::vector<CheckRecord> checks;

    /// Fail iff some record failed.
    Status overall() const;
    CheckRecord& add(std::string name, Status status);

    std::string to_json() const;
    /// Throws std::invalid_argument on malformed input.
    static ReportDocument from_json(const std::string& text);
    std::string to_text() const;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

WitnessPoint witness(const expr::Assignment& point);

}  // namespace gaugework::cli
