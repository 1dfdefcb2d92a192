#include "report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gaugework::cli {

using Json = nlohmann::ordered_json;

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "info";
}

std::optional<Status> parse_status(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "info") return Status::Info;
    return std::nullopt;
}

CheckRecord& CheckRecord::add(std::string key, std::string value) {
    payload.emplace_back(std::move(key), std::move(value));
    return *this;
}

Status ReportDocument::overall() const {
    for (const auto& c : checks) {
        if (c.status == Status::Fail) return Status::Fail;
    }
    return Status::Pass;
}

CheckRecord& ReportDocument::add(std::string name, Status status) {
    checks.push_back({std::move(name), status, {}, {}});
    return checks.back();
}

std::string ReportDocument::to_json() const {
    Json doc;
    doc["tool"] = tool;
    doc["version"] = version;
    doc["model"] = model;
    doc["command"] = command;
    doc["status"] = to_string(overall());
    Json records = Json::array();
    for (const auto& c : checks) {
        Json r;
        r["name"] = c.name;
        r["status"] = to_string(c.status);
        Json payload = Json::array();
        for (const auto& [k, v] : c.payload) payload.push_back(Json::array({k, v}));
        r["payload"] = payload;
        Json witnesses = Json::array();
        for (const auto& w : c.witnesses) {
            Json point = Json::object();
            for (const auto& [s, v] : w) point[s] = v;
            witnesses.push_back(point);
        }
        r["witnesses"] = witnesses;
        records.push_back(r);
    }
    doc["checks"] = records;
    return doc.dump(2) + "\n";
}

ReportDocument ReportDocument::from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    try {
        ReportDocument out;
        out.tool = doc.at("tool").get<std::string>();
        out.version = doc.at("version").get<std::string>();
        out.model = doc.at("model").get<std::string>();
        out.command = doc.at("command").get<std::string>();
        for (const auto& r : doc.at("checks")) {
            CheckRecord c;
            c.name = r.at("name").get<std::string>();
            auto st = parse_status(r.at("status").get<std::string>());
            if (!st) throw std::invalid_argument("report: bad status in check " + c.name);
            c.status = *st;
            for (const auto& kv : r.at("payload")) c.payload.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
            for (const auto& w : r.at("witnesses")) {
                WitnessPoint p;
                for (const auto& [k, v] : w.items()) p[k] = v.get<std::string>();
                c.witnesses.push_back(std::move(p));
            }
            out.checks.push_back(std::move(c));
        }
        auto st = parse_status(doc.at("status").get<std::string>());
        if (!st || *st != out.overall()) throw std::invalid_argument("report: overall status does not match checks");
        return out;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
}

std::string ReportDocument::to_text() const {
    std::ostringstream out;
    out << tool << ' ' << version << "  command: " << command << "  model: " << model << '\n';
    for (const auto& c : checks) {
        out << '[' << to_string(c.status) << "] " << c.name << '\n';
        for (const auto& [k, v] : c.payload) out << "    " << k << ": " << v << '\n';
        if (!c.witnesses.empty()) out << "    witnesses: " << c.witnesses.size() << " points\n";
    }
    out << "overall: " << to_string(overall()) << '\n';
    return out.str();
}

WitnessPoint witness(const expr::Assignment& point) {
    WitnessPoint w;
    for (const auto& [s, v] : point) w[s.name()] = v.get_str();
    return w;
}

}  // namespace gaugework::cli
