#include "model_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gaugework/expr/errors.hpp"
#include "gaugework/expr/parser.hpp"
#include "json.hpp"

namespace gaugework::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string position_prefix(const std::string& file, std::size_t line, std::size_t column) {
    if (line == 0) return file + ": ";
    return file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Position of the first occurrence of `needle` at or after `from`; (0, 0) if absent.
std::pair<std::size_t, std::size_t> locate(const std::string& text, const std::string& needle, std::size_t from = 0) {
    auto at = text.find(needle, from);
    if (at == std::string::npos) return {0, 0};
    return line_column(text, at);
}

struct Context {
    const std::string& text;
    const std::string& file;

    [[noreturn]] void fail_at_key(const std::string& key, const std::string& message) const {
        auto [line, column] = locate(text, "\"" + key + "\"");
        throw ModelFileError(file, line, column, message);
    }
};

std::vector<std::pair<std::string, std::string>> read_pairs(const Json& j, const Context& ctx, const std::string& key) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.is_array()) ctx.fail_at_key(key, "'" + key + "' must be an array of [q, p] pairs");
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            ctx.fail_at_key(key, "'" + key + "' entries must be [\"q\", \"p\"] string pairs");
        }
        out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return out;
}

expr::BigRational read_rational(const Json& j, const Context& ctx, const std::string& key) {
    if (j.is_number_integer()) return expr::BigRational(j.get<long>());
    if (!j.is_string()) ctx.fail_at_key(key, "'" + key + "' must be an integer or a rational string like \"1/2\"");
    try {
        auto v = expr::parse_expr(j.get<std::string>());
        if (!v.is_constant()) throw std::invalid_argument("not a constant");
        return v.numerator().constant_value();
    } catch (const std::exception&) {
        ctx.fail_at_key(key, "'" + key + "' is not a rational number: " + j.get<std::string>());
    }
}

std::vector<std::pair<std::string, std::string>> chart_pairs_of(const poisson::CanonicalChart& chart, std::size_t from,
                                                                std::size_t to) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = from; i < to; ++i) {
        out.emplace_back(chart.pairs()[i].first.name(), chart.pairs()[i].second.name());
    }
    return out;
}

}  // namespace

ModelFileError::ModelFileError(const std::string& file, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(position_prefix(file, line, column) + message), line_(line), column_(column) {}

ModelSpec parse_model_spec(const std::string& text, const std::string& file) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        auto cut = what.find("syntax error");
        throw ModelFileError(file, line, column, cut == std::string::npos ? what : what.substr(cut));
    }
    Context ctx{text, file};
    if (!doc.is_object()) throw ModelFileError(file, 1, 1, "model file must be a JSON object");

    static const std::set<std::string> known = {"name",         "builder", "dimension", "structure_constants",
                                                "l_mode",       "bracket_scale", "chart", "constraints"};
    for (const auto& [k, v] : doc.items()) {
        if (!known.count(k)) ctx.fail_at_key(k, "unknown field '" + k + "'");
    }

    ModelSpec spec;
    if (!doc.contains("name") || !doc["name"].is_string()) ctx.fail_at_key("name", "missing string field 'name'");
    spec.name = doc["name"].get<std::string>();

    if (!doc.contains("builder") || !doc["builder"].is_string()) {
        throw ModelFileError(file, 1, 1, "missing string field 'builder'");
    }
    auto kind = models::parse_model_kind(doc["builder"].get<std::string>());
    if (!kind) ctx.fail_at_key("builder", "unknown builder '" + doc["builder"].get<std::string>() + "'");
    spec.kind = *kind;

    if (spec.kind == models::ModelKind::FModel) {
        if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<int>() < 1) {
            ctx.fail_at_key(doc.contains("dimension") ? "dimension" : "builder",
                            "f-model needs a positive integer 'dimension'");
        }
        int dim = doc["dimension"].get<int>();
        spec.algebra = lie::StructureConstants(dim);
        if (!doc.contains("structure_constants")) ctx.fail_at_key("builder", "f-model needs 'structure_constants'");
        const auto& f = doc["structure_constants"];
        if (!f.is_array()) ctx.fail_at_key("structure_constants", "'structure_constants' must be an array");
        for (const auto& e : f) {
            if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
                !e[2].is_number_integer()) {
                ctx.fail_at_key("structure_constants", "entries must be [a, b, c, value]");
            }
            int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
            if (a < 1 || b < 1 || c < 1 || a > dim || b > dim || c > dim) {
                ctx.fail_at_key("structure_constants", "index out of range 1.." + std::to_string(dim));
            }
            if (a == b || b == c || a == c) {
                ctx.fail_at_key("structure_constants", "entries with a repeated index must be zero; omit them");
            }
            spec.algebra.set_antisymmetric(a, b, c, read_rational(e[3], ctx, "structure_constants"));
        }
    }

    if (doc.contains("l_mode")) {
        if (!doc["l_mode"].is_string()) ctx.fail_at_key("l_mode", "'l_mode' must be a string");
        auto mode = models::parse_l_mode(doc["l_mode"].get<std::string>());
        if (!mode) ctx.fail_at_key("l_mode", "unknown l_mode '" + doc["l_mode"].get<std::string>() + "'");
        spec.l_mode = *mode;
    }
    if (doc.contains("bracket_scale")) spec.bracket_scale = read_rational(doc["bracket_scale"], ctx, "bracket_scale");

    if (doc.contains("chart")) {
        const auto& chart = doc["chart"];
        if (!chart.is_object()) ctx.fail_at_key("chart", "'chart' must be an object");
        if (chart.contains("pairs")) spec.chart_pairs = read_pairs(chart["pairs"], ctx, "pairs");
        if (chart.contains("auxiliary")) spec.auxiliary_pairs = read_pairs(chart["auxiliary"], ctx, "auxiliary");
    }

    if (doc.contains("constraints")) {
        const auto& cs = doc["constraints"];
        if (!cs.is_array()) ctx.fail_at_key("constraints", "'constraints' must be an array");
        std::size_t search_from = text.find("\"constraints\"");
        for (const auto& c : cs) {
            if (!c.is_object() || !c.contains("name") || !c.contains("expr") || !c["name"].is_string() ||
                !c["expr"].is_string()) {
                ctx.fail_at_key("constraints", "constraint entries must be {\"name\": ..., \"expr\": ...}");
            }
            std::string expr_text = c["expr"].get<std::string>();
            std::string quoted = Json(expr_text).dump();
            auto at = text.find(quoted, search_from);
            if (at != std::string::npos) {
                search_from = at + quoted.size();
                spec.override_positions.push_back(line_column(text, at + 1));
            } else {
                spec.override_positions.push_back({0, 0});
            }
            spec.constraint_overrides.emplace_back(c["name"].get<std::string>(), expr_text);
        }
    }
    return spec;
}

ModelSpec load_model_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFileError(path, 0, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_spec(buf.str(), path);
}

models::ConstraintModel build_model(const ModelSpec& spec, const std::string& file) {
    models::ConstraintModel m = spec.kind == models::ModelKind::Higgs
                                    ? models::build_higgs_model()
                                    : models::build_f_model(spec.algebra, spec.l_mode, spec.name);
    m.name = spec.name;
    if (spec.bracket_scale) m.bracket_scale = *spec.bracket_scale;

    if (spec.chart_pairs && *spec.chart_pairs != chart_pairs_of(m.chart, 0, m.primary_pairs)) {
        throw ModelFileError(file, 0, 0, "chart.pairs does not match the chart produced by the builder");
    }
    if (spec.auxiliary_pairs && *spec.auxiliary_pairs != chart_pairs_of(m.chart, m.primary_pairs, m.chart.size())) {
        throw ModelFileError(file, 0, 0, "chart.auxiliary does not match the chart produced by the builder");
    }

    if (!spec.constraint_overrides.empty()) {
        if (spec.constraint_overrides.size() != m.constraints.size()) {
            throw ModelFileError(file, 0, 0,
                                 "expected " + std::to_string(m.constraints.size()) + " constraint overrides, got " +
                                     std::to_string(spec.constraint_overrides.size()));
        }
        for (std::size_t i = 0; i < spec.constraint_overrides.size(); ++i) {
            const auto& [name, text] = spec.constraint_overrides[i];
            auto [line, column] = i < spec.override_positions.size() ? spec.override_positions[i]
                                                                     : std::pair<std::size_t, std::size_t>{0, 0};
            try {
                m.constraints[i] = {name, poisson::parse_on(m.chart, text)};
            } catch (const expr::ParseError& e) {
                if (line != 0) column += e.position();
                throw ModelFileError(file, line, column, "constraint " + name + ": " + e.what());
            } catch (const expr::ExprError& e) {
                throw ModelFileError(file, line, column, "constraint " + name + ": " + e.what());
            }
        }
    }
    return m;
}

std::string write_model_file(const models::ConstraintModel& m, bool include_constraints) {
    Json doc;
    doc["name"] = m.name;
    doc["builder"] = models::to_string(m.kind);
    if (m.kind == models::ModelKind::FModel) {
        doc["dimension"] = m.algebra.dim();
        Json f = Json::array();
        for (const auto& [t, v] : m.algebra.orbit_representatives()) {
            Json value = v.get_den() == 1 && v.get_num().fits_slong_p() ? Json(v.get_num().get_si()) : Json(v.get_str());
            f.push_back(Json::array({t[0], t[1], t[2], value}));
        }
        doc["structure_constants"] = f;
        doc["l_mode"] = models::to_string(m.l_mode);
    }
    doc["bracket_scale"] = m.bracket_scale.get_str();
    Json chart;
    auto pairs = [](const std::vector<std::pair<std::string, std::string>>& ps) {
        Json arr = Json::array();
        for (const auto& [q, p] : ps) arr.push_back(Json::array({q, p}));
        return arr;
    };
    chart["pairs"] = pairs(chart_pairs_of(m.chart, 0, m.primary_pairs));
    if (m.chart.size() > m.primary_pairs) chart["auxiliary"] = pairs(chart_pairs_of(m.chart, m.primary_pairs, m.chart.size()));
    doc["chart"] = chart;
    if (include_constraints) {
        Json cs = Json::array();
        for (const auto& c : m.constraints) cs.push_back({{"name", c.name}, {"expr", c.expr.render()}});
        doc["constraints"] = cs;
    }
    return doc.dump(2) + "\n";
}

}  // namespace gaugework::cli
