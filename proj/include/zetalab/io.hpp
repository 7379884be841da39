#pragma once

// JSON and CSV renderings of every report type, model (de)serialization and
// the line-oriented training-sequence file format.

#include <array>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zetalab/bounds.hpp"
#include "zetalab/core.hpp"
#include "zetalab/processes.hpp"
#include "zetalab/programs.hpp"
#include "zetalab/samplers.hpp"
#include "zetalab/toymachine.hpp"

namespace zetalab {

inline constexpr const char* version_string = "1.0.0";

using Json = nlohmann::ordered_json;

/// A rectangular table for CSV output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Shortest round-tripping decimal form of a long double.
inline std::string format_real(real x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return ec == std::errc() ? std::string(buf.data(), end) : "nan";
}

inline std::string format_double(double x) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return ec == std::errc() ? std::string(buf.data(), end) : "nan";
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline void write_csv(std::ostream& os, const Table& table) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
        os << '\n';
    };
    line(table.columns);
    for (const auto& row : table.rows) line(row);
}

inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------- numerics

inline Json to_json(const EvalResult& r) { return {{"value", static_cast<double>(r.value)}, {"abs_err", static_cast<double>(r.abs_err)}}; }

inline Json to_json(const std::vector<Component>& parts) {
    Json j = Json::object();
    for (const auto& c : parts) j[c.label] = static_cast<double>(c.value);
    return j;
}

// ---------------------------------------------------------------- programs

inline Json to_json(const SandwichReport& r) {
    return {{"max_length", r.max_length},
            {"checked", r.checked},
            {"violations", r.violations},
            {"length_identity_failures", r.length_identity_failures},
            {"passed", r.passed()}};
}

inline Table to_table(const SandwichReport& r) {
    return {{"max_length", "checked", "violations", "length_identity_failures", "passed"},
            {{std::to_string(r.max_length), std::to_string(r.checked), std::to_string(r.violations),
              std::to_string(r.length_identity_failures), r.passed() ? "true" : "false"}}};
}

inline Json to_json(const Fraction& f) {
    return {{"exact", std::to_string(f.num) + "/" + std::to_string(f.den)}, {"value", f.approx()}};
}

inline Json to_json(const ConvergenceReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"length", row.length},
                        {gap_column_names[0], to_json(row.gap_upper_lower)},
                        {gap_column_names[1], to_json(row.gap_p_lower)},
                        {gap_column_names[2], to_json(row.gap_upper_p)}});
    Json monotone = Json::object();
    for (std::size_t c = 0; c < 3; ++c)
        monotone[gap_column_names[c]] = {{"strictly_decreasing", r.strictly_decreasing[c]},
                                         {"decreasing_from", r.decreasing_from[c]}};
    return {{"rows", rows}, {"monotonicity", monotone}, {"bounded", r.bounded}, {"passed", r.passed()}};
}

/// Columns: length, gap_upper_lower, gap_p_lower, gap_upper_p.
inline Table to_table(const ConvergenceReport& r) {
    Table t{{"length", gap_column_names[0], gap_column_names[1], gap_column_names[2]}, {}};
    for (const auto& row : r.rows)
        t.rows.push_back({std::to_string(row.length), format_double(row.gap_upper_lower.approx()),
                          format_double(row.gap_p_lower.approx()), format_double(row.gap_upper_p.approx())});
    return t;
}

// -------------------------------------------------------------- toymachine

inline Json to_json(const AlpReport& r) {
    return {{"target", r.target.to_string()},
            {"max_length", r.max_length},
            {"eps", static_cast<double>(r.eps)},
            {"fuel", r.machine.fuel},
            {"tape_size", r.machine.tape_size},
            {"exact_mass", static_cast<double>(r.exact_mass.convert_to<real>())},
            {"exact_mass_rational", to_string(r.exact_mass)},
            {"zeta_mass", static_cast<double>(r.zeta_mass)},
            {"ratio", static_cast<double>(r.ratio)},
            {"matched_count", r.matched_count},
            {"enumerated_count", r.enumerated_count},
            {"sandwich_violations", r.sandwich_violations}};
}

inline Table to_table(const AlpReport& r) {
    return {{"target", "max_length", "eps", "exact_mass", "zeta_mass", "ratio", "matched_count",
             "enumerated_count", "sandwich_violations"},
            {{r.target.to_string(), std::to_string(r.max_length), format_real(r.eps),
              format_real(r.exact_mass.convert_to<real>()), format_real(r.zeta_mass), format_real(r.ratio),
              std::to_string(r.matched_count), std::to_string(r.enumerated_count),
              std::to_string(r.sandwich_violations)}}};
}

// ---------------------------------------------------------------- samplers

inline Json to_json(const GofReport& r) {
    return {{"statistic", r.statistic}, {"p_value", r.p_value}, {"bins", r.bins}, {"samples", r.samples}};
}

// --------------------------------------------------------------- processes

inline Json to_json(const ProcessModel& model) {
    Json j{{"model", model_name(model)}};
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RandomTyping>) {
                j["m"] = m.m;
            } else if constexpr (std::is_same_v<T, IIDZeta>) {
                j["s"] = static_cast<double>(m.s);
            } else if constexpr (std::is_same_v<T, SubprogramZipf>) {
                j["k"] = m.k;
                j["m"] = m.m;
                j["n"] = m.n;
                j["s"] = static_cast<double>(m.s);
                if (m.database == SubprogramZipf::default_database(m.k)) {
                    j["database"] = "default";
                } else {
                    Json db = Json::array();
                    for (const auto& p : m.database) db.push_back(p.to_string());
                    j["database"] = db;
                }
            } else {
                j["s"] = static_cast<double>(m.s);
                j["max_edit_width"] = m.catalog.max_edit_width;
            }
        },
        model);
    return j;
}

inline ProcessModel model_from_json(const Json& j) {
    try {
        const auto name = j.at("model").get<std::string>();
        ProcessModel model;
        if (name == "random-typing") {
            model = RandomTyping{j.at("m").get<std::size_t>()};
        } else if (name == "iid-zeta") {
            model = IIDZeta{j.at("s").get<double>()};
        } else if (name == "subprogram") {
            SubprogramZipf m{j.at("k").get<int>(), j.at("m").get<std::size_t>(), j.at("n").get<std::uint64_t>(),
                             j.at("s").get<double>(), {}};
            const Json& db = j.contains("database") ? j.at("database") : Json("default");
            if (db.is_string() && db.get<std::string>() == "default") {
                m.database = SubprogramZipf::default_database(m.k);
            } else {
                for (const auto& entry : db) m.database.push_back(Program::from_string(entry.get<std::string>()));
            }
            model = std::move(m);
        } else if (name == "evolutionary") {
            EvolutionaryZeta m{j.at("s").get<double>(), {}};
            if (j.contains("max_edit_width")) m.catalog.max_edit_width = j.at("max_edit_width").get<std::size_t>();
            model = m;
        } else {
            throw domain_error("unknown process model: " + name);
        }
        validate(model);
        return model;
    } catch (const Json::exception& e) {
        throw domain_error(std::string("malformed model description: ") + e.what());
    }
}

inline Json to_json(const EntropyEstimate& e) {
    return {{"method", to_string(e.method)},
            {"value", static_cast<double>(e.value)},
            {"std_error", static_cast<double>(e.std_error)},
            {"bias", static_cast<double>(e.bias)},
            {"n_samples", e.n_samples}};
}

inline Json to_json(const AnalyticRate& r) {
    return {{"bits", static_cast<double>(r.bits)}, {"approximate", r.approximate}, {"breakdown", to_json(r.breakdown)}};
}

inline constexpr const char* sequence_magic = "# zetalab-sequence v1";

/// Header lines (model JSON, seed, n) followed by one 0/1 program per line;
/// the empty program is an empty line.
inline void write_sequence(std::ostream& os, const TrainingSequence& seq) {
    os << sequence_magic << '\n'
       << "# model: " << to_json(seq.model).dump() << '\n'
       << "# seed: " << seq.seed << '\n'
       << "# n: " << seq.length << '\n';
    for_each_program(seq, [&](const Program& p) { os << p.to_string() << '\n'; });
}

/// Reads a sequence file. Draws are not stored in the file; regenerate from
/// (model, n, seed) to recover them.
inline TrainingSequence read_sequence(std::istream& is) {
    std::string line;
    auto header = [&](const std::string& key) {
        if (!std::getline(is, line) || line.rfind(key, 0) != 0)
            throw domain_error("sequence file: expected header '" + key + "'");
        return line.substr(key.size());
    };
    if (!std::getline(is, line) || line != sequence_magic) throw domain_error("not a zetalab sequence file");
    TrainingSequence seq;
    seq.model = model_from_json(Json::parse(header("# model: ")));
    try {
        seq.seed = std::stoull(header("# seed: "));
        seq.length = std::stoull(header("# n: "));
    } catch (const std::logic_error&) {
        throw domain_error("sequence file: malformed seed or length");
    }
    seq.programs.reserve(seq.length);
    while (seq.programs.size() < seq.length && std::getline(is, line)) seq.programs.push_back(Program::from_string(line));
    if (seq.programs.size() != seq.length) throw domain_error("sequence file: fewer programs than declared");
    return seq;
}

// ------------------------------------------------------------------ bounds

inline Json to_json(const Magnitude& m) {
    Json j{{"mantissa", static_cast<double>(m.mantissa)},
           {"exponent", m.exponent},
           {"log2", static_cast<double>(m.log2())}};
    j["value"] = m.fits() && std::isfinite(static_cast<double>(m.value())) ? Json(static_cast<double>(m.value())) : Json(nullptr);
    return j;
}

inline Json to_json(const BoundReport& r) {
    return {{"lower", static_cast<double>(r.lower)}, {"upper", static_cast<double>(r.upper)}, {"breakdown", to_json(r.breakdown)}};
}

inline Table to_table(const BoundReport& r) {
    Table t{{"lower", "upper"}, {{format_real(r.lower), format_real(r.upper)}}};
    for (const auto& c : r.breakdown) {
        t.columns.push_back(c.label);
        t.rows[0].push_back(format_real(c.value));
    }
    return t;
}

inline Json to_json(const ConditionalBound& b) {
    return {{"bound", to_json(b.bound)},
            {"total_mass", static_cast<double>(b.total_mass)},
            {"truncation_mass", static_cast<double>(b.truncation_mass)}};
}

}  // namespace zetalab
