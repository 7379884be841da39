// zetalab: command-line front end for the zeta-prior library.
//
// Exit codes: 0 ok, 2 domain or usage error, 3 precision error,
// 4 verification failure.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "zetalab/zetalab.hpp"

namespace {

using namespace zetalab;

constexpr int exit_domain = 2;
constexpr int exit_precision = 3;
constexpr int exit_verification = 4;

/// A report ready for output in either format.
struct Output {
    Json json;
    Table table;
    bool passed = true;
};

/// Integer parameters accept scientific notation ("1e12").
std::uint64_t parse_count(const std::string& text, const char* name) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    if (auto [p, ec] = std::from_chars(text.data(), end, v); ec == std::errc() && p == end) return v;
    long double x = 0;
    try {
        std::size_t used = 0;
        x = std::stold(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
        throw domain_error(std::string(name) + ": not a number: " + text);
    }
    if (!(x >= 0) || x != std::floor(x) || x > 1.8e19L)
        throw domain_error(std::string(name) + ": expected a non-negative integer, got " + text);
    return static_cast<std::uint64_t>(x);
}

std::vector<real> parse_reals(const std::vector<std::string>& items, const char* name) {
    std::vector<real> out;
    for (const auto& item : items) {
        try {
            std::size_t used = 0;
            out.push_back(std::stold(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw domain_error(std::string(name) + ": not a number: " + item);
        }
    }
    return out;
}

std::string str(real x) { return format_real(x); }

// ------------------------------------------------------------------- zeta

struct ZetaArgs {
    std::vector<std::string> s;
    bool deriv = false;
    double precision = 1e-12;
    std::string method = "auto";
};

ZetaMethod parse_method(const std::string& m) {
    if (m == "auto") return ZetaMethod::automatic;
    if (m == "stieltjes") return ZetaMethod::stieltjes;
    if (m == "euler-maclaurin") return ZetaMethod::euler_maclaurin;
    throw domain_error("unknown method: " + m);
}

Output cmd_zeta(const ZetaArgs& a) {
    PrecisionConfig cfg;
    cfg.target_abs_err = a.precision;
    const ZetaMethod method = parse_method(a.method);
    Output out;
    out.table.columns = {"s", "value", "abs_err"};
    if (a.deriv) out.table.columns.insert(out.table.columns.end(), {"deriv", "deriv_abs_err"});
    Json rows = Json::array();
    for (real s : parse_reals(a.s, "--s")) {
        const EvalResult z = riemann_zeta(s, cfg, method);
        Json row{{"s", static_cast<double>(s)}, {"value", static_cast<double>(z.value)},
                 {"abs_err", static_cast<double>(z.abs_err)}};
        std::vector<std::string> cells{str(s), str(z.value), str(z.abs_err)};
        if (a.deriv) {
            const EvalResult d = riemann_zeta_deriv(s, cfg, method);
            row["deriv"] = to_json(d);
            cells.insert(cells.end(), {str(d.value), str(d.abs_err)});
        }
        rows.push_back(row);
        out.table.rows.push_back(cells);
    }
    out.json = rows.size() == 1 ? rows[0] : Json{{"results", rows}};
    return out;
}

// ---------------------------------------------------------------- entropy

/// Published natural-log entropies of the zeta distribution.
const std::map<std::string, real> published_zeta_entropy = {
    {"1.1", 13.8L}, {"1.05", 24.5L}, {"1.01", 106.1L}, {"1.001", 1008.4L}};

std::optional<real> published_entropy(real s) {
    for (const auto& [key, value] : published_zeta_entropy)
        if (std::fabs(std::stold(key) - s) < 1e-12L) return value;
    return std::nullopt;
}

struct ModelArgs {
    std::string model;
    std::string n = "1000";
    std::vector<std::string> s{"2"};
    std::uint64_t m = 8;
    int k = 4;
    std::size_t max_edit_width = 16;
};

ProcessModel build_model(const ModelArgs& a, std::uint64_t n) {
    const auto svals = parse_reals(a.s, "--s");
    if (svals.size() != 1) throw domain_error("--s takes a single value for process models");
    const real s = svals.front();
    ProcessModel model;
    if (a.model == "random-typing") model = RandomTyping{a.m};
    else if (a.model == "iid-zeta") model = IIDZeta{s};
    else if (a.model == "subprogram") model = SubprogramZipf{a.k, a.m, n, s, SubprogramZipf::default_database(a.k)};
    else if (a.model == "evolutionary") model = EvolutionaryZeta{s, MutationCatalog{a.max_edit_width}};
    else throw domain_error("unknown model: " + a.model);
    validate(model);
    return model;
}

struct EntropyArgs {
    bool zeta = false;
    bool zipf = false;
    std::string base = "nats";
    ModelArgs model;
};

Output cmd_entropy(const EntropyArgs& a) {
    if (a.zeta + a.zipf + !a.model.model.empty() != 1)
        throw domain_error("choose exactly one of --zeta, --zipf, --model");
    if (a.base != "nats" && a.base != "bits") throw domain_error("--base must be nats or bits");
    const LogBase base = a.base == "bits" ? LogBase::bits : LogBase::nats;
    Output out;
    Json rows = Json::array();
    if (a.zeta) {
        out.table.columns = {"s", "entropy_nats", "abs_err_nats", "entropy_bits", "published_nats", "delta_nats"};
        for (real s : parse_reals(a.model.s, "--s")) {
            const EvalResult h = zeta_entropy(s, LogBase::nats);
            const auto published = published_entropy(s);
            Json row{{"s", static_cast<double>(s)},
                     {"entropy_nats", static_cast<double>(h.value)},
                     {"abs_err_nats", static_cast<double>(h.abs_err)},
                     {"entropy_bits", static_cast<double>(h.value / std::numbers::ln2_v<real>)},
                     {"published_nats", published ? Json(static_cast<double>(*published)) : Json(nullptr)},
                     {"delta_nats", published ? Json(static_cast<double>(h.value - *published)) : Json(nullptr)}};
            rows.push_back(row);
            out.table.rows.push_back({str(s), str(h.value), str(h.abs_err), str(h.value / std::numbers::ln2_v<real>),
                                      published ? str(*published) : "", published ? str(h.value - *published) : ""});
        }
    } else if (a.zipf) {
        const std::uint64_t n = parse_count(a.model.n, "--n");
        out.table.columns = {"n", "s", "entropy", "abs_err", "base"};
        for (real s : parse_reals(a.model.s, "--s")) {
            const EvalResult h = zipf_entropy(static_cast<std::int64_t>(n), s, base);
            rows.push_back({{"n", n}, {"s", static_cast<double>(s)}, {"entropy", static_cast<double>(h.value)},
                            {"abs_err", static_cast<double>(h.abs_err)}, {"base", a.base}});
            out.table.rows.push_back({std::to_string(n), str(s), str(h.value), str(h.abs_err), a.base});
        }
    } else {
        const ProcessModel model = build_model(a.model, parse_count(a.model.n, "--n"));
        const AnalyticRate rate = analytic_entropy_rate(model);
        Json row = to_json(model);
        row["rate_bits"] = static_cast<double>(rate.bits);
        row["approximate"] = rate.approximate;
        row["breakdown"] = to_json(rate.breakdown);
        rows.push_back(row);
        out.table.columns = {"model", "rate_bits", "approximate"};
        out.table.rows.push_back({model_name(model), str(rate.bits), rate.approximate ? "true" : "false"});
        for (const auto& c : rate.breakdown) {
            out.table.columns.push_back(c.label);
            out.table.rows[0].push_back(str(c.value));
        }
    }
    out.json = rows.size() == 1 ? rows[0] : Json{{"results", rows}};
    return out;
}

// --------------------------------------------------------------- simulate

constexpr std::size_t retain_all_limit = 10'000;
constexpr std::size_t inline_program_limit = 65'536;

struct SimulateArgs {
    ModelArgs model;
    std::vector<std::string> estimate{"plugin"};
    std::string sequence_path;
    std::string draws_path;
};

Output cmd_simulate(const SimulateArgs& a, std::uint64_t seed) {
    const std::uint64_t n = parse_count(a.model.n, "--n");
    const ProcessModel model = build_model(a.model, n);
    const bool chain = std::holds_alternative<EvolutionaryZeta>(model);
    const Retention retention = chain && n > retain_all_limit ? Retention::final_only : Retention::all;
    const TrainingSequence seq = generate(model, n, seed, retention);

    Output out;
    Json j{{"model", to_json(model)}, {"n", n}, {"seed", seed}};
    const AnalyticRate rate = analytic_entropy_rate(model);
    j["analytic"] = to_json(rate);
    out.table.columns = {"model", "n", "seed", "analytic_bits"};
    out.table.rows = {{model_name(model), std::to_string(n), std::to_string(seed), str(rate.bits)}};

    Json estimates = Json::object();
    for (const auto& e : a.estimate) {
        if (e == "plugin") {
            const EntropyEstimate est = empirical_entropy_rate(seq);
            estimates["plugin"] = to_json(est);
            out.table.columns.insert(out.table.columns.end(), {"plugin_bits", "plugin_std_error"});
            out.table.rows[0].insert(out.table.rows[0].end(), {str(est.value), str(est.std_error)});
        } else if (e == "lz") {
            const EntropyEstimate est = lz_codelength_rate(seq);
            estimates["lz"] = to_json(est);
            out.table.columns.push_back("lz_bits");
            out.table.rows[0].push_back(str(est.value));
        } else if (e == "mi") {
            const real mi = consecutive_mutual_information(seq);
            estimates["mutual_information"] = static_cast<double>(mi);
            out.table.columns.push_back("mutual_information_bits");
            out.table.rows[0].push_back(str(mi));
        } else {
            throw domain_error("unknown estimator: " + e + " (expected plugin, lz or mi)");
        }
    }
    j["estimates"] = estimates;

    const Program& last = seq.programs.back();
    j["final_program_length"] = last.size();
    j["final_program"] = last.size() <= inline_program_limit ? Json(last.to_string()) : Json(nullptr);
    if (!std::holds_alternative<EvolutionaryZeta>(model)) {
        std::size_t min_len = SIZE_MAX, max_len = 0;
        for (const auto& p : seq.programs) {
            min_len = std::min(min_len, p.size());
            max_len = std::max(max_len, p.size());
        }
        j["program_length_range"] = {min_len, max_len};
    }
    if (seq.draws.size() <= retain_all_limit) {
        Json draws = Json::array();
        for (const auto& d : seq.draws) draws.push_back(d.str());
        j["draws"] = draws;
    }
    if (!a.sequence_path.empty()) {
        std::ofstream f(a.sequence_path);
        if (!f) throw domain_error("cannot write " + a.sequence_path);
        write_sequence(f, seq);
    }
    if (!a.draws_path.empty()) {
        std::ofstream f(a.draws_path);
        if (!f) throw domain_error("cannot write " + a.draws_path);
        f << "step,draw\n";
        const std::size_t first_step = chain ? 2 : 1;
        for (std::size_t i = 0; i < seq.draws.size(); ++i) f << i + first_step << ',' << seq.draws[i].str() << '\n';
    }
    out.json = j;
    return out;
}

// ----------------------------------------------------------------- bounds

Output magnitude_output(const Magnitude& m, Json params) {
    Output out;
    out.json = std::move(params);
    out.json["bound"] = to_json(m);
    out.table.columns = {"log2", "mantissa", "exponent", "value"};
    out.table.rows = {{str(m.log2()), str(m.mantissa), std::to_string(m.exponent), m.fits() ? str(m.value()) : ""}};
    return out;
}

Output report_output(const BoundReport& r, Json params) {
    Output out;
    out.json = std::move(params);
    out.json.update(to_json(r));
    out.table = to_table(r);
    return out;
}

std::vector<std::vector<real>> read_numeric_csv(const std::string& path, std::size_t columns) {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot read " + path);
    std::vector<std::vector<real>> rows;
    std::string line;
    bool first = true;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (cells.size() != columns) throw domain_error(path + ": expected " + std::to_string(columns) + " columns");
        try {
            std::vector<real> row;
            for (const auto& c : cells) row.push_back(std::stold(c));
            rows.push_back(row);
        } catch (const std::logic_error&) {
            if (!first) throw domain_error(path + ": malformed row: " + line);
        }
        first = false;
    }
    return rows;
}

struct BoundsArgs {
    double t = 1;
    double p = 1;
    double k_bits = 0;
    std::string N = "1e12";
    std::string s = "1.001";
    double tmax = 1;
    std::string m = "8";
    int k = 4;
    std::string n = "1024";
    std::string file;
};

Output cmd_bounds(const std::string& which, const BoundsArgs& a) {
    if (which == "cjs") return report_output(cjs_interval(a.t, a.p), {{"bound", "cjs"}, {"t", a.t}, {"p", a.p}});
    if (which == "single")
        return magnitude_output(single_problem_bound({a.t, a.k_bits}), {{"t", a.t}, {"k_bits", a.k_bits}});
    if (which == "random-typing") {
        const std::uint64_t m = parse_count(a.m, "--m");
        return magnitude_output(random_typing_bound(m, a.t), {{"m", m}, {"t", a.t}});
    }
    if (which == "sequence") {
        std::vector<ProblemSpec> specs;
        for (const auto& row : read_numeric_csv(a.file, 2)) specs.push_back({row[0], row[1]});
        return magnitude_output(sequence_bound(specs), {{"problems", specs.size()}});
    }
    if (which == "conditional") {
        std::vector<ConditionalOutcome> outcomes;
        for (const auto& row : read_numeric_csv(a.file, 3)) outcomes.push_back({row[0], row[1], row[2]});
        const ConditionalBound b = conditional_expected_bound(outcomes);
        Output out = magnitude_output(b.bound, {{"outcomes", outcomes.size()}});
        out.json["total_mass"] = static_cast<double>(b.total_mass);
        out.json["truncation_mass"] = static_cast<double>(b.truncation_mass);
        out.table.columns.insert(out.table.columns.end(), {"total_mass", "truncation_mass"});
        out.table.rows[0].insert(out.table.rows[0].end(), {str(b.total_mass), str(b.truncation_mass)});
        return out;
    }
    const real s = parse_reals({a.s}, "--s").front();
    if (which == "iid-zeta") {
        const std::uint64_t N = parse_count(a.N, "--N");
        return report_output(iid_zeta_bound(N, s, a.tmax), {{"bound", "iid-zeta"}, {"N", N}, {"s", static_cast<double>(s)}, {"tmax", a.tmax}});
    }
    if (which == "subprogram") {
        const std::uint64_t m = parse_count(a.m, "--m");
        const std::uint64_t n = parse_count(a.n, "--n");
        return report_output(subprogram_entropy_report(a.k, m, n, s),
                             {{"bound", "subprogram"}, {"k", a.k}, {"m", m}, {"n", n}, {"s", static_cast<double>(s)}});
    }
    throw domain_error("unknown bound: " + which);
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    int max_length = 0;
    std::string target = "10";
    double eps = 0.01;
    std::uint32_t fuel = 256;
    std::uint32_t tape = 64;
};

Output cmd_verify(const std::string& which, const VerifyArgs& a) {
    Output out;
    if (which == "sandwich") {
        const SandwichReport r = verify_sandwich(a.max_length ? a.max_length : 20);
        out.json = to_json(r);
        out.table = to_table(r);
        out.passed = r.passed();
    } else if (which == "convergence") {
        const ConvergenceReport r = verify_power_law_convergence(a.max_length ? a.max_length : 24);
        out.json = to_json(r);
        out.table = to_table(r);
        out.passed = r.passed();
    } else if (which == "alp") {
        MachineConfig machine{a.fuel, a.tape};
        const AlpReport r = truncated_alp(Program::from_string(a.target), a.max_length ? a.max_length : 16, a.eps, machine);
        out.json = to_json(r);
        out.table = to_table(r);
        out.passed = r.sandwich_violations == 0;
    } else {
        throw domain_error("unknown check: " + which);
    }
    out.json["passed"] = out.passed;
    return out;
}

// ------------------------------------------------------------- manifests

/// Re-creates a command line from a manifest or config object.
std::vector<std::string> args_from_config(const Json& cfg) {
    std::vector<std::string> args;
    if (cfg.contains("format")) args.insert(args.end(), {"--format", cfg.at("format").get<std::string>()});
    if (cfg.contains("seed")) args.insert(args.end(), {"--seed", std::to_string(cfg.at("seed").get<std::uint64_t>())});
    if (cfg.contains("out") && !cfg.at("out").is_null()) args.insert(args.end(), {"--out", cfg.at("out").get<std::string>()});
    for (const auto& c : cfg.at("command")) args.push_back(c.get<std::string>());
    if (cfg.contains("params")) {
        for (const auto& [key, value] : cfg.at("params").items()) {
            const std::string flag = "--" + key;
            if (value.is_boolean()) {
                if (value.get<bool>()) args.push_back(flag);
            } else if (value.is_array()) {
                std::string joined;
                for (const auto& v : value) joined += (joined.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
                args.insert(args.end(), {flag, joined});
            } else {
                args.insert(args.end(), {flag, value.is_string() ? value.get<std::string>() : value.dump()});
            }
        }
    }
    return args;
}

/// Resolved parameters of the selected subcommand chain, defaults included.
Json collect_params(const CLI::App* cmd) {
    Json params = Json::object();
    for (const CLI::Option* opt : cmd->get_options()) {
        const std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames().front();
        if (name.empty() || name == "help") continue;
        if (opt->get_expected_max() == 0) {
            params[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            const auto& results = opt->results();
            if (opt->get_expected_max() > 1) {
                params[name] = results;
            } else {
                params[name] = results.back();
            }
        } else if (!opt->get_default_str().empty()) {
            std::string d = opt->get_default_str();
            if (opt->get_expected_max() > 1 && d.size() >= 2 && d.front() == '[' && d.back() == ']')
                d = d.substr(1, d.size() - 2);
            params[name] = d;
        }
    }
    return params;
}

void emit(const Output& out, const std::string& format, std::ostream& os) {
    if (format == "csv") write_csv(os, out.table);
    else os << out.json.dump(2) << '\n';
}

int run(std::vector<std::string> args) {
    CLI::App app{"Zeta-distribution priors, training-sequence entropy and time bounds"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(0, 1);
    app.option_defaults()->always_capture_default();
    app.fallthrough();

    std::string format = "json";
    std::uint64_t seed = RandomStream::default_seed;
    std::string out_path;
    std::string config_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "Random seed");
    app.add_option("--out", out_path, "Write output here and a manifest beside it");
    app.add_option("--config", config_path, "Run the command described by a JSON config or manifest");

    ZetaArgs zeta_args;
    auto* zeta = app.add_subcommand("zeta", "Riemann zeta with a certified error bound");
    zeta->add_option("--s", zeta_args.s, "Exponent(s), comma separated")->required()->delimiter(',');
    zeta->add_flag("--deriv", zeta_args.deriv, "Also evaluate zeta'");
    zeta->add_option("--precision", zeta_args.precision, "Target absolute error");
    zeta->add_option("--method", zeta_args.method, "auto, stieltjes or euler-maclaurin");

    EntropyArgs ent_args;
    auto* entropy = app.add_subcommand("entropy", "Entropy of zeta/Zipf distributions or process models");
    entropy->add_flag("--zeta", ent_args.zeta, "Zeta distribution Z_s");
    entropy->add_flag("--zipf", ent_args.zipf, "Zipf distribution over n ranks");
    entropy->add_option("--model", ent_args.model.model, "random-typing, iid-zeta, subprogram or evolutionary");
    entropy->add_option("--s", ent_args.model.s, "Exponent(s), comma separated")->delimiter(',');
    entropy->add_option("--n", ent_args.model.n, "Zipf support size, or the sub-program sequence length");
    entropy->add_option("--m", ent_args.model.m, "Bits per program (random typing) or sub-programs per program");
    entropy->add_option("--k", ent_args.model.k, "Bits per sub-program");
    entropy->add_option("--base", ent_args.base, "nats or bits (zeta/zipf)");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Generate a training sequence and estimate its entropy rate");
    simulate->add_option("--model", sim_args.model.model, "random-typing, iid-zeta, subprogram or evolutionary")->required();
    simulate->add_option("--n", sim_args.model.n, "Number of problems");
    simulate->add_option("--s", sim_args.model.s, "Zeta/Zipf exponent");
    simulate->add_option("--m", sim_args.model.m, "Bits per program or sub-programs per program");
    simulate->add_option("--k", sim_args.model.k, "Bits per sub-program");
    simulate->add_option("--max-edit-width", sim_args.model.max_edit_width, "Mutation catalog edit width");
    simulate->add_option("--estimate", sim_args.estimate, "plugin, lz, mi (comma separated)")->delimiter(',');
    simulate->add_option("--sequence", sim_args.sequence_path, "Write the sequence file here");
    simulate->add_option("--draws", sim_args.draws_path, "Write the per-step draw log (CSV) here");

    BoundsArgs bounds_args;
    std::string bound_name;
    auto* bounds = app.add_subcommand("bounds", "Training-time and entropy bounds");
    bounds->add_option("bound", bound_name, "cjs, single, sequence, conditional, iid-zeta, random-typing, subprogram")
        ->required();
    bounds->add_option("--t", bounds_args.t, "Running time of the solution program");
    bounds->add_option("--p", bounds_args.p, "Probability of the solution program");
    bounds->add_option("--K", bounds_args.k_bits, "Complexity in bits");
    bounds->add_option("--N", bounds_args.N, "Number of zeta ranks");
    bounds->add_option("--s", bounds_args.s, "Zeta/Zipf exponent");
    bounds->add_option("--tmax", bounds_args.tmax, "Maximum running time");
    bounds->add_option("--m", bounds_args.m, "Program bits or sub-programs per program");
    bounds->add_option("--k", bounds_args.k, "Bits per sub-program");
    bounds->add_option("--n", bounds_args.n, "Sequence length parameter");
    bounds->add_option("--specs,--outcomes", bounds_args.file, "CSV of problems (t_pi,k_bits) or outcomes (t_pi,k_cond_bits,p_cond)");

    VerifyArgs verify_args;
    std::string check_name;
    auto* verify = app.add_subcommand("verify", "Exhaustive checks");
    verify->add_option("check", check_name, "sandwich, convergence or alp")->required();
    verify->add_option("--max-length", verify_args.max_length, "Largest program length (default 20 / 24 / 16)");
    verify->add_option("--target", verify_args.target, "Output prefix for the ALP check");
    verify->add_option("--eps", verify_args.eps, "Zeta prior offset");
    verify->add_option("--fuel", verify_args.fuel, "Machine step budget");
    verify->add_option("--tape", verify_args.tape, "Machine tape cells");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_domain;
    }

    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw domain_error("cannot read " + config_path);
        Json cfg;
        try {
            cfg = Json::parse(f);
        } catch (const Json::exception& e) {
            throw domain_error(std::string("malformed config: ") + e.what());
        }
        return run(args_from_config(cfg));
    }

    if (app.get_subcommands().empty()) {
        std::cerr << "a subcommand is required; run with --help for more information\n";
        return exit_domain;
    }

    Output out;
    CLI::App* selected = app.get_subcommands().front();
    std::vector<std::string> command{selected->get_name()};
    if (selected == zeta) out = cmd_zeta(zeta_args);
    else if (selected == entropy) out = cmd_entropy(ent_args);
    else if (selected == simulate) out = cmd_simulate(sim_args, seed);
    else if (selected == bounds) {
        out = cmd_bounds(bound_name, bounds_args);
        command.push_back(bound_name);
    } else {
        out = cmd_verify(check_name, verify_args);
        command.push_back(check_name);
    }

    if (out_path.empty()) {
        emit(out, format, std::cout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw domain_error("cannot write " + out_path);
        emit(out, format, f);
        Json params = collect_params(selected);
        params.erase(selected == bounds ? "bound" : "check");
        const Json manifest{{"tool", "zetalab"},
                            {"version", version_string},
                            {"command", command},
                            {"params", params},
                            {"format", format},
                            {"seed", seed},
                            {"out", out_path}};
        std::ofstream(out_path + ".manifest.json") << manifest.dump(2) << '\n';
    }
    return out.passed ? 0 : exit_verification;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const zetalab::precision_error& e) {
        std::cerr << "precision error: " << e.what() << " (best effort "
                  << zetalab::format_real(e.best_effort().value) << " +/- "
                  << zetalab::format_real(e.best_effort().abs_err) << ")\n";
        return exit_precision;
    } catch (const zetalab::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
}
