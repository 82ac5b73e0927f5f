#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json.hpp"

namespace sumset::cli {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
    std::string subcommand;
    int h = 0;
    int k = 0;
    long long bound = 0;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 0;
    unsigned jobs = 1;
    std::string set_literal;
    std::string format = "plain";
    std::string output;
    std::string kind;
    std::vector<long long> params;
    bool check = false;
    std::string suite = "all";
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <GroupElement T>
int sumset_command(const FiniteSet<T>& set, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        nlohmann::json j;
        if (cfg.h >= 2 && set.size() >= 2) {
            j = to_json(classify(set, cfg.h));
        } else {
            const auto elements = hfold_sumset(set, cfg.h);
            j = {{"h", cfg.h},
                 {"k", set.size()},
                 {"base", to_json_value(set)},
                 {"size", elements.size()},
                 {"elements", to_json_value(elements)},
                 {"trivial", nullptr},
                 {"nontrivial", nullptr}};
        }
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    if (cfg.h >= 2 && set.size() >= 2) {
        const auto r = classify(set, cfg.h);
        if (cfg.format == "csv") {
            out << "element,trivial\n";
            std::size_t t = 0;
            for (const T& e : r.elements) {
                const bool trivial = t < r.trivial.size() && lex_compare(r.trivial[t], e) == 0;
                if (trivial) ++t;
                out << csv_quote(format_element(e)) << ',' << (trivial ? "true" : "false") << '\n';
            }
            return kSuccess;
        }
        out << "A = {" << format_set_literal(set) << "}  (k = " << set.size() << ", d = " << set.dimension() << ")\n";
        out << "h = " << cfg.h << "\n|hA| = " << r.size() << "\n";
        out << "hA = {" << format_set_literal<T>(r.elements) << "}\n";
        out << "trivial chain (" << r.trivial.size() << "):\n";
        // one line per consecutive pair (a_j, a_{j+1}), as in the chain definition
        for (std::size_t j = 0; j + 1 < set.size(); ++j) {
            out << "  ";
            for (int i = 0; i < cfg.h; ++i)
                out << (i ? " < " : "") << format_element(r.trivial[j * cfg.h + static_cast<std::size_t>(i)]);
            out << " <\n";
        }
        out << "  " << format_element(r.trivial.back()) << "\n";
        out << "nontrivial (" << r.nontrivial.size() << "): {" << format_set_literal<T>(r.nontrivial) << "}\n";
        return kSuccess;
    }
    const auto elements = hfold_sumset(set, cfg.h);
    if (cfg.format == "csv") {
        out << "element\n";
        for (const T& e : elements) out << csv_quote(format_element(e)) << '\n';
        return kSuccess;
    }
    out << "A = {" << format_set_literal(set) << "}\nh = " << cfg.h << "\n|hA| = " << elements.size() << "\nhA = {"
        << format_set_literal<T>(elements) << "}\n";
    return kSuccess;
}

inline int run_sumset(const RunConfig& cfg, std::ostream& out) {
    if (cfg.h < 1) throw UsageError("--h must be >= 1");
    const AnySet set = parse_set_literal(cfg.set_literal);
    return std::visit([&](const auto& s) { return sumset_command(s, cfg, out); }, set);
}

inline int run_spectrum(const RunConfig& cfg, std::ostream& out) {
    if (cfg.h < 2) throw UsageError("--h must be >= 2");
    if (cfg.k < 2) throw UsageError("--k must be >= 2");
    if (cfg.bound < cfg.k - 1) throw UsageError("--max must be >= k - 1");
    if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
    const auto report = compute_spectrum(cfg.h, cfg.k, cfg.bound, cfg.jobs);
    const auto gap = gap_check(report);
    const auto dich = min_dichotomy_check(report);
    if (cfg.format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "size,witness,is_ap\n";
        for (const auto& [size, set] : report.witnesses)
            out << size << ',' << csv_quote(format_set_literal(set)) << ','
                << (is_arithmetic_progression(set) ? "true" : "false") << '\n';
    } else {
        out << "h = " << cfg.h << ", k = " << cfg.k << ", M = " << cfg.bound << "\n";
        out << "canonical sets scanned: " << report.sets_scanned << "\n";
        out << "achieved sizes (" << report.witnesses.size() << "):\n";
        for (const auto& [size, set] : report.witnesses)
            out << "  " << size << "  {" << format_set_literal(set) << "}"
                << (is_arithmetic_progression(set) ? "  AP" : "") << "\n";
        out << "gap [" << gap.interval_low << ", " << gap.interval_high << "]: " << to_string(gap.status) << "\n";
        out << "dichotomy: " << to_string(dich.status) << " (" << dich.detail << ")\n";
        out << "note: the scan only lower-bounds R(h,k); missing sizes are excluded only inside the gap\n";
    }
    return ok(gap.status) && ok(dich.status) ? kSuccess : kCheckFailed;
}

inline int run_witness(const RunConfig& cfg, std::ostream& out) {
    const auto kind = parse_witness_kind(cfg.kind);
    if (!kind) throw UsageError("unknown --kind '" + cfg.kind + "'");
    WitnessSpec spec{*kind, cfg.h, cfg.k, {}};
    if (*kind == WitnessKind::base_case && cfg.k == 0) spec.k = 3;
    for (long long p : cfg.params) spec.params.push_back(p);
    if (spec.params.empty() && (*kind == WitnessKind::ap || *kind == WitnessKind::hk)) spec.params.push_back(1);
    const Witness w = make_witness(spec);
    std::optional<WitnessCheck> check;
    if (cfg.check) check = check_witness(w);
    if (cfg.format == "json") {
        auto j = to_json(w);
        j["check"] = check ? to_json(*check) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        const auto& p = w.predicted;
        out << to_string(w.spec.kind) << " witness, h = " << w.spec.h << ", k = " << w.spec.k << "\n";
        out << "A = {" << format_set_literal(w.set) << "}\n";
        if (p.exact_size) out << "predicted |hA| = " << *p.exact_size << "\n";
        if (p.min_size) out << "predicted |hA| >= " << *p.min_size << "\n";
        if (p.min_nontrivial) out << "predicted nontrivial elements >= " << *p.min_nontrivial << "\n";
        if (p.exact_nontrivial) out << "predicted nontrivial elements = " << *p.exact_nontrivial << "\n";
        if (p.exact_elements) out << "predicted hA = {" << format_set_literal<Int>(*p.exact_elements) << "}\n";
        if (check) {
            out << "computed |hA| = " << check->size;
            if (check->nontrivial) out << ", nontrivial = " << *check->nontrivial;
            out << "\ncheck: " << (check->pass ? "pass" : "FAIL") << "\n";
            for (const auto& f : check->failures) out << "  " << f << "\n";
        }
    }
    return !check || check->pass ? kSuccess : kCheckFailed;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    const bool randomized = cfg.suite != "gap" && cfg.suite != "families";
    if (cfg.format == "json" && randomized && !cfg.seed)
        throw UsageError("--seed is required with --format json for randomized suites");
    SuiteOptions opt;
    opt.seed = cfg.seed.value_or(1);
    opt.trials = cfg.trials;
    opt.h = cfg.h;
    opt.k = cfg.k;
    opt.bound = cfg.bound;
    opt.jobs = cfg.jobs;
    const auto outcomes = run_suite(cfg.suite, opt);
    bool all_pass = true;
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& o : outcomes) arr.push_back(to_json(o));
        out << nlohmann::json{{"suite", cfg.suite}, {"seed", opt.seed}, {"checks", arr}}.dump(2) << '\n';
    }
    for (const auto& o : outcomes) {
        all_pass = all_pass && o.pass();
        if (cfg.format == "json") continue;
        out << (o.pass() ? "PASS " : "FAIL ") << o.name << "  [" << o.grid << "]  cases=" << o.cases << "\n";
        for (const auto& f : o.failures)
            out << "  implementation bug: " << f.input << ": " << f.detail << "\n  replay: " << o.replay << "\n";
    }
    return all_pass ? kSuccess : kCheckFailed;
}

} // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact h-fold sumset toolkit", "sumset_cli"};
    // --h is the fold count, so help is long-form only
    app.set_help_flag("--help");
    app.require_subcommand(1);
    RunConfig cfg;
    auto formats = CLI::IsMember({"json", "csv", "plain"});

    auto* sumset_cmd = app.add_subcommand("sumset", "Compute hA with its trivial and nontrivial elements");
    sumset_cmd->add_option("--set", cfg.set_literal, "Set literal: 0,1,2,4 or '0 0;1 2;2 4'")->required();
    sumset_cmd->add_option("--h", cfg.h, "Fold count (>= 1)")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Scan canonical k-sets and report achieved sizes");
    spectrum_cmd->add_option("--h", cfg.h)->required();
    spectrum_cmd->add_option("--k", cfg.k)->required();
    spectrum_cmd->add_option("--max", cfg.bound, "Largest element of scanned canonical sets")->required();
    spectrum_cmd->add_option("--jobs", cfg.jobs, "Worker threads");

    auto* witness_cmd = app.add_subcommand("witness", "Build an extremal or family witness set");
    witness_cmd->add_option("--kind", cfg.kind)->required()->check(CLI::IsMember({"ap", "hk", "max", "thm1", "thm2", "base"}));
    witness_cmd->add_option("--h", cfg.h)->required();
    witness_cmd->add_option("--k", cfg.k);
    witness_cmd->add_option("--params", cfg.params,
                            "ap/hk: a; thm1: gaps.. b c; thm2: gaps.. b d; base: e");
    witness_cmd->add_flag("--check", cfg.check, "Run the engine and compare with the predictions");

    auto* verify_cmd = app.add_subcommand("verify", "Run theorem-backed checks");
    verify_cmd->add_option("--suite", cfg.suite)
        ->check(CLI::IsMember({"all", "gap", "translation", "nontrivial", "families", "axioms", "z2"}));
    verify_cmd->add_option("--h", cfg.h);
    verify_cmd->add_option("--k", cfg.k);
    verify_cmd->add_option("--max", cfg.bound);
    verify_cmd->add_option("--seed", cfg.seed);
    verify_cmd->add_option("--trials", cfg.trials);
    verify_cmd->add_option("--jobs", cfg.jobs);

    for (auto* sub : {sumset_cmd, spectrum_cmd, witness_cmd, verify_cmd}) {
        sub->add_option("--format", cfg.format)->check(formats);
        sub->add_option("--output", cfg.output, "Write to this file instead of standard output");
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "cannot open output file '" << cfg.output << "'\n";
            return kUsage;
        }
    }
    std::ostream& sink = cfg.output.empty() ? out : file;
    try {
        if (*sumset_cmd) return detail::run_sumset(cfg, sink);
        if (*spectrum_cmd) return detail::run_spectrum(cfg, sink);
        if (*witness_cmd) return detail::run_witness(cfg, sink);
        return detail::run_verify(cfg, sink);
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace sumset::cli
