// cli.hpp
// Command-line front end: build | verify | oa | suite | export. Kept in a
// header-level run() so tests can drive it in-process; the binary in tools/
// just forwards argv. All outputs are byte-deterministic.

#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quoa/serialize.hpp"

namespace quoa::cli {

namespace detail {

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

inline Json load_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    f >> j;
    return j;
}

inline std::size_t row_budget_from_env() {
    if (const char* env = std::getenv("QOA_ROW_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::invalid_argument("QOA_ROW_BUDGET must be a positive integer");
    }
    return kDefaultRowBudget;
}

inline std::optional<int> provenance_m(const std::string& prov) {
    auto pos = prov.find("m=");
    if (pos == std::string::npos) return std::nullopt;
    return std::atoi(prov.c_str() + pos + 2);
}

}  // namespace detail

/// Runs one CLI invocation. Exit status: 0 success, 1 failed verification,
/// 2 usage or construction error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum orthogonal arrays: build, certify, export"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for verification")->capture_default_str();

    // build
    auto* build = app.add_subcommand("build", "build a quantum orthogonal array for (N, d, k)");
    int bN = 0, bd = 0, bk = 0;
    std::optional<int> bm;
    std::string b_out;
    build->add_option("--N", bN, "number of sites")->required();
    build->add_option("--d", bd, "local dimension")->required();
    build->add_option("--k", bk, "strength")->required();
    build->add_option("--m", bm, "expected repetition count (cross-checked)");
    build->add_option("--output,-o", b_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a state or QOA JSON file");
    std::string v_in, v_out, v_format = "json";
    std::optional<int> vk;
    double v_tol = kDefaultUniformityTol;
    verify->add_option("--input,-i", v_in, "state or QOA JSON file")->required();
    verify->add_option("--k", vk, "strength to test (defaults to the file's k for QOA input)");
    verify->add_option("--tol", v_tol, "max-abs deviation tolerance")->capture_default_str();
    verify->add_option("--format", v_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--output,-o", v_out, "output path (default stdout)");

    // oa
    auto* oa_cmd = app.add_subcommand("oa", "generate a classical orthogonal array");
    std::string oa_kind, oa_out, oa_format = "json";
    int oa_d = 0, oa_N = 0, oa_l = 0;
    bool oa_ext = false;
    oa_cmd->add_option("--construction", oa_kind, "full | zerosum | vandermonde")
        ->required()
        ->check(CLI::IsMember({"full", "zerosum", "vandermonde"}));
    oa_cmd->add_option("--d", oa_d, "levels (a prime power for vandermonde)")->required();
    oa_cmd->add_option("--N", oa_N, "columns (full and zerosum)");
    oa_cmd->add_option("--l", oa_l, "digit-sum residue (zerosum)")->capture_default_str();
    oa_cmd->add_flag("--extended", oa_ext, "append the extra column (vandermonde, d = 2^t)");
    oa_cmd->add_option("--format", oa_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    oa_cmd->add_option("--output,-o", oa_out, "output path (default stdout)");

    // suite
    auto* suite = app.add_subcommand("suite", "run the identity suite and the m=2 negative control");
    double s_tol = 1e-12;
    std::string s_format = "text", s_out;
    suite->add_option("--tol", s_tol, "identity tolerance")->capture_default_str();
    suite->add_option("--format", s_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    suite->add_option("--output,-o", s_out, "output path (default stdout)");

    // export
    auto* exp = app.add_subcommand("export", "assemble a QOA JSON file into its superposition state");
    std::string e_in, e_out;
    exp->add_option("--input,-i", e_in, "QOA JSON file")->required();
    exp->add_option("--output,-o", e_out, "output path (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("quoa");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(build)) {
            QuantumOA q = dispatch(bN, bd, bk);
            if (bm) {
                auto m = detail::provenance_m(q.provenance);
                if (!m || *m != *bm)
                    throw std::invalid_argument("--m " + std::to_string(*bm) + " is inconsistent with N = " +
                                                std::to_string(bN) + " (builder uses m = " +
                                                (m ? std::to_string(*m) : std::string("none")) + ")");
            }
            detail::emit(qoa_to_json(q).dump(2), b_out, out);
            return 0;
        }
        if (app.got_subcommand(verify)) {
            const Json j = detail::load_json(v_in);
            UniformityReport rep;
            if (j.contains("rows")) {
                QuantumOA q = qoa_from_json(j);
                if (vk) q.k = *vk;
                rep = qoa_check(q, v_tol, threads);
            } else {
                if (!vk) throw std::invalid_argument("verify: --k is required for state input");
                rep = is_k_uniform(state_from_json(j), *vk, v_tol, threads);
            }
            detail::emit(v_format == "json" ? report_to_json(rep).dump(2) : report_to_text(rep), v_out, out);
            return rep.passed ? 0 : 1;
        }
        if (app.got_subcommand(oa_cmd)) {
            const std::size_t budget = detail::row_budget_from_env();
            OrthogonalArray oa;
            if (oa_kind == "full") {
                if (oa_N <= 0) throw std::invalid_argument("oa: --N is required for full");
                oa = full_factorial(oa_d, oa_N, budget);
            } else if (oa_kind == "zerosum") {
                if (oa_N <= 0) throw std::invalid_argument("oa: --N is required for zerosum");
                oa = zero_sum_oa(oa_d, oa_N, oa_l, budget);
            } else {
                oa = vandermonde_oa(Field::of_order(oa_d), oa_ext, budget);
            }
            detail::emit(oa_format == "json" ? oa_to_json(oa).dump(2) : oa_to_text(oa), oa_out, out);
            return 0;
        }
        if (app.got_subcommand(suite)) {
            const auto checks = identity_suite(s_tol);
            const auto m2 = m2_counterexample();
            const bool m2_ok = m2.deviation > 0.1;
            bool all = m2_ok;
            for (const auto& c : checks) all = all && c.passed;
            if (s_format == "json") {
                Json j{{"identities", Json::array()},
                       {"m2_counterexample",
                        {{"subset", m2.subset}, {"deviation", m2.deviation}, {"deviation_exceeds_0.1", m2_ok}}},
                       {"passed", all}};
                for (const auto& c : checks)
                    j["identities"].push_back({{"name", c.name}, {"max_deviation", c.max_deviation}, {"passed", c.passed}});
                detail::emit(j.dump(2), s_out, out);
            } else {
                std::ostringstream os;
                for (const auto& c : checks)
                    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  (max dev " << c.max_deviation << ")\n";
                os << (m2_ok ? "PASS " : "FAIL ") << "m2 counterexample: subset {1,4,7} deviation " << m2.deviation
                   << " > 0.1\n"
                   << (all ? "suite: all checks passed" : "suite: FAILURES present") << '\n';
                detail::emit(os.str(), s_out, out);
            }
            return all ? 0 : 1;
        }
        if (app.got_subcommand(exp)) {
            QuantumOA q = qoa_from_json(detail::load_json(e_in));
            detail::emit(state_to_json(assemble_state(q)).dump(2), e_out, out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace quoa::cli
