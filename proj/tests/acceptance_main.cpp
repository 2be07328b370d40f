// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "quoa/qoa.hpp"
#include "quoa/verify.hpp"

using namespace quoa;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
};

std::vector<Criterion> g_results;

// every QOA verified along the way, kept for the equivalence criterion
struct VerifiedPair {
    std::string name;
    UniformityReport def_check;   // qoa_check
    UniformityReport state_check; // is_k_uniform(assemble_state)
};
std::vector<VerifiedPair> g_pairs;

template <typename Fn>
void run_criterion(int id, const std::string& title, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        std::tie(ok, detail) = fn();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    g_results.push_back({id, title, ok, detail, secs});
    std::printf("criterion %2d: %s  %-28s %s  (%.2f s)\n", id, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
}

// runs both verification routes on a QOA, records the pair, and returns the
// Definition-check report
UniformityReport verify_both(const std::string& name, const QuantumOA& q, double tol = 1e-9) {
    UniformityReport def = qoa_check(q, tol);
    UniformityReport st = is_k_uniform(assemble_state(q), q.k, tol);
    g_pairs.push_back({name, def, st});
    return def;
}

std::string dev_str(double dev) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "dev=%.2e", dev);
    return buf;
}

double gram_dev(const std::vector<SparseState>& fam) {
    double worst = 0;
    for (size_t a = 0; a < fam.size(); ++a)
        for (size_t b = 0; b < fam.size(); ++b)
            worst = std::max(worst, std::abs(inner(fam[a], fam[b]) - (a == b ? 1.0 : 0.0)));
    return worst;
}

}  // namespace

int main() {
    // 1. reproduction of the six-qubit strength-2 sample state
    run_criterion(1, "sample state reproduction", [] {
        const auto t0 = std::chrono::steady_clock::now();
        OrthogonalArray oa = iroa_8_6_2_2();
        QuantumOA q = oa_to_qoa(oa, 2);
        SparseState st = assemble_state(q);
        bool ok = st.term_count() == 8;
        const double expect = 1.0 / (2.0 * std::numbers::sqrt2);
        for (const auto& row : oa.rows) {
            Ket ket(row.begin(), row.end());
            ok = ok && std::abs(st.amplitude(ket) - Amplitude{expect, 0}) < 1e-15;
        }
        UniformityReport rep = verify_both("sample_8_6_2_2", q);
        ok = ok && rep.passed && rep.max_deviation < 1e-9;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && secs < 1.0;
        return std::pair{ok, dev_str(rep.max_deviation)};
    });

    // 2. qubit strength-3 family
    run_criterion(2, "qubit strength-3 family", [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        double worst = 0;
        for (int m : {1, 3}) {
            UniformityReport rep = verify_both("qubit_3_3m(m=" + std::to_string(m) + ")", build_qubit_3_3m(m));
            ok = ok && rep.passed;
            worst = std::max(worst, rep.max_deviation);
        }
        for (int m : {2, 3}) {
            UniformityReport rep = verify_both("qubit_4_3m(m=" + std::to_string(m) + ")", build_qubit_4_3m(m));
            ok = ok && rep.passed;
            worst = std::max(worst, rep.max_deviation);
        }
        UniformityReport rep14 = verify_both("qubit_11_3m(m=1)", build_qubit_11_3m(1));
        ok = ok && rep14.passed && rep14.subsets_checked == 364;
        worst = std::max(worst, rep14.max_deviation);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && worst < 1e-9 && secs < 300.0;
        return std::pair{ok, dev_str(worst)};
    });

    // 3. the m = 2 negative control
    run_criterion(3, "m=2 negative control", [] {
        M2Counterexample c = m2_counterexample();
        bool ok = c.subset == std::vector<int>{1, 4, 7} && c.deviation > 0.1;
        ok = ok && qoa_check(build_qubit_3_3m(1)).passed;
        return std::pair{ok, dev_str(c.deviation)};
    });

    // 4. prime-power strength-3 family at N = 7 and N = 9
    run_criterion(4, "prime-power strength-3", [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        double worst = 0;
        for (int d : {7, 8, 9, 11, 13}) {
            Field f = Field::of_order(d);
            for (int n : {2, 4}) {
                QuantumOA q = build_qud_2_n_3m(select_params(f, n), 1);
                UniformityReport rep =
                    verify_both("qud_2_n_3m(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")", q);
                ok = ok && rep.passed;
                worst = std::max(worst, rep.max_deviation);
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && worst < 1e-9 && secs < 600.0;
        return std::pair{ok, dev_str(worst)};
    });

    // 5. the d in {3, 5} family
    run_criterion(5, "3- and 5-level family", [] {
        const auto t0 = std::chrono::steady_clock::now();
        UniformityReport r5 = verify_both("qud35(d=5)", build_qud35(5, 1));
        const double s5 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto t1 = std::chrono::steady_clock::now();
        UniformityReport r3 = verify_both("qud35(d=3)", build_qud35(3, 1));
        const double s3 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        const bool ok = r5.passed && r5.max_deviation < 1e-9 && s5 < 30.0 && r3.passed &&
                        r3.max_deviation < 1e-9 && s3 < 30.0;
        std::ostringstream d;
        d << "d=5 " << dev_str(r5.max_deviation) << ", d=3 " << dev_str(r3.max_deviation)
          << (r3.passed ? "" : " (3-level construction fails strength 3; see README)");
        return std::pair{ok, d.str()};
    });

    // 6. strength-2 coverage
    run_criterion(6, "strength-2 coverage", [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        double worst = 0;
        auto check = [&](const std::string& name, const QuantumOA& q) {
            UniformityReport rep = verify_both(name, q);
            ok = ok && rep.passed && q.k == 2;
            worst = std::max(worst, rep.max_deviation);
        };
        check("s2(5,2)", build_strength2_qubit(3, 1));
        check("s2(6,2)", build_strength2_qubit(2, 2));
        check("s2(5,3)", build_strength2_qud(Field(3), 3, 1));
        check("s2(6,3)", build_strength2_qud(Field(3), 4, 1, 2));
        check("s2(5,4)", build_strength2_qud(Field(2, 2), 3, 1));
        check("s2(6,4)", build_strength2_qud(Field(2, 2), 4, 1, 2));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && worst < 1e-9 && secs < 10.0;
        return std::pair{ok, dev_str(worst)};
    });

    // 7. basis orthonormality
    run_criterion(7, "basis orthonormality", [] {
        double worst = 0;
        {
            std::vector<SparseState> fam;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) fam.push_back(ghz_state(i, j, k));
            worst = std::max(worst, gram_dev(fam));
        }
        {
            std::vector<SparseState> fam;
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) fam.push_back(bell_state(x, y));
            worst = std::max(worst, gram_dev(fam));
        }
        for (int d : {4, 5, 7, 8, 9}) {
            Field f = Field::of_order(d);
            std::vector<SparseState> fam;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) fam.push_back(psi_state(f, i, j, k, 2, 1));
            worst = std::max(worst, gram_dev(fam));
        }
        for (int d : {3, 4, 5}) {
            Field f = Field::of_order(d);
            std::vector<SparseState> fam;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) fam.push_back(phi2_state(f, i, j));
            worst = std::max(worst, gram_dev(fam));
        }
        for (int d : {3, 5}) {
            std::vector<SparseState> fam;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) fam.push_back(phi3_state(d, i, j, k));
            worst = std::max(worst, gram_dev(fam));
        }
        return std::pair{worst < 1e-12, dev_str(worst)};
    });

    // 8. identity suite
    run_criterion(8, "trace identity suite", [] {
        const auto checks = identity_suite(1e-12);
        bool ok = !checks.empty();
        double worst = 0;
        for (const auto& c : checks) {
            ok = ok && c.passed;
            worst = std::max(worst, c.max_deviation);
        }
        return std::pair{ok, std::to_string(checks.size()) + " identities, " + dev_str(worst)};
    });

    // 9. classical orthogonal array checks
    run_criterion(9, "classical OA checks", [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (auto [d, N] : {std::pair{2, 3}, {2, 4}, {3, 2}}) {
            OrthogonalArray oa = full_factorial(d, N);
            ok = ok && strength_check(oa, oa.strength);
        }
        for (auto [d, N] : {std::pair{2, 4}, {3, 4}, {2, 2}}) {
            OrthogonalArray oa = zero_sum_oa(d, N, 0);
            ok = ok && strength_check(oa, oa.strength);
        }
        ok = ok && irredundancy_check(zero_sum_oa(2, 2, 0), 1);
        for (int d : {4, 5, 7, 8, 9}) {
            OrthogonalArray oa = vandermonde_oa(Field::of_order(d));
            ok = ok && strength_check(oa, 3) && irredundancy_check(oa, 3);
        }
        for (int d : {4, 8}) {
            OrthogonalArray oa = vandermonde_oa(Field::of_order(d), true);
            ok = ok && strength_check(oa, 3) && irredundancy_check(oa, 3);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && secs < 60.0;
        return std::pair{ok, std::string()};
    });

    // 10. equivalence of the two verification routes on everything built above
    run_criterion(10, "route equivalence", [] {
        bool ok = !g_pairs.empty();
        double worst_gap = 0;
        for (const auto& p : g_pairs) {
            ok = ok && p.def_check.passed == p.state_check.passed;
            worst_gap = std::max(worst_gap, std::abs(p.def_check.max_deviation - p.state_check.max_deviation));
        }
        ok = ok && worst_gap < 1e-12;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%zu pairs, gap=%.2e", g_pairs.size(), worst_gap);
        return std::pair{ok, std::string(buf)};
    });

    // 11. sensitivity
    run_criterion(11, "perturbation sensitivity", [] {
        bool ok = true;
        auto flips = [&](const SparseState& st, int k) {
            SparseState bad = st;
            bad.accumulate(st.amps().begin()->first, 1e-3);
            return !is_k_uniform(normalize(bad), k).passed;
        };
        ok = ok && flips(assemble_state(oa_to_qoa(iroa_8_6_2_2(), 2)), 2);
        ok = ok && flips(assemble_state(build_qubit_3_3m(1)), 3);
        ok = ok && flips(assemble_state(build_qud35(5, 1)), 3);
        ok = ok && flips(assemble_state(build_strength2_qud(Field(3), 3, 1)), 2);
        return std::pair{ok, std::string()};
    });

    int failures = 0;
    for (const auto& r : g_results) failures += r.passed ? 0 : 1;
    std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(g_results.size()) - failures,
                g_results.size());
    return failures;
}
