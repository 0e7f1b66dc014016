// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "altsum/determinant.hpp"
#include "altsum/instance.hpp"
#include "altsum/onn.hpp"
#include "altsum/svrtan.hpp"
#include "oracles.hpp"
#include "process.hpp"

using namespace altsum;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

EngineOptions engine() {
    const unsigned hw = std::thread::hardware_concurrency();
    return {hw == 0 ? 1u : hw, 100'000'000};
}

std::string seed_tag(const std::string& what, std::uint64_t seed) { return what + " seed " + std::to_string(seed); }

Rational product_of_laplace(const MatrixTuple& a) {
    Rational p(1);
    for (const auto& m : a.matrices()) p *= oracle::laplace_det(m);
    return p;
}

const std::vector<Shape> general_shapes{Shape({2, 2}), Shape({3, 2}), Shape({2, 2, 2}), Shape({3, 3})};

Outcome general_identity() {
    Outcome out;
    int checked = 0;
    for (std::size_t s = 0; s < general_shapes.size(); ++s)
        for (std::uint64_t k = 0; k < 50; ++k) {
            const std::uint64_t seed = 100 * s + k;
            const MatrixTupleInstance inst = random_matrix_tuple(general_shapes[s], seed);
            const IdentityReport r = verify_identity(*inst.form, inst.matrices, engine());
            const std::string tag = seed_tag(general_shapes[s].to_string(), seed);
            out.expect(r.holds, tag + ": lhs " + r.lhs.to_string() + " != rhs " + r.rhs.to_string());
            // Independent oracle: literal sum over the group with the full expansion of f.
            const auto dense_f = FunctionForm(inst.form->shape(), "oracle",
                                              [&](const MatrixTuple& a) { return oracle::dense_eval(*inst.form, a); });
            const Rational lhs = oracle::alternating_sum(dense_f, inst.matrices);
            const Rational inv = oracle::alternating_sum(dense_f, MatrixTuple::identity(general_shapes[s]));
            out.expect(lhs == r.lhs, tag + ": engine lhs differs from the oracle");
            out.expect(inv * product_of_laplace(inst.matrices) == r.rhs, tag + ": rhs differs from the oracle");
            ++checked;
        }
    out.summary = std::to_string(checked) + " random dense forms on (2,2), (3,2), (2,2,2), (3,3)";
    return out;
}

Outcome identity_invariant() {
    Outcome out;
    int checked = 0;
    for (std::size_t s = 0; s < general_shapes.size(); ++s)
        for (std::uint64_t k = 0; k < 50; ++k) {
            const std::uint64_t seed = 100 * s + k;
            const DenseTensorForm f = *random_matrix_tuple(general_shapes[s], seed).form;
            const Rational invariant = invariant_at_identity(f, engine());
            for (std::uint64_t sample = 1; sample <= 3; ++sample) {
                const MatrixTuple a = random_matrix_tuple(general_shapes[s], 1'000'000 * sample + seed).matrices;
                const Rational ratio = alternating_sum(f, a, engine()) / a.determinant_product();
                out.expect(ratio == invariant, seed_tag(general_shapes[s].to_string(), seed) + " sample " +
                                                   std::to_string(sample) + ": ratio " + ratio.to_string() +
                                                   " != invariant " + invariant.to_string());
                ++checked;
            }
        }
    out.summary = std::to_string(checked) + " (form, sample) pairs";
    return out;
}

Outcome onn_identity() {
    Outcome out;
    const struct {
        std::size_t n;
        int count;
    } plan[] = {{2, 100}, {3, 100}, {4, 10}};
    int checked = 0;
    for (const auto& step : plan) {
        const std::int64_t l = oracle::latin_brute_force(step.n).signed_count;
        for (int k = 0; k < step.count; ++k) {
            const std::uint64_t seed = 3000 + 1000 * step.n + k;
            const ColorfulInstance inst = random_colorful(step.n, seed);
            const OnnReport r = verify_onn(inst, engine());
            const std::string tag = seed_tag("n=" + std::to_string(step.n), seed);
            out.expect(r.holds, tag + ": lhs " + r.lhs.to_string() + " != rhs " + r.rhs.to_string());
            out.expect(r.rhs == Rational(static_cast<long>(l)) * product_of_laplace(inst.matrices()),
                       tag + ": rhs differs from the oracle");
            if (step.n == 3) out.expect(r.lhs.is_zero(), tag + ": lhs should vanish");
            ++checked;
        }
    }
    out.summary = std::to_string(checked) + " colorful instances (100 at n=2, 100 at n=3, 10 at n=4)";
    return out;
}

Outcome alon_tarsi_cross() {
    Outcome out;
    const std::int64_t expected[] = {0, 1, 2, 0};
    std::ostringstream values;
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::int64_t l = alon_tarsi_count(n, engine());
        const Rational inv = invariant_at_identity(colorful_form(n), engine());
        const oracle::LatinTally brute = oracle::latin_brute_force(n);
        out.expect(inv == Rational(static_cast<long>(l)),
                   "n=" + std::to_string(n) + ": l(n) " + std::to_string(l) + " != invariant " + inv.to_string());
        out.expect(brute.signed_count == l, "n=" + std::to_string(n) + ": enumeration differs from brute force");
        if (n <= 3) out.expect(l == expected[n], "n=" + std::to_string(n) + ": unexpected l(n)");
        values << (n == 1 ? "" : ", ") << "l(" << n << ")=" << l;
    }
    out.expect(oracle::latin_brute_force(3).squares == 12, "expected 12 squares of order 3");
    out.summary = values.str();
    return out;
}

Outcome svrtan_formula() {
    Outcome out;
    int checked = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const int count = n == 6 ? 10 : 100;
        for (int k = 0; k < count; ++k) {
            const std::uint64_t seed = 5000 + 1000 * n + k;
            const SpinorInstance inst = random_spinor(n, seed);
            const SvrtanReport r = verify_svrtan(inst, engine());
            const std::string tag = seed_tag("n=" + std::to_string(n), seed);
            out.expect(r.holds, tag + ": lhs " + r.lhs.to_string() + " != rhs " + r.rhs.to_string());
            if (n <= 4 || (n == 5 && k < 10))
                out.expect(oracle::svrtan_lhs(inst) == r.lhs, tag + ": lhs differs from the oracle");
            ++checked;
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const SvrtanReport r = verify_svrtan(SpinorInstance::identity(n), engine());
        out.expect(r.lhs == Rational(static_cast<long>(factorial(n))),
                   "identity spinors n=" + std::to_string(n) + ": lhs " + r.lhs.to_string());
    }
    out.summary = std::to_string(checked) + " random spinor instances (n=2..6); identity spinors give n! for n<=6";
    return out;
}

Outcome census() {
    Outcome out;
    std::ostringstream values;
    for (std::size_t n = 2; n <= 5; ++n) {
        const CensusResult c = nonzero_term_census(n, engine());
        out.expect(c.nonzero == factorial(n), "n=" + std::to_string(n) + ": " + std::to_string(c.nonzero) +
                                                   " nonzero terms, expected " + std::to_string(factorial(n)));
        out.expect(c.nonzero_non_transitive == 0, "n=" + std::to_string(n) + ": non-transitive survivors");
        // Oracle: Laplace determinant per choice and an out-degree check done here.
        const SpinorInstance id = SpinorInstance::identity(n);
        const std::size_t m = edge_count(n);
        std::uint64_t nonzero = 0;
        bool all_transitive = true;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            Matrix mat(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto p = oracle::spinor_product(id, bits, i);
                for (std::size_t d = 0; d < n; ++d) mat(d, i) = p[d];
            }
            if (oracle::laplace_det(mat).is_zero()) continue;
            ++nonzero;
            std::vector<std::size_t> out_deg(n, 0);
            std::size_t e = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b, ++e) ++out_deg[((bits >> e) & 1u) ? b : a];
            std::sort(out_deg.begin(), out_deg.end());
            for (std::size_t r = 0; r < n; ++r) all_transitive = all_transitive && out_deg[r] == r;
        }
        out.expect(nonzero == c.nonzero, "n=" + std::to_string(n) + ": oracle count " + std::to_string(nonzero));
        out.expect(all_transitive, "n=" + std::to_string(n) + ": oracle found a non-transitive survivor");
        values << (n == 2 ? "" : ", ") << n << ":" << c.nonzero;
    }
    out.summary = "nonzero terms " + values.str() + ", all transitive tournaments";
    return out;
}

Outcome constructive() {
    Outcome out;
    int rota = 0, svr = 0;
    for (std::size_t n : {2u, 4u})
        for (int k = 0; k < 100; ++k) {
            const std::uint64_t seed = 7000 + 1000 * n + k;
            const ColorfulInstance inst = random_colorful(n, seed);
            const RotaResult r = rota_search(inst);
            const std::string tag = seed_tag("rota n=" + std::to_string(n), seed);
            out.expect(r.status == SearchStatus::found, tag + ": exhausted");
            if (r.status != SearchStatus::found) continue;
            for (std::size_t j = 0; j < n; ++j) {
                Matrix t(n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t col = r.selection->sigma.parts[i](j);
                    for (std::size_t row = 0; row < n; ++row) t(row, i) = inst[i](row, col);
                }
                out.expect(!oracle::laplace_det(t).is_zero(), tag + ": transversal " + std::to_string(j) + " singular");
            }
            ++rota;
        }
    for (std::size_t n = 2; n <= 6; ++n)
        for (int k = 0; k < 100; ++k) {
            const std::uint64_t seed = 8000 + 1000 * n + k;
            const SpinorInstance inst = random_spinor(n, seed);
            const SvrtanSearchResult r = svrtan_search(inst);
            const std::string tag = seed_tag("svrtan n=" + std::to_string(n), seed);
            out.expect(r.status == SearchStatus::found, tag + ": exhausted");
            if (r.status != SearchStatus::found) continue;
            Matrix mat(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto p = oracle::spinor_product(inst, r.choice->bits, i);
                for (std::size_t d = 0; d < n; ++d) mat(d, i) = p[d];
            }
            const Rational direct = oracle::laplace_det(mat);
            out.expect(!direct.is_zero() && direct == r.det, tag + ": witness fails re-verification");
            ++svr;
        }
    out.summary = std::to_string(rota) + " rota selections and " + std::to_string(svr) +
                  " spinor choices found and re-verified";
    return out;
}

Outcome dual_path() {
    Outcome out;
    int checked = 0;
    for (std::size_t n = 3; n <= 5; ++n)
        for (int k = 0; k < 25; ++k) {
            const std::uint64_t seed = 9000 + 1000 * n + k;
            const SpinorInstance inst = random_spinor(n, seed);
            const EngineInstance e = as_engine_instance(inst);
            const IdentityReport via_engine = verify_identity(e.form, e.matrices, engine());
            const SvrtanReport direct = verify_svrtan(inst, engine());
            const std::string tag = seed_tag("n=" + std::to_string(n), seed);
            out.expect(via_engine.lhs.to_string() == direct.lhs.to_string(), tag + ": lhs differs");
            out.expect(via_engine.rhs.to_string() == direct.rhs.to_string(), tag + ": rhs differs");
            ++checked;
        }
    out.summary = std::to_string(checked) + " spinor instances agree on both routes";
    return out;
}

Outcome determinism() {
    Outcome out;
    const std::vector<std::string> commands{
        "verify-general --shape 3,2 --seed 11",  "verify-general --form svrtan --n 4 --seed 12",
        "invariant --form colorful --n 4",       "invariant --shape 2,2,2 --seed 13",
        "alon-tarsi --n 4",                      "verify-onn --n 4 --seed 14",
        "rota-search --n 4 --seed 15",           "verify-svrtan --n 5 --seed 16",
        "svrtan-search --n 6 --seed 17",         "census --n 5",
    };
    int compared = 0;
    for (const auto& command : commands)
        for (const char* format : {"json", "text"}) {
            std::string first;
            for (const char* threads : {"1", "2", "8"}) {
                const auto r = testproc::run(std::string(ALTSUM_CLI_PATH) + " " + command + " --format " + format +
                                             " --threads " + threads);
                out.expect(r.exit_code == 0, command + " --threads " + threads + ": exit " +
                                                 std::to_string(r.exit_code));
                if (std::string(threads) == "1")
                    first = r.out;
                else
                    out.expect(r.out == first, command + " --format " + format + ": output differs at --threads " +
                                                   threads);
                out.expect(!r.out.empty(), command + ": empty output");
                ++compared;
            }
        }
    out.summary = std::to_string(compared) + " CLI runs, byte-identical across --threads 1, 2, 8";
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"general identity", general_identity},
        {"invariant from identity matrices", identity_invariant},
        {"colorful determinant identity", onn_identity},
        {"signed Latin count vs colorful invariant", alon_tarsi_cross},
        {"spinor n! identity", svrtan_formula},
        {"tournament census", census},
        {"constructive searches", constructive},
        {"engine vs direct spinor route", dual_path},
        {"CLI determinism across thread counts", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.problems.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%s): %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    outcome.summary.c_str(), seconds);
        for (const auto& p : outcome.problems) std::printf("    %s\n", p.c_str());
        std::fflush(stdout);
        failed += outcome.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
