// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Runs the full desk-scale verification, so expect a long wall time.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qsc/sweep.hpp"

using namespace qsc;

namespace {

int g_failures = 0;

long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

void report(int index, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s — %s\n", pass ? "PASS" : "FAIL", index, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct SuiteOutcome {
    size_t instances = 0;
    size_t failures = 0;
    long elapsed_ms = 0;
    std::vector<ReportLine> lines;
};

SuiteOutcome run_suite(const std::string& family, const SweepConfig& base) {
    SweepConfig config = base;
    config.families = {family};
    long t0 = now_ms();
    SuiteOutcome out;
    out.lines = run_jobs(build_jobs(config), config.jobs);
    out.elapsed_ms = now_ms() - t0;
    out.instances = out.lines.size();
    for (const auto& line : out.lines)
        if (!line.holds) ++out.failures;
    return out;
}

std::string detail(const SuiteOutcome& s, const std::string& extra = "") {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%zu instances, %zu failures, %.1fs%s%s",
                  s.instances, s.failures, s.elapsed_ms / 1000.0,
                  extra.empty() ? "" : "; ", extra.c_str());
    return buf;
}

std::vector<std::string> stable(const std::vector<ReportLine>& lines) {
    std::vector<std::string> out;
    for (auto copy : lines) {
        copy.elapsed_ms = 0;
        out.push_back(copy.json());
    }
    return out;
}

}  // namespace

int main() {
    SweepConfig base;  // n <= 21, d <= 6, r in [-(2d+1), 2d+1] + {n}, primes 5..13
    base.jobs = 1;

    // 1-2: the two main congruence families modulo [n]Phi_n(q)^4, both limits
    auto t1 = run_suite("theorem1", base);
    report(1, "family-1 main congruence sweep", t1.failures == 0 && t1.instances >= 500,
           detail(t1));
    auto t2 = run_suite("theorem2", base);
    report(2, "family-2 main congruence sweep", t2.failures == 0 && t2.instances >= 400,
           detail(t2));

    // 3: each earlier mod-[n]Phi_n^3 result is reproduced AND the new right
    // sides agree with the old ones at that weaker modulus
    auto pr = run_suite("priors", base);
    report(3, "prior results and refinement consistency", pr.failures == 0,
           detail(pr));

    // 4: certificate pair — recurrence grid, telescoping at every swept
    // tuple, term-ratio identity, quartic exponent identity
    auto wz = run_suite("wz", base);
    report(4, "certificate recurrence / telescoping / identities",
           wz.failures == 0, detail(wz));

    // 5: lemma suite — coprimality reports (coprime to Phi_n; the literal
    // 1-q^n version has composite-n counterexamples, e.g. n=9,d=2,r=1,k=3),
    // vanishing at three rational (a,b) samples per tuple, boundary/mid/G
    // congruences instance-wise
    auto lm = run_suite("lemmas", base);
    size_t literal_gk_failures = 0;
    {
        // tally of the documented counterexamples to the stronger claim
        for (Family fam : {Family::Theorem1, Family::Theorem2}) {
            Variant v = fam == Family::Theorem1 ? Variant::N : Variant::DN;
            for (const auto& p :
                 enumerate_valid_params(fam, base.n_max, base.d_max, 13)) {
                long upper = (p.big_n() - p.r) / p.d;
                for (long k = 1; k <= upper; ++k)
                    if (!lemma_coprimality_gk(p.n, p.d, p.r, k, v).coprime)
                        ++literal_gk_failures;
            }
        }
    }
    report(5, "lemma suite (coprimality, vanishing, congruences)",
           lm.failures == 0,
           detail(lm, std::to_string(literal_gk_failures) +
                          " composite-n counterexamples to the literal 1-q^n "
                          "coprimality claim (absorbed by the [N]^4 factor)"));

    // 6: classical (q = 1) statements at the configured primes
    auto cl = run_suite("classical", base);
    report(6, "classical supercongruences at p in {5,7,11,13}", cl.failures == 0,
           detail(cl));

    // 7: q -> 1 limits at n in {5, 13} against the independent classical sum
    {
        long t0 = now_ms();
        bool ok = true;
        size_t count = 0;
        for (long n : {5L, 13L}) {
            for (MChoice mc : {MChoice::Short, MChoice::Long}) {
                ok = ok && q_to_1_crosscheck({n, 2, 1, Family::Theorem1, mc});
                ok = ok && q_to_1_crosscheck({n, 4, 1, Family::Theorem1, mc});
                count += 2;
            }
        }
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%zu exact equalities, %.1fs", count,
                      (now_ms() - t0) / 1000.0);
        report(7, "q -> 1 limit equals the classical sum", ok, buf);
    }

    // 8: the verifier is not vacuous — nontrivial tuples must FAIL when the
    // modulus is raised to [n]Phi_n(q)^5, while trivial r = n instances
    // cannot fail at any power
    {
        long t0 = now_ms();
        int failed1 = 0, failed2 = 0;
        for (auto [n, d, r] : {std::tuple{3L, 2L, 1L}, {5L, 2L, 1L}, {7L, 3L, 1L},
                               {5L, 4L, 1L}})
            if (!sharpness_probe(n, d, r, Family::Theorem1, 1).holds) ++failed1;
        for (auto [n, d, r] : {std::tuple{3L, 2L, 1L}, {5L, 2L, 1L}, {5L, 3L, 1L},
                               {7L, 3L, 2L}})
            if (!sharpness_probe(n, d, r, Family::Theorem2, 1).holds) ++failed2;
        bool trivial_holds = sharpness_probe(5, 4, 5, Family::Theorem1, 1).holds;
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "%d/4 and %d/4 nontrivial tuples fail at power 5, trivial "
                      "r=n holds, %.1fs",
                      failed1, failed2, (now_ms() - t0) / 1000.0);
        report(8, "sharpness probes at raised power", failed1 >= 3 && failed2 >= 3 &&
                                                          trivial_holds,
               buf);
    }

    // 9: determinism — serial and parallel runs of the same config give
    // byte-identical reports once timings are masked
    {
        long t0 = now_ms();
        SweepConfig small;
        small.families = {"theorem1", "priors", "classical"};
        small.n_max = 7;
        small.d_max = 3;
        small.primes = {5, 7};
        auto serial = stable(run_jobs(build_jobs(small), 1));
        auto parallel = stable(run_jobs(build_jobs(small), 4));
        auto again = stable(run_jobs(build_jobs(small), 1));
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%zu lines compared, %.1fs", serial.size(),
                      (now_ms() - t0) / 1000.0);
        report(9, "deterministic reports (serial == parallel == rerun)",
               serial == parallel && serial == again && !serial.empty(), buf);
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
