#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsc/padic.hpp"
#include "qsc/theorems.hpp"
#include "qsc/wz.hpp"

namespace qsc {

/// One verified instance, serialized as a single JSON object per line.
struct ReportLine {
    std::string suite;
    std::map<std::string, long> params;
    bool holds = false;
    std::optional<long> witness_degree;
    long elapsed_ms = 0;

    std::string json() const;
    /// Ordering key (suite, params), independent of timings.
    std::string sort_key() const;
};

struct SweepConfig {
    std::set<std::string> families;  // theorem1, theorem2, priors, lemmas, wz, classical
    long n_max = 21;
    long d_max = 6;
    long r_window = 0;  // 0 = per-d default 2d+1
    std::vector<long> primes = {5, 7, 11, 13};
    unsigned jobs = 1;
    std::string out_path;

    void validate() const;  // throws std::invalid_argument
    long window_for(long d) const { return r_window > 0 ? r_window : 2 * d + 1; }
};

/// Work items for the selected suites, in deterministic order.
/// Each returned closure produces one ReportLine.
std::vector<std::function<ReportLine()>> build_jobs(const SweepConfig& config);

/// Executes jobs with `jobs` worker threads, returns lines sorted by
/// (suite, params).
std::vector<ReportLine> run_jobs(std::vector<std::function<ReportLine()>> jobs, unsigned threads);

/// Re-check of one theorem instance against [n] Phi_n(q)^{4+extra_power};
/// a failure here is the expected outcome (sharpness).
ReportLine sharpness_probe(long n, long d, long r, Family family, long extra_power);

/// Full driver: runs the configured suites, writes JSON lines to
/// config.out_path (stdout when empty), prints a summary table.
/// Exit codes: 0 all hold, 1 verification failure, 2 output not writable,
/// 3 invalid configuration.
int run(const SweepConfig& config);

}  // namespace qsc
