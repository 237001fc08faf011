// Command-line front end: sweeps, sharpness probes, parameter listing.
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "qsc/sweep.hpp"

namespace {

unsigned default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for a family of q-supercongruences"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "",
                   "INI config file; subcommand flags live in a [verify] etc. "
                   "section, command-line flags override");

    qsc::SweepConfig config;
    config.jobs = default_jobs();
    std::vector<std::string> suites;

    auto* verify = app.add_subcommand("verify", "Run verification suites, emit JSON lines");
    verify->add_option("--suite", suites,
                       "Suites to run: theorem1 theorem2 priors lemmas wz classical "
                       "(default: all)");
    verify->add_option("--n-max", config.n_max, "Largest n in the sweep")
        ->capture_default_str();
    verify->add_option("--d-max", config.d_max, "Largest d in the sweep")
        ->capture_default_str();
    verify->add_option("--r-window", config.r_window,
                       "Half-width of the r range (0 = per-d default 2d+1)")
        ->capture_default_str();
    verify->add_option("--primes", config.primes, "Odd primes for the classical suite")
        ->capture_default_str();
    verify->add_option("--out", config.out_path, "Report file (default: stdout)");
    verify->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();

    long pn = 3, pd = 2, pr = 1, extra = 1;
    long pfamily = 1;
    auto* probe = app.add_subcommand(
        "probe-sharpness", "Re-check one instance at a raised cyclotomic power");
    probe->add_option("-n", pn, "n")->required();
    probe->add_option("-d", pd, "d")->required();
    probe->add_option("-r", pr, "r")->required();
    probe->add_option("--family", pfamily, "1 or 2")->check(CLI::Range(1l, 2l));
    probe->add_option("--extra", extra, "Extra power beyond 4")->capture_default_str();

    auto* list = app.add_subcommand("list-params", "Enumerate valid parameter tuples");
    long ln_max = 21, ld_max = 6, lr_window = 0;
    long lfamily = 1;
    list->add_option("--family", lfamily, "1 or 2")->check(CLI::Range(1l, 2l));
    list->add_option("--n-max", ln_max, "Largest n")->capture_default_str();
    list->add_option("--d-max", ld_max, "Largest d")->capture_default_str();
    list->add_option("--r-window", lr_window, "Half-width of r range (0 = 2d+1)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        if (verify->parsed()) {
            config.families = std::set<std::string>(suites.begin(), suites.end());
            return qsc::run(config);
        }
        if (probe->parsed()) {
            auto line = qsc::sharpness_probe(
                pn, pd, pr, pfamily == 1 ? qsc::Family::Theorem1 : qsc::Family::Theorem2,
                extra);
            std::cout << line.json() << "\n";
            return 0;  // an expected failure is still a successful probe
        }
        if (list->parsed()) {
            qsc::SweepConfig lc;
            lc.n_max = ln_max;
            lc.d_max = ld_max;
            lc.r_window = lr_window;
            lc.validate();
            auto fam = lfamily == 1 ? qsc::Family::Theorem1 : qsc::Family::Theorem2;
            auto tuples = qsc::enumerate_valid_params(
                fam, lc.n_max, lc.d_max, lc.window_for(lc.d_max));
            for (const auto& p : tuples) {
                if (std::abs(p.r) > lc.window_for(p.d) && p.r != p.n) continue;
                std::cout << "{\"family\":" << lfamily << ",\"n\":" << p.n
                          << ",\"d\":" << p.d << ",\"r\":" << p.r << "}\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
