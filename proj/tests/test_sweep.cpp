#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "doctest.h"
#include "qsc/sweep.hpp"

using namespace qsc;

namespace {

std::vector<std::string> stable_lines(const std::vector<ReportLine>& lines) {
    std::vector<std::string> out;
    for (auto copy : lines) {
        copy.elapsed_ms = 0;  // timing is the only field allowed to vary
        out.push_back(copy.json());
    }
    return out;
}

}  // namespace

TEST_CASE("report line serialization") {
    ReportLine line;
    line.suite = "theorem1";
    line.params = {{"n", 3}, {"d", 2}, {"r", -1}};
    line.holds = true;
    line.elapsed_ms = 7;
    CHECK(line.json() ==
          "{\"suite\":\"theorem1\",\"params\":{\"d\":2,\"n\":3,\"r\":-1},"
          "\"holds\":true,\"witness_degree\":null,\"elapsed_ms\":7}");
    line.holds = false;
    line.witness_degree = 12;
    CHECK(line.json() ==
          "{\"suite\":\"theorem1\",\"params\":{\"d\":2,\"n\":3,\"r\":-1},"
          "\"holds\":false,\"witness_degree\":12,\"elapsed_ms\":7}");
}

TEST_CASE("config validation") {
    SweepConfig bad_prime;
    bad_prime.primes = {9};
    CHECK_THROWS_AS(bad_prime.validate(), std::invalid_argument);
    SweepConfig even_prime;
    even_prime.primes = {2};
    CHECK_THROWS_AS(even_prime.validate(), std::invalid_argument);
    SweepConfig bad_family;
    bad_family.families = {"theorems"};
    CHECK_THROWS_AS(bad_family.validate(), std::invalid_argument);
    SweepConfig small_n;
    small_n.n_max = 2;
    CHECK_THROWS_AS(small_n.validate(), std::invalid_argument);
    SweepConfig ok;
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.window_for(2) == 5);
    CHECK(ok.window_for(6) == 13);
    ok.r_window = 3;
    CHECK(ok.window_for(6) == 3);
}

TEST_CASE("sweep sizes match the constraint system") {
    SweepConfig config;
    config.families = {"theorem1"};
    config.n_max = 9;
    config.d_max = 4;
    auto jobs = build_jobs(config);
    CHECK(jobs.size() >= 10);
    // two M choices per tuple
    CHECK(jobs.size() % 2 == 0);
}

TEST_CASE("parallel and serial runs agree") {
    SweepConfig config;
    config.families = {"theorem1", "classical"};
    config.n_max = 5;
    config.d_max = 3;
    config.primes = {5};
    auto serial = run_jobs(build_jobs(config), 1);
    auto parallel = run_jobs(build_jobs(config), 4);
    CHECK(stable_lines(serial) == stable_lines(parallel));
    CHECK(!serial.empty());
    for (const auto& line : serial) CHECK(line.holds);
    for (size_t i = 1; i < serial.size(); ++i)
        CHECK(serial[i - 1].sort_key() <= serial[i].sort_key());
}

TEST_CASE("sharpness probe") {
    auto fail = sharpness_probe(3, 2, 1, Family::Theorem1, 1);
    CHECK(!fail.holds);
    CHECK(fail.witness_degree.has_value());
    auto trivial = sharpness_probe(5, 4, 5, Family::Theorem1, 1);
    CHECK(trivial.holds);
}

TEST_CASE("driver exit codes") {
    SweepConfig config;
    config.families = {"theorem1"};
    config.n_max = 3;
    config.d_max = 2;
    config.out_path = "/tmp/qsc_sweep_test.jsonl";
    CHECK(run(config) == 0);
    std::remove("/tmp/qsc_sweep_test.jsonl");

    SweepConfig bad = config;
    bad.primes = {9};
    CHECK(run(bad) == 3);

    SweepConfig unwritable = config;
    unwritable.out_path = "/nonexistent-dir/report.jsonl";
    CHECK(run(unwritable) == 2);
}
