#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tgl/layout.hpp"
#include "tgl/simulate.hpp"

using namespace tgl;

namespace {

// CSV with the runtime column (the only non-reproducible one) removed.
std::string strip_runtime(const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(','));
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("cap policy values") {
    CHECK(cap_policy_value('s', 49) == 4.0);
    CHECK(cap_policy_value('m', 49) == 7.0);
    CHECK(cap_policy_value('l', 49) == 24.5);
    CHECK_THROWS_AS(cap_policy_value('x', 10), std::invalid_argument);
}

TEST_CASE("quadratic fit recovers exact quadratics") {
    std::vector<double> xs, ys;
    for (int n = 10; n <= 40; ++n) {
        xs.push_back(n);
        ys.push_back(2.0 * n * n + 3.0 * n + 5.0);
    }
    const QuadraticFit fit = fit_quadratic(xs, ys);
    CHECK(std::abs(fit.a - 2.0) < 1e-9);
    CHECK(std::abs(fit.b - 3.0) < 1e-9);
    CHECK(std::abs(fit.c - 5.0) < 1e-9);
    CHECK_THROWS_AS(fit_quadratic({1.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("single cell emits the nine policy rows in order") {
    SimulationConfig cfg;
    cfg.nmin = cfg.nmax = 10;
    cfg.samples = 1;
    cfg.seed = 99;
    cfg.threads = 1;
    const SimulationResult result = run_simulation(cfg);
    REQUIRE(result.rows.size() == 9);
    std::string order;
    for (const SimulationRow& row : result.rows) {
        order += row.cl;
        order += row.cr;
        order += ' ';
    }
    CHECK(order == "ll lm ls ml mm ms sl sm ss ");
    for (const SimulationRow& row : result.rows) {
        CHECK(row.n == 10);
        CHECK(row.seed == 99);
        CHECK(row.sample == 0);
        CHECK(!row.crt.has_value());
        CHECK(2 * row.bound <= pairs_of(row.n));
    }
}

TEST_CASE("csv bytes are reproducible apart from measured runtimes") {
    SimulationConfig cfg;
    cfg.nmin = 10;
    cfg.nmax = 13;
    cfg.samples = 3;
    cfg.seed = 31337;

    cfg.threads = 1;
    std::ostringstream a;
    write_csv(a, run_simulation(cfg));
    cfg.threads = 4;  // parallelism must not change ordering or values
    std::ostringstream b;
    write_csv(b, run_simulation(cfg));

    CHECK(a.str().substr(0, a.str().find('\n')) == "n,seed,sample,cl,cr,bound,crt,runtime_s");
    CHECK(strip_runtime(a.str()) == strip_runtime(b.str()));
    CHECK(a.str().find("\r") == std::string::npos);  // LF only
}

TEST_CASE("exact column is filled and consistent when requested") {
    SimulationConfig cfg;
    cfg.nmin = 8;
    cfg.nmax = 10;
    cfg.samples = 2;
    cfg.seed = 7;
    cfg.exact_upto = 9;
    cfg.threads = 1;
    const SimulationResult result = run_simulation(cfg);
    for (const SimulationRow& row : result.rows) {
        if (row.n <= 9) {
            REQUIRE(row.crt.has_value());
            CHECK(row.bound <= *row.crt);
        } else {
            CHECK(!row.crt.has_value());
        }
    }
}

TEST_CASE("policy filter restricts the rows") {
    SimulationConfig cfg;
    cfg.nmin = cfg.nmax = 12;
    cfg.samples = 2;
    cfg.seed = 1;
    cfg.threads = 1;
    cfg.policies = {{'l', 'l'}, {'s', 's'}};
    const SimulationResult result = run_simulation(cfg);
    REQUIRE(result.rows.size() == 4);
    for (const SimulationRow& row : result.rows)
        CHECK((row.cl == row.cr));

    SimulationConfig bad = cfg;
    bad.nmin = bad.nmax = 2;  // cap n/2 = 1 is not a legal cap
    CHECK_THROWS_AS(run_simulation(bad), std::invalid_argument);
    bad.nmin = 13;
    bad.nmax = 12;
    CHECK_THROWS_AS(run_simulation(bad), std::invalid_argument);
}

TEST_CASE("summary lists aggregates and fits once enough sizes exist") {
    SimulationConfig cfg;
    cfg.nmin = 10;
    cfg.nmax = 14;
    cfg.samples = 4;
    cfg.seed = 8;
    cfg.threads = 2;
    const SimulationResult result = run_simulation(cfg);
    REQUIRE(result.fit_average_ll.has_value());
    REQUIRE(result.fit_maximum_ll.has_value());
    CHECK(result.average.at("ll").size() == 5);
    CHECK(result.maximum.at("ss").size() == 5);

    std::ostringstream out;
    write_summary(out, result);
    CHECK(out.str().find("fit,average-ll,a=") != std::string::npos);
    CHECK(out.str().find("reference-a=0.08") != std::string::npos);
}
