#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tgl/sampler.hpp"

namespace tgl {

// Cap policies: 's' = 4, 'm' = sqrt(n), 'l' = n/2.
double cap_policy_value(char policy, int n);
extern const char kCapPolicies[3];  // {'s', 'm', 'l'}

struct SimulationRow {
    int n = 0;
    std::uint64_t seed = 0;
    int sample = 0;
    char cl = 's';
    char cr = 's';
    long long bound = 0;
    std::optional<long long> crt;
    double runtime_s = 0.0;
};

struct SimulationConfig {
    int nmin = 10;
    int nmax = 100;
    int samples = 100;
    std::uint64_t seed = 0;
    std::vector<std::pair<char, char>> policies;  // empty = all 9 ordered pairs
    int exact_upto = 0;                           // compute exact crt for n <= this
    int threads = 0;                              // 0 = hardware, capped by TGL_THREADS
    Distribution distribution = Distribution::shape_uniform_substitute;
};

struct QuadraticFit {
    double a = 0.0;  // leading coefficient of a*n^2 + b*n + c
    double b = 0.0;
    double c = 0.0;
};

// Least-squares fit of y ~ a*x^2 + b*x + c; needs >= 3 points.
QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y);

struct SimulationResult {
    std::vector<SimulationRow> rows;  // sorted by (n, sample, cl, cr)
    // Per policy pair ("ll", "ss", ...) then per n.
    std::map<std::string, std::map<int, double>> average;
    std::map<std::string, std::map<int, long long>> maximum;
    std::optional<QuadraticFit> fit_average_ll;
    std::optional<QuadraticFit> fit_maximum_ll;
};

SimulationResult run_simulation(const SimulationConfig& cfg);

// Row CSV, header `n,seed,sample,cl,cr,bound,crt,runtime_s`; crt empty when
// not computed, floats with 6 significant digits, LF line endings. All
// columns except runtime_s are byte-reproducible for a fixed (seed, flags).
void write_csv(std::ostream& out, const SimulationResult& result);

// Per-n averages and maxima plus the quadratic fits of the ll series.
void write_summary(std::ostream& out, const SimulationResult& result);

// Worker count: `requested` if positive else hardware concurrency, then
// capped by the TGL_THREADS environment variable when set.
int effective_threads(int requested);

}  // namespace tgl
