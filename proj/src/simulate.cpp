#include "tgl/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tgl/bound.hpp"
#include "tgl/solver.hpp"

namespace tgl {

const char kCapPolicies[3] = {'s', 'm', 'l'};

double cap_policy_value(char policy, int n) {
    switch (policy) {
        case 's':
            return 4.0;
        case 'm':
            return std::sqrt(static_cast<double>(n));
        case 'l':
            return n / 2.0;
    }
    throw std::invalid_argument("unknown cap policy");
}

int effective_threads(int requested) {
    int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* cap = std::getenv("TGL_THREADS")) {
        const int parsed = std::atoi(cap);
        if (parsed > 0 && parsed < threads) threads = parsed;
    }
    return threads;
}

QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("fit_quadratic: need at least 3 points");
    // Normal equations for least squares on (1, x, x^2), solved by Gaussian
    // elimination with partial pivoting.
    double s[5] = {0, 0, 0, 0, 0};
    double t[3] = {0, 0, 0};
    for (size_t i = 0; i < x.size(); ++i) {
        double p = 1.0;
        for (int k = 0; k <= 4; ++k) {
            s[k] += p;
            if (k <= 2) t[k] += p * y[i];
            p *= x[i];
        }
    }
    double a[3][4] = {{s[0], s[1], s[2], t[0]},
                      {s[1], s[2], s[3], t[1]},
                      {s[2], s[3], s[4], t[2]}};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        std::swap(a[col], a[pivot]);
        if (a[col][col] == 0.0) throw std::invalid_argument("fit_quadratic: singular system");
        for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            const double f = a[row][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
        }
    }
    QuadraticFit fit;
    fit.c = a[0][3] / a[0][0];
    fit.b = a[1][3] / a[1][1];
    fit.a = a[2][3] / a[2][2];
    return fit;
}

namespace {

std::vector<std::pair<char, char>> all_policies() {
    std::vector<std::pair<char, char>> out;
    for (char cl : kCapPolicies)
        for (char cr : kCapPolicies) out.emplace_back(cl, cr);
    return out;
}

}  // namespace

SimulationResult run_simulation(const SimulationConfig& cfg) {
    if (cfg.nmin > cfg.nmax || cfg.nmin < 1 || cfg.samples < 1)
        throw std::invalid_argument("simulate: bad range");
    std::vector<std::pair<char, char>> policies =
        cfg.policies.empty() ? all_policies() : cfg.policies;
    // Cap values grow with n, so checking the smallest n suffices.
    for (auto [cl, cr] : policies) {
        if (cap_policy_value(cl, cfg.nmin) <= 1.0 || cap_policy_value(cr, cfg.nmin) <= 1.0)
            throw std::invalid_argument(std::string("simulate: cap policy '") + cl + cr +
                                        "' needs larger n than " + std::to_string(cfg.nmin));
    }

    struct Cell {
        int n;
        int sample;
    };
    std::vector<Cell> cells;
    for (int n = cfg.nmin; n <= cfg.nmax; ++n)
        for (int sample = 0; sample < cfg.samples; ++sample) cells.push_back({n, sample});

    SimulationResult result;
    result.rows.resize(cells.size() * policies.size());

    const int threads = effective_threads(cfg.threads);
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const size_t c = cursor.fetch_add(1);
            if (c >= cells.size()) return;
            const auto [n, sample] = cells[c];

            SampleConfig sample_cfg;
            sample_cfg.n = n;
            sample_cfg.seed = cfg.seed;
            sample_cfg.count = cfg.samples;
            sample_cfg.distribution = cfg.distribution;
            const Tanglegram t = random_tanglegram(sample_cfg, sample);

            std::optional<long long> crt;
            if (n <= cfg.exact_upto) {
                SolverOptions opts;
                opts.cap = cfg.exact_upto;
                crt = exact_crt(t, opts).crt;
            }

            for (size_t p = 0; p < policies.size(); ++p) {
                const auto [cl, cr] = policies[p];
                SimulationRow row;
                row.n = n;
                row.seed = cfg.seed;
                row.sample = sample;
                row.cl = cl;
                row.cr = cr;
                row.crt = crt;
                const auto begin = std::chrono::steady_clock::now();
                row.bound = crossing_lower_bound(t, cap_policy_value(cl, n),
                                                 cap_policy_value(cr, n));
                row.runtime_s =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
                        .count();
                result.rows[c * policies.size() + p] = row;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Rows sorted by (n, sample, cl, cr) byte order so parallelism never
    // changes the output.
    std::sort(result.rows.begin(), result.rows.end(), [](const SimulationRow& a,
                                                         const SimulationRow& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.sample != b.sample) return a.sample < b.sample;
        if (a.cl != b.cl) return a.cl < b.cl;
        return a.cr < b.cr;
    });

    // Aggregates and the quadratic fits of the ll series.
    std::map<std::string, std::map<int, long long>> sums;
    std::map<std::string, std::map<int, int>> counts;
    for (const SimulationRow& row : result.rows) {
        const std::string key{row.cl, row.cr};
        sums[key][row.n] += row.bound;
        counts[key][row.n] += 1;
        auto [it, fresh] = result.maximum[key].emplace(row.n, row.bound);
        if (!fresh && row.bound > it->second) it->second = row.bound;
    }
    for (const auto& [key, by_n] : sums)
        for (const auto& [n, sum] : by_n)
            result.average[key][n] = static_cast<double>(sum) / counts[key][n];

    if (auto it = result.average.find("ll");
        it != result.average.end() && it->second.size() >= 3) {
        std::vector<double> xs, avg_ys, max_ys;
        for (const auto& [n, avg] : it->second) {
            xs.push_back(n);
            avg_ys.push_back(avg);
            max_ys.push_back(static_cast<double>(result.maximum["ll"][n]));
        }
        result.fit_average_ll = fit_quadratic(xs, avg_ys);
        result.fit_maximum_ll = fit_quadratic(xs, max_ys);
    }
    return result;
}

namespace {

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const SimulationResult& result) {
    out << "n,seed,sample,cl,cr,bound,crt,runtime_s\n";
    for (const SimulationRow& row : result.rows) {
        out << row.n << ',' << row.seed << ',' << row.sample << ',' << row.cl << ',' << row.cr
            << ',' << row.bound << ',';
        if (row.crt) out << *row.crt;
        out << ',' << format_float(row.runtime_s) << '\n';
    }
}

void write_summary(std::ostream& out, const SimulationResult& result) {
    out << "policy,n,average,maximum\n";
    for (const auto& [key, by_n] : result.average) {
        for (const auto& [n, avg] : by_n) {
            out << key << ',' << n << ',' << format_float(avg) << ','
                << result.maximum.at(key).at(n) << '\n';
        }
    }
    if (result.fit_average_ll) {
        const QuadraticFit& f = *result.fit_average_ll;
        out << "fit,average-ll,a=" << format_float(f.a) << ",b=" << format_float(f.b)
            << ",c=" << format_float(f.c) << ",reference-a=0.055\n";
    }
    if (result.fit_maximum_ll) {
        const QuadraticFit& f = *result.fit_maximum_ll;
        out << "fit,maximum-ll,a=" << format_float(f.a) << ",b=" << format_float(f.b)
            << ",c=" << format_float(f.c) << ",reference-a=0.08\n";
    }
}

}  // namespace tgl
