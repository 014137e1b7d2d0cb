// tgl: tanglegram crossing-number toolbox.
//
// Subcommands: crt (exact crossing number), bound (clade lower bound),
// gen (named families), sample (seeded random instances), simulate
// (lower-bound sweep, CSV).
//
// Exit codes: 0 success, 2 input parse failure, 3 size cap exceeded,
// 4 bad arguments.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tgl/bound.hpp"
#include "tgl/errors.hpp"
#include "tgl/families.hpp"
#include "tgl/io.hpp"
#include "tgl/layout.hpp"
#include "tgl/sampler.hpp"
#include "tgl/simulate.hpp"
#include "tgl/solver.hpp"
#include "tgl/version.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitArgs = 4;

// Cap expressions: a number, "sqrt" or "half".
double parse_cap(const std::string& expr, int n) {
    if (expr == "sqrt") return std::sqrt(static_cast<double>(n));
    if (expr == "half") return n / 2.0;
    try {
        size_t used = 0;
        const double v = std::stod(expr, &used);
        if (used == expr.size()) return v;
    } catch (...) {
    }
    throw CLI::ValidationError("--cl/--cr", "expected a number, 'sqrt' or 'half'");
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << payload;
}

int cmd_crt(const std::string& file, int cap) {
    const tgl::Tanglegram t = tgl::read_tanglegram_file(file);
    tgl::SolverOptions opts;
    opts.cap = cap;
    const tgl::CrossingReport report = tgl::exact_crt(t, opts);
    std::cout << "crt " << report.crt << "\n"
              << "witness-left " << report.witness.left.to_string() << "\n"
              << "witness-right " << report.witness.right.to_string() << "\n"
              << "nodes-visited " << report.stats.nodes_visited << "\n"
              << "leaves-evaluated " << report.stats.leaves_evaluated << "\n"
              << "pruned " << report.stats.pruned << "\n"
              << "runtime-s " << report.stats.seconds << "\n";
    return 0;
}

int cmd_bound(const std::string& file, const std::string& cl, const std::string& cr) {
    const tgl::Tanglegram t = tgl::read_tanglegram_file(file);
    const double cap_left = parse_cap(cl, t.size());
    const double cap_right = parse_cap(cr, t.size());
    if (cap_left <= 1.0 || cap_right <= 1.0)
        throw CLI::ValidationError("--cl/--cr", "caps must be greater than 1");

    const tgl::CladePartition left = tgl::clade_partition(t.left(), cap_left, tgl::Side::left);
    const tgl::CladePartition right =
        tgl::clade_partition(t.right(), cap_right, tgl::Side::right);
    const tgl::CladeMatrix m = tgl::clade_matrix(t, left, right);

    auto print_sizes = [](const char* name, const tgl::CladePartition& p) {
        std::cout << name;
        for (int i = 0; i < p.part_count(); ++i) std::cout << ' ' << p.part_size(i);
        std::cout << "\n";
    };
    print_sizes("left-part-sizes", left);
    print_sizes("right-part-sizes", right);
    std::cout << "matrix\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) std::cout << (j ? " " : "") << m.at(i, j);
        std::cout << "\n";
    }
    std::cout << "bound " << tgl::lower_bound_from_matrix(m) << "\n";
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& components, std::uint64_t seed, int k_opt,
            const std::string& out) {
    auto need_size = [&](size_t want) {
        if (params.size() != want)
            throw CLI::ValidationError("gen", "wrong number of parameters for " + family);
    };
    auto to_int = [](const std::string& s) {
        try {
            size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used == s.size()) return v;
        } catch (...) {
        }
        throw CLI::ValidationError("gen", "expected an integer parameter");
    };

    tgl::Tanglegram t;
    if (family == "caterpillar-tanglegram") {
        need_size(1);
        t = tgl::caterpillar_tanglegram(to_int(params[0]));
    } else if (family == "grid") {
        need_size(1);
        if (components != "caterpillar")
            throw CLI::ValidationError("gen", "unknown --components '" + components + "'");
        t = tgl::grid_family_caterpillar(to_int(params[0]));
    } else if (family == "extended") {
        need_size(1);
        const int n = to_int(params[0]);
        if (k_opt < 2) throw CLI::ValidationError("gen", "extended requires --k >= 2");
        tgl::Rng rng(seed);
        t = tgl::extend_family(tgl::grid_family_caterpillar(k_opt), n, rng);
    } else {
        throw CLI::ValidationError("gen", "unknown family '" + family + "'");
    }
    write_output(out, tgl::serialize_tanglegram(t));
    return 0;
}

int cmd_sample(int n, int count, std::uint64_t seed, const std::string& distribution,
               const std::string& out) {
    tgl::SampleConfig cfg;
    cfg.n = n;
    cfg.count = count;
    cfg.seed = seed;
    if (distribution == "plane-uniform") {
        cfg.distribution = tgl::Distribution::plane_uniform;
    } else if (distribution == "shape-uniform-substitute") {
        cfg.distribution = tgl::Distribution::shape_uniform_substitute;
    } else {
        throw CLI::ValidationError("--distribution", "unknown distribution");
    }
    if (n < 1 || count < 1) throw CLI::ValidationError("sample", "need --n >= 1, --count >= 1");

    std::string payload;
    for (int i = 0; i < count; ++i)
        payload += tgl::serialize_tanglegram(tgl::random_tanglegram(cfg, i));
    write_output(out, payload);
    std::cerr << "sample: distribution=" << tgl::distribution_name(cfg.distribution)
              << " generator=" << tgl::Rng::generator_name() << " seed=" << seed
              << " count=" << count << "\n";
    return 0;
}

int cmd_simulate(const tgl::SimulationConfig& cfg, const std::string& out,
                 const std::string& summary) {
    const tgl::SimulationResult result = tgl::run_simulation(cfg);
    {
        std::ostringstream csv;
        tgl::write_csv(csv, result);
        write_output(out, csv.str());
    }
    std::ostringstream sum;
    tgl::write_summary(sum, result);
    if (summary.empty()) {
        std::cerr << sum.str();
    } else {
        std::ofstream f(summary, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + summary + "'");
        f << sum.str();
    }
    std::cerr << "simulate: distribution=" << tgl::distribution_name(cfg.distribution)
              << " generator=" << tgl::Rng::generator_name() << " seed=" << cfg.seed << "\n";
    return 0;
}

std::vector<std::pair<char, char>> parse_policies(const std::string& list) {
    std::vector<std::pair<char, char>> out;
    std::string item;
    std::istringstream ss(list);
    while (std::getline(ss, item, ',')) {
        if (item.size() != 2 || std::string("sml").find(item[0]) == std::string::npos ||
            std::string("sml").find(item[1]) == std::string::npos)
            throw CLI::ValidationError("--policies", "expected pairs like ss,ml,ll");
        out.emplace_back(item[0], item[1]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tanglegram crossing-number toolbox"};
    app.set_version_flag("--version", std::string("tgl ") + tgl::kVersion);
    app.require_subcommand(1);

    // crt
    auto* crt = app.add_subcommand("crt", "exact tangle crossing number of a .tgl file");
    std::string crt_file;
    int crt_cap = 20;
    crt->add_option("file", crt_file, "input .tgl file")->required();
    crt->add_option("--cap", crt_cap, "instance size limit");

    // bound
    auto* bound = app.add_subcommand("bound", "clade-partition lower bound");
    std::string bound_file, bound_cl, bound_cr;
    bound->add_option("file", bound_file, "input .tgl file")->required();
    bound->add_option("--cl", bound_cl, "left cap: number, 'sqrt' or 'half'")->required();
    bound->add_option("--cr", bound_cr, "right cap: number, 'sqrt' or 'half'")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family member");
    std::string gen_family, gen_components = "caterpillar", gen_out;
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 0;
    int gen_k = 0;
    gen->add_option("family", gen_family, "caterpillar-tanglegram | grid | extended")
        ->required();
    gen->add_option("params", gen_params, "family parameters (size)");
    gen->add_option("--components", gen_components, "grid component shape");
    gen->add_option("--seed", gen_seed, "seed for 'extended'");
    gen->add_option("--k", gen_k, "base grid parameter for 'extended'");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "seeded random tanglegrams");
    int sample_n = 0, sample_count = 1;
    std::uint64_t sample_seed = 0;
    std::string sample_dist = "shape-uniform-substitute", sample_out;
    sample->add_option("--n", sample_n, "size")->required();
    sample->add_option("--count", sample_count, "number of samples");
    sample->add_option("--seed", sample_seed, "seed");
    sample->add_option("--distribution", sample_dist,
                       "shape-uniform-substitute | plane-uniform");
    sample->add_option("-o,--out", sample_out, "output file (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "lower-bound sweep, CSV rows to stdout");
    tgl::SimulationConfig sim_cfg;
    std::string sim_policies, sim_out, sim_summary;
    simulate->add_option("--nmin", sim_cfg.nmin, "smallest size");
    simulate->add_option("--nmax", sim_cfg.nmax, "largest size");
    simulate->add_option("--samples", sim_cfg.samples, "samples per size");
    simulate->add_option("--seed", sim_cfg.seed, "seed");
    simulate->add_option("--exact-upto", sim_cfg.exact_upto,
                         "also compute exact crt for n up to this");
    simulate->add_option("--policies", sim_policies, "subset like ss,ml,ll (default all 9)");
    simulate->add_option("--threads", sim_cfg.threads, "worker threads (0 = hardware)");
    simulate->add_option("-o,--out", sim_out, "CSV output file (default stdout)");
    simulate->add_option("--summary", sim_summary, "summary file (default stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitArgs;
    }

    try {
        if (crt->parsed()) return cmd_crt(crt_file, crt_cap);
        if (bound->parsed()) return cmd_bound(bound_file, bound_cl, bound_cr);
        if (gen->parsed())
            return cmd_gen(gen_family, gen_params, gen_components, gen_seed, gen_k, gen_out);
        if (sample->parsed())
            return cmd_sample(sample_n, sample_count, sample_seed, sample_dist, sample_out);
        if (simulate->parsed()) {
            if (!sim_policies.empty()) sim_cfg.policies = parse_policies(sim_policies);
            return cmd_simulate(sim_cfg, sim_out, sim_summary);
        }
    } catch (const tgl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const tgl::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
