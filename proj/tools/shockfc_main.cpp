// shockfc command-line driver: solve / train-sdnn / gen-fc-assets /
// list-problems / compare / fd6-baseline.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "shockfc/fc/gram.hpp"
#include "shockfc/io/io.hpp"
#include "shockfc/problems/double_mach.hpp"
#include "shockfc/problems/metrics.hpp"
#include "shockfc/problems/registry.hpp"
#include "shockfc/sdnn/dataset.hpp"
#include "shockfc/sdnn/train.hpp"
#include "shockfc/timestepper/run.hpp"

namespace fs = std::filesystem;
using namespace shockfc;

namespace {

constexpr int kExitConfig = 2, kExitNumerical = 3;

std::string default_asset_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SHOCKFC_ASSET_DIR")) return env;
    return "assets";
}

std::string asset_file_for(const std::string& dir, int d) {
    return dir + "/fc_d" + std::to_string(d) + "_C27.bin";
}

std::string hex64(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Named output fields of a state: the scalar itself, or the primitive
// variables for Euler runs.
std::vector<std::pair<std::string, std::vector<double>>> state_fields(
    const FlowState& e, const EquationSpec& spec) {
    if (!spec.is_euler()) return {{"u", e.comp[0]}};
    auto pr = primitive_quantities(e, spec);
    std::vector<std::pair<std::string, std::vector<double>>> out;
    out.emplace_back("rho", e.comp[0]);
    out.emplace_back("u", pr.u);
    if (spec.kind == Equation::euler2d) out.emplace_back("v", pr.v);
    out.emplace_back("p", pr.p);
    return out;
}

// Exact reference solutions where one is known in closed form.
bool oracle_available(const std::string& id, double t) {
    if (id == "advection-bc" || id == "advection-periodic") return true;
    if (id == "sod" || id == "lax") return true;
    if (id == "burgers2d") return t < 0.5;
    return false;
}

std::vector<std::pair<std::string, std::vector<double>>> oracle_fields(
    const Problem& p, const Grid1D& g1, const Grid2D& g2, double t) {
    std::vector<std::pair<std::string, std::vector<double>>> out;
    if (p.id == "advection-bc") {
        std::vector<double> u(g1.N);
        for (int i = 0; i < g1.N; ++i) u[i] = advection_bc_value(t - g1.x(i));
        out.emplace_back("u", std::move(u));
    } else if (p.id == "advection-periodic") {
        std::vector<double> u(g1.N);
        for (int i = 0; i < g1.N; ++i) {
            double xi = g1.x(i) - t;
            xi -= std::floor(xi);
            u[i] = bump_omega(xi - 0.5, 0.0, 0.2);
        }
        out.emplace_back("u", std::move(u));
    } else if (p.id == "sod" || p.id == "lax") {
        const double split = p.id == "sod" ? 0.5 : 0.0;
        RiemannState l = p.id == "sod" ? RiemannState{1.0, 0.0, 1.0}
                                       : RiemannState{0.445, 0.698, 3.528};
        RiemannState r = p.id == "sod" ? RiemannState{0.125, 0.0, 0.1}
                                       : RiemannState{0.5, 0.0, 0.571};
        auto sol = solve_riemann(l, r, p.eq.gamma);
        std::vector<double> rho(g1.N), u(g1.N), pr(g1.N);
        for (int i = 0; i < g1.N; ++i) {
            RiemannState w =
                t > 0 ? sample_riemann(sol, (g1.x(i) - split) / t)
                      : (g1.x(i) < split ? l : r);
            rho[i] = w.rho;
            u[i] = w.u;
            pr[i] = w.p;
        }
        out.emplace_back("rho", std::move(rho));
        out.emplace_back("u", std::move(u));
        out.emplace_back("p", std::move(pr));
    } else if (p.id == "burgers2d") {
        std::vector<double> u(std::size_t(g2.Nx) * g2.Ny, 0.0);
        for (int j = 0; j < g2.Ny; ++j)
            for (int i = 0; i < g2.Nx; ++i)
                u[g2.idx(i, j)] = exact_burgers2d(g2.x(i), g2.y(j), t);
        out.emplace_back("u", std::move(u));
    }
    return out;
}

struct SolveCfg {
    std::string problem, method = "sdnn", assets, weights, out = "run", config;
    int n = 0, n2 = 0;
    double cfl = -1, t_end = -1, dump_every = 0;
    bool dump_viscosity = false, dump_oracle = false, disable_filter = false;
};

const std::vector<std::string> kConfigKeys = {
    "problem", "n", "n2", "cfl", "t_end", "method", "assets", "weights", "out",
    "dump_every", "dump_viscosity", "dump_oracle", "disable_filter",
    // provenance keys written by the manifest; accepted and ignored on input
    "run.asset_file", "run.asset_hash", "run.weights_hash", "run.steps",
    "run.wall_time_s", "run.snapshot", "run.final_metric"};

// File values fill in whatever was not set on the command line.
void merge_config_file(SolveCfg& c, const std::map<std::string, std::string>& kv) {
    auto get = [&](const char* k) -> const std::string* {
        auto it = kv.find(k);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (auto* v = get("problem"); v && c.problem.empty()) c.problem = *v;
    if (auto* v = get("method"); v && c.method == "sdnn") c.method = *v;
    if (auto* v = get("assets"); v && c.assets.empty()) c.assets = *v;
    if (auto* v = get("weights"); v && c.weights.empty()) c.weights = *v;
    if (auto* v = get("out"); v && c.out == "run") c.out = *v;
    if (auto* v = get("n"); v && c.n == 0) c.n = std::stoi(*v);
    if (auto* v = get("n2"); v && c.n2 == 0) c.n2 = std::stoi(*v);
    if (auto* v = get("cfl"); v && c.cfl < 0) c.cfl = std::stod(*v);
    if (auto* v = get("t_end"); v && c.t_end < 0) c.t_end = std::stod(*v);
    if (auto* v = get("dump_every"); v && c.dump_every == 0) c.dump_every = std::stod(*v);
    if (auto* v = get("dump_viscosity"); v && !c.dump_viscosity)
        c.dump_viscosity = *v != "0";
    if (auto* v = get("dump_oracle"); v && !c.dump_oracle) c.dump_oracle = *v != "0";
    if (auto* v = get("disable_filter"); v && !c.disable_filter)
        c.disable_filter = *v != "0";
}

void dump_snapshots(const std::string& dir, const std::string& prefix, double t,
                    const Problem& prob, const RunResult& r, bool with_mu,
                    std::vector<std::string>& files) {
    std::string tag = format_time_tag(t);
    auto fields = state_fields(r.state, prob.eq);
    if (with_mu) fields.emplace_back("mu", r.mu);
    for (auto& [name, v] : fields) {
        std::string fname = prefix + name + "_t" + tag + ".csv";
        if (prob.dim == 1) write_csv_1d(dir + "/" + fname, r.grid1, v);
        else write_csv_2d(dir + "/" + fname, r.grid2, v);
        files.push_back(fname);
    }
}

int cmd_solve(SolveCfg c) {
    Problem prob;
    FcAssets assets;
    MlpParams mlp;
    std::string asset_path, asset_dir, weights_path;
    try {
        if (!c.config.empty())
            merge_config_file(c, parse_config_file(c.config, kConfigKeys));
        if (c.problem.empty()) throw std::invalid_argument("solve: missing --problem");
        if (c.method != "sdnn" && c.method != "ev")
            throw std::invalid_argument("solve: --method must be sdnn or ev");
        prob = build_problem(c.problem);
        asset_dir = default_asset_dir(c.assets);
        asset_path = asset_file_for(asset_dir, prob.d);
        assets = load_fc_assets(asset_path);
        weights_path = c.weights.empty() ? asset_dir + "/sdnn_weights.fcsdnn" : c.weights;
        if (c.method == "sdnn") mlp = load_mlp(weights_path);
        fs::create_directories(c.out);
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    }

    RunOptions opt;
    opt.n = c.n;
    opt.n2 = c.n2;
    opt.cfl = c.cfl;
    opt.t_end = c.t_end;
    opt.method = c.method == "ev" ? ViscMethod::ev : ViscMethod::sdnn;
    opt.disable_filter = c.disable_filter;

    if (prob.id == "double-mach") apply_incident_shock_init_dm(prob, assets, mlp);

    std::vector<std::string> files;
    RunResult res;
    auto t0 = std::chrono::steady_clock::now();
    try {
        double next_dump = c.dump_every > 0 ? c.dump_every : -1;
        StepCallback cb = nullptr;
        if (next_dump > 0)
            cb = [&](const StepInfo& si) {
                if (si.t + 1e-12 < next_dump) return;
                RunResult snap;
                snap.state = *si.state;
                snap.mu = *si.mu;
                snap.grid1 = res.grid1;
                snap.grid2 = res.grid2;
                // grids are not known until run() returns; recompute here
                snap.grid1 = prob.periodic
                                 ? Grid1D(prob.x0,
                                          prob.x1 - (prob.x1 - prob.x0) /
                                                        (c.n > 0 ? c.n : prob.default_n),
                                          c.n > 0 ? c.n : prob.default_n)
                                 : Grid1D(prob.x0, prob.x1, c.n > 0 ? c.n : prob.default_n);
                if (prob.dim == 2) {
                    int nx = c.n > 0 ? c.n : prob.default_n;
                    int ny = c.n2 > 0 ? c.n2
                                      : (prob.default_n2 > 0 ? prob.default_n2 : nx);
                    snap.grid2 = Grid2D(prob.x0, prob.x1, nx, prob.y0, prob.y1, ny);
                    if (prob.shape) prob.shape(snap.grid2);
                }
                dump_snapshots(c.out, "", si.t, prob, snap, c.dump_viscosity, files);
                while (next_dump <= si.t + 1e-12) next_dump += c.dump_every;
            };
        res = run(prob, opt, assets, mlp, cb);
    } catch (const std::exception& ex) {
        std::cerr << "numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    dump_snapshots(c.out, "", res.t, prob, res, c.dump_viscosity, files);

    std::vector<std::string> metric_lines;
    if (c.dump_oracle && oracle_available(prob.id, res.t)) {
        auto of = oracle_fields(prob, res.grid1, res.grid2, res.t);
        std::string tag = format_time_tag(res.t);
        double h = prob.dim == 1 ? res.grid1.h : res.grid2.hx * res.grid2.hy;
        auto nf = state_fields(res.state, prob.eq);
        for (auto& [name, v] : of) {
            std::string fname = "oracle_" + name + "_t" + tag + ".csv";
            if (prob.dim == 1) write_csv_1d(c.out + "/" + fname, res.grid1, v);
            else write_csv_2d(c.out + "/" + fname, res.grid2, v);
            files.push_back(fname);
            for (auto& [nn, nv] : nf)
                if (nn == name) {
                    auto m = error_metrics(nv, v, h);
                    metric_lines.push_back(name + " l1=" + format_g17(m.l1) +
                                           " l2=" + format_g17(m.l2) +
                                           " linf=" + format_g17(m.linf));
                }
        }
    }

    std::ofstream man(c.out + "/manifest.txt");
    man << "[config]\n";
    man << "problem = " << c.problem << "\n";
    man << "n = " << (c.n > 0 ? c.n : prob.default_n) << "\n";
    if (prob.dim == 2)
        man << "n2 = " << (c.n2 > 0 ? c.n2 : (prob.default_n2 > 0 ? prob.default_n2 : (c.n > 0 ? c.n : prob.default_n)))
            << "\n";
    man << "cfl = " << format_g17(c.cfl > 0 ? c.cfl : prob.cfl) << "\n";
    man << "t_end = " << format_g17(c.t_end > 0 ? c.t_end : prob.t_end) << "\n";
    man << "method = " << c.method << "\n";
    man << "assets = " << asset_dir << "\n";
    man << "weights = " << weights_path << "\n";
    man << "out = " << c.out << "\n";
    man << "dump_every = " << format_g17(c.dump_every) << "\n";
    man << "dump_viscosity = " << int(c.dump_viscosity) << "\n";
    man << "dump_oracle = " << int(c.dump_oracle) << "\n";
    man << "disable_filter = " << int(c.disable_filter) << "\n";
    man << "[run]\n";
    man << "run.asset_file = " << asset_path << "\n";
    man << "run.asset_hash = " << hex64(fnv64_file(asset_path)) << "\n";
    if (c.method == "sdnn")
        man << "run.weights_hash = " << hex64(fnv64_file(weights_path)) << "\n";
    man << "run.steps = " << res.steps << "\n";
    man << "run.wall_time_s = " << format_g17(wall) << "\n";
    for (const auto& f : files) man << "run.snapshot = " << f << "\n";
    for (const auto& m : metric_lines) man << "run.final_metric = " << m << "\n";

    std::cout << c.problem << ": " << res.steps << " steps to t = " << format_time_tag(res.t)
              << " in " << format_time_tag(wall) << " s, " << files.size()
              << " snapshot(s) in " << c.out << "\n";
    for (const auto& m : metric_lines) std::cout << "  " << m << "\n";
    return 0;
}

int cmd_compare(const std::string& problem, int n, int n2, double t_end,
                const std::string& assets_flag, const std::string& weights_flag,
                const std::string& out) {
    Problem prob;
    FcAssets assets;
    MlpParams mlp;
    try {
        prob = build_problem(problem);
        std::string dir = default_asset_dir(assets_flag);
        assets = load_fc_assets(asset_file_for(dir, prob.d));
        mlp = load_mlp(weights_flag.empty() ? dir + "/sdnn_weights.fcsdnn" : weights_flag);
        double T = t_end > 0 ? t_end : prob.t_end;
        if (!oracle_available(prob.id, T))
            throw std::invalid_argument("compare: no exact reference for '" + problem +
                                        "' at t = " + format_time_tag(T));
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    }

    std::ofstream rep(out);
    if (!rep) {
        std::cerr << "config error: cannot open " << out << "\n";
        return kExitConfig;
    }
    rep << "time,method,field,l1,l2,linf,tv\n";
    try {
        for (std::string method : {"sdnn", "ev"}) {
            RunOptions opt;
            opt.n = n;
            opt.n2 = n2;
            opt.t_end = t_end;
            opt.method = method == "ev" ? ViscMethod::ev : ViscMethod::sdnn;
            auto res = run(prob, opt, assets, mlp);
            auto of = oracle_fields(prob, res.grid1, res.grid2, res.t);
            auto nf = state_fields(res.state, prob.eq);
            double h = prob.dim == 1 ? res.grid1.h : res.grid2.hx * res.grid2.hy;
            for (auto& [name, ov] : of)
                for (auto& [nn, nv] : nf)
                    if (nn == name) {
                        auto m = error_metrics(nv, ov, h);
                        rep << format_g17(res.t) << ',' << method << ',' << name << ','
                            << format_g17(m.l1) << ',' << format_g17(m.l2) << ','
                            << format_g17(m.linf) << ',' << format_g17(m.tv) << "\n";
                    }
        }
    } catch (const std::exception& ex) {
        std::cerr << "numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
    std::cout << "report written to " << out << "\n";
    return 0;
}

// 6th-order central differences + SSPRK-4 with a fixed time step, the
// reference scheme for the long-time periodic advection comparison.
int cmd_fd6(int n, double t_end, const std::string& out) {
    const double L = 1.0, h = L / n, a = 1.0, dt0 = 0.0034;
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = bump_omega(i * h - 0.5, 0.0, 0.2);
    FlowState e;
    e.comp.push_back(u);
    auto rhs = [&](const FlowState& s) {
        FlowState f = s;
        const auto& v = s.comp[0];
        auto at = [&](int i) { return v[((i % n) + n) % n]; };
        for (int i = 0; i < n; ++i)
            f.comp[0][i] = -a / h *
                           (0.75 * (at(i + 1) - at(i - 1)) -
                            0.15 * (at(i + 2) - at(i - 2)) +
                            (at(i + 3) - at(i - 3)) / 60.0);
        return f;
    };
    auto noop = [](FlowState&, double) {};
    double t = 0;
    long steps = 0;
    try {
        while (t_end - t > 1e-13 * std::max(1.0, t_end)) {
            double dt = std::min(dt0, t_end - t);
            ssprk4_step(e, t, dt, noop, rhs);
            t += dt;
            ++steps;
        }
    } catch (const std::exception& ex) {
        std::cerr << "numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
    fs::create_directories(out);
    Grid1D g(0.0, L - h, n);
    write_csv_1d(out + "/u_t" + format_time_tag(t) + ".csv", g, e.comp[0]);
    double linf = 0;
    for (int i = 0; i < n; ++i) {
        double xi = i * h - t;
        xi -= std::floor(xi);
        linf = std::max(linf, std::abs(e.comp[0][i] - bump_omega(xi - 0.5, 0.0, 0.2)));
    }
    std::cout << "fd6-baseline: n = " << n << ", " << steps << " steps to t = "
              << format_time_tag(t) << ", linf error = " << format_g17(linf) << "\n";
    return 0;
}

int cmd_train(std::uint64_t seed, int epochs, const std::string& out, double lr, int batch,
              const std::string& resume, const std::string& assets_flag) {
    FcAssets assets;
    MlpParams start;
    bool have_start = false;
    try {
        std::string path = asset_file_for(default_asset_dir(assets_flag), 5);
        assets = fs::exists(path) ? load_fc_assets(path) : generate_fc_assets(5, 27);
        if (!resume.empty()) {
            start = load_mlp(resume);
            have_start = true;
        }
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    }
    try {
        auto data = generate_dataset(seed, assets);
        std::cout << "epoch,train_accuracy,val_accuracy\n";
        auto res = train(
            std::move(data), epochs, seed, lr, batch,
            [&](int e, double ta, double va, const MlpParams&, bool) {
                std::cout << e << ',' << format_g17(ta) << ',' << format_g17(va) << "\n";
            },
            have_start ? &start : nullptr);
        save_mlp(res.best, out);
        std::cerr << "best validation accuracy " << format_g17(res.best_val_accuracy)
                  << " saved to " << out << "\n";
    } catch (const std::exception& ex) {
        std::cerr << "numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FC-SDNN shock-capturing solver"};
    app.require_subcommand(1);

    SolveCfg sc;
    auto* solve = app.add_subcommand("solve", "run a benchmark problem");
    solve->add_option("--problem", sc.problem, "problem id (see list-problems)");
    solve->add_option("--config", sc.config, "key=value config file (flags win)");
    solve->add_option("--n", sc.n, "grid points (x)");
    solve->add_option("--n2", sc.n2, "grid points (y, 2D)");
    solve->add_option("--cfl", sc.cfl, "CFL number");
    solve->add_option("--t-end", sc.t_end, "final time");
    solve->add_option("--method", sc.method, "viscosity method: sdnn or ev");
    solve->add_option("--assets", sc.assets, "asset directory (default $SHOCKFC_ASSET_DIR)");
    solve->add_option("--weights", sc.weights, "network weights file");
    solve->add_option("--out", sc.out, "output directory");
    solve->add_option("--dump-every", sc.dump_every, "snapshot interval in simulated time");
    solve->add_flag("--dump-viscosity", sc.dump_viscosity, "also write the viscosity field");
    solve->add_flag("--dump-oracle", sc.dump_oracle, "write the exact solution if known");
    solve->add_flag("--disable-filter", sc.disable_filter, "turn off the global filter");

    std::string cp_problem, cp_assets, cp_weights, cp_out = "report.csv";
    int cp_n = 0, cp_n2 = 0;
    double cp_t = -1;
    auto* cmp = app.add_subcommand("compare", "FC-SDNN vs FC-EV against the exact solution");
    cmp->add_option("--problem", cp_problem)->required();
    cmp->add_option("--n", cp_n);
    cmp->add_option("--n2", cp_n2);
    cmp->add_option("--t-end", cp_t);
    cmp->add_option("--assets", cp_assets);
    cmp->add_option("--weights", cp_weights);
    cmp->add_option("--out", cp_out, "report CSV path");

    int fd_n = 90;
    double fd_t = 500.0;
    std::string fd_out = "fd6";
    auto* fd6 = app.add_subcommand("fd6-baseline",
                                   "6th-order FD reference for periodic advection");
    fd6->add_option("--n", fd_n);
    fd6->add_option("--t-end", fd_t);
    fd6->add_option("--out", fd_out);

    std::uint64_t tr_seed = 0;
    int tr_epochs = 0, tr_batch = 128;
    double tr_lr = 1e-6;
    std::string tr_out, tr_resume, tr_assets;
    auto* tr = app.add_subcommand("train-sdnn", "train the smoothness classifier");
    tr->add_option("--seed", tr_seed)->required();
    tr->add_option("--epochs", tr_epochs)->required();
    tr->add_option("--out", tr_out)->required();
    tr->add_option("--lr", tr_lr);
    tr->add_option("--batch", tr_batch);
    tr->add_option("--resume", tr_resume, "continue from an existing weights file");
    tr->add_option("--assets", tr_assets);

    int ga_d = 5, ga_c = 27;
    std::string ga_out;
    auto* ga = app.add_subcommand("gen-fc-assets", "precompute the FC-Gram matrices");
    ga->add_option("--d", ga_d)->required();
    ga->add_option("--c", ga_c)->required();
    ga->add_option("--out", ga_out)->required();

    auto* lp = app.add_subcommand("list-problems", "list the benchmark problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (lp->parsed()) {
        for (const auto& id : problem_ids())
            std::cout << id << "  -  " << build_problem(id).description << "\n";
        return 0;
    }
    if (ga->parsed()) {
        try {
            save_fc_assets(generate_fc_assets(ga_d, ga_c), ga_out);
            std::cout << "wrote " << ga_out << " (hash " << hex64(fnv64_file(ga_out))
                      << ")\n";
        } catch (const std::exception& ex) {
            std::cerr << "config error: " << ex.what() << "\n";
            return kExitConfig;
        }
        return 0;
    }
    if (solve->parsed()) return cmd_solve(sc);
    if (cmp->parsed())
        return cmd_compare(cp_problem, cp_n, cp_n2, cp_t, cp_assets, cp_weights, cp_out);
    if (fd6->parsed()) return cmd_fd6(fd_n, fd_t, fd_out);
    if (tr->parsed())
        return cmd_train(tr_seed, tr_epochs, tr_out, tr_lr, tr_batch, tr_resume, tr_assets);
    return kExitConfig;
}
