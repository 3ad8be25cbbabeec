#include "wavelab/cli.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <stdexcept>

#include "wavelab/growth_fit.hpp"
#include "wavelab/mollify.hpp"
#include "wavelab/ode_energy.hpp"
#include "wavelab/spectral.hpp"
#include "wavelab/suite.hpp"
#include "wavelab/util.hpp"

namespace wavelab::cli {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::complex<double> complex_from(const io::KeyValueFile& kv, const std::string& prefix,
                                  double re_default, double im_default) {
    return {kv.get_double(prefix + "_re", re_default), kv.get_double(prefix + "_im", im_default)};
}

std::vector<double> beta_grid_from(const io::KeyValueFile& kv) {
    if (kv.has("betas")) return kv.get_double_list("betas");
    const double lo = kv.get_double("beta_min", 16.0);
    const double hi = kv.get_double("beta_max", 16384.0);
    const int count = static_cast<int>(kv.get_int("beta_count", 13));
    return util::geometric_grid(lo, hi, count);
}

void write_sweep_csv(const std::string& path, const std::vector<growth::SweepRecord>& records) {
    io::CsvBuilder csv({"beta", "e_ratio", "k_min", "wall_time"});
    for (const auto& r : records) {
        csv.add_row({io::format_double(r.beta), io::format_double(r.e_ratio),
                     r.k_min ? io::format_double(*r.k_min) : std::string(""),
                     io::format_double(r.wall_time)});
    }
    io::write_file_atomic(path, csv.str());
}

void write_loglog_dat(const std::string& path, const std::vector<growth::SweepRecord>& records) {
    // two-column plot data: log(beta), log(log e_ratio) where defined
    std::string out;
    for (const auto& r : records) {
        if (r.e_ratio <= 1.0 + 1e-3) continue;
        out += io::format_double(std::log(r.beta));
        out += " ";
        out += io::format_double(std::log(std::log(r.e_ratio)));
        out += "\n";
    }
    io::write_file_atomic(path, out);
}

void write_field_csv(const std::string& path, const spectral::SpectralField& field) {
    io::CsvBuilder csv({"m", "lambda", "beta", "weight", "re_u", "im_u", "re_du", "im_du"});
    for (const auto& mode : field.modes) {
        csv.add_row({mode.m ? std::to_string(*mode.m) : std::string(""),
                     mode.lambda ? io::format_double(*mode.lambda) : std::string(""),
                     io::format_double(mode.beta), io::format_double(mode.weight),
                     io::format_double(mode.u_hat.real()), io::format_double(mode.u_hat.imag()),
                     io::format_double(mode.du_hat.real()),
                     io::format_double(mode.du_hat.imag())});
    }
    io::write_file_atomic(path, csv.str());
}

int run_coeff(const ExperimentConfig& ex) {
    const auto p = profile_from_config(ex.config);
    const int grid = static_cast<int>(ex.config.get_int("grid", 1024));
    io::CsvBuilder csv({"t", "a"});
    for (int i = 0; i <= grid; ++i) {
        const double t = p.T * i / grid;
        csv.add_row(std::vector<double>{t, p.eval(t)});
    }
    io::write_file_atomic(join(ex.out_dir, "coeff.csv"), csv.str());

    const int sgrid = static_cast<int>(ex.config.get_int("seminorm_grid", 4096));
    const double order = ex.config.get_double("seminorm_alpha", p.seminorm_order);
    io::ReportBuilder report;
    // the profile block is itself a loadable config fragment
    report.add("profile.kind", p.generator);
    for (const auto& [key, value] : p.params) report.add("profile." + key, value);
    report.add("case_tag", coeff::to_string(p.case_tag));
    report.add("a0", p.a0);
    report.add("sup_bound", p.sup_bound);
    report.add("T", p.T);
    if (p.alpha) report.add("alpha", *p.alpha);
    if (p.smoothness_l) report.add("l", static_cast<double>(*p.smoothness_l));
    report.add("seminorm_order", p.seminorm_order);
    report.add("seminorm_bound", p.seminorm_bound);
    report.add("sqrt_seminorm_order", p.sqrt_seminorm_order);
    report.add("sqrt_seminorm_bound", p.sqrt_seminorm_bound);
    report.add("measured_order", order);
    report.add("measured_seminorm", coeff::estimate_hoelder_seminorm(p, order, sgrid));
    report.add("measured_sqrt_seminorm",
               coeff::estimate_sqrt_hoelder_seminorm(p, p.sqrt_seminorm_order, sgrid));
    io::write_file_atomic(join(ex.out_dir, "coeff_report.txt"), report.str());
    return 0;
}

int run_solve(const ExperimentConfig& ex) {
    const auto p = profile_from_config(ex.config);
    const double beta = ex.config.get_double("beta");
    const auto v0 = complex_from(ex.config, "v0", 1.0, 0.0);
    const auto v1 = complex_from(ex.config, "v1", 0.0, 0.0);
    const int spp = static_cast<int>(ex.config.get_int("steps_per_period", 64));
    const auto traj = ode::solve(p, beta, v0, v1, spp);
    const auto e_base = ode::base_energy(traj);

    const bool with_sym = ex.config.get_bool("energy_symmetrizer", false);
    const bool with_quasi = ex.config.get_bool("energy_quasi", false);
    const bool with_w = ex.config.get_bool("energy_transformed", false);
    const double eps = ex.config.get_double("eps", std::min(1.0, 1.0 / beta));

    ode::EnergyTrace e_sym, e_quasi, e_w;
    double k_used = 0.0;
    if (with_sym) e_sym = ode::symmetrizer_energy(traj, p);
    if (with_quasi) e_quasi = ode::quasi_energy(traj, p, eps);
    if (with_w) {
        const double s = ex.config.get_double("s", 1.5);
        const auto variant = ex.config.get_string("variant", "plain") == "shifted"
                                 ? mollify::Variant::Shifted
                                 : mollify::Variant::Plain;
        const mollify::RegularizedPair pair(p, eps, variant);
        if (ex.config.has("K")) {
            k_used = ex.config.get_double("K");
        } else {
            const int tg = static_cast<int>(ex.config.get_int("k_t_grid",
                                            static_cast<long long>(traj.size()) * 2));
            k_used = ode::minimal_decay_rate(p, pair, beta, s, tg) + 1e-6;
        }
        e_w = ode::transformed_energy(traj, pair, s, k_used);
    }

    std::vector<std::string> header = {"t", "re_v", "im_v", "re_dv", "im_dv", "e_base"};
    if (with_sym) header.push_back("e_sym");
    if (with_quasi) header.push_back("e_quasi");
    if (with_w) header.push_back("w2");
    io::CsvBuilder csv(header);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const auto v = traj.v_of(i);
        std::vector<double> row = {traj.times[i], v.real(), v.imag(), traj.dv_comp[i].real(),
                                   traj.dv_comp[i].imag(), e_base.values[i]};
        if (with_sym) row.push_back(e_sym.values[i]);
        if (with_quasi) row.push_back(e_quasi.values[i]);
        if (with_w) row.push_back(e_w.values[i]);
        csv.add_row(row);
    }
    io::write_file_atomic(join(ex.out_dir, "trajectory.csv"), csv.str());

    io::ReportBuilder report;
    report.add("beta", beta);
    report.add("steps", static_cast<double>(traj.size() - 1));
    report.add("dt", traj.dt);
    report.add("e0", e_base.values.front());
    report.add("eT", e_base.values.back());
    double emax = 0.0;
    for (double e : e_base.values) emax = std::max(emax, e);
    report.add("e_ratio", emax / e_base.values.front());
    if (with_w) report.add("K", k_used);
    io::write_file_atomic(join(ex.out_dir, "solve_report.txt"), report.str());
    return 0;
}

int run_mollify_verify(const ExperimentConfig& ex) {
    const auto p = profile_from_config(ex.config);
    std::vector<double> eps_grid;
    if (ex.config.has("eps_list")) {
        eps_grid = ex.config.get_double_list("eps_list");
    } else {
        for (int k = 3; k <= 9; ++k) eps_grid.push_back(std::pow(2.0, -k));
    }
    const int t_grid = static_cast<int>(ex.config.get_int("t_grid", 4096));
    const auto variant = ex.config.get_string("variant", "plain") == "shifted"
                             ? mollify::Variant::Shifted
                             : mollify::Variant::Plain;
    const auto report = mollify::verify_mollification_bounds(p, eps_grid, t_grid, variant);

    io::CsvBuilder csv({"eps", "sup_err_lambda1", "sup_err_lambda2", "sup_dlambda2", "min_det"});
    for (std::size_t i = 0; i < report.eps_grid.size(); ++i)
        csv.add_row(std::vector<double>{report.eps_grid[i], report.sup_err_lambda1[i],
                                        report.sup_err_lambda2[i], report.sup_dlambda2[i],
                                        report.min_det[i]});
    io::write_file_atomic(join(ex.out_dir, "mollify_errors.csv"), csv.str());

    io::ReportBuilder out;
    out.add("alpha", report.alpha);
    out.add("exact", report.exact);
    out.add("c1", report.c1);
    out.add("c2", report.c2);
    out.add("k", report.k);
    out.add("exponent_lambda1", report.exponent_lambda1);
    out.add("exponent_lambda2", report.exponent_lambda2);
    out.add("exponent_dlambda2", report.exponent_dlambda2);
    out.add("exponent_tolerance", report.exponent_tolerance);
    out.add("pass_lambda1", report.pass_lambda1);
    out.add("pass_lambda2", report.pass_lambda2);
    out.add("pass_dlambda2", report.pass_dlambda2);
    out.add("det_ok", report.det_ok);
    io::write_file_atomic(join(ex.out_dir, "mollify_report.txt"), out.str());

    const bool pass =
        report.pass_lambda1 && report.pass_lambda2 && report.pass_dlambda2 && report.det_ok;
    return pass ? 0 : 1;
}

int run_sweep(const ExperimentConfig& ex) {
    const auto p = profile_from_config(ex.config);
    const auto betas = beta_grid_from(ex.config);
    growth::SweepOptions opt;
    opt.v0 = complex_from(ex.config, "v0", 1.0, 0.0);
    opt.v1 = complex_from(ex.config, "v1", 0.0, 0.0);
    opt.steps_per_period = static_cast<int>(ex.config.get_int("steps_per_period", 64));
    opt.threads = ex.threads;
    opt.with_k_min = ex.config.get_bool("with_k_min", false);
    opt.k_min_s = ex.config.get_double("k_min_s", 1.5);
    opt.k_min_t_grid = static_cast<int>(ex.config.get_int("k_min_t_grid", 512));
    const auto records = growth::beta_sweep(p, betas, opt);
    write_sweep_csv(join(ex.out_dir, "sweep.csv"), records);
    write_loglog_dat(join(ex.out_dir, "sweep_loglog.dat"), records);
    return 0;
}

int run_fit(const ExperimentConfig& ex) {
    const std::string input = ex.config.get_string("input");
    const auto table = io::read_csv(input);
    const int cb = table.column("beta");
    const int ce = table.column("e_ratio");
    if (cb < 0 || ce < 0)
        throw std::runtime_error("fit: input CSV needs 'beta' and 'e_ratio' columns: " + input);
    std::vector<growth::SweepRecord> records;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        growth::SweepRecord rec;
        rec.beta = table.number(r, cb);
        rec.e_ratio = table.number(r, ce);
        records.push_back(rec);
    }
    const auto tag = coeff::case_tag_from_string(ex.config.get_string("case", "lip+"));
    std::optional<double> alpha;
    if (ex.config.has("alpha")) alpha = ex.config.get_double("alpha");
    std::optional<int> l;
    if (ex.config.has("l")) l = static_cast<int>(ex.config.get_int("l"));
    const double tol = ex.config.get_double("tolerance", 0.1) * ex.tolerance_scale;
    const auto v = growth::verdict(records, tag, alpha, l, tol);

    io::ReportBuilder report;
    report.add("fitted_exponent", v.fitted_exponent);
    report.add("theoretical_bound", v.theoretical_bound);
    report.add("tolerance", v.tolerance);
    report.add("bounded", v.bounded);
    report.add("pass", v.pass);
    report.add("case_tag", coeff::to_string(v.case_tag));
    if (v.alpha) report.add("alpha", *v.alpha);
    if (v.l) report.add("l", static_cast<double>(*v.l));
    io::write_file_atomic(join(ex.out_dir, "verdict.txt"), report.str());
    return v.pass ? 0 : 1;
}

int run_spectral(const ExperimentConfig& ex) {
    const auto p = profile_from_config(ex.config);
    const int n = static_cast<int>(ex.config.get_int("grid_n", 1));
    const double lmin = ex.config.get_double("grid_lambda_min", 0.25);
    const double lmax = ex.config.get_double("grid_lambda_max", 64.0);
    const int cells = static_cast<int>(ex.config.get_int("grid_cells", 32));
    const int m_max = static_cast<int>(ex.config.get_int("grid_m_max", 32));
    const auto grid =
        spectral::heisenberg_grid(n, util::geometric_grid(lmin, lmax, cells), m_max);
    const int spp = static_cast<int>(ex.config.get_int("steps_per_period", 64));
    const std::string mode = ex.config.get_string("mode", "case1");

    io::ReportBuilder report;
    spectral::SpectralField data;
    spectral::WellposednessReport wp;
    if (mode == "case1") {
        spectral::SobolevClass cls;
        cls.s = ex.config.get_double("s", 0.0);
        cls.delta = ex.config.get_double("delta", 0.75);
        data = spectral::synthesize_data(grid, cls, ex.seed);
        wp = spectral::wellposedness_case1(data, p, cls.s, spp, ex.threads);
        report.add("mode", std::string("case1"));
        report.add("s", cls.s);
        report.add("c_meas", wp.c_meas);
    } else if (mode == "gevrey") {
        const double s = ex.config.get_double("s", 1.5);
        const double beta_floor = ex.config.get_double("beta_floor", 1.0);
        const int ladder = static_cast<int>(ex.config.get_int("ladder_points", 9));
        const int t_grid = static_cast<int>(ex.config.get_int("k_t_grid", 512));
        const double K = spectral::decay_rate_over_ladder(p, s, beta_floor, grid.beta_max(),
                                                          ladder, t_grid);
        const double A = ex.config.has("A") ? ex.config.get_double("A")
                                            : ex.config.get_double("A_margin", 1.05) * K * p.T;
        // synthesized strictly inside the class so Gevrey-A norms of the data
        // carry a convergent tail
        const double A_data = ex.config.has("A_data")
                                  ? ex.config.get_double("A_data")
                                  : A + ex.config.get_double("A_data_extra", 1.0);
        spectral::GevreyClass cls{s, A_data};
        data = spectral::synthesize_data(grid, cls, ex.seed);
        wp = spectral::wellposedness_gevrey(data, p, s, A, K, spp, ex.threads);
        report.add("mode", std::string("gevrey"));
        report.add("s", s);
        report.add("A", wp.A);
        report.add("B", wp.B);
        report.add("K", wp.K);
        report.add("beta_floor", beta_floor);
        report.add("horizon_exceeded", wp.horizon_exceeded);
        report.add("finite", wp.finite);
        report.add("initial_norm", wp.initial_norm);
        report.add("evolved_norm", wp.evolved_norm);
        report.add("ratio", wp.ratio);
    } else {
        throw std::runtime_error("spectral: unknown mode '" + mode + "' (case1|gevrey)");
    }

    write_field_csv(join(ex.out_dir, "field0.csv"), data);
    if (!wp.horizon_exceeded) {
        const auto evolved = spectral::evolve(data, p, spp, ex.threads);
        write_field_csv(join(ex.out_dir, "fieldT.csv"), evolved);
    }
    io::write_file_atomic(join(ex.out_dir, "spectral_report.txt"), report.str());
    return 0;
}

int run_suite(const ExperimentConfig& ex) {
    suite::SuiteOptions opt;
    opt.out_dir = ex.out_dir;
    opt.seed = ex.seed;
    opt.threads = ex.threads;
    opt.tolerance_scale = ex.tolerance_scale;
    const auto results = suite::run_all(opt);
    return suite::all_pass(results) ? 0 : 1;
}

}  // namespace

coeff::CoefficientProfile profile_from_config(const io::KeyValueFile& kv,
                                              const std::string& prefix) {
    const std::string kind = kv.get_string(prefix + "kind");
    const double T = kv.get_double(prefix + "T", 1.0);
    if (kind == "constant") {
        return coeff::make_constant(kv.get_double(prefix + "c", 1.0), T);
    }
    if (kind == "lipschitz") {
        return coeff::make_lipschitz(kv.get_double(prefix + "a0", 1.0),
                                     kv.get_double(prefix + "amplitude", 2.0),
                                     kv.get_double(prefix + "freq", 1.0), T,
                                     kv.get_double(prefix + "phase", 0.0));
    }
    if (kind == "weierstrass") {
        return coeff::make_weierstrass(kv.get_double(prefix + "a0", 1.0),
                                       kv.get_double(prefix + "alpha", 0.5),
                                       kv.get_double(prefix + "amp", 1.0),
                                       static_cast<int>(kv.get_int(prefix + "base", 2)), T);
    }
    if (kind == "smooth-degenerate") {
        return coeff::make_smooth_degenerate(kv.get_double(prefix + "omega", 3.141592653589793),
                                             T, static_cast<int>(kv.get_int(prefix + "l", 2)));
    }
    if (kind == "hoelder-degenerate") {
        return coeff::make_hoelder_degenerate(kv.get_double(prefix + "alpha", 1.0),
                                              kv.get_double(prefix + "omega", 3.141592653589793),
                                              T);
    }
    throw std::runtime_error("unknown profile.kind '" + kind +
                             "' (constant|lipschitz|weierstrass|smooth-degenerate|hoelder-degenerate)");
}

int run(const ExperimentConfig& ex) {
    fs::create_directories(ex.out_dir);
    if (ex.command == "coeff") return run_coeff(ex);
    if (ex.command == "solve") return run_solve(ex);
    if (ex.command == "mollify-verify") return run_mollify_verify(ex);
    if (ex.command == "sweep") return run_sweep(ex);
    if (ex.command == "fit") return run_fit(ex);
    if (ex.command == "spectral") return run_spectral(ex);
    if (ex.command == "suite") return run_suite(ex);
    throw std::runtime_error("unknown command '" + ex.command + "'");
}

}  // namespace wavelab::cli
