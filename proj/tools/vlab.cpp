// vlab: numerical verification of summation formulas and the lattice-point
// experiments behind them.
//
//   vlab verify {theta|poisson|poisson-zeta|voronoi-divisor|voronoi-circle|
//                gl2|gl3|mellin-id} ...
//   vlab experiment {circle|divisor|hardy|smoothed} ...
//   vlab coeffs {build|ingest|dump} ...
//
// Exit codes: 0 success, 1 tolerance failure (report still written),
// 2 invalid arguments.

#include <CLI11.hpp>
#include <json.hpp>

#include "vlab/config.hpp"
#include "vlab/engines.hpp"
#include "vlab/lattice.hpp"
#include "vlab/mellin.hpp"
#include "vlab/special.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace vlab;
using engines::VerificationReport;
using mellin::Cplx;
using mellin::TestFunction;

struct Options {
    RunConfig cfg;
    std::string out_path;  // empty = stdout
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot open --out path " + opt.out_path);
    out << text << "\n";
}

int emit_report(const Options& opt, const VerificationReport& rep, double tol) {
    const bool csv = opt.cfg.output_format == "csv";
    write_output(opt, csv ? VerificationReport::csv_header() + "\n" +
                                rep.to_csv_row(opt.cfg.timing)
                          : rep.to_json(opt.cfg.timing));
    return rep.rel_residual <= tol ? 0 : 1;
}

// ---- coefficient cache ----

std::string cache_dir(const Options& opt) {
    if (const char* env = std::getenv("VLAB_CACHE"); env && *env) return env;
    return opt.cfg.cache_dir;
}

arith::CoefficientTable load_or_build(const Options& opt, arith::TableKind kind,
                                      std::int64_t N) {
    namespace fs = std::filesystem;
    const std::string dir = cache_dir(opt);
    if (auto hit = arith::find_cached(dir, kind, N))
        return arith::CoefficientTable::load(*hit);

    arith::CoefficientTable table = [&] {
        switch (kind) {
            case arith::TableKind::DivisorD: return arith::divisor_table(N);
            case arith::TableKind::SumsOfSquaresR2: return arith::r2_table(N);
            case arith::TableKind::RamanujanTau: return arith::ramanujan_tau_table(N);
            case arith::TableKind::NormalizedGL2: {
                const auto tau = load_or_build(opt, arith::TableKind::RamanujanTau, N);
                return arith::normalized_gl2_coeffs(tau, 12);
            }
            default:
                throw std::invalid_argument("cannot build this kind directly");
        }
    }();
    fs::create_directories(dir);
    table.save((fs::path(dir) / arith::cache_file_name(kind, N)).string());
    return table;
}

// ---- verify subcommands ----

int run_theta(const Options& opt, double t0, double t1, double step) {
    VerificationReport rep;
    rep.formula = "theta";
    double worst = -1.0, worst_t = t0;
    std::int64_t count = 0;
    for (double t = t0; t <= t1 + 1e-12; t += step, ++count) {
        const double lhs = std::sqrt(t) * sf::theta(t);
        const double rhs = sf::theta(1.0 / t);
        if (std::fabs(lhs - rhs) > worst) {
            worst = std::fabs(lhs - rhs);
            worst_t = t;
            rep.lhs = lhs;
            rep.rhs = rhs;
        }
    }
    rep.truncation.lhs_terms = count;
    rep.finalize();
    rep.convention_notes = "sweep t=" + std::to_string(t0) + ":" + std::to_string(t1) +
                           ":" + std::to_string(step) +
                           " worst_t=" + std::to_string(worst_t);
    return emit_report(opt, rep, opt.cfg.tol_theta);
}

int run_poisson(const Options& opt, int m, double t) {
    const auto f = TestFunction::gaussian_hermite(m, t);
    auto rep = engines::verify_poisson(f, opt.cfg.truncation(), opt.cfg.threads);
    return emit_report(opt, rep, opt.cfg.tol_poisson);
}

int run_poisson_zeta(const Options& opt, int m, double t, double sigma) {
    const auto f = TestFunction::gaussian_hermite(m, t);
    auto rep = engines::verify_poisson_via_zeta(f, sigma, opt.cfg.threads);
    const double recon = engines::poisson_zeta_residue_check(f);
    rep.convention_notes += "residue_reconciliation=" + std::to_string(recon);
    const int code = emit_report(opt, rep, opt.cfg.tol_poisson_zeta);
    return recon <= opt.cfg.tol_poisson_zeta ? code : 1;
}

TestFunction bump_or_isolating(double a, double b, std::int64_t isolate) {
    if (isolate > 0)
        return TestFunction::smooth_bump(double(isolate) - 0.4, double(isolate) + 0.4);
    return TestFunction::smooth_bump(a, b);
}

int run_voronoi_classical(const Options& opt, bool divisor, double a, double b,
                          std::int64_t isolate) {
    const auto f = bump_or_isolating(a, b, isolate);
    auto rep = divisor
                   ? engines::verify_voronoi_divisor(f, opt.cfg.truncation(),
                                                     opt.cfg.threads)
                   : engines::verify_voronoi_circle(f, opt.cfg.truncation(),
                                                    opt.cfg.threads);
    return emit_report(opt, rep, opt.cfg.tol_voronoi);
}

int run_gl2(const Options& opt, std::int64_t a, std::int64_t c, double ea,
            double eb, std::int64_t table_n) {
    const auto tau = load_or_build(opt, arith::TableKind::RamanujanTau, table_n);
    const auto coeffs = arith::normalized_gl2_coeffs(tau, 12);
    const mellin::Gl2Params params{Cplx(arith::gl2_nu(12), 0.0), 0};
    const auto twist = arith::make_twist(a, c);
    const auto f = TestFunction::exp_inverse(ea, eb);
    auto rep = engines::verify_gl2_voronoi(coeffs, params, twist, f,
                                           opt.cfg.truncation(), opt.cfg.threads);
    return emit_report(opt, rep, opt.cfg.tol_gl2);
}

int run_gl3(const Options& opt, std::int64_t q, std::int64_t a, std::int64_t c,
            double ea, double eb, std::int64_t table_n) {
    const auto tau = load_or_build(opt, arith::TableKind::RamanujanTau,
                                   std::max<std::int64_t>(table_n, 64));
    const auto A = arith::sym2_A_table_hecke(tau, table_n);
    const auto params = mellin::make_gl3_params(
        {Cplx(-11.0), Cplx(11.0), Cplx(0.0)}, {1, 0, 1});
    const auto twist = arith::make_twist(a, c, q);
    const auto f = TestFunction::exp_inverse(ea, eb);
    auto rep = engines::verify_gl3_voronoi(A, params, twist, f,
                                           opt.cfg.truncation(), opt.cfg.threads);
    return emit_report(opt, rep, opt.cfg.tol_gl3);
}

int run_mellin_id(const Options& opt, std::vector<double> svals) {
    if (svals.empty()) svals = {0.2, 0.4, 0.6};
    VerificationReport rep;
    rep.formula = "mellin-id";
    double worst = 0.0;
    std::string notes;
    for (double s : svals) {
        const Cplx sc(s, 0.0);
        const double ratio = std::abs(mellin::fourier_kernel_quadrature(sc, 0) -
                                      mellin::gamma_ratio_kernel(sc, 0));
        const double div = mellin::bessel_kernel_mellin_check(
            sc, mellin::KernelKind::DivisorKernel);
        const double cir = mellin::bessel_kernel_mellin_check(
            sc, mellin::KernelKind::CircleKernel);
        worst = std::max({worst, ratio, div, cir});
        notes += "s=" + std::to_string(s) + " ratio=" + std::to_string(ratio) +
                 " divisor=" + std::to_string(div) + " circle=" + std::to_string(cir) +
                 "; ";
    }
    rep.abs_residual = rep.rel_residual = worst;
    rep.convention_notes = notes;
    return emit_report(opt, rep, opt.cfg.tol_mellin_id);
}

// ---- experiment subcommands ----

int run_experiment_circle(const Options& opt, double xmin, double xmax, bool fit) {
    std::string out = "X,delta,B1,B2,B3,ratio_x14\n";
    auto series = lattice::sweep_circle(xmin, xmax, 1.15, opt.cfg.threads);
    for (auto& [x, delta] : series.samples) {
        char row[256];
        if (x >= 100.0) {
            const auto bt = lattice::bound_terms(x, opt.cfg.threads);
            std::snprintf(row, sizeof row, "%.0f,%.17g,%.17g,%.17g,%.17g,%.17g\n", x,
                          delta, bt.b1, bt.b2, bt.b3, delta / std::pow(x, 0.25));
        } else {
            std::snprintf(row, sizeof row, "%.0f,%.17g,,,,%.17g\n", x, delta,
                          delta / std::pow(x, 0.25));
        }
        out += row;
    }
    if (fit) {
        const double expo = lattice::exponent_fit(series);
        nlohmann::ordered_json j;
        j["experiment"] = "circle";
        j["fitted_exponent"] = expo;
        j["fit_range"] = {series.fit_lo, series.fit_hi};
        out += "# " + j.dump();
    }
    write_output(opt, out);
    return 0;
}

int run_experiment_divisor(const Options& opt, double xmin, double xmax, bool fit) {
    std::string out = "X,D\n";
    auto series = lattice::sweep_divisor(xmin, xmax, 1.15);
    for (auto& [x, err] : series.samples) {
        char row[128];
        std::snprintf(row, sizeof row, "%.0f,%.17g\n", x, err);
        out += row;
    }
    if (fit) {
        const double expo = lattice::exponent_fit(series);
        nlohmann::ordered_json j;
        j["experiment"] = "divisor";
        j["fitted_exponent"] = expo;
        j["fit_range"] = {series.fit_lo, series.fit_hi};
        out += "# " + j.dump();
    }
    write_output(opt, out);
    return 0;
}

int run_experiment_hardy(const Options& opt, double xmax) {
    const auto res = lattice::hardy_scan(xmax, opt.cfg.threads);
    nlohmann::ordered_json j;
    j["experiment"] = "hardy";
    j["x_star"] = res.x_star;
    j["ratio_star"] = res.ratio_star;
    write_output(opt, j.dump(2));
    return 0;
}

int run_experiment_smoothed(const Options& opt, double x) {
    auto rep = lattice::smoothed_circle_identity(
        x, lattice::SmoothedIndicator::Mollifier::BumpDefault, opt.cfg.tail_tol,
        opt.cfg.threads);
    return emit_report(opt, rep, opt.cfg.tol_smoothed);
}

// ---- coeffs subcommands ----

int run_coeffs_build(const Options& opt, const std::string& kind_name,
                     std::int64_t n) {
    namespace fs = std::filesystem;
    const auto kind = arith::kind_from_name(kind_name);
    if (kind == arith::TableKind::SymSquareA) {
        // the table route needs normalized coefficients out to n^2
        const std::string dir = cache_dir(opt);
        const auto tau_file = arith::find_cached(dir, arith::TableKind::RamanujanTau,
                                                 n * n);
        if (!tau_file)
            throw std::invalid_argument(
                "coeffs build sym2 --n " + std::to_string(n) + " needs a cached tau "
                "table with N >= " + std::to_string(n * n) +
                "; run 'coeffs build --kind tau --n " + std::to_string(n * n) +
                "' first");
        const auto tau = arith::CoefficientTable::load(*tau_file);
        const auto a = arith::normalized_gl2_coeffs(tau, 12);
        auto table = arith::sym2_A_table(a, n);
        fs::create_directories(dir);
        table.save((fs::path(dir) / arith::cache_file_name(kind, n)).string());
        return 0;
    }
    load_or_build(opt, kind, n);
    return 0;
}

int run_coeffs_ingest(const Options& opt, const std::string& file) {
    namespace fs = std::filesystem;
    const auto table = arith::CoefficientTable::load(file);
    const std::string dir = cache_dir(opt);
    fs::create_directories(dir);
    table.save((fs::path(dir) / arith::cache_file_name(table.kind(),
                                                       table.max_index()))
                   .string());
    return 0;
}

int run_coeffs_dump(const Options& opt, const std::string& kind_name,
                    std::int64_t lo, std::int64_t hi) {
    const auto kind = arith::kind_from_name(kind_name);
    const auto file = arith::find_cached(cache_dir(opt), kind, hi);
    if (!file)
        throw std::invalid_argument("no cached " + kind_name + " table covering " +
                                    std::to_string(hi));
    const auto table = arith::CoefficientTable::load(*file);
    std::string out;
    for (std::int64_t n = lo; n <= hi; ++n) {
        out += std::to_string(n) + "\t";
        if (table.has_exact()) out += to_string(table.exact(n));
        else {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", table.value(n));
            out += buf;
        }
        if (n < hi) out += "\n";
    }
    write_output(opt, out);
    return 0;
}

std::array<double, 3> parse_range(const std::string& spec) {
    // "start:stop:step"
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("range", "expected start:stop:step");
    return {std::stod(spec.substr(0, c1)), std::stod(spec.substr(c1 + 1, c2 - c1 - 1)),
            std::stod(spec.substr(c2 + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of summation formulas"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path;
    bool no_timing = false;
    unsigned threads_flag = 0;
    std::string cache_flag, format_flag;

    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--threads", threads_flag, "worker threads inside engines");
    app.add_option("--out", opt.out_path, "write the report here instead of stdout");
    app.add_option("--format", format_flag, "json or csv");
    app.add_option("--cache", cache_flag, "coefficient cache directory");
    app.add_flag("--no-timing", no_timing, "zero out runtime_ms for byte-stable output");

    // verify
    auto* verify = app.add_subcommand("verify", "check a summation formula");
    verify->require_subcommand(1);

    std::string theta_range = "0.1:10:0.1";
    auto* v_theta = verify->add_subcommand("theta", "theta modular identity");
    v_theta->add_option("--t", theta_range, "sweep start:stop:step");

    int po_m = 0;
    double po_t = 1.0;
    auto* v_po = verify->add_subcommand("poisson", "Poisson summation");
    v_po->add_option("--m", po_m, "Hermite power (x^{2m})");
    v_po->add_option("--t", po_t, "Gaussian width parameter");
    std::string po_family = "gaussian";
    v_po->add_option("--family", po_family)->check(CLI::IsMember({"gaussian"}));

    int pz_m = 0;
    double pz_t = 1.0, pz_sigma = 2.0;
    auto* v_pz = verify->add_subcommand("poisson-zeta",
                                        "Poisson summation via the zeta contour");
    v_pz->add_option("--m", pz_m);
    v_pz->add_option("--t", pz_t);
    v_pz->add_option("--sigma", pz_sigma);

    double vd_a = 1.0, vd_b = 50.0;
    std::int64_t vd_iso = 0;
    auto* v_vd = verify->add_subcommand("voronoi-divisor", "divisor summation");
    v_vd->add_option("--a", vd_a);
    v_vd->add_option("--b", vd_b);
    v_vd->add_option("--isolate", vd_iso, "narrow bump around one integer");

    double vc_a = 1.0, vc_b = 50.0;
    std::int64_t vc_iso = 0;
    auto* v_vc = verify->add_subcommand("voronoi-circle", "two-squares summation");
    v_vc->add_option("--a", vc_a);
    v_vc->add_option("--b", vc_b);
    v_vc->add_option("--isolate", vc_iso);

    std::int64_t g2_a = 0, g2_c = 1, g2_n = 4000;
    double g2_ea = 1.0, g2_eb = 1.0;
    auto* v_g2 = verify->add_subcommand("gl2", "twisted summation, weight-12 form");
    v_g2->add_option("--a", g2_a);
    v_g2->add_option("--c", g2_c);
    v_g2->add_option("--exp-a", g2_ea);
    v_g2->add_option("--exp-b", g2_eb);
    v_g2->add_option("--n-table", g2_n);

    std::int64_t g3_q = 1, g3_a = 0, g3_c = 1, g3_n = 2000;
    double g3_ea = 1.0, g3_eb = 1.0;
    auto* v_g3 = verify->add_subcommand("gl3", "twisted summation, symmetric square");
    v_g3->add_option("--q", g3_q);
    v_g3->add_option("--a", g3_a);
    v_g3->add_option("--c", g3_c);
    v_g3->add_option("--exp-a", g3_ea);
    v_g3->add_option("--exp-b", g3_eb);
    v_g3->add_option("--n-table", g3_n);

    std::vector<double> mid_s;
    auto* v_mid = verify->add_subcommand("mellin-id", "kernel Mellin identities");
    v_mid->add_option("--s", mid_s, "abscissas in (0, 3/4)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "lattice error terms");
    experiment->require_subcommand(1);

    double ec_xmin = 1e3, ec_xmax = 1e6;
    bool ec_fit = false;
    auto* e_c = experiment->add_subcommand("circle", "Delta(X) and its bounds");
    e_c->add_option("--xmin", ec_xmin);
    e_c->add_option("--xmax", ec_xmax);
    e_c->add_flag("--fit", ec_fit, "append the fitted running-max exponent");

    double ed_xmin = 1e3, ed_xmax = 1e5;
    bool ed_fit = false;
    auto* e_d = experiment->add_subcommand("divisor", "D(X)");
    e_d->add_option("--xmin", ed_xmin);
    e_d->add_option("--xmax", ed_xmax);
    e_d->add_flag("--fit", ed_fit);

    double eh_xmax = 1e4;
    auto* e_h = experiment->add_subcommand("hardy", "max Delta(X)/X^{1/4}");
    e_h->add_option("--xmax", eh_xmax);

    double es_x = 1e4;
    auto* e_s = experiment->add_subcommand("smoothed", "smoothed circle identity");
    e_s->add_option("--x", es_x);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "coefficient cache management");
    coeffs->require_subcommand(1);

    std::string cb_kind = "tau";
    std::int64_t cb_n = 1000;
    auto* c_b = coeffs->add_subcommand("build", "build and cache a table");
    c_b->add_option("--kind", cb_kind)->required();
    c_b->add_option("--n", cb_n)->required();

    std::string ci_file;
    auto* c_i = coeffs->add_subcommand("ingest", "validate and cache a table file");
    c_i->add_option("--file", ci_file)->required();

    std::string cd_kind = "tau", cd_range = "1:10";
    auto* c_d = coeffs->add_subcommand("dump", "print cached values");
    c_d->add_option("--kind", cd_kind)->required();
    c_d->add_option("--range", cd_range, "lo:hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) opt.cfg = RunConfig::from_file(config_path);
        if (threads_flag > 0) opt.cfg.threads = threads_flag;
        if (!cache_flag.empty()) opt.cfg.cache_dir = cache_flag;
        if (!format_flag.empty()) opt.cfg.output_format = format_flag;
        if (no_timing) opt.cfg.timing = false;

        if (v_theta->parsed()) {
            const auto r = parse_range(theta_range);
            return run_theta(opt, r[0], r[1], r[2]);
        }
        if (v_po->parsed()) return run_poisson(opt, po_m, po_t);
        if (v_pz->parsed()) return run_poisson_zeta(opt, pz_m, pz_t, pz_sigma);
        if (v_vd->parsed()) return run_voronoi_classical(opt, true, vd_a, vd_b, vd_iso);
        if (v_vc->parsed()) return run_voronoi_classical(opt, false, vc_a, vc_b, vc_iso);
        if (v_g2->parsed()) return run_gl2(opt, g2_a, g2_c, g2_ea, g2_eb, g2_n);
        if (v_g3->parsed()) return run_gl3(opt, g3_q, g3_a, g3_c, g3_ea, g3_eb, g3_n);
        if (v_mid->parsed()) return run_mellin_id(opt, mid_s);
        if (e_c->parsed()) return run_experiment_circle(opt, ec_xmin, ec_xmax, ec_fit);
        if (e_d->parsed()) return run_experiment_divisor(opt, ed_xmin, ed_xmax, ed_fit);
        if (e_h->parsed()) return run_experiment_hardy(opt, eh_xmax);
        if (e_s->parsed()) return run_experiment_smoothed(opt, es_x);
        if (c_b->parsed()) return run_coeffs_build(opt, cb_kind, cb_n);
        if (c_i->parsed()) return run_coeffs_ingest(opt, ci_file);
        if (c_d->parsed()) {
            const auto r = parse_range(cd_range + ":1");
            return run_coeffs_dump(opt, cd_kind, std::int64_t(r[0]), std::int64_t(r[1]));
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
