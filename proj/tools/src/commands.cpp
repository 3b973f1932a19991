#include "wentzell_cli/commands.hpp"

#include "wentzell/acceptance.hpp"
#include "wentzell/error.hpp"
#include "wentzell/fdtd.hpp"
#include "wentzell/holo.hpp"
#include "wentzell/reflection.hpp"
#include "wentzell/spectral.hpp"
#include "wentzell/twopoint.hpp"
#include "wentzell_cli/cache.hpp"
#include "wentzell_cli/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

namespace wentzell::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

HeaderFields header(const RunConfig& cfg, const PhysicalParams& p)
{
    HeaderFields h{{"geometry", p.is_strip() ? "strip" : "halfspace"}};
    if (p.is_strip())
        h.emplace_back("S", num(p.S()));
    h.emplace_back("c", num(p.c));
    h.emplace_back("mu", num(p.mu));
    h.emplace_back("d", std::to_string(p.d));
    h.emplace_back("max", std::to_string(cfg.max));
    h.emplace_back("residual_tol", num(cfg.residual_tol));
    return h;
}

json params_json(const PhysicalParams& p)
{
    json j;
    j["geometry"] = p.is_strip() ? "strip" : "halfspace";
    if (p.is_strip())
        j["S"] = p.S();
    j["c"] = p.c;
    j["mu"] = p.mu;
    j["d"] = p.d;
    return j;
}

void write_json(const fs::path& path, const json& j)
{
    atomic_write(path, j.dump(2) + "\n");
}

CachedTable table_for(const RunConfig& cfg, const PhysicalParams& p)
{
    return load_or_build(resolve_cache_dir(cfg.cache_dir), p, cfg.max, cfg.residual_tol);
}

std::vector<double> reference_coefficients(std::size_t n, std::vector<double>& b)
{
    std::vector<double> a(n, 0.0);
    b.assign(n, 0.0);
    double n2 = 0.0;
    for (std::size_t m = 0; m <= 10 && m < n; ++m) {
        a[m] = std::pow(2.0, -static_cast<double>(m));
        n2 += a[m] * a[m];
    }
    for (auto& v : a)
        v /= std::sqrt(n2);
    if (n > 1)
        b[1] = 0.3;
    if (n > 3)
        b[3] = 0.2;
    return a;
}

int evolve_reflection(const RunConfig& cfg)
{
    ReflectionConfig rc;
    rc.c = cfg.c;
    rc.cfl = cfg.cfl;
    if (cfg.grid_n)
        rc.h = 1.0 / static_cast<double>(*cfg.grid_n);
    if (cfg.t_end)
        rc.t_end = *cfg.t_end;
    const auto r = run_reflection(rc);

    const auto p = PhysicalParams::half_space(cfg.c, 0.0);
    auto h = header(cfg, p);
    h.emplace_back("scenario", "reflection");
    h.emplace_back("eps", num(rc.eps));
    h.emplace_back("h", num(rc.h));
    h.emplace_back("cfl", num(rc.cfl));
    CsvWriter csv("evolve", h, {"t", "phi_bdy_fdtd", "phi_bdy_exact", "residual"});
    for (std::size_t i = 0; i < r.t.size(); ++i)
        csv.row(std::vector<double>{r.t[i], r.fdtd_trace[i], r.exact_trace[i], r.fdtd_trace[i] - r.exact_trace[i]});
    const fs::path out(cfg.out);
    atomic_write(out / "reflection.csv", csv.str());

    const double tol = 5e-2 * 2.0 / cfg.c;
    const bool pass = r.sup_error < tol;
    json j;
    j["command"] = "evolve";
    j["scenario"] = "reflection";
    j["params"] = params_json(p);
    j["eps"] = rc.eps;
    j["h"] = rc.h;
    j["cfl"] = rc.cfl;
    j["t0"] = rc.t0;
    j["t_end"] = rc.t_end;
    j["sup_error"] = r.sup_error;
    j["tolerance"] = tol;
    j["fdtd_at_1"] = r.fdtd_at_1;
    j["exact_at_1"] = r.exact_at_1;
    j["limit_at_1"] = r.limit_at_1;
    j["pass"] = pass;
    write_json(out / "reflection_report.json", j);
    std::printf("reflection: sup residual %.3e (tolerance %.3e), boundary value at t = 1: %.6f (exact %.6f)\n",
                r.sup_error, tol, r.fdtd_at_1, r.exact_at_1);
    return pass ? exit_pass : exit_acceptance;
}

} // namespace

void RunConfig::validate(const std::string& command) const
{
    if (geometry != "strip" && geometry != "halfspace")
        throw Error(ErrorKind::validation, "geometry must be 'strip' or 'halfspace', got '" + geometry + "'");
    params().validate();
    if (max < 1)
        throw Error(ErrorKind::validation, "--max must be >= 1");
    if (!(residual_tol > 0.0))
        throw Error(ErrorKind::validation, "residual tolerance must be positive");
    if (!(cfl > 0.0 && cfl <= 1.0))
        throw Error(ErrorKind::validation, "CFL factor must lie in (0, 1]");
    if (grid_n && *grid_n < 3)
        throw Error(ErrorKind::validation, "--grid-n must be >= 3");
    if (t_end && !(*t_end > 0.0))
        throw Error(ErrorKind::validation, "--t-end must be positive");
    if (samples < 2)
        throw Error(ErrorKind::validation, "--samples must be >= 2");
    if (command == "evolve") {
        if (scenario != "modes" && scenario != "zero" && scenario != "reflection")
            throw Error(ErrorKind::validation, "scenario must be 'modes', 'zero' or 'reflection', got '" + scenario + "'");
        if (method != "fdtd" && method != "spectral")
            throw Error(ErrorKind::validation, "method must be 'fdtd' or 'spectral'");
        if (scenario != "reflection" && geometry != "strip")
            throw Error(ErrorKind::validation, "half-space evolution is available through --scenario reflection");
    }
    if ((command == "modes" || command == "holo") && geometry != "strip" && !fig2)
        throw Error(ErrorKind::validation, command + " needs the strip geometry");
    if (command == "twopoint" && geometry == "strip" && d == 1 && cutoff > max)
        throw Error(ErrorKind::validation, "--cutoff exceeds --max");
}

PhysicalParams RunConfig::params() const
{
    return geometry == "strip" ? PhysicalParams::strip(c, mu, S, d) : PhysicalParams::half_space(c, mu, d);
}

int cmd_modes(const RunConfig& cfg)
{
    cfg.validate("modes");
    const auto p = cfg.params();
    const auto cached = table_for(cfg, p);
    const auto& t = cached.table;
    const auto report = verify_table(t);

    CsvWriter csv("modes", header(cfg, p), {"m", "q", "parity", "c_norm", "d_bdy", "omega"});
    for (const auto& e : t.entries())
        csv.row(std::vector<std::string>{std::to_string(e.m), num(e.q), to_string(e.parity), num(e.c_norm),
                                         num(e.d_bdy), num(e.omega(p.mu))});
    const fs::path out(cfg.out);
    atomic_write(out / "modes.csv", csv.str());

    json j;
    j["command"] = "modes";
    j["params"] = params_json(p);
    j["entries"] = t.size();
    j["residual_tol"] = t.residual_tol();
    j["cache_file"] = cached.path.string();
    j["checks"] = {{"brackets", report.brackets_pass},   {"residuals", report.residuals_pass},
                   {"q_bounds", report.q_bounds_pass},   {"c_m_bounded", report.cm_bounded_pass},
                   {"d_m_law", report.d_law_pass},       {"max_residual", report.max_residual},
                   {"delta", report.delta},              {"m_start", report.m_start},
                   {"c_m_constant", report.cm_constant}, {"c_m_reference", report.cm_reference}};
    j["pass"] = report.all_pass();
    write_json(out / "modes_report.json", j);

    std::printf("modes: %zu entries, cache %s (%s)\n", t.size(), cached.hit ? "hit" : "miss",
                cached.path.string().c_str());
    std::printf("  brackets %s, residuals %s (max %.2e), q bounds %s, c_m bounded %s, d_m law %s\n",
                report.brackets_pass ? "pass" : "FAIL", report.residuals_pass ? "pass" : "FAIL", report.max_residual,
                report.q_bounds_pass ? "pass" : "FAIL", report.cm_bounded_pass ? "pass" : "FAIL",
                report.d_law_pass ? "pass" : "FAIL");
    return report.all_pass() ? exit_pass : exit_acceptance;
}

int cmd_evolve(const RunConfig& cfg)
{
    cfg.validate("evolve");
    if (cfg.scenario == "reflection")
        return evolve_reflection(cfg);

    const auto p = cfg.params();
    auto table = std::make_shared<const ModeTable>(table_for(cfg, p).table);
    std::vector<double> b;
    std::vector<double> a = reference_coefficients(table->size(), b);
    if (cfg.scenario == "zero") {
        std::fill(a.begin(), a.end(), 0.0);
        std::fill(b.begin(), b.end(), 0.0);
    }
    const SpectralState s0(a, b, table);
    const double t_end = cfg.t_end.value_or(10.0);
    const Grid1D grid = strip_grid(p, cfg.grid_n.value_or(512));

    auto h = header(cfg, p);
    h.emplace_back("scenario", cfg.scenario);
    h.emplace_back("method", cfg.method);
    h.emplace_back("grid_n", std::to_string(grid.size() - 1));
    h.emplace_back("cfl", num(cfg.cfl));
    h.emplace_back("t_end", num(t_end));
    CsvWriter csv("evolve", h, {"t", "E_bulk", "E_bdy", "E_total"});
    CsvWriter snap("evolve", h, {"t", "z", "phi"});

    double e0 = 0.0;
    double drift = 0.0;
    std::size_t snaps_done = 0;
    auto record = [&](double t, const EnergyReport& e, bool first) {
        csv.row(std::vector<double>{t, e.bulk_energy, e.boundary_energy, e.total});
        if (first)
            e0 = e.total;
        const double dev = std::abs(e.total - e0);
        drift = std::max(drift, e0 > 0.0 ? dev / e0 : dev);
    };
    auto want_snapshot = [&](double t) {
        if (cfg.snapshots == 0 || snaps_done >= cfg.snapshots)
            return false;
        const double next = cfg.snapshots == 1 ? 0.0 : t_end * static_cast<double>(snaps_done) /
                                                            static_cast<double>(cfg.snapshots - 1);
        return t >= next - 1e-12;
    };
    auto take_snapshot = [&](double t, const std::vector<double>& phi) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            snap.row(std::vector<double>{t, grid.node(i), phi[i]});
        ++snaps_done;
    };

    std::size_t rows = 0;
    if (cfg.method == "fdtd") {
        const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / (cfg.cfl * grid.h())));
        const double cfl = t_end / (static_cast<double>(steps) * grid.h());
        auto f = FdtdState::from_cauchy(s0.to_cauchy(grid), p, cfl);
        const std::size_t stride = std::max<std::size_t>(1, steps / (cfg.samples - 1));
        for (std::size_t n = 0; n <= steps; ++n) {
            if (n % stride == 0 || n == steps) {
                record(f.t(), energy(f), n == 0);
                ++rows;
            }
            if (want_snapshot(f.t()))
                take_snapshot(f.t(), f.phi());
            if (n < steps)
                f.advance();
        }
    } else {
        for (std::size_t k = 0; k < cfg.samples; ++k) {
            const double t = t_end * static_cast<double>(k) / static_cast<double>(cfg.samples - 1);
            const auto s = spectral_evolve(s0, t);
            record(t, energy(s), k == 0);
            ++rows;
            if (want_snapshot(t))
                take_snapshot(t, s.to_cauchy(grid).position.bulk);
        }
    }

    const fs::path out(cfg.out);
    atomic_write(out / "evolve.csv", csv.str());
    if (cfg.snapshots > 0)
        atomic_write(out / "evolve_field.csv", snap.str());
    const double tol = cfg.method == "fdtd" ? 1e-3 : 1e-10;
    json j;
    j["command"] = "evolve";
    j["scenario"] = cfg.scenario;
    j["method"] = cfg.method;
    j["params"] = params_json(p);
    j["grid_n"] = grid.size() - 1;
    j["cfl"] = cfg.cfl;
    j["t_end"] = t_end;
    j["rows"] = rows;
    j["initial_energy"] = e0;
    j["max_relative_drift"] = drift;
    j["tolerance"] = tol;
    j["pass"] = drift < tol;
    write_json(out / "evolve_report.json", j);
    std::printf("evolve (%s, %s): %zu rows, E(0) = %.12g, max relative drift %.3e (tolerance %.0e)\n",
                cfg.scenario.c_str(), cfg.method.c_str(), rows, e0, drift, tol);
    return drift < tol ? exit_pass : exit_acceptance;
}

int cmd_twopoint(const RunConfig& cfg)
{
    cfg.validate("twopoint");
    const auto p = cfg.params();
    const fs::path out(cfg.out);
    auto h = header(cfg, p);
    const double t_end = cfg.t_end.value_or(5.0);
    json j;
    j["command"] = "twopoint";
    j["params"] = params_json(p);
    bool pass = true;

    if (!p.is_strip()) {
        HalfSpaceSpec spec;
        spec.d = p.d;
        const auto norm = halfspace_weight_normalization(p.c);
        const double row = p.c * norm.value;
        const bool norm_ok = std::abs(row - 1.0) <= 1e-8;
        pass = norm_ok;
        h.emplace_back("q_max", num(spec.q_max));
        CsvWriter csv("twopoint", h, {"kind", "x", "re", "im", "error"});
        csv.row(std::vector<std::string>{"normalization", "0", num(row), "0", num(p.c * norm.error)});
        for (std::size_t k = 0; k < cfg.samples; ++k) {
            const double s = t_end * static_cast<double>(k) / static_cast<double>(cfg.samples - 1);
            if (p.d == 1) {
                const auto v = boundary_2pt_halfspace(s, 0.0, p, spec);
                csv.row(std::vector<std::string>{"delta_plus_x0", num(s), num(v.value.real()), num(v.value.imag()),
                                                 num(v.quad_error)});
            } else if (s > 0.0) {
                const auto v = boundary_2pt_halfspace(0.0, s, p, spec);
                csv.row(std::vector<std::string>{"delta_plus_spacelike", num(s), num(v.value.real()),
                                                 num(v.value.imag()), num(v.quad_error)});
            }
        }
        atomic_write(out / "twopoint.csv", csv.str());
        j["normalization"] = {{"value", row}, {"error", p.c * norm.error}, {"tolerance", 1e-8}, {"pass", norm_ok}};
        std::printf("twopoint (halfspace): weight normalization c * integral = %.12f (%s)\n", row,
                    norm_ok ? "pass" : "FAIL");
    } else {
        const auto cached = table_for(cfg, p);
        const auto& t = cached.table;
        TwoPointSpec spec;
        spec.M = cfg.cutoff;
        spec.d = p.d;
        h.emplace_back("cutoff", std::to_string(cfg.cutoff));
        if (p.d == 1) {
            CsvWriter csv("twopoint", h, {"x0", "re", "im", "tail_bound"});
            for (std::size_t k = 0; k < cfg.samples; ++k) {
                const double x0 = t_end * static_cast<double>(k) / static_cast<double>(cfg.samples - 1);
                const auto v = boundary_2pt_strip(x0, 0.0, t, spec);
                csv.row(std::vector<double>{x0, v.value.real(), v.value.imag(), v.tail_bound});
            }
            atomic_write(out / "twopoint.csv", csv.str());
        } else {
            CsvWriter csv("twopoint", h, {"r", "value", "last_term"});
            for (std::size_t k = 1; k < cfg.samples; ++k) {
                const double r = t_end * static_cast<double>(k) / static_cast<double>(cfg.samples - 1);
                const auto v = spacelike_2pt_bessel(r * r, t, spec);
                csv.row(std::vector<double>{r, v.value, v.last_term});
            }
            atomic_write(out / "twopoint.csv", csv.str());
        }
        if (t.M_max() >= 2 * cfg.cutoff && cfg.cutoff >= 2) {
            const auto tail = tail_convergence(t, cfg.cutoff);
            j["tail"] = {{"M", tail.M},
                         {"partial_sum", tail.partial_sum},
                         {"exact_total", tail.exact_total},
                         {"observed_tail", tail.observed_tail},
                         {"analytic_tail", tail.analytic_tail},
                         {"ratio", tail.ratio},
                         {"cauchy_ratio", tail.cauchy_ratio},
                         {"pass", tail.pass}};
            pass = pass && tail.pass;
            std::printf("twopoint (strip): tail ratio observed/analytic at M = %zu: %.4f (%s)\n", tail.M, tail.ratio,
                        tail.pass ? "pass" : "FAIL");
            if (p.d == 1 && p.mu > 0.0) {
                TwoPointSpec twice = spec;
                twice.M = 2 * cfg.cutoff;
                const auto a = boundary_2pt_strip(0.0, 0.0, t, spec);
                const auto b = boundary_2pt_strip(0.0, 0.0, t, twice);
                const double diff = std::abs(a.value - b.value);
                const bool ok = diff <= a.tail_bound;
                pass = pass && ok;
                j["cauchy"] = {{"M", cfg.cutoff}, {"M2", 2 * cfg.cutoff}, {"difference", diff},
                               {"bound", a.tail_bound}, {"pass", ok}};
            }
        } else {
            j["tail"] = "skipped: needs --max >= 2 * --cutoff";
        }
        if (p.d == 2) {
            std::vector<SpacetimePoint> pts;
            for (std::size_t k = 0; k < 100; ++k) {
                const double x = 0.05 + 0.05 * static_cast<double>(k);
                pts.push_back({0.9 * x * std::cos(0.37 * static_cast<double>(k)), x});
            }
            const auto cc = causality_check(pts, t, spec);
            pass = pass && cc.pass;
            j["commutator"] = {{"spacelike_points", cc.spacelike_points}, {"max_abs", cc.max_abs}, {"pass", cc.pass}};
        }
    }
    j["pass"] = pass;
    write_json(out / "twopoint_report.json", j);
    return pass ? exit_pass : exit_acceptance;
}

int cmd_holo(const RunConfig& cfg)
{
    cfg.validate("holo");
    const fs::path out(cfg.out);
    if (cfg.fig2) {
        Fig2Config fc;
        if (cfg.holo_M)
            fc.M = *cfg.holo_M;
        const auto r = fig2_reproduce(fc);
        const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
        auto h = header(cfg, p);
        h.emplace_back("M", std::to_string(r.image.meta.M));
        h.emplace_back("a", num(r.image.meta.a));
        h.emplace_back("chi", bump_chi_name);
        h.emplace_back("zero_mode", r.image.meta.zero_mode);
        CsvWriter csv("holo --fig2", h, {"t", "re", "im", "envelope", "reference_f_t0"});
        for (std::size_t i = 0; i < r.image.t.size(); ++i)
            csv.row(std::vector<double>{r.image.t[i], r.image.f_prime[i].real(), r.image.f_prime[i].imag(),
                                        r.image.envelope[i], r.reference[i]});
        atomic_write(out / "holo_fig2.csv", csv.str());

        json bursts = json::array();
        for (const auto& b : r.bursts)
            bursts.push_back({{"t", b.t}, {"envelope", b.envelope}});
        json j;
        j["command"] = "holo";
        j["fig2"] = true;
        j["params"] = params_json(p);
        j["M"] = r.image.meta.M;
        j["a"] = r.image.meta.a;
        j["chi"] = r.image.meta.chi;
        j["zero_mode"] = r.image.meta.zero_mode;
        j["f_0_0"] = r.f00;
        j["expected_centers"] = fc.expected;
        j["tolerance"] = fc.tolerance;
        j["bursts"] = bursts;
        j["max_center_error"] = r.max_center_error;
        j["centers_ok"] = r.centers_ok;
        j["decay_ok"] = r.decay_ok;
        j["pass"] = r.centers_ok && r.decay_ok;
        write_json(out / "holo_fig2_bursts.json", j);

        std::printf("holo --fig2: M = %zu, a = %.4f, f(0,0) = %.12e\n  burst centers:", r.image.meta.M,
                    r.image.meta.a, r.f00);
        for (const auto& b : r.bursts)
            std::printf(" %.3f", b.t);
        std::printf("\n  centers within %.2f of expected: %s; envelope decay: %s (max center error %.3f)\n",
                    fc.tolerance, r.centers_ok ? "yes" : "no", r.decay_ok ? "yes" : "no", r.max_center_error);
        return r.centers_ok && r.decay_ok ? exit_pass : exit_acceptance;
    }

    const auto p = cfg.params();
    const auto t = table_for(cfg, p).table;
    TestFunction f;
    f.bulk = [](double tt, double z) {
        return std::exp(-tt * tt / (2 * 0.3 * 0.3) - (z - 0.3) * (z - 0.3) / (2 * 0.15 * 0.15));
    };
    f.t_min = -3.6;
    f.t_max = 3.6;
    HoloOptions opt;
    opt.M = cfg.holo_M;
    opt.smearing = SmearingGrid{-4.0, 4.0, 1600, cfg.grid_n.value_or(2048)};
    opt.n_t = cfg.samples > 400 ? cfg.samples : 400;
    const auto img = holographic_dual(f, t, opt);
    const double res = verify_dual(img, img.coeffs, t);

    auto h = header(cfg, p);
    h.emplace_back("test_function", "exp(-t^2/(2 0.3^2) - (z - 0.3)^2/(2 0.15^2))");
    h.emplace_back("M", std::to_string(img.meta.M));
    h.emplace_back("a", num(img.meta.a));
    h.emplace_back("chi", img.meta.chi);
    CsvWriter fh("holo", h, {"omega", "re", "im"});
    for (std::size_t i = 0; i < img.omega.size(); ++i)
        fh.row(std::vector<double>{img.omega[i], img.fhat[i].real(), img.fhat[i].imag()});
    CsvWriter fp("holo", h, {"t", "re", "im", "envelope"});
    for (std::size_t i = 0; i < img.t.size(); ++i)
        fp.row(std::vector<double>{img.t[i], img.f_prime[i].real(), img.f_prime[i].imag(), img.envelope[i]});
    atomic_write(out / "holo_fhat.csv", fh.str());
    atomic_write(out / "holo_fprime.csv", fp.str());

    json j;
    j["command"] = "holo";
    j["params"] = params_json(p);
    j["M"] = img.meta.M;
    j["m_first"] = img.meta.m_first;
    j["a"] = img.meta.a;
    j["chi"] = img.meta.chi;
    j["zero_mode"] = img.meta.zero_mode;
    j["mu_used"] = img.meta.mu_used;
    j["retained_fraction"] = img.meta.retained_fraction;
    j["regulator_sensitivity"] = img.meta.regulator_sensitivity;
    j["samples_per_bump"] = img.meta.samples_per_bump;
    j["warnings"] = img.meta.warnings;
    j["coefficient_residual"] = res;
    j["pass"] = res < 1e-6;
    write_json(out / "holo_meta.json", j);
    std::printf("holo: M = %zu, a = %.4f, coefficient residual %.2e\n", img.meta.M, img.meta.a, res);
    for (const auto& w : img.meta.warnings)
        std::printf("  warning: %s\n", w.c_str());
    return res < 1e-6 ? exit_pass : exit_acceptance;
}

int cmd_verify(const RunConfig& cfg)
{
    const auto results = run_acceptance(cfg.criteria);
    json list = json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        failed += r.pass ? 0 : 1;
        std::printf("[%s] %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    }
    json j;
    j["command"] = "verify";
    j["criteria"] = list;
    j["passed"] = results.size() - failed;
    j["failed"] = failed;
    j["pass"] = failed == 0;
    write_json(fs::path(cfg.out) / "verify.json", j);
    std::printf("%zu criteria, %zu failed\n", results.size(), failed);
    return failed == 0 ? exit_pass : exit_acceptance;
}

} // namespace wentzell::cli
