#include "wentzell/acceptance.hpp"

#include "wentzell/error.hpp"
#include "wentzell/fdtd.hpp"
#include "wentzell/holo.hpp"
#include "wentzell/modes.hpp"
#include "wentzell/reflection.hpp"
#include "wentzell/smearing.hpp"
#include "wentzell/sobolev.hpp"
#include "wentzell/spectral.hpp"
#include "wentzell/twopoint.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <memory>
#include <random>

namespace wentzell {

namespace {

std::string format(const char* fmt, ...)
{
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

double bump(double x)
{
    if (!(std::abs(x) < 1.0))
        return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - x * x));
}

CauchyData sampled_data(const Grid1D& g, const PhysicalParams& p, const std::function<double(double)>& pos,
                        const std::function<double(double)>& vel)
{
    std::vector<double> a(g.size());
    std::vector<double> b(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        a[i] = pos(g.node(i));
        b[i] = vel(g.node(i));
    }
    std::vector<double> ba{a.front()};
    std::vector<double> bb{b.front()};
    if (p.boundary_count() == 2) {
        ba.push_back(a.back());
        bb.push_back(b.back());
    }
    return CauchyData(BulkBoundaryFunction(g, a, ba), BulkBoundaryFunction(g, b, bb));
}

// Band-limited strip state: a_m = 2^{-m} normalized over m <= 10, b_1 = 0.3, b_3 = 0.2.
SpectralState reference_state(std::shared_ptr<const ModeTable> table)
{
    std::vector<double> a(table->size(), 0.0);
    std::vector<double> b(table->size(), 0.0);
    double n2 = 0.0;
    for (std::size_t m = 0; m <= 10 && m < a.size(); ++m) {
        a[m] = std::pow(2.0, -static_cast<double>(m));
        n2 += a[m] * a[m];
    }
    for (auto& v : a)
        v /= std::sqrt(n2);
    b[1] = 0.3;
    b[3] = 0.2;
    return SpectralState(a, b, std::move(table));
}

double fdtd_vs_spectral(std::size_t n, const std::shared_ptr<const ModeTable>& table, double t_end)
{
    const auto& p = table->params();
    const Grid1D g = strip_grid(p, n);
    const auto s0 = reference_state(table);
    const auto data = s0.to_cauchy(g);
    auto f = FdtdState::from_cauchy(data, p, 0.5);
    f.advance(static_cast<std::size_t>(std::llround(t_end / f.dt())));
    const auto exact = spectral_evolve(s0, f.t()).to_cauchy(g);
    auto diff = exact.position;
    for (std::size_t i = 0; i < diff.bulk.size(); ++i)
        diff.bulk[i] -= f.phi()[i];
    diff.boundary[0] -= f.phi().front();
    diff.boundary[1] -= f.phi().back();
    return weighted_norm(diff, p);
}

} // namespace

CriterionResult criterion_brackets()
{
    CriterionResult r{1, "eigenvalue brackets and residuals", true, "", 0.0};
    double worst = 0.0;
    int failures = 0;
    for (double S : {0.5, 1.0, 2.0})
        for (double c : {0.5, 1.0, 2.0}) {
            const auto t = build_table(200, PhysicalParams::strip(c, 1.0, S));
            const auto rep = verify_table(t);
            worst = std::max(worst, rep.max_residual);
            if (!rep.brackets_pass || !(rep.max_residual < 1e-12))
                ++failures;
        }
    r.pass = failures == 0;
    r.detail = format("9 (S,c) pairs, m <= 200: %d failing, max residual %.2e (< 1e-12)", failures, worst);
    return r;
}

CriterionResult criterion_asymptotics()
{
    CriterionResult r{2, "large-m bounds on q_m, d_m, c_m", true, "", 0.0};
    double dmin = 1e300;
    double dmax = 0.0;
    bool q_ok = true;
    bool c_ok = true;
    for (double S : {0.5, 1.0, 2.0})
        for (double c : {0.5, 1.0, 2.0}) {
            const auto t = build_table(200, PhysicalParams::strip(c, 1.0, S));
            const auto rep = verify_table(t, 0.1, 50);
            q_ok = q_ok && rep.q_bounds_pass;
            c_ok = c_ok && rep.cm_bounded_pass;
            for (const auto& row : rep.rows)
                if (!row.skipped) {
                    dmin = std::min(dmin, row.d_ratio);
                    dmax = std::max(dmax, row.d_ratio);
                }
        }
    const bool d_ok = dmin >= 0.85 && dmax <= 1.15;
    r.pass = q_ok && c_ok && d_ok;
    r.detail = format("9 (S,c) pairs, 50 <= m <= 200: q bound (delta 0.1) %s; |d_m| pi (m-1) c / (2 sqrt S) in "
                      "[%.4f, %.4f] (within [0.85, 1.15]); |c_m-1| m^2 bounded %s",
                      q_ok ? "ok" : "FAIL", dmin, dmax, c_ok ? "ok" : "FAIL");
    return r;
}

CriterionResult criterion_orthonormality()
{
    CriterionResult r{3, "Gram matrix of modes m <= 20", true, "", 0.0};
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t = build_table(20, p);
    const Grid1D g = strip_grid(p, 4095);
    std::vector<BulkBoundaryFunction> fs;
    for (const auto& e : t.entries())
        fs.push_back(mode_function(e, g, p));
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j) {
            const double v = weighted_inner_product(fs[i], fs[j], p).real();
            if (i == j)
                diag = std::max(diag, std::abs(v - 1.0));
            else
                off = std::max(off, std::abs(v));
        }
    r.pass = off < 1e-8 && diag < 1e-8;
    r.detail = format("4096 nodes: max off-diagonal %.2e, max diagonal deviation %.2e (< 1e-8)", off, diag);
    return r;
}

CriterionResult criterion_fdtd_oracle()
{
    CriterionResult r{4, "FDTD vs spectral propagator", true, "", 0.0};
    auto table = std::make_shared<const ModeTable>(build_table(10, PhysicalParams::strip(1.0, 1.0, 1.0)));
    const double e1 = fdtd_vs_spectral(1024, table, 2.0);
    const double e2 = fdtd_vs_spectral(2048, table, 2.0);
    const double ratio = e1 / e2;
    r.pass = e1 < 1e-3 && ratio >= 3.2 && ratio <= 4.8;
    r.detail = format("t = 2S: L2 error %.3e at h = 1/512 (< 1e-3), %.3e at h = 1/1024, ratio %.3f (in [3.2, 4.8])",
                      e1, e2, ratio);
    return r;
}

CriterionResult criterion_conservation()
{
    CriterionResult r{5, "energy, symplectic form, global estimate", true, "", 0.0};
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    auto table = std::make_shared<const ModeTable>(build_table(10, p));
    const auto A = reference_state(table);
    std::vector<double> a2(table->size(), 0.0);
    std::vector<double> b2(table->size(), 0.0);
    a2[2] = 0.5;
    a2[5] = -0.25;
    b2[0] = 0.4;
    b2[4] = 0.1;
    const SpectralState B(a2, b2, table);

    const double E0 = energy(A).total;
    const double G0 = std::pow(spectral_sobolev_norm(A.a, *table, 1.0), 2) + std::pow(spectral_sobolev_norm(A.b, *table, 0.0), 2);
    const Grid1D g = strip_grid(p, 8192);
    const double sig0 = symplectic_form(A.to_cauchy(g), B.to_cauchy(g), p);
    double e_drift = 0.0;
    double g_drift = 0.0;
    double s_drift = 0.0;
    for (int k = 1; k <= 10000; ++k) {
        const double t = 10.0 * k / 10000.0;
        const auto At = spectral_evolve(A, t);
        e_drift = std::max(e_drift, std::abs(energy(At).total / E0 - 1.0));
        const double Gt = std::pow(spectral_sobolev_norm(At.a, *table, 1.0), 2) +
                          std::pow(spectral_sobolev_norm(At.b, *table, 0.0), 2);
        g_drift = std::max(g_drift, std::abs(Gt / G0 - 1.0));
        if (k % 1000 == 0) {
            const auto Bt = spectral_evolve(B, t);
            const double sig = symplectic_form(At.to_cauchy(g), Bt.to_cauchy(g), p);
            s_drift = std::max(s_drift, std::abs(sig - sig0) / std::abs(sig0));
        }
    }

    const Grid1D fg = strip_grid(p, 1024);
    const auto data = sampled_data(fg, p, [](double z) { return std::exp(-(z - 0.2) * (z - 0.2) / 0.02); },
                                   [](double) { return 0.0; });
    auto f = FdtdState::from_cauchy(data, p, 0.5);
    const double F0 = energy(f).total;
    double f_drift = 0.0;
    const auto steps = static_cast<std::size_t>(std::llround(10.0 / f.dt()));
    for (std::size_t k = 0; k < steps; k += 16) {
        f.advance(16);
        f_drift = std::max(f_drift, std::abs(energy(f).total / F0 - 1.0));
    }
    r.pass = e_drift < 1e-10 && s_drift < 1e-10 && g_drift < 1e-10 && f_drift < 1e-3;
    r.detail = format("t in [0,10]: spectral energy %.1e, symplectic %.1e, global estimate %.1e (< 1e-10); "
                      "FDTD energy %.2e (< 1e-3)",
                      e_drift, s_drift, g_drift, f_drift);
    return r;
}

CriterionResult criterion_causality()
{
    CriterionResult r{6, "finite propagation speed and domain of dependence", true, "", 0.0};
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const Grid1D g = strip_grid(p, 1024);
    const double rad = 0.2;
    const auto centred = sampled_data(g, p, [&](double z) { return bump(z / rad); }, [](double) { return 0.0; });
    const auto probe = causality_probe(centred, p, 0.0, rad, p.S() - rad, 1e-8, 0.5);

    const auto at_edge = sampled_data(g, p, [&](double z) { return bump((z - 1.0) / rad); },
                                      [](double) { return 0.0; });
    const double s0_hi = 1.0 - rad - 0.05;
    const auto dep = domain_of_dependence_energy(at_edge, p, -1.0, s0_hi, s0_hi + 1.0, 0.5);
    const double leak = dep.max_dependence_energy / dep.total_energy;

    const auto local = domain_of_dependence_energy(at_edge, p, 0.5, 1.0, 0.5, 0.5);
    const double growth = local.max_dependence_energy / local.initial_region_energy - 1.0;

    r.pass = probe.pass && leak < 1e-3 && growth <= 1e-3;
    r.detail = format("outside discrete cone %.1e (< 1e-8; physical-cone dispersion %.1e); "
                      "energy in D+ of data-free region %.1e of total (< 1e-3); local estimate excess %.1e (<= 1e-3)",
                      probe.discrete_leak, probe.physical_leak, leak, growth);
    return r;
}

CriterionResult criterion_reflection()
{
    CriterionResult r{7, "explicit reflection solution", true, "", 0.0};
    const auto res = run_reflection();
    const double spot = std::abs(res.fdtd_at_1 - 0.7358);
    r.pass = res.sup_error < 5e-2 * 2.0 && spot < 5e-2;
    r.detail = format("eps 0.02, h 1/2048: sup trace error %.2e (< 0.1); phi|(1) = %.6f vs 0.7358 (|diff| %.1e < 5e-2)",
                      res.sup_error, res.fdtd_at_1, spot);
    return r;
}

CriterionResult criterion_two_point()
{
    CriterionResult r{8, "two-point weights and tails", true, "", 0.0};
    const auto norm = halfspace_weight_normalization(1.0);
    const auto table = build_table(400, PhysicalParams::strip(1.0, 1.0, 1.0));
    const auto tail = tail_convergence(table, 100);
    TwoPointSpec s100;
    s100.M = 100;
    TwoPointSpec s200;
    s200.M = 200;
    const auto v100 = boundary_2pt_strip(0.0, 0.0, table, s100);
    const auto v200 = boundary_2pt_strip(0.0, 0.0, table, s200);
    const double diff = std::abs(v200.value - v100.value);
    const double dsum = tail.cauchy_increment;
    const bool norm_ok = std::abs(norm.value - 1.0) < 1e-8;
    const bool cauchy_ok = diff <= v100.tail_bound && dsum <= 1.2 * tail.analytic_tail;
    r.pass = norm_ok && tail.pass && cauchy_ok;
    r.detail = format("half-space weight integral %.12f; tail ratio %.4f (in [0.8,1.2]); "
                      "|Delta_100 - Delta_200| %.2e <= bound %.2e; sum_{100<m<=200} d_m^2 %.3e <= 1.2 x %.3e",
                      norm.value, tail.ratio, diff, v100.tail_bound, dsum, tail.analytic_tail);
    return r;
}

CriterionResult criterion_commutator()
{
    CriterionResult r{9, "boundary commutator at spacelike separation (d = 2)", true, "", 0.0};
    const auto table = build_table(50, PhysicalParams::strip(1.0, 1.0, 1.0, 2));
    TwoPointSpec spec;
    spec.M = 50;
    spec.d = 2;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<SpacetimePoint> pts;
    while (pts.size() < 100) {
        const SpacetimePoint pt{u(rng), u(rng)};
        if (pt.x * pt.x > pt.x0 * pt.x0 + 1e-6)
            pts.push_back(pt);
    }
    const auto chk = causality_check(pts, table, spec, 1e-10);
    const double timelike = std::abs(commutator_boundary(1.0, 0.0, table, spec));
    r.pass = chk.pass && chk.spacelike_points == 100 && timelike > 0.0;
    r.detail = format("100 spacelike points, M = 50: max |[phi, phi]| %.1e (< 1e-10); timelike control %.3e",
                      chk.max_abs, timelike);
    return r;
}

CriterionResult criterion_holography()
{
    CriterionResult r{10, "holographic identity at coefficient level", true, "", 0.0};
    const auto table = build_table(60, PhysicalParams::strip(1.0, 1.0, 1.0));
    auto gaussian = [](double t0, double z0, double st, double sz) {
        TestFunction f;
        f.bulk = [=](double t, double z) {
            return std::exp(-(t - t0) * (t - t0) / (2 * st * st) - (z - z0) * (z - z0) / (2 * sz * sz));
        };
        f.t_min = t0 - 12.0 * st;
        f.t_max = t0 + 12.0 * st;
        return f;
    };
    HoloOptions opt;
    opt.smearing = SmearingGrid{-4.0, 4.0, 1600, 2048};
    opt.n_t = 400;
    const auto f = gaussian(0.0, 0.3, 0.3, 0.15);
    const auto img_f = holographic_dual(f, table, opt);
    const double res_f = verify_dual(img_f, img_f.coeffs, table);

    HoloOptions opt_g = opt;
    opt_g.M = img_f.meta.M;
    opt_g.a = img_f.meta.a;
    const auto g = gaussian(0.2, -0.2, 0.25, 0.2);
    const auto img_g = holographic_dual(g, table, opt_g);
    const auto pairing = pairing_check(img_f, img_g, table);
    r.pass = res_f < 1e-6 && pairing.rel_diff < 1e-5 && img_f.meta.retained_fraction >= 0.999;
    r.detail = format("M = %zu (%.5f of coefficient energy), a = %.4f: residual %.1e (< 1e-6); pairing rel diff %.1e (< 1e-5)",
                      img_f.meta.M, img_f.meta.retained_fraction, img_f.meta.a, res_f, pairing.rel_diff);
    return r;
}

CriterionResult criterion_fig2()
{
    CriterionResult r{11, "holographic image of the compact test function", true, "", 0.0};
    const auto res = fig2_reproduce();
    const double f00_expected = std::exp(-8.0);
    const bool f00_ok = std::abs(res.f00 - f00_expected) <= 1e-12;
    std::string centers;
    for (const auto& b : res.bursts)
        centers += format("%s%.2f", centers.empty() ? "" : ", ", b.t);
    r.pass = res.centers_ok && res.decay_ok && f00_ok;
    r.detail = format("burst centres [%s] vs +-1, +-3, +-5 (max offset %.2f, tol 0.2): %s; decay %s; "
                      "f(0,0) = %.9e (expected e^-8: %s)",
                      centers.c_str(), res.max_center_error, res.centers_ok ? "ok" : "FAIL",
                      res.decay_ok ? "ok" : "FAIL", res.f00, f00_ok ? "ok" : "FAIL");
    return r;
}

CriterionResult criterion_source_relation()
{
    CriterionResult r{12, "source relation and Neumann control", true, "", 0.0};
    const auto table = build_table(20, PhysicalParams::strip(1.0, 1.0, 1.0));
    auto g = [](double t) { return std::exp(-0.5 * t * t); };
    auto gdd = [](double t) { return (t * t - 1.0) * std::exp(-0.5 * t * t); };
    const SmearingGrid grid{-12.0, 12.0, 6000, 64};
    const auto plus = source_relation_check(g, gdd, -12.0, 12.0, table, 20, Side::plus, grid);
    const auto minus = source_relation_check(g, gdd, -12.0, 12.0, table, 20, Side::minus, grid);
    const std::vector<double> neumann(21, 1.0 / std::sqrt(2.0));
    const auto control = source_relation_check(g, gdd, -12.0, 12.0, table, 20, Side::plus, grid, neumann);
    r.pass = plus.pass && minus.pass && !control.pass;
    r.detail = format("M = 20: residual %.1e (plus), %.1e (minus) (< 1e-8); Neumann weights residual %.2f (must fail)",
                      plus.max_residual, minus.max_residual, control.max_residual);
    return r;
}

const std::vector<AcceptanceCriterion>& acceptance_criteria()
{
    static const std::vector<AcceptanceCriterion> all{
        {1, criterion_brackets},      {2, criterion_asymptotics},   {3, criterion_orthonormality},
        {4, criterion_fdtd_oracle},   {5, criterion_conservation},  {6, criterion_causality},
        {7, criterion_reflection},    {8, criterion_two_point},     {9, criterion_commutator},
        {10, criterion_holography},   {11, criterion_fig2},         {12, criterion_source_relation},
    };
    return all;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only)
{
    std::vector<CriterionResult> out;
    for (const auto& c : acceptance_criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = CriterionResult{c.id, "criterion " + std::to_string(c.id), false, std::string("error: ") + e.what(), 0.0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(r);
    }
    return out;
}

} // namespace wentzell
