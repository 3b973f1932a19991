#include "wentzell/twopoint.hpp"

#include "wentzell/error.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wentzell {

namespace {

constexpr double pi = std::numbers::pi;

double mode_mass(const ModeTable& table, std::size_t m) { return table.omega(m); }

double tail_mass_lower(const ModeTable& table, std::size_t M)
{
    const auto& p = table.params();
    const double q = q_bracket(static_cast<int>(M) + 1, p.S()).first;
    return std::sqrt(q * q + p.mu * p.mu);
}

} // namespace

void TwoPointSpec::validate(const ModeTable& table) const
{
    if (M < 1)
        throw Error(ErrorKind::validation, "two-point cutoff M must be >= 1");
    if (M > table.M_max())
        throw Error(ErrorKind::validation, "cutoff M = " + std::to_string(M) + " exceeds the mode table (M_max = " +
                                               std::to_string(table.M_max()) + ")");
    if (m_first > M)
        throw Error(ErrorKind::validation, "first mode index exceeds the cutoff");
    if (d < 1)
        throw Error(ErrorKind::validation, "dimension d must be >= 1");
    if (d <= 2 && !(table.params().mu > 0.0))
        throw Error(ErrorKind::validation, "mu > 0 is required for d <= 2 (infrared divergence)");
}

double strip_tail_bound(std::size_t M, const PhysicalParams& p, double delta)
{
    if (M < 2)
        return std::numeric_limits<double>::infinity();
    const double mm1 = static_cast<double>(M - 1);
    const double S = p.S();
    return (1.0 + delta) * (1.0 + delta) * 2.0 * S * S / (p.c * p.c * pi * pi * pi * mm1 * mm1);
}

TwoPointValue boundary_2pt_strip(double x0, double x, const ModeTable& table, const TwoPointSpec& spec)
{
    spec.validate(table);
    const auto& p = table.params();
    if (spec.d >= 2) {
        const double x2 = x * x - x0 * x0;
        if (!(x2 > 0.0))
            throw Error(ErrorKind::domain, "d >= 2 strip two-point values are available at spacelike points only");
        const auto b = spacelike_2pt_bessel(x2, table, spec);
        return {b.value, std::abs(b.last_term) * static_cast<double>(table.size()), 0.0};
    }
    std::complex<double> acc = 0.0;
    double weight = 0.0;
    for (std::size_t m = 0; m <= spec.M; ++m) {
        const double d2 = table[m].d_bdy * table[m].d_bdy;
        weight += d2;
        if (m < spec.m_first)
            continue;
        const double mm = mode_mass(table, m);
        if (mm == 0.0)
            throw Error(ErrorKind::domain, "zero mode with mu = 0 has a divergent kernel; exclude it");
        acc += d2 * std::exp(std::complex<double>(0.0, -mm * x0)) / (2.0 * mm);
    }
    const double remaining = std::max(0.0, 1.0 / p.c - weight);
    return {acc, remaining / (2.0 * tail_mass_lower(table, spec.M)), 0.0};
}

TwoPointValue boundary_2pt_halfspace(double x0, double x, const PhysicalParams& p, const HalfSpaceSpec& spec)
{
    p.validate();
    if (!(p.mu > 0.0) && spec.d <= 2)
        throw Error(ErrorKind::validation, "mu > 0 is required for d <= 2 (infrared divergence)");
    const double c = p.c;
    auto weight = [c](double q) { return 2.0 / (pi * (c * c * q * q + 1.0)); };
    using boost::math::quadrature::gauss_kronrod;
    TwoPointValue out;
    if (spec.d == 1) {
        auto re = [&](double q) {
            const double m = std::sqrt(q * q + p.mu * p.mu);
            return weight(q) * std::cos(m * x0) / (2.0 * m);
        };
        auto im = [&](double q) {
            const double m = std::sqrt(q * q + p.mu * p.mu);
            return -weight(q) * std::sin(m * x0) / (2.0 * m);
        };
        double e_re = 0.0;
        double e_im = 0.0;
        const double vr = gauss_kronrod<double, 61>::integrate(re, 0.0, spec.q_max, 15, spec.rel_tol, &e_re);
        const double vi = gauss_kronrod<double, 61>::integrate(im, 0.0, spec.q_max, 15, spec.rel_tol, &e_im);
        out.value = {vr, vi};
        out.quad_error = std::hypot(e_re, e_im);
        out.tail_bound = 1.0 / (pi * c * c * p.mu * spec.q_max);
        return out;
    }
    const double x2 = x * x - x0 * x0;
    if (!(x2 > 0.0))
        throw Error(ErrorKind::domain, "d >= 2 half-space two-point values are available at spacelike points only");
    const double r = std::sqrt(x2);
    auto f = [&](double q) { return weight(q) * free_spacelike_2pt(std::sqrt(q * q + p.mu * p.mu), r, spec.d); };
    double err = 0.0;
    const double v = gauss_kronrod<double, 61>::integrate(f, 0.0, spec.q_max, 15, spec.rel_tol, &err);
    out.value = v;
    out.quad_error = err;
    out.tail_bound = 0.0;
    return out;
}

QuadratureValue halfspace_weight_normalization(double c)
{
    if (!(c > 0.0))
        throw Error(ErrorKind::validation, "c must be positive");
    boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0;
    double l1 = 0.0;
    const double v = integrator.integrate([c](double q) { return 2.0 / (pi * (c * c * q * q + 1.0)); },
                                          std::sqrt(std::numeric_limits<double>::epsilon()), &err, &l1);
    return {v, err};
}

double free_spacelike_2pt(double mass, double r, int d)
{
    if (d < 2)
        throw Error(ErrorKind::validation, "the spacelike Bessel kernel needs d >= 2");
    if (!(r > 0.0))
        throw Error(ErrorKind::domain, "spacelike separation must be positive");
    const double nu = 0.5 * d - 1.0;
    const double pref = std::pow(2.0 * pi, -0.5 * d);
    if (mass == 0.0) {
        if (d == 2)
            throw Error(ErrorKind::domain, "massless d = 2 kernel is infrared divergent");
        return pref * std::pow(2.0, nu - 1.0) * std::tgamma(nu) * std::pow(r, -2.0 * nu);
    }
    const double arg = mass * r;
    if (arg > 700.0)
        return 0.0;
    return pref * std::pow(mass / r, nu) * std::cyl_bessel_k(nu, arg);
}

BesselSum spacelike_2pt_bessel(double x2, const ModeTable& table, const TwoPointSpec& spec)
{
    if (spec.d < 2)
        throw Error(ErrorKind::validation, "spacelike Bessel sum needs d >= 2");
    if (spec.M < 1 || spec.M > table.M_max() || spec.m_first > spec.M)
        throw Error(ErrorKind::validation, "invalid mode range for the Bessel sum");
    if (!(x2 > 0.0))
        throw Error(ErrorKind::domain, "x^2 must be positive (spacelike); use the kernel forms otherwise");
    const double r = std::sqrt(x2);
    BesselSum out;
    for (std::size_t m = spec.m_first; m <= spec.M; ++m) {
        const double d2 = table[m].d_bdy * table[m].d_bdy;
        out.last_term = d2 * free_spacelike_2pt(mode_mass(table, m), r, spec.d);
        out.value += out.last_term;
    }
    return out;
}

std::complex<double> commutator_boundary(double x0, double x, const ModeTable& table, const TwoPointSpec& spec)
{
    if (spec.d != 2)
        throw Error(ErrorKind::validation, "commutator is implemented for d = 2 only");
    spec.validate(table);
    const double s2 = x0 * x0 - x * x;
    if (!(s2 > 0.0))
        return {0.0, 0.0};
    const double s = std::sqrt(s2);
    const double sgn = x0 > 0.0 ? 1.0 : -1.0;
    double acc = 0.0;
    for (std::size_t m = spec.m_first; m <= spec.M; ++m) {
        const double d2 = table[m].d_bdy * table[m].d_bdy;
        acc += d2 * (-0.5 * sgn * std::cyl_bessel_j(0.0, mode_mass(table, m) * s));
    }
    return {0.0, acc};
}

CausalityCheck causality_check(const std::vector<SpacetimePoint>& points, const ModeTable& table,
                               const TwoPointSpec& spec, double tol)
{
    CausalityCheck out;
    for (const auto& pt : points) {
        if (!(pt.x * pt.x > pt.x0 * pt.x0))
            continue;
        ++out.spacelike_points;
        out.max_abs = std::max(out.max_abs, std::abs(commutator_boundary(pt.x0, pt.x, table, spec)));
    }
    out.pass = out.max_abs < tol;
    return out;
}

namespace {

void fill_cauchy(TailReport& rep, const std::vector<double>& w, std::size_t M)
{
    double s_half = 0.0;
    double s_M = 0.0;
    double s_2M = 0.0;
    for (std::size_t m = 0; m <= 2 * M; ++m) {
        if (m <= M / 2)
            s_half += w[m];
        if (m <= M)
            s_M += w[m];
        s_2M += w[m];
    }
    rep.partial_sum = s_M;
    rep.cauchy_increment = s_2M - s_M;
    const double prev = s_M - s_half;
    rep.cauchy_ratio = prev != 0.0 ? rep.cauchy_increment / prev : std::numeric_limits<double>::infinity();
    rep.divergent = !(rep.cauchy_ratio < 0.9);
}

} // namespace

TailReport tail_convergence(const ModeTable& table, std::size_t M)
{
    if (M < 2 || table.M_max() < 2 * M)
        throw Error(ErrorKind::validation, "tail check needs M >= 2 and a table with at least 2M modes");
    const auto& p = table.params();
    std::vector<double> w(table.size());
    for (std::size_t m = 0; m < table.size(); ++m)
        w[m] = table[m].d_bdy * table[m].d_bdy;
    TailReport rep;
    rep.M = M;
    fill_cauchy(rep, w, M);
    rep.exact_total = 1.0 / p.c;
    rep.observed_tail = rep.exact_total - rep.partial_sum;
    const double k = 2.0 / (p.c * pi);
    rep.analytic_tail = k * k * p.S() * boost::math::trigamma(static_cast<double>(M));
    rep.ratio = rep.observed_tail / rep.analytic_tail;
    rep.pass = !rep.divergent && rep.ratio >= 0.8 && rep.ratio <= 1.2;
    return rep;
}

TailReport tail_convergence(const std::vector<double>& weights, std::size_t M)
{
    if (M < 2 || weights.size() < 2 * M + 1)
        throw Error(ErrorKind::validation, "tail check needs M >= 2 and at least 2M + 1 weights");
    TailReport rep;
    rep.M = M;
    fill_cauchy(rep, weights, M);
    rep.exact_total = std::numeric_limits<double>::quiet_NaN();
    rep.observed_tail = std::numeric_limits<double>::quiet_NaN();
    rep.analytic_tail = std::numeric_limits<double>::quiet_NaN();
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
    rep.pass = !rep.divergent;
    return rep;
}

} // namespace wentzell
