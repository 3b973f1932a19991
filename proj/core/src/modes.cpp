#include "wentzell/modes.hpp"

#include "wentzell/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wentzell {

namespace {

constexpr double pi = std::numbers::pi;

Parity parity_of(int m) { return (m % 2 == 0) ? Parity::even : Parity::odd; }

// Unscaled eigen function in x = qS and its derivative.
double raw_residual(Parity par, double x, double S, double c)
{
    if (par == Parity::odd)
        return x * std::sin(x) - (S / c) * std::cos(x);
    return std::sin(x) + (c / S) * x * std::cos(x);
}

double raw_derivative(Parity par, double x, double S, double c)
{
    if (par == Parity::odd)
        return (1.0 + S / c) * std::sin(x) + x * std::cos(x);
    const double b = c / S;
    return (1.0 + b) * std::cos(x) - b * x * std::sin(x);
}

double residual_scale(Parity par, double x, double S, double c)
{
    if (par == Parity::odd)
        return std::hypot(x, S / c);
    return std::hypot(1.0, (c / S) * x);
}

double profile(const ModeEntry& e, double z, double S)
{
    const double amp = e.c_norm / std::sqrt(S);
    return e.parity == Parity::even ? amp * std::cos(e.q * z) : amp * std::sin(e.q * z);
}

void check_inside(double z, double S)
{
    if (!(std::abs(z) <= S * (1.0 + 1e-12)))
        throw Error(ErrorKind::domain, "z = " + std::to_string(z) + " lies outside the strip [-S, S]");
}

} // namespace

const char* to_string(Parity parity) noexcept { return parity == Parity::even ? "even" : "odd"; }

double ModeEntry::omega(double mu, double k) const { return std::sqrt(k * k + q * q + mu * mu); }

double ModeEntry::boundary_value(Side side) const noexcept
{
    if (side == Side::plus || m % 2 == 0)
        return d_bdy;
    return -d_bdy;
}

ModeTable::ModeTable(PhysicalParams params, std::vector<ModeEntry> entries, double residual_tol)
    : params_(params), entries_(std::move(entries)), residual_tol_(residual_tol)
{
    params_.validate();
    if (!params_.is_strip())
        throw Error(ErrorKind::validation, "mode tables exist only for the strip geometry");
    if (entries_.empty())
        throw Error(ErrorKind::validation, "mode table is empty");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.m != static_cast<int>(i))
            throw Error(ErrorKind::validation, "mode table indices must run 0..M_max");
        if (e.parity != parity_of(e.m))
            throw Error(ErrorKind::validation, "mode " + std::to_string(e.m) + " has the wrong parity");
        if (i > 0 && !(e.q > entries_[i - 1].q))
            throw Error(ErrorKind::validation, "q must be strictly increasing at m = " + std::to_string(e.m));
        if (e.d_bdy == 0.0 || !std::isfinite(e.d_bdy))
            throw Error(ErrorKind::validation, "d_m vanishes at m = " + std::to_string(e.m));
        if (!(e.c_norm > 0.0))
            throw Error(ErrorKind::validation, "c_m must be positive at m = " + std::to_string(e.m));
    }
    if (entries_.front().q != 0.0)
        throw Error(ErrorKind::validation, "q_0 must be 0");
}

ModeTable ModeTable::with_mu(double mu) const
{
    PhysicalParams p = params_;
    p.mu = mu;
    return ModeTable(p, entries_, residual_tol_);
}

std::pair<double, double> q_bracket(int m, double S)
{
    if (m < 1)
        throw Error(ErrorKind::validation, "brackets are defined for m >= 1");
    if (m % 2 == 1) {
        const int p = (m + 1) / 2;
        return {(p - 1) * pi / S, (p - 0.5) * pi / S};
    }
    const int p = m / 2;
    return {(p - 0.5) * pi / S, p * pi / S};
}

double eigen_residual(int m, double q, const PhysicalParams& p)
{
    if (m == 0)
        return q;
    const double S = p.S();
    const Parity par = parity_of(m);
    const double x = q * S;
    return raw_residual(par, x, S, p.c) / residual_scale(par, x, S, p.c);
}

double solve_q(int m, const PhysicalParams& p)
{
    if (m < 0)
        throw Error(ErrorKind::validation, "mode index must be non-negative");
    if (m == 0)
        return 0.0;
    const double S = p.S();
    const double c = p.c;
    const Parity par = parity_of(m);
    auto [qlo, qhi] = q_bracket(m, S);
    double lo = qlo * S;
    double hi = qhi * S;
    double flo = raw_residual(par, lo, S, c);
    const double fhi = raw_residual(par, hi, S, c);
    if (!(flo * fhi < 0.0))
        throw Error(ErrorKind::numerical, "no sign change in bracket for m = " + std::to_string(m));

    while (hi - lo > 1e-10 * pi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = raw_residual(par, mid, S, c);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 5; ++it) {
        const double f = raw_residual(par, x, S, c);
        const double df = raw_derivative(par, x, S, c);
        if (f == 0.0 || df == 0.0)
            break;
        const double next = std::clamp(x - f / df, lo, hi);
        if (next == x)
            break;
        x = next;
    }
    return x / S;
}

ModeTable build_table(std::size_t M_max, const PhysicalParams& p, double residual_tol)
{
    p.validate();
    const double S = p.S();
    const double c = p.c;
    std::vector<ModeEntry> entries(M_max + 1);
    for (std::size_t i = 0; i <= M_max; ++i) {
        ModeEntry& e = entries[i];
        e.m = static_cast<int>(i);
        e.parity = parity_of(e.m);
        e.q = solve_q(e.m, p);
        if (e.m == 0) {
            e.c_norm = std::sqrt(S / (2.0 * S + 2.0 * c));
        } else {
            const double res = std::abs(eigen_residual(e.m, e.q, p));
            if (!(res < residual_tol))
                throw Error(ErrorKind::numerical, "residual " + std::to_string(res) + " at m = " +
                                                      std::to_string(e.m) + " exceeds tolerance");
            const double x = e.q * S;
            const double osc = std::sin(2.0 * x) / (2.0 * e.q);
            if (e.parity == Parity::odd) {
                const double s = std::sin(x);
                e.c_norm = std::sqrt(S / (S - osc + 2.0 * c * s * s));
            } else {
                const double co = std::cos(x);
                e.c_norm = std::sqrt(S / (S + osc + 2.0 * c * co * co));
            }
        }
        e.d_bdy = profile(e, S, S);
    }
    return ModeTable(p, std::move(entries), residual_tol);
}

AsymptoticReport verify_table(const ModeTable& table, double delta, int m_start)
{
    const auto& p = table.params();
    const double S = p.S();
    const double c = p.c;
    AsymptoticReport rep;
    rep.delta = delta;
    rep.m_start = m_start;
    for (const auto& e : table.entries()) {
        AsymptoticRow row;
        row.m = e.m;
        if (e.m == 0) {
            row.skipped = true;
            row.in_bracket = (e.q == 0.0);
            rep.brackets_pass = rep.brackets_pass && row.in_bracket;
            rep.rows.push_back(row);
            continue;
        }
        const auto [lo, hi] = q_bracket(e.m, S);
        row.in_bracket = e.q > lo && e.q < hi;
        row.residual = std::abs(eigen_residual(e.m, e.q, p));
        rep.max_residual = std::max(rep.max_residual, row.residual);
        rep.brackets_pass = rep.brackets_pass && row.in_bracket;
        rep.residuals_pass = rep.residuals_pass && row.residual < table.residual_tol();

        const double mm1 = static_cast<double>(e.m - 1);
        if (e.m < m_start || e.m < 2) {
            row.skipped = true;
            rep.rows.push_back(row);
            continue;
        }
        const double base = pi * mm1 / (2.0 * S);
        const double shift = 2.0 / (c * pi * mm1);
        row.q_in_bound = e.q >= base + (1.0 - delta) * shift && e.q <= base + shift;
        row.cm_scaled = std::abs(e.c_norm - 1.0) * double(e.m) * double(e.m);
        row.d_ratio = std::abs(e.d_bdy) * pi * mm1 * c / (2.0 * std::sqrt(S));
        row.d_law = std::abs(row.d_ratio - 1.0) <= delta;
        rep.q_bounds_pass = rep.q_bounds_pass && row.q_in_bound;
        rep.d_law_pass = rep.d_law_pass && row.d_law;
        if (e.m == m_start)
            rep.cm_reference = row.cm_scaled;
        rep.cm_constant = std::max(rep.cm_constant, row.cm_scaled);
        rep.rows.push_back(row);
    }
    if (rep.cm_reference > 0.0)
        rep.cm_bounded_pass = rep.cm_constant <= 10.0 * rep.cm_reference;
    return rep;
}

double eval_mode(const ModeEntry& entry, double z, const PhysicalParams& p)
{
    const double S = p.S();
    check_inside(z, S);
    return profile(entry, z, S);
}

double eval_mode_derivative(const ModeEntry& entry, double z, const PhysicalParams& p)
{
    const double S = p.S();
    check_inside(z, S);
    const double amp = entry.c_norm / std::sqrt(S) * entry.q;
    return entry.parity == Parity::even ? -amp * std::sin(entry.q * z) : amp * std::cos(entry.q * z);
}

double eval_halfspace_mode(double q, double z, const PhysicalParams& p)
{
    if (!(z >= 0.0))
        throw Error(ErrorKind::domain, "half-space modes are defined for z >= 0");
    if (!(q >= 0.0))
        throw Error(ErrorKind::domain, "half-space wavenumber must be non-negative");
    const double cq = p.c * q;
    const double norm = 1.0 / std::sqrt(pi / 2.0 * (cq * cq + 1.0));
    return norm * (std::cos(q * z) - cq * std::sin(q * z));
}

BulkBoundaryFunction mode_function(const ModeEntry& entry, const Grid1D& grid, const PhysicalParams& p)
{
    std::vector<double> bulk(grid.size());
    for (std::size_t i = 0; i < bulk.size(); ++i)
        bulk[i] = eval_mode(entry, grid.node(i), p);
    return BulkBoundaryFunction(grid, std::move(bulk),
                                {entry.boundary_value(Side::minus), entry.boundary_value(Side::plus)});
}

namespace {

void check_strip_grid(const Grid1D& grid, const PhysicalParams& p)
{
    const double S = p.S();
    if (grid.z_min() != -S || grid.z_max() != S)
        throw Error(ErrorKind::grid_mismatch, "grid must span exactly [-S, S]");
}

template <class T>
std::vector<T> project_impl(const BulkBoundary<T>& F, const ModeTable& table, Quadrature rule)
{
    const auto& p = table.params();
    check_strip_grid(F.grid, p);
    if (F.boundary.size() != 2)
        throw Error(ErrorKind::grid_mismatch, "strip functions carry two boundary values");
    const auto w = quadrature_weights(F.grid, rule);
    const auto z = F.grid.nodes();
    std::vector<T> out(table.size());
    for (std::size_t m = 0; m < table.size(); ++m) {
        const auto& e = table[m];
        T acc{};
        for (std::size_t i = 0; i < z.size(); ++i)
            acc += w[i] * profile(e, z[i], p.S()) * F.bulk[i];
        acc += p.c * (e.boundary_value(Side::minus) * F.boundary[0] + e.boundary_value(Side::plus) * F.boundary[1]);
        out[m] = acc;
    }
    return out;
}

} // namespace

std::vector<double> project(const BulkBoundaryFunction& F, const ModeTable& table, Quadrature rule)
{
    return project_impl(F, table, rule);
}

std::vector<std::complex<double>> project(const ComplexBulkBoundaryFunction& F, const ModeTable& table,
                                          Quadrature rule)
{
    return project_impl(F, table, rule);
}

BulkBoundaryFunction synthesize(const std::vector<double>& coeffs, const ModeTable& table, const Grid1D& grid)
{
    const auto& p = table.params();
    check_strip_grid(grid, p);
    if (coeffs.size() > table.size())
        throw Error(ErrorKind::validation, "more coefficients than modes in the table");
    auto out = BulkBoundaryFunction::zeros(grid, 2);
    const auto z = grid.nodes();
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0.0)
            continue;
        const auto& e = table[m];
        for (std::size_t i = 0; i < z.size(); ++i)
            out.bulk[i] += coeffs[m] * profile(e, z[i], p.S());
    }
    out.boundary[0] = out.bulk.front();
    out.boundary[1] = out.bulk.back();
    return out;
}

} // namespace wentzell
