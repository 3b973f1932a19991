#include "wentzell/spectral.hpp"

#include "wentzell/error.hpp"

#include <cmath>

namespace wentzell {

SpectralState::SpectralState(std::vector<double> a_, std::vector<double> b_,
                             std::shared_ptr<const ModeTable> table_, double t_, double k_)
    : a(std::move(a_)), b(std::move(b_)), table(std::move(table_)), t(t_), k(k_)
{
    if (!table)
        throw Error(ErrorKind::validation, "spectral state needs a mode table");
    if (a.size() != table->size() || b.size() != table->size())
        throw Error(ErrorKind::validation, "coefficient vectors must match the mode table length");
}

SpectralState SpectralState::from_cauchy(const CauchyData& data, std::shared_ptr<const ModeTable> table, double k,
                                         Quadrature rule)
{
    auto a = project(data.position, *table, rule);
    auto b = project(data.velocity, *table, rule);
    return SpectralState(std::move(a), std::move(b), std::move(table), 0.0, k);
}

CauchyData SpectralState::to_cauchy(const Grid1D& grid) const
{
    return CauchyData(synthesize(a, *table, grid), synthesize(b, *table, grid));
}

SpectralState spectral_evolve(const SpectralState& s, double dt)
{
    SpectralState out = s;
    out.t = s.t + dt;
    for (std::size_t m = 0; m < s.a.size(); ++m) {
        const double w = s.table->omega(m, s.k);
        if (w == 0.0) {
            out.a[m] = s.a[m] + s.b[m] * dt;
            out.b[m] = s.b[m];
            continue;
        }
        const double cs = std::cos(w * dt);
        const double sn = std::sin(w * dt);
        out.a[m] = s.a[m] * cs + s.b[m] * sn / w;
        out.b[m] = -s.a[m] * w * sn + s.b[m] * cs;
    }
    return out;
}

EnergyReport energy(const SpectralState& s)
{
    const auto& table = *s.table;
    const auto& p = table.params();
    double total = 0.0;
    double phi[2] = {0.0, 0.0};
    double vel[2] = {0.0, 0.0};
    for (std::size_t m = 0; m < s.a.size(); ++m) {
        const double w = table.omega(m, s.k);
        total += 0.5 * (s.b[m] * s.b[m] + w * w * s.a[m] * s.a[m]);
        const auto& e = table[m];
        const double bv[2] = {e.boundary_value(Side::minus), e.boundary_value(Side::plus)};
        for (int j = 0; j < 2; ++j) {
            phi[j] += s.a[m] * bv[j];
            vel[j] += s.b[m] * bv[j];
        }
    }
    const double m2 = p.mu * p.mu + s.k * s.k;
    double bdy = 0.0;
    for (int j = 0; j < 2; ++j)
        bdy += 0.5 * p.c * (vel[j] * vel[j] + m2 * phi[j] * phi[j]);
    return {total - bdy, bdy, total};
}

double symplectic_form(const SpectralState& A, const SpectralState& B)
{
    if (A.a.size() != B.a.size())
        throw Error(ErrorKind::validation, "spectral states have different lengths");
    double acc = 0.0;
    for (std::size_t m = 0; m < A.a.size(); ++m)
        acc += A.a[m] * B.b[m] - A.b[m] * B.a[m];
    return acc;
}

} // namespace wentzell
