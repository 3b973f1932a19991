#include "wentzell/smearing.hpp"

#include "wentzell/error.hpp"

#include <cmath>
#include <numbers>

namespace wentzell {

double SmearedCoefficients::energy() const
{
    double e = 0.0;
    for (std::size_t m = 0; m < plus.size(); ++m)
        e += std::norm(plus[m]) + std::norm(minus[m]);
    return e;
}

TestFunction boundary_smearing(TimeFunction g, Side side, double c, double t_min, double t_max)
{
    TestFunction f;
    f.t_min = t_min;
    f.t_max = t_max;
    f.boundary[side == Side::minus ? 0 : 1] = [g = std::move(g), c](double t) { return g(t) / c; };
    return f;
}

SmearedCoefficients smeared_coeffs(const TestFunction& f, const ModeTable& table, const SmearingGrid& grid,
                                   std::optional<std::size_t> M)
{
    const auto& p = table.params();
    const std::size_t Mc = M.value_or(table.M_max());
    if (Mc > table.M_max())
        throw Error(ErrorKind::validation, "cutoff exceeds the mode table");
    if (!(f.t_max > f.t_min))
        throw Error(ErrorKind::validation, "test function support must have t_max > t_min");
    if (grid.t_lo > f.t_min || grid.t_hi < f.t_max)
        throw Error(ErrorKind::validation, "time grid does not cover the test function support");
    if (grid.n_t < 2)
        throw Error(ErrorKind::validation, "time grid needs at least 2 intervals");

    const std::size_t nm = Mc + 1;
    const Grid1D tg(grid.t_lo, grid.t_hi, grid.n_t);
    const auto wt = quadrature_weights(tg, Quadrature::trapezoid);

    std::vector<double> zs;
    std::vector<double> wz;
    std::vector<double> modes;
    if (f.bulk) {
        const Grid1D zg = strip_grid(p, grid.n_z);
        zs = zg.nodes();
        wz = quadrature_weights(zg, Quadrature::corrected_trapezoid);
        modes.resize(nm * zs.size());
        for (std::size_t m = 0; m < nm; ++m)
            for (std::size_t i = 0; i < zs.size(); ++i)
                modes[m * zs.size() + i] = eval_mode(table[m], zs[i], p);
    }
    std::vector<std::array<double, 2>> bv(nm);
    std::vector<std::vector<double>> src(f.sources.size(), std::vector<double>(nm));
    for (std::size_t m = 0; m < nm; ++m) {
        bv[m] = {table[m].boundary_value(Side::minus), table[m].boundary_value(Side::plus)};
        for (std::size_t s = 0; s < f.sources.size(); ++s) {
            const auto& ps = f.sources[s];
            src[s][m] = ps.kind == PointSource::Kind::value ? eval_mode(table[m], ps.z, p)
                                                            : eval_mode_derivative(table[m], ps.z, p);
        }
    }

    SmearedCoefficients out;
    out.plus.assign(nm, 0.0);
    out.minus.assign(nm, 0.0);
    std::vector<double> fz(zs.size());
    std::vector<double> inner(nm);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < tg.size(); ++k) {
        const double t = tg.node(k);
        if (t < f.t_min || t > f.t_max)
            continue;
        std::fill(inner.begin(), inner.end(), 0.0);
        if (f.bulk) {
            for (std::size_t i = 0; i < zs.size(); ++i)
                fz[i] = wz[i] * f.bulk(t, zs[i]);
            for (std::size_t m = 0; m < nm; ++m) {
                const double* row = &modes[m * zs.size()];
                double acc = 0.0;
                for (std::size_t i = 0; i < zs.size(); ++i)
                    acc += row[i] * fz[i];
                inner[m] += acc;
            }
        }
        for (int j = 0; j < 2; ++j) {
            if (!f.boundary[j])
                continue;
            const double v = p.c * f.boundary[j](t);
            for (std::size_t m = 0; m < nm; ++m)
                inner[m] += bv[m][j] * v;
        }
        for (std::size_t s = 0; s < f.sources.size(); ++s) {
            const double g = f.sources[s].g(t);
            for (std::size_t m = 0; m < nm; ++m)
                inner[m] += src[s][m] * g;
        }
        for (std::size_t m = 0; m < nm; ++m) {
            if (inner[m] == 0.0)
                continue;
            const double ph = table.omega(m) * t;
            const double c = std::cos(ph);
            const double s = std::sin(ph);
            const double a = norm * wt[k] * inner[m];
            out.plus[m] += std::complex<double>(a * c, a * s);
            out.minus[m] += std::complex<double>(a * c, -a * s);
        }
    }
    return out;
}

SourceRelationReport source_relation_check(const TimeFunction& g, const TimeFunction& g_dd, double t_min,
                                           double t_max, const ModeTable& table, std::size_t M, Side side,
                                           const SmearingGrid& grid,
                                           const std::optional<std::vector<double>>& boundary_values, double tol)
{
    const auto& p = table.params();
    const double mu2 = p.mu * p.mu;
    const double S = p.S();
    const double sign = side == Side::plus ? 1.0 : -1.0;

    ModeTable lhs_table = table;
    if (boundary_values) {
        if (boundary_values->size() < M + 1)
            throw Error(ErrorKind::validation, "boundary value override is shorter than the cutoff");
        auto entries = table.entries();
        for (std::size_t m = 0; m <= M; ++m)
            entries[m].d_bdy = (*boundary_values)[m];
        lhs_table = ModeTable(p, std::move(entries), table.residual_tol());
    }
    const auto lhs_f = boundary_smearing([&](double t) { return g_dd(t) + mu2 * g(t); }, side, p.c, t_min, t_max);
    const auto lhs = smeared_coeffs(lhs_f, lhs_table, grid, M);

    TestFunction rhs_f;
    rhs_f.t_min = t_min;
    rhs_f.t_max = t_max;
    rhs_f.sources.push_back({sign * S, PointSource::Kind::z_derivative, g});
    const auto raw = smeared_coeffs(rhs_f, table, grid, M);

    SourceRelationReport rep;
    rep.lhs = lhs.plus;
    rep.rhs.resize(raw.plus.size());
    double scale = 0.0;
    double diff = 0.0;
    for (std::size_t m = 0; m < raw.plus.size(); ++m) {
        rep.rhs[m] = -sign / p.c * raw.plus[m];
        scale = std::max(scale, std::abs(rep.rhs[m]));
        diff = std::max(diff, std::abs(rep.lhs[m] - rep.rhs[m]));
    }
    rep.max_residual = scale > 0.0 ? diff / scale : diff;
    rep.pass = rep.max_residual < tol;
    return rep;
}

} // namespace wentzell
