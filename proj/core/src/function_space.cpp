#include "wentzell/function_space.hpp"

#include "wentzell/error.hpp"

#include <algorithm>
#include <cmath>

namespace wentzell {

std::vector<double> quadrature_weights(const Grid1D& grid, Quadrature rule)
{
    const std::size_t n = grid.size();
    const double h = grid.h();
    std::vector<double> w(n, h);
    if (rule == Quadrature::trapezoid || n < 7) {
        w.front() = w.back() = 0.5 * h;
        return w;
    }
    const double end[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
    for (std::size_t i = 0; i < 3; ++i) {
        w[i] = end[i] * h;
        w[n - 1 - i] = end[i] * h;
    }
    return w;
}

template <class T>
BulkBoundary<T>::BulkBoundary(Grid1D g, std::vector<T> b, std::vector<T> bdy)
    : grid(g), bulk(std::move(b)), boundary(std::move(bdy))
{
    if (bulk.size() != grid.size())
        throw Error(ErrorKind::grid_mismatch, "bulk sample count does not match grid size");
    if (boundary.empty() || boundary.size() > 2)
        throw Error(ErrorKind::validation, "boundary must hold one or two components");
}

template <class T>
BulkBoundary<T> BulkBoundary<T>::zeros(const Grid1D& g, std::size_t n_boundary)
{
    return BulkBoundary<T>(g, std::vector<T>(g.size(), T{}), std::vector<T>(n_boundary, T{}));
}

template struct BulkBoundary<double>;
template struct BulkBoundary<std::complex<double>>;

CauchyData::CauchyData(BulkBoundaryFunction pos, BulkBoundaryFunction vel)
    : position(std::move(pos)), velocity(std::move(vel))
{
    if (!(position.grid == velocity.grid) || position.boundary.size() != velocity.boundary.size())
        throw Error(ErrorKind::grid_mismatch, "Cauchy data components live on different grids");
}

namespace {

template <class T>
void check_pair(const BulkBoundary<T>& F, const BulkBoundary<T>& G, const PhysicalParams& p)
{
    if (!(F.grid == G.grid))
        throw Error(ErrorKind::grid_mismatch, "functions are sampled on different grids");
    if (F.boundary.size() != p.boundary_count() || G.boundary.size() != p.boundary_count())
        throw Error(ErrorKind::grid_mismatch, "boundary component count does not match geometry");
}

double conj_mul(double a, double b) { return a * b; }
std::complex<double> conj_mul(std::complex<double> a, std::complex<double> b) { return std::conj(a) * b; }

template <class T>
std::complex<double> inner(const BulkBoundary<T>& F, const BulkBoundary<T>& G, const PhysicalParams& p,
                           Quadrature rule)
{
    check_pair(F, G, p);
    const auto w = quadrature_weights(F.grid, rule);
    T bulk{};
    for (std::size_t i = 0; i < w.size(); ++i)
        bulk += w[i] * conj_mul(F.bulk[i], G.bulk[i]);
    T bdy{};
    for (std::size_t j = 0; j < F.boundary.size(); ++j)
        bdy += conj_mul(F.boundary[j], G.boundary[j]);
    return std::complex<double>(bulk) + p.c * std::complex<double>(bdy);
}

template <class T>
double magnitude(T v) { return std::abs(v); }

} // namespace

std::complex<double> weighted_inner_product(const BulkBoundaryFunction& F, const BulkBoundaryFunction& G,
                                            const PhysicalParams& p, Quadrature rule)
{
    return inner(F, G, p, rule);
}

std::complex<double> weighted_inner_product(const ComplexBulkBoundaryFunction& F,
                                            const ComplexBulkBoundaryFunction& G, const PhysicalParams& p,
                                            Quadrature rule)
{
    return inner(F, G, p, rule);
}

double weighted_norm(const BulkBoundaryFunction& F, const PhysicalParams& p, Quadrature rule)
{
    return std::sqrt(std::max(0.0, weighted_inner_product(F, F, p, rule).real()));
}

double symplectic_form(const CauchyData& A, const CauchyData& B, const PhysicalParams& p, Quadrature rule)
{
    check_pair(A.position, B.position, p);
    const auto w = quadrature_weights(A.position.grid, rule);
    double bulk = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        bulk += w[i] * (A.position.bulk[i] * B.velocity.bulk[i] - A.velocity.bulk[i] * B.position.bulk[i]);
    double bdy = 0.0;
    for (std::size_t j = 0; j < A.position.boundary.size(); ++j)
        bdy += A.position.boundary[j] * B.velocity.boundary[j] - A.velocity.boundary[j] * B.position.boundary[j];
    return bulk + p.c * bdy;
}

template <class T>
std::vector<T> trace(const BulkBoundary<T>& F)
{
    std::vector<T> out;
    out.push_back(F.bulk.front());
    if (F.boundary.size() == 2)
        out.push_back(F.bulk.back());
    return out;
}

template <class T>
bool compatibility_check(const BulkBoundary<T>& F, double tol)
{
    const auto tr = trace(F);
    for (std::size_t j = 0; j < tr.size(); ++j) {
        const double diff = magnitude(tr[j] - F.boundary[j]);
        const double scale = std::max(magnitude(tr[j]), magnitude(F.boundary[j]));
        if (!(diff <= tol * scale))
            return false;
    }
    return true;
}

template std::vector<double> trace(const BulkBoundary<double>&);
template std::vector<std::complex<double>> trace(const BulkBoundary<std::complex<double>>&);
template bool compatibility_check(const BulkBoundary<double>&, double);
template bool compatibility_check(const BulkBoundary<std::complex<double>>&, double);

} // namespace wentzell
