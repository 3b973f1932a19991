#pragma once

#include "wentzell/params.hpp"

#include <complex>
#include <vector>

namespace wentzell {

enum class Quadrature {
    trapezoid,
    /// Trapezoid with fourth-order end corrections (weights 3/8, 7/6, 23/24).
    corrected_trapezoid,
};

std::vector<double> quadrature_weights(const Grid1D& grid, Quadrature rule = Quadrature::corrected_trapezoid);

/// Element of L2(bulk) + L2(boundary). For the strip, boundary[0] sits at
/// z_min (the minus side) and boundary[1] at z_max; the half-space has a
/// single boundary value at z_min.
template <class T>
struct BulkBoundary {
    Grid1D grid;
    std::vector<T> bulk;
    std::vector<T> boundary;

    BulkBoundary(Grid1D g, std::vector<T> b, std::vector<T> bdy);
    static BulkBoundary zeros(const Grid1D& g, std::size_t n_boundary);
};

using BulkBoundaryFunction = BulkBoundary<double>;
using ComplexBulkBoundaryFunction = BulkBoundary<std::complex<double>>;

struct CauchyData {
    BulkBoundaryFunction position;
    BulkBoundaryFunction velocity;

    CauchyData(BulkBoundaryFunction pos, BulkBoundaryFunction vel);
};

std::complex<double> weighted_inner_product(const BulkBoundaryFunction& F, const BulkBoundaryFunction& G,
                                            const PhysicalParams& p,
                                            Quadrature rule = Quadrature::corrected_trapezoid);
std::complex<double> weighted_inner_product(const ComplexBulkBoundaryFunction& F,
                                            const ComplexBulkBoundaryFunction& G, const PhysicalParams& p,
                                            Quadrature rule = Quadrature::corrected_trapezoid);

double weighted_norm(const BulkBoundaryFunction& F, const PhysicalParams& p,
                     Quadrature rule = Quadrature::corrected_trapezoid);

double symplectic_form(const CauchyData& A, const CauchyData& B, const PhysicalParams& p,
                       Quadrature rule = Quadrature::corrected_trapezoid);

/// Bulk samples at the boundary node(s), in the same order as F.boundary.
template <class T>
std::vector<T> trace(const BulkBoundary<T>& F);

/// True when every stored boundary value matches the bulk trace:
/// |trace - b| <= tol * max(|trace|, |b|).
template <class T>
bool compatibility_check(const BulkBoundary<T>& F, double tol = 1e-9);

} // namespace wentzell
