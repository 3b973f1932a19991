#include "wentzell/sobolev.hpp"

#include "wentzell/error.hpp"

#include <cmath>
#include <string>

namespace wentzell {

namespace {

template <class T>
double norm_impl(const std::vector<T>& coeffs, const ModeTable& table, double r, double k)
{
    if (coeffs.size() > table.size())
        throw Error(ErrorKind::validation, "more coefficients than modes in the table");
    double acc = 0.0;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        const double mag2 = std::norm(std::complex<double>(coeffs[m]));
        if (mag2 == 0.0)
            continue;
        const double w2 = std::pow(table.omega(m, k), 2);
        if (w2 == 0.0 && r < 0.0)
            throw Error(ErrorKind::domain, "norm with r = " + std::to_string(r) +
                                               " is undefined: mode " + std::to_string(m) + " has omega = 0");
        acc += (r == 0.0 ? 1.0 : std::pow(w2, r)) * mag2;
    }
    return std::sqrt(acc);
}

} // namespace

double spectral_sobolev_norm(const std::vector<double>& coeffs, const ModeTable& table, double r, double k)
{
    return norm_impl(coeffs, table, r, k);
}

double spectral_sobolev_norm(const std::vector<std::complex<double>>& coeffs, const ModeTable& table, double r,
                             double k)
{
    return norm_impl(coeffs, table, r, k);
}

} // namespace wentzell
