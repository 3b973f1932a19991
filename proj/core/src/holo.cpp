#include "wentzell/holo.hpp"

#include "wentzell/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wentzell {

namespace {

constexpr double pi = std::numbers::pi;

std::string pair_name(std::size_t a, std::size_t b)
{
    return "modes " + std::to_string(a) + " and " + std::to_string(b);
}

} // namespace

double bump_chi(double u)
{
    const double v = 1.0 - 4.0 * u * u;
    if (!(v > 0.0))
        return 0.0;
    return std::exp(1.0 - 1.0 / v);
}

double choose_a(const ModeTable& table, std::size_t M, std::size_t m_first, double safety)
{
    if (M < 1)
        throw Error(ErrorKind::validation, "choose_a needs M >= 1");
    if (M > table.M_max() || m_first > M)
        throw Error(ErrorKind::validation, "invalid mode range for choose_a");
    if (!(safety > 0.0 && safety < 1.0))
        throw Error(ErrorKind::validation, "safety factor must lie in (0, 1)");
    const double w0 = table.omega(m_first);
    if (!(w0 > 0.0))
        throw Error(ErrorKind::domain, "mode " + std::to_string(m_first) +
                                           " has omega = 0; exclude it or regulate the mass");
    double bound = 1.0 / (w0 * w0);
    for (std::size_t m = m_first + 1; m <= M; ++m) {
        const double gap = table[m].q * table[m].q - table[m - 1].q * table[m - 1].q;
        if (!(gap > 0.0))
            throw Error(ErrorKind::numerical, "non-increasing q sequence at " + pair_name(m - 1, m));
        bound = std::max(bound, 1.0 / gap);
    }
    return bound / safety;
}

FreqExtension::FreqExtension(std::vector<double> omegas, std::vector<std::complex<double>> plus,
                             std::vector<std::complex<double>> minus, double a, std::size_t m_first)
    : omegas_(std::move(omegas)), plus_(std::move(plus)), minus_(std::move(minus)), a_(a), m_first_(m_first)
{
}

std::pair<double, double> FreqExtension::support(std::size_t m) const
{
    const double w2 = omegas_.at(m) * omegas_.at(m);
    const double half = 0.5 / a_;
    return {std::sqrt(std::max(0.0, w2 - half)), std::sqrt(w2 + half)};
}

std::complex<double> FreqExtension::operator()(double omega) const
{
    if (omega == 0.0 || omegas_.empty())
        return 0.0;
    const double w2 = omega * omega;
    const double half = 0.5 / a_;
    auto it = std::lower_bound(omegas_.begin() + static_cast<std::ptrdiff_t>(m_first_), omegas_.end(), w2,
                               [](double wm, double x) { return wm * wm < x; });
    for (int k = 0; k < 2; ++k) {
        auto cand = it - k;
        if (cand < omegas_.begin() + static_cast<std::ptrdiff_t>(m_first_) || cand >= omegas_.end())
            continue;
        const double wm = *cand;
        if (std::abs(w2 - wm * wm) < half) {
            const auto m = static_cast<std::size_t>(cand - omegas_.begin());
            const double chi = bump_chi(a_ * (w2 - wm * wm));
            return chi * (omega > 0.0 ? plus_[m] : minus_[m]);
        }
    }
    return 0.0;
}

FreqExtension extend_to_schwartz(const std::vector<std::complex<double>>& plus,
                                 const std::vector<std::complex<double>>& minus, const ModeTable& table, double a,
                                 std::size_t m_first)
{
    if (!(a > 0.0))
        throw Error(ErrorKind::validation, "bump scale a must be positive");
    if (plus.size() != minus.size() || plus.empty() || plus.size() > table.size())
        throw Error(ErrorKind::validation, "coefficient vectors must have equal length within the table");
    const std::size_t M = plus.size() - 1;
    if (m_first > M)
        throw Error(ErrorKind::validation, "m_first exceeds the cutoff");
    std::vector<double> omegas(M + 1);
    for (std::size_t m = 0; m <= M; ++m)
        omegas[m] = table.omega(m);
    const double half = 0.5 / a;
    const double w0 = omegas[m_first];
    if (!(w0 * w0 - half > 0.0))
        throw Error(ErrorKind::domain, "bump of mode " + std::to_string(m_first) +
                                           " reaches omega = 0, so the +/- sectors overlap");
    for (std::size_t m = m_first + 1; m <= M; ++m) {
        const double hi_prev = omegas[m - 1] * omegas[m - 1] + half;
        const double lo_next = omegas[m] * omegas[m] - half;
        if (!(hi_prev <= lo_next))
            throw Error(ErrorKind::domain, "bump supports overlap for " + pair_name(m - 1, m));
    }
    return FreqExtension(std::move(omegas), plus, minus, a, m_first);
}

namespace {

HoloImage dual_core(const SmearedCoefficients& coeffs, const ModeTable& table, std::size_t M, std::size_t m_first,
                    double a, const HoloOptions& opt)
{
    HoloImage img;
    img.coeffs = coeffs;
    std::vector<std::complex<double>> vp(M + 1, 0.0);
    std::vector<std::complex<double>> vm(M + 1, 0.0);
    for (std::size_t m = m_first; m <= M; ++m) {
        const double d = table[m].boundary_value(Side::plus);
        vp[m] = coeffs.plus[m] / d;
        vm[m] = coeffs.minus[m] / d;
    }
    img.extension = extend_to_schwartz(vp, vm, table, a, m_first);

    if (!(opt.t_hi > opt.t_lo) || opt.n_t < 2)
        throw Error(ErrorKind::validation, "invalid time grid for the holographic image");
    const Grid1D tg(opt.t_lo, opt.t_hi, opt.n_t);
    img.t = tg.nodes();
    const double T = std::max(std::abs(opt.t_lo), std::abs(opt.t_hi));
    std::vector<std::complex<double>> P(img.t.size(), 0.0);
    std::vector<std::complex<double>> N(img.t.size(), 0.0);
    const double norm = 1.0 / std::sqrt(2.0 * pi);
    std::size_t nb_used = 0;

    std::vector<std::pair<double, std::complex<double>>> samples;
    for (std::size_t m = m_first; m <= M; ++m) {
        const auto [lo, hi] = img.extension.support(m);
        const double W = hi - lo;
        const auto nb = std::max<std::size_t>(
            {opt.samples_per_bump, std::size_t{16}, static_cast<std::size_t>(std::ceil(4.0 * W * T / pi)) + 1});
        nb_used = std::max(nb_used, nb);
        const double dw = W / static_cast<double>(nb);
        for (std::size_t j = 1; j < nb; ++j) {
            const double w = lo + dw * static_cast<double>(j);
            const std::complex<double> fp = img.extension(w);
            const std::complex<double> fm = img.extension(-w);
            samples.emplace_back(w, fp);
            samples.emplace_back(-w, fm);
            for (std::size_t k = 0; k < img.t.size(); ++k) {
                const double ph = w * img.t[k];
                const std::complex<double> e(std::cos(ph), -std::sin(ph));
                P[k] += norm * dw * fp * e;
                N[k] += norm * dw * fm * std::conj(e);
            }
        }
    }
    std::sort(samples.begin(), samples.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [w, v] : samples) {
        img.omega.push_back(w);
        img.fhat.push_back(v);
    }
    img.f_prime.resize(img.t.size());
    img.envelope.resize(img.t.size());
    for (std::size_t k = 0; k < img.t.size(); ++k) {
        img.f_prime[k] = P[k] + N[k];
        img.envelope[k] = std::abs(P[k]) + std::abs(N[k]);
    }
    img.meta.params = table.params();
    img.meta.M = M;
    img.meta.m_first = m_first;
    img.meta.a = a;
    img.meta.mu_used = table.params().mu;
    img.meta.samples_per_bump = nb_used;
    return img;
}

} // namespace

HoloImage holographic_dual(const TestFunction& f, const ModeTable& input_table, const HoloOptions& opt)
{
    const bool massless = input_table.params().mu == 0.0;
    const bool regulate = massless && opt.zero_mode == ZeroModePolicy::regulate;
    if (regulate && !(opt.mu_reg > 0.0))
        throw Error(ErrorKind::validation, "regulator mass must be positive");
    const ModeTable table = regulate ? input_table.with_mu(opt.mu_reg) : input_table;
    const std::size_t m_first = (massless && !regulate) ? 1 : 0;
    if (table.M_max() < m_first + 1)
        throw Error(ErrorKind::validation, "mode table too small for the holographic dual");

    const auto coeffs = smeared_coeffs(f, table, opt.smearing);
    double total = 0.0;
    for (std::size_t m = m_first; m < coeffs.size(); ++m)
        total += std::norm(coeffs.plus[m]) + std::norm(coeffs.minus[m]);

    std::vector<std::string> warnings;
    std::size_t M = table.M_max();
    double retained = 1.0;
    if (opt.M) {
        M = *opt.M;
        if (M > table.M_max() || M <= m_first)
            throw Error(ErrorKind::validation, "cutoff M must lie in (m_first, M_max]");
    } else {
        double acc = 0.0;
        for (std::size_t m = m_first; m <= table.M_max(); ++m) {
            acc += std::norm(coeffs.plus[m]) + std::norm(coeffs.minus[m]);
            if (total > 0.0 && acc >= opt.energy_fraction * total) {
                M = std::max(m, m_first + 1);
                break;
            }
        }
        if (M == table.M_max())
            warnings.push_back("cutoff reached the end of the mode table; enlarge it to confirm convergence");
    }
    if (total > 0.0) {
        double acc = 0.0;
        for (std::size_t m = m_first; m <= M; ++m)
            acc += std::norm(coeffs.plus[m]) + std::norm(coeffs.minus[m]);
        retained = acc / total;
        if (retained < opt.energy_fraction)
            warnings.push_back("cutoff M = " + std::to_string(M) + " retains only " + std::to_string(retained) +
                               " of the coefficient energy");
    }
    const double a = opt.a ? *opt.a : choose_a(table, M, m_first);

    auto img = dual_core(coeffs, table, M, m_first, a, opt);
    img.meta.retained_fraction = retained;
    img.meta.warnings = std::move(warnings);
    img.meta.zero_mode = !massless ? "included (mu > 0)" : (regulate ? "regulated" : "excluded");
    if (regulate) {
        const auto half = table.with_mu(0.5 * opt.mu_reg);
        const auto c2 = smeared_coeffs(f, half, opt.smearing);
        const double a2 = opt.a ? *opt.a : choose_a(half, M, 0);
        const auto img2 = dual_core(c2, half, M, 0, a2, opt);
        double diff = 0.0;
        double scale = 0.0;
        for (std::size_t k = 0; k < img.t.size(); ++k) {
            diff = std::max(diff, std::abs(img.f_prime[k] - img2.f_prime[k]));
            scale = std::max(scale, std::abs(img.f_prime[k]));
        }
        img.meta.regulator_sensitivity = scale > 0.0 ? diff / scale : diff;
    }
    return img;
}

double verify_dual(const HoloImage& image, const SmearedCoefficients& coeffs, const ModeTable& table)
{
    const auto& ext = image.extension;
    double scale = 0.0;
    double diff = 0.0;
    for (std::size_t m = ext.m_first(); m <= ext.M(); ++m) {
        const double d = table[m].boundary_value(Side::plus);
        const double w = ext.omega(m);
        diff = std::max(diff, std::abs(ext(w) * d - coeffs.plus[m]));
        diff = std::max(diff, std::abs(ext(-w) * d - coeffs.minus[m]));
        scale = std::max({scale, std::abs(coeffs.plus[m]), std::abs(coeffs.minus[m])});
    }
    return scale > 0.0 ? diff / scale : diff;
}

PairingReport pairing_check(const HoloImage& f_image, const HoloImage& g_image, const ModeTable& table)
{
    const auto& ef = f_image.extension;
    const auto& eg = g_image.extension;
    if (ef.M() != eg.M() || ef.m_first() != eg.m_first())
        throw Error(ErrorKind::validation, "pairing needs images with the same mode range");
    PairingReport rep;
    for (std::size_t m = ef.m_first(); m <= ef.M(); ++m) {
        const double w = ef.omega(m);
        const double d = table[m].d_bdy;
        const double k = 2.0 * pi / (2.0 * w);
        rep.bulk += k * f_image.coeffs.minus[m] * g_image.coeffs.plus[m];
        rep.boundary += k * d * d * ef(-w) * eg(w);
    }
    const double scale = std::max(std::abs(rep.bulk), std::abs(rep.boundary));
    rep.rel_diff = scale > 0.0 ? std::abs(rep.bulk - rep.boundary) / scale : 0.0;
    return rep;
}

std::vector<Burst> detect_bursts(const std::vector<double>& t, const std::vector<double>& envelope,
                                 double threshold)
{
    std::vector<Burst> out;
    if (envelope.size() < 3 || t.size() != envelope.size())
        return out;
    const double peak = *std::max_element(envelope.begin(), envelope.end());
    for (std::size_t k = 1; k + 1 < envelope.size(); ++k) {
        const double e = envelope[k];
        if (e > envelope[k - 1] && e >= envelope[k + 1] && e > threshold * peak)
            out.push_back({t[k], e});
    }
    return out;
}

double fig2_tau(double s)
{
    if (!(std::abs(s) < 0.5))
        return 0.0;
    return std::exp(-1.0 / (s + 0.5) - 1.0 / (0.5 - s));
}

Fig2Result fig2_reproduce(const Fig2Config& cfg)
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0, 1);
    const auto table = build_table(cfg.M, p);
    TestFunction f;
    f.bulk = [](double t, double z) { return fig2_tau(t) * fig2_tau(z); };
    f.t_min = -0.5;
    f.t_max = 0.5;
    HoloOptions opt;
    opt.M = cfg.M;
    opt.a = cfg.a;
    opt.zero_mode = ZeroModePolicy::exclude;
    opt.smearing = SmearingGrid{-0.5, 0.5, 2000, 2048};
    opt.t_lo = cfg.t_lo;
    opt.t_hi = cfg.t_hi;
    opt.n_t = cfg.n_t;

    Fig2Result res;
    res.image = holographic_dual(f, table, opt);
    res.f00 = f.bulk(0.0, 0.0);
    res.reference.resize(res.image.t.size());
    for (std::size_t k = 0; k < res.image.t.size(); ++k)
        res.reference[k] = f.bulk(res.image.t[k], 0.0);
    res.bursts = detect_bursts(res.image.t, res.image.envelope, cfg.threshold);

    bool ok = !res.bursts.empty();
    for (double target : cfg.expected) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : res.bursts)
            best = std::min(best, std::abs(b.t - target));
        res.max_center_error = std::max(res.max_center_error, best);
        ok = ok && best <= cfg.tolerance;
    }
    for (const auto& b : res.bursts) {
        double best = std::numeric_limits<double>::infinity();
        for (double target : cfg.expected)
            best = std::min(best, std::abs(b.t - target));
        res.max_center_error = std::max(res.max_center_error, best);
        ok = ok && best <= cfg.tolerance;
    }
    res.centers_ok = ok;

    bool decay = true;
    for (int side : {-1, 1}) {
        std::vector<Burst> half;
        for (const auto& b : res.bursts)
            if (b.t * side > 0.0)
                half.push_back(b);
        std::sort(half.begin(), half.end(), [](const Burst& x, const Burst& y) { return std::abs(x.t) < std::abs(y.t); });
        for (std::size_t i = 1; i < half.size(); ++i)
            decay = decay && half[i].envelope < half[i - 1].envelope;
    }
    res.decay_ok = decay && !res.bursts.empty();
    return res;
}

} // namespace wentzell
