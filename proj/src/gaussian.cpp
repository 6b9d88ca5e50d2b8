#include "cifc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>

#include "cifc/errors.hpp"

namespace cifc {

namespace {

void require_k(int K, int minimum) {
    if (K < minimum) throw DomainError("K must be at least " + std::to_string(minimum) + ", got " + std::to_string(K));
}

double sq(double x) { return x * x; }

// v^T Sigma conj(v) for the conjugated channel vector v.
double quadratic_form(const std::array<Complex, 4>& s, Complex v0, Complex v1) {
    const Complex value = v0 * s[0] * std::conj(v0) + v0 * s[1] * std::conj(v1) + v1 * s[2] * std::conj(v0) +
                          v1 * s[3] * std::conj(v1);
    return value.real();
}

std::vector<Complex> rho_points(const RhoGrid& grid) {
    std::vector<Complex> points{Complex(0.0, 0.0)};
    for (int m = 1; m < grid.magnitudes; ++m) {
        const double r = grid.magnitudes == 1 ? 1.0 : static_cast<double>(m) / (grid.magnitudes - 1);
        for (int k = 0; k < grid.phases; ++k) {
            points.push_back(std::polar(r, 2.0 * std::numbers::pi * k / grid.phases));
        }
    }
    return points;
}

Complex safe_ratio(Complex num, Complex den) { return std::abs(den) == 0.0 ? Complex(0.0, 0.0) : num / den; }

}  // namespace

GaussianSymParams GaussianSymParams::from_snr(int K, double snr, double alpha, double beta, Complex h_kk,
                                              double theta_i, double theta_c) {
    if (!(snr > 0.0)) throw DomainError("snr must be positive");
    return from_gains(K, std::sqrt(snr), std::polar(std::pow(snr, alpha / 2.0), theta_i),
                      std::polar(std::pow(snr, beta / 2.0), theta_c), h_kk);
}

GaussianSymParams GaussianSymParams::from_gains(int K, double h_d, Complex h_i, Complex h_c, Complex h_kk) {
    require_k(K, 2);
    if (h_d < 0.0) throw DomainError("h_d is a magnitude and must be nonnegative");
    return {K, h_d, h_i, h_c, h_kk};
}

// ---------------------------------------------------------------------------

std::array<Complex, 4> CorrelationTriple::sigma() const {
    const Complex off = rho_3 - rho_1 * std::conj(rho_2);
    return {Complex(1.0 - std::norm(rho_1), 0.0), off, std::conj(off), Complex(1.0 - std::norm(rho_2), 0.0)};
}

bool CorrelationTriple::feasible(double tol) const {
    const auto s = sigma();
    if (s[0].real() < -tol || s[3].real() < -tol) return false;
    return s[0].real() * s[3].real() - std::norm(s[1]) >= -tol;
}

RhoGrid RhoGrid::parse(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw std::invalid_argument("rho grid must look like 9x8, got '" + text + "'");
    RhoGrid grid;
    try {
        std::size_t used = 0;
        grid.magnitudes = std::stoi(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("trailing characters");
        const auto tail = text.substr(x + 1);
        grid.phases = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::logic_error&) {
        throw std::invalid_argument("rho grid must look like 9x8, got '" + text + "'");
    }
    if (grid.magnitudes < 1 || grid.phases < 1) throw std::invalid_argument("rho grid dimensions must be positive");
    return grid;
}

RhoGrid RhoGrid::from_env() {
    const char* value = std::getenv("CIFC_RHO_GRID");
    if (value == nullptr || *value == '\0') return {};
    return parse(value);
}

std::string RhoGrid::str() const { return std::to_string(magnitudes) + "x" + std::to_string(phases); }

StrongCheck strong_conditions_hold(const GaussianSymParams& p, const RhoGrid& grid, bool psd_only) {
    if (p.K != 3) throw DomainError("the strong-interference conditions are stated for K = 3");
    StrongCheck check;
    check.grid = grid;
    check.direct_link_ok = std::norm(p.h_kk) <= std::norm(p.h_c);
    check.worst_margin = std::numeric_limits<double>::infinity();

    const Complex h2_0(p.h_d, 0.0);
    const Complex h1_0 = p.h_i;
    const Complex shared = p.h_c;
    const auto points = rho_points(grid);
    // Sigma carries rounding of order 1e-16 even where a grid point makes an
    // entry vanish exactly; scale the tolerance with the channel energy.
    const double energy = std::max({1.0, std::pow(std::abs(h1_0) + std::abs(shared), 2),
                                    std::pow(std::abs(h2_0) + std::abs(shared), 2)});
    const double tol = 1e-9 * energy;
    bool grid_ok = true;
    for (const auto& r1 : points) {
        for (const auto& r2 : points) {
            for (const auto& r3 : points) {
                const CorrelationTriple t{r1, r2, r3};
                if (psd_only && !t.feasible(1e-12)) continue;
                ++check.points_checked;
                const auto s = t.sigma();
                const double lhs = quadratic_form(s, h2_0, shared);
                const double rhs = quadratic_form(s, h1_0, shared);
                const double margin = rhs - lhs;
                if (margin < check.worst_margin) {
                    check.worst_margin = margin;
                    check.witness = t;
                }
                if (margin < -tol) grid_ok = false;
            }
        }
    }
    check.holds = check.direct_link_ok && grid_ok;
    return check;
}

double sum_outer_strong(const GaussianSymParams& p) {
    return std::log2(1.0 + sq(std::abs(p.h_i) + p.h_d + std::abs(p.h_c)));
}

double sum_inner_compound_mac(const GaussianSymParams& p) {
    return std::log2(1.0 + sq(std::abs(p.h_c) + std::sqrt(sq(p.h_d) + std::norm(p.h_i))));
}

double k_user_outer(const GaussianSymParams& p) {
    require_k(p.K, 3);
    const double k = p.K;
    const double hi = std::abs(p.h_i);
    const double hc = std::abs(p.h_c);
    return std::log2(1.0 + sq(p.h_d + (k - 2.0) * hi + hc)) +
           (k - 2.0) * std::log2(1.0 + std::norm(Complex(p.h_d, 0.0) - p.h_i) / 2.0) + (k - 2.0) +
           std::log2(1.0 + std::norm(p.h_kk) / (1.0 + (k - 1.0) * sq(hc)));
}

// ---------------------------------------------------------------------------

std::string to_string(Thm5Case c) {
    switch (c) {
        case Thm5Case::Case1: return "Case1";
        case Thm5Case::Case2: return "Case2";
        case Thm5Case::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

Thm5Case thm5_case(const GaussianSymParams& p, bool literal_hkk) {
    require_k(p.K, 3);
    const double hc2 = std::norm(p.h_c);
    if ((p.K - 1) * std::norm(p.h_i) > hc2 || hc2 > sq(p.h_d)) return Thm5Case::NotApplicable;
    const double own = literal_hkk ? std::abs(p.h_kk) : std::norm(p.h_kk);
    return own <= hc2 ? Thm5Case::Case1 : Thm5Case::Case2;
}

bool PowerSplit::within_power(double tol) const {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (std::norm(alpha[i]) + std::norm(gamma[i]) > 1.0 + tol) return false;
    }
    return std::norm(gamma_K) + static_cast<double>(alpha.size()) * std::norm(beta_K) <= 1.0 + tol;
}

double Thm5Rates::sum() const { return std::accumulate(rates.begin(), rates.end(), 0.0); }

Thm5Rates thm5_achievable(const GaussianSymParams& p, bool literal_hkk) {
    Thm5Rates out;
    out.which = thm5_case(p, literal_hkk);
    if (out.which == Thm5Case::NotApplicable) {
        throw DomainError("power-split scheme needs (K-1)|h_i|^2 <= |h_c|^2 <= |h_d|^2");
    }
    const int K = p.K;
    const double k = K;
    const auto primaries = static_cast<std::size_t>(K - 1);
    const double hc2 = std::norm(p.h_c);
    const double root = std::sqrt(k - 1.0);
    const Complex ratio = safe_ratio(p.h_i, p.h_c);

    if (out.which == Thm5Case::Case1) {
        out.split.alpha.assign(primaries, ratio);
        out.split.gamma.assign(primaries, Complex(0.0, 0.0));
        out.split.beta_K = ratio;
        out.split.gamma_K = Complex(0.0, 0.0);

        out.rates.push_back(std::log2(1.0 + sq(1.0 - 1.0 / root) * sq(p.h_d)));
        for (int i = 2; i <= K - 1; ++i) {
            out.rates.push_back(std::log2(1.0 + std::norm(Complex(p.h_d, 0.0) - p.h_i)));
        }
        out.rates.push_back(0.0);
    } else {
        const double gamma = std::sqrt(1.0 / (1.0 + (k - 1.0) * hc2));
        const Complex zf = ratio * std::sqrt(1.0 - gamma * gamma);
        out.split.alpha.assign(primaries, zf);
        out.split.gamma.assign(primaries, Complex(gamma, 0.0));
        out.split.beta_K = zf;
        out.split.gamma_K = Complex(gamma, 0.0);

        const double primary = std::log2(1.0 + sq(k - 1.0) / (k * k - 2.0) * sq((root - 1.0) / root) * sq(p.h_d));
        out.rates.assign(primaries, primary);
        out.rates.push_back(std::log2(1.0 + std::norm(p.h_kk) / (1.0 + (k - 1.0) * hc2)));
    }
    if (!out.split.within_power(1e-12)) throw std::logic_error("constructed power split violates the power constraint");
    return out;
}

double thm5_gap_bound(int K, Thm5Case which) {
    require_k(K, 3);
    const double k = K;
    const double root = std::sqrt(k - 1.0);
    const double core = sq(2.0 * root + k - 2.0) / sq(root - 1.0);
    switch (which) {
        case Thm5Case::Case1: return std::log2(core) + (k - 1.0);
        case Thm5Case::Case2: {
            const double inflation = (k * k - 2.0) / sq(k - 1.0);
            return std::log2(inflation * core) + (k - 2.0) * std::log2(inflation * sq(root + 1.0) / sq(root - 1.0));
        }
        case Thm5Case::NotApplicable: break;
    }
    throw DomainError("no gap bound outside the two power-split cases");
}

double dpc_reference_gap(int K) {
    require_k(K, 3);
    if (K == 3) return 6.0;
    return (K - 2) * std::log2(static_cast<double>(K - 2)) + 3.88;
}

// ---------------------------------------------------------------------------

std::string to_string(GdofModel model) {
    switch (model) {
        case GdofModel::CMS: return "CMS";
        case GdofModel::BC: return "BC";
        case GdofModel::IFC: return "IFC";
    }
    return "CMS";
}

GdofModel parse_gdof_model(const std::string& text) {
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "cms") return GdofModel::CMS;
    if (lower == "bc") return GdofModel::BC;
    if (lower == "ifc") return GdofModel::IFC;
    throw std::invalid_argument("unknown gDoF model '" + text + "' (cms, bc, ifc)");
}

Rational gdof(GdofModel model, int K, const Rational& alpha) {
    require_k(K, 2);
    if (alpha < Rational(0)) throw DomainError("alpha must be nonnegative");
    const Rational one(1);
    const Rational two(2);
    const Rational k(K);
    switch (model) {
        case GdofModel::CMS: return k * std::max(one, alpha) - alpha;
        case GdofModel::BC: return k * std::max(one, alpha);
        case GdofModel::IFC:
            return k * std::min({one, std::max(alpha / two, one - alpha / two), std::max(alpha, one - alpha)});
    }
    return Rational(0);
}

double gdof(GdofModel model, int K, double alpha) {
    require_k(K, 2);
    if (!(alpha >= 0.0)) throw DomainError("alpha must be nonnegative");
    switch (model) {
        case GdofModel::CMS: return K * std::max(1.0, alpha) - alpha;
        case GdofModel::BC: return K * std::max(1.0, alpha);
        case GdofModel::IFC:
            return K * std::min({1.0, std::max(alpha / 2.0, 1.0 - alpha / 2.0), std::max(alpha, 1.0 - alpha)});
    }
    return 0.0;
}

int lda_exponent_map(Complex h) {
    const double power = 1.0 + std::norm(h);
    if (!std::isfinite(power)) throw DomainError("channel gain must be finite");
    int n = static_cast<int>(std::floor(std::log2(power)));
    // log2 can land a hair off at exact powers of two
    while (n > 0 && std::ldexp(1.0, n) > power) --n;
    while (std::ldexp(1.0, n + 1) <= power) ++n;
    return n;
}

}  // namespace cifc
