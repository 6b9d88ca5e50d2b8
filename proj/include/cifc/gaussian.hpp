#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cifc/rational.hpp"

namespace cifc {

using Complex = std::complex<double>;

/// Symmetric K-user Gaussian channel: direct gain h_d (real, nonnegative),
/// primary cross gain h_i, cognitive-to-primary gain h_c and cognitive direct
/// gain h_KK. Rates are in bits per channel use.
struct GaussianSymParams {
    int K = 3;
    double h_d = 0.0;
    Complex h_i{0.0, 0.0};
    Complex h_c{0.0, 0.0};
    Complex h_kk{0.0, 0.0};

    /// |h_d|^2 = snr, |h_i|^2 = snr^alpha, |h_c|^2 = snr^beta with phases
    /// theta_i and theta_c on the cross gains.
    static GaussianSymParams from_snr(int K, double snr, double alpha, double beta, Complex h_kk,
                                      double theta_i = 0.0, double theta_c = 0.0);
    static GaussianSymParams from_gains(int K, double h_d, Complex h_i, Complex h_c, Complex h_kk);
};

/// Correlations of a jointly Gaussian (X_1, X_2, X_3).
struct CorrelationTriple {
    Complex rho_1{0.0, 0.0};
    Complex rho_2{0.0, 0.0};
    Complex rho_3{0.0, 0.0};

    /// Conditional covariance of (X_2, X_3) given X_1, row-major 2x2.
    [[nodiscard]] std::array<Complex, 4> sigma() const;
    /// The 3x3 correlation matrix is positive semidefinite.
    [[nodiscard]] bool feasible(double tol = 1e-12) const;
};

struct RhoGrid {
    int magnitudes = 9;  // 0, 1/(n-1), ..., 1
    int phases = 8;      // 2*pi*k/n

    /// "MxP", e.g. "9x8".
    static RhoGrid parse(const std::string& text);
    /// Default grid, overridden by the CIFC_RHO_GRID environment variable.
    static RhoGrid from_env();
    [[nodiscard]] std::string str() const;
};

struct StrongCheck {
    bool holds = false;
    bool direct_link_ok = false;  // |h_33|^2 <= |h_c|^2
    std::optional<CorrelationTriple> witness;
    double worst_margin = 0.0;  // min over the grid of h1'Sh1 - h2'Sh2
    std::size_t points_checked = 0;
    RhoGrid grid;
};

/// Strong-interference conditions for K = 3, certified on a grid of
/// correlation triples. With psd_only, infeasible triples are skipped.
/// A failure is conclusive; success only holds at the sampled density.
StrongCheck strong_conditions_hold(const GaussianSymParams& p, const RhoGrid& grid = RhoGrid::from_env(),
                                   bool psd_only = true);

/// log2(1 + (|h_i| + |h_d| + |h_c|)^2)
double sum_outer_strong(const GaussianSymParams& p);
/// log2(1 + (|h_c| + sqrt(|h_d|^2 + |h_i|^2))^2)
double sum_inner_compound_mac(const GaussianSymParams& p);

/// K-user CMS sum-capacity outer bound at jointly Gaussian inputs.
double k_user_outer(const GaussianSymParams& p);

enum class Thm5Case { Case1, Case2, NotApplicable };
std::string to_string(Thm5Case c);

/// Case1 when |h_KK|^2 <= |h_c|^2 and (K-1)|h_i|^2 <= |h_c|^2 <= |h_d|^2,
/// Case2 when |h_KK|^2 > |h_c|^2 under the same cross-gain ordering.
/// With literal_hkk the unsquared |h_KK| is compared against |h_c|^2.
Thm5Case thm5_case(const GaussianSymParams& p, bool literal_hkk = false);

/// X_i = alpha_i T_iZF + gamma_i T_ip for i < K, X_K = -beta_K sum T_iZF + gamma_K T_Kp.
struct PowerSplit {
    std::vector<Complex> alpha;  // i = 1..K-1
    std::vector<Complex> gamma;  // i = 1..K-1
    Complex beta_K{0.0, 0.0};
    Complex gamma_K{0.0, 0.0};

    [[nodiscard]] bool within_power(double tol = 1e-12) const;
};

struct Thm5Rates {
    Thm5Case which = Thm5Case::NotApplicable;
    PowerSplit split;
    std::vector<double> rates;
    [[nodiscard]] double sum() const;
};

/// Zero-forcing power-split scheme: rates per user. Throws DomainError when
/// thm5_case is NotApplicable.
Thm5Rates thm5_achievable(const GaussianSymParams& p, bool literal_hkk = false);

/// Closed-form gap between k_user_outer and the scheme's sum rate.
double thm5_gap_bound(int K, Thm5Case which);

/// Published gap of the cumulative-knowledge DPC scheme: 6 bits for K = 3,
/// (K-2)log2(K-2) + 3.88 for K >= 4. Reference only.
double dpc_reference_gap(int K);

enum class GdofModel { CMS, BC, IFC };
std::string to_string(GdofModel model);
GdofModel parse_gdof_model(const std::string& text);

Rational gdof(GdofModel model, int K, const Rational& alpha);
double gdof(GdofModel model, int K, double alpha);

/// floor(log2(1 + |h|^2)).
int lda_exponent_map(Complex h);

}  // namespace cifc
