#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cifc/gaussian.hpp"
#include "cifc/lda_bounds.hpp"
#include "cifc/rational.hpp"

namespace cifc {

/// Deterministic "%.10g" rendering used by every CSV.
std::string format_number(double value);
std::string format_number(const Rational& value);

// --- regime map ------------------------------------------------------------

struct RegimeRow {
    Rational alpha;
    Rational beta;
    RegimeLabel label;
    Rational cms_bound;
    Rational ifccr_bound;
};

/// Grid points alpha = 0, step, ..., alpha_max (inclusive), alpha-major.
std::vector<RegimeRow> regime_map(const Rational& alpha_max, const Rational& beta_max, const Rational& step,
                                  bool n33_condition = true);
/// Columns: alpha,beta,label,cms_bound,ifccr_bound
std::string regime_map_csv(const std::vector<RegimeRow>& rows);

// --- gDoF curves -----------------------------------------------------------

struct GdofRow {
    GdofModel model = GdofModel::CMS;
    int K = 0;
    Rational alpha;
    Rational value;
    [[nodiscard]] Rational normalized() const { return value / Rational(K); }
};

std::vector<GdofRow> gdof_curves(const std::vector<GdofModel>& models, const std::vector<int>& Ks,
                                 const Rational& alpha_max, const Rational& step);
/// Columns: model,K,alpha,gdof,normalized_gdof
std::string gdof_csv(const std::vector<GdofRow>& rows);

// --- Gaussian gap sweep ----------------------------------------------------

struct GapSweepSpec {
    std::vector<double> snrs{1.0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
    // three-user strong interference; |h_33| = |h_c|
    std::vector<double> strong_alphas{1.0, 1.25, 1.5, 2.0, 3.0};
    std::vector<double> strong_betas{0.0, 0.5, 1.0, 2.0};
    RhoGrid grid;
    bool psd_only = true;
    // K-user power split; |h_KK|^2 = snr^e for e in own_exponents
    std::vector<int> Ks{3, 4, 5, 6};
    std::vector<double> split_alphas{0.0, 0.1, 0.2, 0.3, 0.4};
    std::vector<double> split_betas{0.3, 0.6, 0.8, 1.0};
    std::vector<double> own_exponents{0.0, 0.5, 1.0};
    bool literal_hkk = false;
};

struct GapRow {
    std::string theorem;  // "strong" or "power-split"
    int K = 3;
    double snr = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double hkk_sq = 0.0;
    std::string status;  // certified/uncertified, Case1/Case2/NotApplicable
    std::optional<double> outer;
    std::optional<double> inner;
    std::optional<double> gap_bound;
    bool power_ok = true;

    [[nodiscard]] bool evaluated() const { return outer.has_value() && inner.has_value(); }
    [[nodiscard]] double gap() const { return *outer - *inner; }
    /// 0 <= gap <= gap_bound up to `tol`.
    [[nodiscard]] bool within(double tol = 1e-9) const;
};

std::vector<GapRow> gap_sweep(const GapSweepSpec& spec);
/// Columns: theorem,K,snr,alpha,beta,hkk_sq,status,outer,inner,gap,gap_bound,within
std::string gap_sweep_csv(const std::vector<GapRow>& rows);

}  // namespace cifc
