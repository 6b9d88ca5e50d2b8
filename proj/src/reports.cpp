#include "cifc/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cifc/errors.hpp"

namespace cifc {

namespace {

std::vector<Rational> inclusive_grid(const Rational& max, const Rational& step) {
    if (!(step > Rational(0))) throw DomainError("grid step must be positive, got " + step.str());
    if (max < Rational(0)) throw DomainError("grid upper end must be nonnegative");
    std::vector<Rational> out;
    for (Rational x(0); x <= max; x += step) out.push_back(x);
    return out;
}

std::string optional_number(const std::optional<double>& value) { return value ? format_number(*value) : ""; }

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // folds -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

std::string format_number(const Rational& value) { return format_number(value.to_double()); }

std::vector<RegimeRow> regime_map(const Rational& alpha_max, const Rational& beta_max, const Rational& step,
                                  bool n33_condition) {
    std::vector<RegimeRow> rows;
    const auto betas = inclusive_grid(beta_max, step);
    for (const auto& alpha : inclusive_grid(alpha_max, step)) {
        for (const auto& beta : betas) {
            rows.push_back({alpha, beta, classify_regime(alpha, beta, n33_condition), sym_cms_outer(alpha, beta).value,
                            ifc_cr_outer(alpha, beta).value});
        }
    }
    return rows;
}

std::string regime_map_csv(const std::vector<RegimeRow>& rows) {
    std::ostringstream out;
    out << "alpha,beta,label,cms_bound,ifccr_bound\n";
    for (const auto& r : rows) {
        out << format_number(r.alpha) << ',' << format_number(r.beta) << ',' << to_string(r.label.regime) << ','
            << format_number(r.cms_bound) << ',' << format_number(r.ifccr_bound) << '\n';
    }
    return out.str();
}

std::vector<GdofRow> gdof_curves(const std::vector<GdofModel>& models, const std::vector<int>& Ks,
                                 const Rational& alpha_max, const Rational& step) {
    std::vector<GdofRow> rows;
    const auto alphas = inclusive_grid(alpha_max, step);
    for (auto model : models) {
        for (int K : Ks) {
            for (const auto& alpha : alphas) rows.push_back({model, K, alpha, gdof(model, K, alpha)});
        }
    }
    return rows;
}

std::string gdof_csv(const std::vector<GdofRow>& rows) {
    std::ostringstream out;
    out << "model,K,alpha,gdof,normalized_gdof\n";
    for (const auto& r : rows) {
        out << to_string(r.model) << ',' << r.K << ',' << format_number(r.alpha) << ',' << format_number(r.value) << ','
            << format_number(r.normalized()) << '\n';
    }
    return out.str();
}

bool GapRow::within(double tol) const {
    if (!evaluated() || !gap_bound || !power_ok) return false;
    const double g = gap();
    return g >= -tol && g <= *gap_bound + tol;
}

std::vector<GapRow> gap_sweep(const GapSweepSpec& spec) {
    std::vector<GapRow> rows;
    for (double snr : spec.snrs) {
        for (double alpha : spec.strong_alphas) {
            for (double beta : spec.strong_betas) {
                auto p = GaussianSymParams::from_snr(3, snr, alpha, beta, {0.0, 0.0});
                p.h_kk = p.h_c;
                GapRow row{"strong", 3, snr, alpha, beta, std::norm(p.h_kk), "uncertified", {}, {}, 3.0};
                if (strong_conditions_hold(p, spec.grid, spec.psd_only).holds) {
                    row.status = "certified";
                    row.outer = sum_outer_strong(p);
                    row.inner = sum_inner_compound_mac(p);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    for (int K : spec.Ks) {
        for (double snr : spec.snrs) {
            for (double alpha : spec.split_alphas) {
                for (double beta : spec.split_betas) {
                    for (double e : spec.own_exponents) {
                        const double hkk = std::pow(snr, e / 2.0);
                        const auto p = GaussianSymParams::from_snr(K, snr, alpha, beta, {hkk, 0.0});
                        const auto which = thm5_case(p, spec.literal_hkk);
                        GapRow row{"power-split", K, snr, alpha, beta, hkk * hkk, to_string(which), {}, {}, {}};
                        if (which != Thm5Case::NotApplicable) {
                            const auto scheme = thm5_achievable(p, spec.literal_hkk);
                            row.outer = k_user_outer(p);
                            row.inner = scheme.sum();
                            row.gap_bound = thm5_gap_bound(K, which);
                            row.power_ok = scheme.split.within_power();
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return rows;
}

std::string gap_sweep_csv(const std::vector<GapRow>& rows) {
    std::ostringstream out;
    out << "theorem,K,snr,alpha,beta,hkk_sq,status,outer,inner,gap,gap_bound,within\n";
    for (const auto& r : rows) {
        out << r.theorem << ',' << r.K << ',' << format_number(r.snr) << ',' << format_number(r.alpha) << ','
            << format_number(r.beta) << ',' << format_number(r.hkk_sq) << ',' << r.status << ','
            << optional_number(r.outer) << ',' << optional_number(r.inner) << ','
            << (r.evaluated() ? format_number(r.gap()) : "") << ',' << optional_number(r.gap_bound) << ','
            << (r.evaluated() ? (r.within() ? "true" : "false") : "") << '\n';
    }
    return out.str();
}

}  // namespace cifc
