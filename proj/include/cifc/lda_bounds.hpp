#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cifc/lda.hpp"
#include "cifc/rational.hpp"

namespace cifc {

/// A named sum-rate bound in bits per channel use (normalized by n_d for the
/// symmetric forms) and the sub-expression that attained it.
struct BoundReport {
    std::string name;
    Rational value;
    std::string binding;
};

/// f(c, d | a, b) from the three-user LDA sum-rate bound.
int f_func(int c, int d, int a, int b);

/// Closed-form sum-rate outer bound of the three-user LDA CIFC-CMS:
///   max{n11, n12, n13} + f(n22, n23 | n12, n13) + [n33 - max{n13, n23}]^+
BoundReport cms_outer_sum(const LdaChannel& channel);

/// Exponents of the symmetric three-user LDA. alpha = n_i / n_d and
/// beta = n_c / n_d are exact.
struct SymLdaParams {
    int n_d = 1;
    int n_i = 0;
    int n_c = 0;
    int n_33 = 0;

    [[nodiscard]] Rational alpha() const { return {n_i, n_d}; }
    [[nodiscard]] Rational beta() const { return {n_c, n_d}; }
    /// n_33 <= max{n_13, n_23}; all bits Tx_3 delivers to Rx_3 are also seen by the primaries.
    [[nodiscard]] bool n33_condition() const { return n_33 <= n_c; }
    [[nodiscard]] LdaChannel channel() const { return LdaChannel::symmetric(n_d, n_i, n_c, n_33); }
};

/// Normalized CIFC-CMS sum bound r1 + r2 (valid when n33_condition holds).
BoundReport sym_cms_outer(const Rational& alpha, const Rational& beta);

/// Normalized IFC+CR sum bound: the minimum of its applicable constraints.
BoundReport ifc_cr_outer(const Rational& alpha, const Rational& beta);

enum class Regime {
    EqualAndAchievable,                    // IFC+CR knowledge attains the CMS outer bound
    OuterBoundsCoincideAchievabilityOpen,  // bounds coincide, achievability unknown
    Open,                                  // bounds differ
};

std::string_view to_string(Regime regime);

struct RegimeLabel {
    Regime regime = Regime::Open;
    /// Ordering of (1, alpha, beta), e.g. "alpha>1>beta" or "alpha=beta>1".
    std::string ordering;
};

/// Regime of a symmetric point. `n33_condition` must hold for any regime other
/// than Open; boundary points belong to the closed (stronger) region.
RegimeLabel classify_regime(const Rational& alpha, const Rational& beta, bool n33_condition);

/// sym_cms_outer(alpha, beta) <= ifc_cr_outer(alpha, beta).
bool bounds_agree(const Rational& alpha, const Rational& beta);

// Rank evaluation of the general-memoryless bounds at independent, uniform
// input bits. Receiver/transmitter sets are zero-based user indices.

/// H(Y_outputs | X_given) in bits.
int lda_entropy(const LdaChannel& channel, const std::vector<int>& outputs, const std::vector<int>& given_inputs);

/// I(Y_outputs ; X_inputs | X_given_inputs, Y_given_outputs) in bits. Inputs
/// outside both sets are left random.
int lda_mutual_information(const LdaChannel& channel, const std::vector<int>& outputs,
                           const std::vector<int>& inputs, const std::vector<int>& given_inputs,
                           const std::vector<int>& given_outputs);

/// K-user CIFC-CMS sum bound from the nested genie chain
///   sum_j I(Y_j; X_[j:K] | X_[1:j-1], Y_[1:j-1]),
/// which for K = 3 has the closed form cms_outer_sum.
BoundReport cms_outer_rank(const LdaChannel& channel);

/// Three-user CIFC-CoMS sum bound min(a, b).
BoundReport coms_outer_rank(const LdaChannel& channel);

}  // namespace cifc
