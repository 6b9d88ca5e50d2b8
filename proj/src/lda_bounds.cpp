#include "cifc/lda_bounds.hpp"

#include <algorithm>
#include <array>

#include "cifc/errors.hpp"

namespace cifc {

namespace {

void require_nonnegative(const Rational& alpha, const Rational& beta) {
    if (alpha < Rational(0) || beta < Rational(0)) {
        throw DomainError("alpha and beta must be nonnegative, got alpha=" + alpha.str() + " beta=" + beta.str());
    }
}

std::string ordering_of(const Rational& alpha, const Rational& beta) {
    std::array<std::pair<Rational, std::string_view>, 3> items{{{Rational(1), "1"}, {alpha, "alpha"}, {beta, "beta"}}};
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string out(items[0].second);
    for (std::size_t i = 1; i < items.size(); ++i) {
        out += items[i].first == items[i - 1].first ? "=" : ">";
        out += items[i].second;
    }
    return out;
}

std::vector<int> complement(int users, const std::vector<int>& a) {
    std::vector<int> out;
    for (int u = 0; u < users; ++u) {
        if (std::find(a.begin(), a.end(), u) == a.end()) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::vector<int> range(int first, int last) {
    std::vector<int> out;
    for (int u = first; u < last; ++u) out.push_back(u);
    return out;
}

}  // namespace

int f_func(int c, int d, int a, int b) {
    if (a < 0 || b < 0 || c < 0 || d < 0) throw DomainError("f(c,d|a,b) takes nonnegative exponents");
    if (c - d != a - b) return std::max(c + b, a + d) - std::max(a, b);
    return std::max({a, b, c, d}) - std::max(a, b);
}

BoundReport cms_outer_sum(const LdaChannel& channel) {
    if (channel.users() != 3) {
        throw DomainError("closed-form CMS sum bound is defined for K = 3, got K = " + std::to_string(channel.users()));
    }
    const auto n = [&](int i, int j) { return channel.gain(i - 1, j - 1); };
    const int first = std::max({n(1, 1), n(1, 2), n(1, 3)});
    const int second = f_func(n(2, 2), n(2, 3), n(1, 2), n(1, 3));
    const int third = std::max(n(3, 3) - std::max(n(1, 3), n(2, 3)), 0);
    return {"cms_outer_sum", Rational(first + second + third),
            "max{n11,n12,n13}=" + std::to_string(first) + " + f(n22,n23|n12,n13)=" + std::to_string(second) +
                " + [n33-max{n13,n23}]^+=" + std::to_string(third)};
}

BoundReport sym_cms_outer(const Rational& alpha, const Rational& beta) {
    require_nonnegative(alpha, beta);
    const Rational one(1);
    if (alpha == one) return {"sym_cms_outer", std::max(beta, one), "alpha=1: max{beta,1}"};
    return {"sym_cms_outer", std::max({alpha, beta, one}) + std::max(one, alpha) + beta - std::max(alpha, beta),
            "alpha!=1: max{alpha,beta,1}+max{1,alpha}+beta-max{alpha,beta}"};
}

BoundReport ifc_cr_outer(const Rational& alpha, const Rational& beta) {
    require_nonnegative(alpha, beta);
    const Rational one(1);
    const Rational two(2);
    const Rational a = positive_part(one - std::max(beta, alpha)) + beta + std::max(one, alpha);
    const Rational b = two * std::max({one - alpha, alpha, beta}) + two * std::min(alpha, beta);

    BoundReport report{"ifc_cr_outer", a, "a: [1-max{beta,alpha}]^+ + beta + max{1,alpha}"};
    if (b < report.value) report = {"ifc_cr_outer", b, "b: 2max{1-alpha,alpha,beta} + 2min{alpha,beta}"};
    if (alpha == one) {
        const Rational c = std::max(one, beta);
        if (c < report.value) report = {"ifc_cr_outer", c, "c: max{1,beta} (alpha=1)"};
    }
    return report;
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::EqualAndAchievable: return "EqualAndAchievable";
        case Regime::OuterBoundsCoincideAchievabilityOpen: return "OuterBoundsCoincideAchievabilityOpen";
        case Regime::Open: return "Open";
    }
    return "Open";
}

RegimeLabel classify_regime(const Rational& alpha, const Rational& beta, bool n33_condition) {
    require_nonnegative(alpha, beta);
    RegimeLabel label{Regime::Open, ordering_of(alpha, beta)};
    if (!n33_condition) return label;
    const Rational one(1);
    if (alpha >= one || beta >= alpha) {
        label.regime = Regime::EqualAndAchievable;
    } else if (Rational(3) * alpha + beta >= Rational(2)) {
        // here beta < alpha < 1
        label.regime = Regime::OuterBoundsCoincideAchievabilityOpen;
    }
    return label;
}

bool bounds_agree(const Rational& alpha, const Rational& beta) {
    return sym_cms_outer(alpha, beta).value <= ifc_cr_outer(alpha, beta).value;
}

// ---------------------------------------------------------------------------

int lda_entropy(const LdaChannel& channel, const std::vector<int>& outputs, const std::vector<int>& given_inputs) {
    const int m = channel.levels();
    const auto free_inputs = complement(channel.users(), given_inputs);
    if (outputs.empty() || free_inputs.empty() || m == 0) return 0;

    std::vector<BinaryMatrix> rows;
    for (int rx : outputs) {
        std::vector<BinaryMatrix> blocks;
        for (int tx : free_inputs) blocks.push_back(shift_matrix(m, channel.gain(rx, tx)));
        rows.push_back(hstack(blocks));
    }
    return static_cast<int>(vstack(rows).rank());
}

int lda_mutual_information(const LdaChannel& channel, const std::vector<int>& outputs, const std::vector<int>& inputs,
                           const std::vector<int>& given_inputs, const std::vector<int>& given_outputs) {
    const auto all_outputs = join(outputs, given_outputs);
    const auto more_given = join(given_inputs, inputs);
    const int before = lda_entropy(channel, all_outputs, given_inputs) - lda_entropy(channel, given_outputs, given_inputs);
    const int after = lda_entropy(channel, all_outputs, more_given) - lda_entropy(channel, given_outputs, more_given);
    return before - after;
}

BoundReport cms_outer_rank(const LdaChannel& channel) {
    const int k = channel.users();
    // Each term is a conditional entropy of the outputs, so independent
    // uniform inputs maximize all of them at once.
    int total = 0;
    std::string binding;
    for (int j = 0; j < k; ++j) {
        const int term = lda_mutual_information(channel, {j}, range(j, k), range(0, j), range(0, j));
        total += term;
        binding += (j == 0 ? "" : " + ") + std::to_string(term);
    }
    return {"cms_outer_rank", Rational(total), "genie chain from Rx1: " + binding};
}

BoundReport coms_outer_rank(const LdaChannel& channel) {
    if (channel.users() != 3) throw DomainError("CoMS sum bound is defined for K = 3");
    const auto mi = [&](std::vector<int> out, std::vector<int> in, std::vector<int> given_in,
                        std::vector<int> given_out) {
        return lda_mutual_information(channel, out, in, given_in, given_out);
    };
    // users 0, 1 are the primaries, 2 the cognitive user
    const int a = std::min(mi({2}, {2}, {0, 1}, {0}), mi({2}, {2}, {0, 1}, {1})) + mi({0}, {0, 2}, {1}, {}) +
                  mi({1}, {1, 2}, {0}, {});
    const int b = std::min(mi({0}, {0, 1, 2}, {}, {}) + mi({1}, {1, 2}, {0}, {0}),
                           mi({0}, {0, 2}, {1}, {1}) + mi({1}, {0, 1, 2}, {}, {})) +
                  mi({2}, {2}, {0, 1}, {0, 1});
    if (a <= b) return {"coms_outer_rank", Rational(a), "a: individual bounds plus Rx3 residual"};
    return {"coms_outer_rank", Rational(b), "b: nested genie chain"};
}

}  // namespace cifc
