#include <doctest.h>

#include <random>
#include <vector>

#include "cifc/errors.hpp"
#include "cifc/lda_bounds.hpp"
#include "oracles.hpp"

using cifc::LdaChannel;
using cifc::Rational;
using cifc::Regime;

namespace {

LdaChannel gains3(int n11, int n12, int n13, int n21, int n22, int n23, int n31, int n32, int n33) {
    return LdaChannel({{n11, n12, n13}, {n21, n22, n23}, {n31, n32, n33}});
}

}  // namespace

TEST_SUITE("lda_bounds") {
    TEST_CASE("f on hand-evaluated points") {
        CHECK(cifc::f_func(2, 3, 3, 3) == 3);
        CHECK(cifc::f_func(0, 0, 0, 0) == 0);
        CHECK(cifc::f_func(2, 2, 2, 4) == 2);
        CHECK(cifc::f_func(3, 2, 2, 3) == 3);
        CHECK(cifc::f_func(4, 2, 3, 1) == 1);  // equal differences: max{1,3,4,2} - 3
        CHECK_THROWS_AS(cifc::f_func(-1, 0, 0, 0), cifc::DomainError);
    }

    TEST_CASE("f is nonnegative") {
        for (int a = 0; a <= 10; ++a) {
            for (int b = 0; b <= 10; ++b) {
                for (int c = 0; c <= 10; ++c) {
                    for (int d = 0; d <= 10; ++d) REQUIRE(cifc::f_func(c, d, a, b) >= 0);
                }
            }
        }
    }

    TEST_CASE("f only decreases when a step lands on the equal-difference line") {
        // f(0,1|1,1) = max{1,2} - 1 = 1 but f(1,1|1,1) = max{1,1,1,1} - 1 = 0,
        // so f is not monotone in c (nor, symmetrically, in d).
        CHECK(cifc::f_func(0, 1, 1, 1) == 1);
        CHECK(cifc::f_func(1, 1, 1, 1) == 0);
        CHECK(cifc::f_func(1, 0, 1, 1) == 1);
        int drops = 0;
        for (int a = 0; a <= 10; ++a) {
            for (int b = 0; b <= 10; ++b) {
                for (int c = 0; c < 10; ++c) {
                    for (int d = 0; d < 10; ++d) {
                        const int v = cifc::f_func(c, d, a, b);
                        if (cifc::f_func(c + 1, d, a, b) < v) {
                            ++drops;
                            REQUIRE(c + 1 - d == a - b);
                        }
                        if (cifc::f_func(c, d + 1, a, b) < v) {
                            ++drops;
                            REQUIRE(c - d - 1 == a - b);
                        }
                        // off the line, stepping never lowers f
                        if (c + 1 - d != a - b) REQUIRE(cifc::f_func(c + 1, d, a, b) >= v);
                    }
                }
            }
        }
        CHECK(drops > 0);
    }

    TEST_CASE("three-user closed form on the worked examples") {
        const auto ex1 = cifc::cms_outer_sum(gains3(5, 3, 3, 3, 2, 3, 5, 3, 2));
        CHECK(ex1.value == Rational(8));
        CHECK(ex1.binding.find("f(n22,n23|n12,n13)=3") != std::string::npos);
        CHECK(cifc::cms_outer_sum(gains3(3, 2, 4, 1, 2, 2, 3, 3, 3)).value == Rational(6));
        CHECK(cifc::cms_outer_sum(gains3(1, 2, 3, 1, 3, 2, 1, 3, 4)).value == Rational(7));
        CHECK(cifc::cms_outer_sum(gains3(0, 0, 0, 0, 0, 0, 0, 0, 0)).value == Rational(0));
        CHECK_THROWS_AS(cifc::cms_outer_sum(LdaChannel({{1, 0}, {0, 1}})), cifc::DomainError);
    }

    TEST_CASE("closed form agrees with a direct transcription and the rank chain") {
        // Every three-user channel with gains in 0..2, then a random sample up to 4.
        std::vector<int> g(9, 0);
        int checked = 0;
        const auto check = [&](const std::vector<int>& n) {
            const auto ch = gains3(n[0], n[1], n[2], n[3], n[4], n[5], n[6], n[7], n[8]);
            const auto closed = cifc::cms_outer_sum(ch).value;
            REQUIRE(closed == Rational(oracle::eq_sum_bound(n[0], n[1], n[2], n[4], n[5], n[8])));
            REQUIRE(cifc::cms_outer_rank(ch).value == closed);
            ++checked;
        };
        const auto recurse = [&](auto&& self, std::size_t pos) -> void {
            if (pos == g.size()) {
                check(g);
                return;
            }
            for (int v = 0; v <= 2; ++v) {
                g[pos] = v;
                self(self, pos + 1);
            }
        };
        recurse(recurse, 0);
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> gain(0, 4);
        for (int trial = 0; trial < 5000; ++trial) {
            for (auto& v : g) v = gain(rng);
            check(g);
        }
        CHECK(checked == 19683 + 5000);
    }

    TEST_CASE("closed form is nondecreasing in n11 and n33") {
        std::vector<int> n(9, 0);
        const auto bump = [&](int which) {
            auto copy = n;
            ++copy[static_cast<std::size_t>(which)];
            return oracle::eq_sum_bound(copy[0], copy[1], copy[2], copy[4], copy[5], copy[8]);
        };
        int n22_drops = 0;
        const auto recurse = [&](auto&& self, std::size_t pos) -> void {
            if (pos == n.size()) {
                const auto base = cifc::cms_outer_sum(gains3(n[0], n[1], n[2], n[3], n[4], n[5], n[6], n[7], n[8])).value;
                REQUIRE(Rational(bump(0)) >= base);
                REQUIRE(Rational(bump(8)) >= base);
                if (Rational(bump(4)) < base) {
                    ++n22_drops;
                    REQUIRE(n[4] + 1 - n[5] == n[1] - n[2]);
                }
                return;
            }
            for (int v = 0; v <= 3; ++v) {
                n[pos] = v;
                self(self, pos + 1);
            }
        };
        recurse(recurse, 0);
        CHECK(n22_drops > 0);
    }

    TEST_CASE("raising n22 can lower the sum bound") {
        const auto before = gains3(1, 1, 1, 0, 0, 1, 0, 0, 0);
        const auto after = gains3(1, 1, 1, 0, 1, 1, 0, 0, 0);
        CHECK(cifc::cms_outer_sum(before).value == Rational(2));
        CHECK(cifc::cms_outer_sum(after).value == Rational(1));
        CHECK(cifc::cms_outer_rank(before).value == Rational(2));
        CHECK(cifc::cms_outer_rank(after).value == Rational(1));
    }

    TEST_CASE("cognitive-only bound on the second example's gains") {
        const auto ch = gains3(1, 2, 3, 1, 3, 2, 1, 3, 4);
        CHECK(cifc::coms_outer_rank(ch).value == Rational(6));
        CHECK(cifc::coms_outer_rank(ch).value <= cifc::cms_outer_rank(ch).value);
        CHECK_THROWS_AS(cifc::coms_outer_rank(LdaChannel(std::vector<std::vector<int>>{{1}})), cifc::DomainError);
    }

    TEST_CASE("entropy and mutual information at uniform inputs") {
        const auto ch = gains3(5, 3, 3, 3, 2, 3, 5, 3, 2);
        CHECK(cifc::lda_entropy(ch, {0}, {}) == 5);
        CHECK(cifc::lda_entropy(ch, {0}, {0, 1, 2}) == 0);
        CHECK(cifc::lda_entropy(ch, {0}, {0}) == 3);
        CHECK(cifc::lda_mutual_information(ch, {0}, {0, 1, 2}, {}, {}) == 5);
        CHECK(cifc::lda_mutual_information(ch, {1}, {1, 2}, {0}, {0}) == 3);
    }

    TEST_CASE("symmetric normalized bounds") {
        CHECK(cifc::sym_cms_outer(1, 2).value == Rational(2));
        CHECK(cifc::sym_cms_outer(0, 0).value == Rational(2));
        CHECK(cifc::sym_cms_outer(Rational(3, 5), Rational(3, 10)).value == Rational(17, 10));
        CHECK(cifc::ifc_cr_outer(1, Rational(1, 2)).value == Rational(1));
        CHECK(cifc::ifc_cr_outer(2, Rational(3, 2)).value == Rational(7, 2));
        CHECK(cifc::ifc_cr_outer(0, 0).value == Rational(2));
        CHECK_THROWS_AS(cifc::sym_cms_outer(-1, 0), cifc::DomainError);
        CHECK_THROWS_AS(cifc::ifc_cr_outer(0, Rational(-1, 3)), cifc::DomainError);
    }

    TEST_CASE("regime labels") {
        CHECK(cifc::classify_regime(Rational(3, 2), Rational(1, 2), true).regime == Regime::EqualAndAchievable);
        CHECK(cifc::classify_regime(Rational(3, 5), Rational(3, 10), true).regime ==
              Regime::OuterBoundsCoincideAchievabilityOpen);
        CHECK(cifc::classify_regime(Rational(1, 2), Rational(1, 10), true).regime == Regime::Open);
        CHECK(cifc::classify_regime(Rational(3, 2), Rational(1, 2), false).regime == Regime::Open);
        // boundaries belong to the closed regions
        CHECK(cifc::classify_regime(1, 0, true).regime == Regime::EqualAndAchievable);
        CHECK(cifc::classify_regime(Rational(1, 2), Rational(1, 2), true).regime == Regime::EqualAndAchievable);
        CHECK(cifc::classify_regime(Rational(5, 8), Rational(1, 8), true).regime ==
              Regime::OuterBoundsCoincideAchievabilityOpen);
        CHECK(cifc::classify_regime(Rational(3, 2), Rational(1, 2), true).ordering == "alpha>1>beta");
        CHECK(cifc::classify_regime(2, 2, true).ordering == "alpha=beta>1");
        CHECK(cifc::to_string(Regime::Open) == "Open");
    }

    TEST_CASE("bound agreement on worked points") {
        CHECK(cifc::bounds_agree(2, 3));
        CHECK(cifc::sym_cms_outer(2, 3).value == Rational(5));
        CHECK(cifc::ifc_cr_outer(2, 3).value == Rational(5));
        for (int k = 0; k <= 12; ++k) CHECK(cifc::bounds_agree(1, Rational(k, 4)));
        CHECK_FALSE(cifc::bounds_agree(Rational(1, 2), Rational(1, 10)));
        CHECK(cifc::sym_cms_outer(Rational(1, 2), Rational(1, 10)).value == Rational(8, 5));
    }

    TEST_CASE("coinciding regimes imply agreement on the 1/12 grid") {
        int labelled = 0;
        for (int a = 0; a <= 36; ++a) {
            for (int b = 0; b <= 36; ++b) {
                const Rational alpha(a, 12);
                const Rational beta(b, 12);
                const auto label = cifc::classify_regime(alpha, beta, true);
                if (label.regime == Regime::Open) continue;
                ++labelled;
                INFO("alpha=" << alpha << " beta=" << beta);
                REQUIRE(cifc::bounds_agree(alpha, beta));
            }
        }
        CHECK(labelled > 1000);
    }

    TEST_CASE("normalized symmetric bound scales to the integer channel") {
        for (int nd = 1; nd <= 6; ++nd) {
            for (int ni = 0; ni <= 3 * nd; ++ni) {
                for (int nc = 0; nc <= 3 * nd; ++nc) {
                    for (int n33 = 0; n33 <= nc; ++n33) {
                        const cifc::SymLdaParams p{nd, ni, nc, n33};
                        REQUIRE(p.n33_condition());
                        const auto exact = cifc::cms_outer_sum(p.channel()).value;
                        REQUIRE(exact == Rational(nd) * cifc::sym_cms_outer(p.alpha(), p.beta()).value);
                    }
                }
            }
        }
    }
}
