#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cifc/lda.hpp"

namespace cifc {

/// One of the worked asymmetric three-user examples with the scheme that
/// realizes its stated sum rate.
struct ExampleInstance {
    int which = 0;
    LdaChannel channel;
    KnowledgeStructure knowledge;
    LinearScheme scheme;
    int claimed_sum = 0;  // sum rate stated for the example
    std::string description;
};

/// which = 1, 2 or 3.
ExampleInstance example_scheme(int which);

/// Three-user scheme with R_3 = 0 under IFC+CR knowledge where Tx_3 cancels
/// W_2 at Rx_1 and W_1 at Rx_2 (M_{1,2} = M_{2,1} = 0). Primary generators
/// are drawn from level placements in lexicographic order; nullopt when no
/// cancelling, decodable choice exists among them.
std::optional<LinearScheme> relay_zero_force(const LdaChannel& channel, int bits_1, int bits_2);

/// Adds n_33 - max{n_13, n_23} bits of W_3 on the levels of X_3 that neither
/// primary receiver observes, and pre-cancels whatever else lands on those
/// levels at Rx_3. `knowledge` must contain the base scheme's pairs and let
/// Tx_3 encode W_3.
LinearScheme sneak_bits_extension(const LdaChannel& channel, const KnowledgeStructure& knowledge,
                                  const LinearScheme& base);

struct OracleLimits {
    int max_levels = 4;  // values above 4 are clamped to 4
    int max_total_bits = 8;
    int max_stacked_levels = 16;  // K * m
};

struct OracleResult {
    std::vector<int> rates;
    LinearScheme scheme;
    int allocations_checked = 0;
    [[nodiscard]] int sum() const;
};

/// Best one-shot linear scheme by sum rate, found by exhaustive search.
///
/// Decodability only depends, for each message k, on the images of the
/// message's joint codeword at the K receivers. The search enumerates those
/// image tuples (subspaces of GF(2)^m per receiver), keeps only the ones with
/// inclusion-minimal interference footprint, and tries every bit allocation
/// with sum <= max_total_bits in decreasing sum order; ties go to the
/// lexicographically smallest rate vector. Per-message allocations are capped
/// by the single-user cut max{n_kj : Tx_j knows W_k}.
///
/// Throws BudgetError when m > 4, max_total_bits > 8 or K*m > 16.
OracleResult brute_force_best(const LdaChannel& channel, const KnowledgeStructure& knowledge, int max_total_bits,
                              const OracleLimits& limits = {});

}  // namespace cifc
