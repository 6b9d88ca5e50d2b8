#pragma once

// Linear deterministic model of the K-user cognitive interference channel:
// gains, message knowledge, one-shot GF(2) linear schemes and zero-error
// decodability.
//
// Indices in this API are zero-based (user 0 is the primary user). The JSON
// formats in serialization.hpp use the one-based labels W_1..W_K.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cifc/binary_matrix.hpp"

namespace cifc {

/// Largest supported signal level count; a column of any channel matrix fits
/// one machine word.
inline constexpr int kMaxLevels = 64;

/// S^{m-n}: the m x m matrix that moves an input vector down by m-n levels.
/// The top n input levels survive, the bottom m-n are lost.
BinaryMatrix shift_matrix(int m, int n);

class LdaChannel {
public:
    /// gains[i][j] is the exponent n_ij from Tx_j to Rx_i.
    explicit LdaChannel(std::vector<std::vector<int>> gains);

    /// Three-user channel with n11 = n22 = n_d, n12 = n21 = n_i,
    /// n13 = n23 = n_c and cognitive-receiver gains (n31, n32, n33).
    /// The cross gains into Rx_3 default to n_i.
    static LdaChannel symmetric(int n_d, int n_i, int n_c, int n_33, std::optional<int> n_31 = std::nullopt,
                                std::optional<int> n_32 = std::nullopt);

    [[nodiscard]] int users() const { return static_cast<int>(gains_.size()); }
    [[nodiscard]] int gain(int rx, int tx) const { return gains_.at(rx).at(tx); }
    /// m = max n_ij.
    [[nodiscard]] int levels() const { return levels_; }
    [[nodiscard]] const std::vector<std::vector<int>>& gains() const { return gains_; }

    friend bool operator==(const LdaChannel&, const LdaChannel&) = default;

private:
    std::vector<std::vector<int>> gains_;
    int levels_ = 0;
};

/// Messages each transmitter encodes, as explicit sets so that hybrid
/// structures can be expressed. A transmitter that does not know its own
/// message is a pure relay.
class KnowledgeStructure {
public:
    explicit KnowledgeStructure(std::vector<std::vector<int>> known);

    /// Cumulative message sharing: Tx_j knows W_1..W_j.
    static KnowledgeStructure cms(int users);
    /// Cognitive-only sharing: primaries know their own message, Tx_K knows all.
    static KnowledgeStructure coms(int users);
    /// Primary message sharing: Tx_j knows W_1 and W_j.
    static KnowledgeStructure pms(int users);
    /// Interference channel with a cognitive relay: Tx_K relays W_1..W_{K-1}
    /// and has no message of its own.
    static KnowledgeStructure ifc_cr(int users);
    /// No cognition.
    static KnowledgeStructure ifc(int users);
    /// Parses "cms", "coms", "pms", "ifc-cr", "ifc".
    static KnowledgeStructure named(const std::string& name, int users);

    [[nodiscard]] int users() const { return static_cast<int>(known_.size()); }
    [[nodiscard]] bool knows(int tx, int msg) const;
    [[nodiscard]] const std::vector<int>& known(int tx) const { return known_.at(tx); }
    /// Transmitters that know message `msg`.
    [[nodiscard]] std::vector<int> carriers(int msg) const;
    /// Every pair known here is also known by `other`.
    [[nodiscard]] bool subset_of(const KnowledgeStructure& other) const;

    friend bool operator==(const KnowledgeStructure&, const KnowledgeStructure&) = default;

private:
    std::vector<std::vector<int>> known_;
};

/// One-shot linear scheme: X_j = sum_k G_{j,k} W_k over GF(2), with W_k a
/// column of bits[k] message bits.
class LinearScheme {
public:
    /// All-zero generators for every known (tx, msg) pair.
    LinearScheme(const KnowledgeStructure& knowledge, int levels, std::vector<int> bits);

    [[nodiscard]] int users() const { return static_cast<int>(bits_.size()); }
    [[nodiscard]] int levels() const { return levels_; }
    [[nodiscard]] const std::vector<int>& bits() const { return bits_; }
    [[nodiscard]] int total_bits() const;

    [[nodiscard]] bool has_generator(int tx, int msg) const { return generators_.contains({tx, msg}); }
    [[nodiscard]] const BinaryMatrix& generator(int tx, int msg) const;
    /// Replaces G_{tx,msg}; the pair must already exist and the shape must be levels x bits[msg].
    void set_generator(int tx, int msg, BinaryMatrix g);
    [[nodiscard]] const std::map<std::pair<int, int>, BinaryMatrix>& generators() const { return generators_; }

    friend bool operator==(const LinearScheme&, const LinearScheme&) = default;

private:
    int levels_ = 0;
    std::vector<int> bits_;
    std::map<std::pair<int, int>, BinaryMatrix> generators_;
};

/// M_{i,k} = sum over carriers j of S^{m-n_ij} G_{j,k}, for every message k.
std::vector<BinaryMatrix> receive_map(const LdaChannel& channel, const KnowledgeStructure& knowledge,
                                      const LinearScheme& scheme, int rx);

struct DecodeCheck {
    int rx = 0;
    int bits = 0;
    std::size_t full_rank = 0;
    std::size_t interference_rank = 0;
    bool decodable = false;
};

/// Rank test at one receiver: Y_i determines W_i for every interference
/// realization iff rank[M_i1 | ... | M_iK] = rank[M_ik : k != i] + b_i.
DecodeCheck decode_check(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme,
                         int rx);

bool decodable(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme, int rx);

struct SchemeRates {
    bool feasible = false;
    std::vector<int> rates;                // bits per channel use, valid when feasible
    std::optional<int> failing_receiver;   // first receiver that cannot decode
    [[nodiscard]] int sum() const;
};

SchemeRates scheme_rates(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme);

/// Throws StructuralError unless scheme and knowledge fit the channel.
void check_consistent(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme);

}  // namespace cifc
