#include "cifc/lda_schemes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cifc/errors.hpp"

namespace cifc {

namespace {

BinaryMatrix matrix(std::vector<std::string> rows, std::size_t cols) { return BinaryMatrix::from_rows(rows, cols); }

// ---------------------------------------------------------------------------
// relay zero-forcing helpers

constexpr std::size_t kMaxPlacements = 256;

// Generators that put the b message bits on b distinct levels, in
// lexicographic order of the level set, followed by the silent generator.
std::vector<BinaryMatrix> level_placements(int m, int b) {
    std::vector<BinaryMatrix> out;
    const auto rows = static_cast<std::size_t>(m);
    const auto cols = static_cast<std::size_t>(b);
    if (b == 0) {
        out.emplace_back(rows, 0);
        return out;
    }
    std::vector<int> pick(cols);
    std::iota(pick.begin(), pick.end(), 0);
    while (out.size() < kMaxPlacements) {
        BinaryMatrix g(rows, cols);
        for (std::size_t c = 0; c < cols; ++c) g.set(static_cast<std::size_t>(pick[c]), c, true);
        out.push_back(std::move(g));
        int i = b - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - b + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < b; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    out.emplace_back(rows, cols);
    return out;
}

BinaryMatrix column_combination(const BinaryMatrix& basis, std::uint64_t coeffs) {
    BinaryMatrix v(basis.rows(), 1);
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        if (((coeffs >> c) & 1U) == 0) continue;
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            if (basis.get(r, c)) v.flip(r, 0);
        }
    }
    return v;
}

// Relay generator X with cancel_shift * X = cancel_target such that
// own_direct + own_relay * X has full column rank.
std::optional<BinaryMatrix> complete_relay(const BinaryMatrix& cancel_shift, const BinaryMatrix& cancel_target,
                                           const BinaryMatrix& own_direct, const BinaryMatrix& own_relay) {
    const auto particular = solve(cancel_shift, cancel_target);
    if (!particular) return std::nullopt;
    const std::size_t b = own_direct.cols();
    const BinaryMatrix freedom = cancel_shift.kernel();
    const BinaryMatrix base = own_direct + own_relay * *particular;
    const BinaryMatrix reach = own_relay * freedom;
    const std::size_t dim = freedom.cols();

    const auto assemble = [&](const std::vector<std::uint64_t>& coeffs) {
        BinaryMatrix x = *particular;
        for (std::size_t c = 0; c < b; ++c) {
            const BinaryMatrix v = column_combination(freedom, coeffs[c]);
            for (std::size_t r = 0; r < x.rows(); ++r) {
                if (v.get(r, 0)) x.flip(r, c);
            }
        }
        return x;
    };
    const auto received = [&](const std::vector<std::uint64_t>& coeffs, std::size_t upto) {
        BinaryMatrix y = base.columns(0, upto);
        for (std::size_t c = 0; c < upto; ++c) {
            const BinaryMatrix v = column_combination(reach, coeffs[c]);
            for (std::size_t r = 0; r < y.rows(); ++r) {
                if (v.get(r, 0)) y.flip(r, c);
            }
        }
        return y;
    };

    // Greedy: each column takes the first free combination that keeps the
    // received columns independent.
    const std::uint64_t per_column = dim >= 12 ? (std::uint64_t{1} << 12) : (std::uint64_t{1} << dim);
    std::vector<std::uint64_t> coeffs(b, 0);
    bool greedy_ok = true;
    for (std::size_t c = 0; c < b && greedy_ok; ++c) {
        greedy_ok = false;
        for (std::uint64_t e = 0; e < per_column; ++e) {
            coeffs[c] = e;
            if (received(coeffs, c + 1).rank() == c + 1) {
                greedy_ok = true;
                break;
            }
        }
    }
    if (greedy_ok) return assemble(coeffs);

    if (dim * b > 16) return std::nullopt;
    const std::uint64_t total = std::uint64_t{1} << (dim * b);
    const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
    for (std::uint64_t all = 0; all < total; ++all) {
        for (std::size_t c = 0; c < b; ++c) coeffs[c] = (all >> (c * dim)) & mask;
        if (received(coeffs, b).rank() == b) return assemble(coeffs);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// oracle: subspaces of GF(2)^m (m <= 4) as bitmasks over the 2^m vectors

class SubspaceTable {
public:
    explicit SubspaceTable(int m) : vectors_(1 << m) {
        std::unordered_map<std::uint32_t, int> index;
        std::vector<std::uint32_t> queue{1U};
        index.emplace(1U, 0);
        masks_.push_back(1U);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (int v = 0; v < vectors_; ++v) {
                const auto next = span_add(queue[q], v);
                if (index.emplace(next, static_cast<int>(masks_.size())).second) {
                    masks_.push_back(next);
                    queue.push_back(next);
                }
            }
        }
        const auto count = masks_.size();
        add_.resize(count * static_cast<std::size_t>(vectors_));
        for (std::size_t id = 0; id < count; ++id) {
            for (int v = 0; v < vectors_; ++v) {
                add_[id * static_cast<std::size_t>(vectors_) + static_cast<std::size_t>(v)] =
                    static_cast<std::uint8_t>(index.at(span_add(masks_[id], v)));
            }
        }
        sum_.resize(count * count);
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
                std::uint32_t mask = masks_[a];
                for (int v = 0; v < vectors_; ++v) {
                    if ((masks_[b] >> v) & 1U) mask = span_add(mask, v);
                }
                sum_[a * count + b] = static_cast<std::uint8_t>(index.at(mask));
            }
        }
    }

    [[nodiscard]] std::uint8_t add(std::uint8_t id, std::uint32_t v) const {
        return add_[static_cast<std::size_t>(id) * static_cast<std::size_t>(vectors_) + v];
    }
    [[nodiscard]] std::uint8_t sum(std::uint8_t a, std::uint8_t b) const { return sum_[a * masks_.size() + b]; }
    [[nodiscard]] bool contains(std::uint8_t id, std::uint32_t v) const { return ((masks_[id] >> v) & 1U) != 0; }
    [[nodiscard]] bool meets_trivially(std::uint8_t a, std::uint8_t b) const { return (masks_[a] & masks_[b]) == 1U; }
    [[nodiscard]] bool subset(std::uint8_t a, std::uint8_t b) const { return (masks_[a] & ~masks_[b]) == 0; }
    [[nodiscard]] int dim(std::uint8_t id) const { return std::countr_zero(static_cast<unsigned>(std::popcount(masks_[id]))); }

private:
    static std::uint32_t span_add(std::uint32_t mask, int v) {
        if ((mask >> v) & 1U) return mask;
        std::uint32_t out = mask;
        for (int s = 0; s < 32; ++s) {
            if ((mask >> s) & 1U) out |= 1U << (s ^ v);
        }
        return out;
    }

    int vectors_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> sum_;
};

constexpr int kMaxOracleUsers = 4;
// Subspace ids are bytes; GF(2)^5 already has 374 subspaces.
constexpr int kMaxOracleLevels = 4;
using ImageTuple = std::array<std::uint8_t, kMaxOracleUsers>;

// A received image u (receiver i's m bits at offset i*m) together with the
// stacked carrier input g that produces it.
struct ImageVector {
    std::uint32_t received = 0;
    std::uint32_t input = 0;
};

struct ImageState {
    ImageTuple ids = {0, 0, 0, 0};
    std::vector<ImageVector> basis;
};

std::uint32_t key_of(const ImageTuple& ids) {
    return static_cast<std::uint32_t>(ids[0]) | (static_cast<std::uint32_t>(ids[1]) << 8) |
           (static_cast<std::uint32_t>(ids[2]) << 16) | (static_cast<std::uint32_t>(ids[3]) << 24);
}

class MessageImages {
public:
    MessageImages(const LdaChannel& channel, const KnowledgeStructure& knowledge, int msg, int max_bits,
                  const SubspaceTable& table)
        : users_(channel.users()), m_(channel.levels()), msg_(msg), carriers_(knowledge.carriers(msg)) {
        enumerate_column_space(channel);
        cut_ = 0;
        for (int tx : carriers_) cut_ = std::max(cut_, channel.gain(msg, tx));
        cut_ = std::min(cut_, max_bits);

        ImageState zero;
        zero.ids.fill(0);
        levels_.push_back({zero});
        for (int d = 1; d <= cut_; ++d) {
            levels_.push_back(expand(levels_.back(), table));
            if (levels_.back().empty()) break;
        }
    }

    [[nodiscard]] int cut() const { return cut_; }
    [[nodiscard]] const std::vector<ImageState>& with_bits(int b) const {
        static const std::vector<ImageState> none;
        return b < static_cast<int>(levels_.size()) ? levels_[static_cast<std::size_t>(b)] : none;
    }
    [[nodiscard]] const std::vector<int>& carriers() const { return carriers_; }

private:
    [[nodiscard]] std::uint32_t project(std::uint32_t u, int rx) const {
        return (u >> (rx * m_)) & ((1U << m_) - 1U);
    }

    void enumerate_column_space(const LdaChannel& channel) {
        // Columns of the stacked map: input level l of carrier t.
        std::vector<ImageVector> columns;
        for (std::size_t t = 0; t < carriers_.size(); ++t) {
            for (int l = 0; l < m_; ++l) {
                ImageVector col;
                col.input = 1U << (static_cast<int>(t) * m_ + l);
                for (int rx = 0; rx < users_; ++rx) {
                    const int n = channel.gain(rx, carriers_[t]);
                    if (l < n) col.received |= 1U << (rx * m_ + l + m_ - n);
                }
                columns.push_back(col);
            }
        }
        // Echelon basis of the received images, keeping the inputs in step.
        std::vector<ImageVector> basis;
        for (auto col : columns) {
            for (const auto& b : basis) {
                if ((col.received ^ b.received) < col.received) {
                    col.received ^= b.received;
                    col.input ^= b.input;
                }
            }
            if (col.received != 0) {
                basis.push_back(col);
                std::sort(basis.begin(), basis.end(),
                          [](const ImageVector& a, const ImageVector& b) { return a.received > b.received; });
            }
        }
        const std::size_t count = std::size_t{1} << basis.size();
        space_.reserve(count - 1);
        for (std::size_t combo = 1; combo < count; ++combo) {
            ImageVector v;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if ((combo >> i) & 1U) {
                    v.received ^= basis[i].received;
                    v.input ^= basis[i].input;
                }
            }
            space_.push_back(v);
        }
        std::sort(space_.begin(), space_.end(),
                  [](const ImageVector& a, const ImageVector& b) { return a.received < b.received; });
    }

    std::vector<ImageState> expand(const std::vector<ImageState>& states, const SubspaceTable& table) const {
        std::unordered_map<std::uint32_t, std::size_t> seen;
        std::vector<ImageState> next;
        for (const auto& s : states) {
            for (const auto& v : space_) {
                if (table.contains(s.ids[static_cast<std::size_t>(msg_)], project(v.received, msg_))) continue;
                ImageTuple ids = s.ids;
                for (int rx = 0; rx < users_; ++rx) {
                    ids[static_cast<std::size_t>(rx)] = table.add(ids[static_cast<std::size_t>(rx)], project(v.received, rx));
                }
                if (seen.emplace(key_of(ids), next.size()).second) {
                    ImageState n{ids, s.basis};
                    n.basis.push_back(v);
                    next.push_back(std::move(n));
                }
            }
        }
        return prune(std::move(next), table);
    }

    // Keeps, for every own-receiver image, the states whose images at the
    // other receivers are inclusion-minimal.
    std::vector<ImageState> prune(std::vector<ImageState> states, const SubspaceTable& table) const {
        const auto own = static_cast<std::size_t>(msg_);
        std::vector<std::pair<int, std::size_t>> order;  // (own image, footprint) rank, position
        order.reserve(states.size());
        for (std::size_t i = 0; i < states.size(); ++i) {
            int footprint = 0;
            for (int rx = 0; rx < users_; ++rx) {
                if (rx != msg_) footprint += table.dim(states[i].ids[static_cast<std::size_t>(rx)]);
            }
            order.emplace_back(states[i].ids[own] * 64 + footprint, i);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<ImageState> kept;
        std::size_t group_start = 0;
        for (const auto& [rank, pos] : order) {
            auto& s = states[pos];
            if (!kept.empty() && kept.back().ids[own] != s.ids[own]) group_start = kept.size();
            bool dominated = false;
            for (std::size_t i = group_start; i < kept.size() && !dominated; ++i) {
                dominated = true;
                for (int rx = 0; rx < users_ && dominated; ++rx) {
                    if (rx == msg_) continue;
                    dominated = table.subset(kept[i].ids[static_cast<std::size_t>(rx)], s.ids[static_cast<std::size_t>(rx)]);
                }
            }
            if (!dominated) kept.push_back(std::move(s));
        }
        return kept;
    }

    int users_;
    int m_;
    int msg_;
    std::vector<int> carriers_;
    int cut_ = 0;
    std::vector<ImageVector> space_;
    std::vector<std::vector<ImageState>> levels_;
};

class AllocationSearch {
public:
    AllocationSearch(const std::vector<MessageImages>& images, const SubspaceTable& table, int users)
        : images_(images), table_(table), users_(users) {}

    // On success, chosen()[k] is the image state for every message with bits.
    bool feasible(const std::vector<int>& bits) {
        order_.clear();
        for (int k = 0; k < users_; ++k) {
            if (bits[static_cast<std::size_t>(k)] == 0) continue;
            if (images_[static_cast<std::size_t>(k)].with_bits(bits[static_cast<std::size_t>(k)]).empty()) return false;
            order_.push_back(k);
        }
        // Messages with fewer candidate image tuples first.
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return images_[static_cast<std::size_t>(a)].with_bits(bits[static_cast<std::size_t>(a)]).size() <
                   images_[static_cast<std::size_t>(b)].with_bits(bits[static_cast<std::size_t>(b)]).size();
        });
        bits_ = bits;
        chosen_.assign(static_cast<std::size_t>(users_), nullptr);
        ImageTuple interference{};
        interference.fill(0);
        return place(0, interference);
    }

    [[nodiscard]] const std::vector<const ImageState*>& chosen() const { return chosen_; }

private:
    bool place(std::size_t depth, const ImageTuple& interference) {
        if (depth == order_.size()) return true;
        const int k = order_[depth];
        const auto ku = static_cast<std::size_t>(k);
        for (const auto& candidate : images_[ku].with_bits(bits_[ku])) {
            if (!table_.meets_trivially(candidate.ids[ku], interference[ku])) continue;
            ImageTuple next = interference;
            bool ok = true;
            for (int rx = 0; rx < users_ && ok; ++rx) {
                if (rx == k) continue;
                const auto ru = static_cast<std::size_t>(rx);
                next[ru] = table_.sum(interference[ru], candidate.ids[ru]);
                if (chosen_[ru] != nullptr) ok = table_.meets_trivially(chosen_[ru]->ids[ru], next[ru]);
            }
            if (!ok) continue;
            chosen_[ku] = &candidate;
            if (place(depth + 1, next)) return true;
            chosen_[ku] = nullptr;
        }
        return false;
    }

    const std::vector<MessageImages>& images_;
    const SubspaceTable& table_;
    int users_;
    std::vector<int> order_;
    std::vector<int> bits_;
    std::vector<const ImageState*> chosen_;
};

// Every allocation with the given sum, lexicographically ascending.
void allocations_with_sum(const std::vector<int>& caps, int sum, std::vector<int>& current, std::size_t idx,
                          std::vector<std::vector<int>>& out) {
    if (idx == caps.size()) {
        if (sum == 0) out.push_back(current);
        return;
    }
    int remaining_cap = 0;
    for (std::size_t j = idx + 1; j < caps.size(); ++j) remaining_cap += caps[j];
    for (int b = 0; b <= std::min(caps[idx], sum); ++b) {
        if (sum - b > remaining_cap) continue;
        current[idx] = b;
        allocations_with_sum(caps, sum - b, current, idx + 1, out);
    }
    current[idx] = 0;
}

}  // namespace

// ---------------------------------------------------------------------------

ExampleInstance example_scheme(int which) {
    switch (which) {
        case 1: {
            LdaChannel channel({{5, 3, 3}, {3, 2, 3}, {5, 3, 2}});
            auto knowledge = KnowledgeStructure::ifc_cr(3);
            LinearScheme scheme(knowledge, 5, {5, 3, 0});
            scheme.set_generator(0, 0, BinaryMatrix::identity(5));
            scheme.set_generator(1, 1, matrix({"100", "010", "001", "000", "000"}, 3));
            scheme.set_generator(2, 0, matrix({"10000", "01000", "00100", "00000", "00000"}, 5));
            scheme.set_generator(2, 1, matrix({"100", "010", "001", "000", "000"}, 3));
            return {1, channel, knowledge, scheme, 8,
                    "Tx3 acts as a cognitive relay: it repeats the top levels of W1 and W2 so that W2 cancels at "
                    "Rx1 and W1 cancels at Rx2; R3 = 0."};
        }
        case 2: {
            // The printed gain list names n12 twice; the second entry is read as n21.
            LdaChannel channel({{1, 2, 3}, {1, 3, 2}, {1, 3, 4}});
            auto knowledge = KnowledgeStructure::coms(3);
            LinearScheme scheme(knowledge, 4, {1, 2, 1});
            scheme.set_generator(0, 0, matrix({"1", "0", "0", "0"}, 1));
            scheme.set_generator(1, 1, matrix({"10", "01", "00", "00"}, 2));
            scheme.set_generator(2, 0, matrix({"0", "1", "0", "1"}, 1));
            scheme.set_generator(2, 1, matrix({"00", "10", "01", "00"}, 2));
            scheme.set_generator(2, 2, matrix({"0", "0", "0", "1"}, 1));
            return {2, channel, knowledge, scheme, 4,
                    "Relay zero-forcing as in example 1, plus one W3 bit on the lowest level of X3, which neither "
                    "primary receiver observes, pre-cancelled against W1 at Rx3."};
        }
        case 3: {
            LdaChannel channel({{3, 2, 4}, {1, 2, 2}, {3, 3, 3}});
            KnowledgeStructure knowledge({{0}, {0, 1}, {0, 1}});
            LinearScheme scheme(knowledge, 4, {4, 2, 0});
            scheme.set_generator(1, 0, matrix({"1000", "0100", "0000", "0000"}, 4));
            scheme.set_generator(1, 1, matrix({"10", "01", "00", "00"}, 2));
            scheme.set_generator(2, 0, BinaryMatrix::identity(4));
            scheme.set_generator(2, 1, matrix({"00", "00", "10", "01"}, 2));
            return {3, channel, knowledge, scheme, 6,
                    "W1 and W2 known at Tx2 and Tx3: Tx2 precodes against the W1 interference that Tx3 cannot "
                    "cancel at Rx2, Tx3 relays W1 and cancels W2 at Rx1; R3 = 0."};
        }
        default: throw DomainError("examples are numbered 1, 2 and 3");
    }
}

std::optional<LinearScheme> relay_zero_force(const LdaChannel& channel, int bits_1, int bits_2) {
    if (channel.users() != 3) throw DomainError("relay zero-forcing is defined for K = 3");
    if (bits_1 < 0 || bits_2 < 0) throw DomainError("bit counts must be nonnegative");
    const int m = channel.levels();
    const auto knowledge = KnowledgeStructure::ifc_cr(3);
    if (bits_1 > m || bits_2 > m) return std::nullopt;
    LinearScheme scheme(knowledge, m, {bits_1, bits_2, 0});
    if (bits_1 == 0 && bits_2 == 0) return scheme;

    const auto s = [&](int rx, int tx) { return shift_matrix(m, channel.gain(rx, tx)); };

    // Primary p is decoded at Rx_p; its image must vanish at the other primary Rx_q.
    for (int p = 0; p < 2; ++p) {
        const int q = 1 - p;
        bool found = false;
        for (const auto& direct : level_placements(m, p == 0 ? bits_1 : bits_2)) {
            auto relay = complete_relay(s(q, 2), s(q, p) * direct, s(p, p) * direct, s(p, 2));
            if (!relay) continue;
            scheme.set_generator(p, p, direct);
            scheme.set_generator(2, p, std::move(*relay));
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    const auto rates = scheme_rates(channel, knowledge, scheme);
    if (!rates.feasible) return std::nullopt;
    return scheme;
}

LinearScheme sneak_bits_extension(const LdaChannel& channel, const KnowledgeStructure& knowledge,
                                  const LinearScheme& base) {
    if (channel.users() != 3) throw DomainError("sneak-bit extension is defined for K = 3");
    const int n13 = channel.gain(0, 2);
    const int n23 = channel.gain(1, 2);
    const int n33 = channel.gain(2, 2);
    const int floor_level = std::max(n13, n23);
    if (n33 <= floor_level) {
        throw DomainError("sneak bits need n33 > max{n13, n23}, got n33=" + std::to_string(n33) +
                          " max=" + std::to_string(floor_level));
    }
    if (!knowledge.knows(2, 2)) throw DomainError("Tx3 must know its own message to sneak in bits");
    if (base.bits()[2] != 0) throw DomainError("base scheme already carries W3 bits");

    const int m = channel.levels();
    const int extra = n33 - floor_level;
    LinearScheme out(knowledge, m, {base.bits()[0], base.bits()[1], extra});
    for (const auto& [key, g] : base.generators()) {
        if (key.second != 2) out.set_generator(key.first, key.second, g);  // W3 generators are empty in the base
    }

    BinaryMatrix own(static_cast<std::size_t>(m), static_cast<std::size_t>(extra));
    for (int t = 0; t < extra; ++t) own.set(static_cast<std::size_t>(floor_level + t), static_cast<std::size_t>(t), true);
    out.set_generator(2, 2, own);

    // X3 level r lands on Rx3 level m - n33 + r and nowhere else in the
    // primaries' view; cancel what other messages put there.
    const auto at_rx3 = receive_map(channel, knowledge, out, 2);
    for (int msg = 0; msg < 2; ++msg) {
        if (!knowledge.knows(2, msg)) continue;
        BinaryMatrix g = out.generator(2, msg);
        const auto& image = at_rx3[static_cast<std::size_t>(msg)];
        for (int r = floor_level; r < n33; ++r) {
            const auto level = static_cast<std::size_t>(m - n33 + r);
            for (std::size_t c = 0; c < g.cols(); ++c) {
                if (image.get(level, c)) g.flip(static_cast<std::size_t>(r), c);
            }
        }
        out.set_generator(2, msg, std::move(g));
    }
    return out;
}

int OracleResult::sum() const { return std::accumulate(rates.begin(), rates.end(), 0); }

OracleResult brute_force_best(const LdaChannel& channel, const KnowledgeStructure& knowledge, int max_total_bits,
                              const OracleLimits& limits) {
    const int k = channel.users();
    const int m = channel.levels();
    if (knowledge.users() != k) throw StructuralError("knowledge and channel disagree on the number of users");
    if (m > std::min(limits.max_levels, kMaxOracleLevels)) {
        throw BudgetError("oracle budget exceeded: m = " + std::to_string(m) + " > " +
                          std::to_string(std::min(limits.max_levels, kMaxOracleLevels)) + " levels");
    }
    if (max_total_bits > limits.max_total_bits) {
        throw BudgetError("oracle budget exceeded: max_total_bits = " + std::to_string(max_total_bits) + " > " +
                          std::to_string(limits.max_total_bits));
    }
    if (k > kMaxOracleUsers || k * m > limits.max_stacked_levels) {
        throw BudgetError("oracle budget exceeded: K*m = " + std::to_string(k * m) + " > " +
                          std::to_string(limits.max_stacked_levels));
    }
    if (max_total_bits < 0) throw DomainError("max_total_bits must be nonnegative");

    OracleResult result{std::vector<int>(static_cast<std::size_t>(k), 0),
                        LinearScheme(knowledge, m, std::vector<int>(static_cast<std::size_t>(k), 0)), 0};
    if (m == 0 || max_total_bits == 0) return result;

    const SubspaceTable table(m);
    std::vector<MessageImages> images;
    std::vector<int> caps;
    for (int msg = 0; msg < k; ++msg) {
        images.emplace_back(channel, knowledge, msg, max_total_bits, table);
        caps.push_back(images.back().cut());
    }

    AllocationSearch search(images, table, k);
    const int top = std::min(max_total_bits, std::accumulate(caps.begin(), caps.end(), 0));
    for (int sum = top; sum > 0; --sum) {
        std::vector<std::vector<int>> allocations;
        std::vector<int> current(static_cast<std::size_t>(k), 0);
        allocations_with_sum(caps, sum, current, 0, allocations);
        for (const auto& bits : allocations) {
            ++result.allocations_checked;
            if (!search.feasible(bits)) continue;

            LinearScheme scheme(knowledge, m, bits);
            for (int msg = 0; msg < k; ++msg) {
                const auto* state = search.chosen()[static_cast<std::size_t>(msg)];
                if (state == nullptr) continue;
                const auto& carriers = images[static_cast<std::size_t>(msg)].carriers();
                for (std::size_t t = 0; t < carriers.size(); ++t) {
                    BinaryMatrix g(static_cast<std::size_t>(m), state->basis.size());
                    for (std::size_t c = 0; c < state->basis.size(); ++c) {
                        for (int l = 0; l < m; ++l) {
                            if ((state->basis[c].input >> (static_cast<int>(t) * m + l)) & 1U) {
                                g.set(static_cast<std::size_t>(l), c, true);
                            }
                        }
                    }
                    scheme.set_generator(carriers[t], msg, std::move(g));
                }
            }
            if (!scheme_rates(channel, knowledge, scheme).feasible) {
                throw std::logic_error("oracle witness failed the rank decodability check");
            }
            result.rates = bits;
            result.scheme = std::move(scheme);
            return result;
        }
    }
    return result;
}

}  // namespace cifc
