#include "cifc/lda.hpp"

#include <algorithm>
#include <numeric>

#include "cifc/errors.hpp"

namespace cifc {

BinaryMatrix shift_matrix(int m, int n) {
    if (m < 0 || n < 0 || n > m) {
        throw DomainError("shift_matrix requires 0 <= n <= m, got m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    if (m > kMaxLevels) throw DomainError("shift_matrix supports at most " + std::to_string(kMaxLevels) + " levels");
    const auto size = static_cast<std::size_t>(m);
    const auto shift = static_cast<std::size_t>(m - n);
    BinaryMatrix s(size, size);
    for (std::size_t r = shift; r < size; ++r) s.set(r, r - shift, true);
    return s;
}

// ---------------------------------------------------------------------------

LdaChannel::LdaChannel(std::vector<std::vector<int>> gains) : gains_(std::move(gains)) {
    const auto k = gains_.size();
    if (k == 0) throw DomainError("channel needs at least one user");
    for (const auto& row : gains_) {
        if (row.size() != k) throw StructuralError("gain matrix must be square");
        for (int g : row) {
            if (g < 0) throw DomainError("channel gains must be nonnegative");
            levels_ = std::max(levels_, g);
        }
    }
    if (levels_ > kMaxLevels) {
        throw DomainError("channel has " + std::to_string(levels_) + " levels; at most " +
                          std::to_string(kMaxLevels) + " supported");
    }
}

LdaChannel LdaChannel::symmetric(int n_d, int n_i, int n_c, int n_33, std::optional<int> n_31,
                                 std::optional<int> n_32) {
    if (n_d <= 0) throw DomainError("symmetric channel requires n_d > 0");
    return LdaChannel({{n_d, n_i, n_c}, {n_i, n_d, n_c}, {n_31.value_or(n_i), n_32.value_or(n_i), n_33}});
}

// ---------------------------------------------------------------------------

KnowledgeStructure::KnowledgeStructure(std::vector<std::vector<int>> known) : known_(std::move(known)) {
    const int k = users();
    for (auto& set : known_) {
        for (int msg : set) {
            if (msg < 0 || msg >= k) throw StructuralError("message index " + std::to_string(msg) + " out of range");
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
}

KnowledgeStructure KnowledgeStructure::cms(int users) {
    std::vector<std::vector<int>> known(static_cast<std::size_t>(users));
    for (int j = 0; j < users; ++j) {
        for (int k = 0; k <= j; ++k) known[static_cast<std::size_t>(j)].push_back(k);
    }
    return KnowledgeStructure(std::move(known));
}

KnowledgeStructure KnowledgeStructure::coms(int users) {
    std::vector<std::vector<int>> known(static_cast<std::size_t>(users));
    for (int j = 0; j + 1 < users; ++j) known[static_cast<std::size_t>(j)] = {j};
    if (users > 0) {
        known.back().resize(static_cast<std::size_t>(users));
        std::iota(known.back().begin(), known.back().end(), 0);
    }
    return KnowledgeStructure(std::move(known));
}

KnowledgeStructure KnowledgeStructure::pms(int users) {
    std::vector<std::vector<int>> known(static_cast<std::size_t>(users));
    for (int j = 0; j < users; ++j) known[static_cast<std::size_t>(j)] = j == 0 ? std::vector<int>{0} : std::vector{0, j};
    return KnowledgeStructure(std::move(known));
}

KnowledgeStructure KnowledgeStructure::ifc_cr(int users) {
    std::vector<std::vector<int>> known(static_cast<std::size_t>(users));
    for (int j = 0; j + 1 < users; ++j) {
        known[static_cast<std::size_t>(j)] = {j};
        known.back().push_back(j);
    }
    return KnowledgeStructure(std::move(known));
}

KnowledgeStructure KnowledgeStructure::ifc(int users) {
    std::vector<std::vector<int>> known(static_cast<std::size_t>(users));
    for (int j = 0; j < users; ++j) known[static_cast<std::size_t>(j)] = {j};
    return KnowledgeStructure(std::move(known));
}

KnowledgeStructure KnowledgeStructure::named(const std::string& name, int users) {
    if (name == "cms") return cms(users);
    if (name == "coms") return coms(users);
    if (name == "pms") return pms(users);
    if (name == "ifc-cr" || name == "ifc+cr") return ifc_cr(users);
    if (name == "ifc") return ifc(users);
    throw std::invalid_argument("unknown knowledge structure '" + name + "' (cms, coms, pms, ifc-cr, ifc)");
}

bool KnowledgeStructure::knows(int tx, int msg) const {
    const auto& set = known_.at(static_cast<std::size_t>(tx));
    return std::binary_search(set.begin(), set.end(), msg);
}

std::vector<int> KnowledgeStructure::carriers(int msg) const {
    std::vector<int> out;
    for (int j = 0; j < users(); ++j) {
        if (knows(j, msg)) out.push_back(j);
    }
    return out;
}

bool KnowledgeStructure::subset_of(const KnowledgeStructure& other) const {
    if (other.users() != users()) return false;
    for (int j = 0; j < users(); ++j) {
        for (int k : known(j)) {
            if (!other.knows(j, k)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

LinearScheme::LinearScheme(const KnowledgeStructure& knowledge, int levels, std::vector<int> bits)
    : levels_(levels), bits_(std::move(bits)) {
    if (static_cast<int>(bits_.size()) != knowledge.users()) {
        throw StructuralError("bit allocation has " + std::to_string(bits_.size()) + " entries for " +
                              std::to_string(knowledge.users()) + " users");
    }
    if (levels_ < 0 || levels_ > kMaxLevels) throw DomainError("unsupported level count");
    for (int b : bits_) {
        if (b < 0) throw DomainError("bit counts must be nonnegative");
    }
    for (int j = 0; j < knowledge.users(); ++j) {
        for (int k : knowledge.known(j)) {
            generators_.emplace(std::pair{j, k}, BinaryMatrix(static_cast<std::size_t>(levels_),
                                                              static_cast<std::size_t>(bits_[static_cast<std::size_t>(k)])));
        }
    }
}

int LinearScheme::total_bits() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

const BinaryMatrix& LinearScheme::generator(int tx, int msg) const {
    const auto it = generators_.find({tx, msg});
    if (it == generators_.end()) {
        throw StructuralError("Tx" + std::to_string(tx + 1) + " does not encode W" + std::to_string(msg + 1));
    }
    return it->second;
}

void LinearScheme::set_generator(int tx, int msg, BinaryMatrix g) {
    const auto it = generators_.find({tx, msg});
    if (it == generators_.end()) {
        throw StructuralError("Tx" + std::to_string(tx + 1) + " does not know W" + std::to_string(msg + 1));
    }
    if (g.rows() != static_cast<std::size_t>(levels_) ||
        g.cols() != static_cast<std::size_t>(bits_[static_cast<std::size_t>(msg)])) {
        throw StructuralError("generator G_{" + std::to_string(tx + 1) + "," + std::to_string(msg + 1) + "} must be " +
                              std::to_string(levels_) + "x" + std::to_string(bits_[static_cast<std::size_t>(msg)]));
    }
    it->second = std::move(g);
}

// ---------------------------------------------------------------------------

void check_consistent(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme) {
    const int k = channel.users();
    if (knowledge.users() != k || scheme.users() != k) {
        throw StructuralError("channel, knowledge and scheme disagree on the number of users");
    }
    if (scheme.levels() != channel.levels()) {
        throw StructuralError("scheme has " + std::to_string(scheme.levels()) + " levels, channel has " +
                              std::to_string(channel.levels()));
    }
    for (const auto& [key, g] : scheme.generators()) {
        const auto [tx, msg] = key;
        if (!knowledge.knows(tx, msg)) {
            throw StructuralError("generator for W" + std::to_string(msg + 1) + " at Tx" + std::to_string(tx + 1) +
                                  " which does not know it");
        }
        if (g.rows() != static_cast<std::size_t>(channel.levels()) ||
            g.cols() != static_cast<std::size_t>(scheme.bits()[static_cast<std::size_t>(msg)])) {
            throw StructuralError("generator shape mismatch");
        }
    }
    for (int msg = 0; msg < k; ++msg) {
        if (scheme.bits()[static_cast<std::size_t>(msg)] > 0 && knowledge.carriers(msg).empty()) {
            throw StructuralError("W" + std::to_string(msg + 1) + " has bits but no transmitter knows it");
        }
    }
}

std::vector<BinaryMatrix> receive_map(const LdaChannel& channel, const KnowledgeStructure& knowledge,
                                      const LinearScheme& scheme, int rx) {
    check_consistent(channel, knowledge, scheme);
    if (rx < 0 || rx >= channel.users()) throw StructuralError("receiver index out of range");
    const int m = channel.levels();
    std::vector<BinaryMatrix> maps;
    maps.reserve(static_cast<std::size_t>(channel.users()));
    for (int msg = 0; msg < channel.users(); ++msg) {
        BinaryMatrix acc(static_cast<std::size_t>(m), static_cast<std::size_t>(scheme.bits()[static_cast<std::size_t>(msg)]));
        for (int tx : knowledge.carriers(msg)) {
            if (!scheme.has_generator(tx, msg)) continue;
            acc += shift_matrix(m, channel.gain(rx, tx)) * scheme.generator(tx, msg);
        }
        maps.push_back(std::move(acc));
    }
    return maps;
}

DecodeCheck decode_check(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme,
                         int rx) {
    auto maps = receive_map(channel, knowledge, scheme, rx);
    DecodeCheck check;
    check.rx = rx;
    check.bits = scheme.bits()[static_cast<std::size_t>(rx)];

    std::vector<BinaryMatrix> interference;
    for (int k = 0; k < channel.users(); ++k) {
        if (k != rx) interference.push_back(maps[static_cast<std::size_t>(k)]);
    }
    const auto m = static_cast<std::size_t>(channel.levels());
    const BinaryMatrix interference_stack = interference.empty() ? BinaryMatrix(m, 0) : hstack(interference);
    const BinaryMatrix parts[] = {maps[static_cast<std::size_t>(rx)], interference_stack};
    check.interference_rank = interference_stack.rank();
    check.full_rank = hstack(parts).rank();
    check.decodable = check.bits == 0 ||
                      check.full_rank == check.interference_rank + static_cast<std::size_t>(check.bits);
    return check;
}

bool decodable(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme, int rx) {
    return decode_check(channel, knowledge, scheme, rx).decodable;
}

int SchemeRates::sum() const { return std::accumulate(rates.begin(), rates.end(), 0); }

SchemeRates scheme_rates(const LdaChannel& channel, const KnowledgeStructure& knowledge, const LinearScheme& scheme) {
    check_consistent(channel, knowledge, scheme);
    SchemeRates out;
    for (int rx = 0; rx < channel.users(); ++rx) {
        if (scheme.bits()[static_cast<std::size_t>(rx)] == 0) continue;
        if (!decodable(channel, knowledge, scheme, rx)) {
            out.failing_receiver = rx;
            return out;
        }
    }
    out.feasible = true;
    out.rates = scheme.bits();
    return out;
}

}  // namespace cifc
