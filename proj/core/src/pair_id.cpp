#include "pinturan/pair_id.hpp"

#include "pinturan/errors.hpp"

#include <algorithm>
#include <string>

namespace pinturan {

PairIndex::PairIndex(std::size_t n) : n_(n), offsets_(n + 1, 0) {
    // offsets_[u] = id of the pair {u, u+1}
    for (std::size_t u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + static_cast<std::uint32_t>(n - u - 1);
}

PairId PairIndex::encode(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    if (u == v || v >= n_)
        throw DomainError("invalid pair {" + std::to_string(u) + "," + std::to_string(v) + "} for n = " +
                          std::to_string(n_));
    return PairId{offsets_[u] + (v - u - 1)};
}

Edge PairIndex::decode(PairId id) const {
    if (!valid(id)) throw DomainError("pair id " + std::to_string(id.value) + " out of range for n = " + std::to_string(n_));
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id.value);
    const auto u = static_cast<Vertex>(it - offsets_.begin() - 1);
    return {u, u + 1 + (id.value - offsets_[u])};
}

PairId encode_pair(Vertex u, Vertex v, std::size_t n) {
    if (u > v) std::swap(u, v);
    if (u == v || v >= n)
        throw DomainError("invalid pair {" + std::to_string(u) + "," + std::to_string(v) + "} for n = " +
                          std::to_string(n));
    const std::uint64_t id = std::uint64_t{u} * n - std::uint64_t{u} * (u + 1) / 2 + (v - u - 1);
    return PairId{static_cast<std::uint32_t>(id)};
}

Edge decode_pair(PairId id, std::size_t n) {
    if (id.value >= pair_count(n))
        throw DomainError("pair id " + std::to_string(id.value) + " out of range for n = " + std::to_string(n));
    std::uint64_t rest = id.value;
    Vertex u = 0;
    while (rest >= n - u - 1) {
        rest -= n - u - 1;
        ++u;
    }
    return {u, static_cast<Vertex>(u + 1 + rest)};
}

} // namespace pinturan
