#pragma once

#include "pinturan/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pinturan {

/// Canonical index of an unordered pair {u, v}, u < v, among all pairs of [n]:
/// u*n - u(u+1)/2 + (v - u - 1). Strictly increasing in lexicographic pair order.
struct PairId {
    std::uint32_t value = 0;
    bool operator==(const PairId&) const = default;
    auto operator<=>(const PairId&) const = default;
};

constexpr std::uint64_t pair_count(std::size_t n) { return n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2; }

/// Encode/decode table for one vertex count.
class PairIndex {
public:
    PairIndex() = default;
    explicit PairIndex(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(pair_count(n_)); }

    PairId encode(Vertex u, Vertex v) const;
    Edge decode(PairId id) const;
    bool valid(PairId id) const noexcept { return id.value < size(); }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> offsets_;
};

PairId encode_pair(Vertex u, Vertex v, std::size_t n);
Edge decode_pair(PairId id, std::size_t n);

} // namespace pinturan
