#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pinturan {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) { return (w[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) { w[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t count(std::span<const Word> w) {
    std::size_t c = 0;
    for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

inline bool any(std::span<const Word> w) {
    return std::any_of(w.begin(), w.end(), [](Word x) { return x != 0; });
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

template <class F>
void for_each(std::span<const Word> w, F&& f) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word x = w[i];
        while (x) {
            f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

} // namespace bits

/// Fixed-length dynamic bitset; length is set at construction.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const { return bits::test(words_, i); }
    void set(std::size_t i) { bits::set(words_, i); }
    void reset(std::size_t i) { bits::reset(words_, i); }
    void set_all() {
        std::fill(words_.begin(), words_.end(), ~Word{0});
        trim();
    }
    std::size_t count() const { return bits::count(words_); }
    bool any() const { return bits::any(words_); }
    bool none() const { return !any(); }

    std::span<Word> words() noexcept { return words_; }
    std::span<const Word> words() const noexcept { return words_; }

    template <class F>
    void for_each(F&& f) const { bits::for_each(words_, std::forward<F>(f)); }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    void trim() {
        if (size_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace pinturan
