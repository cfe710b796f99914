#pragma once

// Binary words of a fixed length, the first-disagreement function and the
// explicit word families used as witnesses (chains and alternating cycles).
//
// Convention: level 0 is the leftmost character of the textual form, and the
// lexicographic order compares level 0 first. A word of length n therefore
// has cube index sum_i bit(i) * 2^(n-1-i).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deltacol {

using Level = std::uint32_t;

/// Default cap on the dimension of operations that materialize a full cube.
inline constexpr unsigned kDefaultCubeCap = 24;

class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::size_t length) : bits_(length, 0) {}

    /// Parses a string over {'0','1'}; anything else is InvalidParams.
    static BinaryWord parse(std::string_view text);

    /// The word of the given length whose cube index is `index`. Levels that
    /// lie more than 64 positions from the right end are zero.
    static BinaryWord from_index(std::size_t length, std::uint64_t index);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    bool operator[](std::size_t level) const { return bits_[level] != 0; }
    bool at(std::size_t level) const;
    void set(std::size_t level, bool bit) { bits_[level] = bit ? 1 : 0; }

    /// Cube index; only defined for words of length <= 63.
    std::optional<std::uint64_t> index() const;

    std::string str() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b)
    {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

/// Least level at which x and y disagree.
/// Throws LengthMismatch for unequal lengths, EqualWords when x == y.
Level delta(const BinaryWord& x, const BinaryWord& y);

/// delta on cube indices of two distinct words of length n (n <= 63).
inline Level delta_index(unsigned n, std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t diff = a ^ b;
    unsigned width = 0;
    while (diff != 0) {
        ++width;
        diff >>= 1;
    }
    return static_cast<Level>(n - width);
}

/// All 2^n words of length n in lexicographic order. BudgetExceeded if n > cap.
std::vector<BinaryWord> enumerate_cube(unsigned n, unsigned cap = kDefaultCubeCap);

/// Words y_i = 1^i 0^(n-i), i < m, with delta(y_i, y_j) = min(i, j).
std::vector<BinaryWord> delta_chain(unsigned n, unsigned m);

/// Alternating cycle words at level m.
///
/// Without anchors (k even): h_0..h_{k-1} share the all-zero prefix below m,
/// carry bit (j mod 2) at level m and floor(j/2) in binary above m, so every
/// cyclically consecutive pair has delta exactly m.
///
/// With anchors (f, g) (k odd, delta(f, g) > m): returns <f, g, h_0..h_{k-3}>
/// where every h_j extends f restricted to m, even-indexed h_j flip f's bit at
/// level m and odd-indexed ones keep it. Consecutive h's, and f or g against
/// an even h, then meet at delta exactly m.
///
/// Errors: InvalidParams (k < 3, parity/anchor mismatch, m >= n),
/// InvalidAnchors (delta(f, g) <= m), NoRoom (suffix space too small).
std::vector<BinaryWord> build_cycle_witness(
    unsigned n, Level m, unsigned k,
    const std::optional<std::pair<BinaryWord, BinaryWord>>& anchors = std::nullopt);

}  // namespace deltacol
