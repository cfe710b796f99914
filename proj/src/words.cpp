#include "deltacol/words.hpp"

#include "deltacol/error.hpp"

#include <algorithm>

namespace deltacol {

namespace {

// Binary value of `value` written into levels [from, from + width) of w,
// most significant bit first.
void write_suffix(BinaryWord& w, std::size_t from, std::size_t width, std::uint64_t value)
{
    for (std::size_t t = 0; t < width; ++t) {
        std::size_t shift = width - 1 - t;
        w.set(from + t, shift < 64 && ((value >> shift) & 1U) != 0);
    }
}

// Inverse of write_suffix. Suffixes with a set bit beyond the low 63 map to
// UINT64_MAX, which no generated suffix ever reaches.
std::uint64_t read_suffix(const BinaryWord& w, std::size_t from, std::size_t width)
{
    std::uint64_t value = 0;
    for (std::size_t t = 0; t < width; ++t) {
        const bool bit = w[from + t];
        if (width - t > 63) {
            if (bit)
                return UINT64_MAX;
            continue;
        }
        value = (value << 1) | (bit ? 1U : 0U);
    }
    return value;
}

// min(2^bits, cap) without overflow.
std::uint64_t capped_pow2(std::size_t bits, std::uint64_t cap)
{
    return bits >= 63 ? cap : std::min<std::uint64_t>(std::uint64_t{1} << bits, cap);
}

}  // namespace

BinaryWord BinaryWord::parse(std::string_view text)
{
    BinaryWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw Error(ErrorCode::InvalidParams, "word contains a character other than 0/1: " + std::string(text));
        w.set(i, text[i] == '1');
    }
    return w;
}

BinaryWord BinaryWord::from_index(std::size_t length, std::uint64_t index)
{
    BinaryWord w(length);
    write_suffix(w, 0, length, index);
    return w;
}

bool BinaryWord::at(std::size_t level) const
{
    if (level >= bits_.size())
        throw Error(ErrorCode::InvalidParams, "level out of range");
    return bits_[level] != 0;
}

std::optional<std::uint64_t> BinaryWord::index() const
{
    if (bits_.size() > 63)
        return std::nullopt;
    return read_suffix(*this, 0, bits_.size());
}

std::string BinaryWord::str() const
{
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] != 0)
            s[i] = '1';
    return s;
}

Level delta(const BinaryWord& x, const BinaryWord& y)
{
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch,
                    "words of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i])
            return static_cast<Level>(i);
    throw Error(ErrorCode::EqualWords, "delta is undefined on equal words " + x.str());
}

std::vector<BinaryWord> enumerate_cube(unsigned n, unsigned cap)
{
    if (n > cap)
        throw Error(ErrorCode::BudgetExceeded,
                    "cube dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<BinaryWord> words;
    words.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        words.push_back(BinaryWord::from_index(n, i));
    return words;
}

std::vector<BinaryWord> delta_chain(unsigned n, unsigned m)
{
    if (m > n)
        throw Error(ErrorCode::InvalidParams, "chain length exceeds word length");
    std::vector<BinaryWord> chain;
    chain.reserve(m);
    for (unsigned i = 0; i < m; ++i) {
        BinaryWord y(n);
        for (unsigned t = 0; t < i; ++t)
            y.set(t, true);
        chain.push_back(std::move(y));
    }
    return chain;
}

std::vector<BinaryWord> build_cycle_witness(
    unsigned n, Level m, unsigned k, const std::optional<std::pair<BinaryWord, BinaryWord>>& anchors)
{
    if (k < 3)
        throw Error(ErrorCode::InvalidParams, "cycle length must be at least 3");
    if (m >= n)
        throw Error(ErrorCode::InvalidParams, "level m must be below the word length");
    const std::size_t suffix_width = n - m - 1;

    if (k % 2 == 0) {
        if (anchors)
            throw Error(ErrorCode::InvalidParams, "even cycles are built without anchors");
        const std::uint64_t needed = (k + 1) / 2;
        if (capped_pow2(suffix_width, needed) < needed)
            throw Error(ErrorCode::NoRoom, "only 2^" + std::to_string(suffix_width) + " suffixes above level " +
                                               std::to_string(m) + " for " + std::to_string(needed) + " words");
        std::vector<BinaryWord> cycle;
        cycle.reserve(k);
        for (unsigned j = 0; j < k; ++j) {
            BinaryWord h(n);
            h.set(m, j % 2 == 1);
            write_suffix(h, m + 1, suffix_width, j / 2);
            cycle.push_back(std::move(h));
        }
        return cycle;
    }

    if (!anchors)
        throw Error(ErrorCode::InvalidParams, "odd cycles need anchor words (f, g)");
    const auto& [f, g] = *anchors;
    if (f.size() != n || g.size() != n)
        throw Error(ErrorCode::LengthMismatch, "anchor length differs from n");
    if (f == g || delta(f, g) <= m)
        throw Error(ErrorCode::InvalidAnchors, "anchors must satisfy delta(f, g) > m");

    // f and g agree through level m and differ above it, so both occupy
    // suffix slots on the f(m) side; the odd-indexed h's skip those two.
    const unsigned inner = k - 2;
    const std::uint64_t even_count = (inner + 1) / 2;
    const std::uint64_t odd_count = inner / 2;
    const std::uint64_t slots = capped_pow2(suffix_width, even_count + odd_count + 2);
    if (slots < even_count || slots < odd_count + 2)
        throw Error(ErrorCode::NoRoom, "not enough suffixes above level " + std::to_string(m) + " for " +
                                           std::to_string(inner) + " intermediate words");

    const std::uint64_t f_suffix = read_suffix(f, m + 1, suffix_width);
    const std::uint64_t g_suffix = read_suffix(g, m + 1, suffix_width);

    std::vector<BinaryWord> cycle{f, g};
    cycle.reserve(k);
    std::uint64_t next_odd_suffix = 0;
    for (unsigned j = 0; j < inner; ++j) {
        BinaryWord h = f;
        std::uint64_t suffix = 0;
        if (j % 2 == 0) {
            h.set(m, !f[m]);
            suffix = j / 2;
        } else {
            while (next_odd_suffix == f_suffix || next_odd_suffix == g_suffix)
                ++next_odd_suffix;
            suffix = next_odd_suffix++;
        }
        write_suffix(h, m + 1, suffix_width, suffix);
        cycle.push_back(std::move(h));
    }
    return cycle;
}

}  // namespace deltacol
