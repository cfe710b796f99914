#include "deltacol/maximality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "deltacol/detect.hpp"

namespace deltacol {

namespace {

void check_palette(const PairColouring& c, const VertexColouring& d)
{
    if (d.d.size() != c.size())
        throw Error(ErrorCode::PaletteMismatch, "d has " + std::to_string(d.d.size()) + " values for " +
                                                    std::to_string(c.size()) + " vertices");
    for (Colour v : d.d)
        if (v >= c.palette())
            throw Error(ErrorCode::PaletteMismatch, "d takes value " + std::to_string(v) + " outside the palette");
}

void require_triangle_free(const PairColouring& c)
{
    if (c.size() >= 3)
        if (auto tri = find_mono_cycle(c, 3))
            throw Error(ErrorCode::NotTriangleFree, "monochromatic triangle in colour " + std::to_string(tri->colour));
}

// Backtracking over vertices in index order, colours ascending. Assigning
// d(y) = xi is pruned when an earlier x has d(x) = xi = c(x, y).
class WitnessSearch {
public:
    WitnessSearch(const PairColouring& c, std::uint64_t max_nodes, std::uint64_t& nodes)
        : c_(c), max_nodes_(max_nodes), nodes_(nodes), d_(c.size(), 0)
    {
    }

    bool run() { return assign(0); }
    const std::vector<Colour>& result() const { return d_; }

private:
    bool assign(Vertex y)
    {
        if (y == c_.size())
            return true;
        for (Colour xi = 0; xi < c_.palette(); ++xi) {
            if (nodes_ >= max_nodes_)
                throw Error(ErrorCode::BudgetExceeded, "witness search exceeded " + std::to_string(max_nodes_) + " nodes");
            ++nodes_;
            bool clash = false;
            for (Vertex x = 0; x < y && !clash; ++x)
                clash = d_[x] == xi && c_.colour(x, y) == xi;
            if (clash)
                continue;
            d_[y] = xi;
            if (assign(y + 1))
                return true;
        }
        return false;
    }

    const PairColouring& c_;
    std::uint64_t max_nodes_;
    std::uint64_t& nodes_;
    std::vector<Colour> d_;
};

}  // namespace

std::optional<Violation> find_violation(const PairColouring& c, const VertexColouring& d)
{
    check_palette(c, d);
    for (Vertex x = 0; x < c.size(); ++x)
        for (Vertex y = x + 1; y < c.size(); ++y)
            if (d.d[x] == d.d[y] && c.colour(x, y) == d.d[x])
                return Violation{x, y, d.d[x]};
    return std::nullopt;
}

std::variant<Maximal, VertexColouring> decide_maximal_unchecked(const PairColouring& c, std::uint64_t max_nodes,
                                                                std::uint64_t& nodes)
{
    WitnessSearch search(c, max_nodes, nodes);
    if (search.run())
        return VertexColouring{search.result()};
    return Maximal{};
}

std::variant<Maximal, VertexColouring> decide_maximal_triangle_free(const PairColouring& c, MaximalityOracle oracle,
                                                                    std::uint64_t max_nodes)
{
    require_triangle_free(c);
    if (oracle == MaximalityOracle::Backtracking) {
        std::uint64_t nodes = 0;
        return decide_maximal_unchecked(c, max_nodes, nodes);
    }

    // Exhaustive: every d in lexicographic order (vertex 0 most significant).
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (total > max_nodes / c.palette())
            throw Error(ErrorCode::BudgetExceeded, "palette^N exceeds the exhaustive budget");
        total *= c.palette();
    }
    VertexColouring d{std::vector<Colour>(c.size(), 0)};
    for (std::uint64_t count = 0; count < total; ++count) {
        if (!find_violation(c, d))
            return d;
        for (std::size_t pos = c.size(); pos-- > 0;) {
            if (++d.d[pos] < c.palette())
                break;
            d.d[pos] = 0;
        }
    }
    return Maximal{};
}

Violation diagonal_violation(const VertexColouring& d, unsigned n)
{
    if (n < 1 || n >= 32 || d.d.size() != (std::size_t{1} << n))
        throw Error(ErrorCode::InvalidParams, "d must be defined on the whole cube 2^n with 1 <= n < 32");
    for (Colour v : d.d)
        if (v >= n)
            throw Error(ErrorCode::RangeOutOfPalette, "d takes value " + std::to_string(v) + " outside {0..n-1}");

    // Vertices extending the prefix z|alpha form the index block
    // [base, base + 2^(n - alpha)); its halves are the two choices of z(alpha).
    std::uint64_t base = 0;
    for (unsigned alpha = 0; alpha < n; ++alpha) {
        const std::uint64_t half = std::uint64_t{1} << (n - alpha - 1);
        std::optional<Vertex> witness[2];
        for (unsigned i = 0; i < 2; ++i)
            for (std::uint64_t v = base + i * half; v < base + (i + 1) * half; ++v)
                if (d.d[v] == alpha) {
                    witness[i] = static_cast<Vertex>(v);
                    break;
                }
        if (witness[0] && witness[1])
            return Violation{*witness[0], *witness[1], alpha};
        if (witness[0])
            base += half;  // z(alpha) = 1
    }
    // z is now a single vertex with d(z) = alpha for some alpha < n, and z
    // lies in the half that the walk claimed was free of such vertices.
    throw std::logic_error("diagonal walk completed without finding a violation");
}

bool has_injective_fibers(const PairColouring& c)
{
    std::vector<bool> seen(c.palette());
    for (Vertex b = 2; b < c.size(); ++b) {
        std::fill(seen.begin(), seen.end(), false);
        for (Vertex a = 0; a < b; ++a) {
            const Colour col = c.colour(a, b);
            if (seen[col])
                return false;
            seen[col] = true;
        }
    }
    return true;
}

VertexColouring injective_fiber_witness(const PairColouring& c)
{
    if (c.size() < 3)
        throw Error(ErrorCode::InvalidParams, "needs at least 3 vertices");
    if (c.palette() < 2)
        throw Error(ErrorCode::PaletteTooSmall, "needs at least 2 colours");
    if (!has_injective_fibers(c))
        throw Error(ErrorCode::FiberNotInjective, "some fiber c(., b) repeats a colour");

    const Colour i = c.colour(0, 1) == 0 ? 1 : 0;
    VertexColouring d{std::vector<Colour>(c.size(), i)};
    for (Vertex a = 2; a < c.size(); ++a)
        d.d[a] = c.colour(0, a) != i ? c.colour(0, a) : c.colour(1, a);
    return d;
}

PairColouring extend_by_witness(const PairColouring& c, const VertexColouring& d)
{
    require_triangle_free(c);
    if (auto v = find_violation(c, d))
        throw ViolationExistsError(*v);
    const std::size_t n = c.size();
    std::vector<Colour> pairs;
    pairs.reserve(PairColouring::pair_count(n + 1));
    for (Vertex a = 0; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            pairs.push_back(b == n ? d.d[a] : c.colour(a, b));
    return PairColouring(n + 1, c.palette(), std::move(pairs));
}

}  // namespace deltacol
