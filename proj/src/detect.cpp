#include "deltacol/detect.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_set>

namespace deltacol {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

// Least vertex first, then the smaller of its two neighbours.
std::vector<Vertex> normalized_cycle(std::vector<Vertex> cycle)
{
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

// ---------------------------------------------------------------------------
// Dense bit rows

struct BitRows {
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    explicit BitRows(std::size_t n) : words((n + 63) / 64), data(n * words, 0) {}

    std::uint64_t* row(std::size_t v) { return data.data() + v * words; }
    const std::uint64_t* row(std::size_t v) const { return data.data() + v * words; }
    void set(std::size_t v, std::size_t u) { row(v)[u >> 6] |= std::uint64_t{1} << (u & 63); }
    bool test(std::size_t v, std::size_t u) const { return (row(v)[u >> 6] >> (u & 63)) & 1U; }
};

BitRows class_rows(const ColourClassView& cls, std::size_t n)
{
    BitRows rows(n);
    for (auto [a, b] : cls.edges) {
        rows.set(a, b);
        rows.set(b, a);
    }
    return rows;
}

std::optional<std::vector<Vertex>> triangle_in_class(const ColourClassView& cls, std::size_t n)
{
    if (cls.edges.empty())
        return std::nullopt;
    const BitRows rows = class_rows(cls, n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j : cls.adjacency[i]) {
            if (j <= i)
                continue;
            const auto* ri = rows.row(i);
            const auto* rj = rows.row(j);
            // first common neighbour strictly above j
            for (std::size_t w = (j + 1) >> 6; w < rows.words; ++w) {
                std::uint64_t common = ri[w] & rj[w];
                if (w == ((j + 1) >> 6))
                    common &= ~std::uint64_t{0} << ((j + 1) & 63);
                if (common != 0)
                    return std::vector<Vertex>{i, j, static_cast<Vertex>(w * 64 + std::countr_zero(common))};
            }
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fixed-length cycle search: depth-first over simple paths from the least
// vertex s, neighbours ascending, with failed (visited set, endpoint) states
// memoized. The first completed path is the lexicographically least cycle
// sequence through s, which is automatically the canonical orientation.

template <std::size_t W>
struct Mask {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
    friend bool operator==(const Mask&, const Mask&) = default;
};

template <std::size_t W>
struct State {
    Mask<W> used;
    Vertex end;
    friend bool operator==(const State&, const State&) = default;
};

template <std::size_t W>
struct StateHash {
    std::size_t operator()(const State<W>& s) const noexcept
    {
        std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ s.end;
        for (auto x : s.used.w) {
            h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

template <std::size_t W>
class FixedCycleSearch {
public:
    FixedCycleSearch(const ColourClassView& cls, std::size_t n, std::size_t length)
        : cls_(cls), n_(n), length_(length), dist_(n)
    {
    }

    std::optional<std::vector<Vertex>> run()
    {
        for (Vertex s = 0; s < n_; ++s) {
            if (std::count_if(cls_.adjacency[s].begin(), cls_.adjacency[s].end(), [s](Vertex v) { return v > s; }) < 2)
                continue;
            start_ = s;
            distances_from(s);
            dead_.clear();
            path_.assign(1, s);
            Mask<W> used;
            used.set(s);
            if (extend(used))
                return path_;
        }
        return std::nullopt;
    }

private:
    void distances_from(Vertex s)
    {
        std::fill(dist_.begin(), dist_.end(), std::numeric_limits<std::size_t>::max());
        std::deque<Vertex> queue{s};
        dist_[s] = 0;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : cls_.adjacency[u])
                if (v > s && dist_[v] == std::numeric_limits<std::size_t>::max()) {
                    dist_[v] = dist_[u] + 1;
                    queue.push_back(v);
                }
        }
    }

    bool extend(Mask<W>& used)
    {
        const Vertex u = path_.back();
        const std::size_t depth = path_.size();
        if (depth == length_)
            return std::binary_search(cls_.adjacency[u].begin(), cls_.adjacency[u].end(), start_);
        for (Vertex v : cls_.adjacency[u]) {
            if (v <= start_ || used.test(v) || dist_[v] > length_ - depth)
                continue;
            used.set(v);
            State<W> key{used, v};
            if (!dead_.contains(key)) {
                path_.push_back(v);
                if (extend(used))
                    return true;
                path_.pop_back();
                dead_.insert(key);
            }
            used.reset(v);
        }
        return false;
    }

    const ColourClassView& cls_;
    std::size_t n_;
    std::size_t length_;
    Vertex start_ = 0;
    std::vector<std::size_t> dist_;
    std::vector<Vertex> path_;
    std::unordered_set<State<W>, StateHash<W>> dead_;
};

std::optional<std::vector<Vertex>> cycle_in_class(const ColourClassView& cls, std::size_t n, std::size_t length)
{
    if (cls.edges.size() < length)
        return std::nullopt;
    if (n <= 64)
        return FixedCycleSearch<1>(cls, n, length).run();
    if (n <= 128)
        return FixedCycleSearch<2>(cls, n, length).run();
    if (n <= 256)
        return FixedCycleSearch<4>(cls, n, length).run();
    if (n <= 512)
        return FixedCycleSearch<8>(cls, n, length).run();
    throw Error(ErrorCode::BudgetExceeded, "cycle search for length >= 4 is limited to 512 vertices");
}

// ---------------------------------------------------------------------------
// Maximum clique (colour-ordered branch and bound)

class CliqueSearch {
public:
    CliqueSearch(const BitRows& rows, std::size_t n, std::uint64_t cap, std::uint64_t& nodes)
        : rows_(rows), n_(n), cap_(cap), nodes_(nodes)
    {
    }

    bool stopped() const noexcept { return stopped_; }

    /// Improves `best` only with strictly larger cliques.
    void run(std::vector<Vertex>& best)
    {
        best_ = &best;
        std::vector<std::uint64_t> cand(rows_.words, 0);
        for (std::size_t v = 0; v < n_; ++v)
            cand[v >> 6] |= std::uint64_t{1} << (v & 63);
        current_.clear();
        expand(cand);
    }

private:
    void expand(std::vector<std::uint64_t>& cand)
    {
        if (nodes_ >= cap_) {
            stopped_ = true;
            return;
        }
        ++nodes_;

        std::vector<Vertex> order;
        std::vector<unsigned> bound;
        std::vector<std::uint64_t> remaining = cand;
        unsigned colour = 0;
        while (std::any_of(remaining.begin(), remaining.end(), [](auto x) { return x != 0; })) {
            ++colour;
            std::vector<std::uint64_t> avail = remaining;
            for (std::size_t w = 0; w < avail.size(); ++w)
                while (avail[w] != 0) {
                    const std::size_t v = w * 64 + std::countr_zero(avail[w]);
                    remaining[w] &= ~(std::uint64_t{1} << (v & 63));
                    const auto* row = rows_.row(v);
                    for (std::size_t t = 0; t < avail.size(); ++t)
                        avail[t] &= ~row[t];
                    avail[w] &= ~(std::uint64_t{1} << (v & 63));
                    order.push_back(static_cast<Vertex>(v));
                    bound.push_back(colour);
                }
        }

        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_->size())
                return;
            const Vertex v = order[i];
            current_.push_back(v);
            std::vector<std::uint64_t> next(cand.size());
            const auto* row = rows_.row(v);
            bool any = false;
            for (std::size_t t = 0; t < cand.size(); ++t) {
                next[t] = cand[t] & row[t];
                any = any || next[t] != 0;
            }
            if (!any) {
                if (current_.size() > best_->size())
                    *best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            if (stopped_)
                return;
        }
    }

    const BitRows& rows_;
    std::size_t n_;
    std::uint64_t cap_;
    std::uint64_t& nodes_;
    bool stopped_ = false;
    std::vector<Vertex>* best_ = nullptr;
    std::vector<Vertex> current_;
};

// ---------------------------------------------------------------------------
// DSATUR branch and bound

class DsaturSearch {
public:
    DsaturSearch(const ColourClassView& cls, std::size_t n, std::uint64_t cap)
        : cls_(cls), n_(n), cap_(cap), colour_(n, -1)
    {
    }

    unsigned greedy()
    {
        std::vector<int> saved = colour_;
        unsigned used = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            const Vertex v = pick();
            const unsigned col = least_free(v);
            colour_[v] = static_cast<int>(col);
            used = std::max(used, col + 1);
        }
        colour_ = saved;
        return used;
    }

    /// Returns false when the node cap stopped the search.
    bool solve(unsigned lower, unsigned& best)
    {
        lower_ = lower;
        best_ = &best;
        recurse(0, 0);
        return !stopped_;
    }

private:
    bool neighbour_has(Vertex v, int col) const
    {
        return std::any_of(cls_.adjacency[v].begin(), cls_.adjacency[v].end(),
                           [&](Vertex u) { return colour_[u] == col; });
    }

    unsigned least_free(Vertex v) const
    {
        unsigned col = 0;
        while (neighbour_has(v, static_cast<int>(col)))
            ++col;
        return col;
    }

    Vertex pick() const
    {
        Vertex chosen = 0;
        int best_sat = -1;
        int best_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            std::vector<int> seen;
            int deg = 0;
            for (Vertex u : cls_.adjacency[v]) {
                if (colour_[u] >= 0)
                    seen.push_back(colour_[u]);
                else
                    ++deg;
            }
            std::sort(seen.begin(), seen.end());
            const int sat = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                chosen = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return chosen;
    }

    void recurse(std::size_t coloured, unsigned used)
    {
        if (stopped_ || *best_ == lower_)
            return;
        if (nodes_ >= cap_) {
            stopped_ = true;
            return;
        }
        ++nodes_;
        if (coloured == n_) {
            *best_ = std::min(*best_, used);
            return;
        }
        const Vertex v = pick();
        for (unsigned col = 0; col <= used; ++col) {
            if (col == used && used + 1 >= *best_)
                break;
            if (neighbour_has(v, static_cast<int>(col)))
                continue;
            colour_[v] = static_cast<int>(col);
            recurse(coloured + 1, std::max(used, col + 1));
            colour_[v] = -1;
            if (stopped_ || *best_ == lower_)
                return;
        }
    }

    const ColourClassView& cls_;
    std::size_t n_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    unsigned lower_ = 1;
    unsigned* best_ = nullptr;
    std::vector<int> colour_;
};

}  // namespace

bool is_valid_cycle(const PairColouring& c, const CycleWitness& w)
{
    const auto& vs = w.vertices;
    if (vs.size() < 3)
        return false;
    for (Vertex v : vs)
        if (v >= c.size())
            return false;
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (c.colour(vs[i], vs[(i + 1) % vs.size()]) != w.colour)
            return false;
    return true;
}

bool is_valid_side_assignment(const PairColouring& c, const SideAssignment& s)
{
    if (s.sides.size() != c.palette())
        return false;
    for (const auto& row : s.sides)
        if (row.size() != c.size() || std::any_of(row.begin(), row.end(), [](auto b) { return b > 1; }))
            return false;
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const Colour col = c.colour(a, b);
            if (s.sides[col][a] == s.sides[col][b])
                return false;
        }
    return true;
}

std::optional<CycleWitness> find_mono_cycle(const PairColouring& c, std::size_t length)
{
    if (length < 3 || length > c.size())
        throw Error(ErrorCode::InvalidParams, "cycle length must lie in [3, N]");
    for (Colour col = 0; col < c.palette(); ++col) {
        const ColourClassView cls = colour_class(c, col);
        auto found = length == 3 ? triangle_in_class(cls, c.size()) : cycle_in_class(cls, c.size(), length);
        if (found)
            return CycleWitness{std::move(*found), col};
    }
    return std::nullopt;
}

std::variant<SideAssignment, CycleWitness> check_odd_cycle_free(const PairColouring& c)
{
    const std::size_t n = c.size();
    const auto classes = colour_classes(c);
    SideAssignment result;
    result.sides.reserve(c.palette());
    std::vector<Vertex> parent(n);
    std::vector<std::size_t> depth(n);

    for (const auto& cls : classes) {
        std::vector<std::uint8_t> side(n, kUnset);
        for (Vertex root = 0; root < n; ++root) {
            if (side[root] != kUnset)
                continue;
            side[root] = 0;
            parent[root] = root;
            depth[root] = 0;
            std::deque<Vertex> queue{root};
            while (!queue.empty()) {
                const Vertex u = queue.front();
                queue.pop_front();
                for (Vertex w : cls.adjacency[u]) {
                    if (side[w] == kUnset) {
                        side[w] = static_cast<std::uint8_t>(1 - side[u]);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if (side[w] == side[u]) {
                        // Equal sides mean equal depth parity: the tree paths
                        // to the common ancestor plus edge (u, w) form an odd cycle.
                        std::vector<Vertex> left{u};
                        std::vector<Vertex> right{w};
                        Vertex a = u;
                        Vertex b = w;
                        while (depth[a] > depth[b])
                            left.push_back(a = parent[a]);
                        while (depth[b] > depth[a])
                            right.push_back(b = parent[b]);
                        while (a != b) {
                            left.push_back(a = parent[a]);
                            right.push_back(b = parent[b]);
                        }
                        right.pop_back();
                        left.insert(left.end(), right.rbegin(), right.rend());
                        return CycleWitness{normalized_cycle(std::move(left)), cls.colour};
                    }
                }
            }
        }
        result.sides.push_back(std::move(side));
    }
    return result;
}

SideAssignment require_odd_cycle_free(const PairColouring& c)
{
    auto outcome = check_odd_cycle_free(c);
    if (auto* cycle = std::get_if<CycleWitness>(&outcome))
        throw NotOddCycleFreeError(std::move(*cycle));
    return std::get<SideAssignment>(std::move(outcome));
}

MonoSet largest_mono_set(const PairColouring& c, std::uint64_t node_cap)
{
    MonoSet result;
    std::vector<Vertex> best{0};
    Colour best_colour = 0;
    bool optimal = true;
    std::uint64_t nodes = 0;
    for (Colour col = 0; col < c.palette(); ++col) {
        const ColourClassView cls = colour_class(c, col);
        if (cls.edges.empty())
            continue;
        const BitRows rows = class_rows(cls, c.size());
        const std::size_t before = best.size();
        CliqueSearch search(rows, c.size(), node_cap, nodes);
        search.run(best);
        if (best.size() > before)
            best_colour = col;
        if (search.stopped()) {
            optimal = false;
            break;
        }
    }
    std::sort(best.begin(), best.end());
    result.colour = best_colour;
    result.vertices = std::move(best);
    result.optimal = optimal;
    result.nodes = nodes;
    return result;
}

ChromaticResult colour_class_chromatic_number(const PairColouring& c, Colour colour, std::uint64_t node_cap)
{
    if (colour >= c.palette())
        throw Error(ErrorCode::InvalidParams, "colour outside palette");
    const ColourClassView cls = colour_class(c, colour);
    ChromaticResult result;
    if (cls.edges.empty())
        return result;

    // Lower bound from a maximum clique of the class.
    std::uint64_t clique_nodes = 0;
    std::vector<Vertex> clique{0};
    const BitRows rows = class_rows(cls, c.size());
    CliqueSearch clique_search(rows, c.size(), node_cap, clique_nodes);
    clique_search.run(clique);
    const unsigned lower = static_cast<unsigned>(clique.size());

    DsaturSearch search(cls, c.size(), node_cap);
    unsigned best = search.greedy();
    const bool finished = lower == best || search.solve(lower, best);
    result.lower = finished ? best : lower;
    result.upper = best;
    result.exact = finished;
    result.value = finished ? best : lower;
    return result;
}

std::optional<FloorViolation> regressive_floor_check(const PairColouring& c, const FloorSchedule& schedule)
{
    if (!c.has_labels())
        throw Error(ErrorCode::MissingLabels, "the floor check needs word labels");
    for (const auto& k : schedule.avoided_lengths)
        if (k && *k < 3)
            throw Error(ErrorCode::InvalidParams, "avoided cycle lengths must be >= 3");
    if (!regressivity_report(c).is_delta_regressive)
        throw Error(ErrorCode::NotRegressive, "the floor check needs a Delta-regressive colouring");
    for (unsigned m = 1; m <= schedule.levels; ++m)
        for (Vertex a = 0; a < c.size(); ++a)
            for (Vertex b = a + 1; b < c.size(); ++b)
                if (delta(c.label(a), c.label(b)) >= m && c.colour(a, b) + 1 < m)
                    return FloorViolation{m, {a, b}};
    return std::nullopt;
}

}  // namespace deltacol
