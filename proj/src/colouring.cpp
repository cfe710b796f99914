#include "deltacol/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deltacol/error.hpp"
#include "deltacol/random.hpp"

namespace deltacol {

namespace {

void check_pair_budget(std::size_t n_vertices)
{
    if (PairColouring::pair_count(n_vertices) > kMaxPairs)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(n_vertices) + " vertices exceed the pair budget of " + std::to_string(kMaxPairs));
}

void check_cube(unsigned n, unsigned cube_cap)
{
    if (n > cube_cap)
        throw Error(ErrorCode::BudgetExceeded,
                    "cube dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cube_cap));
    if (n >= 32)
        throw Error(ErrorCode::BudgetExceeded, "cube dimension " + std::to_string(n) + " is not materializable");
    check_pair_budget(std::size_t{1} << n);
}

// Fills pairs in serialization order from colour_of(a, b).
template <typename F>
std::vector<Colour> fill_pairs(std::size_t n_vertices, F&& colour_of)
{
    std::vector<Colour> pairs;
    pairs.reserve(PairColouring::pair_count(n_vertices));
    for (Vertex a = 0; a < n_vertices; ++a)
        for (Vertex b = a + 1; b < n_vertices; ++b)
            pairs.push_back(colour_of(a, b));
    return pairs;
}

}  // namespace

PairColouring::PairColouring(std::size_t n_vertices, Colour palette, std::vector<Colour> pairs,
                             std::vector<BinaryWord> labels, std::optional<Level> mu)
    : n_(n_vertices), palette_(palette), pairs_(std::move(pairs)), labels_(std::move(labels)), mu_(mu)
{
    if (n_ < 1)
        throw Error(ErrorCode::InvalidParams, "a colouring needs at least one vertex");
    if (palette_ < 1)
        throw Error(ErrorCode::InvalidParams, "palette must be at least 1");
    if (pairs_.size() != pair_count(n_))
        throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(pair_count(n_)) + " pair colours, got " +
                                                  std::to_string(pairs_.size()));
    for (Colour col : pairs_)
        if (col >= palette_)
            throw Error(ErrorCode::InvalidParams,
                        "colour " + std::to_string(col) + " outside palette " + std::to_string(palette_));
    if (!labels_.empty()) {
        if (labels_.size() != n_)
            throw Error(ErrorCode::InvalidParams, "label count differs from vertex count");
        for (const auto& w : labels_)
            if (w.size() != labels_.front().size())
                throw Error(ErrorCode::InvalidParams, "labels have different lengths");
        std::vector<const BinaryWord*> sorted;
        sorted.reserve(n_);
        for (const auto& w : labels_)
            sorted.push_back(&w);
        std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) { return *x < *y; });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (*sorted[i] == *sorted[i - 1])
                throw Error(ErrorCode::InvalidParams, "duplicate label " + sorted[i]->str());
    }
    if (mu_) {
        if (labels_.empty())
            throw Error(ErrorCode::InvalidParams, "mu requires word labels");
        if (*mu_ > labels_.front().size())
            throw Error(ErrorCode::InvalidParams, "mu exceeds the label length");
    }
}

PairColouring PairColouring::constant(std::size_t n_vertices, Colour palette, Colour colour)
{
    check_pair_budget(n_vertices);
    return PairColouring(n_vertices, palette, std::vector<Colour>(pair_count(n_vertices), colour));
}

const BinaryWord& PairColouring::label(Vertex v) const
{
    if (labels_.empty())
        throw Error(ErrorCode::MissingLabels, "instance has no word labels");
    return labels_.at(v);
}

std::size_t PairColouring::word_length() const
{
    if (labels_.empty())
        throw Error(ErrorCode::MissingLabels, "instance has no word labels");
    return labels_.front().size();
}

PairColouring PairColouring::with_mu(std::optional<Level> mu) const
{
    return PairColouring(n_, palette_, pairs_, labels_, mu);
}

PairColouring PairColouring::with_labels(std::vector<BinaryWord> labels) const
{
    const auto mu = labels.empty() ? std::nullopt : mu_;
    return PairColouring(n_, palette_, pairs_, std::move(labels), mu);
}

ColourClassView colour_class(const PairColouring& c, Colour colour)
{
    ColourClassView view;
    view.colour = colour;
    view.adjacency.resize(c.size());
    std::size_t idx = 0;
    const auto pairs = c.pairs();
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b, ++idx)
            if (pairs[idx] == colour) {
                view.edges.emplace_back(a, b);
                view.adjacency[a].push_back(b);
                view.adjacency[b].push_back(a);
            }
    for (auto& row : view.adjacency)
        std::sort(row.begin(), row.end());
    return view;
}

std::vector<ColourClassView> colour_classes(const PairColouring& c)
{
    std::vector<ColourClassView> views(c.palette());
    for (Colour col = 0; col < c.palette(); ++col) {
        views[col].colour = col;
        views[col].adjacency.resize(c.size());
    }
    std::size_t idx = 0;
    const auto pairs = c.pairs();
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b, ++idx) {
            auto& view = views[pairs[idx]];
            view.edges.emplace_back(a, b);
            view.adjacency[a].push_back(b);
            view.adjacency[b].push_back(a);
        }
    // Rows are already ascending: a's row receives b in increasing order and
    // b's row receives a in increasing order before any larger neighbour.
    return views;
}

PairColouring make_delta_colouring(unsigned n, unsigned cube_cap)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParams, "the Delta colouring needs n >= 1");
    check_cube(n, cube_cap);
    const std::size_t count = std::size_t{1} << n;
    auto pairs = fill_pairs(count, [n](Vertex a, Vertex b) { return delta_index(n, a, b); });
    return PairColouring(count, n, std::move(pairs), enumerate_cube(n, cube_cap));
}

PairColouring make_observation_colouring(unsigned n, unsigned cube_cap)
{
    if (n < 2)
        throw Error(ErrorCode::InvalidParams, "the observation colouring needs n >= 2");
    check_cube(n, cube_cap);
    const std::size_t count = std::size_t{1} << n;
    auto level1 = [n](Vertex v) -> Colour { return (v >> (n - 2)) & 1U; };
    auto pairs = fill_pairs(count, [&](Vertex a, Vertex b) -> Colour {
        const Level d = delta_index(n, a, b);
        return d > 0 ? d - 1 : (level1(a) + level1(b)) % 2;
    });
    return PairColouring(count, std::max(n - 1, 2U), std::move(pairs), enumerate_cube(n, cube_cap));
}

PairColouring transport_colouring(std::size_t s, unsigned mu, const std::optional<std::vector<BinaryWord>>& embedding)
{
    if (s < 1)
        throw Error(ErrorCode::InvalidParams, "need at least one vertex");
    if (mu == 0 && s >= 2)
        throw Error(ErrorCode::InvalidParams, "mu = 0 leaves no colours for any pair");
    if (mu < 64 && s > (std::uint64_t{1} << mu))
        throw Error(ErrorCode::TooManyVertices,
                    std::to_string(s) + " vertices do not fit into 2^" + std::to_string(mu));
    check_pair_budget(s);

    std::vector<BinaryWord> labels;
    if (embedding) {
        if (embedding->size() != s)
            throw Error(ErrorCode::InvalidParams, "embedding size differs from s");
        for (const auto& w : *embedding)
            if (w.size() != mu)
                throw Error(ErrorCode::LengthMismatch, "embedding word length differs from mu");
        labels = *embedding;
    } else {
        labels.reserve(s);
        for (std::size_t i = 0; i < s; ++i)
            labels.push_back(BinaryWord::from_index(mu, i));
    }
    auto pairs = fill_pairs(s, [&](Vertex a, Vertex b) { return delta(labels[a], labels[b]); });
    // The PairColouring constructor rejects non-injective embeddings.
    return PairColouring(s, std::max(mu, 1U), std::move(pairs), std::move(labels), mu);
}

RegressivityReport regressivity_report(const PairColouring& c)
{
    if (!c.has_labels())
        throw Error(ErrorCode::MissingLabels, "regressivity needs word labels");
    RegressivityReport report;
    const Level n = static_cast<Level>(c.word_length());
    Level threshold = 0;
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const Level d = delta(c.label(a), c.label(b));
            const Colour col = c.colour(a, b);
            if (d > 0 && col >= d)
                report.violations.emplace_back(a, b);
            // c < max(d, mu) fails only when c >= d; then mu must exceed c.
            if (col >= d)
                threshold = std::max<Level>(threshold, col + 1);
        }
    report.is_delta_regressive = report.violations.empty();
    if (threshold <= n)
        report.min_threshold = threshold;
    return report;
}

std::vector<VertexPair> almost_regressive_violations(const PairColouring& c, Level mu)
{
    if (!c.has_labels())
        throw Error(ErrorCode::MissingLabels, "regressivity needs word labels");
    std::vector<VertexPair> out;
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b)
            if (c.colour(a, b) >= std::max(delta(c.label(a), c.label(b)), mu))
                out.emplace_back(a, b);
    return out;
}

PairColouring random_colouring(const SizeSpec& size, Colour palette, const Constraint& constraint,
                               std::uint64_t seed, unsigned cube_cap)
{
    if (palette < 1)
        throw Error(ErrorCode::InvalidParams, "palette must be at least 1");

    std::size_t count = 0;
    std::vector<BinaryWord> labels;
    unsigned n = 0;
    if (const auto* cube = std::get_if<CubeSize>(&size)) {
        n = cube->n;
        check_cube(n, cube_cap);
        count = std::size_t{1} << n;
        labels = enumerate_cube(n, cube_cap);
    } else {
        count = std::get<VertexCount>(size).n_vertices;
        if (count < 1)
            throw Error(ErrorCode::InvalidParams, "need at least one vertex");
        check_pair_budget(count);
    }
    const bool regressive = std::holds_alternative<DeltaRegressive>(constraint) ||
                            std::holds_alternative<AlmostRegressive>(constraint);
    if (regressive && labels.empty())
        throw Error(ErrorCode::UnsatisfiableConstraint, "regressive constraints need a cube size");

    Rng rng(seed);
    std::vector<Colour> pairs(PairColouring::pair_count(count));

    if (std::holds_alternative<InjectiveFibers>(constraint)) {
        if (count >= 2 && palette < count - 1)
            throw Error(ErrorCode::UnsatisfiableConstraint, "injective fibers need palette >= N - 1");
        // For each beta, a uniformly random injection of {0..beta-1} into the
        // palette via a partial Fisher-Yates shuffle.
        std::vector<Colour> deck(palette);
        for (Vertex beta = 1; beta < count; ++beta) {
            std::iota(deck.begin(), deck.end(), Colour{0});
            for (Vertex alpha = 0; alpha < beta; ++alpha) {
                const auto pick = alpha + static_cast<Colour>(rng.below(palette - alpha));
                std::swap(deck[alpha], deck[pick]);
                pairs[PairColouring::pair_index(count, alpha, beta)] = deck[alpha];
            }
        }
        return PairColouring(count, palette, std::move(pairs), std::move(labels));
    }

    std::optional<Level> mu;
    if (const auto* almost = std::get_if<AlmostRegressive>(&constraint)) {
        if (almost->mu > n)
            throw Error(ErrorCode::UnsatisfiableConstraint, "mu exceeds the cube dimension");
        if (almost->mu == 0 && count >= 2)
            throw Error(ErrorCode::UnsatisfiableConstraint, "mu = 0 leaves delta = 0 pairs no admissible colour");
        mu = almost->mu;
    }

    std::size_t idx = 0;
    for (Vertex a = 0; a < count; ++a)
        for (Vertex b = a + 1; b < count; ++b, ++idx) {
            Colour bound = palette;
            if (std::holds_alternative<DeltaRegressive>(constraint)) {
                const Level d = delta_index(n, a, b);
                if (d > 0)
                    bound = std::min<Colour>(d, palette);
            } else if (mu) {
                bound = std::min<Colour>(std::max(delta_index(n, a, b), *mu), palette);
            }
            pairs[idx] = static_cast<Colour>(rng.below(bound));
        }
    return PairColouring(count, palette, std::move(pairs), std::move(labels), mu);
}

}  // namespace deltacol
