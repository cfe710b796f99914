#pragma once

#include <cstdint>
#include <random>

namespace deltacol {

/// mt19937_64 with a portable bounded draw. std::uniform_int_distribution is
/// implementation-defined, so reproducible instances cannot rely on it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw = engine_();
        while (draw >= limit)
            draw = engine_();
        return draw % bound;
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace deltacol
