#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "groupwidth/complex.hpp"
#include "groupwidth/field.hpp"
#include "groupwidth/morse.hpp"

namespace gw {

/**
 * 64-bit linear congruential generator, x <- a*x + c mod 2^64 with
 * a = 6364136223846793005 and c = 1442695040888963407 (Knuth, MMIX).
 * Draws use the high 32 bits of the new state.
 */
class Lcg64 {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        state_ = state_ * kMultiplier + kIncrement;
        return state_;
    }

    /// Uniform in [0, bound) via multiply-shift on the high word.
    std::uint32_t below(std::uint32_t bound) noexcept
    {
        const std::uint64_t hi = next() >> 32;
        return static_cast<std::uint32_t>((hi * bound) >> 32);
    }

    /// Uniform in [0, 1) with 53 bits.
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Positive rational stored as numerator / denominator.
struct Ratio {
    std::int64_t num = 1;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

struct AnnealParams {
    std::uint64_t steps = 4000;
    Ratio initial_temperature{1, 4};
    Ratio cooling_rate{999, 1000};
    std::uint32_t restarts = 4;
    std::uint64_t seed = 7;

    /// Throws std::invalid_argument when steps == 0 or the cooling rate is outside (0, 1).
    void check() const;
};

struct SearchResult {
    std::size_t best_value = 0;
    MorseLabeling certificate;
    bool exhaustive = false;
    std::uint64_t labelings_visited = 0;
    std::uint64_t seed = 0;
};

struct SearchOptions {
    /// No limit when empty.
    std::optional<std::chrono::milliseconds> budget;
    unsigned workers = 1;
};

/**
 * Calls `visit` for every valid labeling with minimum label 0, in the
 * enumeration order used by exhaustive_min (vertices in breadth-first order
 * from vertex 0, labels increasing, each capped by the vertex's
 * eccentricity). No width pruning; intended for checks on small complexes.
 * Throws Error(NotConnected).
 */
void enumerate_normalized_labelings(const SimplicialComplex& complex, const std::function<void(const MorseLabeling&)>& visit);

/**
 * Minimum homological width over all labelings of a connected complex.
 *
 * Depth-first enumeration of normalized labelings with branch-and-bound on
 * the width of partial assignments. The work is cut into a fixed set of
 * prefix tasks, each searched independently and merged in enumeration
 * order, so the result does not depend on the worker count. When the
 * budget runs out the best labeling so far is returned with
 * exhaustive = false. Throws Error(NotConnected).
 */
SearchResult exhaustive_min(const SimplicialComplex& complex, const FieldSpec& field, const SearchOptions& options = {});

/**
 * Simulated annealing from the constant labeling with +-1 single-vertex
 * moves; invalid proposals are rejected outright. Restarts run with seeds
 * drawn in order from Lcg64(params.seed) and are merged by value, then by
 * the lexicographically smallest normalized certificate.
 */
SearchResult anneal_min(const SimplicialComplex& complex, const FieldSpec& field, const AnnealParams& params = {},
                        unsigned workers = 1);

struct Bounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    SearchResult exhaustive;
    std::optional<SearchResult> anneal;
};

/// Exhaustive search under the budget; when it does not finish, the upper
/// bound comes from the better of its partial result and annealing and the
/// lower bound is 0.
Bounds certified_bounds(const SimplicialComplex& complex, const FieldSpec& field, const SearchOptions& options = {},
                        const AnnealParams& params = {});

}  // namespace gw
