#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace indep {

using Mask = std::uint32_t;   // attribute subsets, one bit per attribute
using Word = std::uint64_t;   // packed assignment rows
using Value = std::uint32_t;  // alphabet values

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// violated operation precondition (bad arguments, broken invariants)
struct precondition_error : error {
    using error::error;
};

// enumeration bound exceeded
struct resource_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask lowest_bit(Mask m) { return m & (~m + 1u); }

// iterate x = m; x = next_submask(x, m) until x == 0; yields all proper
// nonempty submasks in descending order when seeded with m - 1 variants
inline Mask next_submask(Mask x, Mask m) { return (x - 1) & m; }

// deterministic RNG for property suites; the fixed default seed is part of
// the reproducibility contract
inline std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

constexpr std::uint64_t kDefaultSeed = 20240911;

}  // namespace indep
