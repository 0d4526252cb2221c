#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hgm/matrix.hpp"

namespace hgm {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial `index` of stream `stream` (e.g. a suite-name hash) under a
/// master seed. Independent of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// FNV-1a, used to turn suite names into stream ids.
std::uint64_t stable_hash(std::string_view s);

/// Portable draws on top of mt19937_64; the standard distributions are
/// implementation-defined, these are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// U[0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
    }
    double exponential();

private:
    std::mt19937_64 engine_;
};

/// Entries U[0,1), each kept with probability `density` and zeroed otherwise.
NonNegativeMatrix random_matrix(Rng& rng, std::size_t n, double density);

/// Normalized i.i.d. exponentials.
std::vector<double> random_sum_one_weights(Rng& rng, std::size_t m);

}  // namespace hgm
