#include "hgm/random.hpp"

#include <cmath>
#include <numeric>

namespace hgm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ splitmix64(stream)) + index);
}

std::uint64_t stable_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

double Rng::exponential() { return -std::log1p(-uniform()); }

NonNegativeMatrix random_matrix(Rng& rng, std::size_t n, double density) {
    const auto k = static_cast<Eigen::Index>(n);
    DenseMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const double keep = rng.uniform();
            const double value = rng.uniform();
            m(i, j) = keep < density ? value : 0.0;
        }
    }
    return NonNegativeMatrix(std::move(m));
}

std::vector<double> random_sum_one_weights(Rng& rng, std::size_t m) {
    std::vector<double> w(m);
    for (auto& x : w) x = rng.exponential() + 1e-12;
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= s;
    // Absorb the rounding residue so the sum is 1 to within an ulp or two.
    const double residue = 1.0 - std::accumulate(w.begin(), w.end(), 0.0);
    w.back() += residue;
    return w;
}

}  // namespace hgm
