// Small-n spectral radius oracle, kept independent of the iterative engine:
// nothing here touches spectral.cpp.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hgm/errors.hpp"
#include "hgm/spectral.hpp"

namespace hgm {

namespace {

using Rational = mpq_class;
// Coefficients stored low degree first.
using Poly = std::vector<Rational>;

Rational det_cofactor(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<Rational>> minor(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][cc++] = m[i][j];
            }
        }
        const Rational term = m[0][c] * det_cofactor(minor);
        if (c % 2 == 0) total += term; else total -= term;
    }
    return total;
}

// det(lambda I - A) = sum_k (-1)^k E_k lambda^(n-k), where E_k is the sum of
// the k x k principal minors.
Poly characteristic_polynomial(const NonNegativeMatrix& a) {
    const std::size_t n = a.n();
    Poly p(n + 1, Rational(0));
    p[n] = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const std::size_t k = idx.size();
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = Rational(a(idx[i], idx[j]));
        const Rational minor = det_cofactor(sub);
        if (k % 2 == 0) p[n - k] += minor; else p[n - k] -= minor;
    }
    return p;
}

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return Poly{Rational(0)};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

// Returns {quotient, remainder}.
std::pair<Poly, Poly> divide(Poly num, const Poly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() - 1 < dd) return {Poly{Rational(0)}, num};
    Poly q(num.size() - dd, Rational(0));
    for (std::size_t i = num.size(); i-- > dd;) {
        const Rational c = num[i] / den.back();
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num.resize(dd == 0 ? 1 : dd);
    trim(num);
    return {q, num};
}

bool is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        Poly r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> v = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) v = v * z + c[i];
    return v;
}

// All roots of a monic polynomial with simple roots (coefficients low first).
std::vector<std::complex<double>> durand_kerner(const std::vector<double>& c) {
    const std::size_t d = c.size() - 1;
    if (d == 0) return {};
    if (d == 1) return {std::complex<double>(-c[0], 0.0)};

    // Cauchy bound on root moduli.
    double radius = 0.0;
    for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i]));
    radius += 1.0;

    std::vector<std::complex<double>> z(d);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> s = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
        s *= seed;
        z[k] = radius * s / std::abs(s) * (0.5 + 0.5 * static_cast<double>(k + 1) / static_cast<double>(d));
    }
    for (int it = 0; it < 2000; ++it) {
        double change = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            if (std::abs(denom) == 0.0) denom = 1e-300;
            const std::complex<double> step = horner(c, z[k]) / denom;
            z[k] -= step;
            change = std::max(change, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        if (change < 1e-16) break;
    }

    std::vector<double> dc(d);
    for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * static_cast<double>(i);
    for (auto& r : z) {
        for (int it = 0; it < 4; ++it) {
            const std::complex<double> dp = horner(dc, r);
            if (std::abs(dp) == 0.0) break;
            r -= horner(c, r) / dp;
        }
    }
    return z;
}

}  // namespace

double spectral_radius_oracle(const NonNegativeMatrix& a) {
    if (a.n() > 5) {
        throw DimensionError("spectral_radius_oracle supports n <= 5 (got " +
                             std::to_string(a.n()) + ")");
    }
    const Poly p = characteristic_polynomial(a);
    const Poly g = gcd(p, derivative(p));
    Poly q = divide(p, g).first;
    trim(q);
    const Rational lead = q.back();
    std::vector<double> c(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) c[i] = Rational(q[i] / lead).get_d();

    double best = 0.0;
    for (const auto& r : durand_kerner(c)) best = std::max(best, std::abs(r));
    return best;
}

}  // namespace hgm
