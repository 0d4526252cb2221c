#include "hgm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hgm/errors.hpp"

namespace hgm {

std::string_view to_string(NormKind k) {
    switch (k) {
        case NormKind::L1: return "l1";
        case NormKind::L2: return "l2";
        case NormKind::LInf: return "linf";
    }
    return "?";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Strongly connected components of the digraph i -> j iff a_ij > 0
// (Tarjan, iterative so that n = 256 chains cannot blow the stack).
std::vector<std::vector<Eigen::Index>> strong_components(const DenseMatrix& a) {
    const Eigen::Index n = a.rows();
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> stack;
    std::vector<std::vector<Eigen::Index>> components;
    int counter = 0;

    struct Frame {
        Eigen::Index v;
        Eigen::Index next;
    };
    std::vector<Frame> call;

    for (Eigen::Index root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            const auto v = static_cast<std::size_t>(f.v);
            if (f.next == 0 && index[v] < 0) {
                index[v] = low[v] = counter++;
                stack.push_back(f.v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (f.next < n) {
                const Eigen::Index w = f.next++;
                if (a(f.v, w) <= 0.0) continue;
                const auto wi = static_cast<std::size_t>(w);
                if (index[wi] < 0) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[wi]) low[v] = std::min(low[v], index[wi]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::vector<Eigen::Index> comp;
                Eigen::Index w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != f.v);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
            const int child_low = low[v];
            call.pop_back();
            if (!call.empty()) {
                const auto parent = static_cast<std::size_t>(call.back().v);
                low[parent] = std::min(low[parent], child_low);
            }
        }
    }
    return components;
}

struct Bracket {
    double lower;
    double upper;
};

Bracket collatz_wielandt(const DenseMatrix& m, const Eigen::VectorXd& x) {
    const Eigen::VectorXd y = m * x;
    Bracket b{std::numeric_limits<double>::infinity(), 0.0};
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double r = y(i) / x(i);
        b.lower = std::min(b.lower, r);
        b.upper = std::max(b.upper, r);
    }
    return b;
}

bool strictly_positive(const Eigen::VectorXd& z) {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (!(z(i) > 0.0) || !std::isfinite(z(i))) return false;
    }
    return true;
}

// Noda iteration on an irreducible block of size >= 2.
SpectralEstimate irreducible_perron_root(const DenseMatrix& m, double tol) {
    const Eigen::Index k = m.rows();
    const double noise = 8.0 * static_cast<double>(k) * kEps;
    Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
    SpectralEstimate est;
    est.converged = false;

    double best_width = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (int it = 0; it < kIterationCap; ++it) {
        const Bracket b = collatz_wielandt(m, x);
        est.cw_lower = b.lower;
        est.cw_upper = b.upper;
        est.value = 0.5 * (b.lower + b.upper);
        est.iterations = it + 1;
        const double width = b.upper - b.lower;
        if (width <= tol * std::max(1.0, b.upper) || width <= noise * b.upper) {
            est.converged = true;
            return est;
        }
        if (width < 0.5 * best_width) {
            best_width = width;
            stalled = 0;
        } else if (++stalled > 50) {
            return est;
        }

        double sigma = b.upper;
        DenseMatrix shifted = -m;
        shifted.diagonal().array() += sigma;
        Eigen::VectorXd z = shifted.partialPivLu().solve(x);
        if (!strictly_positive(z)) {
            // sigma landed on rho in floating point; step just above it.
            sigma = b.upper * (1.0 + 16.0 * kEps) + std::numeric_limits<double>::min();
            shifted = -m;
            shifted.diagonal().array() += sigma;
            z = shifted.partialPivLu().solve(x);
            if (!strictly_positive(z)) return est;
        }
        x = z / z.maxCoeff();
    }
    return est;
}

}  // namespace

SpectralEstimate spectral_radius(const NonNegativeMatrix& a, double tol) {
    if (!(tol > 0.0)) throw ConfigError("spectral_radius: tolerance must be positive");
    const DenseMatrix& d = a.dense();

    SpectralEstimate total;
    total.iterations = 0;
    for (const auto& comp : strong_components(d)) {
        SpectralEstimate block;
        if (comp.size() == 1) {
            const double diag = d(comp[0], comp[0]);
            block.value = block.cw_lower = block.cw_upper = diag;
        } else {
            const auto k = static_cast<Eigen::Index>(comp.size());
            DenseMatrix sub(k, k);
            for (Eigen::Index i = 0; i < k; ++i)
                for (Eigen::Index j = 0; j < k; ++j)
                    sub(i, j) = d(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]);
            block = irreducible_perron_root(sub, tol);
        }
        total.iterations += block.iterations;
        total.converged = total.converged && block.converged;
        total.value = std::max(total.value, block.value);
        total.cw_lower = std::max(total.cw_lower, block.cw_lower);
        total.cw_upper = std::max(total.cw_upper, block.cw_upper);
    }
    return total;
}

double rho(const NonNegativeMatrix& a) {
    const SpectralEstimate e = spectral_radius(a);
    if (!e.converged) {
        throw ConvergenceError("spectral radius did not converge: bracket [" +
                               std::to_string(e.cw_lower) + ", " + std::to_string(e.cw_upper) +
                               "] after " + std::to_string(e.iterations) + " iterations");
    }
    return e.value;
}

double operator_norm(const NonNegativeMatrix& a, NormKind k) {
    switch (k) {
        case NormKind::L1: return a.dense().colwise().sum().maxCoeff();
        case NormKind::LInf: return a.dense().rowwise().sum().maxCoeff();
        case NormKind::L2: return std::sqrt(rho(gram_S(a)));
    }
    throw ConfigError("unknown norm kind");
}

double numerical_radius(const NonNegativeMatrix& a) {
    DenseMatrix h = (a.dense() + a.dense().transpose()) * 0.5;
    return rho(NonNegativeMatrix(std::move(h)));
}

}  // namespace hgm
