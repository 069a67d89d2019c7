#include "mof/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace mof {

namespace {

constexpr double eigen_degeneracy_epsilon = 1e-9;
constexpr int max_numeric_eigen_order = 4;
constexpr int max_oracle_size = 1024;

void check_state(const SystemState& s, const MatrixOfFilters& m) {
    if (int(s.channels.size()) != m.order) {
        throw DimensionMismatch("state has " + std::to_string(s.channels.size()) +
                                " channels, filter matrix has order " +
                                std::to_string(m.order));
    }
    if (s.channels.empty() || s.channels[0].size() < 3) {
        throw DimensionMismatch("signals must have at least 3 samples");
    }
    const size_t n = s.channels[0].size();
    for (const Signal& ch : s.channels) {
        if (ch.size() != n) {
            throw DimensionMismatch("all channels must have the same length");
        }
    }
}

}  // namespace

Signal convolve3(const FilterTaps& f, const Signal& x) {
    const size_t n = x.size();
    Signal out(n);
    for (size_t i = 0; i < n; ++i) {
        const size_t next = (i + 1 == n) ? 0 : i + 1;
        const size_t prev = (i == 0) ? n - 1 : i - 1;
        out[i] = f.alpha * x[next] + f.beta * x[i] + f.gamma * x[prev];
    }
    return out;
}

SystemState step(const SystemState& s, const MatrixOfFilters& m, double t,
                 UpdateRule rule) {
    check_state(s, m);
    const size_t n = s.channels[0].size();
    const double keep = (rule == UpdateRule::additive) ? 1.0 : 1.0 - t;
    SystemState out;
    out.iteration = s.iteration + 1;
    out.channels.assign(m.order, Signal(n, 0.0));
    for (int r = 0; r < m.order; ++r) {
        Signal acc(n, 0.0);
        for (int c = 0; c < m.order; ++c) {
            const Signal conv = convolve3(m.taps[r][c], s.channels[c]);
            for (size_t i = 0; i < n; ++i) {
                acc[i] += conv[i];
            }
        }
        for (size_t i = 0; i < n; ++i) {
            out.channels[r][i] = keep * s.channels[r][i] + t * acc[i];
        }
    }
    return out;
}

EquivalentFilter equivalent_filter(const MatrixOfFilters& m, double t, int l, int N,
                                   UpdateRule rule) {
    if (l < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    if (N < 3) {
        throw DimensionMismatch("signal length must be at least 3");
    }
    SystemState state;
    state.channels.assign(m.order, Signal(N, 0.0));
    state.channels[0][0] = 1.0;
    for (int i = 0; i < l; ++i) {
        state = step(state, m, t, rule);
    }
    return EquivalentFilter{l, state.channels[0]};
}

Eigen::MatrixXd circulant_power_oracle(const MatrixOfFilters& m, double t, int l,
                                       int N) {
    if (l < 1) {
        throw std::invalid_argument("oracle needs at least one iteration");
    }
    if (N < 3) {
        throw DimensionMismatch("signal length must be at least 3");
    }
    if (N * m.order > max_oracle_size) {
        throw SizeLimit("dense oracle limited to N * P <= " +
                        std::to_string(max_oracle_size));
    }
    const int size = N * m.order;
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(size, size);
    for (int r = 0; r < m.order; ++r) {
        for (int c = 0; c < m.order; ++c) {
            const FilterTaps& f = m.taps[r][c];
            for (int n = 0; n < N; ++n) {
                const int next = (n + 1) % N;
                const int prev = (n + N - 1) % N;
                system(r * N + n, c * N + next) += t * f.alpha;
                system(r * N + n, c * N + n) += t * f.beta;
                system(r * N + n, c * N + prev) += t * f.gamma;
            }
        }
    }
    Eigen::MatrixXd power = system;
    for (int i = 1; i < l; ++i) {
        power = power * system;
    }
    return power.block(0, 0, N, N);
}

std::vector<FrequencyEigen> per_frequency_eigen(const MatrixOfFilters& m, double t,
                                                int N) {
    if (m.order > max_numeric_eigen_order) {
        throw std::invalid_argument("numeric eigen path limited to order <= 4");
    }
    if (N < 2) {
        throw DimensionMismatch("need at least 2 frequency bins");
    }
    const int P = m.order;
    std::vector<FrequencyEigen> result(N);
    for (int k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * double(k) / double(N);
        Eigen::MatrixXcd h(P, P);
        for (int r = 0; r < P; ++r) {
            for (int c = 0; c < P; ++c) {
                h(r, c) = taps_to_sigma(m.taps[r][c], t, r == c, theta);
            }
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h);
        if (solver.info() != Eigen::Success) {
            throw DegenerateEigenbasis("eigen solver failed at frequency bin " +
                                       std::to_string(k));
        }
        std::vector<int> order(P);
        std::iota(order.begin(), order.end(), 0);
        const auto& lambdas = solver.eigenvalues();
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (lambdas(a).real() != lambdas(b).real()) {
                return lambdas(a).real() < lambdas(b).real();
            }
            return lambdas(a).imag() < lambdas(b).imag();
        });

        bool all_equal = true;
        for (int i = 1; i < P; ++i) {
            if (std::abs(lambdas(order[i]) - lambdas(order[0])) >
                eigen_degeneracy_epsilon) {
                all_equal = false;
                break;
            }
        }

        FrequencyEigen fe;
        fe.lambdas.reserve(P);
        fe.mus.reserve(P);
        if (all_equal) {
            for (int i = 0; i < P; ++i) {
                fe.lambdas.push_back(lambdas(order[i]));
                fe.mus.emplace_back(1.0 / double(P), 0.0);
            }
        } else {
            const Eigen::MatrixXcd& v = solver.eigenvectors();
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
            if (!lu.isInvertible()) {
                throw DegenerateEigenbasis(
                    "eigenvector basis is singular with distinct eigenvalues at bin " +
                    std::to_string(k));
            }
            const Eigen::MatrixXcd v_inv = lu.inverse();
            std::complex<double> mu_sum(0.0, 0.0);
            for (int i = 0; i < P; ++i) {
                const int src = order[i];
                fe.lambdas.push_back(lambdas(src));
                const std::complex<double> mu = v(0, src) * v_inv(src, 0);
                fe.mus.push_back(mu);
                mu_sum += mu;
            }
            if (std::abs(mu_sum - 1.0) > 1e-9) {
                throw DegenerateEigenbasis(
                    "mixing coefficients sum to " + std::to_string(mu_sum.real()) +
                    " instead of 1 at bin " + std::to_string(k));
            }
        }
        result[k] = std::move(fe);
    }
    return result;
}

std::vector<std::complex<double>> dft(const Signal& s) {
    const size_t n = s.size();
    std::vector<std::complex<double>> out(n);
    for (size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (size_t j = 0; j < n; ++j) {
            const double angle =
                2.0 * std::numbers::pi * double(k) * double(j) / double(n);
            acc += s[j] * std::polar(1.0, angle);
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace mof
