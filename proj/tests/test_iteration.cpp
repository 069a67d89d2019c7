#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mof/conditions.hpp"
#include "mof/iteration.hpp"
#include "mof/spectral.hpp"

using namespace mof;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

Signal random_signal(size_t n, unsigned long long seed) {
    std::mt19937_64 engine(seed);
    Signal x(n);
    for (double& v : x) {
        v = double(engine() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    }
    return x;
}

Signal circular_convolve(const Signal& kernel, const Signal& x) {
    const size_t n = x.size();
    Signal out(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t m = 0; m < n; ++m) {
            out[i] += kernel[m] * x[(i + n - m) % n];
        }
    }
    return out;
}

SystemState iterate(const Signal& x, const MatrixOfFilters& m, double t, int l,
                    UpdateRule rule = UpdateRule::additive) {
    SystemState state;
    state.channels.assign(m.order, Signal(x.size(), 0.0));
    state.channels[0] = x;
    for (int i = 0; i < l; ++i) {
        state = step(state, m, t, rule);
    }
    return state;
}

}  // namespace

TEST_CASE("three-tap circular convolution indexing") {
    const Signal out = convolve3({1.0, -2.0, 1.0}, {1.0, 0.0, 0.0, 0.0});
    REQUIRE(out.size() == 4);
    CHECK(out[0] == -2.0);
    CHECK(out[1] == 1.0);
    CHECK(out[2] == 0.0);
    CHECK(out[3] == 1.0);

    const Signal shifted = convolve3({3.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0});
    CHECK(shifted[3] == 3.0);
    CHECK(shifted[0] == 0.0);
}

TEST_CASE("one additive step on an impulse") {
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, 0.25});
    Signal x(8, 0.0);
    x[3] = 1.0;
    const SystemState state = iterate(x, m, 0.25, 1);
    CHECK(state.iteration == 1);
    CHECK(state.channels[0][2] == 0.25);
    CHECK(state.channels[0][3] == 0.5);
    CHECK(state.channels[0][4] == 0.25);
    CHECK(state.channels[0][0] == 0.0);
    for (double v : state.channels[1]) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("one convex step on an impulse") {
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, 0.25});
    const SystemState state =
        iterate({1.0, 0.0, 0.0}, m, 0.25, 1, UpdateRule::convex);
    CHECK(state.channels[0][0] == 0.25);
    CHECK(state.channels[0][1] == 0.25);
    CHECK(state.channels[0][2] == 0.25);
}

TEST_CASE("zero states are fixed points") {
    const MatrixOfFilters m = realize_balanced({1.0, 0.0, -0.5, 0.25});
    const SystemState state = iterate(Signal(9, 0.0), m, 0.25, 5);
    for (const Signal& channel : state.channels) {
        for (double v : channel) {
            CHECK(v == 0.0);
        }
    }
}

TEST_CASE("iteration is linear in the input") {
    const DesignParams p{1.0, 0.0, -0.5, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const Signal x = random_signal(16, 21);
    const Signal y = random_signal(16, 22);
    Signal sum(16, 0.0);
    for (size_t i = 0; i < 16; ++i) {
        sum[i] = x[i] + y[i];
    }
    const Signal from_sum = iterate(sum, m, p.t, 6).channels[0];
    const Signal from_x = iterate(x, m, p.t, 6).channels[0];
    const Signal from_y = iterate(y, m, p.t, 6).channels[0];
    for (size_t i = 0; i < 16; ++i) {
        CHECK(from_sum[i] == Approx(from_x[i] + from_y[i]).epsilon(1e-12));
    }
}

TEST_CASE("constant signals are fixed points of the additive update") {
    const DesignParams cases[] = {
        {1.0, 0.0, -0.5, 0.25}, {1.0, 0.48, -0.26, 0.25}, {0.6, -0.2, -0.15, 0.2}};
    for (const DesignParams& p : cases) {
        const MatrixOfFilters m = realize_balanced(p);
        const SystemState state = iterate(Signal(11, 3.5), m, p.t, 20);
        for (double v : state.channels[0]) {
            CHECK(v == Approx(3.5).epsilon(1e-12));
        }
        for (double v : state.channels[1]) {
            CHECK(v == Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("state validation rejects malformed inputs") {
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, 0.25});
    SystemState one_channel;
    one_channel.channels = {Signal(8, 0.0)};
    CHECK_THROWS_AS((void)step(one_channel, m, 0.25), DimensionMismatch);

    SystemState ragged;
    ragged.channels = {Signal(8, 0.0), Signal(7, 0.0)};
    CHECK_THROWS_AS((void)step(ragged, m, 0.25), DimensionMismatch);

    SystemState tiny;
    tiny.channels = {Signal(2, 0.0), Signal(2, 0.0)};
    CHECK_THROWS_AS((void)step(tiny, m, 0.25), DimensionMismatch);

    CHECK_THROWS_AS((void)equivalent_filter(m, 0.25, -1, 8), std::invalid_argument);
    CHECK_THROWS_AS((void)equivalent_filter(m, 0.25, 3, 2), DimensionMismatch);
}

TEST_CASE("equivalent filter reproduces the iterated output by convolution") {
    const DesignParams p{1.0, 0.0, -0.5, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const Signal x = random_signal(24, 5);
    const int l = 13;
    const Signal direct = iterate(x, m, p.t, l).channels[0];
    const EquivalentFilter kernel = equivalent_filter(m, p.t, l, 24);
    CHECK(kernel.iteration == l);
    const Signal via_kernel = circular_convolve(kernel.coefficients, x);
    for (size_t i = 0; i < x.size(); ++i) {
        CHECK(via_kernel[i] == Approx(direct[i]).epsilon(1e-12));
    }
}

TEST_CASE("equivalent filter at iterations zero and one") {
    const double t = 0.25;
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, t});
    const EquivalentFilter delta = equivalent_filter(m, t, 0, 8);
    CHECK(delta.coefficients[0] == 1.0);
    for (size_t n = 1; n < 8; ++n) {
        CHECK(delta.coefficients[n] == 0.0);
    }

    const EquivalentFilter one = equivalent_filter(m, t, 1, 8);
    CHECK(one.coefficients[0] == Approx(1.0 - 2.0 * t).epsilon(1e-15));
    CHECK(one.coefficients[1] == Approx(t).epsilon(1e-15));
    CHECK(one.coefficients[7] == Approx(t).epsilon(1e-15));
    for (size_t n = 2; n < 7; ++n) {
        CHECK(one.coefficients[n] == 0.0);
    }

    const auto spectrum = dft(one.coefficients);
    for (int k = 0; k < 8; ++k) {
        const double theta = 2.0 * pi * double(k) / 8.0;
        CHECK(spectrum[k].real() ==
              Approx(sigma_xx({1.0, 1.0, 0.0, t}, theta)).epsilon(1e-12));
        CHECK(spectrum[k].imag() == Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("long kernels match the closed form on a dense grid") {
    const DesignParams p{1.0, 0.0, -0.5, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const EquivalentFilter kernel = equivalent_filter(m, p.t, 50, 256);
    const auto spectrum = dft(kernel.coefficients);
    for (int k = 0; k < 256; ++k) {
        const double theta = 2.0 * pi * double(k) / 256.0;
        CHECK(spectrum[k].real() ==
              Approx(equivalent_response(p, theta, 50)).epsilon(1e-8));
        CHECK(spectrum[k].imag() == Approx(0.0).epsilon(1e-8));
    }
}

TEST_CASE("kernels preserve the mean and stay symmetric") {
    for (const DesignParams& p : sample_feasible(10, 31)) {
        const MatrixOfFilters m = realize_balanced(p);
        const EquivalentFilter kernel = equivalent_filter(m, p.t, 12, 32);
        double sum = 0.0;
        for (double coefficient : kernel.coefficients) {
            sum += coefficient;
        }
        CHECK(sum == Approx(1.0).epsilon(1e-10));
        for (int n = 1; n < 32; ++n) {
            CHECK(kernel.coefficients[size_t(n)] ==
                  Approx(kernel.coefficients[size_t(32 - n)]).epsilon(1e-12));
        }
    }
}

TEST_CASE("transfer ratio of a random signal matches the closed form") {
    const DesignParams p{1.0, 0.0, -0.5, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const Signal x = random_signal(32, 9);
    const int l = 9;
    const Signal y = iterate(x, m, p.t, l).channels[0];
    const auto in_spec = dft(x);
    const auto out_spec = dft(y);
    for (int k = 0; k < 32; ++k) {
        if (std::abs(in_spec[k]) < 1e-3) {
            continue;
        }
        const std::complex<double> ratio = out_spec[k] / in_spec[k];
        const double theta = 2.0 * pi * double(k) / 32.0;
        CHECK(ratio.real() == Approx(equivalent_response(p, theta, l)).epsilon(1e-8));
        CHECK(ratio.imag() == Approx(0.0).epsilon(1e-8));
    }
}

TEST_CASE("convex update kernel matches its per-frequency symbol") {
    // With d = 0 the system is diagonal; the convex x-channel symbol is
    // (1 - 3t) + 2t cos(theta).
    const double t = 0.25;
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, t});
    const int l = 6;
    const EquivalentFilter kernel = equivalent_filter(m, t, l, 32, UpdateRule::convex);
    const auto spectrum = dft(kernel.coefficients);
    for (int k = 0; k < 32; ++k) {
        const double theta = 2.0 * pi * double(k) / 32.0;
        const double symbol = (1.0 - 3.0 * t) + 2.0 * t * std::cos(theta);
        CHECK(spectrum[k].real() == Approx(std::pow(symbol, l)).epsilon(1e-11));
        CHECK(spectrum[k].imag() == Approx(0.0).epsilon(1e-11));
    }
}

TEST_CASE("matrix power oracle agrees with the impulse response") {
    const DesignParams p{1.0, 0.48, -0.26, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const Eigen::MatrixXd block = circulant_power_oracle(m, p.t, 4, 12);
    const EquivalentFilter kernel = equivalent_filter(m, p.t, 4, 12);
    REQUIRE(block.rows() == 12);
    REQUIRE(block.cols() == 12);
    for (int n = 0; n < 12; ++n) {
        CHECK(block(n, 0) == Approx(kernel.coefficients[n]).epsilon(1e-13));
    }
    // The block is circulant: every diagonal is constant.
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 12; ++j) {
            CHECK(block(i, j) == Approx(block((i + 1) % 12, (j + 1) % 12))
                                     .epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS((void)circulant_power_oracle(m, p.t, 0, 12),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)circulant_power_oracle(m, p.t, 2, 600), SizeLimit);
}

TEST_CASE("one-step power oracle is the identity plus the scaled kernel") {
    const double t = 0.25;
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, t});
    const Eigen::MatrixXd block = circulant_power_oracle(m, t, 1, 6);
    for (int n = 0; n < 6; ++n) {
        for (int j = 0; j < 6; ++j) {
            double expected = 0.0;
            if (j == n) {
                expected = 1.0 - 2.0 * t;
            } else if (j == (n + 1) % 6 || j == (n + 5) % 6) {
                expected = t;
            }
            CHECK(block(n, j) == Approx(expected).epsilon(1e-15));
        }
    }
}

TEST_CASE("power oracle equals the self-convolved diffusion kernel") {
    const double t = 0.25;
    const MatrixOfFilters m = realize_balanced({1.0, 1.0, 0.0, t});
    const Eigen::MatrixXd block = circulant_power_oracle(m, t, 3, 8);
    Signal kernel(8, 0.0);
    kernel[0] = 1.0 - 2.0 * t;
    kernel[1] = t;
    kernel[7] = t;
    const Signal threefold =
        circular_convolve(kernel, circular_convolve(kernel, kernel));
    for (int n = 0; n < 8; ++n) {
        CHECK(block(n, 0) == Approx(threefold[size_t(n)]).epsilon(1e-14));
    }
}

TEST_CASE("per-frequency mixing weights sum to one") {
    const DesignParams p{1.0, 0.48, -0.26, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const auto eigens = per_frequency_eigen(m, p.t, 64);
    REQUIRE(eigens.size() == 64);
    for (int k = 0; k < 64; ++k) {
        std::complex<double> total = 0.0;
        for (const std::complex<double>& mu : eigens[k].mus) {
            total += mu;
        }
        CHECK(total.real() == Approx(1.0).epsilon(1e-10));
        CHECK(total.imag() == Approx(0.0).epsilon(1e-10));
        const double theta = 2.0 * pi * double(k) / 64.0;
        const SpectralPoint sp = spectral_point(p, theta);
        CHECK(eigens[k].lambdas[0].real() == Approx(sp.lambda1).epsilon(1e-10));
        CHECK(eigens[k].lambdas[1].real() == Approx(sp.lambda2).epsilon(1e-10));
    }
}

TEST_CASE("per-frequency eigen route matches the closed forms") {
    const DesignParams p{1.0, 0.0, -0.5, 0.25};
    const MatrixOfFilters m = realize_balanced(p);
    const auto eigens = per_frequency_eigen(m, p.t, 16);
    REQUIRE(eigens.size() == 16);
    for (int k = 0; k < 16; ++k) {
        const double theta = 2.0 * pi * double(k) / 16.0;
        const SpectralPoint sp = spectral_point(p, theta);
        REQUIRE(eigens[k].lambdas.size() == 2);
        CHECK(eigens[k].lambdas[0].real() == Approx(sp.lambda1).epsilon(1e-10));
        CHECK(eigens[k].lambdas[1].real() == Approx(sp.lambda2).epsilon(1e-10));
        CHECK(eigens[k].lambdas[0].imag() == Approx(0.0).epsilon(1e-10));
        CHECK(eigens[k].mus[0].real() == Approx(sp.mu1).epsilon(1e-10));
        CHECK(eigens[k].mus[1].real() == Approx(sp.mu2).epsilon(1e-10));
    }
}

TEST_CASE("per-frequency eigen route on defective and degenerate symbols") {
    // Equal diagonal symbols with one-sided coupling give a defective
    // (non-diagonalizable) symbol; the response still collapses to the
    // single eigenvalue power, so the weights default to 1/2 each.
    MatrixOfFilters defective;
    defective.order = 2;
    defective.taps = {{{1.0, -2.0, 1.0}, {0.0, 0.0, 0.0}},
                      {{1.0, 0.0, -1.0}, {1.0, -2.0, 1.0}}};
    for (const auto& eigen : per_frequency_eigen(defective, 0.25, 8)) {
        CHECK(eigen.mus[0].real() == Approx(0.5).epsilon(1e-12));
        CHECK(eigen.mus[1].real() == Approx(0.5).epsilon(1e-12));
        CHECK(eigen.lambdas[0].real() == Approx(eigen.lambdas[1].real()));
    }

    const MatrixOfFilters diagonal = realize_balanced({1.0, 1.0, 0.0, 0.25});
    for (const auto& eigen : per_frequency_eigen(diagonal, 0.25, 8)) {
        CHECK(eigen.mus[0].real() == Approx(0.5).epsilon(1e-12));
        CHECK(eigen.mus[1].real() == Approx(0.5).epsilon(1e-12));
        CHECK(eigen.lambdas[0].real() ==
              Approx(eigen.lambdas[1].real()).epsilon(1e-12));
    }

    CHECK_THROWS_AS((void)per_frequency_eigen(diagonal, 0.25, 1), DimensionMismatch);
}

TEST_CASE("symmetric cross coupling forms a true circulant system") {
    // With equal off-diagonal kernels the 2x2 block system is circulant,
    // so the first-row response formula, the per-frequency eigen route,
    // and the brute-force impulse response must all agree.
    MatrixOfFilters m;
    m.order = 2;
    const FilterTaps diag{1.0, -2.0, 1.0};
    const FilterTaps g{0.15, -0.3, 0.15};
    m.taps = {{diag, g}, {g, diag}};
    const double t = 0.25;
    const int l = 7;
    const int N = 64;

    const EquivalentFilter kernel = equivalent_filter(m, t, l, N);
    const auto spectrum = dft(kernel.coefficients);
    const auto eigens = per_frequency_eigen(m, t, N);

    for (int k = 0; k < N; ++k) {
        const double theta = 2.0 * pi * double(k) / N;
        const std::vector<std::complex<double>> row = {
            taps_to_sigma(diag, t, true, theta), taps_to_sigma(g, t, false, theta)};
        const double via_rows = circulant_equivalent_response(row, l);
        CHECK(spectrum[k].real() == Approx(via_rows).epsilon(1e-12));

        std::complex<double> via_eigen = 0.0;
        for (size_t i = 0; i < eigens[k].lambdas.size(); ++i) {
            via_eigen += eigens[k].mus[i] * std::pow(eigens[k].lambdas[i], l);
        }
        CHECK(via_eigen.real() == Approx(via_rows).epsilon(1e-10));
    }
}

TEST_CASE("dft uses the positive exponent convention") {
    const auto flat = dft({1.0, 0.0, 0.0, 0.0});
    for (const auto& bin : flat) {
        CHECK(bin.real() == Approx(1.0).epsilon(1e-14));
        CHECK(bin.imag() == Approx(0.0).epsilon(1e-14));
    }
    const auto shifted = dft({0.0, 1.0, 0.0, 0.0});
    CHECK(shifted[1].real() == Approx(0.0).epsilon(1e-14));
    CHECK(shifted[1].imag() == Approx(1.0).epsilon(1e-14));
    CHECK(shifted[3].imag() == Approx(-1.0).epsilon(1e-14));

    const auto constant = dft({1.0, 1.0, 1.0, 1.0});
    CHECK(constant[0].real() == Approx(4.0).epsilon(1e-14));
    CHECK(constant[0].imag() == Approx(0.0).epsilon(1e-14));
    for (int k = 1; k < 4; ++k) {
        CHECK(std::abs(constant[size_t(k)]) == Approx(0.0).epsilon(1e-14));
    }
}
