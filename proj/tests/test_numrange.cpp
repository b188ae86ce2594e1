/*
   Copyright 2026 The numrad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "numrad/numrange.hpp"
#include "support.hpp"

namespace {

using namespace numrad;
using numrad::testing::Rng;

const Complex I{0.0, 1.0};
const double kSlack = EngineConfig::ordering_slack;

ComplexMatrix triangular3() { return ComplexMatrix{{1.0, 1.0, 2.0}, {0.0, -1.0, 1.0}, {0.0, 0.0, 0.0}}; }

ComplexMatrix jordan2() { return ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}; }

// Random matrix whose numerical range sits away from the origin about half the time.
ComplexMatrix shifted_random(Rng& rng, std::size_t n, int rep) {
    ComplexMatrix t = numrad::testing::random_matrix(rng, n);
    if (rep % 2 == 0) {
        const Complex shift = std::polar(1.0 + 0.5 * (rep % 5), 0.7 * rep);
        for (std::size_t i = 0; i < n; ++i) t(i, i) += shift;
    }
    return t;
}

TEST(CartesianParts, Examples) {
    const ComplexMatrix t{{1.0 + 2.0 * I, 3.0}, {I, -I}};
    const CartesianParts p = cartesian_parts(t);
    EXPECT_EQ(p.re(0, 0), Complex(1.0));
    EXPECT_EQ(p.im(0, 0), Complex(2.0));
    EXPECT_EQ(p.im(1, 1), Complex(-1.0));
    EXPECT_TRUE(is_hermitian(p.re, 0.0));
    EXPECT_TRUE(is_hermitian(p.im, 0.0));
    EXPECT_LT(frobenius_norm(p.re + I * p.im - t), 1e-15);
    EXPECT_EQ(real_part(t), p.re);
    EXPECT_EQ(imag_part(t), p.im);
    EXPECT_THROW(real_part(ComplexMatrix(2, 3)), DimensionError);
}

TEST(HermPartRotated, MatchesDefinition) {
    Rng rng(11);
    const ComplexMatrix t = numrad::testing::random_matrix(rng, 4);
    for (double th : {0.0, 0.3, 1.0, 2.5, 4.0}) {
        const ComplexMatrix h = herm_part_rotated(t, th);
        EXPECT_TRUE(is_hermitian(h, 0.0));
        EXPECT_LT(frobenius_norm(h - numrad::testing::rotated_by_definition(t, th)), 1e-14);
    }
    EXPECT_LT(frobenius_norm(herm_part_rotated(t, 0.0) - real_part(t)), 1e-15);
    EXPECT_THROW(herm_part_rotated(ComplexMatrix(1, 2), 0.0), DimensionError);
}

TEST(GoldenSection, FindsInteriorExtremum) {
    auto f = [](double x) { return -(x - 0.3) * (x - 0.3) + 2.0; };
    EXPECT_NEAR(detail::golden_section(f, 0.0, 1.0, 1e-10, detail::Sense::maximize), 2.0, 1e-15);
    auto g = [](double x) { return std::cosh(x - 0.1); };
    EXPECT_NEAR(detail::golden_section(g, -1.0, 1.0, 1e-10, detail::Sense::minimize), 1.0, 1e-15);
}

TEST(OptimizePeriodic, RefinesBetweenGridPoints) {
    // All three peaks fall halfway between grid points.
    const int m = 15;
    const double step = 2.0 * std::numbers::pi / m;
    const double peak = 0.5 * step;
    auto f = [&](double t) { return std::cos(3.0 * (t - peak)); };
    std::vector<double> s(m);
    for (int k = 0; k < m; ++k) s[k] = f(k * step);
    EXPECT_LT(*std::max_element(s.begin(), s.end()), 0.9);
    EXPECT_NEAR(detail::optimize_periodic(s, 0.0, step, f, 3.0, 1e-10, detail::Sense::maximize), 1.0, 1e-12);
    EXPECT_NEAR(detail::optimize_periodic(s, 0.0, step, f, 3.0, 1e-10, detail::Sense::minimize), -1.0, 1e-12);
}

TEST(NumericalRadius, Examples) {
    const std::vector<Complex> d{1.0, I};
    EXPECT_NEAR(numerical_radius(ComplexMatrix::diagonal(d)), 1.0, 1e-12);
    EXPECT_NEAR(numerical_radius(jordan2()), 0.5, 1e-12);
    EXPECT_NEAR(numerical_radius(ComplexMatrix::identity(3)), 1.0, 1e-14);
    EXPECT_EQ(numerical_radius(ComplexMatrix(3, 3)), 0.0);
    EXPECT_NEAR(numerical_radius(ComplexMatrix{{2.0 - 3.0 * I}}), std::sqrt(13.0), 1e-12);
    EXPECT_THROW(numerical_radius(ComplexMatrix(2, 3)), DimensionError);
}

TEST(NumericalRadius, Triangular3AgainstDenseGrid) {
    const ComplexMatrix t = triangular3();
    const double w = numerical_radius(t);
    const double oracle = numrad::testing::brute_force_w(t, 1000000);
    EXPECT_NEAR(w, oracle, 1e-6);
    EXPECT_GE(w, oracle - 1e-12);  // refinement never loses to the plain grid
    // rho(T) = 1 for this upper triangular matrix; w is at least that and at most ||T||.
    EXPECT_GE(w, 1.0);
    EXPECT_LE(w, operator_norm(t));
    EXPECT_LE(w, 1.784 + 5e-3);
}

TEST(NumericalRadius, AgreesWithGridOracle) {
    Rng rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 2 + rep % 5);
        EXPECT_NEAR(numerical_radius(t), numrad::testing::brute_force_w(t, 20000), 1e-6);
    }
}

TEST(NumericalRadius, NormSandwich) {
    Rng rng(13);
    for (int rep = 0; rep < 60; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 1 + rep % 8);
        const double w = numerical_radius(t);
        const double nt = operator_norm(t);
        EXPECT_GE(w, 0.5 * nt - kSlack);
        EXPECT_LE(w, nt + kSlack);
    }
}

TEST(NumericalRadius, AdjointAndScaling) {
    Rng rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 2 + rep % 5);
        const double w = numerical_radius(t);
        EXPECT_NEAR(numerical_radius(adjoint(t)), w, 1e-9);
        const Complex c = numrad::testing::unit_disk(rng) * 3.0;
        EXPECT_NEAR(numerical_radius(c * t), std::abs(c) * w, 1e-9 * std::max(1.0, std::abs(c)));
    }
}

TEST(NumericalRadius, NormalMatricesEqualSpectralRadius) {
    Rng rng(15);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 6;
        std::vector<Complex> d(n);
        double rho = 0.0;
        for (auto& x : d) {
            x = 2.0 * numrad::testing::unit_disk(rng);
            rho = std::max(rho, std::abs(x));
        }
        const ComplexMatrix u = numrad::testing::random_unitary(rng, n);
        const ComplexMatrix t = u * ComplexMatrix::diagonal(d) * adjoint(u);
        EXPECT_NEAR(numerical_radius(t), rho, 1e-9);
    }
}

TEST(NumericalRadius, HermitianEqualsNorm) {
    Rng rng(16);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix h = numrad::testing::random_hermitian(rng, 1 + rep % 7);
        EXPECT_NEAR(numerical_radius(h), hermitian_norm(h), 1e-8);
    }
}

TEST(NumericalRadius, DominatesSampledQuadraticForms) {
    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 4);
        const double w = numerical_radius(t);
        for (int k = 0; k < 2000; ++k) {
            const auto x = numrad::testing::random_unit_vector(rng, 4);
            EXPECT_LE(std::abs(numrad::testing::quadratic_form(t, x)), w + 1e-12);
        }
    }
}

TEST(CrawfordNumber, Examples) {
    EXPECT_NEAR(crawford_number(ComplexMatrix::identity(3)), 1.0, 1e-14);
    EXPECT_EQ(crawford_number(ComplexMatrix::diagonal(std::vector<Complex>{1.0, -1.0})), 0.0);
    EXPECT_EQ(crawford_number(jordan2()), 0.0);
    // W(diag(1, i)) is the segment [1, i]; its distance to 0 is 1/sqrt(2).
    EXPECT_NEAR(crawford_number(ComplexMatrix::diagonal(std::vector<Complex>{1.0, I})), std::sqrt(0.5), 1e-10);
    // W(2I + J) is the disk |z - 2| <= 1/2.
    EXPECT_NEAR(crawford_number(ComplexMatrix{{2.0, 1.0}, {0.0, 2.0}}), 1.5, 1e-10);
}

TEST(CrawfordNumber, BelowSampledQuadraticForms) {
    Rng rng(18);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix t = shifted_random(rng, 3, 2 * rep);
        const double m = crawford_number(t);
        for (int k = 0; k < 2000; ++k) {
            const auto x = numrad::testing::random_unit_vector(rng, 3);
            EXPECT_GE(std::abs(numrad::testing::quadratic_form(t, x)), m - 1e-12);
        }
    }
}

TEST(CrawfordNumber, AgreesWithBoundaryPolygonOracle) {
    Rng rng(19);
    for (int rep = 0; rep < 6; ++rep) {
        const ComplexMatrix t = shifted_random(rng, 4, rep);
        EXPECT_NEAR(crawford_number(t), numrad::testing::brute_force_crawford(t, 20000), 1e-6);
    }
}

TEST(CQuantity, Examples) {
    EXPECT_EQ(c_quantity(ComplexMatrix(2, 2)), 0.0);
    // H_phi = cos(phi) I vanishes at phi = pi/2.
    EXPECT_NEAR(c_quantity(ComplexMatrix::identity(2)), 0.0, 1e-9);
    // H_phi = cos(phi) diag(1,-1) - sin(phi) I, singular at phi = pi/4.
    EXPECT_NEAR(c_quantity(ComplexMatrix{{1.0 + I, 0.0}, {0.0, -1.0 + I}}), 0.0, 1e-9);
    // T = X + iZ (Pauli): H_phi = cos(phi) X - sin(phi) Z has eigenvalues +-1 for every phi.
    EXPECT_NEAR(c_quantity(ComplexMatrix{{I, 1.0}, {1.0, -I}}), 1.0, 1e-12);
    // Scalar 1x1: |Re(e^{i phi} z)| reaches 0.
    EXPECT_NEAR(c_quantity(ComplexMatrix{{3.0 + 4.0 * I}}), 0.0, 1e-9);
}

TEST(CQuantity, AgreesWithGridOracle) {
    Rng rng(20);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 3);
        const double c = c_quantity(t);
        EXPECT_NEAR(c, numrad::testing::brute_force_c(t, 2000), 2e-3);
        EXPECT_LE(c, numrad::testing::brute_force_c(t, 2000) + 1e-12);
    }
}

TEST(CQuantity, BelowEverySampledAngle) {
    Rng rng(21);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 4);
        const double c = c_quantity(t);
        for (int k = 0; k < 200; ++k) {
            const auto ev = hermitian_eigenvalues(numrad::testing::rotated_by_definition(t, ang(rng)));
            for (double x : ev) EXPECT_GE(std::abs(x), c - 1e-12);
        }
    }
}

TEST(RangeBoundary, Examples) {
    for (const auto& s : range_boundary(ComplexMatrix::identity(2), 16)) {
        EXPECT_NEAR(s.boundary_point.real(), 1.0, 1e-14);
        EXPECT_NEAR(s.boundary_point.imag(), 0.0, 1e-14);
    }
    const auto disk = range_boundary(jordan2(), 360);
    ASSERT_EQ(disk.size(), 360u);
    for (const auto& s : disk) {
        EXPECT_NEAR(std::abs(s.boundary_point), 0.5, 1e-9);
        EXPECT_NEAR(s.lambda_max, 0.5, 1e-12);
    }
    for (const auto& s : range_boundary(ComplexMatrix::diagonal(std::vector<Complex>{0.0, 1.0}), 12)) {
        EXPECT_NEAR(s.boundary_point.imag(), 0.0, 1e-14);
        EXPECT_GE(s.boundary_point.real(), -1e-14);
        EXPECT_LE(s.boundary_point.real(), 1.0 + 1e-14);
    }
    EXPECT_THROW(range_boundary(jordan2(), 2), DomainError);
    EXPECT_THROW(range_boundary(ComplexMatrix(2, 1), 8), DimensionError);
}

TEST(RangeBoundary, SupportingHalfPlanes) {
    Rng rng(22);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix t = numrad::testing::random_matrix(rng, 2 + rep % 4);
        const auto samples = range_boundary(t, 64);
        for (std::size_t k = 0; k < samples.size(); ++k) {
            const auto& s = samples[k];
            EXPECT_NEAR(s.theta, 2.0 * std::numbers::pi * k / 64, 1e-15);
            const Complex e = std::polar(1.0, s.theta);
            // The point attains the support value in its own direction...
            EXPECT_NEAR((e * s.boundary_point).real(), s.lambda_max, 1e-10);
            // ...and every other sample lies in its supporting half-plane.
            for (const auto& o : samples) EXPECT_LE((e * o.boundary_point).real(), s.lambda_max + 1e-10);
            EXPECT_LE(std::abs(s.boundary_point), numerical_radius(t) + 1e-10);
        }
    }
}

}  // namespace
