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

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls the numerical-range optimizer or the bound formulas.

#ifndef NUMRAD_TESTS_SUPPORT_HPP
#define NUMRAD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/polyzero.hpp"

namespace numrad::testing {

using Rng = std::mt19937_64;

inline Complex unit_disk(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (auto& x : m.entries()) x = unit_disk(rng);
    return m;
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t n) { return random_matrix(rng, n, n); }

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) { return hermitian_part(random_matrix(rng, n)); }

inline std::vector<Complex> random_unit_vector(Rng& rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<Complex> x(n);
    double s = 0.0;
    for (auto& v : x) {
        v = {g(rng), g(rng)};
        s += std::norm(v);
    }
    for (auto& v : x) v /= std::sqrt(s);
    return x;
}

/// <Tx, x> = x* T x
inline Complex quadratic_form(const ComplexMatrix& t, const std::vector<Complex>& x) {
    Complex s{};
    for (std::size_t i = 0; i < t.rows(); ++i) {
        Complex tx{};
        for (std::size_t j = 0; j < t.cols(); ++j) tx += t(i, j) * x[j];
        s += std::conj(x[i]) * tx;
    }
    return s;
}

/// Product of plane rotations with random complex phases: a random unitary.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    ComplexMatrix u = ComplexMatrix::identity(n);
    for (int rep = 0; rep < 3; ++rep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double th = ang(rng);
                const Complex ph = std::polar(1.0, ang(rng));
                ComplexMatrix g = ComplexMatrix::identity(n);
                g(p, p) = std::cos(th);
                g(p, q) = -std::sin(th) * std::conj(ph);
                g(q, p) = std::sin(th) * ph;
                g(q, q) = std::cos(th);
                u = u * g;
            }
        }
    }
    return u;
}

inline ComplexMatrix random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ComplexMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1.0;
    return p;
}

/// Monic polynomial with coefficients a_0..a_{n-1} uniform in the disk of radius `scale`.
inline Polynomial random_monic(Rng& rng, std::size_t degree, double scale) {
    std::vector<Complex> c(degree + 1);
    for (std::size_t j = 0; j < degree; ++j) c[j] = scale * unit_disk(rng);
    c[degree] = 1.0;
    return Polynomial(std::move(c));
}

/// Monic polynomial prod (z - r_k), ascending coefficients.
inline Polynomial from_roots(const std::vector<Complex>& rs) {
    std::vector<Complex> c{1.0};
    for (const auto& r : rs) {
        std::vector<Complex> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

/// Largest singular value by power iteration on A*A.
inline double power_iteration_norm(const ComplexMatrix& a, int steps) {
    std::vector<Complex> x(a.cols(), Complex{1.0, 0.37});
    double lam = 0.0;
    for (int it = 0; it < steps; ++it) {
        std::vector<Complex> y(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
        std::vector<Complex> z(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t i = 0; i < a.rows(); ++i) z[j] += std::conj(a(i, j)) * y[i];
        double nz = 0.0;
        for (const auto& v : z) nz += std::norm(v);
        nz = std::sqrt(nz);
        if (nz == 0.0) return 0.0;
        lam = nz;  // ||A*A x|| with ||x|| = 1 converges to sigma_max^2
        for (std::size_t j = 0; j < a.cols(); ++j) x[j] = z[j] / nz;
    }
    return std::sqrt(lam);
}

/// H_theta built straight from the definition (e^{i t} T + e^{-i t} T*)/2.
inline ComplexMatrix rotated_by_definition(const ComplexMatrix& t, double theta) {
    const Complex e = std::polar(1.0, theta);
    ComplexMatrix h(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) h(i, j) = 0.5 * (e * t(i, j) + std::conj(e * t(j, i)));
    return hermitian_part(h);
}

/// w(T) by plain maximization of lambda_max(H_theta) over a uniform grid, no refinement.
inline double brute_force_w(const ComplexMatrix& t, int samples) {
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const auto ev = hermitian_eigenvalues(rotated_by_definition(t, 2.0 * std::numbers::pi * k / samples));
        best = std::max(best, ev.back());
    }
    return best;
}

/// C(T) by plain minimization over phi in [0, pi) of min |lambda_i(H_phi)|.
inline double brute_force_c(const ComplexMatrix& t, int samples) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const auto ev = hermitian_eigenvalues(rotated_by_definition(t, std::numbers::pi * k / samples));
        for (double x : ev) best = std::min(best, std::abs(x));
    }
    return best;
}

/// Distance from the origin to the convex polygon with vertices `pts` given in angular order.
inline double origin_distance_to_polygon(const std::vector<Complex>& pts) {
    const std::size_t m = pts.size();
    // Inside test: the origin is inside a convex polygon iff all edge cross products share a sign.
    bool pos = false;
    bool neg = false;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) {
        const Complex a = pts[k];
        const Complex b = pts[(k + 1) % m];
        const Complex d = b - a;
        const double cross = d.real() * (-a.imag()) - d.imag() * (-a.real());
        if (cross > 1e-15) pos = true;
        if (cross < -1e-15) neg = true;
        const double len2 = std::norm(d);
        double s = len2 > 0.0 ? -(a.real() * d.real() + a.imag() * d.imag()) / len2 : 0.0;
        s = std::clamp(s, 0.0, 1.0);
        best = std::min(best, std::abs(a + s * d));
    }
    if (pos != neg) return 0.0;  // strictly one orientation: origin inside
    return best;
}

/// m(T) from an inscribed polygon: boundary points x*Tx, x the top eigenvector of H_theta.
inline double brute_force_crawford(const ComplexMatrix& t, int samples) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const auto eig = hermitian_eigen(rotated_by_definition(t, 2.0 * std::numbers::pi * k / samples));
        std::vector<Complex> x(t.rows());
        for (std::size_t i = 0; i < t.rows(); ++i) x[i] = eig.vectors(i, t.rows() - 1);
        pts.push_back(quadratic_form(t, x));
    }
    // Angular order of boundary points for theta increasing runs clockwise; orientation is irrelevant.
    return origin_distance_to_polygon(pts);
}

/// Characteristic polynomial det(zI - A), ascending coefficients, by Faddeev-LeVerrier.
inline std::vector<Complex> faddeev_leverrier(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    ComplexMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        ComplexMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = next;
        c[n - k] = -trace(a * m) / static_cast<double>(k);
    }
    return c;
}

}  // namespace numrad::testing

#endif  // NUMRAD_TESTS_SUPPORT_HPP
