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

#ifndef NUMRAD_NUMRANGE_HPP
#define NUMRAD_NUMRANGE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "linalg.hpp"

namespace numrad {

/// One sample of the boundary of the numerical range W(T).
struct RangeSample {
    double theta;            // in [0, 2pi)
    double lambda_max;       // largest eigenvalue of H_theta
    Complex boundary_point;  // <Tx, x> for a unit eigenvector x of lambda_max
};

/// Cartesian decomposition T = re + i im, both parts exactly Hermitian.
struct CartesianParts {
    ComplexMatrix re;
    ComplexMatrix im;
};

inline CartesianParts cartesian_parts(const ComplexMatrix& t) {
    require_square(t, "cartesian decomposition");
    const std::size_t n = t.rows();
    CartesianParts parts{ComplexMatrix(n, n), ComplexMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex tij = t(i, j);
            const Complex tji_c = std::conj(t(j, i));
            const Complex re = 0.5 * (tij + tji_c);
            const Complex diff = 0.5 * (tij - tji_c);
            const Complex im{diff.imag(), -diff.real()};  // diff / i
            parts.re(i, j) = re;
            parts.re(j, i) = std::conj(re);
            parts.im(i, j) = im;
            parts.im(j, i) = std::conj(im);
        }
        parts.re(i, i) = parts.re(i, i).real();
        parts.im(i, i) = parts.im(i, i).real();
    }
    return parts;
}

/// Re(T) = (T + T*)/2.
inline ComplexMatrix real_part(const ComplexMatrix& t) { return cartesian_parts(t).re; }

/// Im(T) = (T - T*)/(2i).
inline ComplexMatrix imag_part(const ComplexMatrix& t) { return cartesian_parts(t).im; }

namespace detail {

// H_theta = cos(theta) Re(T) - sin(theta) Im(T), exactly Hermitian when the
// parts are.
inline ComplexMatrix rotate_parts(const CartesianParts& parts, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix h = parts.re;
    auto he = h.entries();
    auto ie = parts.im.entries();
    for (std::size_t k = 0; k < he.size(); ++k) he[k] = c * he[k] - s * ie[k];
    return h;
}

enum class Sense { maximize, minimize };

// Golden-section search for an extremum of f inside [lo, hi]. Returns the
// best value seen, including the endpoints' neighbourhood probes.
template <class F>
double golden_section(F&& f, double lo, double hi, double tol, Sense sense) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double sign = sense == Sense::maximize ? 1.0 : -1.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = sign * f(x1);
    double f2 = sign * f(x2);
    double best = std::max(f1, f2);
    while (hi - lo > tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = sign * f(x1);
            best = std::max(best, f1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = sign * f(x2);
            best = std::max(best, f2);
        }
    }
    return sign * best;
}

/**
 * Optimizes a periodic function sampled on a uniform grid. `samples[k]` is
 * f(origin + k * step); the grid wraps around. Every grid-local extremum is
 * refined with golden-section search over its two neighbouring cells unless
 * the Lipschitz bound `lipschitz * step` shows it cannot beat the incumbent.
 */
template <class F>
double optimize_periodic(const std::vector<double>& samples, double origin, double step, F&& f, double lipschitz,
                         double tol, Sense sense) {
    const std::size_t m = samples.size();
    const double sign = sense == Sense::maximize ? 1.0 : -1.0;
    auto val = [&](std::size_t k) { return sign * samples[k % m]; };

    double best = val(0);
    for (std::size_t k = 1; k < m; ++k) best = std::max(best, val(k));

    const double reach = lipschitz * step;
    for (std::size_t k = 0; k < m; ++k) {
        const double here = val(k);
        const double prev = val(k + m - 1);
        const double next = val(k + 1);
        const bool local = here >= prev && here >= next && (here > prev || here > next);
        if (!local) continue;
        if (here + reach < best) continue;
        const double centre = origin + static_cast<double>(k) * step;
        const double refined = golden_section(f, centre - step, centre + step, tol, sense);
        best = std::max(best, sign * refined);
    }
    return sign * best;
}

// Sorted spectra of H_theta at theta_k = k * pi / half for k < half.
inline std::vector<std::vector<double>> half_turn_spectra(const CartesianParts& parts, int half, const EngineConfig& cfg) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(half));
    const double step = std::numbers::pi / half;
    for (int k = 0; k < half; ++k)
        out[static_cast<std::size_t>(k)] = tridiagonal_eigenvalues(rotate_parts(parts, k * step), cfg);
    return out;
}

inline int even_grid(const EngineConfig& cfg) {
    cfg.validate();
    return cfg.theta_grid + (cfg.theta_grid % 2);
}

// Extreme eigenvalue of H_theta over a full turn, using
// lambda_max(H_{theta+pi}) = -lambda_min(H_theta) to halve the solves.
inline double support_extreme(const ComplexMatrix& t, const EngineConfig& cfg, bool use_max) {
    const CartesianParts parts = cartesian_parts(t);
    const int grid = even_grid(cfg);
    const int half = grid / 2;
    const auto spectra = half_turn_spectra(parts, half, cfg);
    std::vector<double> samples(static_cast<std::size_t>(grid));
    for (int k = 0; k < half; ++k) {
        const auto& ev = spectra[static_cast<std::size_t>(k)];
        samples[static_cast<std::size_t>(k)] = use_max ? ev.back() : ev.front();
        samples[static_cast<std::size_t>(k + half)] = use_max ? -ev.front() : -ev.back();
    }
    auto f = [&](double theta) {
        const auto ev = tridiagonal_eigenvalues(rotate_parts(parts, theta), cfg);
        return use_max ? ev.back() : ev.front();
    };
    const double step = 2.0 * std::numbers::pi / grid;
    return optimize_periodic(samples, 0.0, step, f, frobenius_norm(t) + 1e-300, cfg.refine_tol,
                             Sense::maximize);
}

}  // namespace detail

/// H_theta = Re(e^{i theta} T) = (e^{i theta} T + e^{-i theta} T*)/2.
inline ComplexMatrix herm_part_rotated(const ComplexMatrix& t, double theta) {
    return detail::rotate_parts(cartesian_parts(t), theta);
}

/**
 * Numerical radius w(T) = sup_theta lambda_max(H_theta).
 *
 * The support function is sampled on theta_grid angles and refined around
 * each grid-local maximum, so the result is a lower approximation of w(T)
 * whose error is bounded by the support function's variation over one
 * refined bracket (well below 1e-9 at default settings).
 */
inline double numerical_radius(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    require_square(t, "numerical_radius");
    return std::max(0.0, detail::support_extreme(t, cfg, true));
}

/// Crawford number m(T): distance from 0 to W(T), max(0, sup_theta lambda_min(H_theta)).
inline double crawford_number(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    require_square(t, "crawford_number");
    return std::max(0.0, detail::support_extreme(t, cfg, false));
}

/**
 * C(T) = inf over unit x and angles phi of ||Re(e^{i phi} T) x||.
 *
 * The two infima commute and the inner one is the smallest |eigenvalue| of
 * H_phi. Since H_{phi+pi} = -H_phi the objective has period pi.
 */
inline double c_quantity(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    require_square(t, "c_quantity");
    const CartesianParts parts = cartesian_parts(t);
    const int half = detail::even_grid(cfg) / 2;
    auto smallest_abs = [](const std::vector<double>& ev) {
        double m = std::abs(ev.front());
        for (double x : ev) m = std::min(m, std::abs(x));
        return m;
    };
    const auto spectra = detail::half_turn_spectra(parts, half, cfg);
    std::vector<double> samples(spectra.size());
    for (std::size_t k = 0; k < spectra.size(); ++k) samples[k] = smallest_abs(spectra[k]);
    auto f = [&](double phi) { return smallest_abs(detail::tridiagonal_eigenvalues(detail::rotate_parts(parts, phi), cfg)); };
    const double step = std::numbers::pi / half;
    return std::max(0.0, detail::optimize_periodic(samples, 0.0, step, f, frobenius_norm(t) + 1e-300, cfg.refine_tol,
                                                   detail::Sense::minimize));
}

/// Boundary samples of W(T) at theta_k = 2 pi k / n_samples.
inline std::vector<RangeSample> range_boundary(const ComplexMatrix& t, int n_samples, const EngineConfig& cfg = {}) {
    require_square(t, "range_boundary");
    if (n_samples < 3) throw DomainError("range_boundary needs at least 3 samples, got " + std::to_string(n_samples));
    const CartesianParts parts = cartesian_parts(t);
    const std::size_t n = t.rows();
    std::vector<RangeSample> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n_samples;
        const HermitianEigen eig = detail::hermitian_eigen_unchecked(detail::rotate_parts(parts, theta), cfg);
        const double top = eig.values.back();
        // Among (near-)ties for the top eigenvalue take the first column.
        std::size_t col = n - 1;
        while (col > 0 && top - eig.values[col - 1] < 1e-10) --col;
        Complex z{};
        for (std::size_t i = 0; i < n; ++i) {
            Complex tx{};
            for (std::size_t j = 0; j < n; ++j) tx += detail::cmul(t(i, j), eig.vectors(j, col));
            z += detail::cmul_conj(eig.vectors(i, col), tx);
        }
        out.push_back({theta, top, z});
    }
    return out;
}

}  // namespace numrad

#endif  // NUMRAD_NUMRANGE_HPP
