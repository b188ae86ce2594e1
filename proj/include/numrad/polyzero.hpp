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

#ifndef NUMRAD_POLYZERO_HPP
#define NUMRAD_POLYZERO_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "linalg.hpp"
#include "numrange.hpp"

namespace numrad {

/// Complex polynomial a_0 + a_1 z + ... + a_n z^n with a_n != 0.
class Polynomial {
   public:
    /// Coefficients in ascending degree order.
    explicit Polynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
        if (coeffs_.empty()) throw DomainError("polynomial has no coefficients");
        for (const auto& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("non-finite polynomial coefficient");
        if (coeffs_.back() == Complex{}) throw DomainError("leading coefficient is zero");
    }

    static Polynomial from_descending(std::span<const Complex> descending) {
        return Polynomial(std::vector<Complex>(descending.rbegin(), descending.rend()));
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    Complex coefficient(std::size_t k) const { return coeffs_[k]; }
    Complex leading() const { return coeffs_.back(); }
    bool is_monic() const { return coeffs_.back() == Complex{1.0, 0.0}; }

    /// Divides through by the leading coefficient.
    Polynomial monic() const {
        std::vector<Complex> c(coeffs_);
        const Complex lead = c.back();
        for (auto& x : c) x /= lead;
        c.back() = 1.0;
        return Polynomial(std::move(c));
    }

    Complex operator()(Complex z) const {
        Complex acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = detail::cmul(acc, z) + *it;
        return acc;
    }

    bool operator==(const Polynomial&) const = default;

   private:
    std::vector<Complex> coeffs_;
};

namespace detail {

inline void require_zero_bound_input(const Polynomial& p, const char* what) {
    if (p.degree() < 2)
        throw DomainError(std::string(what) + ": the zero bounds are stated for monic polynomials of degree n >= 2, got degree " +
                          std::to_string(p.degree()));
    if (!p.is_monic()) throw DomainError(std::string(what) + ": polynomial must be normalized to monic first");
}

}  // namespace detail

/// Frobenius companion matrix: first row (-a_{n-1}, ..., -a_0), ones on the subdiagonal.
inline ComplexMatrix companion_matrix(const Polynomial& p) {
    detail::require_zero_bound_input(p, "companion_matrix");
    const std::size_t n = p.degree();
    ComplexMatrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) c(0, j) = -p.coefficient(n - 1 - j);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    return c;
}

/**
 * All zeros of a monic polynomial by Durand-Kerner iteration, with
 * multiplicity.
 *
 * Exact zero roots are factored out first. Starting points lie on the
 * Cauchy circle r = 1 + max |a_j| at angles 2 pi k / n + 0.4. Iteration stops
 * once the largest update falls below 1e-12 (relative to max(1, |z|)) or
 * after max_iter rounds; either way every root must then satisfy
 * |p(z)| <= 1e-8 (1 + |z|)^n or ConvergenceError is thrown with the
 * offending residuals.
 */
inline std::vector<Complex> roots(const Polynomial& p, const EngineConfig& cfg = {}) {
    if (p.degree() < 1) throw DomainError("roots: polynomial must have degree >= 1");
    if (!p.is_monic()) throw DomainError("roots: polynomial must be monic");

    const auto& a = p.coefficients();
    std::size_t zeros = 0;
    while (a[zeros] == Complex{}) ++zeros;
    const Polynomial q(std::vector<Complex>(a.begin() + static_cast<std::ptrdiff_t>(zeros), a.end()));
    const std::size_t n = q.degree();

    std::vector<Complex> z(n);
    if (n > 0) {
        double amax = 0.0;
        for (std::size_t j = 0; j < n; ++j) amax = std::max(amax, std::abs(q.coefficient(j)));
        const double radius = 1.0 + amax;
        for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);

        for (int iter = 0; iter < cfg.max_iter; ++iter) {
            double worst = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                Complex denom{1.0, 0.0};
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) denom = detail::cmul(denom, z[k] - z[j]);
                if (denom == Complex{}) denom = Complex{1e-300, 0.0};
                const Complex delta = q(z[k]) / denom;
                z[k] -= delta;
                worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[k])));
            }
            if (worst < 1e-12) break;
        }

        std::string failures;
        for (std::size_t k = 0; k < n; ++k) {
            const double residual = std::abs(q(z[k]));
            const double allowed = 1e-8 * std::pow(1.0 + std::abs(z[k]), static_cast<double>(n));
            if (!(residual <= allowed))
                failures += " z=" + std::to_string(z[k].real()) + "+" + std::to_string(z[k].imag()) +
                            "i |p(z)|=" + std::to_string(residual);
        }
        if (!failures.empty()) throw ConvergenceError("Durand-Kerner did not certify all roots:" + failures);
    }
    z.insert(z.end(), zeros, Complex{});
    return z;
}

inline double max_modulus(std::span<const Complex> zs) {
    double m = 0.0;
    for (const auto& z : zs) m = std::max(m, std::abs(z));
    return m;
}

/**
 * The eight classical zero bounds, in table order: Carmichael-Mason, Cauchy,
 * Fujii-Kubo, Kittaneh, the two Paul-Bag bounds, Abu-Omar-Kittaneh and
 * Alpin et al.
 */
inline std::vector<BoundValue> classical_bounds(const Polynomial& p, const EngineConfig& cfg = {}) {
    detail::require_zero_bound_input(p, "classical_bounds");
    const std::size_t n = p.degree();
    const double nd = static_cast<double>(n);
    auto mag = [&](std::size_t j) { return std::abs(p.coefficient(j)); };
    auto sum_sq = [&](std::size_t lo, std::size_t hi) {  // sum_{j=lo}^{hi} |a_j|^2, empty when hi < lo
        double s = 0.0;
        for (std::size_t j = lo; j <= hi && j < n; ++j) s += mag(j) * mag(j);
        return s;
    };
    const double top = mag(n - 1);
    const double all_sq = sum_sq(0, n - 1);
    std::vector<BoundValue> out;

    out.push_back(make_bound("carmichael_mason", std::sqrt(1.0 + all_sq), BoundKind::upper, "|a_j|"));

    double amax = 0.0;
    for (std::size_t j = 0; j < n; ++j) amax = std::max(amax, mag(j));
    out.push_back(make_bound("cauchy", 1.0 + amax, BoundKind::upper, "max |a_j|"));

    out.push_back(make_bound("fujii_kubo",
                             std::cos(std::numbers::pi / (nd + 1.0)) + 0.5 * (std::sqrt(sum_sq(0, n - 2)) + top),
                             BoundKind::upper, "|a_j|, n"));

    const ComplexMatrix c = companion_matrix(p);
    out.push_back(make_bound("kittaneh", 0.5 * (operator_norm(c, cfg) + std::sqrt(operator_norm(c * c, cfg))),
                             BoundKind::upper, "||C(p)||, ||C(p)^2||"));

    {
        const double cs = std::cos(std::numbers::pi / nd);
        const double tail = std::sqrt(n >= 2 ? sum_sq(0, n - 2) : 0.0);  // k = 2..n  <=>  j = n-k = 0..n-2
        const double v = 0.5 * (top + cs + std::sqrt((top - cs) * (top - cs) + (1.0 + tail) * (1.0 + tail)));
        out.push_back(make_bound("paul_bag_1", v, BoundKind::upper, "|a_j|, n"));
    }
    {
        const ComplexMatrix head{{-p.coefficient(n - 1), -p.coefficient(n - 2)}, {1.0, 0.0}};
        const double wa = numerical_radius(head, cfg);
        const double cs = std::cos(std::numbers::pi / (nd - 1.0));
        const double tail = std::sqrt(n >= 3 ? sum_sq(0, n - 3) : 0.0);  // k = 3..n  <=>  j = 0..n-3
        const double v = 0.5 * (wa + cs + std::sqrt((wa - cs) * (wa - cs) + (1.0 + tail) * (1.0 + tail)));
        out.push_back(make_bound("paul_bag_2", v, BoundKind::upper, "w([[-a_{n-1}, -a_{n-2}], [1, 0]]), |a_j|, n"));
    }
    {
        const double alpha = std::sqrt(all_sq);
        const double cs = std::cos(std::numbers::pi / (nd + 1.0));
        const double lead = top * top + alpha;
        out.push_back(make_bound("aok_poly", std::sqrt(0.25 * lead * lead + alpha + cs * cs), BoundKind::upper,
                                 "|a_{n-1}|, alpha = sqrt(sum |a_j|^2), n"));
    }
    {
        double best = 0.0;
        double log_prod = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            log_prod += std::log1p(mag(n - k));
            best = std::max(best, std::exp(log_prod / static_cast<double>(k)));
        }
        out.push_back(make_bound("alpin", best, BoundKind::upper, "prod (1 + |a_{n-k}|)"));
    }
    return out;
}

/// Zero bound through the r = 2 power inequality on the companion matrix.
inline BoundValue new_bound_thm41(const Polynomial& p, const EngineConfig& cfg = {}) {
    detail::require_zero_bound_input(p, "new_bound_thm41");
    BoundValue b = upper_thm23(companion_matrix(p), 2.0, cfg);
    b.name = "thm41";
    b.inputs = "w(C^2), ||(C*C)^2 + (CC*)^2||";
    return b;
}

/// Zero bound through the quartic inequality on the companion matrix.
inline BoundValue new_bound_thm42(const Polynomial& p, const EngineConfig& cfg = {}) {
    detail::require_zero_bound_input(p, "new_bound_thm42");
    BoundValue b = upper_thm21(companion_matrix(p), cfg);
    b.name = "thm42";
    b.inputs = "w(C^2), w(C^2 P + P C^2), ||P||";
    return b;
}

struct ZeroBoundReport {
    Polynomial polynomial;          // monic
    std::vector<BoundValue> bounds;  // ascending by value
    std::vector<Complex> roots;
    double max_root_modulus;
    double numerical_radius;  // w(C(p))
};

/// Every zero bound for p (normalized to monic), its zeros, and w(C(p)).
inline ZeroBoundReport zero_bound_report(const Polynomial& input, const EngineConfig& cfg = {}) {
    cfg.validate();
    if (input.degree() < 2)
        throw DomainError("zero_bound_report: the zero bounds are stated for polynomials of degree n >= 2, got degree " +
                          std::to_string(input.degree()));
    const Polynomial p = input.monic();
    const ComplexMatrix c = companion_matrix(p);

    BoundContext ctx(c, cfg);
    std::vector<BoundValue> bounds = classical_bounds(p, cfg);
    BoundValue thm41 = upper_thm23(ctx, 2.0);
    thm41.name = "thm41";
    thm41.inputs = "w(C^2), ||(C*C)^2 + (CC*)^2||";
    BoundValue thm42 = upper_thm21(ctx);
    thm42.name = "thm42";
    thm42.inputs = "w(C^2), w(C^2 P + P C^2), ||P||";
    bounds.push_back(std::move(thm41));
    bounds.push_back(std::move(thm42));
    const double w = ctx.w_t();
    bounds.push_back(make_bound("numerical_radius_exactish", w, BoundKind::upper, "w(C(p))"));
    std::stable_sort(bounds.begin(), bounds.end(), [](const BoundValue& x, const BoundValue& y) { return x.value < y.value; });

    std::vector<Complex> zs = roots(p, cfg);
    const double rmax = max_modulus(zs);
    return ZeroBoundReport{p, std::move(bounds), std::move(zs), rmax, w};
}

}  // namespace numrad

#endif  // NUMRAD_POLYZERO_HPP
