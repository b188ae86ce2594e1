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

#ifndef NUMRAD_BOUNDS_HPP
#define NUMRAD_BOUNDS_HPP

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "numrange.hpp"

namespace numrad {

enum class BoundKind { upper, lower };

inline const char* to_string(BoundKind k) { return k == BoundKind::upper ? "upper" : "lower"; }

/// One named bound on the numerical radius (or on a spectral radius / zero modulus).
struct BoundValue {
    std::string name;
    double value;
    BoundKind kind;
    std::string inputs;  // operands the formula consumed, e.g. "w(T^2), ||P||"
};

inline BoundValue make_bound(std::string name, double value, BoundKind kind, std::string inputs) {
    if (!std::isfinite(value) || value < 0.0)
        throw NumericalError("bound " + name + " evaluated to an invalid value " + std::to_string(value));
    return {std::move(name), value, kind, std::move(inputs)};
}

/// m(H) for Hermitian H: distance from 0 to [lambda_min, lambda_max].
inline double hermitian_crawford(const ComplexMatrix& h, const EngineConfig& cfg = {}) {
    const auto ev = hermitian_eigenvalues(h, cfg);
    if (ev.front() >= 0.0) return ev.front();
    if (ev.back() <= 0.0) return -ev.back();
    return 0.0;
}

/**
 * Lazily evaluated operands shared by the single-matrix bounds.
 *
 * Each quantity (w(T^2), ||P||, ...) is computed at most once, so a full
 * report costs one numerical-radius evaluation per distinct operand. Not
 * safe for concurrent use; build one per thread.
 */
class BoundContext {
   public:
    BoundContext(ComplexMatrix t, EngineConfig cfg) : t_(std::move(t)), cfg_(cfg) {
        require_square(t_, "bound evaluation");
        cfg_.validate();
    }

    const EngineConfig& config() const { return cfg_; }
    const ComplexMatrix& t() const { return t_; }

    const ComplexMatrix& adj() { return memo(adj_, [&] { return adjoint(t_); }); }
    const ComplexMatrix& t2() { return memo(t2_, [&] { return t_ * t_; }); }
    const ComplexMatrix& t3() { return memo(t3_, [&] { return t2() * t_; }); }
    const ComplexMatrix& gram() { return memo(gram_, [&] { return hermitian_part(adj() * t_); }); }      // T*T
    const ComplexMatrix& cogram() { return memo(cogram_, [&] { return hermitian_part(t_ * adj()); }); }  // TT*
    const ComplexMatrix& p() { return memo(p_, [&] { return gram() + cogram(); }); }
    // T^2 P + P T^2
    const ComplexMatrix& mixed() { return memo(mixed_, [&] { return t2() * p() + p() * t2(); }); }
    // T^2 T* + T* T^2 + T T* T
    const ComplexMatrix& cubic() { return memo(cubic_, [&] { return t2() * adj() + adj() * t2() + t_ * adj() * t_; }); }
    const CartesianParts& parts() { return memo(parts_, [&] { return cartesian_parts(t_); }); }

    double w_t() { return memo(w_t_, [&] { return numerical_radius(t_, cfg_); }); }
    double w_t2() { return memo(w_t2_, [&] { return numerical_radius(t2(), cfg_); }); }
    double w_t3() { return memo(w_t3_, [&] { return numerical_radius(t3(), cfg_); }); }
    double w_mixed() { return memo(w_mixed_, [&] { return numerical_radius(mixed(), cfg_); }); }
    double w_cubic() { return memo(w_cubic_, [&] { return numerical_radius(cubic(), cfg_); }); }
    double m_mixed() { return memo(m_mixed_, [&] { return crawford_number(mixed(), cfg_); }); }
    double c_t2() { return memo(c_t2_, [&] { return c_quantity(t2(), cfg_); }); }
    double norm_t() { return memo(norm_t_, [&] { return operator_norm(t_, cfg_); }); }
    double norm_t2() { return memo(norm_t2_, [&] { return operator_norm(t2(), cfg_); }); }
    double norm_p() { return memo(norm_p_, [&] { return hermitian_norm(p(), cfg_); }); }
    double norm_re() { return memo(norm_re_, [&] { return hermitian_norm(parts().re, cfg_); }); }
    double norm_im() { return memo(norm_im_, [&] { return hermitian_norm(parts().im, cfg_); }); }
    double m_re() { return memo(m_re_, [&] { return hermitian_crawford(parts().re, cfg_); }); }
    double m_im() { return memo(m_im_, [&] { return hermitian_crawford(parts().im, cfg_); }); }

    /// ||(T*T)^r + (TT*)^r||
    double power_sum_norm(double r) {
        auto it = power_sum_.find(r);
        if (it != power_sum_.end()) return it->second;
        const ComplexMatrix sum = psd_power(gram(), r, cfg_) + psd_power(cogram(), r, cfg_);
        const double v = hermitian_norm(hermitian_part(sum), cfg_);
        power_sum_.emplace(r, v);
        return v;
    }

   private:
    template <class T, class F>
    const T& memo(std::optional<T>& slot, F&& make) {
        if (!slot) slot.emplace(make());
        return *slot;
    }

    ComplexMatrix t_;
    EngineConfig cfg_;
    std::optional<ComplexMatrix> adj_, t2_, t3_, gram_, cogram_, p_, mixed_, cubic_;
    std::optional<CartesianParts> parts_;
    std::optional<double> w_t_, w_t2_, w_t3_, w_mixed_, w_cubic_, m_mixed_, c_t2_;
    std::optional<double> norm_t_, norm_t2_, norm_p_, norm_re_, norm_im_, m_re_, m_im_;
    std::map<double, double> power_sum_;
};

namespace detail {

inline std::string exponent_label(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", r);
    return buf;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Upper bounds

/// w^4 <= 1/4 w^2(T^2) + 1/8 w(T^2 P + P T^2) + 1/16 ||P||^2, P = T*T + TT*.
inline BoundValue upper_thm21(BoundContext& ctx) {
    const double w2 = ctx.w_t2();
    const double np = ctx.norm_p();
    const double v = 0.25 * w2 * w2 + 0.125 * ctx.w_mixed() + np * np / 16.0;
    return make_bound("thm21_upper", std::pow(v, 0.25), BoundKind::upper, "w(T^2), w(T^2 P + P T^2), ||P||");
}

/// w^3 <= 1/4 w(T^3) + 1/4 w(T^2 T* + T* T^2 + T T* T).
inline BoundValue upper_thm22(BoundContext& ctx) {
    const double v = 0.25 * ctx.w_t3() + 0.25 * ctx.w_cubic();
    return make_bound("thm22_upper", std::cbrt(v), BoundKind::upper, "w(T^3), w(T^2 T* + T* T^2 + T T* T)");
}

/// w^{2r} <= 1/2 w^r(T^2) + 1/4 ||(T*T)^r + (TT*)^r||, r >= 1.
inline BoundValue upper_thm23(BoundContext& ctx, double r) {
    if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("upper_thm23 requires r >= 1, got " + std::to_string(r));
    const double v = 0.5 * std::pow(ctx.w_t2(), r) + 0.25 * ctx.power_sum_norm(r);
    return make_bound("thm23_upper_r" + detail::exponent_label(r), std::pow(v, 1.0 / (2.0 * r)), BoundKind::upper,
                      "w(T^2), ||(T*T)^r + (TT*)^r||");
}

/**
 * w <= inf_phi sqrt(||H_phi||^2 + ||H_{phi+pi/2}||^2).
 *
 * ||H_phi|| has period pi, so the objective has period pi/2; it is sampled
 * on theta_grid / 2 points of [0, pi) with the partner angle read off the same
 * grid, then refined around local minima.
 */
inline BoundValue upper_thm25(BoundContext& ctx) {
    const EngineConfig& cfg = ctx.config();
    const CartesianParts& parts = ctx.parts();
    const int half = detail::even_grid(cfg) / 2;
    const auto spectra = detail::half_turn_spectra(parts, half, cfg);
    auto norm_of = [](const std::vector<double>& ev) { return std::max(std::abs(ev.front()), std::abs(ev.back())); };
    std::vector<double> norms(spectra.size());
    for (std::size_t k = 0; k < spectra.size(); ++k) norms[k] = norm_of(spectra[k]);
    const std::size_t quarter = norms.size() / 2;
    std::vector<double> samples(norms.size());
    for (std::size_t k = 0; k < norms.size(); ++k) samples[k] = std::hypot(norms[k], norms[(k + quarter) % norms.size()]);

    auto f = [&](double phi) {
        const double a = norm_of(detail::tridiagonal_eigenvalues(detail::rotate_parts(parts, phi), cfg));
        const double b = norm_of(
            detail::tridiagonal_eigenvalues(detail::rotate_parts(parts, phi + std::numbers::pi / 2.0), cfg));
        return std::hypot(a, b);
    };
    const double step = std::numbers::pi / half;
    const double v = detail::optimize_periodic(samples, 0.0, step, f, 2.0 * frobenius_norm(ctx.t()) + 1e-300,
                                               cfg.refine_tol, detail::Sense::minimize);
    return make_bound("thm25_upper", v, BoundKind::upper, "inf_phi ||H_phi||, ||H_{phi+pi/2}||");
}

inline BoundValue upper_thm21(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return upper_thm21(ctx);
}
inline BoundValue upper_thm22(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return upper_thm22(ctx);
}
inline BoundValue upper_thm23(const ComplexMatrix& t, double r, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return upper_thm23(ctx, r);
}
inline BoundValue upper_thm25(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return upper_thm25(ctx);
}

/// Equality value of the square-zero case: w(T) = 1/2 sqrt(||TT* + T*T||) when T^2 = 0.
inline double square_zero_radius(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return 0.5 * std::sqrt(ctx.norm_p());
}

using BlockMatrix = std::vector<std::vector<ComplexMatrix>>;

namespace detail {

inline void check_block_partition(const BlockMatrix& blocks) {
    const std::size_t k = blocks.size();
    if (k == 0) throw DimensionError("block matrix has no blocks");
    for (std::size_t i = 0; i < k; ++i) {
        if (blocks[i].size() != k)
            throw DimensionError("block row " + std::to_string(i) + " has " + std::to_string(blocks[i].size()) +
                                 " blocks, expected " + std::to_string(k));
        if (!blocks[i][i].is_square())
            throw DimensionError("diagonal block " + std::to_string(i) + " is " + blocks[i][i].shape() + ", not square");
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto& b = blocks[i][j];
            if (b.rows() != blocks[i][i].rows() || b.cols() != blocks[j][j].cols())
                throw DimensionError("block (" + std::to_string(i) + "," + std::to_string(j) + ") is " + b.shape() +
                                     ", expected " + detail::shape(blocks[i][i].rows(), blocks[j][j].cols()));
        }
    }
}

}  // namespace detail

/// Assembles a conformable block partition into one matrix.
inline ComplexMatrix assemble_blocks(const BlockMatrix& blocks) {
    detail::check_block_partition(blocks);
    std::vector<std::size_t> offset{0};
    for (const auto& row : blocks) offset.push_back(offset.back() + row.front().rows());
    ComplexMatrix out(offset.back(), offset.back());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j)
            for (std::size_t r = 0; r < blocks[i][j].rows(); ++r)
                for (std::size_t c = 0; c < blocks[i][j].cols(); ++c) out(offset[i] + r, offset[j] + c) = blocks[i][j](r, c);
    return out;
}

/// w(A) <= max_i [ w(A_ii) + 1/2 sum_{j != i} (||A_ij|| + ||A_ji||) ].
inline BoundValue upper_thm26_block(const BlockMatrix& blocks, const EngineConfig& cfg = {}) {
    detail::check_block_partition(blocks);
    const std::size_t k = blocks.size();
    std::vector<std::vector<double>> norms(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) norms[i][j] = operator_norm(blocks[i][j], cfg);
    double best = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double v = numerical_radius(blocks[i][i], cfg);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) v += 0.5 * (norms[i][j] + norms[j][i]);
        best = std::max(best, v);
    }
    return make_bound("thm26_block_upper", best, BoundKind::upper, "w(A_ii), ||A_ij||");
}

using MatrixPair = std::pair<ComplexMatrix, ComplexMatrix>;

/// rho(sum A_i B_i) <= max_i [ w(B_i A_i) + 1/2 sum_{j != i} (||B_i A_j|| + ||B_j A_i||) ].
inline BoundValue upper_thm27_spectral(const std::vector<MatrixPair>& pairs, const EngineConfig& cfg = {}) {
    if (pairs.empty()) throw DimensionError("upper_thm27_spectral needs at least one (A, B) pair");
    const std::size_t n = pairs.front().first.rows();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const ComplexMatrix* m : {&pairs[i].first, &pairs[i].second}) {
            if (!m->is_square() || m->rows() != n)
                throw DimensionError("pair " + std::to_string(i) + " has a " + m->shape() + " operand, expected " +
                                     detail::shape(n, n));
        }
    }
    const std::size_t k = pairs.size();
    // cross[i][j] = ||B_i A_j||
    std::vector<std::vector<double>> cross(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) cross[i][j] = operator_norm(pairs[i].second * pairs[j].first, cfg);
    double best = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double v = numerical_radius(pairs[i].second * pairs[i].first, cfg);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) v += 0.5 * (cross[i][j] + cross[j][i]);
        best = std::max(best, v);
    }
    return make_bound("thm27_spectral_upper", best, BoundKind::upper, "w(B_i A_i), ||B_i A_j||");
}

/// sum_i A_i B_i, the matrix whose spectral radius upper_thm27_spectral bounds.
inline ComplexMatrix sum_of_products(const std::vector<MatrixPair>& pairs) {
    if (pairs.empty()) throw DimensionError("sum_of_products needs at least one pair");
    ComplexMatrix s = pairs.front().first * pairs.front().second;
    for (std::size_t i = 1; i < pairs.size(); ++i) s = s + pairs[i].first * pairs[i].second;
    return s;
}

// ---------------------------------------------------------------------------
// Lower bounds

/// w^4 >= 1/4 C^2(T^2) + 1/8 m(T^2 P + P T^2) + 1/16 ||P||^2.
inline BoundValue lower_thm31(BoundContext& ctx) {
    const double c = ctx.c_t2();
    const double np = ctx.norm_p();
    const double v = 0.25 * c * c + 0.125 * ctx.m_mixed() + np * np / 16.0;
    return make_bound("thm31_lower", std::pow(v, 0.25), BoundKind::lower, "C(T^2), m(T^2 P + P T^2), ||P||");
}

/// w >= sqrt(||Re T||^2 + m^2(Im T)) and w >= sqrt(||Im T||^2 + m^2(Re T)).
inline std::pair<BoundValue, BoundValue> lower_thm33(BoundContext& ctx) {
    return {make_bound("thm33_lower_re", std::hypot(ctx.norm_re(), ctx.m_im()), BoundKind::lower, "||Re T||, m(Im T)"),
            make_bound("thm33_lower_im", std::hypot(ctx.norm_im(), ctx.m_re()), BoundKind::lower, "||Im T||, m(Re T)")};
}

inline BoundValue lower_thm31(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return lower_thm31(ctx);
}
inline std::pair<BoundValue, BoundValue> lower_thm33(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return lower_thm33(ctx);
}

// ---------------------------------------------------------------------------
// Earlier bounds from the literature, evaluated literally.

inline std::vector<BoundValue> competitor_bounds(BoundContext& ctx) {
    const double w2 = ctx.w_t2();
    const double np = ctx.norm_p();
    const double nt = ctx.norm_t();
    std::vector<BoundValue> out;
    out.push_back(make_bound("aok_quartic", std::pow(0.25 * w2 * w2 + 0.25 * w2 * np + np * np / 16.0, 0.25),
                             BoundKind::upper, "w(T^2), ||P||"));
    out.push_back(make_bound("kittaneh_norm_avg", 0.5 * (nt + std::sqrt(ctx.norm_t2())), BoundKind::upper,
                             "||T||, ||T^2||"));
    out.push_back(make_bound("kittaneh_half_p", std::sqrt(0.5 * np), BoundKind::upper, "||P||"));
    out.push_back(make_bound("dragomir", std::sqrt(0.5 * (w2 + nt * nt)), BoundKind::upper, "w(T^2), ||T||"));
    out.push_back(make_bound("aok_quadratic", std::sqrt(0.5 * w2 + 0.25 * np), BoundKind::upper, "w(T^2), ||P||"));
    out.push_back(make_bound("kittaneh_lower_quarter_p", 0.5 * std::sqrt(np), BoundKind::lower, "||P||"));
    out.push_back(make_bound("kmy_lower_re", ctx.norm_re(), BoundKind::lower, "||Re T||"));
    out.push_back(make_bound("kmy_lower_im", ctx.norm_im(), BoundKind::lower, "||Im T||"));
    return out;
}

inline std::vector<BoundValue> competitor_bounds(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return competitor_bounds(ctx);
}

/**
 * The A = B* specialization of the two-operator bound
 * w^r(B*A) <= 1/4 ||(AA*)^r + (BB*)^r|| + 1/2 w^r(AB*), reported on the
 * same scale as upper_thm23: (1/4 ||(TT*)^r + (T*T)^r|| + 1/2 w^r(T^2))^{1/(2r)}.
 */
inline BoundValue sattari_specialization(BoundContext& ctx, double r) {
    if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("sattari_specialization requires r >= 1");
    const double v = 0.25 * ctx.power_sum_norm(r) + 0.5 * std::pow(ctx.w_t2(), r);
    return make_bound("sattari_r" + detail::exponent_label(r), std::pow(v, 1.0 / (2.0 * r)), BoundKind::upper,
                      "||(TT*)^r + (T*T)^r||, w(T^2)");
}

inline BoundValue sattari_specialization(const ComplexMatrix& t, double r, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return sattari_specialization(ctx, r);
}

/**
 * Every single-matrix bound: thm21, thm22, thm23 for r in {1, 2, 3}, thm25,
 * thm31, both thm33 variants, the literature competitors and the Sattari
 * specializations.
 */
inline std::vector<BoundValue> matrix_bounds(BoundContext& ctx) {
    std::vector<BoundValue> out;
    out.push_back(upper_thm21(ctx));
    out.push_back(upper_thm22(ctx));
    for (double r : {1.0, 2.0, 3.0}) out.push_back(upper_thm23(ctx, r));
    out.push_back(upper_thm25(ctx));
    out.push_back(lower_thm31(ctx));
    auto [re, im] = lower_thm33(ctx);
    out.push_back(std::move(re));
    out.push_back(std::move(im));
    for (auto& b : competitor_bounds(ctx)) out.push_back(std::move(b));
    for (double r : {1.0, 2.0, 3.0}) out.push_back(sattari_specialization(ctx, r));
    return out;
}

inline std::vector<BoundValue> matrix_bounds(const ComplexMatrix& t, const EngineConfig& cfg = {}) {
    BoundContext ctx(t, cfg);
    return matrix_bounds(ctx);
}

}  // namespace numrad

#endif  // NUMRAD_BOUNDS_HPP
