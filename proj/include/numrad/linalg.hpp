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

#ifndef NUMRAD_LINALG_HPP
#define NUMRAD_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;

// Error hierarchy. The CLI maps InputError subclasses to exit code 2 and
// NumericalError subclasses to exit code 3.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
   public:
    using Error::Error;
};

class DimensionError : public InputError {
   public:
    using InputError::InputError;
};

class DomainError : public InputError {
   public:
    using InputError::InputError;
};

class NumericalError : public Error {
   public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

/**
 * Tolerances and resolutions shared by every estimator.
 *
 * Ordering tests across the library allow `ordering_slack` on top of
 * whatever a comparison is measuring; that slack absorbs the angular grid
 * error of the numerical radius plus floating point.
 */
struct EngineConfig {
    int theta_grid = 3600;         // angle samples per full period
    double eig_tol = 1e-12;        // relative off-diagonal threshold for Jacobi
    double refine_tol = 1e-10;     // golden-section bracket width (radians)
    int max_iter = 10000;          // iteration cap (Jacobi sweeps, root iterations)
    double gelfand_rel_tol = 1e-6; // stopping rule for repeated squaring

    static constexpr double ordering_slack = 5e-6;

    void validate() const {
        if (theta_grid < 8) throw DomainError("theta_grid must be >= 8, got " + std::to_string(theta_grid));
        if (!(eig_tol > 0.0) || !(refine_tol > 0.0) || !(gelfand_rel_tol > 0.0))
            throw DomainError("engine tolerances must be positive");
        if (max_iter < 1) throw DomainError("max_iter must be positive");
    }
};

namespace detail {

// std::complex multiplication goes through the C99 Annex G path unless
// -fcx-limited-range is set; the hot loops use the plain formula.
inline Complex cmul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex cmul_conj(Complex a, Complex b) {  // conj(a) * b
    return {a.real() * b.real() + a.imag() * b.imag(), a.real() * b.imag() - a.imag() * b.real()};
}

inline std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace detail

/// Dense row-major complex matrix with fixed, positive dimensions.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive, got " + detail::shape(rows, cols));
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive, got " + detail::shape(rows, cols));
        if (data_.size() != rows * cols)
            throw DimensionError("expected " + std::to_string(rows * cols) + " entries for a " + detail::shape(rows, cols) +
                                 " matrix, got " + std::to_string(data_.size()));
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!std::isfinite(data_[k].real()) || !std::isfinite(data_[k].imag()))
                throw DomainError("non-finite matrix entry at index " + std::to_string(k));
        }
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : ComplexMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged initializer rows");
            std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
            ++i;
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const Complex> d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::string shape() const { return detail::shape(rows_, cols_); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Complex> entries() { return data_; }
    std::span<const Complex> entries() const { return data_; }

    bool operator==(const ComplexMatrix&) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

inline void require_square(const ComplexMatrix& a, const char* what) {
    if (!a.is_square()) throw DimensionError(std::string(what) + " requires a square matrix, got " + a.shape());
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

inline ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot add " + a.shape() + " and " + b.shape());
    ComplexMatrix r = a;
    auto re = r.entries();
    auto be = b.entries();
    for (std::size_t k = 0; k < re.size(); ++k) re[k] += be[k];
    return r;
}

inline ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot subtract " + b.shape() + " from " + a.shape());
    ComplexMatrix r = a;
    auto re = r.entries();
    auto be = b.entries();
    for (std::size_t k = 0; k < re.size(); ++k) re[k] -= be[k];
    return r;
}

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += detail::cmul(aik, b(k, j));
        }
    }
    return r;
}

inline ComplexMatrix scale(Complex c, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (auto& x : r.entries()) x = detail::cmul(c, x);
    return r;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_sub(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }
inline ComplexMatrix operator*(Complex c, const ComplexMatrix& a) { return scale(c, a); }

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& x : a.entries()) s += std::norm(x);
    return std::sqrt(s);
}

inline Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

/// (A + A*)/2 with an exactly Hermitian result.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    require_square(a, "hermitian_part");
    const std::size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

/// True when ||A - A*||_F <= rel_tol * ||A||_F.
inline bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    if (!a.is_square()) return false;
    double skew = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) skew += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(skew) <= rel_tol * frobenius_norm(a);
}

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the unit eigenvector of values[k]
};

namespace detail {

// Cyclic complex Jacobi on a row-major Hermitian buffer. On return the
// diagonal of `a` holds the eigenvalues (unsorted). When `v` is non-null it
// accumulates the unitary V with A_in = V diag V*.
inline void jacobi_sweeps(std::vector<Complex>& a, std::size_t n, std::vector<Complex>* v, const EngineConfig& cfg) {
    double total = 0.0;
    for (const auto& x : a) total += std::norm(x);
    const double threshold = cfg.eig_tol * std::sqrt(total);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a[i * n + j]);
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0;; ++sweep) {
        if (off_norm() <= threshold) return;
        if (sweep >= cfg.max_iter)
            throw ConvergenceError("Jacobi eigensolver did not converge after " + std::to_string(cfg.max_iter) + " sweeps");

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a[p * n + q];
                const double mag = std::abs(g);
                if (mag == 0.0) continue;
                const Complex e = g / mag;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J = [[c, s], [-s conj(e), c conj(e)]] acting on (p, q).
                const Complex jqp = -s * std::conj(e);
                const Complex jqq = c * std::conj(e);

                for (std::size_t k = 0; k < n; ++k) {  // A <- A J
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    a[k * n + p] = c * akp + cmul(akq, jqp);
                    a[k * n + q] = s * akp + cmul(akq, jqq);
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- J* A
                    const Complex apk = a[p * n + k];
                    const Complex aqk = a[q * n + k];
                    a[p * n + k] = c * apk + cmul_conj(jqp, aqk);
                    a[q * n + k] = s * apk + cmul_conj(jqq, aqk);
                }
                a[p * n + p] = app - t * mag;
                a[q * n + q] = aqq + t * mag;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if (v) {
                    auto& vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = vv[k * n + p];
                        const Complex vkq = vv[k * n + q];
                        vv[k * n + p] = c * vkp + cmul(vkq, jqp);
                        vv[k * n + q] = s * vkp + cmul(vkq, jqq);
                    }
                }
            }
        }
    }
}

inline void check_hermitian_input(const ComplexMatrix& a, const EngineConfig& cfg) {
    require_square(a, "hermitian eigensolver");
    if (!is_hermitian(a, cfg.eig_tol))
        throw DomainError("hermitian eigensolver: matrix is not Hermitian within relative tolerance " +
                          std::to_string(cfg.eig_tol));
}

// Jacobi eigenvalues of a matrix already known to be exactly Hermitian.
inline std::vector<double> hermitian_eigenvalues_unchecked(const ComplexMatrix& h, const EngineConfig& cfg) {
    const std::size_t n = h.rows();
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = h(0, 0).real();
        return out;
    }
    std::vector<Complex> a(h.entries().begin(), h.entries().end());
    jacobi_sweeps(a, n, nullptr, cfg);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i].real();
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Eigenvalues only, for the angle-grid loops where one Hermitian matrix is
 * solved per sample: Householder reduction to a Hermitian tridiagonal,
 * whose off-diagonal moduli give an equivalent real symmetric tridiagonal,
 * then implicit-shift QL. Input must be exactly Hermitian. Ascending.
 */
inline std::vector<double> tridiagonal_eigenvalues(const ComplexMatrix& h, const EngineConfig& cfg) {
    const std::size_t n = h.rows();
    std::vector<Complex> a(h.entries().begin(), h.entries().end());
    std::vector<double> d(n);
    std::vector<double> e(n, 0.0);  // e[i] couples i and i+1
    std::vector<Complex> v(n);
    std::vector<Complex> w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a[i * n + k]);
        const double xnorm = std::sqrt(xnorm2);
        const Complex x0 = a[(k + 1) * n + k];
        double tail2 = xnorm2 - std::norm(x0);
        if (xnorm == 0.0 || tail2 <= 0.0) {
            e[k] = std::abs(x0);
            continue;
        }
        const double ax0 = std::abs(x0);
        const Complex phase = ax0 > 0.0 ? x0 / ax0 : Complex{1.0, 0.0};
        const Complex alpha = -phase * xnorm;
        // v = x - alpha e1, normalized; H = I - 2 v v*
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a[i * n + k];
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;

        // B <- B - 2 v w* - 2 w v*, w = Bv - (v*Bv) v, on the trailing block.
        double kappa = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex s{};
            for (std::size_t j = k + 1; j < n; ++j) s += cmul(a[i * n + j], v[j]);
            w[i] = s;
        }
        for (std::size_t i = k + 1; i < n; ++i) kappa += cmul_conj(v[i], w[i]).real();
        for (std::size_t i = k + 1; i < n; ++i) w[i] -= kappa * v[i];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] -= 2.0 * (cmul(v[i], std::conj(w[j])) + cmul(w[i], std::conj(v[j])));
            }
        }
        e[k] = std::abs(alpha);
    }
    if (n >= 2) e[n - 2] = std::abs(a[(n - 1) * n + (n - 2)]);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i].real();
    e[n - 1] = 0.0;

    const int cap = std::max(30, cfg.max_iter);
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m = l;
        for (;;) {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > cap) throw ConvergenceError("tridiagonal QL did not converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? r : -r));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline HermitianEigen hermitian_eigen_unchecked(const ComplexMatrix& h, const EngineConfig& cfg) {
    const std::size_t n = h.rows();
    std::vector<Complex> a(h.entries().begin(), h.entries().end());
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi_sweeps(a, n, &v, cfg);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * n + x].real() < a[y * n + y].real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a[order[k] * n + order[k]].real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v[i * n + order[k]];
    }
    return out;
}

}  // namespace detail

/// Ascending eigenvalues of a Hermitian matrix (cyclic Jacobi).
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const EngineConfig& cfg = {}) {
    detail::check_hermitian_input(a, cfg);
    return detail::hermitian_eigenvalues_unchecked(hermitian_part(a), cfg);
}

/// Ascending eigenvalues with orthonormal eigenvectors, A = V diag(values) V*.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& a, const EngineConfig& cfg = {}) {
    detail::check_hermitian_input(a, cfg);
    return detail::hermitian_eigen_unchecked(hermitian_part(a), cfg);
}

/// Largest singular value, sqrt(lambda_max(A*A)), using the smaller Gram matrix.
inline double operator_norm(const ComplexMatrix& a, const EngineConfig& cfg = {}) {
    double big = 0.0;
    for (const auto& x : a.entries()) big = std::max({big, std::abs(x.real()), std::abs(x.imag())});
    if (big == 0.0) return 0.0;
    const ComplexMatrix s = scale(1.0 / big, a);
    const ComplexMatrix gram = s.rows() >= s.cols() ? mat_mul(adjoint(s), s) : mat_mul(s, adjoint(s));
    const auto ev = detail::hermitian_eigenvalues_unchecked(hermitian_part(gram), cfg);
    return big * std::sqrt(std::max(0.0, ev.back()));
}

/// Operator norm of a Hermitian matrix: max |eigenvalue|.
inline double hermitian_norm(const ComplexMatrix& h, const EngineConfig& cfg = {}) {
    const auto ev = hermitian_eigenvalues(h, cfg);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/**
 * Spectral calculus power M^r of a positive semidefinite Hermitian matrix.
 *
 * Eigenvalues below zero by no more than 1e-12 * max(1, ||M||) are treated
 * as round-off and clamped to zero; anything more negative is rejected.
 */
inline ComplexMatrix psd_power(const ComplexMatrix& m, double r, const EngineConfig& cfg = {}) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("psd_power exponent must be positive and finite");
    const HermitianEigen eig = hermitian_eigen(m, cfg);
    const std::size_t n = m.rows();
    const double scale_ref = std::max({1.0, std::abs(eig.values.front()), std::abs(eig.values.back())});
    std::vector<double> powered(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.values[k];
        if (lam < 0.0) {
            if (lam < -1e-12 * scale_ref) throw NumericalError("psd_power: matrix has a negative eigenvalue " + std::to_string(lam));
            lam = 0.0;
        }
        powered[k] = std::pow(lam, r);
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex s{};
            for (std::size_t k = 0; k < n; ++k) s += powered[k] * detail::cmul(eig.vectors(i, k), std::conj(eig.vectors(j, k)));
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
        out(i, i) = out(i, i).real();
    }
    return out;
}

/**
 * Upper estimate of the spectral radius by the Gelfand sequence
 * ||A^(2^k)||^(1/2^k). Each squared iterate is divided by its norm and the
 * logarithm of the scale is carried separately, so the powers themselves
 * never overflow. Stops once two successive values agree to
 * gelfand_rel_tol or after 20 squarings.
 */
inline double spectral_radius_estimate(const ComplexMatrix& a, const EngineConfig& cfg = {}) {
    require_square(a, "spectral_radius_estimate");
    const double n0 = operator_norm(a, cfg);
    if (n0 == 0.0) return 0.0;

    ComplexMatrix b = scale(1.0 / n0, a);
    double log_scale = std::log(n0);  // A^(2^k) = exp(log_scale) * b
    double estimate = n0;
    double power = 1.0;
    for (int k = 1; k <= 20; ++k) {
        b = mat_mul(b, b);
        const double nb = operator_norm(b, cfg);
        if (nb == 0.0) return 0.0;  // nilpotent
        b = scale(1.0 / nb, b);
        log_scale = 2.0 * log_scale + std::log(nb);
        power *= 2.0;
        const double next = std::exp(log_scale / power);
        if (!std::isfinite(next) || !std::isfinite(log_scale))
            throw NumericalError("spectral_radius_estimate: overflow despite rescaling");
        const double rel = std::abs(next - estimate) / std::max(next, std::numeric_limits<double>::min());
        estimate = next;
        if (rel < cfg.gelfand_rel_tol) break;
    }
    return estimate;
}

}  // namespace numrad

#endif  // NUMRAD_LINALG_HPP
