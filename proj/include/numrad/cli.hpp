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

#ifndef NUMRAD_CLI_HPP
#define NUMRAD_CLI_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "linalg.hpp"
#include "numrange.hpp"
#include "polyzero.hpp"

namespace numrad::cli {

class ParseError : public InputError {
   public:
    using InputError::InputError;
};

enum class Command { poly_bounds, matrix_bounds, range_data, spectral_bound };
enum class OutputFormat { table, json, csv };

struct Request {
    Command command = Command::poly_bounds;
    std::optional<std::string> inline_input;  // coefficients or matrix JSON text
    std::vector<std::string> input_paths;
    std::optional<OutputFormat> format;  // default depends on command
    EngineConfig config;
    std::optional<int> samples;  // range-data only; defaults to theta_grid
};

namespace detail {

inline std::optional<double> to_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

// Coefficient of an imaginary term: "" / "+" -> 1, "-" -> -1, otherwise a number.
inline std::optional<double> to_imag_coeff(std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return to_double(s);
}

inline std::optional<Complex> parse_complex(std::string_view tok) {
    if (tok.empty()) return std::nullopt;
    if (tok.back() != 'i') {
        const auto re = to_double(tok);
        if (!re) return std::nullopt;
        return Complex{*re, 0.0};
    }
    const std::string_view body = tok.substr(0, tok.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto im = to_imag_coeff(body);
        if (!im) return std::nullopt;
        return Complex{0.0, *im};
    }
    const auto re = to_double(body.substr(0, split));
    const auto im = to_imag_coeff(body.substr(split));
    if (!re || !im) return std::nullopt;
    return Complex{*re, *im};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

}  // namespace detail

/**
 * Parses descending-order coefficients separated by commas and/or
 * whitespace. Literals are "a", "bi", "a+bi" or "a-bi" with "." as the
 * decimal separator. The result is normalized to monic.
 */
inline Polynomial parse_polynomial(std::string_view text) {
    std::vector<Complex> desc;
    std::size_t pos = 0;
    auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        const std::string_view tok = text.substr(pos, end - pos);
        const auto value = detail::parse_complex(tok);
        if (!value)
            throw ParseError("malformed coefficient '" + std::string(tok) + "' at position " + std::to_string(pos));
        desc.push_back(*value);
        pos = end;
    }
    if (desc.size() < 3)
        throw ParseError("need at least 3 coefficients (degree >= 2), got " + std::to_string(desc.size()));
    if (desc.front() == Complex{}) throw ParseError("leading coefficient is zero");
    return Polynomial::from_descending(desc).monic();
}

/// Matrix from {"rows": n, "cols": m, "entries": [[re, im], ...]} (row-major).
inline ComplexMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    for (const char* key : {"rows", "cols", "entries"})
        if (!j.contains(key)) throw ParseError(std::string("matrix JSON is missing \"") + key + "\"");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("\"rows\" and \"cols\" must be positive integers");
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) throw ParseError("\"rows\" and \"cols\" must be positive integers");
    const auto& entries = j["entries"];
    if (!entries.is_array()) throw ParseError("\"entries\" must be an array of [re, im] pairs");
    if (entries.size() != rows * cols)
        throw ParseError("shape mismatch: expected " + std::to_string(rows * cols) + " entries for " +
                         numrad::detail::shape(rows, cols) + ", got " + std::to_string(entries.size()));
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("entry " + std::to_string(k) + " is not a [re, im] pair");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("entry " + std::to_string(k) + " is not finite");
        data.emplace_back(re, im);
    }
    return ComplexMatrix(rows, cols, std::move(data));
}

inline ComplexMatrix parse_matrix(const std::string& path) { return parse_matrix_json(detail::read_file(path)); }

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& x : m.entries()) entries.push_back({x.real(), x.imag()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace detail {

inline nlohmann::json complex_list(std::span<const Complex> zs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& z : zs) out.push_back({z.real(), z.imag()});
    return out;
}

inline nlohmann::json bounds_json(const std::vector<BoundValue>& bounds) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& b : bounds)
        out.push_back({{"name", b.name}, {"kind", to_string(b.kind)}, {"value", b.value}, {"inputs", b.inputs}});
    return out;
}

inline void render_bounds(std::ostream& out, OutputFormat format, const nlohmann::json& input,
                          const std::vector<BoundValue>& bounds, std::optional<double> w,
                          std::span<const Complex> zs, const std::vector<std::pair<std::string, double>>& extras) {
    switch (format) {
        case OutputFormat::json: {
            nlohmann::json doc = {{"input", input},
                                  {"bounds", bounds_json(bounds)},
                                  {"w", w ? nlohmann::json(*w) : nlohmann::json(nullptr)},
                                  {"roots", complex_list(zs)}};
            for (const auto& [k, v] : extras) doc[k] = v;
            out << doc.dump(2) << "\n";
            return;
        }
        case OutputFormat::csv:
            out << "name,kind,value\n";
            for (const auto& b : bounds) out << b.name << "," << to_string(b.kind) << "," << fmt("%.17g", b.value) << "\n";
            if (w) out << "w,value," << fmt("%.17g", *w) << "\n";
            for (const auto& [k, v] : extras) out << k << ",value," << fmt("%.17g", v) << "\n";
            return;
        case OutputFormat::table: {
            char line[160];
            std::snprintf(line, sizeof line, "%-28s %-6s %12s\n", "bound", "kind", "value");
            out << line << std::string(48, '-') << "\n";
            for (const auto& b : bounds) {
                std::snprintf(line, sizeof line, "%-28s %-6s %12s\n", b.name.c_str(), to_string(b.kind),
                              fmt("%.6g", b.value).c_str());
                out << line;
            }
            out << std::string(48, '-') << "\n";
            if (w) {
                std::snprintf(line, sizeof line, "%-35s %12s\n", "w", fmt("%.6g", *w).c_str());
                out << line;
            }
            for (const auto& [k, v] : extras) {
                std::snprintf(line, sizeof line, "%-35s %12s\n", k.c_str(), fmt("%.6g", v).c_str());
                out << line;
            }
            if (!zs.empty()) {
                out << "roots:\n";
                for (const auto& z : zs) out << "  " << fmt("%.6g", z.real()) << (z.imag() < 0 ? " - " : " + ")
                                             << fmt("%.6g", std::abs(z.imag())) << "i\n";
            }
            return;
        }
    }
}

inline ComplexMatrix single_matrix(const Request& req) {
    const bool has_inline = req.inline_input.has_value();
    if (has_inline == (req.input_paths.size() == 1) || req.input_paths.size() > 1)
        throw ParseError("exactly one matrix input is required (a file path or inline JSON)");
    return has_inline ? parse_matrix_json(*req.inline_input) : parse_matrix(req.input_paths.front());
}

inline int run_poly(const Request& req, std::ostream& out) {
    std::string text;
    if (req.inline_input && req.input_paths.empty())
        text = *req.inline_input;
    else if (!req.inline_input && req.input_paths.size() == 1)
        text = read_file(req.input_paths.front());
    else
        throw ParseError("exactly one polynomial input is required (inline coefficients or a file path)");
    const Polynomial p = parse_polynomial(text);
    const ZeroBoundReport report = zero_bound_report(p, req.config);

    std::vector<Complex> desc(p.coefficients().rbegin(), p.coefficients().rend());
    const nlohmann::json input = {{"kind", "polynomial"}, {"coefficients", complex_list(desc)}};
    render_bounds(out, req.format.value_or(OutputFormat::table), input, report.bounds, report.numerical_radius,
                  report.roots, {{"max_root_modulus", report.max_root_modulus}});
    return 0;
}

inline int run_matrix(const Request& req, std::ostream& out) {
    const ComplexMatrix t = single_matrix(req);
    require_square(t, "matrix-bounds");
    BoundContext ctx(t, req.config);
    const auto bounds = matrix_bounds(ctx);
    const nlohmann::json input = {{"kind", "matrix"}, {"matrix", matrix_to_json(t)}};
    render_bounds(out, req.format.value_or(OutputFormat::table), input, bounds, ctx.w_t(), {}, {});
    return 0;
}

inline int run_range(const Request& req, std::ostream& out) {
    const ComplexMatrix t = single_matrix(req);
    req.config.validate();
    const int n = req.samples.value_or(req.config.theta_grid);
    const auto samples = range_boundary(t, n, req.config);
    switch (req.format.value_or(OutputFormat::csv)) {
        case OutputFormat::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& s : samples)
                rows.push_back({{"theta", s.theta},
                                {"lambda_max", s.lambda_max},
                                {"re", s.boundary_point.real()},
                                {"im", s.boundary_point.imag()}});
            out << nlohmann::json{{"input", {{"kind", "matrix"}, {"matrix", matrix_to_json(t)}}}, {"samples", rows}}.dump(2)
                << "\n";
            break;
        }
        case OutputFormat::csv:
            out << "theta,lambda_max,re,im\n";
            for (const auto& s : samples)
                out << fmt("%.17g", s.theta) << "," << fmt("%.17g", s.lambda_max) << ","
                    << fmt("%.17g", s.boundary_point.real()) << "," << fmt("%.17g", s.boundary_point.imag()) << "\n";
            break;
        case OutputFormat::table: {
            char line[128];
            std::snprintf(line, sizeof line, "%12s %12s %12s %12s\n", "theta", "lambda_max", "re", "im");
            out << line;
            for (const auto& s : samples) {
                std::snprintf(line, sizeof line, "%12.6g %12.6g %12.6g %12.6g\n", s.theta, s.lambda_max,
                              s.boundary_point.real(), s.boundary_point.imag());
                out << line;
            }
            break;
        }
    }
    return 0;
}

inline int run_spectral(const Request& req, std::ostream& out) {
    if (req.inline_input) throw ParseError("spectral-bound reads matrix files only");
    if (req.input_paths.empty() || req.input_paths.size() % 2 != 0)
        throw ParseError("spectral-bound expects matrix files in pairs: A1 B1 [A2 B2 ...], got " +
                         std::to_string(req.input_paths.size()) + " files");
    std::vector<MatrixPair> pairs;
    nlohmann::json input_pairs = nlohmann::json::array();
    for (std::size_t k = 0; k < req.input_paths.size(); k += 2) {
        pairs.emplace_back(parse_matrix(req.input_paths[k]), parse_matrix(req.input_paths[k + 1]));
        input_pairs.push_back({{"a", matrix_to_json(pairs.back().first)}, {"b", matrix_to_json(pairs.back().second)}});
    }
    const BoundValue bound = upper_thm27_spectral(pairs, req.config);
    const double rho = spectral_radius_estimate(sum_of_products(pairs), req.config);
    const nlohmann::json input = {{"kind", "matrix_pairs"}, {"pairs", input_pairs}};
    render_bounds(out, req.format.value_or(OutputFormat::table), input, {bound}, std::nullopt, {},
                  {{"spectral_radius_estimate", rho}});
    return 0;
}

}  // namespace detail

/**
 * Executes one request. Returns 0 on success, 2 for malformed or invalid
 * input, 3 for numerical failure; error text goes to `err`.
 */
inline int run(const Request& req, std::ostream& out, std::ostream& err) {
    try {
        req.config.validate();
        switch (req.command) {
            case Command::poly_bounds:
                return detail::run_poly(req, out);
            case Command::matrix_bounds:
                return detail::run_matrix(req, out);
            case Command::range_data:
                return detail::run_range(req, out);
            case Command::spectral_bound:
                return detail::run_spectral(req, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace numrad::cli

#endif  // NUMRAD_CLI_HPP
