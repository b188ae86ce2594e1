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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "numrad/cli.hpp"

namespace {

using numrad::cli::Command;
using numrad::cli::OutputFormat;
using numrad::cli::Request;

struct Options {
    std::string inline_text;
    std::string file;
    std::string matrix_json;
    std::vector<std::string> paths;
    std::string format;
    int theta_grid = numrad::EngineConfig{}.theta_grid;
    double eig_tol = numrad::EngineConfig{}.eig_tol;
    int max_iter = numrad::EngineConfig{}.max_iter;
    int samples = 0;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--theta-grid", o.theta_grid, "Angle samples per full turn (>= 8)");
    sub->add_option("--eig-tol", o.eig_tol, "Relative Jacobi convergence tolerance");
    sub->add_option("--max-iter", o.max_iter, "Iteration cap for iterative solvers");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical radius bounds and polynomial zero localization"};
    app.require_subcommand(1);
    Options o;

    auto* poly = app.add_subcommand("poly-bounds", "Zero bounds for a polynomial (descending coefficients)");
    poly->add_option("coefficients", o.inline_text, "Coefficients, e.g. \"1 1 0 0 0 -2\"");
    poly->add_option("--file", o.file, "Read coefficients from a file");
    add_common(poly, o);

    auto* matrix = app.add_subcommand("matrix-bounds", "All numerical radius bounds for a square matrix");
    matrix->add_option("path", o.file, "Matrix JSON file");
    matrix->add_option("--matrix-json", o.matrix_json, "Inline matrix JSON");
    add_common(matrix, o);

    auto* range = app.add_subcommand("range-data", "Boundary samples of the numerical range");
    range->add_option("path", o.file, "Matrix JSON file");
    range->add_option("--matrix-json", o.matrix_json, "Inline matrix JSON");
    range->add_option("--samples", o.samples, "Number of boundary samples (default: theta grid)");
    add_common(range, o);

    auto* spectral = app.add_subcommand("spectral-bound", "Spectral radius bound for sum A_i B_i");
    spectral->add_option("paths", o.paths, "Matrix JSON files in pairs: A1 B1 [A2 B2 ...]")->required();
    add_common(spectral, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Request req;
    req.config.theta_grid = o.theta_grid;
    req.config.eig_tol = o.eig_tol;
    req.config.max_iter = o.max_iter;
    if (!o.format.empty()) {
        static const std::map<std::string, OutputFormat> formats{
            {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
        req.format = formats.at(o.format);
    }

    if (*poly) {
        req.command = Command::poly_bounds;
        if (!o.inline_text.empty()) req.inline_input = o.inline_text;
        if (!o.file.empty()) req.input_paths.push_back(o.file);
    } else if (*matrix || *range) {
        req.command = *matrix ? Command::matrix_bounds : Command::range_data;
        if (!o.matrix_json.empty()) req.inline_input = o.matrix_json;
        if (!o.file.empty()) req.input_paths.push_back(o.file);
        if (o.samples > 0) req.samples = o.samples;
    } else {
        req.command = Command::spectral_bound;
        req.input_paths = o.paths;
    }
    return numrad::cli::run(req, std::cout, std::cerr);
}
