#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schilling::spectral {

struct EmptyWindowError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Uniform grid over [-Q, Q], symmetric about 0, n >= 3 points.
struct Grid {
    double q = 0.0;
    double Q = 0.0;
    std::size_t n = 0;
    std::vector<double> points;
    double h = 0.0;

    static Grid make(double q, std::size_t n);
};

/// Sampled candidate solution; piecewise linear inside [-Q, Q], exactly 0
/// outside (the support condition is applied before interpolation).
struct GridFunction {
    Grid grid;
    std::vector<double> values;

    double eval(double x) const;
};

GridFunction zero_function(const Grid& grid);
GridFunction constant_function(const Grid& grid, double c);

/// Sparse row stencil of the transfer operator: at most three interpolation
/// pairs per row, so <= 6 nonzeros.
struct OperatorMatrix {
    std::size_t n = 0;
    struct Entry {
        std::uint32_t col;
        double weight;
    };
    std::vector<std::vector<Entry>> rows;

    std::vector<double> multiply(const std::vector<double>& v) const;        // OpenMP
    std::vector<double> multiply_serial(const std::vector<double>& v) const; // reference
};

/// (Tf)(y) = (1/4q) [f(y/q - 1) + f(y/q + 1) + 2 f(y/q)].
GridFunction apply_operator(const GridFunction& f);        // OpenMP across grid points
GridFunction apply_operator_serial(const GridFunction& f); // reference

OperatorMatrix assemble_matrix(const Grid& grid);        // OpenMP across rows
OperatorMatrix assemble_matrix_serial(const Grid& grid); // reference

/// max_j |f(y_j) - (Tf)(y_j)|.
double residual(const GridFunction& f);

struct PowerResult {
    double lambda = 0.0;
    GridFunction vector;
    bool converged = false;
    std::size_t iterations = 0;
};

PowerResult power_iteration(const OperatorMatrix& A, const Grid& grid, double tol,
                            std::size_t maxIter, std::uint64_t randSeed = 1);

struct MinResidualResult {
    GridFunction f;
    double r = 0.0;
    std::vector<double> history; // residual after each iteration, non-increasing
};

/// Deterministic descent on ||(A - I) f||^2 over sup-norm-1 functions.
MinResidualResult min_residual_search(const Grid& grid, std::size_t iters,
                                      std::uint64_t randSeed = 1);

/// Max deviation of f(q^{m+n} x + eps * sum q^i) from
/// (1/2)^n (1/2q)^{m+n} f(x) over sample points x in (Q-1, 1-Q).
double lemma2_check(const GridFunction& f, unsigned m, unsigned n, int eps,
                    std::size_t samples);

struct Remark2Deviation {
    double dev0 = 0.0;
    double devQ = 0.0;
};

Remark2Deviation remark2_check(const GridFunction& f);

/// CSV with header "x,value", one row per grid point.
std::string to_csv(const GridFunction& f);
GridFunction from_csv(const std::string& text, double q);

} // namespace schilling::spectral
