#include "schilling/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>

namespace schilling::spectral {

namespace {

// Interpolation stencil at x inside [-Q, Q]: up to two (col, weight) pairs.
struct Stencil {
    std::uint32_t col[2];
    double w[2];
    int count = 0;
};

Stencil stencil_at(const Grid& g, double x) {
    Stencil s;
    if (x < -g.Q || x > g.Q) return s; // support condition, applied before interpolation
    double pos = (x + g.Q) / g.h;
    auto i = static_cast<std::ptrdiff_t>(pos);
    if (i < 0) i = 0;
    if (i > static_cast<std::ptrdiff_t>(g.n) - 2) i = static_cast<std::ptrdiff_t>(g.n) - 2;
    const double t = pos - static_cast<double>(i);
    s.col[0] = static_cast<std::uint32_t>(i);
    s.col[1] = static_cast<std::uint32_t>(i + 1);
    s.w[0] = 1.0 - t;
    s.w[1] = t;
    s.count = 2;
    return s;
}

double row_value(const GridFunction& f, double y) {
    const double q = f.grid.q;
    const double a = y / q;
    return (f.eval(a - 1.0) + f.eval(a + 1.0) + 2.0 * f.eval(a)) / (4.0 * q);
}

std::vector<OperatorMatrix::Entry> assemble_row(const Grid& grid, double y) {
    const double c = 1.0 / (4.0 * grid.q);
    const double a = y / grid.q;
    std::vector<OperatorMatrix::Entry> row;
    auto add = [&](double arg, double coeff) {
        const Stencil s = stencil_at(grid, arg);
        for (int k = 0; k < s.count; ++k) {
            if (s.w[k] == 0.0) continue;
            bool merged = false;
            for (auto& e : row)
                if (e.col == s.col[k]) {
                    e.weight += coeff * s.w[k];
                    merged = true;
                    break;
                }
            if (!merged) row.push_back({s.col[k], coeff * s.w[k]});
        }
    };
    add(a - 1.0, c);
    add(a + 1.0, c);
    add(a, 2.0 * c);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y2) { return x.col < y2.col; });
    return row;
}

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

Grid Grid::make(double q, std::size_t n) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("grid needs q in (0,1)");
    if (n < 3) throw std::domain_error("grid needs n >= 3");
    Grid g;
    g.q = q;
    g.Q = q / (1.0 - q);
    g.n = n;
    g.h = 2.0 * g.Q / static_cast<double>(n - 1);
    g.points.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        g.points[i] = -g.Q + static_cast<double>(i) * g.h;
    // Enforce exact symmetry about 0 against rounding drift.
    for (std::size_t i = 0; i < n / 2; ++i)
        g.points[n - 1 - i] = -g.points[i];
    if (n % 2 == 1) g.points[n / 2] = 0.0;
    return g;
}

double GridFunction::eval(double x) const {
    const Stencil s = stencil_at(grid, x);
    double v = 0.0;
    for (int k = 0; k < s.count; ++k) v += s.w[k] * values[s.col[k]];
    return v;
}

GridFunction zero_function(const Grid& grid) {
    return GridFunction{grid, std::vector<double>(grid.n, 0.0)};
}

GridFunction constant_function(const Grid& grid, double c) {
    return GridFunction{grid, std::vector<double>(grid.n, c)};
}

std::vector<double> OperatorMatrix::multiply(const std::vector<double>& v) const {
    std::vector<double> out(n, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        double acc = 0.0;
        for (const Entry& e : rows[static_cast<std::size_t>(j)]) acc += e.weight * v[e.col];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

std::vector<double> OperatorMatrix::multiply_serial(const std::vector<double>& v) const {
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (const Entry& e : rows[j]) acc += e.weight * v[e.col];
        out[j] = acc;
    }
    return out;
}

GridFunction apply_operator(const GridFunction& f) {
    GridFunction out = zero_function(f.grid);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(f.grid.n); ++j)
        out.values[static_cast<std::size_t>(j)] =
            row_value(f, f.grid.points[static_cast<std::size_t>(j)]);
    return out;
}

GridFunction apply_operator_serial(const GridFunction& f) {
    GridFunction out = zero_function(f.grid);
    for (std::size_t j = 0; j < f.grid.n; ++j)
        out.values[j] = row_value(f, f.grid.points[j]);
    return out;
}

OperatorMatrix assemble_matrix(const Grid& grid) {
    OperatorMatrix A;
    A.n = grid.n;
    A.rows.resize(grid.n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(grid.n); ++j)
        A.rows[static_cast<std::size_t>(j)] =
            assemble_row(grid, grid.points[static_cast<std::size_t>(j)]);
    return A;
}

OperatorMatrix assemble_matrix_serial(const Grid& grid) {
    OperatorMatrix A;
    A.n = grid.n;
    A.rows.resize(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j)
        A.rows[j] = assemble_row(grid, grid.points[j]);
    return A;
}

double residual(const GridFunction& f) {
    const GridFunction tf = apply_operator(f);
    double m = 0.0;
    for (std::size_t j = 0; j < f.grid.n; ++j)
        m = std::max(m, std::abs(f.values[j] - tf.values[j]));
    return m;
}

PowerResult power_iteration(const OperatorMatrix& A, const Grid& grid, double tol,
                            std::size_t maxIter, std::uint64_t randSeed) {
    if (!(tol > 0.0)) throw std::domain_error("power_iteration needs tol > 0");
    std::mt19937_64 rng(randSeed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(A.n);
    for (double& x : v) x = dist(rng);
    double nv = sup_norm(v);
    for (double& x : v) x /= nv;

    PowerResult res;
    res.vector = zero_function(grid);
    double lambdaPrev = 0.0;
    for (std::size_t it = 0; it < maxIter; ++it) {
        std::vector<double> w = A.multiply(v);
        const double lambda = dot(v, w) / dot(v, v);
        const double nw = sup_norm(w);
        res.iterations = it + 1;
        if (nw == 0.0) {
            res.lambda = 0.0;
            res.converged = true;
            break;
        }
        for (double& x : w) x /= nw;
        v = std::move(w);
        res.lambda = lambda;
        if (it > 0 && std::abs(lambda - lambdaPrev) <= tol) {
            res.converged = true;
            break;
        }
        lambdaPrev = lambda;
    }
    res.vector.values = std::move(v);
    return res;
}

MinResidualResult min_residual_search(const Grid& grid, std::size_t iters,
                                      std::uint64_t randSeed) {
    if (iters == 0) throw std::domain_error("min_residual_search needs iters > 0");
    const OperatorMatrix A = assemble_matrix(grid);
    // Transpose rows for the gradient of ||(A-I)f||^2.
    OperatorMatrix B; // B = A - I
    B.n = A.n;
    B.rows = A.rows;
    for (std::size_t j = 0; j < B.n; ++j) {
        bool hasDiag = false;
        for (auto& e : B.rows[j])
            if (e.col == j) {
                e.weight -= 1.0;
                hasDiag = true;
            }
        if (!hasDiag) B.rows[j].push_back({static_cast<std::uint32_t>(j), -1.0});
    }
    OperatorMatrix Bt;
    Bt.n = B.n;
    Bt.rows.resize(B.n);
    for (std::size_t j = 0; j < B.n; ++j)
        for (const auto& e : B.rows[j])
            Bt.rows[e.col].push_back({static_cast<std::uint32_t>(j), e.weight});

    std::mt19937_64 rng(randSeed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> f(grid.n);
    for (double& x : f) x = dist(rng);
    double nf = sup_norm(f);
    for (double& x : f) x /= nf;

    GridFunction gf{grid, f};
    MinResidualResult res{gf, residual(gf), {}};
    res.history.push_back(res.r);

    for (std::size_t it = 0; it < iters; ++it) {
        const std::vector<double> r = B.multiply(f);
        const std::vector<double> g = Bt.multiply(r);
        const double gg = dot(g, g);
        if (gg == 0.0) {
            res.history.push_back(res.r);
            continue;
        }
        const std::vector<double> bg = B.multiply(g);
        const double denom = dot(bg, bg);
        const double alpha = denom > 0.0 ? gg / denom : 0.0;
        std::vector<double> cand = f;
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] -= alpha * g[i];
        const double nc = sup_norm(cand);
        if (nc > 0.0)
            for (double& x : cand) x /= nc;
        GridFunction cf{grid, cand};
        const double rc = residual(cf);
        if (rc < res.r) {
            res.r = rc;
            res.f = std::move(cf);
            f = res.f.values;
        }
        res.history.push_back(res.r);
    }
    return res;
}

double lemma2_check(const GridFunction& f, unsigned m, unsigned n, int eps,
                    std::size_t samples) {
    const double q = f.grid.q;
    const double Q = f.grid.Q;
    if (!(q < 0.5)) throw EmptyWindowError("(Q-1, 1-Q) is empty unless q < 1/2");
    double sn = 0.0, qi = 1.0;
    for (unsigned i = 1; i <= n; ++i) {
        qi *= q;
        sn += qi;
    }
    const double scaleArg = std::pow(q, static_cast<double>(m + n));
    const double factor = std::pow(0.5, static_cast<double>(n)) *
                          std::pow(1.0 / (2.0 * q), static_cast<double>(m + n));
    const double lo = Q - 1.0, hi = 1.0 - Q;
    double dev = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double x = lo + (hi - lo) * (static_cast<double>(k) + 1.0) /
                                  (static_cast<double>(samples) + 1.0);
        const double lhs = f.eval(scaleArg * x + static_cast<double>(eps) * sn);
        const double rhs = factor * f.eval(x);
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return dev;
}

Remark2Deviation remark2_check(const GridFunction& f) {
    const double q = f.grid.q;
    const double Q = f.grid.Q;
    Remark2Deviation d;
    if (q < 0.5)
        d.dev0 = std::abs(f.eval(0.0));
    else
        d.dev0 = std::abs(f.eval(0.0) - row_value(f, 0.0));
    if (q != 0.25)
        d.devQ = std::abs(f.eval(Q));
    else
        d.devQ = std::abs(std::abs(f.eval(Q)) - std::abs(f.eval(q * Q)));
    return d;
}

std::string to_csv(const GridFunction& f) {
    std::string out = "x,value\n";
    char buf[64];
    for (std::size_t j = 0; j < f.grid.n; ++j) {
        auto [px, ecx] = std::to_chars(buf, buf + sizeof buf, f.grid.points[j],
                                       std::chars_format::general, 17);
        out.append(buf, px);
        out.push_back(',');
        auto [pv, ecv] = std::to_chars(buf, buf + sizeof buf, f.values[j],
                                       std::chars_format::general, 17);
        out.append(buf, pv);
        out.push_back('\n');
    }
    return out;
}

GridFunction from_csv(const std::string& text, double q) {
    std::vector<double> xs, vs;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        const std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (header) {
            if (line != "x,value") throw std::invalid_argument("bad CSV header");
            header = false;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("bad CSV row");
        double x = 0.0, v = 0.0;
        auto r1 = std::from_chars(line.data(), line.data() + comma, x);
        auto r2 = std::from_chars(line.data() + comma + 1, line.data() + line.size(), v);
        if (r1.ec != std::errc() || r2.ec != std::errc())
            throw std::invalid_argument("bad CSV number");
        xs.push_back(x);
        vs.push_back(v);
    }
    GridFunction f{Grid::make(q, vs.size()), std::move(vs)};
    return f;
}

} // namespace schilling::spectral
