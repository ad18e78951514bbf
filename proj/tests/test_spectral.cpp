#include "schilling/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace schilling::spectral;

namespace {

GridFunction random_function(const Grid& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridFunction f = zero_function(grid);
    for (double& v : f.values) v = dist(rng);
    return f;
}

double sup(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

OperatorMatrix identity_matrix(std::size_t n) {
    OperatorMatrix A;
    A.n = n;
    A.rows.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        A.rows[j].push_back({static_cast<std::uint32_t>(j), 1.0});
    return A;
}

} // namespace

TEST_CASE("grid construction") {
    const Grid g = Grid::make(1.0 / 3.0, 5);
    CHECK(g.Q == doctest::Approx(0.5));
    CHECK(g.points.front() == -g.points.back());
    CHECK(g.points[2] == 0.0);
    for (std::size_t i = 1; i < g.n; ++i) CHECK(g.points[i] > g.points[i - 1]);
    CHECK_THROWS(Grid::make(0.3, 2));
    CHECK_THROWS(Grid::make(1.5, 16));
}

TEST_CASE("apply_operator examples") {
    const Grid g = Grid::make(1.0 / 3.0, 101);
    CHECK(residual(zero_function(g)) == 0.0);

    // f == 1 on [-1/2, 1/2]: (Tf)(0) = (3/4)(0 + 0 + 2) = 1.5
    const GridFunction one = constant_function(g, 1.0);
    const GridFunction t = apply_operator(one);
    CHECK(t.eval(0.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(residual(one) >= 0.5 - 1e-12);

    // even input stays even
    GridFunction even = zero_function(g);
    for (std::size_t i = 0; i < g.n; ++i) even.values[i] = std::cos(3.0 * g.points[i]);
    const GridFunction te = apply_operator(even);
    for (std::size_t i = 0; i < g.n; ++i)
        CHECK(te.values[i] == doctest::Approx(te.values[g.n - 1 - i]).epsilon(1e-12));
}

TEST_CASE("linearity") {
    const Grid g = Grid::make(0.3, 64);
    const GridFunction f = random_function(g, 1), h = random_function(g, 2);
    GridFunction combo = zero_function(g);
    for (std::size_t i = 0; i < g.n; ++i)
        combo.values[i] = 2.5 * f.values[i] - 0.75 * h.values[i];
    const GridFunction tc = apply_operator(combo);
    const GridFunction tf = apply_operator(f), th = apply_operator(h);
    for (std::size_t i = 0; i < g.n; ++i)
        CHECK(tc.values[i] ==
              doctest::Approx(2.5 * tf.values[i] - 0.75 * th.values[i]).epsilon(1e-12));
}

TEST_CASE("matrix path agrees with functional path") {
    const Grid g3 = Grid::make(1.0 / 3.0, 3);
    const OperatorMatrix A3 = assemble_matrix(g3);
    // row at y=0: single entry 2/(4q) = 1.5 at the center column
    REQUIRE(A3.rows[1].size() == 1);
    CHECK(A3.rows[1][0].col == 1);
    CHECK(A3.rows[1][0].weight == doctest::Approx(1.5).epsilon(1e-14));

    const Grid g = Grid::make(0.3, 128);
    const OperatorMatrix A = assemble_matrix(g);
    for (const auto& row : A.rows) CHECK(row.size() <= 6);
    const GridFunction f = random_function(g, 3);
    const std::vector<double> viaMatrix = A.multiply(f.values);
    const GridFunction viaOp = apply_operator(f);
    double dev = 0.0;
    for (std::size_t i = 0; i < g.n; ++i)
        dev = std::max(dev, std::abs(viaMatrix[i] - viaOp.values[i]));
    CHECK(dev <= 1e-12 * sup(f.values));

    CHECK(sup(A.multiply(std::vector<double>(g.n, 0.0))) == 0.0);
}

TEST_CASE("serial reference matches OpenMP kernels") {
    const Grid g = Grid::make(0.41, 257);
    const GridFunction f = random_function(g, 4);
    const GridFunction a = apply_operator(f), b = apply_operator_serial(f);
    for (std::size_t i = 0; i < g.n; ++i) CHECK(a.values[i] == b.values[i]);
    const OperatorMatrix Ap = assemble_matrix(g), As = assemble_matrix_serial(g);
    REQUIRE(Ap.rows.size() == As.rows.size());
    const auto yp = Ap.multiply(f.values), ys = As.multiply_serial(f.values);
    for (std::size_t i = 0; i < g.n; ++i) CHECK(yp[i] == ys[i]);
}

TEST_CASE("support locality") {
    // (Tf)(y) only reads f near y/q and y/q +- 1
    const Grid g = Grid::make(0.3, 201);
    GridFunction f = random_function(g, 5);
    const std::size_t j = 60;
    const double y = g.points[j];
    const double before = apply_operator(f).values[j];
    const double a = y / g.q;
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.points[i];
        if (std::abs(x - a) < 2 * g.h || std::abs(x - (a - 1)) < 2 * g.h ||
            std::abs(x - (a + 1)) < 2 * g.h)
            continue;
        f.values[i] += 10.0;
    }
    CHECK(apply_operator(f).values[j] == before);
}

TEST_CASE("power iteration") {
    const Grid g = Grid::make(0.3, 32);
    const PowerResult idr = power_iteration(identity_matrix(32), g, 1e-12, 100, 9);
    CHECK(idr.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(idr.converged);

    OperatorMatrix zero;
    zero.n = 32;
    zero.rows.resize(32);
    CHECK(power_iteration(zero, g, 1e-12, 100, 9).lambda == 0.0);

    // seed independence of the dominant eigenvalue
    const Grid gq = Grid::make(0.3, 512);
    const OperatorMatrix A = assemble_matrix(gq);
    const PowerResult r1 = power_iteration(A, gq, 1e-12, 2000, 1);
    const PowerResult r2 = power_iteration(A, gq, 1e-12, 2000, 77);
    CHECK(std::abs(r1.lambda - r2.lambda) <= 1e-8);
    CHECK(sup(r1.vector.values) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("min_residual_search is deterministic and monotone") {
    const Grid g = Grid::make(0.3, 96);
    const MinResidualResult a = min_residual_search(g, 40, 5);
    const MinResidualResult b = min_residual_search(g, 40, 5);
    CHECK(a.r == b.r);
    CHECK(sup(a.f.values) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 1; i < a.history.size(); ++i)
        CHECK(a.history[i] <= a.history[i - 1]);
}

TEST_CASE("lemma2_check") {
    const Grid g = Grid::make(0.3, 200);
    CHECK(lemma2_check(zero_function(g), 2, 1, -1, 50) == 0.0);
    const GridFunction f = random_function(g, 6);
    CHECK(lemma2_check(f, 0, 0, 1, 64) == 0.0); // identity instance

    // both sides vanish when f is zero on a margin around |x| < 1-Q
    const Grid gz = Grid::make(0.4, 300);
    GridFunction z = random_function(gz, 7);
    for (std::size_t i = 0; i < gz.n; ++i)
        if (std::abs(gz.points[i]) <= (1.0 - gz.Q) + 2.0 * gz.h) z.values[i] = 0.0;
    CHECK(lemma2_check(z, 1, 0, 1, 64) == 0.0);
    CHECK(lemma2_check(z, 1, 0, -1, 64) == 0.0);

    // constant 1: lhs = 1, rhs = 1/(2q), so the deviation is 1/(2q) - 1
    const GridFunction one = constant_function(gz, 1.0);
    CHECK(lemma2_check(one, 1, 0, 1, 64) == doctest::Approx(0.25).epsilon(1e-9));

    const Grid bad = Grid::make(0.6, 16);
    CHECK_THROWS_AS(lemma2_check(zero_function(bad), 0, 1, 1, 8), EmptyWindowError);
}

TEST_CASE("remark2_check") {
    const Grid g = Grid::make(1.0 / 3.0, 65);
    const auto z = remark2_check(zero_function(g));
    CHECK(z.dev0 == 0.0);
    CHECK(z.devQ == 0.0);
    CHECK(remark2_check(constant_function(g, 1.0)).dev0 == 1.0);
}

TEST_CASE("csv round trip") {
    const Grid g = Grid::make(0.37, 33);
    const GridFunction f = random_function(g, 8);
    const GridFunction back = from_csv(to_csv(f), g.q);
    REQUIRE(back.grid.n == g.n);
    for (std::size_t i = 0; i < g.n; ++i) CHECK(back.values[i] == f.values[i]);
    CHECK_THROWS(from_csv("bad,header\n1,2\n", 0.3));
}
