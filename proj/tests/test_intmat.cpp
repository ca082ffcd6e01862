#include "crossedcoh/intmat.hpp"

#include <doctest.h>

#include <random>

using namespace ccoh;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

bool is_diagonal_chain(const std::vector<Int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (d[i + 1] != 0 && d[i] != 0 && d[i + 1] % d[i] != 0) return false;
        if (d[i] == 0 && d[i + 1] != 0) return false;
    }
    return true;
}

void check_snf(const IntMat& m) {
    SnfResult s = snf(m);
    REQUIRE(is_diagonal_chain(s.diag));
    IntMat d = s.u * m * s.v;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            CHECK(d(i, j) == (i == j && i < s.diag.size() ? s.diag[i] : Int(0)));
    CHECK(s.u * s.u_inv == IntMat::identity(m.rows()));
    CHECK(s.v * s.v_inv == IntMat::identity(m.cols()));
}

}  // namespace

TEST_CASE("smith form of the identity") {
    SnfResult s = snf(IntMat::identity(3));
    CHECK(s.diag == std::vector<Int>{1, 1, 1});
    check_snf(IntMat::identity(3));
}

TEST_CASE("smith form of diag(2,3) has divisor chain 1,6") {
    IntMat m = from_rows({{2, 0}, {0, 3}});
    SnfResult s = snf(m);
    CHECK(s.diag == std::vector<Int>{1, 6});
    check_snf(m);
}

TEST_CASE("smith form of the zero matrix") {
    IntMat m(2, 3);
    SnfResult s = snf(m);
    CHECK(s.diag == std::vector<Int>{0, 0});
    CHECK(s.rank == 0);
}

TEST_CASE("smith form on random matrices keeps the defining identities") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<long long>(rng() % 21) - 10;
        check_snf(m);
    }
}

TEST_CASE("kernel basis spans exactly the kernel") {
    IntMat m = from_rows({{1, 2, 3}, {2, 4, 6}});
    IntMat k = kernel_basis(m);
    CHECK(k.cols() == 2);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<Int> img = m.apply(k.col(j));
        for (const Int& x : img) CHECK(x == 0);
    }
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        IntMat a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long long>(rng() % 9) - 4;
        IntMat k2 = kernel_basis(a);
        for (std::size_t j = 0; j < k2.cols(); ++j)
            for (const Int& x : a.apply(k2.col(j))) CHECK(x == 0);
        CHECK(k2.cols() + snf(a).rank == a.cols());
    }
}

TEST_CASE("integer solve") {
    IntMat m = from_rows({{2, 0}, {0, 3}});
    std::vector<Int> x;
    CHECK(solve(m, {Int(4), Int(9)}, x));
    CHECK(x == std::vector<Int>{2, 3});
    CHECK_FALSE(solve(m, {Int(1), Int(0)}, x));
}

TEST_CASE("preimage lattice") {
    // {x : 2x in 6Z} = 3Z
    IntMat m = from_rows({{2}});
    IntMat r = from_rows({{6}});
    IntMat p = preimage_lattice(m, r);
    REQUIRE(p.cols() == 1);
    Int g = p(0, 0) < 0 ? Int(-p(0, 0)) : p(0, 0);
    CHECK(g == 3);
}

TEST_CASE("cokernel invariants of standard quotients") {
    IntMat sub = from_rows({{2, 0}, {0, 3}});
    CHECK(cokernel_invariants(sub, 2) == std::vector<Int>{6});
    IntMat one = from_rows({{2}, {0}});
    CHECK(cokernel_invariants(one, 2) == std::vector<Int>{2, 0});
    IntMat reps;
    cokernel_invariants(one, 2, &reps);
    CHECK(reps.cols() == 2);
}

TEST_CASE("direct sum invariants renormalize to a divisor chain") {
    CHECK(direct_sum_invariants({{Int(2)}, {Int(2), Int(2)}}) == std::vector<Int>{2, 2, 2});
    CHECK(direct_sum_invariants({{Int(2)}, {Int(3)}}) == std::vector<Int>{6});
    CHECK(direct_sum_invariants({{Int(4)}, {Int(6)}}) == std::vector<Int>{2, 12});
    CHECK(direct_sum_invariants({{Int(0)}, {Int(2)}}) == std::vector<Int>{2, 0});
    CHECK(invariants_order({Int(2), Int(12)}) == 24);
    CHECK(invariants_order({Int(2), Int(0)}) == 0);
}

TEST_CASE("same_lattice compares column spans") {
    IntMat a = from_rows({{2, 0}, {0, 2}});
    IntMat b = from_rows({{2, 2}, {0, 2}});
    IntMat c = from_rows({{2, 0}, {0, 4}});
    CHECK(same_lattice(a, b));
    CHECK_FALSE(same_lattice(a, c));
}
