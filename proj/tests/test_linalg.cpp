#include <catch2/catch_amalgamated.hpp>

#include <fgs/linalg.hpp>

#include <random>

using namespace fgs;

namespace {

Rat det(const ExactMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rat sum = 0;
    for (int k = 0; k < n; ++k) {
        if (m.at(0, k) == 0) continue;
        ExactMatrix minor(m.ring(), n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.set(i - 1, c++, m.at(i, j));
            }
        }
        Rat term = m.at(0, k) * det(minor);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

ExactMatrix random_matrix(std::mt19937_64& rng, const RingSpec& ring, int rows, int cols, int max_abs = 9) {
    ExactMatrix m(ring, rows, cols);
    std::uniform_int_distribution<int> dist(-max_abs, max_abs);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned inputs") {
    auto ring = RingSpec::integers();

    SECTION("diag(2,3) becomes diag(1,6)") {
        auto m = ExactMatrix::from_rows(ring, {{2, 0}, {0, 3}});
        auto snf = smith_normal_form(m);
        REQUIRE(snf.diagonal == std::vector<Int>{1, 6});
        REQUIRE(snf.u * m * snf.v == snf.d);
    }

    SECTION("zero matrix is already reduced") {
        ExactMatrix m(ring, 2, 3);
        auto snf = smith_normal_form(m);
        REQUIRE(snf.d == m);
        REQUIRE(snf.u == ExactMatrix::identity(ring, 2));
        REQUIRE(snf.v == ExactMatrix::identity(ring, 3));
    }

    SECTION("identity is fixed") {
        auto m = ExactMatrix::identity(ring, 3);
        auto snf = smith_normal_form(m);
        REQUIRE(snf.d == m);
        REQUIRE(snf.diagonal == std::vector<Int>{1, 1, 1});
    }

    SECTION("wrong ring is rejected") {
        REQUIRE_THROWS_AS(smith_normal_form(ExactMatrix(RingSpec::rationals(), 1, 1)), error);
    }
}

TEST_CASE("smith normal form postconditions on random matrices") {
    auto ring = RingSpec::integers();
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, ring, dim(rng), dim(rng));
        auto snf = smith_normal_form(m);
        REQUIRE(snf.u * m * snf.v == snf.d);
        Rat du = det(snf.u), dv = det(snf.v);
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
        for (size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
            REQUIRE(snf.diagonal[i] >= 0);
            if (snf.diagonal[i] == 0)
                REQUIRE(snf.diagonal[i + 1] == 0);
            else
                REQUIRE(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
        }
        for (int i = 0; i < snf.d.rows(); ++i)
            for (int j = 0; j < snf.d.cols(); ++j)
                if (i != j) REQUIRE(snf.d.at(i, j) == 0);
    }
}

TEST_CASE("howell form on pinned inputs") {
    SECTION("[[2]] over Z/4 is fixed") {
        auto ring = RingSpec::integers_mod(4);
        auto m = ExactMatrix::from_rows(ring, {{2}});
        REQUIRE(howell_form(m) == m);
    }

    SECTION("identity over Z/6 is fixed") {
        auto ring = RingSpec::integers_mod(6);
        auto m = ExactMatrix::identity(ring, 3);
        REQUIRE(howell_form(m) == m);
    }

    SECTION("[[3],[2]] over Z/6 spans everything") {
        auto ring = RingSpec::integers_mod(6);
        auto m = ExactMatrix::from_rows(ring, {{3}, {2}});
        REQUIRE(howell_form(m) == ExactMatrix::from_rows(ring, {{1}}));
    }

    SECTION("wrong ring is rejected") {
        REQUIRE_THROWS_AS(howell_form(ExactMatrix(RingSpec::integers(), 1, 1)), error);
    }
}

TEST_CASE("howell form is idempotent and preserves the row span") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> mods(2, 12);
    for (int trial = 0; trial < 120; ++trial) {
        auto ring = RingSpec::integers_mod(mods(rng));
        auto m = random_matrix(rng, ring, dim(rng), dim(rng));
        auto h = howell_form(m);
        REQUIRE(howell_form(h) == h);
        // mutual row-membership: span(m) == span(h)
        REQUIRE(try_solve(h.transpose(), m.transpose()).has_value());
        REQUIRE(try_solve(m.transpose(), h.transpose()).has_value());
    }
}

TEST_CASE("kernel bases on pinned inputs") {
    SECTION("[[2,-2]] over Z has kernel (1,1)") {
        auto ring = RingSpec::integers();
        auto m = ExactMatrix::from_rows(ring, {{2, -2}});
        REQUIRE(kernel_basis(m) == ExactMatrix::from_rows(ring, {{1}, {1}}));
    }

    SECTION("identity has empty kernel") {
        for (auto ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(6)}) {
            auto k = kernel_basis(ExactMatrix::identity(ring, 3));
            REQUIRE(k.cols() == 0);
            REQUIRE(k.rows() == 3);
        }
    }

    SECTION("[[2]] over Z/4 has kernel generated by (2)") {
        auto ring = RingSpec::integers_mod(4);
        auto m = ExactMatrix::from_rows(ring, {{2}});
        REQUIRE(kernel_basis(m) == ExactMatrix::from_rows(ring, {{2}}));
    }
}

TEST_CASE("kernel bases annihilate and are saturated over Z") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> mods(2, 12);
    for (int trial = 0; trial < 150; ++trial) {
        RingSpec ring = trial % 3 == 0   ? RingSpec::integers()
                        : trial % 3 == 1 ? RingSpec::rationals()
                                         : RingSpec::integers_mod(mods(rng));
        auto m = random_matrix(rng, ring, dim(rng), dim(rng));
        auto k = kernel_basis(m);
        if (k.cols() > 0) REQUIRE((m * k).is_zero());
        if (ring.is_integers()) REQUIRE(is_saturated_summand(k));
        // completeness: any x with m*x = 0 lies in span(k). Build candidates
        // by solving m*x = 0 through the presentation machinery instead:
        // check that appending k to itself does not grow the span.
        REQUIRE(try_solve(k, kernel_basis(m)).has_value());
    }
}

TEST_CASE("subquotient presentations on pinned inputs") {
    SECTION("Z^2 modulo (2,0) is Z/2 + Z") {
        auto ring = RingSpec::integers();
        auto z = ExactMatrix::identity(ring, 2);
        auto b = ExactMatrix::from_rows(ring, {{2}, {0}});
        auto p = subquotient_presentation(z, b);
        REQUIRE(p.factors == std::vector<Int>{2, 0});
        REQUIRE(p.to_string() == "Z/2 + Z");
    }

    SECTION("quotient by everything is trivial") {
        auto ring = RingSpec::integers();
        auto z = ExactMatrix::from_rows(ring, {{2}, {0}});
        auto p = subquotient_presentation(z, z);
        REQUIRE(p.is_zero());
        REQUIRE(p.to_string() == "0");
    }

    SECTION("line over Q with no relations is one free summand") {
        auto ring = RingSpec::rationals();
        auto z = ExactMatrix::identity(ring, 1);
        auto p = subquotient_presentation(z, ExactMatrix(ring, 1, 0));
        REQUIRE(p.factors == std::vector<Int>{0});
    }

    SECTION("relations outside the span are rejected") {
        auto ring = RingSpec::integers();
        auto z = ExactMatrix::from_rows(ring, {{2}, {0}});
        auto b = ExactMatrix::from_rows(ring, {{1}, {0}});
        REQUIRE_THROWS_AS(subquotient_presentation(z, b), error);
    }
}

TEST_CASE("subquotient presentations agree with smith normal form") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        auto ring = RingSpec::integers();
        int n = dim(rng);
        auto z = random_matrix(rng, ring, n, dim(rng));
        // ambient modulo col(z) carries exactly the SNF invariant factors
        auto p = subquotient_presentation(ExactMatrix::identity(ring, n), z);
        auto snf = smith_normal_form(z);
        std::vector<Int> expected;
        for (const Int& d : snf.diagonal)
            if (d >= 2) expected.push_back(d);
        for (int i = snf.rank; i < n; ++i) expected.push_back(0);
        REQUIRE(p.factors == expected);
        // col(z) itself is free of rank = SNF rank
        auto q = subquotient_presentation(z, ExactMatrix(ring, n, 0));
        REQUIRE(q.torsion().empty());
        REQUIRE(q.free_rank() == snf.rank);
    }
}

TEST_CASE("annihilator exponents") {
    auto zp = [](std::vector<Int> f) { return ModulePresentation{RingSpec::integers(), std::move(f)}; };
    REQUIRE(annihilator_exponent(zp({0, 2, 4})) == 4);
    REQUIRE(annihilator_exponent(zp({2, 6})) == 6);
    REQUIRE(annihilator_exponent(zp({})) == 1);
    REQUIRE(annihilator_exponent(ModulePresentation{RingSpec::rationals(), {0}}) == 1);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> fac(1, 12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> f;
        Int prod = 1;
        for (int i = 0; i < 4; ++i) {
            Int d = fac(rng);
            f.push_back(d);
            prod *= d;
        }
        REQUIRE(prod % annihilator_exponent(zp(f)) == 0);
    }
}

TEST_CASE("saturated summand detection") {
    auto ring = RingSpec::integers();
    REQUIRE(is_saturated_summand(ExactMatrix::from_rows(ring, {{1}, {1}})));
    REQUIRE_FALSE(is_saturated_summand(ExactMatrix::from_rows(ring, {{2}, {0}})));
    REQUIRE(is_saturated_summand(ExactMatrix::from_rows(RingSpec::rationals(), {{5}, {7}})));

    auto z4 = RingSpec::integers_mod(4);
    REQUIRE_FALSE(is_saturated_summand(ExactMatrix::from_rows(z4, {{2}})));
    REQUIRE(is_saturated_summand(ExactMatrix::from_rows(z4, {{1}})));
    REQUIRE(is_saturated_summand(ExactMatrix(z4, 2, 0)));
}

TEST_CASE("subquotient bases give coordinates inverse to representatives") {
    std::mt19937_64 rng(4321);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> mods(2, 9);
    for (int trial = 0; trial < 80; ++trial) {
        RingSpec ring = trial % 3 == 0   ? RingSpec::integers()
                        : trial % 3 == 1 ? RingSpec::rationals()
                                         : RingSpec::integers_mod(mods(rng));
        int n = dim(rng);
        auto gens = ExactMatrix::identity(ring, n);
        auto rels = random_matrix(rng, ring, n, dim(rng) - 1);
        SubquotientBasis basis(gens, rels);
        REQUIRE(basis.presentation() == subquotient_presentation(gens, rels));
        for (int c = 0; c < basis.factor_count(); ++c) {
            auto coords = basis.coordinates(basis.representatives().col(c));
            for (int i = 0; i < basis.factor_count(); ++i) REQUIRE(coords[static_cast<size_t>(i)] == (i == c ? 1 : 0));
        }
        // relation columns represent zero
        for (int j = 0; j < rels.cols(); ++j) {
            auto coords = basis.coordinates(rels.col(j));
            for (const Rat& c : coords) REQUIRE(c == 0);
        }
    }
}

TEST_CASE("linear solving is exact and detects unsolvable systems") {
    auto ring = RingSpec::integers();
    auto a = ExactMatrix::from_rows(ring, {{2, 0}, {0, 3}});
    auto b = ExactMatrix::from_rows(ring, {{4}, {9}});
    auto x = solve(a, b);
    REQUIRE(a * x == b);
    REQUIRE_FALSE(try_solve(a, ExactMatrix::from_rows(ring, {{1}, {0}})).has_value());

    auto z6 = RingSpec::integers_mod(6);
    auto am = ExactMatrix::from_rows(z6, {{2}});
    REQUIRE(try_solve(am, ExactMatrix::from_rows(z6, {{4}})).has_value());
    REQUIRE_FALSE(try_solve(am, ExactMatrix::from_rows(z6, {{3}})).has_value());

    std::mt19937_64 rng(648);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> mods(2, 12);
    for (int trial = 0; trial < 150; ++trial) {
        RingSpec r = trial % 3 == 0   ? RingSpec::integers()
                     : trial % 3 == 1 ? RingSpec::rationals()
                                      : RingSpec::integers_mod(mods(rng));
        auto m = random_matrix(rng, r, dim(rng), dim(rng));
        auto w = random_matrix(rng, r, m.cols(), 2);
        auto rhs = m * w;
        auto sol = try_solve(m, rhs);
        REQUIRE(sol.has_value());
        REQUIRE(m * *sol == rhs);
    }
}
