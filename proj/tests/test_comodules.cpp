#include <catch2/catch_amalgamated.hpp>

#include <fgs/comodule.hpp>

#include "support.hpp"

using namespace fgs;

namespace {

const RingSpec kZ = RingSpec::integers();

HopfAlgebra c2z() { return constant_group(CayleyTable::cyclic(2), kZ); }

/// rank-1 module with the nontrivial C_2 action x -> -x
Comodule sign_module(const HopfAlgebra& h) {
    Comodule v{h, 1, {}};
    v.coaction.set(h.ring, 0, 0, 0, 1);
    v.coaction.set(h.ring, 0, 0, 1, -1);
    return v;
}

ExactMatrix column(const RingSpec& ring, std::vector<Rat> vals) {
    ExactMatrix c(ring, static_cast<int>(vals.size()), 1);
    for (size_t i = 0; i < vals.size(); ++i) c.set(static_cast<int>(i), 0, vals[i]);
    return c;
}

std::string report_violations(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) out += v.describe() + "\n";
    return out;
}

}  // namespace

TEST_CASE("trivial and regular comodules validate across the zoo") {
    for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
        INFO(name);
        Comodule t = trivial_comodule(h, 3);
        REQUIRE(t.rank == 3);
        REQUIRE(report_violations(validate_comodule(t)).empty());
        Comodule r = regular_comodule(h);
        REQUIRE(r.rank == h.rank);
        REQUIRE(report_violations(validate_comodule(r)).empty());
    }
    REQUIRE(trivial_comodule(c2z(), 0).rank == 0);
}

TEST_CASE("invariants of pinned modules") {
    SECTION("trivial module is all invariant") {
        REQUIRE(invariants(trivial_comodule(c2z(), 3)) == ExactMatrix::identity(kZ, 3));
    }
    SECTION("regular C2 over Z fixes the orbit sum") {
        REQUIRE(invariants(regular_comodule(c2z())) == column(kZ, {1, 1}));
    }
    SECTION("regular mu2 over Z fixes only the constants") {
        REQUIRE(invariants(regular_comodule(mu_n(2, kZ))) == column(kZ, {1, 0}));
    }
    SECTION("regular module of the trivial group is all invariant") {
        REQUIRE(invariants(regular_comodule(constant_group(CayleyTable::cyclic(1), kZ))) ==
                ExactMatrix::identity(kZ, 1));
    }
    SECTION("regular S3 fixes the orbit sum") {
        ExactMatrix inv = invariants(regular_comodule(constant_group(CayleyTable::symmetric3(), kZ)));
        REQUIRE(inv.cols() == 1);
        for (int i = 0; i < 6; ++i) REQUIRE(inv.at(i, 0) == 1);
    }
    SECTION("regular alpha_2 fixes only the constants") {
        RingSpec f2 = RingSpec::integers_mod(2);
        REQUIRE(invariants(regular_comodule(alpha_p(2, f2))) == column(f2, {1, 0}));
    }
}

TEST_CASE("invariant columns are coaction-fixed and saturated") {
    for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
        INFO(name);
        Comodule m = regular_comodule(h);
        ExactMatrix inv = invariants(m);
        ExactMatrix expected(h.ring, m.rank * h.rank, inv.cols());
        for (int b = 0; b < m.rank; ++b)
            for (int i = 0; i < h.rank; ++i)
                for (int c = 0; c < inv.cols(); ++c)
                    expected.set(b * h.rank + i, c, h.ring.mul(inv.at(b, c), h.unit[static_cast<size_t>(i)]));
        REQUIRE(m.rho_matrix() * inv == expected);
        REQUIRE(is_saturated_summand(inv));
    }
}

TEST_CASE("tensor comodules") {
    SECTION("tensoring with the trivial line changes nothing") {
        for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
            INFO(name);
            Comodule m = regular_comodule(h);
            Comodule t = trivial_comodule(h, 1);
            REQUIRE(tensor_comodule(m, t).coaction == m.coaction);
            REQUIRE(tensor_comodule(t, m).coaction == m.coaction);
        }
    }
    SECTION("regular x regular for C2 is the rank-4 permutation module") {
        Comodule m = regular_comodule(c2z());
        Comodule mm = tensor_comodule(m, m);
        REQUIRE(mm.rank == 4);
        REQUIRE(report_violations(validate_comodule(mm)).empty());
        REQUIRE(invariants(mm).cols() == 2);
    }
    SECTION("rank bookkeeping") {
        HopfAlgebra s3 = constant_group(CayleyTable::symmetric3(), kZ);
        REQUIRE(tensor_comodule(regular_comodule(s3), trivial_comodule(s3, 2)).rank == 12);
    }
    SECTION("parent mismatch is rejected") {
        REQUIRE_THROWS_AS(tensor_comodule(regular_comodule(c2z()), regular_comodule(mu_n(2, kZ))), error);
    }
}

TEST_CASE("dual comodules") {
    SECTION("dual of trivial is trivial") {
        for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
            INFO(name);
            Comodule t = trivial_comodule(h, 2);
            REQUIRE(dual_comodule(t).coaction == t.coaction);
        }
    }
    SECTION("double dual is the identity on regular modules") {
        for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
            INFO(name);
            Comodule m = regular_comodule(h);
            REQUIRE(dual_comodule(dual_comodule(m)).coaction == m.coaction);
        }
    }
    SECTION("duals validate") {
        for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
            INFO(name);
            REQUIRE(report_violations(validate_comodule(dual_comodule(regular_comodule(h)))).empty());
        }
    }
    SECTION("dual of regular C2 still has invariant rank 1") {
        REQUIRE(invariants(dual_comodule(regular_comodule(c2z()))).cols() == 1);
    }
}

TEST_CASE("corrupted coactions are rejected with witnesses") {
    SECTION("dropped term breaks the counit axiom") {
        Comodule m = regular_comodule(c2z());
        m.coaction.set(kZ, 0, 0, 0, 0);
        auto vs = validate_comodule(m);
        REQUIRE_FALSE(vs.empty());
        REQUIRE(vs.front().axiom == "comodule-counit");
    }
    SECTION("added term breaks coassociativity but not the counit") {
        RingSpec f2 = RingSpec::integers_mod(2);
        Comodule m = regular_comodule(alpha_p(2, f2));
        m.coaction.set(f2, 1, 1, 1, 1);
        auto vs = validate_comodule(m);
        REQUIRE_FALSE(vs.empty());
        REQUIRE(vs.front().axiom == "comodule-coassociativity");
    }
}

TEST_CASE("short exact sequence from the sign line in regular C2") {
    Comodule mid = regular_comodule(c2z());
    ShortExactSequence ses = ses_from_sub(mid, column(kZ, {1, -1}));

    REQUIRE(check_ses(ses).empty());
    REQUIRE(ses.sub.coaction == sign_module(c2z()).coaction);
    REQUIRE(ses.quot.coaction == trivial_comodule(c2z(), 1).coaction);
    // the invariant e_1 + e_g maps to twice a generator of the quotient
    REQUIRE(ses_cokernel_exponent(ses) == 2);
}

TEST_CASE("short exact sequence pinned exponents") {
    SECTION("sub = invariant line gives exponent 1") {
        Comodule mid = regular_comodule(c2z());
        ShortExactSequence ses = ses_from_sub(mid, column(kZ, {1, 1}));
        REQUIRE(ses_cokernel_exponent(ses) == 1);
    }
    SECTION("mu2 constants give exponent 1") {
        Comodule mid = regular_comodule(mu_n(2, kZ));
        ShortExactSequence ses = ses_from_sub(mid, column(kZ, {1, 0}));
        REQUIRE(ses_cokernel_exponent(ses) == 1);
    }
    SECTION("split sequences give exponent 1") {
        ShortExactSequence ses = ses_direct_sum(regular_comodule(c2z()), trivial_comodule(c2z(), 2));
        REQUIRE(check_ses(ses).empty());
        REQUIRE(ses_cokernel_exponent(ses) == 1);
    }
    SECTION("the sign line sequence over Z/4") {
        RingSpec z4 = RingSpec::integers_mod(4);
        Comodule mid = comodule_base_change(regular_comodule(c2z()), z4);
        ShortExactSequence ses = ses_from_sub(mid, column(z4, {1, 3}));
        REQUIRE(ses_cokernel_exponent(ses) == 2);
    }
    SECTION("the sign line sequence over Q collapses to exponent 1") {
        RingSpec q = RingSpec::rationals();
        Comodule mid = comodule_base_change(regular_comodule(c2z()), q);
        ShortExactSequence ses = ses_from_sub(mid, column(q, {1, -1}));
        REQUIRE(ses_cokernel_exponent(ses) == 1);
    }
}

TEST_CASE("invalid submodule inclusions are rejected") {
    Comodule mid = regular_comodule(c2z());
    SECTION("non-saturated image") {
        REQUIRE_THROWS_WITH(ses_from_sub(mid, column(kZ, {2, 0})),
                            Catch::Matchers::ContainsSubstring("saturated"));
    }
    SECTION("not coaction-stable") {
        REQUIRE_THROWS_WITH(ses_from_sub(mid, column(kZ, {1, 0})),
                            Catch::Matchers::ContainsSubstring("stable"));
    }
    SECTION("not injective") {
        REQUIRE_THROWS_WITH(ses_from_sub(mid, ExactMatrix(kZ, 2, 1)),
                            Catch::Matchers::ContainsSubstring("injective"));
    }
}

TEST_CASE("invariant-line subsequences across the zoo") {
    for (const auto& [name, h] : testsupport::named_hopf_zoo()) {
        INFO(name);
        Comodule m = regular_comodule(h);
        ExactMatrix inv = invariants(m);
        if (inv.cols() == 0) continue;
        ShortExactSequence ses = ses_from_sub(m, inv);
        REQUIRE(check_ses(ses).empty());
        REQUIRE(ses_cokernel_exponent(ses) >= 1);
    }
}

TEST_CASE("graded algebra on the sign module") {
    HopfAlgebra h = c2z();
    GradedComoduleAlgebra alg = graded_algebra_from_action(sign_module(h), 5);
    REQUIRE(alg.pieces.size() == 6);
    for (int d = 0; d <= 5; ++d) {
        INFO("degree " << d);
        const Comodule& p = alg.pieces[static_cast<size_t>(d)];
        REQUIRE(p.rank == 1);
        REQUIRE(report_violations(validate_comodule(p)).empty());
        // x^d carries the character sigma^d, so the coaction alternates
        REQUIRE(p.coaction.at(0, 0, 0) == 1);
        REQUIRE(p.coaction.at(0, 0, 1) == (d % 2 == 0 ? 1 : -1));
        REQUIRE(invariants(p).cols() == (d % 2 == 0 ? 1 : 0));
        REQUIRE(alg.product(0, d) == ExactMatrix::identity(kZ, 1));
    }

    RingSpec f2 = RingSpec::integers_mod(2);
    GradedComoduleAlgebra mod2 = graded_algebra_from_action(
        comodule_base_change(sign_module(h), f2), 3);
    for (int d = 0; d <= 3; ++d) REQUIRE(invariants(mod2.pieces[static_cast<size_t>(d)]).cols() == 1);
}

namespace {

ExactMatrix tensor_swap(const RingSpec& ring, int ri, int rj) {
    ExactMatrix s(ring, ri * rj, ri * rj);
    for (int a = 0; a < ri; ++a)
        for (int b = 0; b < rj; ++b) s.set(b * ri + a, a * rj + b, 1);
    return s;
}

/// I_{left} (x) f on column index (a, b) -> a * f.cols + b
ExactMatrix left_identity_tensor(const ExactMatrix& f, int left) {
    ExactMatrix out(f.ring(), left * f.rows(), left * f.cols());
    for (int a = 0; a < left; ++a)
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) {
                const Rat& v = f.at(i, j);
                if (v != 0) out.set(a * f.rows() + i, a * f.cols() + j, v);
            }
    return out;
}

void check_graded_structure(const GradedComoduleAlgebra& alg) {
    const int cap = alg.cap;
    for (int d = 0; d <= cap; ++d) {
        INFO("piece " << d);
        REQUIRE(report_violations(validate_comodule(alg.pieces[static_cast<size_t>(d)])).empty());
    }
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j) {
            INFO("degrees " << i << " and " << j);
            const Comodule& ai = alg.pieces[static_cast<size_t>(i)];
            const Comodule& aj = alg.pieces[static_cast<size_t>(j)];
            const ExactMatrix& p = alg.product(i, j);
            REQUIRE(is_comodule_morphism(tensor_comodule(ai, aj), alg.pieces[static_cast<size_t>(i + j)], p));
            REQUIRE(p == alg.product(j, i) * tensor_swap(p.ring(), ai.rank, aj.rank));
        }
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j)
            for (int k = 0; i + j + k <= cap; ++k) {
                INFO("degrees " << i << ", " << j << ", " << k);
                const int rk = alg.pieces[static_cast<size_t>(k)].rank;
                const int ri = alg.pieces[static_cast<size_t>(i)].rank;
                ExactMatrix lhs = alg.product(i + j, k) * extend_by_hopf_leg(alg.product(i, j), rk);
                ExactMatrix rhs = alg.product(i, j + k) * left_identity_tensor(alg.product(j, k), ri);
                REQUIRE(lhs == rhs);
            }
    for (int j = 0; j <= cap; ++j)
        REQUIRE(alg.product(0, j) == ExactMatrix::identity(alg.parent.ring, alg.pieces[static_cast<size_t>(j)].rank));
}

}  // namespace

TEST_CASE("graded algebra structure maps") {
    SECTION("symmetric algebra on the regular C2 module") {
        GradedComoduleAlgebra alg = graded_algebra_from_action(regular_comodule(c2z()), 3);
        std::vector<int> ranks;
        for (const auto& p : alg.pieces) ranks.push_back(p.rank);
        REQUIRE(ranks == std::vector<int>{1, 2, 3, 4});
        check_graded_structure(alg);
    }
    SECTION("symmetric algebra on the regular alpha_2 module") {
        RingSpec f2 = RingSpec::integers_mod(2);
        GradedComoduleAlgebra alg = graded_algebra_from_action(regular_comodule(alpha_p(2, f2)), 2);
        check_graded_structure(alg);
    }
    SECTION("trivial line gives the polynomial ring with trivial action") {
        GradedComoduleAlgebra alg = graded_algebra_from_action(trivial_comodule(mu_n(2, kZ), 1), 4);
        for (const auto& p : alg.pieces) {
            REQUIRE(p.rank == 1);
            REQUIRE(invariants(p).cols() == 1);
        }
    }
}
