#include <catch2/catch_amalgamated.hpp>

#include <fgs/hopf.hpp>

using namespace fgs;

namespace {

const RingSpec kZ = RingSpec::integers();

std::vector<HopfAlgebra> constructor_zoo() {
    std::vector<HopfAlgebra> zoo;
    zoo.push_back(constant_group(CayleyTable::cyclic(1), kZ));
    zoo.push_back(constant_group(CayleyTable::cyclic(2), kZ));
    zoo.push_back(constant_group(CayleyTable::cyclic(3), kZ));
    zoo.push_back(constant_group(CayleyTable::klein(), kZ));
    zoo.push_back(constant_group(CayleyTable::symmetric3(), kZ));
    zoo.push_back(mu_n(1, kZ));
    zoo.push_back(mu_n(2, kZ));
    zoo.push_back(mu_n(3, kZ));
    zoo.push_back(alpha_p(2, RingSpec::integers_mod(2)));
    zoo.push_back(alpha_p(3, RingSpec::integers_mod(3)));
    zoo.push_back(direct_product(constant_group(CayleyTable::cyclic(2), kZ), mu_n(2, kZ)));
    zoo.push_back(direct_product(alpha_p(2, RingSpec::integers_mod(2)),
                                 mu_n(2, RingSpec::integers_mod(2))));
    zoo.push_back(base_change(constant_group(CayleyTable::cyclic(2), kZ), RingSpec::integers_mod(2)));
    zoo.push_back(base_change(mu_n(2, kZ), RingSpec::rationals()));
    return zoo;
}

/// all group-like elements of h over Z/p, by exhaustive enumeration
int count_grouplikes_mod_p(const HopfAlgebra& h, int p) {
    const int r = h.rank;
    int count = 0;
    std::vector<int> mu(static_cast<size_t>(r), 0);
    while (true) {
        Rat eps = 0;
        for (int i = 0; i < r; ++i) eps += Rat(mu[static_cast<size_t>(i)]) * h.counit[static_cast<size_t>(i)];
        if (h.ring.canonical(eps) == 1) {
            std::map<std::array<int, 2>, Rat> delta;
            for (int i = 0; i < r; ++i) {
                if (mu[static_cast<size_t>(i)] == 0) continue;
                auto [b, e] = h.comult.slice(i);
                for (auto it = b; it != e; ++it)
                    delta[{(*it).first[1], (*it).first[2]}] += Rat(mu[static_cast<size_t>(i)]) * (*it).second;
            }
            bool ok = true;
            for (int a = 0; a < r && ok; ++a)
                for (int bb = 0; bb < r && ok; ++bb) {
                    Rat want = Rat(mu[static_cast<size_t>(a)]) * Rat(mu[static_cast<size_t>(bb)]);
                    Rat got = delta.count({a, bb}) ? delta[{a, bb}] : Rat(0);
                    if (h.ring.canonical(got) != h.ring.canonical(want)) ok = false;
                }
            if (ok) ++count;
        }
        int pos = 0;
        while (pos < r && ++mu[static_cast<size_t>(pos)] == p) mu[static_cast<size_t>(pos++)] = 0;
        if (pos == r) break;
    }
    return count;
}

}  // namespace

TEST_CASE("group tables satisfy their axioms") {
    REQUIRE(CayleyTable::cyclic(4).check().empty());
    REQUIRE(CayleyTable::klein().check().empty());
    REQUIRE(CayleyTable::symmetric3().check().empty());
    REQUIRE(CayleyTable::product(CayleyTable::cyclic(2), CayleyTable::symmetric3()).check().empty());

    auto s3 = CayleyTable::symmetric3();
    bool noncommutative = false;
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h)
            if (s3.at(g, h) != s3.at(h, g)) noncommutative = true;
    REQUIRE(noncommutative);

    CayleyTable bad;
    bad.mul = {{0, 1}, {1, 1}};
    bad.names = {"1", "t"};
    REQUIRE(bad.check() == "inverse missing");
}

TEST_CASE("validation accepts the constructors and rejects corruption") {
    REQUIRE(validate(constant_group(CayleyTable::cyclic(2), kZ)).empty());
    REQUIRE(validate(alpha_p(2, RingSpec::integers_mod(2))).empty());

    auto corrupted = mu_n(2, kZ);
    corrupted.antipode = ExactMatrix(kZ, 2, 2);
    auto violations = validate(corrupted);
    REQUIRE_FALSE(violations.empty());
    bool antipode_flagged = false;
    for (const auto& v : violations)
        if (v.axiom.rfind("antipode", 0) == 0) antipode_flagged = true;
    REQUIRE(antipode_flagged);

    auto assoc_broken = mu_n(3, kZ);
    assoc_broken.mult.set(kZ, 1, 2, 1, 1);
    bool assoc_flagged = false;
    for (const auto& v : validate(assoc_broken))
        if (v.axiom == "associativity") assoc_flagged = true;
    REQUIRE(assoc_flagged);
}

TEST_CASE("constant group schemes") {
    SECTION("trivial group") {
        auto h = constant_group(CayleyTable::cyclic(1), kZ);
        REQUIRE(h.rank == 1);
        REQUIRE(h.mult.at(0, 0, 0) == 1);
        REQUIRE(h.comult.at(0, 0, 0) == 1);
        REQUIRE(h.unit == std::vector<Rat>{1});
        REQUIRE(h.counit == std::vector<Rat>{1});
    }

    SECTION("order two: convolution comultiplication") {
        auto h = constant_group(CayleyTable::cyclic(2), kZ);
        REQUIRE(h.comult.at(0, 0, 0) == 1);
        REQUIRE(h.comult.at(0, 1, 1) == 1);
        REQUIRE(h.comult.at(1, 0, 1) == 1);
        REQUIRE(h.comult.at(1, 1, 0) == 1);
        REQUIRE(h.comult.at(0, 0, 1) == 0);
        REQUIRE(validate(h).empty());
    }

    SECTION("symmetric group on three letters is not cocommutative") {
        auto h = constant_group(CayleyTable::symmetric3(), kZ);
        REQUIRE(h.rank == 6);
        REQUIRE(validate(h).empty());
        bool asymmetric = false;
        for (int i = 0; i < 6 && !asymmetric; ++i)
            for (int a = 0; a < 6 && !asymmetric; ++a)
                for (int b = 0; b < 6; ++b)
                    if (h.comult.at(i, a, b) != h.comult.at(i, b, a)) {
                        asymmetric = true;
                        break;
                    }
        REQUIRE(asymmetric);
    }
}

TEST_CASE("multiplicative and additive schemes") {
    SECTION("roots of unity") {
        REQUIRE(mu_n(1, kZ).rank == 1);
        auto h = mu_n(2, kZ);
        REQUIRE(h.comult.at(1, 1, 1) == 1);   // x is grouplike
        REQUIRE(h.mult.at(1, 1, 0) == 1);     // x^2 = 1
        REQUIRE(validate(h).empty());
        auto h3 = mu_n(3, kZ);
        for (int i = 0; i < 3; ++i) REQUIRE(h3.comult.at(i, i, i) == 1);
        REQUIRE(validate(h3).empty());
    }

    SECTION("infinitesimal additive scheme") {
        auto f2 = RingSpec::integers_mod(2);
        auto h = alpha_p(2, f2);
        REQUIRE(h.comult.at(1, 1, 0) == 1);
        REQUIRE(h.comult.at(1, 0, 1) == 1);
        REQUIRE(h.product(1, 1).empty());  // x^2 = 0
        REQUIRE(validate(h).empty());

        auto f3 = RingSpec::integers_mod(3);
        auto h3 = alpha_p(3, f3);
        REQUIRE(h3.comult.at(2, 2, 0) == 1);
        REQUIRE(h3.comult.at(2, 1, 1) == 2);  // binomial coefficient
        REQUIRE(h3.comult.at(2, 0, 2) == 1);
        REQUIRE(validate(h3).empty());

        REQUIRE_THROWS_AS(alpha_p(2, kZ), error);
        REQUIRE_THROWS_AS(alpha_p(4, RingSpec::integers_mod(4)), error);
    }
}

TEST_CASE("direct products") {
    SECTION("product with the trivial scheme changes nothing") {
        auto h = constant_group(CayleyTable::cyclic(3), kZ);
        auto p = direct_product(h, mu_n(1, kZ));
        REQUIRE(same_structure(p, h));
    }

    SECTION("product of two order-two constant groups is the Klein four group") {
        auto c2 = constant_group(CayleyTable::cyclic(2), kZ);
        auto p = direct_product(c2, c2);
        auto klein = constant_group(CayleyTable::klein(), kZ);
        REQUIRE(same_structure(p, klein));
        REQUIRE(p.group.has_value());
        REQUIRE(p.group->check().empty());
    }

    SECTION("mixed product over F_2") {
        auto f2 = RingSpec::integers_mod(2);
        auto p = direct_product(alpha_p(2, f2), mu_n(2, f2));
        REQUIRE(p.rank == 4);
        REQUIRE(validate(p).empty());
    }

    SECTION("ring mismatch is rejected") {
        REQUIRE_THROWS_AS(direct_product(mu_n(2, kZ), mu_n(2, RingSpec::rationals())), error);
    }
}

TEST_CASE("base change") {
    auto c2 = constant_group(CayleyTable::cyclic(2), kZ);

    SECTION("to F_2") {
        auto h = base_change(c2, RingSpec::integers_mod(2));
        REQUIRE(h.ring == RingSpec::integers_mod(2));
        REQUIRE(validate(h).empty());
        // antipode entries got reduced: S(e_g) = e_g over any ring here
        REQUIRE(h.antipode.at(1, 1) == 1);
    }

    SECTION("to Q keeps the constants") {
        auto h = base_change(mu_n(2, kZ), RingSpec::rationals());
        REQUIRE(h.ring == RingSpec::rationals());
        REQUIRE(h.mult.at(1, 1, 0) == 1);
        REQUIRE(validate(h).empty());
    }

    SECTION("source must be over Z") {
        auto a2 = alpha_p(2, RingSpec::integers_mod(2));
        REQUIRE_THROWS_AS(base_change(a2, RingSpec::rationals()), error);
        REQUIRE_THROWS_AS(base_change(c2, kZ), error);
    }
}

TEST_CASE("duals") {
    SECTION("dual of mu_2 has an idempotent basis") {
        auto d = dual(mu_n(2, kZ));
        REQUIRE(d.mult.at(0, 0, 0) == 1);  // u*u = u
        REQUIRE(d.mult.at(1, 1, 1) == 1);  // v*v = v
        REQUIRE(d.product(0, 1).empty());  // u*v = 0
        REQUIRE(d.unit == std::vector<Rat>{1, 1});
        REQUIRE(validate(d).empty());
    }

    SECTION("dual of a constant group is its group algebra") {
        auto d = dual(constant_group(CayleyTable::cyclic(2), kZ));
        REQUIRE(d.mult.at(1, 1, 0) == 1);  // delta_g * delta_g = delta_1
        REQUIRE(d.mult.at(0, 1, 1) == 1);
        REQUIRE(validate(d).empty());
    }

    SECTION("dual of the trivial scheme is itself") {
        auto t = constant_group(CayleyTable::cyclic(1), kZ);
        REQUIRE(same_structure(dual(t), t));
    }

    SECTION("dual of a noncommutative group's functions validates") {
        auto d = dual(constant_group(CayleyTable::symmetric3(), kZ));
        REQUIRE(d.dual_flavor);
        REQUIRE(validate(d).empty());
        bool noncommutative = false;
        for (int i = 0; i < 6 && !noncommutative; ++i)
            for (int j = 0; j < 6; ++j)
                if (d.product(i, j) != d.product(j, i)) {
                    noncommutative = true;
                    break;
                }
        REQUIRE(noncommutative);
    }

    SECTION("invalid inputs are rejected") {
        auto corrupted = mu_n(2, kZ);
        corrupted.antipode = ExactMatrix(kZ, 2, 2);
        REQUIRE_THROWS_AS(dual(corrupted), error);
    }
}

TEST_CASE("every constructor output validates cleanly") {
    for (const auto& h : constructor_zoo()) {
        CAPTURE(h.rank, h.ring.name());
        auto violations = validate(h);
        std::string report;
        for (const auto& v : violations) report += v.describe() + "; ";
        INFO(report);
        REQUIRE(violations.empty());
        REQUIRE(validate(dual(h)).empty());
    }
}

TEST_CASE("double dual returns the original structure") {
    for (const auto& h : constructor_zoo()) REQUIRE(same_structure(dual(dual(h)), h));
}

TEST_CASE("base change commutes with duals") {
    for (const auto* table : {"C2", "C3", "K4", "S3"}) {
        CayleyTable t = table == std::string("C2")   ? CayleyTable::cyclic(2)
                        : table == std::string("C3") ? CayleyTable::cyclic(3)
                        : table == std::string("K4") ? CayleyTable::klein()
                                                     : CayleyTable::symmetric3();
        auto h = constant_group(t, kZ);
        for (auto target : {RingSpec::integers_mod(4), RingSpec::rationals()}) {
            REQUIRE(same_structure(dual(base_change(h, target)), base_change(dual(h), target)));
        }
    }
}

TEST_CASE("group-likes of the dual count the group elements") {
    struct Case {
        CayleyTable table;
        int p;
    };
    std::vector<Case> cases;
    cases.push_back({CayleyTable::cyclic(2), 2});
    cases.push_back({CayleyTable::cyclic(2), 3});
    cases.push_back({CayleyTable::cyclic(3), 3});
    cases.push_back({CayleyTable::klein(), 2});
    cases.push_back({CayleyTable::symmetric3(), 2});
    for (const auto& c : cases) {
        auto h = dual(base_change(constant_group(c.table, kZ), RingSpec::integers_mod(c.p)));
        REQUIRE(count_grouplikes_mod_p(h, c.p) == c.table.order());
    }
}
