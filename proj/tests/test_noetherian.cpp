#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/noetherian.hpp"

using namespace duality;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }
} // namespace

TEST_CASE("powers of z get the divided-power derivative basis") {
    auto r = make_ring({"z"});
    VariableSplit split{{1}};
    RationalSection sec;
    sec.graph[0] = P(r, "0");
    for (int m : {1, 2, 3, 5}) {
        std::vector<Polynomial> Q{P(r, "z^" + std::to_string(m))};
        NoetherianSystem S = noetherian_system(Q, split, sec);
        REQUIRE(static_cast<int>(S.operators.size()) == m);
        CHECK(S.nil_index == m - 1);
        for (int l = 0; l < m; ++l) {
            // exactly d^l/dz^l with unit coefficient
            REQUIRE(S.operators[l].terms().size() == 1);
            CHECK(S.operators[l].terms()[0].first.deg() == l);
            CHECK(S.operators[l].terms()[0].second.is_one());
        }
        // membership agreement on z^k for k <= 2m
        GroebnerBasis G = ideal_gb(Q);
        for (int k = 0; k <= 2 * m; ++k) {
            Polynomial zk = k ? P(r, "z^" + std::to_string(k))
                              : P(r, "1");
            CHECK(noetherian_membership(zk, S) == membership(zk, G));
            CHECK(noetherian_membership(zk, S) == (k >= m));
        }
    }
}

TEST_CASE("square of the maximal ideal needs first-order operators") {
    auto r = make_ring({"x", "y"});
    VariableSplit split{{1, 1}};
    RationalSection sec;
    sec.graph[0] = P(r, "0");
    sec.graph[1] = P(r, "0");
    std::vector<Polynomial> Q{P(r, "x^2"), P(r, "x*y"), P(r, "y^2")};
    NoetherianSystem S = noetherian_system(Q, split, sec);
    CHECK(S.operators.size() == 3); // 1, dx, dy
    CHECK(S.nil_index == 1);
    GroebnerBasis G = ideal_gb(Q);
    for (const char* s : {"x^2", "x*y + y^2", "x", "y", "x^3 - y^2", "x*y - x"}) {
        Polynomial phi = P(r, s);
        CHECK(noetherian_membership(phi, S) == membership(phi, G));
    }
}

TEST_CASE("thickened parabola: operators transfer along the section") {
    auto r = make_ring({"x", "y"});
    VariableSplit split{{0, 1}}; // y depends on x
    RationalSection sec;
    sec.graph[1] = P(r, "x^2");
    std::vector<Polynomial> Q{P(r, "(y - x^2)^2")};
    NoetherianSystem S = noetherian_system(Q, split, sec);
    CHECK(S.operators.size() == 2);
    CHECK(S.nil_index == 1);
    GroebnerBasis G = ideal_gb(Q);
    for (const char* s : {"(y - x^2)^2", "y - x^2", "(y - x^2)^3",
                          "x*(y - x^2)^2", "y^2", "x^2*(y - x^2)"}) {
        Polynomial phi = P(r, s);
        CHECK(noetherian_membership(phi, S) == membership(phi, G));
    }
}

TEST_CASE("prime ideal needs only the identity operator") {
    auto r = make_ring({"x", "y"});
    VariableSplit split{{0, 1}};
    RationalSection sec;
    sec.graph[1] = P(r, "x^2");
    NoetherianSystem S = noetherian_system({P(r, "y - x^2")}, split, sec);
    REQUIRE(S.operators.size() == 1);
    CHECK(S.operators[0].is_identity());
    CHECK(S.nil_index == 0);
}

TEST_CASE("section that misses the variety is rejected") {
    auto r = make_ring({"x", "y"});
    VariableSplit split{{0, 1}};
    RationalSection sec;
    sec.graph[1] = P(r, "x"); // wrong graph for (y - x^2)^2
    CHECK_THROWS_AS(noetherian_system({P(r, "(y - x^2)^2")}, split, sec),
                    RejectError);
}

TEST_CASE("split violating Noether position is rejected") {
    auto r = make_ring({"x", "y"});
    VariableSplit split{{1, 0}}; // x dependent, but (y) constrains y only
    RationalSection sec;
    sec.graph[0] = P(r, "0");
    CHECK_THROWS_AS(noetherian_system({P(r, "y")}, split, sec), RejectError);
}

TEST_CASE("cleared coefficients stay polynomial and annihilate the ideal") {
    auto r = make_ring({"x", "y"});
    VariableSplit split{{0, 1}};
    RationalSection sec;
    sec.graph[1] = P(r, "x^2");
    std::vector<Polynomial> Q{P(r, "(y - x^2)^2")};
    NoetherianSystem S = noetherian_system(Q, split, sec);
    GroebnerBasis Pgb = ideal_gb(S.variety_ideal);
    for (auto& op : S.operators)
        for (auto& q : Q)
            CHECK(membership(op.apply(q), Pgb)); // L_j(Q) vanishes on V(P)
}
