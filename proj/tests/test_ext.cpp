#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/ext.hpp"

using namespace duality;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

FreeResolution resolve(const RingPtr& r, const std::vector<std::string>& gens) {
    PolyMatrix m(r, 1, static_cast<int>(gens.size()));
    for (int c = 0; c < m.cols(); ++c) m.at(0, c) = P(r, gens[c]);
    return free_resolution(m);
}
} // namespace

TEST_CASE("Ext of a complete intersection is concentrated in top degree") {
    auto r = make_ring({"x", "y"});
    FreeResolution res = resolve(r, {"x", "y"});
    auto mods = all_ext_modules(res);
    REQUIRE(mods.size() == 3);
    CHECK(mods[0].zero);
    CHECK(mods[1].zero);
    CHECK_FALSE(mods[2].zero);
    CHECK(mods[2].support_codim == 2);
}

TEST_CASE("Ext detects the mixed components of (xz, yz)") {
    auto r = make_ring({"x", "y", "z"});
    FreeResolution res = resolve(r, {"x*z", "y*z"});
    auto mods = all_ext_modules(res);
    REQUIRE(mods.size() == 3);
    CHECK_FALSE(mods[1].zero); // the plane z = 0
    CHECK(mods[1].support_codim == 1);
    CHECK_FALSE(mods[2].zero); // the embedded-direction line
    CHECK(mods[2].support_codim == 2);
}

TEST_CASE("purity verdicts on the four reference ideals") {
    auto r2 = make_ring({"x", "y"});
    auto r3 = make_ring({"x", "y", "z"});
    auto r4 = make_ring({"x", "y", "z", "w"});

    PurityReport a = purity_check(resolve(r2, {"x", "y"}));
    CHECK(a.verdict == PurityVerdict::CohenMacaulay);
    CHECK(a.cohen_macaulay);
    CHECK(a.p == 2);

    PurityReport b = purity_check(resolve(r3, {"x*z", "y*z"}));
    CHECK(b.verdict == PurityVerdict::Impure);
    CHECK(b.p == 1);

    PurityReport c = purity_check(resolve(r2, {"x^2", "x*y"}));
    CHECK(c.verdict == PurityVerdict::Impure);

    PurityReport d = purity_check(resolve(r4, {"x*z", "x*w", "y*z", "y*w"}));
    CHECK(d.verdict == PurityVerdict::Pure);
    CHECK_FALSE(d.cohen_macaulay);
    CHECK(d.p == 2);

    for (const PurityReport* rep : {&a, &b, &c, &d}) {
        CHECK(rep->routes_agree);
        CHECK(rep->pure_by_rank_loci == rep->pure_by_ext_support);
    }
}

TEST_CASE("rank-locus codims obey the resolution lower bound") {
    auto r3 = make_ring({"x", "y", "z"});
    for (auto gens : {std::vector<std::string>{"x", "y", "z"},
                      std::vector<std::string>{"x*z", "y*z"},
                      std::vector<std::string>{"x^2", "x*y", "y^2"}}) {
        auto loci = rank_loci(resolve(r3, gens));
        for (auto& z : loci) CHECK(z.codim >= z.k);
    }
}

TEST_CASE("Ext support is contained in the rank locus") {
    auto r3 = make_ring({"x", "y", "z"});
    for (auto gens : {std::vector<std::string>{"x", "y"},
                      std::vector<std::string>{"x*z", "y*z"},
                      std::vector<std::string>{"x^2", "x*y"}}) {
        for (auto& [k, contained] : support_containment(resolve(r3, gens))) {
            CAPTURE(k);
            CHECK(contained);
        }
    }
}

TEST_CASE("codimension zero is rejected") {
    auto r = make_ring({"x", "y"});
    PolyMatrix m(r, 2, 1); // presents a module with a free summand
    m.at(0, 0) = P(r, "x");
    m.at(1, 0) = P(r, "y");
    CHECK_THROWS_AS(purity_check(free_resolution(m)), CodimZeroError);
}
