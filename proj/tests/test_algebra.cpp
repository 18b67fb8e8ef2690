#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/diffop.hpp"
#include "core/matrix.hpp"
#include "core/ratfunc.hpp"

using namespace duality;

namespace {
RingPtr R2() { return make_ring({"x", "y"}); }
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }
} // namespace

TEST_CASE("polynomial arithmetic and normalization") {
    auto r = R2();
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y - y * x).is_zero());
    Polynomial p = P(r, "3*x^2*y - 1/2*y + 2");
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(1) == 1);
    CHECK(p * Rational(2) == P(r, "6*x^2*y - y + 4"));
}

TEST_CASE("parser round-trips canonical printing") {
    auto r = R2();
    for (const char* s :
         {"x^3 - 2*x*y + 7", "1/3*x^2*y^2 - y", "-x + 5/2", "0", "x*y"}) {
        Polynomial p = P(r, s);
        CHECK(P(r, p.str()) == p);
    }
    CHECK_THROWS_AS(P(r, "x +"), ParseError);
    CHECK_THROWS_AS(P(r, "q^2"), ParseError);
}

TEST_CASE("grevlex leading terms") {
    auto r = R2();
    // grevlex: x^2 > x*y > y^2 > x > y > 1 with x > y
    Polynomial p = P(r, "y^2 + x*y + x^2 + x + y + 1");
    CHECK(Polynomial::monomial(r, p.leading().m).str() == "x^2");
    Polynomial q = P(r, "x*y + y^2");
    CHECK(Polynomial::monomial(r, q.leading().m).str() == "x*y");
}

TEST_CASE("derivatives and substitution") {
    auto r = R2();
    Polynomial p = P(r, "x^3*y^2");
    CHECK(p.derivative(0) == P(r, "3*x^2*y^2"));
    Monomial beta(2);
    beta.e[0] = 1;
    beta.e[1] = 2;
    CHECK(p.derivative(beta) == P(r, "6*x^2"));
    std::map<int, Polynomial> bind{{1, P(r, "x^2")}};
    CHECK(P(r, "y^2 - x^4").substitute(bind).is_zero());
}

TEST_CASE("gcd, lcm, exact division") {
    auto r = R2();
    Polynomial a = P(r, "(x + y)^2 * (x - y)");
    Polynomial b = P(r, "(x + y) * (x^2 + 1)");
    CHECK(poly_gcd(a, b) == P(r, "x + y"));
    CHECK(exact_divide(a, P(r, "x + y")) == P(r, "(x + y)*(x - y)"));
    CHECK_THROWS(exact_divide(P(r, "x^2 + 1"), P(r, "x + y")));
    Polynomial l = poly_lcm(a, b);
    CHECK(exact_divide(l, a).total_degree() >= 0);
    CHECK(exact_divide(l, b).total_degree() >= 0);
}

TEST_CASE("rational functions reduce and normalize") {
    auto r = R2();
    RatFunc f(P(r, "x^2 - y^2"), P(r, "2*x + 2*y"));
    CHECK(f == RatFunc(P(r, "1/2*x - 1/2*y")));
    CHECK((f - f).is_zero());
    RatFunc g(P(r, "1"), P(r, "x"));
    CHECK(g + g == RatFunc(P(r, "2"), P(r, "x")));
    CHECK(g / g == RatFunc::constant(r, Rational(1)));
}

TEST_CASE("differential operators apply termwise") {
    auto r = R2();
    DiffOperator op(r);
    Monomial dx(2);
    dx.e[0] = 1;
    op.add_term(Monomial(2), P(r, "y"));   // y * id
    op.add_term(dx, P(r, "1"));            // d/dx
    CHECK(op.apply(P(r, "x^2")) == P(r, "x^2*y + 2*x"));
    CHECK(op.order() == 1);
    CHECK(DiffOperator::identity(r).apply(P(r, "x*y")) == P(r, "x*y"));
}

TEST_CASE("matrix determinant, minors, rank") {
    auto r = R2();
    PolyMatrix m(r, 2, 2);
    m.at(0, 0) = P(r, "x");
    m.at(0, 1) = P(r, "y");
    m.at(1, 0) = P(r, "y");
    m.at(1, 1) = P(r, "x");
    CHECK(m.det() == P(r, "x^2 - y^2"));
    CHECK(m.rank() == 2);
    CHECK(m.minors(1).size() == 4);
    CHECK(m * identity_matrix(r, 2) == m);
    CHECK(m.transpose() == m);

    PolyMatrix s(r, 2, 2); // rank 1: outer product
    s.at(0, 0) = P(r, "x^2");
    s.at(0, 1) = P(r, "x*y");
    s.at(1, 0) = P(r, "x*y");
    s.at(1, 1) = P(r, "y^2");
    CHECK(s.rank() == 1);
}
