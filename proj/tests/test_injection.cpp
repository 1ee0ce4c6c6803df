#include "doctest.h"
#include "specseq/injection.hpp"

using namespace specseq;

TEST_CASE("enumeration counts and labels") {
    CHECK(injections(4, 1).size() == 10);        // C(5,2)
    CHECK(based_injections(4, 1).size() == 4);   // C(4,1)
    CHECK(injections(3, 3).size() == 1);
    Injection e = Injection::from_image(3, {0, 2, 3});
    CHECK(e.label() == "(0,2,3)");
    CHECK(e.degree() == 2);
    CHECK(e.based());
}

TEST_CASE("coface and codegeneracy composites satisfy the simplicial rules") {
    for (int p = 0; p <= 4; ++p)
        for (int k = 0; k <= p; ++k)
            for (auto& e : injections(p, k)) {
                // d^j d^i = d^i d^{j-1}  (i < j)
                for (int j = 1; j <= p + 2; ++j)
                    for (int i = 0; i < j; ++i)
                        CHECK(e.coface(i).coface(j) == e.coface(j - 1).coface(i));
                // s^j is a partial inverse of d^j
                for (int j = 0; j <= p; ++j) {
                    auto s = e.coface(j).codegen(j);
                    REQUIRE(s.has_value());
                    CHECK(*s == e);
                }
            }
}

TEST_CASE("mask order is monotone under every coface") {
    for (int p = 1; p <= 5; ++p)
        for (int k = 0; k <= p; ++k) {
            auto v = injections(p, k);
            for (std::size_t a = 0; a + 1 < v.size(); ++a)
                for (int j = 0; j <= p + 1; ++j)
                    CHECK(v[a].coface(j) < v[a + 1].coface(j));
        }
}

TEST_CASE("faces and adjoined zero") {
    Injection e = Injection::from_image(4, {1, 2, 4});
    CHECK(e.face(0) == Injection::from_image(4, {2, 4}));
    CHECK(e.face(2) == Injection::from_image(4, {1, 2}));
    CHECK(e.adjoin_zero() == Injection::from_image(4, {0, 1, 2, 4}));
    CHECK_FALSE(e.codegen(1).has_value());  // 1,2 both present
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
}
