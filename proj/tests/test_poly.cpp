#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/poly.hpp"

using namespace ringlad;

namespace {

Poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4), coeff(-5, 5);
    std::vector<BigRat> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic") {
    Poly one_plus_z{1, 1};
    CHECK(one_plus_z * one_plus_z == Poly{1, 2, 1});
    CHECK(Poly{1, 3, 4}.eval(1) == 8);  // coefficient sum of 4z^2+3z+1
    CHECK((Poly{1, 2} * Poly{3}) == Poly{3, 6});
    CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly{0, 0, 5}.degree() == 2);
}

TEST_CASE("one recurrence step reproduces the next ladder polynomial") {
    Poly l1{1, 1};
    Poly l2{1, 3, 4};
    Poly l3 = Poly{1, 2} * l2 + Poly{0, 0, 4} * l1;  // (1+2z)L_2 + 4z^2 L_1
    CHECK(l3 == Poly{1, 5, 14, 12});
    CHECK(l3.str() == "12z^3+14z^2+5z+1");
}

TEST_CASE("substitute_square") {
    CHECK(Poly{1, 0, 7}.substitute_square() == Poly{1, 0, 0, 0, 7});
    CHECK(Poly{2, 14}.substitute_square().str("y", false) == "2+14y^2");
    CHECK(Poly().substitute_square().is_zero());
}

TEST_CASE("trailing zeros are trimmed and coeff() is total") {
    Poly p = Poly::from_coeffs({BigRat(1), BigRat(0), BigRat(0)});
    CHECK(p.degree() == 0);
    CHECK(p.coeff(5) == 0);
    CHECK(p.coeff(-1) == 0);
}

TEST_CASE("ring axioms, smoke level") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("rational intermediates are exact") {
    Poly half = Poly::monomial(BigRat(7, 2), 0);
    CHECK(half.scaled(BigRat(2)) == Poly(7));
    CHECK(half.all_integral() == false);
    CHECK((half + half).all_integral());
    CHECK(to_integer(BigRat(7, 2) * 2) == 7);
}

TEST_CASE("rendering matches the house style") {
    CHECK(Poly{1, 7, 28, 28}.str() == "28z^3+28z^2+7z+1");
    CHECK(Poly{1, 0, 1}.str() == "z^2+1");
    CHECK(Poly{2, 14}.str("x", false) == "2+14x");
    CHECK(Poly().str() == "0");
    CHECK(Poly{0, -1, 3}.str() == "3z^2-z");
    CHECK(Poly{1}.str() == "1");
}

TEST_CASE("exact division") {
    Poly num = Poly{1, 2, 1};  // (1+z)^2
    CHECK(*Poly::divide_exact(num, Poly{1, 1}) == Poly{1, 1});
    CHECK(!Poly::divide_exact(Poly{1, 1, 1}, Poly{1, 1}).has_value());
    CHECK(!Poly::divide_exact(Poly{1}, Poly()).has_value());
    CHECK(Poly::divide_exact(Poly(), Poly{1, 1})->is_zero());
}

TEST_CASE("rational functions normalize on exact division") {
    RationalFn f = RationalFn::of(Poly{0, 0, 4}, Poly{0, 0, 2});
    CHECK(f.is_poly());
    CHECK(f.num == Poly(2));
    RationalFn g = RationalFn::of(Poly{1, 1}, Poly{0, 1});
    CHECK(!g.is_poly());
    CHECK(g == RationalFn::of(Poly{2, 2}, Poly{0, 2}));
}

TEST_CASE("binomial convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(2, 3) == 0);
}
