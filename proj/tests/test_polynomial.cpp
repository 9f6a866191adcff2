#include <doctest.h>

#include "adsig/polynomial.hpp"

using namespace adsig;

TEST_CASE("polynomial arithmetic keeps canonical form") {
    IntPoly a({Int(1), Int(2), Int(3)});
    IntPoly b({Int(-1), Int(-2), Int(-3)});
    CHECK((a + b).is_zero());
    CHECK((a + b).degree() == -1);
    CHECK(a.degree() == 2);

    IntPoly x = IntPoly::x_power(1);
    CHECK((x * x - x * x).is_zero());
    CHECK(IntPoly({Int(0), Int(0)}).is_zero());
}

TEST_CASE("multiplication and powers") {
    // (x - 1)(x + 1) = x^2 - 1
    IntPoly left = IntPoly::linear_root(Int(1));
    IntPoly right({Int(1), Int(1)});
    CHECK(left * right == IntPoly({Int(-1), Int(0), Int(1)}));

    // (x + 6)^3 = x^3 + 18x^2 + 108x + 216
    IntPoly cube = IntPoly({Int(6), Int(1)}).pow(3);
    CHECK(cube == IntPoly({Int(216), Int(108), Int(18), Int(1)}));
    CHECK(cube.eval(Int(-6)) == 0);
}

TEST_CASE("derivative and evaluation") {
    IntPoly p({Int(5), Int(-3), Int(0), Int(2)});  // 2x^3 - 3x + 5
    CHECK(p.derivative() == IntPoly({Int(-3), Int(0), Int(6)}));
    CHECK(p.eval(Int(2)) == 16 - 6 + 5);
    CHECK(p.eval(make_rat(1, 2)) == make_rat(5 * 4 - 3 * 2 + 1, 4));  // 2/8 - 3/2 + 5
}

TEST_CASE("rational division and gcd") {
    RatPoly num = to_rational(IntPoly({Int(-1), Int(0), Int(0), Int(0), Int(1)}));  // x^4 - 1
    RatPoly den = to_rational(IntPoly({Int(-1), Int(0), Int(1)}));                  // x^2 - 1
    auto [quot, rem] = divmod(num, den);
    CHECK(rem.is_zero());
    CHECK(quot == to_rational(IntPoly({Int(1), Int(0), Int(1)})));

    // gcd(x^4 - 1, x^2 - 1) = x^2 - 1 (monic)
    CHECK(gcd(num, den) == den);

    RatPoly coprime = to_rational(IntPoly({Int(2), Int(1)}));
    CHECK(gcd(den, coprime).degree() == 0);
}

TEST_CASE("primitive integer form") {
    RatPoly p({make_rat(1, 2), make_rat(-3, 4)});
    CHECK(to_integer_primitive(p) == IntPoly({Int(-2), Int(3)}));

    RatPoly flip({make_rat(1, 3)});
    CHECK(to_integer_primitive(flip) == IntPoly({Int(1)}));
}
