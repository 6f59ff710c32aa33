#include "doctest.h"

#include <random>

#include "algebra/error.hpp"
#include "algebra/factor.hpp"
#include "algebra/multipoly.hpp"
#include "algebra/ops.hpp"

using namespace folres;

namespace {

MultiPoly X() { return MultiPoly::variable(2, 0); }
MultiPoly Y() { return MultiPoly::variable(2, 1); }
MultiPoly C(long c, std::size_t n = 2) { return MultiPoly::constant(n, Scalar(c)); }

MultiPoly random_poly(std::mt19937& rng, std::size_t n, unsigned deg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, static_cast<int>(deg));
    MultiPoly p(n);
    for (int i = 0; i < terms; ++i) {
        Exponent e(n);
        unsigned left = deg;
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(std::min<int>(ex(rng), static_cast<int>(left)));
            left -= x;
        }
        p.add_term(e, Scalar(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational field arithmetic") {
    Scalar a(Rational(3, 4)), b(Rational(-1, 6));
    CHECK((a + b).to_rational() == Rational(7, 12));
    CHECK((a * b).to_rational() == Rational(-1, 8));
    CHECK((a / b).to_rational() == Rational(-9, 2));
    CHECK(a.pow(2).to_rational() == Rational(9, 16));
}

TEST_CASE("quadratic extension") {
    auto K = NumberField::make({Rational(-2), Rational(0), Rational(1)});
    Scalar s = Scalar::generator(K);
    CHECK((s * s).is_rational());
    CHECK((s * s).to_rational() == 2);
    Scalar u = Scalar(1) + s;
    CHECK((u * u.inverse()).is_one());
    CHECK(u.trace() == 2);
    // x^2 - 2 has exactly one conjugate cluster of degree 2
    UPoly g{Scalar(-2), Scalar(0), Scalar(1)};
    auto roots = roots_over(g, nullptr, 8);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].relative_degree == 2);
    CHECK(upoly::eval(g, roots[0].root).is_zero());
}

TEST_CASE("factorization over Q") {
    // (x-1)^2 (x^2+1) (2x+3)
    QPoly f = qpoly::mul(qpoly::mul(QPoly{-1, 1}, QPoly{-1, 1}),
                         qpoly::mul(QPoly{1, 0, 1}, QPoly{3, 2}));
    auto fs = factor_over_rationals(f);
    REQUIRE(fs.size() == 3);
    int total = 0;
    for (auto& q : fs) total += static_cast<int>(q.poly.size() - 1) * q.multiplicity;
    CHECK(total == 5);
    // Swinnerton-Dyer style: x^4 - 10x^2 + 1 irreducible but splits mod every p
    auto sd = factor_over_rationals(QPoly{1, 0, -10, 0, 1});
    CHECK(sd.size() == 1);
}

TEST_CASE("roots in a tower") {
    auto K = NumberField::make({Rational(-2), Rational(0), Rational(1)});
    Scalar s = Scalar::generator(K);
    // v^2 - 3 over Q(sqrt 2): needs a degree-4 field
    UPoly g{Scalar(-3), Scalar(0), Scalar(1)};
    auto roots = roots_over(upoly::mul(g, UPoly{-s, Scalar(1)}), K, 8);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root == s);
    CHECK(roots[1].field->degree() == 4);
    CHECK(upoly::eval(g, embed(Scalar(0), roots[1].field) + roots[1].root).is_zero());
    auto capped = roots_over(g, K, 2);
    REQUIRE(capped.size() == 1);
    CHECK(capped[0].exceeds_cap);
}

TEST_CASE("exact_divide") {
    CHECK(exact_divide(X() * X() * Y() + X() * Y() * Y(), X() * Y()) == X() + Y());
    CHECK(exact_divide(X() * Y(), X()) == Y());
    CHECK_THROWS_AS(exact_divide(X() + C(1), Y()), Error);
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 3);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("jet") {
    auto p = Y() + X() * X();
    CHECK(jet(p, 1) == Y());
    CHECK(jet(p, 2) == X() * X());
    CHECK(jet(C(3) + X(), 0) == C(3));
    // translated jet: y + x^2 at (1, 0) has linear part 2x + y
    CHECK(jet(p, {Scalar(1), Scalar(0)}, 1) == C(2) * X() + Y());
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto q = random_poly(rng, 3, 4, 6);
        MultiPoly sum(3);
        for (int k = 0; k <= std::max(q.degree(), 0); ++k) sum += jet(q, static_cast<unsigned>(k));
        CHECK(sum == q);
    }
}

TEST_CASE("content and primitive") {
    auto z = MultiPoly::variable(3, 2), x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1);
    auto r = content_and_primitive({x * x * y, x * x * z});
    CHECK(r.content == x * x);
    CHECK(r.primitive[0] == y);
    CHECK(r.primitive[1] == z);
    auto r2 = content_and_primitive({X(), Y()});
    CHECK(r2.content == C(1));
    CHECK_THROWS_AS(content_and_primitive({MultiPoly(2), MultiPoly(2)}), Error);
    // construct-then-extract: x*(x dy - y dx)
    auto r3 = content_and_primitive({-(X() * Y()), X() * X()});
    CHECK(r3.content == X());
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        auto g = random_poly(rng, 3, 2, 3), a = random_poly(rng, 3, 2, 3), b = random_poly(rng, 3, 2, 3);
        if (g.is_zero() || (a.is_zero() && b.is_zero())) continue;
        auto s = content_and_primitive({g * a, g * b});
        // g divides the content; the primitive list is coprime
        CHECK_NOTHROW(exact_divide(s.content, g));
        CHECK(gcd(s.primitive[0], s.primitive[1]).is_constant());
    }
}

TEST_CASE("residue at zero") {
    CHECK(residue_at_zero(UPoly{Scalar(-2)}, UPoly{Scalar(0), Scalar(1)}) == Scalar(-2));
    CHECK(residue_at_zero(UPoly{Scalar(1)}, UPoly{Scalar(1)}).is_zero());
    CHECK(residue_at_zero(UPoly{Scalar(1), Scalar(1)}, UPoly{Scalar(0), Scalar(0), Scalar(1)}) == Scalar(1));
    // 1/(x^2 (1 - x)) = x^-2 + x^-1 + ...
    CHECK(residue_at_zero(UPoly{Scalar(1)}, UPoly{Scalar(0), Scalar(0), Scalar(1), Scalar(-1)}) == Scalar(1));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 30; ++t) {
        UPoly num{Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng))};
        UPoly den{Scalar(0), Scalar(c(rng) | 1), Scalar(c(rng)), Scalar(c(rng))};
        UPoly xx{Scalar(0), Scalar(1)};
        CHECK(residue_at_zero(upoly::mul(num, xx), upoly::mul(den, xx)) == residue_at_zero(num, den));
    }
}

TEST_CASE("rational squares") {
    CHECK(*is_rational_square(Rational(9, 4)) == Rational(3, 2));
    CHECK(!is_rational_square(Rational(2)));
    CHECK(*is_rational_square(Rational(0)) == 0);
    CHECK(!is_rational_square(Rational(-4)));
}

TEST_CASE("printing") {
    auto p = MultiPoly::constant(2, Scalar(Rational(3, 2))) * X() * Y() - Y() * Y();
    CHECK(p.to_string() == "3/2*x*y - y^2");
}
