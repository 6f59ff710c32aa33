#include "doctest.h"

#include <random>

#include "algebra/error.hpp"
#include "projective/projective.hpp"

using namespace folres;

namespace {

MultiPoly X(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i - 1); }
MultiPoly K(std::size_t n, long c) { return MultiPoly::constant(n, Scalar(c)); }
Point pt(std::initializer_list<long> v) {
    Point p;
    for (long a : v) p.emplace_back(a);
    return p;
}

MultiPoly random_homogeneous(std::mt19937& rng, std::size_t n, unsigned deg) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (;;) {
        MultiPoly p(n);
        for (int t = 0; t < 4; ++t) {
            Exponent e(n, 0);
            for (unsigned k = 0; k < deg; ++k) ++e[pick(rng)];
            p.add_term(e, Scalar(coef(rng)));
        }
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("fpq form examples") {
    auto F = build_fpq_form(X(3, 1), X(3, 2), 1, 1);
    CHECK(F.omega == DiffForm::one_form({X(3, 2), -X(3, 1), MultiPoly(3)}));
    CHECK(F.degree == 0);
    auto dO = exterior_derivative(F.omega);
    CHECK(homogeneity_degree(dO) == 0);
    CHECK(euler_identity_check(F).degree == 0);

    const std::size_t n = 3;
    auto G = build_fpq_form(X(n, 1), X(n, 2) * X(n, 2) + X(n, 3) * X(n, 3), 1, 2);
    auto expect = DiffForm::one_form({K(n, 2) * (X(n, 2) * X(n, 2) + X(n, 3) * X(n, 3)),
                                      -(K(n, 2) * X(n, 1) * X(n, 2)), -(K(n, 2) * X(n, 1) * X(n, 3))});
    CHECK(G.omega == expect);
    CHECK(euler_identity_check(G).degree == 1);

    CHECK_THROWS_AS(build_fpq_form(X(3, 1) + K(3, 1), X(3, 2), 1, 1), Error);
    CHECK_THROWS_AS(build_fpq_form(X(3, 1), X(3, 2), 2, 1), Error);
    // i_R Omega != 0 is rejected
    CHECK_THROWS_AS(euler_identity_check(foliation_from_form(DiffForm::one_form({X(3, 1), MultiPoly(3), MultiPoly(3)}))), Error);
}

TEST_CASE("random pencils satisfy the homogeneous identities") {
    std::mt19937 rng(77);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
        const int p = 1 + t % 4, q = 1 + (t / 4) % 4;
        auto F = build_fpq_form(random_homogeneous(rng, n, static_cast<unsigned>(p)),
                                random_homogeneous(rng, n, static_cast<unsigned>(q)), p, q);
        if (F.omega.is_zero()) continue;
        auto e = euler_identity_check(F);
        CHECK(e.holds);
        CHECK(e.degree == p + q - 2);
    }
}

TEST_CASE("transversality search") {
    const std::size_t n = 4;
    PencilSpec a{{X(n, 1), X(n, 2)}, {}, {}};
    auto ra = transversality_witness_search(a);
    CHECK(ra.transverse);
    CHECK(ra.certificate.find("not a proof") != std::string::npos);

    PencilSpec b{{X(n, 1), X(n, 1) + X(n, 2) * X(n, 2)}, {}, {}};
    auto rb = transversality_witness_search(b);
    REQUIRE(!rb.transverse);
    CHECK(is_degenerate_point(b, rb.witness));
    CHECK(rb.witness[0].is_zero());
    CHECK(rb.witness[1].is_zero());

    PencilSpec c{{X(n, 1) * X(n, 2), X(n, 3) * X(n, 3)}, {}, {}};
    auto rc = transversality_witness_search(c);
    REQUIRE(!rc.transverse);
    CHECK(is_degenerate_point(c, rc.witness));

    // sampling along the caller's family (0, 0, s, t)
    TransversalityOptions opts;
    opts.strategy = SearchStrategy::Sampling;
    opts.families = {{MultiPoly(2), MultiPoly(2), MultiPoly::variable(2, 0), MultiPoly::variable(2, 1)}};
    auto rs = transversality_witness_search(b, opts);
    REQUIRE(!rs.transverse);
    CHECK(is_degenerate_point(b, rs.witness));

    opts.budget = 3;
    CHECK_THROWS_AS(transversality_witness_search(a, opts), Error);

    PencilSpec bad{{X(n, 1), X(n, 2)}, {}, {2, 2}};
    CHECK_THROWS_AS(transversality_witness_search(bad), Error);
}

TEST_CASE("normal type at points of Gamma") {
    const std::size_t n = 4;
    auto F = build_fpq_form(X(n, 1), X(n, 2), 1, 1);
    auto r = normal_type_at(F, pt({0, 0, 1, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}));
    REQUIRE(r.invariant);
    CHECK(*r.invariant == Scalar(4));
    CHECK(r.matches);
    CHECK(r.kupka);

    auto G = build_fpq_form(X(n, 1), X(n, 2) * X(n, 3), 1, 2);
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> d(-5, 5);
    const Point bases[] = {pt({0, 1, 0, 0}), pt({0, 0, 1, 3}), pt({0, 2, 0, -1})};
    for (const auto& b : bases) {
        int frames = 0;
        while (frames < 5) {
            Point u, v;
            for (std::size_t i = 0; i < n; ++i) {
                u.emplace_back(d(rng));
                v.emplace_back(d(rng));
            }
            NormalTypeReport rep;
            try {
                rep = normal_type_at(G, b, u, v);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::FrameNotTransversal);
                continue;
            }
            ++frames;
            REQUIRE(rep.invariant);
            CHECK(*rep.invariant == Scalar(Rational(9, 2)));
        }
    }
    CHECK_THROWS_AS(normal_type_at(F, pt({0, 0, 1, 0}), pt({0, 0, 1, 0}), pt({0, 0, 0, 1})), Error);
    CHECK_THROWS_AS(normal_type_at(F, pt({1, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0})), Error);
}

TEST_CASE("claim 3.1 check") {
    auto F = build_fpq_form(X(3, 1), X(3, 2), 1, 1);
    auto r = claim31_check(F, {pt({0, 0, 1})});
    CHECK(r[0].d_omega_nonzero);
    // Omega = 4 x1 x2 (x2 dx1 - x1 dx2): dOmega vanishes at (0, 1, 0)
    auto G = build_fpq_form(X(3, 1) * X(3, 1), X(3, 2) * X(3, 2), 2, 2);
    auto r2 = claim31_check(G, {pt({0, 1, 0}), pt({0, 0, 1})});
    CHECK(!r2[0].d_omega_nonzero);
    CHECK_THROWS_AS(claim31_check(F, {pt({1, 0, 0})}), Error);
}
