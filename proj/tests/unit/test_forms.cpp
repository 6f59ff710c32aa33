#include "doctest.h"

#include <random>

#include "algebra/error.hpp"
#include "forms/forms.hpp"

using namespace folres;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly cst(std::size_t n, long c) { return MultiPoly::constant(n, Scalar(c)); }

MultiPoly random_homogeneous(std::mt19937& rng, std::size_t n, unsigned deg, int terms) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    MultiPoly p(n);
    for (int t = 0; t < terms; ++t) {
        Exponent e(n, 0);
        for (unsigned k = 0; k < deg; ++k) ++e[pick(rng)];
        p.add_term(e, Scalar(coef(rng)));
    }
    return p;
}

MultiPoly random_poly(std::mt19937& rng, std::size_t n, unsigned maxdeg) {
    MultiPoly p(n);
    for (unsigned d = 0; d <= maxdeg; ++d) p += random_homogeneous(rng, n, d, 2);
    return p;
}

DiffForm random_form(std::mt19937& rng, std::size_t n, std::size_t k, unsigned maxdeg) {
    DiffForm a(n, k);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 3; ++t) {
        DiffForm::Index idx;
        while (idx.size() < k) idx.push_back(pick(rng));
        a.add(idx, random_poly(rng, n, maxdeg));
    }
    return a;
}

VectorField random_field(std::mt19937& rng, std::size_t n, unsigned maxdeg) {
    std::vector<MultiPoly> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_poly(rng, n, maxdeg));
    return VectorField(c);
}

}  // namespace

TEST_CASE("wedge basics") {
    auto dx1 = DiffForm::dx(3, 0), dx2 = DiffForm::dx(3, 1);
    CHECK(wedge(dx1, dx2) == -wedge(dx2, dx1));
    auto w = var(3, 0) * dx2 - var(3, 1) * dx1;
    CHECK(wedge(w, w).is_zero());
    CHECK(wedge(dx1, dx1).is_zero());
}

TEST_CASE("exterior derivative") {
    const std::size_t n = 2;
    auto w = var(n, 0) * DiffForm::dx(n, 1) - var(n, 1) * DiffForm::dx(n, 0);
    auto dw = exterior_derivative(w);
    CHECK(dw.coeff({0, 1}) == cst(n, 2));
    // x^2 dx is closed
    CHECK(exterior_derivative(var(n, 0).pow(2) * DiffForm::dx(n, 0)).is_zero());
}

TEST_CASE("interior product") {
    auto P = var(2, 0) * var(2, 1) + cst(2, 1), Q = var(2, 1).pow(3);
    VectorField X({P, Q});
    auto vol = wedge(DiffForm::dx(2, 0), DiffForm::dx(2, 1));
    CHECK(interior_product(X, vol) == DiffForm::one_form({-Q, P}));
    auto R = VectorField::radial(2);
    CHECK(interior_product(R, vol) == DiffForm::one_form({-var(2, 1), var(2, 0)}));
}

TEST_CASE("lie derivative and Euler identity") {
    auto R = VectorField::radial(2);
    auto vol = wedge(DiffForm::dx(2, 0), DiffForm::dx(2, 1));
    CHECK(lie_derivative(R, vol) == Scalar(2) * vol);
    // mixed degrees are not scaled uniformly
    auto mixed = var(2, 0) * DiffForm::dx(2, 1) + DiffForm::dx(2, 0);
    auto l = lie_derivative(R, mixed);
    CHECK(l != Scalar(1) * mixed);
    CHECK(l != Scalar(2) * mixed);
}

TEST_CASE("restriction to a plane") {
    auto w = var(3, 1) * DiffForm::dx(3, 0) - var(3, 0) * DiffForm::dx(3, 1);
    Point o{Scalar(0), Scalar(0), Scalar(0)}, e1{Scalar(1), Scalar(0), Scalar(0)}, e2{Scalar(0), Scalar(1), Scalar(0)};
    auto r = restrict_to_plane(w, o, e1, e2);
    CHECK(r == var(2, 1) * DiffForm::dx(2, 0) - var(2, 0) * DiffForm::dx(2, 1));
    CHECK(restrict_to_plane(DiffForm::dx(3, 2), o, e1, e2).is_zero());
    CHECK_THROWS_AS(restrict_to_plane(w, o, e1, e1), Error);
}

TEST_CASE("homogeneity degree") {
    auto w = var(2, 0) * DiffForm::dx(2, 1) - var(2, 1) * DiffForm::dx(2, 0);
    CHECK(homogeneity_degree(w) == 1);
    CHECK(!homogeneity_degree((var(2, 0) + cst(2, 1)) * DiffForm::dx(2, 1)));
    CHECK_THROWS_AS(homogeneity_degree(DiffForm(2, 1)), Error);
}

TEST_CASE("random identities") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
        auto a = random_form(rng, n, static_cast<std::size_t>(t % 3), 3);
        auto b = random_form(rng, n, 1 + static_cast<std::size_t>(t % 2), 2);
        auto v = random_field(rng, n, 2);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
        if (a.degree() >= 2) CHECK(interior_product(v, interior_product(v, a)).is_zero());
        // graded anticommutativity
        const int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
        CHECK(wedge(a, b) == Scalar(sign) * wedge(b, a));
        // Leibniz rule for L_v
        CHECK(lie_derivative(v, wedge(a, b)) == wedge(lie_derivative(v, a), b) + wedge(a, lie_derivative(v, b)));
    }
}

TEST_CASE("radial homogeneity identities") {
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
        const unsigned d = static_cast<unsigned>(t % 4);
        auto R = VectorField::radial(n);
        DiffForm eta(n, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) eta.add({i, j}, random_homogeneous(rng, n, d, 2));
        if (eta.is_zero()) continue;
        CHECK(lie_derivative(R, eta) == Scalar(static_cast<long>(d) + 2) * eta);
        // Omega = i_R of a homogeneous 2-form satisfies i_R Omega = 0
        auto Omega = interior_product(R, eta);
        if (Omega.is_zero()) continue;
        CHECK(interior_product(R, Omega).is_zero());
        CHECK(interior_product(R, exterior_derivative(Omega)) == Scalar(static_cast<long>(d) + 2) * Omega);
    }
}

TEST_CASE("pullback commutes with d") {
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto a = random_form(rng, 3, 1, 2);
        std::vector<MultiPoly> images{random_poly(rng, 2, 2), random_poly(rng, 2, 2), random_poly(rng, 2, 1)};
        CHECK(exterior_derivative(pullback(a, images)) == pullback(exterior_derivative(a), images));
    }
}
