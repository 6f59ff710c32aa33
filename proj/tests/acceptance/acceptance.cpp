// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [path-to-folres-cli]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "eta/eta.hpp"
#include "folres/folres.h"
#include "json.hpp"
#include "projective/projective.hpp"
#include "resolution/resolution.hpp"

using namespace folres;
using nlohmann::json;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

struct Capi {
    folres_session* s = folres_session_create();
    ~Capi() { folres_session_destroy(s); }
    // returns {status, parsed report, raw text}
    std::tuple<int, json, std::string> run(const std::string& cmd, const json& in) {
        folres_report* r = nullptr;
        const int st = folres_run(s, cmd.c_str(), in.dump().c_str(), &r);
        std::string text = folres_report_json(r);
        folres_report_destroy(r);
        return {st, json::parse(text), text};
    }
};

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

MultiPoly random_homogeneous(std::mt19937& rng, std::size_t n, unsigned deg, int terms = 3) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    MultiPoly p(n);
    for (int t = 0; t < terms; ++t) {
        Exponent e(n, 0);
        for (unsigned k = 0; k < deg; ++k) ++e[pick(rng)];
        p.add_term(e, Scalar(coef(rng)));
    }
    return p;
}

VectorField radial(std::size_t n) { return VectorField::radial(n); }

// Sylvester: all leading principal minors of -M positive.
bool negative_definite_by_minors(const std::vector<std::vector<long>>& M) {
    const std::size_t n = M.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) A[i][j] = -M[i][j];
        Rational det = 1;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            while (p < k && A[p][c] == 0) ++p;
            if (p == k) return false;
            if (p != c) {
                std::swap(A[p], A[c]);
                det = -det;
            }
            det *= A[c][c];
            for (std::size_t r = c + 1; r < k; ++r) {
                const Rational f = A[r][c] / A[c][c];
                for (std::size_t j = c; j < k; ++j) A[r][j] -= f * A[c][j];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

// connected with n - 1 edges, read off the matrix
bool tree_by_matrix(const std::vector<std::vector<long>>& M) {
    const std::size_t n = M.size();
    if (n == 0) return true;
    long edges = 0;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (M[i][j] < 0) return false;
            edges += M[i][j];
            if (M[i][j]) parent[find(i)] = find(j);
        }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
    return roots.size() == 1 && edges == static_cast<long>(n) - 1;
}

Check criterion1(Capi& api) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    auto [st, rep, text] = api.run("resolve", {{"field", "P=x,Q=y"}});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(st == 0, "exit status");
    const auto& r = rep["result"];
    c.expect(r["blowups"] == 1, "expected exactly one blow-up");
    c.expect(r["steps"][0]["jet"]["nu"] == 1, "nu");
    c.expect(r["steps"][0]["jet"]["dicritical"] == true, "dicritical");
    c.expect(r["steps"][0]["jet"]["radial"] == true, "radial");
    c.expect(r["singularities_on_divisors"] == 0, "singularities on the divisor");
    c.expect(r["status"] == "Resolved", "status");
    c.expect(secs < 1.0, "time");
    return c;
}

Check criterion2(Capi& api) {
    Check c;
    auto [st, rep, text] = api.run("cs-sum", {{"field", "P=y,Q=x"}});
    c.expect(st == 0, "exit status");
    const auto& r = rep["result"];
    c.expect(r["cs_sums"].size() == 1, "one invariant divisor");
    const auto& s = r["cs_sums"][0];
    c.expect(s["terms"].size() == 2, "two points on the divisor");
    for (const auto& t : s["terms"]) c.expect(t["index"] == "-1/2", "index -1/2");
    c.expect(s["sum"] == "-1" && s["self_intersection"] == -1 && s["pass"] == true, "sum equals self-intersection");

    auto [st2, rr, text2] = api.run("resolve", {{"field", "P=y,Q=x"}});
    for (int id : rr["result"]["final_singular_points"]) c.expect(rr["result"]["points"][id]["class"]["kind"] == "SimpleA", "SimpleA points");

    // hand linearization: chart-1 transform by pullback, index a/b of X = a u du + b w dw along u = 0
    const PlaneVectorField X(corpus::y(), corpus::x());
    const DiffForm w = corpus::oracle_transform(X, 1);  // A du + B dv, field = (B, -A)
    const MultiPoly A = w.coeff({0}), B = w.coeff({1});
    Rational total = 0;
    for (long v0 : {1L, -1L}) {
        const std::vector<Scalar> base{Scalar(0), Scalar(v0)};
        const MultiPoly P = B.translate(base), Q = -A.translate(base);
        const Scalar a = P.derivative(0).constant_term(), d = Q.derivative(1).constant_term();
        c.expect(P.derivative(1).constant_term().is_zero() && Q.derivative(0).constant_term().is_zero(), "diagonal linear part");
        const Rational idx = (a / d).to_rational();
        c.expect(idx == Rational(-1, 2), "hand index");
        total += idx;
    }
    c.expect(total == -1, "hand sum");
    return c;
}

Check criterion3_4(bool oracle_part) {
    Check c;
    const auto corpus_fields = corpus::plane_corpus();
    c.expect(corpus_fields.size() >= 10, "corpus size");
    for (const auto& e : corpus_fields) {
        if (oracle_part) {
            const auto br = blowup_at_origin(e.field);
            c.expect(dual_one_form(br.chart1) == corpus::oracle_transform(e.field, 1), e.name + ": chart 1");
            c.expect(dual_one_form(br.chart2) == corpus::oracle_transform(e.field, 2), e.name + ": chart 2");
            continue;
        }
        ResolutionOptions o;
        o.max_depth = 64;
        const auto tree = resolve(e.field, o);
        c.expect(tree.status == ResolutionStatus::Resolved, e.name + ": status");
        for (const auto& p : tree.points) c.expect(p.depth <= 64, e.name + ": depth");
        for (int id : tree.final_singular_points()) {
            const auto cls = classify_origin(tree.points[static_cast<std::size_t>(id)].local);
            c.expect(cls.simple(), e.name + ": final point not simple");
        }
        const auto g = check_divisor_graph(tree);
        c.expect(tree_by_matrix(g.matrix), e.name + ": divisor graph is not a tree");
        c.expect(negative_definite_by_minors(g.matrix), e.name + ": matrix not negative definite");
        c.expect(g.tree && g.negative_definite, e.name + ": library graph check disagrees");
    }
    return c;
}

Check criterion5(Capi& api) {
    Check c;
    for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
        const std::string f = "P=" + std::to_string(p) + "*x,Q=" + std::to_string(q) + "*y";
        auto [s1, k, t1] = api.run("kupka", {{"field", f}});
        auto [s2, b, t2] = api.run("bb", {{"field", f}});
        const Rational bb = Rational((p + q) * (p + q), p * q);
        c.expect(s1 == 0 && s2 == 0, "exit status");
        c.expect(k["result"]["trace"] == std::to_string(p + q) && k["result"]["kupka"] == true, "trace for " + f);
        c.expect(b["result"]["baum_bott"] == Rational(bb).get_str(), "BB for " + f);
    }
    return c;
}

Check criterion6(Capi& api) {
    Check c;
    auto [st, rep, text] = api.run("separatrix", {{"field", "P=x,Q=3*y+x^2"}});
    c.expect(st == 0, "exit status");
    bool seen = false;
    for (const auto& e : rep["result"]["separatrices"]) {
        if (!e.contains("branch") || e["branch"]["f"] != "x^2 + y") continue;
        seen = true;
        const auto& b = e["branch"];
        c.expect(b["cofactor"] == "3" && b["exact"] == true, "cofactor 3, exact");
        const auto& t = b["origin_test"];
        c.expect(t["h0_nonzero"] == true && t["order_of_f"] == 1 && t["linear_part_nilpotent"] == false && t["consistent"] == true,
                 "origin test");
    }
    c.expect(seen, "branch y + x^2 not found");
    // direct: X(f) = 3 f
    const MultiPoly x = corpus::x(), y = corpus::y(), f = y + x * x;
    const MultiPoly Xf = x * f.derivative(0) + (corpus::c(3) * y + x * x) * f.derivative(1);
    c.expect(Xf == corpus::c(3) * f, "X(f) = 3 f");
    return c;
}

Check criterion7() {
    Check c;
    std::mt19937 rng(7007);
    int euler_trials = 0, lie_trials = 0, decomposable_trials = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 4 + static_cast<std::size_t>(t % 2);
        const unsigned deg = 1 + static_cast<unsigned>(t % 4);  // coefficient degree of the forms below
        const auto R = radial(n);

        // Omega = i_R beta with beta a random homogeneous 2-form, so i_R Omega = 0
        DiffForm beta(n, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) beta.add({i, j}, random_homogeneous(rng, n, deg - 1, 2));
        const DiffForm Omega = interior_product(R, beta);
        if (!Omega.is_zero()) {
            ++euler_trials;
            c.expect(interior_product(R, Omega).is_zero(), "i_R Omega");
            const int d = static_cast<int>(deg) - 1;  // coefficients of Omega have degree d + 1
            c.expect(interior_product(R, exterior_derivative(Omega)) == Scalar(d + 2) * Omega, "i_R d Omega = (d+2) Omega");
            c.expect(euler_identity_check(foliation_from_form(Omega)).holds, "library Euler check");
        }

        // L_R eta = (d + 2) eta for an arbitrary homogeneous 2-form
        DiffForm eta(n, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) eta.add({i, j}, random_homogeneous(rng, n, deg, 2));
        if (!eta.is_zero()) ++lie_trials;
        if (!eta.is_zero()) c.expect(lie_derivative(R, eta) == Scalar(static_cast<int>(deg) + 2) * eta, "L_R eta");

        // decomposable integrable eta = h df ^ dg
        const unsigned df = 1 + static_cast<unsigned>(rng() % 2), dg = 1 + static_cast<unsigned>(rng() % 2), dh = static_cast<unsigned>(rng() % 2);
        const MultiPoly f = random_homogeneous(rng, n, df), g = random_homogeneous(rng, n, dg), h = random_homogeneous(rng, n, dh, 2);
        const DiffForm e2 = h * wedge(exterior_derivative(DiffForm::function(f)), exterior_derivative(DiffForm::function(g)));
        if (e2.is_zero()) continue;
        ++decomposable_trials;
        c.expect(wedge(e2, e2).is_zero(), "decomposable");
        const DiffForm w = interior_product(R, e2);
        const DiffForm wdw = wedge(w, exterior_derivative(w));
        c.expect(wdw.is_zero(), "omega ^ d omega = 0");
        c.expect(wdw == -wedge(w, interior_product(R, exterior_derivative(e2))), "omega ^ d omega = -i_R eta ^ i_R d eta");
        c.expect(wedge(w, e2).is_zero(), "omega ^ eta = 0");
        const auto a = analyze_eta(e2);
        c.expect(a.decomposable && a.omega_integrable && a.contraction_identity && a.omega_wedge_eta_zero && a.lie_identity,
                 "library analysis flags");
    }
    c.expect(euler_trials >= 90 && lie_trials >= 90 && decomposable_trials >= 80, "too many degenerate random trials");
    return c;
}

Check criterion8(Capi& api) {
    Check c;
    auto [st, rep, text] = api.run("theta-demo", {{"options", {{"seed", 1}, {"samples", 10}}}});
    c.expect(st == 0, "exit status");
    const auto& r = rep["result"];
    c.expect(r["theta_wedge_theta_zero"]["pass"] == true, "theta ^ theta");
    c.expect(r["singular_set_origin_only"]["pass"] == true, "Sing = {0}");
    c.expect(r["non_integrability"]["pass"] == true, "witness among 10 points");
    // direct: the coefficients x3^2, x1^2, x4^2, x2^2 occur, which forces the origin
    const DiffForm th = theta_example();
    c.expect(wedge(th, th).is_zero(), "direct theta ^ theta");
    const auto n = th.nvars();
    std::set<std::size_t> forced;
    for (const auto& [idx, coef] : th.terms())
        if (coef.size() == 1) {
            const auto& e = coef.terms().begin()->first;
            for (std::size_t i = 0; i < n; ++i)
                if (e[i] == total_degree(e)) forced.insert(i);
        }
    c.expect(forced.size() == n, "pure powers of every variable among the coefficients");
    return c;
}

Check criterion9() {
    Check c;
    std::mt19937 rng(9009);
    std::uniform_int_distribution<int> coef(-3, 3);
    int trials = 0;
    while (trials < 50) {
        const std::size_t n = 4 + static_cast<std::size_t>(trials % 2);
        MultiPoly l1(n), l2(n);
        for (std::size_t i = 0; i < n; ++i) {
            l1 += var(n, i) * Scalar(coef(rng));
            l2 += var(n, i) * Scalar(coef(rng));
        }
        const DiffForm w1 = l1 * exterior_derivative(DiffForm::function(l2)) - l2 * exterior_derivative(DiffForm::function(l1));
        if (w1.is_zero()) continue;
        ++trials;
        DiffForm mu(n, 1);
        const unsigned dmu = static_cast<unsigned>(trials % 3);
        for (std::size_t i = 0; i < n; ++i) mu.add({i}, random_homogeneous(rng, n, dmu, 2));
        const long g = coef(rng);
        const DiffForm half = Scalar(Rational(1, 2)) * exterior_derivative(w1);
        const DiffForm eta = wedge(w1, mu) + Scalar(g) * half;
        try {
            const auto d = eta_decompose(eta, w1);
            c.expect(d.gamma == MultiPoly::constant(n, Scalar(g)), "gamma recovered");
            c.expect(wedge(w1, d.mu) + d.gamma * half == eta, "re-wedging reproduces eta");
        } catch (const Error& e) {
            c.expect(false, std::string("decomposition failed: ") + e.what());
        }
    }
    return c;
}

Check criterion10() {
    Check c;
    const std::size_t n = 4;
    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> coord(-6, 6);
    struct Case {
        MultiPoly P, Q;
        int p, q;
        std::vector<Point> pts;
    };
    auto pt = [](std::initializer_list<long> v) {
        Point p;
        for (long a : v) p.emplace_back(a);
        return p;
    };
    const std::vector<Case> cases{
        {var(n, 0), var(n, 1), 1, 1, {pt({0, 0, 1, 0}), pt({0, 0, 2, -3}), pt({0, 0, 0, 1})}},
        {var(n, 0), var(n, 1) * var(n, 2), 1, 2, {pt({0, 1, 0, 0}), pt({0, 0, 1, 3}), pt({0, 2, 0, -1})}},
    };
    for (const auto& k : cases) {
        const auto F = build_fpq_form(k.P, k.Q, k.p, k.q);
        const Rational expected = Rational((k.p + k.q) * (k.p + k.q), k.p * k.q);
        for (const auto& b : k.pts) {
            c.expect(k.P.evaluate(b).is_zero() && k.Q.evaluate(b).is_zero(), "point on Gamma");
            int frames = 0, attempts = 0;
            while (frames < 5 && attempts++ < 500) {
                Point u, v;
                for (std::size_t i = 0; i < n; ++i) {
                    u.emplace_back(coord(rng));
                    v.emplace_back(coord(rng));
                }
                try {
                    const auto r = normal_type_at(F, b, u, v);
                    ++frames;
                    c.expect(r.invariant && *r.invariant == Scalar(expected), "tr^2/det");
                } catch (const Error& e) {
                    c.expect(e.code() == ErrorCode::FrameNotTransversal, std::string("unexpected error: ") + e.what());
                }
            }
            c.expect(frames == 5, "five transversal frames");
        }
    }
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

Check criterion11(Capi& api, const char* cli) {
    Check c;
    const std::vector<std::pair<std::string, json>> runs{
        {"resolve", {{"field", "P=y+x^2,Q=x^3"}}},
        {"theta-demo", {{"options", {{"seed", 42}}}}},
        {"transversality",
         {{"variables", {"a", "b", "c", "d"}}, {"pencil", {{"polys", {"a", "a + b^2"}}}}, {"strategy", "sampling"},
          {"parameters", {"s", "t"}}, {"families", {{"0", "0", "s", "t"}}}, {"options", {{"seed", 42}}}}},
        {"normal-type", {{"variables", {"a", "b", "c", "d"}}, {"pencil", {{"polys", {"a", "b*c"}}}}, {"points", {{0, 1, 0, 0}}}, {"options", {{"seed", 42}}}}},
    };
    for (const auto& [cmd, in] : runs) {
        auto a = std::get<2>(api.run(cmd, in));
        auto b = std::get<2>(api.run(cmd, in));
        c.expect(a == b, cmd + ": reports differ between runs");
    }
    if (cli) {
        // two separate processes writing reports to disk
        const std::string base = "acceptance_det_";
        std::ofstream(base + "in.json") << runs[1].second.dump();
        int rc = 0;
        for (int i = 0; i < 2; ++i) {
            const std::string cmd = std::string("\"") + cli + "\" theta-demo --input " + base + "in.json --seed 9 --out " + base + std::to_string(i) + ".json";
            rc |= std::system(cmd.c_str());
        }
        c.expect(rc == 0, "cli runs failed");
        const std::string r0 = slurp(base + "0.json"), r1 = slurp(base + "1.json");
        c.expect(!r0.empty() && r0 == r1, "cli reports differ");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    Capi api;
    const char* cli = argc > 1 ? argv[1] : nullptr;
    struct Item {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Item> items{
        {1, "radial detection", [&] { return criterion1(api); }},
        {2, "Camacho-Sad sum", [&] { return criterion2(api); }},
        {3, "resolution corpus", [] { return criterion3_4(false); }},
        {4, "blow-up oracle equivalence", [] { return criterion3_4(true); }},
        {5, "Kupka and Baum-Bott", [&] { return criterion5(api); }},
        {6, "separatrix cofactor", [&] { return criterion6(api); }},
        {7, "homogeneous identities", [] { return criterion7(); }},
        {8, "theta example", [&] { return criterion8(api); }},
        {9, "eta decomposition round trip", [] { return criterion9(); }},
        {10, "pencil normal type", [] { return criterion10(); }},
        {11, "determinism", [&] { return criterion11(api, cli); }},
    };
    int failed = 0;
    for (const auto& it : items) {
        Check c;
        try {
            c = it.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d %-30s %s%s%s\n", it.id, it.name, c.ok ? "PASS" : "FAIL", c.ok ? "" : "  ", c.detail.c_str());
        failed += !c.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
    return failed ? 1 : 0;
}
