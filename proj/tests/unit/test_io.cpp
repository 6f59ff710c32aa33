#include "doctest.h"

#include <random>

#include "algebra/error.hpp"
#include "io/commands.hpp"
#include "io/json_io.hpp"
#include "io/parse.hpp"

using namespace folres;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> X123{"x1", "x2", "x3"};

ErrorCode parse_error(const std::string& s, const std::vector<std::string>& vars = XY) {
    try {
        parse_expression(s, vars);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error for " << s);
    return ErrorCode::InternalInvariant;
}

Json run(const std::string& cmd, const Json& in, int expected_exit = 0, RunOptions o = {}) {
    auto out = run_command(cmd, in, o);
    CHECK_MESSAGE(out.exit_code == expected_exit, out.report.dump());
    return out.report;
}

}  // namespace

TEST_CASE("expression grammar") {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK(parse_expression("x^2 - y", XY) == x * x - y);
    CHECK(parse_expression("3/2*x*y", XY) == Scalar(Rational(3, 2)) * (x * y));
    CHECK(parse_expression(" ( x + 1 ) ^ 2 ", XY) == (x + MultiPoly::constant(2, Scalar(1))).pow(2));
    CHECK(parse_expression("-x + y", XY) == y - x);
    CHECK(parse_expression("6/4", XY) == MultiPoly::constant(2, Scalar(Rational(3, 2))));
    CHECK(parse_error("x y") == ErrorCode::SyntaxError);
    CHECK(parse_error("2x") == ErrorCode::SyntaxError);
    CHECK(parse_error("x^") == ErrorCode::SyntaxError);
    CHECK(parse_error("x**2") == ErrorCode::SyntaxError);
    CHECK(parse_error("1/0") == ErrorCode::SyntaxError);
    CHECK(parse_error("(x") == ErrorCode::SyntaxError);
    CHECK(parse_error("") == ErrorCode::SyntaxError);
    CHECK(parse_error("z + 1") == ErrorCode::UnknownVariable);
    CHECK(parse_error("x", {"x", "x"}) == ErrorCode::InvalidInput);
    try {
        parse_expression("x y", XY);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("print then parse is the identity") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5), ex(0, 3), count(0, 6);
    for (int t = 0; t < 300; ++t) {
        MultiPoly p(3);
        for (int k = count(rng); k > 0; --k) {
            Exponent e{static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng))};
            const int a = num(rng), b = den(rng);
            p.add_term(e, Scalar(Rational(a, b)));
        }
        CHECK(parse_expression(p.to_string(X123), X123) == p);
    }
}

TEST_CASE("field spec") {
    auto [P, Q] = parse_field_spec("P=y, Q = x^2");
    CHECK(P == MultiPoly::variable(2, 1));
    CHECK(Q == MultiPoly::variable(2, 0).pow(2));
    CHECK_THROWS_AS(parse_field_spec("P=y"), Error);
    CHECK_THROWS_AS(parse_field_spec("P=y,R=x"), Error);
}

TEST_CASE("exact values survive serialization") {
    auto K = NumberField::make({Rational(-1, 2), Rational(1), Rational(1)});
    const Scalar t = Scalar::generator(K);
    for (const Scalar& s : {Scalar(0), Scalar(Rational(-7, 3)), t, Scalar(Rational(3, 2)) * t + Scalar(5), t.inverse()}) {
        const Json j = scalar_to_json(s);
        const Scalar back = scalar_from_json(Json::parse(j.dump()));
        CHECK(back.coeffs() == s.coeffs());
        CHECK((back.field() == nullptr) == (s.field() == nullptr));
        if (s.field()) CHECK(back.field()->minpoly() == s.field()->minpoly());
    }
    CHECK(scalar_from_json("4/6") == Scalar(Rational(2, 3)));
    CHECK(scalar_from_json(5) == Scalar(5));
    CHECK_THROWS_AS(scalar_from_json("abc"), Error);
    CHECK_THROWS_AS(scalar_from_json("1/0"), Error);

    const auto names = default_variable_names(4);
    DiffForm f(4, 2);
    f.add({0, 2}, parse_expression("x1^2 - 3/4*x4", names));
    f.add({3, 1}, parse_expression("x2*x3", names));
    CHECK(form_from_json(form_to_json(f, names), names) == f);
}

TEST_CASE("resolve report") {
    auto r = run("resolve", {{"field", "P=x,Q=y"}});
    const auto& res = r["result"];
    CHECK(res["blowups"] == 1);
    CHECK(res["steps"][0]["jet"]["nu"] == 1);
    CHECK(res["steps"][0]["jet"]["dicritical"] == true);
    CHECK(res["steps"][0]["jet"]["radial"] == true);
    CHECK(res["singularities_on_divisors"] == 0);
    CHECK(res["case"]["radial"] == true);

    // field elements in the report reparse to the tree's values
    const PlaneVectorField X(parse_expression("y + x^2", XY), parse_expression("x^3", XY));
    auto tree = resolve(X);
    auto rep = run("resolve", {{"field", {{"P", "y + x^2"}, {"Q", "x^3"}}}});
    int extension_points = 0;
    for (const auto& p : rep["result"]["points"]) {
        const auto& tp = tree.points[p["id"].get<std::size_t>()];
        const Scalar back = scalar_from_json(p["coordinate"]);
        CHECK(back.coeffs() == tp.coordinate.coeffs());
        if (!back.is_rational()) {
            ++extension_points;
            CHECK(back.field()->minpoly() == tp.coordinate.field()->minpoly());
        }
    }
    CHECK(extension_points > 0);
}

TEST_CASE("command errors map to exit codes") {
    auto r = run("bb", {{"field", "P=x y,Q=x"}}, 1);
    CHECK(r["status"] == "error");
    CHECK(r["error"]["code"] == "SyntaxError");
    run("nope", Json::object(), 1);
    run("resolve", Json::object(), 1);
    run("resolve", {{"field", "P=x,Q=y"}, {"options", {{"max_depth", -1}}}}, 1);
    // the cusp needs two blow-ups
    auto capped = run("resolve", {{"field", "P=y+x^2,Q=x^3"}, {"options", {{"max_depth", 1}}}}, 3);
    CHECK(capped["result"]["status"] == "DepthCapHit");
    RunOptions o;
    o.max_depth = 1;
    run("resolve", {{"field", "P=y+x^2,Q=x^3"}}, 3, o);
    run("transversality",
        {{"variables", {"a", "b", "c"}}, {"pencil", {{"polys", {"a", "b"}}}}, {"options", {{"budget", 2}}}}, 3);
    auto bb = run("bb", {{"field", "P=y,Q=0"}}, 1);
    CHECK(bb["error"]["code"] == "DegenerateLinearPart");
}

TEST_CASE("commands on desk inputs") {
    auto k = run("kupka", {{"field", "P=x,Q=2*y"}});
    CHECK(k["result"]["trace"] == "3");
    CHECK(k["result"]["kupka"] == true);
    auto b = run("bb", {{"field", "P=2*x,Q=3*y"}});
    CHECK(b["result"]["baum_bott"] == "25/6");
    auto s = run("separatrix", {{"field", "P=x,Q=3*y+x^2"}});
    bool found = false;
    for (const auto& e : s["result"]["separatrices"])
        if (e.contains("branch") && e["branch"]["f"] == "x^2 + y") {
            found = true;
            CHECK(e["branch"]["cofactor"] == "3");
            CHECK(e["branch"]["exact"] == true);
        }
    CHECK(found);
    auto cs = run("cs-sum", {{"field", "P=y,Q=x"}});
    CHECK(cs["result"]["pass"] == true);
    CHECK(cs["result"]["cs_sums"][0]["sum"] == "-1");
    auto idx = run("cs-index", {{"field", "P=x,Q=-y"}, {"branch", {{"over", "x"}, {"phi", "0"}}}});
    CHECK(idx["result"]["indices"][0]["index"] == "-1");
    auto th = run("theta-demo", Json::object());
    CHECK(th["result"]["theta_wedge_theta_zero"]["pass"] == true);
    CHECK(th["result"]["singular_set_origin_only"]["pass"] == true);
    CHECK(th["result"]["non_integrability"]["pass"] == true);
    auto ed = run("eta-decompose",
                  {{"eta", {{"degree", 2}, {"terms", {{{"index", {1, 3}}, {"coeff", "-x2*x4"}}, {{"index", {2, 3}}, {"coeff", "x1*x4"}}, {{"index", {1, 2}}, {"coeff", "5"}}}}}},
                   {"omega1", {{"degree", 1}, {"terms", {{{"index", {1}}, {"coeff", "-x2"}}, {{"index", {2}}, {"coeff", "x1"}}}}}}});
    CHECK(ed["result"]["gamma"] == "5");
    CHECK(ed["result"]["mu"]["text"] == "(x4)*dx3");
}

TEST_CASE("reports are deterministic and untimed by default") {
    RunOptions o;
    o.seed = 11;
    const Json in{{"field", "P=y+x^2,Q=x^3"}};
    CHECK(run_command("resolve", in, o).report.dump() == run_command("resolve", in, o).report.dump());
    CHECK(run_command("theta-demo", {}, o).report.dump() == run_command("theta-demo", {}, o).report.dump());
    CHECK(!run_command("resolve", in, o).report.contains("timing"));
    o.timing = true;
    CHECK(run_command("resolve", in, o).report.contains("timing"));
    RunOptions other;
    other.seed = 12;
    o.timing = false;
    CHECK(run_command("theta-demo", {}, o).report.dump() != run_command("theta-demo", {}, other).report.dump());
}

TEST_CASE("divisor graph export") {
    auto out = run_command("resolve", {{"field", "P=y,Q=x"}}, {});
    CHECK(out.dot.find("graph divisors") == 0);
    CHECK(out.dot.find("E0_0") != std::string::npos);
    CHECK(run_command("kupka", {{"field", "P=y,Q=x"}}, {}).dot.empty());
}
