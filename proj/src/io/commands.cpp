#include "io/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "algebra/error.hpp"
#include "eta/eta.hpp"
#include "io/parse.hpp"
#include "projective/projective.hpp"

namespace folres {

namespace {

// ---- input helpers ----

const Json& require(const Json& in, const char* key) {
    if (!in.is_object() || !in.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("input needs \"") + key + "\"");
    return in.at(key);
}

Json options_of(const Json& in) {
    if (in.is_object() && in.contains("options")) {
        const Json& o = in.at("options");
        if (!o.is_object()) throw Error(ErrorCode::InvalidInput, "\"options\" must be an object");
        return o;
    }
    return Json::object();
}

long int_option(const Json& in, const char* key, long fallback, long lo, long hi) {
    Json o = options_of(in);
    if (!o.contains(key)) return fallback;
    if (!o.at(key).is_number_integer()) throw Error(ErrorCode::InvalidInput, std::string("option ") + key + " must be an integer");
    long v = o.at(key).get<long>();
    if (v < lo || v > hi)
        throw Error(ErrorCode::InvalidInput, std::string("option ") + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

std::uint64_t seed_of(const Json& in, const RunOptions& opts) {
    if (opts.seed) return *opts.seed;
    return static_cast<std::uint64_t>(int_option(in, "seed", 0, 0, std::numeric_limits<long>::max()));
}

std::vector<std::string> variables_of(const Json& in, std::size_t fallback_n = 0) {
    if (!in.is_object() || !in.contains("variables")) {
        if (fallback_n) return default_variable_names(fallback_n);
        throw Error(ErrorCode::InvalidInput, "input needs \"variables\"");
    }
    std::vector<std::string> v;
    for (const auto& name : in.at("variables")) v.push_back(name.get<std::string>());
    if (v.empty()) throw Error(ErrorCode::InvalidInput, "\"variables\" is empty");
    return v;
}

PlaneVectorField field_of(const Json& in) {
    if (in.contains("variables") && variables_of(in) != plane_variables())
        throw Error(ErrorCode::InvalidInput, "plane commands use the variables (x, y)");
    const Json& f = require(in, "field");
    if (f.is_string()) {
        auto [P, Q] = parse_field_spec(f.get<std::string>());
        return {P, Q};
    }
    return {parse_expression(require(f, "P").get<std::string>(), plane_variables()),
            parse_expression(require(f, "Q").get<std::string>(), plane_variables())};
}

std::vector<MultiPoly> polys_of(const Json& list, const std::vector<std::string>& vars) {
    std::vector<MultiPoly> out;
    for (const auto& e : list) out.push_back(parse_expression(e.get<std::string>(), vars));
    return out;
}

std::vector<Point> points_of(const Json& in, std::size_t dim) {
    std::vector<Point> out;
    if (in.contains("points"))
        for (const auto& p : in.at("points")) out.push_back(point_from_json(p, dim));
    return out;
}

// ---- report helpers ----

const std::vector<std::string>& xy() { return plane_variables(); }

Json field_json(const PlaneVectorField& X) { return {{"P", poly_to_json(X.P, xy())}, {"Q", poly_to_json(X.Q, xy())}}; }

Json minpoly_json(const FieldPtr& f) { return f ? qpoly_to_json(f->minpoly()) : Json(nullptr); }

Json jet_json(const JetData& j) {
    return {{"nu", j.nu},
            {"P_nu", poly_to_json(j.P_nu, xy())},
            {"Q_nu", poly_to_json(j.Q_nu, xy())},
            {"tangent_cone", poly_to_json(j.tangent_cone, xy())},
            {"dicritical", j.dicritical},
            {"radial", j.radial}};
}

Json class_json(const SingularityClass& c) {
    Json j{{"kind", kind_name(c.kind)}, {"trace", scalar_to_json(c.trace)}, {"det", scalar_to_json(c.det)}};
    j["ratio"] = c.ratio ? Json(c.ratio->get_str()) : Json(nullptr);
    if (c.kind == SingularityKind::NonSimple) j["jet"] = jet_json(c.jet);
    return j;
}

Json direction_json(const EigenDirection& d) {
    return {{"eigenvalue", scalar_to_json(d.eigenvalue)}, {"direction", point_to_json(d.direction)}, {"conjugates", d.conjugates}};
}

Json error_json(const Error& e) {
    static const char* cat[] = {"input", "internal", "budget"};
    return {{"code", error_code_name(e.code())}, {"category", cat[static_cast<int>(error_category(e.code()))]}, {"message", e.what()}};
}

Json branch_json(const PlaneVectorField& X, const SeparatrixBranch& b) {
    Json j{{"over", b.over_x ? "x" : "y"},
           {"series", upoly_to_json(b.series)},
           {"truncation", b.truncation},
           {"f", poly_to_json(b.f, xy())},
           {"cofactor", poly_to_json(b.cofactor, xy())},
           {"exact", b.exact}};
    auto r = cofactor_origin_test(X, b);
    j["origin_test"] = {{"h0", scalar_to_json(r.h0)},
                        {"h0_nonzero", r.h0_nonzero},
                        {"order_of_f", r.order_of_f},
                        {"linear_part_nilpotent", r.linear_part_nilpotent},
                        {"first_jet_identity", r.first_jet_identity},
                        {"consistent", r.consistent}};
    if (!r.violation.empty()) j["origin_test"]["violation"] = r.violation;
    return j;
}

// The front end blows up a simple singular root once by default, so every
// report has a divisor to carry the index sum and the case label.
ResolutionOptions resolution_options(const Json& in, const RunOptions& opts, const PlaneVectorField& X) {
    ResolutionOptions r;
    r.blowup_root = X.singular_at_origin() && classify_origin(X).simple();
    r.max_depth = static_cast<int>(int_option(in, "max_depth", r.max_depth, 0, 4096));
    if (opts.max_depth) r.max_depth = *opts.max_depth;
    r.extension_cap = static_cast<int>(int_option(in, "extension_cap", r.extension_cap, 1, 64));
    r.truncation = static_cast<int>(int_option(in, "truncation", r.truncation, 2, 1024));
    Json o = options_of(in);
    if (o.contains("blowup_root")) r.blowup_root = o.at("blowup_root").get<bool>();
    return r;
}

Json cs_sums_json(const ResolutionTree& tree, bool& all_pass) {
    Json out = Json::array();
    all_pass = true;
    for (const auto& D : tree.divisors) {
        if (D.dicritical) continue;
        Json j{{"divisor", D.id}};
        try {
            auto s = cs_sum_check(tree, D.id);
            Json terms = Json::array();
            for (const auto& t : s.terms)
                terms.push_back({{"point", t.point}, {"index", scalar_to_json(t.index)}, {"trace", t.trace.get_str()}});
            j["terms"] = terms;
            j["sum"] = s.sum.get_str();
            j["self_intersection"] = s.expected;
            j["pass"] = s.pass;
            all_pass = all_pass && s.pass;
        } catch (const Error& e) {
            j["error"] = error_json(e);
            all_pass = false;
        }
        out.push_back(j);
    }
    return out;
}

Json tree_json(const ResolutionTree& tree) {
    Json r;
    r["status"] = status_name(tree.status);
    r["root"] = tree.points[0].cls ? class_json(*tree.points[0].cls) : Json(nullptr);
    r["blowups"] = tree.steps.size();
    Json steps = Json::array();
    for (const auto& s : tree.steps) {
        Json np = s.new_points;
        steps.push_back({{"id", s.id}, {"center", s.center}, {"divisor", s.divisor}, {"jet", jet_json(s.jet)}, {"new_points", np}});
    }
    r["steps"] = steps;
    Json divs = Json::array();
    for (const auto& d : tree.divisors)
        divs.push_back({{"id", d.id},
                        {"step", d.step},
                        {"center", d.center},
                        {"self_intersection", d.self_intersection},
                        {"dicritical", d.dicritical},
                        {"conjugates", d.conjugates},
                        {"field_minpoly", minpoly_json(d.field)}});
    r["divisors"] = divs;
    Json pts = Json::array();
    for (const auto& p : tree.points) {
        Json j{{"id", p.id},
               {"parent", p.parent},
               {"step", p.step},
               {"depth", p.depth},
               {"chart", p.chart},
               {"coordinate", scalar_to_json(p.coordinate)},
               {"conjugates", p.conjugates},
               {"label", qpoly_to_json(p.label)},
               {"axis_divisors", {p.axis_divisor[0], p.axis_divisor[1]}},
               {"singular", p.singular},
               {"tangency", p.tangency},
               {"unresolved", p.unresolved},
               {"blown_up", p.blown_up}};
        if (p.singular || p.id == 0) j["local_field"] = field_json(p.local);
        if (p.cls) j["class"] = class_json(*p.cls);
        pts.push_back(j);
    }
    r["points"] = pts;
    const auto finals = tree.final_singular_points();
    r["final_singular_points"] = finals;
    int on_divisor = 0;
    for (int id : finals) on_divisor += tree.points[static_cast<std::size_t>(id)].depth > 0;
    r["singularities_on_divisors"] = on_divisor;
    const auto g = check_divisor_graph(tree);
    Json order = Json::array();
    for (const auto& [d, c] : g.order) order.push_back({d, c});
    r["graph"] = {{"nodes", g.nodes},
                  {"edges", g.edge_count},
                  {"connected", g.connected},
                  {"tree", g.tree},
                  {"negative_definite", g.negative_definite},
                  {"order", order},
                  {"matrix", g.matrix}};
    bool pass = true;
    r["cs_sums"] = cs_sums_json(tree, pass);
    r["cs_sums_pass"] = pass;
    if (tree.status == ResolutionStatus::Resolved && !tree.steps.empty()) {
        auto cr = classify_case(tree);
        Json w = Json::array();
        for (const auto& x : cr.witnesses) w.push_back({{"point", x.point}, {"direction", direction_json(x.direction)}});
        r["case"] = {{"label", case_name(cr.label)},
                     {"radial", cr.radial},
                     {"witnesses", w},
                     {"tangency_points", cr.tangency_points},
                     {"invariant_divisors", cr.invariant_divisors},
                     {"dicritical_corners", cr.dicritical_corners}};
        Json cands = Json::array();
        try {
            for (const auto& c : distinguished_candidates(tree)) {
                Json path = Json::array();
                for (const auto& [chart, coord] : c.path) path.push_back({{"chart", chart}, {"coordinate", scalar_to_json(coord)}});
                Json j{{"kind", c.kind},
                       {"point", c.point},
                       {"path", path},
                       {"direction", direction_json(c.direction)},
                       {"series_available", c.series_available},
                       {"down_x", upoly_to_json(c.down_x)},
                       {"down_y", upoly_to_json(c.down_y)},
                       {"down_direction", point_to_json(c.down_direction)}};
                if (!c.note.empty()) j["note"] = c.note;
                cands.push_back(j);
            }
            r["candidates"] = cands;
        } catch (const Error& e) {
            r["candidates_error"] = error_json(e);
        }
    }
    return r;
}

int status_exit(const ResolutionTree& tree) { return tree.status == ResolutionStatus::Resolved ? 0 : 3; }

// ---- commands ----

struct Ctx {
    const Json& in;
    const RunOptions& opts;
    std::string dot;
    int exit_code = 0;
};

Json cmd_resolve(Ctx& c) {
    const auto X = field_of(c.in);
    const auto ro = resolution_options(c.in, c.opts, X);
    auto tree = resolve(X, ro);
    c.dot = divisor_dot(tree);
    c.exit_code = status_exit(tree);
    Json r = tree_json(tree);
    r["root_blown_up"] = ro.blowup_root;
    return r;
}

Json cmd_cs_sum(Ctx& c) {
    const auto X = field_of(c.in);
    const auto ro = resolution_options(c.in, c.opts, X);
    auto tree = resolve(X, ro);
    c.dot = divisor_dot(tree);
    c.exit_code = status_exit(tree);
    bool pass = true;
    Json sums = cs_sums_json(tree, pass);
    return {{"root_blown_up", ro.blowup_root}, {"status", status_name(tree.status)}, {"cs_sums", sums}, {"pass", pass}, {"blowups", tree.steps.size()}};
}

Json cmd_classify(Ctx& c) {
    const auto X = field_of(c.in);
    Json r = class_json(classify_origin(X));
    if (X.singular_at_origin()) {
        Json dirs = Json::array();
        try {
            for (const auto& d : eigen_directions(X, static_cast<int>(int_option(c.in, "extension_cap", 8, 1, 64))))
                dirs.push_back(direction_json(d));
            r["eigen_directions"] = dirs;
        } catch (const Error& e) {
            r["eigen_directions_error"] = error_json(e);
        }
    }
    return r;
}

Json cmd_kupka(Ctx& c) {
    const auto k = kupka_test(field_of(c.in));
    return {{"trace", scalar_to_json(k.trace)}, {"kupka", k.kupka}};
}

Json cmd_bb(Ctx& c) {
    const auto X = field_of(c.in);
    const auto L = linear_part(X);
    return {{"trace", scalar_to_json(L.trace())}, {"det", scalar_to_json(L.det())}, {"baum_bott", scalar_to_json(baum_bott(X))}};
}

// Branches requested by the input: an explicit graph, one direction, or all
// eigen-directions.
std::vector<std::pair<Json, std::function<SeparatrixBranch()>>> branches_of(Ctx& c, const PlaneVectorField& X) {
    const int N = static_cast<int>(int_option(c.in, "truncation", kDefaultTruncation, 2, 1024));
    std::vector<std::pair<Json, std::function<SeparatrixBranch()>>> out;
    if (c.in.contains("branch")) {
        const Json& b = c.in.at("branch");
        const std::string over = b.value("over", "x");
        if (over != "x" && over != "y") throw Error(ErrorCode::InvalidInput, "branch.over is \"x\" or \"y\"");
        const MultiPoly phi = parse_expression(require(b, "phi").get<std::string>(), {"t"});
        UPoly u(static_cast<std::size_t>(std::max(phi.degree(), 0)) + 1);
        for (const auto& [e, k] : phi.terms()) u[e[0]] = k;
        upoly::trim(u);
        out.push_back({Json{{"branch", b}}, [=] { return make_branch(X, over == "x", u, N); }});
        return out;
    }
    std::vector<EigenDirection> dirs;
    if (c.in.contains("direction")) {
        dirs.push_back({Scalar(0), point_from_json(c.in.at("direction"), 2), 1});
    } else {
        dirs = eigen_directions(X, static_cast<int>(int_option(c.in, "extension_cap", 8, 1, 64)));
    }
    for (const auto& d : dirs) {
        Json label = c.in.contains("direction") ? Json{{"direction", point_to_json(d.direction)}} : direction_json(d);
        out.push_back({label, [=] { return separatrix_series(X, d.direction, N); }});
    }
    return out;
}

Json cmd_separatrix(Ctx& c) {
    const auto X = field_of(c.in);
    Json r{{"class", class_json(classify_origin(X))}};
    if (c.in.contains("curve")) {
        const auto f = parse_expression(c.in.at("curve").get<std::string>(), xy());
        auto t = cofactor_origin_test(X, f);
        r["curve_test"] = {{"h0", scalar_to_json(t.h0)},     {"h0_nonzero", t.h0_nonzero},
                           {"order_of_f", t.order_of_f},     {"linear_part_nilpotent", t.linear_part_nilpotent},
                           {"consistent", t.consistent},     {"first_jet_identity", t.first_jet_identity}};
        return r;
    }
    Json list = Json::array();
    for (auto& [label, make] : branches_of(c, X)) {
        Json j = label;
        try {
            j["branch"] = branch_json(X, make());
        } catch (const ResonanceError& e) {
            j["error"] = error_json(e);
            j["error"]["order"] = e.order();
        } catch (const Error& e) {
            if (error_category(e.code()) != ErrorCategory::Input) throw;
            j["error"] = error_json(e);
        }
        list.push_back(j);
    }
    r["separatrices"] = list;
    return r;
}

Json cmd_cs_index(Ctx& c) {
    const auto X = field_of(c.in);
    Json list = Json::array();
    for (auto& [label, make] : branches_of(c, X)) {
        Json j = label;
        try {
            const auto b = make();
            j["index"] = scalar_to_json(cs_index(X, b));
            j["f"] = poly_to_json(b.f, xy());
            j["exact"] = b.exact;
        } catch (const ResonanceError& e) {
            j["error"] = error_json(e);
            j["error"]["order"] = e.order();
        } catch (const Error& e) {
            if (error_category(e.code()) != ErrorCategory::Input) throw;
            j["error"] = error_json(e);
        }
        list.push_back(j);
    }
    return {{"indices", list}};
}

FoliationForm fpq_of(const Json& in, const std::vector<std::string>& vars) {
    const Json& pencil = require(in, "pencil");
    auto polys = polys_of(require(pencil, "polys"), vars);
    if (polys.size() != 2) throw Error(ErrorCode::InvalidInput, "fpq pencils have exactly two polynomials");
    const int p = in.contains("p") ? in.at("p").get<int>() : polys[0].degree();
    const int q = in.contains("q") ? in.at("q").get<int>() : polys[1].degree();
    return build_fpq_form(polys[0], polys[1], p, q);
}

Json claim31_json(const std::vector<Claim31Entry>& entries) {
    Json out = Json::array();
    for (const auto& e : entries) {
        Json dv = Json::array();
        for (const auto& [idx, v] : e.d_omega) {
            Json index = Json::array();
            for (auto i : idx) index.push_back(i + 1);
            dv.push_back({{"index", index}, {"value", scalar_to_json(v)}});
        }
        out.push_back({{"point", point_to_json(e.point)}, {"d_omega_nonzero", e.d_omega_nonzero}, {"d_omega", dv}});
    }
    return out;
}

Json cmd_fpq(Ctx& c) {
    const auto vars = variables_of(c.in);
    const auto F = fpq_of(c.in, vars);
    const auto e = euler_identity_check(F);
    Json r{{"omega", form_to_json(F.omega, vars)},
           {"degree", F.degree},
           {"weights", F.weights},
           {"integrable", true},
           {"euler", {{"degree", e.degree}, {"holds", e.holds}}},
           {"note", "Gamma = {P = Q = 0} is a Kupka component only if (P, Q) is transverse; see the transversality command"}};
    const auto pts = points_of(c.in, vars.size());
    if (!pts.empty()) r["claim31"] = claim31_json(claim31_check(F, pts));
    return r;
}

Json cmd_transversality(Ctx& c) {
    const auto vars = variables_of(c.in);
    const Json& pencil = require(c.in, "pencil");
    PencilSpec spec;
    spec.polys = polys_of(require(pencil, "polys"), vars);
    if (pencil.contains("weights")) spec.weights = pencil.at("weights").get<std::vector<int>>();
    TransversalityOptions to;
    to.seed = seed_of(c.in, c.opts);
    Json o = options_of(c.in);
    if (o.contains("finite_field_primes")) to.primes = o.at("finite_field_primes").get<std::vector<int>>();
    to.budget = static_cast<std::uint64_t>(int_option(c.in, "budget", static_cast<long>(to.budget), 1, 100'000'000));
    to.samples = static_cast<int>(int_option(c.in, "samples", to.samples, 1, 1'000'000));
    const std::string strategy = c.in.value("strategy", "finite-field");
    if (strategy == "sampling") {
        to.strategy = SearchStrategy::Sampling;
        std::vector<std::string> params;
        for (const auto& p : require(c.in, "parameters")) params.push_back(p.get<std::string>());
        for (const auto& fam : require(c.in, "families")) to.families.push_back(polys_of(fam, params));
    } else if (strategy != "finite-field") {
        throw Error(ErrorCode::InvalidInput, "strategy is \"finite-field\" or \"sampling\"");
    }
    auto r = transversality_witness_search(spec, to);
    Json per = Json::array();
    for (const auto& [p, n] : r.per_prime) per.push_back({{"prime", p}, {"points", n}});
    Json out{{"verdict", r.transverse ? "Transverse" : "NotTransverse"},
             {"certificate", r.certificate},
             {"points_examined", r.points_examined},
             {"per_prime", per}};
    if (!r.transverse) {
        out["witness"] = point_to_json(r.witness);
        out["witness_verified"] = is_degenerate_point(spec, r.witness);
    } else {
        out["note"] = "evidence only: a failed search does not prove transversality";
    }
    return out;
}

Json cmd_normal_type(Ctx& c) {
    const auto vars = variables_of(c.in);
    const std::size_t n = vars.size();
    const auto F = fpq_of(c.in, vars);
    const auto pts = points_of(c.in, n);
    if (pts.empty()) throw Error(ErrorCode::InvalidInput, "normal-type needs \"points\" on Gamma");
    std::vector<std::pair<Point, Point>> frames;
    if (c.in.contains("frames"))
        for (const auto& f : c.in.at("frames"))
            frames.emplace_back(point_from_json(require(f, "u"), n), point_from_json(require(f, "v"), n));
    const long random_frames = int_option(c.in, "random_frames", frames.empty() ? 5 : 0, 0, 1000);
    std::mt19937_64 rng(seed_of(c.in, c.opts));
    std::uniform_int_distribution<int> coord(-5, 5);
    Json list = Json::array();
    bool all = true;
    for (const auto& base : pts) {
        auto trial = frames;
        Json entries = Json::array();
        long got = 0;
        int attempts = 0;
        auto run = [&](const Point& u, const Point& v, bool random) {
            Json j{{"u", point_to_json(u)}, {"v", point_to_json(v)}};
            try {
                auto rep = normal_type_at(F, base, u, v);
                j["field"] = field_json(rep.field);
                j["trace"] = scalar_to_json(rep.trace);
                j["det"] = scalar_to_json(rep.det);
                j["invariant"] = rep.invariant ? scalar_to_json(*rep.invariant) : Json(nullptr);
                j["expected"] = rep.expected.get_str();
                j["matches"] = rep.matches;
                j["kupka"] = rep.kupka;
                all = all && rep.matches;
                if (random) ++got;
            } catch (const Error& e) {
                if (random && e.code() == ErrorCode::FrameNotTransversal) return;
                throw;
            }
            entries.push_back(j);
        };
        for (const auto& [u, v] : trial) run(u, v, false);
        while (got < random_frames) {
            if (++attempts > 1000) throw Error(ErrorCode::SearchBudgetExceeded, "no transversal random frame found");
            Point u, v;
            for (std::size_t i = 0; i < n; ++i) {
                u.emplace_back(coord(rng));
                v.emplace_back(coord(rng));
            }
            run(u, v, true);
        }
        list.push_back({{"point", point_to_json(base)}, {"frames", entries}});
    }
    return {{"expected", Rational(Rational(F.weights[0] + F.weights[1]) * (F.weights[0] + F.weights[1]) / (F.weights[0] * F.weights[1])).get_str()},
            {"points", list},
            {"all_match", all}};
}

Json cmd_euler(Ctx& c) {
    const auto vars = variables_of(c.in);
    FoliationForm F = c.in.contains("form") ? foliation_from_form(form_from_json(c.in.at("form"), vars)) : fpq_of(c.in, vars);
    const auto e = euler_identity_check(F);
    return {{"omega", form_to_json(F.omega, vars)}, {"degree", e.degree}, {"holds", e.holds}};
}

DiffForm eta_of(const Json& in, const std::vector<std::string>& vars, const char* key = "eta") {
    return form_from_json(require(in, key), vars);
}

Json cmd_eta_analyze(Ctx& c) {
    const auto vars = variables_of(c.in, 4);
    const auto a = analyze_eta(eta_of(c.in, vars));
    Json r{{"eta", form_to_json(a.eta, vars)},
           {"degree", a.degree},
           {"decomposable", a.decomposable},
           {"omega", form_to_json(a.omega, vars)},
           {"lie_identity", a.lie_identity},
           {"omega_integrable", a.omega_integrable},
           {"contraction_identity", a.contraction_identity},
           {"omega_wedge_eta_zero", a.omega_wedge_eta_zero}};
    if (!a.omega.is_zero()) {
        r["phi"] = poly_to_json(a.phi, vars);
        r["omega1"] = form_to_json(a.omega1, vars);
    }
    return r;
}

Json cmd_eta_decompose(Ctx& c) {
    const auto vars = variables_of(c.in, 4);
    const auto d = eta_decompose(eta_of(c.in, vars), eta_of(c.in, vars, "omega1"));
    Json T = Json::array();
    for (const auto& row : d.transform) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        T.push_back(r);
    }
    Json r{{"mu", form_to_json(d.mu, vars)},
           {"gamma", poly_to_json(d.gamma, vars)},
           {"gamma_constant", d.gamma_constant},
           {"higher_block_zero", d.higher_block_zero},
           {"transform", T}};
    if (!d.note.empty()) r["note"] = d.note;
    return r;
}

Json frobenius_json(const FrobeniusResult& f) {
    Json j{{"integrable", f.integrable}};
    if (!f.integrable)
        j["witness"] = {{"v", point_to_json(f.v)}, {"w", point_to_json(f.w)}, {"u", point_to_json(f.u)}, {"value", scalar_to_json(f.value)}};
    return j;
}

Json sampling_json(const FrobeniusSampling& s) {
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(point_to_json(p));
    Json j{{"points", pts}, {"rejected", s.rejected}, {"witness_found", s.witness.has_value()}};
    if (s.witness) {
        j["witness_point"] = point_to_json(s.witness_point);
        j["witness"] = frobenius_json(*s.witness)["witness"];
    } else {
        j["note"] = "integrable at every sampled point; evidence only";
    }
    return j;
}

Json cmd_frobenius(Ctx& c) {
    const auto vars = variables_of(c.in, 4);
    const auto eta = eta_of(c.in, vars);
    const auto pts = points_of(c.in, vars.size());
    if (pts.empty()) {
        const long count = int_option(c.in, "samples", 10, 1, 10000);
        return sampling_json(frobenius_sample(eta, static_cast<int>(count), seed_of(c.in, c.opts)));
    }
    Json list = Json::array();
    for (const auto& p : pts) {
        Json j{{"point", point_to_json(p)}};
        try {
            auto k = kernel_at_point(eta, p);
            Json basis = Json::array();
            for (const auto& v : k.basis) basis.push_back(point_to_json(v));
            j["rank"] = k.rank;
            j["kernel"] = basis;
            j["result"] = frobenius_json(frobenius_test_at_point(eta, p));
        } catch (const Error& e) {
            if (error_category(e.code()) != ErrorCategory::Input) throw;
            j["error"] = error_json(e);
        }
        list.push_back(j);
    }
    return {{"points", list}};
}

Json cmd_theta_demo(Ctx& c) {
    const auto vars = default_variable_names(4);
    const DiffForm t = theta_example();
    const auto z = singular_coefficient_zero_locus(t);
    const auto s = frobenius_sample(t, static_cast<int>(int_option(c.in, "samples", 10, 1, 10000)), seed_of(c.in, c.opts));
    const bool decomposable = wedge(t, t).is_zero();
    Json forced = Json::array();
    for (auto i : z.forced) forced.push_back(vars[i]);
    Json r;
    r["theta"] = form_to_json(t, vars);
    const auto hd = homogeneity_degree(t);
    r["homogeneity_degree"] = hd ? Json(*hd) : Json(nullptr);
    r["theta_wedge_theta_zero"] = Json{{"pass", decomposable}};
    r["singular_set_origin_only"] = Json{{"pass", z.only_origin}, {"forced", forced}, {"reasoning", z.reasoning}};
    r["non_integrability"] = Json{{"pass", s.witness.has_value()}, {"sampling", sampling_json(s)}};
    return r;
}

using Handler = Json (*)(Ctx&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"resolve", cmd_resolve},         {"classify", cmd_classify},
        {"kupka", cmd_kupka},             {"bb", cmd_bb},
        {"cs-index", cmd_cs_index},       {"cs-sum", cmd_cs_sum},
        {"separatrix", cmd_separatrix},   {"fpq", cmd_fpq},
        {"transversality", cmd_transversality}, {"normal-type", cmd_normal_type},
        {"euler-check", cmd_euler},       {"eta-analyze", cmd_eta_analyze},
        {"eta-decompose", cmd_eta_decompose}, {"frobenius", cmd_frobenius},
        {"theta-demo", cmd_theta_demo},
    };
    return h;
}

int exit_for(ErrorCode code) {
    switch (error_category(code)) {
        case ErrorCategory::Input: return 1;
        case ErrorCategory::Internal: return 2;
        case ErrorCategory::Budget: return 3;
    }
    return 2;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"resolve", "classify", "kupka", "bb", "cs-index",
                                                "cs-sum", "separatrix", "fpq", "transversality",
                                                "normal-type", "euler-check", "eta-analyze",
                                                "eta-decompose", "frobenius", "theta-demo"};
    return names;
}

RunOutput run_command(const std::string& command, const Json& input, const RunOptions& opts) {
    RunOutput out;
    out.report = {{"command", command}, {"input", input}};
    const auto start = std::chrono::steady_clock::now();
    Ctx ctx{input.is_null() ? Json::object() : input, opts, {}, 0};
    try {
        auto it = handlers().find(command);
        if (it == handlers().end()) throw Error(ErrorCode::InvalidInput, "unknown command '" + command + "'");
        if (!ctx.in.is_object()) throw Error(ErrorCode::InvalidInput, "the input document must be a JSON object");
        out.report["result"] = it->second(ctx);
        out.report["status"] = "ok";
        out.exit_code = ctx.exit_code;
        out.dot = ctx.dot;
    } catch (const Error& e) {
        out.report["status"] = "error";
        out.report["error"] = error_json(e);
        out.exit_code = exit_for(e.code());
    } catch (const Json::exception& e) {
        out.report["status"] = "error";
        out.report["error"] = {{"code", "InvalidInput"}, {"category", "input"}, {"message", e.what()}};
        out.exit_code = 1;
    } catch (const std::exception& e) {
        out.report["status"] = "error";
        out.report["error"] = {{"code", "InternalInvariant"}, {"category", "internal"}, {"message", e.what()}};
        out.exit_code = 2;
    }
    if (opts.timing)
        out.report["timing"] = {{"milliseconds", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
    return out;
}

std::string divisor_dot(const ResolutionTree& tree) {
    std::ostringstream os;
    os << "graph divisors {\n  node [shape=ellipse];\n";
    for (const auto& d : tree.divisors)
        for (int i = 0; i < d.conjugates; ++i)
            os << "  E" << d.id << "_" << i << " [label=\"E" << d.id << (d.conjugates > 1 ? "." + std::to_string(i) : "") << " ("
               << d.self_intersection << ")\"" << (d.dicritical ? ", style=dashed" : "") << "];\n";
    for (const auto& [key, mult] : tree.edges)
        for (int k = 0; k < mult; ++k)
            os << "  E" << key.first.first << "_" << key.first.second << " -- E" << key.second.first << "_" << key.second.second << ";\n";
    for (int id : tree.final_singular_points()) {
        const auto& p = tree.points[static_cast<std::size_t>(id)];
        os << "  p" << id << " [shape=box, label=\"p" << id << " " << (p.cls ? kind_name(p.cls->kind) : "?") << "\"];\n";
        for (int a : p.axis_divisor)
            if (a >= 0) os << "  p" << id << " -- E" << a << "_0 [style=dotted];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace folres
