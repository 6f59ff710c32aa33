#include "resolution/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "algebra/error.hpp"
#include "algebra/ops.hpp"

namespace folres {

namespace {

MultiPoly uvar() { return MultiPoly::variable(2, 0); }
MultiPoly vvar() { return MultiPoly::variable(2, 1); }

// p / x_var^k, throwing when some term has a lower power
MultiPoly divide_by_power(const MultiPoly& p, std::size_t var, unsigned k) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] < k) throw Error(ErrorCode::NotDivisible, "strict transform: exceptional factor does not divide");
        Exponent f(e);
        f[var] -= k;
        r.add_term(f, c);
    }
    return r;
}

int field_degree(const FieldPtr& f) { return f ? f->degree() : 1; }

// tangent cone restricted to x = 1, as a polynomial in v
UPoly dehomogenize(const MultiPoly& cone) {
    UPoly g;
    for (const auto& [e, c] : cone.terms()) {
        if (g.size() <= e[1]) g.resize(e[1] + 1);
        g[e[1]] += c;
    }
    upoly::trim(g);
    return g;
}

DivisorPoint make_point(const PlaneVectorField& transform, int chart, const Scalar& v0, const FieldPtr& field) {
    DivisorPoint dp;
    dp.chart = chart;
    dp.coordinate = v0;
    dp.field = field;
    PlaneVectorField t = field ? transform.embed(field) : transform;
    if (!v0.is_zero()) {
        const Point shift{Scalar(0), v0};
        t = PlaneVectorField(t.P.translate(shift), t.Q.translate(shift));
    }
    dp.local = t;
    dp.singular = t.singular_at_origin();
    return dp;
}

Rational trace_in(const Scalar& s, const FieldPtr& field) {
    if (s.is_rational()) return s.to_rational() * field_degree(field);
    return embed(s, field).trace();
}

}  // namespace

PlaneVectorField chart_transform(const PlaneVectorField& X, int chart, int nu, bool dicritical) {
    const unsigned e = static_cast<unsigned>(dicritical ? nu : nu - 1);
    const MultiPoly u = uvar(), v = vvar();
    if (chart == 1) {
        const std::vector<MultiPoly> img{u, u * v};
        const MultiPoly P1 = X.P.substitute(img), Q1 = X.Q.substitute(img);
        return {divide_by_power(P1, 0, e), divide_by_power(Q1 - v * P1, 0, e + 1)};
    }
    const std::vector<MultiPoly> img{u * v, v};
    const MultiPoly P2 = X.P.substitute(img), Q2 = X.Q.substitute(img);
    return {divide_by_power(P2 - u * Q2, 1, e + 1), divide_by_power(Q2, 1, e)};
}

BlowupResult blowup_at_origin(const PlaneVectorField& X, const FieldPtr& base, int extension_cap) {
    BlowupResult br;
    br.jet = first_nonzero_jet(X);
    const bool dicr = br.jet.dicritical;
    br.divisor_invariant = !dicr;
    br.exceptional_power = dicr ? br.jet.nu : br.jet.nu - 1;
    br.chart1 = chart_transform(X, 1, br.jet.nu, dicr);
    br.chart2 = chart_transform(X, 2, br.jet.nu, dicr);

    const MultiPoly& cone = br.jet.tangent_cone;
    const int D = cone.degree();
    const UPoly g = dehomogenize(cone);
    const int dg = upoly::degree(g);
    if (dg >= 1) {
        for (const auto& rc : roots_over(g, base, extension_cap)) {
            if (rc.exceeds_cap) {
                DivisorPoint dp;
                dp.chart = 1;
                dp.relative_degree = rc.relative_degree;
                dp.multiplicity = rc.multiplicity;
                dp.label = rc.label;
                dp.exceeds_cap = true;
                dp.singular = true;
                br.points.push_back(dp);
                continue;
            }
            DivisorPoint dp = make_point(br.chart1, 1, rc.root, rc.field);
            dp.relative_degree = rc.relative_degree;
            dp.multiplicity = rc.multiplicity;
            dp.label = rc.label.empty() ? minimal_polynomial(rc.root) : rc.label;
            dp.tangency = dicr && !dp.singular;
            if (!dicr && !dp.singular)
                throw Error(ErrorCode::InternalInvariant, "tangent-cone direction is not singular after blow-up");
            br.points.push_back(dp);
        }
    }
    if (D > dg) {
        DivisorPoint dp = make_point(br.chart2, 2, Scalar(0), base);
        dp.multiplicity = D - dg;
        dp.tangency = dicr && !dp.singular;
        if (!dicr && !dp.singular)
            throw Error(ErrorCode::InternalInvariant, "tangent-cone direction is not singular after blow-up");
        br.points.push_back(dp);
    }
    return br;
}

const char* status_name(ResolutionStatus s) {
    switch (s) {
        case ResolutionStatus::Resolved: return "Resolved";
        case ResolutionStatus::DepthCapHit: return "DepthCapHit";
        case ResolutionStatus::UnresolvedCluster: return "UnresolvedCluster";
    }
    return "?";
}

std::vector<int> ResolutionTree::final_points() const {
    std::vector<int> out;
    for (const auto& p : points)
        if (!p.blown_up) out.push_back(p.id);
    return out;
}

std::vector<int> ResolutionTree::final_singular_points() const {
    std::vector<int> out;
    for (const auto& p : points)
        if (!p.blown_up && p.singular) out.push_back(p.id);
    return out;
}

std::vector<int> ResolutionTree::points_on(int d) const {
    std::vector<int> out;
    for (const auto& p : points)
        if (!p.blown_up && (p.axis_divisor[0] == d || p.axis_divisor[1] == d)) out.push_back(p.id);
    return out;
}

int ResolutionTree::axis_of(int p, int d) const {
    const auto& pt = points[static_cast<std::size_t>(p)];
    if (pt.axis_divisor[0] == d) return 0;
    if (pt.axis_divisor[1] == d) return 1;
    return -1;
}

namespace {

void add_edge(ResolutionTree& t, DivisorCopy a, DivisorCopy b, int delta) {
    if (b < a) std::swap(a, b);
    int& n = t.edges[{a, b}];
    n += delta;
    if (n < 0) throw Error(ErrorCode::InternalInvariant, "divisor graph lost an edge it never had");
    if (n == 0) t.edges.erase({a, b});
}

}  // namespace

ResolutionTree resolve(const PlaneVectorField& X, const ResolutionOptions& options) {
    if (!X.singular_at_origin()) throw Error(ErrorCode::NotSingularAtOrigin, "resolve needs a singular point at the origin");
    if (X.P.is_zero() && X.Q.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero vector field");
    ResolutionTree tree;
    tree.options = options;
    const FieldPtr root_field = X.field();
    const int root_degree = field_degree(root_field);

    TreePoint root;
    root.field = root_field;
    root.local = X;
    root.singular = true;
    tree.points.push_back(root);

    bool depth_hit = false, cap_hit = false;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int qid = queue.front();
        queue.pop_front();
        {
            TreePoint& q = tree.points[static_cast<std::size_t>(qid)];
            q.cls = classify_origin(q.local);
            if (q.cls->simple() && !(qid == 0 && options.blowup_root)) continue;
            if (q.depth >= options.max_depth) {
                q.unresolved = true;
                depth_hit = true;
                continue;
            }
        }
        const TreePoint q = tree.points[static_cast<std::size_t>(qid)];
        BlowupResult br = blowup_at_origin(q.local, q.field, options.extension_cap);

        BlowupStep step;
        step.id = static_cast<int>(tree.steps.size());
        step.center = qid;
        step.jet = br.jet;

        DivisorNode E;
        E.id = static_cast<int>(tree.divisors.size());
        E.step = step.id;
        E.center = qid;
        E.dicritical = !br.divisor_invariant;
        E.conjugates = q.conjugates;
        E.field = q.field;
        step.divisor = E.id;
        tree.divisors.push_back(E);

        for (int a : q.axis_divisor) {
            if (a < 0) continue;
            DivisorNode& D = tree.divisors[static_cast<std::size_t>(a)];
            D.self_intersection -= q.conjugates / D.conjugates;
        }
        for (int i = 0; i < q.conjugates; ++i) {
            for (int a : q.axis_divisor) {
                if (a < 0) continue;
                add_edge(tree, {E.id, i}, {a, i % tree.divisors[static_cast<std::size_t>(a)].conjugates}, 1);
            }
            const int a0 = q.axis_divisor[0], a1 = q.axis_divisor[1];
            if (a0 >= 0 && a1 >= 0)
                add_edge(tree, {a0, i % tree.divisors[static_cast<std::size_t>(a0)].conjugates},
                         {a1, i % tree.divisors[static_cast<std::size_t>(a1)].conjugates}, -1);
        }

        // corners with old divisors that are not already tangent-cone points
        bool has_v0 = false, has_chart2 = false;
        for (const auto& dp : br.points) {
            if (dp.chart == 1 && !dp.exceeds_cap && dp.coordinate.is_zero()) has_v0 = true;
            if (dp.chart == 2) has_chart2 = true;
        }
        if (q.axis_divisor[1] >= 0 && !has_v0) {
            DivisorPoint dp = make_point(br.chart1, 1, Scalar(0), q.field);
            dp.multiplicity = 0;
            br.points.push_back(dp);
        }
        if (q.axis_divisor[0] >= 0 && !has_chart2) {
            DivisorPoint dp = make_point(br.chart2, 2, Scalar(0), q.field);
            dp.multiplicity = 0;
            br.points.push_back(dp);
        }

        for (const auto& dp : br.points) {
            TreePoint p;
            p.id = static_cast<int>(tree.points.size());
            p.parent = qid;
            p.step = step.id;
            p.depth = q.depth + 1;
            p.chart = dp.chart;
            p.coordinate = dp.coordinate;
            p.field = dp.exceeds_cap ? nullptr : dp.field;
            p.conjugates = dp.exceeds_cap ? q.conjugates * dp.relative_degree : field_degree(dp.field) / root_degree;
            p.tangent_multiplicity = dp.multiplicity;
            p.label = dp.label;
            p.local = dp.local;
            p.singular = dp.singular;
            p.tangency = dp.tangency;
            if (dp.chart == 1) {
                p.axis_divisor = {E.id, (!dp.exceeds_cap && dp.coordinate.is_zero()) ? q.axis_divisor[1] : -1};
            } else {
                p.axis_divisor = {q.axis_divisor[0], E.id};
            }
            if (dp.exceeds_cap) {
                p.unresolved = true;
                cap_hit = true;
            } else if (p.singular) {
                queue.push_back(p.id);
            }
            step.new_points.push_back(p.id);
            tree.points.push_back(p);
        }
        tree.points[static_cast<std::size_t>(qid)].blown_up = true;
        tree.steps.push_back(step);
    }
    tree.status = depth_hit ? ResolutionStatus::DepthCapHit
                            : (cap_hit ? ResolutionStatus::UnresolvedCluster : ResolutionStatus::Resolved);
    return tree;
}

GraphCheck check_divisor_graph(const ResolutionTree& tree) {
    GraphCheck g;
    std::map<DivisorCopy, int> index;
    for (const auto& D : tree.divisors)
        for (int i = 0; i < D.conjugates; ++i) {
            index[{D.id, i}] = static_cast<int>(g.order.size());
            g.order.push_back({D.id, i});
        }
    const std::size_t n = g.order.size();
    g.nodes = static_cast<int>(n);
    g.matrix.assign(n, std::vector<long>(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        g.matrix[k][k] = tree.divisors[static_cast<std::size_t>(g.order[k].first)].self_intersection;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [e, count] : tree.edges) {
        const auto a = static_cast<std::size_t>(index.at(e.first)), b = static_cast<std::size_t>(index.at(e.second));
        g.matrix[a][b] += count;
        g.matrix[b][a] += count;
        g.edge_count += count;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (n == 0) return g;
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> bfs{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        auto a = bfs.front();
        bfs.pop_front();
        for (auto b : adj[a])
            if (!seen[b]) {
                seen[b] = true;
                ++reached;
                bfs.push_back(b);
            }
    }
    g.connected = reached == n;
    g.tree = g.connected && g.edge_count == g.nodes - 1;
    // -M positive definite iff every elimination pivot is positive
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = -g.matrix[i][j];
    for (std::size_t k = 0; k < n && g.negative_definite; ++k) {
        if (m[k][k] <= 0) {
            g.negative_definite = false;
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return g;
}

CsSum cs_sum_check(const ResolutionTree& tree, int divisor) {
    if (divisor < 0 || divisor >= static_cast<int>(tree.divisors.size()))
        throw Error(ErrorCode::InvalidInput, "no such divisor");
    const DivisorNode& D = tree.divisors[static_cast<std::size_t>(divisor)];
    if (D.dicritical) throw Error(ErrorCode::DicriticalDivisor, "divisor " + std::to_string(divisor) + " is dicritical");
    const int root_degree = field_degree(tree.points[0].field);
    CsSum out;
    out.divisor = divisor;
    out.expected = D.self_intersection;
    Rational total = 0;
    for (int pid : tree.points_on(divisor)) {
        const TreePoint& p = tree.points[static_cast<std::size_t>(pid)];
        if (p.unresolved || (p.singular && (!p.cls || !p.cls->simple())))
            throw Error(ErrorCode::IndexUnavailable, "point " + std::to_string(pid) + " is not a resolved simple point");
        if (!p.singular) continue;
        const int axis = tree.axis_of(pid, divisor);
        const SeparatrixBranch b = make_branch(p.local, axis == 1, {}, tree.options.truncation);
        CsTerm term;
        term.point = pid;
        term.index = cs_index(p.local, b);
        term.trace = trace_in(term.index, p.field) / root_degree;
        total += term.trace;
        out.terms.push_back(term);
    }
    out.sum = total / D.conjugates;
    out.pass = out.sum == out.expected;
    return out;
}

const char* case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2_1: return "Case2.1";
        case CaseLabel::Case2_2_1: return "Case2.2.1";
        case CaseLabel::Case2_2_2: return "Case2.2.2";
    }
    return "?";
}

std::vector<EigenDirection> transverse_separatrix_directions(const ResolutionTree& tree, int point) {
    const TreePoint& p = tree.points[static_cast<std::size_t>(point)];
    if (!p.singular || !p.cls || !p.cls->simple())
        throw Error(ErrorCode::PreconditionViolated, "separatrix directions need a final simple point");
    std::vector<EigenDirection> out;
    for (auto& d : eigen_directions(p.local, tree.options.extension_cap)) {
        if (p.cls->kind == SingularityKind::SimpleB && d.eigenvalue.is_zero()) continue;
        const bool along0 = d.direction[0].is_zero();                  // direction (0, 1)
        const bool along1 = !along0 && d.direction[1].is_zero();       // direction (1, 0)
        auto invariant = [&](int axis) {
            const int D = p.axis_divisor[static_cast<std::size_t>(axis)];
            return D >= 0 && !tree.divisors[static_cast<std::size_t>(D)].dicritical;
        };
        if ((along0 && invariant(0)) || (along1 && invariant(1))) continue;
        out.push_back(d);
    }
    return out;
}

CaseResult classify_case(const ResolutionTree& tree) {
    if (tree.status != ResolutionStatus::Resolved) throw Error(ErrorCode::NotResolved, "the resolution did not finish");
    CaseResult r;
    const TreePoint& root = tree.points[0];
    r.radial = root.cls && root.cls->kind == SingularityKind::NonSimple && root.cls->jet.radial;
    for (int pid : tree.final_singular_points())
        for (auto& d : transverse_separatrix_directions(tree, pid)) r.witnesses.push_back({pid, d});
    for (const auto& p : tree.points)
        if (p.tangency && !p.blown_up) r.tangency_points.push_back(p.id);
    for (const auto& D : tree.divisors)
        if (!D.dicritical) r.invariant_divisors.push_back(D.id);
    for (int pid : tree.final_points()) {
        const auto& ax = tree.points[static_cast<std::size_t>(pid)].axis_divisor;
        if (ax[0] >= 0 && ax[1] >= 0 && tree.divisors[static_cast<std::size_t>(ax[0])].dicritical &&
            tree.divisors[static_cast<std::size_t>(ax[1])].dicritical)
            r.dicritical_corners.push_back(pid);
    }
    if (!r.witnesses.empty()) r.label = CaseLabel::Case1;
    else if (!r.tangency_points.empty()) r.label = CaseLabel::Case2_1;
    else if (!r.invariant_divisors.empty()) r.label = CaseLabel::Case2_2_1;
    else r.label = CaseLabel::Case2_2_2;
    return r;
}

std::pair<UPoly, UPoly> project_to_root(const ResolutionTree& tree, int p, UPoly a, UPoly b, int order) {
    FieldPtr F = join_fields(upoly::field_of(a), upoly::field_of(b));
    while (p > 0) {
        const TreePoint& pt = tree.points[static_cast<std::size_t>(p)];
        if (pt.chart == 1) {
            Scalar v0 = pt.coordinate;
            if (F && !v0.is_rational()) v0 = embed(v0, F);
            b = upoly::mul_trunc(a, upoly::add(b, UPoly{v0}), order);
        } else {
            a = upoly::mul_trunc(a, b, order);
        }
        p = pt.parent;
    }
    return {a, b};
}

namespace {

std::vector<std::pair<int, Scalar>> path_of(const ResolutionTree& tree, int p) {
    std::vector<std::pair<int, Scalar>> path;
    for (; p > 0; p = tree.points[static_cast<std::size_t>(p)].parent)
        path.push_back({tree.points[static_cast<std::size_t>(p)].chart, tree.points[static_cast<std::size_t>(p)].coordinate});
    std::reverse(path.begin(), path.end());
    return path;
}

void attach_series(const ResolutionTree& tree, Candidate& c, const SeparatrixBranch& b) {
    const int N = tree.options.truncation;
    c.series_available = true;
    c.upstairs = b;
    UPoly t{Scalar(0), Scalar(1)};
    UPoly a = b.over_x ? t : b.series, bb = b.over_x ? b.series : t;
    auto [dx, dy] = project_to_root(tree, c.point, a, bb, N + 1);
    c.down_x = dx;
    c.down_y = dy;
    std::size_t m = 0;
    while (m < dx.size() + dy.size()) {
        const Scalar xm = m < dx.size() ? dx[m] : Scalar(0), ym = m < dy.size() ? dy[m] : Scalar(0);
        if (!xm.is_zero() || !ym.is_zero()) {
            c.down_direction = {xm, ym};
            break;
        }
        ++m;
    }
}

EigenDirection leaf_direction(const SeparatrixBranch& b) {
    EigenDirection d;
    const Scalar a1 = b.series.size() > 1 ? b.series[1] : Scalar(0);
    if (b.over_x) d.direction = {Scalar(1), a1};
    else if (a1.is_zero()) d.direction = {Scalar(0), Scalar(1)};
    else d.direction = {Scalar(1), a1.inverse()};
    return d;
}

}  // namespace

std::vector<Candidate> distinguished_candidates(const ResolutionTree& tree) {
    const CaseResult cr = classify_case(tree);
    if (cr.radial) throw Error(ErrorCode::RadialNormalType, "radial singularity: no distinguished separatrix");
    std::vector<Candidate> out;
    const int N = tree.options.truncation;
    auto regular_leaf = [&](int pid, const char* kind) {
        const TreePoint& p = tree.points[static_cast<std::size_t>(pid)];
        Candidate c;
        c.kind = kind;
        c.point = pid;
        c.path = path_of(tree, pid);
        const SeparatrixBranch b = leaf_series_regular(p.local, N);
        c.direction = leaf_direction(b);
        attach_series(tree, c, b);
        out.push_back(c);
    };
    switch (cr.label) {
        case CaseLabel::Case1:
            for (const auto& w : cr.witnesses) {
                const TreePoint& p = tree.points[static_cast<std::size_t>(w.point)];
                Candidate c;
                c.kind = "separatrix";
                c.point = w.point;
                c.path = path_of(tree, w.point);
                c.direction = w.direction;
                FieldPtr F = join_fields(p.field, join_fields(w.direction.direction[0].field(), w.direction.direction[1].field()));
                F = join_fields(F, w.direction.eigenvalue.field());
                try {
                    attach_series(tree, c, separatrix_series(F ? p.local.embed(F) : p.local, w.direction.direction, N));
                } catch (const Error& e) {
                    c.note = std::string("no series: ") + e.what();
                }
                out.push_back(c);
            }
            break;
        case CaseLabel::Case2_1:
            for (int pid : cr.tangency_points) regular_leaf(pid, "tangency-leaf");
            break;
        case CaseLabel::Case2_2_1:
            break;
        case CaseLabel::Case2_2_2:
            for (int pid : cr.dicritical_corners)
                if (!tree.points[static_cast<std::size_t>(pid)].singular) regular_leaf(pid, "corner-leaf");
            break;
    }
    return out;
}

}  // namespace folres
