#include "io/json_io.hpp"

#include "algebra/error.hpp"
#include "io/parse.hpp"

namespace folres {

namespace {

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw Error(ErrorCode::InvalidInput, "exact values are integers or \"a/b\" strings");
    const auto s = j.get<std::string>();
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "not a rational: '" + s + "'");
    if (r.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

Json qpoly_to_json(const QPoly& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(c.get_str());
    return a;
}

QPoly qpoly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "coefficient lists are arrays");
    QPoly p;
    for (const auto& c : j) p.push_back(rational_from(c));
    qpoly::trim(p);
    return p;
}

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return s.to_rational().get_str();
    return Json{{"coeffs", qpoly_to_json(s.coeffs())}, {"minpoly", qpoly_to_json(s.field()->minpoly())}};
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("coeffs") || !j.contains("minpoly"))
            throw Error(ErrorCode::InvalidInput, "extension elements need coeffs and minpoly");
        const QPoly m = qpoly_from_json(j.at("minpoly"));
        if (qpoly::degree(m) < 1 || qpoly::lead(m) != 1) throw Error(ErrorCode::InvalidInput, "minpoly must be monic of positive degree");
        return Scalar(NumberField::make(m), qpoly_from_json(j.at("coeffs")));
    }
    return Scalar(rational_from(j));
}

Json poly_to_json(const MultiPoly& p, const std::vector<std::string>& names) {
    if (!p.field()) return p.to_string(names);
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", scalar_to_json(c)}});
    return Json{{"terms", terms}};
}

Json upoly_to_json(const std::vector<Scalar>& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(scalar_to_json(c));
    return a;
}

Json point_to_json(const Point& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(scalar_to_json(c));
    return a;
}

Point point_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "points are arrays of exact values");
    if (dim && j.size() != dim)
        throw Error(ErrorCode::VariableCountMismatch, "point has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(dim));
    Point p;
    for (const auto& c : j) p.push_back(scalar_from_json(c));
    return p;
}

Json form_to_json(const DiffForm& f, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (const auto& [idx, c] : f.terms()) {
        Json index = Json::array();
        for (auto i : idx) index.push_back(i + 1);
        terms.push_back({{"index", index}, {"coeff", poly_to_json(c, names)}});
    }
    return Json{{"degree", f.degree()}, {"terms", terms}, {"text", f.to_string(names)}};
}

DiffForm form_from_json(const Json& j, const std::vector<std::string>& names) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
        throw Error(ErrorCode::InvalidInput, "forms look like {\"degree\": k, \"terms\": [...]}");
    const std::size_t n = names.size();
    const long k = j.at("degree").get<long>();
    if (k < 0 || static_cast<std::size_t>(k) > n) throw Error(ErrorCode::InvalidInput, "form degree out of range");
    DiffForm f(n, static_cast<std::size_t>(k));
    for (const auto& t : j.at("terms")) {
        DiffForm::Index idx;
        for (const auto& i : t.at("index")) {
            const long v = i.get<long>();
            if (v < 1 || static_cast<std::size_t>(v) > n) throw Error(ErrorCode::InvalidInput, "form index out of range (indices are 1-based)");
            idx.push_back(static_cast<std::size_t>(v - 1));
        }
        if (idx.size() != f.degree()) throw Error(ErrorCode::InvalidInput, "term index length differs from the form degree");
        f.add(idx, parse_expression(t.at("coeff").get<std::string>(), names));
    }
    return f;
}

}  // namespace folres
