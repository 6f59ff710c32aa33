#include "forms/forms.hpp"

#include <algorithm>

#include "algebra/error.hpp"

namespace folres {

VectorField::VectorField(std::vector<MultiPoly> comps) : components(std::move(comps)) {
    for (const auto& c : components)
        if (c.nvars() != components.size() && !(c.is_zero() && c.nvars() == 0))
            throw Error(ErrorCode::VariableCountMismatch, "vector field: component count must equal variable count");
    for (auto& c : components)
        if (c.nvars() == 0) c = MultiPoly(components.size());
}

MultiPoly VectorField::apply(const MultiPoly& f) const {
    MultiPoly out(nvars());
    for (std::size_t i = 0; i < nvars(); ++i)
        if (!components[i].is_zero()) out += components[i] * f.derivative(i);
    return out;
}

VectorField VectorField::radial(std::size_t n) {
    std::vector<MultiPoly> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(MultiPoly::variable(n, i));
    return VectorField(std::move(comps));
}

DiffForm DiffForm::function(const MultiPoly& f) {
    DiffForm a(f.nvars(), 0);
    a.add({}, f);
    return a;
}

DiffForm DiffForm::dx(std::size_t nvars, std::size_t i) {
    DiffForm a(nvars, 1);
    a.add({i}, MultiPoly::constant(nvars, Scalar(1)));
    return a;
}

DiffForm DiffForm::one_form(const std::vector<MultiPoly>& coeffs) {
    DiffForm a(coeffs.size(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) a.add({i}, coeffs[i]);
    return a;
}

void DiffForm::add(Index idx, const MultiPoly& c) {
    if (idx.size() != degree_) throw Error(ErrorCode::InternalInvariant, "form index length differs from degree");
    if (c.is_zero()) return;
    if (c.nvars() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "form coefficient has wrong variable count");
    // insertion sort, counting transpositions
    bool odd = false;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return;
            std::swap(idx[j - 1], idx[j]);
            odd = !odd;
        }
    for (auto i : idx)
        if (i >= nvars_) throw Error(ErrorCode::InvalidInput, "form index out of range");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), odd ? -c : c);
        return;
    }
    if (odd) it->second -= c;
    else it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly DiffForm::coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? MultiPoly(nvars_) : it->second;
}

void DiffForm::check_same(const DiffForm& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorCode::VariableCountMismatch, "forms in different variable counts");
    if (o.degree_ != degree_) throw Error(ErrorCode::InvalidInput, "adding forms of different degrees");
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    check_same(o);
    for (const auto& [idx, c] : o.terms_) add(idx, c);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    check_same(o);
    for (const auto& [idx, c] : o.terms_) add(idx, -c);
    return *this;
}

DiffForm DiffForm::operator-() const {
    DiffForm r(*this);
    for (auto& [idx, c] : r.terms_) c = -c;
    return r;
}

DiffForm operator*(const MultiPoly& f, const DiffForm& a) {
    DiffForm r(a.nvars_, a.degree_);
    if (f.is_zero()) return r;
    for (const auto& [idx, c] : a.terms_) r.add(idx, f * c);
    return r;
}

DiffForm operator*(const Scalar& s, const DiffForm& a) {
    DiffForm r(a.nvars_, a.degree_);
    if (s.is_zero()) return r;
    for (const auto& [idx, c] : a.terms_) r.add(idx, c * s);
    return r;
}

bool operator==(const DiffForm& a, const DiffForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::map<DiffForm::Index, Scalar> DiffForm::evaluate(const Point& p) const {
    std::map<Index, Scalar> out;
    for (const auto& [idx, c] : terms_) {
        Scalar v = c.evaluate(p);
        if (!v.is_zero()) out.emplace(idx, v);
    }
    return out;
}

std::string DiffForm::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string basis;
        for (auto i : idx) basis += (basis.empty() ? "d" : "^d") + names[i];
        std::string cs = c.to_string(names);
        if (idx.empty()) out += cs;
        else if (cs == "1") out += basis;
        else out += "(" + cs + ")*" + basis;
    }
    return out;
}

std::string DiffForm::to_string() const { return to_string(default_variable_names(nvars_)); }

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    if (a.nvars() != b.nvars()) throw Error(ErrorCode::VariableCountMismatch, "wedge of forms in different variable counts");
    DiffForm r(a.nvars(), a.degree() + b.degree());
    if (r.degree() > r.nvars()) return r;
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            DiffForm::Index idx(ia);
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(std::move(idx), ca * cb);
        }
    }
    return r;
}

DiffForm exterior_derivative(const DiffForm& a) {
    DiffForm r(a.nvars(), a.degree() + 1);
    if (r.degree() > r.nvars()) return r;
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t j = 0; j < a.nvars(); ++j) {
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
            MultiPoly dc = c.derivative(j);
            if (dc.is_zero()) continue;
            DiffForm::Index ni{j};
            ni.insert(ni.end(), idx.begin(), idx.end());
            r.add(std::move(ni), dc);
        }
    }
    return r;
}

DiffForm interior_product(const VectorField& v, const DiffForm& a) {
    if (v.nvars() != a.nvars()) throw Error(ErrorCode::VariableCountMismatch, "interior product: variable count mismatch");
    if (a.degree() == 0) return DiffForm(a.nvars(), 0);
    DiffForm r(a.nvars(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            const MultiPoly& vi = v[idx[pos]];
            if (vi.is_zero()) continue;
            DiffForm::Index rest;
            for (std::size_t q = 0; q < idx.size(); ++q)
                if (q != pos) rest.push_back(idx[q]);
            MultiPoly term = vi * c;
            r.add(std::move(rest), pos % 2 ? -term : term);
        }
    }
    return r;
}

DiffForm lie_derivative(const VectorField& v, const DiffForm& a) {
    DiffForm r = interior_product(v, exterior_derivative(a));
    if (a.degree() > 0) r += exterior_derivative(interior_product(v, a));
    return r;
}

DiffForm pullback(const DiffForm& a, const std::vector<MultiPoly>& images) {
    if (images.size() != a.nvars()) throw Error(ErrorCode::VariableCountMismatch, "pullback: need one image per variable");
    if (images.empty()) throw Error(ErrorCode::InvalidInput, "pullback: no variables");
    const std::size_t m = images[0].nvars();
    std::vector<DiffForm> dimg;
    for (const auto& f : images) dimg.push_back(exterior_derivative(DiffForm::function(f)));
    DiffForm r(m, a.degree());
    for (const auto& [idx, c] : a.terms()) {
        DiffForm piece = DiffForm::function(c.substitute(images));
        for (auto i : idx) piece = wedge(piece, dimg[i]);
        if (piece.degree() == r.degree()) r += piece;
    }
    return r;
}

DiffForm restrict_to_plane(const DiffForm& a, const Point& base, const Point& u, const Point& v) {
    const std::size_t n = a.nvars();
    if (base.size() != n || u.size() != n || v.size() != n)
        throw Error(ErrorCode::VariableCountMismatch, "restrict_to_plane: point dimension mismatch");
    bool independent = false;
    for (std::size_t i = 0; i < n && !independent; ++i)
        for (std::size_t j = i + 1; j < n && !independent; ++j)
            if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) independent = true;
    if (!independent) throw Error(ErrorCode::DegenerateFrame, "frame vectors are linearly dependent");
    const MultiPoly s = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(MultiPoly::constant(2, base[i]) + s * u[i] + t * v[i]);
    return pullback(a, images);
}

std::optional<int> homogeneity_degree(const DiffForm& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroForm, "homogeneity degree of the zero form");
    std::optional<int> d;
    for (const auto& [idx, c] : a.terms()) {
        if (!c.is_homogeneous()) return std::nullopt;
        if (d && *d != c.degree()) return std::nullopt;
        d = c.degree();
    }
    return d;
}

}  // namespace folres
