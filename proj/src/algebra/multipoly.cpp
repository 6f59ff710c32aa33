#include "algebra/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "algebra/error.hpp"

namespace folres {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error(ErrorCode::VariableCountMismatch, "variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, e, Scalar(1));
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Exponent& e, const Scalar& c) {
    if (e.size() != nvars) throw Error(ErrorCode::VariableCountMismatch, "exponent length mismatch");
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw Error(ErrorCode::VariableCountMismatch,
                    "polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) + " variables");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

Scalar MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

int MultiPoly::order() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

bool MultiPoly::is_homogeneous() const { return degree() == order(); }

MultiPoly MultiPoly::homogeneous_part(unsigned k) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == k) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

MultiPoly MultiPoly::truncate(unsigned max_degree) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f(e);
        --f[var];
        r.add_term(f, c * Scalar(static_cast<long>(e[var])));
    }
    return r;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "evaluation point has wrong dimension");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "substitution arity mismatch");
    const std::size_t m = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images) {
        if (im.nvars() != m) throw Error(ErrorCode::VariableCountMismatch, "substitution images disagree on arity");
    }
    // cache powers of each image
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(MultiPoly::constant(m, Scalar(1)));
    MultiPoly result(m);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(m, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
            t *= powers[i][e[i]];
        }
        result += t;
    }
    return result;
}

MultiPoly MultiPoly::translate(const std::vector<Scalar>& base) const {
    if (base.size() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "translation vector has wrong dimension");
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < nvars_; ++i)
        images.push_back(MultiPoly::variable(nvars_, i) + MultiPoly::constant(nvars_, base[i]));
    return substitute(images);
}

MultiPoly MultiPoly::rename(std::size_t nvars, const std::vector<std::size_t>& map) const {
    if (map.size() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "rename map arity mismatch");
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f(nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) f[map[i]] += e[i];
        r.add_term(f, c);
    }
    return r;
}

FieldPtr MultiPoly::field() const {
    FieldPtr f;
    for (const auto& [e, c] : terms_) f = join_fields(f, c.field());
    return f;
}

MultiPoly MultiPoly::embed(const FieldPtr& target) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, folres::embed(c, target));
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_ && !(terms_.empty() && nvars_ == 0)) check_same(o);
    nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_ && !(terms_.empty() && nvars_ == 0)) check_same(o);
    nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = MultiPoly::constant(nvars_, Scalar(1)), base(*this);
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
    if (nvars == 2) return {"x", "y"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::string MultiPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string monomial;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += names.at(i);
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (c.is_rational()) {
            Rational v = c.to_rational();
            const bool neg = v < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            Rational mag = abs(v);
            if (monomial.empty()) {
                os << mag.get_str();
            } else {
                if (mag != 1) os << mag.get_str() << "*";
                os << monomial;
            }
        } else {
            if (!first) os << " + ";
            os << c.to_string();
            if (!monomial.empty()) os << "*" << monomial;
        }
        first = false;
    }
    return os.str();
}

}  // namespace folres
