#include "io/parse.hpp"

#include <cctype>

#include "algebra/error.hpp"

namespace folres {

namespace {

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars) : s_(src), vars_(vars) {}

    MultiPoly run() {
        skip();
        MultiPoly p = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        std::string d = s_.substr(start, pos_ - start);
        skip();
        return d;
    }

    MultiPoly expr() {
        // a leading sign is accepted so printed polynomials parse back
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (eat('^')) {
            std::string e = digits();
            if (e.size() > 4) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    MultiPoly atom() {
        const std::size_t n = vars_.size();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            eat('(');
            MultiPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den(1);
            if (eat('/')) {
                den = Integer(digits());
                if (den == 0) fail("zero denominator");
            }
            Rational v(num, den);
            v.canonicalize();
            return MultiPoly::constant(n, Scalar(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            skip();
            for (std::size_t i = 0; i < n; ++i)
                if (vars_[i] == name) return MultiPoly::variable(n, i);
            throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "' at position " + std::to_string(start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expression(const std::string& src, const std::vector<std::string>& variables) {
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (variables[i] == variables[j]) throw Error(ErrorCode::InvalidInput, "duplicate variable '" + variables[i] + "'");
    return Parser(src, variables).run();
}

const std::vector<std::string>& plane_variables() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

std::pair<MultiPoly, MultiPoly> parse_field_spec(const std::string& spec) {
    MultiPoly P(2), Q(2);
    bool hasP = false, hasQ = false;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        const std::string part = spec.substr(start, comma - start);
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "field spec entries look like P=...");
        std::string key;
        for (char ch : part.substr(0, eq))
            if (!std::isspace(static_cast<unsigned char>(ch))) key += ch;
        const MultiPoly value = parse_expression(part.substr(eq + 1), plane_variables());
        if (key == "P") {
            P = value;
            hasP = true;
        } else if (key == "Q") {
            Q = value;
            hasQ = true;
        } else {
            throw Error(ErrorCode::InvalidInput, "field spec keys are P and Q, got '" + key + "'");
        }
        start = comma + 1;
    }
    if (!hasP || !hasQ) throw Error(ErrorCode::InvalidInput, "field spec needs both P and Q");
    return {P, Q};
}

}  // namespace folres
