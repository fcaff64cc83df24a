#include "germcq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace germcq {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int a : e) d += a;
    return d;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    return monomial(nvars, i, 1, 1);
}

Polynomial Polynomial::monomial(int nvars, int i, int e, const Rat& c) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    Polynomial p(nvars);
    Exponents ex(nvars, 0);
    ex[i - 1] = e;
    p.add_term(ex, c);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

const Rat& Polynomial::coeff(const Exponents& e) const {
    static const Rat zero(0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial operator*(const Rat& c, const Polynomial& p) {
    return p * c;
}

Rat Polynomial::eval(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("point dimension mismatch");
    Rat s = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        }
        s += t;
    }
    return s;
}

double Polynomial::eval_double(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double t = static_cast<double>(c);
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        }
        s += t;
    }
    return s;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 1 || i > nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Exponents d = e;
        d[i - 1] -= 1;
        r.add_term(d, c * e[i - 1]);
    }
    return r;
}

RationalVector Polynomial::gradient_at(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("point dimension mismatch");
    RationalVector g(nvars_, Rat(0));
    for (int i = 1; i <= nvars_; ++i) g[i - 1] = partial(i).eval(x);
    return g;
}

std::vector<double> Polynomial::gradient_double(const std::vector<double>& x) const {
    std::vector<double> g(nvars_, 0.0);
    for (int i = 1; i <= nvars_; ++i) g[i - 1] = partial(i).eval_double(x);
    return g;
}

Polynomial Polynomial::truncate_jet(int k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) <= k) r.terms_.emplace(e, c);
    }
    return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    }
    return r;
}

Rat Polynomial::constant_term() const {
    return coeff(Exponents(nvars_, 0));
}

Rat Polynomial::linear_coeff(int i) const {
    Exponents e(nvars_, 0);
    e[i - 1] = 1;
    return coeff(e);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& s, int truncate_to) const {
    if (static_cast<int>(s.size()) != nvars_)
        throw std::invalid_argument("substitution arity mismatch");
    int m = nvars_ == 0 ? 0 : s.front().nvars();
    for (const auto& q : s)
        if (q.nvars() != m) throw std::invalid_argument("substitution nvars mismatch");
    Polynomial acc(m);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(m, c);
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[i]; ++k) {
                t = t * s[i];
                if (truncate_to >= 0) t = t.truncate_jet(truncate_to);
            }
        }
        acc = acc + t;
    }
    if (truncate_to >= 0) acc = acc.truncate_jet(truncate_to);
    return acc;
}

Polynomial Polynomial::drop_variable(int i) const {
    if (i < 1 || i > nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] != 0)
            throw std::invalid_argument("polynomial still involves dropped variable");
        Exponents d;
        d.reserve(nvars_ - 1);
        for (int j = 0; j < nvars_; ++j)
            if (j != i - 1) d.push_back(e[j]);
        r.add_term(d, c);
    }
    return r;
}

Polynomial Polynomial::extend_to(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("cannot shrink variable count");
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d.resize(new_nvars, 0);
        r.add_term(d, c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || a != 1) {
            os << rat_to_string(a);
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in polynomial text");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    Polynomial result(nvars);
    Lexer lx(text);
    if (lx.eof()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (!lx.eof()) {
        int sgn = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            sgn = lx.get() == '-' ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;
        Rat coef = 1;
        bool saw_coef = false;
        Exponents e(nvars, 0);
        bool saw_factor = false;
        while (true) {
            if (lx.eof()) break;
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (saw_coef || saw_factor)
                    throw std::invalid_argument("unexpected number in term");
                std::string num = lx.integer();
                std::string den = "1";
                if (!lx.eof() && lx.peek() == '/') {
                    lx.get();
                    den = lx.integer();
                }
                coef = Rat(Int(num), Int(den));
                saw_coef = true;
            } else if (c == 'x' || c == 'X') {
                lx.get();
                int idx = std::stoi(lx.integer());
                if (idx < 1 || idx > nvars)
                    throw std::invalid_argument("variable index out of range in text");
                int exp = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    lx.get();
                    exp = std::stoi(lx.integer());
                    if (exp < 0) throw std::invalid_argument("negative exponent");
                }
                e[idx - 1] += exp;
                saw_factor = true;
            } else {
                break;
            }
            if (!lx.eof() && lx.peek() == '*') {
                lx.get();
                continue;
            }
            break;
        }
        if (!saw_coef && !saw_factor)
            throw std::invalid_argument("empty term in polynomial text");
        result.add_term(e, coef * sgn);
    }
    return result;
}

}  // namespace germcq
