#pragma once

#include "germcq/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace germcq {

using Exponents = std::vector<int>;

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically. Keeping term maps in this order makes
/// polynomial equality plain structural equality.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/// Sparse multivariate polynomial over exact rationals. Zero coefficients are
/// never stored; every exponent vector has length `nvars`.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rat, GradedLexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("nvars must be nonnegative");
    }

    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int i);  // x_i, 1-based
    /// c * x_i^e
    static Polynomial monomial(int nvars, int i, int e, const Rat& c = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    const Rat& coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rat eval(const RationalVector& x) const;
    double eval_double(const std::vector<double>& x) const;

    Polynomial partial(int i) const;  // d/dx_i, 1-based
    RationalVector gradient_at(const RationalVector& x) const;
    std::vector<double> gradient_double(const std::vector<double>& x) const;

    /// Terms of total degree <= k.
    Polynomial truncate_jet(int k) const;
    /// Terms of total degree exactly r.
    Polynomial homogeneous_part(int r) const;

    Rat constant_term() const;
    /// Coefficient of x_i (1-based) in the degree-1 part.
    Rat linear_coeff(int i) const;

    /// Substitute x_i -> s[i-1] for every variable. All s must share a common
    /// nvars, which becomes the result's. A truncation order may be supplied
    /// to keep series work bounded; -1 means no truncation.
    Polynomial substitute(const std::vector<Polynomial>& s, int truncate_to = -1) const;

    /// Remove variable `i` (1-based); every term must have exponent 0 there.
    Polynomial drop_variable(int i) const;
    /// Reinterpret in a larger variable count (appends zero exponents).
    Polynomial extend_to(int new_nvars) const;

    std::string to_string() const;
    /// Parses the text form: terms `c * x1^a1 * ... * xn^an` joined by +/-,
    /// rational coefficients written as `p/q`.
    static Polynomial parse(const std::string& text, int nvars);

  private:
    int nvars_;
    TermMap terms_;
};

Polynomial operator*(const Rat& c, const Polynomial& p);

}  // namespace germcq
