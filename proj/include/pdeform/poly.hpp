#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdeform/monomial.hpp"
#include "pdeform/rational.hpp"
#include "pdeform/weights.hpp"

namespace pdeform {

// Sparse polynomial over Q in 2 or 3 variables. Canonical form: no stored
// zero coefficients; equality is term-map equality. All values are immutable
// in spirit: every operation returns a fresh polynomial.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Poly(int arity = 3) : arity_(arity) { check_arity(arity); }

    static Poly zero(int arity = 3) { return Poly(arity); }
    static Poly constant(const Rational& c, int arity = 3);
    static Poly variable(int index, int arity = 3);
    static Poly monomial(const Monomial& m, const Rational& c, int arity = 3);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Rational* coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Formal partial derivative with respect to variable index 0, 1 or 2.
    Poly partial(int var) const;

    // Weighted degree of the largest term; nullopt for the zero polynomial.
    std::optional<long> weighted_degree(const WeightSystem& ws) const;
    bool is_weight_homogeneous(const WeightSystem& ws, long* degree_out = nullptr) const;

    // Terms of one weighted degree, as a polynomial.
    Poly graded_part(const WeightSystem& ws, long degree) const;
    std::vector<long> occurring_weighted_degrees(const WeightSystem& ws) const;

    // Largest monomial under (weighted degree, grevlex); error on zero input.
    const Monomial& leading_monomial(const WeightSystem& ws) const;

    // Swap the roles of the variables: result(x_i) = this(x_{perm[i]}).
    Poly permuted(const std::array<int, 3>& perm) const;

    // Canonical text form: terms by ascending weighted degree, ties by
    // descending lex with x > y > z. Parsing the result reproduces the value.
    std::string to_string(const WeightSystem& ws) const;
    std::string to_string() const;

  private:
    static void check_arity(int arity) {
        if (arity != 2 && arity != 3) throw PreconditionError("arity must be 2 or 3");
    }
    void check_same_arity(const Poly& o) const {
        if (arity_ != o.arity_) throw PreconditionError("polynomial arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

// Euler identity: grad(p) . e_w == deg_w(p) * p for weight homogeneous p.
// Errors on inhomogeneous input.
bool euler_check(const Poly& p, const WeightSystem& ws);

}  // namespace pdeform
