#pragma once

#include <numeric>
#include <vector>

#include "pdeform/errors.hpp"
#include "pdeform/monomial.hpp"

namespace pdeform {

// Positive integer weights for the variables, gcd 1.
struct WeightSystem {
    int arity = 3;
    std::array<long, 3> w{1, 1, 1};

    WeightSystem() = default;
    WeightSystem(long w1, long w2) : arity(2), w{w1, w2, 0} { validate(); }
    WeightSystem(long w1, long w2, long w3) : arity(3), w{w1, w2, w3} { validate(); }

    static WeightSystem from_vector(const std::vector<long>& v) {
        if (v.size() == 2) return WeightSystem(v[0], v[1]);
        if (v.size() == 3) return WeightSystem(v[0], v[1], v[2]);
        throw PreconditionError("weight system needs 2 or 3 weights");
    }

    long weight_sum() const {
        long s = 0;
        for (int i = 0; i < arity; ++i) s += w[i];
        return s;
    }

    long degree_of(const Monomial& m) const {
        long d = 0;
        for (int i = 0; i < arity; ++i) d += w[i] * long(m.e[static_cast<std::size_t>(i)]);
        return d;
    }

    bool operator==(const WeightSystem& o) const { return arity == o.arity && w == o.w; }

  private:
    void validate() const {
        long g = 0;
        for (int i = 0; i < arity; ++i) {
            if (w[i] <= 0) throw PreconditionError("weights must be positive");
            g = std::gcd(g, w[i]);
        }
        if (g != 1) throw PreconditionError("weights must not have a common divisor");
    }
};

// Graded reverse lexicographic comparison with x > y > z: total degree first,
// ties broken by the last nonzero exponent difference (negative means larger).
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 2; i >= 0; --i) {
        auto ai = a.e[static_cast<std::size_t>(i)], bi = b.e[static_cast<std::size_t>(i)];
        if (ai != bi) return ai > bi ? -1 : 1;
    }
    return 0;
}

// The monomial order used throughout: weighted degree, ties by grevlex.
inline int monomial_cmp(const Monomial& a, const Monomial& b, const WeightSystem& ws) {
    long da = ws.degree_of(a), db = ws.degree_of(b);
    if (da != db) return da < db ? -1 : 1;
    return grevlex_cmp(a, b);
}

// Plain lexicographic with x > y > z; used as the tie-break when printing.
inline int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < 3; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// All monomials of the given weighted degree, largest first in the monomial
// order. Deterministic; the count is finite because weights are positive.
std::vector<Monomial> monomials_of_weighted_degree(const WeightSystem& ws, long degree);

}  // namespace pdeform
