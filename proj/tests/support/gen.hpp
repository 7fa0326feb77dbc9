#pragma once

#include <random>

#include "pdeform/deformation.hpp"
#include "pdeform/parse.hpp"

namespace pdeform::testgen {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_abs_num = 6, long max_den = 3) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long max_abs_num = 6, long max_den = 3) {
    for (;;) {
        Rational q = random_rational(rng, max_abs_num, max_den);
        if (q != 0) return q;
    }
}

inline Poly random_poly(Rng& rng, int arity = 3, unsigned max_degree = 3, int terms = 4) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    Poly p(arity);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        unsigned budget = deg(rng);
        for (int v = 0; v < arity; ++v) {
            std::uniform_int_distribution<unsigned> part(0, budget);
            unsigned e = part(rng);
            m.e[static_cast<std::size_t>(v)] = e;
            budget -= e;
        }
        p += Poly::monomial(m, random_rational(rng), arity);
    }
    return p;
}

inline Poly random_weight_homogeneous(Rng& rng, const WeightSystem& ws, long degree,
                                      int terms = 3) {
    auto mons = monomials_of_weighted_degree(ws, degree);
    Poly p(ws.arity == 2 ? 2 : 3);
    if (mons.empty()) return p;
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int t = 0; t < terms; ++t)
        p += Poly::monomial(mons[pick(rng)], random_rational(rng), p.arity());
    return p;
}

inline Vec3 random_vec3(Rng& rng, unsigned max_degree = 3, int terms = 3) {
    return {random_poly(rng, 3, max_degree, terms), random_poly(rng, 3, max_degree, terms),
            random_poly(rng, 3, max_degree, terms)};
}

inline MultiDer random_multider(Rng& rng, int degree, unsigned max_degree = 3, int terms = 3) {
    if (degree == 0 || degree == 3)
        return MultiDer::scalar(degree, random_poly(rng, 3, max_degree, terms));
    return MultiDer::vector(degree, random_vec3(rng, max_degree, terms));
}

// Random finite-support table over the admissible index ranges.
inline CoeffTable random_coeff_table(Rng& rng, const MilnorData& md, unsigned order,
                                     unsigned max_phi_power = 2, int entries_per_level = 2) {
    CoeffTable t;
    std::uniform_int_distribution<unsigned> lpick(0, max_phi_power);
    for (unsigned k = 1; k <= order; ++k) {
        if (!md.e_phi.empty()) {
            std::uniform_int_distribution<std::size_t> jpick(0, md.e_phi.size() - 1);
            for (int s = 0; s < entries_per_level; ++s)
                t.set_c(k, lpick(rng), md.e_phi[jpick(rng)], random_rational(rng));
        }
        if (md.mu > 1) {
            std::uniform_int_distribution<std::size_t> rpick(1, md.mu - 1);
            for (int s = 0; s < entries_per_level; ++s)
                t.set_cbar(k, rpick(rng), random_rational(rng));
        }
    }
    return t;
}

// Gauge entries with monomials of weighted degree <= max_weight per component.
inline GaugeElement random_gauge(Rng& rng, const WeightSystem& ws, unsigned order,
                                 long max_weight = 6, int terms = 2) {
    GaugeElement g = GaugeElement::zero(order);
    std::uniform_int_distribution<long> dpick(0, max_weight);
    for (unsigned k = 1; k <= order; ++k) {
        Vec3 v;
        for (int i = 0; i < 3; ++i) {
            for (int t = 0; t < terms; ++t) {
                auto mons = monomials_of_weighted_degree(ws, dpick(rng));
                if (mons.empty()) continue;
                std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
                v[i] += Poly::monomial(mons[pick(rng)], random_rational(rng));
            }
        }
        g.xi[k - 1] = MultiDer::vector(1, v);
    }
    return g;
}

}  // namespace pdeform::testgen
