#pragma once

// Independent oracles kept deliberately apart from the library code paths:
// the Schouten bracket straight from the shuffle-sum definition, and the
// Milnor number by dense degreewise linear algebra over the monomials.

#include <vector>

#include "pdeform/multivector.hpp"

namespace pdeform::oracle {

// Value of a multiderivation on polynomial arguments via the identifications.
inline Poly eval_multider(const MultiDer& p, const std::vector<Poly>& args) {
    switch (p.degree()) {
        case 0:
            if (!args.empty()) throw PreconditionError("degree-0 takes no arguments");
            return p.poly_body();
        case 1:
            return dot(p.vec_body(), grad(args.at(0)));
        case 2:
            return dot(p.vec_body(), cross(grad(args.at(0)), grad(args.at(1))));
        default:
            return p.poly_body() * dot(grad(args.at(0)), cross(grad(args.at(1)), grad(args.at(2))));
    }
}

// (k, l)-shuffles of {0..k+l-1} with their signs.
inline void shuffles(int k, int l, std::vector<std::pair<std::vector<int>, int>>& out) {
    const int n = k + l;
    std::vector<int> mask(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) mask[static_cast<std::size_t>(i)] = 1;
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<int> first, second;
        for (int i = 0; i < n; ++i)
            (mask[static_cast<std::size_t>(i)] ? first : second).push_back(i);
        // signature of the permutation (first..., second...)
        std::vector<int> perm = first;
        perm.insert(perm.end(), second.begin(), second.end());
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::vector<int> order = first;
        order.insert(order.end(), second.begin(), second.end());
        out.emplace_back(order, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(mask.begin(), mask.end()));
}

// [P,Q]_S[args] by the shuffle-sum definition; args has p + q - 1 entries.
inline Poly schouten_eval(const MultiDer& P, const MultiDer& Q, const std::vector<Poly>& args) {
    const int p = P.degree(), q = Q.degree();
    Poly acc(3);
    if (q == 0) {
        // Second sum is empty; the single shuffle plugs Q in front of P.
        std::vector<Poly> inner{Q.poly_body()};
        inner.insert(inner.end(), args.begin(), args.end());
        return eval_multider(P, inner);
    }
    if (p == 0) {
        std::vector<Poly> inner{P.poly_body()};
        inner.insert(inner.end(), args.begin(), args.end());
        Poly v = eval_multider(Q, inner);
        return (q - 1) % 2 == 0 ? -v : v;  // -(-1)^{(p-1)(q-1)} with p = 0
    }
    std::vector<std::pair<std::vector<int>, int>> sh;
    shuffles(q, p - 1, sh);
    for (const auto& [order, sign] : sh) {
        std::vector<Poly> qargs, rest;
        for (int i = 0; i < q; ++i) qargs.push_back(args.at(std::size_t(order[std::size_t(i)])));
        for (int i = q; i < q + p - 1; ++i)
            rest.push_back(args.at(std::size_t(order[std::size_t(i)])));
        std::vector<Poly> pargs{eval_multider(Q, qargs)};
        pargs.insert(pargs.end(), rest.begin(), rest.end());
        Poly v = eval_multider(P, pargs);
        acc += sign > 0 ? v : -v;
    }
    sh.clear();
    shuffles(p, q - 1, sh);
    const int swap_sign = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;  // -(-1)^{(p-1)(q-1)}
    for (const auto& [order, sign] : sh) {
        std::vector<Poly> pargs, rest;
        for (int i = 0; i < p; ++i) pargs.push_back(args.at(std::size_t(order[std::size_t(i)])));
        for (int i = p; i < p + q - 1; ++i)
            rest.push_back(args.at(std::size_t(order[std::size_t(i)])));
        std::vector<Poly> qargs{eval_multider(P, pargs)};
        qargs.insert(qargs.end(), rest.begin(), rest.end());
        Poly v = eval_multider(Q, qargs);
        acc += (sign * swap_sign) > 0 ? v : -v;
    }
    return acc;
}

// Shuffle-sum bracket evaluated on coordinate tuples and repackaged.
inline MultiDer schouten_shuffle(const MultiDer& P, const MultiDer& Q) {
    const int r = P.degree() + Q.degree() - 1;
    const Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    switch (r) {
        case 0:
            return MultiDer::scalar(0, schouten_eval(P, Q, {}));
        case 1:
            return MultiDer::vector(1, {schouten_eval(P, Q, {x}), schouten_eval(P, Q, {y}),
                                        schouten_eval(P, Q, {z})});
        case 2:
            return MultiDer::vector(2, {schouten_eval(P, Q, {y, z}), schouten_eval(P, Q, {z, x}),
                                        schouten_eval(P, Q, {x, y})});
        case 3:
            return MultiDer::scalar(3, schouten_eval(P, Q, {x, y, z}));
        default:
            throw PreconditionError("bracket degree out of range");
    }
}

// Milnor number by dense linear algebra: in each weighted degree, the
// quotient dimension is #monomials minus the rank of the multiples of the
// partials. Stops after a zero run wide enough to force all higher degrees
// to vanish. Self-contained rational elimination, no Groebner involved.
inline std::size_t milnor_mu_dense(const Poly& phi, const WeightSystem& ws,
                                   long hard_degree_limit = 400) {
    std::array<Poly, 3> parts{phi.partial(0), phi.partial(1), phi.partial(2)};
    long wphi = 0;
    if (!phi.is_weight_homogeneous(ws, &wphi))
        throw PreconditionError("oracle needs weight homogeneous phi");
    long zero_run_needed = *std::max_element(ws.w.begin(), ws.w.begin() + 3);
    std::size_t mu = 0;
    long zero_run = 0;
    for (long d = 0; d <= hard_degree_limit; ++d) {
        auto rows = monomials_of_weighted_degree(ws, d);
        if (rows.empty()) continue;
        std::map<Monomial, std::size_t> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
        std::vector<std::vector<Rational>> cols;
        for (int g = 0; g < 3; ++g) {
            if (parts[std::size_t(g)].is_zero()) continue;
            for (const auto& m : monomials_of_weighted_degree(ws, d - (wphi - ws.w[g]))) {
                std::vector<Rational> col(rows.size(), Rational(0));
                Poly prod = parts[std::size_t(g)].times_monomial(m, Rational(1));
                for (const auto& [mon, c] : prod.terms()) col[row_of.at(mon)] = c;
                cols.push_back(std::move(col));
            }
        }
        // rank by plain rational elimination: reduce each column against the
        // pivots collected so far
        std::size_t rank = 0;
        std::vector<std::pair<std::size_t, std::vector<Rational>>> pivots;
        for (auto& col : cols) {
            std::vector<Rational> v = col;
            for (const auto& [pr, pv] : pivots) {
                if (v[pr] == 0) continue;
                Rational f = v[pr] / pv[pr];
                f.canonicalize();
                for (std::size_t r = 0; r < v.size(); ++r) {
                    Rational t = pv[r] * f;
                    v[r] -= t;
                }
            }
            std::size_t lead = v.size();
            for (std::size_t r = 0; r < v.size(); ++r)
                if (v[r] != 0) {
                    lead = r;
                    break;
                }
            if (lead != v.size()) {
                pivots.emplace_back(lead, std::move(v));
                ++rank;
            }
        }
        std::size_t dim = rows.size() - rank;
        mu += dim;
        if (dim == 0 && d > 0) {
            if (++zero_run >= zero_run_needed) return mu;
        } else {
            zero_run = 0;
        }
    }
    throw PreconditionError("oracle degree limit exceeded; quotient looks infinite");
}

}  // namespace pdeform::oracle
