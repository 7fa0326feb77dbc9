#include "pdeform/groebner.hpp"

#include <algorithm>

namespace pdeform {

namespace {

Poly make_monic(const Poly& p, const WeightSystem& ws) {
    if (p.is_zero()) return p;
    const Rational& lc = *p.coeff(p.leading_monomial(ws));
    Rational inv = 1 / lc;
    inv.canonicalize();
    return p.scaled(inv);
}

Poly s_polynomial(const Poly& f, const Poly& g, const WeightSystem& ws) {
    const Monomial &lf = f.leading_monomial(ws), &lg = g.leading_monomial(ws);
    Monomial l = Monomial::lcm(lf, lg);
    Rational cf = 1 / *f.coeff(lf), cg = 1 / *g.coeff(lg);
    cf.canonicalize();
    cg.canonicalize();
    return f.times_monomial(lf.divide_into(l), cf) - g.times_monomial(lg.divide_into(l), cg);
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors, const WeightSystem& ws) {
    Poly rem(p.arity());
    Poly work = p;
    while (!work.is_zero()) {
        // Reduce the current leading term if possible, else move it to the
        // remainder; repeating this fully reduces every term.
        const Monomial lm = work.leading_monomial(ws);
        const Rational lc = *work.coeff(lm);
        bool reduced = false;
        for (const Poly& d : divisors) {
            if (d.is_zero()) continue;
            const Monomial& ld = d.leading_monomial(ws);
            if (!ld.divides(lm)) continue;
            Rational factor = lc / *d.coeff(ld);
            factor.canonicalize();
            work -= d.times_monomial(ld.divide_into(lm), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            Poly t = Poly::monomial(lm, lc, p.arity());
            work -= t;
        }
    }
    return rem;
}

std::vector<Poly> groebner_basis(std::vector<Poly> generators, const WeightSystem& ws) {
    std::vector<Poly> basis;
    for (auto& g : generators)
        if (!g.is_zero()) basis.push_back(make_monic(g, ws));
    if (basis.empty()) return basis;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial &li = basis[i].leading_monomial(ws), &lj = basis[j].leading_monomial(ws);
        // Buchberger's first criterion: coprime leading monomials reduce to 0.
        if (Monomial::lcm(li, lj) == li.times(lj)) continue;
        Poly s = normal_form(s_polynomial(basis[i], basis[j], ws), basis, ws);
        if (s.is_zero()) continue;
        basis.push_back(make_monic(s, ws));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial(ws);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial(ws);
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Reduce: each tail fully reduced against the others.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_monic(normal_form(minimal[i], others, ws), ws));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return monomial_cmp(a.leading_monomial(ws), b.leading_monomial(ws), ws) < 0;
    });
    return reduced;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly>& basis,
                                                        const WeightSystem& ws, int arity) {
    std::vector<Monomial> leading;
    for (const auto& g : basis)
        if (!g.is_zero()) leading.push_back(g.leading_monomial(ws));

    // The whole ring: quotient is zero-dimensional with no monomials at all.
    for (const auto& m : leading)
        if (m.is_one()) return std::vector<Monomial>{};

    // Finiteness: every variable needs a pure power among the leading terms.
    std::array<std::uint32_t, 3> bound{0, 0, 0};
    for (int v = 0; v < arity; ++v) {
        bool found = false;
        for (const auto& m : leading) {
            bool pure = m.e[std::size_t(v)] > 0;
            for (int u = 0; u < 3 && pure; ++u)
                if (u != v && m.e[std::size_t(u)] != 0) pure = false;
            if (pure) {
                bound[std::size_t(v)] = m.e[std::size_t(v)];
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }

    std::vector<Monomial> standard;
    Monomial m;
    for (std::uint32_t a = 0; a < std::max(bound[0], 1u); ++a)
        for (std::uint32_t b = 0; b < std::max(bound[1], 1u); ++b)
            for (std::uint32_t c = 0; c < (arity == 3 ? std::max(bound[2], 1u) : 1u); ++c) {
                m.e = {a, b, c};
                bool divisible = false;
                for (const auto& l : leading)
                    if (l.divides(m)) {
                        divisible = true;
                        break;
                    }
                if (!divisible) standard.push_back(m);
            }
    std::sort(standard.begin(), standard.end(), [&](const Monomial& a, const Monomial& b) {
        long da = ws.degree_of(a), db = ws.degree_of(b);
        if (da != db) return da < db;
        return grevlex_cmp(a, b) > 0;
    });
    return standard;
}

}  // namespace pdeform
