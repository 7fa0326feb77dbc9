#include "pdeform/deformation.hpp"

namespace pdeform {

void CoeffTable::set_c(unsigned k, unsigned l, std::size_t i, const Rational& value) {
    if (k == 0) throw IndexError("coefficient level k must be >= 1");
    if (value == 0)
        c.erase(CKey{k, l, i});
    else
        c[CKey{k, l, i}] = value;
}

void CoeffTable::set_cbar(unsigned k, std::size_t r, const Rational& value) {
    if (k == 0) throw IndexError("coefficient level k must be >= 1");
    if (value == 0)
        cbar.erase(CbarKey{k, r});
    else
        cbar[CbarKey{k, r}] = value;
}

void CoeffTable::validate(const MilnorData& md) const {
    for (const auto& [key, value] : c) {
        auto [k, l, i] = key;
        if (k == 0) throw IndexError("coefficient level k must be >= 1");
        if (!md.in_e_phi(i))
            throw IndexError("index " + std::to_string(i) + " is not in E_phi");
    }
    for (const auto& [key, value] : cbar) {
        auto [k, r] = key;
        if (k == 0) throw IndexError("coefficient level k must be >= 1");
        if (r == 0 || r >= md.mu)
            throw IndexError("index " + std::to_string(r) + " out of 1..mu-1");
    }
}

unsigned CoeffTable::max_phi_power() const {
    unsigned m = 0;
    for (const auto& [key, value] : c) m = std::max(m, std::get<1>(key));
    return m;
}

FormalDeformation::FormalDeformation(PhiContextPtr ctx, std::vector<MultiDer> terms,
                                     std::optional<CoeffTable> provenance)
    : ctx_(std::move(ctx)),
      pi0_(poisson_from_poly(ctx_->phi())),
      terms_(std::move(terms)),
      provenance_(std::move(provenance)) {
    for (const auto& t : terms_)
        if (t.degree() != 2) throw PreconditionError("deformation terms must be bivectors");
}

const MultiDer& FormalDeformation::term(unsigned n) const {
    if (n == 0) return pi0_;
    if (n > terms_.size()) throw IndexError("deformation order out of range");
    return terms_[n - 1];
}

bool FormalDeformation::operator==(const FormalDeformation& o) const {
    if (order() != o.order()) return false;
    if (!(ctx_->phi() == o.ctx_->phi()) || !(ctx_->weights() == o.ctx_->weights())) return false;
    for (unsigned n = 1; n <= order(); ++n)
        if (!(term(n) == o.term(n))) return false;
    return true;
}

GaugeElement GaugeElement::zero(unsigned order) {
    GaugeElement g;
    g.xi.assign(order, MultiDer::zero(1));
    return g;
}

const MultiDer& GaugeElement::at_order(unsigned k) const {
    if (k == 0 || k > xi.size()) throw IndexError("gauge order out of range");
    return xi[k - 1];
}

GaugeElement GaugeElement::negated() const {
    GaugeElement g;
    for (const auto& v : xi) g.xi.push_back(-v);
    return g;
}

FormalDeformation build_pi(const CoeffTable& coeffs, unsigned order, PhiContextPtr ctx) {
    const MilnorData& md = ctx->milnor_data();
    coeffs.validate(md);
    std::vector<MultiDer> terms;
    for (unsigned n = 1; n <= order; ++n) {
        Vec3 acc;
        for (const auto& [ckey, cv] : coeffs.c) {
            auto [a, l, i] = ckey;
            if (a >= n) continue;
            for (const auto& [bkey, bv] : coeffs.cbar) {
                auto [b, r] = bkey;
                if (a + b != n) continue;
                Poly factor = ctx->phi_power(l) * ctx->u(i);
                acc = acc + grad(ctx->u(r)).scaled(factor).scaled(cv * bv);
            }
        }
        for (const auto& [ckey, cv] : coeffs.c) {
            auto [k, m, j] = ckey;
            if (k != n) continue;
            Poly factor = ctx->phi_power(m) * ctx->u(j);
            acc = acc + ctx->grad_phi().scaled(factor).scaled(cv);
        }
        for (const auto& [bkey, bv] : coeffs.cbar) {
            auto [k, s] = bkey;
            if (k != n) continue;
            acc = acc + grad(ctx->u(s)).scaled(bv);
        }
        ctx->check_cap(acc);
        terms.push_back(MultiDer::vector(2, acc));
    }
    return FormalDeformation(std::move(ctx), std::move(terms), coeffs);
}

std::vector<MultiDer> verify(const FormalDeformation& pi) {
    const PhiContext& ctx = *pi.context();
    const unsigned order = pi.order();
    std::vector<MultiDer> defects;
    for (unsigned n = 1; n <= order; ++n) {
        MultiDer rhs = MultiDer::zero(3);
        for (unsigned i = 1; i < n; ++i)
            rhs = rhs + schouten(pi.term(i), pi.term(n - i));
        MultiDer d = delta2(pi.term(n), ctx) - rhs.scaled(Rational(1, 2));
        defects.push_back(d);
    }
    // Independent route: [pi_*, pi_*]_S order by order must equal -2 D_n.
    for (unsigned n = 0; n <= order; ++n) {
        MultiDer series = MultiDer::zero(3);
        for (unsigned i = 0; i <= n; ++i)
            if (i <= order && n - i <= order) series = series + schouten(pi.term(i), pi.term(n - i));
        MultiDer expected = n == 0 ? MultiDer::zero(3) : defects[n - 1].scaled(Rational(-2));
        if (!(series == expected))
            throw InternalError("deformation equation routes disagree at order " +
                                std::to_string(n));
    }
    return defects;
}

bool verify_ok(const FormalDeformation& pi) {
    for (const auto& d : verify(pi))
        if (!d.is_zero()) return false;
    return true;
}

FormalDeformation gauge_exp(const GaugeElement& xi, const FormalDeformation& pi) {
    const PhiContext& ctx = *pi.context();
    const unsigned order = pi.order();
    if (xi.order() < order) throw PreconditionError("gauge element shorter than the deformation");
    for (const auto& v : xi.xi)
        if (v.degree() != 1) throw PreconditionError("gauge entries must be 1-derivations");

    // result = sum_k (1/k!) ad_xi^k(pi), truncated; each ad application
    // raises the minimal nu power by one, so k stops at the order.
    std::vector<MultiDer> work;  // orders 0..N of ad_xi^k(pi)
    for (unsigned n = 0; n <= order; ++n) work.push_back(pi.term(n));
    std::vector<MultiDer> result = work;
    for (unsigned k = 1; k <= order; ++k) {
        std::vector<MultiDer> next(order + 1, MultiDer::zero(2));
        bool all_zero = true;
        for (unsigned n = 0; n <= order; ++n) {
            MultiDer acc = MultiDer::zero(2);
            for (unsigned i = 1; i <= n && i <= xi.order(); ++i)
                if (!work[n - i].is_zero()) acc = acc + schouten(xi.at_order(i), work[n - i]);
            if (!acc.is_zero()) all_zero = false;
            next[n] = std::move(acc);
        }
        work = std::move(next);
        if (all_zero) break;
        Rational inv_fact = factorial_inverse(k);
        for (unsigned n = 1; n <= order; ++n) {
            result[n] = result[n] + work[n].scaled(inv_fact);
            ctx.check_cap(result[n].vec_body());
        }
    }
    std::vector<MultiDer> terms(result.begin() + 1, result.end());
    return FormalDeformation(pi.context(), std::move(terms));
}

NormalizeResult normalize(const FormalDeformation& pi, unsigned phi_power_bound) {
    const PhiContext& ctx = *pi.context();
    const unsigned order = pi.order();
    for (const auto& d : verify(pi))
        if (!d.is_zero()) throw NotADeformation("input does not satisfy the deformation equation");

    auto basis = h2_basis(ctx, phi_power_bound);
    CoeffTable table;
    GaugeElement gauge = GaugeElement::zero(order);
    for (unsigned n = 1; n <= order; ++n) {
        FormalDeformation candidate = gauge_exp(gauge, build_pi(table, order, pi.context()));
        MultiDer defect = pi.term(n) - candidate.term(n);
        Decomposition dec = cocycle_decompose(defect, ctx, basis);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (dec.coeffs[k] == 0) continue;
            const auto& e = basis[k];
            if (e.kind == H2BasisElem::Kind::phi_pow)
                table.set_c(n, e.l, e.index, dec.coeffs[k]);
            else
                table.set_cbar(n, e.index, dec.coeffs[k]);
        }
        gauge.xi[n - 1] = -dec.xi;
    }
    if (!(gauge_exp(gauge, build_pi(table, order, pi.context())) == pi))
        throw InternalError("normalization did not reproduce the deformation");
    return {std::move(table), std::move(gauge)};
}

NormalizeResult normalize_auto(const FormalDeformation& pi) {
    unsigned bound = pi.provenance() ? pi.provenance()->max_phi_power() : 0;
    for (;;) {
        try {
            return normalize(pi, bound);
        } catch (const NotInSpan&) {
            ++bound;
        }
    }
}

FormalDeformation extend_order(const FormalDeformation& pi) {
    NormalizeResult nf = normalize_auto(pi);
    GaugeElement gauge = nf.xi;
    gauge.xi.push_back(MultiDer::zero(1));
    FormalDeformation extended =
        gauge_exp(gauge, build_pi(nf.coeffs, pi.order() + 1, pi.context()));
    for (unsigned n = 1; n <= pi.order(); ++n)
        if (!(extended.term(n) == pi.term(n)))
            throw InternalError("extension changed a lower order term");
    return extended;
}

CasimirPair casimir_pair(const CoeffTable& coeffs, unsigned order, const PhiContext& ctx) {
    coeffs.validate(ctx.milnor_data());
    CasimirPair pair;
    pair.chi.assign(order + 1, Poly(3));
    pair.phinu.assign(order + 1, Poly(3));
    pair.chi[0] = Poly::constant(Rational(1), 3);
    pair.phinu[0] = ctx.phi();
    for (const auto& [key, value] : coeffs.c) {
        auto [a, l, i] = key;
        if (a > order) continue;
        pair.chi[a] += (ctx.phi_power(l) * ctx.u(i)).scaled(value);
    }
    for (const auto& [key, value] : coeffs.cbar) {
        auto [b, r] = key;
        if (b > order) continue;
        pair.phinu[b] += ctx.u(r).scaled(value);
    }
    return pair;
}

bool verify_casimir(const CasimirPair& pair, const FormalDeformation& pi) {
    const unsigned order = pi.order();
    if (pair.phinu.size() < order + 1) throw PreconditionError("casimir pair too short");
    // pi_*[phi^nu, .] is the cross product of the bivector series with
    // grad(phi^nu); all orders up to N must vanish.
    std::vector<Vec3> grads;
    for (unsigned j = 0; j <= order; ++j) grads.push_back(grad(pair.phinu[j]));
    for (unsigned n = 0; n <= order; ++n) {
        Vec3 acc;
        for (unsigned i = 0; i <= n; ++i)
            acc = acc + cross(pi.term(i).vec_body(), grads[n - i]);
        if (!acc.is_zero()) return false;
    }
    return true;
}

WeightedGaugeResult weighted_gauge_closed_form(const CoeffTable& coeffs, unsigned order,
                                               PhiContextPtr ctx) {
    if (!ctx->weight_class_equal())
        throw WrongWeightClass("weighted gauge closed form needs deg(phi) = |w|");
    coeffs.validate(ctx->milnor_data());
    const MilnorData& md = ctx->milnor_data();
    const long wsum = ctx->weight_sum();

    // Eigenvalues of ad_{e_w} on the basis bivectors, from the Euler formula:
    // [e_w, phi^l u_i grad(phi)] = ((l+1) deg(phi) + deg(u_i) - |w|) (same)
    // [e_w, grad(u_s)]           = (deg(u_s) - |w|) grad(u_s)
    auto lambda_c = [&](unsigned l, std::size_t i) {
        return Rational(long(l + 1) * ctx->phi_degree() + md.degrees[i] - wsum);
    };
    auto lambda_cbar = [&](std::size_t s) { return Rational(md.degrees[s] - wsum); };

    WeightedGaugeResult out;
    for (bool inclusive : {true, false}) {
        CoeffTable primed;
        for (unsigned n = 1; n <= order; ++n) {
            std::map<std::pair<unsigned, std::size_t>, Rational> crow;
            for (const auto& [key, value] : coeffs.c) {
                auto [k, l, i] = key;
                if (k > n) continue;
                unsigned r = n - k;
                if (!inclusive && r == 0) continue;
                Rational term = value * factorial_inverse(r) * rational_pow(lambda_c(l, i), r);
                term.canonicalize();
                auto& slot = crow[{l, i}];
                slot += term;
            }
            for (const auto& [li, v] : crow)
                if (v != 0) primed.set_c(n, li.first, li.second, v);
            std::map<std::size_t, Rational> cbrow;
            for (const auto& [key, value] : coeffs.cbar) {
                auto [k, s] = key;
                if (k > n) continue;
                unsigned r = n - k;
                if (!inclusive && r == 0) continue;
                Rational term = value * factorial_inverse(r) * rational_pow(lambda_cbar(s), r);
                term.canonicalize();
                cbrow[s] += term;
            }
            for (const auto& [s, v] : cbrow)
                if (v != 0) primed.set_cbar(n, s, v);
        }
        (inclusive ? out.primed : out.primed_strict) = std::move(primed);
    }

    GaugeElement euler_gauge = GaugeElement::zero(order);
    euler_gauge.xi[0] = MultiDer::vector(1, ctx->euler());
    FormalDeformation truth = gauge_exp(euler_gauge, build_pi(coeffs, order, ctx));
    const bool inc_ok = build_pi(out.primed, order, ctx) == truth;
    const bool strict_ok = build_pi(out.primed_strict, order, ctx) == truth;
    out.matched = inc_ok ? (strict_ok ? "both" : "r>=0") : (strict_ok ? "r>=1" : "none");
    return out;
}

std::vector<Poly> trivialize_1cocycle(const std::vector<MultiDer>& psi,
                                      const FormalDeformation& pi) {
    const PhiContext& ctx = *pi.context();
    const unsigned order = pi.order();
    if (!h1_is_zero(ctx))
        throw PreconditionError("trivialize_1cocycle needs H^1 = 0, i.e. deg(phi) != |w|");
    if (psi.size() < order + 1) throw PreconditionError("cocycle series too short");
    for (const auto& v : psi)
        if (v.degree() != 1) throw PreconditionError("cocycle entries must be 1-derivations");

    // [psi, pi_*]_S = 0 mod nu^{N+1}
    for (unsigned n = 0; n <= order; ++n) {
        MultiDer acc = MultiDer::zero(2);
        for (unsigned i = 0; i <= n; ++i) acc = acc + schouten(psi[i], pi.term(n - i));
        if (!acc.is_zero())
            throw NotACocycle("input is not a 1-cocycle of the deformed structure");
    }

    std::vector<MultiDer> residual(psi.begin(), psi.begin() + order + 1);
    std::vector<Poly> h;
    for (unsigned m = 0; m <= order; ++m) {
        auto hm = solve_delta0(ctx, residual[m]);
        if (!hm)
            throw H1Obstruction("graded delta0 solve failed at order " + std::to_string(m));
        h.push_back(*hm);
        MultiDer h_der = MultiDer::scalar(0, *hm);
        for (unsigned n = m; n <= order; ++n)
            residual[n] = residual[n] + schouten(h_der, pi.term(n - m));
        if (!residual[m].is_zero())
            throw InternalError("residual did not vanish after the order-" + std::to_string(m) +
                                " solve");
    }
    return h;
}

}  // namespace pdeform
