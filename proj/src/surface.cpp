#include "pdeform/surface.hpp"

namespace pdeform {

QuotientCtx::QuotientCtx(PhiContextPtr ctx) : ctx_(std::move(ctx)) {
    divisor_.push_back(ctx_->phi());
}

Poly QuotientCtx::normal_form(const Poly& f) const {
    return pdeform::normal_form(f, divisor_, ctx_->weights());
}

Vec3 QuotientCtx::project(const Vec3& v) const {
    return {normal_form(v[0]), normal_form(v[1]), normal_form(v[2])};
}

Poly induced_bracket(const Poly& f, const Poly& g, const QuotientCtx& qctx) {
    return qctx.normal_form(dot(qctx.base().grad_phi(), cross(grad(f), grad(g))));
}

std::vector<SurfaceClass> h2_surface_basis(const QuotientCtx& qctx) {
    const PhiContext& ctx = qctx.base();
    const MilnorData& md = ctx.milnor_data();
    const long target = ctx.phi_degree() - ctx.weight_sum();
    std::vector<SurfaceClass> out;
    for (std::size_t j = 0; j < md.mu; ++j) {
        if (md.degrees[j] != target) continue;
        out.push_back({j, qctx.project(ctx.grad_phi().scaled(ctx.u(j)))});
    }
    return out;
}

void SurfaceCoeffTable::set(unsigned n, std::size_t j, const Rational& value) {
    if (n == 0) throw IndexError("coefficient level n must be >= 1");
    if (value == 0)
        alpha.erase({n, j});
    else
        alpha[{n, j}] = value;
}

void SurfaceCoeffTable::validate(const QuotientCtx& qctx) const {
    const PhiContext& ctx = qctx.base();
    const MilnorData& md = ctx.milnor_data();
    const long target = ctx.phi_degree() - ctx.weight_sum();
    for (const auto& [key, value] : alpha) {
        auto [n, j] = key;
        if (n == 0) throw IndexError("coefficient level n must be >= 1");
        if (j >= md.mu || md.degrees[j] != target)
            throw IndexError("index " + std::to_string(j) +
                             " violates the degree condition deg(u_j) = deg(phi) - |w|");
    }
}

SurfaceDeformation::SurfaceDeformation(const QuotientCtx* qctx, std::vector<Vec3> terms)
    : qctx_(qctx), base_(qctx->project(qctx->base().grad_phi())), terms_(std::move(terms)) {}

const Vec3& SurfaceDeformation::term(unsigned n) const {
    if (n == 0) return base_;
    if (n > terms_.size()) throw IndexError("deformation order out of range");
    return terms_[n - 1];
}

Poly SurfaceDeformation::evaluate(unsigned n, const Poly& f, const Poly& g) const {
    return qctx_->normal_form(dot(term(n), cross(grad(f), grad(g))));
}

SurfaceDeformation build_surface_deformation(const SurfaceCoeffTable& alpha, unsigned order,
                                             const QuotientCtx& qctx) {
    alpha.validate(qctx);
    auto classes = h2_surface_basis(qctx);
    std::vector<Vec3> terms(order, Vec3{});
    for (const auto& [key, value] : alpha.alpha) {
        auto [n, j] = key;
        if (n > order) continue;
        for (const auto& cls : classes)
            if (cls.j == j) terms[n - 1] = terms[n - 1] + cls.vec.scaled(value);
    }
    return SurfaceDeformation(&qctx, std::move(terms));
}

std::vector<Poly> verify_surface(const SurfaceDeformation& pi) {
    const QuotientCtx& qctx = pi.quotient();
    const unsigned order = pi.order();
    const Poly gens[3] = {Poly::variable(0), Poly::variable(1), Poly::variable(2)};
    std::vector<Poly> defects;
    for (unsigned n = 1; n <= order; ++n) {
        Poly defect(3);
        for (int cyc = 0; cyc < 3; ++cyc) {
            const Poly &a = gens[cyc], &b = gens[(cyc + 1) % 3], &c = gens[(cyc + 2) % 3];
            for (unsigned i = 0; i <= n; ++i) {
                Poly inner = pi.evaluate(n - i, a, b);
                defect += pi.evaluate(i, inner, c);
            }
        }
        defects.push_back(qctx.normal_form(defect));
    }
    return defects;
}

RigidityResult rigidity_check(const QuotientCtx& qctx) {
    const PhiContext& ctx = qctx.base();
    RigidityResult out{RigidityVerdict::not_rigid_candidate, h2_surface_basis(qctx), false};
    if (out.basis.empty()) {
        out.verdict = RigidityVerdict::rigid;
        return out;
    }
    if (ctx.weight_class_equal()) {
        MultiDer bracket = schouten(MultiDer::vector(1, ctx.euler()),
                                    MultiDer::vector(2, ctx.grad_phi()));
        out.witness_identity = bracket.is_zero();
        if (!out.witness_identity)
            throw InternalError("[e_w, grad(phi)] expected to vanish when deg(phi) = |w|");
        out.verdict = RigidityVerdict::rigid_via_gauge;
        return out;
    }
    return out;
}

const char* rigidity_verdict_name(RigidityVerdict v) {
    switch (v) {
        case RigidityVerdict::rigid: return "Rigid";
        case RigidityVerdict::rigid_via_gauge: return "RigidViaGauge";
        case RigidityVerdict::not_rigid_candidate: return "NotRigidCandidate";
    }
    return "unknown";
}

}  // namespace pdeform
