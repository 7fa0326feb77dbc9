#include "pdeform/cohomology.hpp"

#include <algorithm>

namespace pdeform {

bool MilnorData::in_e_phi(std::size_t j) const {
    return std::find(e_phi.begin(), e_phi.end(), j) != e_phi.end();
}

PhiContext::PhiContext(Poly phi, WeightSystem ws, std::optional<long> degree_cap)
    : phi_(std::move(phi)), ws_(ws), degree_cap_(degree_cap) {
    if (phi_.arity() != 3 || ws_.arity != 3)
        throw PreconditionError("PhiContext needs three variables");
    if (!phi_.is_weight_homogeneous(ws_, &phi_degree_))
        throw NotHomogeneous("phi is not weight homogeneous for the given weights");
    if (phi_.is_zero()) throw NotIsolatedSingularity("phi = 0 has no isolated singularity");
    grad_phi_ = grad(phi_);
    euler_ = euler_field(ws_);

    std::vector<Poly> jac{phi_.partial(0), phi_.partial(1), phi_.partial(2)};
    milnor_.groebner = groebner_basis(jac, ws_);
    auto standard = standard_monomials(milnor_.groebner, ws_, 3);
    if (!standard)
        throw NotIsolatedSingularity("Jacobian ideal quotient is infinite-dimensional");
    milnor_.basis = std::move(*standard);
    milnor_.mu = milnor_.basis.size();
    for (const auto& m : milnor_.basis) milnor_.degrees.push_back(ws_.degree_of(m));
    for (std::size_t j = weight_class_equal() ? 0 : 1; j < milnor_.mu; ++j)
        milnor_.e_phi.push_back(j);
}

Poly PhiContext::u(std::size_t j) const {
    if (j >= milnor_.mu) throw IndexError("Milnor basis index out of range");
    return Poly::monomial(milnor_.basis[j], Rational(1));
}

Poly PhiContext::phi_power(unsigned l) const { return phi_.pow(l); }

void PhiContext::check_cap(const Poly& p) const {
    if (!degree_cap_) return;
    auto d = p.weighted_degree(ws_);
    if (d && *d > *degree_cap_)
        throw OverflowError("intermediate weighted degree " + std::to_string(*d) +
                            " exceeds cap " + std::to_string(*degree_cap_));
}

void PhiContext::check_cap(const Vec3& v) const {
    for (int i = 0; i < 3; ++i) check_cap(v[i]);
}

MilnorData milnor(const PhiContext& ctx) { return ctx.milnor_data(); }

bool h1_is_zero(const PhiContext& ctx) { return !ctx.weight_class_equal(); }

MultiDer delta0(const Poly& f, const PhiContext& ctx) {
    return MultiDer::vector(1, cross(grad(f), ctx.grad_phi()));
}

MultiDer delta1(const MultiDer& v, const PhiContext& ctx) {
    if (v.degree() != 1) throw PreconditionError("delta1 needs a 1-derivation");
    const Vec3& f = v.vec_body();
    Poly pairing = dot(f, ctx.grad_phi());
    return MultiDer::vector(2, ctx.grad_phi().scaled(divergence(f)) - grad(pairing));
}

MultiDer delta2(const MultiDer& v, const PhiContext& ctx) {
    if (v.degree() != 2) throw PreconditionError("delta2 needs a 2-derivation");
    return MultiDer::scalar(3, -dot(ctx.grad_phi(), curl(v.vec_body())));
}

std::string H2BasisElem::label() const {
    if (kind == Kind::grad_u) return "grad_u[" + std::to_string(index) + "]";
    return "phi^" + std::to_string(l) + "*u[" + std::to_string(index) + "]*grad_phi";
}

std::vector<H2BasisElem> h2_basis(const PhiContext& ctx, unsigned phi_power_bound) {
    const MilnorData& md = ctx.milnor_data();
    const WeightSystem& ws = ctx.weights();
    std::vector<H2BasisElem> out;
    for (std::size_t j : md.e_phi) {
        for (unsigned l = 0; l <= phi_power_bound; ++l) {
            Poly factor = ctx.phi_power(l) * ctx.u(j);
            H2BasisElem e{H2BasisElem::Kind::phi_pow, l, j,
                          MultiDer::vector(2, ctx.grad_phi().scaled(factor)),
                          long(l + 1) * ctx.phi_degree() + md.degrees[j] - ws.weight_sum()};
            if (!delta2(e.realized, ctx).is_zero())
                throw InternalError("h2 basis element is not a cocycle");
            out.push_back(std::move(e));
        }
    }
    for (std::size_t r = 1; r < md.mu; ++r) {
        H2BasisElem e{H2BasisElem::Kind::grad_u, 0, r, MultiDer::vector(2, grad(ctx.u(r))),
                      md.degrees[r] - ws.weight_sum()};
        if (!delta2(e.realized, ctx).is_zero())
            throw InternalError("h2 basis element is not a cocycle");
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

// Monomial coordinates of one weight graded slice of X^1 or X^2:
// (component, monomial) pairs in a fixed deterministic order.
struct SliceCoords {
    std::vector<std::pair<int, Monomial>> entries;
    std::map<std::pair<int, Monomial>, std::size_t> position;

    void build(const WeightSystem& ws, const std::array<long, 3>& comp_degrees) {
        for (int i = 0; i < 3; ++i) {
            for (const auto& m : monomials_of_weighted_degree(ws, comp_degrees[std::size_t(i)])) {
                position.emplace(std::make_pair(i, m), entries.size());
                entries.emplace_back(i, m);
            }
        }
    }
};

std::array<long, 3> x1_component_degrees(const WeightSystem& ws, long grade) {
    return {grade + ws.w[0], grade + ws.w[1], grade + ws.w[2]};
}

std::array<long, 3> x2_component_degrees(const WeightSystem& ws, long grade) {
    long s = ws.weight_sum();
    return {grade + s - ws.w[0], grade + s - ws.w[1], grade + s - ws.w[2]};
}

void scatter(const Vec3& v, const SliceCoords& rows, QMatrix& m, std::size_t col) {
    for (int i = 0; i < 3; ++i) {
        for (const auto& [mon, c] : v[i].terms()) {
            auto it = rows.position.find(std::make_pair(i, mon));
            if (it == rows.position.end())
                throw InternalError("graded slice does not contain a produced monomial");
            m.at(it->second, col) = c;
        }
    }
}

// Columns of one graded decomposition system: basis elements of this grade,
// then delta1 of the X^1 slice one weight step below.
struct GradedSystem {
    std::vector<std::size_t> basis_cols;  // indices into the basis vector
    SliceCoords rows;                     // X^2 slice at this grade
    SliceCoords xi_coords;                // X^1 slice feeding delta1
    QMatrix matrix{0, 0};

    GradedSystem(long grade, const PhiContext& ctx, const std::vector<H2BasisElem>& basis) {
        const WeightSystem& ws = ctx.weights();
        rows.build(ws, x2_component_degrees(ws, grade));
        xi_coords.build(ws, x1_component_degrees(ws, grade - ctx.phi_degree() + ws.weight_sum()));
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k].grade == grade) basis_cols.push_back(k);

        matrix = QMatrix(rows.entries.size(), basis_cols.size() + xi_coords.entries.size());
        for (std::size_t c = 0; c < basis_cols.size(); ++c)
            scatter(basis[basis_cols[c]].realized.vec_body(), rows, matrix, c);
        for (std::size_t c = 0; c < xi_coords.entries.size(); ++c) {
            auto [i, mon] = xi_coords.entries[c];
            Vec3 unit;
            unit[i] = Poly::monomial(mon, Rational(1));
            scatter(delta1(MultiDer::vector(1, unit), ctx).vec_body(), rows, matrix,
                    basis_cols.size() + c);
        }
    }
};

}  // namespace

Decomposition cocycle_decompose(const MultiDer& p, const PhiContext& ctx,
                                const std::vector<H2BasisElem>& basis) {
    if (p.degree() != 2) throw PreconditionError("cocycle_decompose needs a bivector");
    if (!delta2(p, ctx).is_zero()) throw NotACocycle("delta2 of the input is nonzero");

    const MilnorData& md = ctx.milnor_data();
    const WeightSystem& ws = ctx.weights();
    long window = -1;
    for (const auto& e : basis)
        if (e.kind == H2BasisElem::Kind::phi_pow) window = std::max(window, long(e.l));

    Decomposition out{std::vector<Rational>(basis.size(), Rational(0)), MultiDer::zero(1)};
    for (auto& [grade, part] : graded_components(p, ws)) {
        GradedSystem sys(grade, ctx, basis);
        std::vector<Rational> rhs(sys.rows.entries.size(), Rational(0));
        for (int i = 0; i < 3; ++i)
            for (const auto& [mon, c] : part.vec_body()[i].terms())
                rhs[sys.rows.position.at(std::make_pair(i, mon))] = c;
        auto solution = solve_linear(sys.matrix, rhs);
        if (!solution) {
            // A first-kind element of this grade outside the phi-power window
            // means the caller has to widen the window and retry.
            for (std::size_t j : md.e_phi) {
                long num = grade + ws.weight_sum() - md.degrees[j];
                if (num % ctx.phi_degree() != 0) continue;
                long l = num / ctx.phi_degree() - 1;
                if (l > window)
                    throw NotInSpan("cocycle needs phi power " + std::to_string(l) +
                                    " beyond the basis window " + std::to_string(window));
            }
            throw InternalError("cocycle decomposition infeasible within its graded slice");
        }
        for (std::size_t c = 0; c < sys.basis_cols.size(); ++c)
            out.coeffs[sys.basis_cols[c]] += (*solution)[c];
        Vec3 xi = out.xi.vec_body();
        for (std::size_t c = 0; c < sys.xi_coords.entries.size(); ++c) {
            const Rational& v = (*solution)[sys.basis_cols.size() + c];
            if (v == 0) continue;
            auto [i, mon] = sys.xi_coords.entries[c];
            xi[i] += Poly::monomial(mon, v);
        }
        out.xi = MultiDer::vector(1, xi);
    }

    MultiDer recon = delta1(out.xi, ctx);
    for (std::size_t k = 0; k < basis.size(); ++k)
        recon = recon + basis[k].realized.scaled(out.coeffs[k]);
    if (!(recon == p)) throw InternalError("cocycle decomposition failed to reconstruct");
    return out;
}

bool h2_classes_independent(const PhiContext& ctx, const std::vector<H2BasisElem>& basis) {
    std::vector<long> grades;
    for (const auto& e : basis)
        if (std::find(grades.begin(), grades.end(), e.grade) == grades.end())
            grades.push_back(e.grade);
    for (long grade : grades) {
        GradedSystem sys(grade, ctx, basis);
        for (const auto& vec : nullspace(sys.matrix))
            for (std::size_t c = 0; c < sys.basis_cols.size(); ++c)
                if (vec[c] != 0) return false;
    }
    return true;
}

bool delta1_euler_identity(const PhiContext& ctx, unsigned i, std::size_t j) {
    const MilnorData& md = ctx.milnor_data();
    if (j >= md.mu) throw IndexError("Milnor basis index out of range");
    Poly factor = ctx.phi_power(i) * ctx.u(j);
    MultiDer lhs = delta1(MultiDer::vector(1, ctx.euler().scaled(factor)), ctx);
    Rational first(md.degrees[j] - ctx.phi_degree() + ctx.weight_sum());
    Rational second(-ctx.phi_degree());
    Vec3 rhs = ctx.grad_phi().scaled(factor).scaled(first) +
               grad(ctx.u(j)).scaled(ctx.phi_power(i + 1)).scaled(second);
    return lhs == MultiDer::vector(2, rhs);
}

std::optional<Poly> solve_delta0(const PhiContext& ctx, const MultiDer& target) {
    if (target.degree() != 1) throw PreconditionError("solve_delta0 needs a 1-derivation");
    const WeightSystem& ws = ctx.weights();
    Poly h(3);
    for (auto& [grade, part] : graded_components(target, ws)) {
        long hdeg = grade - ctx.phi_degree() + ws.weight_sum();
        auto mons = monomials_of_weighted_degree(ws, hdeg);
        SliceCoords rows;
        rows.build(ws, x1_component_degrees(ws, grade));
        QMatrix m(rows.entries.size(), mons.size());
        for (std::size_t c = 0; c < mons.size(); ++c)
            scatter(delta0(Poly::monomial(mons[c], Rational(1)), ctx).vec_body(), rows, m, c);
        std::vector<Rational> rhs(rows.entries.size(), Rational(0));
        for (int i = 0; i < 3; ++i)
            for (const auto& [mon, c] : part.vec_body()[i].terms())
                rhs[rows.position.at(std::make_pair(i, mon))] = c;
        auto sol = solve_linear(m, rhs);
        if (!sol) return std::nullopt;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if ((*sol)[c] != 0) h.add_term(mons[c], (*sol)[c]);
    }
    return h;
}

PlaneH2 h2_dim_plane(const Poly& psi, const WeightSystem& ws) {
    if (psi.arity() != 2 || ws.arity != 2) throw PreconditionError("h2_dim_plane needs arity 2");
    long d = 0;
    if (!psi.is_weight_homogeneous(ws, &d))
        throw NotHomogeneous("psi is not weight homogeneous for the given weights");
    if (psi.is_zero()) throw NotSquareFree("psi = 0 is not square-free");

    // Square-free exactly when V(psi, dpsi/dx, dpsi/dy) is finite.
    auto gb_sing = groebner_basis({psi, psi.partial(0), psi.partial(1)}, ws);
    if (!standard_monomials(gb_sing, ws, 2))
        throw NotSquareFree("psi has a repeated factor");

    PlaneH2 out{0, 0, d - ws.w[0] - ws.w[1]};
    out.dim_first = long(monomials_of_weighted_degree(ws, out.n_psi).size());
    auto gb_jac = groebner_basis({psi.partial(0), psi.partial(1)}, ws);
    auto standard = standard_monomials(gb_jac, ws, 2);
    if (!standard)
        throw NotIsolatedSingularity("Jacobian quotient of psi is infinite-dimensional");
    out.dim_second = long(standard->size());
    return out;
}

}  // namespace pdeform
