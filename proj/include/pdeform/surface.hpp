#pragma once

#include "pdeform/deformation.hpp"

namespace pdeform {

// The quotient algebra A_phi = F[x,y,z]/<phi> carrying the induced bracket.
// Representatives are normal forms under multivariate division by phi with
// the fixed monomial order.
class QuotientCtx {
  public:
    explicit QuotientCtx(PhiContextPtr ctx);

    const PhiContext& base() const { return *ctx_; }
    const PhiContextPtr& base_ptr() const { return ctx_; }

    Poly normal_form(const Poly& f) const;
    Vec3 project(const Vec3& v) const;

  private:
    PhiContextPtr ctx_;
    std::vector<Poly> divisor_;  // just {phi}
};

// normal_form({f,g}_phi); the bracket of representatives reduced.
Poly induced_bracket(const Poly& f, const Poly& g, const QuotientCtx& qctx);

// Basis classes p(u_j grad(phi)) for the j with deg(u_j) = deg(phi) - |w|.
struct SurfaceClass {
    std::size_t j;
    Vec3 vec;  // componentwise reduced representative
};

std::vector<SurfaceClass> h2_surface_basis(const QuotientCtx& qctx);

// alpha[(n, j)] with n >= 1 and j satisfying the degree condition above.
struct SurfaceCoeffTable {
    std::map<std::pair<unsigned, std::size_t>, Rational> alpha;

    void set(unsigned n, std::size_t j, const Rational& value);
    void validate(const QuotientCtx& qctx) const;
};

// Truncated bracket series on A_phi: the induced bracket plus the alpha
// combinations of the basis classes at each order.
class SurfaceDeformation {
  public:
    SurfaceDeformation(const QuotientCtx* qctx, std::vector<Vec3> terms);

    const QuotientCtx& quotient() const { return *qctx_; }
    unsigned order() const { return static_cast<unsigned>(terms_.size()); }
    // n = 0 gives the induced bracket's (reduced) vector.
    const Vec3& term(unsigned n) const;

    // Reduced value of the order-n bivector on a pair of elements.
    Poly evaluate(unsigned n, const Poly& f, const Poly& g) const;

  private:
    const QuotientCtx* qctx_;
    Vec3 base_;
    std::vector<Vec3> terms_;
};

SurfaceDeformation build_surface_deformation(const SurfaceCoeffTable& alpha, unsigned order,
                                             const QuotientCtx& qctx);

// Jacobi defect of the truncated bracket on the generator triple (x, y, z),
// reduced modulo <phi>, one polynomial per order 1..N. All zero for valid
// deformations.
std::vector<Poly> verify_surface(const SurfaceDeformation& pi);

enum class RigidityVerdict { rigid, rigid_via_gauge, not_rigid_candidate };

struct RigidityResult {
    RigidityVerdict verdict;
    std::vector<SurfaceClass> basis;
    // For rigid_via_gauge: [e_w, grad(phi)]_S == 0, checked symbolically.
    bool witness_identity = false;
};

RigidityResult rigidity_check(const QuotientCtx& qctx);

const char* rigidity_verdict_name(RigidityVerdict v);

}  // namespace pdeform
