#pragma once

#include <memory>

#include "pdeform/groebner.hpp"
#include "pdeform/linalg.hpp"
#include "pdeform/multivector.hpp"

namespace pdeform {

// Milnor algebra data of the Jacobian ideal <dphi/dx, dphi/dy, dphi/dz>.
struct MilnorData {
    std::vector<Poly> groebner;      // reduced monic basis
    std::vector<Monomial> basis;     // standard monomials u_0 = 1, ..., u_{mu-1}
    std::size_t mu = 0;
    std::vector<long> degrees;       // weighted degree of each u_j
    std::vector<std::size_t> e_phi;  // admissible first-kind indices

    bool in_e_phi(std::size_t j) const;
};

// A weight homogeneous polynomial with an isolated singularity, its weights,
// and the derived data everything downstream keys on. Immutable.
class PhiContext {
  public:
    PhiContext(Poly phi, WeightSystem ws, std::optional<long> degree_cap = std::nullopt);

    const Poly& phi() const { return phi_; }
    const WeightSystem& weights() const { return ws_; }
    long phi_degree() const { return phi_degree_; }
    long weight_sum() const { return ws_.weight_sum(); }
    bool weight_class_equal() const { return phi_degree_ == ws_.weight_sum(); }
    const Vec3& grad_phi() const { return grad_phi_; }
    const Vec3& euler() const { return euler_; }
    const MilnorData& milnor_data() const { return milnor_; }
    std::optional<long> degree_cap() const { return degree_cap_; }

    Poly u(std::size_t j) const;       // j-th Milnor basis monomial
    Poly phi_power(unsigned l) const;

    // Errors when a polynomial exceeds the configured intermediate cap.
    void check_cap(const Poly& p) const;
    void check_cap(const Vec3& v) const;

  private:
    Poly phi_;
    WeightSystem ws_;
    long phi_degree_ = 0;
    Vec3 grad_phi_;
    Vec3 euler_;
    MilnorData milnor_;
    std::optional<long> degree_cap_;
};

using PhiContextPtr = std::shared_ptr<const PhiContext>;

MilnorData milnor(const PhiContext& ctx);

// H^1 vanishes exactly when the weighted degree of phi differs from the
// weight sum; otherwise H^1 is spanned over F[phi] by the Euler derivation.
bool h1_is_zero(const PhiContext& ctx);

// Poisson coboundary operators in the A / A^3 identifications.
MultiDer delta0(const Poly& f, const PhiContext& ctx);
MultiDer delta1(const MultiDer& v, const PhiContext& ctx);
MultiDer delta2(const MultiDer& v, const PhiContext& ctx);

// Basis of 2-cocycles whose classes span H^2 up to the phi-power window:
// phi^l u_j grad(phi) for j in E_phi, l <= phi_power_bound, and grad(u_r).
struct H2BasisElem {
    enum class Kind { phi_pow, grad_u };
    Kind kind;
    unsigned l = 0;      // phi exponent (phi_pow only)
    std::size_t index;   // j into the Milnor basis, or r
    MultiDer realized;
    long grade;

    std::string label() const;
};

std::vector<H2BasisElem> h2_basis(const PhiContext& ctx, unsigned phi_power_bound);

struct Decomposition {
    std::vector<Rational> coeffs;  // parallel to the basis
    MultiDer xi;                   // degree 1, with P = sum coeffs.basis + delta1(xi)
};

// Writes a 2-cocycle as a combination of basis classes plus a coboundary by
// exact elimination within each weight graded slice. Throws NotACocycle when
// delta2(P) != 0 and NotInSpan when the class needs phi powers beyond the
// window the basis was built with.
Decomposition cocycle_decompose(const MultiDer& p, const PhiContext& ctx,
                                const std::vector<H2BasisElem>& basis);

// No nontrivial combination of basis classes is a coboundary; checked per
// graded slice through the nullspace of the decomposition system.
bool h2_classes_independent(const PhiContext& ctx, const std::vector<H2BasisElem>& basis);

// delta1(phi^i u_j e_w) == (deg(u_j) - deg(phi) + |w|) phi^i u_j grad(phi)
//                          - deg(phi) phi^{i+1} grad(u_j)
bool delta1_euler_identity(const PhiContext& ctx, unsigned i, std::size_t j);

// Gradewise solve of delta0(h) = target; nullopt when some slice has no
// solution (possible only when H^1 is nonzero).
std::optional<Poly> solve_delta0(const PhiContext& ctx, const MultiDer& target);

// Dimensions of the two summands of H^2 in the plane: weight homogeneous
// polynomials of degree deg(psi) - w1 - w2, and the Jacobian quotient.
struct PlaneH2 {
    long dim_first;
    long dim_second;
    long n_psi;  // the shifted degree deg(psi) - w1 - w2
};

PlaneH2 h2_dim_plane(const Poly& psi, const WeightSystem& ws);

}  // namespace pdeform
