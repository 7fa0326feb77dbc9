#pragma once

#include "pdeform/cohomology.hpp"

namespace pdeform {

// Coefficient tables of the canonical deformation family:
//   c[k][(l,i)]  with k >= 1, l >= 0, i in E_phi   (phi^l u_i grad(phi) part)
//   cbar[k][r]   with k >= 1, 1 <= r <= mu-1       (grad(u_r) part)
struct CoeffTable {
    using CKey = std::tuple<unsigned, unsigned, std::size_t>;   // (k, l, i)
    using CbarKey = std::pair<unsigned, std::size_t>;           // (k, r)

    std::map<CKey, Rational> c;
    std::map<CbarKey, Rational> cbar;

    void set_c(unsigned k, unsigned l, std::size_t i, const Rational& value);
    void set_cbar(unsigned k, std::size_t r, const Rational& value);
    void validate(const MilnorData& md) const;
    unsigned max_phi_power() const;

    bool operator==(const CoeffTable& o) const { return c == o.c && cbar == o.cbar; }
    bool operator!=(const CoeffTable& o) const { return !(*this == o); }
};

// pi_0 + pi_1 nu + ... + pi_N nu^N with pi_0 = poisson_from_poly(phi) held
// implicitly. Immutable.
class FormalDeformation {
  public:
    FormalDeformation(PhiContextPtr ctx, std::vector<MultiDer> terms,
                      std::optional<CoeffTable> provenance = std::nullopt);

    const PhiContextPtr& context() const { return ctx_; }
    unsigned order() const { return static_cast<unsigned>(terms_.size()); }
    MultiDer pi0() const { return poisson_from_poly(ctx_->phi()); }
    // n = 0 gives pi_0; 1 <= n <= N the stored coefficients.
    const MultiDer& term(unsigned n) const;
    const std::optional<CoeffTable>& provenance() const { return provenance_; }

    bool operator==(const FormalDeformation& o) const;

  private:
    PhiContextPtr ctx_;
    MultiDer pi0_;
    std::vector<MultiDer> terms_;
    std::optional<CoeffTable> provenance_;
};

// xi_1 nu + ... + xi_N nu^N, all degree-1 multiderivations.
struct GaugeElement {
    std::vector<MultiDer> xi;  // index 0 holds xi_1

    static GaugeElement zero(unsigned order);
    unsigned order() const { return static_cast<unsigned>(xi.size()); }
    const MultiDer& at_order(unsigned k) const;  // 1 <= k <= N
    GaugeElement negated() const;
};

FormalDeformation build_pi(const CoeffTable& coeffs, unsigned order, PhiContextPtr ctx);

// Per-order defects D_n = delta2(pi_n) - 1/2 sum_{i+j=n} [pi_i, pi_j]_S for
// n = 1..N; the deformation is valid when all are zero. Cross-checked against
// the direct expansion of [pi_*, pi_*]_S mod nu^{N+1}.
std::vector<MultiDer> verify(const FormalDeformation& pi);
bool verify_ok(const FormalDeformation& pi);

FormalDeformation gauge_exp(const GaugeElement& xi, const FormalDeformation& pi);

struct NormalizeResult {
    CoeffTable coeffs;
    GaugeElement xi;
};

// Order-by-order normal form: recovers a coefficient table and a gauge with
// gauge_exp(xi, build_pi(coeffs, N)) == pi exactly. Coefficients are unique
// when H^1 vanishes.
NormalizeResult normalize(const FormalDeformation& pi, unsigned phi_power_bound);
// Same, growing the phi-power window on NotInSpan.
NormalizeResult normalize_auto(const FormalDeformation& pi);

// Extends a valid order-N deformation to a valid order-(N+1) deformation that
// agrees with it through nu^N.
FormalDeformation extend_order(const FormalDeformation& pi);

// chi^nu = 1 + sum_a (sum_{l,i} c^a_{l,i} phi^l u_i) nu^a and
// phi^nu = phi + sum_b (sum_r cbar^b_r u_r) nu^b; then
// build_pi(coeffs) = chi^nu grad(phi^nu) termwise and phi^nu is a formal
// Casimir of it.
struct CasimirPair {
    std::vector<Poly> chi;    // orders 0..N, chi[0] = 1
    std::vector<Poly> phinu;  // orders 0..N, phinu[0] = phi
};

CasimirPair casimir_pair(const CoeffTable& coeffs, unsigned order, const PhiContext& ctx);
bool verify_casimir(const CasimirPair& pair, const FormalDeformation& pi);

// Closed-form coefficient transport along the gauge e^{ad_{e_w nu}} in the
// weight class deg(phi) = |w|. Both summation ranges of the inner sum are
// produced; `matched` names the one that reproduces gauge_exp (compared on
// build_pi of the candidate tables).
struct WeightedGaugeResult {
    CoeffTable primed;             // inclusive range, r >= 0
    CoeffTable primed_strict;      // strict range, r >= 1
    std::string matched;           // "r>=0", "r>=1" or "none"
};

WeightedGaugeResult weighted_gauge_closed_form(const CoeffTable& coeffs, unsigned order,
                                               PhiContextPtr ctx);

// Solves psi + [H, pi_*]_S = 0 mod nu^{N+1} for H = h_0 + ... + h_N nu^N,
// given a 1-cocycle psi (orders 0..N) of the deformed structure. Requires
// H^1 = 0; each order is a graded delta0 solve.
std::vector<Poly> trivialize_1cocycle(const std::vector<MultiDer>& psi,
                                      const FormalDeformation& pi);

}  // namespace pdeform
