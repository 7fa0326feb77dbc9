#pragma once

#include <vector>

#include "pdeform/poly.hpp"

namespace pdeform {

// Buchberger machinery under the fixed order: weighted degree, ties grevlex.
// Bases are returned reduced and monic, deterministically ordered.

// Remainder of p on full multivariate division by the given divisors.
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors, const WeightSystem& ws);

std::vector<Poly> groebner_basis(std::vector<Poly> generators, const WeightSystem& ws);

// Monomials not divisible by any leading monomial of the basis, sorted by
// ascending weighted degree, descending grevlex within a degree. Empty
// optional when there are infinitely many (some variable has no pure power
// among the leading monomials).
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly>& basis,
                                                        const WeightSystem& ws, int arity);

}  // namespace pdeform
