#pragma once

#include <map>

#include "pdeform/poly.hpp"

namespace pdeform {

// Triple of polynomials in x, y, z; the common carrier for 1- and
// 2-derivations under the identifications
//   X^1 ~ A^3 : V -> (V[x], V[y], V[z])
//   X^2 ~ A^3 : V -> (V[y,z], V[z,x], V[x,y])
struct Vec3 {
    std::array<Poly, 3> c{Poly(3), Poly(3), Poly(3)};

    Vec3() = default;
    Vec3(Poly a, Poly b, Poly d) : c{std::move(a), std::move(b), std::move(d)} {}

    static Vec3 zero() { return Vec3(); }

    const Poly& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    Poly& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
    Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
    Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
    Vec3 scaled(const Rational& k) const { return {c[0].scaled(k), c[1].scaled(k), c[2].scaled(k)}; }
    Vec3 scaled(const Poly& p) const { return {p * c[0], p * c[1], p * c[2]}; }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    bool operator==(const Vec3& o) const { return c == o.c; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }
};

Poly dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 curl(const Vec3& a);
Poly divergence(const Vec3& a);
Vec3 grad(const Poly& p);

// Skew-symmetric k-derivation of F[x,y,z], k = 0..3, in the A / A^3 / A^3 / A
// representation fixed above.
class MultiDer {
  public:
    static MultiDer scalar(int degree, Poly p);  // degree 0 or 3
    static MultiDer vector(int degree, Vec3 v);  // degree 1 or 2

    int degree() const { return degree_; }
    const Poly& poly_body() const;
    const Vec3& vec_body() const;

    bool is_zero() const;
    bool operator==(const MultiDer& o) const;
    bool operator!=(const MultiDer& o) const { return !(*this == o); }

    MultiDer operator+(const MultiDer& o) const;
    MultiDer operator-(const MultiDer& o) const;
    MultiDer operator-() const;
    MultiDer scaled(const Rational& k) const;

    static MultiDer zero(int degree);

  private:
    MultiDer(int degree, Poly p, Vec3 v) : degree_(degree), poly_(std::move(p)), vec_(std::move(v)) {}
    int degree_;
    Poly poly_{3};
    Vec3 vec_;
};

// The Euler derivation (w1*x, w2*y, w3*z) for the given weights.
Vec3 euler_field(const WeightSystem& ws);

// The bivector of the bracket determined by phi: {x,y} = dphi/dz,
// {y,z} = dphi/dx, {z,x} = dphi/dy; identified with grad(phi).
MultiDer poisson_from_poly(const Poly& phi);

// Schouten bracket via closed componentwise formulas on the identifications.
// Result degree is p + q - 1; errors when that falls outside 0..3.
MultiDer schouten(const MultiDer& P, const MultiDer& Q);

// [F grad L, G grad H]_S as a polynomial (the degree-3 value); agrees with
// schouten on the corresponding bivector pair.
Poly schouten_gradpair(const Poly& F, const Poly& L, const Poly& G, const Poly& H);

// [pi, pi]_S of a bivector; zero exactly when pi is a Poisson structure.
MultiDer jacobi_defect(const MultiDer& pi);

// Weighted grading of multiderivations. A degree-k multiderivation has
// weight d when:
//   k = 0: the polynomial is weight homogeneous of degree d
//   k = 1: component i has degree d + w_i
//   k = 2: component i has degree d + |w| - w_i
//   k = 3: the polynomial has degree d + |w|
// Components are indexed by d; absent entries are zero.
std::map<long, MultiDer> graded_components(const MultiDer& v, const WeightSystem& ws);

// Weight of a single graded piece; nullopt for zero, error if mixed.
std::optional<long> multider_weight(const MultiDer& v, const WeightSystem& ws);

}  // namespace pdeform
