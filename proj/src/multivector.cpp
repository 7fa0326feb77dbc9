#include "pdeform/multivector.hpp"

namespace pdeform {

Poly dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 curl(const Vec3& a) {
    return {a[2].partial(1) - a[1].partial(2), a[0].partial(2) - a[2].partial(0),
            a[1].partial(0) - a[0].partial(1)};
}

Poly divergence(const Vec3& a) { return a[0].partial(0) + a[1].partial(1) + a[2].partial(2); }

Vec3 grad(const Poly& p) {
    if (p.arity() != 3) throw PreconditionError("grad needs arity 3");
    return {p.partial(0), p.partial(1), p.partial(2)};
}

MultiDer MultiDer::scalar(int degree, Poly p) {
    if (degree != 0 && degree != 3) throw PreconditionError("scalar multiderivation has degree 0 or 3");
    if (p.arity() != 3) throw PreconditionError("multiderivations need arity 3");
    return MultiDer(degree, std::move(p), Vec3{});
}

MultiDer MultiDer::vector(int degree, Vec3 v) {
    if (degree != 1 && degree != 2) throw PreconditionError("vector multiderivation has degree 1 or 2");
    return MultiDer(degree, Poly(3), std::move(v));
}

MultiDer MultiDer::zero(int degree) {
    if (degree == 0 || degree == 3) return scalar(degree, Poly(3));
    return vector(degree, Vec3{});
}

const Poly& MultiDer::poly_body() const {
    if (degree_ != 0 && degree_ != 3) throw PreconditionError("not a scalar multiderivation");
    return poly_;
}

const Vec3& MultiDer::vec_body() const {
    if (degree_ != 1 && degree_ != 2) throw PreconditionError("not a vector multiderivation");
    return vec_;
}

bool MultiDer::is_zero() const {
    return (degree_ == 0 || degree_ == 3) ? poly_.is_zero() : vec_.is_zero();
}

bool MultiDer::operator==(const MultiDer& o) const {
    return degree_ == o.degree_ && poly_ == o.poly_ && vec_ == o.vec_;
}

MultiDer MultiDer::operator+(const MultiDer& o) const {
    if (degree_ != o.degree_) throw PreconditionError("multiderivation degree mismatch");
    return MultiDer(degree_, poly_ + o.poly_, vec_ + o.vec_);
}

MultiDer MultiDer::operator-(const MultiDer& o) const {
    if (degree_ != o.degree_) throw PreconditionError("multiderivation degree mismatch");
    return MultiDer(degree_, poly_ - o.poly_, vec_ - o.vec_);
}

MultiDer MultiDer::operator-() const { return MultiDer(degree_, -poly_, -vec_); }

MultiDer MultiDer::scaled(const Rational& k) const {
    return MultiDer(degree_, poly_.scaled(k), vec_.scaled(k));
}

Vec3 euler_field(const WeightSystem& ws) {
    if (ws.arity != 3) throw PreconditionError("euler_field needs arity 3");
    return {Rational(ws.w[0]) * Poly::variable(0), Rational(ws.w[1]) * Poly::variable(1),
            Rational(ws.w[2]) * Poly::variable(2)};
}

MultiDer poisson_from_poly(const Poly& phi) { return MultiDer::vector(2, grad(phi)); }

namespace {

// Lie derivative of a bivector along a vector field, componentwise:
// [V, P]_i = V.grad(P_i) - P_i Div(V) + P.d_i(V).
Vec3 lie_vector_bivector(const Vec3& V, const Vec3& P) {
    Poly div_v = divergence(V);
    Vec3 r;
    for (int i = 0; i < 3; ++i) {
        Poly t(3);
        for (int j = 0; j < 3; ++j) {
            t += V[j] * P[i].partial(j);
            t += P[j] * V[j].partial(i);
        }
        r[i] = t - P[i] * div_v;
    }
    return r;
}

}  // namespace

MultiDer schouten(const MultiDer& P, const MultiDer& Q) {
    const int p = P.degree(), q = Q.degree();
    const int r = p + q - 1;
    if (r < 0 || r > 3)
        throw PreconditionError("schouten bracket degree " + std::to_string(r) + " out of range");

    // Degree-0 arguments: [Q, F][...] = Q[F, ...], and graded antisymmetry
    // [F, Q] = -(-1)^{q-1} [Q, F].
    if (p == 0 || q == 0) {
        const bool flipped = (p == 0);
        const MultiDer& A = flipped ? Q : P;  // degree >= 1
        const Poly& F = (flipped ? P : Q).poly_body();
        MultiDer res = MultiDer::zero(r);
        switch (A.degree()) {
            case 1: res = MultiDer::scalar(0, dot(A.vec_body(), grad(F))); break;
            case 2: res = MultiDer::vector(1, cross(A.vec_body(), grad(F))); break;
            case 3: res = MultiDer::vector(2, grad(F).scaled(A.poly_body())); break;
        }
        if (flipped) {
            int sign = (A.degree() - 1) % 2 == 0 ? -1 : 1;  // -(-1)^{(p-1)(q-1)} with p = 0
            if (sign < 0) res = -res;
        }
        return res;
    }

    if (p > q) {
        MultiDer res = schouten(Q, P);
        if (((p - 1) * (q - 1)) % 2 == 0) res = -res;
        return res;
    }

    if (p == 1 && q == 1) {
        const Vec3 &V = P.vec_body(), &W = Q.vec_body();
        Vec3 r3;
        for (int i = 0; i < 3; ++i) {
            Poly t(3);
            for (int j = 0; j < 3; ++j) t += V[j] * W[i].partial(j) - W[j] * V[i].partial(j);
            r3[i] = t;
        }
        return MultiDer::vector(1, r3);
    }
    if (p == 1 && q == 2)
        return MultiDer::vector(2, lie_vector_bivector(P.vec_body(), Q.vec_body()));
    if (p == 1 && q == 3) {
        const Vec3& V = P.vec_body();
        const Poly& t = Q.poly_body();
        Poly acc = -(t * divergence(V));
        for (int j = 0; j < 3; ++j) acc += V[j] * t.partial(j);
        return MultiDer::scalar(3, acc);
    }
    // p == q == 2
    const Vec3 &A = P.vec_body(), &B = Q.vec_body();
    return MultiDer::scalar(3, dot(A, curl(B)) + dot(B, curl(A)));
}

Poly schouten_gradpair(const Poly& F, const Poly& L, const Poly& G, const Poly& H) {
    return dot(grad(L).scaled(F), cross(grad(G), grad(H))) +
           dot(grad(H).scaled(G), cross(grad(F), grad(L)));
}

MultiDer jacobi_defect(const MultiDer& pi) {
    if (pi.degree() != 2) throw PreconditionError("jacobi_defect needs a bivector");
    return schouten(pi, pi);
}

namespace {

long component_shift(int degree, int i, const WeightSystem& ws) {
    switch (degree) {
        case 0: return 0;
        case 1: return ws.w[i];
        case 2: return ws.weight_sum() - ws.w[i];
        default: return ws.weight_sum();
    }
}

}  // namespace

std::map<long, MultiDer> graded_components(const MultiDer& v, const WeightSystem& ws) {
    std::map<long, MultiDer> out;
    const int k = v.degree();
    if (k == 0 || k == 3) {
        for (long d : v.poly_body().occurring_weighted_degrees(ws)) {
            out.emplace(d - component_shift(k, 0, ws),
                        MultiDer::scalar(k, v.poly_body().graded_part(ws, d)));
        }
        return out;
    }
    for (int i = 0; i < 3; ++i) {
        for (long d : v.vec_body()[i].occurring_weighted_degrees(ws)) {
            long grade = d - component_shift(k, i, ws);
            auto it = out.find(grade);
            if (it == out.end()) it = out.emplace(grade, MultiDer::zero(k)).first;
            Vec3 part = it->second.vec_body();
            part[i] += v.vec_body()[i].graded_part(ws, d);
            it->second = MultiDer::vector(k, part);
        }
    }
    return out;
}

std::optional<long> multider_weight(const MultiDer& v, const WeightSystem& ws) {
    auto comps = graded_components(v, ws);
    if (comps.empty()) return std::nullopt;
    if (comps.size() > 1) throw PreconditionError("multiderivation is not weight homogeneous");
    return comps.begin()->first;
}

}  // namespace pdeform
