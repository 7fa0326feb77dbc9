#include "pdeform/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pdeform {

const char* Error::code_name() const {
    switch (code_) {
        case ErrorCode::parse: return "ParseError";
        case ErrorCode::io: return "IoError";
        case ErrorCode::precondition: return "PreconditionError";
        case ErrorCode::not_a_cocycle: return "NotACocycle";
        case ErrorCode::not_in_span: return "NotInSpan";
        case ErrorCode::not_a_deformation: return "NotADeformation";
        case ErrorCode::wrong_weight_class: return "WrongWeightClass";
        case ErrorCode::overflow: return "OverflowError";
        case ErrorCode::not_isolated_singularity: return "NotIsolatedSingularity";
        case ErrorCode::not_square_free: return "NotSquareFree";
        case ErrorCode::not_homogeneous: return "NotHomogeneous";
        case ErrorCode::index_out_of_range: return "IndexError";
        case ErrorCode::h1_obstruction: return "H1Obstruction";
        case ErrorCode::internal: return "InternalError";
    }
    return "Error";
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q(Integer(s), 1);
            q.canonicalize();
            return q;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw PreconditionError("denominator must be positive: " + s);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + s + "'", 0);
    }
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Monomial::to_string() const {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_of_weighted_degree(const WeightSystem& ws, long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    const long w1 = ws.w[0], w2 = ws.w[1];
    const long w3 = ws.arity == 3 ? ws.w[2] : 0;
    for (long a = 0; a * w1 <= degree; ++a) {
        for (long b = 0; a * w1 + b * w2 <= degree; ++b) {
            long rest = degree - a * w1 - b * w2;
            if (ws.arity == 2) {
                if (rest != 0) continue;
                Monomial m;
                m.e = {std::uint32_t(a), std::uint32_t(b), 0};
                out.push_back(m);
            } else if (rest % w3 == 0) {
                Monomial m;
                m.e = {std::uint32_t(a), std::uint32_t(b), std::uint32_t(rest / w3)};
                out.push_back(m);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return monomial_cmp(a, b, ws) > 0; });
    return out;
}

Poly Poly::constant(const Rational& c, int arity) {
    Poly p(arity);
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::variable(int index, int arity) {
    Poly p(arity);
    if (index < 0 || index >= arity) throw PreconditionError("variable index out of range");
    p.add_term(Monomial::var(index), Rational(1));
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c, int arity) {
    Poly p(arity);
    if (arity == 2 && m.e[2] != 0) throw PreconditionError("z not allowed in arity 2");
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_arity(o);
    Poly r(arity_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Rational c = c1 * c2;
            r.add_term(m1.times(m2), c);
        }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(arity_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) {
        Rational v = k * c;
        r.terms_.emplace(m, v);
    }
    return r;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
    Poly r(arity_);
    if (c == 0) return r;
    for (const auto& [m1, c1] : terms_) {
        Rational v = c1 * c;
        r.terms_.emplace(m1.times(m), v);
    }
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::constant(Rational(1), arity_);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

Poly Poly::partial(int var) const {
    if (var < 0 || var >= arity_) throw PreconditionError("variable index out of range");
    Poly r(arity_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        if (m.e[v] == 0) continue;
        Monomial n = m;
        n.e[v] -= 1;
        Rational k = c * Rational(long(m.e[v]));
        r.add_term(n, k);
    }
    return r;
}

std::optional<long> Poly::weighted_degree(const WeightSystem& ws) const {
    if (terms_.empty()) return std::nullopt;
    long best = ws.degree_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_) best = std::max(best, ws.degree_of(m));
    return best;
}

bool Poly::is_weight_homogeneous(const WeightSystem& ws, long* degree_out) const {
    if (terms_.empty()) return true;  // zero is homogeneous by convention
    long d = ws.degree_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ws.degree_of(m) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

Poly Poly::graded_part(const WeightSystem& ws, long degree) const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_)
        if (ws.degree_of(m) == degree) r.terms_.emplace(m, c);
    return r;
}

std::vector<long> Poly::occurring_weighted_degrees(const WeightSystem& ws) const {
    std::vector<long> ds;
    for (const auto& [m, c] : terms_) {
        long d = ws.degree_of(m);
        if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

const Monomial& Poly::leading_monomial(const WeightSystem& ws) const {
    if (terms_.empty()) throw PreconditionError("leading monomial of zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (monomial_cmp(m, *best, ws) > 0) best = &m;
    return *best;
}

Poly Poly::permuted(const std::array<int, 3>& perm) const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_) {
        Monomial n;
        for (std::size_t i = 0; i < 3; ++i)
            n.e[i] = m.e[static_cast<std::size_t>(perm[i])];
        r.add_term(n, c);
    }
    return r;
}

std::string Poly::to_string(const WeightSystem& ws) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(), [&](const auto* a, const auto* b) {
        long da = ws.degree_of(a->first), db = ws.degree_of(b->first);
        if (da != db) return da < db;
        return lex_cmp(a->first, b->first) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ordered) {
        const auto& [m, c] = *t;
        bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (m.is_one()) {
            os << rational_to_string(a);
        } else if (a == 1) {
            os << m.to_string();
        } else {
            os << rational_to_string(a) << "*" << m.to_string();
        }
    }
    return os.str();
}

std::string Poly::to_string() const {
    WeightSystem ws = arity_ == 2 ? WeightSystem(1, 1) : WeightSystem(1, 1, 1);
    return to_string(ws);
}

bool euler_check(const Poly& p, const WeightSystem& ws) {
    long d = 0;
    if (!p.is_weight_homogeneous(ws, &d))
        throw NotHomogeneous("euler_check requires a weight homogeneous polynomial");
    if (p.is_zero()) return true;
    Poly lhs(p.arity());
    for (int i = 0; i < p.arity(); ++i) {
        Poly xi = Poly::variable(i, p.arity());
        lhs += Rational(ws.w[i]) * (xi * p.partial(i));
    }
    return lhs == Rational(d) * p;
}

}  // namespace pdeform
