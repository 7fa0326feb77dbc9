#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pdeform/errors.hpp"

namespace pdeform {

inline constexpr std::uint32_t kDefaultExponentCap = 1u << 16;

// Exponent vector for up to three variables x, y, z. Polynomials in two
// variables simply never touch the z slot.
struct Monomial {
    std::array<std::uint32_t, 3> e{0, 0, 0};

    static Monomial var(int index, std::uint32_t exp = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(index)] = exp;
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // Map order only; term order for printing/Groebner lives in weights.hpp.
    bool operator<(const Monomial& o) const { return e < o.e; }

    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
    unsigned total_degree() const { return e[0] + e[1] + e[2]; }

    Monomial times(const Monomial& o, std::uint32_t cap = kDefaultExponentCap) const {
        Monomial r;
        for (std::size_t i = 0; i < 3; ++i) {
            std::uint64_t s = std::uint64_t(e[i]) + std::uint64_t(o.e[i]);
            if (s >= cap) throw OverflowError("monomial exponent exceeds cap");
            r.e[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }

    // Precondition: this->divides(o).
    Monomial divide_into(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < 3; ++i) r.e[i] = o.e[i] - e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < 3; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }

    std::string to_string() const;
};

}  // namespace pdeform
