#include "pdeform/linalg.hpp"

namespace pdeform {

namespace {

std::vector<std::vector<Integer>> clear_denominators(const QMatrix& a) {
    std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l(1);
        for (std::size_t c = 0; c < a.cols(); ++c) {
            Integer den = a.at(r, c).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            Rational v = a.at(r, c) * Rational(l);
            m[r][c] = v.get_num();  // exact: l clears every denominator in the row
        }
    }
    return m;
}

}  // namespace

Echelon echelonize(const QMatrix& a) {
    Echelon e;
    e.m = clear_denominators(a);
    e.cols = a.cols();
    const std::size_t rows = a.rows();
    Integer prev_pivot(1);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < e.cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (e.m[r][col] != 0) {
                found = r;
                break;
            }
        if (found == rows) continue;
        std::swap(e.m[pivot_row], e.m[found]);
        const Integer pivot = e.m[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const Integer factor = e.m[r][col];
            for (std::size_t c = col; c < e.cols; ++c) {
                Integer t = e.m[r][c] * pivot - factor * e.m[pivot_row][c];
                // Bareiss: division by the previous pivot is exact.
                Integer q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                            prev_pivot.get_mpz_t());
                if (rem != 0) throw InternalError("fraction-free elimination lost exactness");
                e.m[r][c] = q;
            }
        }
        prev_pivot = pivot;
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return e;
}

std::optional<std::vector<Rational>> solve_linear(const QMatrix& a,
                                                  const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw PreconditionError("solve_linear: size mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Echelon e = echelonize(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        const std::size_t col = e.pivot_cols[k];
        Rational acc(Rational(e.m[k][a.cols()]));
        for (std::size_t c = col + 1; c < a.cols(); ++c) {
            if (e.m[k][c] == 0 || x[c] == 0) continue;
            Rational t = Rational(e.m[k][c]) * x[c];
            acc -= t;
        }
        Rational q = acc / Rational(e.m[k][col]);
        q.canonicalize();
        x[col] = q;
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& a) {
    Echelon e = echelonize(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(a.cols(), Rational(0));
        x[f] = 1;
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t col = e.pivot_cols[k];
            if (col > f) continue;
            Rational acc(0);
            for (std::size_t c = col + 1; c < a.cols(); ++c) {
                if (e.m[k][c] == 0 || x[c] == 0) continue;
                Rational t = Rational(e.m[k][c]) * x[c];
                acc += t;
            }
            Rational q = -acc / Rational(e.m[k][col]);
            q.canonicalize();
            x[col] = q;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t matrix_rank(const QMatrix& a) { return echelonize(a).rank(); }

}  // namespace pdeform
