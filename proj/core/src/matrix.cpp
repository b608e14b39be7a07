#include "k3lat/matrix.hpp"

namespace k3lat {

Int determinant(const IntMatrix& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(k, p);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw DomainError("singular matrix has no inverse");
        a.swap_rows(k, p);
        inv.swap_rows(k, p);
        Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.square()) throw DomainError("block_diagonal: non-square block");
        n += b.rows();
    }
    IntMatrix out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

bool is_symmetric(const IntMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

std::pair<int, int> signature(const IntMatrix& gram) {
    if (!is_symmetric(gram)) throw DomainError("signature of a non-symmetric matrix");
    const std::size_t n = gram.rows();
    RatMatrix a = to_rational(gram);
    int pos = 0;
    int neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0) ++p;
        if (p < n) {
            a.swap_rows(k, p);
            a.swap_cols(k, p);
        } else {
            // All remaining diagonal entries vanish: the congruence
            // e_k -> e_k + e_j produces a nonzero pivot 2 a(k, j).
            std::size_t j = k + 1;
            while (j < n && a(k, j) == 0) ++j;
            if (j == n) throw DomainError("signature of a degenerate form");
            for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
            for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
        }
        const Rational piv = a(k, k);
        (piv > 0 ? pos : neg) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / piv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            a(i, k) = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
    }
    return {pos, neg};
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

} // namespace k3lat
