#include "k3lat/smith.hpp"

#include <optional>
#include <utility>

namespace k3lat {
namespace {

// Row-major search for the nonzero entry of least absolute value in the
// block [t, rows) x [t, cols).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

} // namespace

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        auto piv = find_pivot(a, t);
        if (!piv) break;
        for (;;) {
            auto [pi, pj] = *piv;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = floor_div(a(i, t), a(t, t));
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = floor_div(a(t, j), a(t, t));
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (clean) {
                // Divisibility of the remaining block by the pivot.
                std::optional<std::size_t> bad_row;
                for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (mod(a(i, j), a(t, t)) != 0) {
                            bad_row = i;
                            break;
                        }
                if (!bad_row) break;
                add_row_multiple(a, t, *bad_row, Int(1));
                add_row_multiple(u, t, *bad_row, Int(1));
            }
            piv = find_pivot(a, t);
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
        }
    }
    return SmithForm{std::move(a), std::move(u), std::move(v), t};
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    const std::size_t n = a.cols();
    IntMatrix k(n, n - s.rank);
    for (std::size_t c = s.rank; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) k(i, c - s.rank) = s.v(i, c);
    return k;
}

} // namespace k3lat
