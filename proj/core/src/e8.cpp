#include "k3lat/e8.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace k3lat::e8 {

namespace {

std::array<Doubled, 8> make_simple_roots() {
    std::array<Doubled, 8> a{};
    a[0] = {1, -1, -1, -1, -1, -1, -1, 1};
    a[1] = {2, 2, 0, 0, 0, 0, 0, 0};
    for (int k = 3; k <= 8; ++k) {
        Doubled v{};
        v[k - 2] = 2;
        v[k - 3] = -2;
        a[k - 1] = v;
    }
    return a;
}

// Inverse of the (unimodular) Coxeter Gram matrix as 64-bit integers.
std::array<std::array<std::int64_t, 8>, 8> make_gram_inverse() {
    RatMatrix inv = inverse(to_rational(lattice().gram()));
    std::array<std::array<std::int64_t, 8>, 8> out{};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            if (!is_integer(inv(i, j))) throw InternalError("E8 Gram inverse is not integral");
            out[i][j] = to_i64(inv(i, j).get_num());
        }
    return out;
}

std::vector<Doubled> make_roots() {
    std::vector<Doubled> r;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {-2, 2})
                for (int sj : {-2, 2}) {
                    Doubled v{};
                    v[i] = si;
                    v[j] = sj;
                    r.push_back(v);
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        Doubled v{};
        for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        r.push_back(v);
    }
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

const IntLattice& lattice() {
    static const IntLattice l = named::E(8);
    return l;
}

const std::array<Doubled, 8>& simple_roots_doubled() {
    static const std::array<Doubled, 8> a = make_simple_roots();
    return a;
}

bool in_lattice(const Doubled& y) {
    const std::int64_t parity = y[0] & 1;
    std::int64_t sum = 0;
    for (auto v : y) {
        if ((v & 1) != parity) return false;
        sum += v;
    }
    if (parity == 0) return sum % 4 == 0;
    return ((sum % 4) + 4) % 4 == 0;
}

std::int64_t norm4(const Doubled& y) { return dot4(y, y); }

std::int64_t dot4(const Doubled& a, const Doubled& b) {
    std::int64_t s = 0;
    for (int i = 0; i < 8; ++i) s += a[i] * b[i];
    return s;
}

LatVec from_doubled(const Doubled& y) {
    if (!in_lattice(y)) throw DomainError("doubled e-coordinates do not describe a vector of E8");
    static const auto ginv = make_gram_inverse();
    const auto& a = simple_roots_doubled();
    std::array<std::int64_t, 8> pair{};
    for (int i = 0; i < 8; ++i) {
        std::int64_t d = dot4(a[i], y);
        if (d % 4 != 0) throw InternalError("E8 pairing is not integral");
        pair[i] = d / 4;
    }
    std::vector<Int> c(8);
    for (int i = 0; i < 8; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < 8; ++j) s += ginv[i][j] * pair[j];
        c[i] = Int(static_cast<long>(s));
    }
    return lattice().vec(std::move(c));
}

Doubled to_doubled(const LatVec& x) {
    if (!x.belongs_to(lattice())) throw DomainError("vector does not belong to the shared E8 lattice");
    const auto& a = simple_roots_doubled();
    Doubled y{};
    for (int i = 0; i < 8; ++i) {
        const std::int64_t c = to_i64(x[i]);
        for (int j = 0; j < 8; ++j) y[j] += c * a[i][j];
    }
    return y;
}

const std::vector<Doubled>& roots_doubled() {
    static const std::vector<Doubled> r = make_roots();
    return r;
}

int count_orth_roots(const Doubled& y) {
    int count = 0;
    // Integral roots +-e_i +- e_j: orthogonal iff y_i = +-y_j.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            const std::int64_t a = std::llabs(y[i]);
            const std::int64_t b = std::llabs(y[j]);
            if (a != b) continue;
            count += a == 0 ? 4 : 2;
        }
    // Half-integral roots (+-1/2, ...) with an even number of minus signs:
    // split into two halves of four signs each and match sums of opposite
    // value with equal minus-sign parity.
    std::int64_t low[2][8];
    int filled[2] = {0, 0};
    for (int mask = 0; mask < 16; ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < 4; ++i) s += (mask >> i) & 1 ? -y[i] : y[i];
        const int p = __builtin_popcount(static_cast<unsigned>(mask)) & 1;
        low[p][filled[p]++] = s;
    }
    for (int mask = 0; mask < 16; ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < 4; ++i) s += (mask >> i) & 1 ? -y[4 + i] : y[4 + i];
        const int p = __builtin_popcount(static_cast<unsigned>(mask)) & 1;
        for (int k = 0; k < 8; ++k)
            if (low[p][k] == -s) ++count;
    }
    return count;
}

int count_orth_roots_scan(const Doubled& y) {
    int count = 0;
    for (const auto& r : roots_doubled())
        if (dot4(r, y) == 0) ++count;
    return count;
}

Doubled canonical_d8(const Doubled& y) {
    Doubled a{};
    int negatives = 0;
    bool has_zero = false;
    for (int i = 0; i < 8; ++i) {
        a[i] = std::llabs(y[i]);
        if (y[i] < 0) ++negatives;
        if (y[i] == 0) has_zero = true;
    }
    std::sort(a.begin(), a.end(), [](std::int64_t p, std::int64_t q) { return p > q; });
    if (negatives % 2 == 1 && !has_zero) a[7] = -a[7];
    return a;
}

std::uint64_t orbit_size_d8(const Doubled& y) {
    std::map<std::int64_t, int> mult;
    int nonzero = 0;
    for (auto v : y) {
        ++mult[std::llabs(v)];
        if (v != 0) ++nonzero;
    }
    std::uint64_t arrangements = 40320;
    for (const auto& [value, m] : mult)
        for (int k = 2; k <= m; ++k) arrangements /= static_cast<std::uint64_t>(k);
    const int sign_bits = nonzero == 8 ? 7 : nonzero;
    return arrangements << sign_bits;
}

} // namespace k3lat::e8
