#include "k3lat/rst.hpp"

#include <algorithm>
#include <optional>
#include <numeric>
#include <thread>

namespace k3lat {

EigenExponents::EigenExponents(std::uint64_t m, std::vector<std::uint64_t> a) : m_(m), a_(std::move(a)) {
    if (m_ == 0) throw DomainError("eigen-exponent order must be positive");
    for (auto x : a_)
        if (x >= m_) throw DomainError("eigen-exponent out of range [0, m)");
}

EigenExponents EigenExponents::inverse() const {
    std::vector<std::uint64_t> b(a_.size());
    std::transform(a_.begin(), a_.end(), b.begin(), [&](std::uint64_t x) { return x == 0 ? 0 : m_ - x; });
    return EigenExponents(m_, std::move(b));
}

Rational sigma_rst(const EigenExponents& e) {
    Int s = 0;
    for (auto a : e.exponents()) s += Int(static_cast<unsigned long>(a));
    Rational r(s, Int(static_cast<unsigned long>(e.order())));
    r.canonicalize();
    return r;
}

namespace {
Rational frac_of(std::uint64_t num, std::uint64_t den) {
    Rational r(Int(static_cast<unsigned long>(num % den)), Int(static_cast<unsigned long>(den)));
    r.canonicalize();
    return r;
}
} // namespace

Rational sigma_prime(const EigenExponents& e, std::uint64_t k, std::uint64_t l) {
    if (k == 0 || e.order() != 2 * k) throw DomainError("sigma_prime needs an element of order 2k");
    if (l < 1 || l >= k) throw DomainError("sigma_prime needs 1 <= l < k");
    const auto& a = e.exponents();
    if (a.empty()) throw DomainError("sigma_prime needs at least one exponent");
    if (a.back() % 2 != 1) throw DomainError("sigma_prime needs an odd last exponent");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] % 2 != 0) throw DomainError("sigma_prime needs even exponents before the last");
    Rational s = frac_of(l * a.back(), k);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) s += frac_of(l * a[i], 2 * k);
    s.canonicalize();
    return s;
}

CMin c_min(std::uint64_t d) {
    if (d < 3) throw DomainError("c_min requires d >= 3");
    CMin best;
    bool first = true;
    for (std::uint64_t a = 0; a < d; ++a) {
        std::uint64_t num = 0;
        for (std::uint64_t b = 1; b < d; ++b)
            if (std::gcd(b, d) == 1) num += (b + a) % d;
        Rational v(Int(static_cast<unsigned long>(num)), Int(static_cast<unsigned long>(d)));
        v.canonicalize();
        if (first || v < best.value) {
            best.value = v;
            best.argmin = a;
            first = false;
        }
    }
    return best;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw DomainError("euler_phi(0) is undefined");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// -------------------------------------------------------------- polynomials

namespace {

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Quotient of a by the monic b when the division is exact.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty() || b.back() != 1) throw DomainError("divisor polynomial must be monic");
    if (a.size() < b.size()) return std::nullopt;
    IntPoly r = a;
    IntPoly q(a.size() - b.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Int c = r[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    for (const auto& x : r)
        if (x != 0) return std::nullopt;
    return q;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d;
    for (std::uint64_t k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            d.push_back(k);
            if (k * k != n) d.push_back(n / k);
        }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0) throw DomainError("cyclotomic(0) is undefined");
    IntPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (auto d : divisors(n)) {
        if (d == n) continue;
        auto q = divide_exact(p, cyclotomic(d));
        if (!q) throw InternalError("t^n - 1 not divisible by a cyclotomic factor");
        p = std::move(*q);
    }
    trim(p);
    return p;
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
    if (!a.square()) throw DomainError("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    IntPoly c(n + 1);
    c[n] = 1;
    IntMatrix m(n, n);
    const IntMatrix id = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * id;
        IntMatrix am = a * m;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        const Int kk(static_cast<unsigned long>(k));
        if (tr % kk != 0) throw InternalError("Faddeev-LeVerrier trace not divisible");
        c[n - k] = -tr / kk;
    }
    return c;
}

CycloDecomp cyclo_decompose(const IntMatrix& g, std::uint64_t order_cap) {
    if (!g.square()) throw DomainError("cyclo_decompose needs a square matrix");
    const std::size_t n = g.rows();
    const IntMatrix id = IntMatrix::identity(n);
    CycloDecomp out;
    IntMatrix p = g;
    std::uint64_t order = 1;
    while (p != id) {
        if (++order > order_cap) throw BoundExceeded("matrix order exceeds the cap of " + std::to_string(order_cap));
        p = p * g;
    }
    out.order = order;
    out.charpoly = characteristic_polynomial(g);
    IntPoly rest = out.charpoly;
    for (auto d : divisors(order)) {
        const IntPoly phi = cyclotomic(d);
        while (auto q = divide_exact(rest, phi)) {
            rest = std::move(*q);
            ++out.nu[d];
        }
    }
    if (rest.size() != 1 || rest[0] != 1)
        throw InternalError("characteristic polynomial of a finite-order matrix is not cyclotomic");
    return out;
}

EigenExponents exponents(const CycloDecomp& c) {
    std::vector<std::uint64_t> a;
    for (const auto& [d, nu] : c.nu) {
        if (c.order % d != 0) throw DomainError("cyclotomic factor does not divide the order");
        for (std::uint64_t b = 0; b < d; ++b) {
            if (std::gcd(b, d) != 1) continue;
            for (std::uint64_t k = 0; k < nu; ++k) a.push_back(b * (c.order / d));
        }
    }
    std::sort(a.begin(), a.end());
    return EigenExponents(c.order, std::move(a));
}

bool is_quasi_reflection(const EigenExponents& e) {
    return std::count_if(e.exponents().begin(), e.exponents().end(), [](auto x) { return x != 0; }) == 1;
}

bool is_reflection(const EigenExponents& e) {
    if (!is_quasi_reflection(e)) return false;
    for (auto x : e.exponents())
        if (x != 0) return 2 * x == e.order();
    return false;
}

BigPhiReport bigphi_verify(std::uint64_t r_max, unsigned threads) {
    if (r_max < 7) throw DomainError("bigphi_verify requires r_max >= 7");
    struct Local {
        std::uint64_t cases = 0, violations = 0, min_r = 0, min_k1 = 0;
        std::uint64_t min_num = 0, min_den = 1;
        bool any = false;
    };
    auto run_r = [](std::uint64_t r, Local& loc) {
        if (euler_phi(r) < 6) return;
        std::vector<std::uint64_t> units;
        for (std::uint64_t k = 1; k < r; ++k)
            if (std::gcd(k, r) == 1) units.push_back(k);
        for (auto k1 : units) {
            const std::uint64_t k2 = r - k1;
            std::uint64_t num = 0;
            for (auto k : units)
                if (k != k1 && k != k2) num += (k1 + k) % r;
            ++loc.cases;
            if (num < r) ++loc.violations;
            // num / r < min_num / min_den
            if (!loc.any || num * loc.min_den < loc.min_num * r) {
                loc.any = true;
                loc.min_num = num;
                loc.min_den = r;
                loc.min_r = r;
                loc.min_k1 = k1;
            }
        }
    };
    const unsigned nt = std::max(1u, threads);
    std::vector<Local> locals(nt);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (std::uint64_t r = 7 + t; r <= r_max; r += nt) run_r(r, locals[t]);
        });
    for (auto& th : pool) th.join();

    BigPhiReport rep;
    rep.r_max = r_max;
    bool any = false;
    std::uint64_t bn = 0, bd = 1;
    for (const auto& loc : locals) {
        rep.cases += loc.cases;
        rep.violations += loc.violations;
        if (!loc.any) continue;
        const bool better = !any || loc.min_num * bd < bn * loc.min_den ||
                            (loc.min_num * bd == bn * loc.min_den &&
                             std::pair(loc.min_r, loc.min_k1) < std::pair(rep.min_r, rep.min_k1));
        if (better) {
            any = true;
            bn = loc.min_num;
            bd = loc.min_den;
            rep.min_r = loc.min_r;
            rep.min_k1 = loc.min_k1;
        }
    }
    rep.minimum = make_rational(Int(static_cast<unsigned long>(bn)), Int(static_cast<unsigned long>(bd)));
    rep.minimum.canonicalize();
    return rep;
}

ToricReport toric_order2_check(const IntMatrix& g, std::uint64_t order_cap) {
    ToricReport rep;
    rep.decomposition = cyclo_decompose(g, order_cap);
    EigenExponents e = exponents(rep.decomposition);
    rep.sigma = sigma_rst(e);
    rep.quasi_reflection = is_quasi_reflection(e);
    rep.reflection = is_reflection(e);
    rep.order_two = rep.decomposition.order == 2;
    const bool identity = rep.decomposition.order == 1;
    if (rep.quasi_reflection) rep.violation = !rep.reflection || !rep.order_two;
    else if (!identity) rep.violation = rep.sigma < 1;
    return rep;
}

} // namespace k3lat
