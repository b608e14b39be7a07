#include "k3lat/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace k3lat {

namespace {

using i128 = __int128;

std::int64_t isqrt64(std::int64_t v) {
    if (v <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (static_cast<i128>(r) * r > v) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return -floor_div64(-a, b); }

// Q(x) = sum_i q_i (x_i + sum_{j>i} mu_ij x_j)^2, rescaled so that every
// quantity in the search is an integer:
//   M * Q(x) = sum_i W_i z_i^2,  z_i = den_i x_i + sum_{j>i} m_ij x_j.
struct Plan {
    std::size_t n = 0;
    std::vector<std::int64_t> den;
    std::vector<std::vector<std::int64_t>> m;
    std::vector<std::int64_t> weight;
    std::int64_t budget = 0;
};

Plan make_plan(const IntLattice& l, const Int& norm) {
    if (norm <= 0) throw DomainError("enumeration norm must be positive");
    int sign = 0;
    if (l.is_positive_definite()) sign = 1;
    else if (l.is_negative_definite()) sign = -1;
    else throw DomainError("enumeration requires a definite lattice");

    const std::size_t n = l.rank();
    RatMatrix a = to_rational(Int(sign) * l.gram());
    std::vector<Rational> q(n);
    RatMatrix mu(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = a(i, j) / q[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= a(j, i) * a(i, k) / q[i];
    }

    Plan p;
    p.n = n;
    p.den.resize(n);
    p.m.assign(n, std::vector<std::int64_t>(n, 0));
    std::vector<Rational> w(n);
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int den = 1;
        for (std::size_t j = i + 1; j < n; ++j) den = lcm(den, mu(i, j).get_den());
        p.den[i] = to_i64(den);
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational v = mu(i, j) * Rational(den);
            v.canonicalize();
            p.m[i][j] = to_i64(v.get_num());
        }
        w[i] = q[i] / Rational(den * den);
        w[i].canonicalize();
        scale = lcm(scale, w[i].get_den());
    }
    p.weight.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = w[i] * Rational(scale);
        v.canonicalize();
        p.weight[i] = to_i64(v.get_num());
    }
    Int budget = norm * scale;
    if (budget >= (Int(1) << 62)) throw BoundExceeded("enumeration bound too large for 64-bit search");
    p.budget = to_i64(budget);
    return p;
}

struct Walker {
    const Plan& p;
    const NormVisitor& visit;
    std::atomic<bool>& stop;
    std::vector<std::int64_t> x;
    std::uint64_t found = 0;

    Walker(const Plan& plan, const NormVisitor& v, std::atomic<bool>& s) : p(plan), visit(v), stop(s), x(plan.n, 0) {}

    std::int64_t offset(std::size_t i) const {
        i128 s = 0;
        for (std::size_t j = i + 1; j < p.n; ++j) s += static_cast<i128>(p.m[i][j]) * x[j];
        return static_cast<std::int64_t>(s);
    }

    std::pair<std::int64_t, std::int64_t> range(std::size_t i, std::int64_t rest) const {
        const std::int64_t z = isqrt64(rest / p.weight[i]);
        const std::int64_t s = offset(i);
        return {ceil_div64(-z - s, p.den[i]), floor_div64(z - s, p.den[i])};
    }

    // Returns false once the visitor asked to stop.
    bool descend(std::size_t i, std::int64_t rest) {
        auto [lo, hi] = range(i, rest);
        const std::int64_t s = offset(i);
        for (std::int64_t v = lo; v <= hi; ++v) {
            const i128 z = static_cast<i128>(p.den[i]) * v + s;
            const i128 cost = static_cast<i128>(p.weight[i]) * z * z;
            if (cost > rest) continue;
            x[i] = v;
            const std::int64_t left = rest - static_cast<std::int64_t>(cost);
            if (i == 0) {
                if (left != 0) continue;
                if (stop.load(std::memory_order_relaxed)) return false;
                ++found;
                if (!visit(x)) {
                    stop.store(true);
                    return false;
                }
            } else if (!descend(i - 1, left)) {
                return false;
            }
        }
        x[i] = 0;
        return true;
    }

    bool top(std::int64_t v) {
        const std::size_t i = p.n - 1;
        const i128 z = static_cast<i128>(p.den[i]) * v;
        const i128 cost = static_cast<i128>(p.weight[i]) * z * z;
        if (cost > p.budget) return true;
        x[i] = v;
        const std::int64_t left = p.budget - static_cast<std::int64_t>(cost);
        if (i == 0) {
            if (left != 0) return true;
            ++found;
            if (!visit(x)) {
                stop.store(true);
                return false;
            }
            return true;
        }
        return descend(i - 1, left);
    }
};

} // namespace

std::uint64_t enumerate_norm_vectors(const IntLattice& l, const Int& n, const NormVisitor& visit, EnumOptions opts) {
    const Plan plan = make_plan(l, n);
    std::atomic<bool> stop{false};

    Walker probe(plan, visit, stop);
    auto [lo, hi] = probe.range(plan.n - 1, plan.budget);
    std::vector<std::int64_t> tops;
    for (std::int64_t v = lo; v <= hi; ++v) tops.push_back(v);

    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(tops.size())));
    if (workers <= 1) {
        for (auto v : tops)
            if (!probe.top(v)) break;
        return probe.found;
    }

    std::vector<std::uint64_t> found(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            Walker walker(plan, visit, stop);
            for (std::size_t k = w; k < tops.size(); k += workers) {
                if (stop.load()) break;
                if (!walker.top(tops[k])) break;
            }
            found[w] = walker.found;
        });
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (auto f : found) total += f;
    return total;
}

std::uint64_t count_norm_vectors(const IntLattice& l, const Int& n, EnumOptions opts) {
    return enumerate_norm_vectors(l, n, [](std::span<const std::int64_t>) { return true; }, opts);
}

RootSystemData enumerate_roots(const IntLattice& l) {
    std::vector<std::vector<std::int64_t>> found;
    enumerate_norm_vectors(l, Int(2), [&](std::span<const std::int64_t> x) {
        found.emplace_back(x.begin(), x.end());
        return true;
    });
    std::sort(found.begin(), found.end());

    RootSystemData out;
    const IntMatrix& g = l.gram();
    const std::size_t n = l.rank();
    for (const auto& r : found) {
        std::vector<Int> c;
        c.reserve(n);
        for (auto v : r) c.emplace_back(static_cast<long>(v));
        std::vector<std::int64_t> gr(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j) s += g(i, j) * c[j];
            gr[i] = to_i64(s);
        }
        out.roots.emplace_back(l, std::move(c));
        out.paired.push_back(std::move(gr));
    }
    out.count = out.roots.size();
    return out;
}

namespace {

using PairedRoots = std::vector<std::vector<std::int64_t>>;

// The cache holds plain coordinates only, so it never keeps a lattice alive.
std::shared_ptr<const PairedRoots> paired_roots(const IntLattice& l) {
    static std::mutex mu;
    static std::map<std::weak_ptr<const void>, std::shared_ptr<const PairedRoots>,
                    std::owner_less<std::weak_ptr<const void>>>
        cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(l.identity());
        if (it != cache.end()) return it->second;
    }
    auto data = std::make_shared<const PairedRoots>(enumerate_roots(l).paired);
    std::lock_guard<std::mutex> lock(mu);
    for (auto it = cache.begin(); it != cache.end();)
        it = it->first.expired() ? cache.erase(it) : std::next(it);
    auto [it, inserted] = cache.emplace(l.identity(), data);
    return it->second;
}

} // namespace

std::size_t count_orth_roots(const IntLattice& l, const LatVec& x) {
    if (!x.belongs_to(l)) throw DomainError("vector does not belong to the lattice");
    auto rs = paired_roots(l);
    const std::size_t n = l.rank();
    std::vector<std::int64_t> xv(n);
    for (std::size_t i = 0; i < n; ++i) xv[i] = to_i64(x[i]);
    std::size_t count = 0;
    for (const auto& gr : *rs) {
        i128 s = 0;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<i128>(gr[i]) * xv[i];
        if (s == 0) ++count;
    }
    return count;
}

} // namespace k3lat
