#include "k3lat/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "k3lat/smith.hpp"

namespace k3lat {

namespace detail {
struct LatticeData {
    IntMatrix gram;
    std::string name;
    Int det;
    std::pair<int, int> sig;
    bool even = true;
};
} // namespace detail

// ---------------------------------------------------------------- IntLattice

IntLattice::IntLattice(IntMatrix gram, std::string name) {
    if (!gram.square() || gram.rows() == 0) throw DomainError("Gram matrix must be square and non-empty");
    if (!is_symmetric(gram)) throw DomainError("Gram matrix must be symmetric");
    auto data = std::make_shared<detail::LatticeData>();
    data->det = k3lat::determinant(gram);
    if (data->det == 0) throw DomainError("Gram matrix is singular");
    data->sig = k3lat::signature(gram);
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (mod(gram(i, i), Int(2)) != 0) data->even = false;
    data->gram = std::move(gram);
    data->name = std::move(name);
    data_ = std::move(data);
}

const IntMatrix& IntLattice::gram() const { return data_->gram; }
std::size_t IntLattice::rank() const { return data_->gram.rows(); }
const std::string& IntLattice::name() const { return data_->name; }
Int IntLattice::determinant() const { return data_->det; }
std::pair<int, int> IntLattice::signature() const { return data_->sig; }
bool IntLattice::is_even() const { return data_->even; }
bool IntLattice::is_positive_definite() const { return data_->sig.second == 0; }
bool IntLattice::is_negative_definite() const { return data_->sig.first == 0; }

LatVec IntLattice::vec(std::vector<Int> coords) const { return LatVec(*this, std::move(coords)); }

LatVec IntLattice::vec(std::initializer_list<long> coords) const {
    std::vector<Int> c;
    c.reserve(coords.size());
    for (long v : coords) c.emplace_back(v);
    return LatVec(*this, std::move(c));
}

LatVec IntLattice::basis_vector(std::size_t i) const {
    if (i >= rank()) throw DomainError("basis index out of range");
    std::vector<Int> c(rank());
    c[i] = 1;
    return LatVec(*this, std::move(c));
}

LatVec IntLattice::zero() const { return LatVec(*this, std::vector<Int>(rank())); }

// -------------------------------------------------------------------- LatVec

LatVec::LatVec(const IntLattice& lattice, std::vector<Int> coords) : lattice_(lattice), coords_(std::move(coords)) {
    if (coords_.size() != lattice_.rank()) throw DomainError("vector length does not match lattice rank");
}

bool LatVec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& v) { return v == 0; });
}

Int LatVec::content() const {
    Int g = 0;
    for (const auto& v : coords_) g = gcd(g, v);
    return g;
}

namespace {
void require_same(const LatVec& a, const LatVec& b) {
    if (!a.lattice().same_as(b.lattice())) throw DomainError("vectors belong to different lattices");
}
} // namespace

LatVec operator+(const LatVec& a, const LatVec& b) {
    require_same(a, b);
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return LatVec(a.lattice(), std::move(c));
}

LatVec operator-(const LatVec& a, const LatVec& b) {
    require_same(a, b);
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return LatVec(a.lattice(), std::move(c));
}

LatVec operator-(const LatVec& a) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
    return LatVec(a.lattice(), std::move(c));
}

LatVec operator*(const Int& s, const LatVec& a) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a[i];
    return LatVec(a.lattice(), std::move(c));
}

bool operator==(const LatVec& a, const LatVec& b) {
    return a.lattice().same_as(b.lattice()) && a.coords() == b.coords();
}

bool operator<(const LatVec& a, const LatVec& b) { return a.coords() < b.coords(); }

// ------------------------------------------------------------------- DualVec

DualVec::DualVec(const IntLattice& lattice, std::vector<Rational> coords)
    : lattice_(lattice), coords_(std::move(coords)) {
    if (coords_.size() != lattice_.rank()) throw DomainError("dual vector length does not match lattice rank");
    for (auto& c : coords_) c.canonicalize();
    const IntMatrix& g = lattice_.gram();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < g.cols(); ++j) s += Rational(g(i, j)) * coords_[j];
        if (!is_integer(s)) throw DomainError("vector is not in the dual lattice");
    }
}

bool DualVec::in_lattice() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

// ------------------------------------------------------------------ pairings

Int inner(const IntLattice& l, const LatVec& x, const LatVec& y) {
    if (!x.belongs_to(l) || !y.belongs_to(l)) throw DomainError("vector does not belong to the lattice");
    const IntMatrix& g = l.gram();
    const std::size_t n = l.rank();
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < n; ++j) row += g(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

Rational inner(const IntLattice& l, const DualVec& x, const DualVec& y) {
    if (!x.lattice().same_as(l) || !y.lattice().same_as(l))
        throw DomainError("dual vector does not belong to the lattice");
    const IntMatrix& g = l.gram();
    const std::size_t n = l.rank();
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += x.coords()[i] * Rational(g(i, j)) * y.coords()[j];
    s.canonicalize();
    return s;
}

Int norm(const IntLattice& l, const LatVec& x) { return inner(l, x, x); }

// ---------------------------------------------------------------- DiscGroup

Int DiscGroup::order() const {
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

std::vector<Int> DiscGroup::coordinates(const DualVec& y) const {
    const IntLattice& l = y.lattice();
    const IntMatrix& g = l.gram();
    const std::size_t n = l.rank();
    std::vector<Int> gy(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += Rational(g(i, j)) * y.coords()[j];
        s.canonicalize();
        gy[i] = s.get_num();
    }
    std::vector<Int> c(invariant_factors.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += reducer(k, j) * gy[j];
        c[k] = mod(s, invariant_factors[k]);
    }
    return c;
}

DualVec DiscGroup::element(std::span<const Int> c) const {
    if (c.size() != generators.size()) throw DomainError("element: wrong number of coordinates");
    if (generators.empty()) throw DomainError("element of the trivial group has no lattice context");
    const std::size_t n = generators.front().size();
    std::vector<Rational> y(n);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) y[i] += Rational(c[k]) * generators[k].coords()[i];
    return DualVec(generators.front().lattice(), std::move(y));
}

Rational DiscGroup::q(std::span<const Int> c) const {
    if (generators.empty()) return 0;
    DualVec y = element(c);
    Rational v = inner(y.lattice(), y, y);
    return mod_rational(v, even ? Int(2) : Int(1));
}

// ------------------------------------------------------------ constructions

namespace {

IntMatrix e8_coxeter_gram(std::size_t n) {
    // Chain alpha_1 - alpha_3 - alpha_4 - ... - alpha_n with alpha_2 on alpha_4.
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
    auto link = [&](std::size_t a, std::size_t b) {
        if (a <= n && b <= n) g(a - 1, b - 1) = g(b - 1, a - 1) = -1;
    };
    link(1, 3);
    link(2, 4);
    for (std::size_t k = 3; k < n; ++k) link(k, k + 1);
    return g;
}

IntMatrix d_gram(std::size_t n) {
    // Basis e1-e2, ..., e_{n-1}-e_n, e_{n-1}+e_n.
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        b[i][i] = 1;
        b[i][i + 1] = -1;
    }
    b[n - 1][n - 2] = 1;
    b[n - 1][n - 1] = 1;
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < n; ++k) s += b[i][k] * b[j][k];
            g(i, j) = s;
        }
    return g;
}

long param(std::span<const long> params, std::size_t i, const char* what) {
    if (i >= params.size()) throw DomainError(std::string("missing parameter for ") + what);
    return params[i];
}

} // namespace

IntLattice make_named(LatticeName name, std::span<const long> params) {
    switch (name) {
    case LatticeName::U:
        return IntLattice(IntMatrix{{0, 1}, {1, 0}}, "U");
    case LatticeName::A: {
        long n = param(params, 0, "A");
        if (n < 1) throw DomainError("A(n) requires n >= 1");
        IntMatrix g(n, n);
        for (long i = 0; i < n; ++i) {
            g(i, i) = 2;
            if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
        }
        return IntLattice(std::move(g), "A" + std::to_string(n));
    }
    case LatticeName::D: {
        long n = param(params, 0, "D");
        if (n < 2) throw DomainError("D(n) requires n >= 2");
        return IntLattice(d_gram(static_cast<std::size_t>(n)), "D" + std::to_string(n));
    }
    case LatticeName::E: {
        long n = param(params, 0, "E");
        if (n < 6 || n > 8) throw DomainError("E(n) requires n in {6, 7, 8}");
        return IntLattice(e8_coxeter_gram(static_cast<std::size_t>(n)), "E" + std::to_string(n));
    }
    case LatticeName::RankOne: {
        long k = param(params, 0, "<k>");
        if (k == 0) throw DomainError("<k> requires k != 0");
        return IntLattice(IntMatrix{{k}}, "<" + std::to_string(k) + ">");
    }
    }
    throw DomainError("unknown lattice name");
}

namespace named {
IntLattice U() { return make_named(LatticeName::U); }
IntLattice A(long n) { long p[] = {n}; return make_named(LatticeName::A, p); }
IntLattice D(long n) { long p[] = {n}; return make_named(LatticeName::D, p); }
IntLattice E(long n) { long p[] = {n}; return make_named(LatticeName::E, p); }
IntLattice rank_one(long k) { long p[] = {k}; return make_named(LatticeName::RankOne, p); }

IntLattice L2d(long d) {
    if (d < 1) throw DomainError("L2d requires d >= 1");
    IntLattice e8m = rescale(E(8), Int(-1));
    IntLattice l = direct_sum({U(), U(), e8m, e8m, rank_one(-2 * d)});
    return IntLattice(l.gram(), "L_" + std::to_string(2 * d));
}

IntLattice LK3() {
    IntLattice e8m = rescale(E(8), Int(-1));
    IntLattice l = direct_sum({U(), U(), U(), e8m, e8m});
    return IntLattice(l.gram(), "L_K3");
}

IntLattice L2_26() {
    IntLattice e8m = rescale(E(8), Int(-1));
    IntLattice l = direct_sum({U(), U(), e8m, e8m, e8m});
    return IntLattice(l.gram(), "L_2,26");
}
} // namespace named

IntLattice direct_sum(std::span<const IntLattice> parts) {
    if (parts.empty()) throw DomainError("direct_sum of no lattices");
    std::vector<IntMatrix> blocks;
    std::string name;
    for (const auto& p : parts) {
        blocks.push_back(p.gram());
        if (!name.empty()) name += "+";
        name += p.name().empty() ? "?" : p.name();
    }
    return IntLattice(block_diagonal(blocks), name);
}

IntLattice direct_sum(std::initializer_list<IntLattice> parts) {
    return direct_sum(std::span<const IntLattice>(parts.begin(), parts.size()));
}

IntLattice rescale(const IntLattice& l, const Int& t) {
    if (t == 0) throw DomainError("rescale by zero");
    IntMatrix g = t * l.gram();
    std::string name = l.name().empty() ? std::string() : l.name() + "(" + t.get_str() + ")";
    return IntLattice(std::move(g), name);
}

// ----------------------------------------------------------------- divisors

Int divisor(const IntLattice& l, const LatVec& x) {
    if (!x.belongs_to(l)) throw DomainError("vector does not belong to the lattice");
    if (x.is_zero()) throw DomainError("divisor of the zero vector");
    const IntMatrix& g = l.gram();
    Int d = 0;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < l.rank(); ++j) s += g(i, j) * x[j];
        d = gcd(d, s);
    }
    return d;
}

bool is_primitive(const LatVec& x) { return x.content() == 1; }

// --------------------------------------------------------- discriminant group

DiscGroup disc_group(const IntLattice& l) {
    const IntMatrix& g = l.gram();
    const std::size_t n = l.rank();
    SmithForm s = smith_normal_form(g);
    if (s.rank != n) throw DomainError("singular Gram matrix");

    DiscGroup out;
    out.even = l.is_even();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (s.d(i, i) > 1) idx.push_back(i);
    out.reducer = IntMatrix(idx.size(), n);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::size_t i = idx[k];
        const Int& di = s.d(i, i);
        out.invariant_factors.push_back(di);
        for (std::size_t j = 0; j < n; ++j) out.reducer(k, j) = s.u(i, j);
        // U G V = D, so G (V e_i / d_i) = U^{-1} e_i is integral.
        std::vector<Rational> y(n);
        for (std::size_t j = 0; j < n; ++j) y[j] = make_rational(s.v(j, i), di);
        out.generators.emplace_back(l, std::move(y));
    }
    if (!out.invariant_factors.empty()) out.exponent = out.invariant_factors.back();
    for (const auto& gen : out.generators)
        out.q_values.push_back(mod_rational(inner(l, gen, gen), out.even ? Int(2) : Int(1)));
    return out;
}

// ------------------------------------------------------ orthogonal complement

LatVec OrthComplement::embed(const IntLattice& ambient, const LatVec& x) const {
    if (!x.belongs_to(lattice)) throw DomainError("vector does not belong to the complement");
    return ambient.vec(embedding.apply(std::span<const Int>(x.coords())));
}

OrthComplement orth_complement(const IntLattice& l, std::span<const LatVec> s) {
    const std::size_t n = l.rank();
    IntMatrix st(s.size(), n);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!s[k].belongs_to(l)) throw DomainError("vector does not belong to the lattice");
        for (std::size_t j = 0; j < n; ++j) st(k, j) = s[k][j];
    }
    IntMatrix pairing = st * l.gram();
    SmithForm sf = smith_normal_form(pairing);
    if (sf.rank != s.size()) throw DomainError("orth_complement: vectors are linearly dependent");
    if (sf.rank == n) throw DomainError("orth_complement: vectors span the lattice");
    IntMatrix k = integer_kernel(pairing);
    IntMatrix gram = k.transpose() * l.gram() * k;
    return OrthComplement{IntLattice(std::move(gram)), std::move(k)};
}

// ------------------------------------------------------ isotropic sublattices

IsotropicDivisors isotropic_elementary_divisors(const IntLattice& l, std::span<const LatVec> e) {
    if (e.size() != 2) throw DomainError("isotropic sublattice must have rank 2");
    for (const auto& v : e)
        if (!v.belongs_to(l)) throw DomainError("vector does not belong to the lattice");
    if (inner(l, e[0], e[0]) != 0 || inner(l, e[1], e[1]) != 0 || inner(l, e[0], e[1]) != 0)
        throw DomainError("sublattice is not totally isotropic");
    const std::size_t n = l.rank();
    IntMatrix basis(n, 2);
    for (std::size_t j = 0; j < n; ++j) {
        basis(j, 0) = e[0][j];
        basis(j, 1) = e[1][j];
    }
    SmithForm bs = smith_normal_form(basis);
    if (bs.rank != 2) throw DomainError("isotropic sublattice vectors are dependent");
    if (bs.d(0, 0) != 1 || bs.d(1, 1) != 1) throw DomainError("isotropic sublattice is not primitive");

    IntMatrix et(2, n);
    for (std::size_t j = 0; j < n; ++j) {
        et(0, j) = e[0][j];
        et(1, j) = e[1][j];
    }
    SmithForm sf = smith_normal_form(et * l.gram());
    std::vector<Int> dg = sf.diagonal();
    if (dg.size() != 2) throw InternalError("pairing of an isotropic plane is degenerate");
    return IsotropicDivisors{dg[0], dg[1] / dg[0]};
}

bool isotropic_subgroups_cyclic(const IntLattice& l, std::uint64_t max_order) {
    DiscGroup a = disc_group(l);
    if (a.trivial()) return true;
    if (a.order() > Int(static_cast<unsigned long>(max_order)))
        throw BoundExceeded("discriminant group of order " + a.order().get_str() + " exceeds the bound");

    // A finite abelian group is non-cyclic iff for some prime p it contains
    // (Z/p)^2, so it suffices to look for two independent elements of order
    // p spanning a subgroup on which q vanishes.
    const std::size_t k = a.invariant_factors.size();
    if (k < 2) return true;

    std::vector<Int> primes;
    {
        Int m = a.invariant_factors.front();
        for (Int p = 2; p * p <= m; ++p)
            if (mod(m, p) == 0) {
                primes.push_back(p);
                while (mod(m, p) == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
    }

    auto isotropic = [&](const std::vector<Int>& c) { return a.q(c) == 0; };

    for (const Int& p : primes) {
        // The p-torsion A[p] is generated by (d_i / p) g_i for p | d_i.
        std::vector<Int> step(k);
        for (std::size_t i = 0; i < k; ++i) step[i] = mod(a.invariant_factors[i], p) == 0 ? a.invariant_factors[i] / p : Int(0);

        std::vector<std::vector<Int>> iso;
        std::vector<Int> t(k, 0);
        for (;;) {
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (step[i] == 0) continue;
                t[i] += 1;
                if (t[i] < p) break;
                t[i] = 0;
            }
            if (i == k) break;
            std::vector<Int> c(k);
            for (std::size_t j = 0; j < k; ++j) c[j] = t[j] * step[j];
            if (isotropic(c)) iso.push_back(std::move(c));
        }
        auto is_multiple = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
            for (Int s = 1; s < p; ++s) {
                bool eq = true;
                for (std::size_t j = 0; j < k && eq; ++j)
                    eq = mod(s * y[j], a.invariant_factors[j]) == x[j];
                if (eq) return true;
            }
            return false;
        };
        for (std::size_t i = 0; i < iso.size(); ++i)
            for (std::size_t j = i + 1; j < iso.size(); ++j) {
                if (is_multiple(iso[i], iso[j])) continue;
                std::vector<Int> s(k);
                for (std::size_t m = 0; m < k; ++m) s[m] = mod(iso[i][m] + iso[j][m], a.invariant_factors[m]);
                if (isotropic(s)) return false;
            }
    }
    return true;
}

} // namespace k3lat
