#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../oracles.hpp"
#include "k3lat/rst.hpp"

using namespace k3lat;

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    return block_diagonal(std::span<const IntMatrix>(blocks.data(), blocks.size()));
}

// Signed permutation matrix: column j has sign[j] in row perm[j].
IntMatrix signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& sign) {
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = sign[j];
    return m;
}

// Brute-force Sigma' straight from the definition.
Rational ref_sigma_prime(const std::vector<std::uint64_t>& a, std::uint64_t k, std::uint64_t l) {
    const std::size_t n = a.size();
    Rational s = oracle::frac(make_rational(static_cast<unsigned long>(l * a[n - 1]), static_cast<unsigned long>(k)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += oracle::frac(make_rational(static_cast<unsigned long>(l * a[i]), static_cast<unsigned long>(2 * k)));
    return s;
}

} // namespace

TEST_CASE("Sigma of eigenvalue exponents") {
    CHECK(sigma_rst(EigenExponents(7, {0, 0, 0})) == 0);
    CHECK(sigma_rst(EigenExponents(2, {1, 1})) == 1);
    CHECK(sigma_rst(EigenExponents(5, {1, 4})) == 1);
    CHECK(sigma_rst(EigenExponents(6, {1, 2, 3})) == 1);
    CHECK_THROWS_AS(EigenExponents(3, {3}), DomainError);
    CHECK_THROWS_AS(EigenExponents(0, {}), DomainError);
}

TEST_CASE("Sigma(g) + Sigma(g^-1) is an integer without fixed directions") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t m = 2 + rng() % 30;
        std::vector<std::uint64_t> a(1 + rng() % 6);
        for (auto& v : a) v = 1 + rng() % (m - 1);
        EigenExponents e(m, a);
        Rational s = sigma_rst(e) + sigma_rst(e.inverse());
        CHECK(s.get_den() == 1);
        CHECK(s == static_cast<long>(a.size()));
    }
}

TEST_CASE("Sigma prime") {
    CHECK(sigma_prime(EigenExponents(4, {2, 2, 1}), 2, 1) == make_rational(3, 2));
    CHECK(sigma_prime(EigenExponents(6, {3}), 3, 1) == 0);
    CHECK(sigma_prime(EigenExponents(6, {1}), 3, 2) == make_rational(2, 3));
    CHECK_THROWS_AS(sigma_prime(EigenExponents(4, {2, 2, 1}), 2, 2), DomainError);
    CHECK_THROWS_AS(sigma_prime(EigenExponents(4, {2, 1, 1}), 2, 1), DomainError);
    for (std::uint64_t k = 2; k <= 6; ++k)
        for (std::uint64_t l = 1; l < k; ++l) {
            std::vector<std::uint64_t> a{0, 2, 4 % (2 * k), 1};
            CHECK(sigma_prime(EigenExponents(2 * k, a), k, l) == ref_sigma_prime(a, k, l));
        }
}

TEST_CASE("c_min values") {
    CHECK(c_min(30).value == make_rational(92, 30));
    CHECK(c_min(30).argmin == 19);
    CHECK(c_min(4).value == make_rational(1, 2));
    CHECK(c_min(3).value == make_rational(1, 3));
    CHECK(c_min(6).value == make_rational(1, 3));
    CHECK(c_min(18).value == make_rational(42, 18));
    CHECK(c_min(12).value == make_rational(16, 12));
    CHECK(c_min(10).value == make_rational(12, 10));
    CHECK(c_min(8).value == make_rational(12, 8));
    CHECK(c_min(5).value == make_rational(6, 5));
    for (std::uint64_t d = 3; d <= 40; ++d) CHECK(c_min(d).value == oracle::c_min(d));
    CHECK_THROWS_AS(c_min(2), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    for (std::uint64_t n = 1; n <= 30; ++n) {
        IntPoly prod{1};
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic(d));
        IntPoly xn(n + 1, 0);
        xn[0] = -1;
        xn[n] = 1;
        CHECK(prod == xn);
        CHECK(cyclotomic(n).size() == euler_phi(n) + 1);
    }
}

TEST_CASE("characteristic polynomials") {
    CHECK(characteristic_polynomial(IntMatrix{{0, -1}, {1, 0}}) == IntPoly{1, 0, 1});
    CHECK(characteristic_polynomial(IntMatrix{{2, 1}, {1, 3}}) == IntPoly{5, -5, 1});
}

TEST_CASE("cyclotomic decomposition") {
    CycloDecomp id = cyclo_decompose(IntMatrix::identity(5));
    CHECK(id.nu == std::map<std::uint64_t, std::uint64_t>{{1, 5}});
    CHECK(id.order == 1);

    CycloDecomp neg = cyclo_decompose(IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    CHECK(neg.nu == std::map<std::uint64_t, std::uint64_t>{{2, 3}});

    // A 6-fold rotation (char poly t^2 - t + 1) next to a 2x2 identity.
    IntMatrix rot6{{1, -1}, {1, 0}};
    CycloDecomp r = cyclo_decompose(block_diag({rot6, IntMatrix::identity(2)}));
    CHECK(r.nu == std::map<std::uint64_t, std::uint64_t>{{1, 2}, {6, 1}});
    CHECK(r.order == 6);

    CHECK_THROWS_AS(cyclo_decompose(IntMatrix{{1, 1}, {0, 1}}, 50), BoundExceeded);
}

TEST_CASE("decomposition invariants on signed permutations") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> sign(n);
        for (auto& s : sign) s = rng() % 2 ? 1 : -1;
        IntMatrix g = signed_permutation(perm, sign);
        CycloDecomp c = cyclo_decompose(g);
        std::uint64_t dim = 0;
        IntPoly prod{1};
        for (const auto& [d, nu] : c.nu) {
            dim += nu * euler_phi(d);
            for (std::uint64_t i = 0; i < nu; ++i) prod = poly_mul(prod, cyclotomic(d));
            CHECK(c.order % d == 0);
        }
        CHECK(dim == n);
        CHECK(prod == c.charpoly);
        CHECK(c.charpoly == characteristic_polynomial(g));
        EigenExponents e = exponents(c);
        CHECK(e.exponents().size() == n);
        CHECK(e.order() == c.order);

        ToricReport rep = toric_order2_check(g);
        CHECK_FALSE(rep.violation);
        if (rep.quasi_reflection) CHECK(rep.order_two);
    }
}

TEST_CASE("quasi-reflections and reflections") {
    CHECK(is_reflection(EigenExponents(2, {0, 0, 1})));
    CHECK(is_quasi_reflection(EigenExponents(2, {0, 0, 1})));
    CHECK(is_quasi_reflection(EigenExponents(3, {0, 0, 1})));
    CHECK_FALSE(is_reflection(EigenExponents(3, {0, 0, 1})));
    CHECK_FALSE(is_quasi_reflection(EigenExponents(2, {0, 1, 1})));
    CHECK_FALSE(is_reflection(EigenExponents(2, {0, 1, 1})));
}

TEST_CASE("toric checks on explicit matrices") {
    ToricReport swap = toric_order2_check(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(swap.reflection);
    CHECK(swap.order_two);
    CHECK(swap.sigma == make_rational(1, 2));
    CHECK_FALSE(swap.violation);

    ToricReport rot3 = toric_order2_check(IntMatrix{{0, -1}, {1, -1}});
    CHECK(rot3.decomposition.order == 3);
    CHECK(rot3.sigma == 1);
    CHECK_FALSE(rot3.quasi_reflection);
    CHECK_FALSE(rot3.violation);
}

TEST_CASE("fractional sums for phi(r) >= 6") {
    BigPhiReport rep = bigphi_verify(100);
    CHECK(rep.violations == 0);
    CHECK(rep.minimum >= 1);

    // r = 7, k1 = 1: the remaining units are 2, 3, 4, 5 and the sum is
    // 3/7 + 4/7 + 5/7 + 6/7 = 18/7.
    BigPhiReport r7 = bigphi_verify(7);
    CHECK(r7.cases == 6);
    CHECK(r7.minimum == make_rational(10, 7));

    BigPhiReport threaded = bigphi_verify(60, 3);
    BigPhiReport single = bigphi_verify(60, 1);
    CHECK(threaded.cases == single.cases);
    CHECK(threaded.minimum == single.minimum);
    CHECK(threaded.min_r == single.min_r);
}
