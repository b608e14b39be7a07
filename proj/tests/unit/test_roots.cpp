#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>

#include "../oracles.hpp"
#include "k3lat/e8.hpp"
#include "k3lat/lattice_expr.hpp"
#include "k3lat/roots.hpp"

using namespace k3lat;

namespace {

std::vector<std::vector<long>> to_rows(const IntMatrix& g) {
    std::vector<std::vector<long>> rows(g.rows(), std::vector<long>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) rows[i][j] = g(i, j).get_si();
    return rows;
}

} // namespace

TEST_CASE("root counts of named lattices") {
    CHECK(enumerate_roots(parse_lattice_expr("E8")).count == 240);
    CHECK(enumerate_roots(parse_lattice_expr("E7")).count == 126);
    CHECK(enumerate_roots(parse_lattice_expr("E6")).count == 72);
    CHECK(enumerate_roots(parse_lattice_expr("D(8)")).count == 112);
    CHECK(enumerate_roots(parse_lattice_expr("A(2)")).count == 6);
    CHECK(enumerate_roots(parse_lattice_expr("4A(1)")).count == 8);
    CHECK(enumerate_roots(parse_lattice_expr("A(1)+A(2)")).count == 8);
    CHECK(enumerate_roots(parse_lattice_expr("A(3)")).count == 12);
    CHECK(enumerate_roots(parse_lattice_expr("2A(1)+A(2)")).count == 10);
}

TEST_CASE("root data invariants") {
    const IntLattice& l = e8::lattice();
    RootSystemData rs = enumerate_roots(l);
    CHECK(rs.count == rs.roots.size());
    CHECK(std::is_sorted(rs.roots.begin(), rs.roots.end()));
    std::set<std::vector<Int>> all;
    for (const auto& r : rs.roots) {
        CHECK(norm(l, r) == 2);
        all.insert(r.coords());
    }
    for (const auto& r : rs.roots) CHECK(all.count((-r).coords()) == 1);
}

TEST_CASE("negative-definite input is handled by negation") {
    CHECK(enumerate_roots(parse_lattice_expr("E8(-1)")).count == 240);
    CHECK_THROWS_AS(enumerate_roots(parse_lattice_expr("U")), DomainError);
}

TEST_CASE("E8 roots agree with the textbook list") {
    std::vector<e8::Doubled> mine = e8::roots_doubled();
    std::vector<oracle::Vec8> ref = oracle::e8_roots();
    std::sort(ref.begin(), ref.end());
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i] == ref[i]);

    const IntLattice& l = e8::lattice();
    std::set<e8::Doubled> from_enum;
    for (const auto& r : enumerate_roots(l).roots) from_enum.insert(e8::to_doubled(r));
    CHECK(from_enum == std::set<e8::Doubled>(ref.begin(), ref.end()));
}

TEST_CASE("E8 representation numbers equal 240 sigma_3(n)") {
    const IntLattice& l = e8::lattice();
    for (long n = 1; n <= 20; ++n) {
        const std::uint64_t c = count_norm_vectors(l, 2 * n);
        CHECK(Int(static_cast<unsigned long>(c)) == 240 * oracle::sigma(n, 3));
        if (n <= 4) CHECK(c == oracle::e8_count_norm(2 * n));
    }
    CHECK(count_norm_vectors(l, 4) == 2160);
}

TEST_CASE("odd norms in even lattices have no vectors") {
    bool called = false;
    const std::uint64_t c = enumerate_norm_vectors(e8::lattice(), 7, [&](std::span<const std::int64_t>) {
        called = true;
        return true;
    });
    CHECK(c == 0);
    CHECK_FALSE(called);
}

TEST_CASE("enumeration matches a box scan on random definite forms") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> off(-1, 1);
    int tested = 0;
    while (tested < 12) {
        const std::size_t n = 3 + tested % 3;
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const long v = i == j ? 2 + (tested % 2) * 2 : off(rng);
                g(i, j) = v;
                g(j, i) = v;
            }
        if (determinant(g) == 0) continue;
        IntLattice l(g);
        if (!l.is_positive_definite()) continue;
        auto rows = to_rows(g);
        auto ref = oracle::brute_counts(rows, 10, oracle::inverse_diagonal(rows));
        for (long m = 1; m <= 10; ++m) CHECK(count_norm_vectors(l, m) == ref[m]);
        ++tested;
    }
}

TEST_CASE("visitor sees each vector once, also with several workers") {
    IntLattice l = parse_lattice_expr("D(5)");
    for (unsigned threads : {1u, 3u}) {
        std::mutex mu;
        std::set<std::vector<std::int64_t>> seen;
        std::atomic<int> dup{0};
        EnumOptions opts;
        opts.threads = threads;
        const std::uint64_t c = enumerate_norm_vectors(
            l, 6,
            [&](std::span<const std::int64_t> x) {
                std::lock_guard<std::mutex> lock(mu);
                if (!seen.emplace(x.begin(), x.end()).second) ++dup;
                return true;
            },
            opts);
        CHECK(dup == 0);
        CHECK(c == seen.size());
        CHECK(c == count_norm_vectors(l, 6));
    }
}

TEST_CASE("visitor can stop early") {
    int calls = 0;
    enumerate_norm_vectors(e8::lattice(), 2, [&](std::span<const std::int64_t>) { return ++calls < 5; });
    CHECK(calls == 5);
}

TEST_CASE("orthogonal root counts") {
    const IntLattice& l = e8::lattice();
    CHECK(count_orth_roots(l, l.zero()) == 240);
    // Table I (1,2,4,5) and Table II-10 (1;2,3,10), doubled e-coordinates.
    e8::Doubled t1{0, 0, 2, 2, 4, 4, 18, -2};
    e8::Doubled t2{0, 0, 2, 2, 2, 4, 6, 20};
    CHECK(count_orth_roots(l, e8::from_doubled(t1)) == 12);
    CHECK(count_orth_roots(l, e8::from_doubled(t2)) == 10);
    CHECK(oracle::orth_roots(t1) == 12);
    CHECK(oracle::orth_roots(t2) == 10);
    // A root is orthogonal to the 126 roots of its E7 complement.
    CHECK(count_orth_roots(l, l.basis_vector(0)) == 126);
}

TEST_CASE("orthogonal root count properties") {
    const IntLattice& l = e8::lattice();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int t = 0; t < 300; ++t) {
        std::vector<Int> c(8);
        for (auto& v : c) v = dist(rng);
        LatVec x = l.vec(c);
        const std::size_t n = count_orth_roots(l, x);
        CHECK(n % 2 == 0);
        CHECK(count_orth_roots(l, -x) == n);
        const e8::Doubled y = e8::to_doubled(x);
        CHECK(static_cast<int>(n) == oracle::orth_roots(y));
        CHECK(e8::count_orth_roots(y) == oracle::orth_roots(y));
        CHECK(e8::count_orth_roots_scan(y) == oracle::orth_roots(y));
        CHECK(e8::count_orth_roots(e8::canonical_d8(y)) == oracle::orth_roots(y));
    }
    CHECK_THROWS_AS(count_orth_roots(l, named::U().basis_vector(0)), DomainError);
}

TEST_CASE("the roots meeting a fixed root form 28 A2 systems") {
    for (const auto& a : e8::roots_doubled()) {
        oracle::Bouquet b = oracle::bouquet(a);
        CHECK(b.x_size == 114);
        CHECK(b.triples.size() == 28);
        std::set<oracle::Vec8> uni;
        for (const auto& t : b.triples) {
            CHECK(t.size() == 6);
            uni.insert(t.begin(), t.end());
        }
        CHECK(uni.size() == 2 + 28 * 4);
        for (std::size_t i = 0; i < b.triples.size(); ++i)
            for (std::size_t j = i + 1; j < b.triples.size(); ++j) {
                std::vector<oracle::Vec8> common;
                std::set_intersection(b.triples[i].begin(), b.triples[i].end(), b.triples[j].begin(),
                                      b.triples[j].end(), std::back_inserter(common));
                CHECK(common.size() == 2);
            }
        CHECK(240 - e8::count_orth_roots(a) == 114);
    }
}

TEST_CASE("D8 orbit representatives") {
    e8::Doubled y{1, -3, 1, 1, -1, 1, 1, -1};
    e8::Doubled c = e8::canonical_d8(y);
    CHECK(c == e8::Doubled{3, 1, 1, 1, 1, 1, 1, -1});
    CHECK(e8::orbit_size_d8(e8::Doubled{2, 2, 0, 0, 0, 0, 0, 0}) == 112);
    CHECK(e8::orbit_size_d8(e8::Doubled{1, 1, 1, 1, 1, 1, 1, 1}) == 128);
}
