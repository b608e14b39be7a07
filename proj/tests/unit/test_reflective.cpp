#include <doctest.h>

#include <random>

#include "k3lat/e8.hpp"
#include "k3lat/lattice_expr.hpp"
#include "k3lat/reflective.hpp"
#include "k3lat/roots.hpp"

using namespace k3lat;

namespace {

// Basis of L_2d: e1, f1, e2, f2, sixteen E8(-1) vectors, h.
constexpr std::size_t kE1 = 0, kF1 = 1, kH = 20;

LatVec l2d_vec(const IntLattice& l, std::initializer_list<std::pair<std::size_t, long>> entries) {
    std::vector<Int> c(l.rank(), 0);
    for (const auto& [i, v] : entries) c[i] = v;
    return l.vec(c);
}

} // namespace

TEST_CASE("root reflections in E8") {
    const IntLattice& l = e8::lattice();
    for (const auto& r : enumerate_roots(l).roots) {
        IsometryMatrix s = reflection(l, r);
        CHECK(s.compose(s).is_identity());
        CHECK(determinant(s.matrix()) == -1);
        CHECK(s.apply(r) == -r);
    }
}

TEST_CASE("reflections in small indefinite lattices") {
    IntLattice l = parse_lattice_expr("<-10>+U");
    IsometryMatrix s = reflection(l, l.basis_vector(0));
    CHECK(s.apply(l.basis_vector(0)) == -l.basis_vector(0));
    CHECK(divisor(l, l.basis_vector(0)) == 10);

    IntLattice u = named::U();
    IsometryMatrix swap = reflection(u, u.vec({1, 1}));
    CHECK(swap.matrix() == IntMatrix{{0, -1}, {-1, 0}});

    IntLattice odd = parse_lattice_expr("U+<-4>");
    CHECK_FALSE(is_reflective(odd, odd.vec({1, 2, 0})));
    CHECK_THROWS_AS(reflection(odd, odd.vec({1, 2, 0})), NotIntegralError);
    CHECK_THROWS_AS(IsometryMatrix(u, IntMatrix{{1, 1}, {0, 1}}), DomainError);
}

TEST_CASE("integral reflections are involutions preserving the form") {
    IntLattice l = parse_lattice_expr("U+<-4>+<6>+A(2)");
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-4, 4);
    int found = 0;
    for (int t = 0; t < 4000 && found < 100; ++t) {
        std::vector<Int> c(l.rank());
        for (auto& v : c) v = dist(rng);
        LatVec r = l.vec(c);
        if (r.is_zero() || norm(l, r) == 0 || !is_reflective(l, r)) continue;
        IsometryMatrix s = reflection(l, r);
        CHECK(s.matrix().transpose() * l.gram() * s.matrix() == l.gram());
        CHECK(s.compose(s).is_identity());
        ++found;
    }
    CHECK(found > 20);
}

TEST_CASE("action on the discriminant group") {
    const IntLattice& e8l = e8::lattice();
    DiscGroup a8 = disc_group(e8l);
    IsometryMatrix s8 = reflection(e8l, e8l.basis_vector(3));
    CHECK(is_id_on_disc(e8l, a8, s8));

    const long d = 5;
    IntLattice l = named::L2d(d);
    DiscGroup a = disc_group(l);
    LatVec r2 = l2d_vec(l, {{kE1, 1}, {kF1, -1}});
    REQUIRE(norm(l, r2) == -2);
    CHECK(is_id_on_disc(l, a, reflection(l, r2)));

    LatVec rd = l2d_vec(l, {{kH, 1}, {kE1, d}});
    REQUIRE(norm(l, rd) == -2 * d);
    REQUIRE(divisor(l, rd) == d);
    CHECK(is_minus_id_on_disc(l, a, reflection(l, rd)));
    CHECK_FALSE(is_id_on_disc(l, a, reflection(l, rd)));
}

TEST_CASE("classification examples") {
    IntLattice l = named::L2d(5);
    CHECK(classify_reflection(l, l2d_vec(l, {{kE1, 1}, {kF1, -1}})).cls == ReflectionClass::InTildeO);

    ReflectionReport h = classify_reflection(l, l.basis_vector(kH));
    CHECK(h.cls == ReflectionClass::MinusInTildeO);
    CHECK(h.div == 10);
    CHECK(h.r_squared == -10);

    // In U + <-12>, r = 2e + 2f + h has r^2 = -4 and div 2, and acts on
    // A = Z/12 by multiplication with 7.
    IntLattice m = parse_lattice_expr("U+<-12>");
    ReflectionReport n = classify_reflection(m, m.vec({2, 2, 1}));
    CHECK(n.r_squared == -4);
    CHECK(n.div == 2);
    CHECK(n.cls == ReflectionClass::Neither);
    CHECK(n.action == IntMatrix{{7}});

    // In U + <-4>, the same shape has r^2 = 4 = |A| and acts as -id.
    IntLattice m4 = parse_lattice_expr("U+<-4>");
    CHECK(classify_reflection(m4, m4.vec({2, 2, 1})).cls == ReflectionClass::MinusInTildeO);

    CHECK(classify_reflection(m, m.vec({1, 2, 0})).cls == ReflectionClass::NotIntegral);
    CHECK_THROWS_AS(classify_reflection(m, m.vec({2, 2, 0})), DomainError);
    CHECK_THROWS_AS(classify_reflection(m, m.vec({1, 0, 0})), DomainError);
}

TEST_CASE("odd discriminant: +-id is decided by norm and divisor") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> off(-3, 3);
    int lattices = 0, checked = 0;
    while (lattices < 25) {
        // Rank 4: an even Gram matrix of odd rank always has even determinant.
        IntMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) {
                const long v = i == j ? 2 * off(rng) : off(rng);
                g(i, j) = v;
                g(j, i) = v;
            }
        const Int det = determinant(g);
        if (det == 0 || det % 2 == 0) continue;
        IntLattice l(g);
        DiscGroup a = disc_group(l);
        const Int D = a.exponent;
        ++lattices;
        for (long x = -2; x <= 2; ++x)
            for (long y = -2; y <= 2; ++y)
                for (long z = -2; z <= 2; ++z)
                    for (long w = -2; w <= 2; ++w) {
                        LatVec r = l.vec({x, y, z, w});
                        if (r.is_zero() || !is_primitive(r) || norm(l, r) == 0 || !is_reflective(l, r)) continue;
                        ReflectionReport rep = classify_reflection(l, a, r);
                        const Int n = abs(rep.r_squared);
                        CHECK(rep.acts_as_id == (n == 2));
                        CHECK(rep.acts_as_minus_id == (n == 2 * D && rep.div == D));
                        ++checked;
                    }
    }
    CHECK(checked > 100);
}

TEST_CASE("determinant of the orthogonal complement") {
    const long d = 5;
    IntLattice l = named::L2d(d);
    OrthDetCheck one = orth_det_check(d, l, l.basis_vector(kH));
    CHECK(abs(one.det) == 1);
    CHECK(one.match);

    OrthDetCheck four = orth_det_check(d, l, l2d_vec(l, {{kH, 1}, {kE1, d}}));
    CHECK(abs(four.det) == 4);
    CHECK(four.match);

    // A (-2)-vector with div 1: |det| = |det L| * 2 = 4d.
    OrthDetCheck gen = orth_det_check(l, l2d_vec(l, {{kE1, 1}, {kF1, -1}}));
    CHECK(abs(gen.det) == 4 * d);
    CHECK(gen.match);

    CHECK_THROWS_AS(orth_det_check(d, l, l2d_vec(l, {{kE1, 1}, {kF1, -1}})), DomainError);
}

TEST_CASE("2-elementary groups and parity") {
    DiscGroup u2 = disc_group(parse_lattice_expr("U(2)"));
    CHECK(is_two_elementary(u2));
    CHECK(parity_delta(u2) == 0);

    DiscGroup pm = disc_group(parse_lattice_expr("<2>+<-2>"));
    CHECK(is_two_elementary(pm));
    CHECK(parity_delta(pm) == 1);

    CHECK_FALSE(is_two_elementary(disc_group(parse_lattice_expr("<3>"))));
    CHECK_FALSE(is_two_elementary(disc_group(parse_lattice_expr("<-4>"))));
}

TEST_CASE("eigenlattices of involutions are 2-elementary") {
    // The product of reflections in k mutually orthogonal roots of E8 is an
    // involution; its -1 eigenlattice is the saturation T of their span and
    // its +1 eigenlattice is T-perp.
    const IntLattice& l = e8::lattice();
    const std::vector<e8::Doubled> roots{
        {2, 2, 0, 0, 0, 0, 0, 0}, {2, -2, 0, 0, 0, 0, 0, 0}, {0, 0, 2, 2, 0, 0, 0, 0}, {0, 0, 2, -2, 0, 0, 0, 0}};
    for (std::size_t k = 1; k <= roots.size(); ++k) {
        std::vector<LatVec> s;
        for (std::size_t i = 0; i < k; ++i) s.push_back(e8::from_doubled(roots[i]));
        OrthComplement perp = orth_complement(l, s);
        std::vector<LatVec> perp_basis;
        for (std::size_t j = 0; j < perp.lattice.rank(); ++j)
            perp_basis.push_back(perp.embed(l, perp.lattice.basis_vector(j)));
        OrthComplement t = orth_complement(l, perp_basis);
        CHECK(is_two_elementary(disc_group(perp.lattice)));
        CHECK(is_two_elementary(disc_group(t.lattice)));
        CHECK(disc_group(perp.lattice).order() == disc_group(t.lattice).order());
    }

    IntLattice uu = parse_lattice_expr("2U");
    std::vector<LatVec> diag{uu.vec({1, 0, 1, 0}), uu.vec({0, 1, 0, 1})};
    OrthComplement anti = orth_complement(uu, diag);
    CHECK(is_two_elementary(disc_group(anti.lattice)));
    CHECK(anti.lattice.determinant() == -4);
}

TEST_CASE("sampled reflective vectors of L_2d") {
    for (std::uint64_t d : {1u, 2u, 5u, 6u}) {
        ReflK3Report rep = reflK3_sample_check(d, 1500, 1);
        CHECK(rep.counterexamples.empty());
        CHECK(rep.det_mismatches == 0);
        CHECK(rep.samples == 1500);
        CHECK(rep.reflective == rep.plus_id + rep.minus_id + rep.neither);
        CHECK(rep.samples == rep.non_primitive + rep.non_reflective + rep.reflective);
        CHECK(rep.plus_id > 0);
        // For d = 1 the group is Z/2, where -id and id coincide.
        if (d > 1) CHECK(rep.minus_id > 0);
        CHECK(rep.det_checked > 0);
    }
    ReflK3Report a = reflK3_sample_check(5, 300, 42);
    ReflK3Report b = reflK3_sample_check(5, 300, 42);
    CHECK(a.reflective == b.reflective);
    CHECK(a.neither == b.neither);
}
