#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

namespace detail {
struct LatticeData;
}

class LatVec;
class DualVec;

/// An integral lattice given by a symmetric nondegenerate Gram matrix.
///
/// Copies share identity: two IntLattice objects are the same lattice iff
/// they were copied from one construction, even when their Gram matrices
/// agree. Vectors carry that identity and are rejected by other lattices.
class IntLattice {
public:
    explicit IntLattice(IntMatrix gram, std::string name = {});

    const IntMatrix& gram() const;
    std::size_t rank() const;
    const std::string& name() const;

    Int determinant() const;
    /// (positive, negative) inertia.
    std::pair<int, int> signature() const;
    bool is_even() const;
    bool is_positive_definite() const;
    bool is_negative_definite() const;

    bool same_as(const IntLattice& other) const noexcept { return data_ == other.data_; }
    std::weak_ptr<const void> identity() const noexcept { return data_; }

    LatVec vec(std::vector<Int> coords) const;
    LatVec vec(std::initializer_list<long> coords) const;
    LatVec basis_vector(std::size_t i) const;
    LatVec zero() const;

private:
    std::shared_ptr<const detail::LatticeData> data_;
};

/// Integer coordinate vector relative to the basis of its owning lattice.
class LatVec {
public:
    LatVec(const IntLattice& lattice, std::vector<Int> coords);

    const std::vector<Int>& coords() const noexcept { return coords_; }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const noexcept { return coords_.size(); }
    const IntLattice& lattice() const noexcept { return lattice_; }

    bool belongs_to(const IntLattice& l) const noexcept { return lattice_.same_as(l); }
    bool is_zero() const;
    /// Content (gcd of coordinates).
    Int content() const;

    friend LatVec operator+(const LatVec& a, const LatVec& b);
    friend LatVec operator-(const LatVec& a, const LatVec& b);
    friend LatVec operator-(const LatVec& a);
    friend LatVec operator*(const Int& s, const LatVec& a);
    friend bool operator==(const LatVec& a, const LatVec& b);
    friend bool operator<(const LatVec& a, const LatVec& b);

private:
    IntLattice lattice_;
    std::vector<Int> coords_;
};

/// Rational coordinate vector in the dual lattice L^v (coordinates are in
/// the basis of L, so G * coords is integral).
class DualVec {
public:
    DualVec(const IntLattice& lattice, std::vector<Rational> coords);

    const std::vector<Rational>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const IntLattice& lattice() const noexcept { return lattice_; }

    /// True when every coordinate is an integer, i.e. the class in A_L is 0.
    bool in_lattice() const;

private:
    IntLattice lattice_;
    std::vector<Rational> coords_;
};

/// The discriminant group A_L = L^v / L as a product of cyclic factors.
struct DiscGroup {
    std::vector<Int> invariant_factors;  ///< d_1 | d_2 | ... , all > 1
    std::vector<DualVec> generators;     ///< lifts of the cyclic generators
    Int exponent = 1;                    ///< d_k, or 1 for the trivial group
    /// q_L(g_i) = (g_i, g_i) reduced mod 2 (mod 1 when L is odd).
    std::vector<Rational> q_values;
    bool even = true;
    /// Rows of the Smith transform U used to read off generator coordinates.
    IntMatrix reducer;

    Int order() const;
    bool trivial() const noexcept { return invariant_factors.empty(); }
    /// Coordinates of the class of y with respect to the generators, each
    /// reduced into [0, d_i).
    std::vector<Int> coordinates(const DualVec& y) const;
    /// A dual vector representing sum c_i g_i.
    DualVec element(std::span<const Int> c) const;
    /// q_L of the element sum c_i g_i.
    Rational q(std::span<const Int> c) const;
};

/// Signature-independent form evaluation x^T G y.
Int inner(const IntLattice& l, const LatVec& x, const LatVec& y);
Rational inner(const IntLattice& l, const DualVec& x, const DualVec& y);
Int norm(const IntLattice& l, const LatVec& x);

enum class LatticeName { U, A, D, E, RankOne };

/// Standard models. E8 uses the Coxeter simple-root basis alpha_1..alpha_8
/// (alpha_2 attached to alpha_4); E6 and E7 are its leading sub-diagrams.
IntLattice make_named(LatticeName name, std::span<const long> params = {});

namespace named {
IntLattice U();
IntLattice A(long n);
IntLattice D(long n);
IntLattice E(long n);
IntLattice rank_one(long k);
/// 2U + 2E8(-1) + <-2d>, signature (2, 19).
IntLattice L2d(long d);
/// 3U + 2E8(-1).
IntLattice LK3();
/// 2U + 3E8(-1).
IntLattice L2_26();
} // namespace named

IntLattice direct_sum(std::span<const IntLattice> parts);
IntLattice direct_sum(std::initializer_list<IntLattice> parts);
IntLattice rescale(const IntLattice& l, const Int& t);

/// Positive generator of the ideal (x, L).
Int divisor(const IntLattice& l, const LatVec& x);

bool is_primitive(const LatVec& x);

DiscGroup disc_group(const IntLattice& l);

struct OrthComplement {
    IntLattice lattice;
    /// rank(L) x rank(complement); column j is the j-th basis vector of the
    /// complement written in the basis of L.
    IntMatrix embedding;

    LatVec embed(const IntLattice& ambient, const LatVec& x) const;
};

/// The primitive sublattice {x in L : (x, s) = 0 for all s in S}.
OrthComplement orth_complement(const IntLattice& l, std::span<const LatVec> s);

struct IsotropicDivisors {
    Int delta;
    Int e;
};

/// Elementary divisors (delta, delta*e) of the pairing of a primitive totally
/// isotropic rank-2 sublattice E against L; returns (delta, e).
IsotropicDivisors isotropic_elementary_divisors(const IntLattice& l, std::span<const LatVec> e);

/// True iff every subgroup of A_L on which q_L vanishes is cyclic.
/// Throws BoundExceeded when |A_L| exceeds max_order.
bool isotropic_subgroups_cyclic(const IntLattice& l, std::uint64_t max_order = 1'000'000);

} // namespace k3lat
