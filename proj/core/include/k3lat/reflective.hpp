#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/// sigma_r does not preserve L.
class NotIntegralError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An isometry of L as an integer matrix acting on coordinate columns.
/// Construction checks M^T G M = G exactly.
class IsometryMatrix {
public:
    IsometryMatrix(const IntLattice& l, IntMatrix m);

    const IntMatrix& matrix() const noexcept { return m_; }
    const IntLattice& lattice() const noexcept { return lattice_; }
    LatVec apply(const LatVec& x) const;
    DualVec apply(const DualVec& y) const;
    IsometryMatrix compose(const IsometryMatrix& other) const;  ///< this * other
    bool is_identity() const;

private:
    IntLattice lattice_;
    IntMatrix m_;
};

/// sigma_r : l -> l - 2 (l, r) / (r, r) r. Throws NotIntegralError when
/// sigma_r is not defined over Z.
IsometryMatrix reflection(const IntLattice& l, const LatVec& r);

/// Whether sigma_r is defined over Z, i.e. (r, r) divides 2 (b, r) for every
/// basis vector b.
bool is_reflective(const IntLattice& l, const LatVec& r);

/// Column i holds the coordinates of g(g_i) in A_L (g_i the generators).
IntMatrix disc_action(const IntLattice& l, const DiscGroup& a, const IsometryMatrix& g);
bool is_id_on_disc(const IntLattice& l, const DiscGroup& a, const IsometryMatrix& g);
bool is_minus_id_on_disc(const IntLattice& l, const DiscGroup& a, const IsometryMatrix& g);

enum class ReflectionClass { InTildeO, MinusInTildeO, Neither, NotIntegral };
std::string to_string(ReflectionClass c);

struct ReflectionReport {
    std::vector<Int> r;
    Int r_squared;
    Int div;
    bool integral = false;
    bool acts_as_id = false;
    bool acts_as_minus_id = false;
    IntMatrix action;  ///< disc_action of sigma_r (empty when not integral)
    ReflectionClass cls = ReflectionClass::NotIntegral;
};

/// Classifies sigma_r by its action on A_L. InTildeO wins when sigma_r acts
/// as both id and -id (A_L 2-elementary). For even L the result is checked
/// against the divisor and norm conditions that characterise +-id; any
/// disagreement raises InternalError. Throws DomainError when r is not
/// primitive.
ReflectionReport classify_reflection(const IntLattice& l, const LatVec& r);
ReflectionReport classify_reflection(const IntLattice& l, const DiscGroup& a, const LatVec& r);

struct OrthDetCheck {
    Int det;        ///< determinant of the Gram matrix of r-perp
    Int predicted;  ///< |det L| * |r^2| / div(r)^2
    bool match = false;
};

/// Determinant of r-perp in L against |det L| |r^2| / div(r)^2. In L_2d with
/// r^2 = -2d this is 4 d^2 / div(r)^2: 1 for div(r) = 2d and 4 for div(r) = d.
OrthDetCheck orth_det_check(const IntLattice& l, const LatVec& r);
/// The L_2d form: requires r primitive, r^2 = +-2d and div(r) in {d, 2d}.
OrthDetCheck orth_det_check(std::uint64_t d, const IntLattice& l2d, const LatVec& r);

bool is_two_elementary(const DiscGroup& a);
/// 0 when every q-value is an integer, 1 otherwise.
int parity_delta(const DiscGroup& a);

struct ReflK3Report {
    std::uint64_t d = 0;
    std::uint64_t samples = 0;
    std::uint64_t non_primitive = 0;  ///< also counts isotropic samples
    std::uint64_t non_reflective = 0;
    std::uint64_t reflective = 0;
    std::uint64_t plus_id = 0;
    std::uint64_t minus_id = 0;
    std::uint64_t neither = 0;
    std::uint64_t det_checked = 0;
    std::uint64_t det_mismatches = 0;
    std::vector<std::vector<Int>> counterexamples;
};

/// Samples vectors of L_2d and checks that sigma_r acts as +-id on A iff
/// r^2 = +-2, or r^2 = +-2d with div(r) in {d, 2d}. Reflective samples with
/// r^2 = +-2d also go through orth_det_check. Box-uniform samples in
/// [-box, box] are mixed with families built to hit each reflective type.
ReflK3Report reflK3_sample_check(std::uint64_t d, std::uint64_t samples, std::uint64_t seed = 1, long box = 20);

} // namespace k3lat
