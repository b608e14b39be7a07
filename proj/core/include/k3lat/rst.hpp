#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Eigenvalues zeta^(a_1), ..., zeta^(a_n) of an element of order dividing
/// m, with zeta = exp(2 pi i / m) and 0 <= a_i < m.
class EigenExponents {
public:
    EigenExponents(std::uint64_t m, std::vector<std::uint64_t> a);

    std::uint64_t order() const noexcept { return m_; }
    const std::vector<std::uint64_t>& exponents() const noexcept { return a_; }
    /// Exponents of g^(-1).
    EigenExponents inverse() const;

private:
    std::uint64_t m_;
    std::vector<std::uint64_t> a_;
};

/// Sigma(g) = sum a_i / m.
Rational sigma_rst(const EigenExponents& e);

/// {l a_n / k} + sum_{i<n} {l a_i / (2k)} for an element of order 2k with
/// a_n odd and a_i even for i < n, and 1 <= l < k.
Rational sigma_prime(const EigenExponents& e, std::uint64_t k, std::uint64_t l);

struct CMin {
    Rational value;
    std::uint64_t argmin = 0;  ///< smallest shift a attaining the minimum
};

/// min over 0 <= a < d of sum_{0<b<d, gcd(b,d)=1} {(b + a) / d}, for d >= 3.
CMin c_min(std::uint64_t d);

std::uint64_t euler_phi(std::uint64_t n);

/// Integer polynomial, coefficients from the constant term up.
using IntPoly = std::vector<Int>;

/// The cyclotomic polynomial Phi_n.
IntPoly cyclotomic(std::uint64_t n);
/// det(t I - M) by Faddeev-LeVerrier with exact division.
IntPoly characteristic_polynomial(const IntMatrix& m);

struct CycloDecomp {
    std::map<std::uint64_t, std::uint64_t> nu;  ///< d -> multiplicity of Phi_d
    std::uint64_t order = 1;                    ///< order of the matrix
    IntPoly charpoly;
};

/// Multiplicities of the cyclotomic factors of the characteristic polynomial
/// of a finite-order integer matrix. Throws BoundExceeded when no power up
/// to order_cap is the identity, and InternalError when the characteristic
/// polynomial is not a product of Phi_d over divisors d of the order.
CycloDecomp cyclo_decompose(const IntMatrix& g, std::uint64_t order_cap = 10'000);

/// Eigenvalue exponents relative to the matrix order: each Phi_d
/// contributes b (m / d) for every b in [0, d) coprime to d. Sorted.
EigenExponents exponents(const CycloDecomp& c);

bool is_quasi_reflection(const EigenExponents& e);
bool is_reflection(const EigenExponents& e);

struct BigPhiReport {
    std::uint64_t r_max = 0;
    std::uint64_t cases = 0;       ///< (r, k1) pairs checked
    std::uint64_t violations = 0;
    Rational minimum;              ///< smallest sum seen
    std::uint64_t min_r = 0;
    std::uint64_t min_k1 = 0;
};

/// For every r <= r_max with phi(r) >= 6 and every k1 coprime to r, with
/// k2 = r - k1 and k3, ... the remaining residues coprime to r, evaluates
/// sum_{i>=3} {(k1 + k_i) / r} and counts the sums below 1.
BigPhiReport bigphi_verify(std::uint64_t r_max, unsigned threads = 1);

struct ToricReport {
    CycloDecomp decomposition;
    Rational sigma;
    bool quasi_reflection = false;
    bool reflection = false;
    bool order_two = false;
    /// Quasi-reflection whose exceptional eigenvalue is not -1, or a
    /// non-identity non-reflection with Sigma < 1.
    bool violation = false;
};

ToricReport toric_order2_check(const IntMatrix& g, std::uint64_t order_cap = 10'000);

} // namespace k3lat
