#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/// Truncated power series sum_k c_k q^(k/step) with exact rational
/// coefficients, known for all exponents k/step <= precision.
///
/// Series on different grids are combined by first moving them to a common
/// grid with regrid(). Moving to a coarser grid asserts that every dropped
/// coefficient is zero.
class QSeries {
public:
    QSeries(unsigned step, std::size_t precision);

    static QSeries one(unsigned step, std::size_t precision);

    unsigned step() const noexcept { return step_; }
    std::size_t precision() const noexcept { return precision_; }
    /// Number of stored coefficients, precision * step + 1.
    std::size_t size() const noexcept { return c_.size(); }

    const Rational& operator[](std::size_t k) const { return c_[k]; }
    Rational& operator[](std::size_t k) { return c_[k]; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    /// Coefficient of q^m for an integer exponent m.
    const Rational& coeff(std::size_t m) const;
    /// Coefficient of q^m as an integer; throws when it is not integral.
    Int int_coeff(std::size_t m) const;

    QSeries regrid(unsigned new_step) const;
    QSeries truncate(std::size_t precision) const;
    /// q^(1/step) -> -q^(1/step); on the half-integer grid this is tau -> tau + 1.
    QSeries alternate() const;
    QSeries pow(unsigned n) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& s, const QSeries& a);
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    unsigned step_;
    std::size_t precision_;
    std::vector<Rational> c_;
};

/// Nontrivial Dirichlet character modulo 3 or 4.
class DirichletChar {
public:
    static DirichletChar chi3();
    static DirichletChar chi4();

    unsigned modulus() const noexcept { return modulus_; }
    int operator()(std::uint64_t n) const { return values_[n % modulus_]; }

private:
    DirichletChar(unsigned modulus, std::vector<int> values) : modulus_(modulus), values_(std::move(values)) {}
    unsigned modulus_;
    std::vector<int> values_;
};

/// sigma_k(m, chi) = sum_{d | m} chi(d) d^k.
Int sigma_chi(std::uint64_t m, unsigned k, const DirichletChar& chi);
/// sigma~_k(m, chi) = sum_{d | m} chi(m / d) d^k.
Int sigma_tilde_chi(std::uint64_t m, unsigned k, const DirichletChar& chi);
/// Classical divisor sum sigma_k(m).
Int sigma(std::uint64_t m, unsigned k);

enum class Cusp { Zero, Infinity };

/// Weight-3 Eisenstein series for chi_3 or chi_4 expanded at the given cusp:
///   Infinity: 1 - c sum sigma_2(m, chi) q^m with c = 9 (chi_3) or 4 (chi_4);
///   Zero:     sum sigma~_2(m, chi) q^m.
QSeries eisenstein_E3(const DirichletChar& chi, Cusp cusp, std::size_t precision);

/// theta_3(tau) = sum_n q^(n^2/2), on the half-integer grid.
QSeries theta3(std::size_t precision);
/// theta_3(2 tau) = sum_n q^(n^2), on the integer grid.
QSeries theta3_double(std::size_t precision);
/// theta_2(2 tau) = sum_n q^((n + 1/2)^2), on the quarter-integer grid.
QSeries theta2_double(std::size_t precision);

/// theta_3(2 tau)^7 + 7 theta_3(2 tau)^3 theta_2(2 tau)^4.
QSeries theta_E7(std::size_t precision);
/// (theta_3(tau)^n + theta_3(tau + 1)^n) / 2.
QSeries theta_Dn(unsigned n, std::size_t precision);
/// 81 E_3^(0)(chi_3) + E_3^(inf)(chi_3).
QSeries theta_E6(std::size_t precision);
/// 64 E_3^(0)(chi_4) + E_3^(inf)(chi_4).
QSeries theta_D6_eis(std::size_t precision);

/// Theta series of a definite lattice by direct enumeration: the
/// coefficient of q^(k/2) counts vectors of norm k. Even lattices come back
/// on the integer grid, odd lattices on the half-integer grid.
QSeries theta_brute(const IntLattice& l, std::size_t precision, unsigned threads = 1);

enum class RepMethod { Formula, Brute };

/// N_L(n), the number of vectors of norm n, for L one of "E6", "E7", "D5",
/// "D6", "D8". Formula uses the closed-form theta series, Brute the
/// short-vector enumeration. Odd n gives 0.
Int rep_num(const std::string& name, std::uint64_t n, RepMethod method = RepMethod::Formula);

} // namespace k3lat
