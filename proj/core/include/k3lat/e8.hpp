#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "k3lat/lattice.hpp"

/// The E8 lattice in two charts.
///
/// The canonical chart is the Coxeter simple-root basis alpha_1..alpha_8 with
///   alpha_1 = (e1 + e8)/2 - (e2 + ... + e7)/2,  alpha_2 = e1 + e2,
///   alpha_k = e_{k-1} - e_{k-2}  (3 <= k <= 8).
/// The e-chart stores doubled Euclidean coordinates y = 2x, so that E8 is the
/// set of integer vectors y with all entries of one parity and sum(y) = 0
/// mod 4. The norm is sum(y_i^2) / 4.
namespace k3lat::e8 {

using Doubled = std::array<std::int64_t, 8>;

/// The shared E8 lattice object (Coxeter basis).
const IntLattice& lattice();

/// Doubled e-coordinates of alpha_1..alpha_8.
const std::array<Doubled, 8>& simple_roots_doubled();

bool in_lattice(const Doubled& y);
/// 4 times the norm, sum(y_i^2).
std::int64_t norm4(const Doubled& y);
/// 4 times the inner product.
std::int64_t dot4(const Doubled& a, const Doubled& b);

LatVec from_doubled(const Doubled& y);
Doubled to_doubled(const LatVec& x);

/// All 240 roots in doubled e-coordinates, lexicographically sorted.
const std::vector<Doubled>& roots_doubled();

/// Number of roots orthogonal to y, by the closed-form count over the 112
/// integral and 128 half-integral roots.
int count_orth_roots(const Doubled& y);
/// Same count by scanning all 240 roots.
int count_orth_roots_scan(const Doubled& y);

/// Representative of the W(D8)-orbit of y (permutations and even numbers of
/// sign changes): entries sorted by decreasing absolute value, all
/// non-negative except possibly the last one.
Doubled canonical_d8(const Doubled& y);
/// Size of the W(D8)-orbit of y.
std::uint64_t orbit_size_d8(const Doubled& y);

} // namespace k3lat::e8
