#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/// All roots of a definite lattice: vectors of norm 2 (norm -2 for a
/// negative-definite lattice).
struct RootSystemData {
    std::vector<LatVec> roots;  ///< lexicographic order on coordinates
    std::size_t count = 0;
    /// Row k holds G * roots[k], so (roots[k], x) is a plain dot product.
    std::vector<std::vector<std::int64_t>> paired;
};

/// Receives the coordinates of each vector found. Returning false stops
/// the enumeration.
using NormVisitor = std::function<bool(std::span<const std::int64_t>)>;

struct EnumOptions {
    /// Worker count. With more than one worker the visitor is called
    /// concurrently and visiting order is unspecified.
    unsigned threads = 1;
};

/// Visits every x with |(x, x)| = n in a definite lattice, by Fincke-Pohst
/// enumeration with exact integer bounds. Returns the number of vectors
/// visited (the representation number when the visitor never stops early).
std::uint64_t enumerate_norm_vectors(const IntLattice& l, const Int& n, const NormVisitor& visit,
                                     EnumOptions opts = {});

/// Representation number |{x : |(x, x)| = n}|.
std::uint64_t count_norm_vectors(const IntLattice& l, const Int& n, EnumOptions opts = {});

RootSystemData enumerate_roots(const IntLattice& l);

/// Number of roots r of l with (r, x) = 0. The root system of l is built on
/// first use and cached for as long as l is alive.
std::size_t count_orth_roots(const IntLattice& l, const LatVec& x);

} // namespace k3lat
