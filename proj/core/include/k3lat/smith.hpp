#pragma once

#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... with non-negative entries.
///
/// Pivoting is deterministic: the pivot is always the entry of smallest
/// absolute value in the active block, ties broken row-major. Equal inputs
/// therefore always yield identical transforms.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (as columns) of the integer kernel {x in Z^n : A x = 0}. The
/// result spans a primitive (saturated) sublattice of Z^n.
IntMatrix integer_kernel(const IntMatrix& a);

} // namespace k3lat
