#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "k3lat/lattice.hpp"

namespace k3lat {

/// Malformed lattice expression; position() is the 0-based offset of the
/// offending character in the input.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Builds a lattice from an expression such as "2U+2E8(-1)+<-10>".
///
///   expr         := term ("+" term)*
///   term         := [multiplicity] atom
///   atom         := base [ "(" int ")" ]
///   base         := "U" | "A(" n ")" | "D(" n ")" | "E" n | "<" int ">"
///   multiplicity := positive integer
///
/// The optional "(t)" suffix multiplies the Gram matrix of the atom by t.
/// Whitespace is ignored.
IntLattice parse_lattice_expr(std::string_view text);

} // namespace k3lat
