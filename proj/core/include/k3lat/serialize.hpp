#pragma once

#include <string>

#include "k3lat/qseries.hpp"
#include "k3lat/reflective.hpp"
#include "k3lat/rst.hpp"
#include "k3lat/search.hpp"
#include "k3lat/tables.hpp"

/// JSON documents for the library's result types. Big integers and
/// rationals are emitted as decimal strings so no precision is lost.
namespace k3lat::json {

/// indent < 0 gives compact output.
std::string to_json(const QSeries& s, int indent = -1);
std::string to_json(const SearchHit& h, int indent = -1);
std::string to_json(const Verdict& v, int indent = -1);
std::string to_json(const ReflectionReport& r, int indent = -1);
std::string to_json(const ReflK3Report& r, int indent = -1);
std::string to_json(const DiscGroup& a, int indent = -1);
std::string to_json(const RowCheck& c, int indent = -1);
std::string to_json(const CMin& c, std::uint64_t d, int indent = -1);
std::string to_json(const BigPhiReport& r, int indent = -1);
/// {input, sigma, decomposition {d: nu_d}, flags}.
std::string to_json(const ToricReport& r, const IntMatrix& input, int indent = -1);
/// {input, sigma, flags} for a bare exponent list.
std::string to_json(const EigenExponents& e, int indent = -1);

} // namespace k3lat::json
