#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/search.hpp"

namespace k3lat {

enum class TableId { I_8_12, II_10, II_14, III, IV };

std::string to_string(TableId t);
/// Parses "I", "I-8,12", "II-10", "II-14", "III" or "IV".
TableId parse_table_id(const std::string& s);
SearchCase family_of(TableId t);

/// One published row: degree, family parameters in the published order and
/// the published root count (absent for the I-8,12 table, whose rows are
/// only claimed to have 8 or 12 orthogonal roots).
struct TableRow {
    TableId table;
    std::uint64_t d;
    std::vector<long> m;
    std::optional<int> printed_n_l;
};

const std::vector<TableRow>& table_rows(TableId t);
std::vector<TableRow> all_table_rows();

struct RowCheck {
    TableRow row;
    std::int64_t norm = 0;           ///< l^2 of the raw coordinate vector
    bool norm_ok = false;            ///< norm == 2d
    bool constraint_ok = false;      ///< the family's side condition holds
    bool in_e8 = false;              ///< raw coordinates define a vector of E8
    e8::Doubled coords2x{};          ///< raw doubled e-coordinates
    std::optional<int> n_l;          ///< root count of the raw vector
    bool count_ok = false;           ///< n_l equals the printed value (or is 8 or 12 for I-8,12)
    bool ok() const { return norm_ok && constraint_ok && in_e8 && count_ok; }
};

/// Rebuilds the row's vector from its raw coordinates (even when the family
/// constraint fails), then checks the norm and the 240-root count.
RowCheck check_row(const TableRow& row);

/// "(1,2,4,5)" for I and III, "(5;3,4,8)" for II, "(1,3,4,5,-7;8)" for IV.
std::string format_tuple(TableId t, const std::vector<long>& m);

/// CSV with header d,m-tuple,N_l; the tuple field is quoted and N_l is the
/// computed count ("" when the raw vector is not in E8).
std::string table_csv(TableId t);

} // namespace k3lat
