#include "k3lat/tables.hpp"

#include <sstream>

namespace k3lat {

std::string to_string(TableId t) {
    switch (t) {
    case TableId::I_8_12: return "I-8,12";
    case TableId::II_10: return "II-10";
    case TableId::II_14: return "II-14";
    case TableId::III: return "III";
    case TableId::IV: return "IV";
    }
    return "?";
}

TableId parse_table_id(const std::string& s) {
    if (s == "I" || s == "I-8,12" || s == "I-8-12") return TableId::I_8_12;
    if (s == "II-10") return TableId::II_10;
    if (s == "II-14") return TableId::II_14;
    if (s == "III") return TableId::III;
    if (s == "IV") return TableId::IV;
    throw DomainError("unknown table '" + s + "'");
}

SearchCase family_of(TableId t) {
    switch (t) {
    case TableId::I_8_12: return SearchCase::I;
    case TableId::II_10:
    case TableId::II_14: return SearchCase::II;
    case TableId::III: return SearchCase::III;
    case TableId::IV: return SearchCase::IV;
    }
    throw DomainError("unknown table");
}

namespace {

std::vector<TableRow> make(TableId t, std::optional<int> n, std::initializer_list<std::pair<std::uint64_t, std::vector<long>>> rows) {
    std::vector<TableRow> out;
    for (const auto& [d, m] : rows) out.push_back({t, d, m, n});
    return out;
}

std::vector<TableRow> build_I() {
    return make(TableId::I_8_12, std::nullopt,
                {{46, {1, 2, 4, 5}},  {50, {1, 2, 3, 6}},  {54, {2, 3, 4, 5}},  {57, {1, 2, 4, 6}},
                 {62, {1, 3, 4, 6}},  {63, {1, 2, 3, 7}},  {65, {2, 3, 4, 6}},  {66, {1, 2, 5, 6}},
                 {70, {1, 2, 4, 7}},  {71, {1, 3, 5, 6}},  {74, {2, 3, 5, 6}},  {78, {1, 2, 3, 8}},
                 {79, {1, 2, 5, 7}},  {81, {2, 4, 5, 6}},  {84, {1, 3, 5, 7}},  {85, {1, 2, 4, 8}},
                 {86, {3, 4, 5, 6}},  {90, {1, 2, 6, 7}},  {91, {1, 4, 5, 7}},  {93, {2, 3, 4, 8}},
                 {94, {1, 2, 5, 8}},  {95, {1, 3, 6, 7}},  {98, {2, 3, 6, 7}},  {99, {3, 4, 5, 7}},
                 {102, {1, 2, 4, 9}}, {105, {1, 2, 6, 8}}, {107, {1, 3, 4, 9}}, {109, {2, 4, 5, 8}},
                 {110, {1, 3, 6, 8}}, {111, {1, 2, 5, 9}}, {113, {2, 3, 6, 8}}, {117, {1, 4, 6, 8}},
                 {119, {2, 3, 5, 9}}, {121, {1, 2, 4, 10}}, {123, {1, 3, 7, 8}}, {125, {3, 4, 6, 8}},
                 {127, {1, 3, 6, 9}}, {131, {3, 4, 5, 9}}, {137, {2, 4, 6, 9}}, {143, {1, 5, 6, 9}}});
}

std::vector<TableRow> build_II_10() {
    return make(TableId::II_10, 10,
                {{58, {1, 2, 3, 10}}, {60, {3, 2, 5, 8}},  {64, {5, 1, 4, 6}},  {67, {2, 4, 5, 9}},
                 {72, {3, 1, 4, 10}}, {73, {4, 3, 5, 8}},  {75, {6, 1, 4, 5}},  {80, {3, 4, 6, 9}},
                 {82, {5, 3, 4, 8}},  {83, {2, 1, 3, 12}}, {87, {6, 1, 4, 7}},  {88, {1, 2, 5, 12}},
                 {89, {2, 6, 7, 9}},  {97, {4, 1, 8, 9}},  {100, {7, 1, 4, 6}}, {101, {4, 1, 3, 12}},
                 {103, {8, 1, 2, 3}}, {115, {4, 1, 9, 10}}});
}

std::vector<TableRow> build_II_14() {
    return make(TableId::II_14, 14,
                {{40, {1, 2, 3, 8}}, {43, {2, 1, 3, 8}}, {48, {3, 1, 2, 8}},
                 {52, {1, 2, 4, 9}}, {55, {4, 1, 5, 6}}, {61, {2, 1, 3, 10}}});
}

std::vector<TableRow> build_III() {
    std::vector<TableRow> out = make(TableId::III, 12, {{69, {2, 3, 5, 6, 8}}});
    auto rest = make(TableId::III, 14,
                     {{42, {1, 3, 3, 4, 7}}, {48, {1, 1, 2, 3, 9}}, {49, {2, 2, 4, 5, 7}},
                      {51, {1, 6, 6, 2, 5}}, {53, {1, 4, 4, 3, 8}}, {54, {1, 3, 3, 5, 8}},
                      {56, {1, 1, 5, 6, 7}}, {59, {1, 2, 2, 3, 10}}, {63, {3, 4, 4, 6, 7}}});
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<TableRow> build_IV() {
    return {{TableId::IV, 68, {1, 3, 4, 5, -7, 8}, 12},
            {TableId::IV, 77, {2, 3, 4, 5, -8, 6}, 12},
            {TableId::IV, 92, {1, 1, 2, 3, 5, 12}, 10},
            {TableId::IV, 40, {1, 1, 2, 3, -8, -1}, 14}};
}

/// Doubled coordinates straight from the family's template, without the
/// side condition.
e8::Doubled raw_coords(SearchCase c, const std::vector<long>& m) {
    e8::Doubled y{};
    switch (c) {
    case SearchCase::I:
        return embed_caseI(m.at(0), m.at(1), m.at(2), m.at(3));
    case SearchCase::II:
        y = {0, 0, 2 * m.at(0), 2 * m.at(0), 2 * m.at(0), 2 * m.at(1), 2 * m.at(2), 2 * m.at(3)};
        return y;
    case SearchCase::III:
        for (std::size_t i = 0; i < 5; ++i) y[3 + i] = 2 * m.at(i);
        return y;
    case SearchCase::IV:
        for (std::size_t i = 0; i < 6; ++i) y[2 + i] = 2 * m.at(i);
        return y;
    }
    throw DomainError("unknown case");
}

} // namespace

const std::vector<TableRow>& table_rows(TableId t) {
    static const std::vector<TableRow> i = build_I();
    static const std::vector<TableRow> ii10 = build_II_10();
    static const std::vector<TableRow> ii14 = build_II_14();
    static const std::vector<TableRow> iii = build_III();
    static const std::vector<TableRow> iv = build_IV();
    switch (t) {
    case TableId::I_8_12: return i;
    case TableId::II_10: return ii10;
    case TableId::II_14: return ii14;
    case TableId::III: return iii;
    case TableId::IV: return iv;
    }
    throw DomainError("unknown table");
}

std::vector<TableRow> all_table_rows() {
    std::vector<TableRow> out;
    for (TableId t : {TableId::I_8_12, TableId::II_10, TableId::II_14, TableId::III, TableId::IV}) {
        const auto& rows = table_rows(t);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

RowCheck check_row(const TableRow& row) {
    RowCheck out;
    out.row = row;
    const SearchCase c = family_of(row.table);
    out.coords2x = raw_coords(c, row.m);
    out.norm = e8::norm4(out.coords2x) / 4;
    out.norm_ok = out.norm == static_cast<std::int64_t>(2 * row.d);
    try {
        embed_case(c, row.m);
        out.constraint_ok = true;
    } catch (const DomainError&) {
        out.constraint_ok = false;
    }
    out.in_e8 = e8::in_lattice(out.coords2x);
    if (out.in_e8) {
        out.n_l = e8::count_orth_roots_scan(out.coords2x);
        out.count_ok = row.printed_n_l ? *out.n_l == *row.printed_n_l : (*out.n_l == 8 || *out.n_l == 12);
    }
    return out;
}

std::string format_tuple(TableId t, const std::vector<long>& m) {
    std::ostringstream os;
    os << '(';
    const std::size_t split = t == TableId::II_10 || t == TableId::II_14 ? 1 : t == TableId::IV ? 5 : m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) os << (i == split ? ';' : ',');
        os << m[i];
    }
    os << ')';
    return os.str();
}

std::string table_csv(TableId t) {
    std::ostringstream os;
    os << "d,m-tuple,N_l\n";
    for (const auto& row : table_rows(t)) {
        RowCheck c = check_row(row);
        os << row.d << ",\"" << format_tuple(t, row.m) << "\",";
        if (c.n_l) os << *c.n_l;
        os << '\n';
    }
    return os.str();
}

} // namespace k3lat
