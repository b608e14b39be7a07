#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "k3lat/e8.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/lattice_expr.hpp"
#include "k3lat/qseries.hpp"
#include "k3lat/reflective.hpp"
#include "k3lat/roots.hpp"
#include "k3lat/rst.hpp"
#include "k3lat/search.hpp"
#include "k3lat/tables.hpp"

using namespace k3lat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failed = 0;

void criterion(int n, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs <= budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++g_failed;
    std::ostringstream line;
    line.precision(3);
    line << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " (" << std::fixed << secs << " s, budget "
         << budget_s << " s";
    if (!in_time) line << ", over budget";
    line << ") " << o.detail;
    std::cout << line.str() << std::endl;
}

Rational ratio(long n, long d) { return make_rational(n, d); }

// 1. Root system sizes.
Outcome root_counts() {
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"E8", 240}, {"E7", 126}, {"E6", 72}, {"D(8)", 112}, {"A(2)", 6},
        {"4A(1)", 8}, {"A(1)+A(2)", 8}, {"A(3)", 12}, {"2A(1)+A(2)", 10}};
    Outcome o;
    for (const auto& [name, count] : expected) {
        const std::size_t got = enumerate_roots(parse_lattice_expr(name)).count;
        if (got != count) {
            o.pass = false;
            o.detail += name + "=" + std::to_string(got) + " ";
        }
    }
    if (o.pass) o.detail = "all 9 root counts exact";
    return o;
}

// 2. Roots meeting a fixed root a split into A2 systems through +-a.
Outcome bouquet() {
    const IntLattice& l = e8::lattice();
    const std::vector<LatVec> roots = enumerate_roots(l).roots;
    std::mt19937_64 rng(2024);
    Outcome o;
    for (int s = 0; s < 10; ++s) {
        const LatVec& a = roots[rng() % roots.size()];
        std::set<std::size_t> x;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (inner(l, a, roots[i]) != 0) x.insert(i);
        auto index_of = [&](const LatVec& v) -> std::size_t {
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (roots[i] == v) return i;
            return roots.size();
        };
        const std::size_t ia = index_of(a), ina = index_of(-a);
        std::vector<std::set<std::size_t>> triples;
        std::set<std::size_t> covered{ia, ina};
        for (std::size_t c : x) {
            if (covered.count(c)) continue;
            const Int ac = inner(l, a, roots[c]);
            const LatVec r = roots[c] - ac * a;
            std::set<std::size_t> sys{ia, ina, c, index_of(-roots[c]), index_of(r), index_of(-r)};
            for (std::size_t v : sys) covered.insert(v);
            triples.push_back(std::move(sys));
        }
        bool ok = x.size() == 114 && triples.size() == 28 && covered == x;
        for (std::size_t i = 0; i < triples.size() && ok; ++i) {
            if (triples[i].size() != 6 || !std::includes(x.begin(), x.end(), triples[i].begin(), triples[i].end()))
                ok = false;
            for (std::size_t j = i + 1; j < triples.size() && ok; ++j) {
                std::set<std::size_t> meet;
                std::set_intersection(triples[i].begin(), triples[i].end(), triples[j].begin(), triples[j].end(),
                                      std::inserter(meet, meet.begin()));
                if (meet != std::set<std::size_t>{ia, ina}) ok = false;
            }
        }
        if (!ok) {
            o.pass = false;
            o.detail += "root " + std::to_string(ia) + ": |X|=" + std::to_string(x.size()) +
                        " triples=" + std::to_string(triples.size()) + " ";
        }
    }
    if (o.pass) o.detail = "10 roots: |X| = 114, 28 triples meeting in {+-a}";
    return o;
}

// 3. Closed-form theta series against brute-force enumeration.
Outcome theta() {
    constexpr std::size_t kBrute = 12, kEis = 240;
    Outcome o;
    auto cmp = [&](const std::string& what, const QSeries& a, const QSeries& b) {
        if (!(a == b)) {
            o.pass = false;
            o.detail += what + " differs ";
        }
    };
    cmp("E7", theta_E7(kBrute), theta_brute(parse_lattice_expr("E7"), kBrute));
    cmp("E6", theta_E6(kBrute), theta_brute(parse_lattice_expr("E6"), kBrute));
    for (unsigned n : {5u, 6u, 8u})
        cmp("D" + std::to_string(n), theta_Dn(n, kBrute),
            theta_brute(parse_lattice_expr("D(" + std::to_string(n) + ")"), kBrute));
    cmp("D6 Eisenstein", theta_D6_eis(kEis), theta_Dn(6, kEis));
    if (o.pass) o.detail = "E7, E6, D5, D6, D8 exact to q^12; D6 Eisenstein form exact to q^240";
    return o;
}

// 4. N_E7(314) / 157^(5/2) in [124.72, 124.74], compared through squares.
Outcome ne7_ratio() {
    const Rational lo = ratio(12472, 100), hi = ratio(12474, 100);
    const Int n = rep_num("E7", 314);
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 157, 5);
    const Rational n2 = Rational(n * n);
    const bool ok = lo * lo * p <= n2 && n2 <= hi * hi * p;
    return {ok, "N_E7(314) = " + n.get_str() + ", ratio in [124.72, 124.74]: " + (ok ? "yes" : "no")};
}

// 5. Growth bounds for 1 <= m <= 240.
Outcome bound_constants() {
    const Rational c7 = ratio(1238, 10), c6 = ratio(10369, 100), cd = ratio(7513, 100);
    Outcome o;
    std::uint64_t bad = 0;
    for (std::uint64_t m = 1; m <= 240; ++m) {
        const Int e7 = rep_num("E7", 2 * m), e6 = rep_num("E6", 2 * m), d6 = rep_num("D6", 2 * m);
        Int m2 = Int(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);
        Int m5 = m2 * m2 * static_cast<unsigned long>(m);
        const bool ok = Rational(e7 * e7) > c7 * c7 * Rational(m5) && Rational(e6) < c6 * Rational(m2) &&
                        Rational(d6) < cd * Rational(m2);
        if (!ok) {
            ++bad;
            if (bad <= 5) o.detail += "m=" + std::to_string(m) + " ";
        }
    }
    o.pass = bad == 0;
    o.detail = o.pass ? "all three bounds hold for 1 <= m <= 240" : "violations at " + o.detail;
    return o;
}

// 6. The exceptional degree set.
Outcome pex() {
    std::set<std::uint64_t> expected;
    for (std::uint64_t m = 1; m <= 100; ++m)
        if (m != 96) expected.insert(m);
    for (std::uint64_t m = 101; m <= 127; m += 2) expected.insert(m);
    for (std::uint64_t m : {110, 131, 137, 143}) expected.insert(m);
    const std::set<std::uint64_t> got = compute_Pex(240);
    return {got == expected, "|P_ex| = " + std::to_string(got.size()) + ", expected " + std::to_string(expected.size())};
}

// 7. Every printed table row: norm 2d and root count.
Outcome tables() {
    Outcome o;
    std::size_t rows = 0, bad = 0;
    for (const TableRow& row : all_table_rows()) {
        ++rows;
        const RowCheck rc = check_row(row);
        const bool norm_ok = rc.norm == static_cast<std::int64_t>(2 * row.d);
        if (!norm_ok || !rc.count_ok || !rc.ok()) {
            ++bad;
            o.detail += to_string(row.table) + " d=" + std::to_string(row.d) + " " +
                        format_tuple(row.table, row.m) + ": norm " + std::to_string(rc.norm) + " N_l " +
                        (rc.n_l ? std::to_string(*rc.n_l) : std::string("n/a")) + "; ";
        }
    }
    o.pass = bad == 0;
    o.detail = std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows reproduce" +
               (bad ? "; inconsistent: " + o.detail : std::string());
    return o;
}

// 8. Structured rules against the 240-root count for every family tuple of
// norm 2d, d <= 150.
Outcome predicates() {
    constexpr long kMaxNorm = 300;
    const IntLattice& l = e8::lattice();
    std::uint64_t tuples = 0, accepted = 0, mismatches = 0;
    std::string first;
    auto check = [&](SearchCase c, const std::vector<long>& m, std::optional<int> value) {
        ++tuples;
        if (!value) return;
        ++accepted;
        const e8::Doubled y = embed_case(c, m);
        const auto expected = static_cast<int>(count_orth_roots(l, e8::from_doubled(y)));
        if (e8::norm4(y) != 4 * case_norm(c, m) || *value != expected) {
            if (mismatches++ == 0) first = to_string(c) + " " + std::to_string(*value) + " vs " + std::to_string(expected);
        }
    };

    std::vector<long> m;
    // Enumerates m[k..n) with sum of w_i m_i^2 <= budget. lo is the smallest
    // value allowed for each coordinate.
    std::function<void(std::size_t, const std::vector<long>&, long, long, const std::function<void()>&)> rec =
        [&](std::size_t k, const std::vector<long>& w, long budget, long lo, const std::function<void()>& leaf) {
            if (k == w.size()) {
                leaf();
                return;
            }
            for (long v = lo; w[k] * v * v <= budget || v < 0; ++v) {
                if (w[k] * v * v > budget) continue;
                m[k] = v;
                rec(k + 1, w, budget - w[k] * v * v, lo, leaf);
            }
        };

    // I: positive entries, norm 2 (m3^2 + m5^2 + m7^2 + m8^2).
    m.assign(4, 0);
    rec(0, {2, 2, 2, 2}, kMaxNorm, 1, [&] { check(SearchCase::I, m, predicate_caseI(m)); });

    // II: signed, norm 3 m5^2 + m6^2 + m7^2 + m8^2, m5 + m6 + m7 + m8 even.
    m.assign(4, 0);
    rec(0, {3, 1, 1, 1}, kMaxNorm, -17, [&] {
        if ((m[0] + m[1] + m[2] + m[3]) % 2 != 0 || case_norm(SearchCase::II, m) == 0) return;
        check(SearchCase::II, m, predicate_caseII(m));
    });

    // III: signed, norm sum m_i^2 with even coordinate sum.
    m.assign(5, 0);
    rec(0, {1, 1, 1, 1, 1}, kMaxNorm, -17, [&] {
        if ((m[0] + m[1] + m[2] + m[3] + m[4]) % 2 != 0 || case_norm(SearchCase::III, m) == 0) return;
        check(SearchCase::III, m, predicate_caseIII(m));
    });

    // IV: signed m3..m7 with m8 = m3 + ... + m7; the count is exact, so
    // every tuple is compared.
    m.assign(5, 0);
    rec(0, {1, 1, 1, 1, 1}, kMaxNorm, -17, [&] {
        const long m8 = m[0] + m[1] + m[2] + m[3] + m[4];
        std::vector<long> full{m[0], m[1], m[2], m[3], m[4], m8};
        const std::int64_t n = case_norm(SearchCase::IV, full);
        if (n == 0 || n > kMaxNorm) return;
        check(SearchCase::IV, full, count_caseIV(full));
    });

    Outcome o;
    o.pass = mismatches == 0 && accepted > 0;
    o.detail = std::to_string(tuples) + " tuples, " + std::to_string(accepted) + " decided, " +
               std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (first: " + first + ")");
    return o;
}

// 9. Verdicts over the degree range.
Outcome verdicts() {
    Outcome o;
    std::set<std::uint64_t> general{46, 50, 54, 57, 58, 60};
    for (std::uint64_t d = 62; d <= 150; ++d) general.insert(d);
    const std::set<std::uint64_t> nonneg{40, 42, 43, 48, 49, 51, 52, 53, 55, 56, 59, 61, 63};
    std::string bad;
    for (std::uint64_t d = 1; d <= 150; ++d) {
        if (!general.count(d) && !nonneg.count(d)) continue;
        const Verdict v = kodaira_verdict(d);
        const bool ok = general.count(d) ? v.kind == VerdictKind::GeneralType : v.kind != VerdictKind::Unknown;
        if (!ok) bad += std::to_string(d) + "=" + to_string(v.kind) + " ";
    }
    for (std::uint64_t d : {1u, 2u, 3u})
        if (exhaustive_search(d).has_value()) bad += "exhaustive finds N_l <= 14 at d=" + std::to_string(d) + " ";
    o.pass = bad.empty();
    o.detail = o.pass ? std::to_string(general.size()) + " general-type and " + std::to_string(nonneg.size()) +
                            " non-negative degrees confirmed; d = 1, 2, 3 have no N_l <= 14 vector"
                      : "failures: " + bad;
    return o;
}

// 10. Minimal shifted fractional sums.
Outcome cmin() {
    const std::vector<std::pair<std::uint64_t, Rational>> expected{
        {30, ratio(92, 30)}, {4, ratio(1, 2)}, {3, ratio(1, 3)}, {6, ratio(1, 3)}, {18, ratio(42, 18)},
        {12, ratio(16, 12)}, {10, ratio(12, 10)}, {8, ratio(12, 8)}, {5, ratio(6, 5)}};
    Outcome o;
    for (const auto& [d, v] : expected) {
        const CMin c = c_min(d);
        if (c.value != v) {
            o.pass = false;
            o.detail += "c_min(" + std::to_string(d) + ")=" + c.value.get_str() + " ";
        }
    }
    const std::uint64_t a30 = c_min(30).argmin;
    if (a30 != 19) {
        o.pass = false;
        o.detail += "argmin(30)=" + std::to_string(a30);
    }
    if (o.pass) o.detail = "all values exact, c_min(30) attained at a = 19";
    return o;
}

// 11. Fractional sums for phi(r) >= 6.
Outcome bigphi() {
    const BigPhiReport r = bigphi_verify(100);
    const bool ok = r.violations == 0 && r.minimum >= 1;
    return {ok, std::to_string(r.cases) + " cases, " + std::to_string(r.violations) + " violations, minimum " +
                    r.minimum.get_str() + " at r=" + std::to_string(r.min_r)};
}

// 12. Reflective vectors of L_2d acting as +-id.
Outcome reflk3() {
    Outcome o;
    std::uint64_t reflective = 0, det = 0;
    for (std::uint64_t d : {1u, 2u, 5u, 6u}) {
        const ReflK3Report r = reflK3_sample_check(d, 10000, 1);
        reflective += r.reflective;
        det += r.det_checked;
        if (!r.counterexamples.empty() || r.det_mismatches != 0 || r.samples != 10000) {
            o.pass = false;
            o.detail += "d=" + std::to_string(d) + ": " + std::to_string(r.counterexamples.size()) +
                        " counterexamples, " + std::to_string(r.det_mismatches) + " det mismatches; ";
        }
    }
    if (o.pass)
        o.detail = "4 x 10000 samples, " + std::to_string(reflective) + " reflective, " + std::to_string(det) +
                   " determinant checks, no counterexamples";
    return o;
}

// 13. Discriminant groups and parity.
Outcome discriminants() {
    Outcome o;
    for (long d = 1; d <= 20; ++d) {
        const DiscGroup a = disc_group(named::L2d(d));
        bool ok = a.invariant_factors.size() == 1 && a.invariant_factors[0] == 2 * d;
        if (ok) {
            const Rational diff = (a.q_values[0] + ratio(1, 2 * d)) / 2;
            ok = diff.get_den() == 1;
        }
        if (!ok) {
            o.pass = false;
            o.detail += "L_2d d=" + std::to_string(d) + " ";
        }
    }
    const int du2 = parity_delta(disc_group(parse_lattice_expr("U(2)")));
    const int dpm = parity_delta(disc_group(parse_lattice_expr("<2>+<-2>")));
    if (du2 != 0 || dpm != 1) {
        o.pass = false;
        o.detail += "delta(U(2))=" + std::to_string(du2) + " delta(<2>+<-2>)=" + std::to_string(dpm);
    }
    if (o.pass) o.detail = "A(L_2d) = Z/2d with q = -1/2d for d <= 20; delta(U(2)) = 0, delta(<2>+<-2>) = 1";
    return o;
}

} // namespace

int main() {
    criterion(1, 1, root_counts);
    criterion(2, 1, bouquet);
    criterion(3, 60, theta);
    criterion(4, 5, ne7_ratio);
    criterion(5, 10, bound_constants);
    criterion(6, 30, pex);
    criterion(7, 30, tables);
    criterion(8, 600, predicates);
    criterion(9, 900, verdicts);
    criterion(10, 1, cmin);
    criterion(11, 5, bigphi);
    criterion(12, 60, reflk3);
    criterion(13, 1, discriminants);
    std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed") << std::endl;
    return g_failed == 0 ? 0 : 1;
}
