#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3lat/e8.hpp"

namespace k3lat {

/// Representation numbers N_L(2m) of E7, E6, D6 and D5 from the closed-form
/// theta series, cached up to the largest precision requested so far.
struct RepresentationNumbers {
    Int e7, e6, d6, d5;
};
RepresentationNumbers representation_numbers(std::uint64_t m);

/// 4 N_E7(2d) > 28 N_E6(2d) + 63 N_D6(2d).
bool check_mineq(std::uint64_t d);
/// 5 N_E7(2d) > 28 N_E6(2d) + 63 N_D6(2d) + 378 N_D5(2d).
bool check_mineqd(std::uint64_t d);

/// Indices m <= max_m of the negative coefficients of
/// 5 theta_E7 - 28 theta_E6 - 63 theta_D6 - 378 theta_D5.
std::set<std::uint64_t> compute_Pex(std::uint64_t max_m = 240);

enum class SearchCase { I, II, III, IV };
enum class HitSource { CaseI, CaseII, CaseIII, CaseIV, Exhaustive };

std::string to_string(SearchCase c);
std::string to_string(HitSource s);

/// Doubled e-coordinates of the structured families:
///   I:   m3 (e3+e4) + m5 (e5+e6) + m7 (e7+e8) + m8 (e7-e8)
///   II:  m5 (e3+e4+e5) + m6 e6 + m7 e7 + m8 e8,  m5+m6+m7+m8 even
///   III: m4 e4 + ... + m8 e8,                    m4+...+m8 even
///   IV:  m3 e3 + ... + m8 e8,                    m8 = m3+...+m7
/// Each throws DomainError on a wrong arity or a violated constraint.
e8::Doubled embed_caseI(long m3, long m5, long m7, long m8);
e8::Doubled embed_caseII(long m5, long m6, long m7, long m8);
e8::Doubled embed_caseIII(const std::vector<long>& m);
e8::Doubled embed_caseIV(const std::vector<long>& m);
e8::Doubled embed_case(SearchCase c, const std::vector<long>& m);

/// Norm of the embedded vector from the case's quadratic form.
std::int64_t case_norm(SearchCase c, const std::vector<long>& m);

/// Root-count rules of the four families. A nullopt means the rule does not
/// decide the count (the tuple is rejected).
std::optional<int> predicate_caseI(const std::vector<long>& m);    ///< 8, 12 or reject
std::optional<int> predicate_caseII(const std::vector<long>& m);   ///< 10, 14 or reject
std::optional<int> predicate_caseIII(const std::vector<long>& m);  ///< 12, 14 or reject
/// Exact count: 8 + 4 per vanishing sub-sum of (m3..m7) + 8 per zero entry
/// + 2 per relation m_i = m_j + 2 per relation m_i = -m_j (3 <= i < j <= 8).
int count_caseIV(const std::vector<long>& m);
std::optional<int> predicate(SearchCase c, const std::vector<long>& m);

struct SearchHit {
    std::uint64_t d = 0;
    e8::Doubled coords2x{};
    std::vector<long> m;  ///< family parameters; empty for exhaustive hits
    int n_l = 0;
    int weight() const { return 12 + n_l / 2; }
    HitSource source = HitSource::Exhaustive;
};

/// Canonical tuples of the given case whose norm is 2d and whose rule
/// value (verified against the 240-root count) lies in targets. Sorted by
/// (N_l, doubled coordinates). Canonical domains:
///   I:   0 < m3 < m5 < m7 < m8
///   II:  m5 >= 0, 0 <= m6 <= m7 <= m8
///   III: 0 <= m4 <= ... <= m8
///   IV:  m3 <= ... <= m7, and not larger than the sorted negation
std::vector<SearchHit> structured_search(std::uint64_t d, SearchCase c, const std::set<int>& targets,
                                         unsigned threads = 1);

struct ExhaustiveOptions {
    int max_roots = 14;
    std::uint64_t max_d = 150;
    bool override_bound = false;
};

/// Minimum N_l in [2, max_roots] over all l in E8 with l^2 = 2d. The scan
/// runs over W(D8)-orbit representatives and checks that the orbit sizes
/// add up to 240 sigma_3(d). The witness is the lexicographically smallest
/// vector of the first orbit attaining the minimum.
std::optional<SearchHit> exhaustive_search(std::uint64_t d, const ExhaustiveOptions& opts = {});

/// Smallest member, in lexicographic order, of the W(D8)-orbit of y.
e8::Doubled orbit_min_d8(const e8::Doubled& y);

enum class VerdictKind { GeneralType, NonNegativeKodaira, Unknown };
std::string to_string(VerdictKind k);

struct Verdict {
    std::uint64_t d = 0;
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<SearchHit> witness;
    bool mineq = false;
    bool mineqd = false;
    bool exhaustive_ran = false;
};

struct VerdictOptions {
    ExhaustiveOptions exhaustive;
    unsigned threads = 1;
};

/// Weight 12 + N_l/2 below 19 (N_l <= 12) gives general type; weight
/// exactly 19 (N_l = 14) gives non-negative Kodaira dimension.
///
/// Order: structured families I..IV for N_l <= 12, then the exhaustive scan
/// (when d is within the bound, or the inequalities guarantee a witness),
/// then structured families for N_l = 14, then the exhaustive N_l = 14.
Verdict kodaira_verdict(std::uint64_t d, const VerdictOptions& opts = {});

} // namespace k3lat
