#include "k3lat/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

#include "k3lat/qseries.hpp"

namespace k3lat {

// ------------------------------------------------------------- inequalities

namespace {

struct SeriesCache {
    std::mutex mu;
    std::size_t precision = 0;
    QSeries e7{1, 0}, e6{1, 0}, d6{1, 0}, d5{1, 0};
};

SeriesCache& series_cache() {
    static SeriesCache c;
    return c;
}

} // namespace

RepresentationNumbers representation_numbers(std::uint64_t m) {
    SeriesCache& c = series_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (m > c.precision || c.precision == 0) {
        const std::size_t p = std::max<std::size_t>(240, m);
        c.e7 = theta_E7(p);
        c.e6 = theta_E6(p);
        c.d6 = theta_D6_eis(p);
        c.d5 = theta_Dn(5, p);
        c.precision = p;
    }
    return {c.e7.int_coeff(m), c.e6.int_coeff(m), c.d6.int_coeff(m), c.d5.int_coeff(m)};
}

bool check_mineq(std::uint64_t d) {
    if (d < 1) throw DomainError("d must be positive");
    auto n = representation_numbers(d);
    return 4 * n.e7 > 28 * n.e6 + 63 * n.d6;
}

bool check_mineqd(std::uint64_t d) {
    if (d < 1) throw DomainError("d must be positive");
    auto n = representation_numbers(d);
    return 5 * n.e7 > 28 * n.e6 + 63 * n.d6 + 378 * n.d5;
}

std::set<std::uint64_t> compute_Pex(std::uint64_t max_m) {
    std::set<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        auto n = representation_numbers(m);
        if (5 * n.e7 - 28 * n.e6 - 63 * n.d6 - 378 * n.d5 < 0) out.insert(m);
    }
    return out;
}

// ------------------------------------------------------------------- naming

std::string to_string(SearchCase c) {
    switch (c) {
    case SearchCase::I: return "I";
    case SearchCase::II: return "II";
    case SearchCase::III: return "III";
    case SearchCase::IV: return "IV";
    }
    return "?";
}

std::string to_string(HitSource s) {
    switch (s) {
    case HitSource::CaseI: return "caseI";
    case HitSource::CaseII: return "caseII";
    case HitSource::CaseIII: return "caseIII";
    case HitSource::CaseIV: return "caseIV";
    case HitSource::Exhaustive: return "exhaustive";
    }
    return "?";
}

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::GeneralType: return "GeneralType";
    case VerdictKind::NonNegativeKodaira: return "NonNegativeKodaira";
    case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

// --------------------------------------------------------------- embeddings

namespace {

void require_arity(const std::vector<long>& m, std::size_t n, const char* which) {
    if (m.size() != n)
        throw DomainError(std::string("case ") + which + " takes " + std::to_string(n) + " parameters");
}

long sum(const std::vector<long>& m, std::size_t from, std::size_t to) {
    long s = 0;
    for (std::size_t i = from; i < to; ++i) s += m[i];
    return s;
}

HitSource source_of(SearchCase c) {
    switch (c) {
    case SearchCase::I: return HitSource::CaseI;
    case SearchCase::II: return HitSource::CaseII;
    case SearchCase::III: return HitSource::CaseIII;
    case SearchCase::IV: return HitSource::CaseIV;
    }
    return HitSource::Exhaustive;
}

} // namespace

e8::Doubled embed_caseI(long m3, long m5, long m7, long m8) {
    return {0, 0, 2 * m3, 2 * m3, 2 * m5, 2 * m5, 2 * (m7 + m8), 2 * (m7 - m8)};
}

e8::Doubled embed_caseII(long m5, long m6, long m7, long m8) {
    if ((m5 + m6 + m7 + m8) % 2 != 0) throw DomainError("case II requires m5+m6+m7+m8 even");
    return {0, 0, 2 * m5, 2 * m5, 2 * m5, 2 * m6, 2 * m7, 2 * m8};
}

e8::Doubled embed_caseIII(const std::vector<long>& m) {
    require_arity(m, 5, "III");
    if (sum(m, 0, 5) % 2 != 0) throw DomainError("case III requires m4+...+m8 even");
    e8::Doubled y{};
    for (std::size_t i = 0; i < 5; ++i) y[3 + i] = 2 * m[i];
    return y;
}

e8::Doubled embed_caseIV(const std::vector<long>& m) {
    require_arity(m, 6, "IV");
    if (m[5] != sum(m, 0, 5)) throw DomainError("case IV requires m8 = m3+m4+m5+m6+m7");
    e8::Doubled y{};
    for (std::size_t i = 0; i < 6; ++i) y[2 + i] = 2 * m[i];
    return y;
}

e8::Doubled embed_case(SearchCase c, const std::vector<long>& m) {
    switch (c) {
    case SearchCase::I:
        require_arity(m, 4, "I");
        return embed_caseI(m[0], m[1], m[2], m[3]);
    case SearchCase::II:
        require_arity(m, 4, "II");
        return embed_caseII(m[0], m[1], m[2], m[3]);
    case SearchCase::III: return embed_caseIII(m);
    case SearchCase::IV: return embed_caseIV(m);
    }
    throw DomainError("unknown case");
}

std::int64_t case_norm(SearchCase c, const std::vector<long>& m) {
    std::int64_t s = 0;
    switch (c) {
    case SearchCase::I:
        require_arity(m, 4, "I");
        for (long v : m) s += 2 * static_cast<std::int64_t>(v) * v;
        return s;
    case SearchCase::II:
        require_arity(m, 4, "II");
        s = 3 * static_cast<std::int64_t>(m[0]) * m[0];
        for (std::size_t i = 1; i < 4; ++i) s += static_cast<std::int64_t>(m[i]) * m[i];
        return s;
    case SearchCase::III:
        require_arity(m, 5, "III");
        for (long v : m) s += static_cast<std::int64_t>(v) * v;
        return s;
    case SearchCase::IV:
        require_arity(m, 6, "IV");
        for (long v : m) s += static_cast<std::int64_t>(v) * v;
        return s;
    }
    throw DomainError("unknown case");
}

// --------------------------------------------------------------- predicates

std::optional<int> predicate_caseI(const std::vector<long>& m) {
    require_arity(m, 4, "I");
    for (std::size_t i = 0; i < 4; ++i) {
        if (m[i] == 0) return std::nullopt;
        for (std::size_t j = i + 1; j < 4; ++j)
            if (m[i] == m[j]) return std::nullopt;
    }
    // Relations m_k = +-m_i +- m_j, counted once per index triple.
    int relations = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k) {
                bool rel = false;
                for (long si : {1L, -1L})
                    for (long sj : {1L, -1L}) rel = rel || m[k] == si * m[i] + sj * m[j];
                if (rel) ++relations;
            }
    if (relations == 0) return 8;
    if (relations == 1) return 12;
    return std::nullopt;
}

std::optional<int> predicate_caseII(const std::vector<long>& m) {
    require_arity(m, 4, "II");
    for (std::size_t i = 0; i < 4; ++i) {
        if (m[i] == 0) return std::nullopt;
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::labs(m[i]) == std::labs(m[j])) return std::nullopt;
    }
    int three = 0;
    for (long s6 : {1L, -1L})
        for (long s7 : {1L, -1L})
            for (long s8 : {1L, -1L}) {
                const long v = s6 * m[1] + s7 * m[2] + s8 * m[3];
                if (v == m[0]) return std::nullopt;
                if (v == 3 * m[0]) ++three;
            }
    if (three == 0) return 10;
    if (three == 1) return 14;
    return std::nullopt;
}

std::optional<int> predicate_caseIII(const std::vector<long>& m) {
    require_arity(m, 5, "III");
    for (long v : m)
        if (v == 0) return std::nullopt;
    for (unsigned mask = 0; mask < 32; ++mask) {
        long s = 0;
        for (std::size_t i = 0; i < 5; ++i) s += (mask >> i) & 1 ? -m[i] : m[i];
        if (s == 0) return std::nullopt;
    }
    int coincidences = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (std::labs(m[i]) == std::labs(m[j])) ++coincidences;
    if (coincidences == 0) return 12;
    if (coincidences == 1) return 14;
    return std::nullopt;
}

int count_caseIV(const std::vector<long>& m) {
    require_arity(m, 6, "IV");
    if (m[5] != sum(m, 0, 5)) throw DomainError("case IV requires m8 = m3+m4+m5+m6+m7");
    int n = 8;
    for (unsigned mask = 1; mask < 32; ++mask) {
        long s = 0;
        for (std::size_t i = 0; i < 5; ++i)
            if ((mask >> i) & 1) s += m[i];
        if (s == 0) n += 4;
    }
    for (long v : m)
        if (v == 0) n += 8;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (m[i] == m[j]) n += 2;
            if (m[i] == -m[j]) n += 2;
        }
    return n;
}

std::optional<int> predicate(SearchCase c, const std::vector<long>& m) {
    switch (c) {
    case SearchCase::I: return predicate_caseI(m);
    case SearchCase::II: return predicate_caseII(m);
    case SearchCase::III: return predicate_caseIII(m);
    case SearchCase::IV: return count_caseIV(m);
    }
    throw DomainError("unknown case");
}

// -------------------------------------------------------- structured search

namespace {

bool hit_less(const SearchHit& a, const SearchHit& b) {
    if (a.n_l != b.n_l) return a.n_l < b.n_l;
    return a.coords2x < b.coords2x;
}

// Calls f on every canonical tuple of case c with norm 2d; the first
// coordinate of the canonical tuple is restricted to `first`.
void for_each_canonical(std::uint64_t d, SearchCase c, long first,
                        const std::function<void(const std::vector<long>&)>& f) {
    const long n2 = static_cast<long>(2 * d);
    std::vector<long> m;
    switch (c) {
    case SearchCase::I: {
        // 0 < m3 < m5 < m7 < m8, m3^2 + m5^2 + m7^2 + m8^2 = d.
        const long target = static_cast<long>(d);
        const long a = first;
        for (long b = a + 1; a * a + 3 * b * b <= target; ++b)
            for (long cc = b + 1; a * a + b * b + 2 * cc * cc <= target; ++cc) {
                const long rest = target - a * a - b * b - cc * cc;
                const long e = static_cast<long>(isqrt(Int(rest)).get_si());
                if (e * e == rest && e > cc) f({a, b, cc, e});
            }
        return;
    }
    case SearchCase::II: {
        // m5 >= 0, 0 <= m6 <= m7 <= m8, 3 m5^2 + m6^2 + m7^2 + m8^2 = 2d.
        const long a = first;
        const long r0 = n2 - 3 * a * a;
        if (r0 < 0) return;
        for (long b = 0; 3 * b * b <= r0; ++b)
            for (long cc = b; b * b + 2 * cc * cc <= r0; ++cc) {
                const long rest = r0 - b * b - cc * cc;
                const long e = static_cast<long>(isqrt(Int(rest)).get_si());
                if (e * e == rest && e >= cc && (a + b + cc + e) % 2 == 0) f({a, b, cc, e});
            }
        return;
    }
    case SearchCase::III: {
        // 0 <= m4 <= ... <= m8, sum of squares 2d, sum even.
        m.assign(5, 0);
        m[0] = first;
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
            if (i == 4) {
                const long e = static_cast<long>(isqrt(Int(rest)).get_si());
                if (e * e == rest && e >= m[3]) {
                    m[4] = e;
                    if ((m[0] + m[1] + m[2] + m[3] + m[4]) % 2 == 0) f(m);
                }
                return;
            }
            const long slots = static_cast<long>(5 - i);
            for (long v = m[i - 1]; slots * v * v <= rest; ++v) {
                m[i] = v;
                rec(i + 1, rest - v * v);
            }
        };
        const long r0 = n2 - first * first;
        if (r0 < 4 * first * first) return;
        rec(1, r0);
        return;
    }
    case SearchCase::IV: {
        // m3 <= ... <= m7, sum_{3..7} m_i^2 + (sum m_i)^2 = 2d.
        const long bound = static_cast<long>(isqrt(Int(n2)).get_si());
        m.assign(5, 0);
        m[0] = first;
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
            if (i == 5) {
                const long s = m[0] + m[1] + m[2] + m[3] + m[4];
                if (s * s != rest) return;
                std::vector<long> neg(5);
                for (std::size_t k = 0; k < 5; ++k) neg[k] = -m[4 - k];
                if (neg < m) return;
                std::vector<long> full = m;
                full.push_back(s);
                f(full);
                return;
            }
            for (long v = m[i - 1]; v <= bound; ++v) {
                if (v * v > rest) {
                    if (v > 0) break;
                    continue;
                }
                m[i] = v;
                rec(i + 1, rest - v * v);
            }
        };
        if (first * first > n2) return;
        rec(1, n2 - first * first);
        return;
    }
    }
}

std::vector<long> first_values(std::uint64_t d, SearchCase c) {
    const long n2 = static_cast<long>(2 * d);
    std::vector<long> out;
    switch (c) {
    case SearchCase::I:
        for (long a = 1; 4 * a * a < static_cast<long>(d); ++a) out.push_back(a);
        break;
    case SearchCase::II:
        for (long a = 0; 3 * a * a <= n2; ++a) out.push_back(a);
        break;
    case SearchCase::III:
        for (long a = 0; 5 * a * a <= n2; ++a) out.push_back(a);
        break;
    case SearchCase::IV: {
        const long b = static_cast<long>(isqrt(Int(n2)).get_si());
        for (long a = -b; a <= b; ++a) out.push_back(a);
        break;
    }
    }
    return out;
}

} // namespace

std::vector<SearchHit> structured_search(std::uint64_t d, SearchCase c, const std::set<int>& targets,
                                         unsigned threads) {
    if (d < 1) throw DomainError("d must be positive");
    const std::vector<long> firsts = first_values(d, c);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(firsts.size())));
    std::vector<std::vector<SearchHit>> found(workers);
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](unsigned w) {
        try {
            for (std::size_t k = w; k < firsts.size(); k += workers)
                for_each_canonical(d, c, firsts[k], [&](const std::vector<long>& m) {
                    const auto claimed = predicate(c, m);
                    if (!claimed) return;
                    const e8::Doubled y = embed_case(c, m);
                    if (e8::norm4(y) != static_cast<std::int64_t>(8 * d))
                        throw InternalError("structured tuple has the wrong norm");
                    const int oracle = e8::count_orth_roots_scan(y);
                    if (oracle != *claimed)
                        throw InternalError("case " + to_string(c) + " rule disagrees with the root count");
                    if (!targets.count(oracle)) return;
                    SearchHit h;
                    h.d = d;
                    h.coords2x = y;
                    h.m = m;
                    h.n_l = oracle;
                    h.source = source_of(c);
                    found[w].push_back(std::move(h));
                });
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<SearchHit> out;
    for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), hit_less);
    return out;
}

// -------------------------------------------------------- exhaustive search

e8::Doubled orbit_min_d8(const e8::Doubled& y) {
    e8::Doubled c = e8::canonical_d8(y);
    const bool odd_sign = c[7] < 0;
    e8::Doubled out{};
    for (int i = 0; i < 8; ++i) out[i] = -std::llabs(c[i]);
    bool has_zero = false;
    for (auto v : c) has_zero = has_zero || v == 0;
    // Eight negatives are an even number, so the all-negative vector is in
    // the orbit unless the orbit needs an odd number of minus signs.
    if (!has_zero && odd_sign) out[7] = -out[7];
    return out;
}

std::optional<SearchHit> exhaustive_search(std::uint64_t d, const ExhaustiveOptions& opts) {
    if (d < 1) throw DomainError("d must be positive");
    if (d > opts.max_d && !opts.override_bound)
        throw BoundExceeded("exhaustive search bound exceeded: d = " + std::to_string(d) + " > " +
                            std::to_string(opts.max_d));
    const std::int64_t target = static_cast<std::int64_t>(8 * d);
    std::optional<SearchHit> best;
    std::uint64_t covered = 0;
    e8::Doubled y{};

    auto consider = [&]() {
        if (!e8::in_lattice(y)) return;
        covered += e8::orbit_size_d8(y);
        const int n = e8::count_orth_roots(y);
        if (n < 2 || n > opts.max_roots) return;
        const e8::Doubled w = orbit_min_d8(y);
        if (best && (n > best->n_l || (n == best->n_l && !(w < best->coords2x)))) return;
        SearchHit h;
        h.d = d;
        h.coords2x = w;
        h.n_l = n;
        h.source = HitSource::Exhaustive;
        best = h;
    };

    // y_1 >= ... >= y_7 >= |y_8|, all of one parity, sum of squares 8d.
    std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int i, std::int64_t cap, std::int64_t rest) {
        if (i == 7) {
            const std::int64_t e = static_cast<std::int64_t>(isqrt(Int(static_cast<long>(rest))).get_si());
            if (e * e != rest || e > cap || ((e ^ y[0]) & 1)) return;
            y[7] = e;
            consider();
            if (e != 0) {
                y[7] = -e;
                consider();
            }
            return;
        }
        const int slots = 8 - i;
        for (std::int64_t v = cap; v >= 0; --v) {
            if (i > 0 && ((v ^ y[0]) & 1)) continue;
            if (v * v > rest) continue;
            if (static_cast<std::int64_t>(slots) * v * v < rest) break;
            y[i] = v;
            rec(i + 1, v, rest - v * v);
        }
    };
    const std::int64_t top = static_cast<std::int64_t>(isqrt(Int(static_cast<long>(target))).get_si());
    rec(0, top, target);

    const Int expected = 240 * sigma(d, 3);
    if (Int(static_cast<unsigned long>(covered)) != expected)
        throw InternalError("orbit sizes do not add up to the representation number");
    return best;
}

// ------------------------------------------------------------------ verdict

Verdict kodaira_verdict(std::uint64_t d, const VerdictOptions& opts) {
    if (d < 1) throw DomainError("d must be positive");
    Verdict v;
    v.d = d;
    v.mineq = check_mineq(d);
    v.mineqd = check_mineqd(d);

    const SearchCase cases[] = {SearchCase::I, SearchCase::II, SearchCase::III, SearchCase::IV};
    const std::set<int> small = {2, 4, 6, 8, 10, 12};
    for (SearchCase c : cases) {
        auto hits = structured_search(d, c, small, opts.threads);
        if (!hits.empty()) {
            v.kind = VerdictKind::GeneralType;
            v.witness = hits.front();
            return v;
        }
    }

    std::optional<SearchHit> ex;
    const bool guaranteed = v.mineq || v.mineqd;
    if (d <= opts.exhaustive.max_d || opts.exhaustive.override_bound || guaranteed) {
        ExhaustiveOptions eo = opts.exhaustive;
        eo.override_bound = true;
        ex = exhaustive_search(d, eo);
        v.exhaustive_ran = true;
        if (ex && ex->n_l <= 12) {
            v.kind = VerdictKind::GeneralType;
            v.witness = ex;
            return v;
        }
    }

    for (SearchCase c : cases) {
        auto hits = structured_search(d, c, {14}, opts.threads);
        if (!hits.empty()) {
            v.kind = VerdictKind::NonNegativeKodaira;
            v.witness = hits.front();
            return v;
        }
    }
    if (ex && ex->n_l == 14) {
        v.kind = VerdictKind::NonNegativeKodaira;
        v.witness = ex;
    }
    return v;
}

} // namespace k3lat
