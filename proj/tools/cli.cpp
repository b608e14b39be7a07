#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3lat/lattice_expr.hpp"
#include "k3lat/qseries.hpp"
#include "k3lat/reflective.hpp"
#include "k3lat/roots.hpp"
#include "k3lat/rst.hpp"
#include "k3lat/search.hpp"
#include "k3lat/serialize.hpp"
#include "k3lat/tables.hpp"

namespace k3lat::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Config {
    std::string format = "text";
    unsigned threads = 1;
    std::uint64_t seed = 1;
    Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text; }
};

unsigned default_threads() {
    if (const char* env = std::getenv("K3LAT_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size()) throw UsageError("bad integer '" + item + "'");
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw UsageError("bad integer '" + item + "'");
        } catch (const std::out_of_range&) {
            throw UsageError("integer out of range '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

std::vector<Int> parse_ints(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Int v;
        if (item.empty() || v.set_str(item, 10) != 0) throw UsageError("bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

IntMatrix parse_matrix(const std::string& s) {
    std::vector<std::vector<Int>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row));
    if (rows.empty()) throw UsageError("empty matrix");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw UsageError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::string tuple_str(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string tuple_str(const e8::Doubled& v) { return tuple_str(std::vector<long>(v.begin(), v.end())); }

template <class Span>
std::string join(const Span& v, const std::string& sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : v) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

ordered_json parsed_json(const std::string& s) { return ordered_json::parse(s); }

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string hit_source_m(const SearchHit& h) {
    return h.m.empty() ? std::string("-") : tuple_str(h.m);
}

// ------------------------------------------------------------------ commands

struct Ctx {
    Config& cfg;
    std::ostream& out;
    std::ostream& err;
};

void cmd_roots(Ctx& c, const std::string& expr, bool count_only) {
    IntLattice l = parse_lattice_expr(expr);
    RootSystemData rs = enumerate_roots(l);
    switch (c.cfg.fmt()) {
    case Format::Text:
        if (count_only) {
            c.out << rs.count << '\n';
            break;
        }
        for (const auto& r : rs.roots) c.out << join(r.coords(), " ") << '\n';
        break;
    case Format::Csv:
        c.out << (count_only ? "count" : "coords") << '\n';
        if (count_only) c.out << rs.count << '\n';
        else
            for (const auto& r : rs.roots) c.out << '"' << join(r.coords(), ",") << "\"\n";
        break;
    case Format::Json: {
        ordered_json j;
        j["lattice"] = expr;
        j["count"] = rs.count;
        if (!count_only) {
            ordered_json a = ordered_json::array();
            for (const auto& r : rs.roots) {
                ordered_json v = ordered_json::array();
                for (const auto& x : r.coords()) v.push_back(to_i64(x));
                a.push_back(std::move(v));
            }
            j["roots"] = std::move(a);
        }
        emit_json(c.out, j);
    }
    }
}

void cmd_enum(Ctx& c, const std::string& expr, const std::string& n_text, bool count_only, std::size_t limit) {
    IntLattice l = parse_lattice_expr(expr);
    Int n;
    if (n.set_str(n_text, 10) != 0 || n < 1) throw UsageError("norm must be a positive integer");
    std::vector<std::vector<std::int64_t>> found;
    std::mutex mu;
    EnumOptions opts;
    opts.threads = c.cfg.threads;
    const std::uint64_t count = enumerate_norm_vectors(
        l, n,
        [&](std::span<const std::int64_t> x) {
            if (!count_only) {
                std::lock_guard<std::mutex> lock(mu);
                found.emplace_back(x.begin(), x.end());
            }
            return true;
        },
        opts);
    std::sort(found.begin(), found.end());
    if (found.size() > limit) found.resize(limit);
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << count << '\n';
        for (const auto& v : found) c.out << join(v, " ") << '\n';
        break;
    case Format::Csv:
        c.out << "norm,count\n" << n.get_str() << ',' << count << '\n';
        break;
    case Format::Json: {
        ordered_json j;
        j["lattice"] = expr;
        j["norm"] = n.get_str();
        j["count"] = count;
        if (!count_only) j["vectors"] = found;
        emit_json(c.out, j);
    }
    }
}

void cmd_repnum(Ctx& c, const std::string& name, std::uint64_t n, const std::string& method) {
    const RepMethod m = method == "brute" ? RepMethod::Brute : RepMethod::Formula;
    Int v = rep_num(name, n, m);
    switch (c.cfg.fmt()) {
    case Format::Text: c.out << v.get_str() << '\n'; break;
    case Format::Csv: c.out << "lattice,norm,N\n" << name << ',' << n << ',' << v.get_str() << '\n'; break;
    case Format::Json: emit_json(c.out, {{"lattice", name}, {"norm", n}, {"method", method}, {"N", v.get_str()}});
    }
}

QSeries theta_by_name(const std::string& name, std::size_t p, const std::string& method, unsigned threads) {
    if (method == "brute") return theta_brute(parse_lattice_expr(name), p, threads);
    if (name == "E7") return theta_E7(p);
    if (name == "E6") return theta_E6(p);
    if (name == "D6eis") return theta_D6_eis(p);
    if (name.size() >= 2 && name[0] == 'D') {
        std::string digits = name.substr(1);
        if (digits.size() >= 3 && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
        long n = 0;
        try {
            std::size_t pos = 0;
            n = std::stol(digits, &pos);
            if (pos != digits.size() || n < 1) throw UsageError("bad rank");
        } catch (const std::exception&) {
            throw UsageError("unknown theta series '" + name + "'");
        }
        return theta_Dn(static_cast<unsigned>(n), p);
    }
    throw UsageError("no closed form for '" + name + "'; use --method brute with a lattice expression");
}

void cmd_theta(Ctx& c, const std::string& name, std::size_t p, const std::string& method) {
    QSeries s = theta_by_name(name, p, method, c.cfg.threads);
    auto exponent = [&](std::size_t k) {
        return s.step() == 1 ? std::to_string(k) : to_string(Rational(static_cast<unsigned long>(k), s.step()));
    };
    switch (c.cfg.fmt()) {
    case Format::Text:
        for (std::size_t k = 0; k < s.size(); ++k)
            if (s[k] != 0) c.out << exponent(k) << ' ' << to_string(s[k]) << '\n';
        break;
    case Format::Csv:
        c.out << "exponent,coefficient\n";
        for (std::size_t k = 0; k < s.size(); ++k) c.out << exponent(k) << ',' << to_string(s[k]) << '\n';
        break;
    case Format::Json: c.out << json::to_json(s, 2) << '\n';
    }
}

void cmd_pex(Ctx& c, std::uint64_t max_m) {
    auto p = compute_Pex(max_m);
    switch (c.cfg.fmt()) {
    case Format::Text: c.out << join(p, " ") << '\n'; break;
    case Format::Csv:
        c.out << "m\n";
        for (auto m : p) c.out << m << '\n';
        break;
    case Format::Json: emit_json(c.out, {{"max", max_m}, {"Pex", p}});
    }
}

void cmd_ineq(Ctx& c, std::uint64_t d) {
    auto n = representation_numbers(d);
    const bool a = check_mineq(d);
    const bool b = check_mineqd(d);
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << "d " << d << "\nN_E7 " << n.e7.get_str() << "\nN_E6 " << n.e6.get_str() << "\nN_D6 " << n.d6.get_str()
              << "\nN_D5 " << n.d5.get_str() << "\nmineq " << (a ? "true" : "false") << "\nmineqd "
              << (b ? "true" : "false") << '\n';
        break;
    case Format::Csv:
        c.out << "d,N_E7,N_E6,N_D6,N_D5,mineq,mineqd\n"
              << d << ',' << n.e7.get_str() << ',' << n.e6.get_str() << ',' << n.d6.get_str() << ',' << n.d5.get_str()
              << ',' << a << ',' << b << '\n';
        break;
    case Format::Json:
        emit_json(c.out, {{"d", d},
                          {"N_E7", n.e7.get_str()},
                          {"N_E6", n.e6.get_str()},
                          {"N_D6", n.d6.get_str()},
                          {"N_D5", n.d5.get_str()},
                          {"mineq", a},
                          {"mineqd", b}});
    }
}

void emit_hits(Ctx& c, const std::vector<SearchHit>& hits) {
    switch (c.cfg.fmt()) {
    case Format::Text:
        for (const auto& h : hits)
            c.out << to_string(h.source) << ' ' << hit_source_m(h) << ' ' << tuple_str(h.coords2x) << " N_l=" << h.n_l
                  << " weight=" << h.weight() << '\n';
        break;
    case Format::Csv:
        c.out << "d,source,m-tuple,coords2x,N_l,weight\n";
        for (const auto& h : hits)
            c.out << h.d << ',' << to_string(h.source) << ",\"" << hit_source_m(h) << "\",\"" << tuple_str(h.coords2x)
                  << "\"," << h.n_l << ',' << h.weight() << '\n';
        break;
    case Format::Json: {
        ordered_json a = ordered_json::array();
        for (const auto& h : hits) a.push_back(parsed_json(json::to_json(h)));
        emit_json(c.out, a);
    }
    }
}

SearchCase parse_case(const std::string& s) {
    if (s == "I") return SearchCase::I;
    if (s == "II") return SearchCase::II;
    if (s == "III") return SearchCase::III;
    if (s == "IV") return SearchCase::IV;
    throw UsageError("unknown case '" + s + "'");
}

void cmd_search(Ctx& c, std::uint64_t d, const std::string& which, const std::string& targets_text, bool exhaustive,
                int max_roots, bool override_bound) {
    std::vector<SearchHit> hits;
    if (exhaustive) {
        ExhaustiveOptions o;
        o.max_roots = max_roots;
        o.override_bound = override_bound;
        c.err << "exhaustive scan of E8 vectors of norm " << 2 * d << '\n';
        if (auto h = exhaustive_search(d, o)) hits.push_back(*h);
    } else {
        std::set<int> targets;
        for (long t : parse_longs(targets_text)) targets.insert(static_cast<int>(t));
        std::vector<SearchCase> cases;
        if (which == "all") cases = {SearchCase::I, SearchCase::II, SearchCase::III, SearchCase::IV};
        else cases = {parse_case(which)};
        for (SearchCase sc : cases) {
            c.err << "case " << to_string(sc) << " search at d = " << d << '\n';
            auto h = structured_search(d, sc, targets, c.cfg.threads);
            hits.insert(hits.end(), h.begin(), h.end());
        }
    }
    emit_hits(c, hits);
}

void cmd_verdict(Ctx& c, std::uint64_t d, bool override_bound) {
    VerdictOptions o;
    o.threads = c.cfg.threads;
    o.exhaustive.override_bound = override_bound;
    c.err << "verdict for d = " << d << '\n';
    Verdict v = kodaira_verdict(d, o);
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << "d=" << d << ' ' << to_string(v.kind);
        if (v.witness)
            c.out << " N_l=" << v.witness->n_l << " weight=" << v.witness->weight()
                  << " source=" << to_string(v.witness->source) << " m=" << hit_source_m(*v.witness)
                  << " coords2x=" << tuple_str(v.witness->coords2x);
        c.out << '\n';
        break;
    case Format::Csv:
        c.out << "d,verdict,N_l,weight,source,m-tuple,coords2x\n" << d << ',' << to_string(v.kind) << ',';
        if (v.witness)
            c.out << v.witness->n_l << ',' << v.witness->weight() << ',' << to_string(v.witness->source) << ",\""
                  << hit_source_m(*v.witness) << "\",\"" << tuple_str(v.witness->coords2x) << '"';
        else c.out << ",,,,";
        c.out << '\n';
        break;
    case Format::Json: c.out << json::to_json(v, 2) << '\n';
    }
}

void cmd_tables(Ctx& c, const std::string& which) {
    std::vector<TableId> ids;
    if (which == "all") ids = {TableId::I_8_12, TableId::II_10, TableId::II_14, TableId::III, TableId::IV};
    else {
        try {
            ids = {parse_table_id(which)};
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    switch (c.cfg.fmt()) {
    case Format::Csv:
        if (ids.size() != 1) throw UsageError("--format csv needs a single --table");
        c.out << table_csv(ids.front());
        break;
    case Format::Text:
        for (TableId t : ids)
            for (const auto& row : table_rows(t)) {
                RowCheck rc = check_row(row);
                c.out << to_string(t) << " d=" << row.d << ' ' << format_tuple(t, row.m) << " norm=" << rc.norm
                      << " N_l=" << (rc.n_l ? std::to_string(*rc.n_l) : std::string("-")) << " printed="
                      << (row.printed_n_l ? std::to_string(*row.printed_n_l) : std::string("8|12")) << ' '
                      << (rc.ok() ? "ok" : "MISMATCH") << '\n';
            }
        break;
    case Format::Json: {
        ordered_json a = ordered_json::array();
        for (TableId t : ids)
            for (const auto& row : table_rows(t)) a.push_back(parsed_json(json::to_json(check_row(row))));
        emit_json(c.out, a);
    }
    }
}

void cmd_reflect(Ctx& c, const std::string& expr, const std::string& r_text, std::uint64_t k3_d, std::uint64_t samples) {
    if (k3_d > 0) {
        c.err << "sampling " << samples << " vectors of L_" << 2 * k3_d << '\n';
        ReflK3Report rep = reflK3_sample_check(k3_d, samples, c.cfg.seed);
        switch (c.cfg.fmt()) {
        case Format::Text:
            c.out << "d " << rep.d << "\nsamples " << rep.samples << "\nreflective " << rep.reflective << "\nplus_id "
                  << rep.plus_id << "\nminus_id " << rep.minus_id << "\nneither " << rep.neither << "\ncounterexamples "
                  << rep.counterexamples.size() << "\ndet_mismatches " << rep.det_mismatches << '\n';
            break;
        case Format::Csv:
            c.out << "d,samples,reflective,plus_id,minus_id,neither,counterexamples,det_mismatches\n"
                  << rep.d << ',' << rep.samples << ',' << rep.reflective << ',' << rep.plus_id << ',' << rep.minus_id
                  << ',' << rep.neither << ',' << rep.counterexamples.size() << ',' << rep.det_mismatches << '\n';
            break;
        case Format::Json: c.out << json::to_json(rep, 2) << '\n';
        }
        return;
    }
    if (expr.empty() || r_text.empty()) throw UsageError("reflect needs a lattice and --r, or --k3 D");
    IntLattice l = parse_lattice_expr(expr);
    std::vector<Int> coords = parse_ints(r_text);
    if (coords.size() != l.rank()) throw UsageError("--r has the wrong length for the lattice");
    ReflectionReport rep = classify_reflection(l, l.vec(coords));
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << "r " << join(rep.r, ",") << "\nr^2 " << rep.r_squared.get_str() << "\ndiv " << rep.div.get_str()
              << "\nclass " << to_string(rep.cls) << '\n';
        break;
    case Format::Csv:
        c.out << "r,rSquared,div,class\n\"" << join(rep.r, ",") << "\"," << rep.r_squared.get_str() << ','
              << rep.div.get_str() << ',' << to_string(rep.cls) << '\n';
        break;
    case Format::Json: c.out << json::to_json(rep, 2) << '\n';
    }
}

void cmd_disc(Ctx& c, const std::string& expr) {
    IntLattice l = parse_lattice_expr(expr);
    DiscGroup a = disc_group(l);
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << "order " << a.order().get_str() << "\ninvariant_factors " << join(a.invariant_factors, " ")
              << "\nq_values";
        for (const auto& q : a.q_values) c.out << ' ' << to_string(q);
        c.out << "\ntwo_elementary " << (is_two_elementary(a) ? "true" : "false") << "\ndelta " << parity_delta(a)
              << '\n';
        break;
    case Format::Csv:
        c.out << "invariant_factor,q_value\n";
        for (std::size_t i = 0; i < a.invariant_factors.size(); ++i)
            c.out << a.invariant_factors[i].get_str() << ',' << to_string(a.q_values[i]) << '\n';
        break;
    case Format::Json: {
        ordered_json j = parsed_json(json::to_json(a));
        j["twoElementary"] = is_two_elementary(a);
        j["delta"] = parity_delta(a);
        emit_json(c.out, j);
    }
    }
}

void cmd_rst(Ctx& c, std::uint64_t m, const std::string& exps, const std::string& matrix, std::uint64_t k,
             std::uint64_t l) {
    if (!matrix.empty()) {
        IntMatrix g = parse_matrix(matrix);
        ToricReport rep = toric_order2_check(g);
        switch (c.cfg.fmt()) {
        case Format::Text:
            c.out << "order " << rep.decomposition.order << "\nsigma " << to_string(rep.sigma) << "\ndecomposition";
            for (const auto& [d, nu] : rep.decomposition.nu) c.out << ' ' << d << ':' << nu;
            c.out << "\nquasi_reflection " << rep.quasi_reflection << "\nreflection " << rep.reflection
                  << "\nviolation " << rep.violation << '\n';
            break;
        case Format::Csv:
            c.out << "order,sigma,quasi_reflection,reflection,violation\n"
                  << rep.decomposition.order << ',' << to_string(rep.sigma) << ',' << rep.quasi_reflection << ','
                  << rep.reflection << ',' << rep.violation << '\n';
            break;
        case Format::Json: c.out << json::to_json(rep, g, 2) << '\n';
        }
        return;
    }
    if (m == 0 || exps.empty()) throw UsageError("rst needs --m and --exponents, or --matrix");
    std::vector<std::uint64_t> a;
    for (long v : parse_longs(exps)) {
        if (v < 0) throw UsageError("exponents must be non-negative");
        a.push_back(static_cast<std::uint64_t>(v));
    }
    EigenExponents e(m, a);
    if (k > 0) {
        Rational s = sigma_prime(e, k, l);
        switch (c.cfg.fmt()) {
        case Format::Text: c.out << to_string(s) << '\n'; break;
        case Format::Csv: c.out << "k,l,sigma_prime\n" << k << ',' << l << ',' << to_string(s) << '\n'; break;
        case Format::Json: emit_json(c.out, {{"m", m}, {"exponents", a}, {"k", k}, {"l", l}, {"sigmaPrime", to_string(s)}});
        }
        return;
    }
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << "sigma " << to_string(sigma_rst(e)) << "\nquasi_reflection " << is_quasi_reflection(e)
              << "\nreflection " << is_reflection(e) << '\n';
        break;
    case Format::Csv:
        c.out << "sigma,quasi_reflection,reflection\n"
              << to_string(sigma_rst(e)) << ',' << is_quasi_reflection(e) << ',' << is_reflection(e) << '\n';
        break;
    case Format::Json: c.out << json::to_json(e, 2) << '\n';
    }
}

void cmd_cmin(Ctx& c, std::uint64_t d) {
    CMin v = c_min(d);
    switch (c.cfg.fmt()) {
    case Format::Text: c.out << to_string(v.value) << " at a=" << v.argmin << '\n'; break;
    case Format::Csv: c.out << "d,cmin,argmin\n" << d << ',' << to_string(v.value) << ',' << v.argmin << '\n'; break;
    case Format::Json: c.out << json::to_json(v, d, 2) << '\n';
    }
}

void cmd_bigphi(Ctx& c, std::uint64_t r_max) {
    BigPhiReport rep = bigphi_verify(r_max, c.cfg.threads);
    switch (c.cfg.fmt()) {
    case Format::Text:
        c.out << "cases " << rep.cases << "\nviolations " << rep.violations << "\nminimum " << to_string(rep.minimum)
              << " at r=" << rep.min_r << " k1=" << rep.min_k1 << '\n';
        break;
    case Format::Csv:
        c.out << "rMax,cases,violations,minimum\n"
              << rep.r_max << ',' << rep.cases << ',' << rep.violations << ',' << to_string(rep.minimum) << '\n';
        break;
    case Format::Json: c.out << json::to_json(rep, 2) << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    cfg.threads = default_threads();
    CLI::App app{"Lattice computations for K3 moduli: E8 roots, theta series, orthogonal-root searches, "
                 "reflections and quotient-singularity sums."};
    app.name("k3lat");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", cfg.threads, "Worker threads (default: K3LAT_THREADS or all cores)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");

    std::function<void(Ctx&)> action;

    std::string expr, text2, method = "formula", which = "all", targets = "8,10,12,14", r_text, exps, matrix;
    bool flag = false, exhaustive = false, override_bound = false;
    std::uint64_t num = 0, num2 = 0, k = 0, l = 0;
    std::size_t limit = 1000;
    int max_roots = 14;

    auto* roots = app.add_subcommand("roots", "Roots of a definite lattice");
    roots->add_option("lattice", expr, "Lattice expression, e.g. E8 or 4A(1)")->required();
    roots->add_flag("--count", flag, "Print only the number of roots");
    roots->callback([&] { action = [&](Ctx& c) { cmd_roots(c, expr, flag); }; });

    auto* en = app.add_subcommand("enum", "Vectors of a given norm in a definite lattice");
    en->add_option("lattice", expr)->required();
    en->add_option("norm", text2)->required();
    en->add_flag("--count", flag, "Print only the count");
    en->add_option("--limit", limit, "Maximum number of vectors printed");
    en->callback([&] { action = [&](Ctx& c) { cmd_enum(c, expr, text2, flag, limit); }; });

    auto* rn = app.add_subcommand("repnum", "Representation number N_L(n) for L in E6, E7, D5, D6, D8");
    rn->add_option("lattice", expr)->required()->check(CLI::IsMember({"E6", "E7", "D5", "D6", "D8"}));
    rn->add_option("norm", num, "The norm n = 2d")->required();
    rn->add_option("--method", method)->check(CLI::IsMember({"formula", "brute"}));
    rn->callback([&] { action = [&](Ctx& c) { cmd_repnum(c, expr, num, method); }; });

    auto* th = app.add_subcommand("theta", "Theta series (E6, E7, D(n), D6eis; any lattice with --method brute)");
    th->add_option("lattice", expr)->required();
    th->add_option("--precision", num, "Largest q-exponent")->required();
    th->add_option("--method", method)->check(CLI::IsMember({"formula", "brute"}));
    th->callback([&] { action = [&](Ctx& c) { cmd_theta(c, expr, num, method); }; });

    auto* px = app.add_subcommand("pex", "Exceptional degrees where the theta inequality fails");
    num2 = 240;
    px->add_option("--max", num2, "Largest m examined");
    px->callback([&] { action = [&](Ctx& c) { cmd_pex(c, num2); }; });

    auto* iq = app.add_subcommand("ineq", "Representation-number inequalities at degree d");
    iq->add_option("d", num)->required()->check(CLI::PositiveNumber);
    iq->callback([&] { action = [&](Ctx& c) { cmd_ineq(c, num); }; });

    auto* se = app.add_subcommand("search", "Structured or exhaustive search for l in E8 with l^2 = 2d");
    se->add_option("d", num)->required()->check(CLI::PositiveNumber);
    se->add_option("--case", which, "I, II, III, IV or all")->check(CLI::IsMember({"I", "II", "III", "IV", "all"}));
    se->add_option("--targets", targets, "Comma-separated N_l values to report");
    se->add_flag("--exhaustive", exhaustive, "Scan every vector of norm 2d");
    se->add_option("--max-roots", max_roots, "Largest N_l accepted by the exhaustive scan");
    se->add_flag("--override", override_bound, "Allow the exhaustive scan beyond its degree bound");
    se->callback([&] {
        action = [&](Ctx& c) { cmd_search(c, num, which, targets, exhaustive, max_roots, override_bound); };
    });

    auto* ve = app.add_subcommand("verdict", "Kodaira-dimension verdict for F_2d");
    ve->add_option("d", num)->required()->check(CLI::PositiveNumber);
    ve->add_flag("--override", override_bound, "Allow the exhaustive scan beyond its degree bound");
    ve->callback([&] { action = [&](Ctx& c) { cmd_verdict(c, num, override_bound); }; });

    auto* ta = app.add_subcommand("tables", "Recompute the published search tables");
    ta->add_option("--table", which, "I-8,12, II-10, II-14, III, IV or all");
    ta->callback([&] { action = [&](Ctx& c) { cmd_tables(c, which); }; });

    auto* rf = app.add_subcommand("reflect", "Classify a reflection, or sample-check reflections of L_2d");
    rf->add_option("lattice", expr);
    rf->add_option("--r", r_text, "Comma-separated coordinates of r");
    rf->add_option("--k3", num, "Sample-check L_2d for this d");
    num2 = 10000;
    rf->add_option("--samples", num2, "Number of samples for --k3");
    rf->callback([&] { action = [&](Ctx& c) { cmd_reflect(c, expr, r_text, num, num2); }; });

    auto* di = app.add_subcommand("disc", "Discriminant group and quadratic form");
    di->add_option("lattice", expr)->required();
    di->callback([&] { action = [&](Ctx& c) { cmd_disc(c, expr); }; });

    auto* rs = app.add_subcommand("rst", "Sigma sums of eigen-exponents or of a finite-order integer matrix");
    rs->add_option("--m", num, "Order m of the exponent list");
    rs->add_option("--exponents", exps, "Comma-separated a_i with 0 <= a_i < m");
    rs->add_option("--matrix", matrix, "Rows separated by ';', entries by ','");
    rs->add_option("--k", k, "Evaluate Sigma' for an element of order 2k");
    rs->add_option("--l", l, "Power l for Sigma'");
    rs->callback([&] { action = [&](Ctx& c) { cmd_rst(c, num, exps, matrix, k, l); }; });

    auto* cm = app.add_subcommand("cmin", "Minimal shifted sum c_min(d)");
    cm->add_option("d", num)->required();
    cm->callback([&] { action = [&](Ctx& c) { cmd_cmin(c, num); }; });

    auto* bp = app.add_subcommand("bigphi", "Check the fractional-sum bound for phi(r) >= 6");
    num2 = 100;
    bp->add_option("--max", num2, "Largest r");
    bp->callback([&] { action = [&](Ctx& c) { cmd_bigphi(c, num2); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    out << std::boolalpha;
    Ctx ctx{cfg, out, err};
    try {
        action(ctx);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

} // namespace k3lat::cli
