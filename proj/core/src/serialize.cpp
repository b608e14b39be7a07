#include "k3lat/serialize.hpp"

#include <json.hpp>

namespace k3lat::json {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j, int indent) { return j.dump(indent); }

ordered_json ints(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

ordered_json matrix(const IntMatrix& m) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        a.push_back(std::move(row));
    }
    return a;
}

ordered_json doubled(const e8::Doubled& y) {
    ordered_json a = ordered_json::array();
    for (auto v : y) a.push_back(v);
    return a;
}

ordered_json hit(const SearchHit& h) {
    ordered_json j;
    j["d"] = h.d;
    j["coords2x"] = doubled(h.coords2x);
    if (!h.m.empty()) j["m"] = h.m;
    j["N_l"] = h.n_l;
    j["weight"] = h.weight();
    j["source"] = to_string(h.source);
    return j;
}

} // namespace

std::string to_json(const QSeries& s, int indent) {
    ordered_json j;
    j["precision"] = s.precision();
    j["step"] = s.step();
    ordered_json c = ordered_json::array();
    for (const auto& q : s.coeffs()) c.push_back(to_string(q));
    j["coeffs"] = std::move(c);
    return dump(j, indent);
}

std::string to_json(const SearchHit& h, int indent) { return dump(hit(h), indent); }

std::string to_json(const Verdict& v, int indent) {
    ordered_json j;
    j["d"] = v.d;
    j["verdict"] = to_string(v.kind);
    j["witness"] = v.witness ? hit(*v.witness) : ordered_json(nullptr);
    j["mineq"] = v.mineq;
    j["mineqd"] = v.mineqd;
    j["exhaustive"] = v.exhaustive_ran;
    return dump(j, indent);
}

std::string to_json(const ReflectionReport& r, int indent) {
    ordered_json j;
    j["r"] = ints(r.r);
    j["rSquared"] = to_string(r.r_squared);
    j["div"] = to_string(r.div);
    j["discAction"] = r.integral ? matrix(r.action) : ordered_json(nullptr);
    j["class"] = to_string(r.cls);
    return dump(j, indent);
}

std::string to_json(const ReflK3Report& r, int indent) {
    ordered_json j;
    j["d"] = r.d;
    j["samples"] = r.samples;
    j["skipped"] = r.non_primitive;
    j["nonReflective"] = r.non_reflective;
    j["reflective"] = r.reflective;
    j["plusId"] = r.plus_id;
    j["minusId"] = r.minus_id;
    j["neither"] = r.neither;
    j["detChecked"] = r.det_checked;
    j["detMismatches"] = r.det_mismatches;
    ordered_json ce = ordered_json::array();
    for (const auto& v : r.counterexamples) ce.push_back(ints(v));
    j["counterexamples"] = std::move(ce);
    return dump(j, indent);
}

std::string to_json(const DiscGroup& a, int indent) {
    ordered_json j;
    j["order"] = to_string(a.order());
    j["invariantFactors"] = ints(a.invariant_factors);
    ordered_json q = ordered_json::array();
    for (const auto& v : a.q_values) q.push_back(to_string(v));
    j["qValues"] = std::move(q);
    j["even"] = a.even;
    ordered_json g = ordered_json::array();
    for (const auto& y : a.generators) {
        ordered_json c = ordered_json::array();
        for (const auto& v : y.coords()) c.push_back(to_string(v));
        g.push_back(std::move(c));
    }
    j["generators"] = std::move(g);
    return dump(j, indent);
}

std::string to_json(const RowCheck& c, int indent) {
    ordered_json j;
    j["table"] = to_string(c.row.table);
    j["d"] = c.row.d;
    j["m"] = format_tuple(c.row.table, c.row.m);
    j["printedN_l"] = c.row.printed_n_l ? ordered_json(*c.row.printed_n_l) : ordered_json("8|12");
    j["coords2x"] = doubled(c.coords2x);
    j["norm"] = c.norm;
    j["normOk"] = c.norm_ok;
    j["constraintOk"] = c.constraint_ok;
    j["inE8"] = c.in_e8;
    j["N_l"] = c.n_l ? ordered_json(*c.n_l) : ordered_json(nullptr);
    j["countOk"] = c.count_ok;
    j["ok"] = c.ok();
    return dump(j, indent);
}

std::string to_json(const CMin& c, std::uint64_t d, int indent) {
    ordered_json j;
    j["d"] = d;
    j["cmin"] = to_string(c.value);
    j["argmin"] = c.argmin;
    return dump(j, indent);
}

std::string to_json(const BigPhiReport& r, int indent) {
    ordered_json j;
    j["rMax"] = r.r_max;
    j["cases"] = r.cases;
    j["violations"] = r.violations;
    j["minimum"] = to_string(r.minimum);
    j["argmin"] = {{"r", r.min_r}, {"k1", r.min_k1}};
    return dump(j, indent);
}

std::string to_json(const ToricReport& r, const IntMatrix& input, int indent) {
    ordered_json j;
    j["input"] = matrix(input);
    j["sigma"] = to_string(r.sigma);
    ordered_json dec = ordered_json::object();
    for (const auto& [d, nu] : r.decomposition.nu) dec[std::to_string(d)] = nu;
    j["decomposition"] = std::move(dec);
    j["order"] = r.decomposition.order;
    j["flags"] = {{"quasiReflection", r.quasi_reflection},
                  {"reflection", r.reflection},
                  {"orderTwo", r.order_two},
                  {"violation", r.violation}};
    return dump(j, indent);
}

std::string to_json(const EigenExponents& e, int indent) {
    ordered_json j;
    j["input"] = {{"m", e.order()}, {"exponents", e.exponents()}};
    j["sigma"] = to_string(sigma_rst(e));
    j["flags"] = {{"quasiReflection", is_quasi_reflection(e)}, {"reflection", is_reflection(e)}};
    return dump(j, indent);
}

} // namespace k3lat::json
