#include "k3lat/reflective.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>

namespace k3lat {

namespace {

std::vector<Int> gram_times(const IntLattice& l, const std::vector<Int>& x) {
    return l.gram().apply(std::span<const Int>(x));
}

void require_member(const IntLattice& l, const LatVec& r) {
    if (!r.belongs_to(l)) throw DomainError("vector does not belong to the lattice");
}

} // namespace

IsometryMatrix::IsometryMatrix(const IntLattice& l, IntMatrix m) : lattice_(l), m_(std::move(m)) {
    const IntMatrix& g = l.gram();
    if (m_.rows() != g.rows() || m_.cols() != g.cols()) throw DomainError("isometry matrix has the wrong size");
    if (m_.transpose() * g * m_ != g) throw DomainError("matrix does not preserve the Gram matrix");
}

LatVec IsometryMatrix::apply(const LatVec& x) const {
    require_member(lattice_, x);
    return LatVec(lattice_, m_.apply(std::span<const Int>(x.coords())));
}

DualVec IsometryMatrix::apply(const DualVec& y) const {
    if (!y.lattice().same_as(lattice_)) throw DomainError("dual vector does not belong to the lattice");
    return DualVec(lattice_, to_rational(m_).apply(std::span<const Rational>(y.coords())));
}

IsometryMatrix IsometryMatrix::compose(const IsometryMatrix& other) const {
    if (!other.lattice_.same_as(lattice_)) throw DomainError("isometries of different lattices");
    return IsometryMatrix(lattice_, m_ * other.m_);
}

bool IsometryMatrix::is_identity() const { return m_ == IntMatrix::identity(m_.rows()); }

namespace {

/// c_j = 2 (b_j, r) / (r, r) for each basis vector, or nullopt when some c_j
/// is not an integer.
std::optional<std::vector<Int>> reflection_coefficients(const IntLattice& l, const LatVec& r) {
    require_member(l, r);
    const Int rr = norm(l, r);
    if (rr == 0) throw DomainError("reflection needs (r, r) != 0");
    std::vector<Int> gr = gram_times(l, r.coords());
    std::vector<Int> c(gr.size());
    for (std::size_t j = 0; j < gr.size(); ++j) {
        Int t = 2 * gr[j];
        if (t % rr != 0) return std::nullopt;
        c[j] = t / rr;
    }
    return c;
}

} // namespace

bool is_reflective(const IntLattice& l, const LatVec& r) { return reflection_coefficients(l, r).has_value(); }

IsometryMatrix reflection(const IntLattice& l, const LatVec& r) {
    auto c = reflection_coefficients(l, r);
    if (!c) throw NotIntegralError("reflection is not integral on the lattice");
    const std::size_t n = l.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) -= r[i] * (*c)[j];
    return IsometryMatrix(l, std::move(m));
}

IntMatrix disc_action(const IntLattice& l, const DiscGroup& a, const IsometryMatrix& g) {
    if (!g.lattice().same_as(l)) throw DomainError("isometry of a different lattice");
    const std::size_t k = a.generators.size();
    IntMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> c = a.coordinates(g.apply(a.generators[i]));
        for (std::size_t j = 0; j < k; ++j) out(j, i) = c[j];
    }
    return out;
}

namespace {

bool acts_as_scalar(const DiscGroup& a, const IntMatrix& act, long s) {
    for (std::size_t i = 0; i < act.cols(); ++i)
        for (std::size_t j = 0; j < act.rows(); ++j) {
            Int expect = i == j ? mod(Int(s), a.invariant_factors[j]) : Int(0);
            if (act(j, i) != expect) return false;
        }
    return true;
}

} // namespace

bool is_id_on_disc(const IntLattice& l, const DiscGroup& a, const IsometryMatrix& g) {
    return acts_as_scalar(a, disc_action(l, a, g), 1);
}

bool is_minus_id_on_disc(const IntLattice& l, const DiscGroup& a, const IsometryMatrix& g) {
    return acts_as_scalar(a, disc_action(l, a, g), -1);
}

std::string to_string(ReflectionClass c) {
    switch (c) {
    case ReflectionClass::InTildeO: return "InTildeO";
    case ReflectionClass::MinusInTildeO: return "MinusInTildeO";
    case ReflectionClass::Neither: return "Neither";
    case ReflectionClass::NotIntegral: return "NotIntegral";
    }
    return "?";
}

ReflectionReport classify_reflection(const IntLattice& l, const LatVec& r) {
    return classify_reflection(l, disc_group(l), r);
}

namespace {

void check_consistency(const IntLattice& l, const DiscGroup& a, const ReflectionReport& rep) {
    if (!l.is_even()) return;
    const Int rr = abs(rep.r_squared);
    const Int& div = rep.div;
    const Int& dd = a.exponent;
    auto fail = [&](const std::string& what) {
        std::string v;
        for (const auto& x : rep.r) v += (v.empty() ? "" : ",") + to_string(x);
        throw InternalError("reflection class inconsistent with " + what + " for r = (" + v + ")");
    };
    const bool norm_two = rr == 2;
    if (rep.acts_as_id != norm_two) fail("the norm +-2 criterion for id");
    if (rep.acts_as_minus_id) {
        const bool first = rr == 2 * dd && div == dd && dd % 2 == 1;
        const bool second = rr == dd && (div == dd || (dd % 2 == 0 && div == dd / 2));
        if (!first && !second) fail("the necessary conditions for -id");
    }
    const bool suff_a = rr == dd && (div == dd || (dd % 2 == 0 && div == dd / 2 && (dd / 2) % 2 == 1));
    const bool suff_b = rr == 2 * dd && div == dd && dd % 2 == 1;
    if ((suff_a || suff_b) && !rep.acts_as_minus_id) fail("the sufficient conditions for -id");
    if (a.order() % 2 == 1) {
        const bool minus_pred = rr == 2 * dd && div == dd;
        if (rep.acts_as_minus_id != minus_pred) fail("the odd-determinant criterion for -id");
    }
}

} // namespace

ReflectionReport classify_reflection(const IntLattice& l, const DiscGroup& a, const LatVec& r) {
    require_member(l, r);
    if (!is_primitive(r)) throw DomainError("classify_reflection requires a primitive vector");
    ReflectionReport rep;
    rep.r = r.coords();
    rep.r_squared = norm(l, r);
    if (rep.r_squared == 0) throw DomainError("classify_reflection requires (r, r) != 0");
    rep.div = divisor(l, r);
    auto coeffs = reflection_coefficients(l, r);
    if (!coeffs) {
        rep.cls = ReflectionClass::NotIntegral;
        return rep;
    }
    rep.integral = true;
    IsometryMatrix g = reflection(l, r);
    rep.action = disc_action(l, a, g);
    rep.acts_as_id = acts_as_scalar(a, rep.action, 1);
    rep.acts_as_minus_id = acts_as_scalar(a, rep.action, -1);
    rep.cls = rep.acts_as_id         ? ReflectionClass::InTildeO
              : rep.acts_as_minus_id ? ReflectionClass::MinusInTildeO
                                     : ReflectionClass::Neither;
    check_consistency(l, a, rep);
    return rep;
}

namespace {

Int orth_det(const IntLattice& l, const LatVec& r) {
    std::array<LatVec, 1> s{r};
    OrthComplement c = orth_complement(l, s);
    return abs(c.lattice.determinant());
}

} // namespace

OrthDetCheck orth_det_check(const IntLattice& l, const LatVec& r) {
    require_member(l, r);
    if (!is_primitive(r)) throw DomainError("orth_det_check requires a primitive vector");
    const Int rr = abs(norm(l, r));
    if (rr == 0) throw DomainError("orth_det_check requires (r, r) != 0");
    const Int div = divisor(l, r);
    OrthDetCheck out;
    out.det = orth_det(l, r);
    Int num = abs(l.determinant()) * rr;
    if (num % (div * div) != 0) throw InternalError("|det L| r^2 is not divisible by div(r)^2");
    out.predicted = num / (div * div);
    out.match = out.det == out.predicted;
    return out;
}

OrthDetCheck orth_det_check(std::uint64_t d, const IntLattice& l2d, const LatVec& r) {
    require_member(l2d, r);
    const Int dd(static_cast<unsigned long>(d));
    if (!is_primitive(r)) throw DomainError("orth_det_check requires a primitive vector");
    if (abs(norm(l2d, r)) != 2 * dd) throw DomainError("orth_det_check requires r^2 = +-2d");
    const Int div = divisor(l2d, r);
    if (div != dd && div != 2 * dd) throw DomainError("orth_det_check requires div(r) in {d, 2d}");
    OrthDetCheck out;
    out.det = orth_det(l2d, r);
    out.predicted = 4 * dd * dd / (div * div);
    out.match = out.det == out.predicted;
    return out;
}

bool is_two_elementary(const DiscGroup& a) {
    return std::all_of(a.invariant_factors.begin(), a.invariant_factors.end(), [](const Int& f) { return f == 2; });
}

int parity_delta(const DiscGroup& a) {
    for (const auto& q : a.q_values)
        if (!is_integer(q)) return 1;
    return 0;
}

// ------------------------------------------------------------------ sampling

namespace {

constexpr std::size_t kL2dRank = 21;
constexpr std::size_t kH = 20;

class L2dSampler {
public:
    L2dSampler(const IntLattice& l, std::uint64_t d, std::uint64_t seed, long box)
        : l_(l), d_(static_cast<long>(d)), rng_(seed), box_(box) {}

    std::vector<Int> uniform() {
        std::uniform_int_distribution<long> dist(-box_, box_);
        std::vector<Int> v(kL2dRank);
        for (auto& x : v) x = dist(rng_);
        return v;
    }

    /// k m0 + x h with m0 primitive in 2U + 2E8(-1) and target norm T.
    std::optional<std::vector<Int>> structured() {
        const std::array<long, 4> ks{1, 2, d_, 2 * d_};
        const long k = ks[pick(ks.size())];
        const std::array<long, 9> targets{-2, 2, -4, 4, -d_, d_, -2 * d_, 2 * d_, 0};
        long t = targets[pick(targets.size())];
        if (t == 0) t = 2 * uniform_in(-3 * d_, 3 * d_);
        if (t == 0) t = -2;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const long x = uniform_in(-box_, box_);
            if (std::gcd(k, x) != 1) continue;
            // T = k^2 m0^2 - 2 d x^2
            const long num = t + 2 * d_ * x * x;
            if (num % (k * k) != 0) continue;
            const long m0sq = num / (k * k);
            if (m0sq % 2 != 0) continue;
            std::vector<Int> m0 = vector_of_norm(m0sq);
            for (auto& c : m0) c *= k;
            m0[kH] = x;
            return m0;
        }
        return std::nullopt;
    }

private:
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    long uniform_in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// e + b f + z in 2U + 2E8(-1) with z random in the summands after the
    /// first U, so the e-coefficient 1 makes the vector primitive.
    std::vector<Int> vector_of_norm(long t) {
        std::vector<Int> v(kL2dRank);
        for (std::size_t i = 2; i < kH; ++i) v[i] = uniform_in(-2, 2);
        Int nz = norm(l_, LatVec(l_, v));
        Int b = (Int(t) - nz) / 2;
        v[0] = 1;
        v[1] = b;
        return v;
    }

    const IntLattice& l_;
    long d_;
    std::mt19937_64 rng_;
    long box_;
};

} // namespace

ReflK3Report reflK3_sample_check(std::uint64_t d, std::uint64_t samples, std::uint64_t seed, long box) {
    if (d < 1) throw DomainError("reflK3_sample_check requires d >= 1");
    if (box < 1) throw DomainError("sampling box must be positive");
    IntLattice l = named::L2d(static_cast<long>(d));
    DiscGroup a = disc_group(l);
    L2dSampler sampler(l, d, seed, box);
    const Int dd(static_cast<unsigned long>(d));

    ReflK3Report rep;
    rep.d = d;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<Int> coords;
        if (i % 5 != 0) {
            if (auto s = sampler.structured()) coords = std::move(*s);
        }
        if (coords.empty()) coords = sampler.uniform();
        ++rep.samples;
        LatVec r(l, std::move(coords));
        if (r.is_zero() || !is_primitive(r) || norm(l, r) == 0) {
            ++rep.non_primitive;
            continue;
        }
        if (!is_reflective(l, r)) {
            ++rep.non_reflective;
            continue;
        }
        ++rep.reflective;
        ReflectionReport c = classify_reflection(l, a, r);
        switch (c.cls) {
        case ReflectionClass::InTildeO: ++rep.plus_id; break;
        case ReflectionClass::MinusInTildeO: ++rep.minus_id; break;
        default: ++rep.neither; break;
        }
        const Int rr = abs(c.r_squared);
        const bool special_2d = rr == 2 * dd && (c.div == dd || c.div == 2 * dd);
        const bool predicted = rr == 2 || special_2d;
        const bool actual = c.acts_as_id || c.acts_as_minus_id;
        if (predicted != actual) rep.counterexamples.push_back(r.coords());

        OrthDetCheck det = special_2d ? orth_det_check(d, l, r) : orth_det_check(l, r);
        ++rep.det_checked;
        if (!det.match) ++rep.det_mismatches;
    }
    return rep;
}

} // namespace k3lat
