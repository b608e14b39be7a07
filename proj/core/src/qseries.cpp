#include "k3lat/qseries.hpp"

#include <algorithm>
#include <numeric>

#include "k3lat/roots.hpp"

namespace k3lat {

QSeries::QSeries(unsigned step, std::size_t precision)
    : step_(step), precision_(precision), c_(precision * step + 1) {
    if (step == 0) throw DomainError("series grid step must be positive");
}

QSeries QSeries::one(unsigned step, std::size_t precision) {
    QSeries s(step, precision);
    s.c_[0] = 1;
    return s;
}

const Rational& QSeries::coeff(std::size_t m) const {
    if (m > precision_) throw DomainError("coefficient beyond series precision");
    return c_[m * step_];
}

Int QSeries::int_coeff(std::size_t m) const {
    const Rational& v = coeff(m);
    if (!is_integer(v)) throw InternalError("series coefficient is not integral: " + to_string(v));
    return v.get_num();
}

QSeries QSeries::regrid(unsigned new_step) const {
    if (new_step == step_) return *this;
    QSeries out(new_step, precision_);
    if (new_step % step_ == 0) {
        const unsigned f = new_step / step_;
        for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k * f] = c_[k];
        return out;
    }
    if (step_ % new_step == 0) {
        const unsigned f = step_ / new_step;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k % f == 0) out.c_[k / f] = c_[k];
            else if (c_[k] != 0)
                throw InternalError("regrid drops a nonzero coefficient at exponent " + std::to_string(k) + "/" +
                                    std::to_string(step_));
        }
        return out;
    }
    return regrid(std::lcm(step_, new_step)).regrid(new_step);
}

QSeries QSeries::truncate(std::size_t precision) const {
    if (precision > precision_) throw DomainError("cannot raise series precision");
    QSeries out(step_, precision);
    std::copy_n(c_.begin(), out.c_.size(), out.c_.begin());
    return out;
}

QSeries QSeries::alternate() const {
    QSeries out = *this;
    for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
    return out;
}

QSeries QSeries::pow(unsigned n) const {
    QSeries result = one(step_, precision_);
    QSeries base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

namespace {
void require_grid(const QSeries& a, const QSeries& b) {
    if (a.step() != b.step()) throw DomainError("series on different grids; regrid first");
}
} // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_grid(a, b);
    QSeries out(a.step_, std::min(a.precision_, b.precision_));
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    require_grid(a, b);
    QSeries out(a.step_, std::min(a.precision_, b.precision_));
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_grid(a, b);
    QSeries out(a.step_, std::min(a.precision_, b.precision_));
    const std::size_t n = out.c_.size();
    std::vector<std::size_t> nza;
    std::vector<std::size_t> nzb;
    bool integral = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.c_[k] != 0) nza.push_back(k);
        if (b.c_[k] != 0) nzb.push_back(k);
        integral = integral && is_integer(a.c_[k]) && is_integer(b.c_[k]);
    }
    if (integral) {
        std::vector<Int> acc(n);
        for (std::size_t i : nza)
            for (std::size_t j : nzb) {
                if (i + j >= n) break;
                mpz_addmul(acc[i + j].get_mpz_t(), a.c_[i].get_num_mpz_t(), b.c_[j].get_num_mpz_t());
            }
        for (std::size_t k = 0; k < n; ++k) out.c_[k] = Rational(acc[k]);
        return out;
    }
    for (std::size_t i : nza)
        for (std::size_t j : nzb) {
            if (i + j >= n) break;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    for (auto& c : out.c_) c.canonicalize();
    return out;
}

QSeries operator*(const Rational& s, const QSeries& a) {
    QSeries out = a;
    for (auto& c : out.c_) c *= s;
    return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.step_ == b.step_ && a.precision_ == b.precision_ && a.c_ == b.c_;
}

// ---------------------------------------------------------------- characters

DirichletChar DirichletChar::chi3() { return DirichletChar(3, {0, 1, -1}); }
DirichletChar DirichletChar::chi4() { return DirichletChar(4, {0, 1, 0, -1}); }

namespace {
template <class F>
Int divisor_sum(std::uint64_t m, F term) {
    if (m == 0) throw DomainError("divisor sums need m >= 1");
    Int s = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        s += term(d);
        if (d * d != m) s += term(m / d);
    }
    return s;
}

Int power(std::uint64_t d, unsigned k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), d, k);
    return r;
}
} // namespace

Int sigma_chi(std::uint64_t m, unsigned k, const DirichletChar& chi) {
    return divisor_sum(m, [&](std::uint64_t d) -> Int { return Int(chi(d)) * power(d, k); });
}

Int sigma_tilde_chi(std::uint64_t m, unsigned k, const DirichletChar& chi) {
    return divisor_sum(m, [&](std::uint64_t d) -> Int { return Int(chi(m / d)) * power(d, k); });
}

Int sigma(std::uint64_t m, unsigned k) {
    return divisor_sum(m, [&](std::uint64_t d) -> Int { return power(d, k); });
}

QSeries eisenstein_E3(const DirichletChar& chi, Cusp cusp, std::size_t precision) {
    QSeries s(1, precision);
    if (cusp == Cusp::Infinity) {
        const long c = chi.modulus() == 3 ? 9 : 4;
        s[0] = 1;
        for (std::size_t m = 1; m <= precision; ++m) s[m] = Rational(Int(-c) * sigma_chi(m, 2, chi));
    } else {
        for (std::size_t m = 1; m <= precision; ++m) s[m] = Rational(sigma_tilde_chi(m, 2, chi));
    }
    return s;
}

// -------------------------------------------------------------------- thetas

QSeries theta3(std::size_t precision) {
    QSeries s(2, precision);
    for (std::size_t n = 0; n * n <= 2 * precision; ++n) s[n * n] += n == 0 ? 1 : 2;
    return s;
}

QSeries theta3_double(std::size_t precision) {
    QSeries s(1, precision);
    for (std::size_t n = 0; n * n <= precision; ++n) s[n * n] += n == 0 ? 1 : 2;
    return s;
}

QSeries theta2_double(std::size_t precision) {
    // (n + 1/2)^2 = (2n + 1)^2 / 4; n and -n - 1 give the same exponent.
    QSeries s(4, precision);
    for (std::size_t k = 1; k * k <= 4 * precision; k += 2) s[k * k] += 2;
    return s;
}

QSeries theta_E7(std::size_t precision) {
    QSeries a = theta3_double(precision).regrid(4);
    QSeries b = theta2_double(precision);
    QSeries a3 = a.pow(3);
    QSeries a7 = a3 * a3 * a;
    QSeries t = a7 + Rational(7) * (a3 * b.pow(4));
    return t.regrid(1);
}

QSeries theta_Dn(unsigned n, std::size_t precision) {
    if (n < 2) throw DomainError("theta_Dn requires n >= 2");
    QSeries t = theta3(precision).pow(n);
    QSeries sum = t + t.alternate();
    return (Rational(1, 2) * sum).regrid(1);
}

QSeries theta_E6(std::size_t precision) {
    auto chi = DirichletChar::chi3();
    return Rational(81) * eisenstein_E3(chi, Cusp::Zero, precision) + eisenstein_E3(chi, Cusp::Infinity, precision);
}

QSeries theta_D6_eis(std::size_t precision) {
    auto chi = DirichletChar::chi4();
    return Rational(64) * eisenstein_E3(chi, Cusp::Zero, precision) + eisenstein_E3(chi, Cusp::Infinity, precision);
}

QSeries theta_brute(const IntLattice& l, std::size_t precision, unsigned threads) {
    QSeries s(2, precision);
    s[0] = 1;
    EnumOptions opts;
    opts.threads = threads;
    for (std::size_t k = 1; k <= 2 * precision; ++k) {
        if (l.is_even() && k % 2 == 1) continue;
        s[k] = Rational(Int(static_cast<unsigned long>(count_norm_vectors(l, Int(static_cast<unsigned long>(k)), opts))));
    }
    return l.is_even() ? s.regrid(1) : s;
}

Int rep_num(const std::string& name, std::uint64_t n, RepMethod method) {
    IntLattice l = name == "E6"   ? named::E(6)
                   : name == "E7" ? named::E(7)
                   : name == "D5" ? named::D(5)
                   : name == "D6" ? named::D(6)
                   : name == "D8" ? named::D(8)
                                  : throw DomainError("rep_num: unknown lattice '" + name + "'");
    if (n % 2 == 1) return 0;
    if (n == 0) return 1;
    if (method == RepMethod::Brute) return Int(static_cast<unsigned long>(count_norm_vectors(l, Int(static_cast<unsigned long>(n)))));
    const std::size_t m = n / 2;
    if (name == "E6") return theta_E6(m).int_coeff(m);
    if (name == "E7") return theta_E7(m).int_coeff(m);
    if (name == "D6") return theta_D6_eis(m).int_coeff(m);
    return theta_Dn(name == "D5" ? 5 : 8, m).int_coeff(m);
}

} // namespace k3lat
