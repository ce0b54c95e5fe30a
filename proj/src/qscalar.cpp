#include "qdeform/qscalar.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qdeform {

namespace {

using Poly = std::vector<mpq_class>;  // ordinary polynomial, index = degree

void poly_trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// long division, returns quotient, leaves remainder in r
Poly poly_divmod(Poly& r, const Poly& d) {
    if (d.empty()) throw QScalarError("polynomial division by zero");
    if (r.size() < d.size()) return {};
    Poly quo(r.size() - d.size() + 1);
    const mpq_class& dl = d.back();
    for (std::size_t i = quo.size(); i-- > 0;) {
        mpq_class f = r[i + d.size() - 1] / dl;
        quo[i] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= f * d[j];
    }
    r.resize(d.size() - 1);
    poly_trim(r);
    poly_trim(quo);
    return quo;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = a;
        poly_divmod(r, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class l = a.back();
        for (auto& x : a) x /= l;
    }
    return a;
}

Poly to_poly(const LaurentPoly& p) { return p.coeffs(); }

void check_window(const LaurentPoly& p) {
    if (p.is_zero()) return;
    if (p.low() < -QScalar::kExpLimit || p.high() > QScalar::kExpLimit)
        throw QScalarError("exponent of s outside the +-4096 window");
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int low, std::vector<mpq_class> c) : low_(low), c_(std::move(c)) {
    trim();
}

void LaurentPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    if (k > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
        low_ += static_cast<int>(k);
    }
    if (c_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::constant(const mpq_class& v) { return monomial(0, v); }

LaurentPoly LaurentPoly::monomial(int exp, const mpq_class& v) {
    return LaurentPoly(exp, std::vector<mpq_class>{v});
}

mpq_class LaurentPoly::coeff(int exp) const {
    if (c_.empty() || exp < low_ || exp > high()) return 0;
    return c_[static_cast<std::size_t>(exp - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low_, b.low_);
    int hi = std::max(a.high(), b.high());
    std::vector<mpq_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i + static_cast<std::size_t>(a.low_ - lo)] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i + static_cast<std::size_t>(b.low_ - lo)] += b.c_[i];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::scaled(const mpq_class& v) const {
    if (sgn(v) == 0) return {};
    LaurentPoly r = *this;
    for (auto& x : r.c_) x *= v;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero()) return {};
    LaurentPoly r = *this;
    r.low_ += k;
    return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> s) const {
    std::complex<double> acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i].get_d();
    return acc * std::pow(s, low_);
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = std::hash<int>()(low_);
    for (const auto& x : c_) {
        std::size_t n = static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t()));
        std::size_t d = static_cast<std::size_t>(mpz_get_si(x.get_den_mpz_t()));
        h ^= n + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// -------------------------------------------------------------------- QScalar

QScalar::QScalar(long v) : den_(LaurentPoly::constant(1)) {
    if (v != 0) num_ = LaurentPoly::constant(mpq_class(v));
}

QScalar::QScalar(const mpq_class& v) : den_(LaurentPoly::constant(1)) {
    if (sgn(v) != 0) num_ = LaurentPoly::constant(v);
}

QScalar QScalar::spow(int k) {
    QScalar r;
    r.num_ = LaurentPoly::monomial(k, 1);
    check_window(r.num_);
    return r;
}

QScalar QScalar::lambda() { return q() - qpow(-1); }

QScalar QScalar::reduce(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw QScalarError("division by zero");
    QScalar r;
    if (num.is_zero()) return r;
    // move s^k factors of the denominator into the numerator
    LaurentPoly n = num.shifted(-den.low());
    LaurentPoly d = den.shifted(-den.low());
    if (d.high() > 0) {
        int nlow = n.low();
        Poly np = to_poly(n);
        Poly dp = to_poly(d);
        Poly g = poly_gcd(np, dp);
        if (g.size() > 1) {
            Poly r1 = np;
            Poly qn = poly_divmod(r1, g);
            Poly r2 = dp;
            Poly qd = poly_divmod(r2, g);
            n = LaurentPoly(nlow, std::move(qn));
            d = LaurentPoly(0, std::move(qd));
        }
    }
    mpq_class l = d.lead();
    if (l != 1) {
        mpq_class inv = 1 / l;
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    check_window(n);
    check_window(d);
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

bool QScalar::is_one() const {
    return is_laurent() && num_.low() == 0 && num_.coeffs().size() == 1 && num_.coeffs()[0] == 1;
}

bool QScalar::is_rational(mpq_class* v) const {
    if (is_zero()) {
        if (v) *v = 0;
        return true;
    }
    if (!is_laurent() || num_.low() != 0 || num_.coeffs().size() != 1) return false;
    if (v) *v = num_.coeffs()[0];
    return true;
}

bool QScalar::is_integer(long* v) const {
    mpq_class r;
    if (!is_rational(&r)) return false;
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) return false;
    if (v) *v = r.get_num().get_si();
    return true;
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        if (is_laurent()) {
            num_ = num_ + o.num_;
            check_window(num_);
            return *this;
        }
        *this = reduce(num_ + o.num_, den_);
        return *this;
    }
    *this = reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QScalar();
    if (is_laurent() && o.is_laurent()) {
        num_ = num_ * o.num_;
        check_window(num_);
        return *this;
    }
    *this = reduce(num_ * o.num_, den_ * o.den_);
    return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

QScalar QScalar::inverse() const {
    if (is_zero()) throw QScalarError("division by zero");
    return reduce(den_, num_);
}

QScalar QScalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    QScalar r(1);
    QScalar b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n > 0) b *= b;
    }
    return r;
}

bool QScalar::leads_negative() const { return !is_zero() && sgn(num_.lead()) < 0; }

std::complex<double> QScalar::eval(std::complex<double> q0) const {
    std::complex<double> s0 = std::sqrt(q0);
    std::complex<double> d = den_.eval(s0);
    double scale = 0;
    for (std::size_t i = 0; i < den_.coeffs().size(); ++i)
        scale += std::abs(den_.coeffs()[i].get_d()) * std::pow(std::abs(s0), static_cast<double>(i));
    if (std::abs(d) <= 1e-13 * std::max(1.0, scale))
        throw QScalarError("pole: denominator vanishes at q0");
    return num_.eval(s0) / d;
}

std::size_t QScalar::hash() const { return num_.hash() * 31 + den_.hash(); }

std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    bool even = true;
    for (int e = p.low(); e <= p.high(); ++e)
        if (sgn(p.coeff(e)) != 0 && (e % 2 != 0)) even = false;
    std::ostringstream out;
    bool first = true;
    for (int e = p.high(); e >= p.low(); --e) {
        mpq_class c = p.coeff(e);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        mpq_class mag = abs(c);
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        std::string var = even ? "q" : "s";
        int k = even ? e / 2 : e;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << var;
        if (k != 1) out << "^" << k;
    }
    return out.str();
}

std::string QScalar::str() const {
    if (is_laurent()) return poly_str(num_);
    auto wrap = [](const LaurentPoly& p) {
        std::string t = poly_str(p);
        bool simple = p.coeffs().size() == 1 && sgn(p.coeffs()[0]) > 0 && t.find('/') == std::string::npos;
        return simple ? t : "(" + t + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

QScalar qnum(long n) {
    if (n == 0) return QScalar();
    if (n < 0) return -qnum(-n);
    std::vector<mpq_class> c(static_cast<std::size_t>(4 * (n - 1) + 1));
    for (long k = 0; k < n; ++k) c[static_cast<std::size_t>(4 * k)] = 1;
    return QScalar::reduce(LaurentPoly(static_cast<int>(-2 * (n - 1)), std::move(c)), LaurentPoly::constant(1));
}

QScalar qnum_basic(long x, int m) {
    if (m == 0) throw QScalarError("basic q-number needs a nonzero base exponent");
    QScalar base = QScalar::qpow(m);
    return (base.pow(static_cast<int>(x)) - 1) / (base - 1);
}

std::complex<double> qeval(const QScalar& x, std::complex<double> q0) { return x.eval(q0); }

}  // namespace qdeform
