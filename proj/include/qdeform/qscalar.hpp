#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdeform {

// Laurent polynomial in s with rational coefficients.
// c[i] is the coefficient of s^(low + i); no zero at either end.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const mpq_class& v);
    static LaurentPoly monomial(int exp, const mpq_class& v = 1);

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int exp) const;
    const mpq_class& lead() const { return c_.back(); }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const mpq_class& v) const;
    LaurentPoly shifted(int k) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    std::complex<double> eval(std::complex<double> s) const;
    std::size_t hash() const;

    // internals shared with the gcd code
    LaurentPoly(int low, std::vector<mpq_class> c);

private:
    void trim();
    int low_ = 0;
    std::vector<mpq_class> c_;
};

struct QScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Q(s), s = q^(1/2). Canonical: gcd(num, den) = 1, den has lowest
// exponent 0 and leading coefficient 1.
class QScalar {
public:
    static constexpr int kExpLimit = 4096;

    QScalar() : den_(LaurentPoly::constant(1)) {}
    QScalar(long v);  // NOLINT(google-explicit-constructor)
    QScalar(const mpq_class& v);  // NOLINT
    static QScalar reduce(const LaurentPoly& num, const LaurentPoly& den);

    static QScalar s() { return spow(1); }
    static QScalar q() { return spow(2); }
    static QScalar spow(int k);
    static QScalar qpow(int k) { return spow(2 * k); }
    static QScalar lambda();  // q - 1/q

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.high() == 0; }
    // integer constant c (den 1, num = c s^0)
    bool is_integer(long* v = nullptr) const;
    bool is_rational(mpq_class* v = nullptr) const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    QScalar inverse() const;
    QScalar pow(int n) const;
    // true when the sign of the highest-exponent numerator coefficient is negative
    bool leads_negative() const;

    std::complex<double> eval(std::complex<double> q0) const;
    std::string str() const;
    std::size_t hash() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

// [n] = (q^n - q^-n)/(q - q^-1)
QScalar qnum(long n);
// [x; q^m] = (q^(m x) - 1)/(q^m - 1)
QScalar qnum_basic(long x, int m);
// principal square root for s0
std::complex<double> qeval(const QScalar& x, std::complex<double> q0);
// parse a scalar expression (integers, q, s, q^k, q^(n/2), [n], + - * /, parens)
QScalar parse_qscalar(const std::string& text);

std::string poly_str(const LaurentPoly& p);

}  // namespace qdeform

template <>
struct std::hash<qdeform::QScalar> {
    std::size_t operator()(const qdeform::QScalar& x) const { return x.hash(); }
};
