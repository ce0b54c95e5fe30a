#include <cmath>
#include <random>

#include <doctest.h>

#include "qdeform/qscalar.hpp"

using namespace qdeform;

namespace {

// random Laurent-polynomial quotient with small integer coefficients
QScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), terms(1, 3);
    auto poly = [&] {
        QScalar p;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) p += QScalar(coef(rng)) * QScalar::spow(expo(rng));
        return p;
    };
    QScalar num = poly(), den = poly();
    while (den.is_zero()) den = poly();
    return num / den;
}

std::complex<double> ev(const QScalar& x, double q0) { return x.eval({q0, 0}); }

}  // namespace

TEST_SUITE("qscalar") {
    TEST_CASE("q-numbers agree with the closed form") {
        const double q0 = 0.7;
        for (long n = -6; n <= 6; ++n) {
            double expect = (std::pow(q0, n) - std::pow(q0, -n)) / (q0 - 1 / q0);
            CHECK(std::abs(ev(qnum(n), q0) - expect) < 1e-12);
            QScalar sum;
            // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n) for n > 0
            for (long k = 0; k < n; ++k) sum += QScalar::qpow(static_cast<int>(n - 1 - 2 * k));
            if (n > 0) CHECK(qnum(n) == sum);
        }
        CHECK(qnum(0).is_zero());
        CHECK(qnum(1).is_one());
        CHECK(qnum(2) == QScalar::q() + QScalar::q().inverse());
        CHECK(qnum(-3) == -qnum(3));
    }

    TEST_CASE("basic q-numbers") {
        // [x; q] = 1 + q + ... + q^(x-1)
        QScalar s = 1 + QScalar::q() + QScalar::qpow(2);
        CHECK(qnum_basic(3, 1) == s);
        CHECK(std::abs(ev(qnum_basic(4, 2), 0.6) - (std::pow(0.36, 4) - 1) / (0.36 - 1)) < 1e-12);
    }

    TEST_CASE("canonical form and printing") {
        QScalar lam = QScalar::lambda();
        CHECK(lam == QScalar::q() - QScalar::q().inverse());
        CHECK(lam.str() == "q - q^-1");
        CHECK(QScalar::q().inverse().str() == "q^-1");
        CHECK(QScalar::s().str() == "s");
        CHECK((QScalar::q() / QScalar::q()).is_one());
        // (q^2 - 1)/(q - 1) reduces to q + 1
        QScalar r = (QScalar::qpow(2) - 1) / (QScalar::q() - 1);
        CHECK(r.is_laurent());
        CHECK(r == QScalar::q() + 1);
        long v = 0;
        CHECK(QScalar(7).is_integer(&v));
        CHECK(v == 7);
        CHECK_THROWS_AS((QScalar(1) / QScalar(0)), QScalarError);
    }

    TEST_CASE("field axioms on random elements") {
        std::mt19937 rng(7);
        for (int it = 0; it < 200; ++it) {
            QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }

    TEST_CASE("evaluation is a ring homomorphism") {
        std::mt19937 rng(11);
        for (double q0 : {0.7, 1.3, 2.0}) {
            for (int it = 0; it < 100; ++it) {
                QScalar a = random_scalar(rng), b = random_scalar(rng);
                std::complex<double> ea, eb;
                try {
                    ea = ev(a, q0);
                    eb = ev(b, q0);
                } catch (const QScalarError&) {
                    continue;  // pole at q0
                }
                double scale = 1 + std::abs(ea) * std::abs(eb);
                CHECK(std::abs(ev(a + b, q0) - (ea + eb)) < 1e-9 * scale);
                CHECK(std::abs(ev(a * b, q0) - ea * eb) < 1e-9 * scale);
            }
        }
        // s evaluates to the principal root
        CHECK(std::abs(ev(QScalar::s(), 0.49) - 0.7) < 1e-14);
        CHECK(std::abs(qeval(QScalar::s(), {-1, 0}) - std::complex<double>(0, 1)) < 1e-14);
    }

    TEST_CASE("powers") {
        QScalar x = QScalar::q() + 2;
        CHECK(x.pow(3) == x * x * x);
        CHECK(x.pow(-2) * x.pow(2) == QScalar(1));
        CHECK(x.pow(0).is_one());
    }

    TEST_CASE("scalar parser") {
        CHECK(parse_qscalar("q - q^-1") == QScalar::lambda());
        CHECK(parse_qscalar("[3]") == qnum(3));
        CHECK(parse_qscalar("q^(1/2)") == QScalar::s());
        CHECK(parse_qscalar("(q^2 - 1)/(q - 1)") == QScalar::q() + 1);
        CHECK(parse_qscalar("2*s^3") == 2 * QScalar::spow(3));
        CHECK_THROWS(parse_qscalar("q +"));
    }

    TEST_CASE("print and parse round trip") {
        std::mt19937 rng(3);
        for (int it = 0; it < 100; ++it) {
            QScalar a = random_scalar(rng);
            CHECK(parse_qscalar(a.str()) == a);
        }
    }
}
