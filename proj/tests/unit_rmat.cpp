#include <random>

#include <Eigen/Dense>
#include <doctest.h>

#include "qdeform/catalog.hpp"
#include "qdeform/rmat.hpp"

using namespace qdeform;

namespace {

Eigen::MatrixXcd numeric(const QMatrix& m, double q0) {
    Eigen::MatrixXcd x(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) x(i, j) = m.at(i, j).eval({q0, 0});
    return x;
}

Eigen::MatrixXcd nkron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

}  // namespace

TEST_SUITE("rmat") {
    TEST_CASE("R is the standard two-by-two solution") {
        QMatrix r = r_matrix();
        QScalar q = QScalar::q();
        CHECK(r.at(0, 0) == q);
        CHECK(r.at(3, 3) == q);
        CHECK(r.at(1, 1).is_one());
        CHECK(r.at(2, 2).is_one());
        CHECK(r.at(2, 1) == QScalar::lambda());
        CHECK(r.at(1, 2).is_zero());
        CHECK(standard_constants().Rhat == perm4() * r);
    }

    TEST_CASE("Yang-Baxter exactly and against a dense float build") {
        auto c = standard_constants();
        CHECK(yang_baxter_residual(c.R).is_zero());
        for (double q0 : {0.7, 1.9}) {
            Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(2, 2), R = numeric(c.R, q0), P = numeric(perm4(), q0);
            Eigen::MatrixXcd R12 = nkron(R, I), R23 = nkron(I, R);
            Eigen::MatrixXcd P23 = nkron(I, P);
            Eigen::MatrixXcd R13 = P23 * R12 * P23;
            CHECK((R12 * R13 * R23 - R23 * R13 * R12).norm() < 1e-12);
        }
        // a perturbed matrix fails
        QMatrix bad = c.R;
        bad.at(2, 1) = QScalar::q();
        CHECK_FALSE(yang_baxter_residual(bad).is_zero());
    }

    TEST_CASE("Hecke condition and braid spectrum") {
        auto c = standard_constants();
        CHECK(hecke_residual(c.Rhat).is_zero());
        const double q0 = 0.7;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(numeric(c.Rhat, q0));
        int plus = 0, minus = 0;
        for (int i = 0; i < 4; ++i) {
            auto v = es.eigenvalues()(i);
            plus += std::abs(v - q0) < 1e-10;
            minus += std::abs(v + 1 / q0) < 1e-10;
        }
        // triplet q, singlet -q^-1
        CHECK(plus == 3);
        CHECK(minus == 1);
    }

    TEST_CASE("reflection equation constant solutions") {
        auto c = standard_constants();
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> d(-5, 5);
        for (int it = 0; it < 5; ++it) {
            QMatrix k = k1_matrix(d(rng), d(rng), d(rng));
            for (const auto& e : re_relations(c.R, EMatrix::from(k))) CHECK(e.is_zero());
        }
        for (const auto& e : re_relations(c.R, EMatrix::from(c.eps_q))) CHECK(e.is_zero());
    }

    TEST_CASE("R-plus and R-minus") {
        auto c = standard_constants();
        CHECK(yang_baxter_residual(c.Rplus).is_zero());
        CHECK(yang_baxter_residual(c.Rminus).is_zero());
        CHECK(c.R * c.R.inverse() == QMatrix::identity(4));
    }

    TEST_CASE("RTT reproduces glq2") {
        PresPtr gl = build_presentation("glq2");
        auto cmp = compare_ideal(rtt_relations(r_matrix(), symbol_matrix(*gl, {"a", "b", "c", "d"})), *gl);
        CHECK(cmp.ok());
        CHECK(cmp.generated_rank == 6);
    }

    TEST_CASE("leg embeddings and transposes") {
        QMatrix r = r_matrix();
        CHECK(transpose_first(transpose_first(r)) == r);
        CHECK(leg12(r) == kron(r, QMatrix::identity(2)));
        CHECK(leg23(r) == kron(QMatrix::identity(2), r));
    }

    TEST_CASE("matrix JSON round trip") {
        auto c = standard_constants();
        CHECK(qmatrix_from_json(qmatrix_to_json(c.R)) == c.R);
        CHECK(qmatrix_from_json(qmatrix_to_json(c.eps_q)) == c.eps_q);
    }
}
