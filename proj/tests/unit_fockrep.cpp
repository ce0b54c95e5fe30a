#include <cmath>

#include <Eigen/Dense>
#include <doctest.h>

#include "qdeform/catalog.hpp"
#include "qdeform/fockrep.hpp"

using namespace qdeform;

namespace {

double qn(double n, double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1 / q); }

}  // namespace

TEST_SUITE("fockrep") {
    TEST_CASE("ladder amplitudes are sqrt of q-numbers") {
        const double q0 = 0.7;
        FockRep r = fock_rep("osc_q", 10, q0);
        Eigen::MatrixXcd a(r.at("a")), ad(r.at("adag"));
        for (int n = 1; n < 10; ++n) {
            CHECK(std::abs(a(n - 1, n) - std::sqrt(qn(n, q0))) < 1e-14);
            CHECK(std::abs(ad(n, n - 1) - std::sqrt(qn(n, q0))) < 1e-14);
        }
        CHECK(std::abs(a(0, 0)) == 0.0);
    }

    TEST_CASE("relations on the safe block for every single-mode algebra") {
        for (double q0 : {0.7, 0.5, 1.4}) {
            for (const char* alg : {"osc_q", "osc_q_qinv", "osc_q_half", "osc_alpha", "osc_alpha_k", "osc_A", "osc_A_q2"}) {
                PresPtr p = build_presentation(alg);
                FockRep rep = fock_rep(alg, 16, q0);
                // rounding is relative to the largest product of two entries
                double big = 1;
                for (const auto& [n, m] : rep.matrices())
                    for (int k = 0; k < m.outerSize(); ++k)
                        for (SpMat::InnerIterator it(m, k); it; ++it) big = std::max(big, std::abs(it.value()));
                double tol = q0 == 0.7 ? 1e-10 : 1e-14 * big * big;
                auto res = rep_residual(rep, relations_of(*p), *p);
                CHECK_MESSAGE(res.max < tol, alg << " q0 = " << q0 << " residual " << res.max);
                CHECK(res.columns > 0);
            }
        }
    }

    TEST_CASE("truncation corner is excluded and a scaled ladder fails") {
        FockRep r = fock_rep("osc_q", 8, 0.7);
        NumExpr e = r.parse("a*adag");
        auto cols = r.safe_columns(e);
        // a adag raises first, so the top state is unsafe
        CHECK(cols.size() == 7);
        CHECK(std::find(cols.begin(), cols.end(), 7) == cols.end());
        PresPtr p = build_presentation("osc_q");
        FockRep broken = r;
        broken.set("adag", 2.0 * r.at("adag"));
        CHECK(rep_residual(broken, relations_of(*p), *p).max > 0.1);
    }

    TEST_CASE("central elements vanish in the Fock representation") {
        for (const char* alg : {"osc_q", "osc_q_qinv"}) {
            auto cv = central_values(fock_rep(alg, 16, 0.7));
            CHECK(std::abs(cv.at("cq")) < 1e-12);
        }
    }

    TEST_CASE("exact rescaled basis") {
        CHECK(exact_rescaled_defects(16) == 0);
        FockRep r = fock_rep("osc_q", 6, 0.7, "rescaled");
        Eigen::MatrixXcd a(r.at("a"));
        CHECK(std::abs(a(2, 3) - qn(3, 0.7)) < 1e-14);
    }

    TEST_CASE("singular representation") {
        const double q0 = 0.5;
        FockRep r = singular_rep(9, q0);
        PresPtr p = build_presentation("osc_A");
        CHECK(rep_residual(r, relations_of(*p), *p).max < 1e-12);
        // c = (q^-1/2 - q^1/2)^-1/2 q^-1/4
        double c = std::pow(std::pow(q0, -0.5) - std::pow(q0, 0.5), -0.5) * std::pow(q0, -0.25);
        // c^2 (1 - q) = 1 forces c = sqrt(2) at q = 1/2
        CHECK(c == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        Eigen::MatrixXcd A(r.at("A"));
        CHECK(std::abs(A(8, 9) - c) < 1e-12);
    }

    TEST_CASE("two modes commute and the Schwinger blocks carry the Casimir") {
        FockRep r = multimode_rep("osc_pair", 5, 0.7);
        CHECK(r.dim() == 25);
        SpMat comm = r.matrix("a1*a2 - a2*a1");
        CHECK(comm.norm() < 1e-14);
        auto blocks = schwinger_decompose(6, 0.7);
        REQUIRE(blocks.size() == 6);
        for (std::size_t n = 0; n < blocks.size(); ++n) {
            double j = 0.5 * static_cast<double>(n);
            CHECK(blocks[n].dim == static_cast<int>(n) + 1);
            CHECK(std::abs(blocks[n].casimir - qn(j, 0.7) * qn(j + 1, 0.7)) < 1e-10);
            CHECK(blocks[n].scalar_defect < 1e-10);
        }
    }

    TEST_CASE("contraction residual matches eps^2 and the central gap shrinks") {
        const double q0 = 0.5;
        auto rows = contraction_probe({2, 4, 6, 8}, q0);
        REQUIRE(rows.size() == 4);
        for (const auto& x : rows) {
            // eps = q0^j, residual = eps^2 = q0^(2j)
            CHECK(x.epsilon == doctest::Approx(std::pow(q0, x.j)));
            CHECK(x.residual == doctest::Approx(std::pow(q0, 2 * x.j)).epsilon(1e-6));
            CHECK(x.residual_2eps == doctest::Approx(4 * x.residual).epsilon(1e-9));
        }
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].residual < rows[i - 1].residual);
            CHECK(rows[i].central_gap < rows[i - 1].central_gap);
        }
        CHECK(rows.back().printed_residual > 1.0);
    }

    TEST_CASE("classical bridge") { CHECK(classical_bridge_defect(16, 0.7) < 1e-12); }

    TEST_CASE("JSON export") {
        FockRep r = fock_rep("osc_q", 4, 0.7);
        std::string js = r.to_json();
        CHECK(js.find("\"algebra\"") != std::string::npos);
        CHECK(js.find("\"adag\"") != std::string::npos);
        CHECK_THROWS(r.at("nosuch"));
    }
}
