#pragma once

#include <string>
#include <vector>

#include "qdeform/freealg.hpp"
#include "qdeform/qscalar.hpp"

namespace qdeform {

// Square matrix over Q(s). Row-major; Kronecker products index as
// (A (x) B)[2i+k][2j+l] = A[i][j] B[k][l].
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}
    QMatrix(int n, std::vector<QScalar> rows);
    static QMatrix identity(int n);

    int dim() const { return n_; }
    QScalar& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const QScalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QScalar& c, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

    bool is_zero() const;
    QMatrix transpose() const;
    QMatrix inverse() const;  // throws QScalarError when singular
    std::string str() const;

private:
    int n_ = 0;
    std::vector<QScalar> e_;
};

QMatrix kron(const QMatrix& a, const QMatrix& b);
// transpose in the first tensor factor of a 4x4 matrix
QMatrix transpose_first(const QMatrix& r);
// 8x8 embeddings of a 4x4 matrix into legs (1,2), (1,3), (2,3)
QMatrix leg12(const QMatrix& r);
QMatrix leg13(const QMatrix& r);
QMatrix leg23(const QMatrix& r);

struct StandardConstants {
    QMatrix R, Rhat, P, Rplus, Rminus, eps_q, K0;
};

// R for deformation parameter qq (default q); qq = q^2 is used by the quotient check
QMatrix r_matrix(const QScalar& qq = QScalar::q());
QMatrix perm4();
StandardConstants standard_constants();
QMatrix k1_matrix(const QScalar& rho, const QScalar& mu, const QScalar& nu);

QMatrix yang_baxter_residual(const QMatrix& r);
// Rhat^2 - lambda Rhat - I
QMatrix hecke_residual(const QMatrix& rhat, const QScalar& lambda = QScalar::lambda());

// matrix JSON: array of rows of scalar expression strings
std::string qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const std::string& text);

// Matrix of algebra elements. Products keep factor order and do not normalize.
class EMatrix {
public:
    EMatrix() = default;
    explicit EMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}
    EMatrix(int n, std::vector<Element> rows);
    static EMatrix from(const QMatrix& m);

    int dim() const { return n_; }
    Element& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const Element& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<Element>& entries() const { return e_; }

    friend EMatrix operator+(const EMatrix& a, const EMatrix& b);
    friend EMatrix operator-(const EMatrix& a, const EMatrix& b);
    friend EMatrix operator*(const EMatrix& a, const EMatrix& b);
    EMatrix transpose() const;
    EMatrix normalized(const Presentation& p) const;

private:
    int n_ = 0;
    std::vector<Element> e_;
};

EMatrix kron(const EMatrix& a, const EMatrix& b);

// 2x2 matrix of generators by name, row-major
EMatrix symbol_matrix(const Presentation& p, const std::vector<std::string>& names);

// entries of R T1 T2 - T2 T1 R
std::vector<Element> rtt_relations(const QMatrix& r, const EMatrix& t);
// entries of R K1 R^t1 K2 - K2 R^t1 K1 R
std::vector<Element> re_relations(const QMatrix& r, const EMatrix& k);
// entries of f(Rhat)(X (x) X), f given by coefficients f[0] + f[1] t + ...
std::vector<Element> plane_relations(const QMatrix& rhat, const std::vector<QScalar>& f, const Element& x1,
                                     const Element& x2);
// Rhat (X (x) X) - qq (X (x) X) - V for X = (x1, x2)
std::vector<Element> inhomogeneous_relations(const QMatrix& rhat, const QScalar& qq, const std::vector<QScalar>& v,
                                             const Element& x1, const Element& x2);
// R^s L1^s L2^e - L2^e L1^s R^s for the three sign pairs (++, --, +-)
std::vector<Element> lpm_relations(const Presentation& slq2);
EMatrix l_plus(const Presentation& slq2);
EMatrix l_minus(const Presentation& slq2);

// Number of linearly independent elements (exact).
std::size_t exact_rank(const std::vector<Element>& els);

struct IdealComparison {
    std::size_t generated_rank = 0;
    std::vector<std::string> generated_not_reducing;  // generated relations that do not normalize to 0
    std::vector<std::string> rules_outside_span;      // catalog rules not in the generated span
    bool ok() const { return generated_not_reducing.empty() && rules_outside_span.empty(); }
};

// Both directions of the degree-2 ideal comparison.
IdealComparison compare_ideal(const std::vector<Element>& generated, const Presentation& p);

// L-relations against slq2; spans are taken modulo k kinv = 1 only, with the
// generated set multiplied by k^{+-1} on either side.
IdealComparison compare_lpm_slq2();

}  // namespace qdeform
