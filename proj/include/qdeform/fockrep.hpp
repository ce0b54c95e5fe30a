#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "qdeform/freealg.hpp"

namespace qdeform {

using cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cplx>;

// Sum of complex-weighted words over a representation's matrix names.
struct NumTerm {
    cplx c;
    std::vector<std::string> letters;
};
using NumExpr = std::vector<NumTerm>;

NumExpr num_scale(const NumExpr& e, cplx c);
NumExpr num_add(const NumExpr& a, const NumExpr& b);
NumExpr num_mul(const NumExpr& a, const NumExpr& b);
// Element over p with its scalars evaluated at q (generator names become letters)
NumExpr num_expr(const Element& e, const Presentation& p, cplx q);

struct ModeInfo {
    int size = 0;
    bool two_sided = false;  // lattice modes lose amplitude at both ends
};

// Truncated representation: named sparse matrices on a product of ladder modes.
class FockRep {
public:
    FockRep() = default;
    FockRep(std::string algebra, cplx q0, std::string basis, std::vector<ModeInfo> modes);

    const std::string& algebra() const { return algebra_; }
    cplx q0() const { return q0_; }
    const std::string& basis() const { return basis_; }
    const std::vector<ModeInfo>& modes() const { return modes_; }
    int dim() const { return dim_; }
    const std::map<std::string, SpMat>& matrices() const { return mats_; }
    const SpMat& at(const std::string& name) const;
    bool has(const std::string& name) const { return mats_.count(name) > 0; }

    void set(const std::string& name, SpMat m);
    // occupation of mode k in basis state idx (0-based from the bottom of the mode window)
    int occupation(int idx, std::size_t mode) const;

    // expression text over matrix names; scalars in the text are evaluated at q0
    NumExpr parse(const std::string& text) const;
    SpMat matrix(const NumExpr& e) const;
    SpMat matrix(const std::string& text) const { return matrix(parse(text)); }

    // columns on which every word of e stays inside the truncation window
    std::vector<int> safe_columns(const NumExpr& e) const;
    struct Residual {
        double max = 0;
        int columns = 0;  // number of safe columns measured
    };
    Residual residual(const NumExpr& e) const;
    Residual residual(const std::vector<NumExpr>& es) const;

    std::string to_json() const;

private:
    std::string algebra_;
    cplx q0_{0.7, 0};
    std::string basis_;
    std::vector<ModeInfo> modes_;
    int dim_ = 1;
    std::map<std::string, SpMat> mats_;
    std::map<std::string, std::vector<int>> up_, down_;  // per-mode reach of each matrix
};

// Single-mode Fock reps. algebras: osc_q, osc_q_qinv, osc_q_half, osc_alpha, osc_alpha_k, osc_A, osc_A_q2.
// basis: "orthonormal" (a|n> = sqrt([n])|n-1>) or "rescaled" (a|n> = [n]|n-1>, a+|n> = |n+1>)
FockRep fock_rep(const std::string& algebra, int dim, cplx q0, const std::string& basis = "orthonormal");
// Several commuting modes: osc_pair (h_i = q^(N_i/2)) or osc_pair_qqinv
FockRep multimode_rep(const std::string& algebra, int dim_per_mode, cplx q0);
// Psi_n, n = -w..w: A Psi_n = c Psi_{n-1}, A+ Psi_n = c Psi_{n+1}, c = (q^-1/2 - q^1/2)^-1/2 q^-1/4
FockRep singular_rep(int window, double q0);
// two-sided q-oscillator lattice N = n + nu, n = -w..w (a non-Fock rep with an invertible [N+1])
FockRep lattice_rep(int window, cplx q0, double nu);
// adds "Winv" = (q adag a + kinv)^-1, diagonal
void add_w_inverse(FockRep& rep);
// adds diag(base^(e n)) on a single-mode rep
void add_number_power(FockRep& rep, const std::string& name, cplx base, double e);

// Max residual of presentation relations (all rules, scalars at rep q0) on the safe block.
FockRep::Residual rep_residual(const FockRep& rep, const std::vector<Element>& rels, const Presentation& p);
// all rules of p as "lhs - rhs"
std::vector<Element> relations_of(const Presentation& p);

// Center values on the safe block; throws AlgebraError when the element is not scalar there.
std::map<std::string, cplx> central_values(const FockRep& rep);

// Exact rescaled Fock basis over Q(s): max number of nonzero entries left by the
// relations of osc_q on columns 0..dim-1-guard (0 means exact vanishing).
int exact_rescaled_defects(int dim);

struct SchwingerBlock {
    double spin = 0;
    int dim = 0;
    cplx casimir;
    cplx expected;       // [n][n+1] at q0
    double scalar_defect = 0;  // deviation of c2 from a multiple of the identity on the block
};
std::vector<SchwingerBlock> schwinger_decompose(int dim_per_mode, double q0);

struct ContractionRow {
    int j = 0;
    double epsilon = 0;
    double residual = 0;        // [alpha, alpha+] - q^-2N on the upper half of the block
    double residual_2eps = 0;   // same with epsilon doubled
    double central_gap = 0;     // |eps^2 lambda c2 - (zeta_top + q^2/(q^2 - 1))|
    double printed_residual = 0;  // alpha prop. X+ as printed, whole block
};
std::vector<ContractionRow> contraction_probe(const std::vector<int>& js, double q0);

struct NumericMorphism {
    std::string name;
    PresPtr source;
    cplx source_q;  // deformation parameter of the source relations
    std::map<std::string, NumExpr> images;  // per source generator name
};

struct RelationResidual {
    std::string relation;
    double residual = 0;
    int columns = 0;
};
std::vector<RelationResidual> numeric_morphism_residual(const NumericMorphism& m, const FockRep& rep);
double max_residual(const std::vector<RelationResidual>& rows);

// classical bridge: sqrt([N]/N) b+ against a+ (orthonormal, real q0)
double classical_bridge_defect(int dim, double q0);

}  // namespace qdeform
