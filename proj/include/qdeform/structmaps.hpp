#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qdeform/fockrep.hpp"
#include "qdeform/freealg.hpp"
#include "qdeform/hopf.hpp"
#include "qdeform/rmat.hpp"

namespace qdeform {

// T = [[1,u],[0,1]] diag(A,B) [[1,0],[z,1]]
struct GaussFactorization {
    MorphismMap forward;   // glq2 -> gauss_glq2
    MorphismMap backward;  // gauss_glq2 -> glq2_inv
};
GaussFactorization gauss_maps();

// forward relations, backward relations, round trip, det, and the two partial products
std::vector<CheckItem> verify_gauss();

enum class VerifyMode { symbolic, numeric, both };
std::string mode_name(VerifyMode m);

struct NumericSetup {
    FockRep rep;
    NumericMorphism morphism;
    std::string rep_label;
};

struct BosonizationEntry {
    std::string name;
    std::string source, target;  // presentation names; target may be a rep label for numeric entries
    std::vector<std::pair<std::string, std::string>> assignments;  // ASCII, default parameters
    std::vector<std::pair<std::string, std::string>> printed;      // alternative as printed, if it differs
    VerifyMode mode = VerifyMode::symbolic;
    std::vector<std::string> params;  // free scalar slots, default value 1
    std::string oracle_notes;

    std::function<MorphismMap()> symbolic;  // set for symbolic / both
    std::function<MorphismMap()> printed_symbolic;
    bool symbolic_info_only = false;  // symbolic check run but only reported
    // numeric images at parameter values (empty = defaults)
    std::function<NumericSetup(double q0, int dim, const std::vector<cplx>& params)> numeric;
    std::function<NumericSetup(double q0, int dim)> printed_numeric;
    // extra numeric probes reported as info (label, setup)
    std::vector<std::pair<std::string, std::function<NumericSetup(double q0, int dim)>>> probes;
};

struct EntryValidation {
    std::string name;
    bool ok = false;
    std::string symbolic_residual;   // "0" when every relation image vanishes, "-" when not run
    double numeric_residual = -1;    // max over default and swept parameters, -1 when not run
    int columns = 0;                 // safe columns at the default parameters
    std::string printed_status;      // outcome for the printed alternative
    std::vector<std::string> notes;
};

std::vector<BosonizationEntry> bosonization_catalog();
EntryValidation validate_entry(const BosonizationEntry& e, double q0, int dim);
// JSON list {name, source, target, assignments, mode, status, oracle_notes}
std::string catalog_json(const std::vector<BosonizationEntry>& entries, const std::vector<EntryValidation>& results);

// K_T = T K T^t over glq2. which: "identity", "eps_q", "K1" (rho, mu, nu) and "K1_generic"
std::vector<CheckItem> rea_transport(const std::string& which);
EMatrix transported_k(const QMatrix& k);

struct QuotientIdentification {
    bool found = false;
    std::vector<std::pair<std::string, std::string>> assignment;  // GL_{q^2} generator -> rea2_c1 expression
    std::vector<std::pair<std::string, std::string>> residuals;  // substituted relation -> status
    std::string summary;
};
QuotientIdentification quotient_c1_check();

// real forms of glq2_det: "Uq2" and "Uq11"
MorphismMap star_map(const std::string& form);
std::vector<CheckItem> check_star(const MorphismMap& m);

}  // namespace qdeform
