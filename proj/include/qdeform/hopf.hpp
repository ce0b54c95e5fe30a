#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qdeform/freealg.hpp"

namespace qdeform {

// Sum of weighted n-fold pure tensors. Each factor lives in its own presentation
// and is normalized there; factors never braid. The `rho` bit marks a formal
// square root of lambda carried by the whole term (rho^2 = lambda).
class TensorElement {
public:
    struct Key {
        std::vector<Word> parts;
        int rho = 0;
        bool operator<(const Key& o) const;
        bool operator==(const Key& o) const { return rho == o.rho && parts == o.parts; }
    };
    using Terms = std::map<Key, QScalar>;

    TensorElement() = default;
    explicit TensorElement(std::vector<PresPtr> factors) : factors_(std::move(factors)) {}
    // e1 (x) e2 (x) ... , factors normalized
    static TensorElement pure(std::vector<PresPtr> factors, const std::vector<Element>& parts, const QScalar& c = 1,
                              int rho = 0);
    static TensorElement unit(std::vector<PresPtr> factors);

    const std::vector<PresPtr>& factors() const { return factors_; }
    std::size_t arity() const { return factors_.size(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const QScalar& c);
    void add(const TensorElement& t, const QScalar& c = 1);
    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o) { add(o); return *this; }
    TensorElement& operator-=(const TensorElement& o) { add(o, QScalar(-1)); return *this; }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const QScalar& c, const TensorElement& t);
    // factorwise product, each factor renormalized
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

    std::string str(bool unicode = false) const;

private:
    std::vector<PresPtr> factors_;
    Terms terms_;
};

// Image of an element under a generator assignment into a tensor algebra.
TensorElement apply_tensor(const Element& e, const std::vector<TensorElement>& images,
                           const std::vector<PresPtr>& factors);

// Replace factor `slot` by f(factor); arity grows by f's arity minus one.
TensorElement map_factor(const TensorElement& t, std::size_t slot,
                         const std::function<TensorElement(const Word&)>& f);
// Contract factor `slot` to a scalar.
TensorElement contract_factor(const TensorElement& t, std::size_t slot,
                              const std::function<QScalar(const Word&)>& f);

struct HopfStructure {
    std::string name;
    PresPtr base;
    PresPtr antipode_target;              // contains the inverses S needs
    std::vector<TensorElement> coproduct;  // per base generator, over (base, base)
    std::vector<QScalar> counit;
    std::vector<Element> antipode;  // per base generator, in antipode_target

    TensorElement delta(const Element& e) const;
    QScalar epsilon(const Element& e) const;
    Element s(const Element& e) const;  // antihomomorphic extension
    Element embed(const Element& e) const;  // base -> antipode_target by name
};

// Catalog: glq2, slq2, slq2_group
HopfStructure hopf_structure(const std::string& name);
std::vector<std::string> hopf_names();

struct CheckItem {
    std::string id;
    bool ok = false;
    std::string residual;  // printed residual, "0" when ok
    std::string notes;
    bool info = false;  // reported only, never fails a suite
};

std::vector<CheckItem> check_hopf(const HopfStructure& h, int degree);

// X_pm antipode exponent fixed by the antipode axiom: returns the e in
// S(X_pm) = -q^(-+e) X_pm that makes m(S (x) id) Delta vanish, or 0 if none of +-1, +-2 works
int resolve_slq2_antipode_exponent();

enum class CoactionSide { left, right };

struct Comodule {
    std::string name;
    HopfStructure hopf;
    PresPtr algebra;
    CoactionSide side = CoactionSide::left;
    std::vector<TensorElement> images;  // per algebra generator; hopf factor first for left
    // extra identities checked by check_comodule: (id, lhs, rhs) over the coaction image
    std::vector<std::pair<std::string, std::pair<Element, TensorElement>>> extra;

    TensorElement coact(const Element& e) const;
};

// plane, plane_transposed, grassmann, two_planes, rea_glq2, oscA_suq11, contraction_slq2
Comodule comodule(const std::string& name);
std::vector<std::string> comodule_names();  // the audited ones

std::vector<CheckItem> check_comodule(const Comodule& c, int degree);

// <L_ij^(+-), T_{k1 l1} ... T_{km lm}> as the entry of R12 R13 ... R1(m+1)
// uword like "Lp12" or "Lm21"; tword a product of a, b, c, d such as "a*b"
QScalar pairing(const std::string& uword, const std::string& tword);

}  // namespace qdeform
