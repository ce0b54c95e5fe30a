#include "qdeform/hopf.hpp"

#include <sstream>

#include "qdeform/catalog.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/rmat.hpp"

namespace qdeform {

// --------------------------------------------------------------- tensors

bool TensorElement::Key::operator<(const Key& o) const {
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    DegLexLess less;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (less(parts[i], o.parts[i])) return true;
        if (less(o.parts[i], parts[i])) return false;
    }
    return rho < o.rho;
}

void TensorElement::add(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void TensorElement::add(const TensorElement& t, const QScalar& c) {
    if (factors_.empty()) factors_ = t.factors_;
    for (const auto& [k, x] : t.terms_) add(k, x * c);
}

TensorElement TensorElement::operator-() const {
    TensorElement r = *this;
    for (auto& [k, x] : r.terms_) x = -x;
    return r;
}

TensorElement operator*(const QScalar& c, const TensorElement& t) {
    TensorElement r(t.factors_);
    r.add(t, c);
    return r;
}

namespace {

// cartesian expansion of normalized factor elements into t
void expand(TensorElement& t, const std::vector<Element>& parts, const QScalar& c, int rho) {
    std::vector<std::pair<TensorElement::Key, QScalar>> acc{{{{}, rho}, c}};
    for (const auto& p : parts) {
        std::vector<std::pair<TensorElement::Key, QScalar>> next;
        for (const auto& [k, x] : acc)
            for (const auto& [w, y] : p.terms()) {
                auto k2 = k;
                k2.parts.push_back(w);
                next.emplace_back(std::move(k2), x * y);
            }
        acc = std::move(next);
    }
    for (const auto& [k, x] : acc) t.add(k, x);
}

}  // namespace

TensorElement TensorElement::pure(std::vector<PresPtr> factors, const std::vector<Element>& parts, const QScalar& c,
                                  int rho) {
    if (parts.size() != factors.size()) throw AlgebraError("tensor arity mismatch");
    std::vector<Element> norm;
    for (std::size_t i = 0; i < parts.size(); ++i) norm.push_back(factors[i]->normalize(parts[i]));
    TensorElement t(std::move(factors));
    expand(t, norm, c, rho);
    return t;
}

TensorElement TensorElement::unit(std::vector<PresPtr> factors) {
    std::vector<Element> ones(factors.size(), Element(1));
    return pure(std::move(factors), ones);
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    const auto& f = a.factors_.empty() ? b.factors_ : a.factors_;
    TensorElement r(f);
    for (const auto& [ka, xa] : a.terms_)
        for (const auto& [kb, xb] : b.terms_) {
            if (ka.parts.size() != kb.parts.size()) throw AlgebraError("tensor arity mismatch");
            int rho = ka.rho + kb.rho;
            QScalar c = xa * xb;
            if (rho == 2) {
                c *= QScalar::lambda();
                rho = 0;
            }
            std::vector<Element> parts;
            for (std::size_t i = 0; i < ka.parts.size(); ++i)
                parts.push_back(f[i]->normal_form(ka.parts[i] + kb.parts[i]));
            expand(r, parts, c, rho);
        }
    return r;
}

std::string TensorElement::str(bool unicode) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        bool neg = c.leads_negative();
        QScalar mag = neg ? -c : c;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        long iv = 0;
        if (!(mag.is_integer(&iv) && iv == 1)) out << "(" << mag.str() << ")*";
        if (k.rho) out << (unicode ? "λ^½·" : "rho*");
        out << "(";
        for (std::size_t i = 0; i < k.parts.size(); ++i)
            out << (i ? (unicode ? " ⊗ " : " (x) ") : "") << word_str(k.parts[i], *factors_[i], unicode);
        out << ")";
    }
    return out.str();
}

TensorElement apply_tensor(const Element& e, const std::vector<TensorElement>& images,
                           const std::vector<PresPtr>& factors) {
    TensorElement out(factors);
    for (const auto& [w, c] : e.terms()) {
        TensorElement acc = c * TensorElement::unit(factors);
        for (std::size_t i = 0; i < w.size() && !acc.is_zero(); ++i)
            acc = acc * images[static_cast<std::size_t>(letter_at(w, i))];
        out += acc;
    }
    return out;
}

TensorElement map_factor(const TensorElement& t, std::size_t slot,
                         const std::function<TensorElement(const Word&)>& f) {
    TensorElement out;
    bool have_factors = false;
    for (const auto& [k, c] : t.terms()) {
        TensorElement x = f(k.parts[slot]);
        if (!have_factors) {
            std::vector<PresPtr> fs(t.factors().begin(), t.factors().begin() + static_cast<long>(slot));
            fs.insert(fs.end(), x.factors().begin(), x.factors().end());
            fs.insert(fs.end(), t.factors().begin() + static_cast<long>(slot) + 1, t.factors().end());
            out = TensorElement(fs);
            have_factors = true;
        }
        for (const auto& [kx, cx] : x.terms()) {
            TensorElement::Key nk;
            nk.parts.assign(k.parts.begin(), k.parts.begin() + static_cast<long>(slot));
            nk.parts.insert(nk.parts.end(), kx.parts.begin(), kx.parts.end());
            nk.parts.insert(nk.parts.end(), k.parts.begin() + static_cast<long>(slot) + 1, k.parts.end());
            QScalar cc = c * cx;
            nk.rho = k.rho + kx.rho;
            if (nk.rho == 2) {
                cc *= QScalar::lambda();
                nk.rho = 0;
            }
            out.add(nk, cc);
        }
    }
    return out;
}

TensorElement contract_factor(const TensorElement& t, std::size_t slot,
                              const std::function<QScalar(const Word&)>& f) {
    std::vector<PresPtr> fs = t.factors();
    fs.erase(fs.begin() + static_cast<long>(slot));
    TensorElement out(fs);
    for (const auto& [k, c] : t.terms()) {
        TensorElement::Key nk = k;
        nk.parts.erase(nk.parts.begin() + static_cast<long>(slot));
        out.add(nk, c * f(k.parts[slot]));
    }
    return out;
}

// ------------------------------------------------------------ hopf structures

TensorElement HopfStructure::delta(const Element& e) const { return apply_tensor(e, coproduct, {base, base}); }

QScalar HopfStructure::epsilon(const Element& e) const {
    QScalar out;
    for (const auto& [w, c] : e.terms()) {
        QScalar acc = c;
        for (std::size_t i = 0; i < w.size() && !acc.is_zero(); ++i)
            acc *= counit[static_cast<std::size_t>(letter_at(w, i))];
        out += acc;
    }
    return out;
}

Element HopfStructure::s(const Element& e) const {
    return MorphismMap(name + ".S", base, antipode_target, antipode, MorphKind::antihomomorphism).apply(e);
}

Element HopfStructure::embed(const Element& e) const {
    if (base == antipode_target) return base->normalize(e);
    return embedding(base, antipode_target).apply(e);
}

namespace {

Element ex(const PresPtr& p, const std::string& text) { return parse_expression(text, p.get()); }

// T_ij -> sum_k T_ik (x) T_kj on a, b, c, d
std::vector<TensorElement> matrix_coproduct(const PresPtr& p) {
    const char* t[2][2] = {{"a", "b"}, {"c", "d"}};
    std::vector<TensorElement> out(static_cast<std::size_t>(p->ngens()));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TensorElement d({p, p});
            for (int k = 0; k < 2; ++k) d += TensorElement::pure({p, p}, {ex(p, t[i][k]), ex(p, t[k][j])});
            out[static_cast<std::size_t>(p->require(t[i][j]))] = d;
        }
    return out;
}

HopfStructure make_slq2(int exponent) {
    HopfStructure h;
    h.name = "slq2";
    h.base = build_presentation("slq2");
    h.antipode_target = h.base;
    const auto& p = h.base;
    auto tp = [&](const char* x, const char* y) { return TensorElement::pure({p, p}, {ex(p, x), ex(p, y)}); };
    h.coproduct.resize(4);
    h.coproduct[static_cast<std::size_t>(p->require("k"))] = tp("k", "k");
    h.coproduct[static_cast<std::size_t>(p->require("kinv"))] = tp("kinv", "kinv");
    h.coproduct[static_cast<std::size_t>(p->require("Xp"))] = tp("Xp", "kinv") + tp("k", "Xp");
    h.coproduct[static_cast<std::size_t>(p->require("Xm"))] = tp("Xm", "kinv") + tp("k", "Xm");
    h.counit = {1, 1, 0, 0};
    h.antipode.resize(4);
    h.antipode[static_cast<std::size_t>(p->require("k"))] = ex(p, "kinv");
    h.antipode[static_cast<std::size_t>(p->require("kinv"))] = ex(p, "k");
    h.antipode[static_cast<std::size_t>(p->require("Xp"))] = -QScalar::qpow(-exponent) * ex(p, "Xp");
    h.antipode[static_cast<std::size_t>(p->require("Xm"))] = -QScalar::qpow(exponent) * ex(p, "Xm");
    return h;
}

}  // namespace

HopfStructure hopf_structure(const std::string& name) {
    if (name == "glq2") {
        HopfStructure h;
        h.name = name;
        h.base = build_presentation("glq2");
        h.antipode_target = build_presentation("glq2_inv");
        h.coproduct = matrix_coproduct(h.base);
        h.counit = {1, 0, 0, 1};
        const auto& t = h.antipode_target;
        h.antipode = {ex(t, "Dinv*d"), ex(t, "-(q^-1)*Dinv*b"), ex(t, "-q*Dinv*c"), ex(t, "Dinv*a")};
        return h;
    }
    if (name == "slq2_group") {
        HopfStructure h;
        h.name = name;
        h.base = build_presentation("slq2_group");
        h.antipode_target = h.base;
        h.coproduct = matrix_coproduct(h.base);
        h.counit = {1, 0, 0, 1};
        const auto& t = h.base;
        h.antipode = {ex(t, "d"), ex(t, "-(q^-1)*b"), ex(t, "-q*c"), ex(t, "a")};
        return h;
    }
    if (name == "slq2") return make_slq2(resolve_slq2_antipode_exponent());
    throw AlgebraError("unknown Hopf structure '" + name + "'");
}

std::vector<std::string> hopf_names() { return {"glq2", "slq2", "slq2_group"}; }

namespace {

struct Tally {
    explicit Tally(std::string i) : id(std::move(i)) {}
    std::string id;
    int checked = 0;
    std::string first_failure;
    void see(bool ok, const std::string& what) {
        ++checked;
        if (!ok && first_failure.empty()) first_failure = what;
    }
    CheckItem item() const {
        CheckItem c{id, first_failure.empty(), first_failure.empty() ? "0" : first_failure,
                    std::to_string(checked) + " cases"};
        return c;
    }
};

}  // namespace

std::vector<CheckItem> check_hopf(const HopfStructure& h, int degree) {
    const auto& P = h.base;
    auto words = P->normal_words(static_cast<std::size_t>(degree));
    auto delta_w = [&](const Word& w) { return h.delta(Element::word(w)); };
    auto eps_w = [&](const Word& w) { return h.epsilon(Element::word(w)); };
    Tally coassoc{h.name + "/coassociativity"}, counit{h.name + "/counit"}, anti{h.name + "/antipode"},
        dhom{h.name + "/coproduct-homomorphism"}, ehom{h.name + "/counit-homomorphism"},
        shom{h.name + "/antipode-antihomomorphism"};
    for (const auto& w : words) {
        std::string wn = word_str(w, *P);
        TensorElement d = delta_w(w);
        TensorElement l = map_factor(d, 0, delta_w), r = map_factor(d, 1, delta_w);
        TensorElement diff = l - r;
        coassoc.see(diff.is_zero(), wn + ": " + diff.str());
        TensorElement self = TensorElement::pure({P}, {Element::word(w)});
        TensorElement c0 = contract_factor(d, 0, eps_w) - self, c1 = contract_factor(d, 1, eps_w) - self;
        counit.see(c0.is_zero() && c1.is_zero(), wn + ": " + c0.str() + " | " + c1.str());
        // m(S (x) id) Delta and m(id (x) S) Delta against eps(w) 1
        Element ls, rs;
        for (const auto& [k, c] : d.terms()) {
            ls.add(h.antipode_target->normalize(h.s(Element::word(k.parts[0])) * h.embed(Element::word(k.parts[1]))),
                   c);
            rs.add(h.antipode_target->normalize(h.embed(Element::word(k.parts[0])) * h.s(Element::word(k.parts[1]))),
                   c);
        }
        Element target(eps_w(w));
        Element dl = ls - target, dr = rs - target;
        anti.see(dl.is_zero() && dr.is_zero(),
                 wn + ": " + element_str(dl, *h.antipode_target) + " | " + element_str(dr, *h.antipode_target));
    }
    for (const auto& rule : P->rules()) {
        Element rel = Element::word(rule.lhs) - rule.rhs;
        std::string rn = element_str(rel, *P);
        TensorElement d = h.delta(rel);
        dhom.see(d.is_zero(), rn + " -> " + d.str());
        QScalar e = h.epsilon(rel);
        ehom.see(e.is_zero(), rn + " -> " + e.str());
        Element s = h.s(rel);
        shom.see(s.is_zero(), rn + " -> " + element_str(s, *h.antipode_target));
    }
    std::vector<CheckItem> out{coassoc.item(), counit.item(), anti.item(), dhom.item(), ehom.item(), shom.item()};
    if (h.name == "glq2") {
        const Element& D = P->aliases().at("Dq");
        TensorElement dd = h.delta(D) - TensorElement::pure({P, P}, {D, D});
        out.push_back({"glq2/delta-Dq", dd.is_zero(), dd.is_zero() ? "0" : dd.str(), "Delta(Dq) = Dq (x) Dq"});
        Tally cen{"glq2/delta-Dq-central"};
        TensorElement dD = h.delta(D);
        for (int g = 0; g < P->ngens(); ++g) {
            TensorElement dg = h.delta(Element::gen(g));
            TensorElement cm = dD * dg - dg * dD;
            cen.see(cm.is_zero(), P->gens()[static_cast<std::size_t>(g)].name + ": " + cm.str());
        }
        out.push_back(cen.item());
    }
    return out;
}

int resolve_slq2_antipode_exponent() {
    for (int e : {1, -1, 2, -2}) {
        HopfStructure h = make_slq2(e);
        bool ok = true;
        for (const char* x : {"Xp", "Xm"}) {
            TensorElement d = h.delta(ex(h.base, x));
            Element m;
            for (const auto& [k, c] : d.terms())
                m.add(h.base->normalize(h.s(Element::word(k.parts[0])) * Element::word(k.parts[1])), c);
            ok = ok && m.is_zero();
        }
        if (ok) return e;
    }
    return 0;
}

// ---------------------------------------------------------------- comodules

TensorElement Comodule::coact(const Element& e) const {
    std::vector<PresPtr> f = side == CoactionSide::left ? std::vector<PresPtr>{hopf.base, algebra}
                                                        : std::vector<PresPtr>{algebra, hopf.base};
    return apply_tensor(e, images, f);
}

namespace {

// left coaction x_i -> sum_j T_ij (x) x_j (or T_ji with transposed)
Comodule vector_comodule(const std::string& name, const std::string& alg,
                         const std::vector<std::vector<std::string>>& columns, bool transposed) {
    Comodule c;
    c.name = name;
    c.hopf = hopf_structure("glq2");
    c.algebra = build_presentation(alg);
    const auto& H = c.hopf.base;
    const auto& V = c.algebra;
    const char* t[2][2] = {{"a", "b"}, {"c", "d"}};
    c.images.resize(static_cast<std::size_t>(V->ngens()));
    for (const auto& col : columns)
        for (int i = 0; i < 2; ++i) {
            TensorElement img({H, V});
            for (int j = 0; j < 2; ++j)
                img += TensorElement::pure({H, V}, {ex(H, transposed ? t[j][i] : t[i][j]), ex(V, col[static_cast<std::size_t>(j)])});
            c.images[static_cast<std::size_t>(V->require(col[static_cast<std::size_t>(i)]))] = img;
        }
    return c;
}

}  // namespace

Comodule comodule(const std::string& name) {
    if (name == "plane") return vector_comodule(name, "qplane", {{"x", "y"}}, false);
    if (name == "plane_transposed") return vector_comodule(name, "qplane", {{"x", "y"}}, true);
    if (name == "grassmann") return vector_comodule(name, "grassmann_plane", {{"xi1", "xi2"}}, false);
    if (name == "two_planes") return vector_comodule(name, "two_planes", {{"x", "y"}, {"u", "v"}}, false);
    if (name == "rea_glq2") {
        Comodule c;
        c.name = name;
        c.hopf = hopf_structure("glq2");
        c.algebra = build_presentation("rea2");
        const auto& H = c.hopf.base;
        const auto& V = c.algebra;
        const char* t[2][2] = {{"a", "b"}, {"c", "d"}};
        const char* k[2][2] = {{"alpha", "beta"}, {"gamma", "delta"}};
        c.images.resize(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                TensorElement img({H, V});
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        img += TensorElement::pure({H, V}, {ex(H, t[i][a]) * ex(H, t[j][b]), ex(V, k[a][b])});
                c.images[static_cast<std::size_t>(V->require(k[i][j]))] = img;
            }
        const Element& D = H->aliases().at("Dq");
        const Element& c1 = V->aliases().at("c1");
        const Element& c2 = V->aliases().at("c2");
        c.extra.push_back({"phi(c1) = Dq (x) c1", {c1, TensorElement::pure({H, V}, {D, c1})}});
        c.extra.push_back({"phi(c2) = Dq^2 (x) c2", {c2, TensorElement::pure({H, V}, {D * D, c2})}});
        return c;
    }
    if (name == "oscA_suq11") {
        Comodule c;
        c.name = name;
        c.hopf = hopf_structure("slq2_group");
        c.algebra = build_presentation("osc_A");
        const auto& H = c.hopf.base;
        const auto& V = c.algebra;
        auto tp = [&](const char* x, const char* y) { return TensorElement::pure({H, V}, {ex(H, x), ex(V, y)}); };
        c.images = {tp("a", "A") + tp("b", "Adag"), tp("c", "A") + tp("d", "Adag")};
        return c;
    }
    if (name == "contraction_slq2") {
        Comodule c;
        c.name = name;
        c.hopf = hopf_structure("slq2");
        c.algebra = build_presentation("osc_alpha_k");
        c.side = CoactionSide::right;
        const auto& H = c.hopf.base;
        const auto& V = c.algebra;
        auto tp = [&](const char* x, const char* y, int rho = 0) {
            return TensorElement::pure({V, H}, {ex(V, x), ex(H, y)}, 1, rho);
        };
        c.images.resize(4);
        c.images[static_cast<std::size_t>(V->require("alpha"))] = tp("alpha", "kinv") + tp("kinv", "Xp", 1);
        c.images[static_cast<std::size_t>(V->require("alphadag"))] = tp("alphadag", "kinv") + tp("kinv", "Xm", 1);
        c.images[static_cast<std::size_t>(V->require("k"))] = tp("k", "kinv");
        c.images[static_cast<std::size_t>(V->require("kinv"))] = tp("kinv", "k");
        return c;
    }
    throw AlgebraError("unknown comodule '" + name + "'");
}

std::vector<std::string> comodule_names() {
    return {"plane", "grassmann", "two_planes", "rea_glq2", "oscA_suq11", "contraction_slq2"};
}

std::vector<CheckItem> check_comodule(const Comodule& c, int degree) {
    const auto& V = c.algebra;
    bool left = c.side == CoactionSide::left;
    std::size_t hslot = left ? 0 : 1, vslot = left ? 1 : 0;
    auto delta_w = [&](const Word& w) { return c.hopf.delta(Element::word(w)); };
    auto coact_w = [&](const Word& w) { return c.coact(Element::word(w)); };
    auto eps_w = [&](const Word& w) { return c.hopf.epsilon(Element::word(w)); };
    Tally coassoc{c.name + "/coassociativity"}, counit{c.name + "/counit"}, cov{c.name + "/covariance"};
    for (const auto& w : V->normal_words(static_cast<std::size_t>(degree))) {
        if (w.empty()) continue;
        std::string wn = word_str(w, *V);
        TensorElement phi = coact_w(w);
        TensorElement l = map_factor(phi, hslot, delta_w), r = map_factor(phi, vslot, coact_w);
        TensorElement diff = l - r;
        coassoc.see(diff.is_zero(), wn + ": " + diff.str());
        TensorElement e = contract_factor(phi, hslot, eps_w) - TensorElement::pure({V}, {Element::word(w)});
        counit.see(e.is_zero(), wn + ": " + e.str());
    }
    for (const auto& rule : V->rules()) {
        Element rel = Element::word(rule.lhs) - rule.rhs;
        TensorElement img = c.coact(rel);
        cov.see(img.is_zero(), element_str(rel, *V) + " -> " + img.str());
    }
    std::vector<CheckItem> out{coassoc.item(), counit.item(), cov.item()};
    for (const auto& [id, pr] : c.extra) {
        TensorElement d = c.coact(pr.first) - pr.second;
        out.push_back({c.name + "/" + id, d.is_zero(), d.is_zero() ? "0" : d.str(), ""});
    }
    return out;
}

// ----------------------------------------------------------------- pairing

QScalar pairing(const std::string& uword, const std::string& tword) {
    if (uword.size() != 4 || uword[0] != 'L' || (uword[1] != 'p' && uword[1] != 'm') || uword[2] < '1' ||
        uword[2] > '2' || uword[3] < '1' || uword[3] > '2')
        throw AlgebraError("expected an L-entry like Lp12 or Lm21, got '" + uword + "'");
    auto consts = standard_constants();
    const QMatrix& R = uword[1] == 'p' ? consts.Rplus : consts.Rminus;
    int i = uword[2] - '1', j = uword[3] - '1';
    PresPtr g = build_presentation("glq2");
    Element t = parse_expression(tword, g.get());
    if (t.size() != 1 || !t.terms().begin()->second.is_one())
        throw AlgebraError("T-word must be a single monomial with coefficient 1");
    Word w = t.terms().begin()->first;
    if (w.size() > 3) throw AlgebraError("T-words longer than 3 are not supported");
    // sum over the chain i = i0, i1, ..., im = j of prod R[(i_{t-1}, k_t), (i_t, l_t)]
    std::vector<QScalar> row(2);
    row[static_cast<std::size_t>(i)] = 1;
    for (std::size_t n = 0; n < w.size(); ++n) {
        int gidx = letter_at(w, n);  // a b c d are generators 0..3, row-major T
        int k = gidx / 2, l = gidx % 2;
        std::vector<QScalar> next(2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) next[static_cast<std::size_t>(b)] += row[static_cast<std::size_t>(a)] * R.at(2 * a + k, 2 * b + l);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

}  // namespace qdeform
