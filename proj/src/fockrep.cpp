#include "qdeform/fockrep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Dense>
#include <json.hpp>

#include "qdeform/catalog.hpp"
#include "qdeform/parse.hpp"

namespace qdeform {

// ------------------------------------------------------------- expressions

NumExpr num_scale(const NumExpr& e, cplx c) {
    NumExpr r = e;
    for (auto& t : r) t.c *= c;
    return r;
}

NumExpr num_add(const NumExpr& a, const NumExpr& b) {
    NumExpr r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

NumExpr num_mul(const NumExpr& a, const NumExpr& b) {
    NumExpr r;
    for (const auto& x : a)
        for (const auto& y : b) {
            NumTerm t{x.c * y.c, x.letters};
            t.letters.insert(t.letters.end(), y.letters.begin(), y.letters.end());
            r.push_back(std::move(t));
        }
    return r;
}

NumExpr num_expr(const Element& e, const Presentation& p, cplx q) {
    NumExpr r;
    for (const auto& [w, c] : e.terms()) {
        NumTerm t{qeval(c, q), {}};
        for (std::size_t i = 0; i < w.size(); ++i)
            t.letters.push_back(p.gens()[static_cast<std::size_t>(letter_at(w, i))].name);
        r.push_back(std::move(t));
    }
    return r;
}

// ------------------------------------------------------------------ FockRep

FockRep::FockRep(std::string algebra, cplx q0, std::string basis, std::vector<ModeInfo> modes)
    : algebra_(std::move(algebra)), q0_(q0), basis_(std::move(basis)), modes_(std::move(modes)) {
    for (const auto& m : modes_) dim_ *= m.size;
}

const SpMat& FockRep::at(const std::string& name) const {
    auto it = mats_.find(name);
    if (it == mats_.end()) throw AlgebraError("representation of " + algebra_ + " has no matrix '" + name + "'");
    return it->second;
}

int FockRep::occupation(int idx, std::size_t mode) const {
    // first mode is the most significant digit, matching kron(mode0, mode1, ...)
    for (std::size_t m = modes_.size(); m-- > mode + 1;) idx /= modes_[m].size;
    return idx % modes_[mode].size;
}

void FockRep::set(const std::string& name, SpMat m) {
    std::vector<int> up(modes_.size(), 0), down(modes_.size(), 0);
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it) {
            if (std::abs(it.value()) == 0) continue;
            for (std::size_t md = 0; md < modes_.size(); ++md) {
                int d = occupation(static_cast<int>(it.row()), md) - occupation(static_cast<int>(it.col()), md);
                up[md] = std::max(up[md], d);
                down[md] = std::max(down[md], -d);
            }
        }
    up_[name] = up;
    down_[name] = down;
    mats_[name] = std::move(m);
}

NumExpr FockRep::parse(const std::string& text) const {
    PresentationBuilder b(algebra_ + "_matrices");
    for (const auto& [n, m] : mats_) b.gen(n);
    auto aux = b.build();
    return num_expr(parse_expression(text, aux.get()), *aux, q0_);
}

SpMat FockRep::matrix(const NumExpr& e) const {
    SpMat out(dim_, dim_);
    for (const auto& t : e) {
        SpMat acc(dim_, dim_);
        acc.setIdentity();
        for (const auto& l : t.letters) acc = acc * at(l);
        out += t.c * acc;
    }
    out.prune(cplx(0.0, 0.0));
    return out;
}

std::vector<int> FockRep::safe_columns(const NumExpr& e) const {
    std::vector<int> up(modes_.size(), 0), down(modes_.size(), 0);
    for (const auto& t : e) {
        for (std::size_t md = 0; md < modes_.size(); ++md) {
            int u = 0, d = 0;
            for (const auto& l : t.letters) {
                at(l);
                u += up_.at(l)[md];
                d += down_.at(l)[md];
            }
            up[md] = std::max(up[md], u);
            down[md] = std::max(down[md], d);
        }
    }
    std::vector<int> cols;
    for (int c = 0; c < dim_; ++c) {
        bool ok = true;
        for (std::size_t md = 0; md < modes_.size() && ok; ++md) {
            int n = occupation(c, md);
            if (n + up[md] > modes_[md].size - 1) ok = false;
            if (modes_[md].two_sided && n - down[md] < 0) ok = false;
        }
        if (ok) cols.push_back(c);
    }
    return cols;
}

FockRep::Residual FockRep::residual(const NumExpr& e) const {
    Residual r;
    SpMat m = matrix(e);
    auto cols = safe_columns(e);
    r.columns = static_cast<int>(cols.size());
    for (int c : cols)
        for (SpMat::InnerIterator it(m, c); it; ++it) r.max = std::max(r.max, std::abs(it.value()));
    return r;
}

FockRep::Residual FockRep::residual(const std::vector<NumExpr>& es) const {
    Residual out;
    out.columns = dim_;
    for (const auto& e : es) {
        Residual r = residual(e);
        out.max = std::max(out.max, r.max);
        out.columns = std::min(out.columns, r.columns);
    }
    return out;
}

std::string FockRep::to_json() const {
    nlohmann::json j;
    j["algebra"] = algebra_;
    j["dim"] = dim_;
    j["q0"] = {q0_.real(), q0_.imag()};
    j["basis"] = basis_;
    j["layout"] = "row-major";
    nlohmann::json gens = nlohmann::json::object();
    for (const auto& [n, m] : mats_) {
        Eigen::MatrixXcd d(m);
        nlohmann::json flat = nlohmann::json::array();
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) flat.push_back({d(r, c).real(), d(r, c).imag()});
        gens[n] = flat;
    }
    j["generators"] = gens;
    return j.dump();
}

// -------------------------------------------------------------- builders

namespace {

cplx qn(double n, cplx q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q); }

SpMat diag(int dim, const std::function<cplx(int)>& f) {
    SpMat m(dim, dim);
    for (int n = 0; n < dim; ++n) m.insert(n, n) = f(n);
    return m;
}

SpMat lower(int dim, const std::function<cplx(int)>& f) {  // |n> -> f(n)|n-1>
    SpMat m(dim, dim);
    for (int n = 1; n < dim; ++n) m.insert(n - 1, n) = f(n);
    return m;
}

SpMat raise(int dim, const std::function<cplx(int)>& f) {  // |n> -> f(n)|n+1>
    SpMat m(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) m.insert(n + 1, n) = f(n);
    return m;
}

SpMat ident(int dim) {
    SpMat m(dim, dim);
    m.setIdentity();
    return m;
}

SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat r(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cplx>> t;
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
                    t.emplace_back(static_cast<int>(ia.row() * b.rows() + ib.row()),
                                   static_cast<int>(ia.col() * b.cols() + ib.col()), ia.value() * ib.value());
    r.setFromTriplets(t.begin(), t.end());
    return r;
}

// ladder + number-power matrices for one Fock mode with sqrt([n]) amplitudes
struct Ladder {
    SpMat a, adag;
};

Ladder ladder(int dim, cplx q, bool rescaled) {
    if (rescaled) return {lower(dim, [&](int n) { return qn(n, q); }), raise(dim, [](int) { return cplx(1); })};
    SpMat a = lower(dim, [&](int n) { return std::sqrt(qn(n, q)); });
    SpMat ad = a.transpose();
    return {a, ad};
}

SpMat qpow_n(int dim, cplx q, double e) {
    return diag(dim, [&](int n) { return std::pow(q, e * n); });
}

}  // namespace

FockRep fock_rep(const std::string& algebra, int dim, cplx q0, const std::string& basis) {
    if (dim < 2) throw AlgebraError("Fock dimension must be at least 2");
    if (basis != "orthonormal" && basis != "rescaled") throw AlgebraError("unknown basis '" + basis + "'");
    bool resc = basis == "rescaled";
    FockRep rep(algebra, q0, basis, {{dim, false}});
    if (algebra == "osc_q" || algebra == "osc_q_qinv" || algebra == "osc_q_half") {
        Ladder l = ladder(dim, q0, resc);
        rep.set("a", l.a);
        rep.set("adag", l.adag);
        if (algebra == "osc_q_half") {
            rep.set("kh", qpow_n(dim, q0, 0.5));
            rep.set("khinv", qpow_n(dim, q0, -0.5));
        } else {
            rep.set("k", qpow_n(dim, q0, 1));
            rep.set("kinv", qpow_n(dim, q0, -1));
        }
        return rep;
    }
    if (resc) throw AlgebraError("rescaled basis is defined for the q-oscillator only");
    if (algebra == "osc_alpha" || algebra == "osc_alpha_k") {
        // alpha = q^(-N/2) a
        Ladder l = ladder(dim, q0, false);
        SpMat khinv = qpow_n(dim, q0, -0.5);
        rep.set("alpha", khinv * l.a);
        rep.set("alphadag", l.adag * khinv);
        if (algebra == "osc_alpha") {
            rep.set("kh", qpow_n(dim, q0, 0.5));
            rep.set("khinv", khinv);
        } else {
            rep.set("k", qpow_n(dim, q0, 1));
            rep.set("kinv", qpow_n(dim, q0, -1));
        }
        return rep;
    }
    if (algebra == "osc_A" || algebra == "osc_A_q2") {
        // A = p^(N/2) a_p with p^2 the deformation of the A-relation
        cplx p = algebra == "osc_A" ? std::sqrt(q0) : q0;
        Ladder l = ladder(dim, p, false);
        SpMat kh = qpow_n(dim, p, 0.5);
        rep.set("A", kh * l.a);
        rep.set("Adag", l.adag * kh);
        return rep;
    }
    throw AlgebraError("no Fock representation for '" + algebra + "'");
}

FockRep multimode_rep(const std::string& algebra, int dim, cplx q0) {
    struct M {
        std::string lo, hi, g, ginv;
        double power;
    };
    std::vector<M> ms;
    if (algebra == "osc_pair") {
        ms = {{"a1", "adag1", "h1", "h1inv", 0.5}, {"a2", "adag2", "h2", "h2inv", 0.5}};
    } else if (algebra == "osc_pair_qqinv") {
        ms = {{"a1", "a1dag", "qM1", "qM1inv", 1},
              {"a2", "a2dag", "qM2", "qM2inv", 1},
              {"b1", "b1dag", "qN1", "qN1inv", 1},
              {"b2", "b2dag", "qN2", "qN2inv", 1}};
    } else {
        throw AlgebraError("no multi-mode representation for '" + algebra + "'");
    }
    std::vector<ModeInfo> info(ms.size(), ModeInfo{dim, false});
    FockRep rep(algebra, q0, "orthonormal", info);
    Ladder l = ladder(dim, q0, false);
    auto embed = [&](const SpMat& op, std::size_t at) {
        SpMat acc = at == 0 ? op : ident(dim);
        for (std::size_t i = 1; i < ms.size(); ++i) acc = kron(acc, i == at ? op : ident(dim));
        return acc;
    };
    for (std::size_t i = 0; i < ms.size(); ++i) {
        rep.set(ms[i].lo, embed(l.a, i));
        rep.set(ms[i].hi, embed(l.adag, i));
        rep.set(ms[i].g, embed(qpow_n(dim, q0, ms[i].power), i));
        rep.set(ms[i].ginv, embed(qpow_n(dim, q0, -ms[i].power), i));
    }
    return rep;
}

FockRep singular_rep(int window, double q0) {
    if (window < 3) throw AlgebraError("singular representation window must be at least 3");
    if (!(q0 > 0 && q0 < 1)) throw AlgebraError("singular representation needs q0 in (0, 1)");
    int dim = 2 * window + 1;
    FockRep rep("osc_A", q0, "singular", {{dim, true}});
    double beta = std::pow(q0, -0.5) - std::pow(q0, 0.5);
    cplx c = std::pow(beta, -0.5) * std::pow(q0, -0.25);
    rep.set("A", lower(dim, [&](int) { return c; }));
    rep.set("Adag", raise(dim, [&](int) { return c; }));
    return rep;
}

FockRep lattice_rep(int window, cplx q0, double nu) {
    int dim = 2 * window + 1;
    FockRep rep("osc_q", q0, "lattice", {{dim, true}});
    auto N = [&](int idx) { return idx - window + nu; };
    rep.set("a", lower(dim, [&](int i) { return std::sqrt(qn(N(i), q0)); }));
    rep.set("adag", raise(dim, [&](int i) { return std::sqrt(qn(N(i) + 1, q0)); }));
    rep.set("k", diag(dim, [&](int i) { return std::pow(q0, N(i)); }));
    rep.set("kinv", diag(dim, [&](int i) { return std::pow(q0, -N(i)); }));
    return rep;
}

void add_w_inverse(FockRep& rep) {
    // W = q adag a + kinv = a adag by the relation; adag a is cut at the bottom of a
    // two-sided window and a adag at the top, so take each entry where it is exact
    if (rep.modes().size() != 1) throw AlgebraError("W needs a single-mode representation");
    SpMat lo = rep.matrix("a*adag"), hi = rep.matrix("q*adag*a + kinv");
    SpMat inv(rep.dim(), rep.dim());
    for (int n = 0; n < rep.dim(); ++n) {
        cplx v = n + 1 < rep.dim() ? lo.coeff(n, n) : hi.coeff(n, n);
        if (std::abs(v) < 1e-300) throw AlgebraError("W is singular on this representation");
        inv.insert(n, n) = 1.0 / v;
    }
    rep.set("Winv", inv);
}

void add_number_power(FockRep& rep, const std::string& name, cplx base, double e) {
    if (rep.modes().size() != 1 || rep.modes()[0].two_sided) throw AlgebraError("number powers need a single Fock mode");
    rep.set(name, qpow_n(rep.dim(), base, e));
}

std::vector<Element> relations_of(const Presentation& p) {
    std::vector<Element> out;
    for (const auto& r : p.rules()) out.push_back(Element::word(r.lhs) - r.rhs);
    return out;
}

FockRep::Residual rep_residual(const FockRep& rep, const std::vector<Element>& rels, const Presentation& p) {
    std::vector<NumExpr> es;
    for (const auto& r : rels) es.push_back(num_expr(r, p, rep.q0()));
    return rep.residual(es);
}

std::map<std::string, cplx> central_values(const FockRep& rep) {
    std::map<std::string, cplx> out;
    auto scalar_on_block = [&](const std::string& name, const NumExpr& e) {
        SpMat m = rep.matrix(e);
        auto cols = rep.safe_columns(e);
        if (cols.empty()) throw AlgebraError("no safe columns for " + name);
        cplx v = m.coeff(cols[0], cols[0]);
        double scale = std::max(1.0, std::abs(v));
        for (int c : cols)
            for (SpMat::InnerIterator it(m, c); it; ++it) {
                cplx expect = it.row() == c ? v : cplx(0);
                if (std::abs(it.value() - expect) > 1e-9 * scale)
                    throw AlgebraError(name + " is not scalar on the safe block");
            }
        if (m.col(cols[0]).nonZeros() == 0) v = 0;
        out[name] = v;
    };
    const std::string& alg = rep.algebra();
    if (rep.basis() == "singular") {
        scalar_on_block("AdagA", rep.parse("Adag*A"));
        return out;
    }
    if (alg == "osc_q" || alg == "osc_q_qinv" || alg == "osc_alpha" || alg == "osc_alpha_k") {
        PresPtr p = build_presentation(alg);
        const char* name = alg.rfind("osc_alpha", 0) == 0 ? "zeta" : "cq";
        scalar_on_block(name, num_expr(p->aliases().at(name), *p, rep.q0()));
        return out;
    }
    throw AlgebraError("no central elements recorded for " + alg);
}

int exact_rescaled_defects(int dim) {
    PresPtr p = build_presentation("osc_q");
    using Vec = std::map<int, QScalar>;
    auto apply = [&](const std::string& g, const Vec& v) {
        Vec r;
        for (const auto& [n, c] : v) {
            if (g == "a") {
                if (n > 0) r[n - 1] += c * qnum(n);
            } else if (g == "adag") {
                if (n + 1 < dim) r[n + 1] += c;
            } else if (g == "k") {
                r[n] += c * QScalar::qpow(n);
            } else {
                r[n] += c * QScalar::qpow(-n);
            }
        }
        return r;
    };
    const int guard = 2;
    int defects = 0;
    for (const auto& rel : relations_of(*p))
        for (int col = 0; col + guard < dim; ++col) {
            Vec total;
            for (const auto& [w, c] : rel.terms()) {
                Vec v{{col, c}};
                for (std::size_t i = w.size(); i-- > 0;)
                    v = apply(p->gens()[static_cast<std::size_t>(letter_at(w, i))].name, v);
                for (const auto& [n, x] : v) total[n] += x;
            }
            for (const auto& [n, x] : total) defects += !x.is_zero();
        }
    return defects;
}

// ------------------------------------------------------------ Schwinger

namespace {

struct SpinBlock {
    std::vector<int> idx;  // basis indices with n1 + n2 = total, ordered by n1
    Eigen::MatrixXcd xp, xm, kj;  // X+, X-, q^J restricted
    std::vector<double> m;  // J eigenvalue per row
};

SpinBlock spin_block(const FockRep& rep, int total) {
    SpinBlock b;
    int d = rep.modes()[0].size;
    for (int n1 = 0; n1 <= total; ++n1) {
        int n2 = total - n1;
        if (n1 >= d || n2 >= d) continue;
        b.idx.push_back(n1 * d + n2);
        b.m.push_back(0.5 * (n1 - n2));
    }
    Eigen::MatrixXcd xp(rep.matrix("adag1*a2")), xm(rep.matrix("adag2*a1")), kj(rep.matrix("h1*h2inv"));
    int s = static_cast<int>(b.idx.size());
    b.xp.resize(s, s);
    b.xm.resize(s, s);
    b.kj.resize(s, s);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            b.xp(r, c) = xp(b.idx[static_cast<std::size_t>(r)], b.idx[static_cast<std::size_t>(c)]);
            b.xm(r, c) = xm(b.idx[static_cast<std::size_t>(r)], b.idx[static_cast<std::size_t>(c)]);
            b.kj(r, c) = kj(b.idx[static_cast<std::size_t>(r)], b.idx[static_cast<std::size_t>(c)]);
        }
    return b;
}

}  // namespace

std::vector<SchwingerBlock> schwinger_decompose(int dim, double q0) {
    if (dim < 2) throw AlgebraError("Schwinger decomposition needs at least 2 levels per mode");
    FockRep rep = multimode_rep("osc_pair", dim, q0);
    std::vector<SchwingerBlock> out;
    // complete blocks only: n1 + n2 <= dim - 1 keeps every ladder step inside the window
    for (int total = 0; total < dim; ++total) {
        SpinBlock b = spin_block(rep, total);
        int s = static_cast<int>(b.idx.size());
        Eigen::MatrixXcd jj = Eigen::MatrixXcd::Zero(s, s);
        for (int r = 0; r < s; ++r) jj(r, r) = qn(b.m[static_cast<std::size_t>(r)], q0) * qn(b.m[static_cast<std::size_t>(r)] + 1, q0);
        Eigen::MatrixXcd c2 = b.xm * b.xp + jj;
        cplx v = c2(s - 1, s - 1);  // highest weight, X+ v = 0
        double defect = (c2 - v * Eigen::MatrixXcd::Identity(s, s)).cwiseAbs().maxCoeff();
        double n = 0.5 * total;
        out.push_back({n, s, v, qn(n, q0) * qn(n + 1, q0), defect});
    }
    return out;
}

std::vector<ContractionRow> contraction_probe(const std::vector<int>& js, double q0) {
    if (js.empty()) throw AlgebraError("contraction probe needs at least one spin");
    std::vector<ContractionRow> out;
    cplx q = q0;
    cplx lam = q - 1.0 / q;
    cplx rl = std::sqrt(lam);
    for (int j : js) {
        FockRep rep = multimode_rep("osc_pair", 2 * j + 1, q0);
        SpinBlock b = spin_block(rep, 2 * j);
        int s = static_cast<int>(b.idx.size());
        Eigen::MatrixXcd kinv = b.kj.inverse();
        auto resid = [&](double eps, bool printed, bool upper_only) {
            Eigen::MatrixXcd al = eps * rl * (printed ? b.xp : b.xm);
            Eigen::MatrixXcd ad = eps * rl * (printed ? b.xm : b.xp);
            Eigen::MatrixXcd qmn = eps * kinv;
            Eigen::MatrixXcd r = al * ad - ad * al - qmn * qmn;
            double mx = 0;
            for (int c = 0; c < s; ++c)
                if (!upper_only || b.m[static_cast<std::size_t>(c)] >= 0) mx = std::max(mx, r.col(c).cwiseAbs().maxCoeff());
            return mx;
        };
        ContractionRow row;
        row.j = j;
        row.epsilon = std::pow(q0, j);
        row.residual = resid(row.epsilon, false, true);
        row.residual_2eps = resid(2 * row.epsilon, false, true);
        row.printed_residual = resid(row.epsilon, true, false);
        // zeta = alpha+ alpha - (q^-2N - 1)/(q^-2 - 1) at the top state
        double eps = row.epsilon;
        Eigen::MatrixXcd al = eps * rl * b.xm, ad = eps * rl * b.xp, qmn = eps * kinv;
        Eigen::MatrixXcd zeta = ad * al - (qmn * qmn - Eigen::MatrixXcd::Identity(s, s)) / (1.0 / (q * q) - 1.0);
        cplx zeta_top = zeta(s - 1, s - 1);
        cplx c2 = qn(j, q) * qn(j + 1, q);
        row.central_gap = std::abs(eps * eps * lam * c2 - (zeta_top + q * q / (q * q - 1.0)));
        out.push_back(row);
    }
    return out;
}

// ------------------------------------------------------- numeric morphisms

std::vector<RelationResidual> numeric_morphism_residual(const NumericMorphism& m, const FockRep& rep) {
    const Presentation& s = *m.source;
    std::vector<NumExpr> img;
    for (const auto& g : s.gens()) {
        auto it = m.images.find(g.name);
        if (it == m.images.end()) throw AlgebraError("numeric morphism " + m.name + " leaves " + g.name + " unassigned");
        img.push_back(it->second);
    }
    std::vector<RelationResidual> out;
    for (const auto& rel : relations_of(s)) {
        NumExpr e;
        for (const auto& [w, c] : rel.terms()) {
            NumExpr t{{qeval(c, m.source_q), {}}};
            for (std::size_t i = 0; i < w.size(); ++i) t = num_mul(t, img[static_cast<std::size_t>(letter_at(w, i))]);
            e = num_add(e, t);
        }
        auto r = rep.residual(e);
        out.push_back({element_str(rel, s), r.max, r.columns});
    }
    return out;
}

double max_residual(const std::vector<RelationResidual>& rows) {
    double m = 0;
    for (const auto& r : rows) {
        if (r.columns == 0) return std::numeric_limits<double>::infinity();
        m = std::max(m, r.residual);
    }
    return m;
}

double classical_bridge_defect(int dim, double q0) {
    SpMat b = raise(dim, [](int n) { return std::sqrt(static_cast<double>(n + 1)); });
    SpMat f = diag(dim, [&](int n) { return n == 0 ? cplx(0) : std::sqrt(qn(n, q0) / static_cast<double>(n)); });
    SpMat bridged = f * b;
    SpMat adag = ladder(dim, q0, false).adag;
    SpMat d = bridged - adag;
    double mx = 0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SpMat::InnerIterator it(d, k); it; ++it) mx = std::max(mx, std::abs(it.value()));
    return mx;
}

}  // namespace qdeform
