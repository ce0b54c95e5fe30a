#include "qdeform/rmat.hpp"

#include <sstream>

#include <json.hpp>

#include "qdeform/catalog.hpp"
#include "qdeform/parse.hpp"

namespace qdeform {

// -------------------------------------------------------------------- QMatrix

QMatrix::QMatrix(int n, std::vector<QScalar> rows) : n_(n), e_(std::move(rows)) {
    if (static_cast<int>(e_.size()) != n * n) throw QScalarError("matrix entry count does not match dimension");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    int n = a.n_;
    QMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const QScalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

QMatrix operator*(const QScalar& c, const QMatrix& a) {
    QMatrix r = a;
    for (auto& x : r.e_) x *= c;
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::inverse() const {
    QMatrix a = *this, inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw QScalarError("singular matrix");
        if (piv != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        QScalar s = a.at(col, col).inverse();
        for (int j = 0; j < n_; ++j) {
            a.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            QScalar f = a.at(r, col);
            for (int j = 0; j < n_; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < n_; ++i) {
        out << "[";
        for (int j = 0; j < n_; ++j) out << (j ? ", " : "") << at(i, j).str();
        out << "]\n";
    }
    return out.str();
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    int n = a.dim(), m = b.dim();
    QMatrix r(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) r.at(i * m + k, j * m + l) = a.at(i, j) * b.at(k, l);
    return r;
}

QMatrix transpose_first(const QMatrix& r) {
    QMatrix t(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) t.at(2 * i + k, 2 * j + l) = r.at(2 * j + k, 2 * i + l);
    return t;
}

QMatrix leg12(const QMatrix& r) { return kron(r, QMatrix::identity(2)); }
QMatrix leg23(const QMatrix& r) { return kron(QMatrix::identity(2), r); }

QMatrix leg13(const QMatrix& r) {
    QMatrix p23 = kron(QMatrix::identity(2), perm4());
    return p23 * leg12(r) * p23;
}

// ----------------------------------------------------------------- constants

QMatrix r_matrix(const QScalar& qq) {
    QScalar lam = qq - qq.inverse();
    return QMatrix(4, {qq, 0, 0, 0,  //
                       0, 1, 0, 0,   //
                       0, lam, 1, 0, //
                       0, 0, 0, qq});
}

QMatrix perm4() {
    return QMatrix(4, {1, 0, 0, 0,  //
                       0, 0, 1, 0,  //
                       0, 1, 0, 0,  //
                       0, 0, 0, 1});
}

QMatrix k1_matrix(const QScalar& rho, const QScalar& mu, const QScalar& nu) {
    return QMatrix(2, {rho, mu, 0, nu});
}

StandardConstants standard_constants() {
    StandardConstants c;
    c.R = r_matrix();
    c.P = perm4();
    c.Rhat = c.P * c.R;
    c.Rplus = QScalar::spow(-1) * (c.P * c.R * c.P);
    c.Rminus = QScalar::spow(1) * c.R.inverse();
    c.eps_q = QMatrix(2, {0, 1, -QScalar::q(), 0});
    c.K0 = c.eps_q;
    return c;
}

QMatrix yang_baxter_residual(const QMatrix& r) {
    QMatrix r12 = leg12(r), r13 = leg13(r), r23 = leg23(r);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

QMatrix hecke_residual(const QMatrix& rhat, const QScalar& lambda) {
    return rhat * rhat - lambda * rhat - QMatrix::identity(rhat.dim());
}

std::string qmatrix_to_json(const QMatrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(m.at(i, k).str());
        j.push_back(row);
    }
    return j.dump();
}

QMatrix qmatrix_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = static_cast<int>(j.size());
    QMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[static_cast<std::size_t>(i)].size()) != n) throw QScalarError("matrix must be square");
        for (int k = 0; k < n; ++k)
            m.at(i, k) = parse_qscalar(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<std::string>());
    }
    return m;
}

// -------------------------------------------------------------------- EMatrix

EMatrix::EMatrix(int n, std::vector<Element> rows) : n_(n), e_(std::move(rows)) {
    if (static_cast<int>(e_.size()) != n * n) throw AlgebraError("matrix entry count does not match dimension");
}

EMatrix EMatrix::from(const QMatrix& m) {
    EMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = Element(m.at(i, j));
    return r;
}

EMatrix operator+(const EMatrix& a, const EMatrix& b) {
    EMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

EMatrix operator-(const EMatrix& a, const EMatrix& b) {
    EMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

EMatrix operator*(const EMatrix& a, const EMatrix& b) {
    int n = a.n_;
    EMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Element& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

EMatrix EMatrix::transpose() const {
    EMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

EMatrix EMatrix::normalized(const Presentation& p) const {
    EMatrix r = *this;
    for (auto& x : r.e_) x = p.normalize(x);
    return r;
}

EMatrix kron(const EMatrix& a, const EMatrix& b) {
    int n = a.dim(), m = b.dim();
    EMatrix r(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) r.at(i * m + k, j * m + l) = a.at(i, j) * b.at(k, l);
    return r;
}

EMatrix symbol_matrix(const Presentation& p, const std::vector<std::string>& names) {
    std::vector<Element> e;
    for (const auto& n : names) e.push_back(Element::gen(p.require(n)));
    int dim = names.size() == 4 ? 2 : static_cast<int>(names.size());
    return EMatrix(dim, std::move(e));
}

// ----------------------------------------------------------------- relations

namespace {

std::vector<Element> flat(const EMatrix& m) { return m.entries(); }

EMatrix id2() { return EMatrix::from(QMatrix::identity(2)); }

}  // namespace

std::vector<Element> rtt_relations(const QMatrix& r, const EMatrix& t) {
    EMatrix R = EMatrix::from(r);
    EMatrix t1 = kron(t, id2()), t2 = kron(id2(), t);
    return flat(R * t1 * t2 - t2 * t1 * R);
}

std::vector<Element> re_relations(const QMatrix& r, const EMatrix& k) {
    EMatrix R = EMatrix::from(r), Rt1 = EMatrix::from(transpose_first(r));
    EMatrix k1 = kron(k, id2()), k2 = kron(id2(), k);
    return flat(R * k1 * Rt1 * k2 - k2 * Rt1 * k1 * R);
}

std::vector<Element> plane_relations(const QMatrix& rhat, const std::vector<QScalar>& f, const Element& x1,
                                     const Element& x2) {
    QMatrix fr(4), pw = QMatrix::identity(4);
    for (const auto& c : f) {
        fr = fr + c * pw;
        pw = pw * rhat;
    }
    const Element* x[2] = {&x1, &x2};
    std::vector<Element> out(4);
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) {
            const QScalar& c = fr.at(row, col);
            if (!c.is_zero()) out[static_cast<std::size_t>(row)] += c * (*x[col / 2] * *x[col % 2]);
        }
    return out;
}

std::vector<Element> inhomogeneous_relations(const QMatrix& rhat, const QScalar& qq, const std::vector<QScalar>& v,
                                             const Element& x1, const Element& x2) {
    auto rel = plane_relations(rhat, {-qq, 1}, x1, x2);
    for (std::size_t i = 0; i < rel.size(); ++i) rel[i] -= Element(v[i]);
    return rel;
}

EMatrix l_plus(const Presentation& p) {
    Element k = Element::gen(p.require("k")), ki = Element::gen(p.require("kinv"));
    Element xm = Element::gen(p.require("Xm"));
    return EMatrix(2, {k, QScalar::lambda() * xm, Element(), ki});
}

EMatrix l_minus(const Presentation& p) {
    Element k = Element::gen(p.require("k")), ki = Element::gen(p.require("kinv"));
    Element xp = Element::gen(p.require("Xp"));
    return EMatrix(2, {ki, Element(), -QScalar::lambda() * xp, k});
}

std::vector<Element> lpm_relations(const Presentation& p) {
    auto c = standard_constants();
    EMatrix lp = l_plus(p), lm = l_minus(p);
    std::vector<Element> out;
    auto add = [&](const QMatrix& r, const EMatrix& ls, const EMatrix& le) {
        EMatrix R = EMatrix::from(r);
        EMatrix l1 = kron(ls, id2()), l2 = kron(id2(), le);
        auto e = flat(R * l1 * l2 - l2 * l1 * R);
        out.insert(out.end(), e.begin(), e.end());
    };
    add(c.Rplus, lp, lp);
    add(c.Rminus, lm, lm);
    add(c.Rplus, lp, lm);
    return out;
}

std::size_t exact_rank(const std::vector<Element>& els) {
    ElementSpan span;
    for (const auto& e : els) span.add(e);
    return span.rank();
}

IdealComparison compare_ideal(const std::vector<Element>& generated, const Presentation& p) {
    IdealComparison out;
    ElementSpan span;
    for (const auto& g : generated) {
        span.add(g);
        if (!p.normalize(g).is_zero()) out.generated_not_reducing.push_back(element_str(g, p));
    }
    out.generated_rank = span.rank();
    for (const auto& r : p.rules()) {
        Element rel = Element::word(r.lhs) - r.rhs;
        if (!span.contains(rel)) out.rules_outside_span.push_back(element_str(rel, p));
    }
    return out;
}

IdealComparison compare_lpm_slq2() {
    PresPtr sl = build_presentation("slq2");
    PresentationBuilder b("slq2_laurent");
    b.gen("k").inverse("kinv", "k").gen("Xm").gen("Xp");
    PresPtr lau = b.build();
    auto gen = lpm_relations(*sl);
    IdealComparison out;
    std::vector<Element> sides = {Element(1), Element::gen(0), Element::gen(1)};
    ElementSpan span;
    for (const auto& g : gen) {
        if (!sl->normalize(g).is_zero()) out.generated_not_reducing.push_back(element_str(g, *sl));
        for (const auto& x : sides)
            for (const auto& y : sides) span.add(lau->normalize(x * g * y));
    }
    out.generated_rank = exact_rank(gen);
    for (const auto& r : sl->rules()) {
        if (r.rhs == Element(1)) continue;  // cancellation rules
        Element rel = lau->normalize(Element::word(r.lhs) - r.rhs);
        if (!span.contains(rel)) out.rules_outside_span.push_back(element_str(rel, *sl));
    }
    return out;
}

}  // namespace qdeform
