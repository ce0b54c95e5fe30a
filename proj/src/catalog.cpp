#include "qdeform/catalog.hpp"

#include <functional>
#include <map>
#include <mutex>

#include <json.hpp>

#include "qdeform/parse.hpp"

namespace qdeform {

// ------------------------------------------------------------------ builder

PresentationBuilder& PresentationBuilder::gen(const std::string& n, int weight) {
    gens_.push_back({n, weight, -1});
    return *this;
}

PresentationBuilder& PresentationBuilder::inverse(const std::string& n, const std::string& of, int weight) {
    int idx = -1;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == of) idx = static_cast<int>(i);
    if (idx < 0) throw AlgebraError("inverse of unknown generator " + of);
    gens_.push_back({n, weight, idx});
    rules_.emplace_back(of + "*" + n, "1");
    rules_.emplace_back(n + "*" + of, "1");
    return *this;
}

PresentationBuilder& PresentationBuilder::rule(const std::string& lhs, const std::string& rhs) {
    rules_.emplace_back(lhs, rhs);
    return *this;
}

PresentationBuilder& PresentationBuilder::alias(const std::string& n, const std::string& value) {
    aliases_.emplace_back(n, value);
    return *this;
}

PresentationBuilder& PresentationBuilder::note(const std::string& text) {
    note_ = text;
    return *this;
}

PresentationBuilder& PresentationBuilder::star(std::vector<std::string> images) {
    star_ = std::move(images);
    return *this;
}

std::shared_ptr<Presentation> PresentationBuilder::build() const {
    auto p = std::make_shared<Presentation>(name_, gens_);
    for (const auto& [n, v] : aliases_) p->add_alias(n, parse_expression(v, p.get()));
    for (const auto& [l, r] : rules_) {
        Element lhs = parse_expression(l, p.get());
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one() || lhs.terms().begin()->first.empty())
            throw AlgebraError("rule lhs '" + l + "' must be a single word");
        p->add_rule(lhs.terms().begin()->first, parse_expression(r, p.get()));
    }
    if (!star_.empty()) {
        std::vector<Element> img;
        for (const auto& s : star_) img.push_back(parse_expression(s, p.get()));
        if (static_cast<int>(img.size()) != p->ngens()) throw AlgebraError("star must cover every generator");
        p->set_star(std::move(img));
    }
    p->set_note(note_);
    return p;
}

// ------------------------------------------------------------------ catalog

namespace {

const char* kLam = "(q - q^-1)";

void glq2_core(PresentationBuilder& b) {
    b.rule("b*a", "(q^-1)*a*b")
        .rule("c*a", "(q^-1)*a*c")
        .rule("d*b", "(q^-1)*b*d")
        .rule("d*c", "(q^-1)*c*d");
}

// D_q = ad - q bc adjoined as a generator with inverse; bc is eliminated.
void glq2_det_rules(PresentationBuilder& b) {
    glq2_core(b);
    b.rule("c*b", "b*c")
        .rule("b*c", "(q^-1)*a*d - (q^-1)*Dq")
        .rule("d*a", "(q^-2)*a*d + (1 - q^-2)*Dq");
    for (const char* x : {"a", "b", "c", "d"}) {
        b.rule(std::string(x) + "*Dq", std::string("Dq*") + x);
        b.rule(std::string(x) + "*Dinv", std::string("Dinv*") + x);
    }
}

struct Mode {
    std::string lo, hi, g, ginv;
    enum Kind { qosc, qinv_osc, qqinv_half } kind;
};

// Several mutually commuting oscillators. Ladders come first in the order,
// group-like generators last.
std::shared_ptr<Presentation> multi_mode(const std::string& name, const std::vector<Mode>& modes,
                                         const std::string& note) {
    PresentationBuilder b(name);
    for (const auto& m : modes) b.gen(m.lo, 2).gen(m.hi, 2);
    for (const auto& m : modes) b.gen(m.g).inverse(m.ginv, m.g);
    std::vector<std::string> ladders, groups;
    std::vector<int> lmode, gmode;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& m = modes[i];
        ladders.insert(ladders.end(), {m.lo, m.hi});
        lmode.insert(lmode.end(), {int(i), int(i)});
        groups.insert(groups.end(), {m.g, m.ginv});
        gmode.insert(gmode.end(), {int(i), int(i)});
        // conjugation by the group-like: g lo = w lo g
        std::string down, up;  // factors for g*lo and g*hi
        if (m.kind == Mode::qqinv_half) {
            down = "s^-1";
            up = "s";
        } else if (m.kind == Mode::qosc) {
            down = "q^-1";  // g = q^M
            up = "q";
        } else {
            down = "q^-1";  // g = q^N
            up = "q";
        }
        b.rule(m.g + "*" + m.lo, "(" + down + ")*" + m.lo + "*" + m.g);
        b.rule(m.g + "*" + m.hi, "(" + up + ")*" + m.hi + "*" + m.g);
        b.rule(m.ginv + "*" + m.lo, "(" + up + ")*" + m.lo + "*" + m.ginv);
        b.rule(m.ginv + "*" + m.hi, "(" + down + ")*" + m.hi + "*" + m.ginv);
        switch (m.kind) {
            case Mode::qosc:  // lo hi - q hi lo = g^-1
                b.rule(m.hi + "*" + m.lo, "(q^-1)*" + m.lo + "*" + m.hi + " - (q^-1)*" + m.ginv);
                break;
            case Mode::qinv_osc:  // lo hi - q^-1 hi lo = g
                b.rule(m.hi + "*" + m.lo, "q*" + m.lo + "*" + m.hi + " - q*" + m.g);
                break;
            case Mode::qqinv_half:  // hi lo = [N], lo hi = [N+1], g = q^(N/2)
                b.rule(m.lo + "*" + m.hi,
                       "(q*" + m.g + "^2 - (q^-1)*" + m.ginv + "^2)/" + kLam);
                b.rule(m.hi + "*" + m.lo, "(" + m.g + "^2 - " + m.ginv + "^2)/" + kLam);
                break;
        }
    }
    // cross commutators vanish; orient by generator order
    for (std::size_t i = 0; i < ladders.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (lmode[i] != lmode[j]) b.rule(ladders[i] + "*" + ladders[j], ladders[j] + "*" + ladders[i]);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t l = 0; l < ladders.size(); ++l)
            if (gmode[i] != lmode[l]) b.rule(groups[i] + "*" + ladders[l], ladders[l] + "*" + groups[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (gmode[i] != gmode[j]) b.rule(groups[i] + "*" + groups[j], groups[j] + "*" + groups[i]);
    }
    b.note(note);
    return b.build();
}

std::shared_ptr<Presentation> make(const std::string& name) {
    if (name == "glq2") {
        PresentationBuilder b("glq2");
        b.gen("a").gen("b").gen("c").gen("d");
        glq2_core(b);
        b.rule("c*b", "b*c").rule("d*a", std::string("a*d - ") + kLam + "*b*c");
        b.alias("Dq", "a*d - q*b*c");
        b.note("quantum matrix group; normal words a^i b^j c^k d^l");
        return b.build();
    }
    if (name == "glq2_det" || name == "glq2_inv") {
        bool inv = name == "glq2_inv";
        PresentationBuilder b(name);
        // a is heavy so that dinv*a can be rewritten toward Dq*dinv^2
        // central Dq, Dinv sit first so they never separate d from dinv
        b.gen("Dq").inverse("Dinv", "Dq");
        b.gen("a", inv ? 3 : 1).gen("b", inv ? 2 : 1).gen("c", inv ? 2 : 1).gen("d");
        glq2_det_rules(b);
        if (inv) {
            b.inverse("dinv", "d");
            b.rule("dinv*b", "q*b*dinv")
                .rule("dinv*c", "q*c*dinv")
                .rule("dinv*a", "q^2*a*dinv - (q^2 - 1)*Dq*dinv^2")
                .rule("dinv*Dq", "Dq*dinv")
                .rule("dinv*Dinv", "Dinv*dinv");
            b.note("glq2 with the determinant Dq, its inverse and d^-1 adjoined; bc is eliminated");
        } else {
            b.note("glq2 with the determinant Dq and its inverse adjoined; bc is eliminated");
            // U_q(2) real form
            b.star({"Dinv", "Dq", "Dinv*d", "-q*Dinv*c", "-(q^-1)*Dinv*b", "Dinv*a"});
        }
        return b.build();
    }
    if (name == "slq2_group") {
        PresentationBuilder b(name);
        b.gen("a").gen("b").gen("c").gen("d");
        glq2_core(b);
        b.rule("c*b", "b*c").rule("b*c", "(q^-1)*a*d - q^-1").rule("d*a", "(q^-2)*a*d + 1 - q^-2");
        b.note("glq2 modulo Dq = 1");
        return b.build();
    }
    if (name == "slq2") {
        PresentationBuilder b(name);
        b.gen("k").inverse("kinv", "k").gen("Xm").gen("Xp");
        b.rule("Xp*Xm", std::string("Xm*Xp + (k^2 - kinv^2)/") + kLam)
            .rule("Xp*k", "(q^-1)*k*Xp")
            .rule("Xm*k", "q*k*Xm")
            .rule("Xp*kinv", "q*kinv*Xp")
            .rule("Xm*kinv", "(q^-1)*kinv*Xm");
        b.alias("c2", std::string("Xm*Xp + (k - kinv)*(q*k - (q^-1)*kinv)/") + kLam + "^2");
        b.note("k = q^J");
        return b.build();
    }
    if (name == "osc_q" || name == "osc_q_qinv") {
        PresentationBuilder b(name);
        b.gen("a").gen("adag").gen("k").inverse("kinv", "k");
        if (name == "osc_q") {
            b.rule("adag*a", "(q^-1)*a*adag - (q^-1)*kinv");
        } else {
            b.rule("adag*a", std::string("(k - kinv)/") + kLam);
            b.rule("a*adag", std::string("(q*k - (q^-1)*kinv)/") + kLam);
        }
        b.rule("k*a", "(q^-1)*a*k").rule("k*adag", "q*adag*k").rule("kinv*a", "q*a*kinv").rule(
            "kinv*adag", "(q^-1)*adag*kinv");
        b.alias("cq", std::string("kinv*(adag*a - (k - kinv)/") + kLam + ")");
        b.note("k = q^N");
        return b.build();
    }
    if (name == "osc_q_half") {
        PresentationBuilder b(name);
        b.gen("a", 2).gen("adag", 2).gen("kh").inverse("khinv", "kh");
        b.rule("adag*a", "(q^-1)*a*adag - (q^-1)*khinv^2")
            .rule("kh*a", "(s^-1)*a*kh")
            .rule("kh*adag", "s*adag*kh")
            .rule("khinv*a", "s*a*khinv")
            .rule("khinv*adag", "(s^-1)*adag*khinv");
        b.alias("k", "kh^2").alias("kinv", "khinv^2");
        b.note("kh = q^(N/2)");
        return b.build();
    }
    if (name == "osc_alpha") {
        PresentationBuilder b(name);
        b.gen("alpha", 3).gen("alphadag", 3).gen("kh").inverse("khinv", "kh");
        b.rule("alphadag*alpha", "alpha*alphadag - khinv^4")
            .rule("kh*alpha", "(s^-1)*alpha*kh")
            .rule("kh*alphadag", "s*alphadag*kh")
            .rule("khinv*alpha", "s*alpha*khinv")
            .rule("khinv*alphadag", "(s^-1)*alphadag*khinv");
        b.alias("k", "kh^2").alias("kinv", "khinv^2");
        b.alias("zeta", "alphadag*alpha - (khinv^4 - 1)/(q^-2 - 1)");
        b.note("kh = q^(N/2)");
        return b.build();
    }
    if (name == "osc_alpha_k") {
        PresentationBuilder b(name);
        b.gen("alpha", 2).gen("alphadag", 2).gen("k").inverse("kinv", "k");
        b.rule("alphadag*alpha", "alpha*alphadag - kinv^2")
            .rule("k*alpha", "(q^-1)*alpha*k")
            .rule("k*alphadag", "q*alphadag*k")
            .rule("kinv*alpha", "q*alpha*kinv")
            .rule("kinv*alphadag", "(q^-1)*alphadag*kinv");
        b.alias("zeta", "alphadag*alpha - (kinv^2 - 1)/(q^-2 - 1)");
        b.note("k = q^N");
        return b.build();
    }
    if (name == "osc_A" || name == "osc_A_q2") {
        PresentationBuilder b(name);
        b.gen("A").gen("Adag");
        if (name == "osc_A")
            b.rule("Adag*A", "(q^-1)*A*Adag - q^-1");
        else
            b.rule("Adag*A", "(q^-2)*A*Adag - q^-2");
        return b.build();
    }
    if (name == "rea2") {
        PresentationBuilder b(name);
        b.gen("alpha").gen("beta").gen("gamma").gen("delta");
        b.rule("beta*alpha", std::string("alpha*beta - ") + kLam + "*alpha*gamma")
            .rule("gamma*alpha", "(q^-2)*alpha*gamma")
            .rule("gamma*beta", "beta*gamma")
            .rule("delta*alpha", std::string("alpha*delta - ") + kLam + "*(q*beta*gamma + gamma^2)")
            .rule("delta*beta", std::string("beta*delta - ") + kLam + "*gamma*delta")
            .rule("delta*gamma", "(q^-2)*gamma*delta");
        b.alias("c1", "beta - q*gamma").alias("c2", "alpha*delta - q^2*beta*gamma");
        return b.build();
    }
    if (name == "rea2_c1") {
        PresentationBuilder b(name);
        b.gen("alpha").gen("gamma").gen("delta");
        b.rule("gamma*alpha", "(q^-2)*alpha*gamma")
            .rule("delta*alpha", std::string("alpha*delta - ") + kLam + "*(q^2 + 1)*gamma^2")
            .rule("delta*gamma", "(q^-2)*gamma*delta");
        b.alias("beta", "q*gamma");
        b.note("rea2 modulo beta = q gamma");
        return b.build();
    }
    if (name == "qplane") {
        PresentationBuilder b(name);
        b.gen("x").gen("y").rule("y*x", "(q^-1)*x*y");
        return b.build();
    }
    if (name == "grassmann_plane" || name == "grassmann_plane_printed") {
        PresentationBuilder b(name);
        b.gen("xi1").gen("xi2").rule("xi1^2", "0").rule("xi2^2", "0");
        if (name == "grassmann_plane")
            b.rule("xi2*xi1", "-q*xi1*xi2");
        else
            b.rule("xi2*xi1", "(q^-1)*xi1*xi2").note("printed text form xi1 xi2 = q xi2 xi1");
        return b.build();
    }
    if (name == "two_planes") {
        PresentationBuilder b(name);
        b.gen("x").gen("u").gen("y").gen("v");
        b.rule("u*x", "(q^-1)*x*u")
            .rule("y*x", "(q^-1)*x*y")
            .rule("y*u", "u*y")
            .rule("v*u", "(q^-1)*u*v")
            .rule("v*y", "(q^-1)*y*v")
            .rule("v*x", std::string("x*v - ") + kLam + "*u*y");
        b.note("columns (x,y) and (u,v) of a quantum matrix");
        return b.build();
    }
    if (name == "gauss_glq2" || name == "gauss_glq2_printed") {
        PresentationBuilder b(name);
        b.gen("u").gen("A").gen("B").gen("z");
        b.rule("B*A", "A*B").rule("A*u", "q*u*A").rule("B*u", "(q^-1)*u*B").rule("z*u", "u*z").rule(
            "z*B", "q*B*z");
        if (name == "gauss_glq2")
            b.rule("z*A", "(q^-1)*A*z");
        else
            b.rule("z*A", "q*A*z").note("printed form zA = qAz");
        return b.build();
    }
    if (name == "suq11") {
        PresentationBuilder b(name);
        b.gen("k").inverse("kinv", "k").gen("Km").gen("Kp");
        b.rule("Kp*Km", std::string("Km*Kp - (k^2 - kinv^2)/") + kLam)
            .rule("Kp*k", "(q^-1)*k*Kp")
            .rule("Km*k", "q*k*Km")
            .rule("Kp*kinv", "q*kinv*Kp")
            .rule("Km*kinv", "(q^-1)*kinv*Km");
        b.alias("casimir", std::string("((s^-1)*k - s*kinv)^2/") + kLam + "^2 - Kp*Km");
        b.note("k = q^K0, [Kp,Km] = -[2 K0]");
        return b.build();
    }
    if (name == "osc_pair") {
        return multi_mode(name,
                          {{"a1", "adag1", "h1", "h1inv", Mode::qqinv_half},
                           {"a2", "adag2", "h2", "h2inv", Mode::qqinv_half}},
                          "two commuting A(q,q^-1) oscillators, h_i = q^(N_i/2)");
    }
    if (name == "osc_pair_qqinv") {
        return multi_mode(name,
                          {{"a1", "a1dag", "qM1", "qM1inv", Mode::qosc},
                           {"a2", "a2dag", "qM2", "qM2inv", Mode::qosc},
                           {"b1", "b1dag", "qN1", "qN1inv", Mode::qinv_osc},
                           {"b2", "b2dag", "qN2", "qN2inv", Mode::qinv_osc}},
                          "q-oscillators a_i (number M_i) and q^-1-oscillators b_i (number N_i)");
    }
    throw AlgebraError("unknown presentation '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"glq2",     "glq2_det",   "glq2_inv",  "slq2_group", "slq2",           "osc_q",
            "osc_q_qinv", "osc_q_half", "osc_alpha", "osc_alpha_k", "osc_A",      "osc_A_q2",       "rea2",
            "rea2_c1",  "qplane",     "grassmann_plane", "grassmann_plane_printed", "two_planes",
            "gauss_glq2", "gauss_glq2_printed", "suq11", "osc_pair", "osc_pair_qqinv"};
}

std::vector<std::string> audited_catalog_names() {
    std::vector<std::string> out;
    for (auto& n : catalog_names())
        if (n.find("_printed") == std::string::npos) out.push_back(n);
    return out;
}

PresPtr build_presentation(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, PresPtr> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    PresPtr p = make(name);
    cache.emplace(name, p);
    return p;
}

// --------------------------------------------------------------------- JSON

PresPtr load_presentation_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    PresentationBuilder b(j.at("name").get<std::string>());
    std::map<std::string, nlohmann::json> by_name;
    for (const auto& g : j.at("generators")) by_name[g.at("name").get<std::string>()] = g;
    std::vector<std::string> order;
    if (j.contains("order"))
        order = j["order"].get<std::vector<std::string>>();
    else
        for (const auto& g : j.at("generators")) order.push_back(g.at("name").get<std::string>());
    if (order.size() != by_name.size()) throw AlgebraError("order must list every generator once");
    for (const auto& n : order) {
        auto it = by_name.find(n);
        if (it == by_name.end()) throw AlgebraError("order names unknown generator " + n);
        int w = it->second.value("weight", 1);
        if (it->second.contains("inverse_of"))
            b.inverse(n, it->second["inverse_of"].get<std::string>(), w);
        else
            b.gen(n, w);
    }
    for (const auto& r : j.value("relations", nlohmann::json::array()))
        b.rule(r.at("lhs").get<std::string>(), r.at("rhs").get<std::string>());
    if (j.contains("star")) {
        std::map<std::string, std::string> img;
        for (const auto& s : j["star"]) img[s.at("gen").get<std::string>()] = s.at("image").get<std::string>();
        std::vector<std::string> imgs;
        for (const auto& n : order) {
            if (!img.count(n)) throw AlgebraError("star misses generator " + n);
            imgs.push_back(img[n]);
        }
        b.star(imgs);
    }
    return b.build();
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["name"] = p.name();
    j["generators"] = nlohmann::json::array();
    j["order"] = nlohmann::json::array();
    for (const auto& g : p.gens()) {
        nlohmann::json gj{{"name", g.name}};
        if (g.weight != 1) gj["weight"] = g.weight;
        if (g.inverse_of >= 0) gj["inverse_of"] = p.gens()[static_cast<std::size_t>(g.inverse_of)].name;
        j["generators"].push_back(gj);
        j["order"].push_back(g.name);
    }
    j["relations"] = nlohmann::json::array();
    for (const auto& r : p.rules()) {
        // cancellation rules of inverse pairs are implied by inverse_of
        bool implied = false;
        if (r.lhs.size() == 2 && r.rhs == Element(1)) {
            const auto& g0 = p.gens()[static_cast<std::size_t>(letter_at(r.lhs, 0))];
            const auto& g1 = p.gens()[static_cast<std::size_t>(letter_at(r.lhs, 1))];
            implied = g0.inverse_of == letter_at(r.lhs, 1) || g1.inverse_of == letter_at(r.lhs, 0);
        }
        if (implied) continue;
        j["relations"].push_back({{"lhs", word_str(r.lhs, p)}, {"rhs", element_str(r.rhs, p)}});
    }
    if (p.star()) {
        j["star"] = nlohmann::json::array();
        for (int g = 0; g < p.ngens(); ++g)
            j["star"].push_back({{"gen", p.gens()[static_cast<std::size_t>(g)].name},
                                 {"image", element_str((*p.star())[static_cast<std::size_t>(g)], p)},
                                 {"anti", true}});
    }
    return j.dump(2);
}

}  // namespace qdeform
