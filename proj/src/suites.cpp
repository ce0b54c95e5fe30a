#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qdeform/catalog.hpp"
#include "qdeform/fockrep.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/report.hpp"
#include "qdeform/rmat.hpp"
#include "qdeform/structmaps.hpp"

namespace qdeform {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        default:
            return "info";
    }
}

bool Report::ok() const {
    return std::none_of(items.begin(), items.end(), [](const ReportItem& i) { return i.status == Status::fail; });
}

void Report::add(const CheckItem& c) {
    items.push_back({c.id, c.info ? Status::info : c.ok ? Status::pass : Status::fail, c.residual, std::nullopt, c.notes});
}

namespace {
std::string num_str(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}
}  // namespace

void Report::add_number(const std::string& id, double value, bool pass, std::string notes) {
    items.push_back({id, pass ? Status::pass : Status::fail, num_str(value), value, std::move(notes)});
}

void Report::add_info(const std::string& id, std::string residual, std::string notes) {
    items.push_back({id, Status::info, std::move(residual), std::nullopt, std::move(notes)});
}

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["toolchain"] = {{"version", kVersion}, {"q0", r.opts.q0}, {"dim", r.opts.dim}};
    nlohmann::json items = nlohmann::json::array();
    for (const auto& i : r.items) {
        nlohmann::json x;
        x["id"] = i.id;
        x["status"] = status_name(i.status);
        if (i.value)
            x["residual"] = *i.value;
        else
            x["residual"] = i.residual;
        x["notes"] = i.notes;
        items.push_back(x);
    }
    j["items"] = items;
    return j.dump(2);
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    int pass = 0, fail = 0, info = 0;
    for (const auto& i : r.items) {
        os << status_name(i.status) << "  " << i.id;
        if (!i.residual.empty() && i.residual != "0") os << "  residual " << i.residual;
        if (!i.notes.empty()) os << "  (" << i.notes << ")";
        os << "\n";
        (i.status == Status::pass ? pass : i.status == Status::fail ? fail : info)++;
    }
    os << r.suite << ": " << pass << " pass, " << fail << " fail, " << info << " info\n";
    return os.str();
}

namespace {

using Suite = void (*)(Report&);

std::string ideal_residual(const IdealComparison& c) {
    std::string s;
    for (const auto& x : c.generated_not_reducing) s += (s.empty() ? "" : "; ") + ("not reducing: " + x);
    for (const auto& x : c.rules_outside_span) s += (s.empty() ? "" : "; ") + ("outside span: " + x);
    return s.empty() ? "0" : s;
}

void ideal_item(Report& r, const std::string& id, const IdealComparison& c, const std::string& notes) {
    r.items.push_back({id, c.ok() ? Status::pass : Status::fail, ideal_residual(c), std::nullopt,
                       notes + "; generated rank " + std::to_string(c.generated_rank)});
}

void matrix_zero_item(Report& r, const std::string& id, const QMatrix& m, const std::string& notes) {
    int bad = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) bad += !m.at(i, j).is_zero();
    r.items.push_back({id, bad ? Status::fail : Status::pass, bad ? std::to_string(bad) + " nonzero entries" : "0",
                       std::nullopt, notes});
}

void suite_yangbaxter(Report& r) {
    auto c = standard_constants();
    matrix_zero_item(r, "yangbaxter/R", yang_baxter_residual(c.R), "R12 R13 R23 - R23 R13 R12, exact");
    matrix_zero_item(r, "yangbaxter/Rplus", yang_baxter_residual(c.Rplus), "R+ = s^-1 P R P");
    matrix_zero_item(r, "yangbaxter/Rminus", yang_baxter_residual(c.Rminus), "R- = s R^-1");
    matrix_zero_item(r, "yangbaxter/R(q^2)", yang_baxter_residual(r_matrix(QScalar::q() * QScalar::q())), "");
}

void suite_hecke(Report& r) {
    auto c = standard_constants();
    matrix_zero_item(r, "hecke/Rhat", hecke_residual(c.Rhat), "(I - q^-1 Rhat)(I + q Rhat)");
    matrix_zero_item(r, "hecke/Rhat-quadratic", c.Rhat * c.Rhat - QScalar::lambda() * c.Rhat - QMatrix::identity(4),
                     "Rhat^2 = lambda Rhat + 1");
}

void suite_rtt(Report& r) {
    PresPtr gl = build_presentation("glq2");
    auto c = standard_constants();
    ideal_item(r, "rtt/glq2", compare_ideal(rtt_relations(c.R, symbol_matrix(*gl, {"a", "b", "c", "d"})), *gl),
               "R T1 T2 = T2 T1 R against the glq2 rules");
    ideal_item(r, "rtt/Lpm-slq2", compare_lpm_slq2(), "L+- matrices against slq2, modulo k kinv = 1");
    PresPtr pl = build_presentation("qplane");
    ideal_item(r, "rtt/qplane",
               compare_ideal(plane_relations(c.Rhat, {-QScalar::q(), 1}, Element::gen(0), Element::gen(1)), *pl),
               "(Rhat - q)(X (x) X) = 0");
    PresPtr gr = build_presentation("grassmann_plane");
    auto grel = plane_relations(c.Rhat, {QScalar::q().inverse(), 1}, Element::gen(0), Element::gen(1));
    ideal_item(r, "rtt/grassmann", compare_ideal(grel, *gr), "(Rhat + q^-1)(xi (x) xi) = 0");
    PresPtr grp = build_presentation("grassmann_plane_printed");
    auto cp = compare_ideal(grel, *grp);
    r.add_info("rtt/grassmann-printed", ideal_residual(cp),
               cp.ok() ? "printed ordering agrees" : "printed xi1 xi2 = q xi2 xi1 disagrees with the generated relations");
    r.add_info("rtt/pairing", "Lp11(a) = " + pairing("Lp11", "a").str() + ", Lp12(c) = " + pairing("Lp12", "c").str(),
               "L+- against T words via R entries");
}

void suite_re(Report& r) {
    PresPtr rea = build_presentation("rea2");
    auto c = standard_constants();
    ideal_item(r, "re/rea2",
               compare_ideal(re_relations(c.R, symbol_matrix(*rea, {"alpha", "beta", "gamma", "delta"})), *rea),
               "R K1 R^t1 K2 = K2 R^t1 K1 R against the rea2 rules");
    for (const auto& [name, k] : std::vector<std::pair<std::string, QMatrix>>{
             {"eps_q", c.eps_q}, {"K1(1,0,1)", k1_matrix(1, 0, 1)}, {"K1(2,3,5)", k1_matrix(2, 3, 5)}}) {
        int bad = 0;
        for (const auto& e : re_relations(c.R, EMatrix::from(k))) bad += !e.is_zero();
        r.items.push_back({"re/constant/" + name, bad ? Status::fail : Status::pass,
                           bad ? std::to_string(bad) + " of 16 entries nonzero" : "0", std::nullopt, "constant solution"});
    }
    // T eps T^t = T^t eps T = eps Dq
    PresPtr gl = build_presentation("glq2");
    EMatrix t = symbol_matrix(*gl, {"a", "b", "c", "d"});
    EMatrix e = EMatrix::from(c.eps_q);
    Element dq = gl->aliases().at("Dq");
    Element resid;
    EMatrix m1 = (t * e * t.transpose()).normalized(*gl), m2 = (t.transpose() * e * t).normalized(*gl);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            resid += gl->normalize(m1.at(i, j) - Element(c.eps_q.at(i, j)) * dq);
            resid += gl->normalize(m2.at(i, j) - Element(c.eps_q.at(i, j)) * dq);
        }
    r.items.push_back({"re/T-eps-Tt", resid.is_zero() ? Status::pass : Status::fail,
                       resid.is_zero() ? "0" : element_str(resid, *gl), std::nullopt, "T eps T^t = T^t eps T = eps Dq"});
}

void suite_center(Report& r) {
    std::vector<std::pair<std::string, std::string>> cases = {
        {"glq2", "Dq"},   {"slq2", "c2"},       {"osc_q", "cq"},   {"osc_q_qinv", "cq"}, {"rea2", "c1"},
        {"rea2", "c2"},   {"osc_alpha", "zeta"}, {"suq11", "casimir"}};
    for (const auto& [alg, name] : cases) {
        PresPtr p = build_presentation(alg);
        const Element& e = p->aliases().at(name);
        std::string bad;
        for (int g = 0; g < p->ngens(); ++g) {
            Element c = p->commutator(e, Element::gen(g));
            if (!c.is_zero() && bad.empty()) bad = "[" + name + ", " + p->gens()[static_cast<std::size_t>(g)].name + "] = " + element_str(c, *p);
        }
        r.items.push_back({"center/" + alg + "/" + name, bad.empty() ? Status::pass : Status::fail, bad.empty() ? "0" : bad,
                           std::nullopt, "commutators with every generator"});
    }
}

void suite_confluence(Report& r) {
    for (const auto& n : catalog_names()) {
        auto amb = check_overlaps(*build_presentation(n), 4);
        std::string res = amb.empty() ? "0" : std::to_string(amb.size()) + " ambiguities";
        r.items.push_back(
            {"confluence/" + n, amb.empty() ? Status::pass : Status::fail, res, std::nullopt, "overlaps up to degree 4"});
    }
}

void suite_hopf(Report& r) {
    for (const auto& n : hopf_names())
        for (const auto& c : check_hopf(hopf_structure(n), r.opts.degree)) {
            CheckItem x = c;
            x.id = "hopf/" + c.id;
            r.add(x);
        }
    int e = resolve_slq2_antipode_exponent();
    r.items.push_back({"hopf/slq2/antipode-exponent", e == 1 ? Status::pass : Status::fail, std::to_string(e),
                       std::nullopt, "S(X+-) = -q^(-+e) X+-; the antipode axiom selects e"});
}

void suite_comodule(Report& r) {
    for (const auto& n : comodule_names())
        for (const auto& c : check_comodule(comodule(n), r.opts.degree)) {
            CheckItem x = c;
            x.id = "comodule/" + c.id;
            r.add(x);
        }
    for (const auto& c : check_comodule(comodule("plane_transposed"), r.opts.degree)) {
        CheckItem x = c;
        x.id = "comodule/" + c.id;
        x.info = true;
        x.notes = (c.ok ? "holds" : "fails") + std::string(" for the coaction by T^t (reported only)");
        r.add(x);
    }
}

void suite_gauss(Report& r) {
    for (const auto& c : verify_gauss()) r.add(c);
}

void suite_bosonize(Report& r) {
    auto entries = bosonization_catalog();
    std::vector<std::future<EntryValidation>> fut;
    for (const auto& e : entries)
        fut.push_back(std::async(std::launch::async, [&e, &r] { return validate_entry(e, r.opts.q0, r.opts.dim); }));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        EntryValidation v = fut[i].get();
        std::string notes = mode_name(entries[i].mode);
        if (!v.printed_status.empty()) notes += "; " + v.printed_status;
        for (const auto& n : v.notes) notes += "; " + n;
        ReportItem it{"bosonize/" + v.name, v.ok ? Status::pass : Status::fail, "", std::nullopt, notes};
        if (v.numeric_residual >= 0) {
            it.value = v.numeric_residual;
            it.residual = num_str(v.numeric_residual);
            if (v.symbolic_residual != "-") it.notes = "symbolic residual " + v.symbolic_residual + "; " + it.notes;
        } else {
            it.residual = v.symbolic_residual;
        }
        r.items.push_back(it);
    }
    for (const char* f : {"Uq2", "Uq11"})
        for (const auto& c : check_star(star_map(f))) {
            CheckItem x = c;
            x.id = "bosonize/real-form/" + c.id;
            r.add(x);
        }
}

void suite_fock(Report& r) {
    const double q0 = r.opts.q0;
    const int dim = r.opts.dim;
    for (const char* alg : {"osc_q", "osc_q_qinv", "osc_q_half", "osc_alpha", "osc_alpha_k", "osc_A", "osc_A_q2"}) {
        FockRep rep = fock_rep(alg, dim, q0);
        PresPtr p = build_presentation(alg);
        auto res = rep_residual(rep, relations_of(*p), *p);
        r.add_number(std::string("fock/") + alg + "/relations", res.max, res.max < 1e-10 && res.columns > 0,
                     std::to_string(res.columns) + " safe columns");
    }
    {
        FockRep rep = fock_rep("osc_q", dim, q0);
        PresPtr p = build_presentation("osc_q");
        std::vector<Element> extra = {parse_expression("adag*a - (k - kinv)/(q - q^-1)", p.get()),
                                      parse_expression("a*adag - (q*k - (q^-1)*kinv)/(q - q^-1)", p.get())};
        auto res = rep_residual(rep, extra, *p);
        r.add_number("fock/osc_q/number-relations", res.max, res.max < 1e-10 && res.columns > 0,
                     "adag a = [N], a adag = [N+1]");
        FockRep broken = rep;
        broken.set("adag", 2.0 * rep.at("adag"));
        auto b = rep_residual(broken, relations_of(*p), *p);
        r.add_number("fock/osc_q/broken-control", b.max, b.max > 0.1, "adag scaled by 2 must not pass");
        SpMat d = rep.at("adag") - SpMat(rep.at("a").adjoint());
        r.add_number("fock/osc_q/hermiticity", d.norm(), d.norm() == 0.0, "adag = adjoint(a) at real q0");
    }
    for (const char* alg : {"osc_q", "osc_q_qinv", "osc_alpha", "osc_alpha_k"}) {
        for (const auto& [n, v] : central_values(fock_rep(alg, dim, q0)))
            r.add_number(std::string("fock/") + alg + "/" + n, std::abs(v), std::abs(v) < 1e-12, "center on the safe block");
    }
    {
        FockRep rep = fock_rep("osc_q", dim, q0, "rescaled");
        PresPtr p = build_presentation("osc_q");
        auto res = rep_residual(rep, relations_of(*p), *p);
        r.add_number("fock/rescaled/float", res.max, res.max < 1e-10, "a|n> = [n]|n-1>, adag|n> = |n+1>");
        int defects = exact_rescaled_defects(dim);
        r.items.push_back({"fock/rescaled/exact", defects == 0 ? Status::pass : Status::fail, std::to_string(defects),
                           std::nullopt, "nonzero entries left over Q(s)"});
    }
    if (q0 > 0 && q0 < 1) {
        PresPtr p = build_presentation("osc_A");
        double w9 = 0;
        for (int w : {3, 9}) {
            FockRep rep = singular_rep(w, q0);
            auto res = rep_residual(rep, relations_of(*p), *p);
            if (w == 9) {
                w9 = res.max;
                r.add_number("fock/singular/relations", res.max, res.max < 1e-12,
                             std::to_string(res.columns) + " interior columns");
                auto cv = central_values(rep).at("AdagA");
                double beta = std::pow(q0, -0.5) - std::pow(q0, 0.5);
                double expect = 1.0 / (beta * std::sqrt(q0));
                r.add_number("fock/singular/AdagA", std::abs(cv - expect), std::abs(cv - expect) < 1e-12,
                             "A+A = " + num_str(cv.real()) + " = beta^-1 q^-1/2 on every interior state");
            } else {
                r.add_info("fock/singular/window-3", num_str(res.max), "same action on a smaller window");
            }
        }
        (void)w9;
    } else {
        r.add_info("fock/singular", "-", "needs q0 in (0, 1)");
    }
    {
        double b = classical_bridge_defect(dim, q0);
        r.add_number("fock/classical-bridge", b, b < 1e-12, "sqrt([N]/N) b+ against adag");
        FockRep al = fock_rep("osc_alpha", dim, q0), oq = fock_rep("osc_q", dim, q0);
        SpMat d1 = al.matrix("kh*alpha") - oq.at("a");
        SpMat d2 = al.matrix("alphadag*kh") - oq.at("adag");
        double t = std::max(d1.norm(), d2.norm());
        r.add_number("fock/alpha-transport", t, t < 1e-12, "q^(N/2) alpha against the osc_q matrices");
    }
    {
        const int sd = 8;
        auto blocks = schwinger_decompose(sd, q0);
        double worst = 0, scal = 0;
        bool dims = true;
        for (const auto& b : blocks) {
            dims = dims && b.dim == static_cast<int>(std::lround(2 * b.spin + 1));
            worst = std::max(worst, std::abs(b.casimir - b.expected));
            scal = std::max(scal, b.scalar_defect);
        }
        r.items.push_back({"fock/schwinger/dims", dims ? Status::pass : Status::fail, dims ? "0" : "mismatch",
                           std::nullopt, std::to_string(blocks.size()) + " blocks, dims 2n+1, D = 8"});
        r.add_number("fock/schwinger/casimir", worst, worst < 1e-10, "c2 on block n against [n][n+1]");
        r.add_number("fock/schwinger/scalar", scal, scal < 1e-10, "c2 is a multiple of the identity per block");
    }
}

void suite_contraction(Report& r) {
    auto rows = contraction_probe(r.opts.contraction_js, r.opts.contraction_q0);
    bool mono = true, quad = true, gap_down = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& x = rows[i];
        r.add_info("contraction/j=" + std::to_string(x.j), num_str(x.residual),
                   "eps = " + num_str(x.epsilon) + ", central gap " + num_str(x.central_gap) + ", printed X+ form " +
                       num_str(x.printed_residual));
        if (i > 0) {
            mono = mono && x.residual < rows[i - 1].residual;
            gap_down = gap_down && x.central_gap < rows[i - 1].central_gap;
        }
        quad = quad && std::abs(x.residual_2eps / x.residual - 4.0) < 1e-9;
    }
    r.items.push_back({"contraction/monotone", mono ? Status::pass : Status::fail, num_str(rows.back().residual),
                       std::nullopt, "residual of [alpha, alpha+] - q^-2N decreases along j, eps = q0^j"});
    r.items.push_back({"contraction/eps-scaling", quad ? Status::pass : Status::fail, "", std::nullopt,
                       "doubling eps multiplies the residual by 4"});
    r.add_info("contraction/central-gap", num_str(rows.back().central_gap),
               gap_down ? "eps^2 lambda c2 - (zeta + q^2/(q^2 - 1)) decreases along j" : "central gap not monotone");
    r.add_info("contraction/printed", num_str(rows.back().printed_residual), "alpha taken along X+ does not decay");
}

void suite_quotient(Report& r) {
    for (const char* w : {"identity", "eps_q", "K1", "K1_generic"})
        for (const auto& c : rea_transport(w)) r.add(c);
    auto q = quotient_c1_check();
    std::string ident;
    for (const auto& [a, b] : q.assignment) ident += (ident.empty() ? "" : ", ") + a + " = " + b;
    r.items.push_back({"quotient/c1", q.found ? Status::pass : Status::fail, q.found ? "0" : "no identification",
                       std::nullopt, q.found ? "GL_{q^2}(2) with " + ident + "; " + q.summary : q.summary});
    for (const auto& [rel, st] : q.residuals) r.add_info("quotient/c1/" + rel, st);
}

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> s = {
        {"yangbaxter", suite_yangbaxter}, {"hecke", suite_hecke},         {"rtt", suite_rtt},
        {"re", suite_re},                 {"center", suite_center},       {"confluence", suite_confluence},
        {"hopf", suite_hopf},             {"comodule", suite_comodule},   {"gauss", suite_gauss},
        {"bosonize", suite_bosonize},     {"fock", suite_fock},           {"contraction", suite_contraction},
        {"quotient", suite_quotient}};
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> n;
    for (const auto& [k, f] : suites()) n.push_back(k);
    return n;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
    Report out{name, opts, {}};
    if (name == "all") {
        std::vector<std::future<Report>> fut;
        for (const auto& [k, f] : suites()) fut.push_back(std::async(std::launch::async, [k = k, &opts] { return run_suite(k, opts); }));
        for (auto& f : fut) {
            Report r = f.get();
            out.items.insert(out.items.end(), r.items.begin(), r.items.end());
        }
        return out;
    }
    for (const auto& [k, f] : suites())
        if (k == name) {
            f(out);
            return out;
        }
    throw AlgebraError("unknown suite '" + name + "'");
}

}  // namespace qdeform
