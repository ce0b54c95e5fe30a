#include "qdeform/freealg.hpp"

#include <algorithm>
#include <set>

#include "qdeform/parse.hpp"

namespace qdeform {

// -------------------------------------------------------------------- Element

Element::Element(const QScalar& c) {
    if (!c.is_zero()) terms_.emplace(Word(), c);
}

Element Element::word(const Word& w, const QScalar& c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(w, c);
    return e;
}

QScalar Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
}

std::size_t Element::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

bool Element::is_scalar(QScalar* c) const {
    if (terms_.empty()) {
        if (c) *c = QScalar();
        return true;
    }
    if (terms_.size() != 1 || !terms_.begin()->first.empty()) return false;
    if (c) *c = terms_.begin()->second;
    return true;
}

void Element::add(const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::add(const Element& e, const QScalar& c) {
    if (c.is_zero()) return;
    bool unit = c.is_one();
    for (const auto& [w, x] : e.terms_) add(w, unit ? x : x * c);
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [w, x] : r.terms_) x = -x;
    return r;
}

Element& Element::operator*=(const QScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [u, x] : a.terms_)
        for (const auto& [v, y] : b.terms_) r.add(u + v, x * y);
    return r;
}

Element Element::reversed() const {
    Element r;
    for (const auto& [w, x] : terms_) r.add(Word(w.rbegin(), w.rend()), x);
    return r;
}

// --------------------------------------------------------------- Presentation

Presentation::Presentation(std::string name, std::vector<GeneratorSymbol> gens)
    : name_(std::move(name)), gens_(std::move(gens)), by_first_(gens_.size()) {
    if (gens_.size() > 250) throw AlgebraError("too many generators");
    std::set<std::string> seen;
    for (const auto& g : gens_)
        if (!seen.insert(g.name).second) throw AlgebraError("duplicate generator " + g.name);
}

int Presentation::index(const std::string& gen_name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == gen_name) return static_cast<int>(i);
    return -1;
}

int Presentation::require(const std::string& gen_name) const {
    int i = index(gen_name);
    if (i < 0) throw AlgebraError("presentation " + name_ + " has no generator " + gen_name);
    return i;
}

int Presentation::weight(const Word& w) const {
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += gens_[static_cast<std::size_t>(letter_at(w, i))].weight;
    return s;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
    });
}

bool Presentation::rule_oriented(const Rule& r) const {
    for (const auto& [w, c] : r.rhs.terms())
        if (!word_less(w, r.lhs)) return false;
    return true;
}

void Presentation::add_rule(Word lhs, Element rhs) {
    if (lhs.empty()) throw AlgebraError("empty rule lhs in " + name_);
    Rule r{std::move(lhs), std::move(rhs)};
    if (!rule_oriented(r))
        throw AlgebraError("rule " + word_str(r.lhs) + " -> " + element_str(r.rhs, *this) +
                           " is not decreasing in the monomial order of " + name_);
    by_first_[static_cast<std::size_t>(letter_at(r.lhs, 0))].push_back(static_cast<int>(rules_.size()));
    rules_.push_back(std::move(r));
    std::lock_guard<std::mutex> lk(cache_mu_);
    cache_.clear();
}

int Presentation::find_match(const Word& w, std::size_t* pos) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (int ri : by_first_[static_cast<std::size_t>(letter_at(w, i))]) {
            const Word& l = rules_[static_cast<std::size_t>(ri)].lhs;
            if (w.size() - i >= l.size() && w.compare(i, l.size(), l) == 0) {
                if (pos) *pos = i;
                return ri;
            }
        }
    }
    return -1;
}

bool Presentation::is_normal(const Word& w) const { return find_match(w, nullptr) < 0; }

Element Presentation::nf_rec(const Word& w, long& steps) const {
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    std::size_t pos = 0;
    int ri = find_match(w, &pos);
    Element result;
    if (ri < 0) {
        result = Element::word(w);
    } else {
        if (++steps > kStepBudget) throw AlgebraError("rewrite step budget exceeded in " + name_);
        const Rule& r = rules_[static_cast<std::size_t>(ri)];
        Word pre = w.substr(0, pos);
        Word suf = w.substr(pos + r.lhs.size());
        for (const auto& [t, c] : r.rhs.terms()) result.add(nf_rec(pre + t + suf, steps), c);
    }
    std::lock_guard<std::mutex> lk(cache_mu_);
    cache_.emplace(w, result);
    return result;
}

Element Presentation::normal_form(const Word& w) const {
    long steps = 0;
    return nf_rec(w, steps);
}

Element Presentation::normalize(const Element& e) const {
    long steps = 0;
    Element out;
    for (const auto& [w, c] : e.terms()) out.add(nf_rec(w, steps), c);
    return out;
}

Element Presentation::commutator(const Element& a, const Element& b) const {
    return normalize(a * b - b * a);
}

bool Presentation::is_central(const Element& e) const {
    for (int g = 0; g < ngens(); ++g)
        if (!commutator(e, Element::gen(g)).is_zero()) return false;
    return true;
}

std::vector<Word> Presentation::normal_words(std::size_t max_len) const {
    std::vector<Word> all{Word()};
    std::vector<Word> layer{Word()};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int g = 0; g < ngens(); ++g) {
                Word x = w + letter(g);
                if (is_normal(x)) next.push_back(x);
            }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return all;
}

std::string Presentation::word_str(const Word& w) const { return qdeform::word_str(w, *this); }

// --------------------------------------------------------------- ElementSpan

Element ElementSpan::reduce(Element e) const {
    Element out;
    while (!e.is_zero()) {
        auto it = std::prev(e.terms().end());
        Word w = it->first;
        QScalar c = it->second;
        auto row = rows_.find(w);
        if (row != rows_.end()) {
            e.add(row->second, -c);
        } else {
            out.add(w, c);
            e.add(w, -c);
        }
    }
    return out;
}

bool ElementSpan::add(const Element& e) {
    Element r = reduce(e);
    if (r.is_zero()) return false;
    auto it = std::prev(r.terms().end());
    Word pivot = it->first;
    QScalar inv = it->second.inverse();
    r *= inv;
    rows_.emplace(pivot, std::move(r));
    return true;
}

// ------------------------------------------------------------ overlap audit

std::vector<Ambiguity> check_overlaps(const Presentation& p, std::size_t degree_bound) {
    std::vector<Ambiguity> out;
    const auto& rules = p.rules();
    auto test = [&](const Word& w, int i, int j, const Element& r1, const Element& r2) {
        Element d = p.normalize(r1) - p.normalize(r2);
        if (!d.is_zero()) out.push_back({w, i, j, d});
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& li = rules[i].lhs;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& lj = rules[j].lhs;
            // overlap: suffix of li equals prefix of lj
            std::size_t kmax = std::min(li.size(), lj.size());
            for (std::size_t k = 1; k < kmax; ++k) {
                if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
                Word w = li + lj.substr(k);
                if (w.size() > degree_bound) continue;
                Element r1 = rules[i].rhs * Element::word(lj.substr(k));
                Element r2 = Element::word(li.substr(0, li.size() - k)) * rules[j].rhs;
                test(w, static_cast<int>(i), static_cast<int>(j), r1, r2);
            }
            // inclusion: lj inside li
            if (i == j || lj.size() > li.size() || li.size() > degree_bound) continue;
            if (lj.size() == li.size() && (li != lj || j < i)) continue;
            for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
                if (li.compare(pos, lj.size(), lj) != 0) continue;
                Element r2 = Element::word(li.substr(0, pos)) * rules[j].rhs *
                             Element::word(li.substr(pos + lj.size()));
                test(li, static_cast<int>(i), static_cast<int>(j), rules[i].rhs, r2);
            }
        }
    }
    return out;
}

// ----------------------------------------------------------------- morphisms

MorphismMap::MorphismMap(std::string name, PresPtr source, PresPtr target, std::vector<Element> images,
                         MorphKind kind, bool conjugate)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      kind_(kind),
      conjugate_(conjugate) {
    if (static_cast<int>(images_.size()) != source_->ngens())
        throw AlgebraError("morphism " + name_ + " must assign every source generator");
    for (const auto& img : images_)
        for (const auto& [w, c] : img.terms())
            for (std::size_t i = 0; i < w.size(); ++i)
                if (letter_at(w, i) >= target_->ngens())
                    throw AlgebraError("morphism " + name_ + " uses a letter outside the target");
}

Element MorphismMap::apply(const Element& e) const {
    // coefficients are real rational functions of real q, so conjugation is the identity
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element acc(c);
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::size_t idx = kind_ == MorphKind::antihomomorphism ? w.size() - 1 - k : k;
            acc = target_->normalize(acc * images_[static_cast<std::size_t>(letter_at(w, idx))]);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

std::vector<RelationCheck> verify_morphism(const MorphismMap& m) {
    std::vector<RelationCheck> out;
    const Presentation& s = *m.source();
    for (const auto& r : s.rules()) {
        Element rel = Element::word(r.lhs) - r.rhs;
        out.push_back({element_str(rel, s), m.apply(rel)});
    }
    return out;
}

MorphismMap embedding(const PresPtr& source, const PresPtr& target) {
    std::vector<Element> img;
    for (const auto& g : source->gens()) img.push_back(Element::gen(target->require(g.name)));
    return MorphismMap(source->name() + "->" + target->name(), source, target, std::move(img));
}

}  // namespace qdeform
