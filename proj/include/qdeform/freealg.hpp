#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdeform/qscalar.hpp"

namespace qdeform {

// A word is a string of generator indices (one char per letter).
using Word = std::string;

inline Word letter(int g) { return Word(1, static_cast<char>(g)); }
inline int letter_at(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

// length first, then lexicographic on generator index
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto x = static_cast<unsigned char>(a[i]);
            auto y = static_cast<unsigned char>(b[i]);
            if (x != y) return x < y;
        }
        return false;
    }
};

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Element {
public:
    using Terms = std::map<Word, QScalar, DegLexLess>;

    Element() = default;
    Element(const QScalar& c);  // NOLINT(google-explicit-constructor)
    Element(long c) : Element(QScalar(c)) {}  // NOLINT
    static Element word(const Word& w, const QScalar& c = 1);
    static Element gen(int g) { return word(letter(g)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    QScalar coeff(const Word& w) const;
    std::size_t degree() const;
    bool is_scalar(QScalar* c = nullptr) const;

    void add(const Word& w, const QScalar& c);
    void add(const Element& e, const QScalar& c = 1);

    Element operator-() const;
    Element& operator+=(const Element& o) { add(o); return *this; }
    Element& operator-=(const Element& o) { add(o, QScalar(-1)); return *this; }
    Element& operator*=(const QScalar& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const QScalar& c) { return a *= c; }
    friend Element operator*(const QScalar& c, Element a) { return a *= c; }
    // free (concatenation) product, no normalization
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // reverse every word (used by antihomomorphisms)
    Element reversed() const;

private:
    Terms terms_;
};

struct GeneratorSymbol {
    std::string name;
    int weight = 1;
    int inverse_of = -1;  // index of the generator this one inverts
};

struct Rule {
    Word lhs;
    Element rhs;
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

class Presentation {
public:
    static constexpr long kStepBudget = 1000000;

    Presentation(std::string name, std::vector<GeneratorSymbol> gens);

    const std::string& name() const { return name_; }
    const std::vector<GeneratorSymbol>& gens() const { return gens_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    int index(const std::string& gen_name) const;  // -1 when absent
    int require(const std::string& gen_name) const;
    const std::vector<Rule>& rules() const { return rules_; }
    const std::map<std::string, Element>& aliases() const { return aliases_; }
    const std::string& note() const { return note_; }

    // construction (before the presentation is shared)
    void add_rule(Word lhs, Element rhs);
    void add_alias(const std::string& name, Element value) { aliases_[name] = std::move(value); }
    void set_star(std::vector<Element> images) { star_ = std::move(images); }
    void set_note(std::string n) { note_ = std::move(n); }
    const std::optional<std::vector<Element>>& star() const { return star_; }

    // weighted degree, then lexicographic in generator order
    bool word_less(const Word& a, const Word& b) const;
    int weight(const Word& w) const;
    bool rule_oriented(const Rule& r) const;

    // leftmost match: returns rule index and position, or -1
    int find_match(const Word& w, std::size_t* pos) const;
    bool is_normal(const Word& w) const;

    Element normalize(const Element& e) const;
    Element normal_form(const Word& w) const;
    Element product(const Element& a, const Element& b) const { return normalize(a * b); }
    Element commutator(const Element& a, const Element& b) const;
    bool is_central(const Element& e) const;

    std::vector<Word> normal_words(std::size_t max_len) const;
    std::string word_str(const Word& w) const;

private:
    Element nf_rec(const Word& w, long& steps) const;

    std::string name_;
    std::vector<GeneratorSymbol> gens_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_first_;
    std::map<std::string, Element> aliases_;
    std::optional<std::vector<Element>> star_;
    std::string note_;

    mutable std::mutex cache_mu_;
    mutable std::unordered_map<Word, Element> cache_;
};

// Linear span of elements, kept in echelon form keyed by the largest word.
class ElementSpan {
public:
    bool add(const Element& e);  // true when e was independent
    Element reduce(Element e) const;
    bool contains(const Element& e) const { return reduce(e).is_zero(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<Word, Element, DegLexLess> rows_;  // pivot -> row with pivot coefficient 1
};

struct Ambiguity {
    Word word;
    int rule1, rule2;
    Element difference;
};

// Local confluence audit over overlap and inclusion ambiguities.
std::vector<Ambiguity> check_overlaps(const Presentation& p, std::size_t degree_bound);

enum class MorphKind { homomorphism, antihomomorphism };

class MorphismMap {
public:
    MorphismMap(std::string name, PresPtr source, PresPtr target, std::vector<Element> images,
                MorphKind kind = MorphKind::homomorphism, bool conjugate = false);

    const std::string& name() const { return name_; }
    const PresPtr& source() const { return source_; }
    const PresPtr& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }
    MorphKind kind() const { return kind_; }
    bool conjugate() const { return conjugate_; }

    Element apply(const Element& e) const;

private:
    std::string name_;
    PresPtr source_, target_;
    std::vector<Element> images_;
    MorphKind kind_;
    bool conjugate_;
};

struct RelationCheck {
    std::string relation;  // printed "lhs - rhs" in source
    Element residual;      // in target
    bool ok() const { return residual.is_zero(); }
};

std::vector<RelationCheck> verify_morphism(const MorphismMap& m);

// identity map by generator name (every source generator must exist in target)
MorphismMap embedding(const PresPtr& source, const PresPtr& target);

}  // namespace qdeform
