#include "qdeform/parse.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace qdeform {

namespace {

class Parser {
public:
    Parser(const std::string& t, const Presentation* p) : text_(t), p_(p) {}

    Element run() {
        Element e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits() {
        skip();
        std::size_t b = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (b == pos_) fail("expected an integer");
        return text_.substr(b, pos_ - b);
    }

    long small_int() {
        std::string d = digits();
        if (d.size() > 9) fail("integer too large here");
        return std::stol(d);
    }

    Element expr() {
        Element acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Element term() {
        Element acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (peek('/')) {
                std::size_t at = pos_;
                ++pos_;
                Element d = unary();
                QScalar c;
                if (!d.is_scalar(&c)) {
                    pos_ = at;
                    fail("division by a non-scalar");
                }
                if (c.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc *= c.inverse();
            } else {
                return acc;
            }
        }
    }

    Element unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Element power() {
        std::size_t at_start = (skip(), pos_);
        Element base = atom();
        if (!eat('^')) return base;
        bool neg = false;
        long num = 0, den = 1;
        if (eat('(')) {
            neg = eat('-');
            num = small_int();
            if (eat('/')) den = small_int();
            expect(')');
        } else {
            neg = eat('-');
            num = small_int();
        }
        if (neg) num = -num;
        QScalar c;
        bool scalar = base.is_scalar(&c);
        if (den != 1) {
            if (den != 2 || !scalar || c != QScalar::q()) {
                pos_ = at_start;
                fail("fractional exponents are allowed only as q^(n/2)");
            }
            return Element(QScalar::spow(static_cast<int>(num)));
        }
        if (scalar) {
            if (c.is_zero() && num < 0) fail("zero to a negative power");
            return Element(c.pow(static_cast<int>(num)));
        }
        if (num < 0) fail("negative power of a non-scalar");
        Element r(1);
        for (long i = 0; i < num; ++i) r = r * base;
        return r;
    }

    Element atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return Element(QScalar(mpq_class(digits())));
        }
        if (ch == '[') {
            ++pos_;
            bool neg = eat('-');
            long n = small_int();
            expect(']');
            return Element(qnum(neg ? -n : n));
        }
        if (ch == '(') {
            ++pos_;
            Element e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t b = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string id = text_.substr(b, pos_ - b);
            if (p_) {
                int g = p_->index(id);
                if (g >= 0) return Element::gen(g);
                auto it = p_->aliases().find(id);
                if (it != p_->aliases().end()) return it->second;
            }
            if (id == "q") return Element(QScalar::q());
            if (id == "s") return Element(QScalar::s());
            pos_ = b;
            if (!p_) fail("unknown symbol '" + id + "' in a scalar expression");
            fail("unknown generator '" + id + "' for " + p_->name());
        }
        fail(std::string("unexpected '") + ch + "'");
    }

    const std::string& text_;
    const Presentation* p_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const std::string& text, const Presentation* p) { return Parser(text, p).run(); }

QScalar parse_qscalar(const std::string& text) {
    Element e = parse_expression(text, nullptr);
    QScalar c;
    e.is_scalar(&c);
    return c;
}

std::string pretty_name(const std::string& ascii) {
    static const std::vector<std::pair<std::string, std::string>> subs = {
        {"alpha", "α"}, {"beta", "β"}, {"gamma", "γ"}, {"delta", "δ"}, {"xi", "ξ"},
        {"Xp", "X₊"},   {"Xm", "X₋"},  {"Kp", "K₊"},   {"Km", "K₋"},   {"Dinv", "D⁻¹"},
        {"dag", "†"},   {"inv", "⁻¹"}, {"Dq", "D"},
    };
    std::string out;
    std::size_t i = 0;
    while (i < ascii.size()) {
        bool hit = false;
        for (const auto& [from, to] : subs) {
            if (ascii.compare(i, from.size(), from) == 0) {
                out += to;
                i += from.size();
                hit = true;
                break;
            }
        }
        if (hit) continue;
        char c = ascii[i++];
        if (c >= '0' && c <= '9') {
            static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
            out += sub[c - '0'];
        } else {
            out += c;
        }
    }
    return out;
}

std::string word_str(const Word& w, const Presentation& p, bool unicode) {
    if (w.empty()) return "1";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) out << (unicode ? "·" : "*");
        first = false;
        const std::string& nm = p.gens()[static_cast<std::size_t>(letter_at(w, i))].name;
        out << (unicode ? pretty_name(nm) : nm);
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

std::string element_str(const Element& e, const Presentation& p, bool unicode) {
    if (e.is_zero()) return "0";
    QScalar only;
    if (e.is_scalar(&only)) return only.str();
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        bool neg = c.leads_negative();
        QScalar mag = neg ? -c : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        long iv = 0;
        bool integer = mag.is_integer(&iv);
        if (w.empty()) {
            out << (integer ? mag.str() : "(" + mag.str() + ")");
            continue;
        }
        if (!(integer && iv == 1)) out << (integer ? mag.str() : "(" + mag.str() + ")") << (unicode ? "·" : "*");
        out << word_str(w, p, unicode);
    }
    return out.str();
}

}  // namespace qdeform
