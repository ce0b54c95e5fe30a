#pragma once

#include <stdexcept>
#include <string>

#include "qdeform/freealg.hpp"

namespace qdeform {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Grammar: sums of products of atoms; atoms are generator names, aliases,
// integers, q, s, [n], parenthesized sub-expressions; x^k for integer k
// (negative k or q^(n/2) only on scalars). '/' divides by a scalar.
// With p == nullptr only scalars are accepted.
Element parse_expression(const std::string& text, const Presentation* p);

// "a*d - (q - q^-1)*b*c"; round-trips through parse_expression.
std::string element_str(const Element& e, const Presentation& p, bool unicode = false);
std::string word_str(const Word& w, const Presentation& p, bool unicode = false);

// ASCII name -> pretty form (adag -> a†, alpha -> α, ...)
std::string pretty_name(const std::string& ascii);

}  // namespace qdeform
