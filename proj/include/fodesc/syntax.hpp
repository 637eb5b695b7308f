#pragma once

#include <string>
#include <string_view>

#include "fodesc/formula.hpp"
#include "fodesc/structures.hpp"

namespace fodesc {

// Grammar (ASCII, whitespace insignificant):
//
//   formula  := unary
//   unary    := 'E' var '.' unary | 'A' var '.' unary | '!' unary | primary
//   primary  := '(' formula (('&' | '|') formula)* ')'   -- one connective per group
//             | Name '(' var ')' | var '=' var | var '!=' var
//   var      := 'x' digits            -- x1, x2, ...
//
// A quantifier binds the following unary formula only, so "Ax1. (a & b)"
// needs its parentheses. Chains "(a & b & c)" fold to the right. General
// negation is pushed to the atoms while parsing.
Formula parse(std::string_view text, const Vocabulary& vocab);

// Canonical text: binary connectives fully parenthesized, one space around
// operators. parse(print(f, v), v) == f.
std::string print(const Formula& f, const Vocabulary& vocab);

// Same, but predicates are printed as P1..Pk regardless of vocabulary.
std::string print(const Formula& f);

}  // namespace fodesc
