#pragma once

#include <string>

#include "funcfield/poly.hpp"
#include "funcfield/ratfunc.hpp"

namespace funcfield {

// Text grammar shared by the CLI and the problem-file parser.
//
//   poly    := [sign] term { sign term }
//   term    := coeff | coeff '*' xpart | xpart
//   xpart   := 'x' | 'x' '^' uint
//   coeff   := uint | uint '/' uint
//   ratfunc := poly | poly '/' '(' poly ')' | '(' poly ')' '/' '(' poly ')'
//
// Whitespace is insignificant.  Denominators are always parenthesized, which
// keeps them distinct from the a/b coefficient form.  parse errors carry the
// byte offset of the offending character.
Poly parse_poly(const std::string& text);
RatFunc parse_ratfunc(const std::string& text);

std::string to_string(const Rat& r);
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);

}  // namespace funcfield
