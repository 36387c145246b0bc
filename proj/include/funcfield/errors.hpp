#pragma once

#include <stdexcept>
#include <string>

namespace funcfield {

// Base class for every error the library throws on bad inputs or
// violated preconditions.  Internal invariant failures use logic_error.
class ff_error : public std::runtime_error {
public:
  explicit ff_error(const std::string& msg) : std::runtime_error(msg) {}
};

class zero_denominator_error : public ff_error {
public:
  zero_denominator_error() : ff_error("denominator is the zero polynomial") {}
};

class division_by_zero_error : public ff_error {
public:
  division_by_zero_error() : ff_error("division by the zero function") {}
};

class zero_function_error : public ff_error {
public:
  explicit zero_function_error(const std::string& what)
      : ff_error(what + " is undefined for the zero function") {}
};

class zero_input_error : public ff_error {
public:
  zero_input_error() : ff_error("zero polynomial not allowed in input list") {}
};

class constant_input_error : public ff_error {
public:
  explicit constant_input_error(const std::string& msg) : ff_error(msg) {}
};

class dependence_error : public ff_error {
public:
  dependence_error()
      : ff_error("arguments are multiplicatively dependent") {}
};

class degeneracy_error : public ff_error {
public:
  explicit degeneracy_error(const std::string& msg) : ff_error(msg) {}
};

class invariant_error : public ff_error {
public:
  explicit invariant_error(const std::string& msg) : ff_error(msg) {}
};

// Parse errors carry a position (byte offset for single expressions;
// the problem-file parser rewrites them into line/column form).
class parse_error : public ff_error {
public:
  parse_error(const std::string& msg, std::size_t pos)
      : ff_error(msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Refusal to start an enumeration whose cost exceeds the configured ceiling.
class cost_limit_error : public ff_error {
public:
  explicit cost_limit_error(const std::string& msg) : ff_error(msg) {}
};

}  // namespace funcfield
