#pragma once

#include <stdexcept>
#include <string>

namespace borwein {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by exact_div when the divisor does not divide the dividend.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, std::string leading_term)
      : Error(what), leading_term_(std::move(leading_term)) {}

  // Leading term of the nonzero remainder, rendered as text.
  const std::string& leading_term() const noexcept { return leading_term_; }

 private:
  std::string leading_term_;
};

class NonInvertiblePoint : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class NonIntegralExponent : public Error {
 public:
  using Error::Error;
};

// A multisum that must reduce to a Laurent polynomial left a remainder.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class DegenerateSampling : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace borwein
