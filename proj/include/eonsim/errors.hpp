#pragma once

#include <stdexcept>
#include <string>

namespace eonsim {

// Malformed input text (topology files, trace CSVs, configs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a model invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simulator bug: double allocation, releasing a free slot, time going
// backwards. Never a modeled outcome.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eonsim
