#pragma once

#include <stdexcept>
#include <string>

namespace rigor {

// Input exceeds the budget of an exhaustive backend.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or theorem hypothesis does not hold for the input.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized placement kept landing in a degenerate configuration.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rigor
