#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Rejected input: bad dimensions, non-SPD matrix, Randers covector too
/// large, unparsable expression, malformed config. The CLI maps this to
/// exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation left the admissible domain: zero factor component, metric
/// undefined at the point (sqrt of a non-positive value, division by a
/// zero jet), or the admissibility scalar vanishing. The CLI maps this
/// to exit code 3.
class inadmissible_error : public std::runtime_error {
 public:
  explicit inadmissible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finsler
