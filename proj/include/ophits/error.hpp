#pragma once

#include <stdexcept>
#include <string>

namespace ophits {

/// Bad input data: unparsable files, schema or invariant violations in
/// loaded data, untrainable corpora. Callers map this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition. Indicates a bug, not bad data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace detail
}  // namespace ophits
