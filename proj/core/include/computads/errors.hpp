#pragma once

#include <stdexcept>
#include <string>

namespace computads {

/* Base class for everything this library throws on purpose. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* A multiset or morphism mentions a label the relevant map has no entry for. */
struct UnmappedLabel : Error {
  explicit UnmappedLabel(const std::string& label)
      : Error("unmapped label: " + label), label(label) {}
  std::string label;
};

/* compose(psi, phi) with cod(phi) != dom(psi). */
struct NonComposable : Error {
  using Error::Error;
};

/* A parallel pair whose two morphisms do not share endpoints. */
struct IncompatibleParallelPair : Error {
  using Error::Error;
};

/* coeq_factor was handed a morphism that does not coequalize the pair. */
struct ConeConditionViolated : Error {
  using Error::Error;
};

/* The a-priori size of a map search exceeds the configured budget. */
struct SearchBudgetExceeded : Error {
  using Error::Error;
};

/* A brute-force oracle would need more work than its budget allows. */
struct OracleBudgetExceeded : Error {
  using Error::Error;
};

/* Raised when a result that is supposed to hold by construction does not;
   reaching this means a bug or a deliberately corrupted input structure. */
struct InternalInvariantViolation : Error {
  using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalInvariantViolation(what);
}

}  // namespace computads
