#pragma once

#include <stdexcept>
#include <string>

namespace katalan {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KATALAN_ERROR_TYPE(Name)                                    \
  class Name : public error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : error(#Name ": " + what) {} \
  };

// Invalid-input family (CLI exit code 2).
KATALAN_ERROR_TYPE(InvalidWeight)
KATALAN_ERROR_TYPE(InvalidIdeal)
KATALAN_ERROR_TYPE(NotKBounded)
KATALAN_ERROR_TYPE(NotACore)
KATALAN_ERROR_TYPE(NotSamePath)
KATALAN_ERROR_TYPE(MismatchedRank)
KATALAN_ERROR_TYPE(MismatchedLength)
KATALAN_ERROR_TYPE(FullSupport)
KATALAN_ERROR_TYPE(ParseError)

// Linear algebra outcomes of basis expansion.
KATALAN_ERROR_TYPE(NotInSpan)
KATALAN_ERROR_TYPE(NonUnique)
KATALAN_ERROR_TYPE(NonIntegral)

// Resource caps (CLI exit code 3).
KATALAN_ERROR_TYPE(LimitExceeded)

#undef KATALAN_ERROR_TYPE

}  // namespace katalan
