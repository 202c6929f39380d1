#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

// Base of every exception thrown by the library. Subclasses name the
// failure; callers that only care about "domain error vs. everything
// else" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RIGIDITY_DEFINE_ERROR(Name)                                  \
  class Name : public ::rigidity::Error {                            \
   public:                                                           \
    explicit Name(const std::string& what) : ::rigidity::Error(what) {} \
  }

}  // namespace rigidity
