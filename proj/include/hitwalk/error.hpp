#pragma once

#include <stdexcept>
#include <string>

namespace hitwalk {

// Base class for every library error.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HITWALK_DEFINE_ERROR(Name)                            \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what) : Error(what) {}   \
  };

HITWALK_DEFINE_ERROR(DisconnectedGraph)
HITWALK_DEFINE_ERROR(IndexOutOfRange)
HITWALK_DEFINE_ERROR(DuplicateEdge)
HITWALK_DEFINE_ERROR(UnknownFamily)
HITWALK_DEFINE_ERROR(BadParams)
HITWALK_DEFINE_ERROR(NoConvergence)
HITWALK_DEFINE_ERROR(SingularMatrix)
HITWALK_DEFINE_ERROR(WalkLimitExceeded)
HITWALK_DEFINE_ERROR(NotRegular)
HITWALK_DEFINE_ERROR(UnknownLabel)
HITWALK_DEFINE_ERROR(DisconnectedRelation)
HITWALK_DEFINE_ERROR(InvalidInput)

#undef HITWALK_DEFINE_ERROR

}  // namespace hitwalk
