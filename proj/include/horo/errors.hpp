#pragma once

#include <stdexcept>
#include <string>

namespace horo {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HORO_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

HORO_DEFINE_ERROR(DimensionMismatch);
HORO_DEFINE_ERROR(DegenerateBasis);
HORO_DEFINE_ERROR(NotInvolution);
HORO_DEFINE_ERROR(NotStable);
HORO_DEFINE_ERROR(NotFixed);
HORO_DEFINE_ERROR(NotCentral);
HORO_DEFINE_ERROR(NotSemisimple);
HORO_DEFINE_ERROR(InvalidType);
HORO_DEFINE_ERROR(IndexError);
HORO_DEFINE_ERROR(OrthogonalityViolated);
HORO_DEFINE_ERROR(GroupMismatch);
HORO_DEFINE_ERROR(NotAColor);
HORO_DEFINE_ERROR(InvalidFan);
HORO_DEFINE_ERROR(UnknownLabel);
HORO_DEFINE_ERROR(ParseError);
HORO_DEFINE_ERROR(InternalError);

#undef HORO_DEFINE_ERROR

}  // namespace horo
