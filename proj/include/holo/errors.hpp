#pragma once

#include <stdexcept>
#include <string>

namespace holo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstraintViolation : Error { using Error::Error; };
struct DegenerateAngle : Error { using Error::Error; };
struct UnrealizableShape : Error { using Error::Error; };
struct DisconnectedSpec : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct OverlappingFans : Error { using Error::Error; };
struct ApexCollision : Error { using Error::Error; };
struct HoleAbsent : Error { using Error::Error; };
struct BranchCutCrossing : Error { using Error::Error; };
struct NotRealizable : Error { using Error::Error; };
struct EmptyScene : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SpecError : Error { using Error::Error; };

}  // namespace holo
