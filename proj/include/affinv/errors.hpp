#pragma once

#include <stdexcept>
#include <string>

namespace affinv {

// Base of every error the library throws on a violated precondition.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error { using Error::Error; };
struct InvalidWalk : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };
struct HostMismatch : Error { using Error::Error; };
struct NoSuchWalk : Error { using Error::Error; };
struct InconsistentInput : Error { using Error::Error; };
struct BoundsInverted : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

} // namespace affinv
