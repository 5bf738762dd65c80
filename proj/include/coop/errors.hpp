#ifndef COOP_ERRORS_HPP
#define COOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coop {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Table size does not match 2^n.
struct LengthMismatch : Error {
    using Error::Error;
};

/// The empty coalition was assigned a nonzero worth.
struct NonzeroEmptyCoalition : Error {
    using Error::Error;
};

/// Player count outside the supported dense-table range [1, 20].
struct SizeLimitExceeded : Error {
    using Error::Error;
};

/// Two coalition arguments that must be disjoint overlap.
struct OverlappingArguments : Error {
    using Error::Error;
};

/// Restriction to the empty coalition requested.
struct EmptyRestriction : Error {
    using Error::Error;
};

/// A coalition refers to players outside the game's universe.
struct InvalidCoalition : Error {
    using Error::Error;
};

/// Exhaustive verification requested on a game too large to enumerate.
struct InstanceTooLarge : Error {
    using Error::Error;
};

} // namespace coop

#endif // COOP_ERRORS_HPP
