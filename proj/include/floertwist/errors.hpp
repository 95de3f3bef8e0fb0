#pragma once

#include <stdexcept>
#include <string>

namespace floertwist {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematically impossible state: an internal identity that is guaranteed
// by theory failed on concrete data. Always indicates a bug or bad input.
struct ExactnessViolation : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

namespace local {
struct ZeroSection : Error {
    using Error::Error;
};
struct OnSigma : Error {
    using Error::Error;
};
struct NoSolution : Error {
    using Error::Error;
};
} // namespace local

namespace torus {
struct NonTransverse : Error {
    using Error::Error;
};
struct WidthTooLarge : Error {
    using Error::Error;
};
struct TriplePoint : Error {
    using Error::Error;
};
struct ConditionsUnsatisfiable : Error {
    using Error::Error;
};
} // namespace torus

} // namespace floertwist
