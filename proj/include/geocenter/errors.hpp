#pragma once

#include <stdexcept>
#include <string>

namespace geocenter {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct OutsideDomain : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct PathExplosion : Error {
    using Error::Error;
};
struct DegenerateFarthest : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct NotCanonical : Error {
    using Error::Error;
};
struct GeneralPositionViolated : Error {
    using Error::Error;
};
struct CombinatorialBudgetExceeded : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct NoProgress : Error {
    using Error::Error;
};

} // namespace geocenter
