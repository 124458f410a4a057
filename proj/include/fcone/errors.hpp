#pragma once

#include <stdexcept>
#include <string>

namespace fcone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNumericalSemigroup : Error {
    using Error::Error;
};
struct AmbientMismatch : Error {
    using Error::Error;
};
struct NotFiniteColength : Error {
    using Error::Error;
};
struct NoStabilization : Error {
    using Error::Error;
};
struct ContainmentFailed : Error {
    using Error::Error;
};
struct FitUnstable : Error {
    using Error::Error;
};
struct NoReductionFound : Error {
    using Error::Error;
};
struct TruncationTooShort : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

/// Outcome of a bounded search for an index (r(I), r(m|I), ...).
/// A failed search never claims the index is infinite, only that it
/// exceeds the bound that was tried.
struct IndexResult {
    bool found = false;
    int value = -1;
    int bound = 0;

    static IndexResult at(int n) { return {true, n, n}; }
    static IndexResult not_up_to(int nmax) { return {false, -1, nmax}; }

    bool operator==(const IndexResult&) const = default;
};

inline std::string to_string(const IndexResult& r) {
    if (r.found) return "Found(" + std::to_string(r.value) + ")";
    return "NotFoundUpTo(" + std::to_string(r.bound) + ")";
}

}  // namespace fcone
