#pragma once

#include <stdexcept>
#include <string>

namespace o3lg {

// Malformed label, irrep or JSON input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computations disagree.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation not defined for this argument (e.g. element list of a Lie group).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVectorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace o3lg
