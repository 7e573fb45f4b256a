#pragma once

#include <stdexcept>
#include <string>

namespace treelab {

// Base class for every validation or precondition failure raised by this
// library. Arithmetic overflow in the checked integer type surfaces as
// std::overflow_error instead (see exact.hpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input. `line` is 1-based for line-oriented formats,
// 0 when the format has no line structure.
struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                            : what),
          line(line_no) {}
};

// sigma does not refine the required partition.
struct RefinementError : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad user input.
struct StructureError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

// i and i+1 share a block of the tree's partition.
struct SameBlockError : Error {
    using Error::Error;
};

// Two partitions live on different ground sets.
struct GroundSetMismatch : Error {
    using Error::Error;
};

// Arguments are not comparable in refinement order as required.
struct OrderError : Error {
    using Error::Error;
};

// Requested enumeration exceeds the configured bound.
struct BoundError : Error {
    using Error::Error;
};

}  // namespace treelab
