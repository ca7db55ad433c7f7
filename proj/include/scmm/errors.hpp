#pragma once

#include <stdexcept>
#include <string>

namespace scmm {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values with different ambient variable counts were combined.
struct ambient_mismatch : error {
    using error::error;
};

/// An operation that needs a nonzero (or proper) ideal got the zero or unit ideal.
struct degenerate_ideal_error : error {
    using error::error;
};

/// A square-free-only operation was handed a non-square-free input.
/// `generator` holds the offending generator in text form.
struct not_squarefree_error : error {
    std::string generator;
    explicit not_squarefree_error(const std::string& gen)
        : error("input is not square-free: generator " + gen), generator(gen) {}
};

/// A size budget (lattice nodes, face counts, vertex count) was exceeded.
struct budget_error : error {
    using error::error;
};

/// Exhaustive enumeration was requested outside the supported regime.
struct out_of_regime_error : error {
    using error::error;
};

/// Malformed ideal input (JSON or text).
struct parse_error : error {
    using error::error;
};

/// A classifier reached a state the structure theory rules out for a
/// verified-matroidal input.  Indicates a bug or a broken precondition,
/// never a property of the ideal.
struct internal_inconsistency_error : error {
    using error::error;
};

} // namespace scmm
