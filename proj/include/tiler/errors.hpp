#pragma once

#include <stdexcept>
#include <string>

namespace tiler {

// Raised when closing a set of cyclic-order triples produces both (a,b,c) and
// (c,b,a), i.e. the inputs admit no common circular extension structure.
struct ConflictError : std::runtime_error {
  explicit ConflictError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a subdivision fails a structural invariant (crossing chords,
// same-color neighbors, coverage gap/overlap, bad vertex lists, ...).
struct ValidationError : std::runtime_error {
  enum class Kind {
    BadStructure,
    CrossingChords,
    ColorClash,
    CoverageGap,
    CoverageOverlap,
  };
  ValidationError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind(kind) {}
  Kind kind;
};

// Raised when an arc is not compatible with (or not facet-defining for) a
// subdivision, or a split/contraction side is too small to carry a cycle.
struct IncompatibleArc : std::runtime_error {
  explicit IncompatibleArc(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tiler
