//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace subcount {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (edge list or graph6).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates graph invariants: self-loops, duplicate
/// edges, node indices out of range.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold, e.g. the subgraph height is too
/// small for the requested counting program.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A message-passing program or readout is ill-formed, or the subgraph does
/// not provide a label the program reads.
class ProgramError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured work budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (non-exact division, negative
/// pattern count). Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace subcount
