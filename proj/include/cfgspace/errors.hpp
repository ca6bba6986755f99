#pragma once

#include <stdexcept>
#include <string>

namespace cfgspace {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different rings, atom sets or ambient dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A coefficient family is not a (complete) partition of unity.
class PartitionError : public Error {
public:
    using Error::Error;
};

/// Inversion was requested for a ring element with a zero component.
class NotAUnitError : public Error {
public:
    using Error::Error;
};

/// The operation is undefined on the empty space.
class EmptySpaceError : public Error {
public:
    using Error::Error;
};

/// A point is not a member of the space it was used with.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// A claimed subspace is not contained in its ambient space.
class ContainmentError : public Error {
public:
    using Error::Error;
};

/// Two pointed spaces do not share the required base point.
class PointingError : public Error {
public:
    using Error::Error;
};

/// A map table does not cover the points it must be defined on.
class TotalityError : public Error {
public:
    using Error::Error;
};

/// A map that must be contractive is not.
class ContractivityError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured universe cap.
class LimitError : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A cooperative cancellation request was observed.
class CancelledError : public Error {
public:
    CancelledError() : Error("operation cancelled") {}
};

/// An internal cross-check of a structural identity failed. Seeing this
/// means the library itself is inconsistent, not that the input was bad.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cfgspace
