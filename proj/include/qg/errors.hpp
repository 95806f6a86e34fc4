#pragma once

#include <stdexcept>
#include <string>

namespace qg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in cyclotomic field") {}
};
struct NotSemisimpleError : Error {
    NotSemisimpleError() : Error("algebra is not semisimple (trace form is degenerate)") {}
};
struct NotSplitError : Error {
    std::string polynomial;
    explicit NotSplitError(std::string poly)
        : Error("algebra does not split over the declared cyclotomic field; offending polynomial: " + poly),
          polynomial(std::move(poly)) {}
};
struct AntipodeNotInvertible : Error {
    AntipodeNotInvertible() : Error("antipode matrix is not invertible") {}
};
struct ParentMismatch : Error {
    ParentMismatch() : Error("modules have different parent quantum groupoids") {}
};
struct NotConnectedError : Error {
    NotConnectedError() : Error("quantum groupoid is not connected; scalar quantum trace undefined") {}
};
struct NotModularError : Error {
    NotModularError() : Error("modularity verdict is negative; surgery invariant disabled") {}
};
struct DegenerateGaussSum : Error {
    DegenerateGaussSum() : Error("Gauss sum vanishes; surgery normalization impossible") {}
};
struct SquareRootNotInField : Error {
    int block;
    std::string value;
    SquareRootNotInField(int blk, std::string val)
        : Error("no square root in the field for block " + std::to_string(blk) + " scalar " + val),
          block(blk), value(std::move(val)) {}
};
struct InvalidGroupoid : Error {
    using Error::Error;
};
struct BadPartition : Error {
    using Error::Error;
};
struct QNotNormalized : Error {
    using Error::Error;
};
struct QNotInvertible : Error {
    using Error::Error;
};
struct InvalidAction : Error {
    using Error::Error;
};
struct UnsupportedN : Error {
    using Error::Error;
};
struct NoSuchElement : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct DimensionCapExceeded : Error {
    using Error::Error;
};

/// Raised when an internally derived identity fails; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int ln, int col)
        : Error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace qg
