#ifndef RECURNLP_ERRORS_HPP
#define RECURNLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recurnlp {

// Base for everything the library throws. The CLI maps any Error to
// exit code 1 (data error); usage problems are handled by the parser
// and exit 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (manifest, embeddings, ...). Messages carry the
// offending line/row number where one exists.
class ParseError : public Error {
public:
    using Error::Error;
};

// Index or numeric argument outside its documented domain.
class RangeError : public Error {
public:
    using Error::Error;
};

// Operation needs more data than the input provides (k > N, winsz > N,
// too few diagonals for TREND, ...).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// The requested quantity is mathematically undefined for this input
// (RR of an empty series, DET with no recurrence, ...).
class UndefinedInputError : public Error {
public:
    using Error::Error;
};

// Dimension mismatch between plots or matrices.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

// Semantically invalid data that parsed fine (duplicate labels, ...).
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace recurnlp

#endif
