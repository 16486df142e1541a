#ifndef RCNORM_ERRORS_HPP
#define RCNORM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcnorm {

enum class Axis { Rows, Columns };

inline const char* to_string(Axis axis) {
    return axis == Axis::Rows ? "rows" : "columns";
}

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two matrices were combined but their shapes differ.
class ShapeMismatchError : public Error {
public:
    ShapeMismatchError(std::size_t a_rows, std::size_t a_cols,
                       std::size_t b_rows, std::size_t b_cols)
        : Error("incompatible shapes: " + std::to_string(a_rows) + "x" +
                std::to_string(a_cols) + " vs " + std::to_string(b_rows) + "x" +
                std::to_string(b_cols)) {}
};

// A row or column has (numerically) zero standard deviation, so the
// divide step of a standard-deviation polish is undefined.
class DegenerateAxisError : public Error {
public:
    DegenerateAxisError(Axis axis, std::size_t index, double std_dev)
        : Error(std::string("degenerate ") +
                (axis == Axis::Rows ? "row " : "column ") +
                std::to_string(index) + ": standard deviation " +
                std::to_string(std_dev) + " is below the degeneracy floor"),
          axis(axis),
          index(index) {}

    Axis axis;
    std::size_t index;
};

// The matrix is too small for the requested mode (full polishing needs
// min(rows, cols) >= 3; a 2x2 degenerates with probability 1/2).
class DimensionGateError : public Error {
public:
    DimensionGateError(std::size_t required_min, std::size_t n_rows,
                       std::size_t n_cols)
        : Error("shape " + std::to_string(n_rows) + "x" +
                std::to_string(n_cols) + " rejected: min(rows, cols) must be >= " +
                std::to_string(required_min) +
                " (a 2x2 input loses a column variance after one row"
                " standardization with probability 1/2)"),
          required_min(required_min),
          n_rows(n_rows),
          n_cols(n_cols) {}

    std::size_t required_min;
    std::size_t n_rows;
    std::size_t n_cols;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

class MissingSnapshotsError : public Error {
public:
    MissingSnapshotsError()
        : Error("trace has no snapshots; rerun with capture_snapshots") {}
};

class TieDetectedError : public Error {
public:
    TieDetectedError(Axis axis, std::size_t index)
        : Error(std::string("tie in ") +
                (axis == Axis::Rows ? "row " : "column ") +
                std::to_string(index) + ": strict sort undefined") {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

class RaggedRowsError : public Error {
public:
    RaggedRowsError(std::size_t line, std::size_t expected, std::size_t got)
        : Error("ragged rows: line " + std::to_string(line) + " has " +
                std::to_string(got) + " fields, expected " +
                std::to_string(expected)),
          line(line) {}

    std::size_t line;
};

class EmptyFileError : public Error {
public:
    explicit EmptyFileError(const std::string& path)
        : Error("no numeric data in " + path) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace rcnorm

#endif
