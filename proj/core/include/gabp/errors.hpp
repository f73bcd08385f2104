#pragma once

#include <stdexcept>
#include <string>

namespace gabp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A contract violation in a caller-supplied argument (bad dimension,
/// epsilon <= 0, damping outside [0,1), omega outside (0,2), ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    IndexOutOfRangeError(int index, int n)
        : Error("index " + std::to_string(index) + " out of range [0, " + std::to_string(n) + ")"),
          index(index) {}
    int index;
};

/// A diagonal entry A_ii is absent or exactly zero.
class MissingDiagonalError : public Error {
public:
    explicit MissingDiagonalError(int i)
        : Error("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                ") is missing or zero"),
          index(i) {}
    int index;
};

/// Conflicting duplicate entries for the unordered pair {i, j}.
class AsymmetricInputError : public Error {
public:
    AsymmetricInputError(int i, int j)
        : Error("conflicting values supplied for entries (" + std::to_string(i) + "," +
                std::to_string(j) + ") and (" + std::to_string(j) + "," + std::to_string(i) + ")"),
          row(i),
          col(j) {}
    int row;
    int col;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// The Jacobi iteration matrix has spectral radius >= 1, so the classical
/// optimal relaxation weight is undefined; the caller must supply omega.
class OmegaUndefinedError : public Error {
public:
    using Error::Error;
};

/// Raised by operations (e.g. the decorrelator) that need a solution but
/// whose underlying iterative solve did not converge.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// File format error; message names the file and 1-based line.
class ParseError : public Error {
public:
    ParseError(const std::string& file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), file(file), line(line) {}
    std::string file;
    int line;
};

}  // namespace gabp
