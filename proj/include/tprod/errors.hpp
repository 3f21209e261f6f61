#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>

namespace tprod {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class NotBlockCirculant : public Error {
public:
    NotBlockCirculant(const std::string& what, double deviation, double tolerance)
        : Error(what), deviation_(deviation), tolerance_(tolerance) {}
    double deviation() const noexcept { return deviation_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    double deviation_;
    double tolerance_;
};

class PairingViolation : public Error {
public:
    PairingViolation(const std::string& what, double residual, double tolerance)
        : Error(what), residual_(residual), tolerance_(tolerance) {}
    double residual() const noexcept { return residual_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    double residual_;
    double tolerance_;
};

class RealnessViolation : public Error {
public:
    RealnessViolation(const std::string& what, double max_imag, double tolerance)
        : Error(what), max_imag_(max_imag), tolerance_(tolerance) {}
    double max_imag() const noexcept { return max_imag_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    double max_imag_;
    double tolerance_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Errors that stem from the mathematics of the input rather than from its shape or encoding.
class MathError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public MathError {
public:
    using MathError::MathError;
};

class SwapFailure : public MathError {
public:
    using MathError::MathError;
};

class DefectiveBlock : public MathError {
public:
    using MathError::MathError;
};

class PartitionViolation : public MathError {
public:
    PartitionViolation(const std::string& what, std::size_t slice, std::size_t row)
        : MathError(what), slice_(slice), row_(row) {}
    /// 0-based frontal slice and row where a diagonal block larger than 2x2 was required.
    std::size_t slice() const noexcept { return slice_; }
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t slice_;
    std::size_t row_;
};

/// A Fourier block (0-based `block`) that is numerically singular.
class Singular : public MathError {
public:
    Singular(const std::string& what, std::size_t block, double sigma_min)
        : MathError(what), block_(block), sigma_min_(sigma_min) {}
    std::size_t block() const noexcept { return block_; }
    double sigma_min() const noexcept { return sigma_min_; }

private:
    std::size_t block_;
    double sigma_min_;
};

/// rank(A^2) < rank(A). `margin` is the distance of the deciding singular value of A^2 from the
/// rank threshold, relative to that threshold (small values mean a close call).
class GroupInverseNotExist : public MathError {
public:
    GroupInverseNotExist(const std::string& what, std::size_t block, std::size_t rank_a,
                         std::size_t rank_a2, double margin)
        : MathError(what), block_(block), rank_a_(rank_a), rank_a2_(rank_a2), margin_(margin) {}
    std::size_t block() const noexcept { return block_; }
    std::size_t rank_a() const noexcept { return rank_a_; }
    std::size_t rank_a2() const noexcept { return rank_a2_; }
    double margin() const noexcept { return margin_; }

private:
    std::size_t block_;
    std::size_t rank_a_;
    std::size_t rank_a2_;
    double margin_;
};

/// A matrix kernel failed while being applied to Fourier block `index` (0-based).
class BlockOpError : public MathError {
public:
    BlockOpError(std::size_t index, std::exception_ptr cause, const std::string& cause_what)
        : MathError("Fourier block " + std::to_string(index + 1) + ": " + cause_what),
          index_(index), cause_(std::move(cause)) {}
    std::size_t index() const noexcept { return index_; }
    const std::exception_ptr& cause() const noexcept { return cause_; }
    [[noreturn]] void rethrow_cause() const { std::rethrow_exception(cause_); }

private:
    std::size_t index_;
    std::exception_ptr cause_;
};

} // namespace tprod
