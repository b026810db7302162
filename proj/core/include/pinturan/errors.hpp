#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pinturan {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("vertex count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Raised when e(P) + N(S2, P) >= floor(n^2/4). `deficit` is e + N - floor(n^2/4).
class PreconditionViolated : public Error {
public:
    PreconditionViolated(const std::string& what, std::int64_t deficit)
        : Error(what), deficit_(deficit) {}
    std::int64_t deficit() const noexcept { return deficit_; }

private:
    std::int64_t deficit_;
};

class NotTriangleFree : public Error {
public:
    explicit NotTriangleFree(std::array<std::uint32_t, 3> triangle)
        : Error("graph contains triangle {" + std::to_string(triangle[0]) + "," +
                std::to_string(triangle[1]) + "," + std::to_string(triangle[2]) + "}"),
          triangle_(triangle) {}
    const std::array<std::uint32_t, 3>& triangle() const noexcept { return triangle_; }

private:
    std::array<std::uint32_t, 3> triangle_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    /// 0 when the error is not tied to an input line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t remaining)
        : Error(what), remaining_(remaining) {}
    std::size_t remaining() const noexcept { return remaining_; }

private:
    std::size_t remaining_;
};

} // namespace pinturan
