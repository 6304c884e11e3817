/**
 * Error type shared by every module of the library.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace neighborly {

enum class ErrorCode {
    EmptyComplex,
    InvalidFace,
    DimensionRange,
    DimensionMismatch,
    NotAFace,
    UnknownVertex,
    VertexClash,
    Precondition,
    UnknownNode,
    InadmissibleHandle,
    Range,
    HypothesisFailure,
    ReconstructionFailure,
    UnknownLemma,
    Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the FCT reader; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A handle map whose pair (x, psi(x)) shares a neighbor, or is itself an edge.
class InadmissibleHandleError : public Error {
public:
    InadmissibleHandleError(std::uint32_t x, std::uint32_t image,
                            std::optional<std::uint32_t> common_neighbor,
                            const std::string& what)
        : Error(ErrorCode::InadmissibleHandle, what),
          x_(x), image_(image), common_neighbor_(common_neighbor) {}

    std::uint32_t x() const noexcept { return x_; }
    std::uint32_t image() const noexcept { return image_; }
    std::optional<std::uint32_t> common_neighbor() const noexcept { return common_neighbor_; }

private:
    std::uint32_t x_;
    std::uint32_t image_;
    std::optional<std::uint32_t> common_neighbor_;
};

/// Names the reconstruction step whose hypothesis did not hold.
class ReconstructionError : public Error {
public:
    ReconstructionError(std::string step, const std::string& what)
        : Error(ErrorCode::ReconstructionFailure, step + ": " + what), step_(std::move(step)) {}

    const std::string& step() const noexcept { return step_; }

private:
    std::string step_;
};

}  // namespace neighborly
