#pragma once

#include <stdexcept>
#include <string>

namespace pdeform {

// Stable error codes, used by the CLI as process exit codes.
enum class ErrorCode {
    parse = 65,
    io = 66,
    precondition = 3,
    not_a_cocycle = 4,
    not_in_span = 5,
    not_a_deformation = 6,
    wrong_weight_class = 7,
    overflow = 8,
    not_isolated_singularity = 9,
    not_square_free = 10,
    not_homogeneous = 11,
    index_out_of_range = 12,
    h1_obstruction = 70,
    internal = 71,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* code_name() const;

  private:
    ErrorCode code_;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(ErrorCode::parse, msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorCode::io, msg) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(ErrorCode::precondition, msg) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& msg) : Error(ErrorCode::not_a_cocycle, msg) {}
};

struct NotInSpan : Error {
    explicit NotInSpan(const std::string& msg) : Error(ErrorCode::not_in_span, msg) {}
};

struct NotADeformation : Error {
    explicit NotADeformation(const std::string& msg) : Error(ErrorCode::not_a_deformation, msg) {}
};

struct WrongWeightClass : Error {
    explicit WrongWeightClass(const std::string& msg) : Error(ErrorCode::wrong_weight_class, msg) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(ErrorCode::overflow, msg) {}
};

struct NotIsolatedSingularity : Error {
    explicit NotIsolatedSingularity(const std::string& msg)
        : Error(ErrorCode::not_isolated_singularity, msg) {}
};

struct NotSquareFree : Error {
    explicit NotSquareFree(const std::string& msg) : Error(ErrorCode::not_square_free, msg) {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& msg) : Error(ErrorCode::not_homogeneous, msg) {}
};

struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(ErrorCode::index_out_of_range, msg) {}
};

struct H1Obstruction : Error {
    explicit H1Obstruction(const std::string& msg) : Error(ErrorCode::h1_obstruction, msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(ErrorCode::internal, msg) {}
};

}  // namespace pdeform
