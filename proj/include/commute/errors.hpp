#pragma once

#include <stdexcept>
#include <string>

namespace commute {

/// Base for all library errors. `code()` is a stable machine-readable tag;
/// the CLI surfaces it in its JSON error output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define COMMUTE_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

COMMUTE_DEFINE_ERROR(DimensionMismatch);
COMMUTE_DEFINE_ERROR(SingularMatrix);
COMMUTE_DEFINE_ERROR(GroupingAmbiguous);
COMMUTE_DEFINE_ERROR(SpectrumOutsideDomain);
COMMUTE_DEFINE_ERROR(NotTangent);
COMMUTE_DEFINE_ERROR(NotCommuting);
COMMUTE_DEFINE_ERROR(ContourTooClose);
COMMUTE_DEFINE_ERROR(ResolventIllConditioned);
COMMUTE_DEFINE_ERROR(InsufficientSmoothness);
COMMUTE_DEFINE_ERROR(OrderTooHigh);
COMMUTE_DEFINE_ERROR(SegmentNotCommuting);
COMMUTE_DEFINE_ERROR(RejectionBudgetExhausted);
COMMUTE_DEFINE_ERROR(NotAnalytic);
COMMUTE_DEFINE_ERROR(CurveDomainExceeded);
COMMUTE_DEFINE_ERROR(InvalidArgument);

#undef COMMUTE_DEFINE_ERROR

/// Parse failures carry the offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("ParseError", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Unreadable or schema-violating input files (CLI exit code 65).
class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& message) : Error("MalformedInput", message) {}
};

}  // namespace commute
