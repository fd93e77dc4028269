#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperbetti {

enum class ErrorCode {
    EdgeTooSmall,
    ComparableEdges,
    UnknownVertex,
    DuplicateEdge,
    IndexOutOfRange,
    NotUniform,
    NotAGraph,
    NotSpecialClass,
    NotSimplicial,
    NotTriangulated,
    NotStronglyDisjoint,
    NotSelfDisjoint,
    SizeCapExceeded,
    BudgetExceeded,
    ParseError,
    InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::ComparableEdges: return "ComparableEdges";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::NotSpecialClass: return "NotSpecialClass";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotTriangulated: return "NotTriangulated";
    case ErrorCode::NotStronglyDisjoint: return "NotStronglyDisjoint";
    case ErrorCode::NotSelfDisjoint: return "NotSelfDisjoint";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every library failure carries a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hyperbetti
