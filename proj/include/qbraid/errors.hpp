#pragma once

#include <stdexcept>
#include <string>

namespace qbraid {

enum class ErrorKind {
    ZeroBase,
    InvalidDimension,
    PoleAtTheta,
    NoRealEta,
    DimensionMismatch,
    NonConvergence,
    Degenerate,
    UnsupportedSpec,
    CapExceeded,
    WordsNotSkeinTriple,
    NegativeParameter,
    RelationViolated,
    Usage,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qbraid
