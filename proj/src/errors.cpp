#include "qbraid/errors.hpp"

namespace qbraid {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::PoleAtTheta: return "PoleAtTheta";
    case ErrorKind::NoRealEta: return "NoRealEta";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::WordsNotSkeinTriple: return "WordsNotSkeinTriple";
    case ErrorKind::NegativeParameter: return "NegativeParameter";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

} // namespace qbraid
