#include "splitclust/error.hpp"

namespace splitclust {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertexId: return "InvalidVertexId";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NeighborhoodNotCovered: return "NeighborhoodNotCovered";
    case ErrorKind::ForeignNeighbor: return "ForeignNeighbor";
    case ErrorKind::DuplicateSet: return "DuplicateSet";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::InapplicableStep: return "InapplicableStep";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::IsolatedVertexPresent: return "IsolatedVertexPresent";
    case ErrorKind::NotAClusterGraphAfter: return "NotAClusterGraphAfter";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BudgetUnderflow: return "BudgetUnderflow";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::WrongProblem: return "WrongProblem";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
  }
  return "Unknown";
}

}  // namespace splitclust
