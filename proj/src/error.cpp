#include "logder/error.hpp"

namespace logder {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::RankTooLow: return "RankTooLow";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MissingCoordinateTriangle: return "MissingCoordinateTriangle";
    case ErrorKind::NotLogarithmic: return "NotLogarithmic";
    case ErrorKind::DegreeSumMismatch: return "DegreeSumMismatch";
    case ErrorKind::AllZeroCoefficients: return "AllZeroCoefficients";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::PencilLike: return "PencilLike";
    case ErrorKind::RankCollapse: return "RankCollapse";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::TooFewEdges: return "TooFewEdges";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonlinearTerm: return "NonlinearTerm";
  }
  return "Unknown";
}

}  // namespace logder
