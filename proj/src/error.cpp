#include "coauth/error.hpp"

namespace coauth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::FocalAbsent: return "FocalAbsent";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateTest: return "DegenerateTest";
    case ErrorCode::AlignmentError: return "AlignmentError";
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicatePaperId: return "DuplicatePaperId";
    case ErrorCode::EmptyAuthors: return "EmptyAuthors";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::DuplicateAuthor: return "DuplicateAuthor";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::HttpError: return "HttpError";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::MappingError: return "MappingError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace coauth
