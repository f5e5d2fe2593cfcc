#include "tfg/error.hpp"

namespace tfg {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IsCycle: return "IsCycle";
    case ErrorCode::MixedGraphs: return "MixedGraphs";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::EmptyCycle: return "EmptyCycle";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::DomainOverlap: return "DomainOverlap";
    case ErrorCode::RangeOverlap: return "RangeOverlap";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::InvalidMultisection: return "InvalidMultisection";
    case ErrorCode::ZeroTable: return "ZeroTable";
    case ErrorCode::SourcesOverlap: return "SourcesOverlap";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::NotFullGroupElement: return "NotFullGroupElement";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::InvalidSubshift: return "InvalidSubshift";
    case ErrorCode::NotPartition: return "NotPartition";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::WindowUndetermined: return "WindowUndetermined";
    case ErrorCode::RuleIncomplete: return "RuleIncomplete";
    case ErrorCode::NotFactorCode: return "NotFactorCode";
    case ErrorCode::UnsupportedIteration: return "UnsupportedIteration";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
  }
  return "Unknown";
}

}  // namespace tfg
