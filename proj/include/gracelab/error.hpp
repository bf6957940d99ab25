#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gracelab {

enum class Errc {
  EmptyInput,
  ParseError,
  SelfLoop,
  DuplicateEdge,
  CycleDetected,
  Disconnected,
  OutOfRange,
  NotALobster,
  NotAShell,
  NotPerfect,
  ContreeNotCaterpillar,
  MissingLabel,
  LabelOutOfRange,
  NotContiguousBipartite,
  PreconditionLabeling,
  WeightCollision,
  DiameterTooSmall,
  SearchBudgetExceeded,
  BudgetExceeded,
  InvalidSpec,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ParseError: return "ParseError";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::Disconnected: return "Disconnected";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotALobster: return "NotALobster";
    case Errc::NotAShell: return "NotAShell";
    case Errc::NotPerfect: return "NotPerfect";
    case Errc::ContreeNotCaterpillar: return "ContreeNotCaterpillar";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::LabelOutOfRange: return "LabelOutOfRange";
    case Errc::NotContiguousBipartite: return "NotContiguousBipartite";
    case Errc::PreconditionLabeling: return "PreconditionLabeling";
    case Errc::WeightCollision: return "WeightCollision";
    case Errc::DiameterTooSmall: return "DiameterTooSmall";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gracelab
