#pragma once

#include <stdexcept>
#include <string>

namespace mcfkit {

// Every failure the library can report, grouped by pipeline stage. The CLI
// maps groups to stable exit codes (see exit_code_for).
enum class Errc {
  // input parsing
  IoError,
  MalformedRow,
  MalformedDuration,
  MalformedMoney,
  MissingColumn,
  MissingCensoringRow,
  MultipleCensoringRows,
  MixedTimeBases,
  NegativeElapsed,
  CutoffBeforeFirstEvent,
  InconsistentCohort,
  // model validation
  EventAfterCensoring,
  UnsortedEvents,
  NegativeValue,
  NegativeTime,
  DuplicatePlayerId,
  CostStreamMismatch,
  MissingValue,
  InvalidLevel,
  BeyondObservationWindow,
  EmptyInput,
  NoObservablePlayers,
  CohortsNotDisjoint,
  NegativeStatistic,
  // analysis
  EmptyCohort,
  WindowTooShort,
  DegenerateVariance,
  NoCommonWindow,
  InvalidParams,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code) noexcept;

// Stable CLI exit codes: 1 parse, 2 validation, 3 empty cohort,
// 4 window too short, 5 degenerate comparison, 6 invalid simulation params.
int exit_code_for(Errc code) noexcept;

}  // namespace mcfkit
