#include "mcfkit/types.hpp"

#include <sstream>
#include <unordered_set>

#include "mcfkit/errors.hpp"

namespace mcfkit {

namespace {

[[noreturn]] void fail(Errc code, const PlayerHistory& h, std::size_t index,
                       const char* what) {
  std::ostringstream msg;
  msg << what << " (player '" << h.player_id << "', event " << index << ")";
  throw Error(code, msg.str());
}

}  // namespace

const PlayerHistory& validate_history(const PlayerHistory& history) {
  if (history.censoring_time < 0.0) {
    throw Error(Errc::NegativeTime, "censoring time is negative (player '" +
                                        history.player_id + "')");
  }
  double prev = 0.0;
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    const EventRecord& e = history.events[i];
    if (e.time < 0.0) fail(Errc::NegativeTime, history, i, "negative event time");
    if (i > 0 && e.time < prev)
      fail(Errc::UnsortedEvents, history, i, "events not sorted by time");
    if (e.time > history.censoring_time)
      fail(Errc::EventAfterCensoring, history, i,
           "event after the censoring time");
    if (e.value && *e.value < 0.0)
      fail(Errc::NegativeValue, history, i, "negative event value");
    prev = e.time;
  }
  return history;
}

const CohortSample& validate_cohort(const CohortSample& cohort) {
  if (cohort.players.empty())
    throw Error(Errc::EmptyCohort,
                "cohort '" + cohort.label + "' has no players");
  std::unordered_set<std::string> seen;
  for (const PlayerHistory& h : cohort.players) {
    validate_history(h);
    if (!seen.insert(h.player_id).second)
      throw Error(Errc::DuplicatePlayerId, "duplicate player id '" +
                                               h.player_id + "' in cohort '" +
                                               cohort.label + "'");
  }
  return cohort;
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::IoError: return "IoError";
    case Errc::MalformedRow: return "MalformedRow";
    case Errc::MalformedDuration: return "MalformedDuration";
    case Errc::MalformedMoney: return "MalformedMoney";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::MissingCensoringRow: return "MissingCensoringRow";
    case Errc::MultipleCensoringRows: return "MultipleCensoringRows";
    case Errc::MixedTimeBases: return "MixedTimeBases";
    case Errc::NegativeElapsed: return "NegativeElapsed";
    case Errc::CutoffBeforeFirstEvent: return "CutoffBeforeFirstEvent";
    case Errc::InconsistentCohort: return "InconsistentCohort";
    case Errc::EventAfterCensoring: return "EventAfterCensoring";
    case Errc::UnsortedEvents: return "UnsortedEvents";
    case Errc::NegativeValue: return "NegativeValue";
    case Errc::NegativeTime: return "NegativeTime";
    case Errc::DuplicatePlayerId: return "DuplicatePlayerId";
    case Errc::CostStreamMismatch: return "CostStreamMismatch";
    case Errc::MissingValue: return "MissingValue";
    case Errc::InvalidLevel: return "InvalidLevel";
    case Errc::BeyondObservationWindow: return "BeyondObservationWindow";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NoObservablePlayers: return "NoObservablePlayers";
    case Errc::CohortsNotDisjoint: return "CohortsNotDisjoint";
    case Errc::NegativeStatistic: return "NegativeStatistic";
    case Errc::EmptyCohort: return "EmptyCohort";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::DegenerateVariance: return "DegenerateVariance";
    case Errc::NoCommonWindow: return "NoCommonWindow";
    case Errc::InvalidParams: return "InvalidParams";
  }
  return "UnknownError";
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::IoError:
    case Errc::MalformedRow:
    case Errc::MalformedDuration:
    case Errc::MalformedMoney:
    case Errc::MissingColumn:
    case Errc::MissingCensoringRow:
    case Errc::MultipleCensoringRows:
    case Errc::MixedTimeBases:
    case Errc::NegativeElapsed:
    case Errc::CutoffBeforeFirstEvent:
    case Errc::InconsistentCohort:
      return 1;
    case Errc::EmptyCohort:
      return 3;
    case Errc::WindowTooShort:
      return 4;
    case Errc::DegenerateVariance:
    case Errc::NoCommonWindow:
      return 5;
    case Errc::InvalidParams:
      return 6;
    default:
      return 2;
  }
}

}  // namespace mcfkit
