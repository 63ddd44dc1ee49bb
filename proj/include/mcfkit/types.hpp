#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mcfkit {

enum class EventKind { Session, Purchase };

// One timestamped event. `value` is seconds for sessions and currency units
// for purchases; it may be absent (the source log had an empty value field),
// which only matters for value-based metrics.
struct EventRecord {
  double time = 0.0;  // days since the player's first event
  EventKind kind = EventKind::Session;
  std::optional<double> value;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

// One player's ordered events plus the censoring time after which nothing
// about the player is known.
struct PlayerHistory {
  std::string player_id;
  std::vector<EventRecord> events;  // sorted non-decreasing by time
  double censoring_time = 0.0;      // days

  friend bool operator==(const PlayerHistory&, const PlayerHistory&) = default;
};

// A set of player histories treated as i.i.d. draws of the cumulative-cost
// process C(t).
struct CohortSample {
  std::string label;
  std::vector<PlayerHistory> players;

  friend bool operator==(const CohortSample&, const CohortSample&) = default;
};

// Per-player (time, cost) pairs after a metric transform, with the effective
// censoring time the transform assigned. Indices align with the originating
// CohortSample.
struct CostStream {
  struct Entry {
    double time = 0.0;
    double cost = 0.0;
  };
  struct Player {
    std::vector<Entry> entries;  // sorted non-decreasing by time
    double censoring = 0.0;
  };
  std::vector<Player> players;
};

// Checks the PlayerHistory invariants and returns the history unchanged.
// Throws Error with EventAfterCensoring / UnsortedEvents / NegativeValue /
// NegativeTime naming the offending player and event index.
const PlayerHistory& validate_history(const PlayerHistory& history);

// Validates every history plus the cohort-level invariants (non-empty,
// unique player ids).
const CohortSample& validate_cohort(const CohortSample& cohort);

}  // namespace mcfkit
