#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xmod/errors.hpp"
#include "xmod/presentation.hpp"

namespace xmod {

// Events of a movie script. Rule ids of `sb` and `bb` number the six local
// pictures of strands and bands meeting, in this order:
//
//   1  strand under band e:   X -> ∂(e) X ∂(e)^-1        (sb, new arc `out`)
//   2  band f under band e:   f -> e f e^-1              (bb)
//   3  strand under band e:   X -> ∂(e)^-1 X ∂(e)        (sb, new arc `out`)
//   4  band e under strand X: e -> X^-1 ▷ e              (sb)
//   5  band f under band e:   f -> e^-1 f e              (bb)
//   6  band e under strand X: e -> X ▷ e                 (sb)
//
// Band rules relabel the band in place unless `out` names a new band arc.

struct Birth {
  std::string arc;
  std::string generator;  // defaults to the arc id
};

/// Wirtinger crossing. The under-arc `in` continues as `out`:
/// sign + gives over^-1 in over, sign - gives over in over^-1.
/// When `out` is already live the crossing is undone instead: its label must
/// match, and `in` disappears together with the crossings that produced it.
struct Cross {
  int sign = 1;
  std::string over;
  std::string in;
  std::string out;
};

struct StrandBand {
  int rule = 0;
  std::string band;
  std::string strand;
  std::optional<std::string> out;
};

struct BandBand {
  int rule = 0;
  std::string mover;
  std::string fixed;
  std::optional<std::string> out;
};

/// A piece of strand created by a saddle, copying the label of `source`.
struct MergedArc {
  std::string arc;
  std::string source;
};

/// New cell `cell` with boundary label(u) label(v)^-1 and a band labelled by
/// it. Every source named in `merged` is retired.
struct Saddle {
  std::string cell;
  std::string u;
  std::string v;
  std::string band;
  std::vector<MergedArc> merged;
};

struct SpannerTerm {
  std::string band;
  FreeWord conjugator;
  int sign = 1;
};

/// Removes a circle made of the listed arcs and emits the relation
/// Π (conjugator ▷ label(band))^sign over the spanner.
struct Death {
  std::vector<std::string> circle;
  std::vector<SpannerTerm> spanner;
};

struct End {};

enum class EventKind { birth, cross, strand_band, band_band, saddle, death, end };

using EventData = std::variant<Birth, Cross, StrandBand, BandBand, Saddle, Death, End>;

struct Event {
  EventData data;
  std::size_t line = 0;  // source line, 0 when built in code

  EventKind kind() const { return static_cast<EventKind>(data.index()); }
};

struct MovieScript {
  std::string name;
  std::vector<Event> events;
};

/// Throws ParseError on unknown keywords, malformed arguments, a missing
/// `end`, or events after `end`. Ids are not resolved here.
MovieScript parse_movie_script(std::string_view text, std::string name = {});

struct BandArc {
  CrossedWord label;
  std::string cell;  // the saddle that created it
};

struct Crossing {
  std::string over;
  std::string in;
  std::string out;
};

struct DiagramState {
  std::map<std::string, FreeWord> strand_arcs;
  std::map<std::string, BandArc> band_arcs;
  std::vector<Crossing> crossings;
  /// Generators from births, cells from saddles, relations from deaths.
  CrossedPresentation emitted;
  long long births = 0;
  std::size_t events_applied = 0;
  bool ended = false;
};

/// A script event that cannot be replayed. `event_index` is 1-based.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t event_index, std::size_t line, const std::string& message)
      : Error("event " + std::to_string(event_index) + (line ? " (line " + std::to_string(line) + ")" : "") + ": " +
              message),
        event_index_(event_index),
        line_(line) {}

  std::size_t event_index() const { return event_index_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t event_index_;
  std::size_t line_;
};

/// One step of the label calculus. Throws ReplayError numbered
/// state.events_applied + 1.
DiagramState apply_event(const DiagramState& state, const Event& ev);

struct CompiledComplement {
  CrossedPresentation presentation;
  long long one_handles = 0;
};

/// Replays every event from the empty state. Death relations that are empty,
/// or formally equal to an earlier relation or its inverse, are not emitted.
CompiledComplement compile_movie(const MovieScript& script);

}  // namespace xmod
