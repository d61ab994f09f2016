#pragma once

#include <cstdint>
#include <queue>
#include <vector>

namespace bsc {

enum class EventKind : std::uint8_t {
  OrderArrival,
  AMRArrivedAtDock,
  AMRArrivedAtLane,
  AMRReleased,
  AMRArrivedAtStation,
  ChargeComplete,
  ChargeInterrupted,
  DecisionRequest,
};

const char* event_kind_name(EventKind k);

/// One simulation occurrence. Events at equal times pop in insertion order
/// (seq), which pins the whole run down to a reproducible total order.
struct SimEvent {
  double time = 0.0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::OrderArrival;
  int order = -1;
  int amr = -1;
  int station = -1;
  std::uint64_t token = 0;  // charge-session token for ChargeComplete/Interrupted
};

/// Min-heap over (time, seq). The floor is the simulation clock; pushing an
/// event before it is a logic error in the caller.
class EventQueue {
 public:
  void set_floor(double t) { floor_ = t; }
  double floor() const { return floor_; }

  /// Assigns the insertion sequence number and enqueues. Throws SimError when
  /// event.time < floor.
  void push(SimEvent event);

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  const SimEvent& top() const { return heap_.top(); }
  SimEvent pop();

 private:
  struct Later {
    bool operator()(const SimEvent& a, const SimEvent& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };
  std::priority_queue<SimEvent, std::vector<SimEvent>, Later> heap_;
  double floor_ = 0.0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace bsc
