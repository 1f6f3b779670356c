#ifndef ROAM_SIM_EVENT_QUEUE_HPP_
#define ROAM_SIM_EVENT_QUEUE_HPP_

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

namespace roam::sim {

enum class EventKind {
    PacketDelivery,
    LinkFeedback,
    Timer,
    MobilityStep,
    TrafficEmit,
};

const char* event_kind_name(EventKind kind);

// One scheduled occurrence. Events dequeue in (time, seq) order, seq
// being insertion order, so equal timestamps replay identically.
struct SimEvent {
    double time = 0.0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::Timer;
    int node_a = -1;
    int node_b = -1;
    long packet_id = -1;
    std::function<void()> action;
};

// Deterministic simulated clock plus pending-event heap. Scheduling into
// the past throws; the clock never runs backwards.
class EventQueue {
  public:
    double now() const { return now_; }
    bool empty() const { return heap_.empty(); }
    std::size_t pending() const { return heap_.size(); }
    // Timestamp of the next event; only valid when not empty.
    double next_time() const { return heap_.top().time; }

    void schedule(double time, EventKind kind, std::function<void()> action, int node_a = -1,
                  int node_b = -1, long packet_id = -1);

    // Pops and runs exactly one event, advancing the clock to it.
    // Returns false on an empty queue (end of simulation).
    bool advance();

    // Observer invoked for every dequeued event, before its action.
    void set_observer(std::function<void(const SimEvent&)> observer);

  private:
    struct Later {
        bool operator()(const SimEvent& a, const SimEvent& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    double now_ = 0.0;
    std::uint64_t next_seq_ = 0;
    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> heap_;
    std::function<void(const SimEvent&)> observer_;
};

}  // namespace roam::sim

#endif  // ROAM_SIM_EVENT_QUEUE_HPP_
