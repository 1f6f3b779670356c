#include "roam/sim/event_queue.hpp"

#include <stdexcept>
#include <utility>

namespace roam::sim {

const char* event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::PacketDelivery: return "DELIVER";
        case EventKind::LinkFeedback: return "LINKFAIL";
        case EventKind::Timer: return "TIMER";
        case EventKind::MobilityStep: return "MOVE";
        case EventKind::TrafficEmit: return "EMIT";
    }
    return "?";
}

void EventQueue::schedule(double time, EventKind kind, std::function<void()> action, int node_a,
                          int node_b, long packet_id) {
    if (time < now_) throw std::invalid_argument("EventQueue: scheduling into the past");
    SimEvent ev;
    ev.time = time;
    ev.seq = next_seq_++;
    ev.kind = kind;
    ev.node_a = node_a;
    ev.node_b = node_b;
    ev.packet_id = packet_id;
    ev.action = std::move(action);
    heap_.push(std::move(ev));
}

bool EventQueue::advance() {
    if (heap_.empty()) return false;
    // priority_queue::top is const; the event is moved out before pop.
    SimEvent ev = std::move(const_cast<SimEvent&>(heap_.top()));
    heap_.pop();
    now_ = ev.time;
    if (observer_) observer_(ev);
    if (ev.action) ev.action();
    return true;
}

void EventQueue::set_observer(std::function<void(const SimEvent&)> observer) {
    observer_ = std::move(observer);
}

}  // namespace roam::sim
