#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "roam/sim/event_queue.hpp"
#include "roam/sim/mobility.hpp"
#include "roam/sim/network.hpp"
#include "roam/sim/rng.hpp"
#include "roam/sim/topology.hpp"

using namespace roam;
using namespace roam::sim;

TEST_CASE("generated topologies are deterministic") {
    const auto a = generate_topology(50, 500, 500, 120, 7);
    const auto b = generate_topology(50, 500, 500, 120, 7);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a.position(i).x == b.position(i).x);
        CHECK(a.position(i).y == b.position(i).y);
        CHECK(a.neighbors(i) == b.neighbors(i));
    }
    const auto c = generate_topology(50, 500, 500, 120, 8);
    bool any_differs = false;
    for (int i = 0; i < a.size() && !any_differs; ++i)
        any_differs = a.position(i).x != c.position(i).x;
    CHECK(any_differs);
}

TEST_CASE("adjacency is symmetric, irreflexive, range-driven") {
    Topology t({{0, 0}, {50, 0}, {200, 0}}, 100.0);
    CHECK(t.adjacent(0, 1));
    CHECK(t.adjacent(1, 0));
    CHECK(!t.adjacent(0, 2));
    CHECK(t.adjacent(1, 2) == (distance({50, 0}, {200, 0}) <= 100.0));
    CHECK(!t.adjacent(0, 0));
    CHECK(t.degree(0) == 1);

    Topology single({{5, 5}}, 100.0);
    CHECK(single.degree(0) == 0);
    CHECK(single.mean_degree() == 0.0);
}

TEST_CASE("measured profile on the toy graphs") {
    SUBCASE("three node chain") {
        Topology chain({{0, 0}, {90, 0}, {180, 0}}, 100.0);
        const auto p = measure_profile(chain, 0);
        CHECK(p.d_avg == doctest::Approx(4.0 / 3.0));
        REQUIRE(p.d_f.size() == 1);
        CHECK(p.d_f[0] == doctest::Approx(1.0));
    }
    SUBCASE("complete graph K4") {
        Topology k4({{0, 0}, {10, 0}, {0, 10}, {10, 10}}, 100.0);
        const auto p = measure_profile(k4, 0);
        CHECK(p.d_avg == doctest::Approx(3.0));
        REQUIRE(p.d_f.size() == 1);
        CHECK(p.d_f[0] == doctest::Approx(0.0));
    }
    SUBCASE("single node") {
        Topology one({{0, 0}}, 100.0);
        const auto p = measure_profile(one, 0);
        CHECK(p.d_avg == 0.0);
        CHECK(p.d_f.empty());
    }
    SUBCASE("disconnected remainder truncates the layering") {
        Topology t({{0, 0}, {90, 0}, {1000, 1000}}, 100.0);
        const auto p = measure_profile(t, 0);
        REQUIRE(p.d_f.size() == 1);
        CHECK(p.d_f[0] == doctest::Approx(0.0));  // depth-1 node has no forward neighbor
    }
}

TEST_CASE("event queue ordering contracts") {
    EventQueue q;
    std::vector<int> order;
    q.schedule(1.0, EventKind::Timer, [&] { order.push_back(1); });
    q.schedule(1.0, EventKind::Timer, [&] { order.push_back(2); });
    q.schedule(0.5, EventKind::Timer, [&] { order.push_back(3); });
    q.schedule(0.2, EventKind::Timer, [&] { order.push_back(4); });

    while (q.advance()) {}
    CHECK(order == std::vector<int>{4, 3, 1, 2});
    CHECK(q.now() == 1.0);
    CHECK(!q.advance());  // end-of-simulation signal

    CHECK_THROWS_AS(q.schedule(0.5, EventKind::Timer, [] {}), std::invalid_argument);
}

TEST_CASE("clock is monotone over a random event soup") {
    EventQueue q;
    Rng rng(3);
    double last_seen = 0.0;
    bool monotone = true;
    for (int i = 0; i < 100; ++i) {
        q.schedule(rng.uniform(0.0, 10.0), EventKind::Timer, [&, &q = q] {
            monotone = monotone && q.now() >= last_seen;
            last_seen = q.now();
            if (q.now() < 9.0) q.schedule(q.now() + 0.5, EventKind::Timer, [] {});
        });
    }
    while (q.advance()) {}
    CHECK(monotone);
}

TEST_CASE("random waypoint mobility") {
    SUBCASE("speed zero keeps everyone still") {
        Topology t({{10, 10}, {20, 20}}, 100.0);
        RandomWaypoint rw(100, 100, 0.0, 2.0, Rng(1));
        rw.init(t);
        rw.step(t, 0.0, 0.1);
        CHECK(t.position(0).x == 10.0);
        CHECK(t.position(1).y == 20.0);
    }
    SUBCASE("a 5 m leg at 5 m/s lands exactly on the target in one 1 s step") {
        Topology t({{0, 0}}, 100.0);
        RandomWaypoint rw(100, 100, 5.0, 1.0, Rng(1));
        rw.init(t);
        // Overwrite the drawn target through a fresh instance isn't
        // possible; instead check the arrival rule geometrically: step
        // until within one leg, then confirm exact landing.
        for (int i = 0; i < 10000; ++i) {
            const Vec2 before = t.position(0);
            (void)before;
            rw.step(t, i * 1.0, 1.0);
            const auto& st = rw.state(0);
            if (!st.moving) {
                CHECK(t.position(0).x == st.target.x);
                CHECK(t.position(0).y == st.target.y);
                return;
            }
        }
        FAIL("never arrived at a waypoint");
    }
    SUBCASE("a pause longer than the run is effectively static after arrival") {
        Topology t({{0, 0}}, 100.0);
        RandomWaypoint rw(10, 10, 50.0, 1e9, Rng(2));
        rw.init(t);
        rw.step(t, 0.0, 1.0);  // reaches any target inside a 10x10 box
        const Vec2 arrived = t.position(0);
        for (int i = 1; i < 50; ++i) rw.step(t, i * 1.0, 1.0);
        CHECK(t.position(0).x == arrived.x);
        CHECK(t.position(0).y == arrived.y);
    }
}

namespace {

// Minimal agent that records deliveries and failures.
struct Probe : NodeAgent {
    int id_;
    Network* net_;
    std::vector<proto::Packet> got;
    std::vector<int> failures;

    Probe(int id, Network* net) : id_(id), net_(net) {}
    int id() const override { return id_; }
    void start() override {}
    void on_packet(int, const proto::Packet& p) override { got.push_back(p); }
    void on_link_failure(int next, const proto::Packet&) override { failures.push_back(next); }
    void send_data(int, proto::Packet) override {}
    std::optional<int> table_next_hop(int) const override { return std::nullopt; }
};

}  // namespace

TEST_CASE("transmit latency and delivery rules") {
    SimParams params;  // 2 Mbps, 40 ms per hop by default
    Topology t({{0, 0}, {50, 0}, {90, 0}, {500, 0}}, 100.0);
    Network net(std::move(t), params);
    for (int i = 0; i < 4; ++i) net.add_node(std::make_unique<Probe>(i, &net));

    SUBCASE("512-byte serialization is 2.048 ms on a 2 Mbps link") {
        CHECK(net.latency_for(512) == doctest::Approx(0.002048 + 0.040).epsilon(1e-12));
    }

    SUBCASE("broadcast reaches current neighbors only") {
        proto::Packet p;
        p.kind = proto::PacketKind::Hello;
        p.uid = net.new_uid();
        net.broadcast(0, p);
        net.run_until(1.0);
        CHECK(static_cast<Probe&>(net.node(1)).got.size() == 1);
        CHECK(static_cast<Probe&>(net.node(2)).got.size() == 1);
        CHECK(static_cast<Probe&>(net.node(3)).got.empty());
        CHECK(net.ledger().hello_tx == 1);
    }

    SUBCASE("broadcast from an isolated node delivers nothing") {
        proto::Packet p;
        p.kind = proto::PacketKind::Hello;
        net.broadcast(3, p);
        net.run_until(1.0);
        for (int i = 0; i < 3; ++i) CHECK(static_cast<Probe&>(net.node(i)).got.empty());
    }

    SUBCASE("unicast to a departed neighbor feeds back a link failure") {
        proto::Packet p;
        p.kind = proto::PacketKind::Data;
        p.uid = net.new_uid();
        net.unicast(0, 3, p);
        net.run_until(1.0);
        auto& probe = static_cast<Probe&>(net.node(0));
        REQUIRE(probe.failures.size() == 1);
        CHECK(probe.failures[0] == 3);
        CHECK(static_cast<Probe&>(net.node(3)).got.empty());
    }

    SUBCASE("unicast within range delivers exactly once") {
        proto::Packet p;
        p.kind = proto::PacketKind::Data;
        p.uid = net.new_uid();
        net.unicast(0, 1, p);
        net.run_until(1.0);
        CHECK(static_cast<Probe&>(net.node(1)).got.size() == 1);
        CHECK(net.ledger().data_tx == 1);
    }
}

TEST_CASE("rng streams are deterministic and fork-independent") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    // A fork does not perturb the parent's future draws.
    Rng c(7);
    std::vector<std::uint64_t> before;
    for (int i = 0; i < 10; ++i) before.push_back(c.next_u64());
    Rng d(7);
    (void)d.fork(123);
    for (int i = 0; i < 10; ++i) CHECK(d.next_u64() == before[static_cast<std::size_t>(i)]);

    // Distinct streams differ.
    Rng e(7);
    auto f1 = e.fork(1);
    auto f2 = e.fork(2);
    CHECK(f1.next_u64() != f2.next_u64());

    Rng u(9);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        const int k = u.uniform_int(3, 9);
        CHECK(k >= 3);
        CHECK(k <= 9);
    }
}
