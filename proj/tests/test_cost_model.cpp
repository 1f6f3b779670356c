#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "roam/cost_model.hpp"
#include "roam/ers_schedule.hpp"
#include "roam/sim/rng.hpp"

using namespace roam;

namespace {

NetworkProfile profile(double p, double d_avg, std::vector<double> d_f = {}) {
    NetworkProfile np;
    np.p_broadcast = p;
    np.d_avg = d_avg;
    np.d_f = std::move(d_f);
    return np;
}

// Three-ring toy schedule used by the worked examples: TTLs 1,3,5.
RingSchedule toy_schedule() {
    RingSchedule s;
    s.protocol = Protocol::Dymo;
    s.ttls = {1, 3, 5};
    s.timeouts = {0.1, 0.1, 0.1};
    s.max_ttl_cap = 5;
    return s;
}

bool close(double a, double b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("blind flood cost worked examples") {
    CHECK(close(blind_flood_cost(1, profile(1.0, 4.0)), 4.0));
    CHECK(close(blind_flood_cost(2, profile(0.5, 4.0, {2.0})), 4.0));
    CHECK(close(blind_flood_cost(3, profile(1.0, 2.0, {1.0, 1.0})), 6.0));
}

TEST_CASE("blind flood cost rejects bad input") {
    CHECK_THROWS_AS(blind_flood_cost(0, profile(1.0, 4.0)), std::invalid_argument);
    CHECK_THROWS_AS(blind_flood_cost(3, profile(1.0, 4.0, {2.0})), std::invalid_argument);
    CHECK_THROWS_AS(blind_flood_cost(1, profile(1.5, 4.0)), std::invalid_argument);
}

TEST_CASE("ring energy equals blind flood at the rings TTL") {
    CHECK(close(ring_energy_cost(1, profile(1.0, 2.0)), 2.0));
    CHECK(close(ring_energy_cost(3, profile(1.0, 2.0, {1.0, 1.0})), 6.0));
    CHECK(close(ring_energy_cost(5, profile(1.0, 2.0, {1.0, 1.0, 1.0, 1.0})), 10.0));

    sim::Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const int ttl = rng.uniform_int(1, 6);
        std::vector<double> d_f;
        for (int j = 0; j < ttl; ++j) d_f.push_back(rng.uniform(0.0, 4.0));
        const auto p = profile(rng.uniform(), rng.uniform(0.0, 8.0), d_f);
        CHECK(ring_energy_cost(ttl, p) == blind_flood_cost(ttl, p));
    }
}

TEST_CASE("ers rreq energy over the toy schedule") {
    const auto p = profile(1.0, 2.0, {1.0, 1.0, 1.0, 1.0});
    const auto sched = toy_schedule();
    CHECK(close(ers_rreq_energy_cost(sched, DiscoveryOutcome::no_reply(), p), 18.0));
    CHECK(close(ers_rreq_energy_cost(sched, DiscoveryOutcome::reply_at_ring(1, {1}), p), 2.0));
    CHECK(close(ers_rreq_energy_cost(sched, DiscoveryOutcome::reply_at_ring(2, {2}), p), 8.0));
    CHECK_THROWS_AS(ers_rreq_energy_cost(sched, DiscoveryOutcome::reply_at_ring(4, {}), p),
                    std::invalid_argument);
}

TEST_CASE("ers cost is monotone in the reply ring, no-reply is the max") {
    const auto p = profile(0.8, 3.0, {2.0, 1.5, 1.0, 0.5});
    const auto sched = toy_schedule();
    double prev = 0.0;
    for (int k = 1; k <= sched.ring_count(); ++k) {
        const double c = ers_rreq_energy_cost(sched, DiscoveryOutcome::reply_at_ring(k, {1}), p);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(ers_rreq_energy_cost(sched, DiscoveryOutcome::no_reply(), p) >= prev);
}

TEST_CASE("rd energy adds one transmission per RREP hop") {
    const auto p = profile(1.0, 2.0, {1.0, 1.0, 1.0, 1.0});
    const auto sched = toy_schedule();
    CHECK(close(rd_energy_cost(sched, DiscoveryOutcome::reply_at_ring(2, {2}), p), 10.0));
    CHECK(close(rd_energy_cost(sched, DiscoveryOutcome::reply_at_ring(1, {1}), p), 3.0));
    CHECK(close(rd_energy_cost(sched, DiscoveryOutcome::no_reply(), p), 18.0));
}

TEST_CASE("blind flood monotonicity in every argument") {
    sim::Rng rng(97);
    for (int i = 0; i < 300; ++i) {
        const int h = rng.uniform_int(1, 5);
        std::vector<double> d_f;
        for (int j = 0; j < h; ++j) d_f.push_back(rng.uniform(0.0, 3.0));
        const double p = rng.uniform();
        const double d_avg = rng.uniform(0.0, 6.0);
        const double base = blind_flood_cost(h, profile(p, d_avg, d_f));

        CHECK(blind_flood_cost(h, profile(std::min(1.0, p + 0.1), d_avg, d_f)) >= base);
        CHECK(blind_flood_cost(h, profile(p, d_avg + 1.0, d_f)) >= base);
        CHECK(blind_flood_cost(h + 1, profile(p, d_avg, d_f)) >= base);
        auto bumped = d_f;
        bumped[static_cast<std::size_t>(rng.uniform_int(0, h - 1))] += 1.0;
        CHECK(blind_flood_cost(h, profile(p, d_avg, bumped)) >= base);
    }
}

TEST_CASE("flood cost closed forms") {
    // P_S = 0 kills everything.
    CHECK(blind_flood_cost(4, profile(0.0, 5.0, {2.0, 2.0, 2.0})) == 0.0);
    CHECK(llr_energy_cost(3, profile(0.0, 3.0, {2.0, 2.0})) == 0.0);

    // P_S = 1 with constant forward degree d: d_avg * (1 + sum d^i).
    for (double d : {0.5, 1.0, 2.0, 3.0}) {
        for (int h = 1; h <= 5; ++h) {
            std::vector<double> d_f(static_cast<std::size_t>(h), d);
            double geo = 1.0;
            double term = 1.0;
            for (int i = 1; i <= h - 1; ++i) {
                term *= d;
                geo += term;
            }
            CHECK(close(blind_flood_cost(h, profile(1.0, 4.0, d_f)), 4.0 * geo));
        }
    }
}

TEST_CASE("link monitor cost") {
    ProtocolConstants aodv = ProtocolConstants::aodv_defaults();
    MaintenanceEvent ev;
    ev.link_active_time = 10.0;
    ev.route_hop_count = 3;
    CHECK(close(link_monitor_cost(ev, aodv), 30.0));

    ev.link_active_time = 0.0;
    CHECK(link_monitor_cost(ev, aodv) == 0.0);

    ev.link_active_time = 50.0;
    ProtocolConstants dsr = ProtocolConstants::dsr_defaults();
    CHECK(link_monitor_cost(ev, dsr) == 0.0);

    ProtocolConstants broken = aodv;
    broken.hello_interval = 0.0;
    CHECK_THROWS_AS(link_monitor_cost(ev, broken), std::invalid_argument);
}

TEST_CASE("llr ttl rule") {
    const ProtocolConstants k = ProtocolConstants::aodv_defaults();  // LOCAL_ADD_TTL = 2
    CHECK(llr_ttl(3, 4, k) == 5);
    CHECK(llr_ttl(1, 8, k) == 6);
    CHECK(llr_ttl(0, 0, k) == 2);
    CHECK(llr_ttl(2, 3, k) == 4);  // ceil(1.5) = 2 before the max

    sim::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const int mr = rng.uniform_int(0, 10);
        const int hops = rng.uniform_int(0, 20);
        CHECK(llr_ttl(mr, hops, k) >= mr + k.local_add_ttl);
    }
}

TEST_CASE("llr energy examples") {
    CHECK(close(llr_energy_cost(1, profile(1.0, 3.0)), 3.0));
    CHECK(close(llr_energy_cost(5, profile(1.0, 2.0, {1.0, 1.0, 1.0, 1.0})), 10.0));
    CHECK(llr_energy_cost(4, profile(0.0, 2.0, {1.0, 1.0, 1.0})) == 0.0);
}

TEST_CASE("rm energy per protocol") {
    const auto flat = profile(1.0, 2.0, {1.0, 1.0, 1.0, 1.0});

    SUBCASE("dymo is monitoring plus rerr") {
        ProtocolConstants k = ProtocolConstants::dymo_defaults();
        MaintenanceEvent ev;
        ev.link_active_time = 10.0;
        ev.route_hop_count = 3;
        ev.rerr_transmissions = 4;
        CHECK(close(rm_energy_cost(Protocol::Dymo, ev, flat, k), 34.0));
    }
    SUBCASE("aodv adds the repair flood") {
        ProtocolConstants k = ProtocolConstants::aodv_defaults();
        MaintenanceEvent ev;
        ev.link_active_time = 20.0;
        ev.route_hop_count = 1;
        ev.rerr_transmissions = 0;
        ev.llr = LlrAttempt{3, 0, true};  // ttl = max(3,0)+2 = 5 -> cost 10
        CHECK(close(rm_energy_cost(Protocol::Aodv, ev, flat, k), 30.0));
    }
    SUBCASE("dsr charges one packet per checked node") {
        ProtocolConstants k = ProtocolConstants::dsr_defaults();
        MaintenanceEvent ev;
        ev.rerr_transmissions = 2;
        ev.ps = PsAttempt{3, 5, true};
        CHECK(close(rm_energy_cost(Protocol::Dsr, ev, flat, k), 5.0));
        ev.ps->succeeded = false;  // counts the walk to the originator
        CHECK(close(rm_energy_cost(Protocol::Dsr, ev, flat, k), 7.0));
    }
    SUBCASE("protocol and event must match") {
        ProtocolConstants k = ProtocolConstants::aodv_defaults();
        MaintenanceEvent ev;
        ev.ps = PsAttempt{1, 1, true};
        CHECK_THROWS_AS(rm_energy_cost(Protocol::Aodv, ev, flat, k), std::invalid_argument);
        MaintenanceEvent ev2;
        ev2.llr = LlrAttempt{1, 1, true};
        CHECK_THROWS_AS(rm_energy_cost(Protocol::Dsr, ev2, flat, k), std::invalid_argument);
        CHECK_THROWS_AS(rm_energy_cost(Protocol::Dymo, ev2, flat, k), std::invalid_argument);
    }
}

TEST_CASE("dsr discovery time uses binary exponential backoff sums") {
    ProtocolConstants k = ProtocolConstants::dsr_defaults();  // tau = 30 ms
    RingSchedule sched;
    sched.protocol = Protocol::Dsr;
    sched.ttls = {1, 255, 255, 255};
    sched.timeouts = {0.030, 0.030, 0.060, 0.120};
    sched.max_ttl_cap = 255;

    CHECK(close(rd_time_cost_dsr(sched, DiscoveryOutcome::reply_at_ring(1, {1}), k), 0.030));
    CHECK(close(rd_time_cost_dsr(sched, DiscoveryOutcome::reply_at_ring(3, {2}), k), 0.210));
    CHECK(close(rd_time_cost_dsr(sched, DiscoveryOutcome::no_reply(), k), 0.450));

    // (2^n - 1) tau in closed form.
    for (int n = 1; n <= 8; ++n) {
        RingSchedule s;
        s.protocol = Protocol::Dsr;
        s.ttls.assign(static_cast<std::size_t>(n), 255);
        s.timeouts.assign(static_cast<std::size_t>(n), 0.030);
        s.max_ttl_cap = 255;
        const double expect = (std::ldexp(1.0, n) - 1.0) * 0.030;
        CHECK(close(rd_time_cost_dsr(s, DiscoveryOutcome::no_reply(), k), expect));
    }
}

TEST_CASE("aodv/dymo discovery time over ring TTLs") {
    ProtocolConstants k = ProtocolConstants::aodv_defaults();  // ntt 40 ms, buffer 2
    RingSchedule sched;
    sched.protocol = Protocol::Aodv;
    sched.ttls = {2, 4, 6, 35};
    sched.timeouts = {0.32, 0.48, 0.64, 2.96};
    sched.max_ttl_cap = 35;

    CHECK(close(rd_time_cost_aodv_dymo(sched, DiscoveryOutcome::reply_at_ring(1, {1}), k), 0.320));
    CHECK(close(rd_time_cost_aodv_dymo(sched, DiscoveryOutcome::reply_at_ring(2, {2}), k), 0.800));
    CHECK(close(rd_time_cost_aodv_dymo(sched, DiscoveryOutcome::no_reply(), k), 4.400));
}

TEST_CASE("llr time cost") {
    ProtocolConstants k = ProtocolConstants::aodv_defaults();
    CHECK(close(llr_time_cost(5, k), 0.560));
    CHECK(close(llr_time_cost(2, k), 0.320));
    ProtocolConstants zero = k;
    zero.node_traversal_time = 0.0;
    CHECK(llr_time_cost(3, zero) == 0.0);
}

TEST_CASE("rm time cost per protocol") {
    SUBCASE("aodv case A") {
        ProtocolConstants k = ProtocolConstants::aodv_defaults();
        MaintenanceEvent ev;
        ev.llr = LlrAttempt{3, 0, true};  // ttl 5
        RingSchedule sched = build_schedule(k);
        CHECK(close(rm_time_cost(Protocol::Aodv, ev, sched, k), 0.560));
    }
    SUBCASE("dsr salvage success is linear in checked nodes") {
        ProtocolConstants k = ProtocolConstants::dsr_defaults();  // 1 ms per node
        MaintenanceEvent ev;
        ev.ps = PsAttempt{3, 5, true};
        RingSchedule sched = build_schedule(k);
        CHECK(close(rm_time_cost(Protocol::Dsr, ev, sched, k), 0.003));
    }
    SUBCASE("dymo with retries expired is just the RERR travel time") {
        ProtocolConstants k = ProtocolConstants::dymo_defaults();
        MaintenanceEvent ev;
        ev.rerr_receive_time = 0.12;
        RingSchedule sched = build_schedule(k);
        CHECK(close(rm_time_cost(Protocol::Dymo, ev, sched, k), 0.120));
    }
    SUBCASE("dsr failure without rediscovery data is an error") {
        ProtocolConstants k = ProtocolConstants::dsr_defaults();
        MaintenanceEvent ev;
        ev.ps = PsAttempt{2, 4, false};
        RingSchedule sched = build_schedule(k);
        CHECK_THROWS_AS(rm_time_cost(Protocol::Dsr, ev, sched, k), std::invalid_argument);
    }
}

TEST_CASE("aodv repair-time cases order C >= B >= A") {
    ProtocolConstants k = ProtocolConstants::aodv_defaults();
    RingSchedule sched = build_schedule(k);
    sim::Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        MaintenanceEvent ev;
        ev.rerr_receive_time = rng.uniform(0.0, 0.5);
        const int mr = rng.uniform_int(0, 6);
        const int hops = rng.uniform_int(0, 12);
        const int ring = rng.uniform_int(1, sched.ring_count());

        ev.llr = LlrAttempt{mr, hops, true};
        const double a = rm_time_cost(Protocol::Aodv, ev, sched, k);

        ev.llr->succeeded = false;
        const double b = rm_time_cost(Protocol::Aodv, ev, sched, k);

        ev.rediscovery = DiscoveryOutcome::reply_at_ring(ring, {1});
        const double c = rm_time_cost(Protocol::Aodv, ev, sched, k);

        CHECK(b >= a);
        CHECK(c >= b);
    }
}

TEST_CASE("aggregate costs satisfies the additivity and product rules") {
    const CostBreakdown b = aggregate_costs(10.0, 34.0, 0.32, 0.12);
    CHECK(close(b.e_total, 44.0));
    CHECK(close(b.t_total, 0.44));
    CHECK(close(b.c_total, 19.36));

    const CostBreakdown z = aggregate_costs(0.0, 0.0, 0.0, 0.0);
    CHECK(z.e_total == 0.0);
    CHECK(z.t_total == 0.0);
    CHECK(z.c_total == 0.0);

    const CostBreakdown rd = aggregate_costs(18.0, 0.0, 4.4, 0.0);
    CHECK(close(rd.c_total, 79.2));

    CHECK_THROWS_AS(aggregate_costs(-1.0, 0.0, 0.0, 0.0), std::invalid_argument);

    sim::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const double e1 = rng.uniform(0.0, 100.0);
        const double e2 = rng.uniform(0.0, 100.0);
        const double t1 = rng.uniform(0.0, 10.0);
        const double t2 = rng.uniform(0.0, 10.0);
        const CostBreakdown r = aggregate_costs(e1, e2, t1, t2);
        CHECK(r.e_total == e1 + e2);
        CHECK(r.t_total == t1 + t2);
        CHECK(r.c_total == r.e_total * r.t_total);
    }
}
