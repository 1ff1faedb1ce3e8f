#include "moflow/generators.hpp"

#include <random>
#include <stdexcept>

namespace moflow {

namespace {

Arc make_arc(int tail, int head, std::int64_t lower, std::int64_t upper,
             std::vector<Rational> cost) {
  Arc arc;
  arc.tail = tail;
  arc.head = head;
  arc.lower = lower;
  arc.upper = upper;
  arc.cost = std::move(cost);
  return arc;
}

// Uniform draw via modulo; platform-independent given mt19937_64.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

Network fig2_instance() {
  Network network;
  network.node_count = 5;
  network.objective_count = 3;
  network.balance = {1, 0, 3, 0, -4};
  const Rational q52 = make_rational(5, 2);
  const Rational q18 = make_rational(1, 8);
  const Rational q54 = make_rational(5, 4);
  network.arcs.push_back(make_arc(0, 1, 0, 4, {0, 4, q52}));
  network.arcs.push_back(make_arc(1, 2, 0, 4, {0, 4, q52}));
  network.arcs.push_back(make_arc(2, 3, 0, 4, {1, 1, q18}));
  network.arcs.push_back(make_arc(3, 4, 0, 4, {1, 1, q18}));
  network.arcs.push_back(make_arc(0, 2, 0, 4, {4, 4, 5}));
  network.arcs.push_back(make_arc(2, 4, 0, 4, {3, 1, q54}));
  return network;
}

Network star_instance(int n, int d) {
  if (n < 1) throw std::invalid_argument("star size must be >= 1");
  if (d < 1) throw std::invalid_argument("objective count must be >= 1");
  Network network;
  network.node_count = n + 2;
  network.objective_count = d;
  network.balance.assign(network.node_count, 0);
  network.balance.front() = n;
  network.balance.back() = -n;
  const std::vector<Rational> ones(d, Rational(1));
  for (int i = 1; i <= n; ++i) {
    network.arcs.push_back(make_arc(0, i, 0, n, ones));
    network.arcs.push_back(make_arc(i, n + 1, 0, n, ones));
  }
  return network;
}

Network random_instance(const RandomSpec& spec) {
  if (spec.nodes < 1 || spec.objectives < 1 || spec.max_cost < 0 ||
      spec.max_capacity < 0 || spec.arcs < spec.nodes - 1) {
    throw std::invalid_argument("bad random instance parameters");
  }
  std::mt19937_64 rng(spec.seed);
  Network network;
  network.node_count = spec.nodes;
  network.objective_count = spec.objectives;
  network.balance.assign(spec.nodes, 0);

  // Spanning tree first (connectivity), then extra arcs; parallel arcs are
  // allowed, self-loops are not.
  for (int a = 0; a < spec.arcs; ++a) {
    int tail, head;
    if (a < spec.nodes - 1) {
      const int other = static_cast<int>(draw(rng, a + 1));
      const bool outward = draw(rng, 2) == 0;
      tail = outward ? other : a + 1;
      head = outward ? a + 1 : other;
    } else {
      tail = static_cast<int>(draw(rng, spec.nodes));
      head = static_cast<int>(draw(rng, spec.nodes - 1));
      if (head >= tail) ++head;
    }
    Arc arc;
    arc.tail = tail;
    arc.head = head;
    arc.upper = static_cast<std::int64_t>(draw(rng, spec.max_capacity + 1));
    arc.cost.reserve(spec.objectives);
    for (int k = 0; k < spec.objectives; ++k) {
      arc.cost.push_back(
          make_rational(static_cast<long>(draw(rng, spec.max_cost + 1))));
    }
    network.arcs.push_back(std::move(arc));
  }

  // Balances come from a random flow; a quarter of the arcs also get a
  // positive lower bound below that flow value. Keeps every instance
  // feasible by construction.
  for (Arc& arc : network.arcs) {
    const std::int64_t value =
        static_cast<std::int64_t>(draw(rng, arc.upper + 1));
    if (value > 0 && draw(rng, 4) == 0) {
      arc.lower = static_cast<std::int64_t>(draw(rng, value + 1));
    }
    network.balance[arc.tail] += value;
    network.balance[arc.head] -= value;
  }
  return network;
}

}  // namespace moflow
