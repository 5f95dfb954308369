#pragma once
// Seeded generators of rational toric domains for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "sympack/toric.hpp"

namespace gen {

using sympack::Point;
using sympack::Rational;

inline Rational positive_rational(std::mt19937_64& rng, int max_num, int max_den) {
  return Rational(std::uniform_int_distribution<int>(1, max_num)(rng), std::uniform_int_distribution<int>(1, max_den)(rng));
}

// Edge vectors (dx, dy) with dx > 0 > dy, chained in slope order.
inline std::vector<Point> chain(std::vector<std::pair<Rational, Rational>> edges, bool steep_first) {
  std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    // slope dy/dx; compare dy_a * dx_b with dy_b * dx_a
    Rational sa = a.second / a.first, sb = b.second / b.first;
    return steep_first ? sa < sb : sa > sb;
  });
  Rational height = 0;
  for (const auto& e : edges) height -= e.second;
  std::vector<Point> v{{0, height}};
  for (const auto& e : edges) v.push_back({v.back().x + e.first, v.back().y + e.second});
  return v;
}

inline std::vector<std::pair<Rational, Rational>> random_edges(std::mt19937_64& rng, int max_edges, int max_den) {
  int n = std::uniform_int_distribution<int>(1, max_edges)(rng);
  std::vector<std::pair<Rational, Rational>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({positive_rational(rng, 6, max_den), -positive_rational(rng, 6, max_den)});
  return edges;
}

inline sympack::ConcaveDomain concave(std::mt19937_64& rng, int max_edges = 4, int max_den = 4) {
  return sympack::ConcaveDomain(chain(random_edges(rng, max_edges, max_den), true));
}

// Optionally starts with a horizontal edge and ends with a vertical one.
inline sympack::ConvexDomain convex(std::mt19937_64& rng, int max_edges = 4, int max_den = 4) {
  auto v = chain(random_edges(rng, max_edges, max_den), false);
  std::bernoulli_distribution coin(0.5);
  if (coin(rng)) {
    Rational h = positive_rational(rng, 4, max_den);
    for (auto& p : v) p.x += h;
    v.insert(v.begin(), Point{0, v.front().y});
  }
  if (coin(rng)) {
    Rational h = positive_rational(rng, 4, max_den);
    for (auto& p : v) p.y += h;
    v.push_back(Point{v.back().x, 0});
  }
  return sympack::ConvexDomain(v);
}

}  // namespace gen
