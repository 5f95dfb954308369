#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympack/ech.hpp"
#include "sympack/packing.hpp"
#include "sympack/toric.hpp"

namespace sympack {

// The factor every problem is crossed with: a closed surface of genus g and area L, or an
// arbitrary closed manifold whose asphericity the caller vouches for.
struct Fiber {
  enum class Kind { surface, manifold };
  Kind kind = Kind::surface;
  std::int64_t genus = 1;
  Rational area = 1;
  std::string tag;
  bool aspherical_flag = false;

  static Fiber surface(std::int64_t g, Rational L) {
    if (g < 0) throw InputError("invalid_genus", "genus must be nonnegative");
    if (L <= 0) throw InputError("nonpositive_area", "fiber area must be positive");
    Fiber f;
    f.genus = g;
    f.area = std::move(L);
    return f;
  }
  static Fiber manifold(std::string tag, bool aspherical) {
    Fiber f;
    f.kind = Kind::manifold;
    f.tag = std::move(tag);
    f.aspherical_flag = aspherical;
    return f;
  }

  // the symplectic form kills pi_2: false for the sphere, true for higher genus
  bool aspherical() const { return kind == Kind::surface ? genus >= 1 : aspherical_flag; }
  std::string str() const {
    if (kind == Kind::manifold) return tag;
    return "Sigma_" + std::to_string(genus) + "(" + to_string(area) + ")";
  }
};

struct StabilizedDecision {
  Decision decision = Decision::undecided;
  std::vector<std::string> basis;
  bool fiber_independent = true;
  std::optional<CapacityResult> capacity;
  std::optional<bool> ech_dominates;
  std::int64_t ech_k_max = 0;
};

inline StabilizedDecision decide_stabilized_packing(const BallConfig& sizes, const Rational& R, const Fiber& fiber,
                                                    Convention convention = Convention::open_target,
                                                    const DecisionOptions& options = {}) {
  if (fiber.kind != Fiber::Kind::surface) throw InputError("unsupported_fiber", "ball packings take a surface fiber");
  auto d = decide_packing_detailed(sizes, R, convention, options);
  StabilizedDecision out;
  out.decision = d.decision;
  out.capacity = std::move(d.capacity);
  out.basis = {fiber.genus >= 1 ? "Theorem A" : "Section 4.2"};
  return out;
}

inline StabilizedDecision decide_stabilized_packing(const BallConfig& sizes, const Rational& R, std::int64_t g,
                                                    const Rational& L, Convention convention = Convention::open_target,
                                                    const DecisionOptions& options = {}) {
  return decide_stabilized_packing(sizes, R, Fiber::surface(g, L), convention, options);
}

enum class TwoBallDecision { no, yes, conjecturally_yes };

inline std::string to_string(TwoBallDecision d) {
  switch (d) {
    case TwoBallDecision::no: return "no";
    case TwoBallDecision::yes: return "yes";
    default: return "conjecturally-yes";
  }
}

struct TwoBallResult {
  TwoBallDecision decision = TwoBallDecision::no;
  std::vector<std::string> basis;
  bool fiber_independent = true;
};

// B^{2n}(R1) and B^{2n}(R2), both crossed with the fiber, into B^{2n}(R) crossed with it.
inline TwoBallResult decide_stabilized_two_ball(std::int64_t n, const Rational& R1, const Rational& R2,
                                                const Rational& R, const Fiber& fiber) {
  if (n < 2) throw InputError("invalid_dimension", "half-dimension n must be at least 2");
  if (R1 <= 0 || R2 <= 0 || R <= 0) throw InputError("nonpositive_size", "sizes must be positive");
  if (!fiber.aspherical())
    throw HypothesisError("fiber " + fiber.str() + " is not symplectically aspherical: its form must vanish on pi_2");
  TwoBallResult out;
  out.basis = {"Theorem B"};
  if (R1 + R2 >= R) out.decision = TwoBallDecision::no;
  else if (n == 2 || R1 == R2) out.decision = TwoBallDecision::yes;
  else out.decision = TwoBallDecision::conjecturally_yes;
  return out;
}

inline TwoBallResult decide_stabilized_two_ball(std::int64_t n, const Rational& R1, const Rational& R2,
                                                const Rational& R, bool aspherical) {
  return decide_stabilized_two_ball(n, R1, R2, R, Fiber::manifold("N", aspherical));
}

struct StabilizedToricOptions {
  DecisionOptions decision;
  std::int64_t ech_k_max = 0;  // 0 skips the ECH cross-check
  ConvexEchOptions ech;
};

inline StabilizedDecision decide_stabilized_toric(const ConcaveDomain& source, const ConvexDomain& target,
                                                  const Fiber& fiber, Convention convention = Convention::open_target,
                                                  const StabilizedToricOptions& options = {}) {
  if (fiber.kind == Fiber::Kind::surface && fiber.area <= 0)
    throw InputError("nonpositive_area", "fiber area must be positive");
  auto d = decide_concave_into_convex_detailed(source, target, convention, options.decision);
  StabilizedDecision out;
  out.decision = d.decision;
  out.capacity = std::move(d.capacity);
  out.basis = {"Theorem D"};
  if (options.ech_k_max > 0) {
    out.ech_k_max = options.ech_k_max;
    out.ech_dominates = ech_dominates(source, target, options.ech_k_max, options.ech);
  }
  return out;
}

inline StabilizedDecision decide_stabilized_toric(const ConcaveDomain& source, const ConvexDomain& target,
                                                  std::int64_t g, const Rational& L,
                                                  Convention convention = Convention::open_target,
                                                  const StabilizedToricOptions& options = {}) {
  return decide_stabilized_toric(source, target, Fiber::surface(g, L), convention, options);
}

}  // namespace sympack
