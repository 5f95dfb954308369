#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sympack/packing.hpp"
#include "sympack/parallel.hpp"
#include "sympack/toric.hpp"

namespace sympack {

// (7 + 3 sqrt 5)/2, where the Fibonacci staircase ends
inline QuadraticValue tau_fourth() { return QuadraticValue::linear(Rational(7, 2), Rational(3, 2), 5); }

struct StaircaseSample {
  Rational x;
  CapacityResult value;
};

// Smallest mu with E(1, x) into B(mu): the packing capacity of the weight balls of E(1, x).
inline CapacityResult ms_value(const Rational& x, std::int64_t d_budget, Engine engine = Engine::combined) {
  if (x < 1) throw InputError("out_of_range", "x must be at least 1");
  return packing_capacity(BallConfig(ellipsoid_weights(1, x).weights), d_budget, engine);
}

inline std::vector<Rational> staircase_grid(const Rational& from, const Rational& to, const Rational& step) {
  if (from < 1) throw InputError("out_of_range", "x_from must be at least 1");
  if (to < from) throw InputError("out_of_range", "x_to must not be below x_from");
  if (step <= 0) throw InputError("nonpositive_step", "step must be positive");
  std::vector<Rational> xs;
  for (Rational x = from; x <= to; x += step) xs.push_back(x);
  return xs;
}

// One entry per grid point; the first failure ends the table.
struct StaircaseTable {
  std::vector<StaircaseSample> rows;
  std::optional<std::string> error;
  bool complete() const { return !error; }
};

inline StaircaseTable sample_staircase_partial(const Rational& from, const Rational& to, const Rational& step,
                                               std::int64_t d_budget) {
  auto xs = staircase_grid(from, to, step);
  using Slot = std::variant<CapacityResult, std::string>;
  auto slots = parallel_map(xs.size(), [&](std::size_t i) -> Slot {
    try {
      return ms_value(xs[i], d_budget);
    } catch (const Error& e) {
      return std::string(e.what());
    }
  });
  StaircaseTable out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (auto* err = std::get_if<std::string>(&slots[i])) {
      out.error = "x=" + to_string(xs[i]) + ": " + *err;
      break;
    }
    out.rows.push_back({xs[i], std::get<CapacityResult>(std::move(slots[i]))});
  }
  return out;
}

inline std::vector<StaircaseSample> sample_staircase(const Rational& from, const Rational& to, const Rational& step,
                                                     std::int64_t d_budget) {
  auto xs = staircase_grid(from, to, step);
  auto values = parallel_map(xs.size(), [&](std::size_t i) { return ms_value(xs[i], d_budget); });
  std::vector<StaircaseSample> out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({xs[i], std::move(values[i])});
  return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace detail

inline void write_staircase_csv(std::ostream& os, const StaircaseTable& table) {
  os << "x,lower,upper,attained,witness_d,witness_m,float_value\n";
  for (const auto& r : table.rows) {
    std::string wd, wm;
    if (r.value.witness) {
      wd = std::to_string(r.value.witness->degree());
      for (std::size_t i = 0; i < r.value.witness->length(); ++i)
        wm += (i ? ";" : "") + std::to_string(r.value.witness->multiplicity(i));
    }
    std::ostringstream f;
    f << std::setprecision(12) << r.value.upper.to_double();
    os << to_string(r.x) << ',' << detail::csv_field(r.value.lower.str()) << ','
       << detail::csv_field(r.value.upper.str()) << ',' << to_string(r.value.attained) << ',' << wd << ',' << wm
       << ',' << f.str() << '\n';
  }
  if (table.complete()) os << "status,complete\n";
  else os << "status,error," << detail::csv_field(*table.error) << '\n';
}

}  // namespace sympack
