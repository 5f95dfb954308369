#pragma once
// The sympack command line: run(args, out, err) returns the process exit code.
//   0  decided / success
//   1  input or hypothesis error
//   2  undecided within budget, or a resource bound was hit

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sympack/ech.hpp"
#include "sympack/exceptional.hpp"
#include "sympack/highdim.hpp"
#include "sympack/io/domain_document.hpp"
#include "sympack/io/json.hpp"
#include "sympack/packing.hpp"
#include "sympack/stabilized.hpp"
#include "sympack/staircase.hpp"
#include "sympack/toric.hpp"

namespace sympack::cli {

using io::Json;

namespace detail {

struct Globals {
  std::int64_t dmax = -1;  // -1: the command's own default
  std::int64_t kmax = -1;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string convention = "open";
  std::string engine = "combined";
  int json_indent = -1;

  std::int64_t dmax_or(std::int64_t d) const { return dmax < 0 ? d : dmax; }
  std::int64_t kmax_or(std::int64_t k) const { return kmax < 0 ? k : kmax; }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("file_not_found", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline io::DomainDocument load_domain(const std::string& path) { return io::parse_domain_document(read_file(path)); }

inline Rational parse_positive(const std::string& text, const char* what) {
  Rational r = parse_rational(text);
  if (r <= 0) throw InputError("nonpositive_size", std::string(what) + " must be positive");
  return r;
}

inline int decision_exit(Decision d) { return d == Decision::undecided ? 2 : 0; }

inline int capacity_exit(const CapacityResult& r) {
  return r.exact() && r.attained != Attainment::unknown ? 0 : 2;
}

inline Json fiber_json(const Fiber& f) {
  if (f.kind == Fiber::Kind::manifold) return {{"kind", "manifold"}, {"tag", f.tag}, {"aspherical", f.aspherical_flag}};
  return {{"kind", "surface"}, {"genus", f.genus}, {"area", to_string(f.area)}};
}

inline Json stabilized_json(const StabilizedDecision& d, const Fiber& f) {
  Json j{{"decision", to_string(d.decision)},
         {"basis", d.basis},
         {"fiber_independent", d.fiber_independent},
         {"fiber", fiber_json(f)}};
  j["capacity"] = d.capacity ? io::capacity_json(*d.capacity) : Json(nullptr);
  if (d.ech_dominates) j["ech_dominates"] = {{"k_max", d.ech_k_max}, {"holds", *d.ech_dominates}};
  return j;
}

inline Json bounds_json(const QuadraticValue& lo, const QuadraticValue& hi) {
  if (lo == hi) return io::quadratic_json(hi);
  return {{"kind", "interval"}, {"lower", io::quadratic_json(lo)}, {"upper", io::quadratic_json(hi)}};
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symplectic ball packing, toric embedding and ECH capacity computations", "sympack"};
  app.fallthrough();
  app.require_subcommand(1);
  detail::Globals g;
  app.add_option("--dmax", g.dmax, "degree budget");
  app.add_option("--kmax", g.kmax, "index or length budget");
  app.add_option("--seed", g.seed, "seed for randomized drivers (default 1)");
  app.add_option("--out", g.out_path, "write the primary output to this file");
  app.add_option("--convention", g.convention, "open or closed target");
  app.add_option("--engine", g.engine, "full, exceptional or combined");
  app.add_option("--json-indent", g.json_indent, "JSON indentation; -1 prints one line");

  std::ostringstream primary;
  int code = 0;
  auto emit = [&](const Json& j) { primary << j.dump(g.json_indent) << '\n'; };

  // capacity
  std::string balls;
  auto* capacity = app.add_subcommand("capacity", "packing capacity of a ball configuration");
  capacity->add_option("--balls", balls, "comma-separated sizes, e.g. \"1,1,5/2\"")->required();
  capacity->callback([&] {
    auto r = packing_capacity(parse_ball_list(balls), g.dmax_or(20), parse_engine(g.engine));
    emit(io::capacity_json(r));
    code = detail::capacity_exit(r);
  });

  // pack
  std::string target;
  std::int64_t max_degree = 80;
  auto* pack = app.add_subcommand("pack", "decide a ball packing into B(R)");
  pack->add_option("--balls", balls)->required();
  pack->add_option("--target", target, "target size R")->required();
  pack->add_option("--max-degree", max_degree, "largest degree budget tried while undecided");
  pack->callback([&] {
    DecisionOptions opt{g.dmax_or(20), std::max(max_degree, g.dmax_or(20)), parse_engine(g.engine)};
    auto conv = parse_convention(g.convention);
    auto d = decide_packing_detailed(parse_ball_list(balls), parse_rational(target), conv, opt);
    emit({{"decision", to_string(d.decision)}, {"convention", to_string(conv)}, {"capacity", io::capacity_json(d.capacity)}});
    code = detail::decision_exit(d.decision);
  });

  // exceptional
  auto* exceptional = app.add_subcommand("exceptional", "exceptional vectors up to a degree");
  exceptional->callback([&] {
    auto list = enumerate_exceptional(g.dmax_or(6), static_cast<std::size_t>(g.kmax_or(8)));
    Json a = Json::array();
    for (const auto& t : list) a.push_back(io::tuple_json(t));
    emit(a);
  });

  // weights
  std::string domain_path, role = "auto";
  auto* weights = app.add_subcommand("weights", "weight sequence of a toric domain");
  weights->add_option("--domain", domain_path, "domain JSON file")->required();
  weights->add_option("--role", role, "auto, concave or convex (triangles allow both)");
  weights->callback([&] {
    auto doc = detail::load_domain(domain_path);
    bool convex = role == "convex" || (role == "auto" && std::holds_alternative<ConvexDomain>(doc.domain));
    if (role != "auto" && role != "concave" && role != "convex")
      throw InputError("unknown_role", "role must be auto, concave or convex");
    if (convex) {
      auto w = negative_weight_sequence(io::as_convex(doc));
      emit({{"kind", "convex"}, {"head", to_string(*w.head)}, {"weights", io::rational_list_json(w.weights)}});
    } else {
      auto w = weight_sequence(io::as_concave(doc));
      emit({{"kind", "concave"}, {"head", nullptr}, {"weights", io::rational_list_json(w.weights)}});
    }
  });

  // ech and ech compare
  auto* ech = app.add_subcommand("ech", "ECH capacities c_0..c_kmax of a toric domain");
  ech->require_subcommand(0, 1);
  ech->add_option("--domain", domain_path, "domain JSON file");
  std::string concave_path, convex_path;
  auto* compare = ech->add_subcommand("compare", "check c_k(concave) <= c_k(convex) for k <= kmax");
  compare->add_option("--concave", concave_path)->required();
  compare->add_option("--convex", convex_path)->required();
  compare->callback([&] {
    auto r = ech_compare(io::as_concave(detail::load_domain(concave_path)),
                         io::as_convex(detail::load_domain(convex_path)), g.kmax_or(50));
    emit({{"dominates", r.dominates},
          {"k_max", r.k_max},
          {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)},
          {"concave", io::rational_list_json(r.concave)},
          {"convex", io::rational_list_json(r.convex)}});
  });
  ech->callback([&] {
    if (compare->parsed()) return;
    if (domain_path.empty()) throw InputError("missing_field", "ech needs --domain or the compare subcommand");
    auto doc = detail::load_domain(domain_path);
    auto n = static_cast<std::size_t>(g.kmax_or(50));
    auto seq = std::holds_alternative<ConvexDomain>(doc.domain) ? convex_sequence(io::as_convex(doc))
                                                                 : concave_sequence(io::as_concave(doc));
    emit(io::rational_list_json(seq.prefix(n)));
  });

  // staircase
  std::string from, to, step = "1";
  auto* staircase = app.add_subcommand("staircase", "sample x -> capacity of E(1,x) into a ball as CSV");
  staircase->add_option("--from", from)->required();
  staircase->add_option("--to", to)->required();
  staircase->add_option("--step", step);
  staircase->callback([&] {
    auto table = sample_staircase_partial(parse_rational(from), parse_rational(to), parse_rational(step),
                                          g.dmax_or(20));
    write_staircase_csv(primary, table);
    code = table.complete() ? 0 : 2;
  });

  // stabilized
  auto* stabilized = app.add_subcommand("stabilized", "problems crossed with a closed surface or manifold");
  stabilized->require_subcommand(1);
  std::int64_t genus = 1;
  std::string area = "1", manifold;
  bool aspherical = false;
  auto add_fiber = [&](CLI::App* sub) {
    sub->add_option("--genus", genus, "fiber genus (default 1)");
    sub->add_option("--area", area, "fiber area (default 1)");
  };
  auto fiber = [&] { return Fiber::surface(genus, parse_rational(area)); };

  auto* spack = stabilized->add_subcommand("pack", "ball packing times a surface");
  spack->add_option("--balls", balls)->required();
  spack->add_option("--target", target)->required();
  add_fiber(spack);
  spack->callback([&] {
    auto f = fiber();
    DecisionOptions opt{g.dmax_or(20), std::max<std::int64_t>(80, g.dmax_or(20)), parse_engine(g.engine)};
    auto d = decide_stabilized_packing(parse_ball_list(balls), parse_rational(target), f,
                                       parse_convention(g.convention), opt);
    emit(detail::stabilized_json(d, f));
    code = detail::decision_exit(d.decision);
  });

  std::int64_t n = 2;
  std::string r1, r2;
  auto* twoball = stabilized->add_subcommand("twoball", "two balls in dimension 2n times a fiber");
  twoball->add_option("--n", n, "half-dimension")->required();
  twoball->add_option("--r1", r1)->required();
  twoball->add_option("--r2", r2)->required();
  twoball->add_option("--target", target)->required();
  add_fiber(twoball);
  twoball->add_option("--manifold", manifold, "use a named fiber manifold instead of a surface");
  twoball->add_flag("--aspherical", aspherical, "assert that the named manifold is symplectically aspherical");
  twoball->callback([&] {
    Fiber f = manifold.empty() ? fiber() : Fiber::manifold(manifold, aspherical);
    auto r = decide_stabilized_two_ball(n, detail::parse_positive(r1, "r1"), detail::parse_positive(r2, "r2"),
                                        detail::parse_positive(target, "target"), f);
    emit({{"decision", to_string(r.decision)},
          {"basis", r.basis},
          {"fiber_independent", r.fiber_independent},
          {"fiber", detail::fiber_json(f)}});
  });

  auto* stoTric = stabilized->add_subcommand("toric", "concave into convex toric domain times a surface");
  stoTric->add_option("--concave", concave_path)->required();
  stoTric->add_option("--convex", convex_path)->required();
  add_fiber(stoTric);
  stoTric->callback([&] {
    auto f = fiber();
    StabilizedToricOptions opt;
    opt.decision = {g.dmax_or(20), std::max<std::int64_t>(80, g.dmax_or(20)), parse_engine(g.engine)};
    opt.ech_k_max = g.kmax_or(50);
    auto d = decide_stabilized_toric(io::as_concave(detail::load_domain(concave_path)),
                                     io::as_convex(detail::load_domain(convex_path)), f,
                                     parse_convention(g.convention), opt);
    emit(detail::stabilized_json(d, f));
    code = detail::decision_exit(d.decision);
  });

  // highdim
  auto* highdim = app.add_subcommand("highdim", "index/energy checks and equal packings in dimension 2n");
  highdim->require_subcommand(1);
  std::int64_t k = 1;
  bool exhaustive = false;
  auto* verify = highdim->add_subcommand("verify", "no tuple with nonnegative index beats the two-ball bound");
  verify->add_option("--n", n)->required();
  verify->add_option("--balls", balls)->required();
  verify->add_option("--target", target)->required();
  verify->add_flag("--exhaustive", exhaustive, "list every tuple");
  verify->callback([&] {
    HigherDimProblem p(n, parse_ball_list(balls), parse_rational(target));
    auto r = verify_no_new_obstruction(p, g.dmax_or(30), {exhaustive});
    Json v = Json::array();
    for (const auto& x : r.violations)
      v.push_back({{"tuple", io::tuple_json(x.tuple)}, {"energy", to_string(x.energy)}, {"index", x.index}});
    emit({{"n", r.n},
          {"d_max", r.d_max},
          {"tuples_scanned", r.tuples_scanned.str()},
          {"classes_checked", r.classes_checked},
          {"exhaustive", r.exhaustive},
          {"violations", v}});
  });
  auto* equal = highdim->add_subcommand("equal", "largest volume fraction filled by k equal balls");
  equal->add_option("--n", n)->required();
  equal->add_option("--k", k)->required();
  equal->callback([&] {
    auto v = equal_packing_value(n, k, g.dmax_or(30));
    emit({{"n", n}, {"k", k}, {"value", detail::bounds_json(v.lower, v.upper)}, {"status", v.status}, {"notes", v.notes}});
    code = v.exact() ? 0 : 2;
  });
  auto* feasible = highdim->add_subcommand("feasible", "volume and two-ball conditions");
  feasible->add_option("--n", n)->required();
  feasible->add_option("--balls", balls)->required();
  feasible->add_option("--target", target)->required();
  feasible->callback([&] {
    auto r = conjectureA_feasible(HigherDimProblem(n, parse_ball_list(balls), parse_rational(target)));
    emit({{"decision", to_string(r.decision)}, {"status", r.status}, {"reason", r.reason}});
  });

  // check: seeded cross-check of the two capacity engines
  std::int64_t count = 100;
  auto* check = app.add_subcommand("check", "seeded agreement check between the capacity engines");
  check->add_option("--count", count, "number of random configurations");
  check->callback([&] {
    std::mt19937_64 rng(g.seed);
    std::int64_t certified = 0, agree = 0;
    Json bad = Json::array();
    for (std::int64_t i = 0; i < count; ++i) {
      int len = std::uniform_int_distribution<int>(1, 5)(rng);
      std::vector<Rational> s;
      for (int j = 0; j < len; ++j) s.push_back(Rational(std::uniform_int_distribution<int>(1, 8)(rng), 4));
      BallConfig c(s);
      auto a = packing_capacity(c, g.dmax_or(20), Engine::full_tuples);
      auto b = packing_capacity(c, g.dmax_or(20), Engine::exceptional_only);
      if (!a.exact() || !b.exact()) continue;
      ++certified;
      if (a.upper == b.upper) ++agree;
      else bad.push_back(c.str());
    }
    emit({{"seed", g.seed}, {"count", count}, {"certified", certified}, {"agree", agree}, {"disagreements", bad}});
    code = bad.empty() ? 0 : 2;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error[" << e.code() << "]: " << e.what() << '\n';
    return 1;
  } catch (const HypothesisError& e) {
    err << "error[hypothesis]: " << e.what() << '\n';
    return 1;
  } catch (const UndecidedError& e) {
    err << "undecided: " << e.what() << " (best bound " << e.best_bound() << ")\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error[resource:" << e.bound() << "]: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error[malformed_document]: " << e.what() << '\n';
    return 1;
  }

  if (g.out_path.empty()) {
    out << primary.str();
  } else {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) {
      err << "error[file_not_writable]: cannot write " << g.out_path << '\n';
      return 1;
    }
    f << primary.str();
  }
  return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace sympack::cli
