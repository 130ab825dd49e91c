#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bargain/afp.hpp"
#include "bargain/axioms.hpp"
#include "bargain/characterize.hpp"
#include "bargain/equilibria.hpp"
#include "bargain/fixtures.hpp"
#include "bargain/mechanisms.hpp"
#include "bargain/rng.hpp"
#include "bargain/suite.hpp"

namespace {

using bargain::Collection;
using bargain::MechanismKind;
using bargain::MechanismParams;
using bargain::MechanismSpec;
using bargain::Point;
using bargain::Rational;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::string& out_path, const json& doc) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

std::string float_str(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.to_double());
  return buf;
}

json point_json(const Point& p) { return json::array({p.u1.str(), p.u2.str()}); }

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) arr.push_back(point_json(p));
  return arr;
}

struct MechOpts {
  std::string kind = "sa-delta";
  std::string delta;
  int k = 2;
  std::string weights_file;
};

void add_mech_flags(CLI::App* cmd, MechOpts& m) {
  cmd->add_option("--mechanism", m.kind, "mechanism kind")
      ->check(CLI::IsMember({"sa", "sa-delta", "sa-delta-w", "sa-k-delta", "dictator", "cudd"}));
  cmd->add_option("--delta", m.delta, "agreement weight p/q");
  cmd->add_option("--k", m.k, "lift order for sa-k-delta");
  cmd->add_option("--weights", m.weights_file, "JSON array of rational weight strings");
}

MechanismSpec to_spec(const MechOpts& m) {
  static const std::map<std::string, MechanismKind> kinds = {
      {"sa", MechanismKind::kSa},
      {"sa-delta", MechanismKind::kSaDelta},
      {"sa-delta-w", MechanismKind::kSaDeltaWeighted},
      {"sa-k-delta", MechanismKind::kSaKDelta},
      {"dictator", MechanismKind::kDictator},
      {"cudd", MechanismKind::kCudd}};
  MechanismSpec spec;
  spec.kind = kinds.at(m.kind);
  if (!m.delta.empty()) spec.params.delta = Rational::from_string(m.delta);
  spec.params.k = m.k;
  if (!m.weights_file.empty()) {
    json doc = json::parse(read_file(m.weights_file));
    for (const auto& entry : doc) {
      spec.params.weights.push_back(Rational::from_string(entry.get<std::string>()));
    }
  }
  return spec;
}

Collection load_collection(const std::string& path) {
  return bargain::parse_collection(read_file(path));
}

// Closed-form outcome sets; defined for the list family with positive delta
// and for constrained unanimity.
bargain::NeoSets characterize_sets(const MechanismSpec& spec, const Collection& a) {
  if (spec.kind == MechanismKind::kCudd) return bargain::cudd_neo(a);
  auto inst = bargain::build_mechanism_for(spec.kind, spec.params, a);
  if (auto view = inst->sa_game_view(a)) {
    return bargain::sa_delta_neo(view->effective, view->delta);
  }
  throw std::runtime_error("no characterization for this mechanism");
}

std::vector<Point> brute_points(const MechanismSpec& spec, const Collection& a,
                                const bargain::NeOptions& opt) {
  auto inst = bargain::build_mechanism_for(spec.kind, spec.params, a);
  return bargain::enumerate_pure_ne(*inst, a, opt).neo;
}

std::string outcome_csv(const std::vector<std::pair<std::string, Point>>& rows,
                        const Rational* x_lo) {
  std::ostringstream csv;
  csv << "u1_exact,u2_exact,u1_float,u2_float,kind";
  if (x_lo) csv << ",distance_exact,distance_float";
  csv << "\n";
  for (const auto& [kind, p] : rows) {
    csv << p.u1.str() << "," << p.u2.str() << "," << float_str(p.u1) << ","
        << float_str(p.u2) << "," << kind;
    if (x_lo) {
      Rational d = bargain::segment_distance(p, *x_lo);
      csv << "," << d.str() << "," << float_str(d);
    }
    csv << "\n";
  }
  return csv.str();
}

int cmd_fixtures(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto files = bargain::standard_fixtures();
  files.push_back({"example3_k3", bargain::example3(3)});
  files.push_back({"pie_k20", bargain::pie_collection(20)});
  json written = json::array();
  for (const auto& f : files) {
    std::string path = out_dir + "/" + f.name + ".json";
    write_text(path, bargain::serialize_collection(f.collection) + "\n");
    written.push_back(path);
  }
  emit("", json{{"written", written}});
  return 0;
}

int cmd_verify(const std::string& suite, const bargain::SuiteConfig& cfg,
               const std::string& out_path) {
  bargain::SuiteResult result = bargain::run_suite(suite, cfg);
  emit(out_path, result.report);
  return result.all_passed() ? 0 : 1;
}

int cmd_neo(const std::string& collection_path, const MechOpts& mech, const std::string& method,
            bool profiles, const bargain::NeOptions& opt, const std::string& out_path) {
  Collection a = load_collection(collection_path);
  MechanismSpec spec = to_spec(mech);
  json doc{{"collection", collection_path}, {"mechanism", mech.kind}, {"method", method}};

  std::vector<Point> brute, chars;
  if (method == "brute" || method == "both") {
    auto inst = bargain::build_mechanism_for(spec.kind, spec.params, a);
    bargain::NeOptions o = opt;
    o.collect_profiles = profiles;
    auto report = bargain::enumerate_pure_ne(*inst, a, o);
    brute = report.neo;
    doc["neo"] = points_json(brute);
    if (profiles) {
      json eqs = json::array();
      for (const auto& eq : report.equilibria) {
        eqs.push_back({{"s1", inst->signal_json(1, eq.profile.s1)},
                       {"s2", inst->signal_json(2, eq.profile.s2)},
                       {"outcome", point_json(eq.outcome)}});
      }
      doc["equilibria"] = eqs;
    }
  }
  if (method == "characterize" || method == "both") {
    bargain::NeoSets sets = characterize_sets(spec, a);
    chars = sets.neo;
    doc["ag"] = points_json(sets.ag);
    doc["dis"] = points_json(sets.dis);
    doc["neo"] = points_json(chars);
  }
  if (method == "both") {
    bool agree = brute == chars;
    doc["methods_agree"] = agree;
    if (!agree) {
      doc["brute_neo"] = points_json(brute);
      emit(out_path, doc);
      return 1;
    }
  }
  emit(out_path, doc);
  return 0;
}

int cmd_afp(const std::string& collection_path, const std::string& out_path) {
  Collection a = load_collection(collection_path);
  json doc{{"collection", collection_path}, {"n", a.size()}};

  auto iter = bargain::iterate_boundaries_included(a);
  json trace = json::array();
  for (const Point& p : iter.trace) trace.push_back(point_json(p));
  doc["iteration"] = {{"x", point_json(iter.witness.x)}, {"trace", trace}};

  auto witness_json = [](const bargain::AveragingWitness& w) {
    json s = json::array(), b = json::array();
    for (int i : w.s.to_indices()) s.push_back(i + 1);
    for (int i : w.boundary_included.to_indices()) b.push_back(i + 1);
    return json{{"x", point_json(w.x)}, {"S", s}, {"boundary", b}};
  };

  if (a.size() <= bargain::kOracleCap) {
    auto e = bargain::enumerate_afps_oracle(a);
    doc["distinct"] = points_json(e.distinct);
    json ws = json::array();
    for (const auto& w : e.witnesses) ws.push_back(witness_json(w));
    doc["witnesses"] = ws;
  } else {
    auto diag = bargain::enumerate_diagonal_afps(a);
    json ws = json::array();
    std::vector<Point> pts;
    for (const auto& w : diag) {
      ws.push_back(witness_json(w));
      pts.push_back(w.x);
    }
    doc["distinct"] = points_json(pts);
    doc["witnesses"] = ws;
    doc["method"] = "diagonal-scan";
  }
  emit(out_path, doc);
  return 0;
}

int cmd_characterize(const std::string& collection_path, const MechOpts& mech,
                     const std::string& out_path, const std::string& csv_path) {
  Collection a = load_collection(collection_path);
  bargain::NeoSets sets = characterize_sets(to_spec(mech), a);
  json doc{{"collection", collection_path},
           {"mechanism", mech.kind},
           {"ag", points_json(sets.ag)},
           {"dis", points_json(sets.dis)},
           {"neo", points_json(sets.neo)}};
  if (!csv_path.empty()) {
    std::vector<std::pair<std::string, Point>> rows;
    for (const Point& p : sets.ag) rows.push_back({"AG", p});
    for (const Point& p : sets.dis) rows.push_back({"DIS", p});
    write_text(csv_path, outcome_csv(rows, nullptr));
    doc["csv"] = csv_path;
  }
  emit(out_path, doc);
  return 0;
}

int cmd_pie(int k, const std::string& delta_str, const std::string& out_path,
            const std::string& csv_path) {
  Rational delta = Rational::from_string(delta_str.empty() ? "1/100" : delta_str);
  Collection a = bargain::pie_collection(k);
  auto [lo, hi] = bargain::pie_reference_x(Rational(1, 1000000000));
  bargain::NeoSets sets = bargain::sa_delta_neo(a, delta);
  Rational bound = delta + Rational(1, k);

  bool all_within = true;
  Rational max_dist(0);
  std::vector<std::pair<std::string, Point>> rows;
  for (const Point& p : sets.ag) rows.push_back({"AG", p});
  for (const Point& p : sets.dis) rows.push_back({"DIS", p});
  for (const auto& [kind, p] : rows) {
    Rational d = bargain::segment_distance(p, lo);
    max_dist = max(max_dist, d);
    all_within = all_within && d <= bound;
  }

  json doc{{"k", k},
           {"delta", delta.str()},
           {"n", a.size()},
           {"x_bracket", json::array({lo.str(), hi.str()})},
           {"x_bracket_float", json::array({float_str(lo), float_str(hi)})},
           {"bound", bound.str()},
           {"max_distance", max_dist.str()},
           {"all_within_bound", all_within},
           {"ag", points_json(sets.ag)},
           {"dis", points_json(sets.dis)}};
  if (!csv_path.empty()) {
    write_text(csv_path, outcome_csv(rows, &lo));
    doc["csv"] = csv_path;
  }
  emit(out_path, doc);
  return all_within ? 0 : 1;
}

int cmd_axioms(const std::string& fixtures_dir, const std::string& mech_filter,
               const std::vector<std::string>& which, const bargain::NeOptions& opt,
               std::uint64_t seed, int grid, const std::string& out_path) {
  std::vector<bargain::NamedFixture> fixtures;
  if (fixtures_dir.empty()) {
    fixtures = bargain::standard_fixtures();
  } else {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir)) {
      if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      fixtures.push_back({std::filesystem::path(p).stem().string(), load_collection(p)});
    }
  }
  if (fixtures.empty()) throw std::runtime_error("no fixtures to check");

  std::vector<std::pair<std::string, MechanismSpec>> mechs;
  {
    MechanismParams tenth, half;
    tenth.delta = Rational(1, 10);
    half.delta = Rational(1, 2);
    std::vector<std::pair<std::string, MechanismSpec>> all = {
        {"sa", {MechanismKind::kSa, {}}},
        {"sa-delta-1/10", {MechanismKind::kSaDelta, tenth}},
        {"sa-delta-1/2", {MechanismKind::kSaDelta, half}},
        {"dictator", {MechanismKind::kDictator, {}}},
        {"cudd", {MechanismKind::kCudd, {}}}};
    for (auto& m : all) {
      if (mech_filter.empty() || mech_filter == m.first) mechs.push_back(std::move(m));
    }
  }
  if (mechs.empty()) throw std::runtime_error("mechanism filter matched nothing");

  auto wanted = [&which](const std::string& name) {
    return which.empty() || std::find(which.begin(), which.end(), name) != which.end();
  };

  json rows = json::array();
  bool any_failed = false;
  auto record = [&](const std::string& mech, const std::string& fixture,
                    const std::string& check, const bargain::AxiomVerdict& v,
                    std::optional<bool> expected, json extra = json()) {
    bool pass = !expected || v.holds == *expected;
    any_failed = any_failed || !pass;
    json row{{"mechanism", mech}, {"fixture", fixture}, {"check", check},
             {"holds", v.holds}, {"pass", pass}};
    if (!v.holds && v.witness) row["witness"] = *v.witness;
    if (extra.is_object()) {
      for (auto& [key, val] : extra.items()) row[key] = val;
    }
    rows.push_back(std::move(row));
  };
  auto skip = [&rows](const std::string& mech, const std::string& fixture,
                      const std::string& check, const std::string& why) {
    rows.push_back(
        {{"mechanism", mech}, {"fixture", fixture}, {"check", check}, {"skipped", why}});
  };

  for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
    const auto& f = fixtures[fi];
    int n = f.collection.size();
    for (const auto& [mname, spec] : mechs) {
      bool sa_family = spec.kind == MechanismKind::kSa || spec.kind == MechanismKind::kSaDelta;
      bargain::NeOptions mopt = opt;
      // route outcome-set computations of large unanimity games through the
      // closed form instead of the n^4 profile scan
      if (n > 10 && spec.kind == MechanismKind::kCudd) mopt.budget = 1;
      if (wanted("anonymity")) {
        auto inst = bargain::build_mechanism(spec.kind, spec.params, n);
        std::uint64_t c1 = inst->signal_count(1), c2 = inst->signal_count(2);
        if (c1 == c2 && static_cast<unsigned __int128>(c1) * c2 > (std::uint64_t(1) << 16)) {
          skip(mname, f.name, "anonymity", "signal space over budget");
        } else {
          record(mname, f.name, "anonymity",
                 bargain::check_anonymity(spec, n, std::uint64_t(1) << 16),
                 spec.kind != MechanismKind::kDictator);
        }
      }
      if (wanted("symmetry") && f.collection.symmetric()) {
        try {
          std::optional<bool> expected;
          if (sa_family || spec.kind == MechanismKind::kCudd) expected = true;
          record(mname, f.name, "symmetry", bargain::check_symmetry(spec, f.collection, mopt),
                 expected);
        } catch (const std::exception& e) {
          skip(mname, f.name, "symmetry", e.what());
        }
      }
      if (wanted("ira")) {
        std::optional<bool> expected;
        if (spec.kind == MechanismKind::kCudd || spec.kind == MechanismKind::kDictator) {
          expected = true;
        }
        for (int j = 0; j < n; ++j) {
          try {
            record(mname, f.name, "ira", bargain::check_ira(spec, f.collection, j, mopt),
                   expected, json{{"index", j + 1}});
          } catch (const std::exception& e) {
            skip(mname, f.name, "ira", e.what());
            break;
          }
        }
      }
      if (wanted("iat")) {
        bargain::TrialRng rng(seed, 5000 + fi);  // same maps for every mechanism
        if (n > 10 && spec.kind != MechanismKind::kDictator) {
          skip(mname, f.name, "iat", "profile space over budget");
        } else {
          try {
            bool all_hold = true;
            for (int m = 0; m < 20; ++m) {
              auto [t1, t2] = bargain::random_affine_maps(rng, f.collection, grid);
              all_hold =
                  all_hold && bargain::check_iat(spec, f.collection, t1, t2, mopt).holds;
            }
            bargain::AxiomVerdict v{"iat", all_hold, std::nullopt};
            record(mname, f.name, "iat", v, true, json{{"maps", 20}});
          } catch (const std::length_error& e) {
            skip(mname, f.name, "iat", e.what());
          }
        }
      }
      if (wanted("uniqueness")) {
        try {
          record(mname, f.name, "uniqueness",
                 bargain::check_uniqueness(spec, f.collection, mopt), std::nullopt);
        } catch (const std::exception& e) {
          skip(mname, f.name, "uniqueness", e.what());
        }
      }
      if (wanted("efficiency")) {
        try {
          Rational eps(0);
          std::optional<bool> expected;
          if (spec.kind == MechanismKind::kSaDelta) {
            eps = spec.params.delta;
            expected = true;
          } else if (spec.kind == MechanismKind::kDictator) {
            expected = true;
          }
          record(mname, f.name, "efficiency",
                 bargain::check_efficiency(spec, f.collection, eps, bargain::EffMode::kAll,
                                           bargain::EffNotion::kAlternatives, mopt),
                 expected, json{{"eps", eps.str()}});
        } catch (const std::exception& e) {
          skip(mname, f.name, "efficiency", e.what());
        }
      }
    }
  }

  emit(out_path, json{{"matrix", rows}, {"any_assertion_failed", any_failed}});
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for one-shot bargaining mechanisms"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  std::uint64_t budget = std::uint64_t(1) << 24;
  int threads = 1;
  std::string out_path;
  app.add_option("--seed", seed, "PRNG seed")->capture_default_str();
  app.add_option("--budget", budget, "profile enumeration budget")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");

  auto* fx = app.add_subcommand("fixtures", "emit the named example collections");
  std::string fixtures_out = "fixtures";
  fx->add_option("dir", fixtures_out, "output directory")->capture_default_str();

  auto* vf = app.add_subcommand("verify", "run a seeded verification suite");
  std::string suite;
  bargain::SuiteConfig cfg;
  std::vector<std::string> delta_strs;
  vf->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(bargain::suite_names()));
  vf->add_option("--trials", cfg.trials, "trial count")->capture_default_str();
  vf->add_option("--n-min", cfg.n_min, "smallest collection size")->capture_default_str();
  vf->add_option("--n-max", cfg.n_max, "largest collection size")->capture_default_str();
  vf->add_option("--grid", cfg.grid, "coordinate grid denominator")->capture_default_str();
  vf->add_option("--delta", delta_strs, "agreement weights to test (repeatable)");

  MechOpts neo_mech;
  auto* ne = app.add_subcommand("neo", "pure equilibrium outcomes of a mechanism");
  std::string neo_collection, neo_method = "brute";
  bool neo_profiles = false;
  ne->add_option("collection", neo_collection, "collection JSON file")->required();
  add_mech_flags(ne, neo_mech);
  ne->add_option("--method", neo_method, "computation route")
      ->check(CLI::IsMember({"brute", "characterize", "both"}))
      ->capture_default_str();
  ne->add_flag("--profiles", neo_profiles, "include equilibrium profiles");

  auto* af = app.add_subcommand("afp", "average fixed points of a collection");
  std::string afp_collection;
  af->add_option("collection", afp_collection, "collection JSON file")->required();

  MechOpts ch_mech;
  auto* ch = app.add_subcommand("characterize", "closed-form outcome sets");
  std::string ch_collection, ch_csv;
  ch->add_option("collection", ch_collection, "collection JSON file")->required();
  add_mech_flags(ch, ch_mech);
  ch->add_option("--csv", ch_csv, "also write outcome points as CSV");

  auto* pie = app.add_subcommand("pie", "splitting-the-pie experiment");
  int pie_k = 20;
  std::string pie_delta = "1/100", pie_csv;
  pie->add_option("--k", pie_k, "grid resolution")->capture_default_str();
  pie->add_option("--delta", pie_delta, "agreement weight")->capture_default_str();
  pie->add_option("--csv", pie_csv, "write outcome CSV here");

  auto* ax = app.add_subcommand("axioms", "axiom verdict matrix over fixtures");
  std::string ax_fixtures, ax_mech;
  std::vector<std::string> ax_which;
  int ax_grid = 8;
  ax->add_option("--fixtures", ax_fixtures, "directory of collection JSON files");
  ax->add_option("--mechanism", ax_mech, "restrict to one mechanism")
      ->check(CLI::IsMember({"sa", "sa-delta-1/10", "sa-delta-1/2", "dictator", "cudd"}));
  ax->add_option("--axioms", ax_which, "subset of checks to run")
      ->check(CLI::IsMember(
          {"anonymity", "symmetry", "ira", "iat", "uniqueness", "efficiency"}));
  ax->add_option("--grid", ax_grid, "grid for random affine maps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    bargain::NeOptions opt;
    opt.budget = budget;
    opt.threads = threads;
    if (fx->parsed()) return cmd_fixtures(fixtures_out);
    if (vf->parsed()) {
      cfg.seed = seed;
      cfg.budget = budget;
      cfg.threads = threads;
      if (!delta_strs.empty()) {
        cfg.deltas.clear();
        for (const auto& s : delta_strs) cfg.deltas.push_back(Rational::from_string(s));
      }
      return cmd_verify(suite, cfg, out_path);
    }
    if (ne->parsed()) {
      return cmd_neo(neo_collection, neo_mech, neo_method, neo_profiles, opt, out_path);
    }
    if (af->parsed()) return cmd_afp(afp_collection, out_path);
    if (ch->parsed()) return cmd_characterize(ch_collection, ch_mech, out_path, ch_csv);
    if (pie->parsed()) return cmd_pie(pie_k, pie_delta, out_path, pie_csv);
    if (ax->parsed()) {
      return cmd_axioms(ax_fixtures, ax_mech, ax_which, opt, seed, ax_grid, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
