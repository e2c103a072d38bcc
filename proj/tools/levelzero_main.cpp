// levelzero command-line tool. Six subcommands share one configuration
// surface: `datum` prints the built root datum, `classes` the rational and
// geometric classes, `decompose` the minimal coherent systems with their
// (label, alpha) indexing, `hmap` the kernel and fiber tables, `kottwitz`
// the obstruction group, and `check` re-runs the cross-validation suite on
// the configured group. Output is a human table by default and a JSON
// document under --json; both are byte-identical across runs for identical
// configuration. Failures exit with the documented per-error codes.
#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "levelzero/alcove.hpp"
#include "levelzero/classical.hpp"
#include "levelzero/dual_classes.hpp"
#include "levelzero/errors.hpp"
#include "levelzero/json_io.hpp"
#include "levelzero/labels.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

namespace levelzero {
namespace {

struct Options {
  std::string group;
  int n = 0;
  std::string q;
  std::string p;
  std::string ell;
  std::string regime = "ql";
  std::string order_bound;
  int base_vertex = -1;
  bool json = false;
  std::string config_path;
};

struct Flags {
  CLI::Option* group = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* q = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* ell = nullptr;
  CLI::Option* regime = nullptr;
  CLI::Option* order_bound = nullptr;
  CLI::Option* base_vertex = nullptr;
  CLI::Option* json = nullptr;
  CLI::Option* config = nullptr;
};

Flags attach_options(CLI::App* cmd, Options& o, bool with_base_vertex) {
  Flags f;
  f.group = cmd->add_option("--group", o.group,
                            "group family (GL, SL, PGL, Sp, SOodd, "
                            "SOeven_split, SOeven_quasisplit, U_quasisplit)");
  f.n = cmd->add_option("--n", o.n, "family rank parameter");
  f.q = cmd->add_option("--q", o.q, "residue cardinality (prime power)");
  f.p = cmd->add_option("--p", o.p, "residue characteristic (inferred from q)");
  f.ell = cmd->add_option("--ell", o.ell,
                          "banned coefficient prime (integral regime only)");
  f.regime = cmd->add_option("--regime", o.regime,
                             "coefficient regime: ql or zl");
  f.order_bound = cmd->add_option("--order-bound", o.order_bound,
                                  "torus order bound N");
  if (with_base_vertex)
    f.base_vertex = cmd->add_option("--base-vertex", o.base_vertex,
                                    "facet id of the base hyperspecial vertex");
  f.json = cmd->add_flag("--json", o.json, "emit a JSON document");
  f.config = cmd->add_option("--config", o.config_path,
                             "JSON file with the same keys as the flags");
  return f;
}

// Fill flag values that were not given on the command line from the config
// file, which uses the same schema as the echoed `config` object.
void merge_config(const Flags& f, Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw InvalidConfig("cannot open config file: " + o.config_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InvalidConfig(std::string("config file is not valid JSON: ") +
                        e.what());
  }
  if (!j.is_object()) throw InvalidConfig("config file must hold an object");
  auto text = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    throw InvalidConfig("config values must be strings or integers");
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "group" && f.group->count() == 0)
      o.group = text(value);
    else if (key == "n" && f.n->count() == 0)
      o.n = value.get<int>();
    else if (key == "q" && f.q->count() == 0)
      o.q = text(value);
    else if (key == "p" && f.p->count() == 0)
      o.p = text(value);
    else if (key == "ell" && f.ell->count() == 0)
      o.ell = text(value);
    else if (key == "regime" && f.regime->count() == 0)
      o.regime = text(value);
    else if (key == "order_bound" && f.order_bound->count() == 0)
      o.order_bound = text(value);
    else if (key == "base_vertex" && f.base_vertex != nullptr &&
             f.base_vertex->count() == 0)
      o.base_vertex = value.get<int>();
    else if (key == "json" && f.json->count() == 0)
      o.json = value.get<bool>();
    else if (key == "group" || key == "n" || key == "q" || key == "p" ||
             key == "ell" || key == "regime" || key == "order_bound" ||
             key == "base_vertex" || key == "json")
      continue;  // present on the command line, which wins
    else
      throw InvalidConfig("unknown config key: " + key);
  }
}

Int parse_int_text(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw InvalidConfig(std::string(what) + " is not an integer: " + text);
  }
}

// Base prime of a prime power; throws InvalidConfig otherwise.
Int base_prime(const Int& q) {
  if (q < 2) throw InvalidConfig("q must be at least 2");
  Int f = 2;
  while (f * f <= q && f < 1000000) {
    if (q % f == 0) {
      Int rest = q;
      while (rest % f == 0) rest /= f;
      if (rest != 1)
        throw InvalidConfig("q must be a prime power: " + q.get_str());
      return f;
    }
    f += 1;
  }
  if (mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
    throw InvalidConfig("q must be a prime power: " + q.get_str());
  return q;
}

struct Resolved {
  Family family = Family::GL;
  RootDatum R;
  Int q = 0;
  Int p = 0;
  std::optional<Int> ell;
  Int N = 0;
  std::vector<Int> excluded;
  Json echo;
};

Resolved resolve(const Options& o, bool needs_q, bool with_base_vertex) {
  Resolved r;
  if (o.group.empty()) throw InvalidConfig("--group is required");
  r.family = parse_family(o.group);
  if (o.n < 1) throw InvalidConfig("--n must be a positive integer");
  r.R = build_group(r.family, o.n);

  if (o.regime != "ql" && o.regime != "zl")
    throw InvalidConfig("--regime must be ql or zl");

  r.echo["group"] = family_name(r.family);
  r.echo["n"] = o.n;

  if (o.q.empty()) {
    if (needs_q) throw InvalidConfig("--q is required for this command");
    if (!o.p.empty() || !o.ell.empty() || !o.order_bound.empty())
      throw InvalidConfig("--p, --ell and --order-bound need --q");
    return r;
  }

  r.q = parse_int_text(o.q, "--q");
  r.p = base_prime(r.q);
  if (!o.p.empty() && parse_int_text(o.p, "--p") != r.p)
    throw InvalidConfig("--p does not match the characteristic of q");
  r.excluded.push_back(r.p);

  if (o.regime == "zl") {
    if (o.ell.empty())
      throw InvalidConfig("--ell is required in the integral regime");
    Int ell = parse_int_text(o.ell, "--ell");
    if (mpz_probab_prime_p(ell.get_mpz_t(), 30) == 0)
      throw InvalidConfig("--ell must be prime");
    if (ell == r.p) throw InvalidConfig("--ell must differ from p");
    r.ell = ell;
    r.excluded.push_back(ell);
  } else if (!o.ell.empty()) {
    throw InvalidConfig("--ell only applies to the integral regime (zl)");
  }

  if (o.order_bound.empty()) {
    // Default: every class of torus order prime to p at this q and twist,
    // with the banned prime stripped in the integral regime.
    Int N = 1;
    for (int i = 0; i < 2 * r.R.theta_order; ++i) N *= r.q;
    N -= 1;
    if (r.ell)
      while (N % *r.ell == 0) N /= *r.ell;
    r.N = N;
  } else {
    r.N = parse_int_text(o.order_bound, "--order-bound");
    if (r.N < 1) throw InvalidConfig("--order-bound must be positive");
    for (const Int& bad : r.excluded)
      if (r.N % bad == 0)
        throw InvalidConfig("--order-bound must be coprime to " +
                            bad.get_str());
  }

  r.echo["q"] = r.q.get_str();
  r.echo["p"] = r.p.get_str();
  r.echo["regime"] = o.regime;
  if (r.ell) r.echo["ell"] = r.ell->get_str();
  r.echo["order_bound"] = r.N.get_str();
  if (with_base_vertex) r.echo["base_vertex"] = o.base_vertex;
  return r;
}

int worker_count() {
  const char* env = std::getenv("LEVELZERO_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1 || v > 1024)
    throw InvalidConfig("LEVELZERO_THREADS must be a positive integer");
  return static_cast<int>(v);
}

// ---- human rendering --------------------------------------------------

std::string s_text(const Json& arr) {
  std::string out = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += arr[i].get<std::string>();
  }
  return out + ")";
}

std::string w_text(const Json& w) {
  std::string out = "#" + std::to_string(w["index"].get<int>());
  if (w.contains("perm")) {
    out += " [";
    for (size_t i = 0; i < w["perm"].size(); ++i) {
      if (i) out += " ";
      out += std::to_string(w["perm"][i].get<int>());
      out += w["signs"][i].get<int>() ? "-" : "+";
    }
    out += "]";
  }
  return out;
}

void print_datum(std::ostream& os, const Json& r) {
  os << "rank " << r["rank"] << ", " << r["root_count"]
     << " roots, twist order " << r["theta_order"]
     << (r["theta_is_identity"].get<bool>() ? " (identity)" : "") << "\n";
  os << "roots / coroots:\n";
  for (size_t i = 0; i < r["roots"].size(); ++i) {
    os << "  " << s_text(r["roots"][i]) << " / " << s_text(r["coroots"][i])
       << "\n";
  }
  os << "twist matrix rows:\n";
  for (const Json& row : r["theta"]) os << "  " << s_text(row) << "\n";
}

void print_classes(std::ostream& os, const Json& r) {
  os << r["label_count"] << " classes over " << r["geometric_count"]
     << " geometric classes\n";
  for (const Json& row : r["labels"]) {
    os << "  class " << row["id"] << ": s=" << s_text(row["s"]) << " w"
       << w_text(row["w"]) << " geometric=" << row["geometric"]
       << (row["elliptic"].get<bool>() ? " elliptic" : "") << "\n";
  }
  os << "geometric classes:\n";
  for (const Json& row : r["geometric"]) {
    os << "  " << row["id"] << ": s=" << s_text(row["s"]) << " with "
       << row["label_count"] << " class(es)\n";
  }
}

void print_decompose(std::ostream& os, const Json& r) {
  const Json& a = r["alcove"];
  os << "alcove: " << a["facets"].size() << " facets, base vertex "
     << r["base_vertex"] << ", " << a["symmetry_count"] << " symmetries\n";
  os << r["pair_count"] << " facet classes in " << r["system_count"]
     << " minimal systems over " << r["rational_label_count"] << " labels\n";
  for (const Json& lab : r["rational_labels"]) {
    os << "label s=" << s_text(lab["s"]) << " w" << w_text(lab["w"]) << ": "
       << lab["system_count"] << " system(s)\n";
    for (const Json& sys : lab["systems"]) {
      const Json& full = r["systems"][sys["id"].get<int>()];
      os << "  system " << sys["id"] << " alpha " << sys["alpha"] << ": "
         << full["pair_count"] << " class(es) on facets [";
      for (size_t i = 0; i < full["facets"].size(); ++i)
        os << (i ? " " : "") << full["facets"][i];
      os << "]\n";
    }
  }
}

void print_hmap(std::ostream& os, const Json& r) {
  const Json& t = r["target"];
  os << "target group order " << t["order"].get<std::string>()
     << ", invariant factors [";
  for (size_t i = 0; i < t["invariant_factors"].size(); ++i)
    os << (i ? " " : "") << t["invariant_factors"][i].get<std::string>();
  os << "]\n";
  for (const Json& row : r["labels"]) {
    os << "label s=" << s_text(row["s"]) << " w" << w_text(row["w"])
       << ": domain order " << row["domain"]["order"].get<std::string>()
       << ", kernel " << row["kernel_size"] << ", orbits "
       << row["kernel_orbits"].get<std::string>() << ", fibers";
    for (const Json& fib : row["fibers"]) {
      os << " " << s_text(fib["omega"]) << "->"
         << fib["size"].get<std::string>();
      if (fib["conjectural"].get<bool>()) os << "*";
    }
    os << "\n";
  }
  os << "(* = non-quasi-split inner form; count conjectural)\n";
}

void print_kottwitz(std::ostream& os, const Json& r) {
  if (r["trivial"].get<bool>()) {
    os << "obstruction group: trivial\n";
    return;
  }
  os << "obstruction group:";
  for (const Json& d : r["invariant_factors"])
    os << " Z/" << d.get<std::string>();
  os << " (order " << r["order"].get<std::string>() << ")\n";
}

// ---- check command ------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckFn = std::function<CheckResult()>;

std::vector<CheckResult> run_parallel(const std::vector<CheckFn>& tasks,
                                      int threads) {
  std::vector<CheckResult> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < tasks.size();)
      results[i] = tasks[i]();
  };
  int count = std::min<int>(threads, static_cast<int>(tasks.size()));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

int run_check(const Resolved& rz, const Options& o) {
  const RootDatum& R = rz.R;
  WeylGroup W = build_weyl(R);
  LabelContext ctx = make_global_context(R, W, rz.q, rz.excluded);
  ClassEnumeration ce = rational_classes(ctx, rz.N);

  std::optional<Decomposition> dec;
  if (R.theta_is_identity())
    dec = decompose(R, W, rz.q, rz.N, rz.excluded, o.base_vertex);

  std::vector<CheckFn> tasks;

  tasks.push_back([&]() -> CheckResult {
    // Duality round trip on deterministic samples of character classes.
    std::mt19937 rng(0xD1A70000u);
    std::uniform_int_distribution<int> coord(-5, 5);
    std::uniform_int_distribution<int> pick(
        0, static_cast<int>(W.elements.size()) - 1);
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
      int w = pick(rng);
      IntVec x(R.rank);
      for (Int& e : x) e = coord(rng);
      QmodZVector s = theta_to_s(ctx, w, x);
      if (!theta_chars_equal(ctx, w, x, s_to_theta(ctx, w, s))) ++bad;
    }
    return {"duality-round-trip", bad == 0, "50 samples"};
  });

  tasks.push_back([&]() -> CheckResult {
    // The kernel size dominates its orbit count and divides the domain.
    bool ok = true;
    for (const ClassLabel& lab : ce.labels) {
      ClassInvariants inv = class_invariants(ctx, lab);
      Int ksize = static_cast<long>(inv.kernel.size());
      if (inv.kernel_orbits < 1 || inv.kernel_orbits > ksize) ok = false;
      if (inv.domain.order() % ksize != 0) ok = false;
    }
    return {"kernel-invariants", ok,
            std::to_string(ce.labels.size()) + " labels"};
  });

  if (std::set<Family>{Family::Sp, Family::SOodd, Family::SOeven_split,
                       Family::SOeven_quasisplit}
          .count(rz.family) > 0) {
    tasks.push_back([&]() -> CheckResult {
      // Sign tags separate exactly the doubled geometric classes.
      std::map<int, std::set<int>> tags;
      std::map<int, int> sizes;
      for (int i = 0; i < static_cast<int>(ce.labels.size()); ++i) {
        tags[ce.geometric_of_label[i]].insert(
            rational_tag(rz.family, R, W, ce.labels[i]));
        ++sizes[ce.geometric_of_label[i]];
      }
      bool ok = true;
      for (const auto& [g, t] : tags) {
        if (sizes[g] > 2) ok = false;
        if (sizes[g] == 2 && t != std::set<int>{0, 1}) ok = false;
      }
      return {"sign-tags", ok,
              std::to_string(tags.size()) + " geometric classes"};
    });
  }

  if (dec) {
    const Decomposition& d = *dec;
    tasks.push_back([&]() -> CheckResult {
      std::vector<int> seen(d.pairs.size(), 0);
      for (const auto& sys : d.systems)
        for (int pid : sys) ++seen[pid];
      bool ok = true;
      for (int p = 0; p < static_cast<int>(d.pairs.size()); ++p)
        if (seen[p] != 1 || d.system_of[p] < 0) ok = false;
      return {"systems-partition", ok,
              std::to_string(d.pairs.size()) + " pairs"};
    });
    tasks.push_back([&]() -> CheckResult {
      bool ok = true;
      for (const auto& sys : d.systems)
        if (!d.is_coherent(sys)) ok = false;
      return {"systems-coherent", ok,
              std::to_string(d.systems.size()) + " systems"};
    });
    tasks.push_back([&]() -> CheckResult {
      // Closure laws on deterministic random seeds.
      std::mt19937 rng(0xC0FFEE00u);
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(d.pairs.size()) - 1);
      bool ok = true;
      for (int trial = 0; trial < 25 && ok; ++trial) {
        std::vector<int> seed;
        int len = 1 + trial % 3;
        for (int i = 0; i < len; ++i) seed.push_back(pick(rng));
        std::vector<int> a = d.closure(seed);
        for (int x : seed)
          if (!std::binary_search(a.begin(), a.end(), x)) ok = false;
        if (d.closure(a) != a) ok = false;
        std::vector<int> bigger = seed;
        bigger.push_back(pick(rng));
        std::vector<int> b = d.closure(bigger);
        for (int x : a)
          if (!std::binary_search(b.begin(), b.end(), x)) ok = false;
      }
      return {"closure-laws", ok, "25 seeds"};
    });
    tasks.push_back([&]() -> CheckResult {
      bool ok = true;
      for (int k = 0; k < static_cast<int>(d.systems.size()); ++k)
        for (int pid : d.systems[k])
          if (!(d.globalized(d.pairs[pid].second) == d.system_global[k]))
            ok = false;
      return {"system-label-constant", ok,
              std::to_string(d.systems.size()) + " systems"};
    });
    tasks.push_back([&]() -> CheckResult {
      // Alphas form {0..m-1} per label and 0 touches the base vertex.
      std::map<ClassLabel, std::set<int>> alphas;
      bool ok = true;
      for (int k = 0; k < static_cast<int>(d.systems.size()); ++k) {
        if (!alphas[d.system_global[k]].insert(d.system_alpha[k]).second)
          ok = false;
        if (d.system_alpha[k] == 0) {
          bool touches = false;
          for (int pid : d.systems[k])
            if (d.pairs[pid].first == d.base_vertex) touches = true;
          if (!touches) ok = false;
        }
      }
      for (const auto& [lab, set] : alphas) {
        if (*set.begin() != 0 ||
            *set.rbegin() != static_cast<int>(set.size()) - 1)
          ok = false;
      }
      return {"alpha-indexing", ok, std::to_string(alphas.size()) + " labels"};
    });
    tasks.push_back([&]() -> CheckResult {
      // The kernel-orbit count predicts the number of systems per label.
      std::map<ClassLabel, Int> predicted;
      for (const ClassLabel& lab : ce.labels)
        predicted[lab] = class_invariants(ctx, lab).kernel_orbits;
      std::map<ClassLabel, Int> found;
      for (int k = 0; k < static_cast<int>(d.systems.size()); ++k)
        found[d.system_global[k]] += 1;
      return {"kernel-orbits-match-systems", predicted == found,
              std::to_string(found.size()) + " labels"};
    });
    tasks.push_back([&]() -> CheckResult {
      Decomposition again =
          decompose(R, W, rz.q, rz.N, rz.excluded, o.base_vertex);
      Json r1 = decompose_report(d, rz.echo);
      Json r2 = decompose_report(again, rz.echo);
      return {"repeat-run-identical", r1.dump(2) == r2.dump(2), ""};
    });
  }

  std::vector<CheckResult> results = run_parallel(tasks, worker_count());
  bool all = true;
  for (const CheckResult& r : results) all = all && r.pass;

  if (o.json) {
    Json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = "check";
    rep["config"] = rz.echo;
    Json rows = Json::array();
    for (const CheckResult& r : results) {
      Json row;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    rep["checks"] = std::move(rows);
    rep["pass"] = all;
    std::cout << rep.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout << "RESULT: " << (all ? "PASS" : "FAIL") << " ("
              << results.size() << " checks)\n";
  }
  return all ? 0 : 1;
}

int run_command(const std::string& cmd, const Options& o) {
  if (cmd == "datum") {
    Resolved rz = resolve(o, /*needs_q=*/false, /*with_base_vertex=*/false);
    Json rep = datum_report(rz.R, rz.echo);
    if (o.json)
      std::cout << rep.dump(2) << "\n";
    else
      print_datum(std::cout, rep);
    return 0;
  }
  if (cmd == "kottwitz") {
    Resolved rz = resolve(o, /*needs_q=*/false, /*with_base_vertex=*/false);
    Json rep = kottwitz_report(rz.R, rz.echo);
    if (o.json)
      std::cout << rep.dump(2) << "\n";
    else
      print_kottwitz(std::cout, rep);
    return 0;
  }
  if (cmd == "classes" || cmd == "hmap") {
    Resolved rz = resolve(o, /*needs_q=*/true, /*with_base_vertex=*/false);
    WeylGroup W = build_weyl(rz.R);
    LabelContext ctx = make_global_context(rz.R, W, rz.q, rz.excluded);
    ClassEnumeration ce = rational_classes(ctx, rz.N);
    Json rep = cmd == "classes" ? classes_report(ctx, ce, rz.echo)
                                : hmap_report(ctx, ce, rz.echo);
    if (o.json)
      std::cout << rep.dump(2) << "\n";
    else if (cmd == "classes")
      print_classes(std::cout, rep);
    else
      print_hmap(std::cout, rep);
    return 0;
  }
  if (cmd == "decompose") {
    Resolved rz = resolve(o, /*needs_q=*/true, /*with_base_vertex=*/true);
    WeylGroup W = build_weyl(rz.R);
    Decomposition d =
        decompose(rz.R, W, rz.q, rz.N, rz.excluded, o.base_vertex);
    Json rep = decompose_report(d, rz.echo);
    if (o.json)
      std::cout << rep.dump(2) << "\n";
    else
      print_decompose(std::cout, rep);
    return 0;
  }
  if (cmd == "check") {
    Resolved rz = resolve(o, /*needs_q=*/true, /*with_base_vertex=*/true);
    return run_check(rz, o);
  }
  throw InvalidConfig("unknown command");
}

}  // namespace
}  // namespace levelzero

int main(int argc, char** argv) {
  using namespace levelzero;
  CLI::App app{"level-0 decomposition tables for unramified groups"};
  app.require_subcommand(1);

  Options o;
  std::vector<std::pair<CLI::App*, Flags>> commands;
  auto add = [&](const char* name, const char* desc, bool with_base_vertex) {
    CLI::App* sub = app.add_subcommand(name, desc);
    commands.emplace_back(sub, attach_options(sub, o, with_base_vertex));
  };
  add("datum", "print the built root datum", false);
  add("classes", "enumerate rational and geometric classes", false);
  add("decompose", "minimal coherent systems with their indexing", true);
  add("hmap", "kernel and fiber tables of the obstruction map", false);
  add("kottwitz", "obstruction group of the datum", false);
  add("check", "re-run the cross-validation suite", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 20;
  }

  try {
    for (auto& [sub, flags] : commands) {
      if (sub->parsed()) {
        merge_config(flags, o);
        return run_command(sub->get_name(), o);
      }
    }
    throw InvalidConfig("a subcommand is required");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
