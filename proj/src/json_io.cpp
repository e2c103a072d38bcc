// levelzero: JSON builders and parsers. Serialization walks containers that
// are already canonically sorted, inserting keys in a fixed order; parsing
// funnels everything through the validating constructors so that malformed
// input surfaces as typed errors, not as corrupt state.
#include "levelzero/json_io.hpp"

#include <string>
#include <utility>

#include "levelzero/classical.hpp"
#include "levelzero/errors.hpp"

namespace levelzero {

Json json_of(const Int& x) { return x.get_str(); }

Json json_of(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json json_of(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(json_of(x));
  return a;
}

Json json_of(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_of(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const QmodZVector& s) {
  Json a = Json::array();
  for (const Rat& r : s.coords()) a.push_back(json_of(r));
  return a;
}

Int int_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw InvalidConfig("expected an integer or a decimal string: " + j.dump());
}

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw InvalidConfig("empty rational literal");
  try {
    Rat r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InvalidConfig("malformed rational literal: " + text);
  }
}

QmodZVector qmodz_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidConfig("torus point must be an array");
  RatVec v;
  v.reserve(j.size());
  for (const Json& e : j) {
    if (e.is_number_integer())
      v.push_back(Rat(e.get<long>()));
    else if (e.is_string())
      v.push_back(rat_from_string(e.get<std::string>()));
    else
      throw InvalidConfig("torus coordinate must be \"a/b\" or an integer");
  }
  return QmodZVector(std::move(v));
}

Json weyl_element_json(const WeylGroup& W, int idx) {
  Json j;
  j["index"] = idx;
  try {
    SignedPermutation sp = signed_permutation_of(W.elements[idx]);
    j["perm"] = sp.perm;
    j["signs"] = sp.signs;
  } catch (const UnsupportedSpec&) {
    j["matrix"] = json_of(W.elements[idx]);
  }
  return j;
}

int weyl_index_from_json(const WeylGroup& W, const Json& j) {
  IntMatrix m(0, 0);
  if (j.is_object() && j.contains("perm")) {
    SignedPermutation sp;
    sp.perm = j.at("perm").get<std::vector<int>>();
    if (j.contains("signs")) {
      sp.signs = j.at("signs").get<std::vector<int>>();
    } else {
      sp.signs.assign(sp.perm.size(), 0);
    }
    if (sp.signs.size() != sp.perm.size())
      throw InvalidConfig("perm and signs must have the same length");
    for (int p : sp.perm)
      if (p < 0 || p >= sp.rank()) throw InvalidConfig("perm is out of range");
    m = matrix_of(sp);
  } else if (j.is_object() && j.contains("matrix")) {
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty())
      throw InvalidConfig("matrix must be a non-empty array of rows");
    int n = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.at(0).size());
    m = IntMatrix(n, c);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows.at(i).size()) != c)
        throw InvalidConfig("matrix rows have unequal lengths");
      for (int k = 0; k < c; ++k) m(i, k) = int_from_json(rows.at(i).at(k));
    }
  } else if (j.is_object() && j.contains("index")) {
    int idx = j.at("index").get<int>();
    if (idx < 0 || idx >= static_cast<int>(W.elements.size()))
      throw InvalidConfig("element index out of range");
    return idx;
  } else {
    throw InvalidConfig("element must carry perm+signs, matrix, or index");
  }
  int idx = W.index(m);
  if (idx < 0)
    throw InvalidConfig("matrix does not belong to the acting group");
  return idx;
}

Json label_json(const WeylGroup& W, const ClassLabel& c) {
  Json j;
  j["s"] = json_of(c.s);
  j["w"] = weyl_element_json(W, c.wbar);
  return j;
}

ClassLabel label_from_json(const LabelContext& ctx, const Json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("w"))
    throw InvalidConfig("label must be an object with fields s and w");
  QmodZVector s = qmodz_from_json(j.at("s"));
  int w = weyl_index_from_json(*ctx.W, j.at("w"));
  return canonical_inertial_form(ctx, s, w);
}

namespace {

Json report_head(const char* command, const Json& config) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config;
  return j;
}

}  // namespace

Json datum_report(const RootDatum& R, const Json& config) {
  Json j = report_head("datum", config);
  j["rank"] = R.rank;
  j["root_count"] = static_cast<int>(R.roots.size());
  j["theta_order"] = R.theta_order;
  j["theta_is_identity"] = R.theta_is_identity();
  Json roots = Json::array();
  for (const IntVec& a : R.roots) roots.push_back(json_of(a));
  j["roots"] = std::move(roots);
  Json coroots = Json::array();
  for (const IntVec& a : R.coroots) coroots.push_back(json_of(a));
  j["coroots"] = std::move(coroots);
  j["theta"] = json_of(R.theta);
  return j;
}

Json classes_report(const LabelContext& ctx, const ClassEnumeration& ce,
                    const Json& config) {
  Json j = report_head("classes", config);
  j["label_count"] = static_cast<int>(ce.labels.size());
  j["geometric_count"] = static_cast<int>(ce.geometric.size());
  std::vector<int> per_geometric(ce.geometric.size(), 0);
  Json labels = Json::array();
  for (int i = 0; i < static_cast<int>(ce.labels.size()); ++i) {
    Json row = label_json(*ctx.W, ce.labels[i]);
    Json out;
    out["id"] = i;
    out["s"] = std::move(row["s"]);
    out["w"] = std::move(row["w"]);
    out["geometric"] = ce.geometric_of_label[i];
    out["elliptic"] = is_elliptic(ctx, ce.labels[i]);
    labels.push_back(std::move(out));
    ++per_geometric[ce.geometric_of_label[i]];
  }
  j["labels"] = std::move(labels);
  Json geo = Json::array();
  for (int g = 0; g < static_cast<int>(ce.geometric.size()); ++g) {
    Json row;
    row["id"] = g;
    row["s"] = json_of(ce.geometric[g]);
    row["label_count"] = per_geometric[g];
    geo.push_back(std::move(row));
  }
  j["geometric"] = std::move(geo);
  return j;
}

Json decompose_report(const Decomposition& d, const Json& config) {
  Json j = report_head("decompose", config);
  j["base_vertex"] = d.base_vertex;

  Json alc;
  Json nodes = Json::array();
  for (const AlcoveNode& nd : d.alcove.nodes) {
    Json row;
    row["root"] = json_of(d.R->roots[nd.root_index]);
    row["constant"] = json_of(nd.constant);
    row["component"] = nd.component;
    row["extra"] = nd.extra;
    nodes.push_back(std::move(row));
  }
  alc["nodes"] = std::move(nodes);
  Json facets = Json::array();
  for (int f = 0; f < static_cast<int>(d.alcove.facets.size()); ++f) {
    const AlcoveFacet& fa = d.alcove.facets[f];
    Json row;
    row["id"] = f;
    row["vanishing"] = fa.vanishing;
    row["dim"] = fa.dim;
    row["vertex"] = fa.vertex;
    row["hyperspecial"] = fa.hyperspecial;
    row["local_root_count"] = static_cast<int>(fa.local_roots.size());
    facets.push_back(std::move(row));
  }
  alc["facets"] = std::move(facets);
  alc["symmetry_count"] = static_cast<int>(d.alcove.symmetries.size());
  j["alcove"] = std::move(alc);

  j["pair_count"] = static_cast<int>(d.pairs.size());
  j["system_count"] = static_cast<int>(d.systems.size());
  j["rational_label_count"] = static_cast<int>(d.global_enum.labels.size());

  Json pairs = Json::array();
  for (int p = 0; p < static_cast<int>(d.pairs.size()); ++p) {
    const auto& [facet, c] = d.pairs[p];
    Json row;
    row["id"] = p;
    row["facet"] = facet;
    Json lab = label_json(*d.W, c);
    row["s"] = std::move(lab["s"]);
    row["w"] = std::move(lab["w"]);
    row["system"] = d.system_of[p];
    row["elliptic"] = is_elliptic(d.facet_ctx[facet], c);
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);

  Json systems = Json::array();
  for (int k = 0; k < static_cast<int>(d.systems.size()); ++k) {
    Json row;
    row["id"] = k;
    row["alpha"] = d.system_alpha[k];
    row["global"] = label_json(*d.W, d.system_global[k]);
    row["pair_count"] = static_cast<int>(d.systems[k].size());
    row["pairs"] = d.systems[k];
    std::vector<int> fs;
    for (int pid : d.systems[k]) {
      int f = d.pairs[pid].first;
      if (fs.empty() || fs.back() != f) fs.push_back(f);
    }
    row["facets"] = std::move(fs);
    systems.push_back(std::move(row));
  }
  j["systems"] = std::move(systems);

  Json grouped = Json::array();
  for (const ClassLabel& lab : d.global_enum.labels) {
    Json row = label_json(*d.W, lab);
    Json inside = Json::array();
    for (int k = 0; k < static_cast<int>(d.systems.size()); ++k) {
      if (!(d.system_global[k] == lab)) continue;
      Json sys;
      sys["id"] = k;
      sys["alpha"] = d.system_alpha[k];
      inside.push_back(std::move(sys));
    }
    row["system_count"] = static_cast<int>(inside.size());
    row["systems"] = std::move(inside);
    grouped.push_back(std::move(row));
  }
  j["rational_labels"] = std::move(grouped);
  return j;
}

Json hmap_report(const LabelContext& ctx, const ClassEnumeration& ce,
                 const Json& config) {
  Json j = report_head("hmap", config);
  FiniteAbelianGroup target = kottwitz_group(*ctx.R);
  Json tgt;
  tgt["invariant_factors"] = json_of(target.invariant_factors());
  tgt["order"] = json_of(target.order());
  j["target"] = std::move(tgt);
  j["note"] =
      "fiber sizes over a nontrivial central class describe inner forms that "
      "are not quasi-split; those counts are conjectural";

  Json labels = Json::array();
  for (const ClassLabel& lab : ce.labels) {
    ClassInvariants inv = class_invariants(ctx, lab);
    ComponentGroup pi0 = component_group(ctx, lab);
    Json row = label_json(*ctx.W, lab);
    Json dom;
    dom["invariant_factors"] = json_of(inv.domain.invariant_factors());
    dom["order"] = json_of(inv.domain.order());
    row["domain"] = std::move(dom);
    row["kernel_size"] = static_cast<int>(inv.kernel.size());
    row["kernel_orbits"] = json_of(inv.kernel_orbits);
    Json cg;
    cg["full"] = pi0.full.size();
    cg["connected"] = pi0.connected.size();
    cg["coset_reps"] = static_cast<int>(pi0.coset_reps.size());
    cg["twisted_fixed"] = static_cast<int>(pi0.twisted_fixed.size());
    row["component_group"] = std::move(cg);
    Json fibers = Json::array();
    for (int t = 0; t < static_cast<int>(inv.target_elements.size()); ++t) {
      Json fib;
      fib["omega"] = json_of(inv.target_elements[t]);
      fib["size"] = json_of(inv.fiber_sizes[t]);
      bool trivial = true;
      for (const Int& cth : inv.target_elements[t])
        if (cth != 0) trivial = false;
      fib["conjectural"] = !trivial;
      fibers.push_back(std::move(fib));
    }
    row["fibers"] = std::move(fibers);
    labels.push_back(std::move(row));
  }
  j["labels"] = std::move(labels);
  return j;
}

Json kottwitz_report(const RootDatum& R, const Json& config) {
  Json j = report_head("kottwitz", config);
  FiniteAbelianGroup g = kottwitz_group(R);
  j["invariant_factors"] = json_of(g.invariant_factors());
  j["order"] = json_of(g.order());
  j["trivial"] = g.is_trivial();
  return j;
}

}  // namespace levelzero
