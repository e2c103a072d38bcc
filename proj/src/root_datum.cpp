// Root data in standard coordinates. Root lists are generated positives
// first (each negative sits at index i + #positives), in a fixed loop order,
// so every downstream enumeration inherits a stable indexing.
#include "levelzero/root_datum.hpp"

#include <algorithm>
#include <map>

#include "levelzero/errors.hpp"

namespace levelzero {

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PGL: return "PGL";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SOodd";
    case Family::SOeven_split: return "SOeven_split";
    case Family::SOeven_quasisplit: return "SOeven_quasisplit";
    case Family::U_quasisplit: return "U_quasisplit";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"GL", Family::GL},
      {"SL", Family::SL},
      {"PGL", Family::PGL},
      {"Sp", Family::Sp},
      {"SOodd", Family::SOodd},
      {"SOeven_split", Family::SOeven_split},
      {"SOeven_quasisplit", Family::SOeven_quasisplit},
      {"U_quasisplit", Family::U_quasisplit},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw UnsupportedSpec("unknown group family: " + name);
  return it->second;
}

bool RootDatum::theta_is_identity() const {
  return theta == IntMatrix::identity(rank);
}

IntMatrix RootDatum::theta_on_Y() const { return dual_action(theta); }

int RootDatum::find_root(const IntVec& alpha) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == alpha) return static_cast<int>(i);
  return -1;
}

namespace {

IntVec unit(int n, int i, Int v = 1) {
  IntVec e(static_cast<size_t>(n), Int(0));
  e[static_cast<size_t>(i)] = v;
  return e;
}

IntVec diff(int n, int i, int j) {  // e_i - e_j
  IntVec e(static_cast<size_t>(n), Int(0));
  e[static_cast<size_t>(i)] = 1;
  e[static_cast<size_t>(j)] = -1;
  return e;
}

IntVec sum2(int n, int i, int j) {  // e_i + e_j
  IntVec e(static_cast<size_t>(n), Int(0));
  e[static_cast<size_t>(i)] = 1;
  e[static_cast<size_t>(j)] = 1;
  return e;
}

// Append positive roots and matching coroots, then mirror to negatives and
// resolve simple-root indices.
void finish(RootDatum& R, const std::vector<IntVec>& pos,
            const std::vector<IntVec>& pos_co,
            const std::vector<IntVec>& simple_roots) {
  size_t p = pos.size();
  R.roots = pos;
  R.coroots = pos_co;
  for (size_t i = 0; i < p; ++i) {
    IntVec neg = pos[i], negco = pos_co[i];
    for (Int& v : neg) v = -v;
    for (Int& v : negco) v = -v;
    R.roots.push_back(neg);
    R.coroots.push_back(negco);
  }
  for (const IntVec& s : simple_roots) {
    int idx = R.find_root(s);
    if (idx < 0) throw UnsupportedSpec("simple root missing from root list");
    R.simples.push_back(idx);
  }
}

RootDatum build_gl_like(int n, const std::string& name) {
  RootDatum R;
  R.name = name;
  R.rank = n;
  R.theta = IntMatrix::identity(n);
  std::vector<IntVec> pos, pos_co, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(diff(n, i, j));
      pos_co.push_back(diff(n, i, j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
  finish(R, pos, pos_co, simple);
  return R;
}

RootDatum build_sl(int n) {
  // X = Z^n / Z(1,...,1) with basis the images of e_1..e_{n-1};
  // Y = {sum = 0} with the dual basis f_i = e_i - e_n.
  RootDatum R;
  R.name = "SL" + std::to_string(n);
  R.rank = n - 1;
  R.theta = IntMatrix::identity(n - 1);
  int r = n - 1;
  auto x_coords = [&](int i, int j) {  // class of e_i - e_j, 0-based, i != j
    IntVec v(static_cast<size_t>(r), Int(0));
    auto add_ei = [&](int k, Int c) {
      if (k < r)
        v[static_cast<size_t>(k)] += c;
      else  // e_n = -(e_1 + ... + e_{n-1})
        for (int t = 0; t < r; ++t) v[static_cast<size_t>(t)] -= c;
    };
    add_ei(i, 1);
    add_ei(j, -1);
    return v;
  };
  auto y_coords = [&](int i, int j) {  // e_i - e_j in the f basis
    IntVec v(static_cast<size_t>(r), Int(0));
    if (i < r) v[static_cast<size_t>(i)] += 1;
    if (j < r) v[static_cast<size_t>(j)] -= 1;
    return v;
  };
  std::vector<IntVec> pos, pos_co, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(x_coords(i, j));
      pos_co.push_back(y_coords(i, j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(x_coords(i, i + 1));
  finish(R, pos, pos_co, simple);
  return R;
}

RootDatum build_pgl(int n) {
  // X = root lattice with basis the simple roots g_i; Y = Z^n/Z(1,..,1)
  // with the dual basis h_i = class of e_1 + ... + e_i.
  RootDatum R;
  R.name = "PGL" + std::to_string(n);
  R.rank = n - 1;
  R.theta = IntMatrix::identity(n - 1);
  int r = n - 1;
  auto x_coords = [&](int i, int j) {  // e_i - e_j = g_i + ... + g_{j-1}
    IntVec v(static_cast<size_t>(r), Int(0));
    for (int t = i; t < j; ++t) v[static_cast<size_t>(t)] += 1;
    return v;
  };
  auto y_coords = [&](int i, int j) {  // e_i^ - e_j^ in the h basis
    IntVec v(static_cast<size_t>(r), Int(0));
    auto add_ei = [&](int k, Int c) {  // e_k^ = h_k - h_{k-1}
      if (k < r) v[static_cast<size_t>(k)] += c;
      if (k >= 1) v[static_cast<size_t>(k - 1)] -= c;
    };
    add_ei(i, 1);
    add_ei(j, -1);
    return v;
  };
  std::vector<IntVec> pos, pos_co, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(x_coords(i, j));
      pos_co.push_back(y_coords(i, j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(x_coords(i, i + 1));
  finish(R, pos, pos_co, simple);
  return R;
}

RootDatum build_sp(int n) {
  RootDatum R;
  R.name = "Sp" + std::to_string(2 * n);
  R.rank = n;
  R.theta = IntMatrix::identity(n);
  std::vector<IntVec> pos, pos_co, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(diff(n, i, j));
      pos_co.push_back(diff(n, i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(sum2(n, i, j));
      pos_co.push_back(sum2(n, i, j));
    }
  for (int i = 0; i < n; ++i) {
    pos.push_back(unit(n, i, 2));  // long root 2e_i
    pos_co.push_back(unit(n, i, 1));
  }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
  simple.push_back(unit(n, n - 1, 2));
  finish(R, pos, pos_co, simple);
  return R;
}

RootDatum build_so_odd(int n) {
  RootDatum R;
  R.name = "SO" + std::to_string(2 * n + 1);
  R.rank = n;
  R.theta = IntMatrix::identity(n);
  std::vector<IntVec> pos, pos_co, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(diff(n, i, j));
      pos_co.push_back(diff(n, i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(sum2(n, i, j));
      pos_co.push_back(sum2(n, i, j));
    }
  for (int i = 0; i < n; ++i) {
    pos.push_back(unit(n, i, 1));  // short root e_i
    pos_co.push_back(unit(n, i, 2));
  }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
  simple.push_back(unit(n, n - 1, 1));
  finish(R, pos, pos_co, simple);
  return R;
}

RootDatum build_so_even(int n, bool quasisplit) {
  RootDatum R;
  R.name = std::string(quasisplit ? "SO*" : "SO") + std::to_string(2 * n);
  R.rank = n;
  R.theta = IntMatrix::identity(n);
  if (quasisplit) R.theta(n - 1, n - 1) = -1;  // flip the last coordinate
  std::vector<IntVec> pos, pos_co, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(diff(n, i, j));
      pos_co.push_back(diff(n, i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(sum2(n, i, j));
      pos_co.push_back(sum2(n, i, j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
  if (n >= 2) simple.push_back(sum2(n, n - 2, n - 1));
  finish(R, pos, pos_co, simple);
  return R;
}

RootDatum build_u(int n) {
  RootDatum R = build_gl_like(n, "U" + std::to_string(n));
  // theta = -w0: x |-> (-x_n, ..., -x_1)
  IntMatrix t(n, n);
  for (int i = 0; i < n; ++i) t(i, n - 1 - i) = -1;
  R.theta = t;
  return R;
}

}  // namespace

RootDatum build_group(Family f, int n) {
  if (n < 1) throw UnsupportedSpec("group rank parameter must be >= 1");
  RootDatum R;
  switch (f) {
    case Family::GL: R = build_gl_like(n, "GL" + std::to_string(n)); break;
    case Family::SL: R = build_sl(n); break;
    case Family::PGL: R = build_pgl(n); break;
    case Family::Sp: R = build_sp(n); break;
    case Family::SOodd: R = build_so_odd(n); break;
    case Family::SOeven_split: R = build_so_even(n, false); break;
    case Family::SOeven_quasisplit: R = build_so_even(n, true); break;
    case Family::U_quasisplit: R = build_u(n); break;
  }
  R.theta_order = automorphism_order(R.theta);
  validate(R);
  return R;
}

RootDatum dual(const RootDatum& R) {
  RootDatum D;
  D.name = R.name + "_dual";
  D.rank = R.rank;
  D.roots = R.coroots;
  D.coroots = R.roots;
  D.simples = R.simples;
  D.theta = R.rank ? dual_action(R.theta) : R.theta;
  D.theta_order = R.theta_order;
  return D;
}

LeviDatum levi(const RootDatum& R, const std::vector<int>& simple_positions) {
  std::vector<int> pos = simple_positions;
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  for (int p : pos)
    if (p < 0 || p >= static_cast<int>(R.simples.size()))
      throw UnsupportedSpec("levi: simple-root position out of range");

  std::vector<IntVec> chosen;
  for (int p : pos) chosen.push_back(R.roots[static_cast<size_t>(
      R.simples[static_cast<size_t>(p)])]);

  if (!R.theta_is_identity()) {
    // The twist permutes the simple roots; the chosen subset must be stable
    // for the subdatum to carry the twist.
    for (const IntVec& s : chosen) {
      IntVec img = R.theta * s;
      bool found = false;
      for (const IntVec& t : chosen)
        if (t == img) found = true;
      if (!found)
        throw NotThetaStable("levi: subset is not stable under the twist");
    }
  }

  // A root belongs to the Levi iff it lies in the rational span of the
  // chosen simple roots.
  IntMatrix span = columns_matrix(R.rank, chosen);
  int base_rank = rank_rational(span);
  LeviDatum L;
  L.simple_positions = pos;
  L.datum.name = R.name + "_levi";
  L.datum.rank = R.rank;
  L.datum.theta = R.theta;
  L.datum.theta_order = R.theta_order;
  for (size_t i = 0; i < R.roots.size(); ++i) {
    IntMatrix ext = hconcat(span, columns_matrix(R.rank, {R.roots[i]}));
    if (rank_rational(ext) == base_rank) {
      L.root_index_in_parent.push_back(static_cast<int>(i));
      L.datum.roots.push_back(R.roots[i]);
      L.datum.coroots.push_back(R.coroots[i]);
    }
  }
  for (const IntVec& s : chosen) {
    int idx = L.datum.find_root(s);
    L.datum.simples.push_back(idx);
  }
  return L;
}

int automorphism_order(const IntMatrix& m) {
  IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix acc = m;
  int ord = 1;
  const int cap = 24;
  while (acc != id) {
    acc = acc * m;
    ++ord;
    if (ord > cap)
      throw UnsupportedSpec("lattice automorphism order exceeds the cap");
  }
  return ord;
}

void validate(const RootDatum& R) {
  if (R.roots.size() != R.coroots.size())
    throw UnsupportedSpec("validate: root/coroot lists differ in length");
  size_t m = R.roots.size();
  for (size_t i = 0; i < m; ++i) {
    if (static_cast<int>(R.roots[i].size()) != R.rank ||
        static_cast<int>(R.coroots[i].size()) != R.rank)
      throw UnsupportedSpec("validate: coordinate size mismatch");
    if (dot(R.roots[i], R.coroots[i]) != 2)
      throw UnsupportedSpec("validate: <alpha, alpha^> != 2");
    for (size_t j = 0; j < m; ++j)
      if (i != j && R.roots[i] == R.roots[j])
        throw UnsupportedSpec("validate: duplicate root");
  }
  // Reflections permute the root list, with matching coroots.
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      Int c = dot(R.roots[b], R.coroots[a]);
      IntVec img = R.roots[b], imgco = R.coroots[b];
      for (int t = 0; t < R.rank; ++t) {
        img[static_cast<size_t>(t)] -= c * R.roots[a][static_cast<size_t>(t)];
        imgco[static_cast<size_t>(t)] -=
            dot(R.roots[a], R.coroots[b]) * R.coroots[a][static_cast<size_t>(t)];
      }
      int k = R.find_root(img);
      if (k < 0) throw UnsupportedSpec("validate: reflection leaves root set");
      if (R.coroots[static_cast<size_t>(k)] != imgco)
        throw UnsupportedSpec("validate: reflected coroot mismatch");
    }
  // Simple roots: valid indices; every root has a one-signed expansion.
  std::vector<IntVec> simple_roots;
  for (int s : R.simples) {
    if (s < 0 || s >= static_cast<int>(m))
      throw UnsupportedSpec("validate: simple index out of range");
    simple_roots.push_back(R.roots[static_cast<size_t>(s)]);
  }
  if (!simple_roots.empty()) {
    IntMatrix S = columns_matrix(R.rank, simple_roots);
    for (size_t i = 0; i < m; ++i) {
      // Solve S c = root over Q by row reduction of the augmented system.
      RatMatrix aug(R.rank, S.cols() + 1);
      for (int r = 0; r < R.rank; ++r) {
        for (int c = 0; c < S.cols(); ++c) aug(r, c) = Rat(S(r, c));
        aug(r, S.cols()) = Rat(R.roots[i][static_cast<size_t>(r)]);
      }
      std::vector<int> pivots;
      row_reduce(aug, &pivots);
      RatVec coeff(static_cast<size_t>(S.cols()), Rat(0));
      for (size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == S.cols())
          throw UnsupportedSpec("validate: root outside simple span");
        coeff[static_cast<size_t>(pivots[pr])] =
            aug(static_cast<int>(pr), S.cols());
      }
      bool any_pos = false, any_neg = false;
      for (const Rat& c : coeff) {
        if (c > 0) any_pos = true;
        if (c < 0) any_neg = true;
      }
      if (any_pos && any_neg)
        throw UnsupportedSpec("validate: root is not one-signed in the base");
    }
  }
  // Twist compatibility.
  if (R.rank > 0) {
    Int dt = det(R.theta);
    if (dt != 1 && dt != -1)
      throw UnsupportedSpec("validate: twist is not a lattice automorphism");
    IntMatrix ty = R.theta_on_Y();
    for (size_t i = 0; i < m; ++i) {
      int k = R.find_root(R.theta * R.roots[i]);
      if (k < 0)
        throw UnsupportedSpec("validate: twist does not permute roots");
      if (R.coroots[static_cast<size_t>(k)] != ty * R.coroots[i])
        throw UnsupportedSpec("validate: twisted coroot mismatch");
    }
    for (int s : R.simples) {
      IntVec img = R.theta * R.roots[static_cast<size_t>(s)];
      bool is_simple = false;
      for (int t : R.simples)
        if (R.roots[static_cast<size_t>(t)] == img) is_simple = true;
      if (!is_simple)
        throw UnsupportedSpec("validate: twist does not preserve the base");
    }
  }
}

}  // namespace levelzero
