#include "qrep/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qrep {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count())
      throw Error("arrow endpoint out of range");
  }
}

int Quiver::vertex_by_name(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return -1;
}

Quiver Quiver::reversed() const {
  std::vector<Arrow> rev = arrows_;
  for (Arrow& a : rev) std::swap(a.source, a.target);
  return Quiver(names_, std::move(rev));
}

bool Quiver::operator==(const Quiver& o) const {
  if (names_ != o.names_ || arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].source != o.arrows_[i].source || arrows_[i].target != o.arrows_[i].target ||
        arrows_[i].label != o.arrows_[i].label)
      return false;
  }
  return true;
}

const CanonicalShape& QuiverAlgebra::canonical() const {
  if (!canonical_) throw UnsupportedAlgebra("algebra has no canonical relation");
  return *canonical_;
}

bool QuiverAlgebra::operator==(const QuiverAlgebra& o) const {
  if (quiver_ != o.quiver_ || canonical_.has_value() != o.canonical_.has_value()) return false;
  if (!canonical_) return true;
  const CanonicalShape &a = *canonical_, &b = *o.canonical_;
  return a.p == b.p && a.q == b.q && a.s == b.s && a.source == b.source && a.sink == b.sink &&
         a.alpha_arrows == b.alpha_arrows && a.beta_arrows == b.beta_arrows &&
         a.gamma_arrows == b.gamma_arrows;
}

AlgebraPtr path_algebra(Quiver q) { return std::make_shared<const QuiverAlgebra>(std::move(q)); }

AlgebraPtr build_canonical(int p, int q, int s) {
  if (p < 1 || q < 1 || s < 1) throw UnsupportedType("canonical type needs p,q,s >= 1");
  std::vector<std::string> names;
  names.push_back("0");
  for (int t = 1; t < p; ++t) names.push_back(std::to_string(t));
  for (int t = 1; t < q; ++t) names.push_back(std::to_string(t) + "'");
  for (int t = 1; t < s; ++t) names.push_back(std::to_string(t) + "''");
  names.push_back("inf");

  const int inf = static_cast<int>(names.size()) - 1;
  // Dense index of the t-th interior vertex of each arm (t = 1..len-1).
  auto upper = [&](int t) { return t; };
  auto middle = [&](int t) { return (p - 1) + t; };
  auto lower = [&](int t) { return (p - 1) + (q - 1) + t; };

  std::vector<Arrow> arrows;
  CanonicalShape shape;
  shape.p = p;
  shape.q = q;
  shape.s = s;
  shape.source = 0;
  shape.sink = inf;
  auto add_arm = [&](int len, const std::string& tag, const std::function<int(int)>& vtx,
                     std::vector<int>& path) {
    for (int t = 1; t <= len; ++t) {
      const int u = (t == 1) ? 0 : vtx(t - 1);
      const int v = (t == len) ? inf : vtx(t);
      path.push_back(static_cast<int>(arrows.size()));
      arrows.push_back(Arrow{u, v, tag + std::to_string(t)});
    }
  };
  add_arm(p, "a", upper, shape.alpha_arrows);
  add_arm(q, "b", middle, shape.beta_arrows);
  add_arm(s, "g", lower, shape.gamma_arrows);

  return std::make_shared<QuiverAlgebra>(Quiver(std::move(names), std::move(arrows)),
                                         std::move(shape));
}

bool is_domestic(int p, int q, int s) {
  int t[3] = {p, q, s};
  std::sort(t, t + 3, std::greater<int>());
  if (t[2] < 1) return false;
  if (t[2] == 1) return true;                       // (p,q,1)
  if (t[2] == 2 && t[1] == 2) return t[0] >= 2;     // (p,2,2)
  if (t[2] == 2 && t[1] == 3) return t[0] >= 3 && t[0] <= 5;  // (3,3,2),(4,3,2),(5,3,2)
  return false;
}

Quiver build_dn(int n) {
  if (n < 4) throw UnsupportedType("D~_n needs n >= 4");
  std::vector<std::string> names;
  for (int v = 1; v <= n + 1; ++v) names.push_back(std::to_string(v));
  auto idx = [](int label) { return label - 1; };
  std::vector<Arrow> arrows;
  auto add = [&](int u, int v) {
    arrows.push_back(Arrow{idx(u), idx(v), std::to_string(u) + "->" + std::to_string(v)});
  };
  add(3, 1);
  add(3, 2);
  for (int k = 4; k <= n - 1; ++k) add(k, k - 1);
  add(n, n - 1);
  add(n + 1, n - 1);
  return Quiver(std::move(names), std::move(arrows));
}

Quiver build_e6() {
  std::vector<std::string> names;
  for (int v = 0; v <= 6; ++v) names.push_back(std::to_string(v));
  std::vector<Arrow> arrows;
  auto add = [&](int u, int v) {
    arrows.push_back(Arrow{u, v, std::to_string(u) + "->" + std::to_string(v)});
  };
  add(2, 1);
  add(1, 0);
  add(3, 4);
  add(4, 0);
  add(5, 0);
  add(6, 5);
  return Quiver(std::move(names), std::move(arrows));
}

long euler_form_hereditary(const Quiver& q, const DimVector& x, const DimVector& y) {
  if (static_cast<int>(x.size()) != q.vertex_count() ||
      static_cast<int>(y.size()) != q.vertex_count())
    throw Error("dimension vector length mismatch");
  long acc = 0;
  for (int v = 0; v < q.vertex_count(); ++v) acc += static_cast<long>(x[v]) * y[v];
  for (const Arrow& a : q.arrows()) acc -= static_cast<long>(x[a.source]) * y[a.target];
  return acc;
}

DimVector path_counts_from(const Quiver& q, int from) {
  if (from < 0 || from >= q.vertex_count()) throw Error("vertex out of range");
  // counts[v] = number of paths from -> v; DFS with memo, cycle detection.
  std::vector<long> memo(q.vertex_count(), -1);
  std::vector<bool> onstack(q.vertex_count(), false);
  std::function<long(int)> count = [&](int v) -> long {
    if (memo[v] >= 0) return memo[v];
    if (onstack[v]) throw UnsupportedAlgebra("path counting needs an acyclic quiver");
    onstack[v] = true;
    long c = (v == from) ? 1 : 0;
    for (const Arrow& a : q.arrows())
      if (a.target == v) c += count(a.source);
    onstack[v] = false;
    return memo[v] = c;
  };
  DimVector out(q.vertex_count(), 0);
  for (int v = 0; v < q.vertex_count(); ++v) out[v] = static_cast<int>(count(v));
  return out;
}

std::string describe(const Quiver& q) {
  std::ostringstream os;
  os << "vertices (" << q.vertex_count() << "):";
  for (int v = 0; v < q.vertex_count(); ++v) os << " " << q.vertex_name(v);
  os << "\narrows (" << q.arrow_count() << "):\n";
  for (const Arrow& a : q.arrows())
    os << "  " << a.label << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target)
       << "\n";
  return os.str();
}

std::string describe(const QuiverAlgebra& alg) {
  std::ostringstream os;
  os << describe(alg.quiver());
  if (alg.has_relation()) {
    const CanonicalShape& c = alg.canonical();
    os << "canonical type (" << c.p << "," << c.q << "," << c.s << ")"
       << (is_domestic(c.p, c.q, c.s) ? ", domestic" : "") << "\n";
    auto path = [&](const std::vector<int>& arrows) {
      std::string txt;
      for (size_t i = arrows.size(); i-- > 0;) {
        txt += alg.quiver().arrow(arrows[i]).label;
        if (i) txt += " ";
      }
      return txt;
    };
    os << "relation: " << path(c.gamma_arrows) << " = " << path(c.alpha_arrows) << " + "
       << path(c.beta_arrows) << "\n";
  }
  return os.str();
}

}  // namespace qrep
