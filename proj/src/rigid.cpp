#include "cloc/rigid.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cloc {

bool is_rigid(const Category& c, const Obj& t) {
  for (std::size_t i = 0; i < t.count(); ++i)
    for (std::size_t j = i + 1; j < t.count(); ++j)
      if (crosses(c.polygon(), c.arc(t.summands[i]), c.arc(t.summands[j]))) return false;
  return true;
}

RigidObject make_rigid(const Category& c, const Obj& t) {
  if (!is_rigid(c, t)) throw std::invalid_argument("T is not rigid: two summands cross");
  RigidObject r;
  for (int x : t.summands)
    if (std::find(r.summands.begin(), r.summands.end(), x) == r.summands.end()) r.summands.push_back(x);
  return r;
}

const char* subcat_name(Subcat k) {
  switch (k) {
    case Subcat::AddT: return "addT";
    case Subcat::TPerp: return "Tperp";
    case Subcat::SigmaTPerp: return "SigmaTperp";
    case Subcat::PerpT: return "perpT";
    case Subcat::AddSigmaT: return "addSigmaT";
  }
  return "?";
}

std::vector<int> SubcatView::indecs() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < member.size(); ++x)
    if (member[x]) out.push_back(static_cast<int>(x));
  return out;
}

bool SubcatView::contains(const Obj& x) const {
  return std::all_of(x.summands.begin(), x.summands.end(), [&](int s) { return member[s]; });
}

SubcatView perp_view(const Category& c, const RigidObject& t, Subcat kind) {
  SubcatView v{kind, std::vector<bool>(c.size(), false)};
  switch (kind) {
    case Subcat::AddT:
      for (int s : t.summands) v.member[s] = true;
      break;
    case Subcat::AddSigmaT:
      for (int s : t.summands) v.member[c.sigma(s)] = true;
      break;
    case Subcat::TPerp:
    case Subcat::SigmaTPerp:
      for (int y = 0; y < c.size(); ++y) {
        bool in = true;
        for (int s : t.summands) in = in && c.hom_dim(s, c.sigma(y)) == 0;
        if (in) v.member[kind == Subcat::TPerp ? y : c.sigma(y)] = true;
      }
      break;
    case Subcat::PerpT:
      for (int y = 0; y < c.size(); ++y) {
        bool in = true;
        for (int s : t.summands) in = in && c.hom_dim(y, c.sigma(s)) == 0;
        v.member[y] = in;
      }
      break;
  }
  return v;
}

bool double_perp_holds(const Category& c, const RigidObject& t) {
  const auto tperp = perp_view(c, t, Subcat::TPerp).indecs();
  const auto perpt = perp_view(c, t, Subcat::PerpT).indecs();
  const auto addt = perp_view(c, t, Subcat::AddT);
  for (int y = 0; y < c.size(); ++y) {
    // y ∈ ⊥(T⊥): Hom(y, Σz) = 0 for z ∈ T⊥;  y ∈ (⊥T)⊥: Hom(z, Σy) = 0 for z ∈ ⊥T.
    bool left = true, right = true;
    for (int z : tperp) left = left && c.hom_dim(y, c.sigma(z)) == 0;
    for (int z : perpt) right = right && c.hom_dim(z, c.sigma(y)) == 0;
    if (left != addt.contains(y) || right != addt.contains(y)) return false;
  }
  return true;
}

namespace {

// Bundled right approximation of x by the given indecomposables.
Mor bundle_right(const Category& c, const std::vector<int>& gens, const Obj& x) {
  Mor f{Obj{}, x, Mat()};
  std::vector<std::pair<int, std::size_t>> cols;  // (generator, target summand)
  for (int g : gens)
    for (std::size_t i = 0; i < x.count(); ++i)
      if (c.hom_dim(g, x.summands[i])) cols.emplace_back(g, i);
  f.coeffs = Mat(x.count(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    f.source.summands.push_back(cols[k].first);
    f.coeffs(cols[k].second, k) = 1;
  }
  return f;
}

Mor bundle_left(const Category& c, const std::vector<int>& gens, const Obj& x) {
  Mor f{x, Obj{}, Mat()};
  std::vector<std::pair<int, std::size_t>> rows;
  for (int g : gens)
    for (std::size_t j = 0; j < x.count(); ++j)
      if (c.hom_dim(x.summands[j], g)) rows.emplace_back(g, j);
  f.coeffs = Mat(rows.size(), x.count());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    f.target.summands.push_back(rows[k].first);
    f.coeffs(k, rows[k].second) = 1;
  }
  return f;
}

}  // namespace

Mor right_approx(const Category& c, const RigidObject& t, const Obj& x, bool minimal) {
  Mor f = bundle_right(c, t.summands, x);
  if (minimal) f = right_minimal_reduce(c, f).minimal;
  return f;
}

Mor left_approx(const Category& c, const SubcatView& view, const Obj& x) {
  return bundle_left(c, view.indecs(), x);
}

Mor right_approx_by(const Category& c, const SubcatView& view, const Obj& x) {
  return bundle_right(c, view.indecs(), x);
}

bool is_right_approx(const Category& c, const RigidObject& t, const Mor& f) {
  for (int w : t.summands) {
    const Mat m = hom_from(c, w, f);
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

WakamatsuReport wakamatsu_check(const Category& c, const RigidObject& t, const Obj& x) {
  WakamatsuReport r;
  r.triangle = complete_triangle(c, right_approx(c, t, x, true));
  r.y = suspend_obj(c, r.triangle.z, -1);
  const auto tperp = perp_view(c, t, Subcat::TPerp);
  r.y_in_tperp = tperp.contains(r.y);
  const Mor conn = suspend_mor(c, r.triangle.g, -1);  // Σ^{-1}x -> Y
  r.left_approx = true;
  for (int m : tperp.indecs()) {
    const Mat a = hom_to(c, conn, m);
    if (rank(a) != a.rows()) r.left_approx = false;
  }
  return r;
}

bool in_CT(const Category& c, const RigidObject& t, const Obj& x) {
  const Triangle tri = complete_triangle(c, right_approx(c, t, x, true));
  return perp_view(c, t, Subcat::AddT).contains(suspend_obj(c, tri.z, -1));
}

bool is_cluster_tilting(const Category& c, const RigidObject& t) {
  const auto tperp = perp_view(c, t, Subcat::TPerp);
  const auto addt = perp_view(c, t, Subcat::AddT);
  bool by_perp = true;
  for (int y = 0; y < c.size(); ++y) by_perp = by_perp && (!tperp.contains(y) || addt.contains(y));
  const bool by_count =
      is_rigid(c, t.obj()) && static_cast<int>(make_rigid(c, t.obj()).summands.size()) == c.polygon().n;
  if (by_perp != by_count) throw std::logic_error("is_cluster_tilting: perpendicular test and arc count disagree");
  return by_perp;
}

bool factors_through(const Category& c, const SubcatView& view, const Mor& f) {
  const Mor a = left_approx(c, view, f.source);
  return solve_pre(c, a, f).has_value();
}

bool factors_through_subcat(const Category& c, const RigidObject& t, const Mor& f, Subcat kind) {
  const bool direct = factors_through(c, perp_view(c, t, kind), f);
  if (kind != Subcat::SigmaTPerp) return direct;
  bool h_zero = true;
  for (int w : t.summands) h_zero = h_zero && hom_from(c, w, f).is_zero();
  if (h_zero != direct)
    throw std::logic_error("factors_through_subcat: Hom(T, f) = 0 disagrees with factoring through ΣT⊥");
  return direct;
}

std::vector<RigidObject> enumerate_rigid(const Category& c) {
  std::vector<RigidObject> out;
  std::vector<int> cur;
  const int sz = c.size();
  auto rec = [&](auto&& self, int next) -> void {
    for (int x = next; x < sz; ++x) {
      bool ok = true;
      for (int s : cur) ok = ok && !crosses(c.polygon(), c.arc(s), c.arc(x));
      if (!ok) continue;
      cur.push_back(x);
      out.push_back(RigidObject{cur});
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RigidObject random_rigid(const Category& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(c.size());
  for (int x = 0; x < c.size(); ++x) order[x] = x;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> want_dist(1, c.polygon().n);
  const int want = want_dist(rng);
  RigidObject t;
  for (int x : order) {
    if (static_cast<int>(t.summands.size()) == want) break;
    bool ok = true;
    for (int s : t.summands) ok = ok && !crosses(c.polygon(), c.arc(s), c.arc(x));
    if (ok) t.summands.push_back(x);
  }
  std::sort(t.summands.begin(), t.summands.end());
  return t;
}

}  // namespace cloc
