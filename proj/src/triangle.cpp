#include "cloc/triangle.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace cloc {

std::vector<int> cone_profile(const Category& c, const Mor& f) {
  const Mor sf = suspend_mor(c, f);
  std::vector<int> p(c.size());
  for (int w = 0; w < c.size(); ++w) {
    const Mat a = hom_from(c, w, f);
    const Mat b = hom_from(c, w, sf);
    p[w] = static_cast<int>((a.rows() - rank(a)) + (b.cols() - rank(b)));
  }
  return p;
}

namespace {

Obj object_from_multiplicities(const std::vector<long>& m) {
  Obj z;
  for (std::size_t v = 0; v < m.size(); ++v)
    for (long k = 0; k < m[v]; ++k) z.summands.push_back(static_cast<int>(v));
  return z;
}

bool integral_nonneg(const Scalar& s) { return s.get_den() == 1 && sgn(s) >= 0; }

}  // namespace

std::vector<Obj> cone_candidates(const Category& c, const std::vector<int>& profile) {
  const int sz = c.size();
  Mat p(sz, 1);
  for (int w = 0; w < sz; ++w) p(w, 0) = profile[w];
  if (const auto& inv = c.hom_dim_inverse()) {
    const Mat m = *inv * p;
    std::vector<long> mult(sz);
    for (int v = 0; v < sz; ++v) {
      if (!integral_nonneg(m(v, 0))) return {};
      mult[v] = m(v, 0).get_num().get_si();
    }
    return {object_from_multiplicities(mult)};
  }

  // Singular case: D has a positive diagonal and nonnegative entries, so each
  // multiplicity m_v is at most p_v. Enumerate the free variables of the
  // reduced system within these bounds.
  std::vector<std::size_t> piv;
  const Mat r = rref(hstack(c.hom_dim_matrix(), p), &piv);
  if (!piv.empty() && piv.back() == static_cast<std::size_t>(sz)) return {};
  std::vector<bool> is_pivot(sz, false);
  for (auto q : piv) is_pivot[q] = true;
  std::vector<int> free_vars;
  for (int v = 0; v < sz; ++v)
    if (!is_pivot[v]) free_vars.push_back(v);

  std::vector<Obj> out;
  std::vector<long> value(free_vars.size(), 0);
  while (true) {
    std::vector<long> mult(sz, 0);
    for (std::size_t k = 0; k < free_vars.size(); ++k) mult[free_vars[k]] = value[k];
    bool ok = true;
    for (std::size_t i = 0; i < piv.size() && ok; ++i) {
      Scalar s = r(i, sz);
      for (std::size_t k = 0; k < free_vars.size(); ++k) s -= r(i, free_vars[k]) * value[k];
      ok = integral_nonneg(s);
      if (ok) mult[piv[i]] = s.get_num().get_si();
    }
    if (ok) out.push_back(object_from_multiplicities(mult));
    std::size_t k = 0;
    while (k < free_vars.size() && value[k] == profile[free_vars[k]]) value[k++] = 0;
    if (k == free_vars.size()) break;
    ++value[k];
  }
  return out;
}

namespace {

// rank(Hom(W, a)) + rank(Hom(W, b)) = dim Hom(W, B) for A -a-> B -b-> C.
void check_covariant(const Category& c, const Mor& a, const Mor& b, const std::string& where,
                     std::vector<std::string>& failures) {
  for (int w = 0; w < c.size(); ++w) {
    const Mat ma = hom_from(c, w, a);
    const Mat mb = hom_from(c, w, b);
    if (rank(ma) + rank(mb) != mb.cols())
      failures.push_back("Hom(" + format_arc(c.arc(w)) + ", -) not exact at " + where);
  }
}

void check_contravariant(const Category& c, const Mor& a, const Mor& b, const std::string& where,
                         std::vector<std::string>& failures) {
  for (int w = 0; w < c.size(); ++w) {
    const Mat ma = hom_to(c, a, w);
    const Mat mb = hom_to(c, b, w);
    if (rank(ma) + rank(mb) != ma.cols())
      failures.push_back("Hom(-, " + format_arc(c.arc(w)) + ") not exact at " + where);
  }
}

}  // namespace

CertReport certify_triangle(const Category& c, const Mor& f, const Mor& g, const Mor& h, bool full_period) {
  CertReport rep;
  const Mor sf = suspend_mor(c, f);
  if (f.target != g.source || g.target != h.source || h.target != sf.source) {
    rep.composite_failures.push_back("objects do not chain");
    return rep;
  }
  if (!compose(c, g, f).coeffs.is_zero()) rep.composite_failures.push_back("g o f != 0");
  if (!compose(c, h, g).coeffs.is_zero()) rep.composite_failures.push_back("h o g != 0");
  if (!compose(c, sf, h).coeffs.is_zero()) rep.composite_failures.push_back("Σf o h != 0");

  const auto profile = cone_profile(c, f);
  for (int w = 0; w < c.size() && rep.homdim_match; ++w)
    rep.homdim_match = hom_dimension(c, Obj{{w}}, g.target) == static_cast<std::size_t>(profile[w]);

  const int shifts = full_period ? c.polygon().vertex_count() : 1;
  Mor fk = f, gk = g, hk = h;
  for (int k = 0; k < shifts; ++k) {
    const Mor sfk = suspend_mor(c, fk);
    const std::string tag = k == 0 ? "" : " (shift " + std::to_string(k) + ")";
    check_covariant(c, fk, gk, "Y" + tag, rep.covariant_failures);
    check_covariant(c, gk, hk, "Z" + tag, rep.covariant_failures);
    check_covariant(c, hk, sfk, "ΣX" + tag, rep.covariant_failures);
    check_contravariant(c, fk, gk, "Y" + tag, rep.contravariant_failures);
    check_contravariant(c, gk, hk, "Z" + tag, rep.contravariant_failures);
    check_contravariant(c, hk, sfk, "ΣX" + tag, rep.contravariant_failures);
    fk = sfk;
    gk = suspend_mor(c, gk);
    hk = suspend_mor(c, hk);
  }
  return rep;
}

namespace {

Mor random_combination(const Category& c, const Obj& x, const Obj& y, const Mat& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Mat v(basis.rows(), 1);
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    int a = coef(rng);
    if (a == 0) a = 1;
    for (std::size_t i = 0; i < basis.rows(); ++i) v(i, 0) += a * basis(i, j);
  }
  return from_coordinates(c, x, y, v);
}

}  // namespace

Triangle complete_triangle(const Category& c, const Mor& f, std::uint64_t seed) {
  const auto profile = cone_profile(c, f);
  const auto candidates = cone_candidates(c, profile);
  const Obj sx = suspend_obj(c, f.source);
  const Mor sf = suspend_mor(c, f);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
  constexpr int kAttempts = 8;

  for (const Obj& z : candidates) {
    const Mat g_space = kernel_basis(pre_matrix(c, f, z));
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const Mor g = random_combination(c, f.target, z, g_space, rng);
      const Mat h_space = kernel_basis(vstack(pre_matrix(c, g, sx), post_matrix(c, z, sf)));
      const Mor h = random_combination(c, z, sx, h_space, rng);
      CertReport cert = certify_triangle(c, f, g, h);
      if (cert.ok()) return {f.source, f.target, z, f, g, h, std::move(cert)};
    }
  }
  std::ostringstream os;
  os << "complete_triangle: no certified completion (" << candidates.size() << " cone candidates)";
  throw std::runtime_error(os.str());
}

Triangle rotate_triangle(const Category& c, const Triangle& t) {
  const Mor nsf = scale(Scalar(-1), suspend_mor(c, t.f));
  CertReport cert = certify_triangle(c, t.g, t.h, nsf);
  return {t.y, t.z, suspend_obj(c, t.x), t.g, t.h, nsf, std::move(cert)};
}

Obj cone_object(const Category& c, const Mor& f) { return complete_triangle(c, f).z; }

}  // namespace cloc
