#include "cloc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cloc/labels.hpp"

namespace cloc {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// "S1+S3": names of the summands, sorted; "0" for the zero module, "?" when
// the module is not a sum of listed indecomposables.
std::string decomposition_name(const Algebra& a, const LambdaModule& m, const std::vector<IndecModule>& indecs) {
  if (m.is_zero()) return "0";
  const auto d = decompose(a, m, indecs);
  if (!d) return "?";
  std::vector<std::string> parts;
  for (std::size_t u = 0; u < d->size(); ++u)
    for (int k = 0; k < (*d)[u]; ++k) parts.push_back(indecs[u].name);
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "+") + p;
  return s;
}

std::string instance_name(const Category& c, const RigidObject& t) {
  return "n=" + std::to_string(c.polygon().n) + " T=" + format_obj(c, t.obj());
}

// Sampling policy: exhaustive over basis maps and indecomposable pairs up to
// this rank, sampled beyond.
constexpr int kExhaustiveRank = 5;

Mor random_map(const Category& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, c.size() - 1), count(1, 2), coef(-2, 2);
  Obj x, y;
  for (int k = count(rng); k > 0; --k) x.summands.push_back(pick(rng));
  for (int k = count(rng); k > 0; --k) y.summands.push_back(pick(rng));
  Mor f{x, y, Mat(y.count(), x.count())};
  for (std::size_t i = 0; i < y.count(); ++i)
    for (std::size_t j = 0; j < x.count(); ++j)
      if (c.hom_dim(x.summands[j], y.summands[i])) f.coeffs(i, j) = coef(rng);
  return f;
}

Mor random_hom(const Category& c, const Obj& x, const Obj& y, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t d = hom_dimension(c, x, y);
  Mat v(d, 1);
  for (std::size_t k = 0; k < d; ++k) v(k, 0) = coef(rng);
  return from_coordinates(c, x, y, v);
}

// Basis maps between indecomposables (exhaustive ranks) followed by sampled
// random maps; the boolean marks sampled entries.
std::vector<std::pair<Mor, bool>> map_corpus(const Category& c, std::mt19937_64& rng, int samples) {
  std::vector<std::pair<Mor, bool>> out;
  if (c.polygon().n <= kExhaustiveRank)
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y)
        if (c.hom_dim(x, y)) out.emplace_back(basis_mor(c, x, y), false);
  for (int k = 0; k < samples; ++k) out.emplace_back(random_map(c, rng), true);
  return out;
}

std::vector<std::pair<int, int>> pair_corpus(const Category& c, std::mt19937_64& rng, int samples, bool* exhaustive) {
  std::vector<std::pair<int, int>> out;
  *exhaustive = c.polygon().n <= kExhaustiveRank;
  if (*exhaustive) {
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y) out.emplace_back(x, y);
  } else {
    std::uniform_int_distribution<int> pick(0, c.size() - 1);
    for (int k = 0; k < samples; ++k) out.emplace_back(pick(rng), pick(rng));
  }
  return out;
}

struct Ctx {
  const Category& c;
  const RigidObject& t;
  const Localizer& loc;
  std::mt19937_64 rng;
  int samples;
  SuiteResult& r;
  std::string property;
  std::string instance;

  void fail(const std::string& reproducer, const std::string& detail) {
    r.failures.push_back(Failure{instance, reproducer,
                                 "implementation falsifies \"" + property + "\" on " + instance + ": " + detail});
  }
  // Runs one check; exceptions count as failures with their message.
  template <class Fn>
  void check(const std::string& reproducer, Fn&& fn) {
    ++r.checks;
    try {
      std::string detail = fn();
      if (!detail.empty()) fail(reproducer, detail);
    } catch (const std::exception& e) {
      fail(reproducer, std::string("exception: ") + e.what());
    }
  }
};

void suite_kernel(Ctx& x) {
  const SubcatView& view = x.loc.sigma_tperp();
  for (const auto& [f, sampled] : map_corpus(x.c, x.rng, x.samples)) {
    x.r.exhaustive = x.r.exhaustive && (x.c.polygon().n <= kExhaustiveRank);
    x.check(format_mor(x.c, f), [&]() -> std::string {
      const bool hz = x.loc.H_is_zero(f);
      const bool direct = factors_through(x.c, view, f);
      if (hz != direct)
        return std::string("Hom(T,f)=0 is ") + (hz ? "true" : "false") + " but factoring through ΣT⊥ is " +
               (direct ? "true" : "false");
      return {};
    });
  }
}

void suite_stilde(Ctx& x) {
  auto corpus = map_corpus(x.c, x.rng, x.samples);
  for (int y = 0; y < x.c.size(); ++y) corpus.emplace_back(identity_mor(Obj{{y}}), false);
  for (const auto& [f, sampled] : corpus) {
    x.check(format_mor(x.c, f), [&]() -> std::string {
      const MorClassification a = x.loc.classify(f, 0);
      const MorClassification b = x.loc.classify(f, 1);
      if (a.in_S_tilde != b.in_S_tilde) return "S̃ verdict depends on the completion of the triangle";
      if (a.in_S != b.in_S) return "S verdict depends on the completion of the triangle";
      if (f.source == f.target && f.coeffs == Mat::identity(f.source.count()) && !(a.in_S && a.in_S_tilde))
        return "identity map not in S";
      return {};
    });
  }
  x.r.exhaustive = x.c.polygon().n <= kExhaustiveRank;
}

void suite_doubleperp(Ctx& x) {
  const auto tperp = perp_view(x.c, x.t, Subcat::TPerp).indecs();
  const auto perpt = perp_view(x.c, x.t, Subcat::PerpT).indecs();
  const auto addt = perp_view(x.c, x.t, Subcat::AddT);
  for (int y = 0; y < x.c.size(); ++y) {
    x.check(x.c.label_name(y), [&]() -> std::string {
      bool left = true, right = true;
      for (int z : tperp) left = left && x.c.hom_dim(y, x.c.sigma(z)) == 0;
      for (int z : perpt) right = right && x.c.hom_dim(z, x.c.sigma(y)) == 0;
      if (left != addt.contains(y)) return "membership in ⊥(T⊥) differs from add T";
      if (right != addt.contains(y)) return "membership in (⊥T)⊥ differs from add T";
      return {};
    });
  }
  x.check("T", [&]() -> std::string { return double_perp_holds(x.c, x.t) ? "" : "double_perp_holds is false"; });
}

void suite_wakamatsu(Ctx& x) {
  std::vector<Obj> objs;
  for (int y = 0; y < x.c.size(); ++y) objs.push_back(Obj{{y}});
  std::uniform_int_distribution<int> pick(0, x.c.size() - 1);
  for (int k = 0; k < std::max(1, x.samples / 20); ++k) objs.push_back(Obj{{pick(x.rng), pick(x.rng)}});
  for (const Obj& o : objs) {
    x.check(format_obj(x.c, o), [&]() -> std::string {
      const WakamatsuReport w = wakamatsu_check(x.c, x.t, o);
      if (!w.triangle.cert.ok()) return "approximation triangle does not certify";
      if (!w.y_in_tperp) return "desuspended cone " + format_obj(x.c, w.y) + " is not in T⊥";
      if (!w.left_approx) return "connecting map is not a left T⊥-approximation";
      return {};
    });
  }
}

void suite_identify(Ctx& x) {
  std::vector<Obj> objs;
  for (int y = 0; y < x.c.size(); ++y) objs.push_back(Obj{{y}});
  std::uniform_int_distribution<int> pick(0, x.c.size() - 1);
  for (int k = 0; k < std::max(1, x.samples / 20); ++k) objs.push_back(Obj{{pick(x.rng), pick(x.rng)}});
  for (const Obj& o : objs) {
    for (std::uint64_t variant : {0ULL, 1ULL}) {
      x.check(format_obj(x.c, o) + " variant " + std::to_string(variant), [&]() -> std::string {
        const Resolution r = x.loc.s_resolution(o, variant);
        if (r.s.target.iso_class() != o.iso_class()) return "resolution has the wrong target";
        if (!in_CT(x.c, x.t, r.source)) return "resolving object " + format_obj(x.c, r.source) + " is not in C(T)";
        if (!x.loc.classify(r.s, 2).in_S) return "resolving map " + format_mor(x.c, r.s) + " is not in S";
        if (!x.loc.H_is_iso(r.s)) return "Hom(T, s) is not invertible";
        return {};
      });
    }
  }
}

void suite_factoring(Ctx& x) {
  std::vector<int> ct;
  for (int y = 0; y < x.c.size(); ++y)
    if (in_CT(x.c, x.t, Obj{{y}})) ct.push_back(y);
  const bool exhaustive = x.c.polygon().n <= kExhaustiveRank;
  x.r.exhaustive = exhaustive;
  for (int y = 0; y < x.c.size(); ++y) {
    const Resolution r = x.loc.s_resolution(Obj{{y}});
    for (int w : ct) {
      if (!exhaustive) break;
      if (!x.c.hom_dim(w, y)) continue;
      const Mor u = basis_mor(x.c, w, y);
      x.check(format_mor(x.c, u) + " through " + format_mor(x.c, r.s), [&]() -> std::string {
        const Mor h = x.loc.factor_through_s(u, r.s);
        return compose(x.c, r.s, h).coeffs == u.coeffs ? "" : "s o h differs from u";
      });
    }
  }
  // Sampled: random maps from sums of C(T) indecomposables into random objects.
  std::uniform_int_distribution<int> pick(0, x.c.size() - 1);
  for (int k = 0; k < x.samples / 4 && !ct.empty(); ++k) {
    std::uniform_int_distribution<std::size_t> pct(0, ct.size() - 1);
    const Obj src{{ct[pct(x.rng)], ct[pct(x.rng)]}};
    const Obj tgt{{pick(x.rng), pick(x.rng)}};
    const Mor u = random_hom(x.c, src, tgt, x.rng);
    x.check(format_mor(x.c, u), [&]() -> std::string {
      const Resolution r = x.loc.s_resolution(tgt);
      const Mor h = x.loc.factor_through_s(u, r.s);
      return compose(x.c, r.s, h).coeffs == u.coeffs ? "" : "s o h differs from u";
    });
  }
  // Fullness of Hom(T,-) on C(T).
  for (int a : ct)
    for (int b : ct) {
      if (!exhaustive && x.rng() % 8 != 0) continue;
      x.check(x.c.label_name(a) + ", " + x.c.label_name(b), [&]() -> std::string {
        const LocHom l = x.loc.loc_hom(Obj{{a}}, Obj{{b}});
        const int md = module_hom_dim(x.loc.algebra(), H_obj(x.loc.algebra(), Obj{{a}}),
                                      H_obj(x.loc.algebra(), Obj{{b}}));
        if (static_cast<int>(rank(l.h_matrix)) != md)
          return "Hom(T,-) is not onto Hom_Λ: rank " + std::to_string(rank(l.h_matrix)) + " vs " +
                 std::to_string(md);
        return {};
      });
    }
}

void suite_equivalence(Ctx& x) {
  const Algebra& alg = x.loc.algebra();
  std::vector<LambdaModule> images;
  for (int y = 0; y < x.c.size(); ++y) images.push_back(H_obj(alg, Obj{{y}}));
  bool exhaustive = true;
  for (auto [a, b] : pair_corpus(x.c, x.rng, x.samples, &exhaustive)) {
    x.check(x.c.label_name(a) + ", " + x.c.label_name(b), [&]() -> std::string {
      const LocHom l = x.loc.loc_hom(Obj{{a}}, Obj{{b}});
      const int md = module_hom_dim(alg, images[a], images[b]);
      if (static_cast<int>(l.dim) != md)
        return "localised hom has dimension " + std::to_string(l.dim) + ", module hom " + std::to_string(md);
      const LocHom l2 = x.loc.loc_hom(Obj{{a}}, Obj{{b}}, 1);
      if (l2.dim != l.dim) return "localised hom dimension depends on the resolution";
      // The translation to module homs is injective on representatives.
      Mat images_flat;
      for (std::size_t k = 0; k < l.representatives.cols(); ++k) {
        const ModuleHom g = x.loc.translate(l, l.representatives.column(k));
        if (!is_module_hom(alg, images[a], images[b], g)) return "translated class is not a module hom";
        std::vector<Scalar> flat;
        for (const Mat& m : g.maps) flat.insert(flat.end(), m.entries().begin(), m.entries().end());
        Mat col(flat.size(), 1, flat);
        images_flat = images_flat.cols() ? hstack(images_flat, col) : col;
      }
      if (l.dim && rank(images_flat) != l.dim) return "translation to module homs is not injective";
      return {};
    });
  }
  x.r.exhaustive = exhaustive;

  // Naturality of the translation in the first variable.
  std::uniform_int_distribution<int> pick(0, x.c.size() - 1);
  const int spots = std::max(10, x.samples / 20);
  for (int k = 0; k < spots; ++k) {
    const int a = pick(x.rng), b = pick(x.rng), y = pick(x.rng);
    if (!x.c.hom_dim(a, b)) continue;
    const Mor f = scale(Scalar(1 + static_cast<long>(x.rng() % 3)), basis_mor(x.c, a, b));
    x.check(format_mor(x.c, f) + " against " + x.c.label_name(y), [&]() -> std::string {
      const LocHom l1 = x.loc.loc_hom(Obj{{a}}, Obj{{y}});
      const LocHom l2 = x.loc.loc_hom(Obj{{b}}, Obj{{y}});
      const Mor lift = x.loc.lift_map(f, l1.rx, l2.rx);
      const ModuleHom hf = H_mor(alg, f);
      for (std::size_t j = 0; j < l2.representatives.cols(); ++j) {
        const Mat coords = l2.representatives.column(j);
        const Mor phi = from_coordinates(x.c, l2.rx.source, l2.ry.source, coords);
        const ModuleHom lhs = x.loc.translate(l1, coordinates(x.c, compose(x.c, phi, lift)));
        const ModuleHom rhs = compose(x.loc.translate(l2, coords), hf);
        if (!equal(lhs, rhs)) return "naturality square does not commute";
      }
      return {};
    });
  }
}

std::size_t factoring_dim(const Category& c, const SubcatView& view, const Obj& x, const Obj& y) {
  const Mor a = left_approx(c, view, x);
  return a.target.is_zero() ? 0 : rank(pre_matrix(c, a, y));
}

void suite_chain(Ctx& x) {
  const Algebra& alg = x.loc.algebra();
  const SubcatView sigma_t = perp_view(x.c, x.t, Subcat::AddSigmaT);
  std::vector<int> ct;
  for (int y = 0; y < x.c.size(); ++y)
    if (in_CT(x.c, x.t, Obj{{y}})) ct.push_back(y);
  for (int a : ct)
    for (int b : ct) {
      x.check(x.c.label_name(a) + ", " + x.c.label_name(b), [&]() -> std::string {
        const Obj xa{{a}}, yb{{b}};
        const std::size_t total = x.c.hom_dim(a, b);
        const std::size_t by_perp = factoring_dim(x.c, x.loc.sigma_tperp(), xa, yb);
        const std::size_t by_sigma_t = factoring_dim(x.c, sigma_t, xa, yb);
        const std::size_t loc = x.loc.loc_hom(xa, yb).dim;
        const int md = module_hom_dim(alg, H_obj(alg, xa), H_obj(alg, yb));
        std::ostringstream os;
        if (by_perp != by_sigma_t)
          os << "ΣT⊥-factoring dimension " << by_perp << " differs from add ΣT-factoring " << by_sigma_t;
        else if (total - by_perp != loc || static_cast<int>(loc) != md)
          os << "Hom " << total << " minus factoring " << by_perp << " vs localised " << loc << " vs module "
             << md;
        return os.str();
      });
    }
}

void suite_kz(Ctx& x) {
  if (!is_cluster_tilting(x.c, x.t)) {
    ++x.r.skipped_instances;
    return;
  }
  const Algebra& alg = x.loc.algebra();
  const SubcatView sigma_t = perp_view(x.c, x.t, Subcat::AddSigmaT);
  std::vector<LambdaModule> images;
  int nonzero = 0;
  for (int y = 0; y < x.c.size(); ++y) {
    images.push_back(H_obj(alg, Obj{{y}}));
    nonzero += images.back().is_zero() ? 0 : 1;
    x.check(x.c.label_name(y), [&]() -> std::string { return in_CT(x.c, x.t, Obj{{y}}) ? "" : "not in C(T)"; });
  }
  x.check("nonzero images", [&]() -> std::string {
    const int want = x.c.size() - x.c.polygon().n;
    return nonzero == want ? "" : std::to_string(nonzero) + " nonzero images, expected " + std::to_string(want);
  });
  bool exhaustive = true;
  for (auto [a, b] : pair_corpus(x.c, x.rng, x.samples, &exhaustive)) {
    x.check(x.c.label_name(a) + ", " + x.c.label_name(b), [&]() -> std::string {
      const std::size_t quotient = x.c.hom_dim(a, b) - factoring_dim(x.c, sigma_t, Obj{{a}}, Obj{{b}});
      const int md = module_hom_dim(alg, images[a], images[b]);
      return static_cast<int>(quotient) == md
                 ? ""
                 : "quotient by add ΣT has dimension " + std::to_string(quotient) + ", module hom " +
                       std::to_string(md);
    });
  }
  x.r.exhaustive = exhaustive;
}

void suite_elementary(Ctx& x) {
  const ElementaryReport rep = elementary_identities(x.loc, x.rng());
  x.r.checks += rep.checks;
  for (const auto& f : rep.failures) x.fail(f, f);
}

void suite_density(Ctx& x) {
  const Algebra& alg = x.loc.algebra();
  int skipped = 0;
  const int bound = x.c.polygon().n <= 4 ? 6 : 4;
  const auto indecs = enumerate_indec_modules(alg, bound, 20, &skipped);
  x.r.exhaustive = skipped == 0 && x.c.polygon().n <= 4;
  for (const auto& m : indecs) {
    x.check(m.name, [&]() -> std::string {
      (void)lift_module_to_CT(alg, m.module);
      return {};
    });
  }
  for (int y = 0; y < x.c.size(); ++y) {
    if (!x.r.exhaustive) break;
    x.check(x.c.label_name(y), [&]() -> std::string {
      return decompose(alg, H_obj(alg, Obj{{y}}), indecs) ? "" : "image is not a sum of enumerated indecomposables";
    });
  }
}

void suite_oracles(Ctx& x) {
  const Category& c = x.c;
  const Polygon& p = c.polygon();
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b) {
      x.check(c.label_name(a) + ", " + c.label_name(b), [&]() -> std::string {
        const int crossing = crosses(p, c.arc(a), rotate(p, c.arc(b), -1)) ? 1 : 0;
        if (c.hom_dim(a, b) != crossing) return "mesh hom dimension differs from the crossing rule";
        if (oracle_hom_dim(p.n, c.label(a), c.label(b)) != c.hom_dim(a, b))
          return "mesh hom dimension differs from the module oracle";
        if (!c.hom_dim(a, b)) return {};
        const Obj cone = cone_object(c, basis_mor(c, a, b));
        Obj smooth;
        for (const Arc& arc : smooth_crossing(p, rotate(p, c.arc(b), -1), c.arc(a)))
          smooth.summands.push_back(c.index_of(rotate(p, arc, 1)));
        if (cone.iso_class() != smooth.iso_class())
          return "cone " + format_obj(c, cone) + " differs from smoothing " + format_obj(c, smooth);
        return {};
      });
    }
}

void suite_a4_example(Ctx& x) {
  if (x.c.polygon().n != 4 || x.t.obj().iso_class() != a4_example_rigid(x.c).obj().iso_class()) {
    ++x.r.skipped_instances;
    return;
  }
  for (const NamedCheck& ch : a4_example_checks(x.c)) {
    ++x.r.checks;
    if (!ch.pass) x.fail(ch.id, ch.description + ": " + ch.detail);
  }
}

using SuiteFn = void (*)(Ctx&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  const char* property;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"kernel", suite_kernel, "Hom(T,f) = 0 iff f factors through ΣT⊥"},
      {"stilde", suite_stilde,
       "Hom(T,f) invertible iff g and h factor through ΣT⊥; mono iff h factors, epi iff g factors; verdicts "
       "independent of the completion"},
      {"doubleperp", suite_doubleperp, "⊥(T⊥) = add T = (⊥T)⊥"},
      {"wakamatsu", suite_wakamatsu,
       "the desuspended cone of a minimal right add T-approximation lies in T⊥ with a left T⊥-approximation"},
      {"identify", suite_identify, "every object receives a map in S from an object of C(T)"},
      {"factoring-surjection", suite_factoring,
       "maps from C(T) factor through maps in S; Hom(T,-) is full on C(T)"},
      {"equivalence", suite_equivalence,
       "localised hom spaces match module hom spaces, naturally in the first variable"},
      {"chain", suite_chain,
       "on C(T), factoring through ΣT⊥ and through add ΣT have equal dimension, matching the module side"},
      {"kz", suite_kz, "for cluster-tilting T, C / add ΣT is equivalent to mod Λ"},
      {"elementary", suite_elementary,
       "U -> 0 and projections X+U -> X lie in S; maps through ΣT⊥ become zero"},
      {"density", suite_density, "every indecomposable Λ-module is Hom(T, X) for some X in C(T)"},
      {"oracles", suite_oracles,
       "mesh hom dimensions match crossings and the module oracle; cones match arc smoothing"},
      {"a4-example", suite_a4_example, "the A_4 example with T = M44+M14+M11"},
  };
  return entries;
}

const SuiteEntry& entry(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

std::string suite_property(const std::string& name) { return entry(name).property; }

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const auto& r : requested) {
    if (r == "all") {
      for (const auto& n : suite_names())
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      continue;
    }
    (void)entry(r);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  if (out.empty()) throw std::invalid_argument("no suites selected");
  return out;
}

InstanceConfig parse_config(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (j.contains("schema") && j["schema"] != "cluster-loc/config/v1")
    throw std::invalid_argument("config schema must be cluster-loc/config/v1");
  InstanceConfig cfg;
  cfg.type = j.value("type", std::string("A"));
  if (cfg.type != "A") throw std::invalid_argument("only type A is supported");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("config needs an integer n");
  cfg.n = j["n"].get<int>();
  if (cfg.n < 1 || cfg.n > 12) throw std::invalid_argument("n must lie in 1..12");
  if (!j.contains("T")) throw std::invalid_argument("config needs T");
  const json& t = j["T"];
  if (t.is_string() && t == "all") {
    cfg.t_mode = TMode::All;
  } else if (t.is_object() && t.contains("random")) {
    cfg.t_mode = TMode::Random;
    cfg.random_count = t["random"].get<int>();
    if (cfg.random_count < 1) throw std::invalid_argument("T.random must be positive");
  } else if (t.is_array()) {
    cfg.t_mode = TMode::Listed;
    for (const auto& s : t) cfg.t.push_back(s.get<std::string>());
    if (cfg.t.empty()) throw std::invalid_argument("T must be nonempty");
  } else {
    throw std::invalid_argument("T must be a list of labels, \"all\", or {\"random\": k}");
  }
  cfg.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
  cfg.samples = j.value("samples", 1000);
  if (cfg.samples < 0) throw std::invalid_argument("samples must be nonnegative");
  (void)resolve_suites(cfg.suites);
  return cfg;
}

json config_json(const InstanceConfig& cfg) {
  json j;
  j["schema"] = "cluster-loc/config/v1";
  j["type"] = cfg.type;
  j["n"] = cfg.n;
  switch (cfg.t_mode) {
    case TMode::Listed: j["T"] = cfg.t; break;
    case TMode::All: j["T"] = "all"; break;
    case TMode::Random: j["T"] = {{"random", cfg.random_count}}; break;
  }
  j["seed"] = cfg.seed;
  j["suites"] = cfg.suites;
  j["samples"] = cfg.samples;
  return j;
}

std::vector<RigidObject> config_instances(const Category& c, const InstanceConfig& cfg) {
  switch (cfg.t_mode) {
    case TMode::All: return enumerate_rigid(c);
    case TMode::Random: {
      std::vector<RigidObject> out;
      std::set<std::vector<int>> seen;
      for (std::uint64_t k = 0; static_cast<int>(out.size()) < cfg.random_count && k < 1000; ++k) {
        RigidObject t = random_rigid(c, cfg.seed * 1000003ULL + k);
        if (seen.insert(t.summands).second) out.push_back(std::move(t));
      }
      return out;
    }
    case TMode::Listed: break;
  }
  Obj t;
  for (const auto& s : cfg.t) t.summands.push_back(parse_indec(c, s));
  return {make_rigid(c, t)};
}

SuiteResult run_suite(const Category& c, const RigidObject& t, const std::string& name, std::uint64_t seed,
                      int samples) {
  const SuiteEntry& e = entry(name);
  SuiteResult r;
  r.name = name;
  r.instances = 1;
  const auto start = std::chrono::steady_clock::now();
  const Localizer loc(c, t);
  Ctx ctx{c, t, loc, std::mt19937_64(seed ^ fnv1a(name)), samples, r, e.property, instance_name(c, t)};
  try {
    e.fn(ctx);
  } catch (const std::exception& ex) {
    ctx.fail("suite " + name, std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteReport run_suites(const InstanceConfig& cfg, Exec exec) {
  const Category c = Category::build(Polygon{cfg.n});
  return run_suites(c, cfg, exec);
}

SuiteReport run_suites(const Category& c, const InstanceConfig& cfg, Exec exec) {
  SuiteReport rep;
  rep.config = cfg;
  const auto names = resolve_suites(cfg.suites);
  const auto instances = config_instances(c, cfg);
  rep.instances = static_cast<long>(instances.size());
  const std::size_t tasks = instances.size() * names.size();
  const auto results = parallel_map<SuiteResult>(exec, tasks, [&](std::size_t k) {
    const std::size_t inst = k / names.size();
    return run_suite(c, instances[inst], names[k % names.size()], cfg.seed * 7919ULL + inst, cfg.samples);
  });
  for (std::size_t s = 0; s < names.size(); ++s) {
    SuiteResult agg;
    agg.name = names[s];
    agg.instances = 0;
    for (std::size_t inst = 0; inst < instances.size(); ++inst) {
      const SuiteResult& r = results[inst * names.size() + s];
      agg.checks += r.checks;
      agg.exhaustive = agg.exhaustive && r.exhaustive;
      agg.instances += r.instances;
      agg.skipped_instances += r.skipped_instances;
      agg.seconds += r.seconds;
      agg.failures.insert(agg.failures.end(), r.failures.begin(), r.failures.end());
    }
    rep.suites.push_back(std::move(agg));
  }
  return rep;
}

long SuiteReport::failure_count() const {
  long n = 0;
  for (const auto& s : suites) n += static_cast<long>(s.failures.size());
  return n;
}

json report_json(const SuiteReport& r, bool with_timing) {
  constexpr std::size_t kListed = 50;
  json j;
  j["schema"] = "cluster-loc/report/v1";
  j["config"] = config_json(r.config);
  j["instances"] = r.instances;
  j["failures"] = r.failure_count();
  j["ok"] = r.ok();
  json suites = json::array();
  json timing;
  double total = 0;
  for (const auto& s : r.suites) {
    json e;
    e["name"] = s.name;
    e["property"] = suite_property(s.name);
    e["coverage"] = s.exhaustive ? "exhaustive" : "sampled";
    e["instances"] = s.instances;
    e["skipped_instances"] = s.skipped_instances;
    e["checks"] = s.checks;
    e["failure_count"] = s.failures.size();
    json fails = json::array();
    for (std::size_t k = 0; k < s.failures.size() && k < kListed; ++k)
      fails.push_back({{"instance", s.failures[k].instance},
                       {"reproducer", s.failures[k].reproducer},
                       {"message", s.failures[k].message}});
    e["failures"] = fails;
    suites.push_back(e);
    timing[s.name] = s.seconds;
    total += s.seconds;
  }
  j["suites"] = suites;
  if (with_timing) {
    timing["total"] = total;
    j["timing"] = timing;
  }
  return j;
}

ImageTable image_table(const Algebra& a) {
  const Category& c = a.category();
  ImageTable tab;
  tab.indecs = enumerate_indec_modules(a, 6, 20, &tab.skipped_dimension_vectors);
  const SubcatView stp = perp_view(c, a.rigid(), Subcat::SigmaTPerp);
  for (int x = 0; x < c.size(); ++x) {
    ImageRow row;
    row.index = x;
    row.label = c.label_name(x);
    row.arc = format_arc(c.arc(x));
    const LambdaModule m = H_obj(a, Obj{{x}});
    row.dims = m.dims;
    row.in_sigma_tperp = stp.contains(x);
    row.in_CT = in_CT(c, a.rigid(), Obj{{x}});
    row.decomposition = decomposition_name(a, m, tab.indecs);
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

json image_table_json(const Category& c, const ImageTable& t) {
  json j;
  j["n"] = c.polygon().n;
  json mods = json::array();
  for (const auto& m : t.indecs) mods.push_back({{"name", m.name}, {"dims", m.module.dims}});
  j["indecomposable_modules"] = mods;
  j["skipped_dimension_vectors"] = t.skipped_dimension_vectors;
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"label", r.label},
                    {"arc", r.arc},
                    {"dims", r.dims},
                    {"image", r.decomposition},
                    {"in_sigma_tperp", r.in_sigma_tperp},
                    {"in_CT", r.in_CT}});
  j["rows"] = rows;
  return j;
}

RigidObject a4_example_rigid(const Category& c4) {
  return make_rigid(c4, Obj{{parse_indec(c4, "M44"), parse_indec(c4, "M14"), parse_indec(c4, "M11")}});
}

std::vector<NamedCheck> a4_example_checks(const Category& c) {
  std::vector<NamedCheck> out;
  auto add = [&](std::string id, std::string desc, auto&& fn) {
    NamedCheck ch{std::move(id), std::move(desc), false, {}};
    try {
      ch.pass = fn(ch.detail);
    } catch (const std::exception& e) {
      ch.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(ch));
  };
  const auto id = [&](const char* s) { return parse_indec(c, s); };
  const RigidObject t = a4_example_rigid(c);
  const Localizer loc(c, t);
  const Algebra& alg = loc.algebra();
  int skipped = 0;
  const auto indecs = enumerate_indec_modules(alg, 6, 20, &skipped);
  auto name_of = [&](const LambdaModule& m) { return decomposition_name(alg, m, indecs); };

  add("1a", "T is rigid and not cluster-tilting", [&](std::string& d) {
    const bool rigid = is_rigid(c, t.obj());
    const bool ct = is_cluster_tilting(c, t);
    d = std::string("rigid=") + (rigid ? "true" : "false") + " cluster_tilting=" + (ct ? "true" : "false");
    return rigid && !ct;
  });

  add("1b", "Λ has quiver 1 <- 2 <- 3, one zero relation of length 2, dimension 5", [&](std::string& d) {
    std::set<std::pair<int, int>> arrows;
    for (auto [from, to] : alg.arrows()) arrows.insert({from + 1, to + 1});
    std::ostringstream os;
    os << "vertices=" << alg.vertices() << " arrows=";
    for (auto [a, b] : arrows) os << a << "->" << b << " ";
    os << "relations=" << alg.zero_relations().size() << " dim=" << alg.dim();
    d = os.str();
    const std::set<std::pair<int, int>> want{{2, 1}, {3, 2}};
    return alg.vertices() == 3 && arrows == want && alg.zero_relations().size() == 1 && alg.dim() == 5 &&
           alg.nilpotency_index() == 2;
  });

  add("1c", "exactly five indecomposable Λ-modules with the expected dimension vectors", [&](std::string& d) {
    std::set<std::vector<int>> dims;
    for (const auto& m : indecs) dims.insert(m.module.dims);
    d = std::to_string(indecs.size()) + " classes:";
    for (const auto& v : dims) d += " " + dim_vector_string(v);
    const std::set<std::vector<int>> want{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}};
    return skipped == 0 && indecs.size() == 5 && dims == want;
  });

  const Obj s_src{{id("M44"), id("SM24")}};
  const Mor s = row_join(basis_mor(c, id("M44"), id("M34")), basis_mor(c, id("SM24"), id("M34")));
  const Mor tmap = col_join(basis_mor(c, id("M34"), id("M33")), basis_mor(c, id("M34"), id("M24")));

  add("1d", "the almost split map s : M44+ΣM24 -> M34 completes to ΣM34 -> M44+ΣM24 -> M34 -> M13",
      [&](std::string& d) {
        std::set<int> into;
        for (auto [a, b] : c.ar_arrows())
          if (b == id("M34")) into.insert(a);
        const Triangle tri = complete_triangle(c, s);
        const Obj first = suspend_obj(c, tri.z, -1);
        const Mor approx = right_approx(c, t, Obj{{id("M34")}}, true);
        d = "AR sources=" + std::to_string(into.size()) + " cone=" + format_obj(c, tri.z) +
            " desuspended cone=" + format_obj(c, first) + " certified=" + (tri.cert.ok() ? "yes" : "no") +
            "; for comparison the minimal add T-approximation " + format_mor(c, approx) + " has cone " +
            format_obj(c, cone_object(c, approx));
        return into == std::set<int>{id("M44"), id("SM24")} && tri.cert.ok() &&
               tri.z.iso_class() == Obj{{id("M13")}}.iso_class() &&
               first.iso_class() == Obj{{id("SM34")}}.iso_class();
      });

  add("1e", "s lies in S and its formal inverse evaluates to an automorphism of S1+S3", [&](std::string& d) {
    const MorClassification cl = loc.classify(s);
    const ModuleHom inv = loc.zigzag_eval({{s, true}});
    const bool iso = inverse_hom(inv).has_value();
    const std::string target = name_of(H_obj(alg, Obj{{id("M34")}}));
    const std::string source = name_of(H_obj(alg, s_src));
    const bool roundtrip = loc.zigzag_equal({{s, false}, {s, true}}, {{identity_mor(s_src), false}});
    d = std::string("in_S=") + (cl.in_S ? "true" : "false") + " H(M34)=" + target + " H(M44+ΣM24)=" + source +
        " inverse iso=" + (iso ? "yes" : "no");
    return cl.in_S && cl.in_S_tilde && iso && roundtrip && target == "S1+S3" && source == "S1+S3";
  });

  add("1f", "the almost split map t : M34 -> M33+M24 lies in S̃ but not in S", [&](std::string& d) {
    std::set<int> out_of;
    for (auto [a, b] : c.ar_arrows())
      if (a == id("M34")) out_of.insert(b);
    const MorClassification cl = loc.classify(tmap);
    d = std::string("in_S_tilde=") + (cl.in_S_tilde ? "true" : "false") + " in_S=" + (cl.in_S ? "true" : "false");
    return out_of == std::set<int>{id("M33"), id("M24")} && cl.in_S_tilde && !cl.in_S;
  });

  add("images", "images of indecomposables: all five modules, S1+S3, zeros exactly on ΣT⊥", [&](std::string& d) {
    const ImageTable tab = image_table(alg);
    std::set<std::string> seen;
    int zeros = 0;
    bool zero_rows_match = true;
    for (const auto& r : tab.rows) {
      seen.insert(r.decomposition);
      zeros += r.decomposition == "0";
      zero_rows_match = zero_rows_match && ((r.decomposition == "0") == r.in_sigma_tperp);
    }
    const int perp = static_cast<int>(loc.sigma_tperp().indecs().size());
    bool all_five = true;
    for (const auto& m : tab.indecs) all_five = all_five && seen.count(m.name);
    d = "zero images=" + std::to_string(zeros) + " |ind ΣT⊥|=" + std::to_string(perp);
    return all_five && seen.count("S1+S3") && zeros == perp && zero_rows_match;
  });

  return out;
}

std::string export_dot(const Category& c, const RigidObject* t, const std::string& what) {
  if (what != "ar-quiver" && what != "image-quiver")
    throw std::invalid_argument("export-dot: unknown graph '" + what + "'");
  if (what == "image-quiver" && !t) throw std::invalid_argument("export-dot: image-quiver needs T");
  std::vector<std::string> images(c.size());
  if (what == "image-quiver") {
    const Algebra alg(c, *t);
    const ImageTable tab = image_table(alg);
    for (const auto& r : tab.rows) images[r.index] = r.decomposition;
  }
  std::ostringstream os;
  os << "digraph " << (what == "ar-quiver" ? "ar_quiver" : "image_quiver") << " {\n";
  os << "  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int x = 0; x < c.size(); ++x) {
    os << "  v" << x << " [label=\"" << c.label_name(x) << "\\n" << format_arc(c.arc(x));
    if (what == "image-quiver") os << "\\nH=" << images[x];
    os << "\"];\n";
  }
  for (auto [a, b] : c.ar_arrows()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cloc
