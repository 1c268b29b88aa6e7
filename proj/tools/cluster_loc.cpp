// Command-line front end for the cluster-loc library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cloc/io.hpp"
#include "cloc/labels.hpp"
#include "cloc/suites.hpp"

using namespace cloc;

namespace {

struct InstanceArgs {
  std::string config;
  int n = 0;
  std::string t;  // comma-separated labels
  std::uint64_t seed = 0;
};

void add_instance_options(CLI::App* app, InstanceArgs& a, bool needs_t) {
  app->add_option("--config", a.config, "instance config (cluster-loc/config/v1)");
  app->add_option("--n", a.n, "rank n of A_n (instead of --config)");
  if (needs_t) app->add_option("--T", a.t, "comma-separated summands of T, e.g. M44,M14,M11");
  app->add_option("--seed", a.seed, "seed for randomized choices");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

InstanceConfig instance_config(const InstanceArgs& a, bool needs_t) {
  InstanceConfig cfg;
  if (!a.config.empty()) {
    cfg = parse_config(read_json(a.config));
  } else {
    if (a.n < 1) throw std::invalid_argument("give --config or --n");
    cfg.n = a.n;
    std::stringstream ss(a.t);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) cfg.t.push_back(item);
    if (needs_t && cfg.t.empty()) throw std::invalid_argument("give --config or --T");
  }
  if (a.seed) cfg.seed = a.seed;
  return cfg;
}

RigidObject single_rigid(const Category& c, const InstanceConfig& cfg) {
  const auto all = config_instances(c, cfg);
  if (all.size() != 1) throw std::invalid_argument("this command needs a config naming one T");
  return all.front();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_triangle(const Category& c, const Triangle& t) {
  std::cout << "X = " << format_obj(c, t.x) << "\nY = " << format_obj(c, t.y) << "\nZ = " << format_obj(c, t.z)
            << "\nf: " << format_mor(c, t.f) << "\ng: " << format_mor(c, t.g) << "\nh: " << format_mor(c, t.h)
            << "\ncertified: " << yes_no(t.cert.ok()) << "\n";
}

void print_module_hom(const ModuleHom& f) {
  for (std::size_t i = 0; i < f.maps.size(); ++i)
    std::cout << "  vertex " << i + 1 << ": " << format_matrix(f.maps[i]) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localisations of type A cluster categories at rigid objects"};
  app.require_subcommand(1);

  int build_n = 4;
  std::string build_out;
  auto* build = app.add_subcommand("build", "build the category and write cluster-loc/cat/v1 JSON");
  build->add_option("--n", build_n, "rank n of A_n")->required();
  build->add_option("--out", build_out, "output file (stdout if omitted)");

  std::string verify_config, verify_report;
  std::vector<std::string> verify_suites;
  std::uint64_t verify_seed = 0;
  bool serial = false, no_timing = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--config", verify_config, "instance config")->required();
  verify->add_option("--suite", verify_suites, "suite name (repeatable; 'all' for every suite)");
  auto* seed_opt = verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--report", verify_report, "write cluster-loc/report/v1 JSON here");
  verify->add_flag("--serial", serial, "run the serial reference path");
  verify->add_flag("--no-timing", no_timing, "omit wall times from the report");

  InstanceArgs image_args;
  bool image_json = false;
  auto* image = app.add_subcommand("image-table", "Hom(T,-) on every indecomposable");
  add_instance_options(image, image_args, true);
  image->add_flag("--json", image_json, "print JSON");

  InstanceArgs classify_args;
  std::string classify_map;
  auto* classify = app.add_subcommand("classify", "decide membership of a map in S and S̃");
  add_instance_options(classify, classify_args, true);
  classify->add_option("--map", classify_map, "morphism literal 'SRC -> TGT : [[...]]'")->required();

  InstanceArgs cone_args;
  std::string cone_map;
  auto* cone = app.add_subcommand("cone", "complete a map to a certified triangle");
  add_instance_options(cone, cone_args, false);
  cone->add_option("--map", cone_map, "morphism literal")->required();

  InstanceArgs lochom_args;
  std::string lochom_x, lochom_y;
  auto* lochom = app.add_subcommand("loc-hom", "hom space in the localisation");
  add_instance_options(lochom, lochom_args, true);
  lochom->add_option("--x", lochom_x, "source object")->required();
  lochom->add_option("--y", lochom_y, "target object")->required();

  InstanceArgs dot_args;
  std::string dot_what = "ar-quiver", dot_out;
  auto* dot = app.add_subcommand("export-dot", "Graphviz text for the AR quiver or the image quiver");
  add_instance_options(dot, dot_args, true);
  dot->add_option("--what", dot_what, "ar-quiver or image-quiver")
      ->check(CLI::IsMember({"ar-quiver", "image-quiver"}));
  dot->add_option("--out", dot_out, "output file (stdout if omitted)");

  InstanceArgs rigid_args;
  auto* check_rigid = app.add_subcommand("check-rigid", "rigidity and cluster-tilting tests");
  add_instance_options(check_rigid, rigid_args, true);

  InstanceArgs perp_args;
  std::string perp_kind = "SigmaTperp";
  auto* perp = app.add_subcommand("perp", "list the indecomposables of a subcategory attached to T");
  add_instance_options(perp, perp_args, true);
  perp->add_option("--kind", perp_kind, "addT, Tperp, SigmaTperp, perpT or addSigmaT")
      ->check(CLI::IsMember({"addT", "Tperp", "SigmaTperp", "perpT", "addSigmaT"}));

  InstanceArgs approx_args;
  std::string approx_x;
  auto* approx = app.add_subcommand("approx", "minimal right add T-approximation and its triangle");
  add_instance_options(approx, approx_args, true);
  approx->add_option("--x", approx_x, "object")->required();

  InstanceArgs resolve_args;
  std::string resolve_y;
  auto* resolve = app.add_subcommand("resolve", "map in S from an object of C(T)");
  add_instance_options(resolve, resolve_args, true);
  resolve->add_option("--y", resolve_y, "object")->required();

  InstanceArgs zig_args;
  std::string zig_z, zig_equal;
  auto* zig = app.add_subcommand("zigzag", "evaluate a zigzag, or compare two");
  add_instance_options(zig, zig_args, true);
  zig->add_option("--z", zig_z, "zigzag literal, steps separated by ';', inverses prefixed 'inv:'")->required();
  zig->add_option("--equal", zig_equal, "second zigzag to compare with");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      const Category c = Category::build(Polygon{build_n});
      write_text(build_out, category_json(c).dump(2) + "\n");
      return 0;
    }

    if (*verify) {
      InstanceConfig cfg = parse_config(read_json(verify_config));
      if (!verify_suites.empty()) cfg.suites = verify_suites;
      if (seed_opt->count()) cfg.seed = verify_seed;
      const SuiteReport rep = run_suites(cfg, serial ? Exec::Serial : Exec::Parallel);
      for (const auto& s : rep.suites) {
        std::cout << (s.failures.empty() ? "ok   " : "FAIL ") << s.name << ": " << s.checks << " checks over "
                  << s.instances << " instance(s)";
        if (s.skipped_instances) std::cout << ", " << s.skipped_instances << " not applicable";
        std::cout << ", " << (s.exhaustive ? "exhaustive" : "sampled") << "\n";
        for (std::size_t k = 0; k < s.failures.size() && k < 5; ++k)
          std::cout << "     " << s.failures[k].message << "\n     reproducer: " << s.failures[k].reproducer << "\n";
      }
      std::cout << rep.failure_count() << " failure(s)\n";
      if (!verify_report.empty()) write_text(verify_report, report_json(rep, !no_timing).dump(2) + "\n");
      return rep.ok() ? 0 : 1;
    }

    if (*cone) {
      const InstanceConfig cfg = instance_config(cone_args, false);
      const Category c = Category::build(Polygon{cfg.n});
      print_triangle(c, complete_triangle(c, parse_mor(c, cone_map), cfg.seed));
      return 0;
    }

    if (*dot) {
      const InstanceConfig cfg = instance_config(dot_args, dot_what == "image-quiver");
      const Category c = Category::build(Polygon{cfg.n});
      if (dot_what == "image-quiver") {
        const RigidObject t = single_rigid(c, cfg);
        write_text(dot_out, export_dot(c, &t, dot_what));
      } else {
        write_text(dot_out, export_dot(c, nullptr, dot_what));
      }
      return 0;
    }

    // The remaining commands all work on one (category, T) instance.
    InstanceArgs* args = nullptr;
    for (auto [sub, a] : {std::pair{image, &image_args}, {classify, &classify_args}, {lochom, &lochom_args},
                          {check_rigid, &rigid_args}, {perp, &perp_args}, {approx, &approx_args},
                          {resolve, &resolve_args}, {zig, &zig_args}})
      if (*sub) args = a;
    const InstanceConfig cfg = instance_config(*args, true);
    const Category c = Category::build(Polygon{cfg.n});

    if (*check_rigid) {
      Obj t;
      for (const auto& s : cfg.t) t.summands.push_back(parse_indec(c, s));
      const bool rigid = is_rigid(c, t);
      std::cout << "rigid: " << yes_no(rigid) << "\n";
      if (!rigid) return 1;
      const RigidObject r = make_rigid(c, t);
      std::cout << "cluster-tilting: " << yes_no(is_cluster_tilting(c, r)) << "\n"
                << "double perpendicular: " << yes_no(double_perp_holds(c, r)) << "\n";
      return 0;
    }

    const RigidObject t = single_rigid(c, cfg);
    const Localizer loc(c, t);

    if (*image) {
      const ImageTable tab = image_table(loc.algebra());
      if (image_json) {
        std::cout << image_table_json(c, tab).dump(2) << "\n";
        return 0;
      }
      std::cout << "indecomposable modules:";
      for (const auto& m : tab.indecs) std::cout << " " << m.name << "=" << dim_vector_string(m.module.dims);
      std::cout << "\n";
      for (const auto& r : tab.rows)
        std::cout << r.label << "\t" << r.arc << "\t" << dim_vector_string(r.dims) << "\t" << r.decomposition
                  << (r.in_sigma_tperp ? "\tΣT⊥" : "") << (r.in_CT ? "\tC(T)" : "") << "\n";
      return 0;
    }

    if (*classify) {
      const Mor f = parse_mor(c, classify_map);
      const MorClassification r = loc.classify(f, cfg.seed);
      std::cout << "in S~: " << yes_no(r.in_S_tilde) << "\nin S: " << yes_no(r.in_S)
                << "\nH(f) mono: " << yes_no(r.H_mono) << "\nH(f) epi: " << yes_no(r.H_epi)
                << "\ng factors through ΣT⊥: " << yes_no(r.g_factors)
                << "\nh factors through ΣT⊥: " << yes_no(r.h_factors) << "\nwitness triangle:\n";
      print_triangle(c, r.witness);
      return 0;
    }

    if (*lochom) {
      const LocHom l = loc.loc_hom(parse_obj(c, lochom_x), parse_obj(c, lochom_y), cfg.seed);
      std::cout << "resolution of x: " << format_mor(c, l.rx.s) << " (" << l.rx.how << ")\n"
                << "resolution of y: " << format_mor(c, l.ry.s) << " (" << l.ry.how << ")\n"
                << "dim Hom_C(x', y') = " << l.ambient_dim << ", factoring through ΣT⊥: " << l.factoring_dim
                << "\ndim = " << l.dim << "\n";
      for (std::size_t k = 0; k < l.representatives.cols(); ++k)
        std::cout << "  class " << k + 1 << ": "
                  << format_mor(c, from_coordinates(c, l.rx.source, l.ry.source, l.representatives.column(k)))
                  << "\n";
      return 0;
    }

    if (*perp) {
      Subcat kind = Subcat::AddT;
      for (Subcat k : {Subcat::AddT, Subcat::TPerp, Subcat::SigmaTPerp, Subcat::PerpT, Subcat::AddSigmaT})
        if (perp_kind == subcat_name(k)) kind = k;
      const SubcatView v = perp_view(c, t, kind);
      std::cout << perp_kind << ":";
      for (int x : v.indecs()) std::cout << " " << c.label_name(x);
      std::cout << "\n";
      return 0;
    }

    if (*approx) {
      const Obj x = parse_obj(c, approx_x);
      const WakamatsuReport w = wakamatsu_check(c, t, x);
      std::cout << "approximation: " << format_mor(c, w.triangle.f) << "\n";
      print_triangle(c, w.triangle);
      std::cout << "in C(T): " << yes_no(in_CT(c, t, x)) << "\ndesuspended cone in T⊥: " << yes_no(w.y_in_tperp)
                << "\n";
      return 0;
    }

    if (*resolve) {
      const Resolution r = loc.s_resolution(parse_obj(c, resolve_y), cfg.seed);
      std::cout << "x' = " << format_obj(c, r.source) << " (" << r.how << ")\ns: " << format_mor(c, r.s)
                << "\nin S: " << yes_no(loc.classify(r.s).in_S) << "\n";
      return 0;
    }

    if (*zig) {
      const Zigzag z = parse_zigzag(c, zig_z);
      if (!zig_equal.empty()) {
        const bool eq = loc.zigzag_equal(z, parse_zigzag(c, zig_equal));
        std::cout << "equal: " << yes_no(eq) << "\n";
        return 0;
      }
      const ModuleHom g = loc.zigzag_eval(z);
      std::cout << "module hom (per vertex):\n";
      print_module_hom(g);
      std::cout << "isomorphism: " << yes_no(inverse_hom(g).has_value()) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
