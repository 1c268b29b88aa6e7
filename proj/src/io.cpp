#include "cloc/io.hpp"

#include <stdexcept>

#include "cloc/labels.hpp"

namespace cloc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Scalar parse_scalar(std::string_view tok) {
  tok = trim(tok);
  if (tok.empty()) throw std::invalid_argument("empty matrix entry");
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '+' && ch != '/')
      throw std::invalid_argument("bad matrix entry '" + std::string(tok) + "'");
  Scalar s;
  if (s.set_str(std::string(tok[0] == '+' ? tok.substr(1) : tok), 10) != 0 || s.get_den() == 0)
    throw std::invalid_argument("bad matrix entry '" + std::string(tok) + "'");
  s.canonicalize();
  return s;
}

// "[[a,b],[c,d]]" -> rows; the column count must be consistent.
std::vector<std::vector<Scalar>> parse_rows(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("matrix must be [[...],...]");
  std::vector<std::vector<Scalar>> rows;
  std::size_t k = 1;
  while (k + 1 < s.size()) {
    if (s[k] == ',') {
      ++k;
      continue;
    }
    if (s[k] != '[') throw std::invalid_argument("matrix row must start with '['");
    const std::size_t close = s.find(']', k);
    if (close == std::string::npos) throw std::invalid_argument("unterminated matrix row");
    std::vector<Scalar> row;
    const std::string_view body(s.data() + k + 1, close - k - 1);
    std::size_t start = 0;
    while (!body.empty() && start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? body.size() : comma;
      row.push_back(parse_scalar(body.substr(start, end - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    k = close + 1;
  }
  return rows;
}

}  // namespace

std::string format_obj(const Category& c, const Obj& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.count(); ++i) {
    if (i) s += '+';
    s += c.label_name(x.summands[i]);
  }
  return s;
}

Obj parse_obj(const Category& c, std::string_view text) {
  text = trim(text);
  Obj x;
  if (text == "0") return x;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    const std::size_t end = plus == std::string_view::npos ? text.size() : plus;
    x.summands.push_back(parse_indec(c, trim(text.substr(start, end - start))));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return x;
}

std::string format_matrix(const Mat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += to_string(m(i, j));
    }
    s += ']';
  }
  return s + "]";
}

std::string format_mor(const Category& c, const Mor& f) {
  return format_obj(c, f.source) + " -> " + format_obj(c, f.target) + " : " + format_matrix(f.coeffs);
}

Mor parse_mor(const Category& c, std::string_view text) {
  const std::size_t arrow = text.find("->");
  if (arrow == std::string_view::npos) throw std::invalid_argument("morphism literal needs 'SRC -> TGT'");
  const std::size_t colon = text.find(':', arrow);
  Mor f;
  f.source = parse_obj(c, text.substr(0, arrow));
  f.target = parse_obj(c, text.substr(arrow + 2, colon == std::string_view::npos ? std::string_view::npos
                                                                                  : colon - arrow - 2));
  f.coeffs = Mat(f.target.count(), f.source.count());
  if (colon == std::string_view::npos) {
    for (std::size_t i = 0; i < f.target.count(); ++i)
      for (std::size_t j = 0; j < f.source.count(); ++j)
        if (c.hom_dim(f.source.summands[j], f.target.summands[i])) f.coeffs(i, j) = 1;
  } else {
    const auto rows = parse_rows(text.substr(colon + 1));
    const bool empty_ok = rows.empty() && (f.target.is_zero() || f.source.is_zero());
    if (!empty_ok) {
      if (rows.size() != f.target.count())
        throw std::invalid_argument("matrix needs one row per target summand");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != f.source.count())
          throw std::invalid_argument("matrix needs one column per source summand");
        for (std::size_t j = 0; j < rows[i].size(); ++j) f.coeffs(i, j) = rows[i][j];
      }
    }
  }
  validate(c, f);
  return f;
}

std::string format_zigzag(const Category& c, const Zigzag& z) {
  std::string s;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s += "; ";
    if (z[i].inverse) s += "inv:";
    s += format_mor(c, z[i].mor);
  }
  return s;
}

Zigzag parse_zigzag(const Category& c, std::string_view text) {
  Zigzag z;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    std::string_view step = trim(text.substr(start, end - start));
    if (!step.empty()) {
      ZigStep st;
      if (step.starts_with("inv:")) {
        st.inverse = true;
        step.remove_prefix(4);
      }
      st.mor = parse_mor(c, step);
      z.push_back(std::move(st));
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (z.empty()) throw std::invalid_argument("empty zigzag literal");
  (void)zigzag_ends(z);
  return z;
}

json category_json(const Category& c) {
  json j;
  j["schema"] = "cluster-loc/cat/v1";
  j["type"] = "A";
  j["n"] = c.polygon().n;
  j["anchoring"] = {{"reflected", c.anchoring().reflected}, {"rotation", c.anchoring().rotation}};
  json indecs = json::array();
  for (int x = 0; x < c.size(); ++x)
    indecs.push_back({{"index", x},
                      {"arc", format_arc(c.arc(x))},
                      {"label", c.label_name(x)},
                      {"sigma", c.sigma(x)}});
  j["indecomposables"] = indecs;
  json hom = json::array();
  for (int x = 0; x < c.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < c.size(); ++y) row.push_back(c.hom_dim(x, y));
    hom.push_back(row);
  }
  j["hom_dim"] = hom;
  json ar = json::array();
  for (auto [a, b] : c.ar_arrows()) ar.push_back({a, b});
  j["ar_arrows"] = ar;
  return j;
}

json module_json(const LambdaModule& m) {
  json j;
  j["dims"] = m.dims;
  json acts = json::array();
  for (const Mat& a : m.action) acts.push_back(format_matrix(a));
  j["action"] = acts;
  return j;
}

json module_hom_json(const ModuleHom& f) {
  json j = json::array();
  for (const Mat& m : f.maps) j.push_back(format_matrix(m));
  return j;
}

json modules_json(const Algebra& a, const std::vector<IndecModule>& modules) {
  const Category& c = a.category();
  json j;
  j["schema"] = "cluster-loc/mod/v1";
  json t = json::array();
  for (int s : a.rigid().summands) t.push_back(c.label_name(s));
  j["T"] = t;
  j["vertices"] = a.vertices();
  j["dim"] = a.dim();
  json arrows = json::array();
  for (auto [from, to] : a.arrows()) arrows.push_back({from + 1, to + 1});
  j["arrows"] = arrows;
  json rels = json::array();
  for (auto [p, q] : a.zero_relations()) rels.push_back({p, q});
  j["zero_relations"] = rels;
  j["nilpotency_index"] = a.nilpotency_index();
  json mods = json::array();
  for (const auto& m : modules) {
    json e = module_json(m.module);
    e["name"] = m.name;
    mods.push_back(e);
  }
  j["modules"] = mods;
  return j;
}

}  // namespace cloc
