#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cloc/category.hpp"
#include "cloc/localization.hpp"
#include "cloc/modules.hpp"

namespace cloc {

using json = nlohmann::ordered_json;

/// "M44+SP2", or "0" for the zero object.
std::string format_obj(const Category& c, const Obj& x);
Obj parse_obj(const Category& c, std::string_view text);

/// "M44+SP2 -> M34 : [[1,1]]". Rows follow target summands, columns source
/// summands; entries are integers or rationals "p/q". An omitted matrix
/// (": " part absent) means the sum of all basis maps.
std::string format_mor(const Category& c, const Mor& f);
Mor parse_mor(const Category& c, std::string_view text);

/// Steps separated by ';', formal inverses prefixed with "inv:".
std::string format_zigzag(const Category& c, const Zigzag& z);
Zigzag parse_zigzag(const Category& c, std::string_view text);

std::string format_matrix(const Mat& m);

/// Schema "cluster-loc/cat/v1": arcs, labels, Σ, hom dimensions and AR arrows.
json category_json(const Category& c);
/// Schema "cluster-loc/mod/v1": the algebra and a list of modules.
json modules_json(const Algebra& a, const std::vector<IndecModule>& modules);
json module_json(const LambdaModule& m);
json module_hom_json(const ModuleHom& f);

}  // namespace cloc
