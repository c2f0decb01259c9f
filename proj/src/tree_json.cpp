#include "dtexact/tree_json.hpp"

#include <json.hpp>

namespace dtexact {

namespace {

using Json = nlohmann::ordered_json;

Json node_to_json(const DecisionTree::Node& node, const Dataset& ds) {
  if (node.is_leaf()) return Json{{"class", ds.class_name(node.label)}};
  Json j;
  j["dim"] = node.split.dim + 1;
  j["thr"] = to_decimal_string(ds.threshold_value(node.split));
  j["le"] = node_to_json(*node.le, ds);
  j["gt"] = node_to_json(*node.gt, ds);
  return j;
}

DecisionTree node_from_json(const Json& j, const Dataset& ds) {
  if (!j.is_object()) throw TreeFormatError("tree node must be an object");
  if (j.contains("class")) {
    const auto& name = j.at("class");
    if (!name.is_string()) throw TreeFormatError("leaf class must be a string");
    auto c = ds.class_by_name(name.get<std::string>());
    if (!c)
      throw TreeFormatError("leaf class '" + name.get<std::string>() +
                            "' does not occur in the dataset");
    return DecisionTree::leaf(*c);
  }
  if (!j.contains("dim") || !j.contains("thr") || !j.contains("le") || !j.contains("gt"))
    throw TreeFormatError("inner node needs dim, thr, le and gt");
  if (!j.at("dim").is_number_integer())
    throw TreeFormatError("dim must be an integer");
  int dim = j.at("dim").get<int>() - 1;
  if (dim < 0 || dim >= ds.dims())
    throw TreeFormatError("dim " + std::to_string(dim + 1) + " out of range for " +
                          std::to_string(ds.dims()) + "-dimensional data");

  Rational thr;
  const auto& jthr = j.at("thr");
  if (jthr.is_string()) {
    auto q = parse_rational(jthr.get<std::string>());
    if (!q) throw TreeFormatError("bad threshold '" + jthr.get<std::string>() + "'");
    thr = *q;
  } else if (jthr.is_number_integer()) {
    thr = Rational(static_cast<long>(jthr.get<long long>()));
  } else {
    throw TreeFormatError("threshold must be a string or integer");
  }

  SplitRef split{dim, ds.position_of_value(dim, thr)};
  return DecisionTree::cut(split, node_from_json(j.at("le"), ds),
                           node_from_json(j.at("gt"), ds));
}

}  // namespace

std::string tree_to_json(const DecisionTree& tree, const Dataset& ds, bool pretty) {
  Json j = node_to_json(tree.root(), ds);
  return pretty ? j.dump(2) + "\n" : j.dump();
}

DecisionTree tree_from_json(const std::string& text, const Dataset& ds) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw TreeFormatError("invalid JSON");
  return node_from_json(j, ds);
}

}  // namespace dtexact
