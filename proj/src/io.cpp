#include "afd/io.hpp"

#include <stdexcept>

namespace afd::io {

using exactlin::Field;
using nlohmann::json;
using nlohmann::ordered_json;

std::string q_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Field field_from_json(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  std::string type = j.value("type", "gfp");
  if (type == "rational") return Field::rational();
  if (type == "gfp") return Field::gfp(j.value("p", exactlin::kDefaultPrime));
  throw std::invalid_argument("bad field descriptor type: " + type);
}

ordered_json field_to_json(const Field& f) {
  ordered_json j;
  if (f.is_gfp()) {
    j["type"] = "gfp";
    j["p"] = f.prime();
  } else {
    j["type"] = "rational";
  }
  return j;
}

graphlab::GraphPtr graph_from_json(const json& j) {
  graphlab::GeneratorSpec spec;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      spec = graphlab::GeneratorSpec::parse(s);
    } catch (const std::invalid_argument&) {
      // fall back to a bare file path
      spec.type = graphlab::GeneratorSpec::Type::File;
      spec.path = s;
    }
  } else if (j.is_object()) {
    std::string type = j.at("type").get<std::string>();
    if (type == "grid") {
      spec.type = graphlab::GeneratorSpec::Type::Grid;
      spec.rows = j.value("rows", j.value("size", 0));
      spec.cols = j.value("cols", spec.rows);
    } else if (type == "tree") {
      spec.type = graphlab::GeneratorSpec::Type::Tree;
      spec.degree = j.at("degree").get<int>();
      spec.radius = j.at("radius").get<int>();
    } else if (type == "cycle") {
      spec.type = graphlab::GeneratorSpec::Type::Cycle;
      spec.length = j.at("length").get<int>();
    } else if (type == "cayley_f2") {
      spec.type = graphlab::GeneratorSpec::Type::CayleyF2;
      spec.radius = j.at("radius").get<int>();
    } else if (type == "file") {
      spec.type = graphlab::GeneratorSpec::Type::File;
      spec.path = j.at("path").get<std::string>();
    } else {
      throw std::invalid_argument("unknown graph type: " + type);
    }
  } else {
    throw std::invalid_argument("graph spec must be a string or object");
  }
  return std::make_shared<const graphlab::WindowGraph>(graphlab::WindowGraph::generate(spec));
}

carrier::Carrier algebra_from_json(const json& j, const Field& fallback) {
  Field f = j.contains("field") ? field_from_json(j.at("field")) : fallback;
  std::string kind = j.at("carrier").get<std::string>();
  if (kind == "group") {
    std::string group = j.value("group", "Z^d");
    if (group == "free") return carrier::Carrier::free_group(j.at("rank").get<int>(), f);
    return carrier::Carrier::group_zd(j.value("d", 1), f);
  }
  if (kind == "free") return carrier::Carrier::free_algebra(j.at("rank").get<int>(), f);
  if (kind == "translation") return carrier::Carrier::translation(graph_from_json(j.at("graph")), f);
  throw std::invalid_argument("unknown carrier kind: " + kind);
}

folner::ExhaustionSpec exhaustion_from_json(const json& j) {
  if (j.is_string()) return folner::ExhaustionSpec::parse(j.get<std::string>());
  folner::ExhaustionSpec spec = folner::ExhaustionSpec::parse(j.value("type", "ball"));
  if (j.contains("center")) {
    const auto& c = j.at("center");
    spec.center = c.is_number_integer() ? std::to_string(c.get<long long>())
                                        : c.get<std::string>();
  }
  return spec;
}

ordered_json almostrep_to_json(const almostrep::AlmostRep& rep) {
  ordered_json j;
  j["field"] = field_to_json(rep.field);
  j["L_basis"] = rep.basis_labels;
  j["V_dim"] = rep.v_dim;
  ordered_json unit = ordered_json::array();
  for (const auto& c : rep.unit_coeffs) unit.push_back(c.to_string());
  j["unit_coeffs"] = unit;
  ordered_json images = ordered_json::array();
  for (const auto& img : rep.images) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < img.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < img.cols(); ++c) row.push_back(img(r, c).to_string());
      rows.push_back(std::move(row));
    }
    images.push_back(std::move(rows));
  }
  j["images"] = images;
  ordered_json core = ordered_json::array();
  for (std::size_t c = 0; c < rep.core.cols(); ++c) {
    ordered_json col = ordered_json::array();
    for (std::size_t r = 0; r < rep.core.rows(); ++r) col.push_back(rep.core(r, c).to_string());
    core.push_back(std::move(col));
  }
  j["core"] = core;
  j["defect"] = q_str(rep.defect);
  j["table_size"] = rep.table.size();
  return j;
}

ordered_json pair_to_json(const graphlab::ParadoxicalPair& p) {
  ordered_json j;
  j["graph"] = p.graph->spec().to_string();
  j["K"] = p.displacement_bound;
  j["interior_size"] = p.interior.size();
  j["domain_size"] = p.domain.size();
  j["success"] = p.success;
  j["deficiency"] = p.deficiency();
  j["normalized_deficiency"] = q_str(p.normalized_deficiency);
  ordered_json unmatched = ordered_json::array();
  for (auto [copy, v] : p.unmatched) unmatched.push_back(ordered_json::array({copy, v}));
  j["unmatched"] = unmatched;
  j["V1"] = p.v1;
  j["V2"] = p.v2;
  ordered_json a = ordered_json::array(), b = ordered_json::array();
  for (int y : p.domain) {
    a.push_back(ordered_json::array({p.phi1[y], y}));
    b.push_back(ordered_json::array({p.phi2[y], y}));
  }
  j["A"] = a;  // sparse 0/1 matrices as (row, col) index pairs
  j["B"] = b;
  return j;
}

}  // namespace afd::io
