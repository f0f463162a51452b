#include "especial/json_io.hpp"

#include <algorithm>
#include <set>

namespace especial {

Json parse_json_text(std::string_view text) { return Json::parse(text.begin(), text.end()); }

Json to_json(const CirclePoint& p) { return to_string(p); }

Json to_json(const CircleSet& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

namespace {

Json family_json(const std::vector<CircleSet>& family) {
  Json out = Json::array();
  for (const auto& s : family) out.push_back(to_json(s));
  return out;
}

Json points_json(const std::vector<CirclePoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

Json side_json(Side side) { return std::string(to_string(side)); }

Json optional_index(const std::optional<std::size_t>& k) {
  return k ? Json(*k) : Json(nullptr);
}

}  // namespace

Json to_json(const FamilyPair& fp) {
  Json out{{"plus", family_json(fp.plus())}, {"minus", family_json(fp.minus())}};
  if (!fp.labels(Side::Plus).empty() || !fp.labels(Side::Minus).empty()) {
    out["labels"] = {{"plus", fp.labels(Side::Plus)}, {"minus", fp.labels(Side::Minus)}};
  }
  return out;
}

Json to_json(const Violation& v) {
  Json out{{"kind", std::string(to_string(v.kind))}, {"witness", points_json(v.witness)}};
  switch (v.kind) {
    case Violation::Kind::CrossIntersectionTooBig:
      out["plus"] = v.i;
      out["minus"] = v.j;
      break;
    case Violation::Kind::EmptyFamily:
      out["family"] = side_json(v.family);
      break;
    case Violation::Kind::EmptyElement:
    case Violation::Kind::DuplicatePoint:
      out["family"] = side_json(v.family);
      out["i"] = v.i;
      break;
    case Violation::Kind::WithinFamilyOverlap:
    case Violation::Kind::WithinFamilyLinked:
      out["family"] = side_json(v.family);
      out["i"] = v.i;
      out["j"] = v.j;
      break;
  }
  return out;
}

Json to_json(const NestingReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"family", side_json(e.family)},
                       {"element", e.element},
                       {"interval", e.interval},
                       {"arc", Json::array({to_string(e.arc.a), to_string(e.arc.b)})},
                       {"separator", optional_index(e.separator)},
                       {"witness", optional_index(e.witness)}});
  }
  return {{"defect", report.defect}, {"entries", std::move(entries)}};
}

Json to_json(const EspecialDisc& disc) {
  Json interior = Json::array();
  for (const auto& z : disc.interior()) {
    interior.push_back(
        {{"plus", z.plus}, {"minus", z.minus}, {"link", z.link}, {"prongs", 2 * z.link}});
  }
  Json boundary = Json::array();
  for (const auto& z : disc.boundary()) {
    boundary.push_back({{"plus", z.plus}, {"minus", z.minus}, {"point", to_string(z.point)}});
  }
  return {{"plus_count", disc.plus_count()},
          {"minus_count", disc.minus_count()},
          {"interior", std::move(interior)},
          {"boundary", std::move(boundary)}};
}

Json classification_table(const FamilyPair& fp) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < fp.plus().size(); ++i) {
    for (std::size_t j = 0; j < fp.minus().size(); ++j) {
      Json row{{"plus", i}, {"minus", j}};
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, IntersectingAt>) {
              row["class"] = "IntersectingAt";
              row["point"] = to_string(c.point);
            } else if constexpr (std::is_same_v<T, DisjointUnlinked>) {
              row["class"] = "DisjointUnlinked";
            } else {
              row["class"] = "DisjointLinked";
              row["link"] = c.link;
            }
          },
          classify_pair(fp, i, j));
      pairs.push_back(std::move(row));
    }
  }
  return {{"pairs", std::move(pairs)}};
}

Json to_json(const PlanePoint& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json to_json(const ConvexCell& cell) {
  Json vertices = Json::array();
  for (const auto& v : cell.vertices()) vertices.push_back(to_json(v));
  return {{"dim", cell.dim()}, {"vertices", std::move(vertices)}};
}

Json to_json(const StraightenResult& r) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MappedTo>) {
          return {{"result", "MappedTo"}, {"plus", v.z.plus}, {"minus", v.z.minus}};
        } else if constexpr (std::is_same_v<T, OnBoundary>) {
          return {{"result", "OnBoundary"}, {"point", to_string(v.point)}};
        } else {
          return {{"result", "NotInDomain"}};
        }
      },
      r);
}

Json to_json(const LeafGraph& leaf) {
  Json vertices = Json::array();
  for (const auto& v : leaf.vertices) {
    if (v.is_virtual) {
      vertices.push_back({{"virtual", true}});
    } else {
      vertices.push_back({{"plus", v.z.plus}, {"minus", v.z.minus}});
    }
  }
  Json edges = Json::array();
  for (const auto& [u, v] : leaf.edges) edges.push_back({u, v});
  return {{"element", leaf.element}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

namespace {

Json edge_ref_json(const LeafEdgeRef& r) {
  return {{"family", side_json(r.family)}, {"element", r.element}, {"edge", r.edge}};
}

}  // namespace

Json to_json(const StraightenedDisc& sd) {
  Json interior = Json::array();
  for (std::size_t k = 0; k < sd.disc.interior().size(); ++k) {
    const auto& z = sd.disc.interior()[k];
    interior.push_back({{"plus", z.plus},
                        {"minus", z.minus},
                        {"link", z.link},
                        {"position", to_json(sd.interior_layout[k])}});
  }
  Json boundary = Json::array();
  for (std::size_t k = 0; k < sd.disc.boundary().size(); ++k) {
    const auto& z = sd.disc.boundary()[k];
    boundary.push_back({{"plus", z.plus},
                        {"minus", z.minus},
                        {"point", to_string(z.point)},
                        {"position", to_json(sd.boundary_layout[k])}});
  }
  Json leaves_plus = Json::array(), leaves_minus = Json::array();
  for (const auto& l : sd.leaves_plus) leaves_plus.push_back(to_json(l));
  for (const auto& l : sd.leaves_minus) leaves_minus.push_back(to_json(l));
  Json virtuals = Json::array();
  for (const auto& v : sd.virtual_layout) {
    virtuals.push_back({{"family", side_json(v.family)},
                        {"element", v.element},
                        {"position", to_json(v.position)}});
  }
  Json crossings = Json::array();
  for (const auto& c : sd.crossings) {
    crossings.push_back({{"a", edge_ref_json(c.a)}, {"b", edge_ref_json(c.b)}});
  }
  return {{"interior", std::move(interior)},
          {"boundary", std::move(boundary)},
          {"leaves", {{"plus", std::move(leaves_plus)}, {"minus", std::move(leaves_minus)}}},
          {"virtual", std::move(virtuals)},
          {"crossings", std::move(crossings)}};
}

Json to_json(const QuotientReport& report) {
  return {{"passed", report.passed()},
          {"constancy", report.constancy},
          {"injectivity", report.injectivity},
          {"surjectivity", report.surjectivity},
          {"cells", report.cells},
          {"samples", report.samples},
          {"failures", report.failures}};
}

Json to_json(const CircleMap& g) {
  // Explicit arrays: a braced pair of strings would be read as an object entry.
  return {{"m", Json::array({Json::array({to_string(g.a()), to_string(g.b())}),
                             Json::array({to_string(g.c()), to_string(g.d())})})}};
}

Json to_json(const EquivarianceReport& report) {
  Json not_invariant = nullptr;
  if (report.not_invariant) {
    not_invariant = {{"family", side_json(report.not_invariant->family)},
                     {"element", report.not_invariant->element},
                     {"image", to_json(report.not_invariant->image)}};
  }
  return {{"passed", report.passed()},
          {"invariant", report.invariant},
          {"not_invariant", std::move(not_invariant)},
          {"permutation",
           {{"plus", report.permutation.plus}, {"minus", report.permutation.minus}}},
          {"disc", report.disc},
          {"straighten", report.straighten},
          {"prongs", report.prongs},
          {"samples", report.samples},
          {"failures", report.failures}};
}

namespace {

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + "/" + key, "missing field");
  return *it;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(path, e.what());
  }
}

std::vector<CircleSet> family_from_json(const Json& j, Side side, std::vector<Violation>& defects) {
  const std::string base = "/" + std::string(to_string(side));
  std::vector<CircleSet> out;
  for (std::size_t i = 0; i < expect_array(j, base).size(); ++i) {
    const std::string path = base + "/" + std::to_string(i);
    std::vector<CirclePoint> points;
    for (std::size_t k = 0; k < expect_array(j[i], path).size(); ++k) {
      points.push_back(circle_point_from_json(j[i][k], path + "/" + std::to_string(k)));
    }
    if (points.empty()) {
      defects.push_back({Violation::Kind::EmptyElement, side, i, 0, {}});
      continue;
    }
    std::set<CirclePoint> seen;
    std::vector<CirclePoint> repeats;
    for (const auto& p : points) {
      if (!seen.insert(p).second) repeats.push_back(p);
    }
    if (!repeats.empty()) {
      defects.push_back({Violation::Kind::DuplicatePoint, side, i, 0, std::move(repeats)});
      continue;
    }
    out.emplace_back(std::move(points));
  }
  return out;
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < expect_array(j, path).size(); ++k) {
    if (!j[k].is_string()) throw InputError(path + "/" + std::to_string(k), "expected a string");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

}  // namespace

CirclePoint circle_point_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a point string");
  try {
    return parse_point(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(path, e.what());
  }
}

FamilyPair family_pair_from_json(const Json& j) {
  std::vector<Violation> defects;
  auto plus = family_from_json(member(j, "plus", ""), Side::Plus, defects);
  auto minus = family_from_json(member(j, "minus", ""), Side::Minus, defects);
  Labels labels;
  if (auto it = j.find("labels"); it != j.end()) {
    labels.plus = labels_from_json(member(*it, "plus", "/labels"), "/labels/plus");
    labels.minus = labels_from_json(member(*it, "minus", "/labels"), "/labels/minus");
    const auto& raw_plus = j["plus"];
    const auto& raw_minus = j["minus"];
    if (labels.plus.size() != raw_plus.size() || labels.minus.size() != raw_minus.size()) {
      throw InputError("/labels", "label count does not match element count");
    }
  }
  if (!defects.empty()) throw ValidationError(std::move(defects));
  return validate(std::move(plus), std::move(minus), std::move(labels));
}

CircleMap circle_map_from_json(const Json& j) {
  const Json& m = expect_array(member(j, "m", ""), "/m");
  if (m.size() != 2) throw InputError("/m", "expected a 2x2 matrix");
  Rational entries[4];
  for (std::size_t r = 0; r < 2; ++r) {
    const std::string row = "/m/" + std::to_string(r);
    if (!expect_array(m[r], row).size() || m[r].size() != 2) {
      throw InputError(row, "expected a row of two entries");
    }
    for (std::size_t c = 0; c < 2; ++c) {
      entries[2 * r + c] = rational_from_json(m[r][c], row + "/" + std::to_string(c));
    }
  }
  return CircleMap(entries[0], entries[1], entries[2], entries[3]);
}

}  // namespace especial
