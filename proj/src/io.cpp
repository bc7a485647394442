// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cftutte/io.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "cftutte/errors.hpp"

namespace cft::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_count(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ValidationError(std::string(what) + " must be a nonnegative integer");
}

unsigned as_small(const Json& j, const char* what) {
  std::uint64_t v = as_count(j, what);
  if (v > std::numeric_limits<unsigned>::max()) throw ValidationError(std::string(what) + " is too large");
  return static_cast<unsigned>(v);
}

ElementSet set_from_json(const Json& j, unsigned n) {
  if (!j.is_array()) throw ValidationError("a set must be an array of elements");
  ElementSet s = 0;
  for (const auto& e : j) {
    unsigned v = as_small(e, "element");
    if (v >= n) throw ValidationError("element " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    s |= singleton(v);
  }
  return s;
}

Json set_to_json(ElementSet s) {
  Json out = Json::array();
  for (unsigned e : elements_of(s)) out.push_back(e);
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || !std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), ::isdigit) || s == "-")
      throw ValidationError("\"" + s + "\" is not an integer");
    return Integer(s);
  }
  throw ValidationError("expected an integer");
}

Json integer_to_json(const Integer& v) {
  if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return Json(static_cast<std::int64_t>(v));
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

std::vector<Label> labels_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("labels must be an array");
  std::vector<Label> out;
  for (const auto& node : j) out.push_back({as_small(field(node, "size"), "size"), as_small(field(node, "rank"), "rank")});
  return out;
}

Json labels_to_json(const std::vector<Label>& labels) {
  Json out = Json::array();
  for (const Label& l : labels) out.push_back(Json{{"size", l.size}, {"rank", l.rank}});
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

InputKind detect_kind(const Json& j) {
  if (j.is_object()) {
    if (j.contains("type")) return InputKind::kMatroid;
    if (j.contains("nodes")) return InputKind::kConfiguration;
    if (j.contains("blocks")) return InputKind::kCondensed;
    if (j.contains("k")) return InputKind::kPmd;
  }
  throw ValidationError("cannot tell what kind of input this is");
}

Matroid matroid_from_json(const Json& j) {
  try {
    const Json& type = field(j, "type");
    const unsigned n = as_small(field(j, "n"), "n");
    if (n > kMaxElements) throw ValidationError("at most 64 elements supported");
    if (type == "uniform") return Matroid::uniform(as_small(field(j, "r"), "r"), n);
    if (type == "bases") {
      std::vector<ElementSet> list;
      for (const auto& b : field(j, "bases")) list.push_back(set_from_json(b, n));
      return Matroid::from_bases(n, std::move(list));
    }
    if (type == "cyclic_flats") {
      std::vector<CyclicFlatRecord> records;
      for (const auto& z : field(j, "flats"))
        records.push_back({set_from_json(field(z, "set"), n), as_small(field(z, "rank"), "rank")});
      return Matroid::from_cyclic_flats(n, std::move(records));
    }
    throw ValidationError("unknown matroid type");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed matroid: ") + e.what());
  }
}

Json matroid_to_json(const Matroid& m) {
  struct Visitor {
    unsigned n;
    Json operator()(const Matroid::BasisList& list) const {
      Json b = Json::array();
      for (ElementSet s : list.bases) b.push_back(set_to_json(s));
      return Json{{"type", "bases"}, {"n", n}, {"bases", b}};
    }
    Json operator()(const Matroid::CyclicFlats& cf) const {
      Json f = Json::array();
      for (const auto& z : cf.flats) f.push_back(Json{{"set", set_to_json(z.set)}, {"rank", z.rank}});
      return Json{{"type", "cyclic_flats"}, {"n", n}, {"flats", f}};
    }
    Json operator()(const Matroid::Uniform& u) const {
      return Json{{"type", "uniform"}, {"n", n}, {"r", u.rank}};
    }
  };
  return std::visit(Visitor{m.size()}, m.backing());
}

Configuration configuration_from_json(const Json& j) {
  try {
    std::vector<Label> nodes = labels_from_json(field(j, "nodes"));
    std::vector<NodePair> relation;
    const Json& leq = j.contains("leq") ? j.at("leq") : Json::array();
    for (const auto& pair : leq) {
      if (!pair.is_array() || pair.size() != 2) throw ValidationError("leq entries must be [i,j] pairs");
      relation.emplace_back(as_count(pair[0], "node index"), as_count(pair[1], "node index"));
    }
    return Configuration::from_relation(std::move(nodes), relation);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed configuration: ") + e.what());
  }
}

Json configuration_to_json(const Configuration& c) {
  Json leq = Json::array();
  for (auto [i, j] : c.covers()) leq.push_back(Json::array({i, j}));
  return Json{{"nodes", labels_to_json(c.nodes())}, {"leq", leq}};
}

CondensedConfiguration condensed_from_json(const Json& j) {
  try {
    std::vector<Label> labels = labels_from_json(field(j, "blocks"));
    IntMatrix a;
    const Json& rows = field(j, "A");
    if (!rows.is_array()) throw ValidationError("A must be an array of rows");
    for (const auto& row : rows) {
      if (!row.is_array()) throw ValidationError("A must be an array of rows");
      std::vector<Integer> values;
      for (const auto& v : row) values.push_back(integer_from_json(v));
      a.push_back(std::move(values));
    }
    return CondensedConfiguration::create(std::move(labels), std::move(a));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed condensed configuration: ") + e.what());
  }
}

Json condensed_to_json(const CondensedConfiguration& cc) {
  Json rows = Json::array();
  for (const auto& row : cc.matrix()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(integer_to_json(v));
    rows.push_back(std::move(r));
  }
  return Json{{"blocks", labels_to_json(cc.labels())}, {"A", rows}};
}

std::vector<std::uint64_t> pmd_from_json(const Json& j) {
  const Json& seq = j.is_array() ? j : field(j, "k");
  if (!seq.is_array()) throw ValidationError("k must be an array");
  std::vector<std::uint64_t> k;
  for (const auto& v : seq) k.push_back(as_count(v, "k entry"));
  return k;
}

Json pmd_to_json(const std::vector<std::uint64_t>& k) { return Json{{"k", k}}; }

std::vector<Permutation> group_from_json(const Json& j, unsigned n) {
  try {
    if (j.contains("n") && as_small(j.at("n"), "n") != n)
      throw ValidationError("group acts on " + std::to_string(j.at("n").get<unsigned>()) +
                            " elements, matroid has " + std::to_string(n));
    std::vector<Permutation> out;
    for (const auto& g : field(j, "generators")) {
      Permutation p;
      for (const auto& e : g) p.push_back(as_small(e, "image"));
      out.push_back(std::move(p));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed group: ") + e.what());
  }
}

Json polynomial_to_json(const BivarPoly& f) {
  std::vector<std::pair<Exponent, Integer>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.x != b.first.x) return a.first.x > b.first.x;
    return a.first.y < b.first.y;
  });
  Json list = Json::array();
  for (const auto& [e, c] : terms) list.push_back(Json::array({e.x, e.y, c.str()}));
  return Json{{"terms", list}};
}

BivarPoly polynomial_from_json(const Json& j) {
  BivarPoly f;
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 3) throw ValidationError("terms must be [dx,dy,coeff] triples");
    f.add_term(as_small(t[0], "dx"), as_small(t[1], "dy"), integer_from_json(t[2]));
  }
  return f;
}

}  // namespace cft::io
