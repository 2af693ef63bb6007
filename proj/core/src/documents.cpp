#include "bdc/documents.hpp"

#include <map>

#include "bdc/errors.hpp"
#include "json.hpp"

namespace bdc {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

std::string id_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::MalformedInput, "vertex ids must be strings or integers");
}

std::int64_t int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::MalformedInput, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

struct Vertices {
  std::vector<std::string> ids;
  std::vector<std::optional<std::int64_t>> weights;
  std::map<std::string, int> index;
};

Vertices read_vertices(const json& doc, bool weights_required) {
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::MalformedInput, "expected a \"vertices\" array");
  Vertices out;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id")) throw Error(ErrorCode::MalformedInput, "vertex needs an \"id\"");
    const std::string id = id_of(v["id"]);
    if (out.index.count(id)) throw Error(ErrorCode::MalformedInput, "duplicate vertex id " + id);
    out.index[id] = static_cast<int>(out.ids.size());
    out.ids.push_back(id);
    if (v.contains("weight") && !v["weight"].is_null())
      out.weights.push_back(int_of(v["weight"], "weight"));
    else if (weights_required)
      throw Error(ErrorCode::MalformedInput, "vertex " + id + " needs a weight");
    else
      out.weights.push_back(std::nullopt);
  }
  return out;
}

int lookup(const Vertices& vs, const json& j) {
  const std::string id = id_of(j);
  auto it = vs.index.find(id);
  if (it == vs.index.end()) throw Error(ErrorCode::MalformedInput, "unknown vertex " + id);
  return it->second;
}

}  // namespace

int GraphDocument::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return static_cast<int>(i);
  throw Error(ErrorCode::MalformedInput, "unknown vertex " + id);
}

DocumentKind detect_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "document must be a JSON object");
  if (doc.contains("pd")) return DocumentKind::Diagram;
  if (doc.contains("vertices")) return DocumentKind::Graph;
  throw Error(ErrorCode::MalformedInput, "document has neither \"pd\" nor \"vertices\"");
}

GraphDocument parse_graph_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "document must be a JSON object");
  Vertices vs = read_vertices(doc, false);
  GraphDocument out;
  out.ids = vs.ids;
  out.weights = vs.weights;
  const int n = static_cast<int>(vs.ids.size());
  out.graph = PlaneGraph(n);

  const json edges = doc.value("edges", json::array());
  if (!edges.is_array()) throw Error(ErrorCode::MalformedInput, "\"edges\" must be an array");
  for (const auto& e : edges) {
    int u = 0, v = 0, sign = 1;
    if (e.is_object()) {
      if (!e.contains("u") || !e.contains("v")) throw Error(ErrorCode::MalformedInput, "edge needs \"u\" and \"v\"");
      u = lookup(vs, e["u"]);
      v = lookup(vs, e["v"]);
      if (e.contains("sign")) {
        const json& s = e["sign"];
        if (s.is_string())
          sign = s == "+" ? 1 : s == "-" ? -1 : 0;
        else
          sign = static_cast<int>(int_of(s, "sign"));
        if (sign != 1 && sign != -1) throw Error(ErrorCode::MalformedInput, "edge sign must be +1/-1 or \"+\"/\"-\"");
      }
    } else if (e.is_array() && e.size() == 2) {
      u = lookup(vs, e[0]);
      v = lookup(vs, e[1]);
    } else {
      throw Error(ErrorCode::MalformedInput, "edge must be an object or a pair");
    }
    out.graph.add_edge(u, v);
    out.signs.push_back(sign);
  }

  if (doc.contains("rotations")) {
    const json& rot = doc["rotations"];
    if (!rot.is_object()) throw Error(ErrorCode::MalformedInput, "\"rotations\" must be an object");
    for (const auto& [key, list] : rot.items()) {
      auto it = vs.index.find(key);
      if (it == vs.index.end()) throw Error(ErrorCode::MalformedInput, "rotation for unknown vertex " + key);
      const int v = it->second;
      if (!list.is_array()) throw Error(ErrorCode::MalformedInput, "rotation must be an array of edge indices");
      std::vector<int> darts;
      std::map<int, int> seen;
      for (const auto& x : list) {
        const auto e = int_of(x, "rotation entry");
        if (e < 0 || e >= out.graph.edge_count())
          throw Error(ErrorCode::MalformedInput, "rotation entry out of range");
        const auto& ed = out.graph.edges()[static_cast<std::size_t>(e)];
        if (ed.u != v && ed.v != v)
          throw Error(ErrorCode::MalformedInput, "rotation of " + key + " lists a non-incident edge");
        if (ed.u == ed.v) throw Error(ErrorCode::NotReduced, "loop edge");
        if (seen[static_cast<int>(e)]++)
          throw Error(ErrorCode::MalformedInput, "edge repeated in rotation of " + key);
        darts.push_back(static_cast<int>(2 * e + (ed.u == v ? 0 : 1)));
      }
      if (static_cast<int>(darts.size()) != static_cast<int>(out.graph.rotation(v).size()))
        throw Error(ErrorCode::MalformedInput, "rotation of " + key + " must list every incident edge once");
      out.graph.set_rotation(v, std::move(darts));
    }
  }

  if (doc.contains("marked") && !doc["marked"].is_null()) out.marked = lookup(vs, doc["marked"]);
  if (n == 0) throw Error(ErrorCode::DegenerateGraph, "graph has no vertices");
  if (out.graph.abstract().has_loop()) throw Error(ErrorCode::NotReduced, "loop edge");
  return out;
}

PlumbingTree parse_tree_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "document must be a JSON object");
  Vertices vs = read_vertices(doc, true);
  PlumbingTree t;
  t.labels = vs.ids;
  for (const auto& w : vs.weights) t.weights.push_back(*w);
  const json edges = doc.value("edges", json::array());
  if (!edges.is_array()) throw Error(ErrorCode::MalformedInput, "\"edges\" must be an array");
  for (const auto& e : edges) {
    if (e.is_array() && e.size() == 2)
      t.edges.push_back({lookup(vs, e[0]), lookup(vs, e[1])});
    else if (e.is_object() && e.contains("u") && e.contains("v"))
      t.edges.push_back({lookup(vs, e["u"]), lookup(vs, e["v"])});
    else
      throw Error(ErrorCode::MalformedInput, "tree edge must be a pair");
  }
  t.require_tree();
  return t;
}

std::vector<std::int64_t> required_weights(const GraphDocument& doc) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < doc.weights.size(); ++i) {
    if (!doc.weights[i]) throw Error(ErrorCode::MalformedInput, "vertex " + doc.ids[i] + " needs a weight");
    w.push_back(*doc.weights[i]);
  }
  return w;
}

MarkedGraph white_graph(const GraphDocument& doc) {
  const Multigraph g = doc.graph.abstract();
  if (doc.marked) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != *doc.marked && doc.weights[v] && *doc.weights[v] != -g.degree(v))
        throw Error(ErrorCode::MalformedInput,
                    "weight of " + doc.ids[v] + " must be -degree in a marked white graph");
    return MarkedGraph{g, *doc.marked};
  }
  const auto w = required_weights(doc);
  return close_with_hub(g, w);
}

ChainmailLink chainmail_of(const GraphDocument& doc, std::vector<int>* vertex_order) {
  if (doc.marked) {
    white_graph(doc);  // weight consistency
    return chainmail_from_white(doc.graph, *doc.marked, vertex_order);
  }
  if (vertex_order) {
    vertex_order->clear();
    for (int v = 0; v < doc.graph.vertex_count(); ++v) vertex_order->push_back(v);
  }
  return build_chainmail(doc.graph, required_weights(doc), doc.signs);
}

}  // namespace bdc
