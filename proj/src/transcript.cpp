#include "matchgame/transcript.hpp"

#include <charconv>
#include <json.hpp>

namespace matchgame {

using nlohmann::json;

namespace {

const char* naming_key(VertexNaming naming) {
  switch (naming) {
    case VertexNaming::kBipartite: return "ab";
    case VertexNaming::kBomb: return "uv";
    case VertexNaming::kIndex: return "index";
  }
  return "index";
}

VertexNaming naming_from_key(const std::string& key) {
  if (key == "ab") return VertexNaming::kBipartite;
  if (key == "uv") return VertexNaming::kBomb;
  if (key == "index") return VertexNaming::kIndex;
  throw Error(ErrorKind::kFormat, "unknown vertex naming '" + key + "'");
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

json vertex_json(int v, int n, VertexNaming naming) {
  if (naming == VertexNaming::kIndex) return v;
  return vertex_name(v, n, naming);
}

int vertex_from_json(const json& j, int n, VertexNaming naming) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    if (naming != VertexNaming::kIndex || v < 0 || v >= n) {
      throw Error(ErrorKind::kFormat, "bad vertex index " + std::to_string(v));
    }
    return v;
  }
  if (!j.is_string()) throw Error(ErrorKind::kFormat, "vertex must be a string or integer");
  return parse_vertex(j.get<std::string>(), n, naming);
}

json edges_json(std::span<const Edge> edges, int n, VertexNaming naming) {
  json out = json::array();
  for (Edge e : edges) out.push_back({vertex_json(e.u, n, naming), vertex_json(e.v, n, naming)});
  return out;
}

std::vector<Edge> edges_from_json(const json& j, int n, VertexNaming naming) {
  if (!j.is_array()) throw Error(ErrorKind::kFormat, "edge list must be an array");
  std::vector<Edge> out;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorKind::kFormat, "edge must be a pair of vertices");
    }
    int a = vertex_from_json(pair[0], n, naming);
    int b = vertex_from_json(pair[1], n, naming);
    if (a == b) throw Error(ErrorKind::kFormat, "self-loop in edge list");
    out.emplace_back(a, b);
  }
  return out;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::kFormat, std::string("missing field '") + key + "'");
  return *it;
}

Matching matching_from(const std::vector<Edge>& edges, const char* what) {
  Matching m;
  for (Edge e : edges) {
    if (!m.try_add(e)) {
      throw Error(ErrorKind::kFormat, std::string(what) + " is not a matching");
    }
  }
  return m;
}

VertexNaming infer_naming(const json& j) {
  // first vertex token found decides
  for (const char* key : {"stream", "perfect_matching"}) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_array() || it->empty()) continue;
    const json& first = (*it)[0];
    if (!first.is_array() || first.empty()) continue;
    const json& v = first[0];
    if (v.is_string() && !v.get<std::string>().empty()) {
      char c = v.get<std::string>()[0];
      return (c == 'u' || c == 'v') ? VertexNaming::kBomb : VertexNaming::kBipartite;
    }
    return VertexNaming::kIndex;
  }
  return j.contains("bipartition") && !j["bipartition"].is_null() ? VertexNaming::kBipartite
                                                                   : VertexNaming::kIndex;
}

}  // namespace

std::string vertex_name(int v, int n, VertexNaming naming) {
  int half = n / 2;
  switch (naming) {
    case VertexNaming::kBipartite:
      return v < half ? "a" + std::to_string(v + 1) : "b" + std::to_string(v - half + 1);
    case VertexNaming::kBomb:
      return v < half ? "u" + std::to_string(v + 1) : "v" + std::to_string(v - half + 1);
    case VertexNaming::kIndex:
      return std::to_string(v);
  }
  return std::to_string(v);
}

int parse_vertex(std::string_view token, int n, VertexNaming naming) {
  auto bad = [&]() {
    return Error(ErrorKind::kFormat, "unknown vertex '" + std::string(token) + "'");
  };
  if (token.empty()) throw bad();
  int half = n / 2;
  if (naming == VertexNaming::kIndex) {
    auto v = parse_int(token);
    if (!v || *v < 0 || *v >= n) throw bad();
    return *v;
  }
  char lo = naming == VertexNaming::kBipartite ? 'a' : 'u';
  char hi = naming == VertexNaming::kBipartite ? 'b' : 'v';
  if (token[0] != lo && token[0] != hi) throw bad();
  auto idx = parse_int(token.substr(1));
  if (!idx || *idx < 1 || *idx > half) throw bad();
  return token[0] == lo ? *idx - 1 : half + *idx - 1;
}

std::string edge_name(Edge e, int n, VertexNaming naming) {
  return vertex_name(e.u, n, naming) + "-" + vertex_name(e.v, n, naming);
}

std::string format_vertices(VertexSet s, int n, VertexNaming naming) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ' ';
    out += vertex_name(v, n, naming);
  }
  return out.empty() ? "(none)" : out;
}

std::string format_edges(std::span<const Edge> edges, int n, VertexNaming naming) {
  std::string out;
  for (Edge e : edges) {
    if (!out.empty()) out += ' ';
    out += edge_name(e, n, naming);
  }
  return out.empty() ? "(none)" : out;
}

std::string transcript_to_json(const Transcript& t, int indent) {
  json j;
  j["n"] = t.n;
  j["naming"] = naming_key(t.naming);
  j["bipartition"] = t.bipartition ? json::array({t.bipartition->a_size, t.bipartition->b_size})
                                   : json(nullptr);
  j["oracle"] = t.oracle;
  json rounds = json::array();
  for (const RoundRecord& r : t.rounds) {
    json query = json::array();
    for (int v : r.query.vertices) query.push_back(vertex_json(v, t.n, t.naming));
    rounds.push_back({{"query", query}, {"response", edges_json(r.response.edges(), t.n, t.naming)}});
  }
  j["rounds"] = rounds;
  j["stream"] = edges_json(t.final_stream.edges(), t.n, t.naming);
  j["committed_edges"] = edges_json(t.committed_edges.to_vector(), t.n, t.naming);
  j["non_edges"] = edges_json(t.committed_non_edges.to_vector(), t.n, t.naming);
  j["perfect_matching"] = edges_json(t.declared_perfect_matching.edges(), t.n, t.naming);
  return j.dump(indent);
}

Transcript transcript_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kFormat, std::string("transcript is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::kFormat, "transcript must be a JSON object");
  try {
    Transcript t;
    t.n = field(j, "n").get<int>();
    if (t.n < 0 || t.n > kMaxVertices) throw Error(ErrorKind::kFormat, "n out of range");
    t.naming = j.contains("naming") ? naming_from_key(j["naming"].get<std::string>()) : infer_naming(j);
    const json& bp = field(j, "bipartition");
    if (!bp.is_null()) {
      if (!bp.is_array() || bp.size() != 2) throw Error(ErrorKind::kFormat, "bad bipartition");
      t.bipartition = Bipartition{bp[0].get<int>(), bp[1].get<int>()};
      if (t.bipartition->n() != t.n) throw Error(ErrorKind::kFormat, "bipartition does not match n");
    }
    if (j.contains("oracle")) t.oracle = j["oracle"].get<std::string>();
    const json& rounds = field(j, "rounds");
    if (!rounds.is_array()) throw Error(ErrorKind::kFormat, "rounds must be an array");
    int index = 1;
    for (const json& r : rounds) {
      RoundRecord rec;
      rec.query.round = index++;
      const json& q = field(r, "query");
      if (!q.is_array()) throw Error(ErrorKind::kFormat, "query must be an array");
      for (const json& v : q) rec.query.vertices.insert(vertex_from_json(v, t.n, t.naming));
      rec.response = matching_from(edges_from_json(field(r, "response"), t.n, t.naming), "response");
      t.rounds.push_back(std::move(rec));
    }
    t.final_stream = EdgeStream(t.n);
    for (Edge e : edges_from_json(field(j, "stream"), t.n, t.naming)) {
      if (t.final_stream.contains(e)) throw Error(ErrorKind::kFormat, "duplicate edge in stream");
      t.final_stream.push_back(e);
    }
    t.committed_edges = EdgeSet(t.n);
    if (j.contains("committed_edges")) {
      for (Edge e : edges_from_json(j["committed_edges"], t.n, t.naming)) t.committed_edges.insert(e);
    } else {
      for (Edge e : t.final_stream.edges()) t.committed_edges.insert(e);
    }
    t.committed_non_edges = EdgeSet(t.n);
    for (Edge e : edges_from_json(field(j, "non_edges"), t.n, t.naming)) t.committed_non_edges.insert(e);
    t.declared_perfect_matching =
        matching_from(edges_from_json(field(j, "perfect_matching"), t.n, t.naming), "perfect_matching");
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("transcript schema error: ") + e.what());
  }
}

}  // namespace matchgame
