#include "holefree/cli/serialize.hpp"

namespace holefree::cli {

Json to_json(VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json to_json(const Coloring& c) { return Json{{"num_colors", c.num_colors}, {"color", c.color}}; }

Json to_json(const HoleCertificate& h) {
  return Json{{"kind", h.kind == HoleKind::hole ? "hole" : "antihole"}, {"length", h.length()}, {"vertices", h.vertices}};
}

Json to_json(const ClawWitness& w) { return Json{{"center", w.center}, {"leaves", w.leaves}}; }

Json to_json(const CliquePair& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

Json to_json(const SplitCertificate& c) {
  return Json{{"s", c.s},
              {"t", c.t},
              {"S", to_json(c.S)},
              {"T", to_json(c.T)},
              {"S_coloring", to_json(c.s_coloring)},
              {"T_coloring", to_json(c.t_coloring)}};
}

VertexSet vertex_set_from_json(const Json& j) {
  VertexSet s;
  for (const Json& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw GraphError("vertex out of range in report");
    s.insert(x);
  }
  return s;
}

Coloring coloring_from_json(const Json& j) {
  Coloring c;
  c.num_colors = j.at("num_colors").get<int>();
  c.color = j.at("color").get<std::vector<int>>();
  return c;
}

HoleCertificate hole_from_json(const Json& j) {
  HoleCertificate h;
  h.kind = j.at("kind").get<std::string>() == "antihole" ? HoleKind::antihole : HoleKind::hole;
  h.vertices = j.at("vertices").get<std::vector<Vertex>>();
  return h;
}

ClawWitness claw_from_json(const Json& j) {
  ClawWitness w;
  w.center = j.at("center").get<Vertex>();
  w.leaves = j.at("leaves").get<std::array<Vertex, 3>>();
  return w;
}

CliquePair clique_pair_from_json(const Json& j) {
  return CliquePair{vertex_set_from_json(j.at(0)), vertex_set_from_json(j.at(1))};
}

SplitCertificate split_from_json(const Json& j) {
  SplitCertificate c;
  c.s = j.at("s").get<int>();
  c.t = j.at("t").get<int>();
  c.S = vertex_set_from_json(j.at("S"));
  c.T = vertex_set_from_json(j.at("T"));
  c.s_coloring = coloring_from_json(j.at("S_coloring"));
  c.t_coloring = coloring_from_json(j.at("T_coloring"));
  return c;
}

}  // namespace holefree::cli
