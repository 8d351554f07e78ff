#include "scgraph/report.hpp"

namespace scgraph {

Json to_json(VertexSet s) { return Json(s.members()); }

namespace {

Json four_parts(VertexSet a, VertexSet b, VertexSet c, VertexSet d) {
  Json j = Json::object();
  j["A"] = to_json(a);
  j["B"] = to_json(b);
  j["C"] = to_json(c);
  j["D"] = to_json(d);
  return j;
}

}  // namespace

Json to_json(const SkewPartition& w) { return four_parts(w.a, w.b, w.c, w.d); }
Json to_json(const SymmetricPartition& w) { return four_parts(w.a, w.b, w.c, w.d); }

Json to_json(const Witness& w) {
  return std::visit([](const auto& x) -> Json {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, C5Witness>) {
      return Json(std::vector<int>(x.begin(), x.end()));
    } else {
      return to_json(x);
    }
  }, w);
}

Json to_json(const P4Partition& p) {
  Json quads = Json::array();
  for (const auto& q : p.quads) quads.push_back(std::vector<int>(q.begin(), q.end()));
  Json j = Json::object();
  j["quads"] = std::move(quads);
  j["leftover"] = p.leftover ? Json(*p.leftover) : Json(nullptr);
  return j;
}

Json to_json(const TheoremMResult& r) {
  Json j = Json::object();
  j["case"] = r.case_number;
  j["kind"] = to_string(r.kind);
  j["witness"] = to_json(r.witness);
  return j;
}

Json to_json(const StructureReport& r) {
  Json j = Json::object();
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["c5"] = r.c5 ? Json(std::vector<int>(r.c5->begin(), r.c5->end())) : Json(nullptr);
  j["skew"] = r.skew ? to_json(*r.skew) : Json(nullptr);
  j["symmetric"] = r.symmetric ? to_json(*r.symmetric) : Json(nullptr);
  j["conjecture_holds"] = r.conjecture_holds;
  if (r.theorem_m) {
    Json t = Json::object();
    t["case"] = r.theorem_m->case_number;
    t["kind"] = to_string(r.theorem_m->kind);
    j["theorem_m"] = std::move(t);
  } else {
    j["theorem_m"] = nullptr;
  }
  return j;
}

}  // namespace scgraph
