#include <json.hpp>

#include "holo/diagram.hpp"
#include "holo/errors.hpp"

namespace holo {

using Json = nlohmann::ordered_json;

std::string to_json(const DiagramSpec& spec, int indent) {
  Json j;
  j["n"] = spec.n;
  j["triangles"] = Json::array();
  for (const auto& t : spec.triangles) {
    Json jt;
    jt["id"] = t.id;
    jt["angles"] = {t.shape.angles[0].to_string(), t.shape.angles[1].to_string(),
                    t.shape.angles[2].to_string()};
    j["triangles"].push_back(jt);
  }
  j["gluings"] = Json::array();
  for (const auto& g : spec.gluings) {
    j["gluings"].push_back({spec.triangles[g.t0].id, g.e0, spec.triangles[g.t1].id, g.e1});
  }
  j["interior_vertices"] = Json::array();
  for (const auto& vr : spec.interior_vertices) {
    Json ring = Json::array();
    for (auto [t, p] : vr.entries) ring.push_back({spec.triangles[t].id, p});
    j["interior_vertices"].push_back(ring);
  }
  Json meta;
  meta["name"] = spec.metadata.name;
  meta["figure"] = spec.metadata.figure;
  if (!spec.metadata.notes.empty()) meta["notes"] = spec.metadata.notes;
  if (!spec.metadata.frame_angles.empty()) meta["frame"] = spec.metadata.frame_angles;
  j["metadata"] = meta;
  return j.dump(indent);
}

DiagramSpec spec_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad diagram json: ") + e.what());
  }
  DiagramSpec spec;
  try {
    spec.n = j.at("n").get<int>();
    for (const auto& jt : j.at("triangles")) {
      TriangleSpec t;
      t.id = jt.at("id").get<std::string>();
      const auto& angles = jt.at("angles");
      if (angles.size() != 3) throw ParseError("triangle needs exactly 3 angles");
      for (int i = 0; i < 3; ++i) {
        t.shape.angles[i] = AngleForm::parse(angles[i].get<std::string>());
      }
      spec.triangles.push_back(std::move(t));
    }
    for (const auto& jg : j.at("gluings")) {
      if (jg.size() != 4) throw ParseError("gluing needs [id, edge, id, edge]");
      Gluing g;
      g.t0 = spec.triangle_index(jg[0].get<std::string>());
      g.e0 = jg[1].get<int>();
      g.t1 = spec.triangle_index(jg[2].get<std::string>());
      g.e1 = jg[3].get<int>();
      if (g.t0 < 0 || g.t1 < 0) throw ParseError("gluing references unknown triangle id");
      spec.gluings.push_back(g);
    }
    if (j.contains("interior_vertices")) {
      for (const auto& jr : j.at("interior_vertices")) {
        VertexRing ring;
        for (const auto& je : jr) {
          int t = spec.triangle_index(je[0].get<std::string>());
          if (t < 0) throw ParseError("ring references unknown triangle id");
          ring.entries.emplace_back(t, je[1].get<int>());
        }
        spec.interior_vertices.push_back(std::move(ring));
      }
    }
    if (j.contains("metadata")) {
      const auto& meta = j.at("metadata");
      spec.metadata.name = meta.value("name", "");
      spec.metadata.figure = meta.value("figure", "");
      spec.metadata.notes = meta.value("notes", "");
      if (meta.contains("frame")) {
        for (const auto& f : meta.at("frame")) {
          spec.metadata.frame_angles.push_back(f.get<std::string>());
        }
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad diagram json: ") + e.what());
  }
  return spec;
}

std::string report_to_json(const ExistenceReport& rep, int indent) {
  Json j;
  j["exists"] = rep.exists;
  j["symbolic_ok"] = rep.symbolic_ok;
  j["numeric_ok"] = rep.numeric_ok;
  j["normalized_residual"] = rep.normalized_residual;
  j["tolerance"] = rep.tolerance;
  Json shapes = Json::array();
  for (const auto& [id, ok] : rep.shape_verdicts) shapes.push_back({{"id", id}, {"sum_ok", ok}});
  j["shapes"] = shapes;
  Json verts = Json::array();
  for (const auto& v : rep.vertex_verdicts) {
    verts.push_back({{"shapes_ok", v.shapes_ok},
                     {"pivot_sum_ok", v.pivot_sum_ok},
                     {"permutation_ok", v.permutation_ok}});
  }
  j["interior_vertices"] = verts;
  return j.dump(indent);
}

}  // namespace holo
