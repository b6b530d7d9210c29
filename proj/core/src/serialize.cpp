// Copyright 2026 The raylab Authors
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

#include "raylab/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "raylab/errors.hpp"

namespace raylab {

namespace {

using nlohmann::json;

json label_to_json(const RayLabel& l) { return json::array({l.n, l.m}); }

RayLabel label_from_json(const json& j) {
  return RayLabel{j.at(0).get<int>(), j.at(1).get<int>()};
}

json embedding_to_json(const Embedding& e) {
  json steps = json::array();
  for (const ArcStep& s : e.steps) steps.push_back(json::array({s.arc, s.forward}));
  return json{{"steps", std::move(steps)}, {"vertices", e.vertices}};
}

Embedding embedding_from_json(const json& j) {
  Embedding e;
  e.vertices = j.at("vertices").get<std::vector<VertexId>>();
  for (const json& s : j.at("steps"))
    e.steps.push_back(ArcStep{s.at(0).get<int>(), s.at(1).get<bool>()});
  return e;
}

}  // namespace

std::string write_digraph(const Digraph& g) {
  json j;
  j["vertex_count"] = g.original_vertex_count();

  json vertices = json::array();
  for (VertexId v : g.vertices())
    vertices.push_back(json{{"aliases", g.aliases(v)}, {"id", v}});
  j["vertices"] = std::move(vertices);

  json arcs = json::array();
  for (const Arc& a : g.arcs()) {
    json ja{{"arc_index", a.arc_index}, {"head", a.head}, {"tail", a.tail}};
    ja["label"] = a.label ? label_to_json(*a.label) : json(nullptr);
    arcs.push_back(std::move(ja));
  }
  j["arcs"] = std::move(arcs);

  json ids = json::array();
  for (const Identification& id : g.identifications())
    ids.push_back(json{{"members", json::array({id.a, id.b})},
                       {"merged_id", id.merged},
                       {"step", id.step}});
  j["identifications"] = std::move(ids);

  json cons = json::array();
  for (const Constituent& c : g.constituents())
    cons.push_back(json{{"first_vertex", c.first_vertex},
                        {"label", label_to_json(c.label)},
                        {"length", c.length}});
  j["constituents"] = std::move(cons);

  j["pattern"] = g.pattern() ? json(to_string(*g.pattern())) : json(nullptr);
  return j.dump(2) + "\n";
}

Digraph read_digraph(const std::string& text) {
  try {
    const json j = json::parse(text);
    const int count = j.at("vertex_count").get<int>();

    std::vector<Arc> arcs;
    for (const json& ja : j.at("arcs")) {
      Arc a;
      a.tail = ja.at("tail").get<VertexId>();
      a.head = ja.at("head").get<VertexId>();
      a.arc_index = ja.at("arc_index").get<int>();
      if (!ja.at("label").is_null()) a.label = label_from_json(ja.at("label"));
      arcs.push_back(a);
    }

    std::vector<Identification> ids;
    for (const json& ji : j.at("identifications")) {
      Identification id;
      id.step = ji.at("step").get<int>();
      id.merged = ji.at("merged_id").get<VertexId>();
      id.a = ji.at("members").at(0).get<VertexId>();
      id.b = ji.at("members").at(1).get<VertexId>();
      ids.push_back(id);
    }

    std::vector<Constituent> cons;
    for (const json& jc : j.at("constituents")) {
      Constituent c;
      c.label = label_from_json(jc.at("label"));
      c.first_vertex = jc.at("first_vertex").get<VertexId>();
      c.length = jc.at("length").get<int>();
      cons.push_back(c);
    }

    std::optional<RaySpec> pattern;
    if (!j.at("pattern").is_null())
      pattern = parse_ray_spec(j.at("pattern").get<std::string>());

    return make_digraph(count, std::move(arcs), std::move(cons), std::move(ids),
                        std::move(pattern));
  } catch (const json::exception& e) {
    throw ParseError(std::string("digraph file: ") + e.what());
  }
}

std::string write_plan(const IdentificationPlan& plan) {
  json j;
  j["kind"] = plan.kind;
  j["spec"] = plan.spec_text;
  j["reversed"] = plan.reversed;
  j["c"] = plan.c;
  j["max_m"] = plan.max_m;
  j["length"] = plan.length;
  j["requested_steps"] = plan.requested_steps;
  j["completed_steps"] = plan.completed_steps;
  j["stop_reason"] = plan.stop_reason;
  json entries = json::array();
  for (const PlanEntry& e : plan.entries) {
    json je;
    je["step"] = e.step;
    je["g0"] = json{{"label", label_to_json(e.g0_label)}, {"pos", e.g0_pos}};
    je["g1"] = json{{"label", label_to_json(e.g1_label)}, {"pos", e.g1_pos}};
    je["g0_phase_first"] = e.g0_phase_first;
    je["g1_phase_first"] = e.g1_phase_first;
    je["x0"] = e.x0;
    je["z0"] = e.z0;
    je["x1"] = e.x1;
    je["z1"] = e.z1;
    je["m0"] = json::array({e.m0_first, e.m0_len});
    je["m1"] = json::array({e.m1_first, e.m1_len});
    je["distances"] = e.distances;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

IdentificationPlan read_plan(const std::string& text) {
  try {
    const json j = json::parse(text);
    IdentificationPlan plan;
    plan.kind = j.at("kind").get<std::string>();
    plan.spec_text = j.at("spec").get<std::string>();
    plan.reversed = j.at("reversed").get<bool>();
    plan.c = j.at("c").get<int>();
    plan.max_m = j.at("max_m").get<int>();
    plan.length = j.at("length").get<int>();
    plan.requested_steps = j.at("requested_steps").get<int>();
    plan.completed_steps = j.at("completed_steps").get<int>();
    plan.stop_reason = j.at("stop_reason").get<std::string>();
    for (const json& je : j.at("entries")) {
      PlanEntry e;
      e.step = je.at("step").get<int>();
      e.g0_label = label_from_json(je.at("g0").at("label"));
      e.g0_pos = je.at("g0").at("pos").get<int>();
      e.g1_label = label_from_json(je.at("g1").at("label"));
      e.g1_pos = je.at("g1").at("pos").get<int>();
      e.g0_phase_first = je.at("g0_phase_first").get<int>();
      e.g1_phase_first = je.at("g1_phase_first").get<int>();
      e.x0 = je.at("x0").get<int>();
      e.z0 = je.at("z0").get<int>();
      e.x1 = je.at("x1").get<int>();
      e.z1 = je.at("z1").get<int>();
      e.m0_first = je.at("m0").at(0).get<int>();
      e.m0_len = je.at("m0").at(1).get<int>();
      e.m1_first = je.at("m1").at(0).get<int>();
      e.m1_len = je.at("m1").at(1).get<int>();
      const json& d = je.at("distances");
      for (std::size_t k = 0; k < 4; ++k) e.distances[k] = d.at(k).get<int>();
      plan.entries.push_back(std::move(e));
    }
    return plan;
  } catch (const json::exception& e) {
    throw ParseError(std::string("plan file: ") + e.what());
  }
}

std::string write_tribe(const Tribe& tribe) {
  json j;
  j["hat_len"] = tribe.hat_len;
  j["pattern"] = to_string(tribe.pattern);
  json layers = json::array();
  for (const std::vector<Embedding>& layer : tribe.layers) {
    json jl = json::array();
    for (const Embedding& e : layer) jl.push_back(embedding_to_json(e));
    layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(layers);
  return j.dump(2) + "\n";
}

Tribe read_tribe(const std::string& text) {
  try {
    const json j = json::parse(text);
    Tribe t;
    t.hat_len = j.at("hat_len").get<int>();
    t.pattern = parse_ray_spec(j.at("pattern").get<std::string>());
    for (const json& jl : j.at("layers")) {
      std::vector<Embedding> layer;
      for (const json& je : jl) layer.push_back(embedding_from_json(je));
      t.layers.push_back(std::move(layer));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("tribe file: ") + e.what());
  }
}

std::string write_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph raylab {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v : g.vertices())
    if (g.is_identification_vertex(v))
      out << "  " << v << " [shape=doublecircle];\n";
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    const Arc& a = g.arcs()[i];
    out << "  " << g.arc_tail(static_cast<int>(i)) << " -> "
        << g.arc_head(static_cast<int>(i));
    if (a.label)
      out << " [label=\"R(" << a.label->n << "," << a.label->m << ")#" << a.arc_index
          << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace raylab
