#include "u2mp/io.hpp"

#include <algorithm>
#include <cstdint>
#include <json.hpp>

#include "u2mp/error.hpp"

namespace u2mp {

using json = nlohmann::ordered_json;

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Writers.

json q_json(const Rational& q) { return q.to_string(); }
json pt_json(const RationalPoint& p) { return json::array({q_json(p.x), q_json(p.y)}); }
json w_json(const Weight& w) { return json::array({w.a, w.b}); }
json edge_json(const Edge& e) { return json::array({pt_json(e.tail), pt_json(e.head)}); }

json pts_json(const std::vector<RationalPoint>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(pt_json(p));
  return out;
}

json wall_type_json(const WallVertexType& t) {
  return std::visit(overloaded{
                        [](const WallEdgePlus& w) { return json{{"type", "WallEdgePlus"}, {"k", w.k}}; },
                        [](const WallEdgeMinus& w) { return json{{"type", "WallEdgeMinus"}, {"k", w.k}}; },
                        [](const HalfReflPlus& h) { return json{{"type", "HalfReflPlus"}, {"j", h.j}}; },
                        [](const HalfReflMinus& h) { return json{{"type", "HalfReflMinus"}, {"j", h.j}}; },
                        [](const Reflection& r) { return json{{"type", "Reflection"}, {"j", r.j}}; },
                    },
                    t);
}

json family_json(const TriangleFamily& f) {
  json j{{"family", family_name(f)}, {"case", family_case(f)}};
  std::visit(overloaded{
                 [&](const DelzantFamily& d) {
                   j["r"] = q_json(d.r);
                   j["s"] = q_json(d.s);
                   j["t"] = q_json(d.t);
                   j["a1"] = d.a1;
                   j["b1"] = d.b1;
                   j["a2"] = d.a2;
                   j["b2"] = d.b2;
                 },
                 [&](const WallEdgeFamily& w) {
                   j["s"] = q_json(w.s);
                   j["t"] = q_json(w.t);
                   j["k"] = w.k;
                   j["l"] = w.ell;
                 },
                 [&](const HalfReflPlusFamily& h) {
                   j["s"] = q_json(h.s);
                   j["t"] = q_json(h.t);
                   j["j"] = h.j;
                 },
                 [&](const HalfReflMinusFamily& h) {
                   j["s"] = q_json(h.s);
                   j["t"] = q_json(h.t);
                   j["j"] = h.j;
                 },
                 [&](const ReflectionFamily& r) {
                   j["s"] = q_json(r.s);
                   j["t"] = q_json(r.t);
                 },
             },
             f);
  return j;
}

const char* total_space_kind_name(TotalSpaceKind k) {
  switch (k) {
    case TotalSpaceKind::ProjectivizedBundle: return "projectivized-bundle";
    case TotalSpaceKind::ProjectiveRepresentation: return "projective-representation";
    case TotalSpaceKind::OrientedGrassmannian: return "oriented-grassmannian";
  }
  return "?";
}

const char* vertex_kind_name(const VertexKind& k) {
  return std::visit(overloaded{
                        [](const InteriorDelzant&) { return "interior-delzant"; },
                        [](const WallCone&) { return "wall"; },
                        [](const InvalidVertex&) { return "invalid"; },
                    },
                    k);
}

template <class T, class F>
json section_json(const Section<T>& s, F&& body) {
  if (const auto* na = std::get_if<NotApplicable>(&s)) return json{{"not_applicable", na->reason}};
  return body(std::get<T>(s));
}

// Readers.

Rational q_read(const json& j) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail("integer coordinate out of range, write it as a string: " + j.dump());
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail("bad coordinate \"" + j.get<std::string>() + "\": " + e.what());
    }
  }
  fail("coordinate must be an integer or a \"p/q\" string, got " + j.dump());
}

RationalPoint pt_read(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("point must be a pair, got " + j.dump());
  return {q_read(j[0]), q_read(j[1])};
}

std::int64_t int_read(const json& j) {
  if (!j.is_number_integer() || (j.is_number_unsigned() && j.get<std::uint64_t>() > INT64_MAX)) fail("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

bool bool_read(const json& j) {
  if (!j.is_boolean()) fail("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

std::string str_read(const json& j) {
  if (!j.is_string()) fail("expected a string, got " + j.dump());
  return j.get<std::string>();
}

Weight w_read(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("weight must be a pair, got " + j.dump());
  return {int_read(j[0]), int_read(j[1])};
}

Edge edge_read(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("edge must be a pair of points, got " + j.dump());
  return {pt_read(j[0]), pt_read(j[1])};
}

std::vector<RationalPoint> pts_read(const json& j) {
  if (!j.is_array()) fail("expected a list of points");
  std::vector<RationalPoint> out;
  for (const auto& e : j) out.push_back(pt_read(e));
  return out;
}

WallVertexType wall_type_read(const json& j) {
  const std::string t = str_read(at(j, "type"));
  if (t == "WallEdgePlus") return WallEdgePlus{int_read(at(j, "k"))};
  if (t == "WallEdgeMinus") return WallEdgeMinus{int_read(at(j, "k"))};
  if (t == "HalfReflPlus") return HalfReflPlus{int_read(at(j, "j"))};
  if (t == "HalfReflMinus") return HalfReflMinus{int_read(at(j, "j"))};
  if (t == "Reflection") return Reflection{int_read(at(j, "j"))};
  fail("unknown wall type \"" + t + "\"");
}

TriangleFamily family_read(const json& j) {
  const std::string f = str_read(at(j, "family"));
  const Rational s = q_read(at(j, "s"));
  const Rational t = q_read(at(j, "t"));
  if (f == "Delzant") {
    return DelzantFamily{q_read(at(j, "r")),    s, t, int_read(at(j, "a1")), int_read(at(j, "b1")),
                         int_read(at(j, "a2")), int_read(at(j, "b2"))};
  }
  if (f == "WallEdge") return WallEdgeFamily{s, t, int_read(at(j, "k")), static_cast<int>(int_read(at(j, "l")))};
  if (f == "HalfReflPlus") return HalfReflPlusFamily{s, t, int_read(at(j, "j"))};
  if (f == "HalfReflMinus") return HalfReflMinusFamily{s, t, int_read(at(j, "j"))};
  if (f == "Reflection") return ReflectionFamily{s, t};
  fail("unknown family \"" + f + "\"");
}

TotalSpaceKind total_space_kind_read(const json& j) {
  const std::string k = str_read(j);
  for (auto v : {TotalSpaceKind::ProjectivizedBundle, TotalSpaceKind::ProjectiveRepresentation,
                 TotalSpaceKind::OrientedGrassmannian}) {
    if (k == total_space_kind_name(v)) return v;
  }
  fail("unknown total space kind \"" + k + "\"");
}

DiffType diff_type_read(const json& j) {
  const std::string k = str_read(j);
  for (auto v : {DiffType::ProjectiveSpace4, DiffType::OrientedGrassmannian, DiffType::TrivialP2Bundle,
                 DiffType::NontrivialP2Bundle}) {
    if (k == to_string(v)) return v;
  }
  fail("unknown diffeomorphism type \"" + k + "\"");
}

SegmentKind segment_kind_read(const json& j) {
  const std::string k = str_read(j);
  for (auto v : {SegmentKind::Chord, SegmentKind::Edge, SegmentKind::ReflectedEdge, SegmentKind::Cross}) {
    if (k == to_string(v)) return v;
  }
  fail("unknown segment kind \"" + k + "\"");
}

template <class T, class F>
Section<T> section_read(const json& j, F&& body) {
  if (j.is_object() && j.contains("not_applicable")) return NotApplicable{str_read(j.at("not_applicable"))};
  return body(j);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

PolytopeDocument parse_polytope_document(std::string_view text) {
  const json j = parse_json(text);
  const json& vs = at(j, "vertices");
  if (!vs.is_array() || vs.empty()) fail("\"vertices\" must be a non-empty list");
  return {pts_read(vs)};
}

std::string print_polytope_document(const PolytopeDocument& doc) {
  return json{{"vertices", pts_json(doc.vertices)}}.dump(2) + "\n";
}

ReportDocument build_report(const PolytopeDocument& input) {
  if (input.vertices.empty()) throw InputError("polytope document has no vertices");
  ReportDocument rep;
  rep.input = input;
  rep.polygon = convex_hull(input.vertices);
  if (!is_in_chamber(rep.polygon)) {
    throw ChamberError("polygon " + to_string(rep.polygon) + " leaves the Weyl chamber x >= y");
  }
  rep.classification = check_momentum_polytope(rep.polygon);

  if (!rep.classification.valid) {
    const NotApplicable na{"not a momentum polytope"};
    rep.triangle = na;
    rep.kaehler = na;
    rep.fixpoints = na;
    rep.boundary = na;
    rep.diffeo = na;
    rep.xray = na;
    return rep;
  }

  const Polygon& p = rep.polygon;
  const std::size_t walls = wall_vertices(p).size();

  KaehlerSection ks{positive_edges(p), is_kaehlerizable(p)};
  rep.kaehler = ks;
  rep.fixpoints = fixpoint_images(p);

  if (walls == 1) {
    const bool on_boundary = fixpoint_boundary_check(p);
    if (on_boundary != ks.verdict.kaehlerizable) {
      throw InvariantViolation("Kaehler verdict and fixpoint boundary check disagree on " + to_string(p));
    }
    rep.boundary = BoundarySection{on_boundary, true};
  } else {
    rep.boundary = NotApplicable{"needs exactly one wall vertex, found " + std::to_string(walls)};
  }

  if (p.size() == 3) {
    const TriangleFamily fam = classify_triangle(p);
    rep.triangle = manifold_model(fam);
    DiffeoSection ds{diffeo_type(fam, p), std::nullopt};
    if (!std::holds_alternative<WallEdgeFamily>(fam) && !std::holds_alternative<ReflectionFamily>(fam)) {
      ds.chern_mod3 = chern_mod3_at_vertex(p, p.vertex(0));
    }
    rep.diffeo = ds;
    if (!ks.verdict.kaehlerizable) {
      throw InvariantViolation("triangle " + to_string(p) + " reported non-Kaehlerizable");
    }
  } else {
    rep.triangle = NotApplicable{"not a triangle (" + std::to_string(p.size()) + " vertices)"};
    rep.diffeo = NotApplicable{"defined for triangles only"};
  }

  if (walls != 1) {
    rep.xray = NotApplicable{"needs exactly one wall vertex, found " + std::to_string(walls)};
  } else {
    const auto& va = rep.classification.vertex_data[p.index_of(wall_vertices(p).front())];
    const auto& type = std::get<WallCone>(va.kind).type;
    if (std::holds_alternative<WallEdgePlus>(type) || std::holds_alternative<WallEdgeMinus>(type)) {
      rep.xray = NotApplicable{"wall vertex has wall-edge type " + type_name(type)};
    } else {
      rep.xray = build_xray(p);
    }
  }
  return rep;
}

std::string print_report(const ReportDocument& rep) {
  json j;
  j["input"] = json{{"vertices", pts_json(rep.input.vertices)}};
  j["polygon"] = pts_json(rep.polygon.vertices());
  j["dimension"] = dimension(rep.polygon);
  j["valid"] = rep.classification.valid;

  json conds = json::array();
  for (int id = 1; id <= 4; ++id) {
    json c{{"id", id}, {"holds", rep.classification.condition_holds(id)}};
    if (id == 2) c["note"] = "rational by construction";
    conds.push_back(c);
  }
  j["conditions"] = conds;
  json fails = json::array();
  for (const auto& f : rep.classification.failures) fails.push_back({{"condition", f.condition}, {"reason", f.reason}});
  j["failures"] = fails;

  json verts = json::array();
  for (const auto& va : rep.classification.vertex_data) {
    json v{{"vertex", pt_json(va.vertex)},
           {"rays", json::array({w_json(va.rays.first), w_json(va.rays.second)})},
           {"on_wall", va.on_wall},
           {"kind", vertex_kind_name(va.kind)}};
    if (const auto* w = std::get_if<WallCone>(&va.kind)) v["wall_type"] = wall_type_json(w->type);
    if (const auto* bad = std::get_if<InvalidVertex>(&va.kind)) {
      v["condition"] = bad->condition;
      v["reason"] = bad->reason;
    }
    verts.push_back(v);
  }
  j["vertices"] = verts;

  j["triangle"] = section_json(rep.triangle, [](const ManifoldModel& m) {
    json lms = json::array();
    for (const auto& lm : m.local_models) {
      lms.push_back({{"vertex", pt_json(lm.vertex)},
                     {"wall_type", wall_type_json(lm.type)},
                     {"case", lm.table_case},
                     {"variety", lm.variety}});
    }
    json ws = json::array();
    for (const auto& w : m.total_space.weights) ws.push_back(w_json(w));
    return json{{"family", family_json(m.family)},
                {"total_space",
                 {{"kind", total_space_kind_name(m.total_space.kind)},
                  {"weights", ws},
                  {"description", m.total_space.description}}},
                {"u2_manifold", m.u2_manifold_label},
                {"gl2_variety", m.gl2_variety_label},
                {"local_models", lms}};
  });

  j["kaehler"] = section_json(rep.kaehler, [](const KaehlerSection& k) {
    json pos = json::array();
    for (const auto& e : k.positive_edges) pos.push_back(edge_json(e));
    return json{{"kaehlerizable", k.verdict.kaehlerizable},
                {"witness", k.verdict.witness ? edge_json(*k.verdict.witness) : json(nullptr)},
                {"positive_edges", pos}};
  });

  j["fixpoint_images"] = section_json(rep.fixpoints, [](const FixpointImages& f) {
    json pts = json::array();
    for (const auto& [p, m] : f.distinct()) pts.push_back({{"point", pt_json(p)}, {"multiplicity", m}});
    return pts;
  });

  j["fixpoint_boundary"] = section_json(rep.boundary, [](const BoundarySection& b) {
    return json{{"on_boundary", b.fixpoints_on_boundary}, {"agrees_with_kaehler", b.agrees_with_kaehler}};
  });

  j["diffeomorphism_type"] = section_json(rep.diffeo, [](const DiffeoSection& d) {
    return json{{"type", to_string(d.type)}, {"chern_mod3", d.chern_mod3 ? json(*d.chern_mod3) : json(nullptr)}};
  });

  j["xray"] = section_json(rep.xray, [](const XRay& x) {
    json strata = json::array();
    for (const auto& s : x.strata) {
      strata.push_back({{"from", pt_json(s.from)},
                        {"to", pt_json(s.to)},
                        {"dimension", s.stratum_dimension},
                        {"kind", to_string(s.kind)}});
    }
    return json{{"labeled_vertices", pts_json(x.labeled_vertices)}, {"strata", strata}};
  });

  return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
  const json j = parse_json(text);
  ReportDocument rep;
  rep.input.vertices = pts_read(at(at(j, "input"), "vertices"));
  const auto poly = pts_read(at(j, "polygon"));
  if (poly.empty()) fail("\"polygon\" is empty");
  rep.polygon = convex_hull(poly);
  if (rep.polygon.vertices() != poly) fail("\"polygon\" is not in canonical vertex order");

  rep.classification.valid = bool_read(at(j, "valid"));
  for (const auto& f : at(j, "failures")) {
    rep.classification.failures.push_back({static_cast<int>(int_read(at(f, "condition"))), str_read(at(f, "reason"))});
  }
  for (const auto& v : at(j, "vertices")) {
    VertexAnalysis va;
    va.vertex = pt_read(at(v, "vertex"));
    const json& rays = at(v, "rays");
    if (!rays.is_array() || rays.size() != 2) fail("\"rays\" must hold two weights");
    va.rays = {w_read(rays[0]), w_read(rays[1])};
    va.on_wall = bool_read(at(v, "on_wall"));
    const std::string kind = str_read(at(v, "kind"));
    if (kind == "interior-delzant") {
      va.kind = InteriorDelzant{};
    } else if (kind == "wall") {
      va.kind = WallCone{wall_type_read(at(v, "wall_type"))};
    } else if (kind == "invalid") {
      va.kind = InvalidVertex{static_cast<int>(int_read(at(v, "condition"))), str_read(at(v, "reason"))};
    } else {
      fail("unknown vertex kind \"" + kind + "\"");
    }
    rep.classification.vertex_data.push_back(std::move(va));
  }

  rep.triangle = section_read<ManifoldModel>(at(j, "triangle"), [](const json& t) {
    ManifoldModel m;
    m.family = family_read(at(t, "family"));
    const json& ts = at(t, "total_space");
    m.total_space.kind = total_space_kind_read(at(ts, "kind"));
    for (const auto& w : at(ts, "weights")) m.total_space.weights.push_back(w_read(w));
    m.total_space.description = str_read(at(ts, "description"));
    m.u2_manifold_label = str_read(at(t, "u2_manifold"));
    m.gl2_variety_label = str_read(at(t, "gl2_variety"));
    for (const auto& lm : at(t, "local_models")) {
      m.local_models.push_back({pt_read(at(lm, "vertex")), wall_type_read(at(lm, "wall_type")),
                                static_cast<int>(int_read(at(lm, "case"))), str_read(at(lm, "variety"))});
    }
    return m;
  });

  rep.kaehler = section_read<KaehlerSection>(at(j, "kaehler"), [](const json& k) {
    KaehlerSection ks;
    ks.verdict.kaehlerizable = bool_read(at(k, "kaehlerizable"));
    const json& w = at(k, "witness");
    if (!w.is_null()) ks.verdict.witness = edge_read(w);
    for (const auto& e : at(k, "positive_edges")) ks.positive_edges.push_back(edge_read(e));
    return ks;
  });

  rep.fixpoints = section_read<FixpointImages>(at(j, "fixpoint_images"), [](const json& f) {
    if (!f.is_array()) fail("\"fixpoint_images\" must be a list");
    std::vector<RationalPoint> pts;
    for (const auto& e : f) {
      const RationalPoint p = pt_read(at(e, "point"));
      const std::int64_t m = int_read(at(e, "multiplicity"));
      if (m < 1) fail("fixpoint multiplicity must be positive");
      for (std::int64_t i = 0; i < m; ++i) pts.push_back(p);
    }
    return FixpointImages(std::move(pts));
  });

  rep.boundary = section_read<BoundarySection>(at(j, "fixpoint_boundary"), [](const json& b) {
    return BoundarySection{bool_read(at(b, "on_boundary")), bool_read(at(b, "agrees_with_kaehler"))};
  });

  rep.diffeo = section_read<DiffeoSection>(at(j, "diffeomorphism_type"), [](const json& d) {
    DiffeoSection ds{diff_type_read(at(d, "type")), std::nullopt};
    const json& c = at(d, "chern_mod3");
    if (!c.is_null()) ds.chern_mod3 = static_cast<int>(int_read(c));
    return ds;
  });

  const FixpointImages* fp = std::get_if<FixpointImages>(&rep.fixpoints);
  rep.xray = section_read<XRay>(at(j, "xray"), [&](const json& x) {
    if (!fp) fail("\"xray\" present without fixpoint images");
    XRay xr;
    xr.labeled_vertices = pts_read(at(x, "labeled_vertices"));
    xr.fixpoint_images = *fp;
    for (const auto& s : at(x, "strata")) {
      xr.strata.push_back({pt_read(at(s, "from")), pt_read(at(s, "to")), static_cast<int>(int_read(at(s, "dimension"))),
                           segment_kind_read(at(s, "kind"))});
    }
    return xr;
  });
  return rep;
}

}  // namespace u2mp
