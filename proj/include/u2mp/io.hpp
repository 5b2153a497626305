#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "u2mp/classifier.hpp"
#include "u2mp/diffeo.hpp"
#include "u2mp/kaehler.hpp"
#include "u2mp/polygon.hpp"

namespace u2mp {

/// Input document: {"vertices": [[x, y], ...]} with integer or "p/q"
/// coordinates in the (e1, e2) basis.
struct PolytopeDocument {
  std::vector<RationalPoint> vertices;
  friend bool operator==(const PolytopeDocument&, const PolytopeDocument&) = default;
};

/// Throws InputError on malformed text.
PolytopeDocument parse_polytope_document(std::string_view text);
/// Coordinates always as fraction strings.
std::string print_polytope_document(const PolytopeDocument& doc);

struct NotApplicable {
  std::string reason;
  friend bool operator==(const NotApplicable&, const NotApplicable&) = default;
};

template <class T>
using Section = std::variant<T, NotApplicable>;

struct KaehlerSection {
  std::vector<Edge> positive_edges;
  KaehlerVerdict verdict;
  friend bool operator==(const KaehlerSection&, const KaehlerSection&) = default;
};

struct BoundarySection {
  bool fixpoints_on_boundary = false;
  bool agrees_with_kaehler = false;
  friend bool operator==(const BoundarySection&, const BoundarySection&) = default;
};

struct DiffeoSection {
  DiffType type = DiffType::ProjectiveSpace4;
  std::optional<int> chern_mod3;
  friend bool operator==(const DiffeoSection&, const DiffeoSection&) = default;
};

struct ReportDocument {
  PolytopeDocument input;
  Polygon polygon;
  ClassificationReport classification;
  Section<ManifoldModel> triangle;
  Section<KaehlerSection> kaehler;
  Section<FixpointImages> fixpoints;
  Section<BoundarySection> boundary;
  Section<DiffeoSection> diffeo;
  Section<XRay> xray;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Full analysis of the hull of the input vertices. Throws ChamberError if
/// it leaves the chamber and InvariantViolation if a proved equivalence
/// fails.
ReportDocument build_report(const PolytopeDocument& input);

std::string print_report(const ReportDocument& rep);
/// Inverse of print_report. Throws InputError on malformed text.
ReportDocument parse_report(std::string_view text);

}  // namespace u2mp
