#include "msym/io.hpp"

namespace msym {

const char* library_version() { return "msym 0.1.0"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw ValidationError("rational numbers must be \"num/den\" strings or integers, got " + j.dump());
}

Json shape_to_json(const Shape& s) { return Json{{"D", s.D}, {"signature", s.signature}}; }

Shape shape_from_json(const Json& j) {
  Shape s(required<int>(j, "D"), required<std::vector<int>>(j, "signature"));
  s.validate();
  return s;
}

Json domain_to_json(const CoefficientDomain& d) {
  Json out{{"kind", kind_name(d.kind)}};
  if (d.kind == CoefficientKind::poly_box) out["degree_cap"] = d.cap;
  if (d.kind == CoefficientKind::trig_torus) out["freq_cap"] = d.cap;
  return out;
}

CoefficientDomain domain_from_json(const Json& j, int D) {
  CoefficientDomain d;
  d.D = D;
  d.kind = parse_kind(required<std::string>(j, "kind"));
  if (d.kind == CoefficientKind::poly_box) d.cap = required<int>(j, "degree_cap");
  if (d.kind == CoefficientKind::trig_torus) d.cap = required<int>(j, "freq_cap");
  if (d.cap < 0) throw ValidationError("coefficient caps must be nonnegative");
  return d;
}

Json coefficient_to_json(const Coefficient& c, CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::rational: {
      if (c.is_zero()) return "0/1";
      return rational_to_json(c.modes().begin()->second.re);
    }
    case CoefficientKind::poly_box: {
      Json arr = Json::array();
      for (const auto& [m, a] : c.modes()) arr.push_back(Json{{"exp", m}, {"c", rational_to_json(a.re)}});
      return arr;
    }
    case CoefficientKind::trig_torus: {
      Json arr = Json::array();
      for (const auto& [m, a] : c.modes()) {
        arr.push_back(Json{{"freq", m}, {"re", rational_to_json(a.re)}, {"im", rational_to_json(a.im)}});
      }
      return arr;
    }
  }
  return nullptr;
}

Coefficient coefficient_from_json(const Json& j, const CoefficientDomain& d) {
  Coefficient c;
  if (d.kind == CoefficientKind::rational) {
    c.add(Mode(static_cast<std::size_t>(d.D), 0), GaussianRational(rational_from_json(j)));
    return c;
  }
  if (!j.is_array()) throw ValidationError("coefficient must be a list of modes");
  for (const auto& e : j) {
    if (d.kind == CoefficientKind::poly_box) {
      const auto m = required<Mode>(e, "exp");
      if (e.contains("im")) throw ValidationError("polynomial coefficients are real");
      c.add(m, GaussianRational(rational_from_json(e.contains("c") ? e.at("c") : Json("0"))));
    } else {
      const auto m = required<Mode>(e, "freq");
      c.add(m, GaussianRational(rational_from_json(e.contains("re") ? e.at("re") : Json("0")),
                                rational_from_json(e.contains("im") ? e.at("im") : Json("0"))));
    }
  }
  c.validate(d);
  return c;
}

Json multiform_to_json(const MultiForm& t) {
  Json terms = Json::array();
  for (const auto& [b, c] : t.terms()) terms.push_back(Json{{"blocks", b}, {"coeff", coefficient_to_json(c, t.domain().kind)}});
  return Json{{"D", t.shape().D},
              {"signature", t.shape().signature},
              {"coefficient_domain", domain_to_json(t.domain())},
              {"terms", terms}};
}

MultiForm multiform_from_json(const Json& j) {
  const Shape s = shape_from_json(j);
  if (!j.contains("coefficient_domain")) throw ValidationError("missing field 'coefficient_domain'");
  const CoefficientDomain d = domain_from_json(j.at("coefficient_domain"), s.D);
  MultiForm t(s, d);
  const Json terms = field<Json>(j, "terms", Json::array());
  if (!terms.is_array()) throw ValidationError("'terms' must be a list");
  for (const auto& term : terms) {
    const auto blocks = required<BlockTuple>(term, "blocks");
    if (!term.contains("coeff")) throw ValidationError("term without 'coeff'");
    t.add_term(blocks, coefficient_from_json(term.at("coeff"), d));
  }
  t.validate();
  return t;
}

Json matrix_to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols; ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json complex_to_json(const ComplexSpec& spec) {
  Json nodes = Json::array();
  for (const auto& s : spec.nodes) nodes.push_back(s.signature);
  return Json{{"D", spec.D}, {"N", spec.N}, {"augmentation", spec.augmentation}, {"nodes", nodes}, {"edges", spec.edges}};
}

Json truncation_to_json(const Truncation& t) {
  Json out{{"domain", t.kind == CoefficientKind::trig_torus ? "torus" : "box"},
           {"max_dimension", t.max_dimension},
           {"include_zero_mode", t.include_zero_mode},
           {"description", t.describe()}};
  out[t.kind == CoefficientKind::trig_torus ? "freq_cap" : "degree_cap"] = t.cap;
  return out;
}

Json cohomology_to_json(const CohomologyReport& r) {
  Json positions = Json::array();
  for (const auto& p : r.positions) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks) {
      blocks.push_back(Json{{"label", b.label}, {"zero_mode", b.zero_mode}, {"dim", b.dim},
                            {"kernel", b.kernel}, {"image", b.image}, {"h", b.h}});
    }
    positions.push_back(Json{{"position", p.position},
                             {"signature", p.shape.signature},
                             {"closure_arity", p.closure_arity},
                             {"exactness_arity", p.exactness_arity},
                             {"dim", p.dim},
                             {"kernel", p.kernel},
                             {"image", p.image},
                             {"h", p.h},
                             {"zero_mode_h", p.zero_mode_h},
                             {"nonzero_h", p.nonzero_h},
                             {"blocks", blocks}});
  }
  return Json{{"complex", complex_to_json(r.spec)}, {"truncation", truncation_to_json(r.trunc)},
              {"positions", positions}, {"h", r.h()}};
}

Json as_report_to_json(const ASReport& r) {
  Json gate = Json::array();
  for (const auto& g : r.gate) gate.push_back(Json{{"group", g.group}, {"block", g.block}, {"h", g.h}});
  return Json{{"position", r.position},
              {"source", shape_to_json(r.source)},
              {"target", shape_to_json(r.target)},
              {"arity", r.arity},
              {"gate", gate},
              {"source_dimension", r.source_dimension},
              {"target_dimension", r.target_dimension},
              {"rank", r.rank},
              {"bijection", r.bijection},
              {"source_basis", r.source_basis}};
}

Json homotopy_to_json(const HomotopyWitness& w) {
  return Json{{"potential", multiform_to_json(w.potential)},
              {"target", multiform_to_json(w.target)},
              {"route", w.route},
              {"descent_steps", w.descent_steps},
              {"verified", true}};
}

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

}  // namespace

Json duality_to_json(const DualityReport& r) {
  Json duals = Json::array();
  for (const auto& d : r.duals) {
    duals.push_back(Json{{"shape", shape_to_json(d.shape)},
                         {"gauge_as_dimension", d.gauge_as_dimension},
                         {"conjugated_hodge", matrix_to_json(d.conjugated_hodge)},
                         {"encoding", matrix_to_json(d.encoding.stack)},
                         {"selected_coordinates", d.encoding.selected},
                         {"f", matrix_to_json(d.f)},
                         {"f_triangular", matrix_to_json(d.f_triangular)},
                         {"eta", rational_to_json(d.eta)},
                         {"commutes", d.commutes},
                         {"commutativity_residual", d.commutes ? "0" : "nonzero"},
                         {"independent_route", d.independent_route},
                         {"eta_field_independent", d.eta_field_independent},
                         {"restriction_unique", d.restriction_unique},
                         {"inverse_roundtrip", d.inverse_roundtrip},
                         {"sample_q0", rationals(d.sample_q0)},
                         {"sample_qi", rationals(d.sample_qi)}});
  }
  return Json{{"shape", shape_to_json(r.shape)},
              {"degree_cap", r.degree_cap},
              {"metric", r.metric},
              {"gauge_as_dimension", r.gauge_as_dimension},
              {"field_strength_dimension", r.field_strength_dimension},
              {"n", r.n},
              {"r", r.duals.size()},
              {"encoding0", matrix_to_json(r.encoding0.stack)},
              {"duals", duals},
              {"certificates", r.certificates}};
}

Json memory_to_json(const MemoryReport& r) {
  Json table = Json::array();
  for (const auto& row : r.refinement) {
    table.push_back(Json{{"time_steps", row.time_steps}, {"delta_direct", row.delta_direct},
                         {"delta_news", row.delta_news}, {"residual", row.residual}});
  }
  Json out{{"delta_direct", r.delta_direct}, {"delta_news", r.delta_news}, {"residual", r.residual},
           {"refinement", table}, {"slope", r.slope}};
  if (!r.eta.empty()) {
    Json dual = Json::array();
    for (std::size_t i = 0; i < r.eta.size(); ++i) {
      dual.push_back(Json{{"eta", r.eta[i]}, {"delta_direct", r.dual_direct[i]}, {"delta_news", r.dual_news[i]}});
    }
    out["dual_channels"] = dual;
  }
  return out;
}

Json fracton_to_json(const FractonReport& r) {
  return Json{{"charge", r.charge}, {"dipole", r.dipole}, {"norm", r.norm},
              {"boundary_warning", r.boundary_warning}, {"status", r.status}};
}

}  // namespace msym
