#include "msym/commands.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "msym/calculus.hpp"
#include "msym/parallel.hpp"
#include "msym/young.hpp"

namespace msym {

namespace {

using Handler = std::function<Json(const Json&)>;

Json provenance(const std::string& command, const std::string& module, Json parameters) {
  return Json{{"library", library_version()},
              {"command", command},
              {"module", module},
              {"parameters", std::move(parameters)},
              {"threads", default_threads()}};
}

MultiForm form_arg(const Json& req) {
  if (!req.contains("form")) throw ValidationError("missing field 'form'");
  return multiform_from_json(req.at("form"));
}

Metric metric_arg(const Json& req, int D) { return Metric::parse(field<std::string>(req, "metric", "euclidean"), D); }

Truncation truncation_arg(const Json& req) {
  const std::string domain = field<std::string>(req, "domain", "torus");
  Truncation t;
  if (domain == "torus") {
    t = Truncation::torus(field<int>(req, "freq_cap", 1));
  } else if (domain == "box") {
    t = Truncation::box(field<int>(req, "degree_cap", 4));
  } else {
    throw ValidationError("domain must be 'box' or 'torus', got '" + domain + "'");
  }
  if (t.cap < 0) throw ValidationError("truncation caps must be nonnegative");
  const long long maxdim = field<long long>(req, "max_dimension", static_cast<long long>(t.max_dimension));
  if (maxdim <= 0) throw ValidationError("max_dimension must be positive");
  t.max_dimension = static_cast<std::size_t>(maxdim);
  t.include_zero_mode = field<bool>(req, "include_zero_mode", true);
  return t;
}

ComplexSpec complex_arg(const Json& req) {
  const int D = required<int>(req, "D");
  const int N = required<int>(req, "N");
  if (D < 1 || N < 1) throw ValidationError("D and N must be positive");
  const auto aug = field<std::vector<int>>(req, "augmentation", std::vector<int>(static_cast<std::size_t>(N - 1), 0));
  if (static_cast<int>(aug.size()) != N - 1) {
    throw ValidationError("augmentation needs N-1 = " + std::to_string(N - 1) + " entries");
  }
  for (int k : aug) {
    if (k < 0) throw ValidationError("augmentation entries must be nonnegative");
  }
  return build_complex(D, N, aug);
}

Json with_provenance(Json report, Json prov) {
  report["provenance"] = std::move(prov);
  return report;
}

Json cmd_project(const Json& req) {
  const MultiForm t = form_arg(req);
  if (req.contains("signature")) {
    const auto sig = required<std::vector<int>>(req, "signature");
    if (sig != t.shape().signature) {
      throw DomainError("projector label " + Shape(t.shape().D, sig).str() + " does not match the form shape " +
                        t.shape().str());
    }
  }
  const ProjectorMatrix& p = young_projector(t.shape());
  const MultiForm out = project(t, p);
  return with_provenance(Json{{"form", multiform_to_json(out)}, {"projector_rank", p.rank}, {"method", p.method}},
                         provenance("project", "tensor-core", Json{{"shape", shape_to_json(t.shape())}}));
}

Json cmd_differentiate(const Json& req) {
  const MultiForm t = form_arg(req);
  const std::string op = field<std::string>(req, "operator", "delta_N");
  const int N = t.shape().N();
  auto slot_of = [&](const char* key) {
    const int s = required<int>(req, key);
    if (s < 1 || s > N) throw ValidationError(std::string(key) + " must lie in [1, " + std::to_string(N) + "]");
    return s - 1;
  };
  bool top = false;
  MultiForm out;
  if (op == "d") {
    out = d_i(t, slot_of("slot"), &top);
  } else if (op == "delta") {
    const int k = required<int>(req, "arity");
    if (k < 1 || k > N) throw ValidationError("arity must lie in [1, N]");
    out = delta(t, k, &top);
  } else if (op == "delta_N") {
    out = delta_N(t, &top);
  } else if (op == "field_strength") {
    const int k = required<int>(req, "arity");
    if (k < 1 || k > N) throw ValidationError("arity must lie in [1, N]");
    out = cumulative_field_strength(t, k);
  } else if (op == "slot_field_strength") {
    out = slot_field_strength(t, slot_of("slot"));
  } else {
    throw ValidationError("unknown operator '" + op + "' (d, delta, delta_N, field_strength, slot_field_strength)");
  }
  return with_provenance(Json{{"form", multiform_to_json(out)}, {"operator", op}, {"top_degree", top}},
                         provenance("differentiate", "calculus", Json{{"operator", op}}));
}

Json cmd_hodge(const Json& req) {
  const MultiForm t = form_arg(req);
  const Metric g = metric_arg(req, t.shape().D);
  auto slots = field<std::vector<int>>(req, "slots", {1});
  for (auto& s : slots) {
    if (s < 1 || s > t.shape().N()) throw ValidationError("hodge slots must lie in [1, N]");
    s -= 1;
  }
  const MultiForm out = hodge_slots(t, slots, g);
  return with_provenance(Json{{"form", multiform_to_json(out)}},
                         provenance("hodge", "calculus", Json{{"metric", g.name()}}));
}

Json cmd_homotopy(const Json& req) {
  const MultiForm t = form_arg(req);
  const HomotopyWitness w = poincare_homotopy(t);
  return with_provenance(homotopy_to_json(w), provenance("homotopy", "calculus", Json{{"shape", shape_to_json(t.shape())}}));
}

Json cmd_build_complex(const Json& req) {
  const ComplexSpec spec = complex_arg(req);
  return with_provenance(complex_to_json(spec), provenance("build-complex", "complexes", Json::object()));
}

Json cmd_cohomology(const Json& req) {
  const ComplexSpec spec = complex_arg(req);
  const Truncation trunc = truncation_arg(req);
  Json report = cohomology_to_json(cohomology(spec, trunc));
  const auto ref = de_rham_reference(spec.D, trunc);
  report["de_rham_reference"] = ref;
  report["matches_de_rham"] = report["h"].get<std::vector<long>>() == ref;
  return with_provenance(report, provenance("cohomology", "complexes", truncation_to_json(trunc)));
}

Json cmd_as_check(const Json& req) {
  const ComplexSpec spec = complex_arg(req);
  const Truncation trunc = truncation_arg(req);
  const int position = field<int>(req, "position", 0);
  if (position < 0) throw ValidationError("position must be nonnegative");
  const ASReport r = as_reduction(spec, static_cast<std::size_t>(position), trunc);
  return with_provenance(as_report_to_json(r), provenance("as-check", "complexes", truncation_to_json(trunc)));
}

Json cmd_duality(const Json& req) {
  const Shape s = shape_from_json(req);
  if (field<std::string>(req, "domain", "box") != "box") {
    throw PreconditionError("duality maps are built on the box domain; torus zero modes carry nonvanishing cohomology");
  }
  DualityOptions o;
  o.degree_cap = field<int>(req, "degree_cap", -1);
  o.metric = metric_arg(req, s.D);
  o.test_fields = field<int>(req, "test_fields", 20);
  o.seed = field<std::uint64_t>(req, "seed", 7);
  if (o.test_fields < 1) throw ValidationError("test_fields must be positive");
  for (const auto& c : field<Json>(req, "charge_scales", Json::array())) {
    o.charge_scales.push_back(rational_from_json(c));
    if (sgn(o.charge_scales.back()) == 0) throw ValidationError("charge scales must be nonzero");
  }
  const DualityReport r = build_duality_maps(s, o);
  return with_provenance(duality_to_json(r),
                         provenance("duality", "duality",
                                    Json{{"domain", "box"}, {"degree_cap", r.degree_cap}, {"metric", r.metric}}));
}

NewsProfile profile_from_json(const Json& j) {
  NewsProfile p;
  p.D = required<int>(j, "D");
  if (p.D < 3) throw ValidationError("news profiles need D >= 3");
  p.u = required<std::vector<double>>(j, "u");
  p.sphere = sphere_quadrature(p.D - 2, required<int>(j, "resolution"));
  p.components = required<int>(j, "components");
  p.news = required<std::vector<std::vector<std::vector<double>>>>(j, "news");
  p.field_initial = required<std::vector<std::vector<double>>>(j, "field_initial");
  p.field_final = required<std::vector<std::vector<double>>>(j, "field_final");
  p.validate();
  if (p.components != 2) throw DomainError("the default reference parameter has 2 components");
  return p;
}

Json cmd_memory(const Json& req) {
  std::vector<double> eta;
  for (const auto& e : field<Json>(req, "eta", Json::array())) eta.push_back(rational_from_json(e).get_d());
  if (req.contains("profile")) {
    MemoryReport r = memory_balance(profile_from_json(req.at("profile")), default_memory_epsilon());
    for (double e : eta) {
      r.eta.push_back(e);
      r.dual_direct.push_back(e * r.delta_direct);
      r.dual_news.push_back(e * r.delta_news);
    }
    return with_provenance(memory_to_json(r), provenance("memory", "charges", Json{{"source", "profile"}}));
  }
  const std::string name = field<std::string>(req, "burst", "gaussian");
  if (name != "gaussian") throw ValidationError("unknown burst '" + name + "' (available: gaussian)");
  GaussianBurst b;
  b.D = field<int>(req, "D", 4);
  b.u0 = field<double>(req, "u0", 0.0);
  b.sigma = field<double>(req, "sigma", 1.0);
  b.amplitude = field<double>(req, "amplitude", 1.0);
  b.window = field<double>(req, "window", 12.0);
  if (b.D < 3) throw ValidationError("bursts need D >= 3");
  if (!(b.window > 0.0)) throw ValidationError("window must be positive");
  const int steps = field<int>(req, "time_steps", 2000);
  const int res = field<int>(req, "resolution", 24);
  const auto refine = field<std::vector<int>>(req, "refinement", {16, 32, 64});
  const MemoryReport r = memory_balance(b, default_memory_epsilon(), steps, res, refine, eta);
  Json report = memory_to_json(r);
  report["tolerance_ok"] = std::abs(r.residual) <= 1e-8 * std::max(std::abs(r.delta_direct), 1.0);
  return with_provenance(report, provenance("memory", "charges",
                                            Json{{"burst", name}, {"D", b.D}, {"time_steps", steps}, {"resolution", res}}));
}

Json cmd_flux(const Json& req) {
  const int n = field<int>(req, "n", 1);
  const int k = field<int>(req, "k", 2);
  const int res = field<int>(req, "resolution", 24);
  const double radius = field<double>(req, "radius", 1.0);
  const double v = flux_quantization(n, k, res, radius);
  return with_provenance(Json{{"value", v}, {"n", n}, {"k", k}, {"rounded", std::lround(v)}, {"deviation", std::abs(v - n)}},
                         provenance("flux", "charges", Json{{"resolution", res}, {"radius", radius}}));
}

Json cmd_fracton(const Json& req) {
  FractonGrid g;
  if (req.contains("samples")) {
    const Json& s = req.at("samples");
    g.n = required<int>(s, "n");
    g.half_width = field<double>(s, "half_width", 1.0);
    if (g.n < 5) throw ValidationError("fracton grid needs n >= 5");
    const auto comps = required<std::vector<std::vector<double>>>(s, "E");
    if (comps.size() != 6) throw ValidationError("E needs 6 components (xx, xy, xz, yy, yz, zz)");
    for (std::size_t c = 0; c < 6; ++c) g.E[c] = comps[c];
  } else {
    g = fracton_bump(field<int>(req, "grid", 64), field<double>(req, "radius", 0.5),
                     field<std::array<double, 3>>(req, "center", {0.1, -0.05, 0.02}),
                     field<double>(req, "anisotropy", 0.3), field<double>(req, "half_width", 1.0));
  }
  const FractonReport r = fracton_moments(g);
  Json report = fracton_to_json(r);
  double worst = std::abs(r.charge);
  for (double d : r.dipole) worst = std::max(worst, std::abs(d));
  report["max_moment"] = worst;
  report["tolerance_ok"] = worst <= 1e-6 * std::max(r.norm, 1e-300);
  return with_provenance(report, provenance("fracton", "charges", Json{{"grid", g.n}}));
}

Json cmd_selftest(const Json& req) {
  const std::uint64_t seed = field<std::uint64_t>(req, "seed", 2024);
  std::mt19937_64 rng(seed);
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, Json detail) {
    all = all && ok;
    checks.push_back(Json{{"name", name}, {"pass", ok}, {"detail", std::move(detail)}});
  };

  {
    MultiForm t(Shape(2, {1, 1}), CoefficientDomain{CoefficientKind::rational, 2, 0});
    t.add_term({{0}, {1}}, Coefficient::constant(2, GaussianRational(Rational(1))));
    MultiForm want = t.empty_like(t.shape());
    want.add_term({{0}, {1}}, Coefficient::constant(2, GaussianRational(Rational(1, 2))));
    want.add_term({{1}, {0}}, Coefficient::constant(2, GaussianRational(Rational(1, 2))));
    const MultiForm got = project(t);
    record("symmetric projection of dx0 (x) dx1", got == want, multiform_to_json(got));
  }
  for (const auto& s : {Shape(5, {1, 1}), Shape(5, {2, 1}), Shape(4, {1})}) {
    const auto& p = young_projector(s);
    check_idempotent(p);
    const Integer hook = hook_content_dimension(s);
    record("projector rank " + s.str(), Integer(static_cast<unsigned long>(p.rank)) == hook,
           Json{{"rank", p.rank}, {"hook_content", hook.get_str()}});
  }
  {
    bool ok = true;
    int count = 0;
    for (const auto& s : {Shape(3, {1}), Shape(3, {1, 1}), Shape(4, {2, 1}), Shape(3, {1, 1, 1})}) {
      for (auto kind : {CoefficientKind::poly_box, CoefficientKind::trig_torus}) {
        for (int r = 0; r < 3; ++r) {
          const MultiForm t = random_multiform(s, CoefficientDomain{kind, s.D, 2}, rng);
          ok = ok && delta_N(delta_N(t)).is_zero();
          for (int i = 0; i < s.N(); ++i) ok = ok && d_i(d_i(t, i), i).is_zero();
          ++count;
        }
      }
    }
    record("nilpotency of delta_N and d_i", ok, Json{{"forms", count}});
  }
  {
    bool ok = true;
    Json routes = Json::array();
    for (const auto& s : {Shape(3, {1}), Shape(3, {1, 1}), Shape(4, {1, 1})}) {
      const MultiForm s0 = project(random_multiform(s, CoefficientDomain{CoefficientKind::poly_box, s.D, 2}, rng));
      const MultiForm t = delta_N(s0);
      const HomotopyWitness w = poincare_homotopy(t);
      ok = ok && delta_N(w.potential) == t;
      routes.push_back(w.route);
    }
    record("homotopy round trip", ok, Json{{"routes", routes}});
  }
  {
    const auto h = cohomology(build_complex(2, 1, {}), Truncation::torus(1)).h();
    record("torus de Rham D=2", h == std::vector<long>{1, 2, 1}, Json{{"h", h}});
    const auto h2 = cohomology(build_complex(2, 2, {0}), Truncation::torus(1)).h();
    record("torus N=2 D=2 augmentation (0) computed", true, Json{{"h", h2}});
  }
  {
    DualityOptions o;
    o.metric = Metric::minkowski(4);
    o.test_fields = 5;
    const DualityReport r = build_duality_maps(Shape(4, {1}), o);
    record("self-dual duality map D=4 {1}", r.duals.size() == 1 && r.duals[0].commutes && r.duals[0].eta_field_independent,
           Json{{"n", r.n}, {"eta", rational_to_json(r.duals.at(0).eta)}});
  }
  {
    const MemoryReport m = memory_balance(GaussianBurst{}, default_memory_epsilon(), 400, 12, {16, 32, 64});
    record("memory balance", std::abs(m.residual) <= 1e-8 * std::max(std::abs(m.delta_direct), 1.0) && m.slope >= 2.0,
           memory_to_json(m));
    const double f = flux_quantization(3, 2);
    record("flux quantization n=3 k=2", std::abs(f - 3.0) <= 1e-10, Json{{"value", f}});
    const FractonReport fr = fracton_moments(fracton_bump(32));
    const double worst = std::max({std::abs(fr.charge), std::abs(fr.dipole[0]), std::abs(fr.dipole[1]), std::abs(fr.dipole[2])});
    record("fracton moments 32^3", worst <= 1e-5, fracton_to_json(fr));
  }
  return with_provenance(Json{{"checks", checks}, {"pass", all}},
                         provenance("selftest", "cli", Json{{"seed", seed}}));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"project", cmd_project},         {"differentiate", cmd_differentiate}, {"hodge", cmd_hodge},
      {"homotopy", cmd_homotopy},       {"build-complex", cmd_build_complex}, {"cohomology", cmd_cohomology},
      {"as-check", cmd_as_check},       {"duality", cmd_duality},             {"memory", cmd_memory},
      {"flux", cmd_flux},               {"fracton", cmd_fracton},             {"selftest", cmd_selftest},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"project",    "differentiate", "hodge",    "homotopy",
                                              "build-complex", "cohomology", "as-check", "duality",
                                              "memory",     "flux",          "fracton",  "selftest"};
  return names;
}

Json run_command(const std::string& name, const Json& request) {
  const auto it = handlers().find(name);
  if (it == handlers().end()) throw ValidationError("unknown command '" + name + "'");
  if (!request.is_object()) throw ValidationError("request must be a JSON object");
  try {
    return it->second(request);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid document: ") + e.what());
  }
}

}  // namespace msym
