#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msym/msym.h"

namespace {

using Json = nlohmann::json;

struct Options {
  std::string domain;
  std::optional<int> degree_cap;
  std::optional<int> freq_cap;
  std::string metric;
  int threads = 1;
  std::string out;
  std::string request_file;
  std::string input;
  std::string profile;
  std::string samples;
  std::vector<int> signature;
  std::vector<int> augmentation;
  std::vector<int> slots;
  std::vector<int> refinement;
  std::vector<std::string> charge_scales;
  std::vector<std::string> eta;
  std::vector<double> center;
  std::optional<int> D, N, position, arity, slot, test_fields, time_steps, resolution, grid, quantum, codimension;
  std::optional<long long> max_dimension;
  std::optional<unsigned long long> seed;
  std::optional<double> sigma, amplitude, radius, anisotropy;
  std::string op;
  std::string burst;
  bool exclude_zero_mode = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

Json build_request(const std::string& cmd, const Options& o) {
  Json req = o.request_file.empty() ? Json::object() : read_json_file(o.request_file);
  if (!o.input.empty()) req["form"] = read_json_file(o.input);
  if (!o.profile.empty()) req["profile"] = read_json_file(o.profile);
  if (!o.samples.empty()) req["samples"] = read_json_file(o.samples);
  if (!o.domain.empty()) req["domain"] = o.domain;
  if (!o.metric.empty()) req["metric"] = o.metric;
  put(req, "degree_cap", o.degree_cap);
  put(req, "freq_cap", o.freq_cap);
  put(req, "D", o.D);
  put(req, "N", o.N);
  put(req, "position", o.position);
  put(req, "arity", o.arity);
  put(req, "slot", o.slot);
  put(req, "test_fields", o.test_fields);
  put(req, "time_steps", o.time_steps);
  put(req, "resolution", o.resolution);
  put(req, "grid", o.grid);
  put(req, "n", o.quantum);
  put(req, "k", o.codimension);
  put(req, "max_dimension", o.max_dimension);
  put(req, "seed", o.seed);
  put(req, "sigma", o.sigma);
  put(req, "amplitude", o.amplitude);
  put(req, "radius", o.radius);
  put(req, "anisotropy", o.anisotropy);
  if (!o.signature.empty()) req["signature"] = o.signature;
  if (!o.augmentation.empty()) req["augmentation"] = o.augmentation;
  if (!o.slots.empty()) req["slots"] = o.slots;
  if (!o.refinement.empty()) req["refinement"] = o.refinement;
  if (!o.charge_scales.empty()) req["charge_scales"] = o.charge_scales;
  if (!o.eta.empty()) req["eta"] = o.eta;
  if (!o.center.empty()) req["center"] = o.center;
  if (!o.op.empty()) req["operator"] = o.op;
  if (!o.burst.empty()) req["burst"] = o.burst;
  if (o.exclude_zero_mode) req["include_zero_mode"] = false;
  if (cmd == "build-complex" || cmd == "cohomology" || cmd == "as-check") {
    if (!req.contains("augmentation") && req.contains("N") && req["N"].is_number_integer() && req["N"].get<int>() > 1) {
      req["augmentation"] = std::vector<int>(static_cast<std::size_t>(req["N"].get<int>() - 1), 0);
    }
  }
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed-symmetry tensor calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--domain", o.domain, "Coefficient domain")->check(CLI::IsMember({"box", "torus"}));
  app.add_option("--degree-cap", o.degree_cap, "Polynomial degree cap (box)");
  app.add_option("--freq-cap", o.freq_cap, "Frequency cap K (torus)");
  app.add_option("--metric", o.metric, "Flat metric signature")->check(CLI::IsMember({"euclidean", "minkowski"}));
  app.add_option("--threads", o.threads, "Worker threads (1 = deterministic sequential)")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write the report to this file instead of stdout");
  app.add_option("--request", o.request_file, "JSON request document; flags override its fields");

  auto form_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("-i,--input", o.input, "Multiform document")->check(CLI::ExistingFile);
    return sc;
  };
  auto complex_opts = [&](CLI::App* sc) {
    sc->add_option("-D,--dim", o.D, "Spacetime dimension");
    sc->add_option("-N,--slots-count", o.N, "Number of slots");
    sc->add_option("-a,--augmentation", o.augmentation, "Augmentation k_1..k_{N-1}")->delimiter(',');
  };

  auto* project = form_cmd("project", "Young-project a multiform onto its principal subspace");
  project->add_option("-s,--signature", o.signature, "Young label; must match the form")->delimiter(',');
  auto* diff = form_cmd("differentiate", "Apply d_i, delta^(k), delta_N or a field strength");
  diff->add_option("--operator", o.op, "d | delta | delta_N | field_strength | slot_field_strength");
  diff->add_option("--slot", o.slot, "Slot (1-based)");
  diff->add_option("--arity", o.arity, "Arity k");
  auto* hodge = form_cmd("hodge", "Hodge star on selected slots");
  hodge->add_option("--slots", o.slots, "Slots (1-based)")->delimiter(',');
  form_cmd("homotopy", "Potential of a closed polynomial multiform");
  complex_opts(app.add_subcommand("build-complex", "Nodes and edges of an augmented complex"));
  auto* coh = app.add_subcommand("cohomology", "Exact cohomology dimensions at a truncation");
  complex_opts(coh);
  coh->add_option("--max-dimension", o.max_dimension, "Resource guard on the truncated dimension");
  coh->add_flag("--exclude-zero-mode", o.exclude_zero_mode, "Drop the torus zero-frequency block");
  auto* as = app.add_subcommand("as-check", "Cohomology gate and bijection of delta_N on AS spaces");
  complex_opts(as);
  as->add_option("--position", o.position, "Node index (0-based)");
  as->add_option("--max-dimension", o.max_dimension, "Resource guard on the truncated dimension");
  as->add_flag("--exclude-zero-mode", o.exclude_zero_mode, "Drop the torus zero-frequency block");
  auto* dual = app.add_subcommand("duality", "Duality maps between dual descriptions");
  dual->add_option("-D,--dim", o.D, "Spacetime dimension");
  dual->add_option("-s,--signature", o.signature, "Gauge field signature")->delimiter(',');
  dual->add_option("--charge-scales", o.charge_scales, "Scale c_i of each dual reference parameter")->delimiter(',');
  dual->add_option("--test-fields", o.test_fields, "Random test fields");
  dual->add_option("--seed", o.seed, "Random seed");
  auto* mem = app.add_subcommand("memory", "Memory-effect balance law");
  mem->add_option("--burst", o.burst, "Named synthetic burst (gaussian)");
  mem->add_option("--profile", o.profile, "Sampled news profile document")->check(CLI::ExistingFile);
  mem->add_option("-D,--dim", o.D, "Spacetime dimension");
  mem->add_option("--sigma", o.sigma, "Burst width");
  mem->add_option("--amplitude", o.amplitude, "Burst amplitude");
  mem->add_option("--time-steps", o.time_steps, "Simpson subdivisions");
  mem->add_option("--resolution", o.resolution, "Angular resolution");
  mem->add_option("--refinement", o.refinement, "Coarse subdivisions for the slope study")->delimiter(',');
  mem->add_option("--eta", o.eta, "Duality ratios of dual channels")->delimiter(',');
  auto* flux = app.add_subcommand("flux", "Flux quantization over S^{k-1}");
  flux->add_option("-n,--quantum", o.quantum, "Integer flux n");
  flux->add_option("-k,--codimension", o.codimension, "Codimension k >= 2");
  flux->add_option("--resolution", o.resolution, "Angular resolution");
  flux->add_option("--radius", o.radius, "Sphere radius");
  auto* frac = app.add_subcommand("fracton", "Charge and dipole moments of d_i d_j E^ij");
  frac->add_option("--grid", o.grid, "Grid points per axis");
  frac->add_option("--radius", o.radius, "Bump radius");
  frac->add_option("--anisotropy", o.anisotropy, "Off-diagonal admixture");
  frac->add_option("--center", o.center, "Bump center x,y,z")->delimiter(',')->expected(3);
  frac->add_option("--samples", o.samples, "Sampled field document")->check(CLI::ExistingFile);
  auto* self = app.add_subcommand("selftest", "Deterministic battery of small checks");
  self->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  Json request;
  try {
    request = build_request(cmd, o);
  } catch (const std::exception& e) {
    std::cerr << "msym: " << e.what() << "\n";
    return 2;
  }

  msym_context* ctx = nullptr;
  if (msym_context_create(&ctx) != MSYM_OK) {
    std::cerr << "msym: cannot create context\n";
    return 4;
  }
  msym_set_threads(ctx, o.threads);
  char* out = nullptr;
  const int rc = msym_command(ctx, cmd.c_str(), request.dump().c_str(), &out);
  const std::string text = out ? out : "";
  msym_string_free(out);
  if (rc != MSYM_OK) {
    std::cerr << "msym: " << msym_last_error(ctx) << "\n";
    std::cout << text;
  } else if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "msym: cannot write '" << o.out << "'\n";
      msym_context_destroy(ctx);
      return 4;
    }
  } else {
    std::cout << text;
  }
  msym_context_destroy(ctx);
  return rc;
}
