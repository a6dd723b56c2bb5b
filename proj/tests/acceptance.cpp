#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "msym/calculus.hpp"
#include "msym/charges.hpp"
#include "msym/complexes.hpp"
#include "msym/duality.hpp"
#include "msym/homotopy.hpp"
#include "msym/young.hpp"
#include "oracles.hpp"

using namespace msym;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> random_signature(std::mt19937_64& rng, int D, int N, int lo, int hi) {
  std::vector<int> sig;
  int cap = hi;
  for (int i = 0; i < N; ++i) {
    std::uniform_int_distribution<int> p(lo, std::max(lo, cap));
    sig.push_back(p(rng));
    cap = sig.back();
  }
  (void)D;
  return sig;
}

// 1. d_i d_i = 0, d_i d_j = d_j d_i, delta_N delta_N = 0
Outcome nilpotency() {
  std::mt19937_64 rng(101);
  std::size_t forms = 0, failures = 0;
  for (int N = 1; N <= 3; ++N) {
    for (int D = 2; D <= 5; ++D) {
      for (int r = 0; r < 50; ++r) {
        const Shape s(D, random_signature(rng, D, N, 0, D - 1));
        const CoefficientDomain dom = (r % 2) ? CoefficientDomain{CoefficientKind::trig_torus, D, 1}
                                              : CoefficientDomain{CoefficientKind::poly_box, D, 3};
        const MultiForm t = random_multiform(s, dom, rng);
        bool ok = delta_N(delta_N(t)).is_zero();
        for (int i = 0; i < N; ++i) {
          const MultiForm di = d_i(t, i);
          ok = ok && d_i(di, i).is_zero();
          for (int j = i + 1; j < N; ++j) ok = ok && d_i(di, j) == d_i(d_i(t, j), i);
        }
        ++forms;
        if (!ok) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(forms) + " forms, " + std::to_string(failures) + " violations"};
}

void partitions(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// 2. P^2 = P, rank equals hook content; symmetrizer oracle for two labels
Outcome projectors() {
  std::size_t shapes = 0, failures = 0;
  std::string notes;
  for (int D = 1; D <= 5; ++D) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      partitions(n, D, cur, parts);
      for (const auto& sig : parts) {
        const Shape s(D, sig);
        const ProjectorMatrix& p = young_projector(s);
        const bool idem = multiply(p.matrix, p.matrix).columns == p.matrix.columns;
        const bool rank_ok = mpz_class(static_cast<unsigned long>(p.rank)) == oracle::hook_content(D, sig);
        ++shapes;
        if (!idem || !rank_ok) {
          ++failures;
          notes += " " + s.str();
        }
      }
    }
  }
  const std::size_t r11 = young_projector(Shape(5, {1, 1})).rank;
  const std::size_t r21 = young_projector(Shape(5, {2, 1})).rank;
  const std::size_t o11 = oracle::young_symmetrizer_rank(5, {1, 1});
  const std::size_t o21 = oracle::young_symmetrizer_rank(5, {2, 1});
  const bool named = r11 == o11 && r21 == o21 && o11 == 15 && o21 == 40;
  return {failures == 0 && named, std::to_string(shapes) + " shapes, " + std::to_string(failures) +
                                      " failures" + notes + "; D=5 {1,1} rank " + std::to_string(r11) +
                                      " (oracle " + std::to_string(o11) + "), {2,1} rank " + std::to_string(r21) +
                                      " (oracle " + std::to_string(o21) + ")"};
}

// 3. delta_N(homotopy(T)) = T for T = delta_N(S0)
Outcome homotopy_roundtrip() {
  std::mt19937_64 rng(303);
  int cases = 0, failures = 0, descent = 0;
  while (cases < 100) {
    const int N = 1 + static_cast<int>(rng() % 2);
    const int D = 2 + static_cast<int>(rng() % 3);
    const Shape s(D, random_signature(rng, D, N, 1, D - 1));
    const MultiForm s0 = project(random_multiform(s, {CoefficientKind::poly_box, D, 3 + N}, rng));
    const MultiForm t = delta_N(s0);
    if (t.is_zero() || t.max_degree() > 3) continue;
    ++cases;
    try {
      const HomotopyWitness w = poincare_homotopy(t);
      if (!(delta_N(w.potential) == t)) ++failures;
      if (w.route == "descent") ++descent;
    } catch (const std::exception& e) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, " +
                             std::to_string(descent) + " by descent alone, " + std::to_string(cases - descent) +
                             " completed by the graded solve"};
}

// 4. torus N=2 complexes vs the de Rham reference
Outcome torus_cohomology() {
  bool pass = true;
  std::string d;
  for (int D = 2; D <= 3; ++D) {
    const auto betti = oracle::torus_betti(D);
    const auto ref = de_rham_reference(D, Truncation::torus(1));
    pass = pass && ref == betti;
    d += "D=" + std::to_string(D) + " reference " + join(ref) + " (Betti " + join(betti) + ")";
    for (int k = 0; k <= 1; ++k) {
      const auto h = cohomology(build_complex(D, 2, {k}), Truncation::torus(1)).h();
      pass = pass && h == ref;
      d += "; aug (" + std::to_string(k) + ") " + join(h);
    }
    d += D == 2 ? " | " : "";
  }
  return {pass, d};
}

// 5. box spine positions with all degrees >= 1 are acyclic
Outcome box_triviality() {
  bool pass = true;
  std::string bad;
  int checked = 0;
  for (int N = 1; N <= 2; ++N) {
    for (int D = 1; D <= 4; ++D) {
      for (int k = 0; k <= (N == 2 ? D : 0); ++k) {
        if (N == 2 && D < 2) continue;
        const ComplexSpec spec = build_complex(D, N, N == 2 ? std::vector<int>{k} : std::vector<int>{});
        for (int cap : {4, 5}) {
          if (cap == 5 && D == 4) continue;
          const CohomologyReport r = cohomology(spec, Truncation::box(cap));
          for (const auto& p : r.positions) {
            bool spine = true;
            for (int q : p.shape.signature) spine = spine && q >= 1;
            if (!spine) continue;
            ++checked;
            if (p.h != 0) {
              pass = false;
              if (bad.size() < 400) {
                bad += " D=" + std::to_string(D) + " N=" + std::to_string(N) + " aug(" + std::to_string(k) +
                       ") cap " + std::to_string(cap) + " " + p.shape.str() + " h=" + std::to_string(p.h) + ";";
              }
            }
          }
        }
      }
    }
  }
  return {pass, std::to_string(checked) + " positions checked" + (pass ? "" : "; nonzero:" + bad)};
}

// 6. duality maps
Outcome duality() {
  bool pass = true;
  std::string d;
  {
    DualityOptions o;
    o.metric = Metric::minkowski(5);
    o.test_fields = 20;
    const DualityReport r = build_duality_maps(Shape(5, {1, 1}), o);
    pass = pass && r.duals.size() == 2 && r.duals[0].shape.signature == std::vector<int>{2, 1} &&
           r.duals[1].shape.signature == std::vector<int>{2, 2};
    d += "D=5 {1,1}: n=" + std::to_string(r.n);
    for (const auto& x : r.duals) {
      const bool ok = x.f.rank() == r.n && x.commutes && x.independent_route && x.eta_field_independent &&
                      x.inverse_roundtrip && x.restriction_unique && x.sample_q0.size() == 20;
      pass = pass && ok;
      d += "; " + x.shape.str() + " eta=" + format_rational(x.eta) + (ok ? " ok" : " FAILED");
    }
  }
  {
    DualityOptions o;
    o.metric = Metric::minkowski(4);
    const DualityReport r = build_duality_maps(Shape(4, {1}), o);
    const auto& x = r.duals.at(0);
    bool tri = true;
    for (std::size_t i = 0; i < x.f_triangular.rows; ++i) {
      for (std::size_t j = i + 1; j < x.f_triangular.cols; ++j) tri = tri && sgn(x.f_triangular(i, j)) == 0;
    }
    const bool ok = r.duals.size() == 1 && x.shape == Shape(4, {1}) && x.f.rank() == r.n && x.commutes && tri &&
                    x.f_triangular(0, 0) == x.eta && x.eta_field_independent && x.inverse_roundtrip;
    pass = pass && ok;
    d += " | D=4 {1}: self-dual, n=" + std::to_string(r.n) + " eta=" + format_rational(x.eta) + (ok ? " ok" : " FAILED");
  }
  return {pass, d};
}

int run_cli(const std::string& args, std::string* output) {
  const std::string tmp = "acceptance_cli_output.txt";
  const std::string cmd = std::string(MSYM_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  if (output) *output = ss.str();
  std::remove(tmp.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 7. precondition behavior through the CLI exit codes
Outcome preconditions() {
  std::string out1, out2;
  const int rc1 = run_cli("as-check -D 2 -N 1 --position 1 --domain torus --freq-cap 1", &out1);
  const int rc2 = run_cli("duality -D 5 -s 2,2", &out2);
  const bool named = out1.find("H^{1}") != std::string::npos && out1.find("(0,0)") != std::string::npos;
  const bool hyp = out2.find("p_k") != std::string::npos;
  return {rc1 == 3 && named && rc2 == 3 && hyp,
          "as-check torus exit " + std::to_string(rc1) + (named ? " naming H^{1} in block k=(0,0)" : " (group not named)") +
              "; duality D=5 {2,2} exit " + std::to_string(rc2)};
}

// 8. memory balance
Outcome memory() {
  const MemoryReport r = memory_balance(GaussianBurst{}, default_memory_epsilon());
  const double analytic = 16.0 * std::numbers::pi / 15.0;
  const double tol = 1e-8 * std::max(std::abs(r.delta_direct), 1.0);
  const bool pass = std::abs(r.residual) <= tol && r.slope >= 2.0 && std::abs(r.delta_direct - analytic) <= 1e-10;
  char buf[256];
  std::snprintf(buf, sizeof buf, "dQ_direct=%.15g dQ_news=%.15g residual=%.3e (tol %.1e) slope=%.2f analytic=%.15g",
                r.delta_direct, r.delta_news, r.residual, tol, r.slope, analytic);
  return {pass, buf};
}

// 9. flux quantization
Outcome flux() {
  double worst = 0.0;
  for (int k = 2; k <= 4; ++k) {
    for (int n = -10; n <= 10; ++n) worst = std::max(worst, std::abs(flux_quantization(n, k) - n));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "63 cases, max deviation %.3e", worst);
  return {worst <= 1e-8, buf};
}

// 10. fracton moments
Outcome fracton() {
  const FractonReport r = fracton_moments(fracton_bump(64));
  double worst = std::abs(r.charge);
  for (double x : r.dipole) worst = std::max(worst, std::abs(x));
  char buf[160];
  std::snprintf(buf, sizeof buf, "64^3: |Q|=%.3e max|dipole|=%.3e |E|=%.4f", std::abs(r.charge),
                std::max({std::abs(r.dipole[0]), std::abs(r.dipole[1]), std::abs(r.dipole[2])}), r.norm);
  return {!r.boundary_warning && worst <= 1e-6 * r.norm, buf};
}

// 11. determinism of the CLI selftest
Outcome determinism() {
  const std::string a = "acceptance_selftest_a.json", b = "acceptance_selftest_b.json";
  const int rc1 = run_cli("selftest --threads 1 --out " + a, nullptr);
  const int rc2 = run_cli("selftest --threads 1 --out " + b, nullptr);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string x = slurp(a), y = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  return {rc1 == 0 && rc2 == 0 && !x.empty() && x == y,
          "exit codes " + std::to_string(rc1) + "," + std::to_string(rc2) + "; " + std::to_string(x.size()) +
              " bytes, " + (x == y ? "identical" : "different")};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"nilpotency suite", 60, nilpotency},
      {"projector suite", 60, projectors},
      {"homotopy round trip", 120, homotopy_roundtrip},
      {"torus cohomology vs de Rham reference", 120, torus_cohomology},
      {"box-domain triviality", 60, box_triviality},
      {"duality suite", 120, duality},
      {"precondition behavior", 60, preconditions},
      {"memory balance", 30, memory},
      {"flux quantization", 10, flux},
      {"fracton moments", 30, fracton},
      {"determinism", 60, determinism},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--criterion") only = std::atoi(argv[i + 1]);
  }
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::cerr << "criterion must be in 1.." << all.size() << "\n";
    return 2;
  }
  bool ok = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= all[i].budget_seconds;
    const bool pass = o.pass && in_budget;
    ok = ok && pass;
    std::printf("criterion %zu %s: %s [%.2fs of %.0fs] %s\n", i + 1, all[i].name, pass ? "PASS" : "FAIL", secs,
                all[i].budget_seconds, o.detail.c_str());
  }
  return ok ? 0 : 1;
}
