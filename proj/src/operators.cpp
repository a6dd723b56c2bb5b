#include "msym/operators.hpp"

#include <atomic>
#include <cstdlib>

#include "msym/calculus.hpp"
#include "msym/errors.hpp"
#include "msym/parallel.hpp"
#include "msym/young.hpp"

namespace msym {

namespace {

std::atomic<int> g_threads{1};

std::map<Mode, std::size_t> mode_index(const std::vector<Mode>& modes) {
  std::map<Mode, std::size_t> idx;
  for (std::size_t i = 0; i < modes.size(); ++i) idx.emplace(modes[i], i);
  return idx;
}

Rational real_after_phase(const GaussianRational& amp, int phase) {
  const GaussianRational r = amp * i_power(-phase);
  if (sgn(r.im) != 0) throw ConsistencyError("operator entry is not a real multiple of the phase");
  return r.re;
}

}  // namespace

int default_threads() { return g_threads.load(); }
void set_default_threads(int threads) { g_threads.store(std::max(threads, 1)); }

MultiForm principal_element(const Shape& shape, CoefficientKind kind, int cap,
                            const std::vector<Mode>& modes, const SparseVec& coords) {
  const auto& pb = principal_basis(shape);
  const auto& basis = tuple_basis(shape);
  MultiForm out(shape, CoefficientDomain{kind, shape.D, cap});
  const std::size_t nm = modes.size();
  for (const auto& [k, v] : coords) {
    const std::size_t a = k / nm;
    const Mode& m = modes[k % nm];
    for (const auto& [t, w] : pb.vectors[a]) {
      out.add_canonical(basis.tuples[t], Coefficient::mode(m, GaussianRational(v * w)));
    }
  }
  return out;
}

SparseVec full_coordinates(const MultiForm& t, const std::vector<Mode>& modes, int phase) {
  const auto idx = mode_index(modes);
  const auto& basis = tuple_basis(t.shape());
  std::map<std::size_t, Rational> acc;
  for (const auto& [blocks, c] : t.terms()) {
    const std::size_t ti = basis.index.at(blocks);
    for (const auto& [m, amp] : c.modes()) {
      auto it = idx.find(m);
      if (it == idx.end()) throw ConsistencyError("image leaves the truncation");
      acc[ti * modes.size() + it->second] += real_after_phase(amp, phase);
    }
  }
  return to_sparse(acc);
}

DeltaMatrix delta_matrix(const Shape& source, int arity, CoefficientKind kind,
                         const std::vector<Mode>& source_modes, const std::vector<Mode>& target_modes,
                         bool principal_rows) {
  DeltaMatrix dm;
  dm.source = source;
  dm.arity = arity;
  dm.phase = kind == CoefficientKind::trig_torus ? arity : 0;
  const auto& src_pb = principal_basis(source);
  for (int k = 0; k < arity; ++k) {
    if (source.degree(k) == source.D) dm.top_degree = true;
  }
  dm.target = dm.top_degree ? source : shifted(source, 1, 0, arity);
  const std::size_t ncols = src_pb.dimension() * source_modes.size();
  const std::size_t ntm = target_modes.size();
  std::size_t nrows = 0;
  if (!dm.top_degree) {
    nrows = (principal_rows ? principal_basis(dm.target).dimension() : dm.target.tuple_count()) * ntm;
  }
  dm.matrix = SparseMatrix(nrows, ncols);
  if (dm.top_degree || ncols == 0) return dm;
  const auto* tgt_pb = principal_rows ? &principal_basis(dm.target) : nullptr;
  int cap = 0;
  for (const auto& m : source_modes) {
    int d = 0;
    for (int e : m) d = kind == CoefficientKind::poly_box ? d + e : std::max(d, std::abs(e));
    cap = std::max(cap, d);
  }
  dm.matrix.columns = parallel_map(ncols, [&](std::size_t col) {
    SparseVec unit{{col, Rational(1)}};
    MultiForm b = principal_element(source, kind, cap, source_modes, unit);
    MultiForm h = delta(b, arity);
    SparseVec full = full_coordinates(h, target_modes, dm.phase);
    if (!principal_rows) return full;
    // principal coordinates per target mode
    std::vector<SparseVec> per_mode(ntm);
    for (const auto& [k, v] : full) per_mode[k % ntm].emplace_back(k / ntm, v);
    std::map<std::size_t, Rational> acc;
    for (std::size_t m = 0; m < ntm; ++m) {
      if (per_mode[m].empty()) continue;
      for (std::size_t a = 0; a < tgt_pb->dimension(); ++a) {
        Rational y = dot(tgt_pb->coords[a], per_mode[m]);
        if (sgn(y) != 0) acc[a * ntm + m] = y;
      }
    }
    return to_sparse(acc);
  });
  return dm;
}

}  // namespace msym
