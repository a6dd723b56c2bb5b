#include "msym/complexes.hpp"

#include <algorithm>
#include <numeric>

#include "msym/errors.hpp"
#include "msym/parallel.hpp"
#include "msym/young.hpp"

namespace msym {

namespace {

struct Block1 {
  std::string label;
  bool zero_mode = false;
  int degree = 0;  // box
  Mode freq;       // torus
};

std::vector<Block1> truncation_blocks(int D, const Truncation& trunc) {
  std::vector<Block1> out;
  if (trunc.kind == CoefficientKind::trig_torus) {
    for (const auto& k : frequencies(D, trunc.cap)) {
      const bool zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
      if (zero && !trunc.include_zero_mode) continue;
      out.push_back({"k=" + mode_label(k), zero, 0, k});
    }
  } else if (trunc.kind == CoefficientKind::poly_box) {
    for (int e = 0; e <= trunc.cap; ++e) out.push_back({"degree " + std::to_string(e), false, e, {}});
  } else {
    throw ValidationError("truncations need a box or torus domain");
  }
  return out;
}

std::vector<Mode> block_modes(int D, const Truncation& trunc, const Block1& b, int shift) {
  if (trunc.kind == CoefficientKind::trig_torus) return {b.freq};
  return monomials_of_degree(D, b.degree + shift);
}

std::size_t count_modes(int D, const Truncation& trunc) {
  if (trunc.kind == CoefficientKind::trig_torus) {
    std::size_t n = 1;
    for (int i = 0; i < D; ++i) n *= static_cast<std::size_t>(2 * trunc.cap + 1);
    return n;
  }
  return binomial(D + trunc.cap, D).get_ui();
}

int leading_nonzero(const Shape& s) {
  return static_cast<int>(std::count_if(s.signature.begin(), s.signature.end(), [](int p) { return p > 0; }));
}

std::string group_name(const Shape& s) {
  std::string g = "H^{";
  for (std::size_t i = 0; i < s.signature.size(); ++i) {
    if (i) g += ",";
    g += std::to_string(s.signature[i]);
  }
  return g + "}";
}

std::vector<Mode> all_modes(int D, const Truncation& trunc, int max_degree) {
  std::vector<Mode> modes;
  if (trunc.kind == CoefficientKind::trig_torus) {
    for (const auto& b : truncation_blocks(D, trunc)) modes.push_back(b.freq);
  } else {
    for (int e = 0; e <= max_degree; ++e) {
      for (auto& m : monomials_of_degree(D, e)) modes.push_back(std::move(m));
    }
  }
  return modes;
}

}  // namespace

std::string mode_label(const Mode& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

std::string Truncation::describe() const {
  if (kind == CoefficientKind::trig_torus) {
    return std::string("torus freq_cap=") + std::to_string(cap) + (include_zero_mode ? "" : " nonzero-modes");
  }
  return "box degree_cap=" + std::to_string(cap);
}

ComplexSpec build_complex(int D, int N, const std::vector<int>& augmentation) {
  if (D < 1) throw ValidationError("D must be positive");
  if (N < 1) throw ValidationError("N must be positive");
  if (static_cast<int>(augmentation.size()) != N - 1) {
    throw ValidationError("augmentation needs N-1 = " + std::to_string(N - 1) + " entries");
  }
  if (std::any_of(augmentation.begin(), augmentation.end(), [](int k) { return k < 0; })) {
    throw ValidationError("augmentation entries must be nonnegative");
  }
  ComplexSpec spec;
  spec.D = D;
  spec.N = N;
  spec.augmentation = augmentation;
  if (N == 1) {
    for (int p = 0; p <= D; ++p) spec.nodes.emplace_back(D, std::vector<int>{p});
    spec.edges.assign(static_cast<std::size_t>(D), 1);
    return spec;
  }
  const int K = std::accumulate(augmentation.begin(), augmentation.end(), 0);
  if (K > D) {
    throw PreconditionError("augmentation length " + std::to_string(K) + " exceeds D = " + std::to_string(D));
  }
  const ComplexSpec sub =
      build_complex(D, N - 1, std::vector<int>(augmentation.begin(), augmentation.end() - 1));
  for (int j = 0; j <= K; ++j) {
    Shape s = sub.nodes[static_cast<std::size_t>(j)];
    s.signature.push_back(0);
    spec.nodes.push_back(std::move(s));
    if (j < K) spec.edges.push_back(sub.edges[static_cast<std::size_t>(j)]);
  }
  for (int j = K; j < D; ++j) {
    spec.nodes.push_back(shifted(spec.nodes.back(), 1, 0, N));
    spec.edges.push_back(N);
  }
  for (const auto& s : spec.nodes) s.require_young();
  return spec;
}

std::size_t truncated_dimension(const ComplexSpec& spec, const Truncation& trunc) {
  const std::size_t modes = count_modes(spec.D, trunc);
  Integer total = 0;
  for (const auto& s : spec.nodes) total += hook_content_dimension(s) * Integer(static_cast<unsigned long>(modes));
  if (total > Integer(static_cast<unsigned long>(trunc.max_dimension))) {
    throw ResourceError("truncated basis dimension " + total.get_str() + " exceeds the cap " +
                        std::to_string(trunc.max_dimension));
  }
  return total.get_ui();
}

DeltaMatrix assemble_operator(const ComplexSpec& spec, std::size_t edge, const Truncation& trunc) {
  if (edge >= spec.edges.size()) throw DomainError("edge index out of range");
  truncated_dimension(spec, trunc);
  const auto modes = all_modes(spec.D, trunc, trunc.cap);
  return delta_matrix(spec.nodes[edge], spec.edges[edge], trunc.kind, modes, modes, true);
}

PositionReport position_cohomology(const ComplexSpec& spec, std::size_t position, const Truncation& trunc) {
  if (position >= spec.nodes.size()) throw DomainError("position out of range");
  truncated_dimension(spec, trunc);
  const Shape& p = spec.nodes[position];
  const int i = leading_nonzero(p);
  PositionReport rep;
  rep.position = position;
  rep.shape = p;
  rep.closure_arity = std::min(i + 1, spec.N);
  rep.exactness_arity = i;
  const Shape lower = shifted(p, -1, 0, i);
  const auto blocks = truncation_blocks(spec.D, trunc);
  const std::size_t pdim = principal_basis(p).dimension();
  rep.blocks = parallel_map(blocks.size(), [&](std::size_t bi) {
    const Block1& b = blocks[bi];
    BlockDims d;
    d.label = b.label;
    d.zero_mode = b.zero_mode;
    const auto here = block_modes(spec.D, trunc, b, 0);
    d.dim = pdim * here.size();
    const DeltaMatrix z = delta_matrix(p, rep.closure_arity, trunc.kind, here,
                                       block_modes(spec.D, trunc, b, -rep.closure_arity), true);
    d.kernel = d.dim - rank(z.matrix);
    if (i > 0) {
      const DeltaMatrix bm = delta_matrix(lower, i, trunc.kind, block_modes(spec.D, trunc, b, i), here, true);
      d.image = rank(bm.matrix);
      if (!multiply(z.matrix, bm.matrix).is_zero()) {
        throw ConsistencyError("coboundaries are not cocycles at position " + std::to_string(position));
      }
    }
    d.h = static_cast<long>(d.kernel) - static_cast<long>(d.image);
    return d;
  });
  for (const auto& d : rep.blocks) {
    rep.dim += d.dim;
    rep.kernel += d.kernel;
    rep.image += d.image;
    rep.h += d.h;
    (d.zero_mode ? rep.zero_mode_h : rep.nonzero_h) += d.h;
  }
  // one-slot complexes are exact away from the zero frequency
  if (spec.N == 1 && trunc.kind == CoefficientKind::trig_torus && rep.nonzero_h != 0) {
    throw ConsistencyError("nonzero-frequency cohomology at position " + std::to_string(position));
  }
  return rep;
}

std::vector<long> CohomologyReport::h() const {
  std::vector<long> out;
  for (const auto& p : positions) out.push_back(p.h);
  return out;
}

CohomologyReport cohomology(const ComplexSpec& spec, const Truncation& trunc) {
  CohomologyReport rep;
  rep.spec = spec;
  rep.trunc = trunc;
  truncated_dimension(spec, trunc);
  for (std::size_t j = 0; j < spec.nodes.size(); ++j) rep.positions.push_back(position_cohomology(spec, j, trunc));
  return rep;
}

std::vector<long> cohomology_unsplit(const ComplexSpec& spec, const Truncation& trunc) {
  if (trunc.kind != CoefficientKind::trig_torus) throw DomainError("unsplit check is defined on the torus");
  truncated_dimension(spec, trunc);
  const auto modes = all_modes(spec.D, trunc, trunc.cap);
  std::vector<long> h;
  for (const auto& p : spec.nodes) {
    const int i = leading_nonzero(p);
    const DeltaMatrix z = delta_matrix(p, std::min(i + 1, spec.N), trunc.kind, modes, modes, true);
    long hv = static_cast<long>(z.matrix.cols) - static_cast<long>(rank(z.matrix));
    if (i > 0) hv -= static_cast<long>(rank(delta_matrix(shifted(p, -1, 0, i), i, trunc.kind, modes, modes, true).matrix));
    h.push_back(hv);
  }
  return h;
}

std::vector<long> de_rham_reference(int D, const Truncation& trunc) {
  return cohomology(build_complex(D, 1, {}), trunc).h();
}

ASReport as_reduction(const ComplexSpec& spec, std::size_t position, const Truncation& trunc) {
  if (position + 1 >= spec.nodes.size()) throw DomainError("as-check needs a position with an outgoing edge");
  ASReport rep;
  rep.position = position;
  rep.source = spec.nodes[position];
  rep.arity = spec.edges[position];
  for (std::size_t j : {position, position + 1}) {
    const PositionReport pr = position_cohomology(spec, j, trunc);
    for (const auto& b : pr.blocks) {
      rep.gate.push_back({group_name(pr.shape), b.label, b.h});
      if (b.h != 0) {
        throw PreconditionError("nonvanishing cohomology " + group_name(pr.shape) + " in block " + b.label +
                                ": dimension " + std::to_string(b.h) +
                                "; the differential is not an isomorphism on the AS spaces");
      }
    }
  }
  const auto modes = all_modes(spec.D, trunc, trunc.cap);
  const DeltaMatrix dm = delta_matrix(rep.source, rep.arity, trunc.kind, modes, modes, true);
  rep.target = dm.target;
  const auto piv = independent_columns(dm.matrix);
  SparseMatrix restricted(dm.matrix.rows, piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k) restricted.columns[k] = dm.matrix.columns[piv[k]];
  rep.source_dimension = piv.size();
  rep.target_dimension = rank(dm.matrix);
  rep.rank = bareiss_rank(restricted);
  rep.bijection = rep.rank == rep.source_dimension && rep.rank == rep.target_dimension;
  if (!rep.bijection) throw ConsistencyError("restricted differential is not a bijection");
  for (std::size_t c : piv) {
    rep.source_basis.push_back("v" + std::to_string(c / modes.size()) + "*" + mode_label(modes[c % modes.size()]));
  }
  return rep;
}

}  // namespace msym
