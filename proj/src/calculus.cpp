#include "msym/calculus.hpp"

#include <algorithm>

#include "msym/errors.hpp"
#include "msym/young.hpp"

namespace msym {

Metric Metric::euclidean(int D) { return {D, std::vector<int>(static_cast<std::size_t>(D), 1)}; }

Metric Metric::minkowski(int D) {
  Metric g = euclidean(D);
  if (D > 0) g.flags[0] = -1;
  return g;
}

Metric Metric::parse(const std::string& name, int D) {
  if (name == "euclidean") return euclidean(D);
  if (name == "minkowski") return minkowski(D);
  throw ValidationError("unknown metric \"" + name + "\"");
}

int Metric::det_sign() const {
  int s = 1;
  for (int f : flags) s *= f;
  return s;
}

std::string Metric::name() const {
  return std::count(flags.begin(), flags.end(), -1) == 0 ? "euclidean" : "minkowski";
}

MultiForm d_i(const MultiForm& t, int slot, bool* top_degree) {
  const Shape& sh = t.shape();
  if (slot < 0 || slot >= sh.N()) throw DomainError("slot out of range");
  const auto s = static_cast<std::size_t>(slot);
  if (sh.signature[s] == sh.D) {
    if (top_degree) *top_degree = true;
    return t.empty_like(sh);
  }
  Shape target = shifted(sh, 1, slot, slot + 1);
  MultiForm out = t.empty_like(target);
  for (const auto& [blocks, c] : t.terms()) {
    const Block& I = blocks[s];
    for (int nu = 0; nu < sh.D; ++nu) {
      if (std::binary_search(I.begin(), I.end(), nu)) continue;
      Coefficient dc = c.derivative(nu, t.domain().kind);
      if (dc.is_zero()) continue;
      const auto pos = std::lower_bound(I.begin(), I.end(), nu) - I.begin();
      BlockTuple nb = blocks;
      nb[s].insert(nb[s].begin() + pos, nu);
      if (pos % 2 != 0) dc *= GaussianRational(Rational(-1));
      out.add_canonical(nb, dc);
    }
  }
  return out;
}

MultiForm d_composite(const MultiForm& t, int arity, bool* top_degree) {
  if (arity < 1 || arity > t.shape().N()) throw DomainError("differential arity out of range");
  bool top = false;
  for (int k = 0; k < arity; ++k) {
    if (t.shape().degree(k) == t.shape().D) top = true;
  }
  if (top) {
    if (top_degree) *top_degree = true;
    return t.empty_like(t.shape());
  }
  MultiForm r = t;
  for (int k = 0; k < arity; ++k) r = d_i(r, k);
  return r;
}

MultiForm delta(const MultiForm& t, int arity, bool* top_degree) {
  bool top = false;
  MultiForm raw = d_composite(t, arity, &top);
  if (top) {
    if (top_degree) *top_degree = true;
    return raw;
  }
  if (!raw.shape().weakly_decreasing()) {
    throw ShapeError("label " + raw.shape().str() + " is not weakly decreasing; not meaningful");
  }
  return project(raw);
}

MultiForm delta_N(const MultiForm& t, bool* top_degree) {
  return delta(t, t.shape().N(), top_degree);
}

MultiForm cumulative_field_strength(const MultiForm& b, int k) {
  if (k < 1 || k > b.shape().N()) throw DomainError("cumulative order out of range");
  Shape label = shifted(b.shape(), 1, 0, k);
  label.validate();
  if (!label.weakly_decreasing()) {
    throw ShapeError("label " + label.str() + " is not weakly decreasing; not meaningful");
  }
  return delta(b, k);
}

MultiForm slot_field_strength(const MultiForm& b, int slot) {
  if (slot < 0 || slot >= b.shape().N()) throw DomainError("slot out of range");
  Shape label = shifted(b.shape(), 1, slot, slot + 1);
  label.validate();
  if (!label.weakly_decreasing()) {
    throw ShapeError("label " + label.str() + " is not weakly decreasing; not meaningful");
  }
  return project(d_i(b, slot));
}

Block complement(const Block& block, int D) {
  Block c;
  for (int mu = 0; mu < D; ++mu) {
    if (!std::binary_search(block.begin(), block.end(), mu)) c.push_back(mu);
  }
  return c;
}

int complement_sign(const Block& block, int D) {
  // inversions of (I, I^c): pairs i in I, j in I^c with i > j
  int inv = 0;
  for (int i : block) {
    for (int j = 0; j < i; ++j) {
      if (!std::binary_search(block.begin(), block.end(), j)) ++inv;
    }
  }
  (void)D;
  return inv % 2 == 0 ? 1 : -1;
}

MultiForm hodge_i(const MultiForm& t, int slot, const Metric& g) {
  const Shape& sh = t.shape();
  if (slot < 0 || slot >= sh.N()) throw DomainError("slot out of range");
  if (g.D != sh.D) throw DomainError("metric dimension differs from D");
  const auto s = static_cast<std::size_t>(slot);
  Shape target = sh;
  target.signature[s] = sh.D - sh.signature[s];
  MultiForm out = t.empty_like(target);
  for (const auto& [blocks, c] : t.terms()) {
    const Block& I = blocks[s];
    int sign = complement_sign(I, sh.D);
    for (int mu : I) sign *= g.flags[static_cast<std::size_t>(mu)];
    BlockTuple nb = blocks;
    nb[s] = complement(I, sh.D);
    out.add_canonical(nb, sign > 0 ? c : c * GaussianRational(Rational(-1)));
  }
  return out;
}

MultiForm hodge_slots(const MultiForm& t, const std::vector<int>& slots, const Metric& g) {
  MultiForm r = t;
  for (int s : slots) r = hodge_i(r, s, g);
  return r;
}

}  // namespace msym
