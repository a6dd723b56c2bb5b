#include "msym/shape.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "msym/errors.hpp"

namespace msym {

int Shape::boxes() const { return std::accumulate(signature.begin(), signature.end(), 0); }

void Shape::validate() const {
  if (D < 1) throw ValidationError("dimension D must be positive");
  if (signature.empty()) throw ValidationError("signature must have at least one slot");
  for (int p : signature) {
    if (p < 0 || p > D) {
      throw ValidationError("slot degree " + std::to_string(p) + " outside [0, " +
                            std::to_string(D) + "]");
    }
  }
}

bool Shape::weakly_decreasing() const {
  return std::is_sorted(signature.begin(), signature.end(), std::greater<>());
}

void Shape::require_young() const {
  validate();
  if (!weakly_decreasing()) {
    throw ShapeError("signature " + str() + " is not weakly decreasing; no Young diagram");
  }
}

std::size_t Shape::tuple_count() const {
  std::size_t n = 1;
  for (int p : signature) n *= binomial(D, p).get_ui();
  return n;
}

std::string Shape::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(signature[i]);
  }
  return s + "} D=" + std::to_string(D);
}

int canonicalize_block(Block& block, int D) {
  for (int v : block) {
    if (v < 0 || v >= D) {
      throw DomainError("index " + std::to_string(v) + " outside [0, " + std::to_string(D - 1) +
                        "]");
    }
  }
  int sign = 1;
  // insertion sort counting transpositions
  for (std::size_t i = 1; i < block.size(); ++i) {
    for (std::size_t j = i; j > 0 && block[j - 1] > block[j]; --j) {
      std::swap(block[j - 1], block[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < block.size(); ++i) {
    if (block[i] == block[i - 1]) return 0;
  }
  return sign;
}

CanonicalTerm canonicalize(BlockTuple raw, int D) {
  CanonicalTerm t{std::move(raw), 1};
  for (auto& b : t.blocks) {
    const int s = canonicalize_block(b, D);
    if (s == 0) {
      t.sign = 0;
      return t;
    }
    t.sign *= s;
  }
  return t;
}

std::vector<Block> enumerate_blocks(int D, int p) {
  std::vector<Block> out;
  if (p < 0 || p > D) return out;
  Block b(static_cast<std::size_t>(p));
  std::iota(b.begin(), b.end(), 0);
  while (true) {
    out.push_back(b);
    int i = p - 1;
    while (i >= 0 && b[static_cast<std::size_t>(i)] == D - p + i) --i;
    if (i < 0) break;
    ++b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) b[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

const TupleBasis& tuple_basis(const Shape& shape) {
  static std::mutex mutex;
  static std::map<Shape, std::unique_ptr<TupleBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(shape);
  if (it != cache.end()) return *it->second;
  auto basis = std::make_unique<TupleBasis>();
  basis->shape = shape;
  std::vector<std::vector<Block>> per_slot;
  for (int p : shape.signature) per_slot.push_back(enumerate_blocks(shape.D, p));
  std::vector<std::size_t> idx(per_slot.size(), 0);
  bool empty = std::any_of(per_slot.begin(), per_slot.end(),
                           [](const auto& v) { return v.empty(); });
  while (!empty) {
    BlockTuple t;
    t.reserve(per_slot.size());
    for (std::size_t s = 0; s < per_slot.size(); ++s) t.push_back(per_slot[s][idx[s]]);
    basis->index.emplace(t, basis->tuples.size());
    basis->tuples.push_back(std::move(t));
    std::size_t s = per_slot.size();
    while (s > 0) {
      --s;
      if (++idx[s] < per_slot[s].size()) break;
      idx[s] = 0;
      if (s == 0) empty = true;
    }
    if (per_slot.empty()) break;
  }
  auto& ref = *basis;
  cache.emplace(shape, std::move(basis));
  return ref;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<int> young_rows(const Shape& shape) {
  const int height = shape.signature.empty()
                         ? 0
                         : *std::max_element(shape.signature.begin(), shape.signature.end());
  std::vector<int> rows;
  for (int r = 0; r < height; ++r) {
    rows.push_back(static_cast<int>(std::count_if(shape.signature.begin(), shape.signature.end(),
                                                  [r](int p) { return p > r; })));
  }
  return rows;
}

Integer hook_content_dimension(const Shape& shape) {
  shape.require_young();
  const auto rows = young_rows(shape);
  Rational dim = 1;
  for (int c = 0; c < shape.N(); ++c) {
    const int height = shape.signature[static_cast<std::size_t>(c)];
    for (int r = 0; r < height; ++r) {
      const int arm = rows[static_cast<std::size_t>(r)] - c - 1;
      const int leg = height - r - 1;
      Rational f(shape.D + c - r, arm + leg + 1);
      f.canonicalize();
      dim *= f;
    }
  }
  return dim.get_num();
}

Shape shifted(const Shape& shape, int delta, int first, int last) {
  Shape s = shape;
  for (int i = first; i < last; ++i) s.signature[static_cast<std::size_t>(i)] += delta;
  return s;
}

}  // namespace msym
