#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "raca/errors.hpp"
#include "raca/surd.hpp"

namespace raca {

/// Symmetric Coxeter matrix; kInfiniteLabel stands for m = ∞.
class CoxeterMatrix {
public:
  static constexpr int kInfiniteLabel = 0;

  CoxeterMatrix(int size, std::vector<int> labels) : size_(size), labels_(std::move(labels)) {
    if (size < 1) throw InputError("Coxeter matrix must have at least one row");
    if (labels_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
      throw InputError("Coxeter matrix has the wrong number of entries");
    for (int i = 0; i < size; ++i) {
      if (at(i, i) != 1) throw InputError("Coxeter matrix diagonal must be 1");
      for (int j = 0; j < size; ++j) {
        if (at(i, j) != at(j, i)) throw InputError("Coxeter matrix must be symmetric");
        if (i != j && at(i, j) != kInfiniteLabel && at(i, j) < 2)
          throw InputError("off-diagonal Coxeter labels must be >= 2 or infinite");
      }
    }
  }

  /// Linear diagram f_1 - f_2 - ... with the given labels between consecutive
  /// nodes; all other pairs are orthogonal (label 2).
  static CoxeterMatrix path(const std::vector<int>& consecutive) {
    const int n = static_cast<int>(consecutive.size()) + 1;
    std::vector<int> m(static_cast<std::size_t>(n * n), 2);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    for (int i = 0; i + 1 < n; ++i) {
      m[static_cast<std::size_t>(i * n + i + 1)] = consecutive[static_cast<std::size_t>(i)];
      m[static_cast<std::size_t>((i + 1) * n + i)] = consecutive[static_cast<std::size_t>(i)];
    }
    return {n, std::move(m)};
  }

  int size() const { return size_; }
  int at(int i, int j) const { return labels_[static_cast<std::size_t>(i * size_ + j)]; }

private:
  int size_;
  std::vector<int> labels_;
};

/// The doubled Gram matrix 2·A with exact entries.
class ExactGramMatrix {
public:
  ExactGramMatrix(int size, std::vector<SurdInteger> entries) : size_(size), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
      throw InputError("Gram matrix has the wrong number of entries");
    for (int i = 0; i < size; ++i) {
      if (!(at(i, i) == SurdInteger(2))) throw InputError("doubled Gram matrix diagonal must be 2");
      for (int j = 0; j < i; ++j)
        if (!(at(i, j) == at(j, i))) throw InputError("Gram matrix must be symmetric");
    }
  }

  int size() const { return size_; }
  const SurdInteger& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * size_ + j)]; }

  /// Same matrix with row/column i moved to position permutation[i].
  ExactGramMatrix permuted(const std::vector<int>& permutation) const {
    std::vector<SurdInteger> out(entries_.size());
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j)
        out[static_cast<std::size_t>(permutation[static_cast<std::size_t>(i)] * size_ +
                                     permutation[static_cast<std::size_t>(j)])] = at(i, j);
    return {size_, std::move(out)};
  }

private:
  int size_;
  std::vector<SurdInteger> entries_;
};

/// -2cos(π/m) for the labels whose value lies in ℤ[√2, √3].
inline SurdInteger doubled_gram_entry(int label) {
  switch (label) {
    case 2: return 0;
    case 3: return -1;
    case 4: return -SurdInteger::sqrt2();
    case 6: return -SurdInteger::sqrt3();
    case CoxeterMatrix::kInfiniteLabel: return -2;
    default:
      throw DomainError("label " + std::to_string(label) + ": entry outside Z[sqrt2,sqrt3]");
  }
}

inline ExactGramMatrix gram_from_coxeter(const CoxeterMatrix& m) {
  const int n = m.size();
  std::vector<SurdInteger> entries(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries[static_cast<std::size_t>(i * n + j)] = (i == j) ? SurdInteger(2) : doubled_gram_entry(m.at(i, j));
  return {n, std::move(entries)};
}

struct CyclicProduct {
  std::vector<int> cycle;  // i_1, ..., i_m; the product closes back to i_1
  SurdInteger product;
};

/// Calls `visit` for every simple cycle of length 2..max_len in the graph of
/// nonzero off-diagonal entries, in both orientations, in lexicographic order
/// of the vertex sequence. Stops early when `visit` returns false.
template <class Visit>
void for_each_cyclic_product(const ExactGramMatrix& g, int max_len, Visit&& visit) {
  const int n = g.size();
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  bool stop = false;
  const auto extend = [&](auto&& self, const SurdInteger& partial) -> void {
    const int start = path.front();
    const int last = path.back();
    for (int w = start; w < n && !stop; ++w) {
      if (g.at(last, w).is_zero() || w == last) continue;
      if (w == start) {
        if (path.size() < 2) continue;
        // A 2-cycle i -> j -> i is its own reverse; count it once.
        if (path.size() == 2 && path[1] < start) continue;
        if (!visit(CyclicProduct{path, partial * g.at(last, start)})) stop = true;
        continue;
      }
      if (on_path[static_cast<std::size_t>(w)] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      self(self, partial * g.at(last, w));
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (int s = 0; s < n && !stop; ++s) {
    path.assign(1, s);
    on_path.assign(static_cast<std::size_t>(n), 0);
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(extend, SurdInteger(1));
  }
}

/// Set of products a_{i1 i2} a_{i2 i3} ... a_{im i1} over simple cycles of
/// length 2..max_len.
inline std::set<SurdInteger> cyclic_products(const ExactGramMatrix& g, int max_len) {
  if (max_len < 2) throw DomainError("cyclic_products: max_len must be at least 2");
  std::set<SurdInteger> out;
  for_each_cyclic_product(g, max_len, [&](const CyclicProduct& c) {
    out.insert(c.product);
    return true;
  });
  return out;
}

struct ArithmeticityResult {
  bool arithmetic = true;
  std::optional<CyclicProduct> witness;  // first non-integral cyclic product
  std::size_t cycles_checked = 0;
};

/// Integrality test for all cyclic products of the doubled Gram matrix. This is
/// an arithmeticity criterion only for groups with a non-compact fundamental
/// polyhedron; that hypothesis is the caller's responsibility.
inline ArithmeticityResult is_arithmetic_noncocompact(const ExactGramMatrix& g, int max_len) {
  if (max_len < 2) throw DomainError("is_arithmetic_noncocompact: max_len must be at least 2");
  ArithmeticityResult result;
  for_each_cyclic_product(g, max_len, [&](const CyclicProduct& c) {
    ++result.cycles_checked;
    if (c.product.is_rational_integer()) return true;
    result.arithmetic = false;
    result.witness = c;
    return false;
  });
  return result;
}

inline ArithmeticityResult is_arithmetic_noncocompact(const ExactGramMatrix& g) {
  return is_arithmetic_noncocompact(g, std::max(2, g.size()));
}

}  // namespace raca
