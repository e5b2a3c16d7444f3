#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "raca/polyhedron.hpp"

namespace raca {

namespace detail {

// Rotation system of an oriented polyhedron: rotation[v] lists the neighbors
// of v in cyclic order, consistently with the face orientation.
inline std::vector<std::vector<int>> rotation_system(const PolyhedronStructure& s) {
  const int n = s.vertex_count;
  // successor[(v, w)] = neighbor of v following w: the vertex after v in the
  // face that traverses w -> v.
  std::vector<std::vector<std::pair<int, int>>> succ(static_cast<std::size_t>(n));
  for (const Face& f : s.faces) {
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int w = f[i];
      const int v = f[(i + 1) % m];
      const int x = f[(i + 2) % m];
      succ[static_cast<std::size_t>(v)].emplace_back(w, x);
    }
  }
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& pairs = succ[static_cast<std::size_t>(v)];
    auto next_of = [&](int w) {
      for (auto [from, to] : pairs)
        if (from == w) return to;
      return -1;
    };
    auto& order = rotation[static_cast<std::size_t>(v)];
    int w = s.neighbors[static_cast<std::size_t>(v)].front();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      order.push_back(w);
      w = next_of(w);
    }
  }
  return rotation;
}

// BFS code of the map from dart (root -> first) in the given orientation.
// Returns false as soon as the code exceeds `best` (when best is non-empty).
inline bool bfs_code(const std::vector<std::vector<int>>& rotation, int root, int first, bool reversed,
                     const std::vector<int>& best, std::vector<int>& code,
                     std::vector<int>* labels_out = nullptr) {
  const int n = static_cast<int>(rotation.size());
  std::vector<int> local_labels;
  std::vector<int>& label = labels_out ? *labels_out : local_labels;
  label.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> entry(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  code.clear();
  label[static_cast<std::size_t>(root)] = 0;
  entry[static_cast<std::size_t>(root)] = first;
  queue.push_back(root);
  bool tied = !best.empty();
  auto emit = [&](int value) {
    const std::size_t pos = code.size();
    code.push_back(value);
    if (tied) {
      if (value > best[pos]) return false;
      if (value < best[pos]) tied = false;
    }
    return true;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const auto& rot = rotation[static_cast<std::size_t>(v)];
    const int d = static_cast<int>(rot.size());
    int start = 0;
    while (rot[static_cast<std::size_t>(start)] != entry[static_cast<std::size_t>(v)]) ++start;
    for (int k = 0; k < d; ++k) {
      const int idx = reversed ? (start - k + d) % d : (start + k) % d;
      const int w = rot[static_cast<std::size_t>(idx)];
      if (label[static_cast<std::size_t>(w)] < 0) {
        label[static_cast<std::size_t>(w)] = static_cast<int>(queue.size());
        entry[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
      if (!emit(label[static_cast<std::size_t>(w)] + 1)) return false;
    }
    if (!emit(0)) return false;
  }
  return true;
}

struct BestCode {
  std::vector<int> code;
  int root = 0;
  int first = 0;
  bool reversed = false;
};

inline BestCode best_code(const PolyhedronStructure& s) {
  const auto rotation = rotation_system(s);
  BestCode best;
  std::vector<int> code;
  for (int v = 0; v < s.vertex_count; ++v) {
    for (int w : s.neighbors[static_cast<std::size_t>(v)]) {
      for (bool reversed : {false, true}) {
        if (bfs_code(rotation, v, w, reversed, best.code, code) &&
            (best.code.empty() || code < best.code))
          best = {code, v, w, reversed};
      }
    }
  }
  return best;
}

}  // namespace detail

/// Printable canonical certificate of a polyhedron's incidence structure.
///
/// The lexicographically smallest breadth-first code over all starting darts
/// and both orientations, so it is invariant under vertex relabeling and under
/// reflection. For 3-connected polyhedra the faces are determined by the
/// 1-skeleton, so equal certificates mean isomorphic polyhedra.
inline std::string canonical_form(const PolyhedronStructure& s) {
  const std::vector<int> best = detail::best_code(s).code;
  std::string out = "V" + std::to_string(s.vertex_count) + "E" + std::to_string(s.edges.size()) + ":";
  bool first_in_group = true;
  for (int value : best) {
    if (value == 0) {
      out += '|';
      first_in_group = true;
      continue;
    }
    if (!first_in_group) out += '.';
    out += std::to_string(value - 1);
    first_in_group = false;
  }
  if (!out.empty() && out.back() == '|') out.pop_back();
  return out;
}

inline std::string canonical_form(const AbstractPolyhedron& p) {
  return canonical_form(validate_structure(p));
}

inline bool is_isomorphic(const AbstractPolyhedron& p, const AbstractPolyhedron& q) {
  return canonical_form(p) == canonical_form(q);
}

/// The polyhedron relabeled by its canonical numbering, with every face
/// starting at its smallest vertex and faces sorted. Isomorphic inputs give
/// identical outputs.
inline AbstractPolyhedron canonical_polyhedron(const PolyhedronStructure& s) {
  const auto best = detail::best_code(s);
  const auto rotation = detail::rotation_system(s);
  std::vector<int> labels;
  std::vector<int> code;
  detail::bfs_code(rotation, best.root, best.first, best.reversed, {}, code, &labels);
  std::vector<Face> faces;
  for (const Face& f : s.faces) {
    Face g;
    for (int v : f) g.push_back(labels[static_cast<std::size_t>(v)]);
    // Canonical orientation: the root's first neighbor follows the root in
    // the non-reversed rotation, so mirror faces when the best code was reversed.
    if (best.reversed) std::reverse(g.begin(), g.end());
    std::rotate(g.begin(), std::min_element(g.begin(), g.end()), g.end());
    faces.push_back(std::move(g));
  }
  std::sort(faces.begin(), faces.end());
  return {s.vertex_count, std::move(faces)};
}

inline AbstractPolyhedron canonical_polyhedron(const AbstractPolyhedron& p) {
  return canonical_polyhedron(validate_structure(p));
}

}  // namespace raca
