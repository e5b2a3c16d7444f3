#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "raca/errors.hpp"
#include "raca/polyhedron.hpp"

namespace raca {

/// A k-cycle of faces in the dual graph with its k crossed primal edges.
struct Circuit {
  std::vector<int> faces;         // in cycle order, smallest face first
  std::vector<int> primal_edges;  // primal_edges[i] separates faces[i] and faces[i+1]

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

namespace detail {

inline bool pairwise_disjoint(const PolyhedronStructure& s, const std::vector<int>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (s.share_vertex(edges[i], edges[j])) return false;
  return true;
}

inline void extend_cycles(const PolyhedronStructure& s, const DualGraph& d, int k,
                          std::vector<int>& path, std::vector<int>& crossed,
                          std::vector<Circuit>& out) {
  const int start = path.front();
  const int last = path.back();
  if (static_cast<int>(path.size()) == k) {
    const int closing = d.edge_between(last, start);
    // Each cycle is found in both directions; keep the one with path[1] < path[k-1].
    if (closing < 0 || path[1] > path.back()) return;
    crossed.push_back(d.edges[static_cast<std::size_t>(closing)].primal_edge);
    if (pairwise_disjoint(s, crossed)) out.push_back({path, crossed});
    crossed.pop_back();
    return;
  }
  for (auto [next, dual_edge] : d.adjacency[static_cast<std::size_t>(last)]) {
    if (next <= start || std::find(path.begin(), path.end(), next) != path.end()) continue;
    path.push_back(next);
    crossed.push_back(d.edges[static_cast<std::size_t>(dual_edge)].primal_edge);
    extend_cycles(s, d, k, path, crossed, out);
    crossed.pop_back();
    path.pop_back();
  }
}

}  // namespace detail

/// Every simple k-cycle of the dual graph whose crossed primal edges are
/// pairwise vertex-disjoint. Sorted by face sequence.
inline std::vector<Circuit> prismatic_circuits(const PolyhedronStructure& s, int k) {
  if (k < 3) throw DomainError("prismatic_circuits: k must be at least 3");
  const DualGraph d = dual_graph(s);
  std::vector<Circuit> out;
  std::vector<int> path;
  std::vector<int> crossed;
  for (int f = 0; f < d.node_count; ++f) {
    path.assign(1, f);
    crossed.clear();
    detail::extend_cycles(s, d, k, path, crossed, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Circuit> prismatic_circuits(const AbstractPolyhedron& p, int k) {
  const auto s = validate_structure(p);
  require_degrees_3_or_4(s);
  return prismatic_circuits(s, k);
}

/// How to read "edges with distinct endpoints" in the third realizability condition.
enum class Condition3Reading {
  EdgesShareNoEndpoint,  // the two edges have four distinct endpoints (default)
  EdgesDistinct,         // the two edges are merely different edges
};

inline const char* to_string(Condition3Reading reading) {
  return reading == Condition3Reading::EdgesShareNoEndpoint ? "edges_share_no_endpoint"
                                                            : "edges_distinct";
}

struct AndreevViolation {
  int condition = 0;               // 1..4
  std::string description;
  std::vector<int> witness_faces;  // face triple (condition 3) or circuit (condition 4)
  std::vector<int> witness_edges;  // crossed primal edges for circuits
};

/// Outcome of the right-angled realizability test.
///
/// `violations` lists every failed condition in condition order, each with one
/// witness. A structural failure (not a valid polyhedron) is reported
/// separately in `structural_error` and leaves `violations` empty.
struct AndreevResult {
  std::optional<ValidationError> structural_error;
  std::vector<AndreevViolation> violations;
  Condition3Reading reading = Condition3Reading::EdgesShareNoEndpoint;

  bool passed() const { return !structural_error && violations.empty(); }

  const AndreevViolation* find(int condition) const {
    for (const auto& v : violations)
      if (v.condition == condition) return &v;
    return nullptr;
  }
};

namespace detail {

inline bool faces_meet(const Face& a, const Face& b) {
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) return true;
  return false;
}

inline std::optional<AndreevViolation> check_condition3(const PolyhedronStructure& s,
                                                        Condition3Reading reading) {
  for (std::size_t j = 0; j < s.faces.size(); ++j) {
    const Face& fj = s.faces[j];
    const std::size_t n = fj.size();
    std::vector<int> boundary;
    for (std::size_t i = 0; i < n; ++i) boundary.push_back(s.edge_index(fj[i], fj[(i + 1) % n]));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        if (reading == Condition3Reading::EdgesShareNoEndpoint && s.share_vertex(boundary[a], boundary[b]))
          continue;
        const Edge& e1 = s.edges[static_cast<std::size_t>(boundary[a])];
        const Edge& e2 = s.edges[static_cast<std::size_t>(boundary[b])];
        const int fi = (e1.face_a == static_cast<int>(j)) ? e1.face_b : e1.face_a;
        const int fk = (e2.face_a == static_cast<int>(j)) ? e2.face_b : e2.face_a;
        if (faces_meet(s.faces[static_cast<std::size_t>(fi)], s.faces[static_cast<std::size_t>(fk)])) {
          return AndreevViolation{3,
                                  "faces " + std::to_string(fi) + " and " + std::to_string(fk) +
                                      " meet although both border face " + std::to_string(j) +
                                      " along separated edges",
                                  {fi, static_cast<int>(j), fk},
                                  {boundary[a], boundary[b]}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Tests the four combinatorial conditions for realizing `p` as a right-angled
/// hyperbolic polyhedron of finite volume:
///   1. at least six faces;
///   2. every vertex has degree 3 or 4;
///   3. if F_i, F_k meet F_j along separated edges then F_i and F_k are disjoint;
///   4. no prismatic 3- or 4-circuits in the dual graph.
inline AndreevResult andreev_check(const PolyhedronStructure& s,
                                   Condition3Reading reading = Condition3Reading::EdgesShareNoEndpoint) {
  AndreevResult result;
  result.reading = reading;
  if (s.faces.size() < 6)
    result.violations.push_back({1, "only " + std::to_string(s.faces.size()) + " faces", {}, {}});

  for (int v = 0; v < s.vertex_count; ++v) {
    if (s.degree(v) != 3 && s.degree(v) != 4) {
      result.violations.push_back(
          {2, "vertex " + std::to_string(v) + " has degree " + std::to_string(s.degree(v)), {}, {}});
      break;
    }
  }

  if (auto violation = detail::check_condition3(s, reading)) result.violations.push_back(*violation);

  for (int k : {3, 4}) {
    const auto circuits = prismatic_circuits(s, k);
    if (!circuits.empty()) {
      result.violations.push_back({4, "prismatic " + std::to_string(k) + "-circuit",
                                   circuits.front().faces, circuits.front().primal_edges});
      break;
    }
  }
  return result;
}

inline AndreevResult andreev_check(const AbstractPolyhedron& p,
                                   Condition3Reading reading = Condition3Reading::EdgesShareNoEndpoint) {
  try {
    return andreev_check(validate_structure(p), reading);
  } catch (const ValidationError& e) {
    AndreevResult result;
    result.reading = reading;
    result.structural_error = e;
    return result;
  }
}

struct FaceCheck {
  bool passed = true;
  int face = -1;          // offending face when !passed
  int ideal_vertices = 0; // degree-4 vertices in that face
};

/// Every triangle must contain at least two degree-4 vertices and every
/// quadrilateral at least one.
inline FaceCheck lemma_rem_check(const PolyhedronStructure& s) {
  for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
    const Face& f = s.faces[fi];
    int ideal = 0;
    for (int v : f)
      if (s.degree(v) == 4) ++ideal;
    const bool bad = (f.size() == 3 && ideal < 2) || (f.size() == 4 && ideal < 1);
    if (bad) return {false, static_cast<int>(fi), ideal};
  }
  return {};
}

inline FaceCheck lemma_rem_check(const AbstractPolyhedron& p) {
  const auto s = validate_structure(p);
  require_degrees_3_or_4(s);
  return lemma_rem_check(s);
}

}  // namespace raca
