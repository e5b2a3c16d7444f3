#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raca {

using Face = std::vector<int>;

/// A combinatorial polyhedron given by its faces as cyclic vertex lists.
///
/// The value is immutable and may describe an invalid complex; use
/// validate_structure() or validate() to check it.
class AbstractPolyhedron {
public:
  AbstractPolyhedron() = default;
  AbstractPolyhedron(int vertex_count, std::vector<Face> faces)
      : vertex_count_(vertex_count), faces_(std::move(faces)) {}

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  /// Same polyhedron with vertex i renamed to permutation[i].
  AbstractPolyhedron relabeled(const std::vector<int>& permutation) const {
    std::vector<Face> faces = faces_;
    for (auto& f : faces)
      for (int& v : f) v = permutation.at(static_cast<std::size_t>(v));
    return {vertex_count_, std::move(faces)};
  }

  /// Mirror image: every face traversed in the opposite direction.
  AbstractPolyhedron mirrored() const {
    std::vector<Face> faces = faces_;
    for (auto& f : faces) std::reverse(f.begin(), f.end());
    return {vertex_count_, std::move(faces)};
  }

private:
  int vertex_count_ = 0;
  std::vector<Face> faces_;
};

enum class ValidationCode {
  BadIndex,
  DegenerateFace,
  EdgeNotInTwoFaces,
  MultiAdjacentFaces,
  NonManifoldVertex,
  NonOrientable,
  Disconnected,
  EulerFailure,
  NotThreeConnected,
  BadVertexDegree,
};

inline const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::BadIndex: return "bad_index";
    case ValidationCode::DegenerateFace: return "degenerate_face";
    case ValidationCode::EdgeNotInTwoFaces: return "edge_not_in_two_faces";
    case ValidationCode::MultiAdjacentFaces: return "multi_adjacent_faces";
    case ValidationCode::NonManifoldVertex: return "non_manifold_vertex";
    case ValidationCode::NonOrientable: return "non_orientable";
    case ValidationCode::Disconnected: return "disconnected";
    case ValidationCode::EulerFailure: return "euler_failure";
    case ValidationCode::NotThreeConnected: return "not_three_connected";
    case ValidationCode::BadVertexDegree: return "bad_vertex_degree";
  }
  return "unknown";
}

/// Raised when a face list is not a valid combinatorial polyhedron.
class ValidationError : public std::runtime_error {
public:
  ValidationError(ValidationCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  ValidationCode code() const { return code_; }

private:
  ValidationCode code_;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  int face_a = -1;
  int face_b = -1;
};

/// Derived incidence data of a structurally valid polyhedron.
///
/// `faces` are reoriented so that every edge is traversed in opposite
/// directions by its two faces.
struct PolyhedronStructure {
  int vertex_count = 0;
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> neighbors;  // sorted
  std::unordered_map<std::int64_t, int> edge_lookup;

  int degree(int v) const { return static_cast<int>(neighbors[static_cast<std::size_t>(v)].size()); }

  std::int64_t key(int a, int b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::int64_t>(a) * vertex_count + b;
  }

  /// Index into `edges`, or -1.
  int edge_index(int a, int b) const {
    auto it = edge_lookup.find(key(a, b));
    return it == edge_lookup.end() ? -1 : it->second;
  }

  bool share_vertex(int edge1, int edge2) const {
    const Edge& e = edges[static_cast<std::size_t>(edge1)];
    const Edge& f = edges[static_cast<std::size_t>(edge2)];
    return e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
  }
};

/// (V_inf, V_f, E, F) of a validated polyhedron.
struct CombinatorialProfile {
  int v_ideal = 0;   // degree-4 vertices
  int v_finite = 0;  // degree-3 vertices
  int edges = 0;
  int faces = 0;

  friend bool operator==(const CombinatorialProfile&, const CombinatorialProfile&) = default;
};

/// Face vector p_n and the vertex-incidence sums W and WI.
struct FaceStatistics {
  std::map<int, int> p;
  int W = 0;
  int WI = 0;
};

namespace detail {

inline bool connected_without(const std::vector<std::vector<int>>& adjacency, int removed_a,
                              int removed_b) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int start = -1;
  int expected = 0;
  for (int v = 0; v < n; ++v) {
    if (v == removed_a || v == removed_b) continue;
    ++expected;
    if (start < 0) start = v;
  }
  if (start < 0) return true;
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[static_cast<std::size_t>(v)]) {
      if (w == removed_a || w == removed_b || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == expected;
}

// Position of the directed edge a->b in a face, or -1.
inline int directed_position(const Face& face, int a, int b) {
  const int n = static_cast<int>(face.size());
  for (int i = 0; i < n; ++i)
    if (face[static_cast<std::size_t>(i)] == a && face[static_cast<std::size_t>((i + 1) % n)] == b) return i;
  return -1;
}

}  // namespace detail

/// Checks that the face list is a cellulation of the 2-sphere whose 1-skeleton
/// is simple and 3-connected. Vertex degrees are not restricted here.
inline PolyhedronStructure validate_structure(const AbstractPolyhedron& p) {
  PolyhedronStructure s;
  const int n = p.vertex_count();
  s.vertex_count = n;
  if (n < 4) throw ValidationError(ValidationCode::BadIndex, "need at least 4 vertices");
  s.faces = p.faces();

  for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
    const Face& f = s.faces[fi];
    for (int v : f)
      if (v < 0 || v >= n)
        throw ValidationError(ValidationCode::BadIndex,
                              "face " + std::to_string(fi) + " has vertex index " + std::to_string(v));
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (f.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError(ValidationCode::DegenerateFace,
                            "face " + std::to_string(fi) + " needs at least 3 distinct vertices");
  }

  // Edges and their incident faces.
  std::vector<std::vector<int>> edge_faces;
  for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
    const Face& f = s.faces[fi];
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i];
      const int b = f[(i + 1) % f.size()];
      auto [it, inserted] = s.edge_lookup.try_emplace(s.key(a, b), static_cast<int>(s.edges.size()));
      if (inserted) {
        s.edges.push_back({std::min(a, b), std::max(a, b), -1, -1});
        edge_faces.emplace_back();
      }
      edge_faces[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(fi));
    }
  }
  for (std::size_t ei = 0; ei < s.edges.size(); ++ei) {
    if (edge_faces[ei].size() != 2 || edge_faces[ei][0] == edge_faces[ei][1])
      throw ValidationError(ValidationCode::EdgeNotInTwoFaces,
                            "edge (" + std::to_string(s.edges[ei].u) + "," + std::to_string(s.edges[ei].v) +
                                ") lies in " + std::to_string(edge_faces[ei].size()) + " face(s)");
    s.edges[ei].face_a = std::min(edge_faces[ei][0], edge_faces[ei][1]);
    s.edges[ei].face_b = std::max(edge_faces[ei][0], edge_faces[ei][1]);
  }

  {
    std::map<std::pair<int, int>, int> shared;
    for (const Edge& e : s.edges) {
      if (++shared[{e.face_a, e.face_b}] > 1)
        throw ValidationError(ValidationCode::MultiAdjacentFaces,
                              "faces " + std::to_string(e.face_a) + " and " + std::to_string(e.face_b) +
                                  " share more than one edge");
    }
  }

  s.neighbors.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : s.edges) {
    s.neighbors[static_cast<std::size_t>(e.u)].push_back(e.v);
    s.neighbors[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : s.neighbors) std::sort(list.begin(), list.end());

  // The faces around each vertex must form one cycle.
  {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (std::size_t fi = 0; fi < s.faces.size(); ++fi)
      for (int v : s.faces[fi]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(fi));
    for (int v = 0; v < n; ++v) {
      const auto& around = incident[static_cast<std::size_t>(v)];
      if (around.empty()) continue;  // isolated vertex: reported as disconnected
      std::vector<int> component{around.front()};
      std::vector<char> seen(s.faces.size(), 0);
      seen[static_cast<std::size_t>(around.front())] = 1;
      std::size_t reached = 1;
      while (!component.empty()) {
        const int f = component.back();
        component.pop_back();
        for (int w : s.neighbors[static_cast<std::size_t>(v)]) {
          const Edge& e = s.edges[static_cast<std::size_t>(s.edge_index(v, w))];
          if (e.face_a != f && e.face_b != f) continue;
          const int other = (e.face_a == f) ? e.face_b : e.face_a;
          if (!seen[static_cast<std::size_t>(other)]) {
            seen[static_cast<std::size_t>(other)] = 1;
            ++reached;
            component.push_back(other);
          }
        }
      }
      if (reached != around.size())
        throw ValidationError(ValidationCode::NonManifoldVertex,
                              "faces around vertex " + std::to_string(v) + " do not form a single cycle");
    }
  }

  // Coherent orientation by propagation over the dual graph.
  {
    const std::size_t face_count = s.faces.size();
    std::vector<char> oriented(face_count, 0);
    for (std::size_t root = 0; root < face_count; ++root) {
      if (oriented[root]) continue;
      oriented[root] = 1;
      std::queue<int> pending;
      pending.push(static_cast<int>(root));
      while (!pending.empty()) {
        const int f = pending.front();
        pending.pop();
        const Face& face = s.faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < face.size(); ++i) {
          const int a = face[i];
          const int b = face[(i + 1) % face.size()];
          const Edge& e = s.edges[static_cast<std::size_t>(s.edge_index(a, b))];
          const int g = (e.face_a == f) ? e.face_b : e.face_a;
          Face& other = s.faces[static_cast<std::size_t>(g)];
          const bool opposite = detail::directed_position(other, b, a) >= 0;
          if (oriented[static_cast<std::size_t>(g)]) {
            if (!opposite)
              throw ValidationError(ValidationCode::NonOrientable, "faces cannot be oriented coherently");
            continue;
          }
          if (!opposite) std::reverse(other.begin(), other.end());
          oriented[static_cast<std::size_t>(g)] = 1;
          pending.push(g);
        }
      }
    }
  }

  if (!detail::connected_without(s.neighbors, -1, -1))
    throw ValidationError(ValidationCode::Disconnected, "1-skeleton is disconnected");

  const int euler = n - static_cast<int>(s.edges.size()) + static_cast<int>(s.faces.size());
  if (euler != 2)
    throw ValidationError(ValidationCode::EulerFailure, "V - E + F = " + std::to_string(euler));

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!detail::connected_without(s.neighbors, a, b))
        throw ValidationError(ValidationCode::NotThreeConnected,
                              "removing vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                  " disconnects the 1-skeleton");
  return s;
}

inline CombinatorialProfile profile_of(const PolyhedronStructure& s) {
  CombinatorialProfile profile;
  for (int v = 0; v < s.vertex_count; ++v)
    (s.degree(v) == 4 ? profile.v_ideal : profile.v_finite) += 1;
  profile.edges = static_cast<int>(s.edges.size());
  profile.faces = static_cast<int>(s.faces.size());
  return profile;
}

inline void require_degrees_3_or_4(const PolyhedronStructure& s) {
  for (int v = 0; v < s.vertex_count; ++v) {
    const int d = s.degree(v);
    if (d != 3 && d != 4)
      throw ValidationError(ValidationCode::BadVertexDegree,
                            "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  }
}

/// Full validation: structure plus vertex degrees in {3, 4}.
inline CombinatorialProfile validate(const AbstractPolyhedron& p) {
  const auto s = validate_structure(p);
  require_degrees_3_or_4(s);
  return profile_of(s);
}

inline FaceStatistics face_statistics(const PolyhedronStructure& s) {
  FaceStatistics stats;
  for (const Face& f : s.faces) {
    const int size = static_cast<int>(f.size());
    ++stats.p[size];
    stats.W += size;
    for (int v : f)
      if (s.degree(v) == 4) ++stats.WI;
  }
  return stats;
}

inline FaceStatistics face_statistics(const AbstractPolyhedron& p) {
  const auto s = validate_structure(p);
  require_degrees_3_or_4(s);
  return face_statistics(s);
}

struct DualEdge {
  int face_a = 0;
  int face_b = 0;
  int primal_edge = 0;
};

/// Faces as nodes, one dual edge per primal edge.
struct DualGraph {
  int node_count = 0;
  std::vector<DualEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbor face, dual edge index)

  /// Dual edge between two faces, or -1.
  int edge_between(int f, int g) const {
    for (auto [h, e] : adjacency[static_cast<std::size_t>(f)])
      if (h == g) return e;
    return -1;
  }
};

inline DualGraph dual_graph(const PolyhedronStructure& s) {
  DualGraph d;
  d.node_count = static_cast<int>(s.faces.size());
  d.adjacency.assign(s.faces.size(), {});
  for (std::size_t ei = 0; ei < s.edges.size(); ++ei) {
    const Edge& e = s.edges[ei];
    const int idx = static_cast<int>(d.edges.size());
    d.edges.push_back({e.face_a, e.face_b, static_cast<int>(ei)});
    d.adjacency[static_cast<std::size_t>(e.face_a)].emplace_back(e.face_b, idx);
    d.adjacency[static_cast<std::size_t>(e.face_b)].emplace_back(e.face_a, idx);
  }
  for (auto& list : d.adjacency) std::sort(list.begin(), list.end());
  return d;
}

}  // namespace raca
