#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "raca/andreev.hpp"
#include "raca/canonical.hpp"
#include "raca/catalog.hpp"
#include "raca/errors.hpp"
#include "raca/polyhedron.hpp"
#include "raca/volumes.hpp"

namespace raca {

/// (V_inf, V_f): numbers of ideal (degree-4) and finite (degree-3) vertices.
struct CandidatePair {
  int v_ideal = 0;
  int v_finite = 0;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
  friend auto operator<=>(const CandidatePair&, const CandidatePair&) = default;
};

/// The region of vertex counts where a volume <= G is not excluded by the
/// counting bounds: V_inf >= 2, V_f >= 2, V_inf + V_f/2 >= 4, 4 V_inf + V_f <= 16.
inline bool in_candidate_region(int v_ideal, int v_finite) {
  return v_finite % 2 == 0 && v_ideal >= 2 && v_finite >= 2 && 2 * v_ideal + v_finite >= 8 &&
         4 * v_ideal + v_finite <= 16;
}

/// Integer points of the candidate region with V_f even, lexicographically.
inline std::vector<CandidatePair> candidate_pairs() {
  std::vector<CandidatePair> out;
  // 4 V_inf + V_f <= 16 with V_f >= 2 bounds both coordinates.
  for (int vi = 0; vi <= 4; ++vi)
    for (int vf = 0; vf <= 16; vf += 2)
      if (in_candidate_region(vi, vf)) out.push_back({vi, vf});
  return out;
}

/// Largest V_inf + V_f accepted by the enumerator.
inline constexpr int kMaxCensusVertices = 12;

/// Nonaka's lower bound on the face count of a right-angled polyhedron with
/// exactly one ideal vertex. Imported, not re-derived.
struct ImportedFact {
  int value;
  const char* citation;
};
inline constexpr ImportedFact kMinFacesWithOneIdealVertex{
    12, "J. Nonaka: a right-angled hyperbolic polyhedron with exactly one ideal vertex has F >= 12"};

struct EnumerationOptions {
  bool reverse_branching = false;
  unsigned threads = 1;  // 0 = one per hardware thread
  Condition3Reading reading = Condition3Reading::EdgesShareNoEndpoint;
  bool keep_polyhedral = false;  // also return every type before the realizability filter
};

struct CensusType {
  std::string certificate;
  AbstractPolyhedron polyhedron;  // canonical labeling
  std::map<int, int> face_vector;
  std::string name;                    // catalog name when recognised
  std::optional<VolumeReport> volume;  // closed form, when known
  std::optional<double> lower_bound;   // counting bound when no closed form exists
};

struct CensusRecord {
  CandidatePair pair;
  Condition3Reading reading = Condition3Reading::EdgesShareNoEndpoint;
  std::size_t polyhedral_types = 0;  // 3-connected planar types before the realizability filter
  std::vector<CensusType> realizable_types;
  std::vector<AbstractPolyhedron> polyhedral;  // filled only with keep_polyhedral, certificate order
};

namespace detail {

using Mask = std::uint32_t;

// Faces of a 3-connected planar graph are its induced non-separating cycles.
inline std::vector<Face> peripheral_cycles(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  const Mask all = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<Face> cycles;
  std::vector<int> path;
  const auto separating = [&](Mask cycle) {
    const Mask rest = all & ~cycle;
    if (rest == 0) return false;
    Mask seen = rest & (~rest + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= rest & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen != rest;
  };
  // Extend an induced path; `interior` holds path vertices other than the endpoints.
  const auto extend = [&](auto&& self, Mask on_path, Mask interior) -> void {
    const int start = path.front();
    const int last = path.back();
    for (Mask cand = adj[static_cast<std::size_t>(last)]; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      if (w <= start || (on_path >> w & 1)) continue;
      if (adj[static_cast<std::size_t>(w)] & interior) continue;  // chord to the path interior
      const bool closes = path.size() >= 2 && (adj[static_cast<std::size_t>(w)] >> start & 1);
      if (closes) {
        if (path[1] > w) continue;  // each cycle once
        path.push_back(w);
        if (!separating(on_path | (Mask{1} << w))) cycles.push_back(path);
        path.pop_back();
        continue;
      }
      path.push_back(w);
      self(self, on_path | (Mask{1} << w), interior | (path.size() > 2 ? Mask{1} << last : 0));
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    extend(extend, Mask{1} << s, 0);
  }
  return cycles;
}

inline std::vector<std::vector<int>> to_lists(const std::vector<Mask>& adj) {
  std::vector<std::vector<int>> lists(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (Mask m = adj[v]; m; m &= m - 1) lists[v].push_back(std::countr_zero(m));
  return lists;
}

inline bool three_connected(const std::vector<Mask>& adj) {
  const auto lists = to_lists(adj);
  const int n = static_cast<int>(adj.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!connected_without(lists, a, b)) return false;
  return connected_without(lists, -1, -1);
}

// Backtracking generator of simple graphs with a prescribed degree sequence.
//
// Vertices are completed in index order; vertex i only gains edges to higher
// vertices while it is being completed. Unprocessed vertices with equal target
// degree and equal current neighborhoods are interchangeable, so within each
// such twin class only a prefix (in branching order) may be chosen.
class DegreeSequenceGenerator {
public:
  DegreeSequenceGenerator(std::vector<int> target, bool reverse)
      : target_(std::move(target)), reverse_(reverse), adj_(target_.size(), 0), deg_(target_.size(), 0) {}

  std::vector<Mask> choices_for(int i) const {
    std::vector<Mask> out;
    const int n = size();
    const int need = target_[static_cast<std::size_t>(i)] - deg_[static_cast<std::size_t>(i)];
    std::vector<int> candidates;
    for (int j = i + 1; j < n; ++j)
      if (deg_[static_cast<std::size_t>(j)] < target_[static_cast<std::size_t>(j)]) candidates.push_back(j);
    if (reverse_) std::reverse(candidates.begin(), candidates.end());
    if (need < 0 || need > static_cast<int>(candidates.size())) return out;
    std::vector<int> twin_class(candidates.size());
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      twin_class[a] = static_cast<int>(a);
      for (std::size_t b = 0; b < a; ++b) {
        const auto ja = static_cast<std::size_t>(candidates[a]);
        const auto jb = static_cast<std::size_t>(candidates[b]);
        if (target_[ja] == target_[jb] && adj_[ja] == adj_[jb]) {
          twin_class[a] = twin_class[b];
          break;
        }
      }
    }
    std::vector<char> blocked(candidates.size(), 0);
    const auto choose = [&](auto&& self, std::size_t k, int remaining, Mask chosen) -> void {
      if (remaining == 0) {
        out.push_back(chosen);
        return;
      }
      if (static_cast<int>(candidates.size() - k) < remaining) return;
      const int cls = twin_class[k];
      if (!blocked[static_cast<std::size_t>(cls)])
        self(self, k + 1, remaining - 1, chosen | (Mask{1} << candidates[k]));
      const char was = blocked[static_cast<std::size_t>(cls)];
      blocked[static_cast<std::size_t>(cls)] = 1;
      self(self, k + 1, remaining, chosen);
      blocked[static_cast<std::size_t>(cls)] = was;
    };
    choose(choose, 0, need, 0);
    return out;
  }

  template <class Sink>
  void run(int i, Sink& sink) {
    if (i == size()) {
      sink(adj_);
      return;
    }
    for (Mask choice : choices_for(i)) {
      apply(i, choice, +1);
      if (feasible_after(i)) run(i + 1, sink);
      apply(i, choice, -1);
    }
  }

  void apply(int i, Mask choice, int sign) {
    for (Mask m = choice; m; m &= m - 1) {
      const int j = std::countr_zero(m);
      adj_[static_cast<std::size_t>(i)] ^= Mask{1} << j;
      adj_[static_cast<std::size_t>(j)] ^= Mask{1} << i;
      deg_[static_cast<std::size_t>(i)] += sign;
      deg_[static_cast<std::size_t>(j)] += sign;
    }
  }

private:
  int size() const { return static_cast<int>(target_.size()); }

  // Every unprocessed vertex must still find enough unprocessed partners.
  bool feasible_after(int i) const {
    if (deg_[static_cast<std::size_t>(i)] != target_[static_cast<std::size_t>(i)]) return false;
    int open = 0;
    for (int j = i + 1; j < size(); ++j)
      if (deg_[static_cast<std::size_t>(j)] < target_[static_cast<std::size_t>(j)]) ++open;
    for (int j = i + 1; j < size(); ++j)
      if (target_[static_cast<std::size_t>(j)] - deg_[static_cast<std::size_t>(j)] > open - 1 &&
          deg_[static_cast<std::size_t>(j)] < target_[static_cast<std::size_t>(j)])
        return false;
    return true;
  }

  std::vector<int> target_;
  bool reverse_;
  std::vector<Mask> adj_;
  std::vector<int> deg_;
};

struct KnownType {
  std::string certificate;
  PolyhedronName name;
};

// Catalog polyhedra with closed-form volumes inside the census range.
inline const std::vector<KnownType>& known_types() {
  static const std::vector<KnownType> table = [] {
    std::vector<KnownType> t;
    t.push_back({canonical_form(catalog::bipyramid_p32()), {NamedKind::P32}});
    t.push_back({canonical_form(catalog::trapezohedron_p28()), {NamedKind::P28}});
    t.push_back({canonical_form(catalog::polyhedron_p34()), {NamedKind::P34}});
    for (int n = 3; n <= 6; ++n)
      t.push_back({canonical_form(catalog::antiprism(n)), {NamedKind::Antiprism, n}});
    return t;
  }();
  return table;
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

}  // namespace detail

/// Attaches a closed-form volume when the type is in the catalog, and a
/// counting lower bound otherwise.
inline void attach_volume(CensusType& type, const CandidatePair& pair) {
  for (const auto& known : detail::known_types()) {
    if (known.certificate == type.certificate) {
      type.name = known.name.to_string();
      type.volume = named_volume(known.name);
      return;
    }
  }
  if (pair.v_ideal >= 1)
    type.lower_bound = mixed_lower_bound(pair.v_ideal, pair.v_finite);
}

/// Every combinatorial polyhedron with exactly V_inf degree-4 and V_f degree-3
/// vertices, up to isomorphism, that passes the realizability conditions.
inline CensusRecord enumerate_types(CandidatePair pair, const EnumerationOptions& options = {}) {
  if (pair.v_ideal < 0 || pair.v_finite < 0)
    throw DomainError("enumerate_types: vertex counts must be non-negative");
  if (pair.v_finite % 2 != 0)
    throw DomainError("enumerate_types: the number of degree-3 vertices must be even");
  const int n = pair.v_ideal + pair.v_finite;
  if (n > kMaxCensusVertices)
    throw ResourceError("enumerate_types: V_inf + V_f = " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxCensusVertices));

  CensusRecord record;
  record.pair = pair;
  record.reading = options.reading;
  if (n < 4) return record;

  std::vector<int> target(static_cast<std::size_t>(pair.v_ideal), 4);
  target.resize(static_cast<std::size_t>(n), 3);

  std::map<std::string, AbstractPolyhedron> types;
  std::mutex types_mutex;
  const auto root_choices = detail::DegreeSequenceGenerator(target, options.reverse_branching).choices_for(0);
  std::atomic<std::size_t> next_root{0};

  const auto worker = [&] {
    std::map<std::string, AbstractPolyhedron> local;
    auto sink = [&](const std::vector<detail::Mask>& adj) {
      if (!detail::three_connected(adj)) return;
      AbstractPolyhedron candidate(n, detail::peripheral_cycles(adj));
      PolyhedronStructure s;
      try {
        s = validate_structure(candidate);
      } catch (const ValidationError&) {
        return;  // not planar
      }
      std::size_t edge_count = 0;
      for (detail::Mask m : adj) edge_count += static_cast<std::size_t>(std::popcount(m));
      if (s.edges.size() * 2 != edge_count) return;
      auto cert = canonical_form(s);
      if (!local.contains(cert)) local.emplace(std::move(cert), canonical_polyhedron(s));
    };
    for (std::size_t idx = next_root++; idx < root_choices.size(); idx = next_root++) {
      detail::DegreeSequenceGenerator gen(target, options.reverse_branching);
      gen.apply(0, root_choices[idx], +1);
      gen.run(1, sink);
    }
    std::lock_guard lock(types_mutex);
    types.merge(local);
  };

  const unsigned threads = std::min<unsigned>(detail::resolve_threads(options.threads),
                                              static_cast<unsigned>(std::max<std::size_t>(1, root_choices.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  record.polyhedral_types = types.size();
  for (auto& [cert, poly] : types) {
    if (options.keep_polyhedral) record.polyhedral.push_back(poly);
    const auto s = validate_structure(poly);
    if (!andreev_check(s, options.reading).passed()) continue;
    CensusType type;
    type.certificate = cert;
    type.polyhedron = poly;
    type.face_vector = face_statistics(s).p;
    attach_volume(type, pair);
    record.realizable_types.push_back(std::move(type));
  }
  return record;
}

/// One step of the minimality argument with the numbers that decide it.
struct BranchEvidence {
  std::string branch;
  std::string detail;
  double value = 0.0;      // quantity being compared
  double threshold = 0.0;  // compared against G
  bool holds = false;
};

struct TheoremReport {
  double minimal_volume = 0.0;
  std::string witness;
  std::string witness_name;
  bool uniqueness = false;
  bool verified = false;
  Condition3Reading reading = Condition3Reading::EdgesShareNoEndpoint;
  std::vector<BranchEvidence> branches;
  std::vector<CensusRecord> census;
  std::vector<std::string> failures;
};

/// Runs the full minimality argument: counting bounds outside the candidate
/// region, exhaustive enumeration inside it, and the volume comparison.
inline TheoremReport verify_minimality(const EnumerationOptions& options = {}) {
  TheoremReport report;
  report.reading = options.reading;
  const double g = catalan_constant().value;
  auto log_branch = [&](std::string branch, std::string detail, double value, bool holds) {
    if (!holds) report.failures.push_back(branch + ": " + detail);
    report.branches.push_back({std::move(branch), std::move(detail), value, g, holds});
  };

  // Counting bounds for the three excluded classes.
  const double octahedron_bound = atkinson_bounds_ideal(6).lower;
  log_branch("ideal (V_f = 0)", "vol >= v_oct = 4G", octahedron_bound,
             octahedron_bound > g && std::abs(octahedron_bound - 4.0 * g) < 1e-10);
  const double dodecahedron = lobell_volume(5).value;
  log_branch("compact (V_inf = 0)", "vol >= vol(L_5), the minimal compact right-angled volume", dodecahedron,
             dodecahedron > g);
  const int min_faces = kMinFacesWithOneIdealVertex.value;
  const int min_finite = 2 * (min_faces - 1 - 2);  // F = V_inf + V_f/2 + 2 with V_inf = 1
  const double one_ideal = mixed_lower_bound(1, min_finite);
  log_branch("one ideal vertex (V_inf = 1)",
             std::string("F >= ") + std::to_string(min_faces) + " [" + kMinFacesWithOneIdealVertex.citation +
                 "] gives V_f >= " + std::to_string(min_finite) + " and vol >= G/8 (4 + V_f - 8)",
             one_ideal, one_ideal > g);

  // Outside the candidate region (with V_inf, V_f >= 2) the mixed bound exceeds G.
  {
    bool all_above = true;
    double weakest = std::numeric_limits<double>::infinity();
    for (int vi = 2; vi <= 8; ++vi)
      for (int vf = 2; vf <= 40; vf += 2) {
        if (2 * vi + vf < 8 || in_candidate_region(vi, vf)) continue;
        const double bound = mixed_lower_bound(vi, vf);
        weakest = std::min(weakest, bound);
        all_above = all_above && bound > g;
      }
    log_branch("outside candidate region", "smallest mixed lower bound with 4 V_inf + V_f >= 18", weakest,
               all_above && std::abs(weakest - 10.0 * g / 8.0) < 1e-10);
  }

  const auto pairs = candidate_pairs();
  const std::vector<CandidatePair> expected{{2, 4}, {2, 6}, {2, 8}, {3, 2}, {3, 4}};
  log_branch("candidate pairs", "integer points of the candidate region", static_cast<double>(pairs.size()),
             pairs == expected);

  struct Entry {
    double volume;
    std::string certificate;
    std::string name;
  };
  std::vector<Entry> volumes;
  for (const auto& pair : pairs) {
    auto record = enumerate_types(pair, options);
    for (const auto& type : record.realizable_types) {
      if (type.volume) {
        volumes.push_back({type.volume->value, type.certificate, type.name});
      } else {
        const double bound = type.lower_bound.value_or(0.0);
        report.failures.push_back("type " + type.certificate + " has no closed-form volume (lower bound " +
                                  std::to_string(bound) + ")");
        volumes.push_back({bound, type.certificate, "unresolved"});
      }
    }
    report.census.push_back(std::move(record));
  }

  if (volumes.empty()) {
    report.failures.push_back("no realizable type in the candidate region");
    return report;
  }
  std::sort(volumes.begin(), volumes.end(),
            [](const Entry& a, const Entry& b) { return a.volume < b.volume || (a.volume == b.volume && a.certificate < b.certificate); });
  report.minimal_volume = volumes.front().volume;
  report.witness = volumes.front().certificate;
  report.witness_name = volumes.front().name;
  constexpr double tie = 1e-9;
  report.uniqueness = volumes.size() == 1 || volumes[1].volume > volumes.front().volume + tie;

  const bool matches_g = std::abs(report.minimal_volume - g) <= tie;
  log_branch("minimum", "smallest volume in the candidate region equals G", report.minimal_volume, matches_g);
  if (!report.uniqueness) report.failures.push_back("minimum is attained by more than one type");
  if (report.witness != canonical_form(catalog::bipyramid_p32()))
    report.failures.push_back("minimizer is not the triangular bipyramid");
  report.verified = report.failures.empty();
  return report;
}

}  // namespace raca
