#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropcubics/lines.hpp"
#include "tropcubics/surface.hpp"

namespace tropcubics {

// One affine function t -> alpha*t + beta on a parametrized edge or ray.
struct LinearEntry {
  Rat alpha;
  Rat beta;
};

using LinearList = std::vector<LinearEntry>;

inline Rat entry_value(const LinearEntry& e, const Rat& t) { return e.alpha * t + e.beta; }

// Maximal sets of identical affine functions, each block sorted, blocks
// ordered by smallest member.
inline std::vector<std::vector<int>> coincidence_partition(const LinearList& entries) {
  std::map<std::pair<Rat, Rat>, std::vector<int>> groups;
  for (size_t i = 0; i < entries.size(); ++i) {
    groups[{entries[i].alpha, entries[i].beta}].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [key, members] : groups) blocks.push_back(members);
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

// A maximal sub-interval on which the minimizing index set is constant.
// An absent upper bound means the piece is unbounded above.
struct Piece {
  Rat lo;
  std::optional<Rat> hi;
  std::vector<int> block;
};

struct CoveringCertificate {
  std::vector<Piece> pieces;

  std::vector<Rat> breakpoints() const {
    std::vector<Rat> out;
    for (size_t i = 1; i < pieces.size(); ++i) out.push_back(pieces[i].lo);
    return out;
  }
};

struct CoveringResult {
  std::optional<CoveringCertificate> certificate;
  std::optional<Rat> witness;

  bool covered() const { return certificate.has_value(); }
};

namespace incdetail {

inline std::vector<int> minimizer_block(const LinearList& entries, const Rat& t) {
  Rat best = entry_value(entries[0], t);
  for (size_t i = 1; i < entries.size(); ++i) best = std::min(best, entry_value(entries[i], t));
  std::vector<int> block;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entry_value(entries[i], t) == best) block.push_back(static_cast<int>(i));
  }
  return block;
}

}  // namespace incdetail

// Decides whether the pointwise minimum of the entries is attained at
// least twice everywhere on the closed interval [lo, hi], with hi absent
// for an interval unbounded above. Pairwise crossings split the interval
// into pieces; adjacent pieces with the same minimizing block are merged.
// On failure the witness is the midpoint of the first bad piece, or its
// finite endpoint plus one when that piece is unbounded.
inline CoveringResult covering_subroutine(const Rat& lo, const std::optional<Rat>& hi,
                                          const LinearList& entries) {
  if (entries.empty()) throw domain_error("covering_subroutine: empty function list");
  if (hi && *hi < lo) throw domain_error("covering_subroutine: empty interval");

  std::vector<Rat> cuts;
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].alpha == entries[j].alpha) continue;
      Rat t = (entries[j].beta - entries[i].beta) / (entries[i].alpha - entries[j].alpha);
      if (t > lo && (!hi || t < *hi)) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> pieces;
  Rat cur = lo;
  for (const Rat& t : cuts) {
    pieces.push_back({cur, t, {}});
    cur = t;
  }
  pieces.push_back({cur, hi, {}});

  for (auto& piece : pieces) {
    Rat sample = piece.hi ? Rat((piece.lo + *piece.hi) / 2) : Rat(piece.lo + 1);
    piece.block = incdetail::minimizer_block(entries, sample);
  }

  std::vector<Piece> merged;
  for (auto& piece : pieces) {
    if (!merged.empty() && merged.back().block == piece.block) {
      merged.back().hi = piece.hi;
    } else {
      merged.push_back(piece);
    }
  }

  for (const auto& piece : merged) {
    if (piece.block.size() >= 2) continue;
    CoveringResult result;
    result.witness = piece.hi ? Rat((piece.lo + *piece.hi) / 2) : Rat(piece.lo + 1);
    return result;
  }
  CoveringResult result;
  result.certificate = CoveringCertificate{std::move(merged)};
  return result;
}

// Containment of a tropical line in a tropical cubic surface. The line
// is parametrized as its bounded edge over [0,1] followed by the four
// rays over [0,inf), and each parametrization is checked by the
// covering subroutine.
struct IncidenceResult {
  bool contained = false;
  // Certificates in the order bounded edge, ray 0, ray 1, ray 2, ray 3.
  std::vector<CoveringCertificate> certificates;
  std::optional<QVec> witness_point;
};

inline LinearList substitute_along(const QVec& C, const QVec& base, const QVec& dir) {
  LinearList entries(kNumPoints);
  for (int e = 0; e < kNumPoints; ++e) {
    LinearEntry entry;
    entry.beta = C[e];
    entry.alpha = 0;
    for (int a = 0; a < 4; ++a) {
      entry.beta += kCubicExponents[e][a] * base[a];
      entry.alpha += kCubicExponents[e][a] * dir[a];
    }
    entries[e] = entry;
  }
  return entries;
}

inline IncidenceResult line_on_surface(const Pluecker& P, const QVec& C) {
  if (C.size() != kNumPoints) throw domain_error("line_on_surface: need 20 heights");
  LineVertices lv = line_vertices(P);

  struct Stretch {
    QVec base;
    QVec dir;
    std::optional<Rat> hi;
  };
  std::vector<Stretch> stretches;
  QVec edge_dir(4);
  for (int a = 0; a < 4; ++a) edge_dir[a] = lv.second[a] - lv.first[a];
  stretches.push_back({lv.first, edge_dir, Rat(1)});
  for (int a = 0; a < 4; ++a) {
    bool at_first = (a == lv.first_rays[0] || a == lv.first_rays[1]);
    stretches.push_back({at_first ? lv.first : lv.second, direction(a), std::nullopt});
  }

  IncidenceResult result;
  for (const auto& stretch : stretches) {
    LinearList entries = substitute_along(C, stretch.base, stretch.dir);
    CoveringResult cov = covering_subroutine(Rat(0), stretch.hi, entries);
    if (!cov.covered()) {
      QVec point(4);
      for (int a = 0; a < 4; ++a) point[a] = stretch.base[a] + *cov.witness * stretch.dir[a];
      result.witness_point = point;
      return result;
    }
    result.certificates.push_back(*cov.certificate);
  }
  result.contained = true;
  return result;
}

}  // namespace tropcubics
