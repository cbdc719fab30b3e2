#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "spectral.hpp"

namespace treegap {

// Isoperimetric machinery. A cut is scored by the measure of its outgoing
// boundary half-edges over the measure of the set; feasibility means the set
// holds at most half the total volume (equality allowed). All quantities are
// exact rationals.

struct CutResult {
  std::vector<VertexId> members;  // sorted ascending
  Rat mu_s;
  Rat mu_boundary;  // sum of mu(e) over e with origin in S, terminus outside
  Rat ratio;
  bool feasible = false;
};

CutResult boundary_measure(const Diagram& d, const std::vector<VertexId>& s);

inline constexpr int kExactCutoff = 22;  // ~4M subsets, tractable exactly

/// Minimizing feasible cut by exhaustive enumeration. Ties break to the
/// lexicographically smallest member list. Throws TooLarge above the cutoff.
CutResult cheeger_exact(const Diagram& d, int cutoff = kExactCutoff);

/// Best feasible cut among the sweep prefixes of the bottom eigenvector
/// (vertices ordered by eigenvector value, ties by index). An upper bound for
/// the exact constant whenever both are computable.
CutResult cheeger_sweep(const Diagram& d, const LambdaOptions& opts = {});

// Two-case lower-bound certificate for cusped diagrams: a core holding more
// than half the volume plus decaying rays. If every ray step divides the
// measure by at least d and every tail's first boundary edge carries measure
// at least c times its first vertex, any feasible cut meets either a tail
// first-edge (ratio >= c(1-1/d)) or a core edge (ratio >= C/mu(D) with C the
// least core-edge measure).
struct GapCertificate {
  std::vector<VertexId> core;
  Rat tail_bound;                // c * (1 - 1/d)
  std::optional<Rat> core_bound; // C / mu(D); absent when the core has no edges
  Rat certified;                 // the certified lower bound, > 0
  Rat c, d;
};

GapCertificate gap_certificate(const Diagram& diag, const std::vector<VertexId>& core,
                               const Rat& c, const Rat& d);

// ---- truncation-ladder verdicts ---------------------------------------------

struct FamilyPoint {
  long n = 0;  // ladder parameter (blocks / ray length)
  int dim = 0;
  Rat h_upper;                    // best cut found for this truncation
  std::optional<Rat> h_exact;     // exhaustive value when enumerable
  std::string witness;            // description of the achieving cut
  double lambda = 0;
  std::optional<Rat> certified;   // certificate lower bound when the family has one
  Rat max_index_ratio;            // max i(partner(e))/i(e), bounded-geometry hypothesis
  Rat max_indeg;
};

enum class Verdict { no_expansion_witness, expansion_consistent, inconclusive };

const char* verdict_name(Verdict v);

struct VerdictRecord {
  std::vector<FamilyPoint> points;
  Verdict verdict = Verdict::inconclusive;
  bool hypothesis_flag = false;  // boundedness quantities grow along the ladder
  Rat eps;
  // Ladder evidence only: says nothing about the untruncated diagram.
  std::string note;
};

struct FamilyHooks {
  std::string name;
  std::function<Diagram(long)> make;
  // named candidate cuts evaluated exactly alongside the sweep
  std::function<std::vector<std::pair<std::string, std::vector<VertexId>>>(const Diagram&, long)>
      witness_cuts;
  std::function<std::optional<GapCertificate>(const Diagram&, long)> certify;
};

FamilyHooks ray_blocks_family_hooks(long q);
FamilyHooks cusp_family_hooks(long q, long rays);

FamilyPoint evaluate_family_point(const FamilyHooks& family, long n, const LambdaOptions& opts);

VerdictRecord expander_verdict(const FamilyHooks& family, const std::vector<long>& ladder,
                               const Rat& eps, const LambdaOptions& opts = {});

}  // namespace treegap
