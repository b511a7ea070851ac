#ifndef ROOTSTRATA_STRATA_HPP
#define ROOTSTRATA_STRATA_HPP

#include <optional>
#include <vector>

#include "rootstrata/diagram.hpp"
#include "rootstrata/root_system.hpp"

namespace rootstrata {

enum class LengthProfile { ShortOnly, LongOnly, Mixed };

const char* to_string(LengthProfile p);

/// The set of roots agreeing with beta on every coordinate indexed by S.
///
/// When S meets the support of beta the stratum is an interval of the root
/// poset: min_root and max_root are populated, they have equal length, and
/// every root between them in coordinate order belongs to the stratum.
/// Otherwise the stratum is the parabolic subsystem generated by the
/// complement of S and min/max are absent.
struct Stratum {
  std::vector<int> S;                          // sorted indices into Pi
  std::vector<std::pair<int, int>> level;      // (index in S, coordinate of beta)
  std::vector<RootVec> roots;                  // sorted by (height, lex)
  std::optional<RootVec> min_root, max_root;
  LengthProfile lengths_present;               // by direct scan
  std::optional<RootVec> max_short;            // unique maximal short root, mixed case only
  bool nontrivial;                             // S meets supp(beta)
};

/// Either simple system of the subsystem spanned by a nontrivial stratum:
/// {min} u (Pi \ S) or {-max} u (Pi \ S).
struct SubsystemBasis {
  RootVec gamma;                 // min or -max
  std::vector<int> rest;         // Pi \ S
  std::vector<RootVec> basis;    // gamma followed by the simple roots in rest
  DiagramComponents components;  // classification of the generalized diagram
};

enum class BasisSide { Min, Max };

Stratum stratum(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta);

/// Roots whose S-coordinates are an integer multiple of beta's; a root
/// subsystem of the ambient system.
std::vector<RootVec> z_stratum(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta);

SubsystemBasis z_stratum_basis(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta,
                               BasisSide side);

/// One (Pi \ S)-dominant root per length present, maximal length first. The
/// first entry is always max_root.
std::vector<RootVec> dominant_in_stratum(const RootSystem& rs, const std::vector<int>& S,
                                         const RootVec& beta);

/// Structural trichotomy computed from min_root's length and the component
/// of min_root in the diagram of {min} u (Pi \ S), not from a length scan.
LengthProfile length_profile(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta);

/// True iff every short simple root in S has its beta-coordinate divisible by
/// the lacing number; equivalent to the stratum containing long roots.
bool lacing_criterion(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta);

/// For a short positive root mu with full support in a multiply laced system:
/// a short simple root gamma with mu+gamma a root and lacing not dividing the
/// gamma-coordinate of mu. Returns the smallest such index.
int short_witness(const RootSystem& rs, const RootVec& mu);

/// Stratum of the affine hyperplane at level k of the coweight of alpha_i.
Stratum level_stratum(const RootSystem& rs, int i, int k);

}  // namespace rootstrata

#endif
