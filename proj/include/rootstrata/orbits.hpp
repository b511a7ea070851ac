#ifndef ROOTSTRATA_ORBITS_HPP
#define ROOTSTRATA_ORBITS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rootstrata/root_system.hpp"
#include "rootstrata/types.hpp"

namespace rootstrata {

struct OrbitReport {
  std::vector<int> generators;
  RationalVec seed;
  std::vector<RationalVec> elements;  // sorted by coefficients
  RationalVec dominant;               // the unique element in the generator chamber
  size_t orbit_size() const { return elements.size(); }
};

/// Orbit-size guard, default 10^7; ROOTSTRATA_ORBIT_BOUND overrides it.
size_t default_orbit_bound();

/// Simple reflection as a free function, for callers that work with indices.
RationalVec reflect(const RootSystem& rs, int i, const RationalVec& v);

/// BFS closure of the seed under the generator reflections. Throws when the
/// orbit exceeds the bound (0 means default_orbit_bound()).
OrbitReport orbit(const RootSystem& rs, const std::vector<int>& generators, const RationalVec& seed,
                  size_t bound = 0);

/// The unique element of the orbit with nonnegative pairings against every
/// generator root, reached by reflecting at a negative pairing while one
/// exists.
RationalVec dominant_representative(const RootSystem& rs, const std::vector<int>& generators,
                                    const RationalVec& v);

/// Number of orbits of W<Pi \ S> on the stratum of (S, beta), together with
/// the number of root lengths present there. Oshima's Lemma asserts the two
/// are equal.
std::pair<int, int> oshima_check(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta);

/// Order of the stabilizer of v in the parabolic generated by `generators`:
/// the parabolic subgroup on the generators orthogonal to the dominant
/// representative of v.
BigInt stabilizer_order(const RootSystem& rs, const std::vector<int>& generators, const RationalVec& v);

/// All elements of W<generators> as permutations of rs.roots(). Small-rank
/// oracle; throws when the group order exceeds the bound.
std::vector<std::vector<int>> brute_force_group(const RootSystem& rs, const std::vector<int>& generators,
                                                size_t bound = 1000000);

}  // namespace rootstrata

#endif
