#ifndef ROOTSTRATA_JSON_IO_HPP
#define ROOTSTRATA_JSON_IO_HPP

#include <json.hpp>

#include "rootstrata/orbits.hpp"
#include "rootstrata/polytope.hpp"
#include "rootstrata/root_system.hpp"
#include "rootstrata/strata.hpp"

namespace rootstrata {

// Insertion-ordered JSON keeps reports byte-stable between runs.
using Json = nlohmann::ordered_json;

Json to_json(const RationalVec& v);  // rationals as "p/q" strings in lowest terms

Json root_system_json(const RootSystem& rs);

/// Subset indices are 1-based in all CLI-facing JSON.
Json stratum_json(const RootSystem& rs, const Stratum& st, const RootVec& beta, int orbit_count);

Json orbit_json(const OrbitReport& rep);

Json face_json(const FaceDescriptor& f);

Json dilation_json(int alpha, int k, const Rational& r_min, bool bound_ok);

Json count_json(const std::string& system, int alpha, const BigInt& formula, const BigInt& brute);

}  // namespace rootstrata

#endif
