#include "rootstrata/json_io.hpp"

namespace rootstrata {

Json to_json(const RationalVec& v) {
  Json arr = Json::array();
  for (const Rational& r : v) arr.push_back(to_string(r));
  return arr;
}

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["family"] = std::string(1, static_cast<char>(rs.spec().family));
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  Json roots = Json::array();
  for (const RootVec& r : rs.roots()) roots.push_back(r);
  j["roots"] = roots;
  j["marks"] = rs.marks();
  j["highest_root"] = rs.highest_root();
  j["lacing"] = rs.lacing();
  return j;
}

Json stratum_json(const RootSystem& rs, const Stratum& st, const RootVec& beta, int orbit_count) {
  (void)rs;
  Json j;
  Json s = Json::array();
  for (int i : st.S) s.push_back(i + 1);
  j["S"] = s;
  j["beta"] = beta;
  Json roots = Json::array();
  for (const RootVec& r : st.roots) roots.push_back(r);
  j["roots"] = roots;
  if (st.min_root) j["min"] = *st.min_root;
  if (st.max_root) j["max"] = *st.max_root;
  j["profile"] = to_string(st.lengths_present);
  if (st.max_short) j["max_short"] = *st.max_short;
  if (orbit_count >= 0) j["orbit_count"] = orbit_count;
  return j;
}

Json orbit_json(const OrbitReport& rep) {
  Json j;
  Json gens = Json::array();
  for (int g : rep.generators) gens.push_back(g + 1);
  j["generators"] = gens;
  j["seed"] = to_json(rep.seed);
  j["orbit_size"] = rep.orbit_size();
  j["dominant"] = to_json(rep.dominant);
  return j;
}

Json face_json(const FaceDescriptor& f) {
  Json j;
  if (f.subsets.size() == 1) {
    Json ids = Json::array();
    for (int v : f.subsets[0]) ids.push_back(v + 1);
    j["I"] = ids;
  } else {
    Json per = Json::array();
    for (const auto& s : f.subsets) {
      Json ids = Json::array();
      for (int v : s) ids.push_back(v + 1);
      per.push_back(ids);
    }
    j["I"] = per;
  }
  j["functional"] = to_json(f.functional);
  Json verts = Json::array();
  for (const RootVec& v : f.vertices) verts.push_back(v);
  j["vertices"] = verts;
  j["barycenter"] = to_json(f.barycenter);
  j["dimension"] = f.dimension;
  return j;
}

Json dilation_json(int alpha, int k, const Rational& r_min, bool bound_ok) {
  Json j;
  j["alpha"] = alpha + 1;
  j["k"] = k;
  j["r_min"] = to_string(r_min);
  j["bound_ok"] = bound_ok;
  return j;
}

Json count_json(const std::string& system, int alpha, const BigInt& formula, const BigInt& brute) {
  Json j;
  j["system"] = system;
  j["alpha"] = alpha + 1;
  j["formula"] = formula.get_str();
  j["brute"] = brute.get_str();
  j["match"] = (formula == brute);
  return j;
}

}  // namespace rootstrata
