#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "rootstrata/enumeration.hpp"
#include "rootstrata/json_io.hpp"
#include "rootstrata/orbits.hpp"
#include "rootstrata/polytope.hpp"
#include "rootstrata/strata.hpp"
#include "rootstrata/verify.hpp"

namespace {

using namespace rootstrata;

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<int> parse_subset(const std::string& s, int rank) {
  std::vector<int> out = parse_csv(s);
  for (int& v : out) {
    if (v < 1 || v > rank) throw std::invalid_argument("index " + std::to_string(v) + " out of range");
    v -= 1;  // CLI uses 1-based Bourbaki indices
  }
  return out;
}

RootVec parse_beta(const std::string& s, int rank) {
  std::vector<int> out = parse_csv(s);
  if (static_cast<int>(out.size()) != rank) {
    throw std::invalid_argument("beta must have " + std::to_string(rank) + " coordinates");
  }
  return out;
}

int cmd_info(const std::string& spec_str, bool json) {
  const RootSystem& rs = canonical_system(RootSystemSpec::parse(spec_str));
  if (json) {
    std::cout << root_system_json(rs).dump(2) << "\n";
    return 0;
  }
  std::printf("%s: rank %d, lacing %d, %zu roots, coxeter number %zu\n", rs.spec().name().c_str(),
              rs.rank(), rs.lacing(), rs.roots().size(), rs.roots().size() / rs.rank());
  std::printf("marks: %s   highest root: %s\n", to_string(rs.marks()).c_str(),
              to_string(rs.highest_root()).c_str());
  std::printf("cartan:\n");
  for (int i = 0; i < rs.rank(); ++i) {
    std::printf(" ");
    for (int j = 0; j < rs.rank(); ++j) std::printf(" %2d", rs.cartan()[i][j]);
    std::printf("\n");
  }
  std::printf("positive roots by height:\n");
  for (const RootVec& r : rs.positive_roots()) {
    std::printf("  h=%-2d %s%s\n", height(r), to_string(r).c_str(),
                rs.is_long(r) ? "" : "  (short)");
  }
  std::printf("(together with their %zu negatives)\n", rs.positive_roots().size());
  return 0;
}

int cmd_strata(const std::string& spec_str, const std::string& s_str, const std::string& beta_str,
               int alpha, int k, bool json) {
  const RootSystem& rs = canonical_system(RootSystemSpec::parse(spec_str));
  Stratum st;
  RootVec beta;
  if (!s_str.empty() && !beta_str.empty()) {
    std::vector<int> S = parse_subset(s_str, rs.rank());
    beta = parse_beta(beta_str, rs.rank());
    st = stratum(rs, S, beta);
  } else if (alpha >= 1) {
    if (alpha > rs.rank()) throw std::invalid_argument("--alpha out of range");
    st = level_stratum(rs, alpha - 1, k);
    beta = st.roots.empty() ? RootVec(rs.rank(), 0) : st.roots.front();
  } else {
    throw std::invalid_argument("strata needs either --S and --beta, or --alpha and --k");
  }
  int orbit_count = -1;
  if (st.nontrivial) orbit_count = oshima_check(rs, st.S, beta).first;
  if (json) {
    std::cout << stratum_json(rs, st, beta, orbit_count).dump(2) << "\n";
    return 0;
  }
  std::printf("stratum of %s: %zu roots, profile %s\n", rs.spec().name().c_str(), st.roots.size(),
              to_string(st.lengths_present));
  if (st.min_root) std::printf("min: %s\n", to_string(*st.min_root).c_str());
  if (st.max_root) std::printf("max: %s\n", to_string(*st.max_root).c_str());
  if (st.max_short) std::printf("max short: %s\n", to_string(*st.max_short).c_str());
  if (orbit_count >= 0) std::printf("parabolic orbits: %d\n", orbit_count);
  for (const RootVec& r : st.roots) {
    std::printf("  %s%s\n", to_string(r).c_str(), rs.is_long(r) ? "" : "  (short)");
  }
  return 0;
}

int cmd_oshima(const std::string& spec_str, const std::string& s_str, const std::string& beta_str,
               bool json) {
  const RootSystem& rs = canonical_system(RootSystemSpec::parse(spec_str));
  std::vector<int> S = parse_subset(s_str, rs.rank());
  RootVec beta = parse_beta(beta_str, rs.rank());
  auto [orbits, lengths] = oshima_check(rs, S, beta);
  bool pass = orbits == lengths;
  if (json) {
    Json j;
    Json s = Json::array();
    for (int i : S) s.push_back(i + 1);
    j["S"] = s;
    j["beta"] = beta;
    j["orbits"] = orbits;
    j["lengths"] = lengths;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("orbits=%d lengths=%d %s\n", orbits, lengths, pass ? "pass" : "FAIL");
  }
  return pass ? 0 : 1;
}

int cmd_faces(const std::string& spec_str, int max_size, bool json) {
  const RootSystem& rs = canonical_system(RootSystemSpec::parse(spec_str));
  bool all_ok = true;
  Json arr = Json::array();
  for (const auto& I : extremal_subsets(rs, max_size)) {
    if (I.empty()) continue;
    FaceDescriptor f = standard_face(rs, I);
    bool certificate = f.dimension == rs.rank() - static_cast<int>(I.size());
    std::set<RootVec> vertex_set(f.vertices.begin(), f.vertices.end());
    for (const RootVec& gamma : rs.roots()) {
      Rational val = rs.pairing(gamma, f.functional);
      if (val > 1 || (val == 1) != (vertex_set.count(gamma) > 0)) certificate = false;
    }
    for (int v = 0; v < rs.rank() && certificate; ++v) {
      if (rs.cartan_pairing(f.barycenter, v) < 0) certificate = false;
    }
    all_ok = all_ok && certificate;
    if (json) {
      Json e = face_json(f);
      e["certificate"] = certificate;
      arr.push_back(e);
    } else {
      std::string ids;
      for (size_t i = 0; i < I.size(); ++i) ids += (i ? "," : "") + std::to_string(I[i] + 1);
      std::printf("I={%s}: dim %d, %zu vertices, barycenter %s  %s\n", ids.c_str(), f.dimension,
                  f.vertices.size(), to_string(f.barycenter).c_str(),
                  certificate ? "ok" : "CERTIFICATE FAILED");
    }
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_ralpha(const std::string& spec_str, int alpha, int k, bool json) {
  const RootSystem& rs = canonical_system(RootSystemSpec::parse(spec_str));
  bool all_ok = true;
  Json arr = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Rational r = r_alpha(rs, i);
    bool ok = r < 2;
    all_ok = all_ok && ok;
    if (json) {
      arr.push_back(dilation_json(i, 1, r, ok));
    } else {
      std::printf("r_alpha(%s, alpha_%d) = %-8s %s\n", rs.spec().name().c_str(), i + 1,
                  to_string(r).c_str(), ok ? "< 2" : ">= 2 (BOUND FAILED)");
    }
  }
  if (alpha >= 1) {
    if (alpha > rs.rank()) throw std::invalid_argument("--alpha out of range");
    int level = k == 0 ? 1 : k;
    Rational oracle = min_dilation_oracle(rs, alpha - 1, level);
    if (json) {
      Json e = dilation_json(alpha - 1, level, oracle, oracle < 2);
      e["method"] = "oracle";
      arr.push_back(e);
    } else {
      std::printf("oracle min dilation at alpha_%d level %d: %s\n", alpha, level,
                  to_string(oracle).c_str());
    }
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_counts(const std::string& spec_str, bool iterando, bool json) {
  const RootSystem& rs = canonical_system(RootSystemSpec::parse(spec_str));
  Family f = rs.spec().family;
  bool classical = f == Family::A || f == Family::B || f == Family::C || f == Family::D;
  bool all_ok = true;
  Json out;
  Json level1 = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    BigInt formula = level1_same_length_count(rs, i);
    BigInt brute = level1_same_length_brute(rs, i);
    all_ok = all_ok && formula == brute;
    if (json) {
      level1.push_back(count_json(rs.spec().name(), i, formula, brute));
    } else {
      std::printf("level-1 same-length count at alpha_%d: formula %s brute %s %s\n", i + 1,
                  formula.get_str().c_str(), brute.get_str().c_str(),
                  formula == brute ? "match" : "MISMATCH");
    }
  }
  if (json) out["level1"] = level1;
  if (classical) {
    Json leaves = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
      if (!is_leaf(rs, i)) continue;
      BigInt formula = leaf_support_count(rs, i);
      BigInt brute = leaf_support_brute(rs, i);
      all_ok = all_ok && formula == brute;
      bool coxeter = true;
      if (f == Family::A || f == Family::D) {
        coxeter = coxeter_identity_check(rs, i);
        all_ok = all_ok && coxeter;
      }
      if (json) {
        Json e = count_json(rs.spec().name(), i, formula, brute);
        if (f == Family::A || f == Family::D) e["coxeter_identity"] = coxeter;
        leaves.push_back(e);
      } else {
        std::printf("leaf support count at alpha_%d: formula %s brute %s %s", i + 1,
                    formula.get_str().c_str(), brute.get_str().c_str(),
                    formula == brute ? "match" : "MISMATCH");
        if (f == Family::A || f == Family::D) {
          std::printf("  coxeter identity %s", coxeter ? "holds" : "FAILS");
        }
        std::printf("\n");
      }
    }
    if (json) out["leaves"] = leaves;
  }
  if (iterando) {
    Json peeling = Json::array();
    for (bool long_class : {true, false}) {
      auto seqs = valid_peeling_sequences(rs, long_class);
      if (seqs.empty() || seqs.front().order.empty()) continue;
      std::set<std::string> sums;
      for (const PeelingSequence& s : seqs) sums.insert(iterando_sum(rs, s, !classical).get_str());
      BigInt expect = 0;
      for (const RootVec& g : rs.positive_roots()) {
        if (rs.is_long(g) == long_class) ++expect;
      }
      if (classical) all_ok = all_ok && sums.size() == 1 && *sums.begin() == expect.get_str();
      if (json) {
        Json e;
        e["length_class"] = long_class ? "long" : "short";
        e["sequences"] = seqs.size();
        Json sj = Json::array();
        for (const auto& s : sums) sj.push_back(s);
        e["sums"] = sj;
        e["positive_roots_of_class"] = expect.get_str();
        if (!classical && sums.size() > 1) e["warning"] = "sum depends on the peeling order";
        peeling.push_back(e);
      } else {
        std::string sums_str;
        for (const auto& s : sums) sums_str += (sums_str.empty() ? "" : ", ") + s;
        std::printf("peeling sums (%s class): {%s} over %zu sequences; positive roots of class: %s\n",
                    long_class ? "long" : "short", sums_str.c_str(), seqs.size(),
                    expect.get_str().c_str());
        if (!classical && sums.size() > 1) {
          std::printf("  warning: outside the classical types the sum depends on the order\n");
        }
      }
    }
    if (json) out["peeling"] = peeling;
  }
  if (json) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_verify(int max_rank, bool deep, bool serial, bool json) {
  VerifyOptions opt;
  opt.max_rank = max_rank;
  opt.deep = deep;
  opt.parallel = !serial;
  VerifyReport rep = run_verify(opt);
  if (json) {
    std::cout << verify_report_json(opt, rep).dump(2) << "\n";
  } else {
    for (const CheckResult& c : rep.checks) {
      std::printf("%s %-45s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    }
    std::printf("%d passed, %d failed\n", rep.passed, rep.failed);
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for crystallographic root systems"};
  app.require_subcommand(1);

  std::string spec;
  std::string s_str, beta_str;
  int alpha = 0, k = 0, max_size = 2, max_rank = 8;
  bool json = false, deep = false, serial = false, iterando = false;

  auto* info = app.add_subcommand("info", "print a root system");
  info->add_option("spec", spec)->required();
  info->add_flag("--json", json);

  auto* strata_cmd = app.add_subcommand("strata", "stratum of an affine slice");
  strata_cmd->add_option("spec", spec)->required();
  strata_cmd->add_option("--S", s_str, "1-based simple root indices, comma separated");
  strata_cmd->add_option("--beta", beta_str, "coordinates of beta, comma separated");
  strata_cmd->add_option("--alpha", alpha, "1-based simple root for a level stratum");
  strata_cmd->add_option("--k", k, "level");
  strata_cmd->add_flag("--json", json);

  auto* oshima = app.add_subcommand("oshima", "parabolic orbit count on a stratum");
  oshima->add_option("spec", spec)->required();
  oshima->add_option("--S", s_str)->required();
  oshima->add_option("--beta", beta_str)->required();
  oshima->add_flag("--json", json);

  auto* faces = app.add_subcommand("faces", "standard parabolic faces and certificates");
  faces->add_option("spec", spec)->required();
  faces->add_option("--max-size", max_size, "largest extremal subset size");
  faces->add_flag("--json", json);

  auto* ralpha = app.add_subcommand("ralpha", "least dilation constants");
  ralpha->add_option("spec", spec)->required();
  ralpha->add_option("--alpha", alpha, "also run the oracle at this simple root");
  ralpha->add_option("--k", k, "oracle level (default 1)");
  ralpha->add_flag("--json", json);

  auto* counts = app.add_subcommand("counts", "enumerative identities");
  counts->add_option("spec", spec)->required();
  counts->add_flag("--iterando", iterando, "include the peeling sums");
  counts->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--max-rank", max_rank, "largest rank to cover (<= 8)");
  verify->add_flag("--deep", deep, "enable the rank <= 4 brute-force and LP oracles");
  verify->add_flag("--serial", serial, "use the serial reference runner");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(spec, json);
    if (strata_cmd->parsed()) return cmd_strata(spec, s_str, beta_str, alpha, k, json);
    if (oshima->parsed()) return cmd_oshima(spec, s_str, beta_str, json);
    if (faces->parsed()) return cmd_faces(spec, max_size, json);
    if (ralpha->parsed()) return cmd_ralpha(spec, alpha, k, json);
    if (counts->parsed()) return cmd_counts(spec, iterando, json);
    if (verify->parsed()) return cmd_verify(max_rank, deep, serial, json);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
