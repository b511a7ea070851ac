#include "rootstrata/types.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rootstrata {

namespace {

void check_rank(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, static_cast<char>(f)));
  }
}

}  // namespace

RootSystemSpec::RootSystemSpec(Family f, int r) : family(f), rank(r) {
  if (family == Family::C && rank == 2) family = Family::B;
  if (family == Family::D && rank == 3) family = Family::A;
  check_rank(family, rank);
}

RootSystemSpec RootSystemSpec::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("bad root system spec: '" + std::string(s) + "'");
  char f = s[0];
  if (f < 'A' || f > 'G') {
    throw std::invalid_argument("bad root system family: '" + std::string(s) + "'");
  }
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("bad root system rank: '" + std::string(s) + "'");
    }
    rank = rank * 10 + (s[i] - '0');
    if (rank > 64) throw std::invalid_argument("rank out of range: '" + std::string(s) + "'");
  }
  return RootSystemSpec(static_cast<Family>(f), rank);
}

std::string RootSystemSpec::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

RationalVec to_rational(const RootVec& v) {
  RationalVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

RationalVec zero_vec(int n) { return RationalVec(n, Rational(0)); }

RationalVec add(const RationalVec& a, const RationalVec& b) {
  RationalVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVec sub(const RationalVec& a, const RationalVec& b) {
  RationalVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVec scale(const RationalVec& a, const Rational& s) {
  RationalVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const RationalVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const RootVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace rootstrata
