#ifndef ROOTSTRATA_TYPES_HPP
#define ROOTSTRATA_TYPES_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rootstrata {

/// Exact rational scalar. No floating point is used anywhere in the library.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Integer coefficient vector of a root in the simple-root basis.
using RootVec = std::vector<int>;

/// Rational coefficient vector in the simple-root basis (weights, coweights,
/// projections, barycenters).
using RationalVec = std::vector<Rational>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Type and rank of an irreducible crystallographic root system.
///
/// Rank bounds: A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2.  B2 is the
/// canonical name for the rank-2 doubly laced system, so "C2" is normalized
/// to B2 and "D3" to A3 on construction.
struct RootSystemSpec {
  Family family;
  int rank;

  RootSystemSpec(Family f, int r);

  /// Parse a spec string such as "A5", "E8", "G2".
  static RootSystemSpec parse(std::string_view s);

  std::string name() const;

  bool operator==(const RootSystemSpec&) const = default;
  bool operator<(const RootSystemSpec& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

int height(const RootVec& v);
RationalVec to_rational(const RootVec& v);
RationalVec zero_vec(int n);
RationalVec add(const RationalVec& a, const RationalVec& b);
RationalVec sub(const RationalVec& a, const RationalVec& b);
RationalVec scale(const RationalVec& a, const Rational& s);

/// "p/q" in lowest terms; bare "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const RationalVec& v);
std::string to_string(const RootVec& v);

}  // namespace rootstrata

#endif
