#pragma once

// Large skew sets from quadric configurations: the quadric through three
// skew lines, its two rulings, the star chords of one ruling paired into
// dual pairs, and the cross-lines joining star points on three lines of
// the other ruling.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "skewlines/surface.hpp"

namespace skewlines {

/// Coefficients of xx, xy, xz, xw, yy, yz, yw, zz, zw, ww; the first
/// nonzero coefficient is 1.
struct QuadraticForm {
  std::array<FieldElem, 10> coeffs{};

  friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

FieldElem evaluate(const FieldSpec& f, const QuadraticForm& q, const Vec4& v);
/// Q(a + b) - Q(a) - Q(b).
FieldElem polar(const FieldSpec& f, const QuadraticForm& q, const Vec4& a, const Vec4& b);

struct Ruling {
  /// All q^2 + 1 lines of the ruling, sorted.
  std::vector<ProjLine> lines;
  /// Table indices of the q + 1 ruling lines lying on X, sorted.
  std::vector<int> surface;
};

struct QuadricConfig {
  QuadraticForm quadric;
  /// rulings[0] contains the three defining lines.
  std::array<Ruling, 2> rulings;

  /// The 2q + 2 lines of X on the quadric, sorted.
  std::vector<int> surface_lines() const;
};

/// The unique quadric through three pairwise skew lines of X. Throws NotSkew
/// or DegenerateQuadric.
QuadricConfig quadric_through(const Surface& s, const ProjLine& m1, const ProjLine& m2,
                              const ProjLine& m3);
QuadricConfig quadric_through(const Surface& s, const std::array<int, 3>& triple);

struct StarChordPairing {
  /// Non-surface lines of the ruling carrying q + 1 star points.
  std::vector<ProjLine> chords;
  /// Star point indices on each chord.
  std::vector<std::vector<int>> chord_stars;
  /// Dual pairs as chord positions (first < second), ordered by first.
  std::vector<std::pair<int, int>> pairs;
};

/// Throws ChordCountMismatch or PairingFailure.
StarChordPairing star_chords(const Surface& s, const QuadricConfig& cfg, int ruling);

struct LargeSkewSet {
  /// Sorted line indices.
  std::vector<int> lines;
  int ruling = 0;
  std::array<int, 3> triple{};
  std::vector<bool> signs;
};

inline int large_skew_set_size(int q) { return (q + 1) + 3 * q * (q - 1) / 2; }

/// The q + 1 surface lines of the chord ruling plus three cross-lines per
/// dual pair. sign false picks {p1p2', p2p3', p3p1'}, true picks
/// {p1p3', p2p1', p3p2'}. triple holds three surface lines of the other
/// ruling. Throws CrossLineOffSurface or NotSkewInternal.
LargeSkewSet build_large_skew_set(const Surface& s, const QuadricConfig& cfg, int ruling,
                                  const std::array<int, 3>& triple,
                                  const std::vector<bool>& signs,
                                  const StarChordPairing& pairing);
LargeSkewSet build_large_skew_set(const Surface& s, const QuadricConfig& cfg, int ruling,
                                  const std::array<int, 3>& triple,
                                  const std::vector<bool>& signs);

struct Extension {
  std::vector<int> clique;
  /// Common neighbours available before each greedy step (the last entry
  /// is empty).
  std::vector<std::vector<int>> candidates;

  int added() const { return static_cast<int>(candidates.size()) - 1; }
  bool unique() const;
};

/// Greedily adds the smallest common neighbour until the clique is maximal.
Extension extend_to_maximal(const std::vector<int>& clique, const SkewGraph& g);

/// (q+1) q (q-1) / 3 * 2^{q(q-1)/2}, as a decimal string.
std::string lower_bound_count(int q);
/// (q^3 + 1)(q^2 + 1) q^4 / 2.
long long quadric_config_count(int q);

struct MultiplicityReport {
  long long configs = 0;
  long long expected_configs = 0;
  long long generated = 0;
  long long distinct = 0;
  /// multiplicity -> number of distinct maximal sets arising that often
  std::map<long long, long long> multiplicity;
  /// size of maximal extension -> number of distinct sets
  std::map<int, long long> sizes;
  /// Pairs of outputs from one configuration that were checked for joint
  /// extendability, and how many were jointly extendable.
  long long pairs_checked = 0;
  long long pairs_jointly_extendable = 0;
};

/// Every quadric configuration (deduplicated over skew triples by canonical
/// quadric) and every construction output from it. Throws ConfigCountMismatch.
MultiplicityReport census_from_quadrics(const Surface& s, int jobs = 1);

}  // namespace skewlines
