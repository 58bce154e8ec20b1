#pragma once

// Permutations of line indices, explicit group closure, the stabilizer of an
// ordered base triple, and automorphisms of X induced by semilinear maps.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skewlines/geometry.hpp"
#include "skewlines/skew_graph.hpp"
#include "skewlines/vertex_set.hpp"

namespace skewlines {

class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionViolated unless images is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& a);
VertexSet apply_to_set(const Permutation& a, const VertexSet& s);
/// Sorted image of a vertex list.
std::vector<int> apply_to_clique(const Permutation& a, std::span<const int> vs);

/// Compact explicit list of permutations of a common degree, stored
/// row-major as 16-bit images.
class PermList {
 public:
  using Point = std::uint16_t;

  PermList() = default;
  explicit PermList(int degree) : degree_(degree) {}
  static PermList from(std::span<const Permutation> perms);

  int degree() const { return degree_; }
  std::size_t size() const { return degree_ == 0 ? 0 : data_.size() / degree_; }
  bool empty() const { return size() == 0; }
  int image(std::size_t i, int x) const { return data_[i * degree_ + x]; }
  std::span<const Point> operator[](std::size_t i) const {
    return {data_.data() + i * degree_, static_cast<std::size_t>(degree_)};
  }
  void push_back(const Permutation& p);
  void push_back(std::span<const Point> images);
  void reserve(std::size_t n) { data_.reserve(n * degree_); }
  Permutation at(std::size_t i) const;
  /// Elements fixing v.
  PermList fixing(int v) const;
  std::vector<Permutation> to_vector() const;

 private:
  int degree_ = 0;
  std::vector<Point> data_;
};

struct SemilinearMap {
  /// Point map v -> matrix * sigma(v), sigma = x -> x^{p^frobenius_power}.
  std::array<Vec4, 4> matrix{};
  int frobenius_power = 0;

  static SemilinearMap identity();
};

Vec4 apply_map(const FieldSpec& f, const SemilinearMap& m, const Vec4& v);
/// Induced permutation of line indices; throws NotAnAutomorphism if some
/// image line is not in the table.
Permutation semilinear_to_perm(const FieldSpec& f, const SemilinearMap& m,
                               const LineTable& table);

using Block2 = std::array<std::array<FieldElem, 2>, 2>;
/// First non-monomial M (lexicographic over FieldSpec::elements()) with
/// conj(M)^T M = lambda I, lambda in GF(q)*.
Block2 find_unitary_block(const FieldSpec& f);
bool is_unitary_block(const FieldSpec& f, const Block2& m);

struct NamedGenerator {
  std::string name;
  SemilinearMap map;
  Permutation perm;
};

/// Coordinate transpositions, diag(c,1,1,1) with c of order q+1, the
/// Frobenius x -> x^p, and a unitary 2x2 block on (x, y).
std::vector<NamedGenerator> builtin_generator_maps(const FieldSpec& f,
                                                   const LineTable& table);
std::vector<Permutation> builtin_generators(const FieldSpec& f, const LineTable& table);

bool preserves_adjacency(const Permutation& p, const SkewGraph& g);

/// Breadth-first closure of the generators (identity included). Throws
/// ClosureCapExceeded once the group exceeds cap elements.
std::vector<Permutation> closure(std::span<const Permutation> gens,
                                 std::size_t cap = 10'000'000);

struct StabChainResult {
  std::vector<int> base;
  /// orbits[i] = orbit of base[i] under the stabilizer of base[0..i-1].
  std::vector<std::vector<int>> orbits;
  /// Explicit elements fixing every base point.
  std::vector<Permutation> stabilizer;
  /// Sifted random elements that passed after the last change.
  int confirmations = 0;

  /// prod |orbits[i]| * |stabilizer|.
  long long group_order() const;
};

struct StabChainOptions {
  std::size_t cap = 10'000'000;
  std::uint64_t seed = 0x5eed;
  /// Consecutive random elements that must sift through unchanged.
  int confirmations = 64;
};

/// Orbit-stabilizer chain for the given base points: orbit and transversal
/// of each base point under the stabilizer of its predecessors, with
/// stabilizer generators found by sifting Schreier generators and random
/// group elements; the final pointwise stabilizer is enumerated explicitly.
StabChainResult stabilizer_chain(std::span<const Permutation> gens,
                                 std::span<const int> base,
                                 const StabChainOptions& opts = {});

/// Explicit list of elements of <gens> fixing v0, v1 and v2.
std::vector<Permutation> triple_stabilizer(std::span<const Permutation> gens,
                                           const std::array<int, 3>& base,
                                           const StabChainOptions& opts = {});

struct TransitivityReport {
  long long orbit_size = 0;
  long long skew_triples = 0;
  bool transitive() const { return orbit_size == skew_triples; }
};

/// Compares the orbit of the ordered base triple under <gens> with the
/// number of ordered skew triples of g. Throws NotSkewTriple.
TransitivityReport transitivity_check(std::span<const Permutation> gens,
                                      const SkewGraph& g,
                                      const std::array<int, 3>& base);

long long count_ordered_triangles(const SkewGraph& g);

/// Union of the orbits of the given vertex sets under <gens>, computed by
/// breadth-first search on sets (no group enumeration).
std::set<std::vector<int>> orbit_of_sets(const std::vector<std::vector<int>>& seeds,
                                         std::span<const Permutation> gens);

/// Moon-Moser automorphisms: swap and 3-cycle inside block 0, plus block
/// transposition and block cycle when k allows.
std::vector<Permutation> moon_moser_generators(int k);
/// All k! * 6^k automorphisms, enumerated directly.
PermList moon_moser_group(int k);

/// One permutation per line as n space-separated 0-based images.
void write_permutations(std::ostream& os, std::span<const Permutation> perms);
std::vector<Permutation> read_permutations(std::istream& is);

}  // namespace skewlines
