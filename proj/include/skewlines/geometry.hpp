#pragma once

// Points, lines and star points of the Hermitian surface
// X = V(x^{q+1} + y^{q+1} + z^{q+1} + w^{q+1}) in P^3 over GF(q^2).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewlines/field.hpp"

namespace skewlines {

using Vec4 = std::array<FieldElem, 4>;
using Matrix = std::vector<std::vector<FieldElem>>;

/// A projective point scaled so that its first nonzero coordinate is 1.
struct ProjPoint {
  Vec4 coords{};

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// A projective line stored as the reduced row-echelon form of a 2x4
/// spanning matrix; two lines are equal iff their bases are equal.
struct ProjLine {
  std::array<Vec4, 2> basis{};

  friend auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

struct PointHash {
  std::size_t operator()(const ProjPoint& p) const;
};
struct LineHash {
  std::size_t operator()(const ProjLine& l) const;
};

// ---- linear algebra over GF(q^2) ----

/// Reduces m to RREF in place (zero rows moved last) and returns the rank.
int row_reduce(const FieldSpec& f, Matrix& m);
/// Basis (as rows) of { x : a x = 0 } for a matrix with `cols` columns.
Matrix nullspace(const FieldSpec& f, const Matrix& a, int cols);
int rank4(const FieldSpec& f, const std::array<Vec4, 4>& rows);

ProjPoint canonical_point(const FieldSpec& f, const Vec4& v);
/// Line spanned by two independent vectors.
ProjLine line_through(const FieldSpec& f, const Vec4& a, const Vec4& b);
/// Line cut out by two independent linear forms.
ProjLine line_from_forms(const FieldSpec& f, const Vec4& g, const Vec4& h);
/// The q^2 + 1 points of a line, in the order [1:0], [s:1] for s in
/// FieldSpec::elements().
std::vector<ProjPoint> points_on(const FieldSpec& f, const ProjLine& l);
bool contains(const FieldSpec& f, const ProjLine& l, const Vec4& p);

/// True iff the lines share a point. Throws SameLine when l1 == l2.
bool lines_meet(const FieldSpec& f, const ProjLine& l1, const ProjLine& l2);
std::optional<ProjPoint> intersection(const FieldSpec& f, const ProjLine& l1,
                                      const ProjLine& l2);

/// x^{q+1} + y^{q+1} + z^{q+1} + w^{q+1}.
FieldElem surface_form(const FieldSpec& f, const Vec4& v);
bool point_on_surface(const FieldSpec& f, const Vec4& v);
bool line_on_surface(const ProjLine& l, const FieldSpec& f);

/// Every point of P^3(GF(q^2)).
std::vector<ProjPoint> all_points(const FieldSpec& f);
/// Every line of P^3(GF(q^2)), enumerated by RREF pivot pattern.
std::vector<ProjLine> all_lines(const FieldSpec& f);
/// Oracle: scan all lines of P^3 and keep those contained in X.
std::vector<ProjLine> scan_surface_lines(const FieldSpec& f);

std::string format_vec(const FieldSpec& f, const Vec4& v);

class LineTable {
 public:
  int q = 0;
  std::vector<ProjLine> lines;
  /// Family k occupies [family_start[k], family_start[k + 1]).
  std::array<int, 5> family_start{};
  /// Exponents a_i of the fourth family, ascending.
  std::vector<int> a;
  /// For each i, the ascending exponents a_{i,j} of the (q+1)-st roots of
  /// -1 - mu^{(q+1) a_i}.
  std::vector<std::vector<int>> a_roots;

  /// Builds the lookup index; throws DuplicateLine on repeats. Families are
  /// left as a single block.
  static LineTable from_lines(int q, std::vector<ProjLine> lines);

  int size() const { return static_cast<int>(lines.size()); }
  std::optional<int> index_of(const ProjLine& l) const;
  int family_of(int index) const;

  friend LineTable enumerate_lines(const FieldSpec& f);

 private:
  void rebuild_index();
  std::unordered_map<ProjLine, int, LineHash> index_;
};

/// Lines of X in the fixed order:
///   L_{i(q+1)+j}            = V(x + nu^{2i+1} y, z + nu^{2j+1} w)
///   L_{(q+1)^2+i(q+1)+j}    = V(x + nu^{2i+1} z, y + nu^{2j+1} w)
///   L_{2(q+1)^2+i(q+1)+j}   = V(x + nu^{2i+1} w, y + nu^{2j+1} z)
///   L_{(3+i)(q+1)^2+j(q+1)+k} =
///       V(-x + mu^{a_i} y + mu^{a_ij} w, -mu^{q a_i} x - y + mu^{a_ik} z)
/// where a_i runs over exponents with mu^{(q+1)a} != -1.
LineTable enumerate_lines(const FieldSpec& f);

inline long long expected_line_count(long long q) {
  return q * q * q * q + q * q * q + q + 1;
}
inline long long expected_star_count(long long q) {
  return q * q * q * q * q + q * q * q + q * q + 1;
}

class StarPointTable {
 public:
  std::vector<ProjPoint> points;
  /// Sorted indices of lines through each point.
  std::vector<std::vector<int>> lines_through;
  /// Sorted indices of star points on each line.
  std::vector<std::vector<int>> points_on_line;

  int size() const { return static_cast<int>(points.size()); }
  std::optional<int> index_of(const ProjPoint& p) const;
  /// Star point where lines i and j meet, or -1 if they are skew or equal.
  int meet_point(int i, int j) const {
    return meet_[static_cast<std::size_t>(i) * n_lines_ + j];
  }
  int line_count() const { return n_lines_; }

  friend StarPointTable collect_star_points(const FieldSpec& f,
                                            const LineTable& table);

 private:
  int n_lines_ = 0;
  std::vector<int> meet_;
  std::unordered_map<ProjPoint, int, PointHash> index_;
};

/// Pairwise intersection points of the table's lines, without count checks.
StarPointTable collect_star_points(const FieldSpec& f, const LineTable& table);
/// As collect_star_points, but throws CountMismatch unless the count is
/// q^5 + q^3 + q^2 + 1.
StarPointTable star_points(const FieldSpec& f, const LineTable& table);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct GqReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Checks the GQ(q^2, q) axioms and triangle-freeness.
GqReport verify_gq(const FieldSpec& f, const LineTable& table,
                   const StarPointTable& stars);

}  // namespace skewlines
