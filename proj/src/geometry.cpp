#include "skewlines/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

std::size_t mix(std::size_t h, std::int32_t v) {
  h ^= static_cast<std::size_t>(v + 1) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Vec4 scale(const FieldSpec& f, FieldElem c, const Vec4& v) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = f.mul(c, v[i]);
  return out;
}

Vec4 axpy(const FieldSpec& f, FieldElem c, const Vec4& x, const Vec4& y) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = f.add(f.mul(c, x[i]), y[i]);
  return out;
}

bool is_zero_vec(const Vec4& v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x.is_zero(); });
}

int pivot_of(const Vec4& v) {
  for (int i = 0; i < 4; ++i)
    if (!v[i].is_zero()) return i;
  return -1;
}

// Residual of v after removing its component along an RREF line basis.
Vec4 residual(const FieldSpec& f, const ProjLine& l, const Vec4& v) {
  const int c0 = pivot_of(l.basis[0]);
  const int c1 = pivot_of(l.basis[1]);
  Vec4 r = v;
  r = axpy(f, f.neg(v[c0]), l.basis[0], r);
  r = axpy(f, f.neg(v[c1]), l.basis[1], r);
  return r;
}

}  // namespace

std::size_t PointHash::operator()(const ProjPoint& p) const {
  std::size_t h = 0;
  for (auto c : p.coords) h = mix(h, c.log);
  return h;
}

std::size_t LineHash::operator()(const ProjLine& l) const {
  std::size_t h = 0;
  for (const auto& row : l.basis)
    for (auto c : row) h = mix(h, c.log);
  return h;
}

int row_reduce(const FieldSpec& f, Matrix& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const FieldElem inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const FieldElem factor = f.neg(m[r][c]);
      for (int k = 0; k < cols; ++k)
        m[r][k] = f.add(m[r][k], f.mul(factor, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

Matrix nullspace(const FieldSpec& f, const Matrix& a, int cols) {
  Matrix m = a;
  const int rank = row_reduce(f, m);
  std::vector<int> pivots;
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < cols; ++c)
      if (!m[r][c].is_zero()) {
        pivots.push_back(c);
        break;
      }
  Matrix basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) continue;
    std::vector<FieldElem> v(cols, FieldElem::zero());
    v[free_col] = FieldElem::one();
    for (int r = 0; r < rank; ++r) v[pivots[r]] = f.neg(m[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank4(const FieldSpec& f, const std::array<Vec4, 4>& rows) {
  Matrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return row_reduce(f, m);
}

ProjPoint canonical_point(const FieldSpec& f, const Vec4& v) {
  const int piv = pivot_of(v);
  if (piv < 0) throw Error(ErrorCode::PreconditionViolated, "zero vector is not a point");
  return ProjPoint{scale(f, f.inv(v[piv]), v)};
}

ProjLine line_through(const FieldSpec& f, const Vec4& a, const Vec4& b) {
  Matrix m{{a.begin(), a.end()}, {b.begin(), b.end()}};
  if (row_reduce(f, m) != 2)
    throw Error(ErrorCode::PreconditionViolated, "points do not span a line");
  ProjLine l;
  for (int r = 0; r < 2; ++r) std::copy(m[r].begin(), m[r].end(), l.basis[r].begin());
  return l;
}

ProjLine line_from_forms(const FieldSpec& f, const Vec4& g, const Vec4& h) {
  Matrix forms{{g.begin(), g.end()}, {h.begin(), h.end()}};
  Matrix ker = nullspace(f, forms, 4);
  if (ker.size() != 2)
    throw Error(ErrorCode::PreconditionViolated, "forms are dependent");
  Vec4 a, b;
  std::copy(ker[0].begin(), ker[0].end(), a.begin());
  std::copy(ker[1].begin(), ker[1].end(), b.begin());
  return line_through(f, a, b);
}

std::vector<ProjPoint> points_on(const FieldSpec& f, const ProjLine& l) {
  std::vector<ProjPoint> out;
  out.reserve(f.order() + 1);
  out.push_back(canonical_point(f, l.basis[0]));
  for (FieldElem s : f.elements())
    out.push_back(canonical_point(f, axpy(f, s, l.basis[0], l.basis[1])));
  return out;
}

bool contains(const FieldSpec& f, const ProjLine& l, const Vec4& p) {
  return is_zero_vec(residual(f, l, p));
}

bool lines_meet(const FieldSpec& f, const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw Error(ErrorCode::SameLine, "a line is not skew to itself");
  return rank4(f, {l1.basis[0], l1.basis[1], l2.basis[0], l2.basis[1]}) < 4;
}

std::optional<ProjPoint> intersection(const FieldSpec& f, const ProjLine& l1,
                                      const ProjLine& l2) {
  // alpha*r0 + beta*r1 = 0 has a nontrivial solution iff r0, r1 are dependent.
  const Vec4 r0 = residual(f, l2, l1.basis[0]);
  const Vec4 r1 = residual(f, l2, l1.basis[1]);
  const bool z0 = is_zero_vec(r0), z1 = is_zero_vec(r1);
  if (z0 && z1) throw Error(ErrorCode::SameLine, "lines coincide");
  if (z0) return canonical_point(f, l1.basis[0]);
  if (z1) return canonical_point(f, l1.basis[1]);
  const int k = pivot_of(r1);
  const FieldElem lambda = f.div(r0[k], r1[k]);
  if (scale(f, lambda, r1) != r0) return std::nullopt;
  return canonical_point(f, axpy(f, f.neg(lambda), l1.basis[1], l1.basis[0]));
}

FieldElem surface_form(const FieldSpec& f, const Vec4& v) {
  FieldElem s = FieldElem::zero();
  for (auto c : v) s = f.add(s, f.norm(c));
  return s;
}

bool point_on_surface(const FieldSpec& f, const Vec4& v) {
  return surface_form(f, v).is_zero();
}

bool line_on_surface(const ProjLine& l, const FieldSpec& f) {
  for (const auto& p : points_on(f, l))
    if (!point_on_surface(f, p.coords)) return false;
  return true;
}

std::vector<ProjPoint> all_points(const FieldSpec& f) {
  const auto elems = f.elements();
  std::vector<ProjPoint> out;
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    long long total = 1;
    for (int i = 0; i < free; ++i) total *= f.order();
    for (long long idx = 0; idx < total; ++idx) {
      ProjPoint p;
      p.coords.fill(FieldElem::zero());
      p.coords[lead] = FieldElem::one();
      long long rest = idx;
      for (int c = 3; c > lead; --c) {
        p.coords[c] = elems[rest % f.order()];
        rest /= f.order();
      }
      out.push_back(p);
    }
  }
  return out;
}

std::vector<ProjLine> all_lines(const FieldSpec& f) {
  const auto elems = f.elements();
  const int n = f.order();
  std::vector<ProjLine> out;
  for (int c0 = 0; c0 < 4; ++c0) {
    for (int c1 = c0 + 1; c1 < 4; ++c1) {
      std::vector<std::pair<int, int>> free;  // (row, col)
      for (int c = c0 + 1; c < 4; ++c)
        if (c != c1) free.emplace_back(0, c);
      for (int c = c1 + 1; c < 4; ++c) free.emplace_back(1, c);
      long long total = 1;
      for (std::size_t i = 0; i < free.size(); ++i) total *= n;
      for (long long idx = 0; idx < total; ++idx) {
        ProjLine l;
        for (auto& row : l.basis) row.fill(FieldElem::zero());
        l.basis[0][c0] = FieldElem::one();
        l.basis[1][c1] = FieldElem::one();
        long long rest = idx;
        for (auto [r, c] : free) {
          l.basis[r][c] = elems[rest % n];
          rest /= n;
        }
        out.push_back(l);
      }
    }
  }
  return out;
}

std::vector<ProjLine> scan_surface_lines(const FieldSpec& f) {
  std::vector<ProjLine> out;
  for (const auto& l : all_lines(f))
    if (line_on_surface(l, f)) out.push_back(l);
  return out;
}

std::string format_vec(const FieldSpec& f, const Vec4& v) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 4; ++i) os << (i ? ":" : "") << f.to_string(v[i]);
  os << ']';
  return os.str();
}

// ---- LineTable ----

LineTable LineTable::from_lines(int q, std::vector<ProjLine> lines) {
  LineTable t;
  t.q = q;
  t.lines = std::move(lines);
  const int n = t.size();
  t.family_start = {0, n, n, n, n};
  t.rebuild_index();
  return t;
}

void LineTable::rebuild_index() {
  index_.clear();
  index_.reserve(lines.size() * 2);
  for (int i = 0; i < size(); ++i) {
    auto [it, inserted] = index_.emplace(lines[i], i);
    if (!inserted)
      throw Error(ErrorCode::DuplicateLine, "lines " + std::to_string(it->second) +
                                                " and " + std::to_string(i) + " coincide");
  }
}

std::optional<int> LineTable::index_of(const ProjLine& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int LineTable::family_of(int index) const {
  for (int k = 0; k < 4; ++k)
    if (index >= family_start[k] && index < family_start[k + 1]) return k;
  return -1;
}

LineTable enumerate_lines(const FieldSpec& f) {
  const int q = f.q();
  const FieldElem nu = f.nu();
  const FieldElem one = FieldElem::one(), zero = FieldElem::zero();
  auto nu_odd = [&](int i) { return f.pow(nu, 2 * i + 1); };

  LineTable t;
  t.q = q;
  const int block = (q + 1) * (q + 1);
  for (int fam = 0; fam < 3; ++fam) {
    for (int i = 0; i <= q; ++i) {
      for (int j = 0; j <= q; ++j) {
        const FieldElem ci = nu_odd(i), cj = nu_odd(j);
        Vec4 g, h;
        switch (fam) {
          case 0: g = {one, ci, zero, zero}; h = {zero, zero, one, cj}; break;
          case 1: g = {one, zero, ci, zero}; h = {zero, one, zero, cj}; break;
          default: g = {one, zero, zero, ci}; h = {zero, one, cj, zero}; break;
        }
        t.lines.push_back(line_from_forms(f, g, h));
      }
    }
  }

  for (int a = 0; a < f.unit_order(); ++a)
    if (f.pow(FieldElem{a}, q + 1) != f.minus_one()) t.a.push_back(a);
  if (static_cast<long long>(t.a.size()) != static_cast<long long>(q - 2) * (q + 1))
    throw Error(ErrorCode::CountMismatch, "fourth-family exponent count");

  const FieldElem minus_one = f.minus_one();
  for (int ai : t.a) {
    const FieldElem target = f.sub(minus_one, f.pow(FieldElem{ai}, q + 1));
    std::vector<int> logs;
    for (auto r : f.roots(target, q + 1)) logs.push_back(r.log);
    if (static_cast<int>(logs.size()) != q + 1)
      throw Error(ErrorCode::Internal, "expected q+1 roots for a_" + std::to_string(ai));
    t.a_roots.push_back(logs);
    const FieldElem mu_a{ai};
    const FieldElem mu_qa = f.pow(mu_a, q);
    for (int j = 0; j <= q; ++j) {
      for (int k = 0; k <= q; ++k) {
        const Vec4 g = {minus_one, mu_a, zero, FieldElem{logs[j]}};
        const Vec4 h = {f.neg(mu_qa), minus_one, FieldElem{logs[k]}, zero};
        t.lines.push_back(line_from_forms(f, g, h));
      }
    }
  }

  t.family_start = {0, block, 2 * block, 3 * block, t.size()};
  for (int i = 0; i < t.size(); ++i)
    if (!line_on_surface(t.lines[i], f))
      throw Error(ErrorCode::OffSurfaceLine, "L_" + std::to_string(i));
  t.rebuild_index();
  if (t.size() != expected_line_count(q))
    throw Error(ErrorCode::CountMismatch, "line count " + std::to_string(t.size()));
  return t;
}

// ---- star points ----

std::optional<int> StarPointTable::index_of(const ProjPoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StarPointTable collect_star_points(const FieldSpec& f, const LineTable& table) {
  StarPointTable s;
  const int n = table.size();
  s.n_lines_ = n;
  s.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  s.points_on_line.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto p = intersection(f, table.lines[i], table.lines[j]);
      if (!p) continue;
      auto [it, inserted] = s.index_.emplace(*p, s.size());
      if (inserted) {
        s.points.push_back(*p);
        s.lines_through.emplace_back();
      }
      const int idx = it->second;
      s.meet_[static_cast<std::size_t>(i) * n + j] = idx;
      s.meet_[static_cast<std::size_t>(j) * n + i] = idx;
      s.lines_through[idx].push_back(i);
      s.lines_through[idx].push_back(j);
      s.points_on_line[i].push_back(idx);
      s.points_on_line[j].push_back(idx);
    }
  }
  auto dedup = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  for (auto& v : s.lines_through) dedup(v);
  for (auto& v : s.points_on_line) dedup(v);
  return s;
}

StarPointTable star_points(const FieldSpec& f, const LineTable& table) {
  StarPointTable s = collect_star_points(f, table);
  if (s.size() != expected_star_count(table.q))
    throw Error(ErrorCode::CountMismatch,
                "found " + std::to_string(s.size()) + " star points, expected " +
                    std::to_string(expected_star_count(table.q)));
  return s;
}

// ---- generalized quadrangle ----

bool GqReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* GqReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

GqReport verify_gq(const FieldSpec& f, const LineTable& table,
                   const StarPointTable& stars) {
  const int q = table.q;
  const int n = table.size();
  const int np = stars.size();
  GqReport report;
  auto fail = [](AxiomCheck& c, const std::string& w) {
    if (c.passed) {
      c.passed = false;
      c.witness = w;
    }
  };
  auto common = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };

  AxiomCheck points_per_line{"points_per_line", true, {}};
  for (int l = 0; l < n; ++l) {
    const int c = static_cast<int>(stars.points_on_line[l].size());
    if (c != f.order() + 1)
      fail(points_per_line, "L_" + std::to_string(l) + " has " + std::to_string(c) +
                                " star points");
  }
  for (int i = 0; i < n && points_per_line.passed; ++i)
    for (int j = i + 1; j < n; ++j)
      if (common(stars.points_on_line[i], stars.points_on_line[j]).size() > 1) {
        fail(points_per_line, "L_" + std::to_string(i) + " and L_" + std::to_string(j) +
                                  " share two points");
        break;
      }
  report.checks.push_back(points_per_line);

  AxiomCheck lines_per_point{"lines_per_point", true, {}};
  for (int p = 0; p < np; ++p) {
    const int c = static_cast<int>(stars.lines_through[p].size());
    if (c != q + 1)
      fail(lines_per_point, "point " + format_vec(f, stars.points[p].coords) + " lies on " +
                                std::to_string(c) + " lines");
  }
  for (int l = 0; l < n && lines_per_point.passed; ++l) {
    const auto& pts = stars.points_on_line[l];
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (common(stars.lines_through[pts[a]], stars.lines_through[pts[b]]).size() != 1)
          fail(lines_per_point, "two points on L_" + std::to_string(l) +
                                    " share more than one line");
  }
  report.checks.push_back(lines_per_point);

  AxiomCheck projection{"unique_projection", true, {}};
  for (int p = 0; p < np && projection.passed; ++p) {
    const auto& through = stars.lines_through[p];
    for (int l = 0; l < n; ++l) {
      if (std::binary_search(through.begin(), through.end(), l)) continue;
      int hits = 0;
      for (int m : through)
        if (stars.meet_point(m, l) >= 0) ++hits;
      if (hits != 1) {
        fail(projection, "point " + format_vec(f, stars.points[p].coords) + " and L_" +
                             std::to_string(l) + ": " + std::to_string(hits) +
                             " connecting lines");
        break;
      }
    }
  }
  report.checks.push_back(projection);

  AxiomCheck triangles{"triangle_free", true, {}};
  for (int a = 0; a < n && triangles.passed; ++a) {
    for (int b = a + 1; b < n && triangles.passed; ++b) {
      const int x = stars.meet_point(a, b);
      if (x < 0) continue;
      for (int c = b + 1; c < n; ++c) {
        const int y = stars.meet_point(a, c), z = stars.meet_point(b, c);
        if (y >= 0 && z >= 0 && (y != x || z != x)) {
          fail(triangles, "L_" + std::to_string(a) + ", L_" + std::to_string(b) + ", L_" +
                              std::to_string(c));
          break;
        }
      }
    }
  }
  report.checks.push_back(triangles);
  return report;
}

}  // namespace skewlines
