#include "skewlines/spread.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <unordered_set>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

std::array<FieldElem, 10> monomials(const FieldSpec& f, const Vec4& v) {
  std::array<FieldElem, 10> m{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m[k++] = f.mul(v[i], v[j]);
  return m;
}

Vec4 add_vec(const FieldSpec& f, const Vec4& a, const Vec4& b) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

std::vector<ProjPoint> quadric_points(const FieldSpec& f, const QuadraticForm& qf,
                                      const std::vector<ProjPoint>& space) {
  std::vector<ProjPoint> out;
  for (const auto& p : space)
    if (evaluate(f, qf, p.coords).is_zero()) out.push_back(p);
  return out;
}

bool meets(const FieldSpec& f, const ProjLine& a, const ProjLine& b) {
  return a == b || lines_meet(f, a, b);
}

QuadricConfig build_config(const Surface& s, const std::array<ProjLine, 3>& m,
                           const std::vector<ProjPoint>& space) {
  const FieldSpec& f = s.field;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (meets(f, m[i], m[j]))
        throw Error(ErrorCode::NotSkew, "defining lines " + std::to_string(i) + " and " +
                                            std::to_string(j) + " meet");

  Matrix a;
  for (const auto& line : m) {
    const auto pts = points_on(f, line);
    for (int k = 0; k < 3; ++k) {
      const auto mono = monomials(f, pts[k].coords);
      a.emplace_back(mono.begin(), mono.end());
    }
  }
  const Matrix ns = nullspace(f, a, 10);
  if (ns.size() != 1)
    throw Error(ErrorCode::DegenerateQuadric,
                "solution space has dimension " + std::to_string(ns.size()));
  QuadricConfig cfg;
  FieldElem lead = FieldElem::zero();
  for (int k = 0; k < 10; ++k) {
    if (lead.is_zero() && !ns[0][k].is_zero()) lead = ns[0][k];
    cfg.quadric.coeffs[k] = ns[0][k];
  }
  const FieldElem scale = f.inv(lead);
  for (auto& c : cfg.quadric.coeffs) c = f.mul(c, scale);

  const auto pts = quadric_points(f, cfg.quadric, space);
  const long long big_q = static_cast<long long>(f.q()) * f.q();
  if (static_cast<long long>(pts.size()) != (big_q + 1) * (big_q + 1))
    throw Error(ErrorCode::DegenerateQuadric,
                "quadric has " + std::to_string(pts.size()) + " points");

  // Each point of a smooth quadric lies on exactly two of its lines, so a
  // point is done once two lines through it are known.
  std::map<ProjPoint, int> point_index;
  for (std::size_t i = 0; i < pts.size(); ++i) point_index[pts[i]] = static_cast<int>(i);
  std::vector<int> covered(pts.size(), 0);
  std::set<ProjLine> found;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size() && covered[i] < 2; ++j) {
      if (!polar(f, cfg.quadric, pts[i].coords, pts[j].coords).is_zero()) continue;
      const ProjLine l = line_through(f, pts[i].coords, pts[j].coords);
      if (!found.insert(l).second) continue;
      for (const auto& p : points_on(f, l)) {
        auto it = point_index.find(p);
        if (it == point_index.end())
          throw Error(ErrorCode::DegenerateQuadric, "ruling line leaves the quadric");
        ++covered[it->second];
      }
    }
  }
  if (static_cast<long long>(found.size()) != 2 * (big_q + 1))
    throw Error(ErrorCode::DegenerateQuadric,
                "found " + std::to_string(found.size()) + " lines on the quadric");

  for (const auto& l : found) {
    const int side = (l == m[0] || !lines_meet(f, l, m[0])) ? 0 : 1;
    cfg.rulings[side].lines.push_back(l);
  }
  for (int r = 0; r < 2; ++r) {
    const auto& ls = cfg.rulings[r].lines;
    if (static_cast<long long>(ls.size()) != big_q + 1)
      throw Error(ErrorCode::DegenerateQuadric, "unbalanced rulings");
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j)
        if (lines_meet(f, ls[i], ls[j]))
          throw Error(ErrorCode::DegenerateQuadric, "lines in one ruling meet");
  }
  for (const auto& a1 : cfg.rulings[0].lines)
    for (const auto& b1 : cfg.rulings[1].lines)
      if (!lines_meet(f, a1, b1))
        throw Error(ErrorCode::DegenerateQuadric, "lines in opposite rulings are skew");

  for (int r = 0; r < 2; ++r) {
    for (const auto& l : cfg.rulings[r].lines)
      if (auto idx = s.lines.index_of(l)) cfg.rulings[r].surface.push_back(*idx);
    std::sort(cfg.rulings[r].surface.begin(), cfg.rulings[r].surface.end());
    if (static_cast<int>(cfg.rulings[r].surface.size()) != f.q() + 1)
      throw Error(ErrorCode::CountMismatch,
                  "ruling " + std::to_string(r) + " holds " +
                      std::to_string(cfg.rulings[r].surface.size()) + " lines of X");
  }
  return cfg;
}

}  // namespace

FieldElem evaluate(const FieldSpec& f, const QuadraticForm& q, const Vec4& v) {
  const auto m = monomials(f, v);
  FieldElem acc = FieldElem::zero();
  for (int k = 0; k < 10; ++k) acc = f.add(acc, f.mul(q.coeffs[k], m[k]));
  return acc;
}

FieldElem polar(const FieldSpec& f, const QuadraticForm& q, const Vec4& a, const Vec4& b) {
  return f.sub(f.sub(evaluate(f, q, add_vec(f, a, b)), evaluate(f, q, a)),
               evaluate(f, q, b));
}

std::vector<int> QuadricConfig::surface_lines() const {
  std::vector<int> out = rulings[0].surface;
  out.insert(out.end(), rulings[1].surface.begin(), rulings[1].surface.end());
  std::sort(out.begin(), out.end());
  return out;
}

QuadricConfig quadric_through(const Surface& s, const ProjLine& m1, const ProjLine& m2,
                              const ProjLine& m3) {
  return build_config(s, {m1, m2, m3}, all_points(s.field));
}

QuadricConfig quadric_through(const Surface& s, const std::array<int, 3>& triple) {
  for (int v : triple)
    if (v < 0 || v >= s.lines.size())
      throw Error(ErrorCode::PreconditionViolated, "line index out of range");
  return quadric_through(s, s.lines.lines[triple[0]], s.lines.lines[triple[1]],
                         s.lines.lines[triple[2]]);
}

StarChordPairing star_chords(const Surface& s, const QuadricConfig& cfg, int ruling) {
  if (ruling != 0 && ruling != 1)
    throw Error(ErrorCode::PreconditionViolated, "ruling must be 0 or 1");
  const FieldSpec& f = s.field;
  const int q = f.q();
  StarChordPairing out;
  for (const auto& l : cfg.rulings[ruling].lines) {
    if (s.lines.index_of(l)) continue;
    std::vector<int> stars;
    for (const auto& p : points_on(f, l))
      if (auto idx = s.stars.index_of(p)) stars.push_back(*idx);
    if (static_cast<int>(stars.size()) == q + 1) {
      std::sort(stars.begin(), stars.end());
      out.chords.push_back(l);
      out.chord_stars.push_back(std::move(stars));
    }
  }
  if (static_cast<int>(out.chords.size()) != q * (q - 1))
    throw Error(ErrorCode::ChordCountMismatch,
                "found " + std::to_string(out.chords.size()) + " chords, expected " +
                    std::to_string(q * (q - 1)));

  std::map<std::vector<int>, std::vector<int>> by_lines;
  for (std::size_t c = 0; c < out.chords.size(); ++c) {
    std::vector<int> through;
    for (int st : out.chord_stars[c])
      through.insert(through.end(), s.stars.lines_through[st].begin(),
                     s.stars.lines_through[st].end());
    std::sort(through.begin(), through.end());
    through.erase(std::unique(through.begin(), through.end()), through.end());
    if (static_cast<int>(through.size()) != (q + 1) * (q + 1))
      throw Error(ErrorCode::PairingFailure,
                  "chord " + std::to_string(c) + " sees " + std::to_string(through.size()) +
                      " lines");
    by_lines[through].push_back(static_cast<int>(c));
  }
  for (const auto& [key, group] : by_lines) {
    if (group.size() != 2)
      throw Error(ErrorCode::PairingFailure,
                  "a line set is shared by " + std::to_string(group.size()) + " chords");
    out.pairs.emplace_back(group[0], group[1]);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

LargeSkewSet build_large_skew_set(const Surface& s, const QuadricConfig& cfg, int ruling,
                                  const std::array<int, 3>& triple,
                                  const std::vector<bool>& signs,
                                  const StarChordPairing& pairing) {
  if (ruling != 0 && ruling != 1)
    throw Error(ErrorCode::PreconditionViolated, "ruling must be 0 or 1");
  const auto& other = cfg.rulings[1 - ruling].surface;
  if (triple[0] == triple[1] || triple[1] == triple[2] || triple[0] == triple[2])
    throw Error(ErrorCode::PreconditionViolated, "triple has repeated lines");
  for (int t : triple)
    if (!std::binary_search(other.begin(), other.end(), t))
      throw Error(ErrorCode::PreconditionViolated,
                  "line " + std::to_string(t) + " is not in the opposite ruling");
  if (signs.size() != pairing.pairs.size())
    throw Error(ErrorCode::PreconditionViolated,
                "expected " + std::to_string(pairing.pairs.size()) + " sign bits");

  const FieldSpec& f = s.field;
  LargeSkewSet out;
  out.ruling = ruling;
  out.triple = triple;
  out.signs = signs;
  out.lines = cfg.rulings[ruling].surface;

  auto meet = [&](int m, const ProjLine& c) {
    auto p = intersection(f, s.lines.lines[m], c);
    if (!p) throw Error(ErrorCode::Internal, "chord misses a line of the other ruling");
    return *p;
  };
  for (std::size_t j = 0; j < pairing.pairs.size(); ++j) {
    const ProjLine& c = pairing.chords[pairing.pairs[j].first];
    const ProjLine& cd = pairing.chords[pairing.pairs[j].second];
    std::array<ProjPoint, 3> p, pd;
    for (int i = 0; i < 3; ++i) {
      p[i] = meet(triple[i], c);
      pd[i] = meet(triple[i], cd);
    }
    const int shift = signs[j] ? 2 : 1;
    for (int i = 0; i < 3; ++i) {
      const ProjLine cross = line_through(f, p[i].coords, pd[(i + shift) % 3].coords);
      auto idx = s.lines.index_of(cross);
      if (!idx)
        throw Error(ErrorCode::CrossLineOffSurface,
                    "cross-line for pair " + std::to_string(j) + " is not on X");
      out.lines.push_back(*idx);
    }
  }
  std::sort(out.lines.begin(), out.lines.end());
  if (std::adjacent_find(out.lines.begin(), out.lines.end()) != out.lines.end() ||
      !is_clique(s.graph, out.lines))
    throw Error(ErrorCode::NotSkewInternal, "constructed lines are not pairwise skew");
  if (static_cast<int>(out.lines.size()) != large_skew_set_size(f.q()))
    throw Error(ErrorCode::NotSkewInternal, "constructed set has the wrong size");
  return out;
}

LargeSkewSet build_large_skew_set(const Surface& s, const QuadricConfig& cfg, int ruling,
                                  const std::array<int, 3>& triple,
                                  const std::vector<bool>& signs) {
  return build_large_skew_set(s, cfg, ruling, triple, signs, star_chords(s, cfg, ruling));
}

bool Extension::unique() const {
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
    if (candidates[i].size() != 1) return false;
  return true;
}

Extension extend_to_maximal(const std::vector<int>& clique, const SkewGraph& g) {
  Extension ext;
  ext.clique = clique;
  std::sort(ext.clique.begin(), ext.clique.end());
  VertexSet common = VertexSet::full(g.size());
  for (int v : ext.clique) {
    common &= g.neighbors(v);
  }
  for (int v : ext.clique) common.erase(v);
  while (true) {
    ext.candidates.push_back(common.to_vector());
    if (common.empty()) break;
    const int v = ext.candidates.back().front();
    ext.clique.push_back(v);
    common &= g.neighbors(v);
  }
  std::sort(ext.clique.begin(), ext.clique.end());
  return ext;
}

std::string lower_bound_count(int q) {
  using boost::multiprecision::cpp_int;
  if (q < 2) throw Error(ErrorCode::PreconditionViolated, "q must be at least 2");
  cpp_int v = cpp_int(q + 1) * q * (q - 1) / 3;
  v <<= q * (q - 1) / 2;
  return v.str();
}

long long quadric_config_count(int q) {
  const long long qq = q;
  return (qq * qq * qq + 1) * (qq * qq + 1) * qq * qq * qq * qq / 2;
}

MultiplicityReport census_from_quadrics(const Surface& s, int jobs) {
  if (jobs < 1) throw Error(ErrorCode::PreconditionViolated, "jobs must be >= 1");
  const FieldSpec& f = s.field;
  const int q = f.q();
  const int n = s.lines.size();
  const auto space = all_points(f);

  // Configurations, one per quadric; every skew triple inside a found
  // configuration is marked so it is not solved again.
  std::vector<QuadricConfig> configs;
  std::set<QuadraticForm> seen;
  std::unordered_set<long long> covered;
  auto key = [n](int a, int b, int c) {
    return (static_cast<long long>(a) * n + b) * n + c;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!s.graph.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!s.graph.adjacent(i, k) || !s.graph.adjacent(j, k)) continue;
        if (covered.count(key(i, j, k))) continue;
        QuadricConfig cfg = build_config(
            s, {s.lines.lines[i], s.lines.lines[j], s.lines.lines[k]}, space);
        if (!seen.insert(cfg.quadric).second)
          throw Error(ErrorCode::Internal, "quadric found twice");
        for (const auto& r : cfg.rulings) {
          const auto& ls = r.surface;
          for (std::size_t a = 0; a < ls.size(); ++a)
            for (std::size_t b = a + 1; b < ls.size(); ++b)
              for (std::size_t c = b + 1; c < ls.size(); ++c)
                covered.insert(key(ls[a], ls[b], ls[c]));
        }
        configs.push_back(std::move(cfg));
      }
    }

  MultiplicityReport rep;
  rep.configs = static_cast<long long>(configs.size());
  rep.expected_configs = quadric_config_count(q);
  if (rep.configs != rep.expected_configs)
    throw Error(ErrorCode::ConfigCountMismatch,
                std::to_string(rep.configs) + " configurations, expected " +
                    std::to_string(rep.expected_configs));

  std::map<std::vector<int>, long long> counts;
  long long generated = 0, checked = 0, joint = 0;

#pragma omp parallel num_threads(jobs)
  {
    std::map<std::vector<int>, long long> local;
    long long l_generated = 0, l_checked = 0, l_joint = 0;
#pragma omp for schedule(dynamic, 16)
    for (long long ci = 0; ci < rep.configs; ++ci) {
      const QuadricConfig& cfg = configs[ci];
      struct Output {
        int ruling;
        std::vector<bool> signs;
        std::vector<int> lines;
      };
      std::vector<Output> outs;
      for (int r = 0; r < 2; ++r) {
        const StarChordPairing pairing = star_chords(s, cfg, r);
        const auto& other = cfg.rulings[1 - r].surface;
        const int np = static_cast<int>(pairing.pairs.size());
        for (std::size_t a = 0; a < other.size(); ++a)
          for (std::size_t b = a + 1; b < other.size(); ++b)
            for (std::size_t c = b + 1; c < other.size(); ++c)
              for (long long mask = 0; mask < (1LL << np); ++mask) {
                std::vector<bool> signs(np);
                for (int t = 0; t < np; ++t) signs[t] = (mask >> t) & 1;
                LargeSkewSet set = build_large_skew_set(
                    s, cfg, r, {other[a], other[b], other[c]}, signs, pairing);
                ++local[extend_to_maximal(set.lines, s.graph).clique];
                ++l_generated;
                outs.push_back({r, std::move(signs), std::move(set.lines)});
              }
      }
      for (std::size_t a = 0; a < outs.size(); ++a)
        for (std::size_t b = a + 1; b < outs.size(); ++b) {
          if (outs[a].ruling == outs[b].ruling && outs[a].signs == outs[b].signs) continue;
          ++l_checked;
          bool compatible = true;
          for (int u : outs[a].lines) {
            for (int v : outs[b].lines)
              if (u != v && !s.graph.adjacent(u, v)) {
                compatible = false;
                break;
              }
            if (!compatible) break;
          }
          if (compatible) ++l_joint;
        }
    }
#pragma omp critical
    {
      for (auto& [k, v] : local) counts[k] += v;
      generated += l_generated;
      checked += l_checked;
      joint += l_joint;
    }
  }

  rep.generated = generated;
  rep.pairs_checked = checked;
  rep.pairs_jointly_extendable = joint;
  rep.distinct = static_cast<long long>(counts.size());
  for (const auto& [set, c] : counts) {
    ++rep.multiplicity[c];
    ++rep.sizes[static_cast<int>(set.size())];
  }
  return rep;
}

}  // namespace skewlines
