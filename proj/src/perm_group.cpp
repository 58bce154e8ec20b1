#include "skewlines/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void check_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch, std::to_string(a.degree()) + " vs " +
                                               std::to_string(b.degree()));
}

}  // namespace

// ---- Permutation ----

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw Error(ErrorCode::PreconditionViolated, "not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  check_degree(a, b);
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[x] = a(b(x));
  return Permutation(std::move(im));
}

Permutation invert(const Permutation& a) {
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[a(x)] = x;
  return Permutation(std::move(im));
}

VertexSet apply_to_set(const Permutation& a, const VertexSet& s) {
  if (s.universe() != a.degree())
    throw Error(ErrorCode::DegreeMismatch, "set universe differs from degree");
  VertexSet out(a.degree());
  s.for_each([&](int v) { out.insert(a(v)); });
  return out;
}

std::vector<int> apply_to_clique(const Permutation& a, std::span<const int> vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(a(v));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- PermList ----

PermList PermList::from(std::span<const Permutation> perms) {
  PermList out(perms.empty() ? 0 : perms[0].degree());
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(p);
  return out;
}

void PermList::push_back(const Permutation& p) {
  if (p.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "PermList::push_back");
  for (int x : p.images()) data_.push_back(static_cast<Point>(x));
}

void PermList::push_back(std::span<const Point> images) {
  if (static_cast<int>(images.size()) != degree_)
    throw Error(ErrorCode::DegreeMismatch, "PermList::push_back");
  data_.insert(data_.end(), images.begin(), images.end());
}

Permutation PermList::at(std::size_t i) const {
  auto row = (*this)[i];
  return Permutation(std::vector<int>(row.begin(), row.end()));
}

PermList PermList::fixing(int v) const {
  PermList out(degree_);
  for (std::size_t i = 0; i < size(); ++i)
    if (image(i, v) == v) out.push_back((*this)[i]);
  return out;
}

std::vector<Permutation> PermList::to_vector() const {
  std::vector<Permutation> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

// ---- semilinear maps ----

SemilinearMap SemilinearMap::identity() {
  SemilinearMap m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.matrix[i][j] = i == j ? FieldElem::one() : FieldElem::zero();
  return m;
}

Vec4 apply_map(const FieldSpec& f, const SemilinearMap& m, const Vec4& v) {
  Vec4 s;
  for (int i = 0; i < 4; ++i) s[i] = f.frobenius(v[i], m.frobenius_power);
  Vec4 out;
  for (int i = 0; i < 4; ++i) {
    FieldElem acc = FieldElem::zero();
    for (int j = 0; j < 4; ++j) acc = f.add(acc, f.mul(m.matrix[i][j], s[j]));
    out[i] = acc;
  }
  return out;
}

Permutation semilinear_to_perm(const FieldSpec& f, const SemilinearMap& m,
                               const LineTable& table) {
  std::vector<int> im(table.size());
  for (int i = 0; i < table.size(); ++i) {
    const auto& l = table.lines[i];
    const Vec4 a = apply_map(f, m, l.basis[0]);
    const Vec4 b = apply_map(f, m, l.basis[1]);
    Matrix rows{{a.begin(), a.end()}, {b.begin(), b.end()}};
    if (row_reduce(f, rows) != 2)
      throw Error(ErrorCode::NotAnAutomorphism, "map is singular on L_" + std::to_string(i));
    auto j = table.index_of(line_through(f, a, b));
    if (!j)
      throw Error(ErrorCode::NotAnAutomorphism,
                  "image of L_" + std::to_string(i) + " is not a line of X");
    im[i] = *j;
  }
  try {
    return Permutation(std::move(im));
  } catch (const Error&) {
    throw Error(ErrorCode::NotAnAutomorphism, "induced map on lines is not injective");
  }
}

bool is_unitary_block(const FieldSpec& f, const Block2& m) {
  // (M^H M)_{ij} = sum_k conj(m_ki) m_kj
  FieldElem g[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      FieldElem acc = FieldElem::zero();
      for (int k = 0; k < 2; ++k) acc = f.add(acc, f.mul(f.conj(m[k][i]), m[k][j]));
      g[i][j] = acc;
    }
  return g[0][1].is_zero() && g[1][0].is_zero() && !g[0][0].is_zero() &&
         g[0][0] == g[1][1] && f.in_base_field(g[0][0]);
}

Block2 find_unitary_block(const FieldSpec& f) {
  if (f.q() > 16) throw Error(ErrorCode::PreconditionViolated, "q > 16");
  const auto el = f.elements();
  for (auto a : el)
    for (auto b : el)
      for (auto c : el)
        for (auto d : el) {
          const bool monomial = (b.is_zero() && c.is_zero()) || (a.is_zero() && d.is_zero());
          if (monomial) continue;
          Block2 m{{{a, b}, {c, d}}};
          if (is_unitary_block(f, m)) return m;
        }
  throw Error(ErrorCode::NotFound, "no non-monomial unitary 2x2 block");
}

std::vector<NamedGenerator> builtin_generator_maps(const FieldSpec& f,
                                                   const LineTable& table) {
  std::vector<NamedGenerator> out;
  auto add = [&](std::string name, SemilinearMap m) {
    Permutation p = semilinear_to_perm(f, m, table);
    out.push_back({std::move(name), m, std::move(p)});
  };
  const char* names = "xyzw";
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      SemilinearMap m = SemilinearMap::identity();
      std::swap(m.matrix[i], m.matrix[j]);
      add(std::string("swap_") + names[i] + names[j], m);
    }
  {
    SemilinearMap m = SemilinearMap::identity();
    m.matrix[0][0] = f.power_of_mu(f.q() - 1);  // order q + 1
    add("scale_x", m);
  }
  {
    SemilinearMap m = SemilinearMap::identity();
    m.frobenius_power = 1;
    add("frobenius", m);
  }
  if (f.q() == 2) {
    // GF(4) has no non-monomial 2x2 unitary block (every nonzero norm is 1,
    // and 1 + 1 = 0); J + I is unitary in characteristic 2
    SemilinearMap m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.matrix[i][j] = i == j ? FieldElem::zero() : FieldElem::one();
    add("ones_off_diagonal", m);
    return out;
  }
  {
    const Block2 u = find_unitary_block(f);
    SemilinearMap m = SemilinearMap::identity();
    m.matrix[0][0] = u[0][0];
    m.matrix[0][1] = u[0][1];
    m.matrix[1][0] = u[1][0];
    m.matrix[1][1] = u[1][1];
    // M^H M = lambda I scales x^{q+1} + y^{q+1} by lambda; scale z, w by a
    // root of c^{q+1} = lambda so the whole form scales uniformly
    const FieldElem lambda =
        f.add(f.mul(f.conj(u[0][0]), u[0][0]), f.mul(f.conj(u[1][0]), u[1][0]));
    const FieldElem c = f.roots(lambda, f.q() + 1).front();
    m.matrix[2][2] = c;
    m.matrix[3][3] = c;
    add("unitary_xy", m);
  }
  return out;
}

std::vector<Permutation> builtin_generators(const FieldSpec& f, const LineTable& table) {
  std::vector<Permutation> out;
  for (auto& g : builtin_generator_maps(f, table)) out.push_back(std::move(g.perm));
  return out;
}

bool preserves_adjacency(const Permutation& p, const SkewGraph& g) {
  if (p.degree() != g.size()) return false;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

// ---- closure ----

std::vector<Permutation> closure(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "closure of no generators");
  const int n = gens[0].degree();
  for (const auto& g : gens) check_degree(g, gens[0]);
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<Permutation> elems;
  auto id = Permutation::identity(n);
  seen.insert(id.images());
  elems.push_back(id);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Permutation next = compose(s, elems[i]);
      if (seen.insert(next.images()).second) {
        if (elems.size() >= cap)
          throw Error(ErrorCode::ClosureCapExceeded,
                      "group has more than " + std::to_string(cap) + " elements");
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

// ---- stabilizer chain ----

namespace {

struct ChainLevel {
  int base = 0;
  std::vector<Permutation> gens;
  std::vector<int> orbit;
  std::vector<std::optional<Permutation>> transversal;

  void rebuild(int n) {
    transversal.assign(n, std::nullopt);
    orbit.assign(1, base);
    transversal[base] = Permutation::identity(n);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const int x = orbit[i];
      for (const auto& s : gens) {
        const int y = s(x);
        if (!transversal[y]) {
          transversal[y] = compose(s, *transversal[x]);
          orbit.push_back(y);
        }
      }
    }
  }
};

// Product replacement random elements.
class RandomElements {
 public:
  RandomElements(std::span<const Permutation> gens, std::uint64_t seed) : rng_(seed) {
    const int n = gens[0].degree();
    acc_ = Permutation::identity(n);
    for (int i = 0; i < 10; ++i) slots_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 80; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    const Permutation rj = (rng_() & 1) ? slots_[j] : invert(slots_[j]);
    slots_[i] = (rng_() & 1) ? compose(slots_[i], rj) : compose(rj, slots_[i]);
    acc_ = compose(acc_, slots_[i]);
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> slots_;
  Permutation acc_;
};

}  // namespace

long long StabChainResult::group_order() const {
  long long order = static_cast<long long>(stabilizer.size());
  for (const auto& o : orbits) order *= static_cast<long long>(o.size());
  return order;
}

StabChainResult stabilizer_chain(std::span<const Permutation> gens,
                                 std::span<const int> base,
                                 const StabChainOptions& opts) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  const int n = gens[0].degree();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      if (base[i] == base[j]) throw Error(ErrorCode::PreconditionViolated, "repeated base point");

  const std::size_t depth = base.size();
  std::vector<ChainLevel> levels(depth);
  for (std::size_t i = 0; i < depth; ++i) levels[i].base = base[i];
  if (depth > 0) levels[0].gens.assign(gens.begin(), gens.end());
  for (auto& l : levels) l.rebuild(n);
  // a new generator fixing base[0..i-1] belongs to every level 1..i
  auto extend_levels = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t j = 1; j <= upto && j < depth; ++j) {
      levels[j].gens.push_back(g);
      levels[j].rebuild(n);
    }
  };

  std::vector<Permutation> final_gens;
  std::vector<Permutation> final_group{Permutation::identity(n)};
  std::unordered_set<std::vector<int>, VecHash> final_set{final_group[0].images()};

  // Returns true if the chain changed.
  auto sift = [&](Permutation g, std::size_t from) {
    for (std::size_t i = from; i < depth; ++i) {
      const int x = g(levels[i].base);
      if (!levels[i].transversal[x]) {
        if (i == 0) throw Error(ErrorCode::Internal, "element leaves the first orbit");
        extend_levels(g, i);
        return true;
      }
      g = compose(invert(*levels[i].transversal[x]), g);
    }
    if (final_set.count(g.images())) return false;
    extend_levels(g, depth - 1);
    final_gens.push_back(std::move(g));
    final_group = closure(final_gens, opts.cap);
    final_set.clear();
    for (const auto& h : final_group) final_set.insert(h.images());
    return true;
  };

  // Schreier generators of the first point stabilizer.
  if (depth > 0) {
    const auto orbit0 = levels[0].orbit;
    for (int x : orbit0)
      for (const auto& s : gens) {
        const Permutation& tx = *levels[0].transversal[x];
        const Permutation& tsx = *levels[0].transversal[s(x)];
        Permutation sg = compose(invert(tsx), compose(s, tx));
        if (!sg.is_identity()) sift(std::move(sg), 1);
      }
  }

  RandomElements rnd(gens, opts.seed);
  int streak = 0;
  while (streak < opts.confirmations) {
    if (sift(rnd.next(), 0))
      streak = 0;
    else
      ++streak;
  }

  StabChainResult out;
  out.base.assign(base.begin(), base.end());
  for (const auto& l : levels) out.orbits.push_back(l.orbit);
  std::sort(final_group.begin(), final_group.end());
  out.stabilizer = std::move(final_group);
  out.confirmations = streak;
  return out;
}

std::vector<Permutation> triple_stabilizer(std::span<const Permutation> gens,
                                           const std::array<int, 3>& base,
                                           const StabChainOptions& opts) {
  return stabilizer_chain(gens, base, opts).stabilizer;
}

// ---- transitivity ----

long long count_ordered_triangles(const SkewGraph& g) {
  long long total = 0;
  for (int u = 0; u < g.size(); ++u)
    g.neighbors(u).for_each([&](int v) {
      total += (g.neighbors(u) & g.neighbors(v)).count();
    });
  return total;
}

TransitivityReport transitivity_check(std::span<const Permutation> gens,
                                      const SkewGraph& g,
                                      const std::array<int, 3>& base) {
  const auto [a, b, c] = base;
  if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) ||
      !g.adjacent(a, c))
    throw Error(ErrorCode::NotSkewTriple, "base is not a skew triple");
  const std::uint64_t n = g.size();
  std::vector<bool> seen(n * n * n, false);
  std::vector<std::uint32_t> queue;
  auto encode = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return static_cast<std::uint32_t>((x * n + y) * n + z);
  };
  const auto start = encode(a, b, c);
  seen[start] = true;
  queue.push_back(start);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::uint64_t t = queue[i];
    const int z = static_cast<int>(t % n), y = static_cast<int>((t / n) % n),
              x = static_cast<int>(t / (n * n));
    for (const auto& s : gens) {
      const auto e = encode(s(x), s(y), s(z));
      if (!seen[e]) {
        seen[e] = true;
        queue.push_back(e);
      }
    }
  }
  TransitivityReport r;
  r.orbit_size = static_cast<long long>(queue.size());
  r.skew_triples = count_ordered_triangles(g);
  return r;
}

std::set<std::vector<int>> orbit_of_sets(const std::vector<std::vector<int>>& seeds,
                                         std::span<const Permutation> gens) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (auto s : seeds) {
    std::sort(s.begin(), s.end());
    if (seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      auto img = apply_to_clique(g, cur);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return seen;
}

// ---- Moon-Moser ----

std::vector<Permutation> moon_moser_generators(int k) {
  const int n = 3 * k;
  std::vector<Permutation> gens;
  auto base = [&] {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return im;
  };
  {
    auto im = base();
    std::swap(im[0], im[1]);
    gens.emplace_back(im);
  }
  {
    auto im = base();
    im[0] = 1, im[1] = 2, im[2] = 0;
    gens.emplace_back(im);
  }
  if (k >= 2) {
    auto im = base();
    for (int j = 0; j < 3; ++j) std::swap(im[j], im[3 + j]);
    gens.emplace_back(im);
  }
  if (k >= 3) {
    std::vector<int> im(n);
    for (int v = 0; v < n; ++v) im[v] = ((v / 3 + 1) % k) * 3 + v % 3;
    gens.emplace_back(im);
  }
  return gens;
}

PermList moon_moser_group(int k) {
  const int n = 3 * k;
  static const int s3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                               {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<int> blocks(k);
  std::iota(blocks.begin(), blocks.end(), 0);
  long long local_count = 1;
  for (int i = 0; i < k; ++i) local_count *= 6;
  PermList out(n);
  std::vector<PermList::Point> im(n);
  do {
    for (long long code = 0; code < local_count; ++code) {
      long long rest = code;
      for (int i = 0; i < k; ++i) {
        const int* sigma = s3[rest % 6];
        rest /= 6;
        for (int j = 0; j < 3; ++j)
          im[3 * i + j] = static_cast<PermList::Point>(3 * blocks[i] + sigma[j]);
      }
      out.push_back(im);
    }
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  return out;
}

// ---- permutation files ----

void write_permutations(std::ostream& os, std::span<const Permutation> perms) {
  for (const auto& p : perms) {
    for (int i = 0; i < p.degree(); ++i) os << (i ? " " : "") << p(i);
    os << '\n';
  }
}

std::vector<Permutation> read_permutations(std::istream& is) {
  std::vector<Permutation> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> im;
    int x;
    while (ls >> x) im.push_back(x);
    if (!ls.eof())
      throw Error(ErrorCode::ParseError, "non-integer at line " + std::to_string(lineno));
    if (!out.empty() && static_cast<int>(im.size()) != out[0].degree())
      throw Error(ErrorCode::DegreeMismatch, "line " + std::to_string(lineno));
    try {
      out.emplace_back(std::move(im));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace skewlines
