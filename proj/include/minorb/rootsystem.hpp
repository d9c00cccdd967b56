#ifndef MINORB_ROOTSYSTEM_HPP
#define MINORB_ROOTSYSTEM_HPP

// Exact root-system and highest-weight arithmetic for finite-type Cartan
// matrices (direct sums of A-G). Cartan convention: a_ij = <alpha_i^vee, alpha_j>,
// so column j of the Cartan matrix is alpha_j in fundamental-weight coordinates.
// Nodes follow Bourbaki numbering within each simple component.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "minorb/rational.hpp"

namespace minorb {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

inline std::string to_string(SimpleType t)
{
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

/// Rank conventions: A>=1, B>=2, C>=2 (C2 is B2 with nodes swapped), D>=3 (D3 is A3
/// with node 1 in the middle), E6-E8, F4, G2.
inline std::optional<std::string> rank_violation(SimpleType t)
{
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (ok) return std::nullopt;
  return "invalid rank " + std::to_string(n) + " for family " + std::string(1, static_cast<char>(t.family));
}

inline SimpleType make_simple_type(Family f, int rank)
{
  SimpleType t{f, rank};
  if (auto v = rank_violation(t)) throw std::invalid_argument(*v);
  return t;
}

inline std::optional<Family> family_from_char(char c)
{
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

inline SimpleType parse_simple_type(std::string_view s)
{
  if (s.size() < 2) throw std::invalid_argument("malformed simple type '" + std::string(s) + "'");
  auto f = family_from_char(s[0]);
  if (!f) throw std::invalid_argument("unknown family '" + std::string(1, s[0]) + "'");
  int rank = 0;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rank in '" + std::string(s) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw std::invalid_argument("rank too large in '" + std::string(s) + "'");
  }
  return make_simple_type(*f, rank);
}

using CartanMatrix = std::vector<std::vector<int>>;

inline CartanMatrix cartan_matrix(SimpleType t)
{
  if (auto v = rank_violation(t)) throw std::invalid_argument(*v);
  const int n = t.rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i - 1][j - 1] = -1; a[j - 1][i - 1] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[2][1] = -2;  // alpha_2 long, alpha_3 short
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

inline CartanMatrix direct_sum(const std::vector<CartanMatrix>& blocks)
{
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  CartanMatrix a(n, std::vector<int>(n, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return a;
}

inline CartanMatrix cartan_matrix(const std::vector<SimpleType>& types)
{
  std::vector<CartanMatrix> blocks;
  for (auto t : types) blocks.push_back(cartan_matrix(t));
  return direct_sum(blocks);
}

inline CartanMatrix submatrix(const CartanMatrix& a, const std::vector<int>& nodes)
{
  CartanMatrix s(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) s[i][j] = a[nodes[i]][nodes[j]];
  return s;
}

/// Connected components of the Dynkin graph restricted to `nodes`, each sorted,
/// ordered by smallest member.
inline std::vector<std::vector<int>> graph_components(const CartanMatrix& a, const std::vector<int>& nodes)
{
  std::vector<std::vector<int>> out;
  std::set<int> remaining(nodes.begin(), nodes.end());
  while (!remaining.empty()) {
    std::vector<int> comp;
    std::vector<int> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (a[v][*it] != 0) {
          stack.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<std::vector<int>> graph_components(const CartanMatrix& a)
{
  std::vector<int> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  return graph_components(a, all);
}

/// Finds a bijection Bourbaki node k -> nodes[result[k]] with equal Cartan entries.
/// Candidates are tried in increasing order, so the first match is lexicographically least.
inline std::optional<std::vector<int>> match_type(const CartanMatrix& a, const std::vector<int>& nodes, SimpleType t)
{
  const CartanMatrix s = cartan_matrix(t);
  const int k = static_cast<int>(nodes.size());
  if (static_cast<int>(s.size()) != k) return std::nullopt;
  auto degree = [](const CartanMatrix& m, const std::vector<int>& idx, int i) {
    int d = 0;
    for (int j : idx)
      if (j != idx[i] && m[idx[i]][j] != 0) ++d;
    return d;
  };
  std::vector<int> ident(k);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<int> sdeg(k), cdeg(k);
  for (int i = 0; i < k; ++i) {
    sdeg[i] = degree(s, ident, i);
    cdeg[i] = degree(a, nodes, i);
  }
  std::vector<int> assign(k, -1);
  std::vector<char> used(k, 0);
  std::function<bool(int)> place = [&](int pos) {
    if (pos == k) return true;
    for (int cand = 0; cand < k; ++cand) {
      if (used[cand] || cdeg[cand] != sdeg[pos]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int u = nodes[cand], v = nodes[assign[q]];
        ok = a[u][v] == s[pos][q] && a[v][u] == s[q][pos];
      }
      if (!ok) continue;
      assign[pos] = cand;
      used[cand] = 1;
      if (place(pos + 1)) return true;
      used[cand] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return assign;
}

struct RecognizedComponent {
  SimpleType type;
  /// nodes[k] is the matrix index of Bourbaki node k+1.
  std::vector<int> nodes;
};

/// Canonical identification of a connected finite-type diagram: B2 rather than C2,
/// A3 rather than D3.
inline RecognizedComponent recognize_component(const CartanMatrix& a, const std::vector<int>& nodes)
{
  const int k = static_cast<int>(nodes.size());
  std::vector<SimpleType> candidates{{Family::A, k}};
  if (k >= 2) candidates.push_back({Family::B, k});
  if (k >= 3) candidates.push_back({Family::C, k});
  if (k >= 4) candidates.push_back({Family::D, k});
  if (k >= 6 && k <= 8) candidates.push_back({Family::E, k});
  if (k == 4) candidates.push_back({Family::F, 4});
  if (k == 2) candidates.push_back({Family::G, 2});
  for (auto t : candidates) {
    if (auto m = match_type(a, nodes, t)) {
      RecognizedComponent rc{t, {}};
      for (int x : *m) rc.nodes.push_back(nodes[x]);
      return rc;
    }
  }
  throw std::invalid_argument("Cartan submatrix on " + std::to_string(k) + " nodes is not of finite type");
}

/// Order of the Weyl group of a simple type.
inline Natural weyl_group_order(SimpleType t)
{
  auto fact = [](int n) {
    Natural f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (Natural(1) << n) * fact(n);
    case Family::D: return (Natural(1) << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? Natural(51840) : n == 7 ? Natural(2903040) : Natural(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 1;
}

/// Integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const
  {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
  }

  Weight& operator+=(const Weight& o)
  {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o)
  {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a)
  {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend Weight operator*(int k, Weight a)
  {
    for (auto& c : a.coords) c *= k;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline std::string to_string(const Weight& w) { return "(" + join(w.coords) + ")"; }

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (int c : w.coords) h = (h ^ static_cast<std::size_t>(c + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

struct Root {
  std::vector<int> root;  // simple-root coordinates
  Weight weight;          // fundamental-weight coordinates
  int height = 0;
  int half_norm = 1;      // (alpha, alpha)/2, shortest root of its component = 1
};

enum class Reality { real, complex, quaternionic };

inline std::string to_string(Reality r)
{
  switch (r) {
    case Reality::real: return "real";
    case Reality::complex: return "complex";
    case Reality::quaternionic: return "quaternionic";
  }
  return "?";
}

/// Reality type of a tensor product of irreducibles of the given types.
inline Reality combine(Reality a, Reality b)
{
  if (a == Reality::complex || b == Reality::complex) return Reality::complex;
  return a == b ? Reality::real : Reality::quaternionic;
}

class RootSystem {
public:
  /// Any finite-type Cartan matrix, including the empty (rank-0) one.
  explicit RootSystem(CartanMatrix a) : cartan_(std::move(a))
  {
    const int n = rank();
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(cartan_[i].size()) != n) throw std::invalid_argument("Cartan matrix not square");
      if (cartan_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      for (int j = 0; j < n; ++j) {
        if (i != j && cartan_[i][j] > 0) throw std::invalid_argument("Cartan off-diagonal must be non-positive");
        if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
          throw std::invalid_argument("Cartan matrix zero pattern not symmetric");
      }
    }
    for (const auto& comp : graph_components(cartan_)) components_.push_back(recognize_component(cartan_, comp));
    build_symmetrizer();
    build_inverse();
    build_gram();
    build_roots();
  }

  static RootSystem of(SimpleType t) { return RootSystem(cartan_matrix(t)); }
  static RootSystem of(const std::vector<SimpleType>& ts) { return RootSystem(cartan_matrix(ts)); }

  int rank() const { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const std::vector<RecognizedComponent>& components() const { return components_; }
  /// d_i = (alpha_i, alpha_i)/2 with the short roots of each component normalized to 1.
  const std::vector<int>& symmetrizer() const { return d_; }

  Weight zero() const { return Weight(std::vector<int>(rank(), 0)); }
  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }

  Weight simple_root(int j) const
  {
    Weight w = zero();
    for (int i = 0; i < rank(); ++i) w[i] = cartan_[i][j];
    return w;
  }

  Weight from_root_coords(const std::vector<int>& r) const
  {
    Weight w = zero();
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * r[j];
    return w;
  }

  std::vector<Rational> root_coords(const Weight& w) const
  {
    std::vector<Rational> r(rank(), Rational(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) r[i] += inverse_[i][j] * w[j];
    return r;
  }

  Weight reflect(Weight w, int i) const
  {
    const int c = w[i];
    if (c != 0)
      for (int k = 0; k < rank(); ++k) w[k] -= c * cartan_[k][i];
    return w;
  }

  bool is_dominant(const Weight& w) const
  {
    return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
  }

  Weight dominant_conjugate(Weight w) const
  {
    for (;;) {
      int i = 0;
      while (i < rank() && w[i] >= 0) ++i;
      if (i == rank()) return w;
      w = reflect(std::move(w), i);
    }
  }

  /// (mu, nu) * inner_scale(), exact.
  std::int64_t scaled_inner(const Weight& mu, const Weight& nu) const
  {
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (mu[i] == 0) continue;
      std::int64_t row = 0;
      for (int j = 0; j < rank(); ++j) row += gram_[i][j] * nu[j];
      s += mu[i] * row;
    }
    return s;
  }
  std::int64_t inner_scale() const { return gram_scale_; }

  /// <lambda, alpha^vee>.
  int coroot_pairing(const Weight& lambda, const Root& alpha) const
  {
    int num = 0;
    for (int i = 0; i < rank(); ++i) num += alpha.root[i] * d_[i] * lambda[i];
    if (num % alpha.half_norm != 0) throw std::logic_error("non-integral coroot pairing");
    return num / alpha.half_norm;
  }

  /// Index of the component containing matrix node i.
  int component_of(int node) const
  {
    for (std::size_t c = 0; c < components_.size(); ++c)
      for (int v : components_[c].nodes)
        if (v == node) return static_cast<int>(c);
    throw std::out_of_range("node out of range");
  }

  std::vector<SimpleType> types() const
  {
    std::vector<SimpleType> ts;
    for (const auto& c : components_) ts.push_back(c.type);
    return ts;
  }

  Natural weyl_group_order() const
  {
    Natural o = 1;
    for (const auto& c : components_) o *= minorb::weyl_group_order(c.type);
    return o;
  }

private:
  void build_symmetrizer()
  {
    const int n = rank();
    std::vector<Rational> q(n, Rational(0));
    for (const auto& comp : components_) {
      const auto& nodes = comp.nodes;
      q[nodes[0]] = 1;
      std::vector<int> stack{nodes[0]};
      std::set<int> seen{nodes[0]};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : nodes) {
          if (j == i || cartan_[i][j] == 0 || seen.count(j)) continue;
          // d_i a_ij = d_j a_ji
          q[j] = q[i] * Rational(cartan_[i][j], cartan_[j][i]);
          seen.insert(j);
          stack.push_back(j);
        }
      }
      Rational mn = q[nodes[0]];
      for (int v : nodes) mn = std::min(mn, q[v]);
      for (int v : nodes) q[v] /= mn;
    }
    d_.resize(n);
    for (int i = 0; i < n; ++i) {
      if (q[i].denominator() != 1) throw std::logic_error("non-integral symmetrizer");
      d_[i] = static_cast<int>(q[i].numerator());
    }
  }

  void build_inverse()
  {
    const int n = rank();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
      m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && m[piv][col].numerator() == 0) ++piv;
      if (piv == n) throw std::invalid_argument("singular Cartan matrix");
      std::swap(m[piv], m[col]);
      const Rational p = m[col][col];
      for (auto& x : m[col]) x /= p;
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col].numerator() == 0) continue;
        const Rational f = m[r][col];
        for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
      }
    }
    inverse_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inverse_[i][j] = m[i][n + j];
  }

  void build_gram()
  {
    // (omega_i, omega_k) = d_i (A^{-1})_{ik}
    const int n = rank();
    std::int64_t scale = 1;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) scale = std::lcm(scale, inverse_[i][k].denominator());
    gram_scale_ = scale;
    gram_.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Rational g = inverse_[i][k] * d_[i] * scale;
        gram_[i][k] = g.numerator();
      }
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (gram_[i][k] != gram_[k][i]) throw std::logic_error("fundamental Gram matrix not symmetric");
  }

  void build_roots()
  {
    const int n = rank();
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> work;
    for (int i = 0; i < n; ++i) {
      std::vector<int> r(n, 0);
      r[i] = 1;
      seen.insert(r);
      work.push(r);
    }
    while (!work.empty()) {
      auto r = work.front();
      work.pop();
      const Weight w = from_root_coords(r);
      for (int i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        auto s = r;
        s[i] -= w[i];
        if (std::any_of(s.begin(), s.end(), [](int c) { return c < 0; })) continue;
        if (std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) continue;
        if (seen.insert(s).second) work.push(s);
      }
    }
    for (const auto& r : seen) {
      Root root;
      root.root = r;
      root.weight = from_root_coords(r);
      root.height = std::accumulate(r.begin(), r.end(), 0);
      int norm2 = 0;  // (alpha, alpha)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm2 += r[i] * r[j] * d_[i] * cartan_[i][j];
      root.half_norm = norm2 / 2;
      roots_.push_back(std::move(root));
    }
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      return a.height != b.height ? a.height < b.height : a.root > b.root;
    });
  }

  CartanMatrix cartan_;
  std::vector<RecognizedComponent> components_;
  std::vector<int> d_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<std::vector<std::int64_t>> gram_;
  std::int64_t gram_scale_ = 1;
  std::vector<Root> roots_;
};

inline void require_dominant(const RootSystem& rs, const Weight& lambda)
{
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coordinates, rank is " +
                                std::to_string(rs.rank()));
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("weight " + to_string(lambda) + " is not dominant");
}

/// Weyl dimension formula. The (alpha,alpha)/2 factors cancel between numerator and
/// denominator, so the product runs over sum_i c_i d_i (lambda_i + 1).
inline Natural weyl_dim(const RootSystem& rs, const Weight& lambda)
{
  require_dominant(rs, lambda);
  Natural num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    long long top = 0, bottom = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      top += static_cast<long long>(a.root[i]) * rs.symmetrizer()[i] * (lambda[i] + 1);
      bottom += static_cast<long long>(a.root[i]) * rs.symmetrizer()[i];
    }
    num *= top;
    den *= bottom;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
  return num / den;
}

/// Weights of the Weyl orbit of a dominant weight.
inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant)
{
  std::unordered_set<Weight, WeightHash> seen{dominant};
  std::vector<Weight> out{dominant};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (out[k][i] <= 0) continue;
      Weight s = rs.reflect(out[k], i);
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
  }
  return out;
}

/// |W . mu| for dominant mu, via the order of the parabolic stabilizer.
inline Natural orbit_size(const RootSystem& rs, const Weight& dominant)
{
  std::vector<int> fixed;
  for (int i = 0; i < rs.rank(); ++i)
    if (dominant[i] == 0) fixed.push_back(i);
  Natural stab = 1;
  for (const auto& comp : graph_components(rs.cartan(), fixed))
    stab *= weyl_group_order(recognize_component(rs.cartan(), comp).type);
  return rs.weyl_group_order() / stab;
}

/// Multiplicities of the dominant weights of V(lambda), in Freudenthal processing
/// order: increasing height of lambda - mu, ties lexicographic.
struct DominantCharacter {
  Weight highest;
  std::vector<std::pair<Weight, std::int64_t>> entries;
};

inline DominantCharacter dominant_multiplicities(const RootSystem& rs, const Weight& lambda)
{
  require_dominant(rs, lambda);
  // Dominant weights below lambda are linked by chains of positive-root subtractions
  // through dominant weights, so a search restricted to dominant weights is complete.
  std::map<Weight, int> depth{{lambda, 0}};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      const int dmu = depth[mu];
      for (const auto& a : rs.positive_roots()) {
        Weight nu = mu - a.weight;
        if (!rs.is_dominant(nu)) continue;
        if (depth.emplace(nu, dmu + a.height).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<int, Weight>> order;
  for (const auto& [w, d] : depth) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());

  const Weight rho = rs.rho();
  const Weight lr = lambda + rho;
  const std::int64_t top = rs.scaled_inner(lr, lr);
  std::map<Weight, std::int64_t> mult;
  DominantCharacter out{lambda, {}};
  for (const auto& [d, mu] : order) {
    std::int64_t m = 1;
    if (d != 0) {
      std::int64_t num = 0;
      for (const auto& a : rs.positive_roots()) {
        Weight nu = mu + a.weight;
        for (;;) {
          auto it = mult.find(rs.dominant_conjugate(nu));
          if (it == mult.end()) break;
          std::int64_t term;
          if (__builtin_mul_overflow(it->second, rs.scaled_inner(nu, a.weight), &term) ||
              __builtin_add_overflow(num, term, &num))
            throw std::overflow_error("weight multiplicity overflow");
          nu += a.weight;
        }
      }
      const Weight mr = mu + rho;
      const std::int64_t den = top - rs.scaled_inner(mr, mr);
      if (den <= 0 || (2 * num) % den != 0) throw std::logic_error("Freudenthal recursion not integral");
      m = 2 * num / den;
    }
    mult[mu] = m;
    out.entries.emplace_back(mu, m);
  }
  return out;
}

struct WeightSystem {
  Weight highest;
  std::map<Weight, std::int64_t> entries;

  std::int64_t dimension() const
  {
    std::int64_t s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
  }
};

inline WeightSystem weight_multiplicities(const RootSystem& rs, const Weight& lambda)
{
  const auto dom = dominant_multiplicities(rs, lambda);
  WeightSystem ws{lambda, {}};
  for (const auto& [mu, m] : dom.entries)
    for (auto& w : weyl_orbit(rs, mu)) ws.entries.emplace(std::move(w), m);
  return ws;
}

/// Total dimension from dominant multiplicities and orbit sizes (no orbit expansion).
inline Natural character_dimension(const RootSystem& rs, const DominantCharacter& ch)
{
  Natural s = 0;
  for (const auto& [mu, m] : ch.entries) s += orbit_size(rs, mu) * m;
  return s;
}

/// Diagram automorphism realizing -w0 on a simple type, in Bourbaki numbering (0-based).
inline std::vector<int> minus_w0_permutation(SimpleType t)
{
  std::vector<int> p(t.rank);
  std::iota(p.begin(), p.end(), 0);
  const int n = t.rank;
  if (t.family == Family::A) {
    std::reverse(p.begin(), p.end());
  } else if (t.family == Family::D && n % 2 == 1) {
    std::swap(p[n - 2], p[n - 1]);
  } else if (t.family == Family::E && n == 6) {
    p = {5, 1, 4, 3, 2, 0};
  }
  return p;
}

/// -w0(lambda), the highest weight of the dual module.
inline Weight dual_weight(const RootSystem& rs, const Weight& lambda)
{
  require_dominant(rs, lambda);
  Weight out = lambda;
  for (const auto& comp : rs.components()) {
    const auto perm = minus_w0_permutation(comp.type);
    for (std::size_t k = 0; k < perm.size(); ++k) out[comp.nodes[perm[k]]] = lambda[comp.nodes[k]];
  }
  return out;
}

/// Frobenius-Schur type of V(lambda) for the compact real form: complex unless
/// self-dual, otherwise the parity of <lambda, 2 rho^vee> separates real (even)
/// from quaternionic (odd).
inline Reality frobenius_schur(const RootSystem& rs, const Weight& lambda)
{
  if (dual_weight(rs, lambda) != lambda) return Reality::complex;
  long long s = 0;
  for (const auto& a : rs.positive_roots()) s += rs.coroot_pairing(lambda, a);
  return s % 2 == 0 ? Reality::real : Reality::quaternionic;
}

/// Highest weight of the top constituent of Lambda^k V(lambda): the sum of the k
/// largest weights (with multiplicity) under a regular dominant functional, namely
/// height followed by lexicographic simple-root coordinates.
inline Weight wedge_power_highest_weight(const RootSystem& rs, const Weight& lambda, int k)
{
  const auto ws = weight_multiplicities(rs, lambda);
  if (k < 0 || k > ws.dimension())
    throw std::invalid_argument("wedge power " + std::to_string(k) + " exceeds module dimension " +
                                std::to_string(ws.dimension()));
  struct Keyed {
    Rational height;
    std::vector<Rational> coords;
    Weight w;
    std::int64_t mult;
  };
  std::vector<Keyed> keyed;
  for (const auto& [w, m] : ws.entries) {
    auto rc = rs.root_coords(w);
    Rational h(0);
    for (const auto& c : rc) h += c;
    keyed.push_back({h, rc, w, m});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.height != b.height) return a.height > b.height;
    return a.coords > b.coords;
  });
  Weight sum = rs.zero();
  int left = k;
  for (const auto& kw : keyed) {
    for (std::int64_t i = 0; i < kw.mult && left > 0; ++i, --left) sum += kw.w;
    if (left == 0) break;
  }
  return sum;
}

} // namespace minorb

#endif // MINORB_ROOTSYSTEM_HPP
