#pragma once

// Cartan data, simply connected root data and the l-modified (Langlands dual) datum.
//
// Conventions: a_ij = <coroot_i, root_j>; weights are written in fundamental-weight
// coordinates, so the simple root alpha_j is the j-th column of the Cartan matrix.
// Built-in types use Bourbaki node numbering.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lbranch/bigint.hpp"
#include "lbranch/errors.hpp"
#include "lbranch/weight.hpp"

namespace lbranch {

using IntMatrix = std::vector<std::vector<int>>;

struct CartanDatum {
  std::string family = "custom"; // "A".."G" for built-in types
  int rank = 0;
  IntMatrix matrix;
  std::vector<int> symmetrizers; // d_i with d_i a_ij = d_j a_ji
  int d = 1;                     // lcm of the d_i
  std::string labeling = "custom";

  int operator()(int i, int j) const { return matrix[i][j]; }

  /// "B2", "E8", ... for built-in types, "custom" otherwise.
  std::string name() const
  {
    if (family.size() == 1 && labeling != "custom")
      return family + std::to_string(rank);
    return family;
  }

  friend bool operator==(const CartanDatum& a, const CartanDatum& b)
  {
    return a.matrix == b.matrix && a.symmetrizers == b.symmetrizers;
  }
};

namespace detail {

inline int lcm_of(std::span<const int> xs)
{
  int l = 1;
  for (int x : xs)
    l = std::lcm(l, x);
  return l;
}

/// Leading principal minors via fraction-free (Bareiss) elimination. Stops at the
/// first vanishing pivot, so a short result means a singular leading block.
inline std::vector<BigInt> leading_minors(const IntMatrix& a)
{
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = a[i][j];
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (m[k][k] == 0)
      break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return minors;
}

/// Exact inverse of a nonsingular integer matrix.
inline std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a)
{
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw InvalidCartanError("Cartan matrix is singular");
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& x : m[col])
      x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0)
        continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        m[r][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = m[i][n + j];
  return inv;
}

inline void check_shape(const IntMatrix& matrix)
{
  const std::size_t n = matrix.size();
  if (n == 0)
    throw InvalidCartanError("Cartan matrix must have positive rank");
  for (const auto& row : matrix)
    if (row.size() != n)
      throw InvalidCartanError("Cartan matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 2)
      throw InvalidCartanError("diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (matrix[i][j] > 0)
        throw InvalidCartanError("off-diagonal entry a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                 " is positive");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
        throw InvalidCartanError("a_ij = 0 must imply a_ji = 0 (nodes " + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) + ")");
    }
  }
}

} // namespace detail

/// Minimal positive integral symmetrizing vector (gcd 1 on each connected component).
inline std::vector<int> minimal_symmetrizers(const IntMatrix& matrix)
{
  detail::check_shape(matrix);
  const std::size_t n = matrix.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> out(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0)
      continue;
    std::vector<std::size_t> component{root};
    d[root] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      std::size_t i = component[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || matrix[i][j] == 0)
          continue;
        Rational dj = d[i] * matrix[i][j] / matrix[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          component.push_back(j);
        } else if (d[j] != dj) {
          throw InvalidCartanError("Cartan matrix is not symmetrizable");
        }
      }
    }
    BigInt den_lcm = 1;
    for (std::size_t i : component)
      den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(d[i]));
    BigInt num_gcd = 0;
    for (std::size_t i : component)
      num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(Rational(d[i] * den_lcm)));
    for (std::size_t i : component)
      out[i] = static_cast<int>(boost::multiprecision::numerator(Rational(d[i] * den_lcm)) / num_gcd);
  }
  return out;
}

/// Validates a Cartan matrix together with a (not necessarily minimal) symmetrizer.
inline CartanDatum validate_cartan(IntMatrix matrix, std::vector<int> symmetrizers)
{
  detail::check_shape(matrix);
  const std::size_t n = matrix.size();
  if (symmetrizers.size() != n)
    throw InvalidCartanError("symmetrizer length " + std::to_string(symmetrizers.size()) +
                             " does not match rank " + std::to_string(n));
  for (int di : symmetrizers)
    if (di <= 0)
      throw InvalidCartanError("symmetrizers must be positive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (symmetrizers[i] * matrix[i][j] != symmetrizers[j] * matrix[j][i])
        throw InvalidCartanError("symmetrization fails: d_" + std::to_string(i + 1) + " a_" + std::to_string(i + 1) +
                                 std::to_string(j + 1) + " != d_" + std::to_string(j + 1) + " a_" +
                                 std::to_string(j + 1) + std::to_string(i + 1));
  auto minors = detail::leading_minors(matrix);
  if (minors.size() < n || std::any_of(minors.begin(), minors.end(), [](const BigInt& m) { return m <= 0; }))
    throw InvalidCartanError("Cartan matrix is not of finite type");

  CartanDatum out;
  out.rank = static_cast<int>(n);
  out.matrix = std::move(matrix);
  out.symmetrizers = std::move(symmetrizers);
  out.d = detail::lcm_of(out.symmetrizers);
  return out;
}

/// Standard finite-type Cartan matrix with minimal symmetrizers, Bourbaki numbering.
/// B_n: alpha_n short. C_n: alpha_n long. F4: alpha_1, alpha_2 long. G2: alpha_1 short.
inline CartanDatum cartan_matrix(char family, int rank)
{
  const bool ok = (family == 'A' && rank >= 1) || (family == 'B' && rank >= 2) || (family == 'C' && rank >= 2) ||
                  (family == 'D' && rank >= 4) || (family == 'E' && rank >= 6 && rank <= 8) ||
                  (family == 'F' && rank == 4) || (family == 'G' && rank == 2);
  if (!ok)
    throw InvalidTypeError(std::string("no finite type ") + family + std::to_string(rank));

  const int n = rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };

  switch (family) {
  case 'A':
  case 'B':
  case 'C':
  case 'F':
    for (int i = 0; i + 1 < n; ++i)
      bond(i, i + 1);
    break;
  case 'D':
    for (int i = 0; i + 2 < n; ++i)
      bond(i, i + 1);
    bond(n - 3, n - 1);
    break;
  case 'E':
    bond(0, 2);
    bond(1, 3);
    for (int i = 2; i + 1 < n; ++i)
      bond(i, i + 1);
    break;
  case 'G':
    break;
  }
  std::vector<int> sym(n, 1);
  if (family == 'B') {
    a[n - 1][n - 2] = -2;
    std::fill(sym.begin(), sym.end() - 1, 2);
  } else if (family == 'C') {
    a[n - 2][n - 1] = -2;
    sym[n - 1] = 2;
  } else if (family == 'F') {
    a[2][1] = -2;
    sym = {2, 2, 1, 1};
  } else if (family == 'G') {
    a[0][1] = -3;
    a[1][0] = -1;
    sym = {1, 3};
  }
  CartanDatum c = validate_cartan(std::move(a), std::move(sym));
  c.family = std::string(1, family);
  c.labeling = "bourbaki";
  return c;
}

/// Parses a type label such as "B2" or "E8".
inline CartanDatum cartan_matrix(std::string_view type)
{
  if (type.size() < 2)
    throw InvalidTypeError("malformed type '" + std::string(type) + "'");
  int rank = 0;
  for (char ch : type.substr(1)) {
    if (ch < '0' || ch > '9')
      throw InvalidTypeError("malformed type '" + std::string(type) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 1000)
      throw InvalidTypeError("rank too large in '" + std::string(type) + "'");
  }
  char family = type.front();
  if (family >= 'a' && family <= 'z')
    family = static_cast<char>(family - 'a' + 'A');
  return cartan_matrix(family, rank);
}

struct PositiveRoot {
  Weight weight;           // fundamental-weight coordinates
  std::vector<int> coeffs; // expansion over the simple roots
  int height = 0;
};

class RootDatum;

/// Optional persistent backing for characters. Tables hold dominant weights only.
class CharacterStore {
public:
  virtual ~CharacterStore() = default;
  virtual std::optional<WeightMap> load(const RootDatum& datum, const Weight& highest) = 0;
  virtual void save(const RootDatum& datum, const Weight& highest, const WeightMap& dominant) = 0;
};

namespace detail {

/// Write-once memo of dominant multiplicity tables, safe under concurrent insertion.
class CharacterMemo {
public:
  std::shared_ptr<const WeightMap> find(const Weight& w) const
  {
    std::shared_lock lock(mu_);
    auto it = tables_.find(w);
    return it == tables_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const WeightMap> insert(const Weight& w, WeightMap table)
  {
    auto ptr = std::make_shared<const WeightMap>(std::move(table));
    std::unique_lock lock(mu_);
    auto [it, inserted] = tables_.emplace(w, ptr);
    return it->second;
  }

private:
  mutable std::shared_mutex mu_;
  std::map<Weight, std::shared_ptr<const WeightMap>> tables_;
};

} // namespace detail

/// Simply connected root datum: X = Z^n in fundamental-weight coordinates.
/// Cheap to copy; all copies share the immutable data and the character memo.
class RootDatum {
public:
  explicit RootDatum(const CartanDatum& cartan, std::shared_ptr<CharacterStore> store = nullptr)
  {
    auto impl = std::make_shared<Impl>();
    impl->cartan = validate_cartan(cartan.matrix, cartan.symmetrizers);
    impl->cartan.family = cartan.family;
    impl->cartan.labeling = cartan.labeling;
    impl->store = std::move(store);
    build(*impl);
    impl_ = std::move(impl);
  }

  const CartanDatum& cartan() const { return impl_->cartan; }
  int rank() const { return impl_->cartan.rank; }
  int symmetrizer(int i) const { return impl_->cartan.symmetrizers[i]; }
  const Weight& simple_root(int i) const { return impl_->simple_roots[i]; }
  std::span<const PositiveRoot> positive_roots() const { return impl_->positive; }

  /// det(C); positive for finite type.
  std::int64_t det() const { return impl_->det; }

  /// det(C) times the height (sum of simple-root coefficients) of a weight.
  std::int64_t scaled_height(const Weight& w) const
  {
    std::int64_t h = 0;
    for (int j = 0; j < rank(); ++j)
      h += impl_->height_coeffs[j] * w[j];
    return h;
  }

  /// Coefficients of w over the simple roots, or nullopt if w is not in the root lattice.
  std::optional<std::vector<int>> root_coordinates(const Weight& w) const
  {
    const int n = rank();
    std::vector<int> out(n);
    for (int k = 0; k < n; ++k) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j)
        s += impl_->adjugate[k][j] * w[j];
      if (s % impl_->det != 0)
        return std::nullopt;
      out[k] = static_cast<int>(s / impl_->det);
    }
    return out;
  }

  /// Dominance order: mu <= lambda iff lambda - mu is a nonnegative sum of simple roots.
  bool leq(const Weight& mu, const Weight& lambda) const
  {
    auto c = root_coordinates(lambda - mu);
    return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
  }

  /// Inner product of the root-lattice element sum_k coeffs[k] alpha_k with w.
  /// Uses (alpha_k, w) = d_k <coroot_k, w>, so the result is integral.
  std::int64_t pair_root(std::span<const int> coeffs, const Weight& w) const
  {
    std::int64_t s = 0;
    for (int k = 0; k < rank(); ++k)
      s += static_cast<std::int64_t>(coeffs[k]) * symmetrizer(k) * w[k];
    return s;
  }

  const std::shared_ptr<CharacterStore>& store() const { return impl_->store; }
  detail::CharacterMemo& memo() const { return impl_->memo; }

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.cartan() == b.cartan(); }

private:
  struct Impl {
    CartanDatum cartan;
    std::vector<Weight> simple_roots;
    std::vector<PositiveRoot> positive;
    std::vector<std::vector<std::int64_t>> adjugate;
    std::int64_t det = 1;
    std::vector<std::int64_t> height_coeffs;
    std::shared_ptr<CharacterStore> store;
    mutable detail::CharacterMemo memo;
  };

  static void build(Impl& im)
  {
    const auto& a = im.cartan.matrix;
    const int n = im.cartan.rank;
    for (int j = 0; j < n; ++j) {
      Weight col = Weight::zero(n);
      for (int i = 0; i < n; ++i)
        col[i] = a[i][j];
      im.simple_roots.push_back(col);
    }

    auto inv = detail::rational_inverse(a);
    im.det = static_cast<std::int64_t>(detail::leading_minors(a).back());
    im.adjugate.assign(n, std::vector<std::int64_t>(n));
    im.height_coeffs.assign(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Rational v = inv[k][j] * im.det;
        im.adjugate[k][j] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
        im.height_coeffs[j] += im.adjugate[k][j];
      }

    // Grow root strings: beta + alpha_i is a root iff q > 0, where the alpha_i-string
    // through beta is beta - p alpha_i, ..., beta + q alpha_i and p - q = <coroot_i, beta>.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      known.insert(e);
      layer.push_back(e);
    }
    std::vector<std::vector<int>> all = layer;
    while (!layer.empty()) {
      std::set<std::vector<int>> next;
      for (const auto& beta : layer) {
        for (int i = 0; i < n; ++i) {
          int pairing = 0;
          for (int j = 0; j < n; ++j)
            pairing += a[i][j] * beta[j];
          int p = 0;
          std::vector<int> down = beta;
          while (true) {
            down[i] -= 1;
            if (!known.count(down))
              break;
            ++p;
          }
          if (p - pairing > 0) {
            std::vector<int> up = beta;
            up[i] += 1;
            if (!known.count(up))
              next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      for (const auto& r : layer) {
        known.insert(r);
        all.push_back(r);
      }
    }
    for (const auto& c : all) {
      PositiveRoot r;
      r.coeffs = c;
      r.height = std::accumulate(c.begin(), c.end(), 0);
      r.weight = Weight::zero(n);
      for (int k = 0; k < n; ++k)
        r.weight += c[k] * im.simple_roots[k];
      im.positive.push_back(std::move(r));
    }
    std::sort(im.positive.begin(), im.positive.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
      return std::tie(x.height, x.coeffs) < std::tie(y.height, y.coeffs);
    });
  }

  std::shared_ptr<const Impl> impl_;
};

inline std::span<const PositiveRoot> positive_roots(const RootDatum& datum) { return datum.positive_roots(); }

namespace detail {

inline void reflect_in_place(const RootDatum& datum, int i, Weight& w)
{
  const int k = w[i];
  if (k == 0)
    return;
  const Weight& a = datum.simple_root(i);
  for (std::size_t j = 0; j < w.size(); ++j)
    w[j] -= k * a[j];
}

inline std::set<Weight> reflection_closure(const RootDatum& datum, const Weight& start)
{
  std::set<Weight> seen{start};
  std::vector<Weight> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i = 0; i < datum.rank(); ++i) {
      Weight w = queue[head];
      reflect_in_place(datum, i, w);
      if (seen.insert(w).second)
        queue.push_back(std::move(w));
    }
  }
  return seen;
}

} // namespace detail

/// alpha -> alpha* = l_alpha alpha, matching a positive root of the modified datum.
struct RootScaling {
  Weight root;             // base fundamental coordinates
  std::vector<int> coeffs; // over the base simple roots
  int scale = 1;           // l_alpha
  Weight dual_root;        // alpha* in dual fundamental coordinates
};

/// The l-modified root datum. With d | ell its Cartan matrix is the transpose of the
/// base one, i.e. the Langlands dual. Weights of the dual live on the sublattice
/// X* = { lambda : l_i | lambda_i }, written in dual coordinates lambda_i / l_i.
class ModifiedDatum {
public:
  ModifiedDatum(const RootDatum& base, int ell) : impl_(make(base, ell)) {}

  const RootDatum& base() const { return impl_->base; }
  const RootDatum& dual() const { return impl_->dual; }
  int ell() const { return impl_->ell; }
  std::span<const int> l() const { return impl_->l; }
  int l(int i) const { return impl_->l[i]; }

  bool in_sublattice(const Weight& w) const
  {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] % impl_->l[i] != 0)
        return false;
    return true;
  }

  /// Indices i (0-based) with l_i not dividing w_i.
  std::vector<int> sublattice_violations(const Weight& w) const
  {
    std::vector<int> bad;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] % impl_->l[i] != 0)
        bad.push_back(static_cast<int>(i));
    return bad;
  }

  Weight dual_coords(const Weight& w) const
  {
    check_rank(w);
    if (!in_sublattice(w))
      throw NotInSublatticeError("weight " + w.to_string() + " does not lie in X*");
    Weight out = w;
    for (std::size_t i = 0; i < w.size(); ++i)
      out[i] /= impl_->l[i];
    return out;
  }

  Weight embed(const Weight& dual_weight) const
  {
    check_rank(dual_weight);
    Weight out = dual_weight;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] *= impl_->l[i];
    return out;
  }

  const std::vector<RootScaling>& root_scaling() const { return impl_->scaling; }

private:
  struct Impl {
    RootDatum base;
    RootDatum dual;
    int ell;
    std::vector<int> l;
    std::vector<RootScaling> scaling;
  };

  void check_rank(const Weight& w) const
  {
    if (static_cast<int>(w.size()) != impl_->base.rank())
      throw DomainError("weight " + w.to_string() + " has wrong rank");
  }

  static std::shared_ptr<const Impl> make(const RootDatum& base, int ell)
  {
    const CartanDatum& c = base.cartan();
    if (ell <= 0)
      throw EllNotMultipleError("ell must be a positive integer");
    if (ell % c.d != 0)
      throw EllNotMultipleError("ell = " + std::to_string(ell) + " is not a multiple of d = " + std::to_string(c.d) +
                                "; the Langlands-dual interpretation requires d | ell");
    const int n = c.rank;
    std::vector<int> l(n);
    for (int i = 0; i < n; ++i)
      l[i] = ell / std::gcd(ell, c.symmetrizers[i]);

    IntMatrix dual_matrix(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int num = l[j] * c.matrix[i][j];
        if (num % l[i] != 0)
          throw InternalConsistencyError("modified Cartan entry is not integral");
        dual_matrix[i][j] = num / l[i];
      }
    auto dual_sym = minimal_symmetrizers(dual_matrix);
    CartanDatum dc = validate_cartan(std::move(dual_matrix), std::move(dual_sym));
    if (c.labeling == "bourbaki" && c.family.size() == 1) {
      const char f = c.family[0];
      dc.family = std::string(1, f == 'B' ? 'C' : f == 'C' ? 'B' : f);
      dc.labeling = "transpose";
    }

    auto im = std::make_shared<Impl>(Impl{base, RootDatum(dc, base.store()), ell, l, {}});
    im->scaling = compute_scaling(*im);
    return im;
  }

  static std::vector<RootScaling> compute_scaling(const Impl& im)
  {
    const int n = im.base.rank();
    std::vector<std::set<Weight>> orbits;
    for (int i = 0; i < n; ++i)
      orbits.push_back(detail::reflection_closure(im.base, im.base.simple_root(i)));

    std::set<Weight> dual_embedded;
    for (const auto& r : im.dual.positive_roots()) {
      Weight w = r.weight;
      for (int i = 0; i < n; ++i)
        w[i] *= im.l[i];
      dual_embedded.insert(w);
    }

    std::vector<RootScaling> out;
    std::set<Weight> hit;
    for (const auto& r : im.base.positive_roots()) {
      int scale = 0;
      for (int i = 0; i < n; ++i) {
        if (!orbits[i].count(r.weight))
          continue;
        if (scale != 0 && scale != im.l[i])
          throw InternalConsistencyError("root " + r.weight.to_string() + " has ambiguous scaling");
        scale = im.l[i];
      }
      if (scale == 0)
        throw InternalConsistencyError("root " + r.weight.to_string() + " is not W-conjugate to a simple root");
      Weight star = scale * r.weight;
      if (!dual_embedded.count(star))
        throw InternalConsistencyError("scaled root " + star.to_string() + " is not a root of the modified datum");
      if (!hit.insert(star).second)
        throw InternalConsistencyError("root scaling map is not injective");
      Weight dual_root = star;
      for (int i = 0; i < n; ++i)
        dual_root[i] /= im.l[i];
      out.push_back(RootScaling{r.weight, r.coeffs, scale, dual_root});
    }
    if (hit.size() != dual_embedded.size())
      throw InternalConsistencyError("root scaling map is not surjective");
    return out;
  }

  std::shared_ptr<const Impl> impl_;
};

inline ModifiedDatum modified_datum(const RootDatum& datum, int ell) { return ModifiedDatum(datum, ell); }

inline bool in_sublattice(const ModifiedDatum& md, const Weight& w) { return md.in_sublattice(w); }
inline Weight dual_coords(const ModifiedDatum& md, const Weight& w) { return md.dual_coords(w); }
inline Weight embed(const ModifiedDatum& md, const Weight& w) { return md.embed(w); }

/// Verified bijection from the base positive roots onto the modified positive roots.
inline const std::vector<RootScaling>& root_scaling_map(const ModifiedDatum& md) { return md.root_scaling(); }

} // namespace lbranch
