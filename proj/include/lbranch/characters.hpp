#pragma once

// Characters as sparse weight functions: Freudenthal multiplicities, Weyl dimensions,
// decomposition into Weyl characters and Brauer/Klimyk tensor products.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lbranch/root_data.hpp"
#include "lbranch/weyl.hpp"

namespace lbranch {

namespace detail {

inline void require_rank(const RootDatum& datum, const Weight& w)
{
  if (static_cast<int>(w.size()) != datum.rank())
    throw DomainError("weight " + w.to_string() + " has rank " + std::to_string(w.size()) + ", expected " +
                      std::to_string(datum.rank()));
}

inline void require_dominant(const RootDatum& datum, const Weight& w)
{
  require_rank(datum, w);
  if (!w.is_dominant())
    throw NotDominantError("weight " + w.to_string() + " is not dominant");
}

inline void accumulate(WeightMap& m, const Weight& w, const BigInt& v)
{
  if (v == 0)
    return;
  auto [it, inserted] = m.try_emplace(w, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0)
      m.erase(it);
  }
}

} // namespace detail

/// Finite formal sum sum_mu a_mu e^mu over one root datum. Zero values are never stored.
class WeightFunction {
public:
  explicit WeightFunction(RootDatum datum) : datum_(std::move(datum)) {}
  WeightFunction(RootDatum datum, WeightMap entries) : datum_(std::move(datum))
  {
    for (auto& [w, v] : entries) {
      detail::require_rank(datum_, w);
      if (v != 0)
        entries_.emplace(w, std::move(v));
    }
  }

  const RootDatum& datum() const { return datum_; }
  const WeightMap& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  BigInt operator()(const Weight& w) const
  {
    auto it = entries_.find(w);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  void add(const Weight& w, const BigInt& v)
  {
    detail::require_rank(datum_, w);
    detail::accumulate(entries_, w, v);
  }

  BigInt total() const
  {
    BigInt s = 0;
    for (const auto& [w, v] : entries_)
      s += v;
    return s;
  }

  /// First weight mu with xi(s_i mu) != xi(mu) for some i, if any.
  std::optional<Weight> invariance_witness() const
  {
    for (const auto& [w, v] : entries_)
      for (int i = 0; i < datum_.rank(); ++i)
        if ((*this)(reflect(datum_, i, w)) != v)
          return w;
    return std::nullopt;
  }
  bool is_w_invariant() const { return !invariance_witness().has_value(); }

  WeightFunction& operator+=(const WeightFunction& o)
  {
    for (const auto& [w, v] : o.entries_)
      detail::accumulate(entries_, w, v);
    return *this;
  }
  WeightFunction& operator-=(const WeightFunction& o)
  {
    for (const auto& [w, v] : o.entries_)
      detail::accumulate(entries_, w, -v);
    return *this;
  }
  WeightFunction& operator*=(const BigInt& k)
  {
    if (k == 0)
      entries_.clear();
    for (auto& [w, v] : entries_)
      v *= k;
    return *this;
  }
  friend WeightFunction operator+(WeightFunction a, const WeightFunction& b) { return a += b; }
  friend WeightFunction operator-(WeightFunction a, const WeightFunction& b) { return a -= b; }
  friend WeightFunction operator*(const BigInt& k, WeightFunction a) { return a *= k; }

  friend bool operator==(const WeightFunction& a, const WeightFunction& b)
  {
    return a.datum_ == b.datum_ && a.entries_ == b.entries_;
  }

private:
  RootDatum datum_;
  WeightMap entries_;
};

/// Integer combination sum_nu b_nu chi(nu) over dominant nu.
class VirtualCharacter {
public:
  explicit VirtualCharacter(RootDatum datum) : datum_(std::move(datum)) {}
  VirtualCharacter(RootDatum datum, const WeightMap& coeffs) : datum_(std::move(datum))
  {
    for (const auto& [w, v] : coeffs)
      add(w, v);
  }

  const RootDatum& datum() const { return datum_; }
  const WeightMap& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  BigInt operator()(const Weight& w) const
  {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add(const Weight& w, const BigInt& v)
  {
    detail::require_dominant(datum_, w);
    detail::accumulate(coeffs_, w, v);
  }

  bool is_nonnegative() const
  {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b)
  {
    return a.datum_ == b.datum_ && a.coeffs_ == b.coeffs_;
  }

private:
  RootDatum datum_;
  WeightMap coeffs_;
};

/// The W-invariant form with (alpha_i, alpha_j) = d_i a_ij, as exact rationals on
/// fundamental weights: (varpi_i, varpi_j) = (C^-1)_ij d_i.
class BilinearForm {
public:
  explicit BilinearForm(const RootDatum& datum) : datum_(datum)
  {
    auto inv = detail::rational_inverse(datum.cartan().matrix);
    const int n = datum.rank();
    gram_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram_[i][j] = inv[i][j] * datum.symmetrizer(i);
  }

  const Rational& gram(int i, int j) const { return gram_[i][j]; }

  Rational operator()(const Weight& a, const Weight& b) const
  {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        s += gram_[i][j] * a[i] * b[j];
    }
    return s;
  }

  /// Pairing of a root-lattice element (simple-root coefficients) with a weight; integral.
  std::int64_t pair_root(std::span<const int> coeffs, const Weight& w) const { return datum_.pair_root(coeffs, w); }

private:
  RootDatum datum_;
  std::vector<std::vector<Rational>> gram_;
};

/// Sort key for dominance-compatible iteration: larger height first, then lexicographic.
inline std::vector<std::pair<Weight, BigInt>> dominance_sorted(const RootDatum& datum, const WeightMap& m)
{
  std::vector<std::pair<Weight, BigInt>> out(m.begin(), m.end());
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto ha = datum.scaled_height(a.first), hb = datum.scaled_height(b.first);
    if (ha != hb)
      return ha > hb;
    return a.first < b.first;
  });
  return out;
}

namespace detail {

/// Freudenthal recursion restricted to dominant weights:
///   ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m(mu)
///       = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha),
/// with m(mu + k alpha) read off the dominant representative. Both sides are integers
/// because lambda - mu and alpha lie in the root lattice.
inline WeightMap freudenthal_dominant(const RootDatum& datum, const Weight& lambda)
{
  const int n = datum.rank();
  const auto roots = datum.positive_roots();

  // Dominant weights below lambda, with simple-root coordinates of lambda - mu.
  // Covering relations among dominant weights are differences of positive roots.
  std::map<Weight, std::vector<int>> depth{{lambda, std::vector<int>(n, 0)}};
  std::vector<Weight> queue{lambda};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Weight mu = queue[head];
    const std::vector<int> dmu = depth.at(mu);
    for (const auto& r : roots) {
      Weight nu = mu - r.weight;
      if (!nu.is_dominant() || depth.count(nu))
        continue;
      std::vector<int> dnu = dmu;
      for (int k = 0; k < n; ++k)
        dnu[k] += r.coeffs[k];
      depth.emplace(nu, std::move(dnu));
      queue.push_back(std::move(nu));
    }
  }

  std::vector<std::pair<Weight, int>> order;
  order.reserve(depth.size());
  for (const auto& [w, d] : depth)
    order.emplace_back(w, std::accumulate(d.begin(), d.end(), 0));
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second < b.second; });

  std::unordered_map<Weight, BigInt, WeightHash> mult;
  mult.emplace(lambda, 1);
  const Weight two_rho = 2 * rho(datum);
  for (const auto& [mu, height] : order) {
    if (height == 0)
      continue;
    const std::int64_t denom = datum.pair_root(depth.at(mu), lambda + mu + two_rho);
    BigInt num = 0;
    for (const auto& r : roots) {
      Weight nu = mu;
      while (true) {
        nu += r.weight;
        auto it = mult.find(dominant_representative(datum, nu).weight);
        if (it == mult.end())
          break;
        num += it->second * datum.pair_root(r.coeffs, nu);
      }
    }
    num *= 2;
    if (denom <= 0 || num % denom != 0)
      throw InternalConsistencyError("Freudenthal recursion produced a non-integral multiplicity at " + mu.to_string());
    mult.emplace(mu, num / denom);
  }
  return WeightMap(mult.begin(), mult.end());
}

} // namespace detail

/// Dominant part of chi(lambda): dominant weight -> multiplicity. Memoized per datum,
/// and backed by the datum's CharacterStore when one is attached.
inline std::shared_ptr<const WeightMap> dominant_character(const RootDatum& datum, const Weight& lambda)
{
  detail::require_dominant(datum, lambda);
  if (auto hit = datum.memo().find(lambda))
    return hit;
  if (const auto& store = datum.store()) {
    if (auto loaded = store->load(datum, lambda))
      return datum.memo().insert(lambda, std::move(*loaded));
  }
  WeightMap table = detail::freudenthal_dominant(datum, lambda);
  if (const auto& store = datum.store())
    store->save(datum, lambda, table);
  return datum.memo().insert(lambda, std::move(table));
}

/// Extends a table of dominant multiplicities to the full W-invariant weight function.
inline WeightFunction expand_orbits(const RootDatum& datum, const WeightMap& dominant)
{
  WeightMap full;
  for (const auto& [mu, m] : dominant)
    for (const auto& w : detail::reflection_closure(datum, mu))
      full.emplace(w, m);
  return WeightFunction(datum, std::move(full));
}

/// All weight multiplicities of the irreducible module of highest weight lambda.
inline WeightFunction freudenthal_character(const RootDatum& datum, const Weight& lambda)
{
  return expand_orbits(datum, *dominant_character(datum, lambda));
}

/// prod_{alpha>0} (lambda+rho, alpha) / (rho, alpha).
inline BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda)
{
  detail::require_dominant(datum, lambda);
  const Weight r = rho(datum);
  const Weight shifted = lambda + r;
  Rational dim = 1;
  for (const auto& a : datum.positive_roots())
    dim *= Rational(datum.pair_root(a.coeffs, shifted), datum.pair_root(a.coeffs, r));
  if (boost::multiprecision::denominator(dim) != 1)
    throw InternalConsistencyError("Weyl dimension formula gave a non-integer for " + lambda.to_string());
  return boost::multiprecision::numerator(dim);
}

/// Product in Z[X]: (xi * eta)(nu) = sum_{a+b=nu} xi(a) eta(b).
inline WeightFunction convolve(const WeightFunction& xi, const WeightFunction& eta)
{
  if (!(xi.datum() == eta.datum()))
    throw DomainError("cannot multiply weight functions over different root data");
  WeightMap out;
  for (const auto& [a, x] : xi)
    for (const auto& [b, y] : eta)
      detail::accumulate(out, a + b, x * y);
  return WeightFunction(xi.datum(), std::move(out));
}

inline void require_w_invariant(const WeightFunction& xi)
{
  if (auto w = xi.invariance_witness())
    throw NotWInvariantError("weight function is not W-invariant (witness " + w->to_string() + ")");
}

/// Writes a W-invariant weight function as sum_nu b_nu chi(nu) by repeatedly peeling off
/// the character of a maximal weight. Only dominant weights are touched.
inline VirtualCharacter decompose_into_weyl(const WeightFunction& xi)
{
  require_w_invariant(xi);
  const RootDatum& datum = xi.datum();
  using Key = std::pair<std::int64_t, Weight>;
  std::map<Key, BigInt, std::greater<>> work;
  for (const auto& [w, v] : xi)
    if (w.is_dominant())
      work.emplace(Key{datum.scaled_height(w), w}, v);

  VirtualCharacter out(datum);
  while (!work.empty()) {
    auto top = work.begin();
    const Weight nu = top->first.second;
    const BigInt b = top->second;
    out.add(nu, b);
    for (const auto& [mu, m] : *dominant_character(datum, nu)) {
      Key k{datum.scaled_height(mu), mu};
      auto [it, inserted] = work.try_emplace(k, 0);
      it->second -= b * m;
      if (it->second == 0)
        work.erase(it);
    }
  }
  return out;
}

/// sum_nu b_nu chi(nu) as a weight function.
inline WeightFunction evaluate_virtual(const VirtualCharacter& vc)
{
  WeightMap dominant;
  for (const auto& [nu, b] : vc)
    for (const auto& [mu, m] : *dominant_character(vc.datum(), nu))
      detail::accumulate(dominant, mu, b * m);
  return expand_orbits(vc.datum(), dominant);
}

/// xi . chi(nu) = sum_lambda a_lambda chi(lambda + nu), with chi(w.mu) = (-1)^l(w) chi(mu)
/// and rho-singular terms dropped.
inline VirtualCharacter brauer_klimyk_product(const WeightFunction& xi, const Weight& nu)
{
  detail::require_dominant(xi.datum(), nu);
  require_w_invariant(xi);
  VirtualCharacter out(xi.datum());
  for (const auto& [lambda, a] : xi) {
    auto reg = shifted_regularize(xi.datum(), lambda + nu);
    if (reg)
      out.add(reg->weight, reg->sign > 0 ? a : BigInt(-a));
  }
  return out;
}

/// chi(lambda) chi(mu) = sum_nu c_{lambda,mu}^nu chi(nu).
inline VirtualCharacter tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu)
{
  detail::require_dominant(datum, mu);
  auto out = brauer_klimyk_product(freudenthal_character(datum, lambda), mu);
  if (!out.is_nonnegative())
    throw TheoremViolation("negative tensor product multiplicity in chi" + lambda.to_string() + " x chi" +
                           mu.to_string());
  return out;
}

/// sum_nu b_nu dim chi(nu).
inline BigInt virtual_dimension(const VirtualCharacter& vc)
{
  BigInt s = 0;
  for (const auto& [nu, b] : vc)
    s += b * weyl_dimension(vc.datum(), nu);
  return s;
}

} // namespace lbranch
