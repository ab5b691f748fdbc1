#pragma once

// Kostant's multiplicity formula, kept deliberately independent of the Freudenthal path:
//   mult_lambda(mu) = sum_{w in W} eps(w) P(w(lambda+rho) - (mu+rho)),
// where P counts ways to write a vector as a nonnegative sum of positive roots.
// W is enumerated explicitly as integer matrices; intended for small ranks only.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lbranch/root_data.hpp"

namespace lbranch {

class KostantOracle {
public:
  explicit KostantOracle(const RootDatum& datum) : datum_(datum), n_(datum.rank())
  {
    inverse_ = detail::rational_inverse(datum.cartan().matrix);
    for (const auto& r : datum.positive_roots())
      roots_.push_back(r.coeffs);
    enumerate_group();
  }

  std::size_t group_order() const { return group_.size(); }

  BigInt multiplicity(const Weight& lambda, const Weight& mu)
  {
    if (!lambda.is_dominant())
      throw NotDominantError("weight " + lambda.to_string() + " is not dominant");
    std::vector<int> top(n_), base(n_);
    for (int i = 0; i < n_; ++i) {
      top[i] = lambda[i] + 1;
      base[i] = mu[i] + 1;
    }
    BigInt total = 0;
    for (const auto& [matrix, sign] : group_) {
      std::vector<int> diff(n_);
      for (int i = 0; i < n_; ++i) {
        long long s = 0;
        for (int j = 0; j < n_; ++j)
          s += static_cast<long long>(matrix[i][j]) * top[j];
        diff[i] = static_cast<int>(s) - base[i];
      }
      auto coords = to_root_coords(diff);
      if (!coords)
        continue;
      BigInt p = partitions(*coords, 0);
      total += sign > 0 ? p : BigInt(-p);
    }
    return total;
  }

private:
  using Matrix = std::vector<std::vector<int>>;

  // Simple reflection on fundamental coordinates: (s_i x)_j = x_j - a_ji x_i.
  Matrix reflection(int i) const
  {
    Matrix m(n_, std::vector<int>(n_, 0));
    for (int j = 0; j < n_; ++j)
      m[j][j] = 1;
    for (int j = 0; j < n_; ++j)
      m[j][i] -= datum_.cartan().matrix[j][i];
    return m;
  }

  Matrix multiply(const Matrix& a, const Matrix& b) const
  {
    Matrix c(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        if (a[i][k] != 0)
          for (int j = 0; j < n_; ++j)
            c[i][j] += a[i][k] * b[k][j];
    return c;
  }

  void enumerate_group()
  {
    Matrix id(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
      id[i][i] = 1;
    std::vector<Matrix> gens;
    for (int i = 0; i < n_; ++i)
      gens.push_back(reflection(i));
    std::map<Matrix, int> seen{{id, 1}};
    std::vector<Matrix> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Matrix cur = queue[head];
      const int sign = seen.at(cur);
      for (const auto& g : gens) {
        Matrix next = multiply(g, cur);
        if (seen.emplace(next, -sign).second)
          queue.push_back(std::move(next));
      }
    }
    group_.assign(seen.begin(), seen.end());
  }

  std::optional<std::vector<int>> to_root_coords(const std::vector<int>& w) const
  {
    std::vector<int> out(n_);
    for (int k = 0; k < n_; ++k) {
      Rational s = 0;
      for (int j = 0; j < n_; ++j)
        s += inverse_[k][j] * w[j];
      if (boost::multiprecision::denominator(s) != 1)
        return std::nullopt;
      out[k] = static_cast<int>(boost::multiprecision::numerator(s));
      if (out[k] < 0)
        return std::nullopt;
    }
    return out;
  }

  // Number of ways to write v as sum_{t >= idx} c_t roots_[t] with c_t >= 0.
  BigInt partitions(const std::vector<int>& v, std::size_t idx)
  {
    if (idx == roots_.size()) {
      for (int x : v)
        if (x != 0)
          return 0;
      return 1;
    }
    auto key = std::make_pair(idx, v);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    BigInt count = 0;
    std::vector<int> rest = v;
    while (true) {
      count += partitions(rest, idx + 1);
      bool ok = true;
      for (int k = 0; k < n_; ++k) {
        rest[k] -= roots_[idx][k];
        if (rest[k] < 0)
          ok = false;
      }
      if (!ok)
        break;
    }
    memo_.emplace(std::move(key), count);
    return count;
  }

  RootDatum datum_;
  int n_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::pair<Matrix, int>> group_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

/// Multiplicity of mu in the irreducible module of highest weight lambda, by brute force.
inline BigInt kostant_multiplicity_oracle(const RootDatum& datum, const Weight& lambda, const Weight& mu)
{
  return KostantOracle(datum).multiplicity(lambda, mu);
}

} // namespace lbranch
