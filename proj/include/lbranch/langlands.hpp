#pragma once

// Langlands-duality branching: the projection of chi(lambda) onto X* decomposed into
// characters of the dual datum, computed two ways:
//   direct  - decompose Pi(chi(lambda)) with the dual datum's own characters;
//   tensor  - m_mu = c_{rho^L - rho, lambda}^{mu + rho^L - rho}.
// Branching keys are dual-coordinate weights; the complementary part n is indexed by
// base weights outside (rho^L - rho) + X*.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lbranch/characters.hpp"

namespace lbranch {

/// Dual dominant weight -> multiplicity m_mu^lambda.
using BranchingMap = WeightMap;

/// Keeps the entries of xi lying in X*, re-expressed over the dual datum.
inline WeightFunction pi_project(const ModifiedDatum& md, const WeightFunction& xi)
{
  if (!(xi.datum() == md.base()))
    throw DomainError("pi_project expects a weight function over the base datum");
  WeightMap out;
  for (const auto& [w, v] : xi)
    if (md.in_sublattice(w))
      out.emplace(md.dual_coords(w), v);
  return WeightFunction(md.dual(), std::move(out));
}

/// Pushes a weight function over the dual datum into base coordinates.
inline WeightFunction embed_function(const ModifiedDatum& md, const WeightFunction& dual_fn)
{
  if (!(dual_fn.datum() == md.dual()))
    throw DomainError("embed_function expects a weight function over the dual datum");
  WeightMap out;
  for (const auto& [w, v] : dual_fn)
    out.emplace(md.embed(w), v);
  return WeightFunction(md.base(), std::move(out));
}

namespace detail {

inline void require_branch_weight(const ModifiedDatum& md, const Weight& lambda)
{
  require_dominant(md.base(), lambda);
  auto bad = md.sublattice_violations(lambda);
  if (bad.empty())
    return;
  std::string msg = "weight " + lambda.to_string() + " is not in X*:";
  for (int i : bad)
    msg += " l_" + std::to_string(i + 1) + " = " + std::to_string(md.l(i)) + " does not divide " +
           std::to_string(lambda[i]) + ";";
  msg.pop_back();
  throw NotInSublatticeError(msg);
}

} // namespace detail

struct BranchingRoute {
  BranchingMap m;
  VirtualCharacter n; // complementary part over the base datum
};

/// Direct route. m from decomposing Pi(chi(lambda)) over the dual datum; n from
/// decomposing chi(rho^L - rho) . (chi(lambda) - Pi(chi(lambda))) via Brauer/Klimyk.
inline BranchingRoute langlands_branching_direct_full(const ModifiedDatum& md, const Weight& lambda)
{
  detail::require_branch_weight(md, lambda);
  const WeightFunction chi = freudenthal_character(md.base(), lambda);
  const WeightFunction projected = pi_project(md, chi);
  const VirtualCharacter m = decompose_into_weyl(projected);

  for (const auto& [mu, c] : m) {
    if (c < 0)
      throw TheoremViolation("negative branching multiplicity m = " + to_decimal(c) + " at " + mu.to_string() +
                             " for lambda = " + lambda.to_string());
    if (!md.base().leq(md.embed(mu), lambda))
      throw InternalConsistencyError("branching constituent " + mu.to_string() + " is not below " +
                                     lambda.to_string());
  }
  if (m(md.dual_coords(lambda)) != 1)
    throw InternalConsistencyError("leading branching coefficient is not 1 for " + lambda.to_string());

  VirtualCharacter n = brauer_klimyk_product(chi - embed_function(md, projected), rho_shift(md));
  if (!n.is_nonnegative())
    throw TheoremViolation("negative complementary multiplicity for lambda = " + lambda.to_string());
  return {m.coeffs(), std::move(n)};
}

inline BranchingMap langlands_branching_direct(const ModifiedDatum& md, const Weight& lambda)
{
  return langlands_branching_direct_full(md, lambda).m;
}

/// Tensor route: split chi(rho^L - rho) . chi(lambda) by X*-coset of nu - (rho^L - rho).
inline BranchingRoute langlands_branching_tensor(const ModifiedDatum& md, const Weight& lambda)
{
  detail::require_branch_weight(md, lambda);
  const Weight shift = rho_shift(md);
  BranchingRoute out{{}, VirtualCharacter(md.base())};
  for (const auto& [nu, c] : tensor_decompose(md.base(), shift, lambda)) {
    const Weight rest = nu - shift;
    if (md.in_sublattice(rest))
      detail::accumulate(out.m, md.dual_coords(rest), c);
    else
      out.n.add(nu, c);
  }
  return out;
}

/// True when chi(rho^L - rho) is a single W-orbit with all multiplicities 1.
inline bool shift_is_minuscule(const ModifiedDatum& md)
{
  const auto table = dominant_character(md.base(), rho_shift(md));
  return table->size() == 1 && table->begin()->second == 1;
}

/// Orbit-sum formula, valid when chi(rho^L - rho) is minuscule:
///   Pi(chi(lambda)) = sum over w(nu) in W.nu with lambda + w(nu) dominant of chi^L(lambda + w(nu) - nu).
inline BranchingMap minuscule_branching_closed_form(const ModifiedDatum& md, const Weight& lambda)
{
  detail::require_branch_weight(md, lambda);
  if (!shift_is_minuscule(md))
    throw PreconditionError("closed form needs chi(rho^L - rho) to be one W-orbit with multiplicity 1; "
                            "use the direct or tensor route");
  const Weight shift = rho_shift(md);
  BranchingMap out;
  for (const auto& w : orbit(md.base(), shift)) {
    const Weight eta = lambda + w;
    if (!eta.is_dominant()) {
      if (shifted_regularize(md.base(), eta))
        throw InternalConsistencyError("non-dominant orbit shift " + eta.to_string() + " is rho-regular");
      continue;
    }
    const Weight mu = eta - shift;
    if (md.in_sublattice(mu))
      detail::accumulate(out, md.dual_coords(mu), 1);
  }
  return out;
}

enum class BranchMethod { Direct, Tensor, Closed, All };

struct BranchingResult {
  Weight lambda;
  int ell = 0;
  std::optional<BranchingMap> direct;
  std::optional<BranchingMap> via_tensor;
  std::optional<BranchingMap> closed_form;
  std::optional<bool> agree;        // direct vs tensor, m and n both
  std::optional<bool> closed_agree; // closed form vs the general routes
  VirtualCharacter complementary;

  /// The m table of the first route that was computed.
  const BranchingMap& m() const { return direct ? *direct : via_tensor ? *via_tensor : *closed_form; }
};

inline BranchingResult branch(const ModifiedDatum& md, const Weight& lambda, BranchMethod method = BranchMethod::All)
{
  detail::require_branch_weight(md, lambda);
  BranchingResult r{lambda, md.ell(), {}, {}, {}, {}, {}, VirtualCharacter(md.base())};
  const bool all = method == BranchMethod::All;
  std::optional<VirtualCharacter> direct_n;
  if (all || method == BranchMethod::Direct || method == BranchMethod::Closed) {
    auto d = langlands_branching_direct_full(md, lambda);
    if (method != BranchMethod::Closed)
      r.direct = std::move(d.m);
    direct_n = d.n;
    r.complementary = std::move(d.n);
  }
  if (all || method == BranchMethod::Tensor) {
    auto t = langlands_branching_tensor(md, lambda);
    r.via_tensor = std::move(t.m);
    if (direct_n)
      r.agree = (*r.direct == *r.via_tensor) && (*direct_n == t.n);
    r.complementary = std::move(t.n);
  }
  if (method == BranchMethod::Closed || (all && shift_is_minuscule(md))) {
    r.closed_form = minuscule_branching_closed_form(md, lambda);
    if (r.direct || r.via_tensor) {
      bool ok = true;
      if (r.direct)
        ok = ok && *r.direct == *r.closed_form;
      if (r.via_tensor)
        ok = ok && *r.via_tensor == *r.closed_form;
      r.closed_agree = ok;
    }
  }
  return r;
}

struct SteinbergCheck {
  bool holds = true;
  std::optional<Weight> witness; // first weight where the two sides differ
  BigInt lhs = 0, rhs = 0;       // values at the witness
  std::size_t weights_compared = 0;
};

/// chi(lambda + rho^L - rho) == chi(rho^L - rho) . chi^L(lambda), weight by weight.
inline SteinbergCheck steinberg_character_identity(const ModifiedDatum& md, const Weight& lambda)
{
  detail::require_branch_weight(md, lambda);
  const Weight shift = rho_shift(md);
  const WeightFunction lhs = freudenthal_character(md.base(), lambda + shift);
  const WeightFunction rhs = convolve(freudenthal_character(md.base(), shift),
                                      embed_function(md, freudenthal_character(md.dual(), md.dual_coords(lambda))));
  SteinbergCheck out;
  auto a = lhs.begin(), b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    ++out.weights_compared;
    if (b == rhs.end() || (a != lhs.end() && a->first < b->first)) {
      out = {false, a->first, a->second, 0, out.weights_compared};
      return out;
    }
    if (a == lhs.end() || b->first < a->first) {
      out = {false, b->first, 0, b->second, out.weights_compared};
      return out;
    }
    if (a->second != b->second) {
      out = {false, a->first, a->second, b->second, out.weights_compared};
      return out;
    }
    ++a;
    ++b;
  }
  return out;
}

/// e^{rho^L - rho} prod_{alpha>0} (1 + e^{-alpha} + ... + e^{-(l_alpha - 1) alpha}); checked
/// against the Freudenthal character of rho^L - rho.
inline WeightFunction rho_shift_product_formula(const ModifiedDatum& md)
{
  const RootDatum& base = md.base();
  const Weight shift = rho_shift(md);
  WeightFunction product(base, WeightMap{{shift, 1}});
  for (const auto& s : root_scaling_map(md)) {
    if (s.scale == 1)
      continue;
    WeightMap factor;
    Weight step = Weight::zero(base.rank());
    for (int k = 0; k < s.scale; ++k) {
      factor.emplace(step, 1);
      step -= s.root;
    }
    product = convolve(product, WeightFunction(base, std::move(factor)));
  }
  if (!(product == freudenthal_character(base, shift)))
    throw InternalConsistencyError("product formula disagrees with chi(rho^L - rho)");
  return product;
}

/// Dominant lambda in X* with every coordinate <= bound, in lexicographic order.
inline std::vector<Weight> sublattice_dominant_weights(const ModifiedDatum& md, int bound)
{
  const int n = md.base().rank();
  std::vector<Weight> out;
  Weight w = Weight::zero(n);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] + md.l(i) > bound) {
      w[i] = 0;
      --i;
    }
    if (i < 0)
      break;
    w[i] += md.l(i);
  }
  return out;
}

struct BranchingCheck {
  Weight lambda;
  bool ok = true;
  std::string message;
  BranchingMap direct, via_tensor;
  BigInt dimension = 0; // dim chi(rho^L - rho) * dim chi(lambda)
};

struct VerificationReport {
  std::vector<BranchingCheck> results; // sorted by lambda
  BigInt max_dimension = 0;
  double wall_seconds = 0;

  std::size_t passed() const
  {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.ok; }));
  }
  bool ok() const { return passed() == results.size(); }
};

/// Checks one lambda: route equality (m and n), positivity, dimension bookkeeping and,
/// optionally, the Steinberg factorization.
inline BranchingCheck check_branching(const ModifiedDatum& md, const Weight& lambda, bool steinberg)
{
  BranchingCheck c;
  c.lambda = lambda;
  try {
    const Weight shift = rho_shift(md);
    auto d = langlands_branching_direct_full(md, lambda);
    auto t = langlands_branching_tensor(md, lambda);
    c.direct = d.m;
    c.via_tensor = t.m;
    c.dimension = weyl_dimension(md.base(), shift) * weyl_dimension(md.base(), lambda);
    if (d.m != t.m) {
      c.ok = false;
      c.message = "direct and tensor routes disagree on m";
    } else if (!(d.n == t.n)) {
      c.ok = false;
      c.message = "direct and tensor routes disagree on n";
    } else {
      BigInt accounted = virtual_dimension(t.n);
      for (const auto& [mu, m] : t.m)
        accounted += m * weyl_dimension(md.base(), md.embed(mu) + shift);
      if (accounted != c.dimension) {
        c.ok = false;
        c.message = "dimension bookkeeping fails: " + to_decimal(accounted) + " != " + to_decimal(c.dimension);
      }
    }
    if (c.ok && steinberg) {
      auto s = steinberg_character_identity(md, lambda);
      if (!s.holds) {
        c.ok = false;
        c.message = "Steinberg factorization fails at " + s.witness->to_string() + ": " + to_decimal(s.lhs) +
                    " != " + to_decimal(s.rhs);
      }
    }
  } catch (const Error& e) {
    c.ok = false;
    c.message = e.what();
  }
  return c;
}

/// Runs check_branching over every dominant lambda in X* with coordinates <= bound.
inline VerificationReport verify_branching_theorem(const ModifiedDatum& md, int bound, int jobs = 1,
                                                   bool steinberg = false)
{
  const auto start = std::chrono::steady_clock::now();
  const auto lambdas = sublattice_dominant_weights(md, bound);
  VerificationReport report;
  report.results.resize(lambdas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lambdas.size(); i = next++)
      report.results[i] = check_branching(md, lambdas[i], steinberg);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(lambdas.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }
  for (const auto& r : report.results)
    report.max_dimension = std::max(report.max_dimension, r.dimension);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace lbranch
