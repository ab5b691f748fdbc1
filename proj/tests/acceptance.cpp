// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "lbranch/lbranch.hpp"

using namespace lbranch;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

int jobs()
{
  return std::max(1u, std::thread::hardware_concurrency());
}

ModifiedDatum at_d(const char* type)
{
  const RootDatum r(cartan_matrix(type));
  return ModifiedDatum(r, r.cartan().d);
}

struct SweepSet {
  const char* type;
  int bound;
};

const std::vector<SweepSet> kSweeps = {{"B2", 5}, {"C2", 5}, {"G2", 5}, {"B3", 3}, {"C3", 3},
                                       {"B4", 2}, {"C4", 2}, {"F4", 1}};

// Dominant weights with dim <= cap, grown from 0 one fundamental weight at a time
// (dimension is increasing in each coordinate).
std::vector<Weight> dominant_up_to_dimension(const RootDatum& datum, const BigInt& cap)
{
  std::set<Weight> seen{Weight::zero(datum.rank())};
  std::vector<Weight> queue{Weight::zero(datum.rank())};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int i = 0; i < datum.rank(); ++i) {
      Weight next = queue[head] + Weight::unit(datum.rank(), i);
      if (weyl_dimension(datum, next) <= cap && seen.insert(next).second)
        queue.push_back(next);
    }
  return {seen.begin(), seen.end()};
}

bool oracle_matches(const RootDatum& datum, KostantOracle& oracle, const Weight& lambda, Outcome& out)
{
  const auto chi = freudenthal_character(datum, lambda);
  for (const auto& [mu, m] : chi)
    if (oracle.multiplicity(lambda, mu) != m) {
      out.fail(datum.cartan().name() + " lambda " + lambda.to_string() + " mu " + mu.to_string());
      return false;
    }
  // Sum over the oracle's support must also be exhausted by chi: compare dimensions.
  if (chi.total() != weyl_dimension(datum, lambda)) {
    out.fail(datum.cartan().name() + " dimension mismatch at " + lambda.to_string());
    return false;
  }
  return true;
}

// Criterion bodies. Each returns an Outcome; timing is measured by the caller.

std::map<std::string, VerificationReport> sweep_reports;

Outcome criterion_1()
{
  Outcome out;
  const RootDatum b2(cartan_matrix("B2"));
  const ModifiedDatum md(b2, 2);
  if (rho_shift(md) != Weight{0, 1})
    out.fail("rho^L - rho = " + rho_shift(md).to_string());
  if (weyl_dimension(b2, Weight{0, 1}) != 4 || freudenthal_character(b2, Weight{0, 1}).total() != 4)
    out.fail("dim chi(varpi2) != 4");
  if (weyl_dimension(md.dual(), Weight{1, 0}) != 4 || freudenthal_character(md.dual(), Weight{1, 0}).total() != 4)
    out.fail("dim chi^L(varpi1) != 4");
  const WeightFunction lhs = freudenthal_character(b2, Weight{1, 1});
  const WeightFunction rhs = convolve(freudenthal_character(b2, Weight{0, 1}),
                                      embed_function(md, freudenthal_character(md.dual(), Weight{1, 0})));
  if (!(lhs == rhs))
    out.fail("chi(rho) != chi(varpi2) . chi^L(varpi1)");
  if (lhs.total() != 16)
    out.fail("dim chi(rho) != 16");
  const auto s = steinberg_character_identity(md, Weight{1, 0});
  if (!s.holds)
    out.fail("Steinberg identity fails at " + s.witness->to_string());
  out.detail = std::to_string(lhs.size()) + " weights, 16 = 4 x 4";
  return out;
}

Outcome criterion_2()
{
  Outcome out;
  std::ostringstream summary;
  for (const auto& [type, bound] : kSweeps) {
    const ModifiedDatum md = at_d(type);
    auto report = verify_branching_theorem(md, bound, jobs(), false);
    for (const auto& c : report.results) {
      if (!c.ok)
        out.fail(std::string(type) + " lambda " + c.lambda.to_string() + ": " + c.message);
      for (const auto& [mu, m] : c.direct)
        if (m < 0)
          out.fail(std::string(type) + " negative m at " + mu.to_string());
    }
    summary << type << ":" << report.results.size() << " ";
    sweep_reports.emplace(type, std::move(report));
  }
  if (out.ok)
    out.detail = summary.str() + "lambdas, m and n equal on both routes";
  return out;
}

Outcome criterion_3()
{
  Outcome out;
  const ModifiedDatum md = at_d("B2");
  if (!shift_is_minuscule(md))
    out.fail("chi(varpi2) not minuscule");
  const auto it = sweep_reports.find("B2");
  if (it == sweep_reports.end())
    out.fail("criterion 2 did not produce the B2 sweep");
  else
    for (const auto& c : it->second.results) {
      const auto closed = minuscule_branching_closed_form(md, c.lambda);
      if (closed != c.direct || closed != c.via_tensor)
        out.fail("closed form differs at " + c.lambda.to_string());
    }
  if (out.ok)
    out.detail = std::to_string(it->second.results.size()) + " lambdas";
  return out;
}

Outcome criterion_4()
{
  Outcome out;
  std::size_t modules = 0;
  for (const auto* t : {"A1", "A2", "B2", "G2"}) {
    const RootDatum datum(cartan_matrix(t));
    KostantOracle oracle(datum);
    for (const auto& lambda : dominant_up_to_dimension(datum, 200)) {
      ++modules;
      if (!oracle_matches(datum, oracle, lambda, out))
        return out;
    }
  }
  std::mt19937 rng(1729);
  for (const auto* t : {"B3", "C3"}) {
    const RootDatum datum(cartan_matrix(t));
    KostantOracle oracle(datum);
    auto pool = dominant_up_to_dimension(datum, 500);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), 10));
    for (const auto& lambda : pool) {
      ++modules;
      if (!oracle_matches(datum, oracle, lambda, out))
        return out;
    }
  }
  out.detail = std::to_string(modules) + " modules, every weight";
  return out;
}

Outcome criterion_5()
{
  Outcome out;
  std::size_t checked = 0;
  for (const auto& [type, bound] : kSweeps) {
    const ModifiedDatum md = at_d(type);
    const auto lambdas = sublattice_dominant_weights(md, bound);
    std::vector<SteinbergCheck> results(lambdas.size());
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (int t = 0; t < jobs(); ++t)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < lambdas.size(); i = next++)
            results[i] = steinberg_character_identity(md, lambdas[i]);
        });
    }
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      ++checked;
      if (!results[i].holds)
        out.fail(std::string(type) + " lambda " + lambdas[i].to_string() + " differs at " +
                 results[i].witness->to_string());
    }
  }
  if (out.ok)
    out.detail = std::to_string(checked) + " lambdas";
  return out;
}

Outcome criterion_6()
{
  Outcome out;
  for (const auto* t : {"B2", "C2", "B3", "C3", "B4", "F4", "G2"}) {
    const ModifiedDatum md = at_d(t);
    try {
      const auto p = rho_shift_product_formula(md);
      if (!(p == freudenthal_character(md.base(), rho_shift(md))))
        out.fail(std::string(t) + " product differs");
    } catch (const InternalConsistencyError& e) {
      out.fail(std::string(t) + ": " + e.what());
    }
  }
  return out;
}

Outcome criterion_7()
{
  Outcome out;
  std::size_t checked = 0;
  for (const auto* t : {"A2", "A3", "D4"}) {
    const RootDatum base(cartan_matrix(t));
    const ModifiedDatum md(base, 1);
    for (const auto& lambda : sublattice_dominant_weights(md, 3)) {
      ++checked;
      const auto chi = freudenthal_character(base, lambda);
      if (pi_project(md, chi).entries() != chi.entries())
        out.fail(std::string(t) + " Pi is not the identity at " + lambda.to_string());
      const auto r = branch(md, lambda);
      if (r.m() != BranchingMap{{lambda, 1}} || !r.complementary.empty() || !r.agree || !*r.agree)
        out.fail(std::string(t) + " nontrivial branching at " + lambda.to_string());
    }
  }
  if (out.ok)
    out.detail = std::to_string(checked) + " lambdas";
  return out;
}

Outcome criterion_8()
{
  Outcome out;
  std::vector<std::string> types;
  for (int n = 2; n <= 8; ++n) {
    types.push_back("B" + std::to_string(n));
    types.push_back("C" + std::to_string(n));
  }
  types.push_back("F4");
  types.push_back("G2");
  std::size_t roots = 0;
  for (const auto& t : types) {
    const RootDatum r(cartan_matrix(t));
    const ModifiedDatum md(r, r.cartan().d);
    const auto& map = root_scaling_map(md);
    std::set<Weight> dual_roots, images;
    for (const auto& dr : md.dual().positive_roots())
      dual_roots.insert(dr.weight);
    for (const auto& s : map) {
      ++roots;
      if (md.embed(s.dual_root) != s.scale * s.root)
        out.fail(t + " alpha* != l_alpha alpha at " + s.root.to_string());
      // l_alpha is constant on W-orbits: it is l_i for the simple root of the same length.
      bool found = false;
      for (int i = 0; i < r.rank() && !found; ++i)
        for (const auto& w : orbit(r, r.simple_root(i)))
          if (w == s.root) {
            found = true;
            if (s.scale != md.l(i))
              out.fail(t + " wrong l_alpha at " + s.root.to_string());
            break;
          }
      if (!found)
        out.fail(t + " root not conjugate to a simple root");
      images.insert(s.dual_root);
    }
    if (map.size() != r.positive_roots().size() || images != dual_roots)
      out.fail(t + " not a bijection onto the dual positive roots");
  }
  if (out.ok)
    out.detail = std::to_string(types.size()) + " types, " + std::to_string(roots) + " roots";
  return out;
}

Outcome criterion_9()
{
  Outcome out;
  std::mt19937 rng(31337);
  const std::vector<const char*> types{"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"};
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> coord(0, 2), coeff(-4, 4), terms(1, 5);
  std::size_t tensors = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RootDatum datum(cartan_matrix(types[pick(rng)]));
    auto random_weight = [&] {
      std::vector<int> c(datum.rank());
      for (auto& x : c)
        x = coord(rng);
      return Weight(std::move(c));
    };
    VirtualCharacter vc(datum);
    for (int k = terms(rng); k > 0; --k)
      vc.add(random_weight(), coeff(rng));
    const auto xi = evaluate_virtual(vc);
    if (!xi.is_w_invariant())
      out.fail("evaluated virtual character not W-invariant (" + datum.cartan().name() + ")");
    if (!(decompose_into_weyl(xi) == vc))
      out.fail("round trip fails on trial " + std::to_string(trial));
    if (xi.total() != virtual_dimension(vc))
      out.fail("virtual dimension mismatch on trial " + std::to_string(trial));

    const Weight lambda = random_weight(), mu = random_weight();
    const auto chi_l = freudenthal_character(datum, lambda), chi_m = freudenthal_character(datum, mu);
    if (!chi_l.is_w_invariant() || !chi_m.is_w_invariant())
      out.fail("character not W-invariant");
    const auto t = tensor_decompose(datum, lambda, mu);
    ++tensors;
    if (!t.is_nonnegative() || virtual_dimension(t) != weyl_dimension(datum, lambda) * weyl_dimension(datum, mu))
      out.fail("tensor dimension not multiplicative: " + lambda.to_string() + " x " + mu.to_string());
    if (!(decompose_into_weyl(convolve(chi_l, chi_m)) == t))
      out.fail("Brauer-Klimyk differs from convolution at " + lambda.to_string() + " x " + mu.to_string());
  }
  if (out.ok)
    out.detail = "100 virtual characters, " + std::to_string(tensors) + " tensor products";
  return out;
}

} // namespace

int main()
{
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "B2 example: chi(rho) = chi(varpi2) . chi^L(varpi1)", 1.0, criterion_1},
      {2, "branching sweep: direct and tensor routes agree, m and n nonnegative", 600.0, criterion_2},
      {3, "closed form agrees on the B2 bound-5 sweep", 0, criterion_3},
      {4, "Freudenthal equals the Kostant oracle", 120.0, criterion_4},
      {5, "Steinberg identity on the sweep sets", 0, criterion_5},
      {6, "product formula for chi(rho^L - rho)", 0, criterion_6},
      {7, "simply-laced degeneration at ell = 1", 0, criterion_7},
      {8, "root scaling bijection alpha* = l_alpha alpha", 0, criterion_8},
      {9, "structural checks on random data", 0, criterion_9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
      o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    if (!o.ok)
      ++failures;
    std::printf("%s  criterion %d  %-70s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
