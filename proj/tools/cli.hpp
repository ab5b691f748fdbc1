#pragma once

// Command-line front end. run_cli takes the argument vector and two streams so that the
// test suite can drive it in-process. Exit codes: 0 success, 1 a verification identity
// failed, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "disk_cache.hpp"
#include "lbranch/lbranch.hpp"

namespace lbranch::tools {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

inline std::filesystem::path default_cache_dir()
{
  if (const char* env = std::getenv("LBRANCH_CACHE_DIR"); env && *env)
    return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "lbranch";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "lbranch";
  return ".lbranch-cache";
}

/// "B2", "E8" or a path to a JSON Cartan datum.
inline CartanDatum resolve_type(const std::string& type)
{
  const bool looks_like_file = type.ends_with(".json") || type.find('/') != std::string::npos;
  if (!looks_like_file)
    return cartan_matrix(std::string_view(type));
  std::ifstream in(type);
  if (!in)
    throw ParseError("cannot open Cartan datum file " + type);
  try {
    return cartan_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + type + ": " + e.what());
  }
}

namespace detail {

/// Left-aligned text columns, two spaces apart.
class TextTable {
public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const
  {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c)
          width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size())
          line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string matrix_text(const IntMatrix& m, const std::string& indent)
{
  int width = 1;
  for (const auto& row : m)
    for (int x : row)
      width = std::max(width, static_cast<int>(std::to_string(x).size()));
  std::ostringstream out;
  for (const auto& row : m) {
    out << indent;
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << std::setw(width) << row[j];
    out << '\n';
  }
  return out.str();
}

inline std::string join(std::span<const int> xs)
{
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline std::string coeffs_text(const std::vector<int>& c)
{
  return Weight(c).to_string();
}

struct Session {
  std::shared_ptr<DiskCache> cache;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  RootDatum datum(const std::string& type) const { return RootDatum(resolve_type(type), cache); }

  Json manifest(const std::string& command, Json parameters) const
  {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    Json cache_json{{"enabled", cache != nullptr},
                    {"hits", cache ? cache->hits() : 0},
                    {"misses", cache ? cache->misses() : 0}};
    return Json{{"command", command},
                {"parameters", std::move(parameters)},
                {"version", version},
                {"wall_time_ms", std::chrono::duration<double, std::milli>(elapsed).count()},
                {"cache", cache_json}};
  }
};

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_char(const Session& s, const std::string& type, const std::string& weight, bool json, std::ostream& out)
{
  const RootDatum datum = s.datum(type);
  const Weight lambda = parse_weight(weight);
  const WeightFunction chi = freudenthal_character(datum, lambda);
  const BigInt dim = weyl_dimension(datum, lambda);
  if (chi.total() != dim)
    throw InternalConsistencyError("character total " + to_decimal(chi.total()) + " differs from Weyl dimension " +
                                   to_decimal(dim));
  if (json) {
    Json params{{"type", type}, {"weight", to_json(lambda)}};
    print_json(out, Json{{"highest_weight", to_json(lambda)},
                         {"dimension", to_decimal(dim)},
                         {"character", to_json(chi)},
                         {"manifest", s.manifest("char", params)}});
    return kOk;
  }
  out << datum.cartan().name() << "  highest weight " << lambda.to_string() << '\n';
  TextTable t({"weight", "mult"});
  for (const auto& [w, v] : dominance_sorted(datum, chi.entries()))
    t.add({w.to_string(), to_decimal(v)});
  t.print(out);
  out << "weights " << chi.size() << "  dimension " << to_decimal(dim) << '\n';
  return kOk;
}

inline int cmd_tensor(const Session& s, const std::string& type, const std::string& w1, const std::string& w2,
                      bool json, std::ostream& out)
{
  const RootDatum datum = s.datum(type);
  const Weight lambda = parse_weight(w1), mu = parse_weight(w2);
  const VirtualCharacter vc = tensor_decompose(datum, lambda, mu);
  const BigInt product = weyl_dimension(datum, lambda) * weyl_dimension(datum, mu);
  const BigInt sum = virtual_dimension(vc);
  if (product != sum)
    throw InternalConsistencyError("tensor dimensions do not add up: " + to_decimal(sum) + " != " +
                                   to_decimal(product));
  if (json) {
    Json params{{"type", type}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
    print_json(out, Json{{"lambda", to_json(lambda)},
                         {"mu", to_json(mu)},
                         {"decomposition", to_json(vc)},
                         {"dimension", to_decimal(product)},
                         {"manifest", s.manifest("tensor", params)}});
    return kOk;
  }
  out << datum.cartan().name() << "  " << lambda.to_string() << " x " << mu.to_string() << '\n';
  TextTable t({"weight", "mult", "dim"});
  for (const auto& [w, v] : dominance_sorted(datum, vc.coeffs()))
    t.add({w.to_string(), to_decimal(v), to_decimal(weyl_dimension(datum, w))});
  t.print(out);
  out << "dimension " << to_decimal(product) << '\n';
  return kOk;
}

inline BranchMethod parse_method(const std::string& m)
{
  if (m == "direct")
    return BranchMethod::Direct;
  if (m == "tensor")
    return BranchMethod::Tensor;
  if (m == "closed")
    return BranchMethod::Closed;
  return BranchMethod::All;
}

inline std::string flag_text(const std::optional<bool>& b)
{
  return b ? (*b ? "yes" : "NO") : "n/a";
}

inline int cmd_branch(const Session& s, const std::string& type, std::optional<int> ell, const std::string& weight,
                      const std::string& method, bool json, std::ostream& out)
{
  const RootDatum datum = s.datum(type);
  const ModifiedDatum md(datum, ell.value_or(datum.cartan().d));
  const Weight lambda = parse_weight(weight);
  const BranchingResult r = branch(md, lambda, parse_method(method));
  const bool disagree = (r.agree && !*r.agree) || (r.closed_agree && !*r.closed_agree);
  if (json) {
    Json params{{"type", type}, {"ell", md.ell()}, {"weight", to_json(lambda)}, {"method", method}};
    Json j = to_json(r, md);
    j["manifest"] = s.manifest("branch", params);
    print_json(out, j);
    return disagree ? kVerifyFailed : kOk;
  }
  out << datum.cartan().name() << "  ell " << md.ell() << "  l = (" << join(md.l()) << ")  lambda "
      << lambda.to_string() << '\n';
  out << "m (dual coordinates)\n";
  TextTable m({"mu", "embedded", "mult"});
  for (const auto& [mu, v] : dominance_sorted(md.dual(), r.m()))
    m.add({mu.to_string(), md.embed(mu).to_string(), to_decimal(v)});
  m.print(out);
  out << "n\n";
  TextTable n({"nu", "mult"});
  for (const auto& [nu, v] : dominance_sorted(md.base(), r.complementary.coeffs()))
    n.add({nu.to_string(), to_decimal(v)});
  n.print(out);
  out << "routes agree " << flag_text(r.agree) << "  closed form agrees " << flag_text(r.closed_agree) << '\n';
  return disagree ? kVerifyFailed : kOk;
}

inline int cmd_verify(const Session& s, const std::string& type, std::optional<int> ell, int bound, int jobs,
                      bool json, std::ostream& out)
{
  if (bound < 0)
    throw DomainError("bound must be nonnegative");
  const RootDatum datum = s.datum(type);
  // Construction re-verifies the root scaling bijection and throws on failure.
  const ModifiedDatum md(datum, ell.value_or(datum.cartan().d));
  bool ok = true;
  std::vector<std::string> witnesses;

  std::string product_message;
  std::size_t product_weights = 0;
  try {
    product_weights = rho_shift_product_formula(md).size();
  } catch (const InternalConsistencyError& e) {
    product_message = e.what();
    witnesses.push_back(std::string("product formula: ") + e.what());
    ok = false;
  }

  const VerificationReport report = verify_branching_theorem(md, bound, jobs, true);
  Json failures = Json::array();
  for (const auto& c : report.results)
    if (!c.ok) {
      failures.push_back(Json{{"lambda", to_json(c.lambda)}, {"message", c.message}});
      witnesses.push_back("lambda " + c.lambda.to_string() + ": " + c.message);
    }
  ok = ok && report.ok();

  const bool minuscule = shift_is_minuscule(md);
  std::size_t closed_checked = 0;
  Json closed_failures = Json::array();
  if (minuscule)
    for (const auto& c : report.results) {
      if (!c.ok)
        continue;
      ++closed_checked;
      std::string message;
      try {
        if (minuscule_branching_closed_form(md, c.lambda) != c.direct)
          message = "closed form differs from the general routes";
      } catch (const InternalConsistencyError& e) {
        message = e.what();
      }
      if (!message.empty()) {
        closed_failures.push_back(Json{{"lambda", to_json(c.lambda)}, {"message", message}});
        witnesses.push_back("closed form at lambda " + c.lambda.to_string() + ": " + message);
        ok = false;
      }
    }

  if (json) {
    Json params{{"type", type}, {"ell", md.ell()}, {"bound", bound}, {"jobs", jobs}};
    Json checks{{"root_scaling", {{"ok", true}, {"roots", md.root_scaling().size()}}},
                {"product_formula", {{"ok", product_message.empty()}, {"weights", product_weights}}},
                {"branching",
                 {{"ok", report.ok()},
                  {"lambdas", report.results.size()},
                  {"passed", report.passed()},
                  {"steinberg", true},
                  {"max_dimension", to_decimal(report.max_dimension)},
                  {"failures", failures}}},
                {"closed_form",
                 {{"applicable", minuscule}, {"checked", closed_checked}, {"ok", closed_failures.empty()},
                  {"failures", closed_failures}}}};
    if (!product_message.empty())
      checks["product_formula"]["message"] = product_message;
    print_json(out, Json{{"ok", ok}, {"checks", checks}, {"manifest", s.manifest("verify", params)}});
    return ok ? kOk : kVerifyFailed;
  }

  out << "verify " << datum.cartan().name() << "  ell " << md.ell() << "  bound " << bound << '\n';
  TextTable t({"check", "size", "status"});
  t.add({"root scaling", std::to_string(md.root_scaling().size()) + " roots", "ok"});
  t.add({"product formula", std::to_string(product_weights) + " weights", product_message.empty() ? "ok" : "FAIL"});
  t.add({"branching + steinberg",
         std::to_string(report.passed()) + "/" + std::to_string(report.results.size()) + " lambdas",
         report.ok() ? "ok" : "FAIL"});
  if (minuscule)
    t.add({"closed form", std::to_string(closed_checked) + " lambdas", closed_failures.empty() ? "ok" : "FAIL"});
  else
    t.add({"closed form", "not minuscule", "skipped"});
  t.print(out);
  out << "max dimension " << to_decimal(report.max_dimension) << '\n';
  for (const auto& w : witnesses)
    out << "witness: " << w << '\n';
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

inline int cmd_datum(const Session& s, const std::string& type, std::optional<int> ell, bool json, std::ostream& out)
{
  const RootDatum datum = s.datum(type);
  const CartanDatum& c = datum.cartan();
  const ModifiedDatum md(datum, ell.value_or(c.d));
  if (json) {
    Json roots = Json::array();
    for (const auto& r : datum.positive_roots())
      roots.push_back(Json{{"weight", to_json(r.weight)}, {"coeffs", r.coeffs}, {"height", r.height}});
    Json scaling = Json::array();
    for (const auto& sc : md.root_scaling())
      scaling.push_back(Json{{"coeffs", sc.coeffs}, {"l", sc.scale}, {"dual_root", to_json(sc.dual_root)}});
    Json params{{"type", type}, {"ell", md.ell()}};
    print_json(out, Json{{"datum", to_json(c)},
                         {"d", c.d},
                         {"ell", md.ell()},
                         {"l", std::vector<int>(md.l().begin(), md.l().end())},
                         {"dual", to_json(md.dual().cartan())},
                         {"positive_roots", roots},
                         {"root_scaling", scaling},
                         {"manifest", s.manifest("datum", params)}});
    return kOk;
  }
  out << "type " << c.name() << "  rank " << c.rank << "  labeling " << c.labeling << '\n';
  out << "cartan matrix\n" << matrix_text(c.matrix, "  ");
  out << "symmetrizers " << join(c.symmetrizers) << "  d " << c.d << '\n';
  out << "ell " << md.ell() << "  l " << join(md.l()) << '\n';
  out << "dual cartan matrix\n" << matrix_text(md.dual().cartan().matrix, "  ");
  out << "positive roots " << datum.positive_roots().size() << '\n';
  TextTable t({"root", "weight", "height", "l_alpha", "dual root"});
  for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
    const auto& r = datum.positive_roots()[k];
    const auto& sc = md.root_scaling()[k];
    t.add({coeffs_text(r.coeffs), r.weight.to_string(), std::to_string(r.height), std::to_string(sc.scale),
           sc.dual_root.to_string()});
  }
  t.print(out);
  return kOk;
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact Weyl characters, tensor products and Langlands-dual branching"};
  app.require_subcommand(1);
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir, "character cache directory (default $LBRANCH_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "do not read or write the character cache");
  app.set_version_flag("--version", std::string(version));

  std::string type, weight, weight2, method = "all", format = "table";
  std::optional<int> ell;
  int bound = 0, jobs = 1;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", type, "type such as B2 or a JSON Cartan datum file")->required();
  };

  auto* ch = app.add_subcommand("char", "full character of an irreducible module");
  add_type(ch);
  ch->add_option("--weight", weight, "highest weight, e.g. 1,0")->required();
  add_format(ch);

  auto* te = app.add_subcommand("tensor", "decompose a tensor product of two irreducibles");
  add_type(te);
  te->add_option("lambda", weight, "first highest weight")->required();
  te->add_option("mu", weight2, "second highest weight")->required();
  add_format(te);

  auto* br = app.add_subcommand("branch", "branching multiplicities to the dual datum");
  add_type(br);
  br->add_option("--ell", ell, "ell, a multiple of d (default d)");
  br->add_option("--weight", weight, "dominant weight in X*")->required();
  br->add_option("--method", method, "route")->check(CLI::IsMember({"direct", "tensor", "closed", "all"}));
  add_format(br);

  auto* ve = app.add_subcommand("verify", "run the identity battery up to a bound");
  add_type(ve);
  ve->add_option("--ell", ell, "ell, a multiple of d (default d)");
  ve->add_option("--bound", bound, "largest coordinate of lambda")->required();
  ve->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_format(ve);

  auto* da = app.add_subcommand("datum", "Cartan data, l_i, positive roots and root scaling");
  add_type(da);
  da->add_option("--ell", ell, "ell, a multiple of d (default d)");
  add_format(da);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  detail::Session session;
  if (!no_cache)
    session.cache = std::make_shared<DiskCache>(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
  const bool json = format == "json";
  try {
    if (*ch)
      return detail::cmd_char(session, type, weight, json, out);
    if (*te)
      return detail::cmd_tensor(session, type, weight, weight2, json, out);
    if (*br)
      return detail::cmd_branch(session, type, ell, weight, method, json, out);
    if (*ve)
      return detail::cmd_verify(session, type, ell, bound, jobs, json, out);
    return detail::cmd_datum(session, type, ell, json, out);
  } catch (const TheoremViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const InternalConsistencyError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace lbranch::tools
