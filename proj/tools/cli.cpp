#include "borwein/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "borwein/analysis.hpp"
#include "borwein/errors.hpp"
#include "borwein/json_io.hpp"
#include "borwein/parallel.hpp"
#include "borwein/qseries.hpp"
#include "borwein/verify.hpp"

namespace borwein::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  std::string command;
  std::string conj = "1";
  std::string m, m1, m2, n, n1, n2, n3, k, nvars;
  std::optional<std::int64_t> kmax, l, perturb;
  std::int64_t K = 1, a = 1, ceiling = 25, trials = 20, n_max = 20;
  std::string mode = "exact", identity;
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format, out;
  Json echo = Json::object();
};

using Params = std::map<std::string, std::int64_t>;

std::optional<Range> range_of(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_range(text);
}

// Cartesian product of the named ranges, in the listed order.
std::vector<Params> grid(const std::vector<std::pair<std::string, Range>>& axes) {
  std::vector<Params> out{Params{}};
  for (const auto& [name, r] : axes) {
    std::vector<Params> next;
    for (const auto& base : out) {
      for (auto v : r.values()) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

Range need(const std::string& text, const char* name) {
  auto r = range_of(text);
  if (!r) throw BadParameters(std::string("--") + name + " is required");
  return *r;
}

// Axes of the product family selected by --conj.
std::vector<std::pair<std::string, Range>> product_axes(const Config& c) {
  if (c.conj == "1") return {{"m", range_of(c.m).value_or(Range{0, 0})}, {"n", need(c.n, "n")}};
  if (c.conj == "iks") return {{"n", need(c.n, "n")}};
  if (c.conj != "2" && c.conj != "3") throw BadParameters("--conj must be 1, 2, 3 or iks");
  const Range m = range_of(c.m).value_or(Range{0, 0});
  const std::optional<Range> n = range_of(c.n);
  const Range n1 = range_of(c.n1) ? *range_of(c.n1) : n ? *n : need(c.n1, "n1");
  return {{"m1", range_of(c.m1).value_or(m)},
          {"m2", range_of(c.m2).value_or(m)},
          {"n1", n1},
          {"n2", range_of(c.n2).value_or(n.value_or(n1))},
          {"n3", range_of(c.n3).value_or(n.value_or(n1))}};
}

ProductSpec make_spec(const Config& c, const Params& p) {
  if (c.conj == "1") return conj1_spec(p.at("m"), p.at("n"));
  if (c.conj == "iks") return iks_spec(c.a, c.K, p.at("n"));
  if (c.conj == "2") {
    if (c.K != 1) throw BadParameters("--conj 2 fixes K = 1");
    return conj2_spec(p.at("m1"), p.at("m2"), p.at("n1"), p.at("n2"), p.at("n3"));
  }
  return conj3_spec(p.at("m1"), p.at("m2"), p.at("n1"), p.at("n2"), p.at("n3"), c.K);
}

std::vector<Violation> check_slice(const Config& c, const LaurentPoly& f, std::int64_t k) {
  if (c.conj == "1" || c.conj == "2") return check_borwein(f, k);
  if (c.conj == "3") return check_pattern(f, c.K, k);
  if (c.K % 2 == 0) return check_iks_even(f, k);
  return check_iks_odd(f, c.a, c.K, k);
}

Json provenance(const Config& c) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"command", c.command}, {"config", c.echo}};
}

std::string header_lines(const Config& c) {
  return std::string("# ") + kToolName + " " + kToolVersion + " " + c.command + "\n# config " +
         c.echo.dump() + "\n";
}

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

struct Result {
  std::string body;
  int code = kPass;
};

Result cmd_expand(const Config& c) {
  Params p;
  for (const auto& [name, r] : product_axes(c)) {
    if (r.lo != r.hi) throw BadParameters("expand takes single parameter values");
    p[name] = r.lo;
  }
  const ProductSpec spec = make_spec(c, p);
  const std::int64_t kmax = c.kmax.value_or(spec.p_degree());
  if (kmax < 0) throw BadParameters("--kmax must be non-negative");
  const PGradedSeries series = expand(spec, kmax);
  const std::string fmt = c.format.empty() ? "json" : c.format;
  std::ostringstream os;
  if (fmt == "json") {
    Json j = {{"provenance", provenance(c)}, {"spec", to_json(spec)}, {"series", to_json(series)}};
    os << j.dump(2) << "\n";
  } else if (fmt == "text") {
    os << header_lines(c);
    for (std::int64_t k = 0; k <= kmax; ++k) os << "p^" << k << ": " << to_string(series.slice(k)) << "\n";
  } else {
    os << header_lines(c) << "k,M,coeff\n";
    for (std::int64_t k = 0; k <= kmax; ++k) {
      const auto& terms = series.slice(k).terms();
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        os << k << "," << exp_of(it->exps, Var::q) << "," << it->coeff.get_str() << "\n";
      }
    }
  }
  return {os.str(), kPass};
}

Result cmd_check(const Config& c) {
  const auto cells = grid(product_axes(c));
  const std::optional<Range> krange = range_of(c.k);
  if (krange && krange->lo < 0) throw BadParameters("--k must be non-negative");
  std::vector<std::vector<Violation>> found(cells.size());
  // Requested slices that vanish although the product is not trivial.
  std::vector<std::vector<std::int64_t>> vanishing(cells.size());
  std::vector<std::int64_t> kmaxes(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const ProductSpec spec = make_spec(c, cells[i]);  // validates parameters up front
    kmaxes[i] = krange ? krange->hi : c.kmax.value_or(spec.p_degree());
    if (kmaxes[i] < 0) throw BadParameters("--kmax must be non-negative");
  }
  parallel_for(cells.size(), c.jobs, [&](std::size_t i) {
    const ProductSpec spec = make_spec(c, cells[i]);
    const PGradedSeries s = expand(spec, kmaxes[i]);
    const std::int64_t lo = krange ? krange->lo : 0;
    for (std::int64_t k = lo; k <= kmaxes[i]; ++k) {
      if (s.slice(k).is_zero() && !spec.factors.empty()) vanishing[i].push_back(k);
      auto v = check_slice(c, s.slice(k), k);
      found[i].insert(found[i].end(), v.begin(), v.end());
    }
  });
  bool pass = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    pass = pass && found[i].empty() && vanishing[i].empty();
  }
  const std::string fmt = c.format.empty() ? "json" : c.format;
  std::ostringstream os;
  if (fmt == "json") {
    Json list = Json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      list.push_back({{"params", cells[i]},
                      {"kmax", kmaxes[i]},
                      {"violations", to_json(found[i])},
                      {"vanishing", vanishing[i]}});
    }
    Json j = {{"provenance", provenance(c)}, {"status", pass ? "pass" : "fail"}, {"cells", list}};
    os << j.dump(2) << "\n";
  } else if (fmt == "text") {
    os << header_lines(c);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const bool ok = found[i].empty() && vanishing[i].empty();
      os << params_text(cells[i]) << ": " << (ok ? "ok" : "fail") << "\n";
      for (auto k : vanishing[i]) os << "  k=" << k << " slice vanishes\n";
      for (const auto& v : found[i]) {
        os << "  k=" << v.k << " M=" << v.M << " coeff=" << v.coeff.get_str()
           << " expected=" << to_string(v.expected) << "\n";
      }
    }
    os << "status: " << (pass ? "pass" : "fail") << "\n";
  } else {
    os << header_lines(c) << "params,k,M,coeff,expected\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (auto k : vanishing[i]) os << params_text(cells[i]) << "," << k << ",,0,nonzero\n";
      for (const auto& v : found[i]) {
        os << params_text(cells[i]) << "," << v.k << "," << v.M << "," << v.coeff.get_str() << ","
           << to_string(v.expected) << "\n";
      }
    }
  }
  return {os.str(), pass ? kPass : kViolation};
}

std::optional<std::vector<bool>> load_cell(const fs::path& path, std::int64_t kmax) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) return std::nullopt;
  if (static_cast<std::int64_t>(line.size()) != kmax + 1) return std::nullopt;
  std::vector<bool> out;
  for (char ch : line) {
    if (ch != '0' && ch != '1') return std::nullopt;
    out.push_back(ch == '1');
  }
  return out;
}

void store_cell(const fs::path& path, const std::vector<bool>& passes) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    for (bool b : passes) o << (b ? '1' : '0');
    o << "\n";
  }
  fs::rename(tmp, path);
}

Result cmd_table1(const Config& c) {
  const Range ms = range_of(c.m).value_or(Range{1, 3});
  const Range ks = range_of(c.k).value_or(Range{0, 15});
  if (ms.lo < 1) throw BadParameters("--m must be positive");
  if (ks.lo < 0) throw BadParameters("--k must be non-negative");
  if (c.ceiling < 1) throw BadParameters("--ceiling must be at least 1");
  Family family;
  if (c.conj == "1") {
    if (c.K != 1) throw BadParameters("--conj 1 fixes K = 1; use --conj 3 for other K");
    family = Family::conj1;
  } else if (c.conj == "3") {
    family = Family::conj3_diagonal;
  } else {
    throw BadParameters("table1 supports --conj 1 or 3");
  }
  SignPattern::for_K(c.K);  // validates K

  std::optional<fs::path> cell_dir;
  if (!c.out.empty()) {
    cell_dir = fs::path(c.out + ".cells");
    fs::create_directories(*cell_dir);
  }
  struct Unit {
    std::int64_t m, n;
  };
  std::vector<Unit> units;
  for (auto m : ms.values()) {
    for (std::int64_t n = 0; n <= c.ceiling; ++n) units.push_back({m, n});
  }
  std::vector<std::vector<bool>> passes(units.size());
  parallel_for(units.size(), c.jobs, [&](std::size_t i) {
    const auto [m, n] = units[i];
    std::optional<fs::path> path;
    if (cell_dir) {
      path = *cell_dir / ("conj" + c.conj + "_K" + std::to_string(c.K) + "_m" + std::to_string(m) +
                          "_n" + std::to_string(n) + "_k" + std::to_string(ks.hi) + ".cell");
      if (auto cached = load_cell(*path, ks.hi)) {
        passes[i] = std::move(*cached);
        return;
      }
    }
    passes[i] = slice_passes(family, m, n, ks.hi, c.K);
    if (path) store_cell(*path, passes[i]);
  });

  // thresholds[m][k]
  std::map<std::int64_t, std::vector<std::optional<std::int64_t>>> table;
  for (auto m : ms.values()) {
    for (auto k : ks.values()) {
      std::vector<bool> col;
      for (std::size_t i = 0; i < units.size(); ++i) {
        if (units[i].m == m) col.push_back(passes[i][static_cast<std::size_t>(k)]);
      }
      table[m].push_back(threshold_from_passes(col));
    }
  }
  auto cell = [&](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : ">" + std::to_string(c.ceiling);
  };
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  std::ostringstream os;
  if (fmt == "csv") {
    os << header_lines(c) << "m";
    for (auto k : ks.values()) os << "," << k;
    os << "\n";
    for (const auto& [m, row] : table) {
      os << m;
      for (const auto& v : row) os << "," << cell(v);
      os << "\n";
    }
  } else if (fmt == "json") {
    Json rows = Json::array();
    for (const auto& [m, row] : table) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v ? Json(*v) : Json(nullptr));
      rows.push_back({{"m", m}, {"N", r}});
    }
    Json j = {{"provenance", provenance(c)}, {"ceiling", c.ceiling}, {"K", c.K},
              {"k", {ks.lo, ks.hi}}, {"rows", rows}};
    os << j.dump(2) << "\n";
  } else {
    os << header_lines(c) << "m\\k";
    for (auto k : ks.values()) os << std::setw(5) << k;
    os << "\n";
    for (const auto& [m, row] : table) {
      os << std::setw(3) << m;
      for (const auto& v : row) os << std::setw(5) << cell(v);
      os << "\n";
    }
  }
  return {os.str(), kPass};
}

Result cmd_verify(const Config& c) {
  if (c.mode != "exact" && c.mode != "modular") throw BadParameters("--mode must be exact or modular");
  ModularOptions mo;
  mo.trials = c.trials;
  mo.prime = c.prime.value_or(kDefaultPrime);
  mo.seed = c.seed;
  if (c.perturb) {
    if (*c.perturb < 0) throw BadParameters("--perturb must be non-negative");
    mo.perturb = Perturbation{static_cast<std::uint64_t>(*c.perturb)};
  }
  const bool exact = c.mode == "exact";
  std::vector<std::function<VerificationReport()>> jobs;
  if (c.identity == "andrews") {
    if (!exact) throw BadParameters("andrews supports exact mode only");
    jobs.push_back([n = c.n_max] { return verify_andrews_exact(n); });
  } else if (c.identity == "kaneko") {
    for (const auto& p : grid({{"nvars", need(c.nvars, "nvars")}, {"N", need(c.n, "n")}})) {
      const auto nv = p.at("nvars"), N = p.at("N");
      if (nv < 1 || N < 0) throw BadParameters("kaneko: need nvars >= 1 and n >= 0");
      jobs.push_back([=] {
        return exact ? verify_kaneko_exact(static_cast<int>(nv), N)
                     : verify_kaneko_modular(static_cast<int>(nv), N, mo);
      });
    }
  } else if (c.identity == "theorem") {
    if (!exact && mo.prime % 3 != 1) {
      throw BadParameters("theorem modular mode needs a prime congruent to 1 mod 3");
    }
    if (c.l && (*c.l < 0 || *c.l > 2)) throw BadParameters("--l must be 0, 1 or 2");
    for (const auto& p : grid({{"m", need(c.m, "m")}, {"n", need(c.n, "n")}})) {
      const auto m = p.at("m"), n = p.at("n");
      if (m < 0 || n < 0) throw BadParameters("theorem: m, n must be non-negative");
      if (exact) {
        std::optional<int> l;
        if (c.l) l = static_cast<int>(*c.l);
        jobs.push_back([=] { return verify_theorem_exact(m, n, l); });
      } else {
        for (int l = 0; l < 3; ++l) {
          if (c.l && l != *c.l) continue;
          jobs.push_back([=] { return verify_theorem_modular(m, n, l, mo); });
        }
      }
    }
  } else if (c.identity == "general") {
    if (c.K < 1 || c.a < 1) throw BadParameters("general: need a, K >= 1");
    for (const auto& p : grid({{"m", need(c.m, "m")}, {"n", need(c.n, "n")}})) {
      const auto m = p.at("m"), n = p.at("n");
      if (m < 0 || n < 0) throw BadParameters("general: m, n must be non-negative");
      const auto a = c.a, K = c.K;
      jobs.push_back([=] {
        return exact ? verify_general_exact(m, n, a, K) : verify_general_modular(m, n, a, K, mo);
      });
    }
  } else {
    throw BadParameters("--identity must be andrews, kaneko, theorem or general");
  }
  if (!exact) {
    // Parameter errors (prime, trials) surface before any work starts.
    if (mo.trials < 1) throw BadParameters("--trials must be at least 1");
    if (mo.prime <= (1ULL << 60) || mo.prime >= (1ULL << 63) || !is_prime(mo.prime)) {
      throw BadParameters("--prime must be a prime in (2^60, 2^63)");
    }
  }
  std::vector<VerificationReport> reports(jobs.size());
  parallel_for(jobs.size(), c.jobs, [&](std::size_t i) { reports[i] = jobs[i](); });
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  const std::string fmt = c.format.empty() ? "json" : c.format;
  std::ostringstream os;
  if (fmt == "text" || fmt == "csv") {
    os << header_lines(c);
    for (const auto& r : reports) {
      os << r.identity << " " << r.mode << " " << params_text(r.params) << ": "
         << (r.pass ? "pass" : "fail");
      for (const auto& [k, v] : r.witness) os << " " << k << "=" << v;
      os << "\n";
    }
    os << "status: " << (pass ? "pass" : "fail") << "\n";
  } else {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    Json j = {{"provenance", provenance(c)}, {"status", pass ? "pass" : "fail"}, {"reports", list}};
    os << j.dump(2) << "\n";
  }
  return {os.str(), pass ? kPass : kViolation};
}

Result cmd_counterexamples(const Config& c) {
  const CounterexampleReport rep = reproduce_counterexamples();
  const bool ok = rep.refinement_reproduced() && rep.pattern_reproduced();
  const std::string fmt = c.format.empty() ? "json" : c.format;
  std::ostringstream os;
  if (fmt == "text" || fmt == "csv") {
    os << header_lines(c);
    os << "refinement (q,q^2;q^3)_1 (pq,pq^2;q^3)_40, p^40: " << rep.refinement_violations.size()
       << " violations";
    if (!rep.refinement_violations.empty()) {
      const auto& v = rep.refinement_violations.front();
      os << ", first at q^" << v.M << " coeff " << v.coeff.get_str();
    }
    os << "\npattern m1=4 m2=0 K=3, p^18 q^26 (predicted " << to_string(rep.predicted) << "):";
    for (const auto& s : rep.pattern_steps) os << " n=" << s.n << ":" << s.coeff.get_str();
    os << "\nstable coefficient: " << (rep.stable_coeff ? rep.stable_coeff->get_str() : "none")
       << "\ncontrol conj1 m=1 n=10 k<=4: " << rep.control_violations.size() << " violations\n"
       << "status: " << (ok ? "pass" : "fail") << "\n";
  } else {
    Json j = {{"provenance", provenance(c)}, {"status", ok ? "pass" : "fail"}, {"report", to_json(rep)}};
    os << j.dump(2) << "\n";
  }
  return {os.str(), ok ? kPass : kViolation};
}

void add_common(CLI::App* sc, Config& c) {
  sc->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sc->add_option("--out", c.out, "Write output to this file");
  sc->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_product(CLI::App* sc, Config& c) {
  sc->add_option("--conj", c.conj, "Product family")->check(CLI::IsMember({"1", "2", "3", "iks"}));
  sc->add_option("--m", c.m, "m (value or range a..b)");
  sc->add_option("--m1", c.m1, "m1");
  sc->add_option("--m2", c.m2, "m2");
  sc->add_option("--n", c.n, "n (value or range a..b)");
  sc->add_option("--n1", c.n1, "n1");
  sc->add_option("--n2", c.n2, "n2");
  sc->add_option("--n3", c.n3, "n3");
  sc->add_option("--K", c.K, "K");
  sc->add_option("--a", c.a, "a (IKS products)");
}

}  // namespace

std::vector<std::int64_t> Range::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw BadParameters("bad integer or range: " + text);
    return v;
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw BadParameters("empty range: " + text);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Borwein-type product expansion, sign-pattern checks and multisum verification"};
  app.name(kToolName);
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* expand_cmd = app.add_subcommand("expand", "Expand a product to p^kmax");
  add_product(expand_cmd, c);
  expand_cmd->add_option("--kmax", c.kmax, "Highest p-exponent (default: total p-degree)");
  add_common(expand_cmd, c);

  auto* check_cmd = app.add_subcommand("check", "Check sign patterns of p-slices");
  add_product(check_cmd, c);
  check_cmd->add_option("--k", c.k, "p-exponents to check (value or range)");
  check_cmd->add_option("--kmax", c.kmax, "Check k = 0..kmax (default: total p-degree)");
  add_common(check_cmd, c);

  auto* table_cmd = app.add_subcommand("table1", "Threshold table N_{m,k}");
  table_cmd->add_option("--conj", c.conj, "1, or 3 for the diagonal general-K family")
      ->check(CLI::IsMember({"1", "3"}));
  table_cmd->add_option("--m", c.m, "m range (default 1..3)");
  table_cmd->add_option("--k", c.k, "k range (default 0..15)");
  table_cmd->add_option("--K", c.K, "K");
  table_cmd->add_option("--ceiling", c.ceiling, "Largest n scanned");
  add_common(table_cmd, c);

  auto* verify_cmd = app.add_subcommand("verify", "Verify a multisum identity");
  verify_cmd->add_option("--identity", c.identity, "andrews, kaneko, theorem or general")
      ->required()
      ->check(CLI::IsMember({"andrews", "kaneko", "theorem", "general"}));
  verify_cmd->add_option("--mode", c.mode, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
  verify_cmd->add_option("--m", c.m, "m (value or range)");
  verify_cmd->add_option("--n", c.n, "n, or N for kaneko (value or range)");
  verify_cmd->add_option("--l", c.l, "Residue component 0, 1 or 2 (default: all)");
  verify_cmd->add_option("--nvars", c.nvars, "Number of variables for kaneko (value or range)");
  verify_cmd->add_option("--n-max", c.n_max, "Largest n for andrews");
  verify_cmd->add_option("--a", c.a, "a for general");
  verify_cmd->add_option("--K", c.K, "K for general");
  verify_cmd->add_option("--trials", c.trials, "Random points per identity");
  verify_cmd->add_option("--prime", c.prime, "Prime modulus")->envname("BORWEIN_LAB_PRIME");
  verify_cmd->add_option("--seed", c.seed, "Seed for sample points");
  verify_cmd->add_option("--perturb", c.perturb, "Flip the sign of the summand with this index");
  add_common(verify_cmd, c);

  auto* cex_cmd = app.add_subcommand("counterexamples", "Reproduce the known counterexamples");
  add_common(cex_cmd, c);

  std::vector<std::string> argv_store{kToolName};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* sc = app.get_subcommands().front();
  c.command = sc->get_name();
  for (const CLI::Option* opt : sc->get_options()) {
    const std::string name = opt->get_single_name();
    if (opt->count() == 0 || name == "jobs" || name == "out" || name == "help") continue;
    c.echo[name] = opt->as<std::string>();
  }

  const auto start = std::chrono::steady_clock::now();
  Result res;
  try {
    if (c.command == "expand") res = cmd_expand(c);
    else if (c.command == "check") res = cmd_check(c);
    else if (c.command == "table1") res = cmd_table1(c);
    else if (c.command == "verify") res = cmd_verify(c);
    else res = cmd_counterexamples(c);
  } catch (const BadParameters& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return kViolation;
  }

  if (c.out.empty()) {
    out << res.body;
  } else {
    std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << kToolName << ": cannot write " << c.out << "\n";
      return kUsage;
    }
    f << res.body;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << kToolName << " " << c.command << ": wall time " << std::fixed << std::setprecision(3)
      << secs << " s\n";
  return res.code;
}

}  // namespace borwein::cli
