// Runs the acceptance criteria. With no argument every criterion runs; with
// a number only that one does. One PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "mwp/frontend.hpp"
#include "mwp/report.hpp"
#include "mwp_cli/cli.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using mwp::Coefficient;

namespace {

constexpr double kExponentSeconds = 1.0;
constexpr double kOracleSuiteSeconds = 30.0;
constexpr double kExplosionSeconds = 10.0;
constexpr std::uint32_t kOracleMaxPoints = 8;
constexpr int kRandomPolynomials = 1000;
constexpr int kMaxIndices = 4;
constexpr int kRandomRelations = 100;
constexpr std::size_t kCompactFragmentLimit = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

fs::path corpus(const std::string& name) { return fs::path(MWP_CORPUS_DIR) / name; }

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(MWP_CORPUS_DIR))
    if (e.path().extension() == ".c") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome exponential_detection() {
  Outcome o;
  for (const char* name : {"exponent_add.c", "exponent_mul.c"}) {
    const auto src = read(corpus(name));
    const auto start = Clock::now();
    const auto a = mwp::analyze_source(src);
    const double t = seconds_since(start);
    o.check(a.diagnostics.empty() && a.functions.size() == 1, std::string(name) + ": not analyzed");
    if (!o.pass) return o;
    const auto report = mwp::make_report(a, name);
    const auto& f = report.functions[0];
    o.check(f.verdict == mwp::Verdict::Infinite, std::string(name) + ": verdict not infinite");
    o.check(f.choices && f.choices->empty(), std::string(name) + ": passing set not empty");
    o.check(!f.infinite_vars.empty(), std::string(name) + ": no infinite variable");
    o.check(t < kExponentSeconds, std::string(name) + ": too slow");
    o.detail += (o.detail.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(t) + " s";
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  int programs = 0;
  for (const auto& path : corpus_files()) {
    for (const auto& fn : mwp::parse_translation_unit(read(path)).functions) {
      if (oracle::count_points(fn.body) > kOracleMaxPoints) continue;
      const auto r = mwp::analyze_function(fn);
      const auto expected = oracle::exhaustive(fn);
      o.check(oracle::as_set(r.evaluation->passing) == expected.passing,
              path.filename().string() + ":" + fn.name + " passing set differs");
      o.check(r.evaluation->infinite_vars == expected.infinite_vars,
              path.filename().string() + ":" + fn.name + " infinite variables differ");
      ++programs;
    }
  }
  const double t = seconds_since(start);
  o.check(programs >= 10, "corpus too small");
  o.check(t < kOracleSuiteSeconds, "suite too slow");
  if (o.pass) o.detail = std::to_string(programs) + " functions, " + std::to_string(t) + " s";
  return o;
}

Outcome explosion_scaling() {
  Outcome o;
  const auto start = Clock::now();
  const auto a = mwp::analyze_source(read(corpus("explosion.c")));
  const auto report = mwp::make_report(a, "explosion.c");
  const auto text = mwp::serialize_report(report);
  const double t = seconds_since(start);
  o.check(report.functions.size() == 1, "not analyzed");
  if (!o.pass) return o;
  const auto& f = report.functions[0];
  o.check(f.num_indices == 20, "expected 20 derivation points");
  o.check(f.choices.has_value(), "not evaluated");
  if (!o.pass) return o;
  o.check(f.choices->count() == "3486784401", "count is " + f.choices->count());
  o.check(f.choices->fragments().size() <= kCompactFragmentLimit, "passing set not compact");
  o.check(t < kExplosionSeconds, "too slow");
  if (o.pass)
    o.detail = std::to_string(f.choices->fragments().size()) + " fragment(s), " + std::to_string(t) +
               " s, " + std::to_string(text.size()) + " report bytes";
  return o;
}

Outcome algebra_properties() {
  Outcome o;
  for (auto a : mwp::kAllCoefficients)
    for (auto b : mwp::kAllCoefficients)
      for (auto c : mwp::kAllCoefficients) {
        using mwp::join;
        using mwp::times;
        o.check(join(join(a, b), c) == join(a, join(b, c)), "join associativity");
        o.check(times(times(a, b), c) == times(a, times(b, c)), "times associativity");
        o.check(times(a, join(b, c)) == join(times(a, b), times(a, c)), "left distributivity");
        o.check(times(join(a, b), c) == join(times(a, c), times(b, c)), "right distributivity");
        o.check(join(a, b) == join(b, a) && times(a, b) == times(b, a), "commutativity");
        o.check(join(a, Coefficient::Zero) == a && times(a, Coefficient::M) == a, "units");
        o.check(times(a, Coefficient::Zero) == Coefficient::Zero, "annihilator");
      }

  std::mt19937 rng(20240611);
  const auto choices = oracle::all_choices(kMaxIndices);
  int monotone_checked = 0, contain_checked = 0;
  for (int t = 0; t < kRandomPolynomials; ++t) {
    const auto raw_a = oracle::random_polynomial(rng, 6, kMaxIndices);
    const auto raw_b = oracle::random_polynomial(rng, 6, kMaxIndices);
    const auto a = oracle::to_library(raw_a), b = oracle::to_library(raw_b);
    const auto s = mwp::poly_add(a, b), p = mwp::poly_times(a, b);
    o.check(mwp::Polynomial(a.monomials()) == a, "canonicalization not idempotent");
    for (const auto& c : choices) {
      o.check(oracle::eval(a, c) == oracle::eval(raw_a, c), "canonicalization changes value");
      o.check(oracle::eval(s, c) == oracle::add(oracle::eval(a, c), oracle::eval(b, c)), "add");
      o.check(oracle::eval(p, c) == oracle::mul(oracle::eval(a, c), oracle::eval(b, c)), "times");
    }
    for (const auto* poly : {&a, &b}) {
      const auto& ms = poly->monomials();
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
          if (i != j) o.check(!mwp::monomial_contains(ms[i], ms[j]), "contained monomial kept");
    }
    // containment soundness and product-order monotonicity on monomial samples
    std::vector<mwp::Monomial> pool;
    for (const auto& m : a.monomials()) pool.push_back(m);
    for (const auto& m : b.monomials()) pool.push_back(m);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (mwp::monomial_contains(pool[i], pool[j])) {
          ++contain_checked;
          for (const auto& c : choices)
            o.check(oracle::eval(pool[i], c) >= oracle::eval(pool[j], c), "containment unsound");
        }
        for (std::size_t k = 0; k < pool.size(); ++k) {
          const auto &x = pool[k], &b1 = pool[i], &b2 = pool[j];
          std::vector<mwp::Delta> diff;
          std::set_symmetric_difference(b1.deltas().begin(), b1.deltas().end(), b2.deltas().begin(),
                                        b2.deltas().end(), std::back_inserter(diff));
          bool shares = false;
          for (const auto& d1 : x.deltas())
            for (const auto& d2 : diff) shares = shares || d1.index == d2.index;
          const auto p1 = mwp::monomial_product(x, b1), p2 = mwp::monomial_product(x, b2);
          if (shares || p1.is_zero() || p2.is_zero()) continue;
          ++monotone_checked;
          const auto before = mwp::compare_guards(b1.deltas(), b2.deltas());
          const auto after = mwp::compare_guards(p1.deltas(), p2.deltas());
          o.check(before == 0 ? after == 0 : (before < 0 ? after < 0 : after > 0),
                  "product order not monotone");
        }
      }
    }
  }
  if (o.pass)
    o.detail = "125 triples, " + std::to_string(kRandomPolynomials) + " polynomial pairs, " +
               std::to_string(contain_checked) + " containments, " +
               std::to_string(monotone_checked) + " order checks";
  return o;
}

mwp::FlowMatrix extend_by_hand(const mwp::Relation& r, const std::vector<std::string>& target) {
  mwp::FlowMatrix m(target.size());
  for (std::size_t i = 0; i < target.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j) {
      const auto ri = r.index_of(target[i]), rj = r.index_of(target[j]);
      if (ri && rj) m.at(i, j) = r.matrix().at(*ri, *rj);
      else if (i == j) m.at(i, j) = mwp::Polynomial(Coefficient::M);
    }
  return m;
}

Outcome homogenisation_neutrality() {
  Outcome o;
  std::mt19937 rng(77);
  const std::vector<std::string> pool{"a", "b", "c", "d", "e"};
  int unequal = 0;
  for (int t = 0; t < kRandomRelations * 2; ++t) {
    std::vector<std::string> va, vb;
    for (const auto& v : pool) {
      if (rng() % 2) va.push_back(v);
      if (rng() % 2) vb.push_back(v);
    }
    std::shuffle(va.begin(), va.end(), rng);
    std::shuffle(vb.begin(), vb.end(), rng);
    const mwp::Relation a(va, oracle::random_matrix(rng, va.size(), 3, 0.5));
    const mwp::Relation b(vb, oracle::random_matrix(rng, vb.size(), 3, 0.5));
    if (va == vb) continue;
    ++unequal;
    auto all = va;
    for (const auto& v : vb)
      if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    const auto composed = mwp::compose(a, b);
    o.check(composed.variables() == all, "variable order");
    o.check(composed.matrix() == mwp::matrix_product(extend_by_hand(a, all), extend_by_hand(b, all)),
            "compose differs from manual extension");
  }
  o.check(unequal >= kRandomRelations, "too few unequal pairs");
  for (int t = 0; t < kRandomRelations; ++t) {
    const std::vector<std::string> vars{"x", "y", "z"};
    const mwp::Relation a(vars, oracle::random_matrix(rng, 3, 3, 0.5));
    const mwp::Relation b(vars, oracle::random_matrix(rng, 3, 3, 0.5));
    const auto [ha, hb] = mwp::homogenise(a, b);
    o.check(ha.shares_storage_with(a) && hb.shares_storage_with(b), "equal lists were rebuilt");
  }
  if (o.pass) o.detail = std::to_string(unequal) + " unequal pairs, " + std::to_string(kRandomRelations) + " equal pairs";
  return o;
}

Outcome dense_round_trip() {
  Outcome o;
  const auto prog = mwp::parse(read(corpus("dense.c")));
  const auto& fn = prog.functions.at(0);
  const auto r = mwp::analyze_function(fn);
  const auto& m = r.relation.matrix();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) nonzero += m.at(i, j).is_zero() ? 0 : 1;
  o.check(nonzero == m.dim() * m.dim(), "matrix has zero entries");

  const auto vars = r.relation.variables();
  const auto closed = mwp::closure(m);
  const auto looped = mwp::while_close(r.relation);
  const auto squared = mwp::compose(r.relation, r.relation);
  const auto joined = mwp::relation_sum(r.relation, mwp::Relation(vars));
  for (const auto& c : oracle::all_choices(r.num_indices)) {
    const auto scalar = oracle::run(fn.body, vars, c);
    o.check(oracle::eval(m, c) == scalar, "relation differs from scalar semantics");
    o.check(oracle::eval(closed, c) == oracle::star(scalar), "closure differs");
    o.check(oracle::eval(looped.matrix(), c) == oracle::loop(scalar), "loop correction differs");
    o.check(oracle::eval(squared.matrix(), c) == oracle::product(scalar, scalar), "compose differs");
    o.check(oracle::eval(joined.matrix(), c) == oracle::sum(scalar, oracle::identity(vars.size())),
            "sum differs");
  }
  const auto expected = oracle::exhaustive(fn);
  o.check(oracle::as_set(r.evaluation->passing) == expected.passing, "passing set differs");
  const auto loop_eval = mwp::evaluate(looped, r.num_indices);
  o.check(oracle::as_set(loop_eval.passing) == oracle::exhaustive(looped, r.num_indices).passing,
          "passing set of the closed loop differs");
  const auto report = mwp::make_report(mwp::analyze_source(read(corpus("dense.c"))), "dense.c");
  o.check(mwp::parse_report(mwp::serialize_report(report)) == report, "report round trip");
  if (o.pass)
    o.detail = std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " all nonzero, " +
               std::to_string(r.num_indices) + " points";
  return o;
}

Outcome loop_correction() {
  Outcome o;
  const auto prog = mwp::parse(read(corpus("loop_increment.c")));
  const auto& fn = prog.functions.at(0);
  const auto& loop = std::get<mwp::ast::While>(fn.body.at(0).node);
  const auto vars = mwp::collect_variables(fn);
  mwp::DerivationContext ctx;
  const auto body = mwp::compute_relation(loop.body, ctx, vars);
  o.check(ctx.next_index == 1, "expected one derivation point");
  if (!o.pass) return o;

  std::vector<std::uint8_t> p_alternatives;
  for (std::uint8_t alt = 0; alt < mwp::kAlternatives; ++alt) {
    const oracle::Choice c{alt};
    const auto s = oracle::star(oracle::eval(body.matrix(), c));
    bool reaches_p = false;
    for (std::size_t i = 0; i < vars.size(); ++i) reaches_p = reaches_p || s[i][i] >= oracle::kP;
    if (reaches_p) p_alternatives.push_back(alt);
  }
  o.check(p_alternatives.size() == 1, "diagonal reaches p under " +
                                          std::to_string(p_alternatives.size()) + " alternatives");
  if (!o.pass) return o;

  const auto r = mwp::analyze_function(fn);
  const auto got = oracle::as_set(r.evaluation->passing);
  o.check(got == oracle::exhaustive(fn).passing, "passing set differs from exhaustive oracle");
  std::set<oracle::Choice> expected;
  for (std::uint8_t alt = 0; alt < mwp::kAlternatives; ++alt)
    if (alt != p_alternatives[0]) expected.insert({alt});
  std::string listed;
  for (const auto& c : got) listed += (listed.empty() ? "" : ",") + std::to_string(c[0]);
  o.check(got == expected, "passing alternatives {" + listed + "}, expected all but " +
                               std::to_string(p_alternatives[0]) +
                               "; alternative 0 leaves w on the diagonal");
  return o;
}

Outcome cli_contract() {
  Outcome o;
  std::map<std::string, int> expected;
  {
    std::istringstream in(read(corpus("expected_exit.txt")));
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string name;
      int code = -1;
      fields >> name >> code;
      expected[name] = code;
    }
  }
  const auto tmp = fs::temp_directory_path() / "mwp_acceptance";
  fs::create_directories(tmp);
  int files = 0;
  for (const auto& path : corpus_files()) {
    const auto name = path.filename().string();
    if (!expected.contains(name)) {
      o.fail(name + " missing from the manifest");
      continue;
    }
    const auto first = tmp / (name + ".1.json");
    const auto second = tmp / (name + ".2.json");
    std::ostringstream out, err;
    const int code = mwp::cli::run_cli({path.string(), "--out", first.string()}, out, err);
    mwp::cli::run_cli({path.string(), "--out", second.string()}, out, err);
    o.check(code == expected[name], name + ": exit " + std::to_string(code) + ", expected " +
                                        std::to_string(expected[name]));
    const auto bytes = read(first);
    o.check(!bytes.empty() && bytes == read(second), name + ": report bytes differ across runs");
    try {
      const auto loaded = mwp::load_report(first);
      o.check(mwp::serialize_report(loaded) == bytes, name + ": round trip changes bytes");
      const auto fresh = mwp::make_report(mwp::analyze_source(read(path)), path.string());
      o.check(loaded == fresh, name + ": loaded report differs from analysis");
    } catch (const mwp::ReportError& e) {
      o.fail(name + ": " + e.what());
    }
    ++files;
  }
  fs::remove_all(tmp);
  if (o.pass) o.detail = std::to_string(files) + " files";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "exponential detection", exponential_detection},
      {2, "oracle equivalence", oracle_equivalence},
      {3, "explosion scaling", explosion_scaling},
      {4, "algebra property suite", algebra_properties},
      {5, "homogenisation neutrality", homogenisation_neutrality},
      {6, "dense matrix round trip", dense_round_trip},
      {7, "loop correction", loop_correction},
      {8, "cli contract", cli_contract},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
