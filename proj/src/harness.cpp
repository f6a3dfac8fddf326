#include "knotpoly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "knotpoly/burau.hpp"
#include "knotpoly/homfly.hpp"

namespace knotpoly {

namespace {

using Json = nlohmann::ordered_json;

// Runs fn(0..count-1) on up to `jobs` threads. Each index writes only its own
// result slot, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(workers, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

bool even_exponents(const TwoVarPoly& p) {
  for (const auto& [j, slice] : p.slices()) {
    if (j % 2 != 0) return false;
    for (const auto& [e, c] : slice.terms())
      if (e % 2 != 0) return false;
  }
  return true;
}

void tally(CheckTally& t, bool ok, const std::string& what) {
  ++t.checked;
  if (!ok) {
    ++t.violations;
    t.details.push_back(what);
  }
}

CheckTally& tally_named(ExperimentReport& r, const std::string& name) {
  for (auto& t : r.checks)
    if (t.name == name) return t;
  r.checks.push_back(CheckTally{name, 0, 0, {}});
  return r.checks.back();
}

// v^{-1} P(w with + at p) - v P(w with - at p) = z P(w with p deleted).
bool skein_holds_at(const BraidWord& b, std::size_t p) {
  std::vector<int> plus = b.letters();
  std::vector<int> minus = b.letters();
  std::vector<int> cut = b.letters();
  plus[p] = std::abs(plus[p]);
  minus[p] = -std::abs(minus[p]);
  cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(p));
  const TwoVarPoly lhs = homfly(BraidWord(b.strands(), plus)).shifted(-1, 0) -
                         homfly(BraidWord(b.strands(), minus)).shifted(1, 0);
  return lhs == homfly(BraidWord(b.strands(), cut)).shifted(0, 1);
}

void record_distinctness(ExperimentReport& r) {
  const auto& ms = r.members;
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      Distinctness d{a, b, "none", false};
      if (ms[a].homfly && ms[b].homfly && !(*ms[a].homfly == *ms[b].homfly)) {
        d.method = "homfly";
        d.distinct = true;
      } else if (ms[a].alexander && ms[b].alexander && !(*ms[a].alexander == *ms[b].alexander)) {
        d.method = "alexander";
        d.distinct = true;
      }
      r.distinctness.push_back(d);
    }
}

// Full HOMFLY and Alexander of each uncabled word, plus the checks that
// apply to them.
void summarize_members(ExperimentReport& r, const std::vector<BraidWord>& words, int jobs) {
  r.members.resize(words.size());
  parallel_for(words.size() * 2, jobs, [&](std::size_t task) {
    const std::size_t k = task / 2;
    MemberSummary& s = r.members[k];
    if (task % 2 == 0)
      s.homfly = homfly(words[k]);
    else
      s.alexander = alexander(words[k]);
  });
  CheckTally& mfw = tally_named(r, "mfw");
  CheckTally& parity = tally_named(r, "homfly-parity");
  CheckTally& conway = tally_named(r, "alexander-vs-homfly");
  for (std::size_t k = 0; k < words.size(); ++k) {
    MemberSummary& s = r.members[k];
    s.index = k;
    s.word_length = words[k].length();
    const std::string who = "member " + std::to_string(k);
    tally(mfw, mfw_check(*s.homfly, words[k].strands()), who);
    tally(parity, even_exponents(*s.homfly), who);
    tally(conway, alexander_from_homfly(*s.homfly) == *s.alexander, who);
  }
}

std::string verdict_text(Verdict v) { return v == Verdict::kPass ? "PASS" : "FALSIFIED"; }

Json poly_json(const LaurentPoly& p) { return p.to_string('v'); }

}  // namespace

// ------------------------------------------------------------------- config

CommutatorSpec ExperimentConfig::gamma_spec() const {
  return gamma ? *gamma : CommutatorSpec::left_nested(depth());
}

std::vector<Pattern> ExperimentConfig::effective_patterns() const {
  if (!patterns.empty()) return patterns;
  std::vector<Pattern> out;
  for (int q = 1; q <= w; ++q) out.push_back(cable_pattern(q, 1));
  return out;
}

void ExperimentConfig::validate() const {
  if (N < 0) throw Error("N must be nonnegative");
  if (w < 1) throw Error("w must be at least 1");
  if (family_size < 0) throw Error("family_size must be nonnegative");
  if (!is_knot(base)) throw Error("base braid " + base.to_string() + " does not close to a knot");
  if (depth() < 1) throw Error("commutator depth must be at least 1");
  if (depth() < soundness_bound() && !unsound)
    throw Error("n = " + std::to_string(depth()) + " is below 2mw + 2N = " + std::to_string(soundness_bound()) +
                "; set unsound to run a negative control");
  if (gamma && gamma->degree() < depth())
    throw Error("commutator " + gamma->to_string() + " has " + std::to_string(gamma->degree()) +
                " leaves, so it only lies in Gamma^" + std::to_string(gamma->degree()) + ", not Gamma^" +
                std::to_string(depth()));
  if (gamma && gamma->max_index() > strands())
    throw Error("commutator " + gamma->to_string() + " uses more than " + std::to_string(strands()) + " strands");
  for (const Pattern& p : effective_patterns())
    if (p.winding() > w)
      throw Error("pattern " + p.word().to_string() + " has winding above w = " + std::to_string(w));
}

Verdict ExperimentReport::verdict() const {
  for (const auto& s : slices)
    if (s.asserted && !s.equal) return Verdict::kFalsified;
  for (const auto& m : moments)
    if (m.asserted && !m.equal) return Verdict::kFalsified;
  for (const auto& c : checks)
    if (c.violations > 0) return Verdict::kFalsified;
  for (const auto& i : implications)
    if (!i.holds()) return Verdict::kFalsified;
  return Verdict::kPass;
}

bool ExperimentReport::all_distinct() const {
  return std::all_of(distinctness.begin(), distinctness.end(), [](const Distinctness& d) { return d.distinct; });
}

// ------------------------------------------------------------------- family

std::vector<BraidWord> build_family(const ExperimentConfig& cfg) {
  if (!is_knot(cfg.base)) throw Error("base braid " + cfg.base.to_string() + " does not close to a knot");
  std::vector<BraidWord> out{cfg.base};
  if (cfg.family_size == 0) return out;
  const BraidWord gamma = realize_commutator(cfg.gamma_spec(), cfg.strands());
  if (gamma.empty())
    throw Error("commutator " + cfg.gamma_spec().to_string() + " realizes to the empty word");
  BraidWord current = cfg.base;
  for (int i = 1; i <= cfg.family_size; ++i) {
    current = compose(current, gamma);
    out.push_back(current);
  }
  return out;
}

void check_resources(const ExperimentConfig& cfg) {
  const int m = cfg.strands();
  const BraidWord gamma = cfg.family_size > 0 ? realize_commutator(cfg.gamma_spec(), m) : BraidWord(m);
  double cost = 0;
  for (const Pattern& p : cfg.effective_patterns()) {
    const int w = p.winding();
    if (m * w > kMaxCabledStrands)
      throw BudgetExceeded("cable of a " + std::to_string(m) + "-strand braid with winding " + std::to_string(w) +
                           " needs " + std::to_string(m * w) + " strands; the limit is " +
                           std::to_string(kMaxCabledStrands));
    for (int i = 0; i <= cfg.family_size; ++i) {
      const double len = static_cast<double>(cfg.base.length() + static_cast<std::size_t>(i) * gamma.length());
      const double e = std::abs(exponent_sum(cfg.base));
      cost += factorial(m * w) * (w * w * len + w * (w - 1) * e + static_cast<double>(p.word().length()));
    }
  }
  if (cost > cfg.hecke_budget) {
    std::ostringstream os;
    os << "projected Hecke cost " << cost << " exceeds the budget " << cfg.hecke_budget;
    throw BudgetExceeded(os.str());
  }
}

// --------------------------------------------------------------- experiments

ExperimentReport verify_cable_coefficients(const ExperimentConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  cfg.validate();
  check_resources(cfg);

  ExperimentReport r;
  r.title = cfg.title.empty() ? "cable coefficient polynomials" : cfg.title;
  r.kind = "cable-coefficients";
  r.strands = cfg.strands();
  r.N = cfg.N;
  r.w = cfg.w;
  r.n = cfg.depth();
  r.negative_control = r.n < cfg.soundness_bound();
  r.gamma = cfg.gamma_spec().to_string();
  if (cfg.strands() < 3)
    r.notes.push_back("m = " + std::to_string(cfg.strands()) +
                      ": the pure braid group is abelian, so commutators are trivial");
  if (r.negative_control)
    r.notes.push_back("negative control: n is below the bound 2mw + 2N = " + std::to_string(cfg.soundness_bound()) +
                      "; comparisons are recorded but not asserted");

  const std::vector<BraidWord> family = build_family(cfg);
  if (family.size() > 1) r.gamma_length = family[1].length() - family[0].length();
  const bool asserted = !r.negative_control;

  summarize_members(r, family, cfg.jobs);

  // Uncabled moments: gamma in Gamma^n makes the pair (n-1)-equivalent, and
  // h^{2j}_i has order 2j + i.
  for (std::size_t k = 1; k < family.size(); ++k)
    for (int j = 0; 2 * j <= r.n - 1; ++j) {
      const auto count = static_cast<std::size_t>(r.n - 2 * j);
      const MomentVector a = h_invariants(*r.members[0].homfly, j, count);
      const MomentVector b = h_invariants(*r.members[k].homfly, j, count);
      for (std::size_t i = 0; i < count; ++i)
        r.moments.push_back(MomentComparison{k, j, static_cast<int>(i), a[i], b[i], a[i] == b[i], asserted});
    }

  // Cabled slices up to z^{2N}.
  const std::vector<Pattern> patterns = cfg.effective_patterns();
  std::vector<TwoVarPoly> cabled(patterns.size() * family.size());
  std::vector<std::size_t> lengths(cabled.size());
  parallel_for(cabled.size(), cfg.jobs, [&](std::size_t task) {
    const Pattern& p = patterns[task / family.size()];
    const BraidWord word = cable(family[task % family.size()], p);
    lengths[task] = word.length();
    cabled[task] = homfly_truncated(word, 2 * cfg.N);
  });
  r.max_cabled_length = *std::max_element(lengths.begin(), lengths.end());

  CheckTally& mfw = tally_named(r, "mfw");
  CheckTally& parity = tally_named(r, "homfly-parity");
  for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
    const Pattern& p = patterns[pi];
    const std::string label = p.name().empty() ? p.word().to_string() : p.name();
    const TwoVarPoly& base = cabled[pi * family.size()];
    for (std::size_t k = 0; k < family.size(); ++k) {
      const TwoVarPoly& poly = cabled[pi * family.size() + k];
      const std::string who = label + " cable of member " + std::to_string(k);
      tally(mfw, mfw_check(poly, cfg.strands() * p.winding()), who);
      tally(parity, even_exponents(poly), who);
      if (cfg.expected_cable_slices) {
        CheckTally& expected = tally_named(r, "expected-cable-slices");
        for (const auto& [deg, value] : *cfg.expected_cable_slices)
          tally(expected, poly.slice(deg) == value, who + " at z^" + std::to_string(deg));
      }
      if (k == 0) continue;
      for (int j = 0; j <= cfg.N; ++j) {
        SliceComparison s{label, k, j, base.slice(2 * j), poly.slice(2 * j), false, asserted};
        s.equal = s.base_value == s.member_value;
        r.slices.push_back(std::move(s));
      }
    }
  }

  CheckTally& skein = tally_named(r, "skein-spot-check");
  if (cfg.base.length() <= 12) tally(skein, homfly_oracle(cfg.base) == *r.members[0].homfly, "oracle on base");
  if (!cfg.base.empty()) tally(skein, skein_holds_at(cfg.base, 0), "three-term relation on base");

  record_distinctness(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

ExperimentReport verify_trivial_cables(int p_max, int N, int family_size, int jobs) {
  if (p_max < 1) throw Error("p_max must be at least 1");
  ExperimentConfig cfg;
  cfg.base = BraidWord::parse("3: 1 2");
  cfg.N = N;
  cfg.w = p_max;
  cfg.family_size = family_size;
  cfg.jobs = jobs;
  // (q,1)-cables of the unknot are unknots: P = 1.
  std::vector<std::pair<int, LaurentPoly>> expected{{0, LaurentPoly(Integer(1))}};
  for (int j = 1; j <= N; ++j) expected.emplace_back(2 * j, LaurentPoly());
  cfg.expected_cable_slices = std::move(expected);
  cfg.title = "(q,1)-cables of an unknot family";
  ExperimentReport r = verify_cable_coefficients(cfg);
  r.kind = "trivial-cables";
  return r;
}

ExperimentReport verify_moment_determination(const BraidWord& k, const BraidWord& k_prime) {
  const auto started = std::chrono::steady_clock::now();
  if (!is_knot(k) || !is_knot(k_prime)) throw Error("verify_moment_determination needs two knots");
  ExperimentReport r;
  r.title = "moments determine coefficient polynomials";
  r.kind = "moment-determination";
  r.strands = std::max(k.strands(), k_prime.strands());
  summarize_members(r, {k, k_prime}, 1);
  const TwoVarPoly& p = *r.members[0].homfly;
  const TwoVarPoly& q = *r.members[1].homfly;
  const auto count = static_cast<std::size_t>(k.strands() + k_prime.strands());
  std::vector<int> degrees;
  for (const auto& [j, s] : p.slices()) degrees.push_back(j);
  for (const auto& [j, s] : q.slices()) degrees.push_back(j);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int deg : degrees) {
    if (deg % 2 != 0) continue;
    ImplicationCheck c;
    c.j = deg / 2;
    c.moments_compared = static_cast<int>(count);
    c.moments_equal = h_invariants(p, c.j, count) == h_invariants(q, c.j, count);
    c.slices_equal = p.slice(deg) == q.slice(deg);
    r.implications.push_back(c);
  }
  record_distinctness(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

// ---------------------------------------------------------------- rendering

std::string render_report(const ExperimentReport& r, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::kJson) {
    Json j;
    j["title"] = r.title;
    j["kind"] = r.kind;
    j["verdict"] = verdict_text(r.verdict());
    j["negative_control"] = r.negative_control;
    j["parameters"] = {{"m", r.strands}, {"N", r.N}, {"w", r.w}, {"n", r.n}, {"gamma", r.gamma},
                       {"gamma_length", r.gamma_length}, {"max_cabled_length", r.max_cabled_length}};
    Json members = Json::array();
    for (const auto& m : r.members) {
      Json e{{"index", m.index}, {"word_length", m.word_length}};
      if (m.homfly) e["homfly"] = m.homfly->to_string();
      if (m.alexander) e["alexander"] = m.alexander->to_string('t');
      members.push_back(std::move(e));
    }
    j["members"] = std::move(members);
    Json slices = Json::array();
    for (const auto& s : r.slices)
      slices.push_back({{"pattern", s.pattern}, {"member", s.member}, {"j", s.j},
                        {"base", poly_json(s.base_value)}, {"value", poly_json(s.member_value)},
                        {"equal", s.equal}, {"asserted", s.asserted}});
    j["slices"] = std::move(slices);
    Json moments = Json::array();
    for (const auto& m : r.moments)
      moments.push_back({{"member", m.member}, {"j", m.j}, {"i", m.i}, {"base", m.base_value.get_str()},
                         {"value", m.member_value.get_str()}, {"equal", m.equal}, {"asserted", m.asserted}});
    j["moments"] = std::move(moments);
    Json implications = Json::array();
    for (const auto& c : r.implications)
      implications.push_back({{"j", c.j}, {"moments_compared", c.moments_compared},
                              {"moments_equal", c.moments_equal}, {"slices_equal", c.slices_equal},
                              {"holds", c.holds()}});
    j["implications"] = std::move(implications);
    Json distinct = Json::array();
    for (const auto& d : r.distinctness)
      distinct.push_back({{"a", d.a}, {"b", d.b}, {"method", d.method}, {"distinct", d.distinct}});
    j["distinctness"] = std::move(distinct);
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"checked", c.checked}, {"violations", c.violations},
                        {"details", c.details}});
    j["checks"] = std::move(checks);
    j["notes"] = r.notes;
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(2) + "\n";
  }

  std::ostringstream md;
  md << "# " << (r.title.empty() ? "report" : r.title) << "\n\n";
  md << "**Verdict:** " << verdict_text(r.verdict()) << (r.negative_control ? " (negative control)" : "") << "\n\n";
  if (!r.kind.empty())
    md << "m = " << r.strands << ", N = " << r.N << ", w = " << r.w << ", n = " << r.n << ", |gamma| = "
       << r.gamma_length << ", longest cable = " << r.max_cabled_length << " letters\n\n";
  for (const auto& note : r.notes) md << "> " << note << "\n\n";
  if (!r.slices.empty()) {
    md << "| pattern | member | j | base P^{2j} | member P^{2j} | equal |\n|---|---|---|---|---|---|\n";
    for (const auto& s : r.slices)
      md << "| " << s.pattern << " | " << s.member << " | " << s.j << " | " << s.base_value.to_string('v') << " | "
         << s.member_value.to_string('v') << " | " << (s.equal ? "yes" : "no") << " |\n";
    md << "\n";
  }
  if (!r.moments.empty()) {
    const auto unequal = std::count_if(r.moments.begin(), r.moments.end(), [](const auto& m) { return !m.equal; });
    md << "Uncabled moments compared: " << r.moments.size() << ", unequal: " << unequal << "\n\n";
  }
  if (!r.implications.empty()) {
    md << "| j | moments compared | moments equal | slices equal |\n|---|---|---|---|\n";
    for (const auto& c : r.implications)
      md << "| " << c.j << " | " << c.moments_compared << " | " << (c.moments_equal ? "yes" : "no") << " | "
         << (c.slices_equal ? "yes" : "no") << " |\n";
    md << "\n";
  }
  if (!r.distinctness.empty()) {
    md << "| a | b | distinct | by |\n|---|---|---|---|\n";
    for (const auto& d : r.distinctness)
      md << "| " << d.a << " | " << d.b << " | " << (d.distinct ? "yes" : "no") << " | " << d.method << " |\n";
    md << "\n";
  }
  if (!r.checks.empty()) {
    md << "| check | checked | violations |\n|---|---|---|\n";
    for (const auto& c : r.checks) md << "| " << c.name << " | " << c.checked << " | " << c.violations << " |\n";
    md << "\n";
  }
  if (include_timing) md << "Elapsed: " << r.elapsed_seconds << " s\n";
  return md.str();
}

}  // namespace knotpoly
