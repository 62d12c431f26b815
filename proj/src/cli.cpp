#include "primestep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "primestep/bounds.hpp"
#include "primestep/composite_generators.hpp"
#include "primestep/oracle.hpp"
#include "primestep/recursion.hpp"
#include "primestep/serialize.hpp"

namespace primestep::cli {

namespace {

using nlohmann::json;

constexpr ResidueClass kClasses[] = {ResidueClass::OMinus, ResidueClass::OPlus};

// Beyond this step the recursion needs tens of millions of gammas per class.
constexpr std::uint32_t kMaxEnumerableStep = 8;

struct Failure {
  int code;
  std::string message;
};

std::string class_name(ResidueClass c) { return std::string(to_string(c)); }

// Checked-64 bounds up to s; the step whose bounds overflow is reported.
std::optional<Failure> probe_bounds(std::uint32_t s) {
  RangeBounds b = seed_bounds<Int>();
  for (std::uint32_t k = 1; k <= s; ++k) {
    try {
      b = next_bounds(b);
      // the step's values 6r+1 must fit as well
      (void)value(ResidueClass::OMinus, b.r_minus);
      (void)value(ResidueClass::OPlus, b.r_plus);
    } catch (const ArithmeticError& e) {
      return Failure{kOverflow, "overflow at step " + std::to_string(k) + ": " + e.what()};
    }
  }
  if (s > kMaxEnumerableStep)
    return Failure{kUsage, "step " + std::to_string(s) + " is beyond the enumerable limit " +
                               std::to_string(kMaxEnumerableStep)};
  return std::nullopt;
}

struct Built {
  std::vector<StepState> states;
  std::optional<Failure> failure;
};

Built build(std::uint32_t s, bool validate) {
  if (auto f = probe_bounds(s)) return {{}, f};
  RunResult r = run(s, {}, validate);
  Built out{std::move(r.states), std::nullopt};
  if (r.failure) {
    out.failure = Failure{r.failure->overflow ? kOverflow : kVerifyFail,
                          "step " + std::to_string(r.failure->step) + ": " + r.failure->message};
  }
  return out;
}

int report(const Failure& f, std::ostream& err) {
  err << "error: " << f.message << '\n';
  return f.code;
}

std::optional<Failure> reject_seed(const RunConfig& config) {
  if (config.seed_n != 1) return Failure{kUsage, "--seed-n other than 1 is only supported by `step`"};
  return std::nullopt;
}

std::vector<Int> emitted_primes(const StepState& state, std::optional<Int> limit) {
  std::vector<Int> out = {2, 3};
  for (ResidueClass c : kClasses)
    for (Int g : state.primes(c)) out.push_back(value(c, g));
  std::sort(out.begin(), out.end());
  if (limit) out.erase(std::upper_bound(out.begin(), out.end(), *limit), out.end());
  return out;
}

// Same set from the sieve: 2, 3 and every 6g-+1 prime with g inside the class range.
std::vector<Int> oracle_primes(const RangeBounds& b, std::optional<Int> limit) {
  Int top = value(ResidueClass::OPlus, b.r_plus);
  top = std::max(top, value(ResidueClass::OMinus, b.r_minus));
  if (limit) top = std::min(top, *limit);
  std::vector<Int> out;
  if (top < 2) return out;
  for (Int p : oracle::sieve(top).primes()) {
    if (p <= 3) {
      out.push_back(p);
      continue;
    }
    GammaIndex gi = classify(p);
    if (gi.cls == ResidueClass::OMinus && gi.gamma <= b.r_minus) out.push_back(p);
    if (gi.cls == ResidueClass::OPlus && gi.gamma <= b.r_plus) out.push_back(p);
  }
  return out;
}

// First value present in exactly one of two sorted lists.
std::optional<Int> first_difference(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

template <class Z>
std::string str(const Z& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

struct StepReport {
  std::uint32_t step;
  std::string seed_n;
  std::string r_minus;
  std::string r_plus;
  std::optional<std::pair<std::string, std::string>> closed;
  bool closed_match = true;
  PlusBranch branch = PlusBranch::Seed;
  std::optional<bool> bertrand;
  bool range_estimate = true;
  std::optional<std::pair<std::size_t, std::size_t>> new_primes;
};

// The checks square the bounds; evaluate them exactly regardless of Z.
template <class Z>
BigRangeBounds to_big(const BasicBounds<Z>& b) {
  return {BigInt(b.r_minus), BigInt(b.r_plus), b.step, b.plus_branch};
}

template <class Z>
StepReport step_report(std::uint32_t s, const Z& n) {
  BasicBounds<Z> prev = seed_bounds<Z>(n);
  BasicBounds<Z> cur = prev;
  for (std::uint32_t k = 1; k <= s; ++k) {
    prev = cur;
    try {
      cur = next_bounds(cur);
    } catch (const ArithmeticError& e) {
      throw StepOverflow(k, e.what());
    }
  }
  StepReport r;
  r.step = s;
  r.seed_n = str(n);
  r.r_minus = str(cur.r_minus);
  r.r_plus = str(cur.r_plus);
  r.branch = cur.plus_branch;
  r.range_estimate = range_estimate_holds(to_big(cur));
  if (s >= 1) {
    BasicBounds<Z> cf;
    try {
      cf = closed_form_bounds<Z>(s, n);
    } catch (const ArithmeticError& e) {
      throw StepOverflow(s, std::string("closed form: ") + e.what());
    }
    r.closed = {str(cf.r_minus), str(cf.r_plus)};
    r.closed_match = cf == cur;
    r.bertrand = bertrand_check(to_big(prev), to_big(cur));
  }
  return r;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::uint32_t step_for_limit(Int limit) {
  if (limit < 1) throw DomainError("step_for_limit: limit must be >= 1");
  Int need_minus = (limit + 1) / 6;
  Int need_plus = (limit - 1) / 6;
  RangeBounds b = seed_bounds<Int>();
  while (b.r_minus < need_minus || b.r_plus < need_plus) b = next_bounds(b);
  return b.step;
}

std::uint32_t resolve_step(const RunConfig& config) {
  return config.limit ? step_for_limit(*config.limit) : config.max_step;
}

int cmd_primes(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (auto f = reject_seed(config)) return report(*f, err);
  if (config.limit && *config.limit < 1) return report({kUsage, "--limit must be >= 1"}, err);
  if (config.arithmetic == Arithmetic::BigNum) err << "note: --bignum only affects `step`\n";
  std::uint32_t s = resolve_step(config);
  Built b = build(s, true);
  if (b.failure) return report(*b.failure, err);
  const StepState& state = b.states.back();
  std::vector<Int> primes = emitted_primes(state, config.limit);

  if (config.verify) {
    std::vector<Int> expected = oracle_primes(state.bounds, config.limit);
    if (auto d = first_difference(primes, expected)) {
      bool extra = std::binary_search(primes.begin(), primes.end(), *d);
      return report({kVerifyFail, "verification failed at value " + std::to_string(*d) +
                                      (extra ? " (emitted, not prime)" : " (prime, not emitted)")},
                    err);
    }
  }

  switch (config.format) {
    case Format::Text:
      for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? " " : "") << primes[i];
      out << '\n';
      break;
    case Format::Csv:
      out << "value\n";
      for (Int p : primes) out << p << '\n';
      break;
    case Format::Json: {
      json j = {{"schema", 1}, {"step", s}, {"primes", primes}};
      if (config.limit) j["limit"] = *config.limit;
      out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_step(std::uint32_t s, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.seed_n < 1) return report({kUsage, "--seed-n must be >= 1"}, err);
  StepReport r;
  try {
    r = config.arithmetic == Arithmetic::BigNum ? step_report<BigInt>(s, BigInt(config.seed_n))
                                                : step_report<Int>(s, config.seed_n);
  } catch (const StepOverflow& e) {
    return report({kOverflow, "overflow at " + std::string(e.what()) + " (use --bignum)"}, err);
  }

  if (config.seed_n == 1 && s <= kMaxEnumerableStep) {
    Built b = build(s, false);
    if (b.failure) return report(*b.failure, err);
    const StepState& cur = b.states.back();
    auto fresh = [&](ResidueClass c) {
      Int lo = s == 0 ? 0 : b.states[s - 1].bound(c);
      const auto& p = cur.primes(c);
      return static_cast<std::size_t>(p.end() - std::upper_bound(p.begin(), p.end(), lo));
    };
    r.new_primes = {fresh(ResidueClass::OMinus), fresh(ResidueClass::OPlus)};
  }

  switch (config.format) {
    case Format::Text:
      out << "step " << r.step << '\n';
      out << "seed_n " << r.seed_n << '\n';
      out << "r_minus " << r.r_minus << '\n';
      out << "r_plus " << r.r_plus << '\n';
      out << "plus_branch " << to_string(r.branch) << '\n';
      if (r.closed)
        out << "closed_form r_minus=" << r.closed->first << " r_plus=" << r.closed->second
            << " match=" << yes_no(r.closed_match) << '\n';
      else
        out << "closed_form -\n";
      if (r.new_primes)
        out << "new_primes O-=" << r.new_primes->first << " O+=" << r.new_primes->second << '\n';
      else
        out << "new_primes skipped\n";
      out << "bertrand " << (r.bertrand ? yes_no(*r.bertrand) : "-") << '\n';
      out << "range_estimate " << yes_no(r.range_estimate) << '\n';
      break;
    case Format::Csv:
      out << "step,seed_n,r_minus,r_plus,plus_branch,closed_r_minus,closed_r_plus,closed_match,new_primes_minus,"
             "new_primes_plus,bertrand,range_estimate\n";
      out << r.step << ',' << r.seed_n << ',' << r.r_minus << ',' << r.r_plus << ',' << to_string(r.branch) << ','
          << (r.closed ? r.closed->first : "") << ',' << (r.closed ? r.closed->second : "") << ','
          << (r.closed_match ? 1 : 0) << ',' << (r.new_primes ? std::to_string(r.new_primes->first) : "") << ','
          << (r.new_primes ? std::to_string(r.new_primes->second) : "") << ','
          << (r.bertrand ? std::to_string(*r.bertrand ? 1 : 0) : "") << ',' << (r.range_estimate ? 1 : 0)
          << '\n';
      break;
    case Format::Json: {
      // bounds are strings so bignum values survive any JSON reader
      json j = {{"schema", 1},
                {"step", r.step},
                {"seed_n", r.seed_n},
                {"r_minus", r.r_minus},
                {"r_plus", r.r_plus},
                {"plus_branch", to_string(r.branch)},
                {"closed_form", nullptr},
                {"new_primes", nullptr},
                {"bertrand", nullptr},
                {"range_estimate", r.range_estimate}};
      if (r.closed)
        j["closed_form"] = {{"r_minus", r.closed->first}, {"r_plus", r.closed->second}, {"match", r.closed_match}};
      if (r.new_primes) j["new_primes"] = {{"O-", r.new_primes->first}, {"O+", r.new_primes->second}};
      if (r.bertrand) j["bertrand"] = *r.bertrand;
      out << j.dump() << '\n';
      break;
    }
  }
  return r.closed_match ? kOk : kVerifyFail;
}

int cmd_table1(const RunConfig& config, std::ostream& out) {
  constexpr GeneratorKind kRows[] = {GeneratorKind::Minus1, GeneratorKind::Plus1, GeneratorKind::Plus2};
  json rows = json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "generator,alpha,beta,gamma\n";
  text << "generator  alpha=1     alpha=2     alpha=3\n";
  for (GeneratorKind k : kRows) {
    std::string name(to_string(k));
    std::string line = name + std::string(11 - name.size(), ' ');
    for (Int a = 1; a <= 3; ++a) {
      std::vector<Int> cell;
      for (Int b = 1; b <= 3; ++b) {
        cell.push_back(gamma_composite(k, a, b));
        csv << name << ',' << a << ',' << b << ',' << cell.back() << '\n';
      }
      std::string c = std::to_string(cell[0]) + ' ' + std::to_string(cell[1]) + ' ' + std::to_string(cell[2]);
      line += a < 3 ? c + std::string(c.size() < 12 ? 12 - c.size() : 1, ' ') : c;
      rows.push_back({{"generator", name}, {"alpha", a}, {"values", cell}});
    }
    text << line << '\n';
  }
  switch (config.format) {
    case Format::Text: out << text.str(); break;
    case Format::Csv: out << csv.str(); break;
    case Format::Json: out << json{{"schema", 1}, {"cells", rows}}.dump() << '\n'; break;
  }
  return kOk;
}

int cmd_verify(std::uint32_t s_max, const RunConfig& config, std::ostream& out, std::ostream& err,
               bool inject_fault) {
  if (auto f = reject_seed(config)) return report(*f, err);
  Built b = build(s_max, true);
  if (b.failure) return report(*b.failure, err);

  if (inject_fault) {
    // toggle the top gamma of the final O+ range
    auto& primes = b.states.back().primes_plus;
    Int g = b.states.back().bounds.r_plus;
    auto it = std::lower_bound(primes.begin(), primes.end(), g);
    if (it != primes.end() && *it == g)
      primes.erase(it);
    else
      primes.insert(it, g);
  }

  const RangeBounds& last = b.states.back().bounds;
  Int top = std::max(value(ResidueClass::OMinus, last.r_minus), value(ResidueClass::OPlus, last.r_plus));
  oracle::PrimeTable table = oracle::sieve(top);

  std::optional<std::string> divergence;
  std::size_t passed = 0;
  std::size_t total = 0;
  json steps = json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "step,class,bound,count,oracle_count,pass\n";
  for (const StepState& st : b.states) {
    for (ResidueClass c : kClasses) {
      std::vector<Int> expected = oracle::gamma_primes(table, c, st.bound(c));
      const auto& got = st.primes(c);
      bool ok = got == expected;
      ++total;
      if (ok) ++passed;
      if (!ok && !divergence)
        divergence = "step=" + std::to_string(st.step) + " class=" + class_name(c) +
                     " gamma=" + std::to_string(*first_difference(got, expected));
      text << "step " << st.step << " class " << class_name(c) << " bound " << st.bound(c) << " primes "
           << got.size() << " oracle " << expected.size() << ' ' << (ok ? "PASS" : "FAIL") << '\n';
      csv << st.step << ',' << class_name(c) << ',' << st.bound(c) << ',' << got.size() << ',' << expected.size()
          << ',' << (ok ? 1 : 0) << '\n';
      steps.push_back({{"step", st.step},
                       {"class", class_name(c)},
                       {"bound", st.bound(c)},
                       {"count", got.size()},
                       {"oracle_count", expected.size()},
                       {"pass", ok}});
    }
  }
  switch (config.format) {
    case Format::Text: out << text.str() << "total " << passed << '/' << total << " passed\n"; break;
    case Format::Csv: out << csv.str(); break;
    case Format::Json:
      out << json{{"schema", 1}, {"checks", steps}, {"passed", passed}, {"total", total}}.dump() << '\n';
      break;
  }
  if (divergence) return report({kVerifyFail, "first divergence " + *divergence}, err);
  return kOk;
}

int cmd_bench(std::uint32_t s_max, std::ostream& out, std::ostream& err) {
  if (auto f = probe_bounds(s_max)) return report(*f, err);
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  out << "step,r_minus,r_plus,recursion_ms,oracle_ms\n";
  std::optional<StepState> state;
  for (std::uint32_t s = 0; s <= s_max; ++s) {
    auto t0 = clock::now();
    try {
      state = s == 0 ? initial_state() : advance(*state);
    } catch (const ArithmeticError& e) {
      return report({kOverflow, "overflow at step " + std::to_string(s) + ": " + e.what()}, err);
    }
    auto t1 = clock::now();
    Int top = std::max(value(ResidueClass::OMinus, state->bounds.r_minus),
                       value(ResidueClass::OPlus, state->bounds.r_plus));
    auto table = oracle::sieve(top);
    auto t2 = clock::now();
    std::size_t n = oracle::gamma_primes(table, ResidueClass::OMinus, state->bounds.r_minus).size();
    if (n != state->primes_minus.size()) err << "warning: O- count differs from the sieve at step " << s << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", ms(t1 - t0), ms(t2 - t1));
    out << s << ',' << state->bounds.r_minus << ',' << state->bounds.r_plus << ',' << buf << '\n';
  }
  return kOk;
}

int cmd_dump(const RunConfig& config, bool all_rows, const std::optional<std::string>& path, std::ostream& out,
             std::ostream& err) {
  if (auto f = reject_seed(config)) return report(*f, err);
  std::uint32_t s = resolve_step(config);
  Built b = build(s, true);
  if (b.failure) return report(*b.failure, err);
  const StepState& state = b.states.back();

  std::ofstream file;
  if (path) {
    file.open(*path, std::ios::out | std::ios::trunc);
    if (!file) return report({kIoError, "cannot open " + *path + " for writing"}, err);
  }
  std::ostream& os = path ? static_cast<std::ostream&>(file) : out;
  switch (config.format) {
    case Format::Text: write_state_text(os, state); break;
    case Format::Csv: write_rows_csv(os, state, all_rows); break;
    case Format::Json: os << state_to_json(state, all_rows).dump() << '\n'; break;
  }
  os.flush();
  if (!os) return report({kIoError, "write failed" + (path ? " for " + *path : std::string())}, err);
  return kOk;
}

}  // namespace primestep::cli
