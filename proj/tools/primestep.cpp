#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "primestep/cli.hpp"

using namespace primestep;
using namespace primestep::cli;

int main(int argc, char** argv) {
  CLI::App app{"Step-wise construction of the primes 6g-1 and 6g+1"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  bool bignum = false;
  bool all_rows = false;
  bool inject_fault = false;
  std::uint32_t step = 0;
  std::optional<std::string> output;
  Int limit = 0;

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--seed-n", config.seed_n, "seed parameter n, (r-, r+) = (7n-1, 5n-1)")
        ->check(CLI::PositiveNumber);
  };
  auto add_range = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--max-step", config.max_step, "last recursion step");
    sub->add_option("--limit", limit, "largest prime value; picks the smallest covering step")
        ->check(CLI::PositiveNumber);
  };

  auto* primes = app.add_subcommand("primes", "print 2, 3 and every prime decided by the recursion");
  add_range(primes);
  primes->add_flag("--verify", config.verify, "cross-check against a sieve");
  primes->add_flag("--bignum", bignum, "arbitrary precision bounds");

  auto* stepc = app.add_subcommand("step", "bounds, closed form and new-prime counts of one step");
  add_common(stepc);
  stepc->add_option("s", step, "step number")->required();
  stepc->add_flag("--bignum", bignum, "arbitrary precision bounds");

  auto* table1 = app.add_subcommand("table1", "first three composite gammas per generator and alpha");
  add_common(table1);

  auto* verify = app.add_subcommand("verify", "compare every step against the sieve");
  add_range(verify);
  verify->add_flag("--inject-fault", inject_fault, "corrupt the final state (test mode)");

  auto* bench = app.add_subcommand("bench", "time each step against a sieve to the same limit");
  bench->add_option("--max-step", config.max_step, "last recursion step");

  auto* dump = app.add_subcommand("dump", "serialize a step state");
  add_range(dump);
  dump->add_flag("--all", all_rows, "emit every gamma, not only primes");
  dump->add_option("--output", output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  config.format = formats.at(format);
  config.arithmetic = bignum ? Arithmetic::BigNum : Arithmetic::Checked64;
  if (limit > 0) config.limit = limit;

  try {
    if (*primes) return cmd_primes(config, std::cout, std::cerr);
    if (*stepc) return cmd_step(step, config, std::cout, std::cerr);
    if (*table1) return cmd_table1(config, std::cout);
    if (*verify) return cmd_verify(resolve_step(config), config, std::cout, std::cerr, inject_fault);
    if (*bench) return cmd_bench(config.max_step, std::cout, std::cerr);
    if (*dump) return cmd_dump(config, all_rows, output, std::cout, std::cerr);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOverflow;
  }
  return kUsage;
}
