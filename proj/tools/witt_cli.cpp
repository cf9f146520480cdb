// witt: exact arithmetic in ZR/I^n and truncated Witt vectors over perfect
// F_p-algebras, with an independent Galois-ring oracle and a batch
// verification suite.
//
// Exit codes: 0 ok, 1 parse/usage error, 2 unsupported range, 3 property
// failure, 4 internal inconsistency.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "witt/check.hpp"
#include "witt/galois_ring.hpp"
#include "witt/isomorphism.hpp"
#include "witt/parser.hpp"
#include "witt/witt_polynomials.hpp"

namespace {

struct AlgebraFlags {
  unsigned p = 0;
  unsigned e = 1;
  std::string mod;                   // "[c0,c1,...]"
  std::vector<std::string> product;  // repeatable factor specs "e=2,mod=[1,1,1]"
};

void add_algebra_flags(CLI::App* cmd, AlgebraFlags& flags) {
  cmd->add_option("--p", flags.p, "prime characteristic")->required();
  cmd->add_option("--e", flags.e, "extension degree (single field)");
  cmd->add_option("--mod", flags.mod,
                  "modulus coefficient list [c0,c1,...], constant first, monic");
  cmd->add_option("--product", flags.product,
                  "product factor spec 'e=<k>[,mod=[...]]' (repeatable)");
}

witt::AlgebraPtr build_algebra(const AlgebraFlags& flags) {
  if (!flags.product.empty()) {
    std::vector<witt::FieldFactor> factors;
    for (const std::string& spec : flags.product)
      factors.push_back(witt::parse_factor_spec(spec, flags.p));
    return witt::AlgebraDescriptor::make(flags.p, std::move(factors));
  }
  if (!flags.mod.empty()) {
    const std::string spec = "e=" + std::to_string(flags.e) + ",mod=" + flags.mod;
    return witt::AlgebraDescriptor::make(flags.p, {witt::parse_factor_spec(spec, flags.p)});
  }
  return witt::AlgebraDescriptor::make_field(flags.p, flags.e);
}

nlohmann::json witt_vector_json(const witt::WittVector& w) {
  nlohmann::json components = nlohmann::json::array();
  for (const witt::AlgebraElement& c : w.components()) components.push_back(c.to_string());
  return {{"p", w.algebra()->characteristic()}, {"n", w.level()}, {"components", components}};
}

std::string default_cache_dir() {
  const char* env = std::getenv("WITT_CACHE_DIR");
  return env ? env : "";
}

int run(int argc, char** argv) {
  CLI::App app{"exact Witt-vector arithmetic over perfect F_p-algebras"};
  app.require_subcommand(1);

  // --- alpha / oracle / delta / beta -------------------------------------
  AlgebraFlags alpha_flags, oracle_flags, delta_flags, beta_flags;
  unsigned alpha_n = 0, oracle_n = 0, beta_n_flag = 0;
  std::string alpha_input, oracle_input, delta_input, beta_input;
  bool alpha_json = false, oracle_json = false, delta_json = false, beta_json = false;

  CLI::App* alpha_cmd =
      app.add_subcommand("alpha", "normal form of an element of ZR mod I^n");
  add_algebra_flags(alpha_cmd, alpha_flags);
  alpha_cmd->add_option("--n", alpha_n, "truncation level")->required();
  alpha_cmd->add_option("expr", alpha_input, "element of ZR")->required();
  alpha_cmd->add_flag("--json", alpha_json, "JSON output");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "normal form through the Galois-ring oracle (any p, n)");
  add_algebra_flags(oracle_cmd, oracle_flags);
  oracle_cmd->add_option("--n", oracle_n, "truncation level")->required();
  oracle_cmd->add_option("expr", oracle_input, "element of ZR")->required();
  oracle_cmd->add_flag("--json", oracle_json, "JSON output");

  CLI::App* delta_cmd =
      app.add_subcommand("delta", "arithmetic derivation (phi(x) - x^p)/p");
  add_algebra_flags(delta_cmd, delta_flags);
  delta_cmd->add_option("expr", delta_input, "element of ZR")->required();
  delta_cmd->add_flag("--json", delta_json, "JSON output");

  CLI::App* beta_cmd = app.add_subcommand(
      "beta", "canonical representative sum p^k [phi^-k(r_k)] of a coordinate tuple");
  add_algebra_flags(beta_cmd, beta_flags);
  beta_cmd->add_option("--n", beta_n_flag, "expected level (defaults to tuple length)");
  beta_cmd->add_option("tuple", beta_input, "witt vector \"(r0, r1, ...)\"")->required();
  beta_cmd->add_flag("--json", beta_json, "JSON output");

  // --- check ---------------------------------------------------------------
  witt::CheckOptions check_options;
  check_options.cache_dir = default_cache_dir();
  bool check_json = false;
  CLI::App* check_cmd = app.add_subcommand("check", "run the batch verification suite");
  check_cmd->add_option("--seed", check_options.seed, "seed for all randomized sweeps");
  check_cmd->add_option("--samples", check_options.samples,
                        "samples per property (default: per-property counts)");
  check_cmd->add_option("--mutate", check_options.mutation,
                        "built-in mutation (negative control), e.g. sign-flip-alpha3");
  check_cmd->add_option("--cache-dir", check_options.cache_dir,
                        "witt polynomial cache directory (env WITT_CACHE_DIR)");
  check_cmd->add_option("--workers", check_options.workers, "parallel workers (0 = auto)");
  check_cmd->add_flag("--json", check_json, "JSON report");

  // --- wittpoly --------------------------------------------------------------
  unsigned poly_p = 0, poly_n = 0, poly_limit = 0;
  std::string poly_cache = default_cache_dir();
  CLI::App* poly_cmd =
      app.add_subcommand("wittpoly", "emit universal Witt polynomials S_i, P_i");
  poly_cmd->add_option("--p", poly_p, "prime")->required();
  poly_cmd->add_option("--n", poly_n, "level")->required();
  poly_cmd->add_option("--limit", poly_limit,
                       "override the default generation bound for this p");
  poly_cmd->add_option("--cache-dir", poly_cache,
                       "cache directory (env WITT_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (alpha_cmd->parsed()) {
    const witt::AlgebraPtr desc = build_algebra(alpha_flags);
    const witt::MonoidAlgebraElement x = witt::parse_element(alpha_input, desc);
    const witt::WittVector w = witt::alpha(x, alpha_n);
    if (alpha_json) {
      const nlohmann::json doc = {{"command", "alpha"},
                                  {"p", desc->characteristic()},
                                  {"n", alpha_n},
                                  {"algebra", desc->to_string()},
                                  {"input", alpha_input},
                                  {"witt", witt_vector_json(w)}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << w.to_string() << '\n';
    }
    return 0;
  }

  if (oracle_cmd->parsed()) {
    const witt::AlgebraPtr desc = build_algebra(oracle_flags);
    const witt::MonoidAlgebraElement x = witt::parse_element(oracle_input, desc);
    const witt::WittVector w = witt::GaloisRing(desc, oracle_n).canonical_map(x);
    if (oracle_json) {
      const nlohmann::json doc = {{"command", "oracle"},
                                  {"p", desc->characteristic()},
                                  {"n", oracle_n},
                                  {"algebra", desc->to_string()},
                                  {"input", oracle_input},
                                  {"witt", witt_vector_json(w)}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << w.to_string() << '\n';
    }
    return 0;
  }

  if (delta_cmd->parsed()) {
    const witt::AlgebraPtr desc = build_algebra(delta_flags);
    const witt::MonoidAlgebraElement x = witt::parse_element(delta_input, desc);
    const witt::MonoidAlgebraElement d = witt::delta(x);
    if (delta_json) {
      const nlohmann::json doc = {{"command", "delta"},
                                  {"p", desc->characteristic()},
                                  {"algebra", desc->to_string()},
                                  {"input", delta_input},
                                  {"element", d.to_string()}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << d.to_string() << '\n';
    }
    return 0;
  }

  if (beta_cmd->parsed()) {
    const witt::AlgebraPtr desc = build_algebra(beta_flags);
    const witt::WittVector w = witt::parse_witt_vector(beta_input, desc);
    if (beta_n_flag != 0 && beta_n_flag != w.level())
      throw witt::ParseError(0, "tuple has " + std::to_string(w.level()) +
                                    " components but --n is " + std::to_string(beta_n_flag));
    const witt::MonoidAlgebraElement x = witt::beta_n(w);
    if (beta_json) {
      const nlohmann::json doc = {{"command", "beta"},
                                  {"p", desc->characteristic()},
                                  {"n", w.level()},
                                  {"algebra", desc->to_string()},
                                  {"input", beta_input},
                                  {"element", x.to_string()}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << x.to_string() << '\n';
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    if (!witt::is_known_mutation(check_options.mutation)) {
      std::cerr << "unknown mutation: " << check_options.mutation << '\n';
      return 1;
    }
    const witt::CheckReport report = witt::run_check_suite(check_options);
    std::cout << (check_json ? witt::report_to_json(report) + "\n"
                             : witt::report_to_text(report));
    return report.all_passed() ? 0 : 3;
  }

  if (poly_cmd->parsed()) {
    const witt::WittPolynomialSet set =
        witt::load_or_build(poly_p, poly_n, poly_cache, poly_limit);
    std::cout << witt::to_exchange_format(set);
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const witt::ParseError& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << '\n';
    return 1;
  } catch (const witt::UnsupportedTruncation& e) {
    std::cerr << "unsupported range: " << e.what() << '\n';
    return 2;
  } catch (const witt::BoundExceeded& e) {
    std::cerr << "unsupported range: " << e.what() << '\n';
    return 2;
  } catch (const witt::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
