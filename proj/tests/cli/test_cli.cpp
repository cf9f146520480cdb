// End-to-end tests for the witt CLI: spawns the real binary, checks output
// text, JSON schema conformance, and the documented exit codes
// (0 ok, 1 parse/usage, 2 unsupported range, 3 property failure).
//
// usage: cli_tests <path-to-witt-binary> <path-to-schema.json>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

int g_failures = 0;
std::string g_binary;
std::filesystem::path g_workdir;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const auto out_path = g_workdir / "out.txt";
  const auto err_path = g_workdir / "err.txt";
  const std::string command = env_prefix + g_binary + " " + args + " >" + out_path.string() +
                              " 2>" + err_path.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << '\n';
  }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
  if (got != want) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n  want: " << want << "\n  got:  " << got << '\n';
  }
}

// --- minimal JSON-schema validator (the subset the shipped schema uses) ----

bool validate(const json& schema, const json& value, const json& root, std::string& why);

bool validate_type(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  return false;
}

const json* resolve_ref(const std::string& ref, const json& root) {
  // only "#/..." pointers
  if (ref.rfind("#/", 0) != 0) return nullptr;
  const json* cur = &root;
  std::istringstream path(ref.substr(2));
  std::string key;
  while (std::getline(path, key, '/')) {
    if (!cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
  }
  return cur;
}

bool validate(const json& schema, const json& value, const json& root, std::string& why) {
  if (schema.contains("$ref")) {
    const json* target = resolve_ref(schema["$ref"].get<std::string>(), root);
    if (!target) {
      why = "unresolvable $ref " + schema["$ref"].get<std::string>();
      return false;
    }
    return validate(*target, value, root, why);
  }
  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const json& alternative : schema["oneOf"]) {
      std::string ignored;
      if (validate(alternative, value, root, ignored)) ++matches;
    }
    if (matches != 1) {
      why = "oneOf matched " + std::to_string(matches) + " alternatives";
      return false;
    }
    return true;
  }
  if (schema.contains("enum")) {
    for (const json& candidate : schema["enum"])
      if (candidate == value) return true;
    why = "value not in enum";
    return false;
  }
  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    if (!validate_type(type, value)) {
      why = "expected type " + type;
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const json& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          why = "missing required key " + key.get<std::string>();
          return false;
        }
    }
    const bool closed =
        schema.contains("additionalProperties") && schema["additionalProperties"] == false;
    for (auto it = value.begin(); it != value.end(); ++it) {
      const bool declared =
          schema.contains("properties") && schema["properties"].contains(it.key());
      if (declared) {
        if (!validate(schema["properties"][it.key()], it.value(), root, why)) {
          why = it.key() + ": " + why;
          return false;
        }
      } else if (closed) {
        why = "unexpected key " + it.key();
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const json& item : value)
      if (!validate(schema["items"], item, root, why)) {
        why = "items: " + why;
        return false;
      }
  }
  return true;
}

void expect_schema(const json& root, const std::string& payload, const std::string& what) {
  std::string why;
  json value;
  try {
    value = json::parse(payload);
  } catch (const std::exception& e) {
    ++g_failures;
    std::cerr << "FAILED: " << what << ": not JSON: " << e.what() << '\n';
    return;
  }
  if (!validate(root, value, root, why)) {
    ++g_failures;
    std::cerr << "FAILED: " << what << ": schema violation: " << why << "\n  " << payload
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <witt-binary> <schema.json>\n";
    return 2;
  }
  g_binary = argv[1];
  const json schema = json::parse(slurp(argv[2]));
  g_workdir = std::filesystem::temp_directory_path() / "witt-cli-tests";
  std::filesystem::create_directories(g_workdir);

  // --- plain text outputs -------------------------------------------------
  {
    const RunResult r = run_cli("alpha --p 2 --n 3 \"3*[1]\"");
    expect(r.exit_code == 0, "alpha exit code");
    expect_eq(r.out, "(1, 1, 0)\n", "alpha output");
  }
  {
    const RunResult r = run_cli("delta --p 2 \"2*[1]\"");
    expect(r.exit_code == 0, "delta exit code");
    expect_eq(r.out, "-1*[1]\n", "delta output");
  }
  {
    const RunResult r = run_cli("beta --p 2 --n 2 \"(1, 1)\"");
    expect(r.exit_code == 0, "beta exit code");
    expect_eq(r.out, "3*[1]\n", "beta output");
  }
  {
    const RunResult r = run_cli("oracle --p 3 --n 5 \"5*[1]\"");
    expect(r.exit_code == 0, "oracle works beyond the formula range");
    expect(!r.out.empty() && r.out[0] == '(', "oracle prints a witt vector");
  }
  {
    const RunResult r = run_cli("alpha --p 2 --n 2 --e 2 \"[[0,1]] + [[1,0]]\"");
    expect(r.exit_code == 0, "alpha over F4");
  }
  {
    const RunResult r =
        run_cli("alpha --p 2 --n 2 --product e=1 --product \"e=2,mod=[1,1,1]\" "
                "\"[(1; [0,1])]\"");
    expect(r.exit_code == 0, "alpha over a product algebra");
  }
  {
    const RunResult r = run_cli("alpha --p 5 --n 2 --e 2 --mod \"[2,1,1]\" \"3*[[1,2]]\"");
    expect(r.exit_code == 0, "alpha with a user-supplied modulus");
  }
  {
    const RunResult r = run_cli("alpha --p 2 --n 2 --e 2 --mod \"[1,0,1]\" \"[1]\"");
    expect(r.exit_code == 1, "reducible user modulus is rejected");
    expect(r.err.find("reducible") != std::string::npos, "error names reducibility");
  }

  // --- exit codes ------------------------------------------------------------
  {
    const RunResult r = run_cli("alpha --p 3 --n 5 \"5*[1]\"");
    expect(r.exit_code == 2, "alpha beyond formula range exits 2");
    expect(r.err.find("p >= n") != std::string::npos, "error names the p >= n hypothesis");
  }
  {
    const RunResult r = run_cli("alpha --p 2 --n 3 \"2*[\"");
    expect(r.exit_code == 1, "syntax error exits 1");
    expect(r.err.find("offset 3") != std::string::npos, "error reports byte offset 3");
  }
  {
    const RunResult r = run_cli("alpha --p 2 --n 3 \"[7]\"");
    expect(r.exit_code == 1, "field element out of range exits 1");
  }
  {
    const RunResult r = run_cli("alpha --n 2 \"[1]\"");
    expect(r.exit_code == 1, "missing required --p exits 1");
  }
  {
    const RunResult r = run_cli("alpha --p 4 --n 2 \"[1]\"");
    expect(r.exit_code == 1, "non-prime characteristic exits 1");
  }
  {
    const RunResult r = run_cli("wittpoly --p 13 --n 4");
    expect(r.exit_code == 2, "wittpoly outside default bounds exits 2");
  }
  {
    const RunResult r = run_cli("nonsense");
    expect(r.exit_code == 1, "unknown subcommand exits 1");
  }

  // --- wittpoly ---------------------------------------------------------------
  {
    const RunResult r = run_cli("wittpoly --p 2 --n 2");
    expect(r.exit_code == 0, "wittpoly exit code");
    expect(r.out.find("S 1: 1 x1 ; 1 y1 ; -1 x0 y0\n") != std::string::npos,
           "wittpoly S_1 line for p=2");
  }
  {
    const RunResult r = run_cli("wittpoly --p 2 --n 1");
    expect_eq(r.out, "witt-poly v1 p=2 n=1\nS 0: 1 x0 ; 1 y0\nP 0: 1 x0 y0\n",
              "wittpoly level-1 exact output");
  }
  {
    const RunResult r = run_cli("wittpoly --p 5 --n 4 --limit 4");
    expect(r.exit_code == 0, "wittpoly --limit raises the bound");
  }
  {
    const auto cache = g_workdir / "cache";
    std::filesystem::remove_all(cache);
    const RunResult r =
        run_cli("wittpoly --p 2 --n 3", "WITT_CACHE_DIR=" + cache.string() + " ");
    expect(r.exit_code == 0, "wittpoly with WITT_CACHE_DIR");
    expect(std::filesystem::exists(cache / "witt-poly-v1-p2-n3.txt"),
           "cache file created from env var");
    const RunResult again =
        run_cli("wittpoly --p 2 --n 3", "WITT_CACHE_DIR=" + cache.string() + " ");
    expect_eq(again.out, r.out, "cached reload is bit-exact");
  }

  // --- JSON outputs validate against the shipped schema -------------------------
  {
    const RunResult r = run_cli("alpha --p 2 --n 3 --json \"3*[1]\"");
    expect(r.exit_code == 0, "alpha --json exit code");
    expect_schema(schema, r.out, "alpha --json");
    const json doc = json::parse(r.out);
    expect(doc["witt"]["components"] == json({"1", "1", "0"}), "alpha --json components");
  }
  {
    const RunResult r = run_cli("oracle --p 3 --n 4 --json \"5*[1]\"");
    expect_schema(schema, r.out, "oracle --json");
  }
  {
    const RunResult r = run_cli("delta --p 2 --json \"2*[1]\"");
    expect_schema(schema, r.out, "delta --json");
    expect(json::parse(r.out)["element"] == "-1*[1]", "delta --json element");
  }
  {
    const RunResult r = run_cli("beta --p 2 --json \"(1, 1)\"");
    expect_schema(schema, r.out, "beta --json");
  }

  // --- check ----------------------------------------------------------------------
  {
    const RunResult r = run_cli("check --samples 3 --seed 7 --json");
    expect(r.exit_code == 0, "check passes");
    expect_schema(schema, r.out, "check --json");
    const json doc = json::parse(r.out);
    expect(doc["all_passed"] == true, "check all_passed");
    expect(doc["seed"] == 7, "check echoes the seed");
  }
  {
    const RunResult r = run_cli("check --samples 3");
    expect(r.exit_code == 0, "check text mode passes");
    expect(r.out.find("seed:") != std::string::npos, "text report echoes the seed");
  }
  {
    const RunResult r = run_cli("check --samples 3 --mutate sign-flip-alpha3");
    expect(r.exit_code == 3, "mutated check exits 3");
    expect(r.out.find("[FAIL] witt/alpha3_sign_necessity") != std::string::npos,
           "mutated check names the failing property");
    expect(r.out.find("counterexample") != std::string::npos,
           "mutated check prints a counterexample");
  }
  {
    const RunResult r = run_cli("check --mutate no-such-thing");
    expect(r.exit_code == 1, "unknown mutation exits 1");
  }

  if (g_failures == 0) {
    std::cout << "cli tests: all passed\n";
    return 0;
  }
  std::cout << "cli tests: " << g_failures << " failures\n";
  return 1;
}
