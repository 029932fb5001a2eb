// Command-line front end. Talks to the engine exclusively through the C
// API in weyl/weyl.h and renders the returned JSON reports.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "weyl/weyl.h"

namespace {

using nlohmann::json;

// exit codes: 0 pass, 1 verification failure, 2 usage error,
// 3 resource cap, 4 internal error
constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct CommonFlags {
  std::string format = "pretty";
  std::string primes;
  bool exact = false;
  int max_degree = -1;
  int truncation = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--primes", flags.primes, "Crosscheck primes, e.g. 2147483647,2147483629");
  cmd->add_flag("--exact", flags.exact, "Force exact rational elimination");
  cmd->add_option("--max-degree", flags.max_degree, "Total-degree safety cap (default 40)");
  cmd->add_option("--truncation", flags.truncation, "Truncation order for point multisets");
}

int parse_rational(const std::string& text, long long& num, long long& den) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      num = std::stoll(text);
      den = 1;
    } else {
      num = std::stoll(text.substr(0, slash));
      den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    return -1;
  }
  return den == 0 ? -1 : 0;
}

weyl_options* build_options(const CommonFlags& flags, std::string& err) {
  weyl_options* opts = weyl_options_new();
  if (!flags.primes.empty()) {
    auto comma = flags.primes.find(',');
    uint64_t p1 = 0, p2 = 0;
    try {
      p1 = std::stoull(flags.primes.substr(0, comma));
      p2 = comma == std::string::npos ? 0 : std::stoull(flags.primes.substr(comma + 1));
    } catch (const std::exception&) {
    }
    if (weyl_options_set_primes(opts, p1, p2) != WEYL_OK) {
      err = weyl_last_error();
      weyl_options_free(opts);
      return nullptr;
    }
  }
  weyl_options_set_exact(opts, flags.exact ? 1 : 0);
  if (flags.max_degree >= 0 &&
      weyl_options_set_max_total_degree(opts, flags.max_degree) != WEYL_OK) {
    err = weyl_last_error();
    weyl_options_free(opts);
    return nullptr;
  }
  if (flags.truncation >= 0 && weyl_options_set_truncation(opts, flags.truncation) != WEYL_OK) {
    err = weyl_last_error();
    weyl_options_free(opts);
    return nullptr;
  }
  return opts;
}

std::string join(const json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    if (v.is_string())
      out += v.get<std::string>();
    else
      out += v.dump();
  }
  return out;
}

void render_character(const json& p, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    os << "composition,weight,dim\n";
    for (const auto& e : p["character"])
      os << '"' << join(e["composition"], " ") << "\",\"" << join(e["weight"], " ") << "\","
         << e["dim"].get<std::string>() << "\n";
    return;
  }
  const json& in = p["inputs"];
  os << "local Weyl module character, n=" << in["n"] << " d=" << in["d"] << " r=" << in["r"];
  if (in.contains("points")) os << " points=(" << join(in["points"], ",") << ")";
  os << "\n";
  for (const auto& e : p["character"])
    os << "  (" << join(e["composition"], ",") << ")  weight (" << join(e["weight"], ",")
       << ")  dim " << e["dim"].get<std::string>() << "\n";
  os << "total " << p["total"].get<std::string>() << "\n";
  const json& prov = p["provenance"];
  os << "mode " << prov["mode"].get<std::string>() << ", primes " << join(prov["primes"], ",")
     << ", escalations " << prov["escalations"] << "\n";
}

void render_verify(const json& p, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    os << "case,pass\n";
    for (const auto& c : p["cases"])
      os << '"' << c["name"].get<std::string>() << "\"," << (c["pass"].get<bool>() ? 1 : 0)
         << "\n";
    return;
  }
  os << "suite " << p["suite"].get<std::string>() << "\n";
  for (const auto& c : p["cases"]) {
    os << (c["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << c["name"].get<std::string>();
    if (c.contains("lhs") && c["lhs"].is_string())
      os << "  [" << c["lhs"].get<std::string>() << " vs " << c["rhs"].get<std::string>() << "]";
    if (c.contains("match")) os << (c["match"].get<bool>() ? "  match" : "  MISMATCH");
    os << "\n";
    if (c.contains("table"))
      for (const auto& row : c["table"])
        os << "        c(" << row["serving"].dump()
           << ") = " << row["coefficient"].get<std::string>() << "\n";
  }
  if (p.contains("match"))
    os << (p["match"].get<bool>() ? "conjecture: match" : "conjecture: MISMATCH") << "\n";
  os << (p["passed"].get<bool>() ? "all cases passed" : "SOME CASES FAILED") << "\n";
}

void render_table(const json& p, const std::string& format, std::ostream& os) {
  bool has_values = !p["rows"].empty() && p["rows"][0].contains("values");
  if (format == "csv") {
    os << join(p["columns"], ",") << "\n";
    for (const auto& row : p["rows"]) {
      os << row["n"];
      if (has_values)
        os << ",\"" << join(row["values"], " ") << "\"";
      else
        os << "," << row["value"].get<std::string>();
      os << "\n";
    }
    return;
  }
  os << p["kind"].get<std::string>() << " table\n";
  for (const auto& row : p["rows"]) {
    os << "  n=" << row["n"] << ": ";
    if (has_values)
      os << join(row["values"], " ");
    else
      os << row["value"].get<std::string>();
    os << "\n";
  }
}

int emit(weyl_status status, weyl_report* report, const std::string& format) {
  if (status != WEYL_OK) {
    std::cerr << "error: " << weyl_last_error() << "\n";
    switch (status) {
      case WEYL_ERR_USAGE:
      case WEYL_ERR_UNSUPPORTED:
        return kExitUsage;
      case WEYL_ERR_RESOURCE:
        return kExitResource;
      default:
        return kExitInternal;
    }
  }
  json payload = json::parse(weyl_report_json(report));
  bool passed = weyl_report_passed(report) != 0;
  weyl_report_free(report);

  if (format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else {
    const std::string cmd = payload["command"].get<std::string>();
    if (cmd == "character")
      render_character(payload, format, std::cout);
    else if (cmd == "verify")
      render_verify(payload, format, std::cout);
    else
      render_table(payload, format, std::cout);
  }
  return passed ? kExitPass : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characters of local Weyl modules over current Lie algebras"};
  app.require_subcommand(1);

  int n = 0, d = 1, r = 1, m = -1;
  std::string points_arg, suite, kind;

  CommonFlags char_flags, verify_flags, table_flags;

  CLI::App* character = app.add_subcommand("character", "Compute a weight character");
  character->add_option("--n", n, "Highest weight multiple n")->required();
  character->add_option("--d", d, "Dimension of the underlying affine space");
  character->add_option("--r", r, "Rank: the Lie algebra is sl(r+1)");
  character->add_option("--points", points_arg,
                        "Comma-separated rational points on a line, e.g. 0,1,1/2");
  add_common(character, char_flags);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", suite,
                   "catalan | narayana | higher-catalan | three-way | tensor | martini | "
                   "chevalley | conjecture")
      ->required();
  verify->add_option("--n", n, "Case bound n")->default_val(-1);
  verify->add_option("--d", d, "Dimension d")->default_val(-1);
  verify->add_option("--r", r, "Rank parameter r")->default_val(-1);
  verify->add_option("--m", m, "Second martini parameter")->default_val(-1);
  add_common(verify, verify_flags);

  CLI::App* table = app.add_subcommand("table", "Print a closed-form table");
  table->add_option("kind", kind, "catalan | narayana | higher-catalan | hoggatt")->required();
  table->add_option("--n", n, "Row bound")->default_val(-1);
  table->add_option("--d", d, "Dimension d (hoggatt)")->default_val(-1);
  table->add_option("--r", r, "Rank r (higher-catalan)")->default_val(-1);
  add_common(table, table_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int unused = app.exit(e);
    (void)unused;
    return e.get_name() == "CallForHelp" ? kExitPass : kExitUsage;
  }

  weyl_report* report = nullptr;
  weyl_status status = WEYL_OK;
  std::string err;

  if (character->parsed()) {
    weyl_options* opts = build_options(char_flags, err);
    if (!opts) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    if (points_arg.empty()) {
      status = weyl_character_origin(n, d, r, opts, &report);
    } else if (d != 1) {
      std::cerr << "error: characters at point multisets are only supported for d = 1; "
                   "off-origin data in higher dimension reduces to the origin case\n";
      weyl_options_free(opts);
      return kExitUsage;
    } else {
      std::vector<long long> nums, dens;
      std::string token;
      std::stringstream ss(points_arg);
      while (std::getline(ss, token, ',')) {
        long long a = 0, b = 1;
        if (parse_rational(token, a, b) != 0) {
          std::cerr << "error: cannot parse point '" << token << "'\n";
          weyl_options_free(opts);
          return kExitUsage;
        }
        nums.push_back(a);
        dens.push_back(b);
      }
      status = weyl_character_points(nums.data(), dens.data(), nums.size(), r, opts, &report);
    }
    weyl_options_free(opts);
    return emit(status, report, char_flags.format);
  }

  if (verify->parsed()) {
    weyl_options* opts = build_options(verify_flags, err);
    if (!opts) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    status = weyl_verify(suite.c_str(), n, d, r, m, opts, &report);
    weyl_options_free(opts);
    return emit(status, report, verify_flags.format);
  }

  weyl_options* opts = build_options(table_flags, err);
  if (!opts) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  status = weyl_table(kind.c_str(), n, d, r, opts, &report);
  weyl_options_free(opts);
  return emit(status, report, table_flags.format);
}
