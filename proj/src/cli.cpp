#include "gibsum/cli.hpp"

#include <cctype>
#include <charconv>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "gibsum/bench.hpp"
#include "gibsum/errors.hpp"
#include "gibsum/report_io.hpp"

namespace gibsum::cli {

Index parse_index(const std::string& text) {
  Index value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw std::invalid_argument("not a machine-range integer: '" + text + "'");
  }
  return value;
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Index v = parse_index(text);
    return {v, v};
  }
  const IntRange range{parse_index(text.substr(0, dots)), parse_index(text.substr(dots + 2))};
  if (range.lo > range.hi) throw std::invalid_argument("empty range '" + text + "'");
  return range;
}

std::vector<SequenceSpec> parse_seeds(const std::string& text) {
  std::vector<SequenceSpec> seeds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = std::min(text.find(';', start), text.size());
    const std::string pair = text.substr(start, stop - start);
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("seed pair must be 'g0,g1', got '" + pair + "'");
    }
    seeds.emplace_back(parse_int(pair.substr(0, comma)), parse_int(pair.substr(comma + 1)));
    start = stop + 1;
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

namespace {

// Value-taking flags whose values may start with '-'.
const std::set<std::string>& signed_flags() {
  static const std::set<std::string> flags = {"--g0", "--g1", "--t", "--n", "--t-range",
                                              "--n-range"};
  return flags;
}

// "--t -5..5" -> "--t=-5..5", so negative values are never mistaken for flags.
std::vector<std::string> join_signed_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (signed_flags().count(args[i]) && i + 1 < args.size() && args[i + 1].size() > 1 &&
        args[i + 1][0] == '-' && (std::isdigit(static_cast<unsigned char>(args[i + 1][1])))) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

struct Options {
  std::string format = "json";
  std::string identity;
  std::string g0 = "0";
  std::string g1 = "1";
  std::string t = "0";
  std::string n;
  std::string t_range;
  std::string n_range;
  std::string seeds = "0,1";
  std::string method = "closed";
  bool force_oracle = false;
  int runs = 5;
};

void print_report(const VerificationReport& report, const std::string& format, std::ostream& out,
                  bool with_match = true) {
  if (format == "tsv") {
    std::string row = to_tsv_row(report);
    if (!with_match) {
      // Blank the match column.
      auto pos = row.rfind('\t');
      auto prev = row.rfind('\t', pos - 1);
      row = row.substr(0, prev + 1) + row.substr(pos);
    }
    out << row << '\n';
  } else {
    auto j = to_json(report);
    if (!with_match) j["match"] = nullptr;
    out << j.dump() << '\n';
  }
}

int cmd_list(const Options& opt, std::ostream& out) {
  if (opt.format == "tsv") {
    out << identity_tsv_header() << '\n';
    for (const auto& desc : registry()) out << to_tsv_row(desc) << '\n';
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& desc : registry()) rows.push_back(to_json(desc));
    out << rows.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_eval(const Options& opt, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const IdentityDescriptor& desc = find_identity(opt.identity);
  if (opt.n.empty()) throw std::invalid_argument("eval: --n is required");
  const SequenceSpec requested(parse_int(opt.g0), parse_int(opt.g1));
  const Index t = parse_index(opt.t);
  const Index n = parse_index(opt.n);
  if (desc.seed_fixed() && (sub.count("--g0") || sub.count("--g1"))) {
    err << "warning: " << desc.id << " has fixed seeds; --g0/--g1 ignored\n";
  }
  if (desc.fixed_t && sub.count("--t")) {
    err << "warning: " << desc.id << " is anchored at t=" << *desc.fixed_t << "; --t ignored\n";
  }
  const SequenceSpec spec = desc.effective_spec(requested);
  const ShiftedRange r{desc.effective_t(t), n};

  VerificationReport report = make_report(desc.id, spec, r.t, r.n);
  std::optional<Ratio> closed, oracle;
  if (opt.method != "oracle") closed = evaluate_closed(desc, spec, r);
  if (opt.method != "closed") oracle = evaluate_oracle(desc, spec, r);
  if (closed) report.closed = closed->to_string();
  if (oracle) report.oracle = oracle->to_string();
  const bool both = closed && oracle;
  report.match = both && *closed == *oracle;

  if (opt.format == "tsv") out << tsv_header() << '\n';
  print_report(report, opt.format, out, both);
  if (both && !report.match) return kExitMismatch;
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string n_text = !opt.n_range.empty() ? opt.n_range : opt.n;
  if (n_text.empty()) throw std::invalid_argument("verify: --n range is required");
  GridSpec grid{parse_seeds(opt.seeds),
                parse_range(!opt.t_range.empty() ? opt.t_range : opt.t), parse_range(n_text)};

  std::vector<std::string> ids;
  if (opt.identity == "all") {
    for (const auto& desc : registry()) ids.push_back(desc.id);
  } else {
    ids.push_back(find_identity(opt.identity).id);
  }

  if (opt.format == "tsv") out << tsv_header() << '\n';
  std::size_t pass = 0;
  std::size_t fail = 0;
  for (const auto& id : ids) {
    for (const auto& report : sweep(id, grid)) {
      print_report(report, opt.format, out);
      (report.match ? pass : fail)++;
    }
  }
  err << "verify: " << (pass + fail) << " points, " << pass << " pass, " << fail << " fail\n";
  return fail == 0 ? kExitOk : kExitMismatch;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const IdentityDescriptor& desc = find_identity(opt.identity);
  if (opt.n.empty()) throw std::invalid_argument("bench: --n is required");
  const Index n = parse_index(opt.n);
  if (n < 1) throw std::invalid_argument("bench: --n must be >= 1");
  if (opt.runs < 1) throw std::invalid_argument("bench: --runs must be >= 1");
  const SequenceSpec spec = desc.effective_spec(SequenceSpec(parse_int(opt.g0), parse_int(opt.g1)));
  const ShiftedRange r{desc.effective_t(parse_index(opt.t)), n};
  const bool with_oracle = opt.force_oracle || n <= kBenchAutoOracleLimit;
  const BenchResult res = run_bench(desc, spec, r, opt.runs, with_oracle);

  auto opt_num = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["identity"] = desc.id;
  j["g0"] = to_string(spec.g0());
  j["g1"] = to_string(spec.g1());
  j["t"] = r.t;
  j["n"] = r.n;
  j["runs"] = opt.runs;
  j["closed_seconds"] = res.closed_seconds;
  j["oracle_seconds"] = opt_num(res.oracle_seconds);
  j["digits"] = res.digits;
  j["leading_digits"] = res.leading_digits;
  j["match"] = res.match ? nlohmann::ordered_json(*res.match) : nlohmann::ordered_json(nullptr);

  if (opt.format == "tsv") {
    bool first = true;
    for (const auto& [key, _] : j.items()) {
      out << (first ? "" : "\t") << key;
      first = false;
    }
    out << '\n';
    first = true;
    for (const auto& [_, value] : j.items()) {
      out << (first ? "" : "\t") << (value.is_string() ? value.get<std::string>()
                                                        : value.is_null() ? "" : value.dump());
      first = false;
    }
    out << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return res.match.value_or(true) ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact closed-form summation identities for generalized Fibonacci sequences",
               "gibsum"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* list = app.add_subcommand("list", "List registered identities");
  add_format(list);

  auto* eval = app.add_subcommand("eval", "Evaluate one identity at (g0, g1, t, n)");
  eval->add_option("identity", opt.identity, "Identity id")->required();
  eval->add_option("--g0", opt.g0, "Seed G0");
  eval->add_option("--g1", opt.g1, "Seed G1");
  eval->add_option("--t", opt.t, "Index shift");
  eval->add_option("--n", opt.n, "Summation length");
  eval->add_option("--method", opt.method, "closed | oracle | both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  add_format(eval);

  auto* verify = app.add_subcommand("verify", "Compare closed forms with the oracle over a grid");
  verify->add_option("identity", opt.identity, "Identity id or 'all'")->required();
  verify->add_option("--seeds", opt.seeds, "Seed pairs 'g0,g1;g0,g1'");
  verify->add_option("--t", opt.t, "Shift range a..b");
  verify->add_option("--t-range", opt.t_range, "Shift range a..b");
  verify->add_option("--n", opt.n, "Length range a..b");
  verify->add_option("--n-range", opt.n_range, "Length range a..b");
  add_format(verify);

  auto* bench = app.add_subcommand("bench", "Time closed-form evaluation against the oracle");
  bench->add_option("identity", opt.identity, "Identity id")->required();
  bench->add_option("--g0", opt.g0, "Seed G0");
  bench->add_option("--g1", opt.g1, "Seed G1");
  bench->add_option("--t", opt.t, "Index shift");
  bench->add_option("--n", opt.n, "Summation length (>= 1)");
  bench->add_option("--runs", opt.runs, "Timed repetitions; the median is reported");
  bench->add_flag("--force-oracle", opt.force_oracle,
                  "Run the oracle even above the automatic limit");
  add_format(bench);

  std::vector<std::string> argv_storage{"gibsum"};
  for (auto& a : join_signed_values(args)) argv_storage.push_back(std::move(a));
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*list) return cmd_list(opt, out);
    if (*eval) return cmd_eval(opt, *eval, out, err);
    if (*verify) return cmd_verify(opt, out, err);
    if (*bench) return cmd_bench(opt, out);
  } catch (const ZeroDenominatorError& e) {
    err << "error: zero-denominator: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IntegralityError& e) {
    err << "error: integrality violation: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    // DomainError, UnknownIdentityError and malformed numbers.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gibsum::cli
