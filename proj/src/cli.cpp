#include "spherebraid/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "spherebraid/free_group.hpp"
#include "spherebraid/garside.hpp"
#include "spherebraid/presentations.hpp"
#include "spherebraid/sphere_oracle.hpp"

namespace spherebraid {

std::string_view to_string(Command command) {
  switch (command) {
    case Command::verify: return "verify";
    case Command::normal_form: return "normal-form";
    case Command::act: return "act";
    case Command::selftest: return "selftest";
  }
  return "unknown";
}

std::string_view to_string(Action action) { return action == Action::sphere ? "sphere" : "disk"; }

void RunConfig::validate() const {
  if (from > to) throw UsageError("empty n-range: --from " + std::to_string(from) + " > --to " + std::to_string(to));
  if (from < 1) throw UsageError("n must be positive");
  if (budget.max_cosets <= 0 || budget.max_endo_letters == 0) throw UsageError("budgets must be positive");
  if (jobs < 1) throw UsageError("--jobs must be positive");
  if (pairs < 0 || max_length < 0) throw UsageError("--pairs and --max-length must be non-negative");
  if ((command == Command::normal_form || command == Command::act) && words.empty()) {
    throw UsageError(std::string(to_string(command)) + " needs at least one --word");
  }
}

Json RunConfig::to_json() const {
  Json j;
  j["command"] = to_string(command);
  if (command == Command::verify) j["claim"] = to_string(claim);
  j["from"] = from;
  j["to"] = to;
  if (command == Command::normal_form || command == Command::act) j["words"] = words;
  if (command == Command::act) j["action"] = to_string(action);
  if (command == Command::selftest) {
    j["pairs"] = pairs;
    j["max_length"] = max_length;
    j["seed"] = seed;
  }
  j["max_cosets"] = budget.max_cosets;
  j["max_endo_letters"] = budget.max_endo_letters;
  return j;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig config;
  CLI::App app{"Certified verification of quaternion and dicyclic subgroups of sphere braid groups", "sbverify"};
  app.require_subcommand(1);

  std::optional<int> single_n;
  std::optional<int> from;
  std::optional<int> to;
  std::string claim = "q8";
  std::string format = "text";
  std::string action = "sphere";

  auto common = [&](CLI::App* sub) {
    auto* n_opt = sub->add_option("--n", single_n, "number of strands");
    auto* from_opt = sub->add_option("--from", from, "first n of a range");
    auto* to_opt = sub->add_option("--to", to, "last n of a range");
    n_opt->excludes(from_opt)->excludes(to_opt);
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--max-cosets", config.budget.max_cosets, "coset enumeration budget");
    sub->add_option("--max-endo-letters", config.budget.max_endo_letters, "free group image budget");
    sub->add_option("--jobs", config.jobs, "values of n evaluated concurrently");
    sub->add_option("--out", config.out, "write the report to this file");
  };

  auto* verify = app.add_subcommand("verify", "run a verification plan");
  common(verify);
  verify->add_option("--claim", claim, "q8|dicyclic|odd-obstruction|torsion|background")
      ->check(CLI::IsMember({"q8", "dicyclic", "odd-obstruction", "torsion", "background"}));

  auto* nf = app.add_subcommand("normal-form", "Garside normal form of braid words");
  common(nf);
  nf->add_option("--word", config.words, "signed generator indices, e.g. \"1 2 -1\"")->required();

  auto* act = app.add_subcommand("act", "images of the free generators under a braid word");
  common(act);
  act->add_option("--word", config.words, "signed generator indices")->required();
  act->add_option("--action", action, "sphere or disk")->check(CLI::IsMember({"sphere", "disk"}));

  auto* selftest = app.add_subcommand("selftest", "cross-oracle property suite");
  common(selftest);
  selftest->add_option("--pairs", config.pairs, "random word pairs per n");
  selftest->add_option("--max-length", config.max_length, "maximum random word length");
  selftest->add_option("--seed", config.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (verify->parsed()) config.command = Command::verify;
  if (nf->parsed()) config.command = Command::normal_form;
  if (act->parsed()) config.command = Command::act;
  if (selftest->parsed()) config.command = Command::selftest;

  if (single_n) {
    config.from = config.to = *single_n;
  } else if (from) {
    config.from = *from;
    config.to = *to;
  } else {
    throw UsageError("one of --n or --from/--to is required");
  }
  config.claim = parse_claim(claim);
  config.format = format == "machine" ? OutputFormat::machine : OutputFormat::text;
  config.action = action == "disk" ? Action::disk : Action::sphere;
  config.validate();
  return config;
}

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads; results keep
// index order. The first exception (by index) is rethrown.
template <class T>
std::vector<T> ordered_map(int count, int jobs, const std::function<T(int)>& body) {
  std::vector<T> results(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        results[static_cast<std::size_t>(i)] = body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int threads = std::min(jobs, count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

bool expected(Verdict v) {
  return v == Verdict::verified || v == Verdict::refuted_realization || v == Verdict::not_applicable;
}

VerificationCertificate verify_or_skip(Claim claim, int n, const Budget& budget) {
  try {
    return verify(claim, n, budget);
  } catch (const RangeError& e) {
    VerificationCertificate cert;
    cert.claim = std::string(to_string(claim));
    cert.n = n;
    cert.verdict = Verdict::not_applicable;
    cert.flags["reason"] = e.what();
    return cert;
  }
}

Json document(const RunConfig& config, const char* key, Json items) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["config"] = config.to_json();
  doc[key] = std::move(items);
  return doc;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const int count = config.to - config.from + 1;
  const auto certs = ordered_map<VerificationCertificate>(
      count, config.jobs, [&](int i) { return verify_or_skip(config.claim, config.from + i, config.budget); });

  int code = exit_code::ok;
  for (const auto& cert : certs) {
    if (cert.verdict == Verdict::inconclusive) {
      code = std::max(code, exit_code::inconclusive);
    } else if (!expected(cert.verdict) && code == exit_code::ok) {
      code = exit_code::unexpected_verdict;
    }
  }
  if (config.format == OutputFormat::machine) {
    Json items = Json::array();
    for (const auto& cert : certs) items.push_back(cert.to_json());
    out << document(config, "certificates", std::move(items)).dump(2) << '\n';
  } else {
    for (const auto& cert : certs) out << cert.to_text() << '\n';
  }
  return code;
}

int run_normal_form(const RunConfig& config, std::ostream& out) {
  Json items = Json::array();
  for (int n = config.from; n <= config.to; ++n) {
    for (const auto& text : config.words) {
      const BraidWord w = parse_word(text, n);
      const GarsideNormalForm nf = normal_form(w);
      if (config.format == OutputFormat::machine) {
        Json factors = Json::array();
        for (const auto& f : nf.factors) factors.push_back(f.permutation().images());
        items.push_back({{"n", n}, {"word", format_word(w)}, {"delta_power", nf.delta_power},
                         {"factors", factors}, {"normal_form", nf.to_string()},
                         {"normal_form_word", format_word(nf.to_word())}});
      } else {
        out << "n=" << n << "  [" << format_word(w) << "]  " << nf.to_string() << '\n';
      }
    }
  }
  if (config.format == OutputFormat::machine) out << document(config, "results", std::move(items)).dump(2) << '\n';
  return exit_code::ok;
}

int run_act(const RunConfig& config, std::ostream& out) {
  Json items = Json::array();
  for (int n = config.from; n <= config.to; ++n) {
    for (const auto& text : config.words) {
      const BraidWord w = parse_word(text, n);
      const EndoOnBasis e =
          config.action == Action::sphere ? sphere_endo(w, config.budget) : artin_disk_endo(w, config.budget);
      if (config.format == OutputFormat::machine) {
        Json images = Json::array();
        for (const auto& image : e.images()) images.push_back(image.to_string());
        items.push_back({{"n", n}, {"word", format_word(w)}, {"action", to_string(config.action)},
                         {"images", images}, {"identity", e.is_identity()}});
      } else {
        out << "n=" << n << "  [" << format_word(w) << "]  " << to_string(config.action) << " action\n";
        for (int g = 1; g <= e.rank(); ++g) out << "  x" << g << " -> " << e.image(g).to_string() << '\n';
      }
    }
  }
  if (config.format == OutputFormat::machine) out << document(config, "results", std::move(items)).dump(2) << '\n';
  return exit_code::ok;
}

int run_selftest_command(const RunConfig& config, std::ostream& out) {
  const int count = config.to - config.from + 1;
  const auto reports = ordered_map<SelftestReport>(count, config.jobs, [&](int i) {
    const int n = config.from + i;
    return run_selftest(n, config.pairs, config.max_length, config.seed + static_cast<std::uint64_t>(n),
                        config.budget);
  });
  bool passed = true;
  Json items = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    if (config.format == OutputFormat::machine) {
      items.push_back(r.to_json());
    } else {
      out << "n=" << r.n << "  pairs " << r.pairs << " (" << r.equal_pairs << " equal)  engine mismatches "
          << r.engine_mismatches << "  relators " << r.relators << " (failures " << r.relator_failures
          << ")  substitution checks " << r.substitution_checks << " (mismatches " << r.substitution_mismatches
          << ")  " << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
  }
  if (config.format == OutputFormat::machine) out << document(config, "reports", std::move(items)).dump(2) << '\n';
  return passed ? exit_code::ok : exit_code::unexpected_verdict;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::verify: return run_verify(config, out);
      case Command::normal_form: return run_normal_form(config, out);
      case Command::act: return run_act(config, out);
      case Command::selftest: return run_selftest_command(config, out);
    }
  } catch (const ResourceExhausted& e) {
    err << "resource budget exhausted: " << e.what() << '\n';
    return exit_code::inconclusive;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal_error;
  }
  return exit_code::internal_error;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  if (!config) return exit_code::ok;
  if (config->out.empty()) return run(*config, out, err);

  std::ostringstream buffer;
  const int code = run(*config, buffer, err);
  std::ofstream file(config->out, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << config->out << '\n';
    return exit_code::internal_error;
  }
  file << buffer.str();
  return code;
}

BraidWord random_word(int n, int max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<int> letters(static_cast<std::size_t>(length(rng)));
  for (int& l : letters) l = positive(rng) ? index(rng) : -index(rng);
  return BraidWord(n, std::move(letters));
}

BraidWord insert_relation(const BraidWord& w, std::mt19937_64& rng) {
  const int n = w.strand_count();
  std::vector<int> relation;
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  const int i = index(rng);
  switch (kind(rng)) {
    case 0:
      relation = {i, -i};
      break;
    case 1:
      if (i + 1 <= n - 1) {
        relation = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
      } else {
        relation = {-i, i};
      }
      break;
    default: {
      const int j = index(rng);
      if (std::abs(i - j) >= 2) {
        relation = {i, j, -i, -j};
      } else {
        relation = {-i, i};
      }
    }
  }
  std::bernoulli_distribution invert(0.5);
  if (invert(rng)) relation = BraidWord(n, relation).inverse().letters();
  std::vector<int> letters = w.letters();
  std::uniform_int_distribution<std::size_t> where(0, letters.size());
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(where(rng)), relation.begin(), relation.end());
  return BraidWord(n, std::move(letters));
}

Json SelftestReport::to_json() const {
  return Json{{"n", n},
              {"pairs", pairs},
              {"equal_pairs", equal_pairs},
              {"engine_mismatches", engine_mismatches},
              {"relators", relators},
              {"relator_failures", relator_failures},
              {"substitution_checks", substitution_checks},
              {"substitution_mismatches", substitution_mismatches},
              {"passed", passed()}};
}

SelftestReport run_selftest(int n, int pairs, int max_length, std::uint64_t seed, const Budget& budget) {
  if (n < 2) throw RangeError("selftest needs n >= 2");
  SelftestReport report;
  report.n = n;
  std::mt19937_64 rng(seed);
  const int base_length = std::max(0, max_length - 6);
  for (int k = 0; k < pairs; ++k) {
    const bool built_equal = k % 2 == 0;
    BraidWord w = random_word(n, built_equal ? base_length : max_length, rng);
    BraidWord v = built_equal ? insert_relation(w, rng) : random_word(n, max_length, rng);
    if (built_equal && k % 4 == 0) std::swap(w, v);
    const bool garside = equal_Bn(w, v);
    const bool artin = eq_Bn(w, v, budget);
    ++report.pairs;
    if (built_equal) ++report.equal_pairs;
    if (garside != artin || (built_equal && !garside)) ++report.engine_mismatches;
  }
  if (n >= 3) {
    for (const auto& relator : presentation_library(PresentationName::sphere_braid, n).relators) {
      ++report.relators;
      if (!sphere_endo(BraidWord(n, relator), budget).is_identity()) ++report.relator_failures;
    }
    for (int k = 0; k < 50; ++k) {
      const BraidWord w = random_word(n, 12, rng);
      ++report.substitution_checks;
      if (!(normalize_outer(sphere_endo_by_substitution(w, budget), budget) == sphere_endo(w, budget))) {
        ++report.substitution_mismatches;
      }
    }
  }
  return report;
}

}  // namespace spherebraid
