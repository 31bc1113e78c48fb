// Command-line front end: peak sets, distances, witness constructions, and
// the exhaustive verification engine for signed permutations.
//
// Exit codes: 0 success / all checks pass, 2 usage or input error,
// 3 verification mismatch.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bperm/constructions.hpp"
#include "bperm/extremal.hpp"
#include "bperm/metrics.hpp"
#include "bperm/peaks.hpp"
#include "bperm/signed_permutation.hpp"

namespace {

using namespace bperm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string render_text_table(int n, const std::vector<ExtremalReport>& reports) {
  // Three reports (word, hamming, l_inf) per row label, in table order.
  std::ostringstream out;
  out << "Peak Set, n=" << n
      << "  |  Word min  Word max  |  Ham min  Ham max  |  l-inf min  l-inf max\n";
  for (size_t i = 0; i + 2 < reports.size(); i += 3) {
    const auto& word = reports[i];
    const auto& ham = reports[i + 1];
    const auto& linf = reports[i + 2];
    const std::string label = word.peak_set.has_value() ? word.peak_set->str() : "Overall";
    out << std::left << std::setw(14) << label << "|" << std::right << std::setw(10)
        << word.observed_min << std::setw(10) << word.observed_max << "  |" << std::setw(9)
        << ham.observed_min << std::setw(9) << ham.observed_max << "  |" << std::setw(11)
        << linf.observed_min << std::setw(11) << linf.observed_max << "\n";
  }
  return out.str();
}

int run_table(int n, const std::string& fmt, const std::string& output_path,
              const ScanOptions& opts) {
  const std::vector<ExtremalReport> reports = extremal_table(n, opts);
  std::string payload;
  if (fmt == "csv")
    payload = reports_to_csv(reports);
  else if (fmt == "json")
    payload = reports_to_json(n, reports);
  else
    payload = render_text_table(n, reports);

  if (output_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << output_path << "\n";
      return kExitUsage;
    }
    out << payload;
  }

  for (const ExtremalReport& r : reports) {
    if (!r.agrees) {
      std::cerr << "mismatch: n=" << r.n << " "
                << (r.peak_set.has_value() ? r.peak_set->str() : std::string("Overall")) << " "
                << to_string(r.metric) << ": observed (" << r.observed_min << ","
                << r.observed_max << ") predicted (" << r.predicted_min << "," << r.predicted_max
                << ")\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

int run_verify(int n, bool oracle, const ScanOptions& opts) {
  const VerifyReport report = verify(n, oracle, opts);
  for (const VerifyClause& clause : report.clauses) {
    if (clause.pass)
      std::cout << "PASS  " << clause.name << "\n";
    else
      std::cout << "FAIL  " << clause.name << ": " << clause.detail << "\n";
  }
  std::cout << (report.all_pass() ? "all clauses pass" : "verification failed") << " (n=" << n
            << ")\n";
  return report.all_pass() ? kExitOk : kExitMismatch;
}

int run_witness(int n, const std::string& peaks_text, MetricKind kind, const std::string& extreme) {
  const PeakSet s = PeakSet::parse(peaks_text, n);
  if (!is_admissible(s)) {
    std::cerr << "Inadmissible: peak set " << s.str() << " has consecutive entries\n";
    return kExitUsage;
  }
  PermutationPair pair = [&] {
    if (extreme == "max") return max_witnesses(s, kind);
    const MinWitnesses w = min_witnesses(s);
    return PermutationPair{w.base,
                           kind == MetricKind::l_inf ? w.linf_witness : w.hamming_word_witness};
  }();
  const int d = distance(kind, pair.first, pair.second);
  // Round-trip before printing: what we print must parse back to the pair.
  if (parse(format(pair.first)) != pair.first || parse(format(pair.second)) != pair.second)
    throw std::logic_error("witness round-trip failed");
  std::cout << format(pair.first) << "\n" << format(pair.second) << "\n" << d << "\n";
  return kExitOk;
}

int run_enumerate(int n, const std::string& peaks_text) {
  if (peaks_text.empty()) {
    GroupStream stream(n);
    while (auto sigma = stream.next()) std::cout << format(*sigma) << "\n";
  } else {
    ClassStream stream(PeakSet::parse(peaks_text, n));
    while (auto sigma = stream.next()) std::cout << format(*sigma) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed permutations of Coxeter type B: peak sets, metrics, extremal tables"};
  app.require_subcommand(1);

  std::string perm_text, perm2_text, metric_text = "word", format_text = "text";
  std::string peaks_text, extreme_text = "max", output_path;
  int n = 0, threads = 0;
  bool long_run = false, oracle = false;

  auto* c_peaks = app.add_subcommand("peaks", "print the peak set of a permutation");
  c_peaks->add_option("perm", perm_text, "one-line window, e.g. \"-5 2 -4 3 -1\"")->required();

  auto* c_dist = app.add_subcommand("dist", "distance between two permutations");
  c_dist->add_option("--metric", metric_text, "hamming | linf | word")->required();
  c_dist->add_option("perm1", perm_text)->required();
  c_dist->add_option("perm2", perm2_text)->required();

  auto* c_length = app.add_subcommand("length", "Coxeter length of a permutation");
  c_length->add_option("perm", perm_text)->required();

  auto* c_invert = app.add_subcommand("invert", "group inverse");
  c_invert->add_option("perm", perm_text)->required();

  auto* c_compose = app.add_subcommand("compose", "product tau*sigma (sigma applied first)");
  c_compose->add_option("tau", perm_text)->required();
  c_compose->add_option("sigma", perm2_text)->required();

  auto* c_table = app.add_subcommand("table", "brute-force extremal table per peak class");
  c_table->add_option("--n", n, "window size (3..5, or 6 with --long-run)")->required();
  c_table->add_option("--format", format_text, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  c_table->add_flag("--long-run", long_run, "allow the n=6 scan");
  c_table->add_option("--threads", threads, "worker threads (0 = all)");
  c_table->add_option("--output", output_path, "write the table to a file instead of stdout");

  auto* c_verify = app.add_subcommand("verify", "check the extremal theorems exhaustively");
  c_verify->add_option("--n", n, "window size (2..5, or 6 with --long-run)")->required();
  c_verify->add_flag("--oracle", oracle, "also check BFS word lengths against length_b");
  c_verify->add_flag("--long-run", long_run, "allow n=6 scans and the n=5 oracle");
  c_verify->add_option("--threads", threads, "worker threads (0 = all)");

  auto* c_witness = app.add_subcommand("witness", "constructive extremal witness pair");
  c_witness->add_option("--n", n, "window size")->required();
  c_witness->add_option("--peak-set", peaks_text, "e.g. \"{2,5}\" or \"{}\"")->required();
  c_witness->add_option("--metric", metric_text, "hamming | linf | word")->required();
  c_witness->add_option("--extreme", extreme_text, "min | max")
      ->required()
      ->check(CLI::IsMember({"min", "max"}));

  auto* c_enum = app.add_subcommand("enumerate", "stream S^B_n (or one peak class) in lex order");
  c_enum->add_option("--n", n, "window size (1..8)")->required();
  c_enum->add_option("--peak-set", peaks_text, "restrict to one peak class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_peaks) {
      std::cout << bperm::peak_set(bperm::parse(perm_text)).str() << "\n";
      return kExitOk;
    }
    if (*c_dist) {
      std::cout << bperm::distance(bperm::parse_metric(metric_text), bperm::parse(perm_text),
                                   bperm::parse(perm2_text))
                << "\n";
      return kExitOk;
    }
    if (*c_length) {
      std::cout << bperm::length_b(bperm::parse(perm_text)) << "\n";
      return kExitOk;
    }
    if (*c_invert) {
      std::cout << bperm::format(bperm::parse(perm_text).inverse()) << "\n";
      return kExitOk;
    }
    if (*c_compose) {
      std::cout << bperm::format(
                       bperm::compose(bperm::parse(perm_text), bperm::parse(perm2_text)))
                << "\n";
      return kExitOk;
    }

    const bperm::ScanOptions opts{long_run, threads};
    if (*c_table) return run_table(n, format_text, output_path, opts);
    if (*c_verify) {
      if (oracle && n > (long_run ? 5 : 4)) {
        std::cerr << "SizeCap: --oracle supports n <= 4 (n <= 5 with --long-run)\n";
        return kExitUsage;
      }
      return run_verify(n, oracle, opts);
    }
    if (*c_witness) return run_witness(n, peaks_text, bperm::parse_metric(metric_text), extreme_text);
    if (*c_enum) return run_enumerate(n, peaks_text);
  } catch (const bperm::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
