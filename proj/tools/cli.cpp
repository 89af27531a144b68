#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pkgenus/diagram.hpp"
#include "pkgenus/energy.hpp"
#include "pkgenus/enumerate.hpp"
#include "pkgenus/errors.hpp"
#include "pkgenus/io.hpp"
#include "pkgenus/sampler.hpp"

namespace pkgenus::cli {

namespace {

struct SampleOptions {
  int edges = -1;
  int length = -1;
  int genus = 0;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json = false;
  std::string params;
};

// Runs job(begin, end, worker) on `threads` contiguous blocks of [0, count)
// and rethrows the first failure.
template <class Job>
void parallel_blocks(std::uint64_t count, unsigned threads, Job job) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (threads == 1) {
    job(0, count, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = count * t / threads;
    const std::uint64_t end = count * (t + 1) / threads;
    pool.emplace_back([&, begin, end, t] {
      try {
        job(begin, end, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Sample i always uses substream i of the seed, so output does not depend
// on the thread count.
template <class Draw>
void emit_samples(const SampleOptions& o, std::ostream& out, Draw draw) {
  std::vector<std::string> lines(o.count);
  parallel_blocks(o.count, o.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomSource rng(o.seed, i);
      DiagramRecord r{draw(rng), {}, {}, {}, {}};
      if (o.json) {
        r.index = i;
        r.seed = o.seed;
        r.genus = genus_of_diagram(r.diagram).genus;
        lines[i] = to_json(r);
      } else {
        lines[i] = format_diagram(r.diagram);
      }
    }
  });
  for (const auto& l : lines) out << l << '\n';
}

void add_sample_flags(CLI::App* cmd, SampleOptions& o) {
  cmd->add_option("--count,-N", o.count, "number of samples")->capture_default_str();
  cmd->add_option("--seed,-s", o.seed, "random seed")->capture_default_str();
  cmd->add_option("--threads,-t", o.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--json", o.json, "one JSON object per line");
}

int do_count(const SampleOptions& o, bool breakdown, std::ostream& out) {
  if (o.genus < 0) throw PreconditionError("genus must be non-negative");
  if (o.edges >= 0) {
    if (2 * o.genus > o.edges) throw InfeasibleError("no map with this genus has that few edges");
    out << epsilon(o.genus, o.edges) << '\n';
    return kSuccess;
  }
  if (o.length < 0) throw PreconditionError("pass --edges or --length");
  const mpz_class total = delta_total(o.genus, o.length);
  if (total == 0) throw InfeasibleError("no diagram of this genus on that many vertices");
  if (breakdown) {
    for (int n = 2 * o.genus; 2 * n <= o.length; ++n) out << "n=" << n << '\t' << delta(o.genus, o.length, n) << '\n';
    out << "total\t" << total << '\n';
  } else {
    out << total << '\n';
  }
  return kSuccess;
}

int do_genus(const std::string& input, bool json, std::ostream& out) {
  std::vector<DiagramRecord> records;
  if (input == "-") {
    records = read_records(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open '" + input + "'", 0);
    records = read_records(in);
  }
  for (DiagramRecord& r : records) {
    const GenusResult g = genus_of_diagram(r.diagram);
    r.genus = g.genus;
    r.boundaries = g.boundary_count;
    out << (json ? to_json(r) : format_record(r)) << '\n';
  }
  return kSuccess;
}

int do_stats_loops(const SampleOptions& o, std::ostream& out) {
  if (o.edges < 0) throw PreconditionError("--edges is required");
  using Histogram = std::map<std::pair<int, int>, std::uint64_t>;
  const unsigned workers = std::max(1u, o.threads);
  std::vector<Histogram> partial(workers);
  parallel_blocks(o.count, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned t) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomSource rng(o.seed, i);
      for (const Loop& l : classify_loops(uniform_matching(o.edges, o.genus, rng))) {
        if (l.kind != LoopClass::Root) ++partial[t][{static_cast<int>(l.kind), l.size()}];
      }
    }
  });
  Histogram all;
  std::map<int, std::uint64_t> per_class;
  for (const auto& h : partial) {
    for (const auto& [key, c] : h) {
      all[key] += c;
      per_class[key.first] += c;
    }
  }
  out << "class\tsize\tcount\tfrequency\n";
  for (const auto& [key, c] : all) {
    out << to_string(static_cast<LoopClass>(key.first)) << '\t' << key.second << '\t' << c << '\t'
        << static_cast<double>(c) / static_cast<double>(per_class[key.first]) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-filtered enumeration and sampling of RNA-like diagrams", "pkgenus"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  SampleOptions o;
  bool breakdown = false;
  auto* count = app.add_subcommand("count", "exact numbers of maps or diagrams of a given genus");
  auto* count_edges = count->add_option("--edges,-n", o.edges, "edges of a one-face map (arcs of a matching)");
  count->add_option("--length,-l", o.length, "backbone length of a diagram")->excludes(count_edges);
  count->add_option("--genus,-g", o.genus, "genus")->required();
  count->add_flag("--breakdown", breakdown, "per arc count, for --length");

  auto* sample = app.add_subcommand("sample", "uniform or energy-weighted random structures");
  sample->require_subcommand(1);
  auto* s_matching = sample->add_subcommand("matching", "uniform perfect matching of given genus");
  s_matching->add_option("--edges,-n", o.edges, "arcs")->required();
  s_matching->add_option("--genus,-g", o.genus, "genus")->required();
  add_sample_flags(s_matching, o);
  auto* s_diagram = sample->add_subcommand("diagram", "uniform diagram of given genus and length");
  s_diagram->add_option("--length,-l", o.length, "backbone length")->required();
  s_diagram->add_option("--genus,-g", o.genus, "genus")->required();
  add_sample_flags(s_diagram, o);
  auto* s_energy = sample->add_subcommand("energy1", "genus-1 diagram weighted by exp(eta)");
  s_energy->add_option("--length,-l", o.length, "backbone length")->required();
  s_energy->add_option("--params,-p", o.params, "key = value file (b, Lhp, Lint, Lmul, Lpk1); zeros if absent");
  add_sample_flags(s_energy, o);

  std::string input = "-";
  bool genus_json = false;
  auto* genus = app.add_subcommand("genus", "annotate diagrams with genus and boundary count");
  genus->add_option("input", input, "arc-list or JSON lines; '-' for stdin")->capture_default_str();
  genus->add_flag("--json", genus_json, "JSON output");

  auto* stats = app.add_subcommand("stats", "statistics over uniform samples");
  stats->require_subcommand(1);
  auto* loops = stats->add_subcommand("loops", "loop class and size histogram (TSV)");
  loops->add_option("--edges,-n", o.edges, "arcs")->required();
  loops->add_option("--genus,-g", o.genus, "genus")->required();
  loops->add_option("--count,-N", o.count, "number of samples")->capture_default_str();
  loops->add_option("--seed,-s", o.seed, "random seed")->capture_default_str();
  loops->add_option("--threads,-t", o.threads, "worker threads")->check(CLI::PositiveNumber);

  int max_edges = 6;
  int samples = 20000;
  auto* verify_cmd = app.add_subcommand("verify", "brute-force checks of the library");
  verify_cmd->add_option("--max-edges,-k", max_edges, "largest exhaustive size")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  verify_cmd->add_option("--samples,-N", samples, "samples for the uniformity test")
      ->check(CLI::Range(1000, 100000000))
      ->capture_default_str();
  verify_cmd->add_option("--seed,-s", o.seed, "random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (count->parsed()) return do_count(o, breakdown, out);
    if (s_matching->parsed()) {
      if (o.genus < 0 || 2 * o.genus > o.edges) throw InfeasibleError("need 0 <= 2*genus <= edges");
      emit_samples(o, out, [&](RandomSource& rng) { return uniform_matching(o.edges, o.genus, rng); });
      return kSuccess;
    }
    if (s_diagram->parsed()) {
      if (o.genus < 0) throw PreconditionError("genus must be non-negative");
      arcs_distribution(o.length, o.genus);  // fail before spawning workers
      emit_samples(o, out, [&](RandomSource& rng) { return uniform_diagram(o.length, o.genus, rng); });
      return kSuccess;
    }
    if (s_energy->parsed()) {
      if (o.length < 4) throw InfeasibleError("genus 1 needs at least four vertices");
      const EnergyParams p = o.params.empty() ? EnergyParams{} : load_params(o.params);
      const PartitionTables tables = build_partitions(o.length / 2, p);
      emit_samples(o, out, [&](RandomSource& rng) { return sample_genus1(o.length, tables, rng); });
      return kSuccess;
    }
    if (genus->parsed()) return do_genus(input, genus_json, out);
    if (loops->parsed()) {
      if (o.genus < 0 || 2 * o.genus > o.edges) throw InfeasibleError("need 0 <= 2*genus <= edges");
      return do_stats_loops(o, out);
    }
    if (verify_cmd->parsed()) return verify(max_edges, samples, o.seed, out);
  } catch (const ParseError& e) {
    err << "pkgenus: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "pkgenus: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "pkgenus: infeasible: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pkgenus::cli
