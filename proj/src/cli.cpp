#include "commclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "commclass/heap.hpp"
#include "commclass/reduced_words.hpp"
#include "commclass/representations.hpp"

namespace commclass::cli {

const std::vector<std::vector<std::string>>& figure_one_classes() {
  static const std::vector<std::vector<std::string>> classes{
      {"321323", "323123"},
      {"312312", "132312", "312132", "132132"},
      {"321232"},
      {"232123"},
      {"123121", "121321"},
      {"231231", "213231", "231213", "213213"},
      {"123212"},
      {"212321"},
  };
  return classes;
}

std::string_view to_string(Verification v) {
  switch (v) {
  case Verification::match: return "match";
  case Verification::mismatch: return "mismatch";
  case Verification::unknown_rank: return "unknown-rank";
  }
  return "unknown-rank";
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["rank"] = rank;
  j["result"] = result;
  j["elapsed_seconds"] = elapsed_seconds;
  j["threads"] = threads;
  j["status"] = std::string(to_string(status));
  j["authoritative"] = authoritative;
  return j;
}

int RunReport::exit_code() const {
  if (!authoritative) return kFailure;
  return status == Verification::mismatch ? kMismatch : kSuccess;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

RunReport cmd_count(const CountRequest& request) {
  const auto w = request.perm ? *request.perm : longest_element(request.n);
  const auto start = std::chrono::steady_clock::now();

  RunReport report;
  report.rank = w.rank();
  report.threads = request.threads;
  report.command = std::string("count ") + (request.kind == CountKind::classes ? "classes" : "reduced") +
                   " --n " + std::to_string(w.rank());
  if (request.perm) report.command += " --perm " + w.to_string();

  if (request.kind == CountKind::reduced) {
    report.result = to_decimal(w == longest_element(w.rank()) ? count_reduced_words_longest(w.rank())
                                                              : count_reduced_words(w));
  } else {
    CountOptions options;
    options.threads = request.threads;
    if (request.time_limit_seconds)
      options.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                     std::chrono::duration<double>(*request.time_limit_seconds));
    const auto counted = count_commutation_classes(w, options);
    report.result = to_decimal(counted.count);
    report.authoritative = counted.complete;
    const auto expected = ReferenceTable::lookup(w.rank());
    if (counted.complete && expected && w == longest_element(w.rank()))
      report.status = report.result == *expected ? Verification::match : Verification::mismatch;
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::multiset<BigCount> size_multiset(const std::vector<std::vector<Word>>& classes) {
  std::multiset<BigCount> sizes;
  for (const auto& c : classes) sizes.insert(BigCount(c.size()));
  return sizes;
}

bool matches_figure_one(const std::vector<std::vector<Word>>& classes) {
  std::set<std::set<std::string>> got, want;
  for (const auto& c : classes) {
    std::set<std::string> s;
    for (const auto& w : c) s.insert(w.to_string());
    got.insert(s);
  }
  for (const auto& c : figure_one_classes()) want.insert({c.begin(), c.end()});
  return got == want;
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

} // namespace

int cmd_verify(Rank n_max, int threads, std::ostream& out) {
  if (n_max < 1) throw std::invalid_argument("--n must be >= 1");
  bool all = true;
  for (Rank n = 1; n <= std::min<Rank>(n_max, 10); ++n) {
    const auto w0 = longest_element(n);
    const auto dfs = count_commutation_classes(w0, threads);
    if (n <= 6) {
      const auto oracle = partition_reduced_words(w0);
      const bool ok = dfs == BigCount(oracle.size());
      all = all && ok;
      out << "rank " << n << " oracle: partition " << oracle.size() << " vs search " << dfs << " ["
          << verdict(ok) << "]\n";
      if (n == 4) {
        const bool fig = matches_figure_one(oracle) &&
                         size_multiset(oracle) == std::multiset<BigCount>{1, 1, 1, 1, 2, 2, 4, 4};
        all = all && fig;
        out << "rank 4 class table: " << oracle.size() << " member sets vs printed table [" << verdict(fig)
            << "]\n";
      }
    }
    const auto expected = *ReferenceTable::lookup(n);
    const bool ok = to_decimal(dfs) == expected;
    all = all && ok;
    out << "rank " << n << " reference: " << dfs << " vs " << expected << " [" << verdict(ok) << "]\n";
  }
  if (n_max > 10) out << "ranks above 10 have no reference value; not verified\n";
  return all ? kSuccess : kMismatch;
}

int cmd_oracle_verify(Rank n, std::ostream& out, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  bool all = true;
  auto check = [&](const Permutation& w, bool verbose) {
    const auto oracle = partition_reduced_words(w, budget);
    const auto dfs = count_commutation_classes(w);
    const bool ok = dfs == BigCount(oracle.size());
    if (verbose || !ok)
      out << w << ": partition " << oracle.size() << " vs search " << dfs << " [" << verdict(ok) << "]\n";
    return ok;
  };
  all = check(longest_element(n), true);
  if (n <= 5) {
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = k + 1;
    std::size_t checked = 0, failed = 0;
    do {
      ++checked;
      if (!check(Permutation::from_one_line(values), false)) ++failed;
    } while (std::next_permutation(values.begin(), values.end()));
    all = all && failed == 0;
    out << "all " << checked << " permutations of rank " << n << ": " << failed << " mismatches ["
        << verdict(failed == 0) << "]\n";
  }
  return all ? kSuccess : kMismatch;
}

nlohmann::ordered_json class_record(const CommutationClass& cls, bool with_members) {
  nlohmann::ordered_json j;
  j["canonical"] = cls.canonical.to_string();
  j["size"] = to_decimal(cls.size);
  if (with_members) {
    auto& members = j["members"] = nlohmann::ordered_json::array();
    for (const auto& m : cls.members) members.push_back(m.to_string());
  }
  return j;
}

int cmd_list(const Permutation& w, bool with_members, OutputFormat format, std::ostream& out,
             std::uint64_t budget) {
  if (with_members) {
    const auto total = count_reduced_words(w);
    if (total > budget) throw BudgetExceeded(total, budget);
  }
  auto stream = enumerate_classes(w, with_members);
  if (format == OutputFormat::json) {
    auto records = nlohmann::ordered_json::array();
    while (auto cls = stream.next()) records.push_back(class_record(*cls, with_members));
    out << records.dump() << '\n';
    return kSuccess;
  }
  if (format == OutputFormat::csv) out << (with_members ? "canonical,size,members\n" : "canonical,size\n");
  while (auto cls = stream.next()) {
    const char sep = format == OutputFormat::csv ? ',' : ' ';
    out << cls->canonical << sep << cls->size;
    if (with_members) {
      out << sep;
      for (std::size_t k = 0; k < cls->members.size(); ++k)
        out << (k ? (format == OutputFormat::csv ? ";" : " ") : "") << cls->members[k];
    }
    out << '\n';
  }
  return kSuccess;
}

int cmd_enumerate_reduced(const Permutation& w, OutputFormat format, std::ostream& out) {
  auto stream = enumerate_reduced_words(w);
  if (format == OutputFormat::json) {
    // Streamed by hand so large outputs are never held in memory.
    out << '[';
    bool first = true;
    while (auto word = stream.next()) {
      out << (first ? "" : ",") << '"' << word->to_string() << '"';
      first = false;
    }
    out << "]\n";
    return kSuccess;
  }
  while (auto word = stream.next()) out << *word << '\n';
  return kSuccess;
}

RenderKind parse_render_kind(std::string_view name) {
  if (name == "heap") return RenderKind::heap;
  if (name == "network") return RenderKind::network;
  if (name == "tiling") return RenderKind::tiling;
  throw std::invalid_argument("unknown render kind: " + std::string(name));
}

std::string render_word(RenderKind kind, const Word& word, bool coords) {
  switch (kind) {
  case RenderKind::heap: {
    const auto heap = heap_of_word(word);
    return coords ? to_coords(heap).dump(2) + "\n" : render_svg(heap);
  }
  case RenderKind::network: {
    const auto diagram = wiring_diagram(word);
    return coords ? to_coords(diagram).dump(2) + "\n" : render_svg(diagram);
  }
  case RenderKind::tiling: {
    const auto tiling = rhombic_tiling(word);
    return coords ? to_coords(tiling).dump(2) + "\n" : render_svg(tiling);
  }
  }
  throw std::invalid_argument("unknown render kind");
}

std::vector<std::filesystem::path> cmd_render_all(RenderKind kind, Rank n, const std::filesystem::path& outdir,
                                                  bool coords) {
  std::filesystem::create_directories(outdir);
  std::vector<std::filesystem::path> written;
  ReducedWordStream canonical(longest_element(n), /*canonical_only=*/true);
  while (auto word = canonical.next()) {
    auto name = word->to_string();
    std::replace(name.begin(), name.end(), ',', '-');
    if (name.empty()) name = "empty";
    auto path = outdir / (name + (coords ? ".json" : ".svg"));
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << render_word(kind, *word, coords);
    written.push_back(std::move(path));
  }
  return written;
}

} // namespace commclass::cli
