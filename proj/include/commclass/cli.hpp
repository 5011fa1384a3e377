#pragma once

// Command implementations behind the `commclass` executable. Each command
// writes machine output to `out`, diagnostics to `err`, and returns the
// process exit code.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "commclass/coxeter.hpp"
#include "commclass/engine.hpp"

namespace commclass::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kMismatch = 2 };

/// Published class counts of the longest element for n = 1..10.
struct ReferenceTable {
  static constexpr std::array<std::string_view, 10> known_c{
      "1", "1", "2", "8", "62", "908", "24698", "1232944", "112018190", "18410581880"};

  static std::optional<std::string_view> lookup(Rank n) {
    if (n < 1 || n > static_cast<Rank>(known_c.size())) return std::nullopt;
    return known_c[static_cast<std::size_t>(n - 1)];
  }
};

/// The eight classes of the longest element of S_4, as printed (each class in
/// the printed order).
const std::vector<std::vector<std::string>>& figure_one_classes();

enum class Verification { match, mismatch, unknown_rank };
std::string_view to_string(Verification v);

struct RunReport {
  std::string command;
  Rank rank = 1;
  std::string result;  // decimal
  double elapsed_seconds = 0;
  int threads = 1;
  Verification status = Verification::unknown_rank;
  bool authoritative = true;

  nlohmann::ordered_json to_json() const;
  int exit_code() const;
};

enum class CountKind { reduced, classes };
enum class OutputFormat { text, json, csv };

OutputFormat parse_format(std::string_view name);

struct CountRequest {
  CountKind kind = CountKind::classes;
  Rank n = 1;
  std::optional<Permutation> perm;  // defaults to the longest element of rank n
  int threads = 1;
  std::optional<double> time_limit_seconds;
};

RunReport cmd_count(const CountRequest& request);

/// Oracle vs pruned search for ranks <= min(n_max, 6), reference table for
/// ranks <= min(n_max, 10). One pass/fail line per check.
int cmd_verify(Rank n_max, int threads, std::ostream& out);

/// Brute-force partition vs pruned search for the longest element of rank n
/// and, for n <= 5, every permutation of rank n.
int cmd_oracle_verify(Rank n, std::ostream& out, std::uint64_t budget = kDefaultOracleBudget);

/// One record per class, ordered by canonical word.
int cmd_list(const Permutation& w, bool with_members, OutputFormat format, std::ostream& out,
             std::uint64_t budget = kDefaultOracleBudget);

/// One reduced word per line, or a JSON array.
int cmd_enumerate_reduced(const Permutation& w, OutputFormat format, std::ostream& out);

nlohmann::ordered_json class_record(const CommutationClass& cls, bool with_members);

enum class RenderKind { heap, network, tiling };
RenderKind parse_render_kind(std::string_view name);

/// SVG text, or JSON geometry when coords is set.
std::string render_word(RenderKind kind, const Word& word, bool coords);

/// Writes one file per class of w0 of rank n, named by canonical word.
/// Returns the written paths in class order.
std::vector<std::filesystem::path> cmd_render_all(RenderKind kind, Rank n, const std::filesystem::path& outdir,
                                                  bool coords);

} // namespace commclass::cli
