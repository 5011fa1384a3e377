// commclass: count, enumerate and draw commutation classes of reduced words
// in the symmetric group.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "commclass/cli.hpp"

using namespace commclass;

namespace {

Permutation target(Rank n, const std::string& perm_text) {
  if (!perm_text.empty()) return parse_permutation(perm_text);
  return longest_element(n);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words and commutation classes in the symmetric group"};
  app.require_subcommand(1);

  int threads = 1;
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads")->envname("COMMCLASS_THREADS")->check(CLI::PositiveNumber);
  };

  // count
  std::string count_kind;
  Rank n = 1;
  std::string perm_text;
  double time_limit = 0;
  bool json = false;
  auto* count = app.add_subcommand("count", "count reduced words or commutation classes");
  count->add_option("kind", count_kind, "reduced | classes")->required()->check(CLI::IsMember({"reduced", "classes"}));
  count->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  count->add_option("--perm", perm_text, "permutation in one-line notation, e.g. \"[2,1,4,3]\"");
  count->add_option("--time-limit", time_limit, "abort after this many seconds")->check(CLI::PositiveNumber);
  count->add_flag("--json", json, "print the run report as JSON");
  add_threads(count);

  // enumerate / list
  std::string enum_kind;
  bool members = false;
  std::string format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "enumerate reduced words or classes");
  enumerate->add_option("kind", enum_kind, "reduced | classes")->required()->check(CLI::IsMember({"reduced", "classes"}));
  enumerate->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  enumerate->add_option("--perm", perm_text, "permutation in one-line notation");
  enumerate->add_flag("--members", members, "list every member of each class");
  enumerate->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* list = app.add_subcommand("list", "list commutation classes");
  list->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  list->add_option("--perm", perm_text, "permutation in one-line notation");
  list->add_flag("--members", members, "list every member of each class");
  list->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // render
  std::string render_kind = "heap";
  std::string word_text;
  std::string output;
  std::string outdir = ".";
  bool all = false;
  bool coords = false;
  auto* render = app.add_subcommand("render", "draw heaps, sorting networks or rhombic tilings");
  render->add_option("--kind", render_kind, "heap | network | tiling")->check(CLI::IsMember({"heap", "network", "tiling"}));
  render->add_option("--word", word_text, "reduced word, e.g. 321323");
  render->add_option("--n", n, "rank (inferred from the word when omitted)")->check(CLI::PositiveNumber);
  render->add_option("-o,--output", output, "output file (stdout when omitted)");
  render->add_flag("--all", all, "render one file per class of the longest element");
  render->add_option("--outdir", outdir, "directory for --all");
  render->add_flag("--coords", coords, "emit JSON geometry instead of SVG");

  // verify / oracle
  auto* verify = app.add_subcommand("verify", "check counts against the brute-force oracle and known values");
  verify->add_option("--n", n, "largest rank to check")->required()->check(CLI::PositiveNumber);
  add_threads(verify);

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  auto* oracle_verify = oracle->add_subcommand("verify", "diff the brute-force partition against the pruned search");
  oracle_verify->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kFailure;
  }

  try {
    if (count->parsed()) {
      cli::CountRequest request;
      request.kind = count_kind == "reduced" ? cli::CountKind::reduced : cli::CountKind::classes;
      request.n = n;
      if (!perm_text.empty()) request.perm = parse_permutation(perm_text);
      request.threads = threads;
      if (time_limit > 0) request.time_limit_seconds = time_limit;
      const auto report = cli::cmd_count(request);
      if (json)
        std::cout << report.to_json().dump() << '\n';
      else
        std::cout << report.result << '\n';
      std::cerr << report.command << ": " << report.result << " (" << cli::to_string(report.status) << ", "
                << report.elapsed_seconds << " s, " << report.threads << " threads"
                << (report.authoritative ? "" : ", time limit reached: partial count") << ")\n";
      return report.exit_code();
    }
    if (enumerate->parsed()) {
      const auto w = target(n, perm_text);
      if (enum_kind == "reduced") return cli::cmd_enumerate_reduced(w, cli::parse_format(format), std::cout);
      return cli::cmd_list(w, members, cli::parse_format(format), std::cout);
    }
    if (list->parsed()) return cli::cmd_list(target(n, perm_text), members, cli::parse_format(format), std::cout);
    if (render->parsed()) {
      const auto kind = cli::parse_render_kind(render_kind);
      if (all) {
        const auto files = cli::cmd_render_all(kind, n, outdir, coords);
        for (const auto& f : files) std::cout << f.string() << '\n';
        return cli::kSuccess;
      }
      if (word_text.empty()) {
        std::cerr << "render: --word or --all is required\n";
        return cli::kFailure;
      }
      const auto rank = render->count("--n") ? std::optional<Rank>(n) : std::nullopt;
      const auto word = parse_word(word_text, rank);
      if (!is_reduced(word)) {
        std::cerr << "render: " << word << " is not a reduced word\n";
        return cli::kFailure;
      }
      const auto text = cli::render_word(kind, word, coords);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
          std::cerr << "render: cannot write " << output << '\n';
          return cli::kFailure;
        }
        file << text;
      }
      return cli::kSuccess;
    }
    if (verify->parsed()) return cli::cmd_verify(n, threads, std::cout);
    if (oracle_verify->parsed()) return cli::cmd_oracle_verify(n, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kFailure;
  }
  return cli::kFailure;
}
