#ifndef MULTITREE_CLI_HPP
#define MULTITREE_CLI_HPP

// Command-line front end: count, table, verify, enumerate.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
// Data goes to the output stream, diagnostics to the error stream.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "code.hpp"
#include "dp.hpp"
#include "io.hpp"
#include "oracle.hpp"

namespace multitree::cli {

enum class Command { Count, Table, Verify, Enumerate };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::Count;
  Size n = 1, s = 0, m = 0;
  Size maxN = 1, maxS = 0, maxM = 0;
  Format format = Format::Csv;
  std::optional<std::string> out;
  std::optional<std::string> memoFile;
  bool noMemo = false;
  bool emitCodes = false;
};

struct ParseOutcome {
  std::optional<CliConfig> config;
  int exitCode = kExitOk;  // meaningful when config is empty
};

/// Parses argv (without the program name). Help and usage messages go to
/// `out` / `err`.
inline ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                               std::ostream& err) {
  CLI::App app{"Count rooted tree-like multigraphs by vertices, self-loops and multiple edges",
               "multitree"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string memoFile;
  std::string format = "csv";
  std::string outPath;
  app.add_option("--memo-file", memoFile, "Load memo snapshot if present, save it afterwards");
  app.add_flag("--no-memo", cfg.noMemo, "Disable the in-memory memo table");

  auto* count = app.add_subcommand("count", "Print the number of structures with (n, s, m)");
  count->add_option("n", cfg.n)->required();
  count->add_option("s", cfg.s)->required();
  count->add_option("m", cfg.m)->required();

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--max-n", cfg.maxN)->required();
    sub->add_option("--max-s", cfg.maxS)->required();
    sub->add_option("--max-m", cfg.maxM)->required();
  };
  auto* table = app.add_subcommand("table", "Emit the count grid");
  add_grid(table);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", outPath, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Compare the DP against brute-force enumeration");
  add_grid(verify);

  auto* enumerate = app.add_subcommand("enumerate", "Brute-force count, optionally with codes");
  enumerate->add_option("n", cfg.n)->required();
  enumerate->add_option("s", cfg.s)->required();
  enumerate->add_option("m", cfg.m)->required();
  enumerate->add_flag("--codes", cfg.emitCodes, "Print one canonical code per line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }

  if (*count) cfg.command = Command::Count;
  if (*table) cfg.command = Command::Table;
  if (*verify) cfg.command = Command::Verify;
  if (*enumerate) cfg.command = Command::Enumerate;
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  if (!outPath.empty()) cfg.out = outPath;
  if (!memoFile.empty()) cfg.memoFile = memoFile;
  return {cfg, kExitOk};
}

namespace detail {

inline bool write_output(const CliConfig& cfg, const std::string& data, std::ostream& out,
                         std::ostream& err) {
  if (!cfg.out) {
    out << data;
    return true;
  }
  std::ofstream file(*cfg.out, std::ios::binary);
  file << data;
  if (!file) {
    err << "error: cannot write " << *cfg.out << '\n';
    return false;
  }
  return true;
}

}  // namespace detail

inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool needsN = cfg.command == Command::Count || cfg.command == Command::Enumerate;
  if ((needsN && cfg.n == 0) || (!needsN && cfg.maxN == 0)) {
    err << "error: the number of vertices must be at least 1\n";
    return kExitUsage;
  }

  CountTable table;
  const bool useMemoFile = cfg.memoFile && !cfg.noMemo;
  if (useMemoFile && std::filesystem::exists(*cfg.memoFile)) {
    std::ifstream in(*cfg.memoFile, std::ios::binary);
    try {
      table = load_memo(in);
    } catch (const MemoFormatError& e) {
      err << "error: " << *cfg.memoFile << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  CountTable* memo = cfg.noMemo ? nullptr : &table;

  int status = kExitOk;
  switch (cfg.command) {
    case Command::Count:
      out << to_decimal(count_rooted(cfg.n, cfg.s, cfg.m, memo)) << '\n';
      break;
    case Command::Table: {
      const CountGrid grid = build_grid(cfg.maxN, cfg.maxS, cfg.maxM, [&](Size n, Size s, Size m) {
        return count_rooted(n, s, m, memo);
      });
      const std::string data = cfg.format == Format::Json ? emit_json(grid) : emit_csv(grid);
      if (!detail::write_output(cfg, data, out, err)) return kExitUsage;
      break;
    }
    case Command::Verify: {
      Enumerator oracle;
      std::ostringstream diff;
      std::size_t cells = 0, mismatches = 0;
      for (Size n = 1; n <= cfg.maxN; ++n)
        for (Size s = 0; s <= cfg.maxS; ++s)
          for (Size m = 0; m <= cfg.maxM; ++m) {
            ++cells;
            const BigCount dp = count_rooted(n, s, m, memo);
            const BigCount brute = oracle.enumerate(n, s, m).count;
            if (dp != brute) {
              ++mismatches;
              diff << n << ',' << s << ',' << m << ',' << to_decimal(dp) << ','
                   << to_decimal(brute) << '\n';
            }
          }
      if (mismatches == 0) {
        out << "OK " << cells << " cells\n";
      } else {
        out << "n,s,m,dp,oracle\n" << diff.str();
        err << mismatches << " of " << cells << " cells disagree\n";
        status = kExitMismatch;
      }
      break;
    }
    case Command::Enumerate: {
      const EnumerationResult r = enumerate_rooted(cfg.n, cfg.s, cfg.m);
      out << to_decimal(r.count) << '\n';
      if (cfg.emitCodes)
        for (const auto& t : r.codes) out << serialize_code(t) << '\n';
      break;
    }
  }

  if (useMemoFile) {
    std::ofstream file(*cfg.memoFile, std::ios::binary);
    save_memo(table, file);
    if (!file) {
      err << "error: cannot write " << *cfg.memoFile << '\n';
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace multitree::cli

#endif  // MULTITREE_CLI_HPP
