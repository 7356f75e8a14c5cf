#ifndef MULTITREE_IO_HPP
#define MULTITREE_IO_HPP

// Count grids (CSV / JSON) and the textual memo snapshot.
//
// Snapshot format, LF line endings:
//
//   multitree-memo v1
//   <pattern> <f> <g> <h> <k> <n> <s> <m> <count>
//   ...
//
// Entries are written in key order so identical tables produce identical
// bytes.

#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "bigcount.hpp"
#include "core.hpp"
#include "dp.hpp"

namespace multitree {

struct CountGrid {
  Size maxN = 1, maxS = 0, maxM = 0;
  /// Keyed by (n, s, m); iteration order is the emission order.
  std::map<GraphStats, BigCount> cells;

  bool complete() const {
    return cells.size() == static_cast<std::size_t>(maxN) * (maxS + 1) * (maxM + 1) &&
           (maxN == 0 || (cells.begin()->first == GraphStats{1, 0, 0} &&
                          cells.rbegin()->first == GraphStats{maxN, maxS, maxM}));
  }
};

/// Fills every cell 1 <= n <= maxN, 0 <= s <= maxS, 0 <= m <= maxM.
template <typename CountFn>
CountGrid build_grid(Size maxN, Size maxS, Size maxM, CountFn&& count) {
  CountGrid grid{maxN, maxS, maxM, {}};
  for (Size n = 1; n <= maxN; ++n)
    for (Size s = 0; s <= maxS; ++s)
      for (Size m = 0; m <= maxM; ++m) grid.cells.emplace(GraphStats{n, s, m}, count(n, s, m));
  return grid;
}

inline std::string emit_csv(const CountGrid& grid) {
  std::string out = "n,s,m,count\n";
  for (const auto& [st, count] : grid.cells) {
    out += std::to_string(st.n) + ',' + std::to_string(st.s) + ',' + std::to_string(st.m) + ',';
    out += to_decimal(count);
    out += '\n';
  }
  return out;
}

inline std::string emit_json(const CountGrid& grid) {
  nlohmann::ordered_json doc;
  doc["max_n"] = grid.maxN;
  doc["max_s"] = grid.maxS;
  doc["max_m"] = grid.maxM;
  auto counts = nlohmann::ordered_json::array();
  for (const auto& [st, count] : grid.cells) {
    nlohmann::ordered_json cell;
    cell["n"] = st.n;
    cell["s"] = st.s;
    cell["m"] = st.m;
    cell["count"] = to_decimal(count);
    counts.push_back(std::move(cell));
  }
  doc["counts"] = std::move(counts);
  return doc.dump(2) + '\n';
}

inline CountGrid parse_json_grid(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  CountGrid grid{doc.at("max_n").get<Size>(), doc.at("max_s").get<Size>(),
                 doc.at("max_m").get<Size>(), {}};
  for (const auto& cell : doc.at("counts"))
    grid.cells.emplace(
        GraphStats{cell.at("n").get<Size>(), cell.at("s").get<Size>(), cell.at("m").get<Size>()},
        parse_decimal(cell.at("count").get<std::string>()));
  return grid;
}

inline constexpr const char* kMemoHeader = "multitree-memo v1";

class MemoFormatError : public std::runtime_error {
 public:
  MemoFormatError(const std::string& what, std::size_t line)
      : std::runtime_error("memo line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline void save_memo(const CountTable& table, std::ostream& sink) {
  sink << kMemoHeader << '\n';
  for (const auto& [key, count] : table.snapshot()) {
    sink << pattern_name(key.pattern) << ' ' << key.f << ' ' << key.g << ' ' << key.h << ' '
         << key.k << ' ' << key.n << ' ' << key.s << ' ' << key.m << ' ' << to_decimal(count)
         << '\n';
  }
}

inline CountTable load_memo(std::istream& source) {
  CountTable table;
  std::string line;
  std::size_t lineNo = 1;
  if (!std::getline(source, line)) throw MemoFormatError("missing header", lineNo);
  if (line != kMemoHeader) {
    if (line.rfind("multitree-memo ", 0) == 0)
      throw MemoFormatError("unsupported version '" + line.substr(15) + "'", lineNo);
    throw MemoFormatError("bad header", lineNo);
  }
  while (std::getline(source, line)) {
    ++lineNo;
    std::istringstream fields(line);
    std::vector<std::string> parts;
    for (std::string f; fields >> f;) parts.push_back(f);
    if (parts.size() != 9) throw MemoFormatError("expected 9 fields", lineNo);
    const auto pattern = parse_pattern(parts[0]);
    if (!pattern) throw MemoFormatError("unknown pattern '" + parts[0] + "'", lineNo);
    try {
      Size v[7];
      for (int i = 0; i < 7; ++i) {
        const BigCount x = parse_decimal(parts[i + 1]);
        if (x > std::numeric_limits<Size>::max()) throw std::invalid_argument("out of range");
        v[i] = x.convert_to<Size>();
      }
      table.insert(DpKey{*pattern, v[0], v[1], v[2], v[3], v[4], v[5], v[6]},
                   parse_decimal(parts[8]));
    } catch (const std::invalid_argument& e) {
      throw MemoFormatError(e.what(), lineNo);
    }
  }
  return table;
}

}  // namespace multitree

#endif  // MULTITREE_IO_HPP
