#include "rcfd/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rcfd {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string write_text(const Design& d) {
  const auto& p = d.params;
  std::string out = std::to_string(p.k) + " " + std::to_string(p.m) + " " +
                    std::to_string(p.n) + " " + std::to_string(p.q) + "\n";
  const bool digits = p.q <= 10;
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (j) out += ' ';
      if (digits) {
        for (int c = 0; c < p.k; ++c) out += static_cast<char>('0' + d.at(i, j, c));
      } else {
        out += '(';
        for (int c = 0; c < p.k; ++c) {
          if (c) out += ',';
          out += std::to_string(d.at(i, j, c));
        }
        out += ')';
      }
    }
    out += '\n';
  }
  return out;
}

std::string write_json(const Design& d) {
  const auto& p = d.params;
  ordered_json j;
  j["k"] = p.k;
  j["m"] = p.m;
  j["n"] = p.n;
  j["q"] = p.q;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < p.m; ++i) {
    ordered_json row = ordered_json::array();
    for (int jj = 0; jj < p.n; ++jj) {
      ordered_json cell = ordered_json::array();
      for (int c = 0; c < p.k; ++c) cell.push_back(d.at(i, jj, c));
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["cells"] = std::move(rows);
  return j.dump() + "\n";
}

std::string write_csv(const Design& d) {
  const auto& p = d.params;
  std::string out = "row,col";
  for (int c = 0; c < p.k; ++c) out += ",f" + std::to_string(c);
  out += '\n';
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.n; ++j) {
      out += std::to_string(i) + "," + std::to_string(j);
      for (int c = 0; c < p.k; ++c) out += "," + std::to_string(d.at(i, j, c));
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

struct Token {
  std::string text;
  int col = 0;  // 1-based start column
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long parse_int(const std::string& s, int line, int col) {
  if (s.empty()) throw ParseError("expected an integer", line, col);
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line, col);
  }
  if (pos != s.size()) {
    throw ParseError("trailing characters after integer '" + s + "'", line, col);
  }
  return v;
}

std::vector<Symbol> parse_cell(const Token& tok, int k, int q, int line) {
  std::vector<Symbol> tuple;
  if (!tok.text.empty() && tok.text.front() == '(') {
    if (tok.text.back() != ')') {
      throw ParseError("unterminated tuple", line, tok.col);
    }
    std::string inner = tok.text.substr(1, tok.text.size() - 2);
    std::stringstream ss(inner);
    std::string part;
    while (std::getline(ss, part, ',')) {
      tuple.push_back(static_cast<Symbol>(parse_int(part, line, tok.col)));
    }
    if (!inner.empty() && inner.back() == ',') {
      throw ParseError("trailing comma in tuple", line, tok.col);
    }
  } else {
    if (q > 10) {
      throw ParseError("digit cells need q <= 10; use tuple cells", line, tok.col);
    }
    for (char ch : tok.text) {
      if (ch < '0' || ch > '9') {
        throw ParseError("cell digit expected, got '" + std::string(1, ch) + "'",
                         line, tok.col);
      }
      tuple.push_back(static_cast<Symbol>(ch - '0'));
    }
  }
  if (static_cast<int>(tuple.size()) != k) {
    throw ParseError("cell has " + std::to_string(tuple.size()) +
                         " coordinates, expected " + std::to_string(k),
                     line, tok.col);
  }
  for (Symbol v : tuple) {
    if (v >= q) {
      throw ParseError("symbol " + std::to_string(v) + " out of range [0," +
                           std::to_string(q) + ")",
                       line, tok.col);
    }
  }
  return tuple;
}

Design read_text(const std::string& text) {
  const auto lines = split_lines(text);
  size_t li = 0;
  while (li < lines.size() && tokenize(lines[li]).empty()) ++li;
  if (li == lines.size()) throw ParseError("empty input", 1, 1);

  const auto header = tokenize(lines[li]);
  if (header.size() != 4) {
    throw ParseError("header must be 'k m n q'", static_cast<int>(li) + 1, 1);
  }
  DesignParams p;
  p.k = static_cast<int>(parse_int(header[0].text, static_cast<int>(li) + 1, header[0].col));
  p.m = static_cast<int>(parse_int(header[1].text, static_cast<int>(li) + 1, header[1].col));
  p.n = static_cast<int>(parse_int(header[2].text, static_cast<int>(li) + 1, header[2].col));
  p.q = static_cast<int>(parse_int(header[3].text, static_cast<int>(li) + 1, header[3].col));
  if (p.k < 1 || p.m < 1 || p.n < 1 || p.q < 1) {
    throw ParseError("header values must be positive", static_cast<int>(li) + 1, 1);
  }

  Design d = Design::filled(p);
  int row = 0;
  for (++li; li < lines.size(); ++li) {
    const auto toks = tokenize(lines[li]);
    if (toks.empty()) continue;
    if (row >= p.m) {
      throw ParseError("more than m rows of cells", static_cast<int>(li) + 1,
                       toks[0].col);
    }
    if (static_cast<int>(toks.size()) != p.n) {
      throw ParseError("row has " + std::to_string(toks.size()) +
                           " cells, expected " + std::to_string(p.n),
                       static_cast<int>(li) + 1, 1);
    }
    for (int j = 0; j < p.n; ++j) {
      const auto tuple = parse_cell(toks[j], p.k, p.q, static_cast<int>(li) + 1);
      for (int c = 0; c < p.k; ++c) d.set(row, j, c, tuple[c]);
    }
    ++row;
  }
  if (row != p.m) {
    throw DimensionMismatch("payload has " + std::to_string(row) +
                            " rows, header says " + std::to_string(p.m));
  }
  return d;
}

Design read_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // translate the byte offset into line/column
    int line = 1, col = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("m") ||
      !j.contains("n") || !j.contains("q") || !j.contains("cells")) {
    throw DimensionMismatch("JSON design needs keys k, m, n, q, cells");
  }
  DesignParams p{j["k"].get<int>(), j["m"].get<int>(), j["n"].get<int>(),
                 j["q"].get<int>()};
  const auto& rows = j["cells"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != p.m) {
    throw DimensionMismatch("cells must hold m rows");
  }
  Design d = Design::filled(p);
  for (int i = 0; i < p.m; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != p.n) {
      throw DimensionMismatch("row " + std::to_string(i) + " must hold n cells");
    }
    for (int jj = 0; jj < p.n; ++jj) {
      const auto& cell = row[jj];
      if (!cell.is_array() || static_cast<int>(cell.size()) != p.k) {
        throw DimensionMismatch("cell must hold k coordinates");
      }
      for (int c = 0; c < p.k; ++c) {
        const long long v = cell[c].get<long long>();
        if (v < 0 || v >= p.q) {
          throw DimensionMismatch("symbol " + std::to_string(v) + " out of range");
        }
        d.set(i, jj, c, static_cast<Symbol>(v));
      }
    }
  }
  return d;
}

Design read_csv(const std::string& text) {
  const auto lines = split_lines(text);
  size_t li = 0;
  while (li < lines.size() && lines[li].empty()) ++li;
  if (li == lines.size()) throw ParseError("empty input", 1, 1);

  auto split_commas = [](const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    return parts;
  };

  const auto head = split_commas(lines[li]);
  if (head.size() < 3 || head[0] != "row" || head[1] != "col") {
    throw ParseError("CSV header must start with 'row,col,f0,...'",
                     static_cast<int>(li) + 1, 1);
  }
  const int k = static_cast<int>(head.size()) - 2;
  for (int c = 0; c < k; ++c) {
    if (head[c + 2] != "f" + std::to_string(c)) {
      throw ParseError("CSV factor columns must be f0..f" + std::to_string(k - 1),
                       static_cast<int>(li) + 1, 1);
    }
  }

  struct Entry {
    int row, col;
    std::vector<Symbol> tuple;
  };
  std::vector<Entry> entries;
  int max_row = -1, max_col = -1, max_sym = 0;
  for (++li; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    const auto parts = split_commas(lines[li]);
    if (static_cast<int>(parts.size()) != k + 2) {
      throw ParseError("CSV line needs " + std::to_string(k + 2) + " fields",
                       static_cast<int>(li) + 1, 1);
    }
    Entry e;
    e.row = static_cast<int>(parse_int(parts[0], static_cast<int>(li) + 1, 1));
    e.col = static_cast<int>(parse_int(parts[1], static_cast<int>(li) + 1, 1));
    if (e.row < 0 || e.col < 0) {
      throw ParseError("row/col must be nonnegative", static_cast<int>(li) + 1, 1);
    }
    for (int c = 0; c < k; ++c) {
      const long long v = parse_int(parts[c + 2], static_cast<int>(li) + 1, 1);
      if (v < 0 || v > 0xFFFF) {
        throw ParseError("symbol out of range", static_cast<int>(li) + 1, 1);
      }
      e.tuple.push_back(static_cast<Symbol>(v));
      max_sym = std::max<int>(max_sym, static_cast<int>(v));
    }
    max_row = std::max(max_row, e.row);
    max_col = std::max(max_col, e.col);
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw DimensionMismatch("CSV has no cell lines");

  DesignParams p{k, max_row + 1, max_col + 1, max_sym + 1};
  if (static_cast<long long>(entries.size()) != p.cell_count()) {
    throw DimensionMismatch("CSV has " + std::to_string(entries.size()) +
                            " cells, grid needs " + std::to_string(p.cell_count()));
  }
  Design d = Design::filled(p);
  std::vector<char> seen(static_cast<size_t>(p.cell_count()), 0);
  for (const auto& e : entries) {
    auto& flag = seen[static_cast<size_t>(e.row) * p.n + e.col];
    if (flag) {
      throw DimensionMismatch("duplicate CSV cell (" + std::to_string(e.row) +
                              "," + std::to_string(e.col) + ")");
    }
    flag = 1;
    for (int c = 0; c < k; ++c) d.set(e.row, e.col, c, e.tuple[c]);
  }
  return d;
}

}  // namespace

std::string write_design(const Design& d, Format format) {
  switch (format) {
    case Format::Text:
      return write_text(d);
    case Format::Json:
      return write_json(d);
    case Format::Csv:
      return write_csv(d);
  }
  throw RangeError("unknown format");
}

Design read_design(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return read_json(text);
    if (ch >= '0' && ch <= '9') return read_text(text);
    return read_csv(text);
  }
  throw ParseError("empty input", 1, 1);
}

Design read_design_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_design(ss.str());
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << bytes;
}

namespace {

ordered_json plan_json(const PlanNode& node) {
  ordered_json j;
  j["op"] = node.op;
  ordered_json args = ordered_json::object();
  for (const auto& [name, value] : node.iargs) args[name] = value;
  for (const auto& [name, value] : node.sargs) args[name] = value;
  j["args"] = std::move(args);
  ordered_json kids = ordered_json::array();
  for (const auto& child : node.children) kids.push_back(plan_json(child));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

std::string plan_to_json(const PlanNode& plan) {
  return plan_json(plan).dump(2) + "\n";
}

std::string default_seed_cache_dir() {
  if (const char* env = std::getenv("RCFD_SEED_CACHE")) {
    return std::string(env);
  }
  if (const char* home = std::getenv("HOME")) {
    return std::string(home) + "/.cache/rcfd/seeds";
  }
  return "";
}

std::string seed_cache_filename(const DesignParams& p) {
  return "I" + std::to_string(p.k) + "_m" + std::to_string(p.m) + "_n" +
         std::to_string(p.n) + "_q" + std::to_string(p.q) + ".txt";
}

std::optional<Design> load_cached_seed(const DesignParams& p,
                                       const std::string& dir) {
  if (dir.empty()) return std::nullopt;
  const std::filesystem::path path =
      std::filesystem::path(dir) / seed_cache_filename(p);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    Design d = read_design_file(path.string());
    if (d.params == p && is_verified(d)) return d;
  } catch (const Error&) {
    // fall through: a corrupt cache entry counts as absent
  }
  return std::nullopt;
}

std::string store_seed(const Design& d, const std::string& dir) {
  if (dir.empty()) throw Error("seed cache directory is not configured");
  std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  const std::filesystem::path final_path = base / seed_cache_filename(d.params);
  const std::filesystem::path tmp_path =
      base / (seed_cache_filename(d.params) + ".tmp");
  write_file(tmp_path.string(), write_design(d, Format::Text));
  std::filesystem::rename(tmp_path, final_path);
  return final_path.string();
}

}  // namespace rcfd
