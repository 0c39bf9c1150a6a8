#pragma once

// RFC-4180 CSV with a header row. Parse errors carry file:line:column.

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pickwin::csv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Cell {
  std::string text;
  std::size_t column = 1;  // 1-based character position of the field start
};

struct Row {
  std::vector<Cell> cells;
  std::size_t line = 0;
};

class Table {
 public:
  std::string source;
  std::vector<std::string> header;
  std::vector<Row> rows;

  std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw ParseError(source, 1, 1, "missing column '" + name + "'");
  }

  void require(std::initializer_list<const char*> names) const {
    for (const char* n : names) column_index(n);
  }

  const std::string& at(std::size_t row, std::size_t col) const { return rows[row].cells[col].text; }

  [[noreturn]] void fail(std::size_t row, std::size_t col, const std::string& what) const {
    throw ParseError(source, rows[row].line, rows[row].cells[col].column, what);
  }

  double number(std::size_t row, std::size_t col) const {
    const auto& s = at(row, col);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(v)) {
      fail(row, col, "expected a number in column '" + header[col] + "', got '" + s + "'");
    }
    return v;
  }

  std::optional<double> optional_number(std::size_t row, std::size_t col) const {
    if (at(row, col).empty()) return std::nullopt;
    return number(row, col);
  }

  long integer(std::size_t row, std::size_t col) const {
    const auto& s = at(row, col);
    long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
      fail(row, col, "expected an integer in column '" + header[col] + "', got '" + s + "'");
    }
    return v;
  }

  bool boolean(std::size_t row, std::size_t col) const {
    const auto& s = at(row, col);
    if (s == "1" || s == "true" || s == "TRUE" || s == "True") return true;
    if (s == "0" || s == "false" || s == "FALSE" || s == "False") return false;
    fail(row, col, "expected a boolean in column '" + header[col] + "', got '" + s + "'");
  }
};

/// Parses `text`; `source` names the input in error messages.
inline Table parse(const std::string& text, const std::string& source) {
  Table t;
  t.source = source;
  std::vector<Row> records;
  Row current;
  Cell cell;
  std::size_t line = 1, col = 1;
  bool quoted = false, field_started = false, after_quote = false;
  current.line = 1;

  auto end_field = [&] {
    current.cells.push_back(std::move(cell));
    cell = Cell{};
    field_started = false;
    after_quote = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.cells.size() == 1 && current.cells[0].text.empty();
    if (!blank) records.push_back(std::move(current));
    current = Row{};
  };

  std::size_t i = 0;
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) i = 3;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (!field_started) {
      field_started = true;
      cell.column = col;
      if (current.cells.empty()) current.line = line;
      if (ch == '"') {
        quoted = true;
        ++col;
        continue;
      }
    }
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.text += '"';
          ++i;
          col += 2;
          continue;
        }
        quoted = false;
        after_quote = true;
        ++col;
        continue;
      }
      cell.text += ch;
      if (ch == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      continue;
    }
    if (ch == ',') {
      end_field();
      ++col;
      field_started = false;
      continue;
    }
    if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
    if (ch == '\n' || ch == '\r') {
      end_record();
      ++line;
      col = 1;
      continue;
    }
    if (after_quote) throw ParseError(source, line, col, "unexpected character after closing quote");
    if (ch == '"') throw ParseError(source, line, col, "quote inside unquoted field");
    cell.text += ch;
    ++col;
  }
  if (quoted) throw ParseError(source, line, col, "unterminated quoted field");
  if (field_started || !current.cells.empty()) end_record();

  if (records.empty()) throw ParseError(source, 1, 1, "missing header row");
  for (auto& c : records.front().cells) t.header.push_back(std::move(c.text));
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.cells.size() != t.header.size()) {
      const std::size_t c = std::min(rec.cells.size(), t.header.size()) - 1;
      throw ParseError(source, rec.line, rec.cells[c].column,
                       "expected " + std::to_string(t.header.size()) + " fields, found " +
                           std::to_string(rec.cells.size()));
    }
    t.rows.push_back(std::move(rec));
  }
  return t;
}

inline Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

inline std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// Shortest round-trip representation.
inline std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

class Writer {
 public:
  explicit Writer(std::vector<std::string> header) : width_(header.size()) { line(header); }

  void row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) throw std::logic_error("csv row width differs from header");
    line(fields);
  }

  const std::string& str() const { return out_; }

 private:
  void line(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      out_ += escape(fields[i]);
    }
    out_ += "\r\n";
  }

  std::size_t width_;
  std::string out_;
};

}  // namespace pickwin::csv
