// Copyright 2026 The skewlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewlat/format.hpp"

#include <charconv>
#include <sstream>

namespace skewlat {

namespace {

struct Token {
  std::size_t column;
  std::string text;
  bool quoted;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c == '#') break;
      if (c == '"') {
        Token tok{i + 1, {}, true};
        ++i;
        bool closed = false;
        while (i < raw.size()) {
          if (raw[i] == '\\' && i + 1 < raw.size()) {
            tok.text += raw[i + 1];
            i += 2;
          } else if (raw[i] == '"') {
            closed = true;
            ++i;
            break;
          } else {
            tok.text += raw[i++];
          }
        }
        if (!closed) throw ParseError(number, tok.column, "unterminated string");
        line.tokens.push_back(std::move(tok));
        continue;
      }
      Token tok{i + 1, {}, false};
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '#') tok.text += raw[i++];
      line.tokens.push_back(std::move(tok));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::size_t parse_number(const Line& line, const Token& tok) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (tok.quoted || tok.text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + tok.text + "'");
  }
  return value;
}

ElementId parse_id(const Line& line, const Token& tok, std::size_t order) {
  const std::size_t v = parse_number(line, tok);
  if (v >= order) {
    throw ParseError(line.number, tok.column,
                     "element id " + tok.text + " out of range for order " + std::to_string(order));
  }
  return static_cast<ElementId>(v);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    const std::size_t col = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
    throw ParseError(line.number, col,
                     "'" + line.tokens.front().text + "' takes " + std::to_string(count - 1) + " argument(s)");
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FiniteSkewLattice StructureFile::to_lattice() const {
  return FiniteSkewLattice::from_tables(order, meet, join, zero, labels);
}

StructureFile parse_structure(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected 'skewlat 1'");

  const Line& header = lines.front();
  if (header.tokens.front().quoted || header.tokens.front().text != "skewlat") {
    throw ParseError(header.number, header.tokens.front().column, "expected header 'skewlat 1'");
  }
  expect_arity(header, 2);
  StructureFile file;
  file.version = static_cast<int>(parse_number(header, header.tokens[1]));
  if (file.version != 1) {
    throw ParseError(header.number, header.tokens[1].column, "unsupported format version " + header.tokens[1].text);
  }

  bool have_n = false, have_zero = false, have_meet = false, have_join = false, have_labels = false;
  std::size_t i = 1;
  auto require_n = [&](const Line& line) {
    if (!have_n) throw ParseError(line.number, line.tokens.front().column, "'n' must precede this section");
  };
  auto read_table = [&](const Line& line, std::vector<ElementId>& table) {
    require_n(line);
    expect_arity(line, 1);
    const std::size_t n = file.order;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (i >= lines.size()) {
        throw ParseError(line.number, line.tokens.front().column,
                         "table '" + line.tokens.front().text + "' has " + std::to_string(r) + " rows, expected " +
                             std::to_string(n));
      }
      const Line& row = lines[i++];
      if (row.tokens.size() != n) {
        const std::size_t col = row.tokens.size() > n ? row.tokens[n].column : row.tokens.back().column;
        throw ParseError(row.number, col,
                         "row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
      }
      for (const Token& tok : row.tokens) table.push_back(parse_id(row, tok, n));
    }
  };

  while (i < lines.size()) {
    const Line& line = lines[i++];
    const Token& key = line.tokens.front();
    if (key.quoted) throw ParseError(line.number, key.column, "expected a section keyword");
    if (key.text == "n") {
      if (have_n) throw ParseError(line.number, key.column, "duplicate 'n'");
      expect_arity(line, 2);
      file.order = parse_number(line, line.tokens[1]);
      if (file.order == 0) throw ParseError(line.number, line.tokens[1].column, "order must be positive");
      have_n = true;
    } else if (key.text == "zero") {
      if (have_zero) throw ParseError(line.number, key.column, "duplicate 'zero'");
      require_n(line);
      expect_arity(line, 2);
      file.zero = parse_id(line, line.tokens[1], file.order);
      have_zero = true;
    } else if (key.text == "meet") {
      if (have_meet) throw ParseError(line.number, key.column, "duplicate section 'meet'");
      read_table(line, file.meet);
      have_meet = true;
    } else if (key.text == "join") {
      if (have_join) throw ParseError(line.number, key.column, "duplicate section 'join'");
      read_table(line, file.join);
      have_join = true;
    } else if (key.text == "labels") {
      if (have_labels) throw ParseError(line.number, key.column, "duplicate section 'labels'");
      require_n(line);
      auto take = [&](const Line& l, std::size_t from) {
        for (std::size_t t = from; t < l.tokens.size(); ++t) {
          const Token& tok = l.tokens[t];
          if (!tok.quoted) throw ParseError(l.number, tok.column, "labels must be quoted strings");
          if (file.labels.size() == file.order) throw ParseError(l.number, tok.column, "too many labels");
          file.labels.push_back(tok.text);
        }
      };
      take(line, 1);
      while (file.labels.size() < file.order) {
        if (i >= lines.size() || !lines[i].tokens.front().quoted) {
          throw ParseError(line.number, key.column,
                           "expected " + std::to_string(file.order) + " labels, got " +
                               std::to_string(file.labels.size()));
        }
        take(lines[i++], 0);
      }
      have_labels = true;
    } else {
      throw ParseError(line.number, key.column, "unknown keyword '" + key.text + "'");
    }
  }
  const std::size_t eof_line = lines.back().number + 1;
  if (!have_n) throw ParseError(eof_line, 1, "missing 'n'");
  if (!have_meet) throw ParseError(eof_line, 1, "missing section 'meet'");
  if (!have_join) throw ParseError(eof_line, 1, "missing section 'join'");
  return file;
}

std::string emit_structure(const FiniteSkewLattice& s) {
  std::ostringstream out;
  const std::size_t n = s.order();
  out << "skewlat 1\n";
  out << "n " << n << "\n";
  if (s.zero()) out << "zero " << *s.zero() << "\n";
  auto table = [&](const char* name, std::span<const ElementId> t) {
    out << name << "\n";
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << t[r * n + c];
      out << "\n";
    }
  };
  table("meet", s.meet_table());
  table("join", s.join_table());
  if (!s.labels().empty()) {
    out << "labels\n";
    for (std::size_t a = 0; a < n; ++a) out << (a ? " " : "") << quote(s.labels()[a]);
    out << "\n";
  }
  return out.str();
}

}  // namespace skewlat
