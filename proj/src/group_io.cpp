#include "regset/group_io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace regset {

namespace {

constexpr int kMaxFileOrder = 5000;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Permutation parse_permutation_cycles(const std::string& s, int degree) {
  Permutation result(degree);
  std::iota(result.begin(), result.end(), 0);
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw Error(Errc::ParseError, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    std::string num;
    for (; i < s.size() && s[i] != ')'; ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        if (!num.empty()) {
          cycle.push_back(std::stoi(num));
          num.clear();
        }
      } else {
        throw Error(Errc::ParseError, std::string("unexpected character '") + c + "' in cycle");
      }
    }
    if (i == s.size()) throw Error(Errc::ParseError, "unterminated cycle");
    ++i;  // skip ')'
    if (!num.empty()) cycle.push_back(std::stoi(num));
    any = true;
    std::vector<char> in_cycle(degree, 0);
    for (int v : cycle) {
      if (v < 0 || v >= degree)
        throw Error(Errc::ParseError, "cycle entry " + std::to_string(v) + " out of range");
      if (in_cycle[v])
        throw Error(Errc::ParseError, "repeated point " + std::to_string(v) + " in one cycle");
      in_cycle[v] = 1;
    }
    if (cycle.size() >= 2) {
      // Apply this cycle after what has been read so far.
      Permutation c(degree);
      std::iota(c.begin(), c.end(), 0);
      for (std::size_t j = 0; j < cycle.size(); ++j)
        c[cycle[j]] = cycle[(j + 1) % cycle.size()];
      for (int& v : result) v = c[v];
    }
  }
  if (!any) throw Error(Errc::ParseError, "empty permutation line");
  return result;
}

GroupTable parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_content_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos) continue;
      if (line[p] == '#') continue;
      return true;
    }
    if (required) parse_fail(lineno + 1, "unexpected end of input");
    return false;
  };

  if (!next_content_line(false)) throw Error(Errc::ParseError, "empty group file");
  std::istringstream header(line);
  std::string kind;
  int n = 0;
  if (!(header >> kind >> n)) parse_fail(lineno, "expected 'table <n>' or 'perm <degree>'");
  if (n < 1 || n > kMaxFileOrder)
    parse_fail(lineno, "size " + std::to_string(n) + " out of supported range");

  if (kind == "table") {
    GroupTable g;
    g.order = n;
    g.mult_table.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
      next_content_line(true);
      std::istringstream row(line);
      for (int c = 0; c < n; ++c) {
        int v;
        if (!(row >> v)) parse_fail(lineno, "row has fewer than " + std::to_string(n) + " entries");
        if (v < 0 || v >= n) parse_fail(lineno, "entry " + std::to_string(v) + " out of range");
        g.mult_table.push_back(v);
      }
      int extra;
      if (row >> extra) parse_fail(lineno, "row has more than " + std::to_string(n) + " entries");
    }
    g.inv_table.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      int found = -1;
      for (int y = 0; y < n; ++y)
        if (g.mult(x, y) == 0) {
          found = y;
          break;
        }
      if (found < 0) throw Error(Errc::InvalidGroupTable, "element without inverse");
      g.inv_table[x] = found;
    }
    validate_group_table(g);
    return g;
  }
  if (kind == "perm") {
    std::vector<Permutation> gens;
    while (next_content_line(false)) {
      try {
        gens.push_back(parse_permutation_cycles(line, n));
      } catch (const Error& e) {
        parse_fail(lineno, e.what());
      }
    }
    if (gens.empty()) throw Error(Errc::ParseError, "perm group file has no generators");
    return from_permutation_generators(n, gens, kMaxFileOrder);
  }
  parse_fail(lineno, "unknown header '" + kind + "'");
}

GroupTable parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open group file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string format_group_table(const GroupTable& g) {
  std::ostringstream out;
  out << "table " << g.order << "\n";
  for (int r = 0; r < g.order; ++r) {
    for (int c = 0; c < g.order; ++c) {
      if (c) out << ' ';
      out << g.mult(r, c);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace regset
