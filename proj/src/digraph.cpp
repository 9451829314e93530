#include "hamlab/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hamlab {

std::vector<std::pair<int, int>> Digraph::non_adjacent_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (!adjacent(x, y)) out.emplace_back(x, y);
  return out;
}

Digraph Digraph::induced(std::span<const int> vertices,
                         std::vector<int>* old_to_new) const {
  if (vertices.empty())
    throw std::invalid_argument("induced subdigraph needs a nonempty subset");
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced subdigraph subset has duplicates");
  for (int v : sorted) check_vertex(v);

  Digraph sub(static_cast<int>(sorted.size()));
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = 0; j < sorted.size(); ++j)
      if (i != j && arc_unchecked(sorted[i], sorted[j]))
        sub.set_arc_unchecked(static_cast<int>(i), static_cast<int>(j), true);

  if (old_to_new) {
    old_to_new->assign(n_, -1);
    for (size_t i = 0; i < sorted.size(); ++i)
      (*old_to_new)[sorted[i]] = static_cast<int>(i);
  }
  return sub;
}

std::string Digraph::serialize() const {
  std::string s = "DG " + std::to_string(n_) + "\n";
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) s.push_back(arc_unchecked(u, v) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  // Trailing blank lines are tolerated.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" +
                         std::string(tok) + "'",
                     line_no, 1);
  return value;
}

}  // namespace

Digraph Digraph::parse(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);

  std::istringstream header{std::string(lines[0])};
  std::string magic, order_tok;
  header >> magic >> order_tok;
  if (magic != "DG" && magic != "DGA")
    throw ParseError("header must start with 'DG' or 'DGA'", 1, 1);
  if (order_tok.empty()) throw ParseError("header missing order", 1, 1);
  std::string extra;
  if (header >> extra) throw ParseError("trailing tokens in header", 1, 1);
  int n = parse_int(order_tok, 1, "order");
  if (n < 1) throw ParseError("order must be >= 1", 1, 1);
  if (n > kMaxOrder) throw ParseError("order above supported maximum 64", 1, 1);
  Digraph d(n);

  if (magic == "DG") {
    if (static_cast<int>(lines.size()) != n + 1)
      throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                           std::to_string(lines.size() - 1),
                       static_cast<int>(lines.size()), 1);
    for (int u = 0; u < n; ++u) {
      std::string_view row = lines[u + 1];
      int line_no = u + 2;
      if (static_cast<int>(row.size()) != n)
        throw ParseError("row has " + std::to_string(row.size()) +
                             " columns, expected " + std::to_string(n),
                         line_no, static_cast<int>(row.size()) + 1);
      for (int v = 0; v < n; ++v) {
        char c = row[v];
        if (c != '0' && c != '1')
          throw ParseError("matrix entries must be 0 or 1", line_no, v + 1);
        if (c == '1') {
          if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u), line_no,
                             v + 1);
          d.set_arc_unchecked(u, v, true);
        }
      }
    }
    return d;
  }

  // DGA: one "u v" arc per line.
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    int line_no = static_cast<int>(i) + 1;
    std::istringstream ls{std::string(lines[i])};
    std::string a, b, rest;
    ls >> a >> b;
    if (b.empty()) throw ParseError("arc line needs two vertex ids", line_no, 1);
    if (ls >> rest) throw ParseError("trailing tokens on arc line", line_no, 1);
    int u = parse_int(a, line_no, "vertex id");
    int v = parse_int(b, line_no, "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range 0.." + std::to_string(n - 1),
                       line_no, 1);
    if (u == v)
      throw ParseError("loop at vertex " + std::to_string(u), line_no, 1);
    d.set_arc_unchecked(u, v, true);
  }
  return d;
}

namespace {

struct IsoSearch {
  const Digraph& a;
  const Digraph& b;
  std::vector<int> order;             // a-vertices, most constrained first
  std::vector<std::vector<int>> cand; // candidate b-images per a-vertex
  std::vector<int> map_a_to_b;
  uint64_t used = 0;

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int img : cand[u]) {
      if (used >> img & 1) continue;
      bool ok = true;
      for (size_t k = 0; k < depth && ok; ++k) {
        int w = order[k];
        if (a.arc_unchecked(u, w) != b.arc_unchecked(img, map_a_to_b[w]) ||
            a.arc_unchecked(w, u) != b.arc_unchecked(map_a_to_b[w], img))
          ok = false;
      }
      if (!ok) continue;
      map_a_to_b[u] = img;
      used |= 1ull << img;
      if (extend(depth + 1)) return true;
      used &= ~(1ull << img);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Digraph& d1,
                                                 const Digraph& d2) {
  const int n = d1.order();
  if (n != d2.order()) return std::nullopt;
  if (d1.arc_count() != d2.arc_count()) return std::nullopt;

  IsoSearch s{d1, d2, {}, {}, {}, 0};
  s.cand.resize(n);
  s.map_a_to_b.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v)
      if (d1.out_degree(u) == d2.out_degree(v) &&
          d1.in_degree(u) == d2.in_degree(v))
        s.cand[u].push_back(v);
    if (s.cand[u].empty()) return std::nullopt;
  }
  s.order.resize(n);
  for (int u = 0; u < n; ++u) s.order[u] = u;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return s.cand[x].size() < s.cand[y].size();
  });

  if (!s.extend(0)) return std::nullopt;
  return s.map_a_to_b;
}

}  // namespace hamlab
