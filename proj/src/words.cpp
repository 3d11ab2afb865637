#include "placid/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace placid {

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view tok = text.substr(i, j - i);
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("parse_word: bad token '" + std::string(tok) + "'");
    }
    if (value < 1) {
      throw std::invalid_argument("parse_word: letters must be >= 1, got " +
                                  std::to_string(value));
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

void require_letters_in_rank(const Word& w, int rank) {
  for (Letter x : w) {
    if (x < 1 || x > rank) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside [1, " +
                                  std::to_string(rank) + "]");
    }
  }
}

std::string tableau_violation(const std::vector<Tableau::Row>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) return "row " + std::to_string(r) + " is empty";
    for (Letter x : row) {
      if (x < 1) return "entry " + std::to_string(x) + " is not a positive letter";
    }
    if (!std::is_sorted(row.begin(), row.end())) {
      return "row " + std::to_string(r) + " is not weakly increasing";
    }
    if (r == 0) continue;
    const auto& below = rows[r - 1];
    if (row.size() > below.size()) {
      return "row " + std::to_string(r) + " is longer than the row below it";
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= below[c]) {
        return "column " + std::to_string(c) + " does not strictly increase at row " +
               std::to_string(r);
      }
    }
  }
  return {};
}

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (auto why = tableau_violation(rows_); !why.empty()) {
    throw std::invalid_argument("invalid tableau: " + why);
  }
}

std::size_t Tableau::box_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

void Tableau::insert(Letter x) {
  for (auto& row : rows_) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(x, *it);
  }
  rows_.push_back(Row{x});
}

Word Tableau::reading_word() const {
  Word w;
  w.reserve(box_count());
  for (auto r = rows_.rbegin(); r != rows_.rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

Tableau insert(Tableau t, Letter x) {
  t.insert(x);
  return t;
}

Tableau tableau_of_word(const Word& w) {
  Tableau t;
  for (Letter x : w) t.insert(x);
  return t;
}

bool plactic_equal(const Word& u, const Word& v) {
  return u.size() == v.size() && tableau_of_word(u) == tableau_of_word(v);
}

std::set<Word> knuth_neighbors(const Word& w) {
  std::set<Word> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const Letter p = w[i], m = w[i + 1], s = w[i + 2];
    auto emit = [&](Letter x, Letter y, Letter z) {
      Word nb = w;
      nb[i] = x;
      nb[i + 1] = y;
      nb[i + 2] = z;
      out.insert(std::move(nb));
    };
    // Read (p, m, s) as each side of each relation in turn.
    // bca -> bac with b = p, c = m, a = s.
    if (s < p && p <= m) emit(p, s, m);
    // bac -> bca with b = p, a = m, c = s.
    if (m < p && p <= s) emit(p, s, m);
    // cab -> acb with c = p, a = m, b = s.
    if (m <= s && s < p) emit(m, p, s);
    // acb -> cab with a = p, c = m, b = s.
    if (p <= s && s < m) emit(m, p, s);
  }
  return out;
}

std::string render(const Tableau& t) {
  std::ostringstream os;
  const auto& rows = t.rows();
  for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
    for (std::size_t c = 0; c < r->size(); ++c) {
      if (c) os << ' ';
      os << (*r)[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace placid
