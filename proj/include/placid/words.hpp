#pragma once

// Words over [n] = {1, ..., n}, semistandard Young tableaux, and Schensted
// row insertion. Two words are equal in the plactic monoid of rank n exactly
// when they insert to the same tableau, so Tableau doubles as the canonical
// form of a plactic element.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace placid {

using Letter = std::int32_t;
using Word = std::vector<Letter>;

/// Parses integers separated by spaces and/or commas, e.g. "1 3 1 4".
/// Throws std::invalid_argument on anything else, or on letters < 1.
Word parse_word(std::string_view text);

/// Single-space separated integers; the empty word formats as "".
std::string format_word(const Word& w);

/// Throws std::invalid_argument unless every letter lies in [1, rank].
void require_letters_in_rank(const Word& w, int rank);

/// A semistandard Young tableau stored bottom row first. Row 0 is the row
/// that Schensted insertion writes into; each row is weakly increasing,
/// rows get no longer going up, and columns strictly increase going up.
class Tableau {
 public:
  using Row = std::vector<Letter>;

  Tableau() = default;

  /// Throws std::invalid_argument if `rows` violates a tableau invariant.
  explicit Tableau(std::vector<Row> rows);

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t box_count() const;
  bool empty() const { return rows_.empty(); }

  /// Row insertion of `x` in place.
  void insert(Letter x);

  /// Reading word (top row first, each row left to right). Inserting it
  /// reproduces this tableau.
  Word reading_word() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Row> rows_;
};

/// Empty string when `rows` form a valid tableau, otherwise a description of
/// the first violated invariant.
std::string tableau_violation(const std::vector<Tableau::Row>& rows);

Tableau insert(Tableau t, Letter x);
Tableau tableau_of_word(const Word& w);
bool plactic_equal(const Word& u, const Word& v);

/// Every word reachable from `w` by one application of a Knuth relation
///   bca = bac (a < b <= c)   or   cab = acb (a <= b < c)
/// at one position, in either direction. Intended as a test oracle.
std::set<Word> knuth_neighbors(const Word& w);

/// Multi-line drawing with the top row first, as tableaux are usually drawn.
std::string render(const Tableau& t);

}  // namespace placid
