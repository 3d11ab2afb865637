#pragma once

// Integer max-plus arithmetic: a (+) b = max(a, b), a (x) b = a + b, with -inf
// as the zero of the semiring. Matrices are dense and square.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "placid/rng.hpp"
#include "placid/subset_lattice.hpp"

namespace placid {

/// An integer or -inf. Default constructed value is -inf.
class Trop {
 public:
  constexpr Trop() = default;
  constexpr explicit Trop(std::int64_t v) : finite_(true), value_(v) {}

  static constexpr Trop neg_inf() { return Trop{}; }
  static constexpr Trop zero() { return Trop{0}; }

  constexpr bool is_finite() const { return finite_; }
  /// Throws std::logic_error on -inf.
  std::int64_t value() const;

  /// Semiring addition (max).
  friend constexpr Trop operator+(Trop a, Trop b) {
    if (!a.finite_) return b;
    if (!b.finite_) return a;
    return Trop{a.value_ < b.value_ ? b.value_ : a.value_};
  }
  /// Semiring multiplication (integer addition; -inf absorbs).
  friend constexpr Trop operator*(Trop a, Trop b) {
    if (!a.finite_ || !b.finite_) return Trop{};
    return Trop{a.value_ + b.value_};
  }

  friend constexpr bool operator==(Trop a, Trop b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  /// -inf sorts below every integer.
  friend constexpr std::strong_ordering operator<=>(Trop a, Trop b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

/// "-inf" or the decimal integer.
std::string format_trop(Trop t);

class TropMatrix {
 public:
  /// dim x dim matrix of -inf.
  explicit TropMatrix(std::size_t dim);
  /// Row-major entries; throws unless rows form a dim x dim square.
  explicit TropMatrix(const std::vector<std::vector<Trop>>& rows);

  /// Max-plus identity: 0 on the diagonal, -inf elsewhere.
  static TropMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Trop operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  Trop& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  /// Bounds-checked access.
  Trop at(std::size_t i, std::size_t j) const;

  /// Row/column labels for matrices indexed by 2^[n] in canonical order.
  const std::optional<std::vector<Subset>>& labels() const { return labels_; }
  /// Throws unless `labels` has dim entries.
  void set_labels(std::vector<Subset> labels);
  void clear_labels() { labels_.reset(); }

  std::vector<std::vector<Trop>> rows() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  /// Lexicographic on entries; lets matrices key ordered containers.
  friend bool operator<(const TropMatrix& a, const TropMatrix& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t dim_;
  std::vector<Trop> data_;
  std::optional<std::vector<Subset>> labels_;
};

/// Max-plus product. Throws std::invalid_argument on dimension mismatch.
/// Labels carry over when both operands share them.
TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b);
inline TropMatrix operator*(const TropMatrix& a, const TropMatrix& b) { return trop_mul(a, b); }

/// Product of the matrices named by `w`, with 'a' -> x and 'b' -> y.
/// Throws on an empty word, other letters, or dimension mismatch.
TropMatrix eval_word(std::string_view w, const TropMatrix& x, const TropMatrix& y);

bool is_upper_triangular(const TropMatrix& a);

/// Random dim x dim upper triangular matrix. Entries on and above the
/// diagonal are uniform in [lo, hi]; each entry strictly above the diagonal
/// is -inf instead with probability neg_inf_density. Deterministic in seed.
TropMatrix random_ut(std::size_t dim, std::int64_t lo, std::int64_t hi, double neg_inf_density,
                     std::uint64_t seed);
/// Same, drawing from an existing engine.
TropMatrix random_ut(std::size_t dim, std::int64_t lo, std::int64_t hi, double neg_inf_density,
                     Rng& rng);

/// Plain-text grid, one row per line, entries right-aligned.
std::string render(const TropMatrix& m);

}  // namespace placid
