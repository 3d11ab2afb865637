#include "placid/tropical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace placid {

std::int64_t Trop::value() const {
  if (!finite_) throw std::logic_error("Trop::value: -inf has no integer value");
  return value_;
}

std::string format_trop(Trop t) { return t.is_finite() ? std::to_string(t.value()) : "-inf"; }

TropMatrix::TropMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("TropMatrix: dimension must be positive");
}

TropMatrix::TropMatrix(const std::vector<std::vector<Trop>>& rows) : TropMatrix(rows.size()) {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (rows[i].size() != dim_) {
      throw std::invalid_argument("TropMatrix: row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(dim_));
    }
    std::copy(rows[i].begin(), rows[i].end(), data_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
  }
}

TropMatrix TropMatrix::identity(std::size_t dim) {
  TropMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Trop::zero();
  return m;
}

Trop TropMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("TropMatrix::at");
  return (*this)(i, j);
}

void TropMatrix::set_labels(std::vector<Subset> labels) {
  if (labels.size() != dim_) {
    throw std::invalid_argument("TropMatrix::set_labels: expected " + std::to_string(dim_) +
                                " labels, got " + std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

std::vector<std::vector<Trop>> TropMatrix::rows() const {
  std::vector<std::vector<Trop>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  }
  return out;
}

TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trop_mul: dimension mismatch " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
  const std::size_t d = a.dim();
  TropMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Trop aik = a(i, k);
      if (!aik.is_finite()) continue;
      for (std::size_t j = 0; j < d; ++j) c(i, j) = c(i, j) + aik * b(k, j);
    }
  }
  if (a.labels() && a.labels() == b.labels()) c.set_labels(*a.labels());
  return c;
}

TropMatrix eval_word(std::string_view w, const TropMatrix& x, const TropMatrix& y) {
  if (w.empty()) throw std::invalid_argument("eval_word: empty word");
  if (x.dim() != y.dim()) throw std::invalid_argument("eval_word: dimension mismatch");
  auto pick = [&](char c) -> const TropMatrix& {
    if (c == 'a') return x;
    if (c == 'b') return y;
    throw std::invalid_argument(std::string("eval_word: letter '") + c + "' not in {a,b}");
  };
  TropMatrix acc = pick(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) acc = trop_mul(acc, pick(w[i]));
  return acc;
}

bool is_upper_triangular(const TropMatrix& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a(i, j).is_finite()) return false;
    }
  }
  return true;
}

TropMatrix random_ut(std::size_t dim, std::int64_t lo, std::int64_t hi, double neg_inf_density,
                     std::uint64_t seed) {
  Rng rng(splitmix64(seed));
  return random_ut(dim, lo, hi, neg_inf_density, rng);
}

TropMatrix random_ut(std::size_t dim, std::int64_t lo, std::int64_t hi, double neg_inf_density,
                     Rng& rng) {
  if (hi < lo) throw std::invalid_argument("random_ut: empty entry range");
  if (!(neg_inf_density >= 0.0 && neg_inf_density <= 1.0)) {
    throw std::invalid_argument("random_ut: -inf density outside [0, 1]");
  }
  TropMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (j > i && bernoulli(rng, neg_inf_density)) continue;
      m(i, j) = Trop{uniform_int(rng, lo, hi)};
    }
  }
  return m;
}

std::string render(const TropMatrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) width = std::max(width, format_trop(m(i, j)).size());
  }
  std::size_t label_width = 0;
  if (m.labels()) {
    for (Subset s : *m.labels()) label_width = std::max(label_width, format_subset(s).size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m.labels()) {
      const auto lbl = format_subset((*m.labels())[i]);
      os << std::string(label_width - lbl.size(), ' ') << lbl << " |";
    }
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto s = format_trop(m(i, j));
      os << ' ' << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace placid
