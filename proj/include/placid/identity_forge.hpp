#pragma once

// Two-variable semigroup identities for plactic monoids. For a word q over
// {a,b} containing every length n-1 word as a factor and h = floor(n^2/4),
//
//   u = q^h a q^h,   v = q^h b q^h,
//
// and the identity is u = v after substituting a -> ab, b -> ba. The
// constrained variant additionally asks q to begin with b, end in a^(n-1)
// and avoid a^n, so that a^n is a factor of u but not of v.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace placid {

/// Words over {a, b}, written with the letters 'a' and 'b'.
using AbWord = std::string;

struct IdentityWords {
  AbWord lhs;
  AbWord rhs;

  friend bool operator==(const IdentityWords&, const IdentityWords&) = default;
};

/// Throws std::invalid_argument unless both sides are non-empty words over {a,b}.
void validate_identity(const IdentityWords& id);

/// How q is chosen. Minimal uses a de Bruijn cycle (shortest possible
/// superstring when unconstrained); Any uses the b-separated concatenation
/// of all length n-1 words, which is valid but longer.
enum class QMode { Minimal, Any };

std::string to_string(QMode m);
/// "minimal" or "any"; throws std::invalid_argument otherwise.
QMode parse_qmode(std::string_view s);

/// Binary de Bruijn cycle of the given order over {a,b}, length 2^order,
/// starting with a^order (lexicographically least).
AbWord de_bruijn(int order);

struct QCheck {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Direct factor scans for every q-word invariant.
QCheck verify_q(std::string_view q, int n, bool constrained);

/// Throws std::invalid_argument for n < 2 and std::logic_error if the
/// constructed word fails verify_q.
AbWord build_q(int n, bool constrained, QMode mode = QMode::Minimal);

/// floor(n^2 / 4).
int identity_exponent(int n);

/// Homomorphic image of w under a -> image_a, b -> image_b.
template <class Seq>
Seq substitute(std::string_view w, const Seq& image_a, const Seq& image_b) {
  Seq out;
  for (char c : w) {
    const Seq& img = c == 'a' ? image_a : image_b;
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

AbWord substitute(std::string_view w, std::string_view image_a, std::string_view image_b);

struct BuiltIdentity {
  int rank = 0;
  bool constrained = false;
  QMode mode = QMode::Minimal;
  AbWord q;
  int h = 0;
  AbWord pre_lhs;  ///< q^h a q^h
  AbWord pre_rhs;  ///< q^h b q^h
  IdentityWords identity;  ///< Both sides after a -> ab, b -> ba.

  std::size_t length() const { return identity.lhs.size(); }
};

BuiltIdentity build_identity(int n, bool constrained, QMode mode = QMode::Minimal);

/// uvvuvu = uvuvvu with u = abbaababba, v = abbabaabba; known to hold in
/// rank 3. Kept as a fixture.
IdentityWords rank3_fixture_identity();

/// Length of the longest run of consecutive a's.
std::size_t longest_a_run(std::string_view w);

}  // namespace placid
