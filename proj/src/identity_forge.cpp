#include "placid/identity_forge.hpp"

#include <stdexcept>

namespace placid {

void validate_identity(const IdentityWords& id) {
  for (const auto* side : {&id.lhs, &id.rhs}) {
    if (side->empty()) throw std::invalid_argument("identity: empty side");
    if (side->find_first_not_of("ab") != std::string::npos) {
      throw std::invalid_argument("identity: side '" + *side + "' is not a word over {a,b}");
    }
  }
}

std::string to_string(QMode m) { return m == QMode::Minimal ? "minimal" : "any"; }

QMode parse_qmode(std::string_view s) {
  if (s == "minimal") return QMode::Minimal;
  if (s == "any") return QMode::Any;
  throw std::invalid_argument("unknown q mode '" + std::string(s) + "' (minimal|any)");
}

AbWord de_bruijn(int order) {
  if (order < 1 || order > 24) throw std::invalid_argument("de_bruijn: order out of range");
  // Lyndon-word concatenation (Fredricksen-Kessler-Maiorana).
  const auto k = static_cast<std::size_t>(order);
  std::vector<int> a(k + 1, 0);
  AbWord out;
  auto db = [&](auto&& self, std::size_t t, std::size_t p) -> void {
    if (t > k) {
      if (k % p == 0) {
        for (std::size_t i = 1; i <= p; ++i) out += a[i] ? 'b' : 'a';
      }
      return;
    }
    a[t] = a[t - p];
    self(self, t + 1, p);
    if (a[t - p] == 0) {
      a[t] = 1;
      self(self, t + 1, t);
    }
  };
  db(db, 1, 1);
  return out;
}

std::size_t longest_a_run(std::string_view w) {
  std::size_t best = 0, cur = 0;
  for (char c : w) {
    cur = c == 'a' ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

QCheck verify_q(std::string_view q, int n, bool constrained) {
  QCheck check;
  if (n < 2) {
    check.violations.push_back("rank must be at least 2");
    return check;
  }
  if (q.find_first_not_of("ab") != std::string_view::npos) {
    check.violations.push_back("q contains letters outside {a,b}");
    return check;
  }
  const auto k = static_cast<std::size_t>(n - 1);
  for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
    std::string factor;
    for (std::size_t i = k; i-- > 0;) factor += ((code >> i) & 1U) ? 'b' : 'a';
    if (q.find(factor) == std::string_view::npos) {
      check.violations.push_back("missing factor " + factor);
    }
  }
  if (constrained) {
    const std::string tail(k, 'a');
    if (q.empty() || q.front() != 'b') check.violations.push_back("does not begin with b");
    if (q.size() < k || q.substr(q.size() - k) != tail) {
      check.violations.push_back("does not end with a^" + std::to_string(k));
    }
    if (longest_a_run(q) >= static_cast<std::size_t>(n)) {
      check.violations.push_back("contains a^" + std::to_string(n));
    }
  }
  return check;
}

namespace {

AbWord separated_q(int n) {
  // b w_1 b w_2 ... b w_m b a^(n-1), over all non-constant-a words w_i.
  const auto k = static_cast<std::size_t>(n - 1);
  AbWord q;
  for (std::size_t code = 1; code < (std::size_t{1} << k); ++code) {
    q += 'b';
    for (std::size_t i = k; i-- > 0;) q += ((code >> i) & 1U) ? 'b' : 'a';
  }
  q += 'b';
  q += std::string(k, 'a');
  return q;
}

AbWord minimal_q(int n, bool constrained) {
  const int k = n - 1;
  const AbWord cycle = de_bruijn(k);
  const auto ku = static_cast<std::size_t>(k);
  if (!constrained) {
    // Linearise the cycle by repeating its first k-1 letters at the end.
    return cycle + cycle.substr(0, ku - 1);
  }
  // The cycle holds a single run a^k (cyclically). Rotate it to the end,
  // then prepend a^(k-1) to recover the windows that wrapped around.
  const auto run = cycle.find(std::string(ku, 'a'));
  const AbWord rotated = cycle.substr(run + ku) + cycle.substr(0, run + ku);
  AbWord q = std::string(ku - 1, 'a') + rotated;
  if (q.front() != 'b') q.insert(q.begin(), 'b');
  return q;
}

}  // namespace

AbWord build_q(int n, bool constrained, QMode mode) {
  if (n < 2) throw std::invalid_argument("build_q: rank must be at least 2, got " + std::to_string(n));
  if (n > 20) throw std::invalid_argument("build_q: rank too large");
  AbWord q = mode == QMode::Minimal ? minimal_q(n, constrained) : separated_q(n);
  if (auto check = verify_q(q, n, constrained); !check) {
    throw std::logic_error("build_q: constructed q '" + q + "' rejected: " + check.violations.front());
  }
  return q;
}

int identity_exponent(int n) { return n * n / 4; }

AbWord substitute(std::string_view w, std::string_view image_a, std::string_view image_b) {
  return substitute<AbWord>(w, AbWord(image_a), AbWord(image_b));
}

BuiltIdentity build_identity(int n, bool constrained, QMode mode) {
  BuiltIdentity out;
  out.rank = n;
  out.constrained = constrained;
  out.mode = mode;
  out.q = build_q(n, constrained, mode);
  out.h = identity_exponent(n);
  AbWord power;
  for (int i = 0; i < out.h; ++i) power += out.q;
  out.pre_lhs = power + 'a' + power;
  out.pre_rhs = power + 'b' + power;
  out.identity = {substitute(out.pre_lhs, "ab", "ba"), substitute(out.pre_rhs, "ab", "ba")};
  return out;
}

IdentityWords rank3_fixture_identity() {
  const AbWord u = "abbaababba";
  const AbWord v = "abbabaabba";
  return {u + v + v + u + v + u, u + v + u + v + v + u};
}

}  // namespace placid
