// SPDX-License-Identifier: Apache-2.0
#include "finapp/cost.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace finapp {

Cost::Cost(long n) : value_(n) {
  if (n < 0) throw std::invalid_argument("cost must be nonnegative");
}

Cost Cost::rational(const mpq_class& q) {
  if (sgn(q) < 0) throw std::invalid_argument("cost must be nonnegative");
  Cost c;
  c.value_ = q;
  c.value_.canonicalize();
  return c;
}

Cost Cost::ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return rational(mpq_class(mpz_class(num), mpz_class(den)));
}

Cost Cost::infinity() {
  Cost c;
  c.infinite_ = true;
  return c;
}

const mpq_class& Cost::value() const {
  if (infinite_) throw std::logic_error("value() of infinite cost");
  return value_;
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

Cost add(const Cost& u, const Cost& v) {
  if (u.is_infinite() || v.is_infinite()) return Cost::infinity();
  return Cost::rational(u.value() + v.value());
}

Cost ominus(const Cost& v, const Cost& u) {
  if (u.is_infinite()) return Cost{};
  if (v.is_infinite()) return Cost::infinity();
  if (v.value() <= u.value()) return Cost{};
  return Cost::rational(v.value() - u.value());
}

Cost join(const Cost& u, const Cost& v) { return u < v ? v : u; }
Cost meet(const Cost& u, const Cost& v) { return v < u ? v : u; }

Cost inf_of(std::span<const Cost> values) {
  Cost best = Cost::infinity();
  for (const auto& c : values) {
    if (c < best) best = c;
  }
  return best;
}

Cost sup_of(std::span<const Cost> values) {
  Cost best;
  for (const auto& c : values) {
    if (best < c) best = c;
  }
  return best;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  });
}

[[noreturn]] void fail(std::string_view text, std::size_t pos,
                       const char* why) {
  throw CostParseError("invalid cost '" + std::string(text) + "' at offset " +
                           std::to_string(pos) + ": " + why,
                       pos);
}

}  // namespace

Cost parse_cost(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) fail(text, begin, "empty");
  if (s == "inf" || s == "infinity" || s == "∞") return Cost::infinity();
  if (s.front() == '-') fail(text, begin, "negative");
  if (s.front() == '+') {
    s.remove_prefix(1);
    ++begin;
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num)) fail(text, begin, "bad numerator");
    if (!all_digits(den)) fail(text, begin + slash + 1, "bad denominator");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(text, begin + slash + 1, "zero denominator");
    return Cost::rational(mpq_class(n, d));
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail(text, begin, "bare point");
    if (!whole.empty() && !all_digits(whole)) fail(text, begin, "bad digits");
    if (!frac.empty() && !all_digits(frac)) fail(text, begin + dot + 1, "bad digits");
    mpz_class w(whole.empty() ? std::string("0") : std::string(whole), 10);
    mpz_class f(frac.empty() ? std::string("0") : std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    return Cost::rational(mpq_class(w * scale + f, scale));
  }

  if (!all_digits(s)) {
    auto bad = std::find_if(s.begin(), s.end(), [](char ch) {
      return std::isdigit(static_cast<unsigned char>(ch)) == 0;
    });
    fail(text, begin + static_cast<std::size_t>(bad - s.begin()),
         "unexpected character");
  }
  return Cost::rational(mpq_class(mpz_class(std::string(s), 10)));
}

std::string to_string(const Cost& c) {
  if (c.is_infinite()) return "inf";
  return c.value().get_str();
}

std::ostream& operator<<(std::ostream& os, const Cost& c) {
  return os << to_string(c);
}

}  // namespace finapp
