#include "bil/ring/parse.hpp"

#include <cctype>
#include <string>

#include "bil/error.hpp"

namespace bil::ring {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    const Field& F = ring_.field();
    std::vector<PTerm> terms;
    skip();
    bool first = true;
    while (true) {
      skip();
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? F.neg(1) : 1;
        ++pos_;
        skip();
      } else if (!first) {
        if (pos_ >= s_.size()) break;
        fail("expected '+' or '-'");
      }
      if (pos_ >= s_.size()) fail("expected a term");
      PTerm t = term();
      t.coef = F.mul(t.coef, sign);
      terms.push_back(t);
      first = false;
      skip();
      if (pos_ >= s_.size()) break;
    }
    return Polynomial(std::move(terms), F);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                       std::string(s_) + "\"");
  }

  std::uint64_t number() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (1ULL << 62)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  PTerm term() {
    const Field& F = ring_.field();
    Scalar coef = 1;
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = F.from_int(static_cast<std::int64_t>(number() % F.characteristic()));
      skip();
      if (peek() != '*') return {Monomial{}, coef};
      ++pos_;
      skip();
    }
    std::vector<int> e(ring_.num_vars(), 0);
    while (true) {
      skip();
      if (peek() != 'x') fail("expected a variable");
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
      std::uint64_t idx = number();
      if (idx >= static_cast<std::uint64_t>(ring_.num_vars()))
        throw Error(Errc::UnknownVariable, "x" + std::to_string(idx) + " is not a variable of the ring");
      skip();
      std::uint64_t ex = 1;
      if (peek() == '^') {
        ++pos_;
        ex = number();
        skip();
      }
      e[idx] += static_cast<int>(ex);
      if (e[idx] > Monomial::kMaxExponent) fail("exponent too large");
      if (peek() != '*') break;
      ++pos_;
    }
    return {Monomial::from_exponents(e), coef};
  }

  std::string_view s_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingContext& ring, bool require_homogeneous) {
  Polynomial f = Parser(text, ring).run();
  if (require_homogeneous && !f.is_homogeneous())
    throw Error(Errc::NonHomogeneous, "\"" + std::string(text) + "\" is not homogeneous");
  return f;
}

std::string print_monomial(const Monomial& m, int num_vars) {
  std::string out;
  for (int i = 0; i < num_vars; ++i) {
    int e = m.exponent(i);
    if (!e) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string print_polynomial(const Polynomial& f, const RingContext& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = ring.field().to_signed(t.coef);
    bool negative = c < 0;
    std::uint64_t a = static_cast<std::uint64_t>(negative ? -c : c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = print_monomial(t.mono, ring.num_vars());
    if (mono.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace bil::ring
