#include "etalab/report/parse.hpp"

#include <cctype>

#include "etalab/lab/probes.hpp"

namespace etalab::report {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t column() const { return base_ + pos_ + 1; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, column()); }

  // [sign] digits [. digits] [e [sign] digits]; returns the matched text.
  std::string decimal(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '+' || peek() == '-')) advance();
    std::size_t digits = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
      ++digits;
    }
    if (peek() == '.') {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        advance();
        ++digits;
      }
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected a decimal number");
    }
    if (peek() == 'e' || peek() == 'E') {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent digits");
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

BigReal to_real(const std::string& digits, Precision prec) { return BigReal::parse(digits, prec); }

struct Item {
  std::string_view text;
  std::size_t offset;
};

std::vector<Item> split(std::string_view text, char sep) {
  std::vector<Item> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back({text.substr(start, i - start), start});
      start = i + 1;
    }
  }
  return out;
}

TailIndex index_at(std::string_view text, std::size_t base) {
  Scanner sc(text, base);
  sc.skip_space();
  const std::size_t col = sc.column();
  const std::string lit = sc.decimal(false);
  sc.skip_space();
  if (!sc.done()) sc.fail("unexpected character in index");

  // mantissa digits and decimal exponent, exactly.
  std::string mantissa;
  long exponent = 0;
  bool fraction = false;
  std::size_t i = 0;
  for (; i < lit.size() && lit[i] != 'e' && lit[i] != 'E'; ++i) {
    if (lit[i] == '.') {
      fraction = true;
    } else {
      mantissa += lit[i];
      if (fraction) --exponent;
    }
  }
  if (i < lit.size()) exponent += std::stol(lit.substr(i + 1));
  while (exponent < 0 && !mantissa.empty() && mantissa.back() == '0') {
    mantissa.pop_back();
    ++exponent;
  }
  if (exponent < 0) throw ParseError("index '" + lit + "' is not an integer", col);
  const std::size_t first = mantissa.find_first_not_of('0');
  mantissa = first == std::string::npos ? "0" : mantissa.substr(first);
  if (mantissa != "0") mantissa.append(static_cast<std::size_t>(exponent), '0');
  if (mantissa.size() > 19) throw ParseError("index '" + lit + "' exceeds 10^18", col);
  const unsigned long long value = std::stoull(mantissa);
  if (value > TailIndex::kMax) throw ParseError("index '" + lit + "' exceeds 10^18", col);
  return TailIndex(value);
}

}  // namespace

BigComplex parse_complex(std::string_view text, Precision prec) {
  Scanner sc(text);
  sc.skip_space();
  const std::string first = sc.decimal(true);
  sc.skip_space();
  if (sc.done()) return BigComplex(to_real(first, prec), BigReal(prec));
  if (sc.peek() == 'i') {
    sc.advance();
    sc.skip_space();
    if (!sc.done()) sc.fail("unexpected character after imaginary part");
    return BigComplex(BigReal(prec), to_real(first, prec));
  }
  if (sc.peek() != '+' && sc.peek() != '-') sc.fail("expected '+' or '-' before the imaginary part");
  const bool negative = sc.peek() == '-';
  sc.advance();
  sc.skip_space();
  const std::string second = sc.decimal(false);
  sc.skip_space();
  if (sc.peek() != 'i') sc.fail("expected 'i' after the imaginary part");
  sc.advance();
  sc.skip_space();
  if (!sc.done()) sc.fail("unexpected character after imaginary part");
  BigReal im = to_real(second, prec);
  if (negative) im = -im;
  return BigComplex(to_real(first, prec), im);
}

BigReal parse_real(std::string_view text, Precision prec) {
  Scanner sc(text);
  sc.skip_space();
  const std::string lit = sc.decimal(true);
  sc.skip_space();
  if (!sc.done()) sc.fail("unexpected character in number");
  return to_real(lit, prec);
}

TailIndex parse_index(std::string_view text) { return index_at(text, 0); }

std::vector<TailIndex> parse_schedule(std::string_view text) {
  std::vector<TailIndex> out;
  for (const Item& item : split(text, ',')) {
    const auto colon = item.text.find(':');
    std::vector<TailIndex> part;
    if (colon == std::string_view::npos) {
      part.push_back(index_at(item.text, item.offset));
    } else {
      const TailIndex lo = index_at(item.text.substr(0, colon), item.offset);
      const TailIndex hi = index_at(item.text.substr(colon + 1), item.offset + colon + 1);
      if (!(lo < hi) || lo.value() == 0) {
        throw ParseError("range needs 0 < lo < hi", item.offset + 1);
      }
      part = lab::Schedule::geometric(lo.value(), hi.value()).values();
    }
    for (const TailIndex n : part) {
      if (!out.empty() && !(out.back() < n)) {
        throw ParseError("schedule must be strictly increasing", item.offset + 1);
      }
      out.push_back(n);
    }
  }
  return out;
}

std::pair<BigReal, BigReal> parse_range(std::string_view text, Precision prec) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'lo:hi'", text.size() + 1);
  auto part = [&](std::string_view piece, std::size_t base) {
    Scanner sc(piece, base);
    sc.skip_space();
    const std::string lit = sc.decimal(true);
    sc.skip_space();
    if (!sc.done()) sc.fail("unexpected character in range");
    return to_real(lit, prec);
  };
  BigReal lo = part(text.substr(0, colon), 0);
  BigReal hi = part(text.substr(colon + 1), colon + 1);
  if (!(lo < hi)) throw ParseError("range needs lo < hi", 1);
  return {std::move(lo), std::move(hi)};
}

std::vector<BigReal> parse_reals(std::string_view text, Precision prec) {
  std::vector<BigReal> out;
  for (const Item& item : split(text, ',')) {
    Scanner sc(item.text, item.offset);
    sc.skip_space();
    const std::string lit = sc.decimal(true);
    sc.skip_space();
    if (!sc.done()) sc.fail("unexpected character in number list");
    out.push_back(to_real(lit, prec));
  }
  return out;
}

}  // namespace etalab::report
