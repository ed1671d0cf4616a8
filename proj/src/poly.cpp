#include <cctype>
#include <functional>

#include "halphen/parse.hpp"
#include "halphen/poly.hpp"

namespace halphen {

std::vector<Monomial> monomials_of_degree(int nvars, unsigned d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, unsigned)> rec = [&](int i, unsigned left) {
    if (i == nvars - 1) {
      m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(left);
      m.deg = d;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::grevlex().compare(a, b, kMaxVars) > 0;
  });
  return out;
}

QMultiPoly primitive(const QMultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) {
    den = lcm(den, c.get_den());
    num = gcd(num, c.get_num());
  }
  Rational s(den, num);
  s.canonicalize();
  if (sgn(p.lead().second) < 0) s = -s;
  return p * s;
}

namespace {

class Parser {
public:
  Parser(std::string_view s, const std::vector<std::string>& names) : s_(s), names_(names) {}

  QMultiPoly run() {
    QMultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return p;
  }

private:
  int nv() const { return static_cast<int>(names_.size()); }

  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) +
                     "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  QMultiPoly expr() {
    QMultiPoly acc(nv());
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      QMultiPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  QMultiPoly term() {
    QMultiPoly acc = power();
    for (;;) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        QMultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) error("division only by a nonzero constant");
        acc = acc * (Rational(1) / d.lead().second);
      } else if (pos_ < s_.size() &&
                 (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc *= power();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  QMultiPoly power() {
    QMultiPoly b = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }

  QMultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QMultiPoly e = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      QMultiPoly a = power();
      return c == '-' ? -a : a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational v(Integer(std::string(s_.substr(start, pos_ - start))));
      return QMultiPoly(nv(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < nv(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return QMultiPoly::var(nv(), i);
      // juxtaposed names such as "xy": take the longest known prefix
      int best = -1;
      std::size_t len = 0;
      for (int i = 0; i < nv(); ++i) {
        const auto& n = names_[static_cast<std::size_t>(i)];
        if (n.size() > len && n.size() < name.size() && name.compare(0, n.size(), n) == 0 &&
            std::isalpha(static_cast<unsigned char>(name[n.size()]))) {
          best = i;
          len = n.size();
        }
      }
      if (best >= 0) {
        pos_ = start + len;
        return QMultiPoly::var(nv(), best);
      }
      pos_ = start;
      error("unknown variable '" + name + "'");
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

QMultiPoly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

std::vector<QMultiPoly> parse_poly_list(const std::vector<std::string>& texts,
                                        const std::vector<std::string>& names) {
  std::vector<QMultiPoly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(t, names));
  return out;
}

}  // namespace halphen
