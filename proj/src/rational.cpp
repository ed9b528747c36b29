#include "coorbit/rational.hpp"

#include <cctype>
#include <sstream>

namespace coorbit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_integer(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) {
    throw std::invalid_argument("not an integer: \"" + s + "\"");
  }
  Int v(body);
  return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_integer(text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  }
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  }
  if (den < 0) {  // keep the canonical positive-denominator form
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rat(0)); }

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string vec_to_string(const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace coorbit
