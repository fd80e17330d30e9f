#include "monocone/rational.hpp"

#include <cctype>

namespace monocone {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::CycleInCovers: return "CycleInCovers";
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
  if (!all_digits(digits) || !all_digits(den))
    throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
  if (Int(den) == 0)
    throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  Rat r(Int(num), Int(den));
  r.canonicalize();
  return r;
}

std::string format_rational(const Rat& value) {
  return value.get_str();
}

Rat dot(const QVec& a, const QVec& b) {
  check_internal(a.size() == b.size(), "dot: length mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Int dot(const ZVec& a, const ZVec& b) {
  check_internal(a.size() == b.size(), "dot: length mismatch");
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

Int dot(const ZVec& a, const std::vector<signed char>& coeffs) {
  check_internal(a.size() == coeffs.size(), "dot: length mismatch");
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeffs[i] > 0)
      sum += a[i];
    else if (coeffs[i] < 0)
      sum -= a[i];
  }
  return sum;
}

Rat dot(const QVec& a, const std::vector<signed char>& coeffs) {
  check_internal(a.size() == coeffs.size(), "dot: length mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeffs[i] > 0)
      sum += a[i];
    else if (coeffs[i] < 0)
      sum -= a[i];
  }
  return sum;
}

ZVec normalize_ray(const QVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * lcm;
    check_internal(scaled.get_den() == 1, "normalize_ray: denominator not cleared");
    out[i] = scaled.get_num();
  }
  reduce_by_gcd(out);
  return out;
}

void reduce_by_gcd(ZVec& v) {
  Int g = 0;
  for (const Int& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g > 1)
    for (Int& z : v) z /= g;
}

bool is_zero(const ZVec& v) {
  for (const Int& z : v)
    if (z != 0) return false;
  return true;
}

bool lex_less(const ZVec& a, const ZVec& b) {
  check_internal(a.size() == b.size(), "lex_less: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

QVec to_rational(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& z : v) out.emplace_back(z);
  return out;
}

}  // namespace monocone
