#include "negent/number_format.hpp"

#include <cstdio>

namespace negent {

namespace {

std::string strip_negative_zero(std::string s) {
  if (s.empty() || s.front() != '-') return s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c != '0' && c != '.') return s;
  }
  return s.substr(1);
}

}  // namespace

std::string format_g17(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return strip_negative_zero(buf);
}

std::string format_compact(double x, int decimals) {
  std::string s = format_fixed(x, decimals);
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return strip_negative_zero(s);
}

}  // namespace negent
