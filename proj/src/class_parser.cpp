#include "kurank2/class_parser.hpp"

#include <cctype>

namespace kurank2 {

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  fail(ErrorCode::Parse, "cannot parse class '" + text + "': " + why);
}

Int parse_int(const std::string& text, const std::string& digits) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(digits, &used);
    if (used != digits.size()) bad(text, "bad integer '" + digits + "'");
    return v;
  } catch (const std::out_of_range&) {
    bad(text, "integer out of range");
  } catch (const std::invalid_argument&) {
    bad(text, "bad integer '" + digits + "'");
  }
}

}  // namespace

KuClass parse_class(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad(text, "empty");
  if (s == "0") return {};

  if (s.find(',') != std::string::npos) {
    std::string inner = s;
    if (inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
    auto comma = inner.find(',');
    return {parse_int(text, inner.substr(0, comma)), parse_int(text, inner.substr(comma + 1))};
  }

  KuClass total;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      bad(text, "expected '+' or '-'");
    }
    first = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Int coeff = i > start ? parse_int(text, s.substr(start, i - start)) : 1;
    if (i < s.size() && s[i] == '*') ++i;
    KuClass letter;
    auto match = [&](const char* token) {
      std::string t(token);
      if (s.compare(i, t.size(), t) == 0) {
        i += t.size();
        return true;
      }
      return false;
    };
    if (match("a") || match("A") || match("α")) letter = kAlpha;
    else if (match("b") || match("B") || match("β")) letter = kBeta;
    else if (match("g") || match("G") || match("γ")) letter = kGamma;
    else bad(text, "expected one of a, b, g");
    total = total + mul64(sign, coeff) * letter;
  }
  return total;
}

}  // namespace kurank2
