#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dqa/rdf/term.hpp"

// Lexical-space validation and value comparison for the XSD datatypes that
// SPARQL 1.1 operates on. Literals of any other datatype are opaque: they
// are never reported ill-typed (unknown is not invalid).
namespace dqa::xsd {

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view strip_sign(std::string_view s, int& sign) {
  sign = 1;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = -1;
    s.remove_prefix(1);
  }
  return s;
}

inline bool lex_integer(std::string_view s) {
  int sign;
  return all_digits(strip_sign(s, sign));
}

inline bool lex_decimal(std::string_view s) {
  int sign;
  s = strip_sign(s, sign);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  auto head = s.substr(0, dot), tail = s.substr(dot + 1);
  if (head.empty() && tail.empty()) return false;
  return (head.empty() || all_digits(head)) &&
         (tail.empty() || all_digits(tail)) && !(head.empty() && tail.empty());
}

inline bool lex_float(std::string_view s) {
  if (s == "INF" || s == "-INF" || s == "+INF" || s == "NaN") return true;
  auto e = s.find_first_of("eE");
  if (e == std::string_view::npos) return lex_decimal(s);
  if (!lex_decimal(s.substr(0, e))) return false;
  return lex_integer(s.substr(e + 1));
}

inline bool lex_boolean(std::string_view s) {
  return s == "true" || s == "false" || s == "1" || s == "0";
}

// Fits-in-range check against an int64 window; arbitrarily long lexical
// forms are handled by digit-count comparison.
inline bool integer_in_range(std::string_view s, int64_t lo, int64_t hi) {
  int sign;
  std::string_view digits = strip_sign(s, sign);
  size_t lead = digits.find_first_not_of('0');
  digits = lead == std::string_view::npos ? std::string_view("0")
                                          : digits.substr(lead);
  if (digits.size() > 19) return false;
  errno = 0;
  unsigned long long mag = std::stoull(std::string(digits));
  if (sign > 0)
    return hi >= 0 && mag <= static_cast<unsigned long long>(hi);
  return lo < 0 ? mag <= static_cast<unsigned long long>(-(lo + 1)) + 1
                : mag == 0;
}

inline bool valid_day(int year, int month, int day) {
  static const int lens[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1) return false;
  int len = lens[month - 1];
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  if (month == 2 && leap) len = 29;
  return day <= len;
}

struct DateTimeParts {
  int year = 0, month = 1, day = 1, hour = 0, minute = 0;
  double second = 0;
  int tz_minutes = 0;  // offset; absent timezone treated as Z for ordering
  bool has_tz = false;
};

inline bool parse_int(std::string_view s, size_t& i, int width, int& out) {
  if (i + width > s.size()) return false;
  out = 0;
  for (int k = 0; k < width; ++k) {
    char c = s[i + k];
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  i += width;
  return true;
}

inline bool parse_timezone(std::string_view s, size_t& i, DateTimeParts& p) {
  if (i == s.size()) return true;
  if (s[i] == 'Z') {
    ++i;
    p.has_tz = true;
    p.tz_minutes = 0;
    return i == s.size();
  }
  if (s[i] != '+' && s[i] != '-') return false;
  int sign = s[i] == '-' ? -1 : 1;
  ++i;
  int hh, mm;
  if (!parse_int(s, i, 2, hh)) return false;
  if (i >= s.size() || s[i] != ':') return false;
  ++i;
  if (!parse_int(s, i, 2, mm)) return false;
  if (hh > 14 || mm > 59 || (hh == 14 && mm != 0)) return false;
  p.has_tz = true;
  p.tz_minutes = sign * (hh * 60 + mm);
  return i == s.size();
}

inline bool parse_date_part(std::string_view s, size_t& i, DateTimeParts& p) {
  size_t start = i;
  bool neg = i < s.size() && s[i] == '-';
  if (neg) ++i;
  size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    ++i;
    ++digits;
  }
  if (digits < 4) return false;
  if (digits > 4 && s[start + (neg ? 1 : 0)] == '0') return false;
  p.year = std::stoi(std::string(s.substr(start, i - start)));
  if (i >= s.size() || s[i] != '-') return false;
  ++i;
  if (!parse_int(s, i, 2, p.month)) return false;
  if (i >= s.size() || s[i] != '-') return false;
  ++i;
  if (!parse_int(s, i, 2, p.day)) return false;
  return valid_day(p.year, p.month, p.day);
}

inline bool parse_time_part(std::string_view s, size_t& i, DateTimeParts& p) {
  int hh, mm, ss;
  if (!parse_int(s, i, 2, hh)) return false;
  if (i >= s.size() || s[i] != ':') return false;
  ++i;
  if (!parse_int(s, i, 2, mm)) return false;
  if (i >= s.size() || s[i] != ':') return false;
  ++i;
  if (!parse_int(s, i, 2, ss)) return false;
  double frac = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    size_t digits = 0;
    double scale = 0.1;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      frac += (s[i] - '0') * scale;
      scale /= 10;
      ++i;
      ++digits;
    }
    if (digits == 0) return false;
  }
  bool midnight24 = hh == 24 && mm == 0 && ss == 0 && frac == 0;
  if (hh > 23 && !midnight24) return false;
  if (mm > 59 || ss > 59) return false;
  p.hour = hh;
  p.minute = mm;
  p.second = ss + frac;
  return true;
}

inline std::optional<DateTimeParts> parse_date(std::string_view s) {
  DateTimeParts p;
  size_t i = 0;
  if (!parse_date_part(s, i, p)) return std::nullopt;
  if (!parse_timezone(s, i, p)) return std::nullopt;
  return p;
}

inline std::optional<DateTimeParts> parse_date_time(std::string_view s) {
  DateTimeParts p;
  size_t i = 0;
  if (!parse_date_part(s, i, p)) return std::nullopt;
  if (i >= s.size() || s[i] != 'T') return std::nullopt;
  ++i;
  if (!parse_time_part(s, i, p)) return std::nullopt;
  if (!parse_timezone(s, i, p)) return std::nullopt;
  return p;
}

inline std::optional<DateTimeParts> parse_time(std::string_view s) {
  DateTimeParts p;
  size_t i = 0;
  if (!parse_time_part(s, i, p)) return std::nullopt;
  if (!parse_timezone(s, i, p)) return std::nullopt;
  return p;
}

inline bool lex_g(std::string_view s, int dashes, bool month, bool day) {
  // gYear/gYearMonth are handled separately; this covers --MM, ---DD, --MM-DD.
  size_t i = 0;
  for (int k = 0; k < dashes; ++k) {
    if (i >= s.size() || s[i] != '-') return false;
    ++i;
  }
  DateTimeParts p;
  int mm = 1, dd = 1;
  if (month) {
    if (!parse_int(s, i, 2, mm)) return false;
    if (mm < 1 || mm > 12) return false;
  }
  if (month && day) {
    if (i >= s.size() || s[i] != '-') return false;
    ++i;
  }
  if (day) {
    if (!parse_int(s, i, 2, dd)) return false;
    if (!valid_day(2000, month ? mm : 1, dd)) return false;  // leap-friendly
  }
  return parse_timezone(s, i, p);
}

inline bool lex_gyear(std::string_view s, bool with_month) {
  size_t i = 0;
  bool neg = i < s.size() && s[i] == '-';
  if (neg) ++i;
  size_t start = i, digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    ++i;
    ++digits;
  }
  if (digits < 4) return false;
  if (digits > 4 && s[start] == '0') return false;
  if (with_month) {
    if (i >= s.size() || s[i] != '-') return false;
    ++i;
    int mm;
    if (!parse_int(s, i, 2, mm)) return false;
    if (mm < 1 || mm > 12) return false;
  }
  DateTimeParts p;
  return parse_timezone(s, i, p);
}

inline bool lex_duration(std::string_view s, bool allow_ym, bool allow_dt) {
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i >= s.size() || s[i] != 'P') return false;
  ++i;
  bool any = false, in_time = false, time_marker = false;
  while (i < s.size()) {
    if (s[i] == 'T') {
      if (in_time) return false;
      in_time = true;
      time_marker = true;
      ++i;
      continue;
    }
    size_t digits = 0;
    bool frac = false;
    size_t num_start = i;
    while (i < s.size() &&
           ((s[i] >= '0' && s[i] <= '9') || (s[i] == '.' && !frac))) {
      if (s[i] == '.') frac = true;
      else ++digits;
      ++i;
    }
    if (digits == 0 || i >= s.size()) return false;
    char unit = s[i++];
    (void)num_start;
    bool ym_unit = !in_time && (unit == 'Y' || unit == 'M');
    bool d_unit = !in_time && unit == 'D';
    bool t_unit = in_time && (unit == 'H' || unit == 'M' || unit == 'S');
    if (!(ym_unit || d_unit || t_unit)) return false;
    if (frac && unit != 'S') return false;
    if (ym_unit && !allow_ym) return false;
    if ((d_unit || t_unit) && !allow_dt) return false;
    any = true;
  }
  if (time_marker) {
    // 'T' must be followed by at least one time component.
    auto t = s.find('T');
    if (t + 1 >= s.size()) return false;
  }
  return any;
}

inline bool lex_hex_binary(std::string_view s) {
  if (s.size() % 2 != 0) return false;
  for (char c : s) {
    bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
               (c >= 'A' && c <= 'F');
    if (!hex) return false;
  }
  return true;
}

inline bool lex_base64(std::string_view s) {
  std::string compact;
  compact.reserve(s.size());
  for (char c : s)
    if (c != ' ') compact += c;
  if (compact.size() % 4 != 0) return false;
  size_t pad = 0;
  while (pad < 2 && !compact.empty() &&
         compact[compact.size() - 1 - pad] == '=')
    ++pad;
  for (size_t i = 0; i < compact.size() - pad; ++i) {
    char c = compact[i];
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '+' || c == '/';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

// True when the datatype participates in SHACL/SPARQL ill-typed checking.
inline bool is_checked_datatype(const std::string& dt) {
  const std::string& X = vocab::XSD;
  if (dt.rfind(X, 0) != 0) return false;
  static const char* names[] = {
      "string",  "boolean",       "decimal",            "integer",
      "float",   "double",        "long",               "int",
      "short",   "byte",          "nonNegativeInteger", "nonPositiveInteger",
      "negativeInteger", "positiveInteger", "unsignedLong", "unsignedInt",
      "unsignedShort", "unsignedByte", "date", "dateTime",
      "time",    "duration",      "dayTimeDuration",    "yearMonthDuration",
      "gYear",   "gYearMonth",    "gMonth",             "gDay",
      "gMonthDay", "hexBinary",   "base64Binary",       "anyURI",
      "normalizedString", "token", "language"};
  std::string local = dt.substr(X.size());
  for (const char* n : names)
    if (local == n) return true;
  return false;
}

// Whether the lexical form is valid for the (supported) datatype.
inline bool lexical_matches(const std::string& dt, std::string_view lex) {
  using namespace detail;
  const std::string& X = vocab::XSD;
  if (dt.rfind(X, 0) != 0) return true;
  std::string local = dt.substr(X.size());
  if (local == "string" || local == "anyURI" || local == "normalizedString" ||
      local == "token" || local == "language")
    return true;
  if (local == "boolean") return lex_boolean(lex);
  if (local == "integer") return lex_integer(lex);
  if (local == "decimal") return lex_decimal(lex);
  if (local == "float" || local == "double") return lex_float(lex);
  if (local == "long")
    return lex_integer(lex) && integer_in_range(lex, INT64_MIN, INT64_MAX);
  if (local == "int")
    return lex_integer(lex) && integer_in_range(lex, INT32_MIN, INT32_MAX);
  if (local == "short")
    return lex_integer(lex) && integer_in_range(lex, -32768, 32767);
  if (local == "byte")
    return lex_integer(lex) && integer_in_range(lex, -128, 127);
  if (local == "nonNegativeInteger")
    return lex_integer(lex) && (lex[0] != '-' || integer_in_range(lex, 0, 0));
  if (local == "positiveInteger")
    return lex_integer(lex) && lex.find_first_not_of("+0") != std::string::npos &&
           lex[0] != '-';
  if (local == "nonPositiveInteger")
    return lex_integer(lex) &&
           (lex[0] == '-' || integer_in_range(lex, 0, 0));
  if (local == "negativeInteger")
    return lex_integer(lex) && lex[0] == '-' &&
           lex.find_first_not_of("0", 1) != std::string::npos;
  if (local == "unsignedLong") {
    if (!lex_integer(lex) || lex[0] == '-') return false;
    std::string_view d = lex;
    if (d[0] == '+') d.remove_prefix(1);
    size_t nz = d.find_first_not_of('0');
    d = nz == std::string_view::npos ? std::string_view("0") : d.substr(nz);
    return d.size() < 20 ||
           (d.size() == 20 && d <= std::string_view("18446744073709551615"));
  }
  if (local == "unsignedInt")
    return lex_integer(lex) && lex[0] != '-' &&
           integer_in_range(lex, 0, 4294967295LL);
  if (local == "unsignedShort")
    return lex_integer(lex) && lex[0] != '-' && integer_in_range(lex, 0, 65535);
  if (local == "unsignedByte")
    return lex_integer(lex) && lex[0] != '-' && integer_in_range(lex, 0, 255);
  if (local == "date") return parse_date(lex).has_value();
  if (local == "dateTime") return parse_date_time(lex).has_value();
  if (local == "time") return parse_time(lex).has_value();
  if (local == "duration") return lex_duration(lex, true, true);
  if (local == "yearMonthDuration") return lex_duration(lex, true, false);
  if (local == "dayTimeDuration") return lex_duration(lex, false, true);
  if (local == "gYear") return lex_gyear(lex, false);
  if (local == "gYearMonth") return lex_gyear(lex, true);
  if (local == "gMonth") return lex_g(lex, 2, true, false);
  if (local == "gDay") return lex_g(lex, 3, false, true);
  if (local == "gMonthDay") return lex_g(lex, 2, true, true);
  if (local == "hexBinary") return lex_hex_binary(lex);
  if (local == "base64Binary") return lex_base64(lex);
  return true;  // unrecognized xsd:* name: treat as opaque
}

// SV3's building block: a literal is ill-typed iff its datatype is one of
// the SPARQL 1.1 XSD datatypes and the lexical form is outside that
// datatype's lexical space.
inline bool literal_is_ill_typed(const rdf::Term& t) {
  if (!t.is_literal()) return false;
  if (!is_checked_datatype(t.datatype)) return false;
  return !lexical_matches(t.datatype, t.value);
}

inline bool is_numeric_datatype(const std::string& dt) {
  const std::string& X = vocab::XSD;
  if (dt.rfind(X, 0) != 0) return false;
  std::string local = dt.substr(X.size());
  static const char* names[] = {
      "decimal", "integer", "float", "double", "long", "int", "short", "byte",
      "nonNegativeInteger", "nonPositiveInteger", "negativeInteger",
      "positiveInteger", "unsignedLong", "unsignedInt", "unsignedShort",
      "unsignedByte"};
  for (const char* n : names)
    if (local == n) return true;
  return false;
}

// Typed comparison for sh:minInclusive / sh:maxInclusive. Returns the sign
// of (a - b), or nullopt when the two literals are incomparable.
inline std::optional<int> compare_literals(const rdf::Term& a,
                                           const rdf::Term& b) {
  using namespace detail;
  if (!a.is_literal() || !b.is_literal()) return std::nullopt;
  bool na = is_numeric_datatype(a.datatype), nb = is_numeric_datatype(b.datatype);
  if (na && nb) {
    if (!lexical_matches(a.datatype, a.value) ||
        !lexical_matches(b.datatype, b.value))
      return std::nullopt;
    long double x = strtold(a.value == "INF" || a.value == "+INF" ? "inf"
                            : a.value == "-INF"                   ? "-inf"
                            : a.value == "NaN" ? "nan" : a.value.c_str(),
                            nullptr);
    long double y = strtold(b.value == "INF" || b.value == "+INF" ? "inf"
                            : b.value == "-INF"                   ? "-inf"
                            : b.value == "NaN" ? "nan" : b.value.c_str(),
                            nullptr);
    if (x < y) return -1;
    if (x > y) return 1;
    return 0;
  }
  auto temporal = [](const rdf::Term& t) -> std::optional<DateTimeParts> {
    if (t.datatype == vocab::xsd::dateTime) return parse_date_time(t.value);
    if (t.datatype == vocab::xsd::date) return parse_date(t.value);
    if (t.datatype == vocab::xsd::time) return parse_time(t.value);
    return std::nullopt;
  };
  if (a.datatype == b.datatype) {
    auto pa = temporal(a), pb = temporal(b);
    if (pa && pb) {
      // Chronological order; a missing timezone sorts as UTC.
      auto civil_days = [](int y, int m, int d) -> long long {
        y -= m <= 2;
        long long era = (y >= 0 ? y : y - 399) / 400;
        unsigned yoe = static_cast<unsigned>(y - era * 400);
        unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
        unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        return era * 146097LL + doe - 719468LL;
      };
      auto key = [&](const DateTimeParts& p) {
        long double secs =
            civil_days(p.year, p.month, p.day) * 86400.0L +
            p.hour * 3600.0L + p.minute * 60.0L + p.second -
            p.tz_minutes * 60.0L;
        return secs;
      };
      long double x = key(*pa), y = key(*pb);
      if (x < y) return -1;
      if (x > y) return 1;
      return 0;
    }
    if (a.datatype == vocab::xsd::string_) {
      int c = a.value.compare(b.value);
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    if (a.datatype == vocab::xsd::boolean) {
      if (!lex_boolean(a.value) || !lex_boolean(b.value)) return std::nullopt;
      int x = (a.value == "true" || a.value == "1") ? 1 : 0;
      int y = (b.value == "true" || b.value == "1") ? 1 : 0;
      return x < y ? -1 : x > y ? 1 : 0;
    }
  }
  return std::nullopt;
}

}  // namespace dqa::xsd
