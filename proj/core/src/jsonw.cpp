#include "jsonw.hpp"

#include <cmath>
#include <cstdio>

namespace wavelab::jsonw {

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(int v) { return std::to_string(v); }
std::string num(std::size_t v) { return std::to_string(v); }

std::string str(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::string boolean(bool v) { return v ? "true" : "false"; }

std::string arr(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += num(v[i]);
  }
  out += ']';
  return out;
}

std::string arr_raw(const std::vector<std::string>& elems) {
  std::string out = "[";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += elems[i];
  }
  out += ']';
  return out;
}

std::string arr_str(const std::vector<std::string>& elems) {
  std::vector<std::string> quoted;
  quoted.reserve(elems.size());
  for (const auto& e : elems) quoted.push_back(str(e));
  return arr_raw(quoted);
}

Obj& Obj::put(const std::string& key, double v) { return put_raw(key, num(v)); }
Obj& Obj::put(const std::string& key, int v) { return put_raw(key, num(v)); }
Obj& Obj::put(const std::string& key, std::size_t v) { return put_raw(key, num(v)); }
Obj& Obj::put(const std::string& key, bool v) { return put_raw(key, boolean(v)); }
Obj& Obj::put(const std::string& key, const char* v) { return put_raw(key, jsonw::str(v)); }
Obj& Obj::put(const std::string& key, const std::string& v) {
  return put_raw(key, jsonw::str(v));
}

Obj& Obj::put_raw(const std::string& key, const std::string& raw) {
  fields_.emplace_back(key, raw);
  return *this;
}

std::string Obj::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ", ";
    out += jsonw::str(fields_[i].first) + ": " + fields_[i].second;
  }
  out += '}';
  return out;
}

std::string Obj::pretty() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    out += "  " + jsonw::str(fields_[i].first) + ": " + fields_[i].second;
    if (i + 1 < fields_.size()) out += ',';
    out += '\n';
  }
  out += "}\n";
  return out;
}

}  // namespace wavelab::jsonw
