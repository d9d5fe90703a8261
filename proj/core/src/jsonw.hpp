#pragma once
// Minimal ordered JSON emitter. Key order is insertion order and numbers are
// printed with 17 significant digits, so equal values serialize to identical
// bytes. Non-finite numbers become null.

#include <string>
#include <vector>

namespace wavelab::jsonw {

std::string num(double v);
std::string num(int v);
std::string num(std::size_t v);
std::string str(const std::string& s);  // quoted and escaped
std::string boolean(bool v);
std::string arr(const std::vector<double>& v);
std::string arr_raw(const std::vector<std::string>& elems);
std::string arr_str(const std::vector<std::string>& elems);

class Obj {
 public:
  Obj& put(const std::string& key, double v);
  Obj& put(const std::string& key, int v);
  Obj& put(const std::string& key, std::size_t v);
  Obj& put(const std::string& key, bool v);
  Obj& put(const std::string& key, const char* v);
  Obj& put(const std::string& key, const std::string& v);
  Obj& put_raw(const std::string& key, const std::string& raw);  // nested value
  std::string str() const;     // single line: {"a": 1, "b": [2, 3]}
  std::string pretty() const;  // one field per line, nested values inline

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace wavelab::jsonw
