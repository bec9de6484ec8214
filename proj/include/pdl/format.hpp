#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdl {

// %.{sig}g formatting; sig = 17 round-trips any double.
std::string format_sig(double x, int sig);

// Minimal deterministic JSON emitter (flat objects/arrays of the shapes this
// project outputs). Doubles are written with 17 significant digits.
class JsonWriter {
public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  const std::string& str() const { return out_; }

private:
  void separate();
  std::string out_;
  // true while the current container already holds an element
  std::vector<bool> has_element_;
  bool pending_key_ = false;
};

}  // namespace pdl
