// Copyright 2026 The qpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Deterministic JSON reports. Keys keep insertion order, doubles always
// print as 17-significant-digit lowercase scientific, and the same value
// tree serializes to the same bytes on every run.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qpc/core.hpp"

namespace qpc {

class Json {
 public:
  enum class Kind { Null, Bool, Int, Real, String, Array, Object };

  Json() = default;

  static Json null() { return Json(); }
  static Json boolean(bool v) {
    Json j;
    j.kind_ = Kind::Bool;
    j.bool_ = v;
    return j;
  }
  static Json integer(std::int64_t v) {
    Json j;
    j.kind_ = Kind::Int;
    j.int_ = v;
    return j;
  }
  static Json real(double v) {
    Json j;
    j.kind_ = Kind::Real;
    j.real_ = v;
    return j;
  }
  static Json str(std::string v) {
    Json j;
    j.kind_ = Kind::String;
    j.string_ = std::move(v);
    return j;
  }
  static Json array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
  }
  static Json object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
  }
  // [re, im], the report form of one amplitude.
  static Json complex_pair(Complex z) {
    Json j = array();
    j.push(real(z.real()));
    j.push(real(z.imag()));
    return j;
  }

  Json& push(Json v) {
    items_.push_back(std::move(v));
    return *this;
  }
  Json& set(std::string key, Json v) {
    keys_.push_back(std::move(key));
    items_.push_back(std::move(v));
    return *this;
  }

  static std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    out.push_back('\n');
    return out;
  }

 private:
  Kind kind_ = Kind::Null;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  std::string string_;
  std::vector<std::string> keys_;  // parallel to items_ for objects
  std::vector<Json> items_;

  bool scalar() const {
    return kind_ != Kind::Array && kind_ != Kind::Object;
  }

  static void write_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x",
                          static_cast<unsigned>(static_cast<unsigned char>(c)));
            out += buf;
          } else {
            out.push_back(c);
          }
      }
    }
    out.push_back('"');
  }

  void write(std::string& out, int indent) const {
    switch (kind_) {
      case Kind::Null:
        out += "null";
        return;
      case Kind::Bool:
        out += bool_ ? "true" : "false";
        return;
      case Kind::Int:
        out += std::to_string(int_);
        return;
      case Kind::Real:
        out += format_double(real_);
        return;
      case Kind::String:
        write_escaped(out, string_);
        return;
      case Kind::Array: {
        if (items_.empty()) {
          out += "[]";
          return;
        }
        bool inline_ok = true;
        for (const Json& item : items_)
          if (!item.scalar()) inline_ok = false;
        if (inline_ok) {
          out.push_back('[');
          for (std::size_t k = 0; k < items_.size(); ++k) {
            if (k > 0) out += ", ";
            items_[k].write(out, indent);
          }
          out.push_back(']');
          return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < items_.size(); ++k) {
          out.append(static_cast<std::size_t>(indent) + 2, ' ');
          items_[k].write(out, indent + 2);
          if (k + 1 < items_.size()) out.push_back(',');
          out.push_back('\n');
        }
        out.append(static_cast<std::size_t>(indent), ' ');
        out.push_back(']');
        return;
      }
      case Kind::Object: {
        if (items_.empty()) {
          out += "{}";
          return;
        }
        out += "{\n";
        for (std::size_t k = 0; k < items_.size(); ++k) {
          out.append(static_cast<std::size_t>(indent) + 2, ' ');
          write_escaped(out, keys_[k]);
          out += ": ";
          items_[k].write(out, indent + 2);
          if (k + 1 < items_.size()) out.push_back(',');
          out.push_back('\n');
        }
        out.append(static_cast<std::size_t>(indent), ' ');
        out.push_back('}');
        return;
      }
    }
  }
};

}  // namespace qpc
