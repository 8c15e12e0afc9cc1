// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trophom/io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trophom/error.h"

namespace trophom {
namespace {

using nlohmann::json;

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    // Drop the library's own prefix and position.
    std::string reason = e.what();
    const std::size_t colon = reason.find(": ");
    if (colon != std::string::npos) reason = reason.substr(colon + 2);
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) +
                                       ", column " + std::to_string(column) +
                                       ": " + reason);
  }
}

const json& Field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field \"") + key +
                                       "\"");
  }
  return object.at(key);
}

int IntField(const json& object, const char* key) {
  const json& value = Field(object, key);
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kParse,
                std::string("field \"") + key + "\" must be an integer");
  }
  return value.get<int>();
}

Subset ElementSet(const json& list, int n, const char* key) {
  if (!list.is_array()) {
    throw Error(ErrorCode::kParse,
                std::string("entries of \"") + key + "\" must be lists");
  }
  std::vector<int> elements;
  for (const json& x : list) {
    if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > n) {
      throw Error(ErrorCode::kParse, std::string("element ") + x.dump() +
                                         " in \"" + key +
                                         "\" is outside 1.." +
                                         std::to_string(n));
    }
    elements.push_back(x.get<int>());
  }
  return Subset::Of(elements);
}

std::vector<Subset> SetList(const json& object, const char* key, int n) {
  const json& list = Field(object, key);
  if (!list.is_array()) {
    throw Error(ErrorCode::kParse,
                std::string("field \"") + key + "\" must be a list");
  }
  std::vector<Subset> out;
  for (const json& entry : list) out.push_back(ElementSet(entry, n, key));
  return out;
}

std::vector<Rational> RationalList(const json& list, const std::string& key) {
  if (!list.is_array()) {
    throw Error(ErrorCode::kParse, "field \"" + key + "\" must be a list");
  }
  std::vector<Rational> out;
  for (const json& x : list) {
    if (x.is_string()) {
      out.push_back(ParseRational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.emplace_back(x.get<long long>());
    } else {
      throw Error(ErrorCode::kParse, "entries of \"" + key +
                                         "\" must be integers or rational "
                                         "strings, got " +
                                         x.dump());
    }
  }
  return out;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Matroid ParseMatroid(const std::string& text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParse, "matroid input must be a JSON object");
  }
  if (doc.contains("type")) {
    const std::string type = Field(doc, "type").get<std::string>();
    if (type == "fano") return Fano();
    if (type == "uniform") return Uniform(IntField(doc, "r"), IntField(doc, "n"));
    if (type == "boolean") return Boolean(IntField(doc, "n"));
    if (type == "graphic") {
      std::vector<std::pair<int, int>> edges;
      for (const json& e : Field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
          throw Error(ErrorCode::kParse, "edges must be [u, v] pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return Graphic(edges);
    }
    if (type == "long_lines") {
      const int n = IntField(doc, "n");
      CheckGroundSetSize(n);
      return FromLongLines(n, SetList(doc, "lines", n));
    }
    throw Error(ErrorCode::kParse, "unknown matroid type \"" + type + "\"");
  }
  const int n = IntField(doc, "n");
  CheckGroundSetSize(n);
  if (doc.contains("flats")) return Matroid::FromFlats(n, SetList(doc, "flats", n));
  if (doc.contains("bases")) return Matroid::FromBases(n, SetList(doc, "bases", n));
  throw Error(ErrorCode::kParse,
              "matroid input needs \"type\", \"flats\" or \"bases\"");
}

Matroid LoadMatroid(const std::string& path) {
  try {
    return ParseMatroid(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path + ": " + e.message());
  }
}

Weight ParseWeight(const std::string& text) {
  return Weight(RationalList(Field(ParseJson(text), "omega"), "omega"));
}

Halfspace ParseHalfspace(const std::string& text) {
  return Halfspace::FromRationals(
      RationalList(Field(ParseJson(text), "normal"), "normal"));
}

std::vector<Rational> ParseRationalArgument(const std::string& argument,
                                            const std::string& key) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) {
    return RationalList(Field(ParseJson(ReadFile(argument)), key.c_str()),
                        key);
  }
  return ParseRationalList(argument);
}

}  // namespace trophom
