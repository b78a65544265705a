// schema_check.hpp
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

#ifndef SUPCTL_TESTS_SUPPORT_SCHEMA_CHECK_HPP_
#define SUPCTL_TESTS_SUPPORT_SCHEMA_CHECK_HPP_

#include <string>

#include "json.hpp"

namespace testutil {

// Validates an instance against the subset of JSON Schema the repo's
// published schemas use: type (incl. union types), required, properties,
// additionalProperties (boolean or schema), items, enum.
inline bool schema_validate(const nlohmann::json& schema,
                            const nlohmann::json& value, std::string* error) {
  using nlohmann::json;
  auto fail = [&](const std::string& why) {
    if (error) *error = why + " at " + value.dump().substr(0, 120);
    return false;
  };

  if (schema.contains("type")) {
    auto matches = [&](const std::string& t) {
      if (t == "object") return value.is_object();
      if (t == "array") return value.is_array();
      if (t == "string") return value.is_string();
      if (t == "integer") return value.is_number_integer();
      if (t == "number") return value.is_number();
      if (t == "boolean") return value.is_boolean();
      if (t == "null") return value.is_null();
      return false;
    };
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = matches(t.get<std::string>());
    } else {
      for (const auto& option : t) ok = ok || matches(option.get<std::string>());
    }
    if (!ok) return fail("type mismatch (" + t.dump() + ")");
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& option : schema["enum"]) ok = ok || option == value;
    if (!ok) return fail("enum mismatch");
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          return fail("missing required key " + key.get<std::string>());
        }
      }
    }
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!schema_validate(props[it.key()], it.value(), error)) return false;
      } else if (schema.contains("additionalProperties")) {
        const json& ap = schema["additionalProperties"];
        if (ap.is_boolean() && !ap.get<bool>()) {
          return fail("unexpected key " + it.key());
        }
        if (ap.is_object() && !schema_validate(ap, it.value(), error)) {
          return false;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& element : value) {
      if (!schema_validate(schema["items"], element, error)) return false;
    }
  }
  return true;
}

}  // namespace testutil

#endif  // SUPCTL_TESTS_SUPPORT_SCHEMA_CHECK_HPP_
