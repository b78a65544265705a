// internal.hpp
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

#ifndef SUPCTL_SRC_INTERNAL_HPP_
#define SUPCTL_SRC_INTERNAL_HPP_

#include <string>
#include <unordered_set>

namespace supctl::detail {

// Deterministic unique-name allocator for constructed state spaces. Product
// state names can collide when inputs already carry composite names; the
// mint disambiguates with a stable numeric suffix.
class NameMint {
 public:
  std::string mint(const std::string& base) {
    std::string name = base;
    int k = 2;
    while (!used_.insert(name).second) {
      name = base + "~" + std::to_string(k++);
    }
    return name;
  }

 private:
  std::unordered_set<std::string> used_;
};

}  // namespace supctl::detail

#endif  // SUPCTL_SRC_INTERNAL_HPP_
