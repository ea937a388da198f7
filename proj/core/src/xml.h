// Copyright 2026 The ZebraT Simulator Authors
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

// Minimal XML reader sufficient for robot description files: elements,
// attributes, comments, processing instructions, and character data (which
// is discarded). No DTDs, namespaces are kept verbatim in names.

#ifndef ZEBRAT_SRC_XML_H_
#define ZEBRAT_SRC_XML_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zebrat::xml {

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::size_t line = 0;
  std::size_t column = 0;

  std::optional<std::string_view> Attribute(std::string_view key) const;
  const Element* FirstChild(std::string_view child_name) const;
};

// Throws ParseError carrying the 1-based line and column of the problem.
Element Parse(std::string_view text);

}  // namespace zebrat::xml

#endif  // ZEBRAT_SRC_XML_H_
