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

#include "xml.h"

#include <cctype>

#include "zebrat/errors.h"

namespace zebrat::xml {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Element ParseDocument() {
    SkipProlog();
    if (AtEnd() || Peek() != '<') Fail("expected root element");
    Element root = ParseElement();
    SkipMisc();
    if (!AtEnd()) Fail("unexpected content after root element");
    return root;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool StartsWith(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError("malformed XML: " + message, line_, column_);
  }

  void SkipWhitespace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      Advance();
    }
  }

  void SkipUntil(std::string_view terminator, const char* what) {
    while (!AtEnd() && !StartsWith(terminator)) Advance();
    if (AtEnd()) Fail(std::string("unterminated ") + what);
    Advance(terminator.size());
  }

  void SkipMisc() {
    for (;;) {
      SkipWhitespace();
      if (StartsWith("<!--")) {
        SkipUntil("-->", "comment");
      } else if (StartsWith("<?")) {
        SkipUntil("?>", "processing instruction");
      } else {
        return;
      }
    }
  }

  void SkipProlog() {
    if (StartsWith("\xEF\xBB\xBF")) pos_ += 3;
    SkipMisc();
    if (StartsWith("<!DOCTYPE")) {
      SkipUntil(">", "doctype");
      SkipMisc();
    }
  }

  static bool IsNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.' || c == ':';
  }

  std::string ParseName() {
    const std::size_t start = pos_;
    while (!AtEnd() && IsNameChar(Peek())) Advance();
    if (start == pos_) Fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string DecodeEntities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      const auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) Fail("unterminated entity");
      const auto entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "lt") {
        out += '<';
      } else if (entity == "gt") {
        out += '>';
      } else if (entity == "amp") {
        out += '&';
      } else if (entity == "quot") {
        out += '"';
      } else if (entity == "apos") {
        out += '\'';
      } else {
        Fail("unsupported entity &" + std::string(entity) + ";");
      }
      i = semi;
    }
    return out;
  }

  Element ParseElement() {
    Element element;
    element.line = line_;
    element.column = column_;
    Advance();  // '<'
    element.name = ParseName();
    for (;;) {
      SkipWhitespace();
      if (AtEnd()) Fail("unterminated start tag <" + element.name + ">");
      if (StartsWith("/>")) {
        Advance(2);
        return element;
      }
      if (Peek() == '>') {
        Advance();
        break;
      }
      std::string key = ParseName();
      SkipWhitespace();
      if (AtEnd() || Peek() != '=') Fail("expected '=' after " + key);
      Advance();
      SkipWhitespace();
      if (AtEnd() || (Peek() != '"' && Peek() != '\'')) {
        Fail("expected quoted value for " + key);
      }
      const char quote = Peek();
      Advance();
      const std::size_t start = pos_;
      while (!AtEnd() && Peek() != quote) {
        if (Peek() == '<') Fail("'<' in attribute value");
        Advance();
      }
      if (AtEnd()) Fail("unterminated attribute value");
      std::string value = DecodeEntities(text_.substr(start, pos_ - start));
      Advance();
      for (const auto& [existing, unused] : element.attributes) {
        if (existing == key) Fail("duplicate attribute " + key);
      }
      element.attributes.emplace_back(std::move(key), std::move(value));
    }
    // Content.
    for (;;) {
      if (AtEnd()) Fail("missing end tag </" + element.name + ">");
      if (StartsWith("<!--")) {
        SkipUntil("-->", "comment");
      } else if (StartsWith("<![CDATA[")) {
        SkipUntil("]]>", "CDATA section");
      } else if (StartsWith("<?")) {
        SkipUntil("?>", "processing instruction");
      } else if (StartsWith("</")) {
        Advance(2);
        const std::string closing = ParseName();
        if (closing != element.name) {
          Fail("mismatched end tag </" + closing + ">, expected </" +
               element.name + ">");
        }
        SkipWhitespace();
        if (AtEnd() || Peek() != '>') Fail("expected '>'");
        Advance();
        return element;
      } else if (Peek() == '<') {
        element.children.push_back(ParseElement());
      } else {
        Advance();
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::optional<std::string_view> Element::Attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return std::string_view(v);
  }
  return std::nullopt;
}

const Element* Element::FirstChild(std::string_view child_name) const {
  for (const auto& child : children) {
    if (child.name == child_name) return &child;
  }
  return nullptr;
}

Element Parse(std::string_view text) { return Reader(text).ParseDocument(); }

}  // namespace zebrat::xml
