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

#include "lexin/text.hpp"

#include <cctype>
#include <set>
#include <utility>

namespace lexin {

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "parse failed";
  for (const Diagnostic& d : diagnostics) {
    out += "\n  ";
    out += d.to_string();
  }
  return out;
}

struct Token {
  enum Kind { Word, LBrace, RBrace, Colon, Equals, End };
  Kind kind = End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  if (t.kind == Token::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++column;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    switch (c) {
      case '{':
        t.kind = Token::LBrace;
        break;
      case '}':
        t.kind = Token::RBrace;
        break;
      case ':':
        t.kind = Token::Colon;
        break;
      case '=':
        t.kind = Token::Equals;
        break;
      default:
        t.kind = Token::Word;
        break;
    }
    if (t.kind == Token::Word) {
      std::size_t start = i;
      while (i < text.size()) {
        char d = text[i];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '{' ||
            d == '}' || d == ':' || d == '=' || d == '#') {
          break;
        }
        ++i;
        ++column;
      }
      t.text = std::string(text.substr(start, i - start));
    } else {
      t.text = std::string(1, c);
      ++i;
      ++column;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.column = column;
  out.push_back(std::move(end));
  return out;
}

// Recursive descent with per-block recovery: a structural error skips to
// the next 'class' or 'object' keyword so one pass reports every problem.
class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  HierarchyDocument run() {
    while (cur().kind != Token::End) {
      if (cur().kind == Token::Word && cur().text == "class") {
        next();
        parse_block(/*is_class=*/true);
      } else if (cur().kind == Token::Word && cur().text == "object") {
        next();
        parse_block(/*is_class=*/false);
      } else {
        report(cur(), "expected 'class' or 'object', found " + describe(cur()));
        next();
        recover();
      }
    }
    if (!diagnostics_.empty()) throw ParseError(std::move(diagnostics_));
    HierarchyDocument doc;
    for (ClassDecl& decl : classes_) doc.hierarchy.add(std::move(decl));
    doc.objects = std::move(objects_);
    return doc;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  void next() {
    if (cur().kind != Token::End) ++pos_;
  }
  void report(const Token& at, std::string message) {
    diagnostics_.push_back({at.line, at.column, std::move(message)});
  }
  void recover() {
    while (cur().kind != Token::End) {
      if (cur().kind == Token::Word &&
          (cur().text == "class" || cur().text == "object")) {
        return;
      }
      next();
    }
  }

  void parse_block(bool is_class) {
    const char* what = is_class ? "class" : "object";
    if (cur().kind != Token::Word) {
      report(cur(), std::string("expected a name after '") + what + "'");
      recover();
      return;
    }
    Token name_token = cur();
    std::string name = cur().text;
    next();

    std::vector<std::string> parents;
    if (cur().kind == Token::Colon) {
      if (!is_class) {
        report(cur(), "objects cannot declare parents");
        next();
        while (cur().kind == Token::Word) next();
      } else {
        next();
        while (cur().kind == Token::Word) {
          parents.push_back(cur().text);
          next();
        }
        if (parents.empty()) {
          report(cur(), "expected at least one parent name after ':'");
        }
      }
    }

    if (cur().kind != Token::LBrace) {
      report(cur(), "expected '{' to open the block of '" + name + "'");
      recover();
      return;
    }
    next();

    FeatureSet features;
    for (;;) {
      if (cur().kind == Token::RBrace) {
        next();
        break;
      }
      if (cur().kind == Token::End) {
        report(cur(), "missing '}' closing '" + name + "'");
        break;
      }
      if (cur().kind != Token::Word) {
        report(cur(), "expected an attribute name or '}', found " + describe(cur()));
        next();
        continue;
      }
      Token attr_token = cur();
      std::string attr = cur().text;
      next();
      if (cur().kind != Token::Equals) {
        report(cur(), "expected '=' after attribute '" + attr + "'");
        continue;
      }
      next();
      if (cur().kind != Token::Word) {
        report(cur(), "expected a value after '=', found " + describe(cur()));
        continue;
      }
      Token value_token = cur();
      std::string value = cur().text;
      next();
      if (is_class && value == kUnknownToken) {
        report(value_token, "the unknown value '?' is only allowed in object blocks");
        continue;
      }
      Attribute a(attr);
      if (features.contains_attribute(a)) {
        report(attr_token, "duplicate attribute '" + attr + "' in '" + name + "'");
        continue;
      }
      features.assign(std::move(a), value == kUnknownToken
                                        ? Value::unknown()
                                        : Value::known(std::move(value)));
    }

    if (is_class) {
      if (class_names_.contains(name)) {
        report(name_token, "duplicate class name '" + name + "'");
      } else {
        class_names_.insert(name);
        classes_.push_back({std::move(name), std::move(parents), std::move(features)});
      }
    } else {
      if (object_names_.contains(name)) {
        report(name_token, "duplicate object name '" + name + "'");
      } else {
        object_names_.insert(name);
        objects_.push_back({std::move(name), std::move(features)});
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;
  std::vector<ClassDecl> classes_;
  std::vector<ObjectBlock> objects_;
  std::set<std::string> class_names_;
  std::set<std::string> object_names_;
};

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const ObjectBlock* HierarchyDocument::find_object(std::string_view name) const {
  for (const ObjectBlock& o : objects) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

ObjectSpec HierarchyDocument::object_spec(std::string_view name) const {
  const ObjectBlock* o = find_object(name);
  if (!o) throw Error("no object named '" + std::string(name) + "'");
  std::set<Attribute> universe = hierarchy.attributes();
  for (const auto& [attribute, value] : o->features) universe.insert(attribute);
  return complete(o->name, o->features, std::move(universe));
}

HierarchyDocument parse(std::string_view text) { return Parser(text).run(); }

std::string render(const HierarchyDocument& doc) {
  std::string out;
  for (const ClassDecl& c : doc.hierarchy.classes()) {
    out += "class " + c.name;
    if (!c.parents.empty()) {
      out += " :";
      for (const std::string& p : c.parents) out += " " + p;
    }
    out += " {\n";
    for (const auto& [attribute, value] : c.local) {
      out += "  " + attribute.str() + " = " + value.str() + "\n";
    }
    out += "}\n";
  }
  for (const ObjectBlock& o : doc.objects) {
    out += "object " + o.name + " {\n";
    for (const auto& [attribute, value] : o.features) {
      out += "  " + attribute.str() + " = " + value.str() + "\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace lexin
