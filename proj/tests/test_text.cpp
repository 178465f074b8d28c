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

#include <string>
#include <vector>

#include "doctest.h"
#include "lexin/text.hpp"
#include "test_helpers.hpp"

namespace lexin {
namespace {

using test::attr;
using test::fixture_path;
using test::fs;
using test::read_file;
using test::val;

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  FAIL("expected ParseError");
  return {};
}

TEST_CASE("the verb fragment parses into the expected structure") {
  HierarchyDocument doc = parse(read_file(fixture_path("verbs.hier")));
  REQUIRE(doc.hierarchy.classes().size() == 5);
  CHECK(doc.hierarchy.classes()[0].name == "COMPLEMENTATION");
  CHECK(doc.hierarchy.classes()[0].parents.empty());
  CHECK(doc.hierarchy.classes()[0].local.empty());
  CHECK(doc.hierarchy.classes()[1].name == "INCOMPLETE");
  CHECK(doc.hierarchy.classes()[1].parents ==
        std::vector<std::string>{"COMPLEMENTATION"});
  CHECK(doc.hierarchy.classes()[1].local.size() == 4);
  CHECK(doc.hierarchy.classes()[4].name == "3-1");

  REQUIRE(doc.objects.size() == 1);
  CHECK(doc.objects[0].name == "give");
  CHECK(doc.objects[0].features.size() == 10);
  CHECK(doc.find_object("give") == &doc.objects[0]);
  CHECK(doc.find_object("take") == nullptr);
  CHECK_THROWS_AS(doc.object_spec("take"), Error);

  ObjectSpec give = doc.object_spec("give");
  CHECK(give.name() == "give");
  CHECK(give.known_features().size() == 10);
  // The universe spans the hierarchy's attributes even when the object
  // does not mention them.
  CHECK(give.universe().contains(attr("complete")));
  CHECK(give.value_of(attr("complete")) == val("-"));
}

TEST_CASE("rendering is a fixed point of parsing") {
  for (const char* name :
       {"verbs.hier", "redundant.hier", "basic.hier", "nixon.hier"}) {
    std::string text = read_file(fixture_path(name));
    std::string once = render(parse(text));
    std::string twice = render(parse(once));
    CHECK(once == twice);
  }
}

TEST_CASE("rendering sorts features and keeps declaration order of blocks") {
  HierarchyDocument doc;
  doc.hierarchy.add({"B", {}, fs({{"z", "1"}, {"a", "2"}})});
  doc.hierarchy.add({"A", {"B"}, {}});
  doc.objects.push_back({"o", fs({{"q", "?"}, {"p", "3"}})});
  CHECK(render(doc) ==
        "class B {\n"
        "  a = 2\n"
        "  z = 1\n"
        "}\n"
        "class A : B {\n"
        "}\n"
        "object o {\n"
        "  p = 3\n"
        "  q = ?\n"
        "}\n");
}

TEST_CASE("comments, one-liners, and unknown values parse") {
  HierarchyDocument doc = parse(
      "# a hierarchy of one class\n"
      "class A { x = 1 y = 2 } # trailing comment\n"
      "object o { x = 1 z = ? }\n");
  REQUIRE(doc.hierarchy.classes().size() == 1);
  CHECK(doc.hierarchy.classes()[0].local == fs({{"x", "1"}, {"y", "2"}}));
  REQUIRE(doc.objects.size() == 1);
  CHECK(doc.objects[0].features == fs({{"x", "1"}, {"z", "?"}}));
  CHECK(doc.objects[0].features.value_of(attr("z")) == Value::unknown());

  // Punctuation sticks to words only where the grammar says so.
  HierarchyDocument tight = parse("class A:B{x=1}\nclass B{}\nobject o{}\n");
  CHECK(tight.hierarchy.classes()[0].parents ==
        std::vector<std::string>{"B"});
  CHECK(tight.hierarchy.classes()[0].local == fs({{"x", "1"}}));

  // Keywords are ordinary words everywhere but at the start of a block.
  HierarchyDocument kw = parse("class A { kind = class }\n");
  CHECK(kw.hierarchy.classes()[0].local == fs({{"kind", "class"}}));

  CHECK(parse("").hierarchy.classes().empty());
  CHECK(parse("# only a comment\n").objects.empty());
}

TEST_CASE("every block with an error is reported, none stops the parser") {
  std::vector<Diagnostic> diags = diagnostics_of(
      "class A { x = 1 x = 2 }\n"     // duplicate attribute
      "class B : { y = 1 }\n"         // parent list without names
      "object o : A { }\n"            // objects cannot have parents
      "class C { z = ? }\n"           // unknown value outside an object
      "class A { }\n");               // duplicate class name
  REQUIRE(diags.size() == 5);
  CHECK(diags[0].line == 1);
  CHECK(diags[0].column == 17);
  CHECK(diags[0].message == "duplicate attribute 'x' in 'A'");
  CHECK(diags[1].line == 2);
  CHECK(diags[1].message == "expected at least one parent name after ':'");
  CHECK(diags[2].line == 3);
  CHECK(diags[2].message == "objects cannot declare parents");
  CHECK(diags[3].line == 4);
  CHECK(diags[3].message ==
        "the unknown value '?' is only allowed in object blocks");
  CHECK(diags[4].line == 5);
  CHECK(diags[4].message == "duplicate class name 'A'");

  CHECK(diags[0].to_string() == "1:17: duplicate attribute 'x' in 'A'");
}

TEST_CASE("structural mistakes come back with positions") {
  std::vector<Diagnostic> diags = diagnostics_of("garbage\n");
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].line == 1);
  CHECK(diags[0].column == 1);
  CHECK(diags[0].message == "expected 'class' or 'object', found 'garbage'");

  diags = diagnostics_of("class\n");
  CHECK(diags[0].message == "expected a name after 'class'");

  diags = diagnostics_of("class A\nx = 1\n}\n");
  CHECK(diags[0].message == "expected '{' to open the block of 'A'");

  diags = diagnostics_of("class A {\n  x = 1\n");
  CHECK(diags[0].message == "missing '}' closing 'A'");
  CHECK(diags[0].line == 3);

  diags = diagnostics_of("class A { x 1 }\n");
  CHECK(diags[0].message == "expected '=' after attribute 'x'");

  diags = diagnostics_of("class A { x = }\n");
  CHECK(diags[0].message == "expected a value after '=', found '}'");

  diags = diagnostics_of("class A { = 1 }\n");
  CHECK(diags[0].message == "expected an attribute name or '}', found '='");

  diags = diagnostics_of("object o { a = 1 }\nobject o { b = 2 }\n");
  CHECK(diags[0].message == "duplicate object name 'o'");
}

TEST_CASE("recovery resumes at the next block keyword") {
  // Two broken spots, and the block between them still gets parsed; the
  // error text carries position information for the editor.
  try {
    parse("class A\nclass B { y = 2 }\n=\nobject o { z = 3 }\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.diagnostics().size() == 2);
    CHECK(e.diagnostics()[0].message ==
          "expected '{' to open the block of 'A'");
    CHECK(e.diagnostics()[1].message ==
          "expected 'class' or 'object', found '='");
    std::string what = e.what();
    CHECK(what.find("parse failed") == 0);
    CHECK(what.find("2:1: expected '{' to open the block of 'A'") !=
          std::string::npos);
    CHECK(what.find("3:1: expected 'class' or 'object', found '='") !=
          std::string::npos);
  }
}

TEST_CASE("class and object names live in separate namespaces") {
  HierarchyDocument doc = parse("class N { a = 1 }\nobject N { a = 2 }\n");
  CHECK(doc.hierarchy.find("N") != nullptr);
  CHECK(doc.find_object("N") != nullptr);
}

TEST_CASE("fixtures with deliberate faults still parse, then fail validation") {
  HierarchyDocument doc = parse(read_file(fixture_path("cyclic.hier")));
  CHECK(doc.hierarchy.classes().size() == 6);
  ValidationReport report = validate(doc.hierarchy);
  CHECK(report.cycles.size() == 1);
  CHECK(report.unresolved.size() == 1);
  CHECK(report.ambiguities.size() == 1);
  std::string rendered = render(doc);
  CHECK(render(parse(rendered)) == rendered);
}

}  // namespace
}  // namespace lexin
